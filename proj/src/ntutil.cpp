#include "isect/ntutil.hpp"

#include <algorithm>
#include <stdexcept>

namespace isect {

std::vector<long> primes_upto(long n) {
    std::vector<long> out;
    if (n < 2) return out;
    std::vector<bool> sieve(n + 1, true);
    for (long i = 2; i <= n; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (long j = i * i; j <= n; j += i) sieve[j] = false;
    }
    return out;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    Int d(3);
    while (d * d <= n) {
        if (n % d == 0) return false;
        d += 2;
    }
    return true;
}

std::vector<std::pair<Int, int>> factorize(Int n) {
    if (n < 1) throw std::invalid_argument("factorize: argument must be positive");
    std::vector<std::pair<Int, int>> out;
    Int d(2);
    while (d * d <= n) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            out.emplace_back(d, e);
        }
        d += (d == 2) ? 1 : 2;
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<Int> prime_powers_upto(const Int& bound) {
    std::vector<Int> out;
    if (bound < 2) return out;
    long b = bound.get_si();
    for (long p : primes_upto(b)) {
        Int q(p);
        while (q <= bound) {
            out.push_back(q);
            q *= p;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int valuation(Int v, const Int& q) {
    if (v == 0) throw std::invalid_argument("valuation of zero");
    if (v < 0) v = -v;
    int t = 0;
    while (v % q == 0) { v /= q; ++t; }
    return t;
}

Int powmod(const Int& base, const Int& exp, const Int& mod) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

int legendre(const Int& a, const Int& p) {
    Int r = powmod(mod_pos(a, p), (p - 1) / 2, p);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

}  // namespace isect
