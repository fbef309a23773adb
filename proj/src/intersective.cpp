#include "isect/intersective.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>

#include "isect/ntutil.hpp"

using nlohmann::json;

namespace isect {

namespace {

std::vector<std::string> canonical_vars(int m) {
    if (m == 1) return {"n"};
    std::vector<std::string> v;
    for (int i = 1; i <= m; ++i) v.push_back("n" + std::to_string(i));
    return v;
}

std::vector<std::string> render_family(const std::vector<IntPoly>& family) {
    std::vector<std::string> out;
    auto vars = canonical_vars(family.at(0).num_vars());
    for (const IntPoly& p : family) out.push_back(render_poly(p, vars));
    return out;
}

void require_integral(const std::vector<IntPoly>& family) {
    if (family.empty()) throw std::invalid_argument("empty polynomial family");
    const int m = family[0].num_vars();
    for (const IntPoly& p : family) {
        if (p.num_vars() != m) throw std::invalid_argument("family arity mismatch");
        if (!is_integral(p)) throw std::domain_error("family member is not integer-valued");
    }
}

enum class SearchOutcome { Found, None, Budget };

// Exhaustive search for n in [0, M)^m with every scaled polynomial
// divisible by M. Machine-word fast path below 2^31, exact fallback above.
struct ResidueSearch {
    SearchOutcome outcome;
    ZVec witness;
};

ResidueSearch residue_search_fast(const std::vector<IntPoly>& scaled, uint64_t M,
                                  long long& budget) {
    const int m = scaled[0].num_vars();
    struct Term {
        uint64_t c;
        Monomial e;
    };
    std::vector<std::vector<Term>> polys;
    std::vector<unsigned> maxdeg(m, 0);
    for (const IntPoly& p : scaled) {
        std::vector<Term> ts;
        for (const auto& [mono, c] : p.terms()) {
            Int ci = mod_pos(Int(c.get_num()), Int(static_cast<unsigned long>(M)));
            uint64_t cv = ci.get_ui();
            for (int j = 0; j < m; ++j) maxdeg[j] = std::max(maxdeg[j], mono[j]);
            if (cv) ts.push_back({cv, mono});
        }
        polys.push_back(std::move(ts));
    }
    std::vector<uint64_t> n(m, 0);
    std::vector<std::vector<uint64_t>> pw(m);
    auto recompute = [&](int j) {
        pw[j].assign(maxdeg[j] + 1, 1);
        for (unsigned e = 1; e <= maxdeg[j]; ++e) pw[j][e] = pw[j][e - 1] * n[j] % M;
    };
    for (int j = 0; j < m; ++j) recompute(j);
    for (;;) {
        if (budget-- <= 0) return {SearchOutcome::Budget, {}};
        bool all = true;
        for (const auto& ts : polys) {
            uint64_t acc = 0;
            for (const Term& t : ts) {
                uint64_t v = t.c;
                for (int j = 0; j < m; ++j)
                    if (t.e[j]) v = v * pw[j][t.e[j]] % M;
                acc = (acc + v) % M;
            }
            if (acc != 0) { all = false; break; }
        }
        if (all) {
            ZVec w(m);
            for (int j = 0; j < m; ++j) w[j] = Int(static_cast<unsigned long>(n[j]));
            return {SearchOutcome::Found, w};
        }
        int j = 0;
        while (j < m) {
            if (++n[j] < M) { recompute(j); break; }
            n[j] = 0;
            recompute(j);
            ++j;
        }
        if (j == m) return {SearchOutcome::None, {}};
    }
}

ResidueSearch residue_search_exact(const std::vector<IntPoly>& scaled, const Int& M,
                                   long long& budget) {
    const int m = scaled[0].num_vars();
    ZVec n(m, Int(0));
    for (;;) {
        if (budget-- <= 0) return {SearchOutcome::Budget, {}};
        bool all = true;
        for (const IntPoly& p : scaled) {
            Rat v = p.eval(n);
            if (mod_pos(Int(v.get_num()), M) != 0) { all = false; break; }
        }
        if (all) return {SearchOutcome::Found, n};
        int j = 0;
        while (j < m) {
            n[j] += 1;
            if (n[j] < M) break;
            n[j] = 0;
            ++j;
        }
        if (j == m) return {SearchOutcome::None, {}};
    }
}

ResidueSearch residue_search(const std::vector<IntPoly>& scaled, const Int& M,
                             long long& budget) {
    if (M < Int(1) << 31)
        return residue_search_fast(scaled, M.get_ui(), budget);
    return residue_search_exact(scaled, M, budget);
}

}  // namespace

ModSolvability solvable_mod(const std::vector<IntPoly>& family, const Int& k,
                            const SearchBudget& budget) {
    if (k < 1) throw std::invalid_argument("solvable_mod: modulus must be positive");
    require_integral(family);
    const int m = family[0].num_vars();
    ModSolvability out;
    out.modulus = k;
    if (k == 1) {
        out.status = SolvStatus::Solvable;
        out.witness.assign(m, Int(0));
        out.exhaustive = true;
        return out;
    }
    Int d = denominator_scale(family);
    std::vector<IntPoly> scaled;
    scaled.reserve(family.size());
    for (const IntPoly& p : family) scaled.push_back(p.scale(Rat(d)));

    long long evals = budget.evaluations;
    // For q = p^e the divisibility p^e | p_i(n) depends only on n mod
    // p^(e+v) with v = v_p(d), since d*p_i has integer coefficients.
    // Witnesses for distinct primes recombine by CRT.
    ZVec combined(m, Int(0));
    Int combined_mod(1);
    for (const auto& [prime, e] : factorize(k)) {
        int v = valuation(d, prime);
        Int M(1);
        for (int i = 0; i < e + v; ++i) M *= prime;
        auto rs = residue_search(scaled, M, evals);
        if (rs.outcome == SearchOutcome::Budget) {
            out.status = SolvStatus::BudgetExceeded;
            return out;
        }
        if (rs.outcome == SearchOutcome::None) {
            out.status = SolvStatus::NoWitness;
            out.exhaustive = true;
            return out;
        }
        // CRT with the accumulated congruence
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), combined_mod.get_mpz_t(), M.get_mpz_t()) == 0)
            throw std::logic_error("solvable_mod: CRT moduli not coprime");
        for (int j = 0; j < m; ++j) {
            Int t = mod_pos((rs.witness[j] - combined[j]) * inv, M);
            combined[j] = combined[j] + combined_mod * t;
        }
        combined_mod *= M;
    }
    // independent exact re-verification of the witness
    for (const IntPoly& p : family) {
        Rat val = p.eval(combined);
        if (val.get_den() != 1 || mod_pos(Int(val.get_num()), k) != 0)
            throw std::logic_error("solvable_mod: witness failed re-verification");
    }
    out.status = SolvStatus::Solvable;
    out.witness = combined;
    out.exhaustive = true;
    return out;
}

JointVerdict jointly_intersective_up_to(const std::vector<IntPoly>& family, const Int& bound,
                                        const SearchBudget& budget) {
    if (bound < 2) throw std::invalid_argument("jointly_intersective_up_to: bound must be >= 2");
    require_integral(family);
    JointVerdict out;
    out.bound = 1;
    json witnesses = json::array();
    for (const Int& q : prime_powers_upto(bound)) {
        ModSolvability ms = solvable_mod(family, q, budget);
        if (ms.status == SolvStatus::BudgetExceeded) {
            out.budget_exceeded = true;
            break;
        }
        if (ms.status == SolvStatus::NoWitness) {
            out.counterexample = q;
            Certificate cert;
            cert.kind = CertKind::CounterexampleModulus;
            cert.claim = "not_jointly_intersective";
            cert.vars = canonical_vars(family[0].num_vars());
            cert.polys = render_family(family);
            cert.payload["modulus"] = q.get_str();
            out.certificate = std::move(cert);
            return out;
        }
        json w;
        w["modulus"] = q.get_str();
        json wit = json::array();
        for (const Int& x : ms.witness) wit.push_back(x.get_str());
        w["witness"] = wit;
        witnesses.push_back(std::move(w));
        out.bound = q;
    }
    out.jointly_intersective_up_to = !out.budget_exceeded;
    if (!out.budget_exceeded) out.bound = bound;
    Certificate cert;
    cert.kind = CertKind::BoundedOnly;
    cert.claim = "jointly_intersective_up_to_bound";
    cert.vars = canonical_vars(family[0].num_vars());
    cert.polys = render_family(family);
    cert.payload["modulus_bound"] = out.bound.get_str();
    cert.payload["witnesses"] = witnesses;
    out.certificate = std::move(cert);
    return out;
}

HenselResult hensel_root(const IntPoly& p, const Int& q, int max_precision) {
    if (p.num_vars() != 1) throw std::invalid_argument("hensel_root: univariate only");
    if (p.is_zero()) throw std::invalid_argument("hensel_root: zero polynomial");
    if (!p.has_integer_coeffs())
        throw std::invalid_argument("hensel_root: integer coefficients required");
    if (!is_prime(q)) throw std::invalid_argument("hensel_root: modulus must be prime");
    if (max_precision < 1) throw std::invalid_argument("hensel_root: precision must be >= 1");

    IntPoly dp = derivative_1var(p);
    auto try_certify = [&](const Int& a, int level) -> std::optional<HenselResult> {
        Rat dv = dp.eval({a});
        Int deriv(dv.get_num());
        if (deriv == 0) return std::nullopt;
        int t = valuation(deriv, q);
        Rat pv = p.eval({a});
        Int value(pv.get_num());
        if (value == 0 || valuation(value, q) >= 2 * t + 1)
            return HenselResult{HenselStatus::CertifiedRoot, a, t, level};
        return std::nullopt;
    };

    // level-1 root scan
    std::vector<Int> roots;
    for (Int a(0); a < q; a += 1) {
        Rat v = p.eval({a});
        if (mod_pos(Int(v.get_num()), q) == 0) roots.push_back(a);
    }
    if (roots.empty())
        return {HenselStatus::NoRootUpTo, Int(0), 0, max_precision};

    Int qe(q);  // q^e for current level e
    for (int e = 1; e <= max_precision; ++e) {
        for (const Int& a : roots) {
            if (auto r = try_certify(a, e)) return *r;
        }
        if (e == max_precision) break;
        // lift to level e+1
        std::vector<Int> next;
        Int qe1 = qe * q;
        for (const Int& a : roots) {
            for (Int s(0); s < q; s += 1) {
                Int cand = a + qe * s;
                Rat v = p.eval({cand});
                if (mod_pos(Int(v.get_num()), qe1) == 0) next.push_back(cand);
            }
        }
        if (next.empty())
            return {HenselStatus::NoRootUpTo, Int(0), 0, max_precision};
        if (next.size() > 200000)
            return {HenselStatus::Inconclusive, Int(0), 0, e};
        roots = std::move(next);
        qe = qe1;
    }
    return {HenselStatus::Inconclusive, Int(0), 0, max_precision};
}

namespace {

// integer roots via the rational root bound: an integer root divides the
// constant term of the integer-scaled polynomial
std::vector<Int> integer_roots_1var(const IntPoly& p) {
    std::vector<Int> roots;
    IntPoly scaled = p.scale(Rat(denominator_scale({p})));
    Rat c0r = scaled.constant_term();
    Int c0(c0r.get_num());
    if (c0 == 0) {
        roots.push_back(0);
        // factor out n and recurse on the cofactor
        IntPoly cof = divexact_1var(scaled, IntPoly::variable(1, 0));
        for (const Int& r : integer_roots_1var(cof))
            if (r != 0) roots.push_back(r);
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    Int a = abs(c0);
    std::vector<Int> divisors{1};
    for (const auto& [prime, e] : factorize(a)) {
        std::vector<Int> next;
        Int pe(1);
        for (int i = 0; i <= e; ++i) {
            for (const Int& d : divisors) next.push_back(d * pe);
            pe *= prime;
        }
        divisors = std::move(next);
    }
    for (const Int& d : divisors) {
        if (p.eval({d}) == 0) roots.push_back(d);
        if (p.eval({-d}) == 0) roots.push_back(-d);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// Detect p == (n^2-a1)(n^2-a2)(n^2-a1a2) with a1, a2 distinct primes
// congruent 1 mod 4 and a1 a quadratic residue mod a2.
std::optional<std::pair<Int, Int>> match_quadres_pattern(const IntPoly& p) {
    if (p.num_vars() != 1 || p.degree() != 6) return std::nullopt;
    auto c = univariate_coeffs(p);
    if (c[6] != 1) return std::nullopt;
    for (int i = 1; i < 6; i += 2)
        if (c[i] != 0) return std::nullopt;
    // constant term is -(a1*a2)^2
    if (c[0] >= 0 || c[0].get_den() != 1) return std::nullopt;
    Int sq = -Int(c[0].get_num());
    Int prod = sqrt(sq);
    if (prod * prod != sq) return std::nullopt;
    for (const auto& [a1, e1] : factorize(prod)) {
        if (e1 != 1) continue;
        Int a2 = prod / a1;
        if (a1 >= a2) continue;
        if (!is_prime(a1) || !is_prime(a2)) continue;
        if (mod_pos(a1, 4) != 1 || mod_pos(a2, 4) != 1) continue;
        IntPoly n2 = IntPoly::variable(1, 0).pow(2);
        IntPoly pattern = (n2 - IntPoly::constant(1, Rat(a1))) *
                          (n2 - IntPoly::constant(1, Rat(a2))) *
                          (n2 - IntPoly::constant(1, Rat(a1 * a2)));
        if (!(p == pattern)) continue;
        if (legendre(a1, a2) != 1) continue;
        return std::make_pair(a1, a2);
    }
    return std::nullopt;
}

json hensel_entry_json(const Int& q, const HenselResult& h) {
    json e;
    e["q"] = q.get_str();
    e["a"] = h.root.get_str();
    e["t"] = h.derivative_valuation;
    return e;
}

std::optional<json> quadres_hensel_entries(const IntPoly& p, const Int& a1, const Int& a2,
                                           int max_precision) {
    json entries = json::array();
    for (const Int& q : {Int(2), a1, a2}) {
        HenselResult h = hensel_root(p, q, max_precision);
        if (h.status != HenselStatus::CertifiedRoot) return std::nullopt;
        entries.push_back(hensel_entry_json(q, h));
    }
    return entries;
}

Int smallest_sqrt_mod(const Int& a, const Int& p) {
    for (Int w(1); w < p; w += 1)
        if (mod_pos(w * w - a, p) == 0) return w;
    throw std::logic_error("no square root found");
}

}  // namespace

DecisionResult intersective_decide_1var(const IntPoly& p, const Int& prime_bound,
                                        int max_precision, const SearchBudget& budget) {
    if (p.num_vars() != 1) throw std::invalid_argument("decide: univariate only");
    if (p.is_zero()) throw std::invalid_argument("decide: zero polynomial");
    if (!is_integral(p)) throw std::domain_error("decide: polynomial is not integer-valued");
    auto vars = canonical_vars(1);
    std::string text = render_poly(p, vars);

    // counterexample scan over prime powers
    JointVerdict scan = jointly_intersective_up_to({p}, prime_bound, budget);
    if (scan.counterexample) {
        DecisionResult r;
        r.verdict = IntersectiveVerdict::NotIntersective;
        r.counterexample_modulus = scan.counterexample;
        r.certificate = scan.certificate;
        r.certificate.claim = "not_intersective";
        return r;
    }

    // (a) integer root: divisible by every modulus at the root
    auto roots = integer_roots_1var(p);
    if (!roots.empty()) {
        Int best = roots[0];
        for (const Int& r : roots)
            if (abs(r) < abs(best) || (abs(r) == abs(best) && r > best)) best = r;
        DecisionResult r;
        r.verdict = IntersectiveVerdict::Intersective;
        Certificate cert;
        cert.kind = CertKind::WitnessTable;
        cert.claim = "intersective";
        cert.vars = vars;
        cert.polys = {text};
        cert.payload["root"] = json::array({best.get_str()});
        r.certificate = std::move(cert);
        return r;
    }

    // (b) the quadratic-residue pattern itself
    if (auto ab = match_quadres_pattern(p)) {
        auto [a1, a2] = *ab;
        if (auto entries = quadres_hensel_entries(p, a1, a2, max_precision)) {
            DecisionResult r;
            r.verdict = IntersectiveVerdict::Intersective;
            Certificate cert;
            cert.kind = CertKind::QuadResidueProof;
            cert.claim = "intersective";
            cert.vars = vars;
            cert.polys = {text};
            cert.payload["a1"] = a1.get_str();
            cert.payload["a2"] = a2.get_str();
            cert.payload["sqrt_witness"] = smallest_sqrt_mod(a1, a2).get_str();
            cert.payload["hensel"] = *entries;
            r.certificate = std::move(cert);
            return r;
        }
    }

    // per-prime Hensel sweep; also feeds the Unknown record
    Int dscale = denominator_scale({p});
    json sweep_entries = json::array();
    json inconclusive = json::array();
    bool sweep_complete = true;
    for (long qv : primes_upto(prime_bound.get_si())) {
        HenselResult h = hensel_root(p.scale(Rat(dscale)), Int(qv), max_precision);
        if (h.status == HenselStatus::CertifiedRoot) {
            json e = hensel_entry_json(Int(qv), h);
            if (dscale != 1) e["scale"] = dscale.get_str();
            sweep_entries.push_back(std::move(e));
        } else {
            sweep_complete = false;
            inconclusive.push_back(std::to_string(qv));
        }
    }

    // (c) a proper divisor matching the pattern certifies all primes beyond
    // the sweep
    IntPoly scaled = p.scale(Rat(denominator_scale({p})));
    Rat c0 = scaled.constant_term();
    if (sweep_complete && c0 != 0 && c0.get_den() == 1) {
        std::vector<Int> primes_of_c0;
        for (const auto& [prime, e] : factorize(abs(Int(c0.get_num()))))
            primes_of_c0.push_back(prime);
        for (size_t i = 0; i < primes_of_c0.size(); ++i) {
            for (size_t j = i + 1; j < primes_of_c0.size(); ++j) {
                Int a1 = primes_of_c0[i], a2 = primes_of_c0[j];
                if (mod_pos(a1, 4) != 1 || mod_pos(a2, 4) != 1) continue;
                if (legendre(a1, a2) != 1) continue;
                IntPoly n2 = IntPoly::variable(1, 0).pow(2);
                IntPoly f = (n2 - IntPoly::constant(1, Rat(a1))) *
                            (n2 - IntPoly::constant(1, Rat(a2))) *
                            (n2 - IntPoly::constant(1, Rat(a1 * a2)));
                auto [quot, rem] = divmod_1var(p, f);
                if (!rem.is_zero()) continue;
                auto entries = quadres_hensel_entries(f, a1, a2, max_precision);
                if (!entries) continue;
                Certificate sub;
                sub.kind = CertKind::QuadResidueProof;
                sub.claim = "intersective";
                sub.vars = vars;
                sub.polys = {render_poly(f, vars)};
                sub.payload["a1"] = a1.get_str();
                sub.payload["a2"] = a2.get_str();
                sub.payload["sqrt_witness"] = smallest_sqrt_mod(a1, a2).get_str();
                sub.payload["hensel"] = *entries;
                DecisionResult r;
                r.verdict = IntersectiveVerdict::Intersective;
                Certificate cert;
                cert.kind = CertKind::HenselProof;
                cert.claim = "intersective";
                cert.vars = vars;
                cert.polys = {text};
                cert.payload["prime_bound"] = prime_bound.get_str();
                cert.payload["entries"] = sweep_entries;
                cert.payload["factor"] = render_poly(f, vars);
                cert.payload["quotient"] = render_poly(quot, vars);
                cert.payload["factor_certificate"] = certificate_to_json(sub);
                r.certificate = std::move(cert);
                return r;
            }
        }
    }

    // honest Unknown with the verified record
    DecisionResult r;
    r.verdict = IntersectiveVerdict::Unknown;
    Certificate cert = scan.certificate;
    cert.claim = "intersective_up_to_bound_only";
    cert.payload["hensel_entries"] = sweep_entries;
    if (!inconclusive.empty()) cert.payload["inconclusive_primes"] = inconclusive;
    r.certificate = std::move(cert);
    return r;
}

GcdReduction reduce_joint_to_gcd(const std::vector<IntPoly>& family) {
    BezoutResult bz = gcd_bezout_1var(family);
    GcdReduction out;
    out.gcd = bz.gcd;
    out.cofactors = bz.cofactors;
    out.scale = bz.scale;
    auto vars = canonical_vars(1);
    json cof = json::array(), quo = json::array();
    for (size_t i = 0; i < family.size(); ++i) {
        cof.push_back(render_poly(bz.cofactors[i], vars));
        IntPoly q = family[i].is_zero() ? IntPoly(1) : divexact_1var(family[i], bz.gcd);
        out.quotients.push_back(q);
        quo.push_back(render_poly(q, vars));
    }
    Certificate cert;
    cert.kind = CertKind::BezoutReduction;
    cert.claim = "gcd_reduction";
    cert.vars = vars;
    cert.polys = render_family(family);
    cert.payload["gcd"] = render_poly(bz.gcd, vars);
    cert.payload["cofactors"] = cof;
    cert.payload["quotients"] = quo;
    cert.payload["scale"] = bz.scale.get_str();
    out.certificate = std::move(cert);
    return out;
}

std::vector<ZMat> enumerate_subgroups_hnf(int k, const Int& index_bound) {
    if (k < 1) throw std::invalid_argument("subgroup enumeration: dimension must be >= 1");
    std::vector<ZMat> out;
    std::vector<Int> diag(k, Int(1));
    // choose diagonals with product <= bound, then below-diagonal residues
    std::function<void(int, Int)> rec_diag = [&](int row, Int prod) {
        if (row == k) {
            // enumerate below-diagonal entries row by row
            ZMat h(k, ZVec(k, Int(0)));
            for (int i = 0; i < k; ++i) h[i][i] = diag[i];
            std::function<void(int, int)> rec_entry = [&](int i, int j) {
                if (i == k) {
                    out.push_back(h);
                    return;
                }
                int ni = j + 1 < i ? i : i + 1;
                int nj = j + 1 < i ? j + 1 : 0;
                for (Int v(0); v < diag[i]; v += 1) {
                    h[i][j] = v;
                    rec_entry(ni, nj);
                }
                h[i][j] = 0;
            };
            if (k == 1)
                out.push_back(h);
            else
                rec_entry(1, 0);
            return;
        }
        for (Int d(1); prod * d <= index_bound; d += 1) {
            diag[row] = d;
            rec_diag(row + 1, prod * d);
        }
        diag[row] = 1;
    };
    rec_diag(0, Int(1));
    // deterministic order: ascending index, then entries
    std::sort(out.begin(), out.end(), [](const ZMat& a, const ZMat& b) {
        Int ia = hnf_abs_det(a), ib = hnf_abs_det(b);
        if (ia != ib) return ia < ib;
        return a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

MultidimReport multidim_bounded_check(const std::vector<RationalVectorPoly>& maps,
                                      const Int& index_bound, const SearchBudget& budget) {
    if (maps.empty()) throw std::invalid_argument("multidim: empty map family");
    const int k = maps[0].dimension();
    const int m = maps[0].num_vars();
    std::vector<IntPoly> all_components;
    for (const auto& mp : maps) {
        if (mp.dimension() != k || mp.num_vars() != m)
            throw std::invalid_argument("multidim: map shape mismatch");
        for (const IntPoly& c : mp.components) all_components.push_back(c);
    }
    require_integral(all_components);
    Int d = denominator_scale(all_components);

    MultidimReport rep;
    long long evals = budget.evaluations;
    for (const ZMat& h : enumerate_subgroups_hnf(k, index_bound)) {
        SubgroupVerdict sv;
        sv.hnf = h;
        sv.index = hnf_abs_det(h);
        // membership of a value vector depends on it mod index, and values
        // depend on n mod d*index, so the box [0, d*index)^m is exhaustive
        Int period = d * sv.index;
        ZVec n(m, Int(0));
        bool done = false, found = false;
        while (!done) {
            if (evals-- <= 0) {
                rep.budget_exceeded = true;
                rep.all_solvable = false;
                rep.subgroups.push_back(std::move(sv));
                return rep;
            }
            bool all_in = true;
            for (const auto& mp : maps) {
                ZVec v = mp.eval_int(n);
                if (!solve_hnf(h, v)) { all_in = false; break; }
            }
            if (all_in) {
                sv.solvable = true;
                sv.witness = n;
                found = true;
                break;
            }
            int j = 0;
            while (j < m) {
                n[j] += 1;
                if (n[j] < period) break;
                n[j] = 0;
                ++j;
            }
            if (j == m) done = true;
        }
        if (!found) {
            sv.solvable = false;
            if (!rep.first_failure) rep.first_failure = rep.subgroups.size();
            rep.all_solvable = false;
        }
        rep.subgroups.push_back(std::move(sv));
    }
    return rep;
}

}  // namespace isect
