#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "isect/poly.hpp"

using namespace isect;

namespace {

IntPoly P(const std::string& s, std::vector<std::string> vars = {"n"}) {
    return parse_poly(s, vars);
}

// binomial coefficient polynomial C(x_j, k): integer-valued on Z^m
IntPoly binom(int m, int var, int k) {
    IntPoly num = IntPoly::constant(m, 1);
    Rat fact(1);
    for (int i = 0; i < k; ++i) {
        num = num * (IntPoly::variable(m, var) - IntPoly::constant(m, i));
        fact *= (i + 1);
    }
    return num.scale(Rat(1) / fact);
}

std::mt19937 rng(20240917);

IntPoly random_poly(int m, int maxdeg, bool integral) {
    IntPoly p(m);
    std::uniform_int_distribution<int> coef(-9, 9), deg(0, maxdeg), den(1, 4);
    int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        if (integral) {
            IntPoly piece = IntPoly::constant(m, coef(rng));
            for (int j = 0; j < m; ++j) piece = piece * binom(m, j, deg(rng));
            p += piece;
        } else {
            Monomial mono(m);
            for (int j = 0; j < m; ++j) mono[j] = deg(rng);
            Rat c(coef(rng), den(rng));
            c.canonicalize();
            p.set_coeff(mono, p.coeff(mono) + c);
        }
    }
    return p;
}

ZVec random_point(int m, int radius) {
    std::uniform_int_distribution<long> d(-radius, radius);
    ZVec v(m);
    for (int j = 0; j < m; ++j) v[j] = Int(d(rng));
    return v;
}

}  // namespace

TEST_CASE("parse: flagship sextic") {
    IntPoly p = P("(n^2-5)*(n^2-41)*(n^2-205)");
    CHECK(p.degree() == 6);
    CHECK(p.has_integer_coeffs());
    CHECK(p.eval({Int(0)}) == Rat(-42025));
}

TEST_CASE("parse: zero polynomial") {
    IntPoly p = P("0");
    CHECK(p.is_zero());
    CHECK(p.terms().empty());
}

TEST_CASE("parse: triangular numbers have denominator 2") {
    IntPoly p = P("n*(n-1)/2");
    CHECK(p.coeff({2}) == Rat(1, 2));
    CHECK(p.coeff({1}) == Rat(-1, 2));
    CHECK(is_integral(p));
    CHECK(p.eval({Int(7)}) == Rat(21));
}

TEST_CASE("parse: error positions") {
    CHECK_THROWS_AS(P("n +"), ParseError);
    CHECK_THROWS_AS(P("m"), ParseError);           // unknown variable
    CHECK_THROWS_AS(P("n^(2)"), ParseError);       // exponent must be a literal
    CHECK_THROWS_AS(P("2 n"), ParseError);         // no implicit multiplication
    CHECK_THROWS_AS(P("n^-2"), ParseError);
    CHECK_THROWS_AS(P("1/0"), ParseError);
}

TEST_CASE("eval basics") {
    CHECK(P("n^2+1").eval({Int(2)}) == Rat(5));
    CHECK_THROWS(P("n^2").eval({Int(1), Int(2)}));
}

TEST_CASE("hat removes the constant term") {
    CHECK(hat(P("2*n+1")) == P("2*n"));
    CHECK(hat(P("n^2+n+7")) == P("n^2+n"));
    CHECK(hat(P("5")).is_zero());
}

TEST_CASE("hat properties on random polynomials") {
    for (int i = 0; i < 50; ++i) {
        IntPoly p = random_poly(1, 4, false);
        IntPoly h = hat(p);
        CHECK(h.constant_term() == 0);
        CHECK(h + IntPoly::constant(1, p.constant_term()) == p);
    }
}

TEST_CASE("affine substitution") {
    CHECK(affine_substitute(P("n^2"), {{Int(2)}}, {Int(1)}) == P("4*n^2+4*n+1"));
    CHECK(affine_substitute(P("2*n+1"), {{Int(1)}}, {Int(0)}) == P("2*n+1"));
    // (2n)(2n+1)/2 = 2n^2+n, integer coefficients
    IntPoly sub = affine_substitute(P("n*(n+1)/2"), {{Int(2)}}, {Int(0)});
    CHECK(sub == P("2*n^2+n"));
    CHECK(sub.has_integer_coeffs());
    CHECK_THROWS(affine_substitute(P("n", {"n", "m"}), {{Int(1), Int(1)}, {Int(1), Int(1)}},
                                   {Int(0), Int(0)}));
}

TEST_CASE("substitution agrees with evaluation at random points") {
    for (int rep = 0; rep < 10; ++rep) {
        int m = 1 + static_cast<int>(rng() % 2);
        IntPoly p = random_poly(m, 3, false);
        ZMat a(m, ZVec(m));
        ZVec l(m);
        do {
            for (int i = 0; i < m; ++i) {
                l[i] = Int(static_cast<long>(rng() % 7) - 3);
                for (int j = 0; j < m; ++j)
                    a[i][j] = Int(static_cast<long>(rng() % 7) - 3);
            }
        } while (hnf_column_basis(a).empty() ||
                 static_cast<int>(hnf_column_basis(a)[0].size()) != m);
        IntPoly q = affine_substitute(p, a, l);
        for (int i = 0; i < 10; ++i) {
            ZVec n = random_point(m, 20);
            ZVec an = mat_vec(a, n);
            for (int j = 0; j < m; ++j) an[j] += l[j];
            CHECK(q.eval(n) == p.eval(an));
        }
    }
}

TEST_CASE("denominator scale") {
    CHECK(denominator_scale({P("n*(n+1)/2")}) == 2);
    CHECK(denominator_scale({P("n^2"), P("2*n+1")}) == 1);
    CHECK(denominator_scale({P("n/3"), P("n^2/2")}) == 6);
}

TEST_CASE("integrality by the degree-grid criterion") {
    CHECK_FALSE(is_integral(P("n/2")));
    CHECK(is_integral(P("n*(n+1)/2")));
    CHECK(is_integral(P("n/2"), AffineLattice::scaled(1, 2, {Int(0)})));
}

TEST_CASE("grid criterion agrees with direct evaluation on random points") {
    for (int rep = 0; rep < 40; ++rep) {
        bool make_integral = rep % 2 == 0;
        IntPoly p = random_poly(1 + rep % 2, 4, make_integral);
        bool grid = is_integral(p);
        bool direct = true;
        for (int i = 0; i < 25; ++i) {
            Rat v = p.eval(random_point(p.num_vars(), 50));
            if (v.get_den() != 1) { direct = false; break; }
        }
        // sampling can only refute integrality; the grid test is exact
        if (grid) CHECK(direct);
        if (!direct) CHECK_FALSE(grid);
        if (make_integral) CHECK(grid);
    }
}

TEST_CASE("parser round-trip is the identity on canonical forms") {
    std::vector<std::string> vars1{"n"}, vars2{"n", "m"};
    for (int rep = 0; rep < 60; ++rep) {
        bool two = rep % 3 == 0;
        IntPoly p = random_poly(two ? 2 : 1, 4, false);
        const auto& vars = two ? vars2 : vars1;
        IntPoly q = parse_poly(render_poly(p, vars), vars);
        CHECK(p == q);
    }
}

TEST_CASE("gcd/bezout: spec pair") {
    IntPoly p1 = P("n*(n+1)*(2*n+1)");
    IntPoly p2 = P("(n^3+n^2+2)*(2*n+1)");
    BezoutResult bz = gcd_bezout_1var({p1, p2});
    CHECK(bz.gcd == P("n+1/2"));  // monic form of 2n+1
    IntPoly acc = bz.gcd.scale(Rat(-bz.scale));
    acc += bz.cofactors[0] * p1;
    acc += bz.cofactors[1] * p2;
    CHECK(acc.is_zero());
}

TEST_CASE("gcd/bezout: simple and singleton cases") {
    BezoutResult a = gcd_bezout_1var({P("n^2"), P("n")});
    CHECK(a.gcd == P("n"));

    BezoutResult b = gcd_bezout_1var({P("3*n^2+3")});
    CHECK(b.gcd == P("n^2+1"));  // monic
    CHECK(b.cofactors[0] * P("3*n^2+3") == b.gcd.scale(Rat(b.scale)));

    CHECK_THROWS(gcd_bezout_1var({P("0"), P("0")}));
}

TEST_CASE("gcd/bezout: random families verify the identity and divisibility") {
    for (int rep = 0; rep < 40; ++rep) {
        IntPoly g = random_poly(1, 2, false);
        if (g.is_zero()) continue;
        std::vector<IntPoly> fam;
        int r = 2 + static_cast<int>(rng() % 3);
        for (int i = 0; i < r; ++i) fam.push_back(g * random_poly(1, 2, false));
        bool all_zero = true;
        for (const auto& p : fam) all_zero = all_zero && p.is_zero();
        if (all_zero) continue;
        BezoutResult bz = gcd_bezout_1var(fam);
        IntPoly acc = bz.gcd.scale(Rat(-bz.scale));
        for (size_t i = 0; i < fam.size(); ++i) {
            CHECK(bz.cofactors[i].has_integer_coeffs());
            acc += bz.cofactors[i] * fam[i];
            if (!fam[i].is_zero())
                CHECK(divmod_1var(fam[i], bz.gcd).second.is_zero());
        }
        CHECK(acc.is_zero());
        // g divides the gcd of its multiples
        CHECK(divmod_1var(bz.gcd, g).second.is_zero());
    }
}

TEST_CASE("univariate division") {
    auto [q, r] = divmod_1var(P("n^3+1"), P("n+1"));
    CHECK(q == P("n^2-n+1"));
    CHECK(r.is_zero());
    CHECK_THROWS(divexact_1var(P("n^2+1"), P("n+1")));
}
