#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "isect/refine.hpp"

using namespace isect;

namespace {

IntPoly P(const std::string& s) { return parse_poly(s, {"n"}); }

std::mt19937 rng(424243);

ZMat random_unimodular(int m) {
    // product of elementary shears and swaps
    ZMat u = identity(m);
    std::uniform_int_distribution<int> pick(0, m - 1), shear(-3, 3);
    for (int step = 0; step < 8; ++step) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        Int c(shear(rng));
        for (int t = 0; t < m; ++t) u[t][i] += c * u[t][j];
    }
    return u;
}

}  // namespace

TEST_CASE("membership in 2Z+1") {
    AffineLattice odd = AffineLattice::scaled(1, 2, {Int(1)});
    CHECK(odd.contains({Int(7)}));
    CHECK_FALSE(odd.contains({Int(4)}));
    AffineLattice full(3);
    CHECK(full.contains({Int(5), Int(-2), Int(0)}));
}

TEST_CASE("HNF canonicalization: same lattice, same value") {
    for (int rep = 0; rep < 30; ++rep) {
        int m = 1 + static_cast<int>(rng() % 3);
        ZMat base(m, ZVec(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                base[i][j] = Int(static_cast<long>(rng() % 9) - 4);
        ZMat h = hnf_column_basis(base);
        if (h.empty() || static_cast<int>(h[0].size()) != m) { --rep; continue; }
        ZVec off(m);
        for (int i = 0; i < m; ++i) off[i] = Int(static_cast<long>(rng() % 21) - 10);
        AffineLattice a(base, off);
        // same column span under a unimodular change of generators
        AffineLattice b(mat_mul(base, random_unimodular(m)), off);
        CHECK(a == b);
        // offset shifted by a lattice vector is the same coset
        ZVec off2 = off;
        ZVec shift = mat_vec(base, ZVec(m, Int(3)));
        for (int i = 0; i < m; ++i) off2[i] += shift[i];
        AffineLattice c(base, off2);
        CHECK(a == c);
    }
}

TEST_CASE("index multiplicativity under scalar refinement") {
    for (int rep = 0; rep < 10; ++rep) {
        int m = 1 + static_cast<int>(rng() % 2);
        ZMat base(m, ZVec(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                base[i][j] = Int(static_cast<long>(rng() % 7) - 3);
        ZMat h = hnf_column_basis(base);
        if (h.empty() || static_cast<int>(h[0].size()) != m) { --rep; continue; }
        AffineLattice L(base, ZVec(m, Int(0)));
        Int kd(6);
        ZMat scaled = base;
        for (auto& row : scaled)
            for (auto& v : row) v *= kd;
        AffineLattice Ls(scaled, ZVec(m, Int(0)));
        Int expect = L.index();
        for (int i = 0; i < m; ++i) expect *= kd;
        CHECK(Ls.index() == expect);
    }
}

TEST_CASE("lattice JSON round trip") {
    AffineLattice L({{Int(2), Int(0)}, {Int(1), Int(3)}}, {Int(5), Int(-1)});
    AffineLattice back = AffineLattice::from_json(L.to_json());
    CHECK(L == back);
}

TEST_CASE("restrict_family substitutes the parametrization") {
    AffineLattice odd = AffineLattice::scaled(1, 2, {Int(1)});
    auto r = restrict_family({P("2*n+1")}, odd, AffineLattice(1));
    CHECK(r[0] == P("4*n+3"));

    auto ident = restrict_family({P("n^2")}, AffineLattice(1), AffineLattice(1));
    CHECK(ident[0] == P("n^2"));

    AffineLattice four = AffineLattice::scaled(1, 4, {Int(0)});
    auto tri = restrict_family({P("n*(n+1)/2")}, four, AffineLattice(1));
    CHECK(tri[0] == P("8*n^2+2*n"));
    CHECK(tri[0].has_integer_coeffs());

    // not a sublattice
    AffineLattice evens = AffineLattice::scaled(1, 2, {Int(0)});
    CHECK_THROWS(restrict_family({P("n")}, odd, evens));
}

TEST_CASE("restrict_family preserves values at random points") {
    AffineLattice sub({{Int(3), Int(0)}, {Int(1), Int(2)}}, {Int(1), Int(0)});
    std::vector<std::string> vars{"n1", "n2"};
    IntPoly p = parse_poly("n1^2 + n1*n2/3 + n2*(n2-1)/2", vars);
    // make it integral on sub by clearing: use an integral one instead
    IntPoly q = parse_poly("n1*(n1-1)/2 + n2", vars);
    auto r = restrict_family({q}, sub, AffineLattice(2));
    (void)p;
    for (int i = 0; i < 100; ++i) {
        ZVec x{Int(static_cast<long>(rng() % 41) - 20),
               Int(static_cast<long>(rng() % 41) - 20)};
        CHECK(r[0].eval(x) == q.eval(sub.point(x)));
    }
}

TEST_CASE("divisibility sublattice: family {n}, k=3") {
    auto ref = divisibility_sublattice({P("n")}, 3, AffineLattice(1), 50);
    CHECK(ref.d == 1);
    CHECK(ref.refined == AffineLattice::scaled(1, 3, {Int(0)}));
    CHECK(ref.symbolically_verified);
    CHECK(ref.intersectivity_on_refined.jointly_intersective_up_to);
}

TEST_CASE("divisibility sublattice: {n^2-1, n-1}, k=4") {
    auto ref = divisibility_sublattice({P("n^2-1"), P("n-1")}, 4, AffineLattice(1), 50);
    CHECK(ref.d == 1);
    CHECK(mod_pos(ref.refined.offset()[0], 4) == 1);
    CHECK(ref.refined.index() == 4);
    // every point of the refined lattice puts both values in 4Z
    for (long t = -5; t <= 5; ++t) {
        Int x = ref.refined.point({Int(t)})[0];
        CHECK(mod_pos(Int(x * x - 1), Int(4)) == 0);
        CHECK(mod_pos(Int(x - 1), Int(4)) == 0);
    }
}

TEST_CASE("divisibility sublattice: triangular numbers, k=2") {
    auto ref = divisibility_sublattice({P("n*(n+1)/2")}, 2, AffineLattice(1), 50);
    CHECK(ref.d == 2);
    CHECK(ref.refined.index() == 4);  // kd = 4
    Int l = ref.refined.offset()[0];
    CHECK((mod_pos(l, 4) == 0 || mod_pos(l, 4) == 3));  // triangular pattern 0,1,1,0
}

TEST_CASE("divisibility sublattice rejects unsolvable input") {
    CHECK_THROWS_AS(divisibility_sublattice({P("2*n+1")}, 2, AffineLattice(1), 50),
                    std::domain_error);
}

TEST_CASE("coset refine picks the root coset") {
    AffineLattice evens = AffineLattice::scaled(1, 2, {Int(0)});
    auto a = coset_refine({P("n")}, AffineLattice(1), evens, 60);
    REQUIRE(a.coset.has_value());
    CHECK(a.offset[0] == 0);

    auto b = coset_refine({P("n-1")}, AffineLattice(1), evens, 60);
    REQUIRE(b.coset.has_value());
    CHECK(b.offset[0] == 1);

    AffineLattice six = AffineLattice::scaled(1, 6, {Int(0)});
    auto c = coset_refine({P("n^2-1"), P("n-1")}, AffineLattice(1), six, 100);
    REQUIRE(c.coset.has_value());
    CHECK(mod_pos(c.offset[0], 6) == 1);
}
