#include "isect/refine.hpp"

#include <stdexcept>

namespace isect {

std::vector<IntPoly> restrict_family(const std::vector<IntPoly>& family,
                                     const AffineLattice& sub, const AffineLattice& ambient) {
    if (!ambient.contains_lattice(sub))
        throw std::invalid_argument("restrict_family: not a sublattice of the domain");
    std::vector<IntPoly> out;
    out.reserve(family.size());
    for (const IntPoly& p : family) {
        IntPoly q = affine_substitute(p, sub.basis(), sub.offset());
        if (!is_integral(q))
            throw std::domain_error("restrict_family: restriction is not integer-valued");
        out.push_back(std::move(q));
    }
    return out;
}

DivisibilityRefinement divisibility_sublattice(const std::vector<IntPoly>& family,
                                               const Int& k, const AffineLattice& domain,
                                               const Int& recheck_bound,
                                               const SearchBudget& budget) {
    if (k < 1) throw std::invalid_argument("divisibility_sublattice: k must be positive");
    const int m = domain.dim();
    // work in the parametrization coordinates of the domain
    std::vector<IntPoly> on_lattice = restrict_family(family, domain, domain);
    Int d = denominator_scale(on_lattice);

    ModSolvability ms = solvable_mod(on_lattice, k, budget);
    if (ms.status == SolvStatus::BudgetExceeded)
        throw std::runtime_error("divisibility_sublattice: search budget exceeded");
    if (ms.status != SolvStatus::Solvable)
        throw std::domain_error(
            "divisibility_sublattice: family is not solvable mod k, "
            "contradicting the joint-intersectivity precondition");

    // L' = kd*(param grid) + witness, mapped back to ambient coordinates
    Int kd = k * d;
    ZMat scaled(m, ZVec(m, Int(0)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) scaled[i][j] = domain.basis()[i][j] * kd;
    ZVec ambient_offset = domain.point(ms.witness);
    AffineLattice refined(scaled, ambient_offset);

    DivisibilityRefinement out{refined, d, ms.witness, true,
                               JointVerdict{}};
    // symbolic certificate: every p_i(kd n + l) / k is integer-valued
    ZMat kd_mat(m, ZVec(m, Int(0)));
    for (int i = 0; i < m; ++i) kd_mat[i][i] = kd;
    for (const IntPoly& p : on_lattice) {
        IntPoly shifted = affine_substitute(p, kd_mat, ms.witness);
        IntPoly quotient = shifted.scale(Rat(1) / Rat(k));
        if (!is_integral(quotient)) {
            out.symbolically_verified = false;
            throw std::logic_error(
                "divisibility_sublattice: symbolic divisibility check failed");
        }
    }
    std::vector<IntPoly> on_refined = restrict_family(family, refined, domain);
    out.intersectivity_on_refined =
        jointly_intersective_up_to(on_refined, recheck_bound, budget);
    return out;
}

CosetRefinement coset_refine(const std::vector<IntPoly>& family, const AffineLattice& domain,
                             const AffineLattice& sub, const Int& bound,
                             const SearchBudget& budget) {
    if (!domain.contains_lattice(sub))
        throw std::invalid_argument("coset_refine: sub is not a sublattice of the domain");
    const int m = domain.dim();
    // coordinates of sub's linear part in the domain basis
    ZMat rel(m, ZVec(m));
    for (int j = 0; j < m; ++j) {
        ZVec col(m);
        for (int i = 0; i < m; ++i) col[i] = sub.basis()[i][j];
        auto y = solve_hnf(domain.basis(), col);
        if (!y) throw std::logic_error("coset_refine: containment lost");
        for (int i = 0; i < m; ++i) rel[i][j] = (*y)[i];
    }
    ZMat rel_hnf = hnf_column_basis(rel);

    CosetRefinement out;
    out.verified_bound = bound;
    // the canonical coset residues are exactly the box prod [0, pivot_i);
    // offsets are tried in lexicographic order so the least one wins
    std::vector<Int> pivots(m);
    for (int i = 0; i < m; ++i) pivots[i] = rel_hnf[i][i];
    ZVec r(m, Int(0));
    for (;;) {
        ZVec l = domain.point(r);
        AffineLattice coset(sub.basis(), l);
        std::vector<IntPoly> restricted = restrict_family(family, coset, domain);
        JointVerdict v = jointly_intersective_up_to(restricted, bound, budget);
        if (v.jointly_intersective_up_to) {
            out.coset = coset;
            out.offset = l;
            return out;
        }
        out.failures.emplace_back(l, v.counterexample.value_or(Int(0)));
        int j = m - 1;
        while (j >= 0) {
            r[j] += 1;
            if (r[j] < pivots[j]) break;
            r[j] = 0;
            --j;
        }
        if (j < 0) break;
    }
    return out;
}

}  // namespace isect
