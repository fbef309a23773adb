#pragma once

#include <optional>
#include <vector>

#include "isect/intersective.hpp"
#include "isect/lattice.hpp"
#include "isect/poly.hpp"

namespace isect {

/// Substitute the parametrization of `sub` into each polynomial; the
/// result lives in the sub-lattice coordinates on Z^m.  `ambient` is the
/// lattice the family is integral on; sub must be contained in it.
std::vector<IntPoly> restrict_family(const std::vector<IntPoly>& family,
                                     const AffineLattice& sub, const AffineLattice& ambient);

struct DivisibilityRefinement {
    AffineLattice refined;       // kd*L + l in ambient coordinates
    Int d;                       // denominator scale of the restricted family
    ZVec witness;                // parameter point with all values = 0 mod k
    bool symbolically_verified;  // each restricted p_i / k passed is_integral
    JointVerdict intersectivity_on_refined;  // bounded re-check
};

/// Lemma-style construction: given a family jointly intersective on L and
/// a modulus k, produce L' = kd*L + l on which every family value is
/// divisible by k, certified symbolically (each p_i(kd n + l)/k is
/// integer-valued), plus a bounded joint-intersectivity re-check on L'.
DivisibilityRefinement divisibility_sublattice(const std::vector<IntPoly>& family,
                                               const Int& k, const AffineLattice& domain,
                                               const Int& recheck_bound,
                                               const SearchBudget& budget = {});

struct CosetRefinement {
    std::optional<AffineLattice> coset;  // sub + l when found
    ZVec offset;                         // the chosen l (ambient), valid with coset
    Int verified_bound;
    // per-coset failure data when nothing passed
    std::vector<std::pair<ZVec, Int>> failures;  // offset -> failing prime power
};

/// Scan the cosets of `sub` inside `domain` (fixed lexicographic order of
/// canonical residues) for one on which the restricted family stays
/// jointly intersective up to the bound.  The underlying existence is
/// pigeonhole over all moduli; only the bounded property is certified.
CosetRefinement coset_refine(const std::vector<IntPoly>& family, const AffineLattice& domain,
                             const AffineLattice& sub, const Int& bound,
                             const SearchBudget& budget = {});

}  // namespace isect
