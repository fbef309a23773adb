#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "isect/refine.hpp"

namespace isect {

/// Exact real number c_0 + sum c_i * alpha_i over declared irrational
/// labels; the labels together with 1 are asserted rationally independent.
struct SymReal {
    Rat rational;
    std::map<std::string, Rat> irrational;  // label -> coefficient, no zeros stored

    SymReal() : rational(0) {}
    explicit SymReal(Rat r) : rational(std::move(r)) {}
    static SymReal irr(const std::string& label, Rat coeff);

    SymReal operator+(const SymReal& o) const;
    SymReal operator-(const SymReal& o) const;
    SymReal operator-() const;
    SymReal scaled(const Rat& c) const;
    bool operator==(const SymReal& o) const;
    bool is_zero() const { return rational == 0 && irrational.empty(); }
};

using SymVec = std::vector<SymReal>;

/// One irrational layer of Eq-form data: contribution coeffs(n) * (alpha /
/// scale).  Scales arise when input coordinates carry rational multiples
/// of a label; alpha/scale stays irrational and independent.
struct IrrationalPart {
    std::string label;
    Int scale;  // >= 1
    RationalVectorPoly coeffs;
};

/// Canonical torus sequence t(n) = [q0(n)/k + sum b_i(n) * alpha_i] mod
/// Z^s with all component polynomials integer-valued on the domain.
struct TorusSequence {
    int dim = 0;  // s
    Int denom{1};  // k
    RationalVectorPoly rational_num;      // q0; all-zero components allowed
    std::vector<IrrationalPart> parts;    // distinct labels
    AffineLattice domain{1};
    std::map<std::string, mpf_class> numeric_values;  // optional, for sampling

    /// all nonzero component polynomials (rational and irrational layers)
    std::vector<IntPoly> component_family() const;
    nlohmann::json to_json() const;
};

/// Gather sum p_i(n)*v_i into the canonical form; every coordinate of the
/// v_i must be a finite Q-combination of 1 and the declared labels.  The
/// identity with the input is re-verified symbolically.
TorusSequence normalize_form(const std::vector<IntPoly>& polys,
                             const std::vector<SymVec>& vectors,
                             const AffineLattice& domain,
                             const std::vector<std::string>& labels,
                             const std::map<std::string, mpf_class>& numeric = {});

/// Closed connected subtorus coset (offset + span V) mod Z^s with V a
/// rational subspace; basis rows are in RREF and the offset is reduced to
/// a canonical representative, so equality is structural.
struct SubtorusCoset {
    int dim = 0;
    QMat basis;               // RREF rows
    std::vector<int> pivots;  // pivot columns of basis
    SymVec offset;

    static SubtorusCoset zero(int s);
    int rank() const { return static_cast<int>(basis.size()); }
    bool operator==(const SubtorusCoset& o) const;
    nlohmann::json to_json() const;
    static SubtorusCoset from_json(const nlohmann::json& j);
};

/// Closure of b(n)*(alpha/scale) over the domain: offset b(0)*alpha plus
/// the rational span of the hat-coefficient vectors (which equals the span
/// of {hat b(n)} since those vectors are rational).
SubtorusCoset component_closure(const RationalVectorPoly& b, const AffineLattice& domain,
                                const std::string& label, const Int& scale = Int(1));

/// Plain sum of cosets: subspaces add, offsets add, result canonical.
SubtorusCoset sum_closures(const std::vector<SubtorusCoset>& parts);

struct LabeledClosure {
    std::string label;
    SubtorusCoset coset;
};
/// Sum with the independence hypothesis enforced: labels must be distinct.
SubtorusCoset sum_closures(const std::vector<LabeledClosure>& parts);

/// Exact membership of a symbolic point: per-label layers must lie in V,
/// and the rational layer in V + Z^s (a lattice test after projecting V
/// out).  When `decomposition` is non-null and the point is a member, it
/// receives {coeffs, integer_shift} with point = offset + coeffs*basis +
/// integer_shift layer-wise.
bool coset_member(const SubtorusCoset& S, const SymVec& point,
                  nlohmann::json* decomposition = nullptr);

/// Lemma-style zero test through the kernel route: the closure of
/// b(n)*alpha contains 0 iff no rational combination of the components is
/// a nonzero constant.  Independent of coset_member by construction.
bool contains_zero(const RationalVectorPoly& b, const AffineLattice& domain);

/// Exact symbolic value of t at an ambient lattice point (before mod Z^s).
SymVec torus_point(const TorusSequence& t, const ZVec& x);

struct ClosureResult {
    AffineLattice refined{1};
    SubtorusCoset closure;
    std::vector<LabeledClosure> components;  // per-label closures on refined
    nlohmann::json zero_certificate;
    JointVerdict intersectivity_check;
};

/// Pipeline of the divisibility refinement and closure theorems: refine
/// the domain so the rational part vanishes mod Z^s, take per-label
/// closures, verify each contains zero, and sum.  Throws std::domain_error
/// with evidence when a zero test fails (the input family could not have
/// been jointly intersective).
ClosureResult closure_with_zero(const TorusSequence& t, const Int& recheck_bound,
                                const SearchBudget& budget = {});

struct SampleReport {
    double max_membership_residual = 0.0;
    int empirical_dimension = 0;
    double covering_statistic = 0.0;
    double min_distance_to_zero = 0.0;
    long samples = 0;
};

/// Floating-point cross-check: evaluate t over the box, measure the worst
/// distance to the predicted coset, the numerical rank of the lifted
/// sample cloud, and how finely the samples cover the coset.
SampleReport sample_verify(const TorusSequence& t, const SubtorusCoset& predicted,
                           long box_radius, double tol = 1e-9);

}  // namespace isect
