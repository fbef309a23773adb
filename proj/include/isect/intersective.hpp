#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isect/certificate.hpp"
#include "isect/poly.hpp"

namespace isect {

enum class SolvStatus { Solvable, NoWitness, BudgetExceeded };

/// Outcome of a divisibility search mod k. When a witness is present it
/// has been re-verified by exact evaluation; `exhaustive` records that the
/// residue search covered a full period (or a CRT composition of them).
struct ModSolvability {
    Int modulus;
    SolvStatus status = SolvStatus::NoWitness;
    ZVec witness;  // valid when status == Solvable
    bool exhaustive = false;
};

struct SearchBudget {
    long long evaluations = 100000000;
};

/// Does some n in Z^m make every family member divisible by k?  k is
/// factored into prime powers, each solved by exhaustive residue search
/// (period d*p^e, d the family denominator scale), and witnesses are
/// recombined by CRT.
ModSolvability solvable_mod(const std::vector<IntPoly>& family, const Int& k,
                            const SearchBudget& budget = {});

struct JointVerdict {
    bool jointly_intersective_up_to = false;  // true: all prime powers <= bound pass
    Int bound;              // what was fully verified
    std::optional<Int> counterexample;  // least failing prime power
    Certificate certificate;
    bool budget_exceeded = false;
};

/// Check solvable_mod for every prime power <= bound (composite moduli are
/// redundant by CRT).  On failure the certificate is a re-checkable
/// CounterexampleModulus; on success a BoundedOnly witness table.
JointVerdict jointly_intersective_up_to(const std::vector<IntPoly>& family, const Int& bound,
                                        const SearchBudget& budget = {});

enum class HenselStatus { CertifiedRoot, NoRootUpTo, Inconclusive };

/// CertifiedRoot(a, t): p(a) = 0 mod q^(2t+1) and v_q(p'(a)) <= t, which
/// certifies a q-adic integer root and hence solvability mod q^e for all e.
struct HenselResult {
    HenselStatus status;
    Int root;       // representative at the precision it was found
    int derivative_valuation = 0;
    int precision_reached = 0;
};

HenselResult hensel_root(const IntPoly& p, const Int& q, int max_precision);

enum class IntersectiveVerdict { Intersective, NotIntersective, Unknown };

struct DecisionResult {
    IntersectiveVerdict verdict;
    std::optional<Int> counterexample_modulus;
    Certificate certificate;
};

/// Decide intersectivity of a one-variable integral polynomial.  Positive
/// verdicts always come with a complete certificate: an integer root, the
/// (n^2-a1)(n^2-a2)(n^2-a1a2) quadratic-residue pattern (possibly as a
/// divisor), or nothing -- Unknown with a BoundedOnly record of what was
/// verified up to the prime bound.
DecisionResult intersective_decide_1var(const IntPoly& p, const Int& prime_bound,
                                        int max_precision, const SearchBudget& budget = {});

struct GcdReduction {
    IntPoly gcd;
    std::vector<IntPoly> cofactors;
    std::vector<IntPoly> quotients;
    Int scale;
    Certificate certificate;  // BezoutReduction
};

/// Joint intersectivity of one-variable polynomials reduces to the gcd:
/// sum h_i p_i = d*g pins "family solvable mod d*k implies g solvable mod
/// k", and each p_i = g*q_i gives the converse.
GcdReduction reduce_joint_to_gcd(const std::vector<IntPoly>& family);

struct SubgroupVerdict {
    ZMat hnf;         // column HNF basis of the subgroup of Z^k
    Int index;
    bool solvable = false;
    ZVec witness;
};

struct MultidimReport {
    bool all_solvable = true;
    std::vector<SubgroupVerdict> subgroups;  // ascending index, HNF order
    std::optional<size_t> first_failure;
    bool budget_exceeded = false;
};

/// For every finite-index subgroup of Z^k with index <= index_bound
/// (enumerated by Hermite normal forms), search for n putting every map
/// value inside the subgroup.
MultidimReport multidim_bounded_check(const std::vector<RationalVectorPoly>& maps,
                                      const Int& index_bound, const SearchBudget& budget = {});

/// All column-HNF bases of subgroups of Z^k with index <= bound.
std::vector<ZMat> enumerate_subgroups_hnf(int k, const Int& index_bound);

}  // namespace isect
