#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "isect/lattice.hpp"
#include "isect/linalg.hpp"

namespace isect {

/// Exponent vector in N^m.
using Monomial = std::vector<unsigned>;

/// Graded lexicographic order: total degree first, then lexicographic
/// with earlier variables weighing more.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Multivariate polynomial with exact rational coefficients, canonical by
/// construction: no zero coefficients stored, terms in graded-lex order.
class IntPoly {
public:
    explicit IntPoly(int num_vars = 1);
    static IntPoly constant(int num_vars, const Rat& c);
    static IntPoly variable(int num_vars, int index);

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;             // total degree; -1 for zero
    int degree_in(int var) const;   // per-variable degree; -1 for zero
    const std::map<Monomial, Rat, GrlexLess>& terms() const { return terms_; }

    Rat coeff(const Monomial& mono) const;
    Rat constant_term() const;
    void set_coeff(const Monomial& mono, const Rat& c);

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly scale(const Rat& c) const;
    IntPoly pow(unsigned e) const;

    bool operator==(const IntPoly& o) const;
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    Rat eval(const ZVec& point) const;

    /// True when every coefficient is an integer.
    bool has_integer_coeffs() const;

private:
    int num_vars_;
    std::map<Monomial, Rat, GrlexLess> terms_;
};

/// Parse error with byte offset into the input.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t pos);
    size_t position;
};

/// Grammar: expr := term (('+'|'-') term)*;
/// term := factor (('*' factor) | ('/' posint))*;
/// factor := base ('^' nat)?; base := var | rational | '(' expr ')';
/// rational := int ('/' posint)?.  No implicit multiplication.
IntPoly parse_poly(const std::string& text, const std::vector<std::string>& vars);

/// Canonical rendering; re-parses to an identical polynomial.
std::string render_poly(const IntPoly& p, const std::vector<std::string>& vars);

/// p - p(0).
IntPoly hat(const IntPoly& p);

/// q(n) = p(A*n + l), exact. Throws on a singular matrix.
IntPoly affine_substitute(const IntPoly& p, const ZMat& matrix, const ZVec& offset);

/// Least positive d such that d*p has integer coefficients for every p.
Int denominator_scale(const std::vector<IntPoly>& family);

/// Integer-valuedness of p on the given lattice, decided on the finite
/// grid {0..d_1} x ... x {0..d_m} of the lattice parametrization.  A
/// polynomial integer-valued on that grid is an integer combination of
/// products of binomial coefficients C(n_j, k_j) with k_j <= d_j, hence
/// integer-valued everywhere (Polya's finite-difference criterion).
bool is_integral(const IntPoly& p, const AffineLattice& domain);
bool is_integral(const IntPoly& p);  // on Z^m

/// Dense univariate coefficient view, ascending degree.
std::vector<Rat> univariate_coeffs(const IntPoly& p);
IntPoly from_univariate_coeffs(const std::vector<Rat>& coeffs);
IntPoly derivative_1var(const IntPoly& p);

/// Quotient and remainder in Q[n], univariate.
std::pair<IntPoly, IntPoly> divmod_1var(const IntPoly& a, const IntPoly& b);
/// Exact division; throws if the remainder is nonzero.
IntPoly divexact_1var(const IntPoly& a, const IntPoly& b);

/// gcd g (monic over Q[n]) together with integer-coefficient cofactors
/// h_i and a positive integer d satisfying sum h_i * p_i = d * g; the
/// identity is re-verified symbolically before returning.
struct BezoutResult {
    IntPoly gcd;
    std::vector<IntPoly> cofactors;
    Int scale;
};
BezoutResult gcd_bezout_1var(const std::vector<IntPoly>& family);

/// Vector of s integer-valued polynomials over a shared variable set.
struct RationalVectorPoly {
    std::vector<IntPoly> components;
    int dimension() const { return static_cast<int>(components.size()); }
    int num_vars() const;
    ZVec eval_int(const ZVec& point) const;  // throws if any value is non-integer
};

}  // namespace isect
