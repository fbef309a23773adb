#pragma once

#include <string>

#include "isect/linalg.hpp"

namespace isect {

/// Finite-index affine lattice A*Z^m + l in Z^m. The basis matrix is kept
/// in column Hermite normal form and the offset is reduced modulo the
/// column span, so equal lattices compare equal structurally.
class AffineLattice {
public:
    /// The full lattice Z^m.
    explicit AffineLattice(int m);
    /// Lattice spanned by the columns of `basis`, shifted by `offset`.
    /// Throws std::invalid_argument if basis is singular.
    AffineLattice(ZMat basis, ZVec offset);

    /// Scalar lattice c*Z^m + l.
    static AffineLattice scaled(int m, const Int& c, ZVec offset);

    int dim() const { return m_; }
    const ZMat& basis() const { return basis_; }
    const ZVec& offset() const { return offset_; }
    Int index() const;  // |det basis|

    bool contains(const ZVec& x) const;
    /// Parametrization point basis*n + offset.
    ZVec point(const ZVec& n) const;

    /// Is every point of `other` a point of *this?
    bool contains_lattice(const AffineLattice& other) const;

    bool operator==(const AffineLattice& o) const;

    std::string to_json() const;
    static AffineLattice from_json(const std::string& text);

private:
    int m_;
    ZMat basis_;   // m x m column HNF
    ZVec offset_;  // reduced mod column span
};

}  // namespace isect
