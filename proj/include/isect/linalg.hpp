#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace isect {

using Int = mpz_class;
using Rat = mpq_class;

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;  // row-major
using ZVec = std::vector<Int>;
using ZMat = std::vector<ZVec>;  // row-major; lattices are spanned by columns

Int lcm(const Int& a, const Int& b);
Int floor_div(const Int& a, const Int& b);  // b > 0
Int mod_pos(const Int& a, const Int& b);    // result in [0, b)

/// Reduced row echelon form. Zero rows are dropped; pivot columns of the
/// surviving rows are appended to `pivots` when non-null.
QMat rref(QMat a, std::vector<int>* pivots = nullptr);

/// Basis of the right kernel {x : a*x = 0} of a row-major matrix with
/// `cols` columns (a may be empty).
QMat kernel_basis(const QMat& a, int cols);

/// Reduce v against RREF rows; returns the residue and, if coeffs is
/// non-null, the combination coefficients (one per row).
QVec span_reduce(const QMat& rows, const std::vector<int>& pivots, QVec v,
                 QVec* coeffs = nullptr);

bool is_zero_vec(const QVec& v);

/// Column-style Hermite normal form of the lattice spanned by the columns
/// of `gens` (rows x cols, row-major). Result columns have strictly
/// descending pivot rows top to bottom, positive pivots, and entries left
/// of each pivot reduced into [0, pivot). Unique per lattice.
ZMat hnf_column_basis(const ZMat& gens);

/// As above, also producing the unimodular column transform U with
/// gens * U = [H | 0] (kernel columns padded on the right).
ZMat hnf_column_basis_transform(const ZMat& gens, ZMat& transform);

/// Pivot rows of a column-HNF basis, one per column, strictly increasing.
std::vector<int> hnf_pivot_rows(const ZMat& hnf);

/// Product of the pivots of a full-rank square column-HNF basis (= |det|).
Int hnf_abs_det(const ZMat& hnf);

/// Canonical representative of x modulo the column lattice of a full-rank
/// square HNF basis; every coordinate at a pivot row lands in [0, pivot).
ZVec reduce_mod_hnf(const ZMat& hnf, ZVec x);

/// Solve hnf * y = x over the integers (full-rank square HNF). Empty when
/// x is not in the lattice.
std::optional<ZVec> solve_hnf(const ZMat& hnf, const ZVec& x);

ZVec mat_vec(const ZMat& a, const ZVec& x);
ZMat mat_mul(const ZMat& a, const ZMat& b);
ZMat identity(int n);

}  // namespace isect
