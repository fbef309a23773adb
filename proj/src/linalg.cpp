#include "isect/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace isect {

Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int mod_pos(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

QMat rref(QMat a, std::vector<int>* pivots) {
    if (pivots) pivots->clear();
    if (a.empty()) return a;
    const int cols = static_cast<int>(a[0].size());
    int row = 0;
    for (int col = 0; col < cols && row < static_cast<int>(a.size()); ++col) {
        int sel = -1;
        for (int i = row; i < static_cast<int>(a.size()); ++i)
            if (a[i][col] != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(a[row], a[sel]);
        Rat inv = a[row][col];
        for (int j = col; j < cols; ++j) a[row][j] /= inv;
        for (int i = 0; i < static_cast<int>(a.size()); ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (int j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
        }
        if (pivots) pivots->push_back(col);
        ++row;
    }
    a.resize(row);
    return a;
}

QMat kernel_basis(const QMat& a, int cols) {
    std::vector<int> pivots;
    QMat r = rref(a, &pivots);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    QMat basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVec v(cols, Rat(0));
        v[free] = 1;
        for (size_t i = 0; i < r.size(); ++i) v[pivots[i]] = -r[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

QVec span_reduce(const QMat& rows, const std::vector<int>& pivots, QVec v,
                 QVec* coeffs) {
    if (coeffs) coeffs->assign(rows.size(), Rat(0));
    for (size_t i = 0; i < rows.size(); ++i) {
        Rat c = v[pivots[i]];
        if (c == 0) continue;
        if (coeffs) (*coeffs)[i] = c;
        for (size_t j = 0; j < v.size(); ++j) v[j] -= c * rows[i][j];
    }
    return v;
}

bool is_zero_vec(const QVec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

namespace {

ZMat hnf_impl(const ZMat& gens, ZMat* transform) {
    if (gens.empty()) return {};
    const int rows = static_cast<int>(gens.size());
    const int ncols = static_cast<int>(gens[0].size());
    // work column-major; mirror every column operation on the transform
    std::vector<ZVec> col(ncols, ZVec(rows));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < ncols; ++j) col[j][i] = gens[i][j];
    std::vector<ZVec> tr;
    if (transform) {
        tr.assign(ncols, ZVec(ncols, Int(0)));
        for (int j = 0; j < ncols; ++j) tr[j][j] = 1;
    }

    int c = 0;  // next column slot to fill
    for (int i = 0; i < rows && c < ncols; ++i) {
        int sel = -1;
        for (int j = c; j < ncols; ++j)
            if (col[j][i] != 0) { sel = j; break; }
        if (sel < 0) continue;
        std::swap(col[c], col[sel]);
        if (transform) std::swap(tr[c], tr[sel]);
        // clear row i in columns right of c with unimodular 2-column moves
        for (int j = c + 1; j < ncols; ++j) {
            if (col[j][i] == 0) continue;
            Int g, u, v;
            mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(),
                       col[c][i].get_mpz_t(), col[j][i].get_mpz_t());
            Int ac = col[c][i] / g, aj = col[j][i] / g;
            for (int t = 0; t < rows; ++t) {
                Int nc = u * col[c][t] + v * col[j][t];
                Int nj = -aj * col[c][t] + ac * col[j][t];
                col[c][t] = nc;
                col[j][t] = nj;
            }
            if (transform)
                for (int t = 0; t < ncols; ++t) {
                    Int nc = u * tr[c][t] + v * tr[j][t];
                    Int nj = -aj * tr[c][t] + ac * tr[j][t];
                    tr[c][t] = nc;
                    tr[j][t] = nj;
                }
        }
        if (col[c][i] < 0) {
            for (int t = 0; t < rows; ++t) col[c][t] = -col[c][t];
            if (transform)
                for (int t = 0; t < ncols; ++t) tr[c][t] = -tr[c][t];
        }
        // reduce earlier columns at the pivot row
        for (int j = 0; j < c; ++j) {
            Int q = floor_div(col[j][i], col[c][i]);
            if (q == 0) continue;
            for (int t = 0; t < rows; ++t) col[j][t] -= q * col[c][t];
            if (transform)
                for (int t = 0; t < ncols; ++t) tr[j][t] -= q * tr[c][t];
        }
        ++c;
    }
    if (transform) {
        // transform is column-major internally; emit row-major ncols x ncols
        transform->assign(ncols, ZVec(ncols));
        for (int i = 0; i < ncols; ++i)
            for (int j = 0; j < ncols; ++j) (*transform)[i][j] = tr[j][i];
    }
    col.resize(c);
    ZMat out(rows, ZVec(c));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < c; ++j) out[i][j] = col[j][i];
    return out;
}

}  // namespace

ZMat hnf_column_basis(const ZMat& gens) { return hnf_impl(gens, nullptr); }

ZMat hnf_column_basis_transform(const ZMat& gens, ZMat& transform) {
    return hnf_impl(gens, &transform);
}

std::vector<int> hnf_pivot_rows(const ZMat& hnf) {
    std::vector<int> piv;
    if (hnf.empty()) return piv;
    const int rows = static_cast<int>(hnf.size());
    const int cols = static_cast<int>(hnf[0].size());
    for (int j = 0; j < cols; ++j) {
        int i = 0;
        while (i < rows && hnf[i][j] == 0) ++i;
        if (i == rows) throw std::invalid_argument("hnf: zero column");
        piv.push_back(i);
    }
    return piv;
}

Int hnf_abs_det(const ZMat& hnf) {
    auto piv = hnf_pivot_rows(hnf);
    Int d = 1;
    for (size_t j = 0; j < piv.size(); ++j) d *= hnf[piv[j]][j];
    return d;
}

ZVec reduce_mod_hnf(const ZMat& hnf, ZVec x) {
    auto piv = hnf_pivot_rows(hnf);
    const int rows = static_cast<int>(hnf.size());
    for (size_t j = 0; j < piv.size(); ++j) {
        Int q = floor_div(x[piv[j]], hnf[piv[j]][j]);
        if (q == 0) continue;
        for (int t = 0; t < rows; ++t) x[t] -= q * hnf[t][j];
    }
    return x;
}

std::optional<ZVec> solve_hnf(const ZMat& hnf, const ZVec& x) {
    auto piv = hnf_pivot_rows(hnf);
    const int rows = static_cast<int>(hnf.size());
    ZVec r = x, y(piv.size());
    for (size_t j = 0; j < piv.size(); ++j) {
        Int num = r[piv[j]], den = hnf[piv[j]][j];
        if (num % den != 0) return std::nullopt;
        y[j] = num / den;
        for (int t = 0; t < rows; ++t) r[t] -= y[j] * hnf[t][j];
    }
    for (const Int& v : r)
        if (v != 0) return std::nullopt;
    return y;
}

ZVec mat_vec(const ZMat& a, const ZVec& x) {
    ZVec r(a.size(), Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) r[i] += a[i][j] * x[j];
    return r;
}

ZMat mat_mul(const ZMat& a, const ZMat& b) {
    const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    ZMat r(n, ZVec(m, Int(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t)
            if (a[i][t] != 0)
                for (size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    return r;
}

ZMat identity(int n) {
    ZMat r(n, ZVec(n, Int(0)));
    for (int i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

}  // namespace isect
