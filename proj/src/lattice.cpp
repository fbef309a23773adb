#include "isect/lattice.hpp"

#include "json.hpp"

#include <stdexcept>

using nlohmann::json;

namespace isect {

AffineLattice::AffineLattice(int m)
    : m_(m), basis_(identity(m)), offset_(m, Int(0)) {
    if (m < 1) throw std::invalid_argument("lattice: dimension must be >= 1");
}

AffineLattice::AffineLattice(ZMat basis, ZVec offset) {
    if (basis.empty() || basis.size() != basis[0].size())
        throw std::invalid_argument("lattice: basis must be square");
    if (offset.size() != basis.size())
        throw std::invalid_argument("lattice: offset dimension mismatch");
    m_ = static_cast<int>(basis.size());
    basis_ = hnf_column_basis(basis);
    if (basis_.empty() || static_cast<int>(basis_[0].size()) != m_)
        throw std::invalid_argument("lattice: basis is singular");
    offset_ = reduce_mod_hnf(basis_, std::move(offset));
}

AffineLattice AffineLattice::scaled(int m, const Int& c, ZVec offset) {
    ZMat b = identity(m);
    for (int i = 0; i < m; ++i) b[i][i] = c;
    return AffineLattice(std::move(b), std::move(offset));
}

Int AffineLattice::index() const { return hnf_abs_det(basis_); }

bool AffineLattice::contains(const ZVec& x) const {
    if (static_cast<int>(x.size()) != m_)
        throw std::invalid_argument("lattice: point dimension mismatch");
    ZVec d(m_);
    for (int i = 0; i < m_; ++i) d[i] = x[i] - offset_[i];
    return solve_hnf(basis_, d).has_value();
}

ZVec AffineLattice::point(const ZVec& n) const {
    ZVec r = mat_vec(basis_, n);
    for (int i = 0; i < m_; ++i) r[i] += offset_[i];
    return r;
}

bool AffineLattice::contains_lattice(const AffineLattice& other) const {
    if (other.m_ != m_) return false;
    if (!contains(other.offset_)) return false;
    // each basis column of other must lie in the linear part of *this
    for (int j = 0; j < m_; ++j) {
        ZVec col(m_);
        for (int i = 0; i < m_; ++i) col[i] = other.basis_[i][j];
        if (!solve_hnf(basis_, col)) return false;
    }
    return true;
}

bool AffineLattice::operator==(const AffineLattice& o) const {
    return m_ == o.m_ && basis_ == o.basis_ && offset_ == o.offset_;
}

std::string AffineLattice::to_json() const {
    json j;
    j["m"] = m_;
    json rows = json::array();
    for (const auto& row : basis_) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.get_str());
        rows.push_back(r);
    }
    j["hnf_matrix"] = rows;
    json off = json::array();
    for (const auto& v : offset_) off.push_back(v.get_str());
    j["offset"] = off;
    return j.dump();
}

AffineLattice AffineLattice::from_json(const std::string& text) {
    json j = json::parse(text);
    int m = j.at("m").get<int>();
    ZMat basis(m, ZVec(m));
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k)
            basis[i][k] = Int(j.at("hnf_matrix")[i][k].get<std::string>());
    ZVec off(m);
    for (int i = 0; i < m; ++i) off[i] = Int(j.at("offset")[i].get<std::string>());
    return AffineLattice(std::move(basis), std::move(off));
}

}  // namespace isect
