#include "qring/linalg.hpp"

#include <numeric>
#include <string>

#include "qring/errors.hpp"

namespace qring {

CycVec lift_vec(const CycVec& v, unsigned conductor) {
    CycVec out;
    out.reserve(v.size());
    for (const Cyclotomic& e : v) out.push_back(e.lifted(conductor));
    return out;
}

unsigned vec_conductor(const CycVec& v) {
    unsigned l = 1;
    for (const Cyclotomic& e : v) l = std::lcm(l, e.conductor());
    return l;
}

bool vec_is_zero(const CycVec& v) {
    for (const Cyclotomic& e : v)
        if (!e.is_zero()) return false;
    return true;
}

CycVec permute(const Permutation& g, const CycVec& v) {
    if (g.degree() != v.size())
        throw DegreeMismatch("permute: permutation degree " + std::to_string(g.degree()) +
                             " does not match vector length " + std::to_string(v.size()));
    CycVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[g(static_cast<std::uint32_t>(i))] = v[i];
    return out;
}

void EchelonBasis::grow_conductor(unsigned target) {
    const unsigned l = std::lcm(conductor_, target);
    if (l == conductor_) return;
    for (CycVec& row : rows_) row = lift_vec(row, l);
    conductor_ = l;
}

CycVec EchelonBasis::residue(CycVec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Cyclotomic& lead = v[pivots_[r]];
        if (lead.is_zero()) continue;
        const Cyclotomic factor = lead;  // pivot entry of rows_[r] is 1
        for (std::size_t j = pivots_[r]; j < v.size(); ++j)
            if (!rows_[r][j].is_zero()) v[j] = v[j] - factor * rows_[r][j];
    }
    return v;
}

bool EchelonBasis::add(CycVec v) {
    if (v.size() != dim_)
        throw DegreeMismatch("EchelonBasis: vector length " + std::to_string(v.size()) +
                             " does not match dimension " + std::to_string(dim_));
    grow_conductor(vec_conductor(v));
    v = residue(lift_vec(v, conductor_));

    std::size_t pivot = dim_;
    for (std::size_t j = 0; j < dim_; ++j)
        if (!v[j].is_zero()) {
            pivot = j;
            break;
        }
    if (pivot == dim_) return false;

    const Cyclotomic scale = v[pivot].inverse();
    for (std::size_t j = pivot; j < dim_; ++j)
        if (!v[j].is_zero()) v[j] = scale * v[j];

    // Clear the new pivot column in the existing rows.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Cyclotomic& c = rows_[r][pivot];
        if (c.is_zero()) continue;
        const Cyclotomic factor = c;
        for (std::size_t j = pivot; j < dim_; ++j)
            if (!v[j].is_zero()) rows_[r][j] = rows_[r][j] - factor * v[j];
    }

    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < pivot) ++at;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(at), pivot);
    return true;
}

bool EchelonBasis::contains(const CycVec& v) const {
    if (v.size() != dim_)
        throw DegreeMismatch("EchelonBasis: vector length " + std::to_string(v.size()) +
                             " does not match dimension " + std::to_string(dim_));
    const unsigned l = std::lcm(conductor_, vec_conductor(v));
    if (l != conductor_) {
        // v needs a larger field than the span lives in; reduce a lifted copy
        // against lifted rows without disturbing the stored form.
        EchelonBasis wide(*this);
        wide.grow_conductor(l);
        return vec_is_zero(wide.residue(lift_vec(v, l)));
    }
    return vec_is_zero(residue(lift_vec(v, conductor_)));
}

bool span_equal(const EchelonBasis& a, const EchelonBasis& b) {
    if (a.dim_ != b.dim_ || a.rank() != b.rank()) return false;
    if (a.pivots_ != b.pivots_) return false;
    for (std::size_t r = 0; r < a.rows_.size(); ++r)
        for (std::size_t j = 0; j < a.dim_; ++j)
            if (a.rows_[r][j] != b.rows_[r][j]) return false;
    return true;
}

EchelonBasis invariant_closure(std::size_t dim, const std::vector<CycVec>& seeds,
                               const std::vector<Permutation>& generators) {
    EchelonBasis basis(dim);
    std::vector<CycVec> worklist;
    for (const CycVec& s : seeds)
        if (basis.add(s)) worklist.push_back(s);
    while (!worklist.empty()) {
        const CycVec v = std::move(worklist.back());
        worklist.pop_back();
        for (const Permutation& g : generators) {
            CycVec w = permute(g, v);
            if (basis.add(w)) worklist.push_back(std::move(w));
        }
    }
    return basis;
}

}  // namespace qring
