#pragma once

#include <cstddef>
#include <vector>

#include "qring/cyclotomic.hpp"
#include "qring/permutation.hpp"

namespace qring {

/// A coordinate vector over Q(zeta); entries may sit at different
/// conductors, callers align via lift_vec / EchelonBasis as needed.
using CycVec = std::vector<Cyclotomic>;

/// Every entry lifted to the given conductor (entry conductors must divide it).
CycVec lift_vec(const CycVec& v, unsigned conductor);

/// Least common multiple of the entry conductors.
unsigned vec_conductor(const CycVec& v);

bool vec_is_zero(const CycVec& v);

/// The permutation action on coordinates: out[g(i)] = v[i], i.e. g sends
/// basis vector e_i to e_{g(i)}.
CycVec permute(const Permutation& g, const CycVec& v);

/// A subspace of Q(zeta)^dim kept in reduced row echelon form: pivot columns
/// ascend, every pivot entry is 1 and is the only nonzero entry in its
/// column. The reduced form is a canonical basis, so two subspaces are equal
/// exactly when their row lists are equal; generators read off from the rows
/// are byte-stable across insertion orders.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

    /// Reduces v against the rows; if a nonzero residue remains it becomes a
    /// new row (normalized, back-substituted into the others). Returns true
    /// when the rank grew. The working conductor grows to absorb v's entries.
    bool add(CycVec v);

    /// True when v already lies in the span.
    bool contains(const CycVec& v) const;

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    unsigned conductor() const { return conductor_; }

    /// Rows in pivot order; each row's entries sit at the working conductor.
    const std::vector<CycVec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    friend bool span_equal(const EchelonBasis& a, const EchelonBasis& b);

private:
    /// v reduced against the rows; entries at the working conductor.
    CycVec residue(CycVec v) const;
    void grow_conductor(unsigned target);

    std::size_t dim_;
    unsigned conductor_ = 1;
    std::vector<CycVec> rows_;
    std::vector<std::size_t> pivots_;
};

/// Equality of spans (via the canonical reduced form).
bool span_equal(const EchelonBasis& a, const EchelonBasis& b);

/// The smallest subspace containing the seeds and closed under the
/// coordinate-permutation action of the given generators.
EchelonBasis invariant_closure(std::size_t dim, const std::vector<CycVec>& seeds,
                               const std::vector<Permutation>& generators);

}  // namespace qring
