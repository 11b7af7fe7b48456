#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "qring/permutation.hpp"

namespace qring {

class PermutationGroup;
using GroupPtr = std::shared_ptr<const PermutationGroup>;

/// An explicit (r, s) dihedral presentation witness:
/// r^m = s^2 = id, s r s^{-1} = r^{-1}, and <r, s> is the whole group.
struct DihedralWitness {
    Permutation r;
    Permutation s;
    unsigned m;
};

/// A finite permutation group given by its full element list. Elements are
/// enumerated in BFS discovery order from the generator list (identity
/// first); every index used downstream (characters, class lists) refers to
/// that order. Immutable.
class PermutationGroup {
public:
    /// BFS closure of the generators under composition.
    /// Throws DegreeMismatch on an empty list or unequal degrees.
    static GroupPtr closure(const std::vector<Permutation>& generators);

    std::uint32_t degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::vector<Permutation>& elements() const { return elements_; }
    const Permutation& element(std::size_t i) const { return elements_[i]; }

    /// Index of p in elements(); throws RangeError if absent.
    std::size_t index_of(const Permutation& p) const;
    bool contains(const Permutation& p) const;

    std::size_t product_index(std::size_t i, std::size_t j) const;  // el[i] o el[j]
    std::size_t inverse_index(std::size_t i) const;

    /// Partition of element indices into conjugacy classes; classes ordered
    /// by smallest member index, members ascending.
    std::vector<std::vector<std::size_t>> conjugacy_classes() const;

    bool is_abelian() const;

private:
    PermutationGroup() = default;

    std::uint32_t degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
};

/// Recognize a dihedral group of order 2m, m >= 3, returning an explicit
/// witness, or nullopt (e.g. cyclic groups, orders < 6). The search tries
/// r = g1 o g0, s = g0 for the first two distinct generators first, so
/// groups built from quandle restrictions get the S_1 S_0 / S_0 witness.
std::optional<DihedralWitness> dihedral_witness(const PermutationGroup& g);

/// Writes each element as r^k s^e through the witness; result[i] = (k, e).
/// Throws BadWitness if some element has no such factorization.
std::vector<std::pair<unsigned, unsigned>> witness_factorization(const PermutationGroup& g,
                                                                 const DihedralWitness& w);

}  // namespace qring
