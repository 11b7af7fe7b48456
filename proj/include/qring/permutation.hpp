#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qring {

/// A permutation of {0, ..., d-1}, stored as its image array. Immutable.
class Permutation {
public:
    /// Identity of the given degree.
    explicit Permutation(std::uint32_t degree);
    /// From an image array; throws RangeError unless it is a bijection.
    explicit Permutation(std::vector<std::uint32_t> images);

    /// Built from disjoint-or-not cycles over {0,...,degree-1}; points not
    /// mentioned are fixed. Cycles apply left to right within the list.
    static Permutation from_cycles(std::uint32_t degree,
                                   const std::vector<std::vector<std::uint32_t>>& cycles);

    std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
    std::uint32_t operator()(std::uint32_t k) const { return images_[k]; }
    const std::vector<std::uint32_t>& images() const { return images_; }

    bool is_identity() const;
    Permutation inverse() const;

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images_ == b.images_;
    }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    /// Lexicographic on image arrays; gives containers a deterministic order.
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.images_ < b.images_;
    }

    /// Cycle notation, fixed points omitted: "(1 7)(2 6)(3 5)"; "()" for id.
    std::string str() const;

private:
    std::vector<std::uint32_t> images_;
};

/// (p o q)(k) = p(q(k)) — q applies first. Throws DegreeMismatch.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation power(const Permutation& p, long e);

/// Least k >= 1 with p^k = id.
unsigned element_order(const Permutation& p);

/// Sorted multiset of cycle lengths, fixed points included.
std::vector<unsigned> cycle_type(const Permutation& p);

}  // namespace qring
