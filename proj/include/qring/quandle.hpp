#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "qring/perm_group.hpp"
#include "qring/permutation.hpp"

namespace qring {

class Quandle;
using QuandlePtr = std::shared_ptr<const Quandle>;

/// Orbit partition of {0,...,n-1} under the inner automorphism group.
/// Orbits are sorted internally and listed by smallest member.
struct OrbitDecomposition {
    std::vector<std::vector<std::uint32_t>> orbits;
    bool connected = false;
};

/// A finite quandle: an n x n Cayley table with entry (x, y) = x |> y,
/// validated against the three axioms on construction. Immutable.
class Quandle {
public:
    /// Validates idempotence, right invertibility and right
    /// self-distributivity; throws AxiomViolation naming the failed axiom
    /// and an offending tuple.
    static QuandlePtr validate(std::vector<std::vector<std::uint32_t>> table);

    /// The dihedral quandle R_n: i |> j = (2j - i) mod n.
    static QuandlePtr dihedral(std::uint32_t n);

    /// The trivial quandle of order n: x |> y = x.
    static QuandlePtr trivial(std::uint32_t n);

    std::uint32_t order() const { return n_; }
    std::uint32_t op(std::uint32_t x, std::uint32_t y) const { return table_[x][y]; }
    const std::vector<std::vector<std::uint32_t>>& table() const { return table_; }

    /// R_x : y -> y |> x. A bijection by axiom 2.
    Permutation right_translation(std::uint32_t x) const;

    /// Closure of all right translations; generators deduplicated in index
    /// order, so generators()[0] = R_0, [1] = first distinct later one.
    GroupPtr inner_group() const;

    OrbitDecomposition orbits() const;

    /// R_x restricted to an invariant orbit, re-indexed by sorted orbit
    /// order (position k <-> k-th smallest orbit element).
    /// Throws NotInvariant if the orbit is not closed under R_x.
    Permutation restrict_translation(std::uint32_t x,
                                     const std::vector<std::uint32_t>& orbit) const;

    /// Closure of the restrictions of all R_x to the orbit.
    GroupPtr restricted_inner_group(const std::vector<std::uint32_t>& orbit) const;

    /// True when the table is exactly the dihedral quandle of this order.
    bool is_dihedral() const;

    friend bool operator==(const Quandle& a, const Quandle& b) { return a.table_ == b.table_; }

private:
    Quandle(std::uint32_t n, std::vector<std::vector<std::uint32_t>> table)
        : n_(n), table_(std::move(table)) {}

    std::uint32_t n_;
    std::vector<std::vector<std::uint32_t>> table_;
};

}  // namespace qring
