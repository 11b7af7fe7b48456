#include "qring/quandle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "qring/errors.hpp"

namespace qring {

QuandlePtr Quandle::validate(std::vector<std::vector<std::uint32_t>> table) {
    const std::uint32_t n = static_cast<std::uint32_t>(table.size());
    if (n == 0) throw RangeError("quandle order must be positive");
    for (std::uint32_t x = 0; x < n; ++x) {
        if (table[x].size() != n)
            throw RangeError("Cayley table row " + std::to_string(x) + " has " +
                             std::to_string(table[x].size()) + " entries, expected " +
                             std::to_string(n));
        for (std::uint32_t y = 0; y < n; ++y)
            if (table[x][y] >= n)
                throw RangeError("Cayley table entry (" + std::to_string(x) + ", " +
                                 std::to_string(y) + ") = " + std::to_string(table[x][y]) +
                                 " is out of range");
    }

    // Axiom 1: x |> x = x.
    for (std::uint32_t x = 0; x < n; ++x)
        if (table[x][x] != x)
            throw AxiomViolation(1, {x},
                                 "idempotence fails: " + std::to_string(x) + " |> " +
                                     std::to_string(x) + " = " + std::to_string(table[x][x]));

    // Axiom 2: for each y the map x -> x |> y is a bijection.
    for (std::uint32_t y = 0; y < n; ++y) {
        std::vector<bool> hit(n, false);
        for (std::uint32_t x = 0; x < n; ++x) {
            const std::uint32_t image = table[x][y];
            if (hit[image])
                throw AxiomViolation(2, {y},
                                     "right translation by " + std::to_string(y) +
                                         " is not a bijection: image " + std::to_string(image) +
                                         " repeats");
            hit[image] = true;
        }
    }

    // Axiom 3: (x |> y) |> z = (x |> z) |> (y |> z).
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y)
            for (std::uint32_t z = 0; z < n; ++z)
                if (table[table[x][y]][z] != table[table[x][z]][table[y][z]])
                    throw AxiomViolation(
                        3, {x, y, z},
                        "self-distributivity fails at (" + std::to_string(x) + ", " +
                            std::to_string(y) + ", " + std::to_string(z) + ")");

    return QuandlePtr(new Quandle(n, std::move(table)));
}

QuandlePtr Quandle::dihedral(std::uint32_t n) {
    if (n == 0) throw RangeError("quandle order must be positive");
    std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y)
            table[x][y] = static_cast<std::uint32_t>((2ull * y + 2ull * n - x) % n);
    return validate(std::move(table));
}

QuandlePtr Quandle::trivial(std::uint32_t n) {
    if (n == 0) throw RangeError("quandle order must be positive");
    std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y) table[x][y] = x;
    return validate(std::move(table));
}

bool Quandle::is_dihedral() const {
    for (std::uint32_t x = 0; x < n_; ++x)
        for (std::uint32_t y = 0; y < n_; ++y)
            if (table_[x][y] != (2ull * y + 2ull * n_ - x) % n_) return false;
    return true;
}

Permutation Quandle::right_translation(std::uint32_t x) const {
    if (x >= n_) throw RangeError("right_translation: element out of range");
    std::vector<std::uint32_t> images(n_);
    for (std::uint32_t y = 0; y < n_; ++y) images[y] = table_[y][x];
    return Permutation(std::move(images));
}

GroupPtr Quandle::inner_group() const {
    std::vector<Permutation> gens;
    gens.reserve(n_);
    for (std::uint32_t x = 0; x < n_; ++x) gens.push_back(right_translation(x));
    return PermutationGroup::closure(gens);
}

OrbitDecomposition Quandle::orbits() const {
    // Union-find over {0,...,n-1}: y and y |> x always share an orbit.
    std::vector<std::uint32_t> parent(n_);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::uint32_t x = 0; x < n_; ++x)
        for (std::uint32_t y = 0; y < n_; ++y) {
            const std::uint32_t a = find(y), b = find(table_[y][x]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }

    OrbitDecomposition out;
    std::vector<std::int64_t> slot(n_, -1);
    for (std::uint32_t y = 0; y < n_; ++y) {
        const std::uint32_t root = find(y);
        if (slot[root] < 0) {
            slot[root] = static_cast<std::int64_t>(out.orbits.size());
            out.orbits.emplace_back();
        }
        out.orbits[static_cast<std::size_t>(slot[root])].push_back(y);
    }
    out.connected = out.orbits.size() == 1;
    return out;
}

Permutation Quandle::restrict_translation(std::uint32_t x,
                                           const std::vector<std::uint32_t>& orbit) const {
    if (x >= n_) throw RangeError("restrict_translation: element out of range");
    std::vector<std::uint32_t> sorted = orbit;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::int64_t> position(n_, -1);
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (sorted[k] >= n_) throw RangeError("restrict_translation: orbit element out of range");
        position[sorted[k]] = static_cast<std::int64_t>(k);
    }

    std::vector<std::uint32_t> images(sorted.size());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        const std::uint32_t image = table_[sorted[k]][x];
        if (position[image] < 0)
            throw NotInvariant("orbit is not closed under right translation by " +
                               std::to_string(x) + ": " + std::to_string(sorted[k]) +
                               " maps to " + std::to_string(image));
        images[k] = static_cast<std::uint32_t>(position[image]);
    }
    return Permutation(std::move(images));
}

GroupPtr Quandle::restricted_inner_group(const std::vector<std::uint32_t>& orbit) const {
    std::vector<Permutation> gens;
    std::set<std::vector<std::uint32_t>> seen;
    for (std::uint32_t x = 0; x < n_; ++x) {
        Permutation p = restrict_translation(x, orbit);
        if (seen.insert(p.images()).second) gens.push_back(std::move(p));
    }
    return PermutationGroup::closure(gens);
}

}  // namespace qring
