#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qring/quandle_ring.hpp"
#include "qring/rep_theory.hpp"

namespace qring {

/// A claimed (or computed) direct-sum decomposition of K[X] into submodules.
/// Components are listed label-major (triv, ref, linear others, psi_j by
/// ascending j), with the even-parity orbit before the odd one within each
/// label, matching the display order of the underlying direct sum.
struct DecompositionReport {
    std::uint32_t n = 0;
    std::string field = "C";  // cosmetic label "C" or "R"; same math either way
    QuandlePtr quandle;
    std::vector<SubmoduleBasis> components;
    std::vector<std::string> notes;

    std::size_t total_dimension() const;
};

struct ComponentVerdict {
    /// Span closed under every right translation; on failure the witness x
    /// and the generator row whose image escapes the span.
    bool invariant = false;
    std::optional<std::uint32_t> failure_x;
    std::optional<CycVec> failure_vector;

    /// Self inner product of the component's character over Inn(X); the
    /// component is indecomposable exactly when it equals 1. Absent when the
    /// component is not invariant (no character exists then).
    std::optional<Rational> self_inner_product;
    bool indecomposable = false;
};

struct Verdict {
    bool dimension_sum = false;        // component dimensions add up to n
    bool pairwise_independent = false; // joint rank equals the dimension sum
    /// A pair of component indices with nontrivial intersection, when the
    /// independence check fails and a single offending pair exists.
    std::optional<std::pair<std::size_t, std::size_t>> dependence_witness;
    std::vector<ComponentVerdict> components;

    bool passed() const;
};

/// The decomposition of K[R_n] for even n >= 4 into indecomposable modules:
/// per orbit, one trivial component, one alternating ("ref") component when
/// 4 | n, and two-dimensional components psi_j spanned by the rotation
/// eigenvectors that the isotypic projection column P_j e_0 decomposes into
/// (the column is recomputed and matched against its closed form exactly).
/// Every component is checked invariant before return. Throws OddOrder for
/// odd n (use decompose_generic), TooSmall for n < 4.
DecompositionReport decompose_dihedral(std::uint32_t n, const std::string& field = "C");

/// Decomposition of K[X] for an arbitrary finite quandle, using no
/// dihedral-quandle-specific structure: per orbit, the restricted inner
/// group's irreducible characters are derived (abelian groups via linear
/// character enumeration, dihedral groups via witness), the permutation
/// module is split by isotypic projection, and multiplicity >= 2 isotypic
/// blocks of two-dimensional characters are refined into indecomposables
/// with matrix-element projections. Throws UnsupportedGroup when a restricted
/// group is neither abelian nor dihedral.
DecompositionReport decompose_generic(const QuandlePtr& q, const std::string& field = "C");

/// Independent referee for any claimed decomposition: checks each component
/// is invariant under all right translations, that the components are
/// jointly independent with dimensions summing to n, and that each invariant
/// component is indecomposable (character self inner product 1 over Inn(X)).
/// Failures are verdict content, not exceptions. Throws QuandleMismatch only
/// when the report's order differs from the quandle's.
Verdict verify_decomposition(const QuandlePtr& q, const DecompositionReport& report);

/// Splits the chi_j-isotypic subspace (multiplicity mult >= 1) of the
/// natural permutation module of g into mult invariant two-dimensional
/// subspaces, via the matrix-element projections of psi_j. Exposed for
/// direct testing; decompose_generic calls it for multiplicity >= 2.
std::vector<std::vector<CycVec>> split_two_dim_isotypic(const GroupPtr& g,
                                                        const DihedralWitness& witness,
                                                        unsigned j, const Character& chi_j,
                                                        unsigned mult);

}  // namespace qring
