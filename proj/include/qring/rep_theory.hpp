#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qring/cyclotomic.hpp"
#include "qring/linalg.hpp"
#include "qring/perm_group.hpp"
#include "qring/rational.hpp"

namespace qring {

/// Which residues an orbit's elements share; selects the sign pattern that
/// earns the "ref" label, and tags components in reports. "mixed" appears
/// only for quandles whose orbits straddle both parities (never dihedral
/// quandles of even order).
enum class OrbitParity { even, odd, mixed };

std::string parity_str(OrbitParity p);

/// Names an irreducible character of the acting group.
///   trivial         - the all-ones character
///   ref             - the linear character whose sign pattern matches the
///                     alternating orbit vector (see v_ref); even m only
///   one_dim_other   - remaining linear characters, numbered from 1
///   two_dim         - the degree-2 character chi_j; index = j
///   unlabeled       - placeholder for bases built outside the taxonomy
struct IrreducibleLabel {
    enum class Kind { trivial, ref, one_dim_other, two_dim, unlabeled };

    Kind kind = Kind::unlabeled;
    unsigned index = 0;  // j for two_dim, counter for one_dim_other
    unsigned degree = 1;

    std::string str() const;  // "triv", "ref", "lin_1", "psi_2", "unlabeled"

    friend bool operator==(const IrreducibleLabel& a, const IrreducibleLabel& b) {
        return a.kind == b.kind && a.index == b.index && a.degree == b.degree;
    }
    friend bool operator!=(const IrreducibleLabel& a, const IrreducibleLabel& b) {
        return !(a == b);
    }
};

/// Report/display order: triv, ref, linear others ascending, two-dim by j.
unsigned label_rank(const IrreducibleLabel& l);

/// A class function on a permutation group, stored per element index.
class Character {
public:
    Character(GroupPtr group, std::vector<Cyclotomic> values);

    const GroupPtr& group() const { return group_; }
    const Cyclotomic& value(std::size_t element_index) const;
    std::size_t size() const { return values_.size(); }

    /// Value at the identity; always a nonnegative integer for characters of
    /// actual representations.
    Rational degree() const;

private:
    GroupPtr group_;
    std::vector<Cyclotomic> values_;
};

struct LabeledCharacter {
    IrreducibleLabel label;
    Character character;
};

/// 2x2 matrix over Q(zeta), row major.
struct Mat2 {
    Cyclotomic e00, e01, e10, e11;
};

Mat2 mat2_identity();
Mat2 mat2_mul(const Mat2& a, const Mat2& b);
Cyclotomic mat2_trace(const Mat2& a);

/// The degree-2 irreducible psi_j realized on every group element.
struct RepMatrices {
    GroupPtr group;
    unsigned j = 0;
    std::vector<Mat2> matrices;  // indexed like group->elements()
};

using CycMatrix = std::vector<CycVec>;  // rows

/// Fixed-point-count character of the natural action on {0,...,degree-1}.
Character permutation_character(GroupPtr g);

/// The complete irreducible character table of a dihedral group located by
/// the witness: 2 linear + (m-1)/2 two-dim characters for odd m, 4 linear +
/// m/2 - 1 two-dim for even m. The parity argument decides which linear
/// character is labeled "ref" (even: r -> -1, s -> +1; odd: r -> -1,
/// s -> -1); with parity mixed no character receives the ref label.
/// Ordered by label_rank. Throws BadWitness if the witness does not generate g.
std::vector<LabeledCharacter> dihedral_irreducible_characters(GroupPtr g,
                                                              const DihedralWitness& witness,
                                                              OrbitParity parity);

/// psi_j(r) = diag(zeta_m^j, zeta_m^-j), psi_j(s) = [[0,1],[1,0]], extended
/// multiplicatively along the witness factorization g = r^k s^e.
/// Throws RangeError when j is outside 1..(m-1)/2 (odd m) or 1..m/2-1 (even).
RepMatrices psi_representation(GroupPtr g, const DihedralWitness& witness, unsigned j);

/// (1/|G|) sum_g a(g) * conj(b(g)). Throws SameGroupRequired unless both
/// characters live on the same group, NonRationalResult if the sum fails to
/// collapse to a rational (an internal bug, never a data condition).
Rational inner_product(const Character& a, const Character& b);

/// Multiplicity of each irreducible in pchar, via inner products. Verifies
/// each is a nonnegative integer and that multiplicities weighted by degree
/// sum to pchar's degree; throws NonIntegerMultiplicity otherwise.
std::vector<std::pair<IrreducibleLabel, unsigned>> multiplicities(
    const Character& pchar, const std::vector<LabeledCharacter>& irreducibles);

/// P = (deg/|G|) sum_g conj(chi(g)) rho(g) as a dense degree x degree
/// matrix; idempotent, image = the chi-isotypic component of the natural
/// permutation module.
CycMatrix isotypic_projection(GroupPtr g, const Character& chi);

/// Column b of the isotypic projection (P applied to basis vector e_b),
/// without materializing the matrix.
CycVec isotypic_column(GroupPtr g, const Character& chi, std::uint32_t b);

/// The complete set of linear characters of an abelian group: trivial first,
/// the rest labeled one_dim_other in a deterministic enumeration order.
/// Values on generators are roots of unity of the generator orders,
/// propagated through the multiplication table and kept only when globally
/// consistent; an abelian group of order N yields exactly N characters.
/// Throws UnsupportedGroup for non-abelian input.
std::vector<LabeledCharacter> abelian_linear_characters(GroupPtr g);

/// True when the two handles denote the same abstract group: identical
/// objects, or equal element lists in the same order.
bool same_group(const GroupPtr& a, const GroupPtr& b);

}  // namespace qring
