#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qring/linalg.hpp"
#include "qring/quandle.hpp"
#include "qring/rational.hpp"
#include "qring/rep_theory.hpp"

namespace qring {

/// An element of the quandle ring K[X]: one exact rational coefficient per
/// basis vector v_i. All arithmetic is componentwise-exact; no floats.
struct RingElement {
    QuandlePtr quandle;
    std::vector<Rational> coeffs;
};

RingElement ring_zero(QuandlePtr q);
RingElement basis_vector(QuandlePtr q, std::uint32_t i);

bool ring_is_zero(const RingElement& a);

RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_sub(const RingElement& a, const RingElement& b);
RingElement ring_scale(const Rational& c, const RingElement& a);

/// Bilinear extension of the quandle operation:
/// (sum a_i v_i)(sum b_j v_j) = sum a_i b_j v_{i |> j}.
/// Throws QuandleMismatch unless both elements share the quandle.
RingElement ring_mul(const RingElement& a, const RingElement& b);

/// Right multiplication by the basis vector v_x: permutes coefficients along
/// the right translation R_x. Equals ring_mul(a, basis_vector(x)).
RingElement act(const RingElement& a, std::uint32_t x);

/// Sum of basis vectors over the orbit, all coefficients 1.
RingElement v_triv(QuandlePtr q, const std::vector<std::uint32_t>& orbit);

/// Alternating sum over the orbit in increasing element order. Defined for
/// dihedral quandles of order n = 4t only: throws NotDivisibleBy4 when
/// 4 does not divide n, QuandleMismatch when q is not dihedral.
RingElement v_ref(QuandlePtr q, const std::vector<std::uint32_t>& orbit);

/// "v0 - 1/2 v2 + v4"; "0" for the zero element.
std::string ring_str(const RingElement& a);

bool operator==(const RingElement& a, const RingElement& b);
bool operator!=(const RingElement& a, const RingElement& b);

/// A submodule of K[X] supported on one orbit: reduced-echelon generator
/// rows (coordinates of length n, entries in Q(zeta)), the orbit, its
/// parity, and the irreducible label the decomposition machinery attaches
/// (Kind::unlabeled until then).
struct SubmoduleBasis {
    std::vector<std::uint32_t> orbit;  // ascending
    OrbitParity parity = OrbitParity::mixed;
    IrreducibleLabel label;
    std::vector<CycVec> vectors;  // reduced row echelon, length = quandle order

    std::size_t dimension() const { return vectors.size(); }
};

/// Parity of an element list: even/odd when all members agree, else mixed.
OrbitParity orbit_parity(const std::vector<std::uint32_t>& orbit);

/// The smallest submodule of K[X] containing v: closure of v under the
/// (deduplicated) right translations, kept as a reduced-echelon basis with
/// lowest-index pivots. Unlabeled; orbit = sorted union of the orbits
/// meeting v's support. Throws ZeroVector on v = 0.
SubmoduleBasis cyclic_module(const QuandlePtr& q, const RingElement& v);

/// RingElement coefficients embedded into Q(zeta)^n.
CycVec to_cyc_vec(const RingElement& a);

/// The distinct right-translation permutations of q, in first-occurrence
/// order of x. For a dihedral quandle of even order n these are the m = n/2
/// distinct maps R_0, ..., R_{m-1}.
std::vector<Permutation> distinct_translations(const Quandle& q);

/// Generator rows rendered as ring expressions: "v0 - v4". Cyclotomic
/// coefficients print parenthesized: "(z8 - z8^3) v1".
std::string cyc_vec_str(const CycVec& v);

}  // namespace qring
