#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qring {

/// Base class for every error this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A Cayley table failed one of the three quandle axioms.
/// `axiom` is 1 (idempotence), 2 (right invertibility) or 3 (right
/// self-distributivity); `witness` holds the offending tuple:
/// axiom 1 -> {x}, axiom 2 -> {y}, axiom 3 -> {x, y, z}.
struct AxiomViolation : Error {
    int axiom;
    std::vector<std::uint32_t> witness;
    AxiomViolation(int axiom_, std::vector<std::uint32_t> witness_, const std::string& msg)
        : Error(msg), axiom(axiom_), witness(std::move(witness_)) {}
};

struct DegreeMismatch : Error {
    using Error::Error;
};

struct ConductorMismatch : Error {
    using Error::Error;
};

/// restrict_translation: the given orbit is not closed under R_x.
struct NotInvariant : Error {
    using Error::Error;
};

struct QuandleMismatch : Error {
    using Error::Error;
};

/// v_ref requires a dihedral quandle of order n = 4t.
struct NotDivisibleBy4 : Error {
    using Error::Error;
};

struct ZeroVector : Error {
    using Error::Error;
};

struct SameGroupRequired : Error {
    using Error::Error;
};

/// A character inner product over the full group did not reduce to a
/// rational. Cannot happen for correct inputs; treated as a hard bug signal.
struct NonRationalResult : Error {
    using Error::Error;
};

/// inner_product of a permutation character with an irreducible produced a
/// value outside the nonnegative integers. Hard bug signal, never a warning.
struct NonIntegerMultiplicity : Error {
    using Error::Error;
};

struct BadWitness : Error {
    using Error::Error;
};

struct RangeError : Error {
    using Error::Error;
};

/// Input JSON that does not match the documented schemas (missing keys,
/// wrong shapes, unparseable numbers). Distinct from mathematical failures.
struct MalformedInput : Error {
    using Error::Error;
};

/// decompose_dihedral rejects odd orders; callers go through decompose_generic.
struct OddOrder : Error {
    using Error::Error;
};

struct TooSmall : Error {
    using Error::Error;
};

/// decompose_generic: the orbit's inner automorphism group is neither abelian
/// nor dihedral, so no complete character table can be derived here.
struct UnsupportedGroup : Error {
    using Error::Error;
};

}  // namespace qring
