#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qring/rational.hpp"

namespace qring {

unsigned euler_phi(unsigned m);

/// Coefficients of Phi_m, lowest degree first, monic, length euler_phi(m)+1.
/// Computed by dividing x^m - 1 by the product of Phi_d over proper divisors d.
std::vector<Integer> cyclotomic_polynomial(unsigned m);

/// An element of Q(zeta_m), stored as the canonical remainder mod Phi_m:
/// sum coeffs[k] * zeta_m^k with 0 <= k < phi(m). Canonical form makes
/// equality a coefficient-array comparison. Immutable value type.
class Cyclotomic {
public:
    /// Zero in Q(zeta_1) = Q.
    Cyclotomic() : m_(1), coeffs_(1, Rational(0)) {}
    /// A rational, embedded at conductor 1.
    explicit Cyclotomic(Rational r) : m_(1), coeffs_{std::move(r)} {}
    explicit Cyclotomic(long v) : Cyclotomic(Rational(v)) {}

    /// zeta_m^(k mod m), canonically reduced. k may be negative.
    static Cyclotomic root_of_unity(unsigned m, long k);

    /// From a canonical coefficient vector (length must equal phi(m)).
    static Cyclotomic from_coeffs(unsigned m, std::vector<Rational> coeffs);

    /// sum of coeff * zeta_m^exp over the given terms, reduced canonically
    /// in one pass. Exponents may be negative or exceed m; repeated
    /// exponents accumulate.
    static Cyclotomic from_root_sum(unsigned m,
                                    const std::vector<std::pair<long, Rational>>& terms);

    unsigned conductor() const { return m_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;

    /// Substitutes zeta_m = zeta_L^(L/m); requires m | L.
    Cyclotomic lifted(unsigned target_conductor) const;

    Cyclotomic conj() const;  // zeta -> zeta^{-1}
    Cyclotomic inverse() const;  // extended gcd mod Phi_m; throws ZeroVector on 0

    std::string str() const;  // "1/2 + z5 - 2 z5^3"

    /// Decimal shadow (re, im) for report display only; never used in math.
    std::pair<double, double> approx() const;

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic operator-() const;
    friend Cyclotomic operator*(const Rational& c, const Cyclotomic& a);

    /// Value equality; conductors are aligned to the lcm before comparing.
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

private:
    unsigned m_;
    std::vector<Rational> coeffs_;  // length euler_phi(m_)
};

/// Free-function operation aliases. Mixed conductors throw ConductorMismatch
/// unless one operand is a plain rational (conductor 1), which embeds into
/// every Q(zeta_m); anything else the caller lifts explicitly.
Cyclotomic cyc_add(const Cyclotomic& a, const Cyclotomic& b);
Cyclotomic cyc_sub(const Cyclotomic& a, const Cyclotomic& b);
Cyclotomic cyc_mul(const Cyclotomic& a, const Cyclotomic& b);
Cyclotomic cyc_neg(const Cyclotomic& a);
Cyclotomic cyc_conj(const Cyclotomic& a);
Cyclotomic cyc_inv(const Cyclotomic& a);

Cyclotomic root_of_unity(unsigned m, long k);

/// The rational value if all coefficients beyond index 0 vanish, else nullopt.
std::optional<Rational> to_rational(const Cyclotomic& a);

}  // namespace qring
