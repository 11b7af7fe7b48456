#include "qring/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qring/errors.hpp"

namespace qring {

unsigned euler_phi(unsigned m) {
    if (m == 0) throw RangeError("euler_phi(0)");
    unsigned result = m;
    unsigned n = m;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Exact division of integer polynomials, quotient must be integral.
std::vector<Integer> poly_div_exact(const std::vector<Integer>& num,
                                    const std::vector<Integer>& den) {
    std::vector<Integer> rem = num;
    const size_t dd = den.size() - 1;
    if (rem.size() < den.size()) throw std::logic_error("poly_div_exact: degree underflow");
    std::vector<Integer> quot(rem.size() - dd, Integer(0));
    for (size_t qk = quot.size(); qk-- > 0;) {
        Integer lead = rem[qk + dd];
        if (lead == 0) continue;
        if (lead % den[dd] != 0) throw std::logic_error("poly_div_exact: not exact");
        Integer q = lead / den[dd];
        quot[qk] = q;
        for (size_t i = 0; i <= dd; ++i) rem[qk + i] -= q * den[i];
    }
    for (const auto& c : rem)
        if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return quot;
}

std::vector<unsigned> divisors(unsigned m) {
    std::vector<unsigned> ds;
    for (unsigned d = 1; d <= m; ++d)
        if (m % d == 0) ds.push_back(d);
    return ds;
}

struct ConductorData {
    unsigned m = 1;
    unsigned phi = 1;
    std::vector<Integer> phi_poly;  // Phi_m
    // rows[t] = x^(phi+t) reduced mod Phi_m, for phi+t in [phi, m-1].
    std::vector<std::vector<Rational>> rows;
};

const ConductorData& conductor_data(unsigned m) {
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<ConductorData>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;

    auto data = std::make_unique<ConductorData>();
    data->m = m;
    data->phi = euler_phi(m);
    data->phi_poly = cyclotomic_polynomial(m);

    const unsigned phi = data->phi;
    // x^phi = -(low part of Phi_m); each further row shifts and re-reduces.
    std::vector<Rational> row(phi);
    for (unsigned k = 0; k < phi; ++k) row[k] = Rational(-data->phi_poly[k]);
    if (m > phi) data->rows.push_back(row);
    for (unsigned e = phi + 1; e < m; ++e) {
        std::vector<Rational> next(phi, Rational(0));
        // multiply previous row by x
        Rational top = row[phi - 1];
        for (unsigned k = phi; k-- > 1;) next[k] = row[k - 1];
        next[0] = 0;
        if (top != 0)
            for (unsigned k = 0; k < phi; ++k) next[k] += top * Rational(-data->phi_poly[k]);
        data->rows.push_back(next);
        row = std::move(next);
    }
    auto& slot = cache[m];
    slot = std::move(data);
    return *slot;
}

// Reduce a raw coefficient vector of length m (exponents already folded
// mod m) to the canonical phi-length form.
std::vector<Rational> reduce_raw(const ConductorData& cd, std::vector<Rational>& raw) {
    for (unsigned e = cd.m; e-- > cd.phi;) {
        if (raw[e] == 0) continue;
        const auto& row = cd.rows[e - cd.phi];
        for (unsigned k = 0; k < cd.phi; ++k)
            if (row[k] != 0) raw[k] += raw[e] * row[k];
        raw[e] = 0;
    }
    raw.resize(cd.phi);
    return std::move(raw);
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(unsigned m) {
    if (m == 0) throw RangeError("cyclotomic_polynomial(0)");
    // Phi_d for all divisors d of m, ascending, by repeated exact division.
    std::map<unsigned, std::vector<Integer>> phi;
    for (unsigned d : divisors(m)) {
        std::vector<Integer> num(d + 1, Integer(0));  // x^d - 1
        num[0] = -1;
        num[d] = 1;
        std::vector<Integer> cur = num;
        for (unsigned e : divisors(d))
            if (e != d) cur = poly_div_exact(cur, phi.at(e));
        phi[d] = std::move(cur);
    }
    return phi.at(m);
}

Cyclotomic Cyclotomic::root_of_unity(unsigned m, long k) {
    if (m == 0) throw RangeError("root_of_unity: conductor must be positive");
    const auto& cd = conductor_data(m);
    long e = k % static_cast<long>(m);
    if (e < 0) e += m;
    std::vector<Rational> raw(m, Rational(0));
    raw[static_cast<size_t>(e)] = 1;
    Cyclotomic out;
    out.m_ = m;
    out.coeffs_ = reduce_raw(cd, raw);
    return out;
}

Cyclotomic Cyclotomic::from_root_sum(unsigned m,
                                     const std::vector<std::pair<long, Rational>>& terms) {
    if (m == 0) throw RangeError("from_root_sum: conductor must be positive");
    const auto& cd = conductor_data(m);
    std::vector<Rational> raw(m, Rational(0));
    for (const auto& [e, c] : terms) {
        long k = e % static_cast<long>(m);
        if (k < 0) k += m;
        raw[static_cast<size_t>(k)] += c;
    }
    Cyclotomic out;
    out.m_ = m;
    out.coeffs_ = reduce_raw(cd, raw);
    return out;
}

Cyclotomic Cyclotomic::from_coeffs(unsigned m, std::vector<Rational> coeffs) {
    const auto& cd = conductor_data(m);
    if (coeffs.size() != cd.phi)
        throw RangeError("from_coeffs: expected phi(m) coefficients");
    Cyclotomic out;
    out.m_ = m;
    out.coeffs_ = std::move(coeffs);
    return out;
}

bool Cyclotomic::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c == 0; });
}

bool Cyclotomic::is_rational() const {
    for (size_t k = 1; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return false;
    return true;
}

Cyclotomic Cyclotomic::lifted(unsigned target) const {
    if (target == m_) return *this;
    if (target == 0 || target % m_ != 0)
        throw ConductorMismatch("lift: " + std::to_string(m_) + " does not divide " +
                                std::to_string(target));
    const auto& cd = conductor_data(target);
    const unsigned stride = target / m_;
    std::vector<Rational> raw(target, Rational(0));
    for (size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) raw[(k * stride) % target] += coeffs_[k];
    Cyclotomic out;
    out.m_ = target;
    out.coeffs_ = reduce_raw(cd, raw);
    return out;
}

namespace {

// Aligns operands: equal conductors pass through, a conductor-1 operand is
// embedded, anything else is the caller's job.
std::pair<Cyclotomic, Cyclotomic> align(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor() == b.conductor()) return {a, b};
    if (a.conductor() == 1) return {a.lifted(b.conductor()), b};
    if (b.conductor() == 1) return {a, b.lifted(a.conductor())};
    throw ConductorMismatch("conductors " + std::to_string(a.conductor()) + " and " +
                            std::to_string(b.conductor()) + "; lift to a common conductor first");
}

}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = align(a, b);
    std::vector<Rational> c = x.coeffs_;
    for (size_t k = 0; k < c.size(); ++k) c[k] += y.coeffs_[k];
    return Cyclotomic::from_coeffs(x.m_, std::move(c));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = align(a, b);
    std::vector<Rational> c = x.coeffs_;
    for (size_t k = 0; k < c.size(); ++k) c[k] -= y.coeffs_[k];
    return Cyclotomic::from_coeffs(x.m_, std::move(c));
}

Cyclotomic Cyclotomic::operator-() const {
    std::vector<Rational> c = coeffs_;
    for (auto& v : c) v = -v;
    return from_coeffs(m_, std::move(c));
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = align(a, b);
    const unsigned m = x.m_;
    const auto& cd = conductor_data(m);
    std::vector<Rational> raw(m, Rational(0));
    // Sparse-aware cyclic convolution; x^m folds to 1 before the Phi_m pass.
    for (size_t i = 0; i < x.coeffs_.size(); ++i) {
        if (x.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < y.coeffs_.size(); ++j) {
            if (y.coeffs_[j] == 0) continue;
            raw[(i + j) % m] += x.coeffs_[i] * y.coeffs_[j];
        }
    }
    Cyclotomic out;
    out.m_ = m;
    out.coeffs_ = reduce_raw(cd, raw);
    return out;
}

Cyclotomic operator*(const Rational& c, const Cyclotomic& a) {
    std::vector<Rational> out = a.coeffs();
    for (auto& v : out) v *= c;
    return Cyclotomic::from_coeffs(a.conductor(), std::move(out));
}

Cyclotomic Cyclotomic::conj() const {
    const auto& cd = conductor_data(m_);
    std::vector<Rational> raw(m_, Rational(0));
    for (size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) raw[(m_ - k) % m_] += coeffs_[k];
    Cyclotomic out;
    out.m_ = m_;
    out.coeffs_ = reduce_raw(cd, raw);
    return out;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw ZeroVector("inverse of zero cyclotomic");
    if (is_rational()) {
        std::vector<Rational> c(coeffs_.size(), Rational(0));
        c[0] = 1 / coeffs_[0];
        return from_coeffs(m_, std::move(c));
    }
    // Extended Euclid in Q[x] against Phi_m: u*a + v*Phi = gcd = const.
    const auto& cd = conductor_data(m_);
    using Poly = std::vector<Rational>;
    auto deg = [](const Poly& p) {
        for (size_t k = p.size(); k-- > 0;)
            if (p[k] != 0) return static_cast<long>(k);
        return -1L;
    };
    Poly r0(cd.phi_poly.size());
    for (size_t k = 0; k < r0.size(); ++k) r0[k] = Rational(cd.phi_poly[k]);
    Poly r1(coeffs_.begin(), coeffs_.end());
    Poly u0{Rational(0)}, u1{Rational(1)};  // coefficients of `a` in r0, r1
    while (true) {
        long d1 = deg(r1);
        if (d1 < 0) throw std::logic_error("cyclotomic inverse: gcd chain hit zero");
        if (d1 == 0) break;
        long d0 = deg(r0);
        // r0 -= (lead(r0)/lead(r1)) x^(d0-d1) * r1, repeated: full poly mod.
        Poly q(static_cast<size_t>(d0 - d1 + 1), Rational(0));
        Poly rem = r0;
        for (long k = d0; k >= d1; --k) {
            if (rem[static_cast<size_t>(k)] == 0) continue;
            Rational f = rem[static_cast<size_t>(k)] / r1[static_cast<size_t>(d1)];
            q[static_cast<size_t>(k - d1)] = f;
            for (long i = 0; i <= d1; ++i)
                rem[static_cast<size_t>(k - d1 + i)] -= f * r1[static_cast<size_t>(i)];
        }
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (rem.empty()) rem.push_back(Rational(0));
        // u_next = u0 - q*u1
        Poly qu(q.size() + u1.size() - 1, Rational(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < u1.size(); ++j) qu[i + j] += q[i] * u1[j];
        }
        Poly un(std::max(u0.size(), qu.size()), Rational(0));
        for (size_t k = 0; k < u0.size(); ++k) un[k] += u0[k];
        for (size_t k = 0; k < qu.size(); ++k) un[k] -= qu[k];
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(un);
    }
    // r1 is a nonzero constant: inverse = u1 / r1, reduced mod Phi_m.
    Rational c = r1[0];
    std::vector<Rational> raw(m_, Rational(0));
    for (size_t k = 0; k < u1.size() && k < static_cast<size_t>(m_); ++k)
        if (u1[k] != 0) raw[k] = u1[k] / c;
    Cyclotomic out;
    out.m_ = m_;
    out.coeffs_ = reduce_raw(cd, raw);
    return out;
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = align(a, b);
    return x * y.inverse();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.m_ == b.m_) return a.coeffs_ == b.coeffs_;
    unsigned l = std::lcm(a.m_, b.m_);
    return a.lifted(l).coeffs_ == b.lifted(l).coeffs_;
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            os << to_string(mag);
        } else {
            if (mag != 1) os << to_string(mag) << " ";
            os << "z" << m_;
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::pair<double, double> Cyclotomic::approx() const {
    double re = 0.0, im = 0.0;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        double c = coeffs_[k].get_d();
        double ang = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(m_);
        re += c * std::cos(ang);
        im += c * std::sin(ang);
    }
    return {re, im};
}

Cyclotomic cyc_add(const Cyclotomic& a, const Cyclotomic& b) { return a + b; }
Cyclotomic cyc_sub(const Cyclotomic& a, const Cyclotomic& b) { return a - b; }
Cyclotomic cyc_mul(const Cyclotomic& a, const Cyclotomic& b) { return a * b; }
Cyclotomic cyc_neg(const Cyclotomic& a) { return -a; }
Cyclotomic cyc_conj(const Cyclotomic& a) { return a.conj(); }
Cyclotomic cyc_inv(const Cyclotomic& a) { return a.inverse(); }

Cyclotomic root_of_unity(unsigned m, long k) { return Cyclotomic::root_of_unity(m, k); }

std::optional<Rational> to_rational(const Cyclotomic& a) {
    if (!a.is_rational()) return std::nullopt;
    return a.coeffs()[0];
}

}  // namespace qring
