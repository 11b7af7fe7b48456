#include "qring/quandle_ring.hpp"

#include <algorithm>
#include <set>

#include "qring/errors.hpp"

namespace qring {

namespace {

void require_same_quandle(const RingElement& a, const RingElement& b, const char* op) {
    if (!a.quandle || !b.quandle || !(*a.quandle == *b.quandle))
        throw QuandleMismatch(std::string(op) + ": operands belong to different quandles");
}

void require_valid(const RingElement& a, const char* op) {
    if (!a.quandle || a.coeffs.size() != a.quandle->order())
        throw RangeError(std::string(op) + ": coefficient count does not match quandle order");
}

}  // namespace

RingElement ring_zero(QuandlePtr q) {
    if (!q) throw RangeError("ring_zero: null quandle");
    const std::size_t n = q->order();
    return RingElement{std::move(q), std::vector<Rational>(n, Rational(0))};
}

RingElement basis_vector(QuandlePtr q, std::uint32_t i) {
    if (!q) throw RangeError("basis_vector: null quandle");
    if (i >= q->order()) throw RangeError("basis_vector: index out of range");
    RingElement out = ring_zero(std::move(q));
    out.coeffs[i] = 1;
    return out;
}

bool ring_is_zero(const RingElement& a) {
    for (const Rational& c : a.coeffs)
        if (c != 0) return false;
    return true;
}

RingElement ring_add(const RingElement& a, const RingElement& b) {
    require_same_quandle(a, b, "ring_add");
    RingElement out = a;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
    return out;
}

RingElement ring_sub(const RingElement& a, const RingElement& b) {
    require_same_quandle(a, b, "ring_sub");
    RingElement out = a;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
    return out;
}

RingElement ring_scale(const Rational& c, const RingElement& a) {
    RingElement out = a;
    for (Rational& x : out.coeffs) x *= c;
    return out;
}

RingElement ring_mul(const RingElement& a, const RingElement& b) {
    require_same_quandle(a, b, "ring_mul");
    require_valid(a, "ring_mul");
    RingElement out = ring_zero(a.quandle);
    const Quandle& q = *a.quandle;
    for (std::uint32_t i = 0; i < q.order(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::uint32_t j = 0; j < q.order(); ++j) {
            if (b.coeffs[j] == 0) continue;
            out.coeffs[q.op(i, j)] += a.coeffs[i] * b.coeffs[j];
        }
    }
    return out;
}

RingElement act(const RingElement& a, std::uint32_t x) {
    require_valid(a, "act");
    const Quandle& q = *a.quandle;
    if (x >= q.order()) throw RangeError("act: element out of range");
    RingElement out = ring_zero(a.quandle);
    for (std::uint32_t i = 0; i < q.order(); ++i) out.coeffs[q.op(i, x)] = a.coeffs[i];
    return out;
}

RingElement v_triv(QuandlePtr q, const std::vector<std::uint32_t>& orbit) {
    if (orbit.empty()) throw RangeError("v_triv: empty orbit");
    RingElement out = ring_zero(std::move(q));
    for (std::uint32_t i : orbit) {
        if (i >= out.coeffs.size()) throw RangeError("v_triv: orbit element out of range");
        out.coeffs[i] = 1;
    }
    return out;
}

RingElement v_ref(QuandlePtr q, const std::vector<std::uint32_t>& orbit) {
    if (!q) throw RangeError("v_ref: null quandle");
    const std::uint32_t n = q->order();
    if (!q->is_dihedral())
        throw QuandleMismatch("v_ref is defined for dihedral quandles only");
    if (n % 4 != 0)
        throw NotDivisibleBy4("v_ref requires order divisible by 4, got " + std::to_string(n));
    if (orbit.empty()) throw RangeError("v_ref: empty orbit");

    std::vector<std::uint32_t> sorted = orbit;
    std::sort(sorted.begin(), sorted.end());
    RingElement out = ring_zero(std::move(q));
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (sorted[k] >= n) throw RangeError("v_ref: orbit element out of range");
        out.coeffs[sorted[k]] = (k % 2 == 0) ? 1 : -1;
    }
    return out;
}

namespace {

/// One signed term: "v3", "- v3", "+ 2 v3", "1/2 v3", used by both renderers.
void append_term(std::string& out, const std::string& coeff_abs, bool negative, bool is_one,
                 std::uint32_t i) {
    if (out.empty()) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    if (!is_one) {
        out += coeff_abs;
        out += " ";
    }
    out += "v" + std::to_string(i);
}

}  // namespace

std::string ring_str(const RingElement& a) {
    std::string out;
    for (std::uint32_t i = 0; i < a.coeffs.size(); ++i) {
        const Rational& c = a.coeffs[i];
        if (c == 0) continue;
        const Rational mag = c < 0 ? Rational(-c) : c;
        append_term(out, to_string(mag), c < 0, mag == 1, i);
    }
    return out.empty() ? "0" : out;
}

std::string cyc_vec_str(const CycVec& v) {
    std::string out;
    for (std::uint32_t i = 0; i < v.size(); ++i) {
        const Cyclotomic& c = v[i];
        if (c.is_zero()) continue;
        if (const auto r = to_rational(c)) {
            const Rational mag = *r < 0 ? Rational(-*r) : *r;
            append_term(out, to_string(mag), *r < 0, mag == 1, i);
        } else {
            append_term(out, "(" + c.str() + ")", false, false, i);
        }
    }
    return out.empty() ? "0" : out;
}

bool operator==(const RingElement& a, const RingElement& b) {
    if (!a.quandle || !b.quandle) return a.quandle == b.quandle && a.coeffs == b.coeffs;
    return *a.quandle == *b.quandle && a.coeffs == b.coeffs;
}

bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

OrbitParity orbit_parity(const std::vector<std::uint32_t>& orbit) {
    bool any_even = false, any_odd = false;
    for (std::uint32_t i : orbit) (i % 2 == 0 ? any_even : any_odd) = true;
    if (any_even && any_odd) return OrbitParity::mixed;
    return any_odd ? OrbitParity::odd : OrbitParity::even;
}

CycVec to_cyc_vec(const RingElement& a) {
    CycVec out;
    out.reserve(a.coeffs.size());
    for (const Rational& c : a.coeffs) out.push_back(Cyclotomic(c));
    return out;
}

std::vector<Permutation> distinct_translations(const Quandle& q) {
    std::vector<Permutation> out;
    std::set<std::vector<std::uint32_t>> seen;
    for (std::uint32_t x = 0; x < q.order(); ++x) {
        Permutation p = q.right_translation(x);
        if (seen.insert(p.images()).second) out.push_back(std::move(p));
    }
    return out;
}

SubmoduleBasis cyclic_module(const QuandlePtr& q, const RingElement& v) {
    if (!q) throw RangeError("cyclic_module: null quandle");
    if (!v.quandle || !(*v.quandle == *q))
        throw QuandleMismatch("cyclic_module: element belongs to a different quandle");
    if (ring_is_zero(v)) throw ZeroVector("cyclic_module: zero element generates nothing");

    const EchelonBasis basis =
        invariant_closure(q->order(), {to_cyc_vec(v)}, distinct_translations(*q));

    // Orbits whose elements carry any of the module's support.
    std::set<std::uint32_t> support_orbit;
    const OrbitDecomposition od = q->orbits();
    for (const auto& orbit : od.orbits) {
        bool meets = false;
        for (const CycVec& row : basis.rows()) {
            for (std::uint32_t i : orbit)
                if (!row[i].is_zero()) {
                    meets = true;
                    break;
                }
            if (meets) break;
        }
        if (meets) support_orbit.insert(orbit.begin(), orbit.end());
    }

    SubmoduleBasis out;
    out.orbit.assign(support_orbit.begin(), support_orbit.end());
    out.parity = orbit_parity(out.orbit);
    out.vectors = basis.rows();
    return out;
}

}  // namespace qring
