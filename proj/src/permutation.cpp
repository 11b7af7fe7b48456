#include "qring/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qring/errors.hpp"

namespace qring {

Permutation::Permutation(std::uint32_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), 0u);
}

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::uint32_t v : images_) {
        if (v >= images_.size() || seen[v])
            throw RangeError("permutation image array is not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::from_cycles(std::uint32_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycles) {
    Permutation out(degree);
    for (const auto& cyc : cycles) {
        if (cyc.size() < 2) continue;
        Permutation c(degree);
        for (size_t i = 0; i < cyc.size(); ++i) {
            if (cyc[i] >= degree) throw RangeError("cycle point out of range");
            c.images_[cyc[i]] = cyc[(i + 1) % cyc.size()];
        }
        out = compose(c, out);  // compose revalidates, catching bad cycles
    }
    return out;
}

bool Permutation::is_identity() const {
    for (std::uint32_t k = 0; k < degree(); ++k)
        if (images_[k] != k) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<std::uint32_t> inv(images_.size());
    for (std::uint32_t k = 0; k < degree(); ++k) inv[images_[k]] = k;
    Permutation out(static_cast<std::uint32_t>(inv.size()));
    out.images_ = std::move(inv);
    return out;
}

std::string Permutation::str() const {
    std::ostringstream os;
    std::vector<bool> done(degree(), false);
    bool any = false;
    for (std::uint32_t start = 0; start < degree(); ++start) {
        if (done[start] || images_[start] == start) continue;
        os << "(";
        std::uint32_t k = start;
        bool first = true;
        while (!done[k]) {
            done[k] = true;
            if (!first) os << " ";
            os << k;
            first = false;
            k = images_[k];
        }
        os << ")";
        any = true;
    }
    if (!any) os << "()";
    return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw DegreeMismatch("compose: degrees " + std::to_string(p.degree()) + " vs " +
                             std::to_string(q.degree()));
    std::vector<std::uint32_t> img(p.degree());
    for (std::uint32_t k = 0; k < p.degree(); ++k) img[k] = p(q(k));
    return Permutation(std::move(img));
}

Permutation power(const Permutation& p, long e) {
    Permutation base = e < 0 ? p.inverse() : p;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Permutation acc(p.degree());
    while (n > 0) {
        if (n & 1) acc = compose(acc, base);
        base = compose(base, base);
        n >>= 1;
    }
    return acc;
}

unsigned element_order(const Permutation& p) {
    unsigned ord = 1;
    Permutation cur = p;
    while (!cur.is_identity()) {
        cur = compose(cur, p);
        ++ord;
    }
    return ord;
}

std::vector<unsigned> cycle_type(const Permutation& p) {
    std::vector<unsigned> lens;
    std::vector<bool> done(p.degree(), false);
    for (std::uint32_t start = 0; start < p.degree(); ++start) {
        if (done[start]) continue;
        unsigned len = 0;
        std::uint32_t k = start;
        while (!done[k]) {
            done[k] = true;
            ++len;
            k = p(k);
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    return lens;
}

}  // namespace qring
