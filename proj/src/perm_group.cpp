#include "qring/perm_group.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "qring/errors.hpp"

namespace qring {

GroupPtr PermutationGroup::closure(const std::vector<Permutation>& generators) {
    if (generators.empty()) throw DegreeMismatch("closure: empty generator list");
    const std::uint32_t d = generators.front().degree();
    for (const auto& g : generators)
        if (g.degree() != d) throw DegreeMismatch("closure: generators of unequal degree");

    auto group = std::shared_ptr<PermutationGroup>(new PermutationGroup());
    group->degree_ = d;
    for (const auto& g : generators)
        if (std::find(group->generators_.begin(), group->generators_.end(), g) ==
            group->generators_.end())
            group->generators_.push_back(g);

    std::map<std::vector<std::uint32_t>, std::size_t> seen;
    std::queue<std::size_t> todo;
    Permutation id(d);
    group->elements_.push_back(id);
    seen.emplace(id.images(), 0);
    todo.push(0);
    while (!todo.empty()) {
        std::size_t i = todo.front();
        todo.pop();
        for (const auto& s : group->generators_) {
            Permutation next = compose(group->elements_[i], s);
            auto [it, inserted] = seen.emplace(next.images(), group->elements_.size());
            if (inserted) {
                group->elements_.push_back(std::move(next));
                todo.push(group->elements_.size() - 1);
            }
        }
    }
    return group;
}

std::size_t PermutationGroup::index_of(const Permutation& p) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i] == p) return i;
    throw RangeError("permutation not in group");
}

bool PermutationGroup::contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    return std::find(elements_.begin(), elements_.end(), p) != elements_.end();
}

std::size_t PermutationGroup::product_index(std::size_t i, std::size_t j) const {
    return index_of(compose(elements_[i], elements_[j]));
}

std::size_t PermutationGroup::inverse_index(std::size_t i) const {
    return index_of(elements_[i].inverse());
}

std::vector<std::vector<std::size_t>> PermutationGroup::conjugacy_classes() const {
    std::vector<std::vector<std::size_t>> classes;
    std::vector<bool> assigned(elements_.size(), false);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (assigned[i]) continue;
        std::set<std::size_t> cls;
        for (const auto& g : elements_) {
            Permutation conj = compose(compose(g, elements_[i]), g.inverse());
            cls.insert(index_of(conj));
        }
        for (std::size_t k : cls) assigned[k] = true;
        classes.emplace_back(cls.begin(), cls.end());
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
}

bool PermutationGroup::is_abelian() const {
    for (const auto& a : generators_)
        for (const auto& b : generators_)
            if (compose(a, b) != compose(b, a)) return false;
    return true;
}

namespace {

bool witness_valid(const PermutationGroup& g, const Permutation& r, const Permutation& s,
                   unsigned m) {
    if (element_order(r) != m) return false;
    if (!compose(s, s).is_identity() || s.is_identity()) return false;
    if (compose(compose(s, r), s.inverse()) != power(r, -1)) return false;
    auto sub = PermutationGroup::closure({r, s});
    return sub->order() == g.order();
}

}  // namespace

std::optional<DihedralWitness> dihedral_witness(const PermutationGroup& g) {
    if (g.order() < 6 || g.order() % 2 != 0) return std::nullopt;
    const unsigned m = static_cast<unsigned>(g.order() / 2);

    // Distinguished-generator attempt: r = g1 o g0, s = g0. Generator lists
    // are deduplicated in discovery order, so for groups built from quandle
    // restrictions this is the S_1 S_0 / S_0 identification.
    const auto& gens = g.generators();
    if (gens.size() >= 2) {
        Permutation r = compose(gens[1], gens[0]);
        if (witness_valid(g, r, gens[0], m)) return DihedralWitness{r, gens[0], m};
    }

    for (const auto& r : g.elements()) {
        if (element_order(r) != m) continue;
        for (const auto& s : g.elements()) {
            if (witness_valid(g, r, s, m)) return DihedralWitness{r, s, m};
        }
    }
    return std::nullopt;
}

std::vector<std::pair<unsigned, unsigned>> witness_factorization(const PermutationGroup& g,
                                                                 const DihedralWitness& w) {
    std::vector<std::pair<unsigned, unsigned>> out(g.order(), {0, 0});
    std::vector<bool> found(g.order(), false);
    Permutation rk(g.degree());
    for (unsigned k = 0; k < w.m; ++k) {
        for (unsigned e = 0; e < 2; ++e) {
            Permutation el = e == 0 ? rk : compose(rk, w.s);
            std::size_t idx = g.index_of(el);
            if (found[idx]) throw BadWitness("witness covers an element twice");
            out[idx] = {k, e};
            found[idx] = true;
        }
        rk = compose(rk, w.r);
    }
    for (bool f : found)
        if (!f) throw BadWitness("witness does not cover the group");
    return out;
}

}  // namespace qring
