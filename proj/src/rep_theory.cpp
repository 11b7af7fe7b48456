#include "qring/rep_theory.hpp"

#include <algorithm>
#include <string>

#include "qring/errors.hpp"

namespace qring {

std::string parity_str(OrbitParity p) {
    switch (p) {
        case OrbitParity::even: return "even";
        case OrbitParity::odd: return "odd";
        default: return "mixed";
    }
}

std::string IrreducibleLabel::str() const {
    switch (kind) {
        case Kind::trivial: return "triv";
        case Kind::ref: return "ref";
        case Kind::one_dim_other: return "lin_" + std::to_string(index);
        case Kind::two_dim: return "psi_" + std::to_string(index);
        default: return "unlabeled";
    }
}

unsigned label_rank(const IrreducibleLabel& l) {
    switch (l.kind) {
        case IrreducibleLabel::Kind::trivial: return 0;
        case IrreducibleLabel::Kind::ref: return 1;
        case IrreducibleLabel::Kind::one_dim_other: return 2 + l.index;
        case IrreducibleLabel::Kind::two_dim: return 1000 + l.index;
        default: return 100000;
    }
}

Character::Character(GroupPtr group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
    if (!group_ || values_.size() != group_->order())
        throw RangeError("Character: need one value per group element");
}

const Cyclotomic& Character::value(std::size_t element_index) const {
    if (element_index >= values_.size()) throw RangeError("Character: element index out of range");
    return values_[element_index];
}

Rational Character::degree() const {
    const auto r = to_rational(values_[0]);  // identity sits at index 0
    if (!r) throw NonRationalResult("character value at the identity is not rational");
    return *r;
}

Mat2 mat2_identity() {
    return Mat2{Cyclotomic(1), Cyclotomic(0), Cyclotomic(0), Cyclotomic(1)};
}

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
    return Mat2{a.e00 * b.e00 + a.e01 * b.e10, a.e00 * b.e01 + a.e01 * b.e11,
                a.e10 * b.e00 + a.e11 * b.e10, a.e10 * b.e01 + a.e11 * b.e11};
}

Cyclotomic mat2_trace(const Mat2& a) { return a.e00 + a.e11; }

bool same_group(const GroupPtr& a, const GroupPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->degree() != b->degree() || a->order() != b->order()) return false;
    for (std::size_t i = 0; i < a->order(); ++i)
        if (a->element(i) != b->element(i)) return false;
    return true;
}

Character permutation_character(GroupPtr g) {
    if (!g) throw RangeError("permutation_character: null group");
    std::vector<Cyclotomic> values;
    values.reserve(g->order());
    for (const Permutation& p : g->elements()) {
        long fixed = 0;
        for (std::uint32_t i = 0; i < p.degree(); ++i)
            if (p(i) == i) ++fixed;
        values.push_back(Cyclotomic(fixed));
    }
    return Character(std::move(g), std::move(values));
}

namespace {

/// chi(r^k s^e) for the linear character with r -> r_sign, s -> s_sign.
std::vector<Cyclotomic> linear_values(const std::vector<std::pair<unsigned, unsigned>>& fact,
                                      int r_sign, int s_sign) {
    std::vector<Cyclotomic> values;
    values.reserve(fact.size());
    for (const auto& [k, e] : fact) {
        int v = (r_sign < 0 && (k & 1u)) ? -1 : 1;
        if (s_sign < 0 && e) v = -v;
        values.push_back(Cyclotomic(static_cast<long>(v)));
    }
    return values;
}

unsigned two_dim_count(unsigned m) { return (m % 2 == 1) ? (m - 1) / 2 : m / 2 - 1; }

}  // namespace

std::vector<LabeledCharacter> dihedral_irreducible_characters(GroupPtr g,
                                                              const DihedralWitness& witness,
                                                              OrbitParity parity) {
    if (!g) throw RangeError("dihedral_irreducible_characters: null group");
    const unsigned m = witness.m;
    const auto fact = witness_factorization(*g, witness);

    std::vector<LabeledCharacter> out;

    IrreducibleLabel triv{IrreducibleLabel::Kind::trivial, 0, 1};
    out.push_back({triv, Character(g, linear_values(fact, +1, +1))});

    if (m % 2 == 1) {
        // One further linear character: r -> 1, s -> -1.
        IrreducibleLabel lin{IrreducibleLabel::Kind::one_dim_other, 1, 1};
        out.push_back({lin, Character(g, linear_values(fact, +1, -1))});
    } else {
        // Three further linear characters; the one matching the orbit's
        // alternating-vector sign pattern is "ref" (r -> -1 always; s -> +1
        // on an even orbit, s -> -1 on an odd orbit).
        const int ref_s = parity == OrbitParity::even ? +1 : -1;
        unsigned next_other = 1;
        for (const auto& [r_sign, s_sign] :
             {std::pair{+1, -1}, std::pair{-1, +1}, std::pair{-1, -1}}) {
            IrreducibleLabel label;
            if (parity != OrbitParity::mixed && r_sign == -1 && s_sign == ref_s)
                label = IrreducibleLabel{IrreducibleLabel::Kind::ref, 0, 1};
            else
                label = IrreducibleLabel{IrreducibleLabel::Kind::one_dim_other, next_other++, 1};
            out.push_back({label, Character(g, linear_values(fact, r_sign, s_sign))});
        }
    }

    for (unsigned j = 1; j <= two_dim_count(m); ++j) {
        std::vector<Cyclotomic> values;
        values.reserve(fact.size());
        for (const auto& [k, e] : fact) {
            if (e)
                values.push_back(Cyclotomic(0));
            else
                values.push_back(root_of_unity(m, static_cast<long>(j) * k) +
                                 root_of_unity(m, -static_cast<long>(j) * k));
        }
        IrreducibleLabel label{IrreducibleLabel::Kind::two_dim, j, 2};
        out.push_back({label, Character(g, std::move(values))});
    }

    std::sort(out.begin(), out.end(), [](const LabeledCharacter& a, const LabeledCharacter& b) {
        return label_rank(a.label) < label_rank(b.label);
    });
    return out;
}

RepMatrices psi_representation(GroupPtr g, const DihedralWitness& witness, unsigned j) {
    if (!g) throw RangeError("psi_representation: null group");
    const unsigned m = witness.m;
    if (j < 1 || j > two_dim_count(m))
        throw RangeError("psi_representation: j = " + std::to_string(j) +
                         " outside the valid range for m = " + std::to_string(m));
    const auto fact = witness_factorization(*g, witness);

    RepMatrices rep;
    rep.group = g;
    rep.j = j;
    rep.matrices.reserve(fact.size());
    const Cyclotomic zero{Rational(0)};
    for (const auto& [k, e] : fact) {
        const Cyclotomic a = root_of_unity(m, static_cast<long>(j) * k);
        const Cyclotomic b = root_of_unity(m, -static_cast<long>(j) * k);
        // psi(r^k) = diag(a, b); right-multiplying by psi(s) swaps columns.
        if (e)
            rep.matrices.push_back(Mat2{zero, a, b, zero});
        else
            rep.matrices.push_back(Mat2{a, zero, zero, b});
    }
    return rep;
}

Rational inner_product(const Character& a, const Character& b) {
    if (!same_group(a.group(), b.group()))
        throw SameGroupRequired("inner_product: characters live on different groups");
    Cyclotomic sum;
    for (std::size_t i = 0; i < a.size(); ++i) sum = sum + a.value(i) * b.value(i).conj();
    const Cyclotomic scaled =
        Rational(1, static_cast<unsigned long>(a.size())) * sum;
    const auto r = to_rational(scaled);
    if (!r)
        throw NonRationalResult("character inner product did not reduce to a rational: " +
                                scaled.str());
    return *r;
}

std::vector<std::pair<IrreducibleLabel, unsigned>> multiplicities(
    const Character& pchar, const std::vector<LabeledCharacter>& irreducibles) {
    std::vector<std::pair<IrreducibleLabel, unsigned>> out;
    Rational weighted_total(0);
    for (const auto& irr : irreducibles) {
        const Rational mult = inner_product(pchar, irr.character);
        if (!is_integer(mult) || mult < 0)
            throw NonIntegerMultiplicity("multiplicity of " + irr.label.str() +
                                         " is not a nonnegative integer: " + to_string(mult));
        const unsigned value = static_cast<unsigned>(mult.get_num().get_ui());
        out.emplace_back(irr.label, value);
        weighted_total += mult * Rational(irr.label.degree);
    }
    if (weighted_total != pchar.degree())
        throw NonIntegerMultiplicity(
            "multiplicities weighted by degree sum to " + to_string(weighted_total) +
            ", expected the permutation character degree " + to_string(pchar.degree()));
    return out;
}

std::vector<LabeledCharacter> abelian_linear_characters(GroupPtr g) {
    if (!g) throw RangeError("abelian_linear_characters: null group");
    if (!g->is_abelian())
        throw UnsupportedGroup("abelian_linear_characters: group is not abelian");

    const std::vector<Permutation>& gens = g->generators();
    const std::size_t order = g->order();

    std::vector<unsigned> gen_order;
    std::vector<std::size_t> gen_index;
    unsigned long tuple_count = 1;
    for (const Permutation& p : gens) {
        gen_order.push_back(element_order(p));
        gen_index.push_back(g->index_of(p));
        tuple_count *= gen_order.back();
        if (tuple_count > (1ul << 20))
            throw UnsupportedGroup("abelian_linear_characters: generator tuple space too large");
    }

    std::vector<LabeledCharacter> out;
    unsigned next_other = 1;
    // Candidate characters: generator p_i maps to zeta_{o_i}^{c_i}. Propagate
    // over the whole group by BFS along right multiplication; contradictions
    // eliminate the candidate.
    for (unsigned long tuple = 0; tuple < tuple_count; ++tuple) {
        std::vector<unsigned> c(gens.size());
        unsigned long rest = tuple;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            c[i] = static_cast<unsigned>(rest % gen_order[i]);
            rest /= gen_order[i];
        }

        std::vector<Cyclotomic> values(order);
        std::vector<bool> known(order, false);
        values[0] = Cyclotomic(1);
        known[0] = true;
        bool consistent = true;
        std::vector<std::size_t> queue{0};
        for (std::size_t head = 0; head < queue.size() && consistent; ++head) {
            const std::size_t e = queue[head];
            for (std::size_t i = 0; i < gens.size() && consistent; ++i) {
                const std::size_t f = g->product_index(e, gen_index[i]);
                const Cyclotomic v =
                    values[e] * root_of_unity(gen_order[i], static_cast<long>(c[i]));
                if (!known[f]) {
                    values[f] = v;
                    known[f] = true;
                    queue.push_back(f);
                } else if (values[f] != v) {
                    consistent = false;
                }
            }
        }
        if (!consistent) continue;

        bool is_trivial = true;
        for (const Cyclotomic& v : values)
            if (v != Cyclotomic(1)) {
                is_trivial = false;
                break;
            }
        IrreducibleLabel label = is_trivial
                                     ? IrreducibleLabel{IrreducibleLabel::Kind::trivial, 0, 1}
                                     : IrreducibleLabel{IrreducibleLabel::Kind::one_dim_other,
                                                        next_other++, 1};
        out.push_back({label, Character(g, std::move(values))});
    }

    if (out.size() != order)
        throw UnsupportedGroup("abelian_linear_characters: found " + std::to_string(out.size()) +
                               " characters for a group of order " + std::to_string(order));
    std::sort(out.begin(), out.end(), [](const LabeledCharacter& a, const LabeledCharacter& b) {
        return label_rank(a.label) < label_rank(b.label);
    });
    return out;
}

CycMatrix isotypic_projection(GroupPtr g, const Character& chi) {
    if (!g) throw RangeError("isotypic_projection: null group");
    const std::uint32_t d = g->degree();
    const Rational scale = chi.degree() / Rational(static_cast<unsigned long>(g->order()));
    CycMatrix p(d, CycVec(d));
    for (std::size_t i = 0; i < g->order(); ++i) {
        const Cyclotomic coeff = scale * chi.value(i).conj();
        if (coeff.is_zero()) continue;
        const Permutation& perm = g->element(i);
        for (std::uint32_t b = 0; b < d; ++b) p[perm(b)][b] = p[perm(b)][b] + coeff;
    }
    return p;
}

CycVec isotypic_column(GroupPtr g, const Character& chi, std::uint32_t b) {
    if (!g) throw RangeError("isotypic_column: null group");
    if (b >= g->degree()) throw RangeError("isotypic_column: basis index out of range");
    const Rational scale = chi.degree() / Rational(static_cast<unsigned long>(g->order()));
    CycVec col(g->degree());
    for (std::size_t i = 0; i < g->order(); ++i) {
        const Cyclotomic coeff = scale * chi.value(i).conj();
        if (coeff.is_zero()) continue;
        const std::uint32_t target = g->element(i)(b);
        col[target] = col[target] + coeff;
    }
    return col;
}

}  // namespace qring
