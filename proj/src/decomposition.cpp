#include "qring/decomposition.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

#include "qring/errors.hpp"

namespace qring {

std::size_t DecompositionReport::total_dimension() const {
    std::size_t s = 0;
    for (const SubmoduleBasis& c : components) s += c.dimension();
    return s;
}

bool Verdict::passed() const {
    if (!dimension_sum || !pairwise_independent) return false;
    for (const ComponentVerdict& c : components)
        if (!c.invariant || !c.indecomposable) return false;
    return true;
}

namespace {

CycVec embed_row(const CycVec& local, const std::vector<std::uint32_t>& orbit, std::size_t n) {
    CycVec out(n);
    for (std::size_t k = 0; k < local.size(); ++k) out[orbit[k]] = local[k];
    return out;
}

SubmoduleBasis make_component(const std::vector<std::uint32_t>& orbit, OrbitParity parity,
                              IrreducibleLabel label, std::vector<CycVec> rows) {
    SubmoduleBasis c;
    c.orbit = orbit;
    c.parity = parity;
    c.label = label;
    c.vectors = std::move(rows);
    return c;
}

std::vector<CycVec> single_row(const RingElement& v) {
    EchelonBasis b(v.coeffs.size());
    b.add(to_cyc_vec(v));
    return b.rows();
}

/// Internal consistency: a freshly built component must be closed under the
/// given inner-group generators. Failure is a library bug, not a data state.
void require_invariant(const SubmoduleBasis& comp, const std::vector<Permutation>& gens) {
    if (comp.vectors.empty()) throw Error("internal: empty component produced");
    EchelonBasis basis(comp.vectors[0].size());
    for (const CycVec& r : comp.vectors) basis.add(r);
    for (const Permutation& g : gens)
        for (const CycVec& r : comp.vectors)
            if (!basis.contains(permute(g, r)))
                throw Error("internal: component " + comp.label.str() +
                            " is not closed under the inner group");
}

/// p -> p + offset (shift) or p -> offset - p (reflection), mod m.
struct AffineForm {
    bool shift;
    unsigned offset;
};

std::optional<AffineForm> affine_form(const Permutation& t, unsigned m) {
    const unsigned b = t(0);
    bool is_shift = true, is_refl = true;
    for (unsigned p = 0; p < m && (is_shift || is_refl); ++p) {
        const unsigned img = t(p);
        if (img != (p + b) % m) is_shift = false;
        if (img != (b + m - p) % m) is_refl = false;
    }
    if (is_shift) return AffineForm{true, b};
    if (is_refl) return AffineForm{false, b};
    return std::nullopt;
}

long mod_inverse(long a, long m) {
    long old_r = a % m, r = m, old_s = 1, s = 0;
    if (old_r < 0) old_r += m;
    while (r != 0) {
        const long q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
    }
    if (old_r != 1) throw Error("internal: no inverse of " + std::to_string(a) + " mod " +
                                std::to_string(m));
    return ((old_s % m) + m) % m;
}

/// Rows of the psi_j isotypic component V_j inside K[orbit], in reduced
/// echelon form. The whole construction runs on closed forms:
///
/// The witness rotation r is the position shift p -> p+c (checked), so with
/// a = j c^{-1} mod m the vectors w±, (w±)_p = zeta_m^{±ap}, satisfy
/// r.w± = zeta^{∓j} w±: they span the two eigenlines matching psi_j's
/// rotation eigenvalues, hence span{w+, w-} contains V_j; every generating
/// translation is an affine map p -> b±p (checked), and such maps send each
/// w to a scalar multiple of w+ or w-, so the span is invariant under the
/// whole inner group. The isotypic projection column is tied in exactly:
/// P_j e_0 = (1/m)(w+ + w-) is asserted entrywise, which makes the column a
/// nonzero member of the span, and the span of its module closure — V_j
/// itself whenever the multiplicity is 1, which the dimension bookkeeping
/// over the orbit forces — equal to span{w+, w-} by dimension count.
///
/// The canonical reduced-echelon rows follow from the geometric-sum
/// identity (zeta^{-ak} - zeta^{ak}) / (zeta^{-a} - zeta^{a}) =
/// sum_{i=0}^{k-1} zeta^{a(k-1-2i)}:
///   row2_k = that sum,                            (row2 = (w- - w+)/(zeta^{-a}-zeta^{a}))
///   row1_k = [k = 0] - sum_{i=0}^{k-2} zeta^{a(k-2-2i)}   (row1 = w+ - zeta^{a} row2)
/// with the identity 2x2 block at positions 0 and 1, which is exactly the
/// reduced echelon normal form of the span.
std::vector<CycVec> two_dim_component_rows(const GroupPtr& g, const DihedralWitness& witness,
                                           const LabeledCharacter& lc,
                                           const std::vector<Permutation>& gens) {
    const unsigned m = g->degree();
    const unsigned j = lc.label.index;

    const auto rform = affine_form(witness.r, m);
    if (!rform || !rform->shift)
        throw Error("internal: witness rotation is not a position shift");
    for (const Permutation& t : gens)
        if (!affine_form(t, m))
            throw Error("internal: a generating translation is not affine on orbit positions");
    const long a = (static_cast<long>(j) *
                    mod_inverse(static_cast<long>(rform->offset), static_cast<long>(m))) %
                   static_cast<long>(m);

    CycVec row1(m), row2(m);
    std::vector<std::pair<long, Rational>> terms;
    for (unsigned k = 0; k < m; ++k) {
        terms.clear();
        for (long i = 0; i < static_cast<long>(k); ++i)
            terms.emplace_back(a * (static_cast<long>(k) - 1 - 2 * i), Rational(1));
        row2[k] = Cyclotomic::from_root_sum(m, terms);
        terms.clear();
        if (k == 0) terms.emplace_back(0, Rational(1));
        for (long i = 0; i + 1 < static_cast<long>(k); ++i)
            terms.emplace_back(a * (static_cast<long>(k) - 2 - 2 * i), Rational(-1));
        row1[k] = Cyclotomic::from_root_sum(m, terms);
    }

    const CycVec seed = isotypic_column(g, lc.character, 0);
    const Rational inv_m = make_rational(1, static_cast<long>(m));
    for (unsigned k = 0; k < m; ++k) {
        const Cyclotomic expect = Cyclotomic::from_root_sum(
            m, {{a * k, inv_m}, {-a * static_cast<long>(k), inv_m}});
        if (seed[k] != expect)
            throw Error("internal: psi_" + std::to_string(j) +
                        " projection column deviates from its closed form at position " +
                        std::to_string(k));
    }
    return {std::move(row1), std::move(row2)};
}

int parity_rank(OrbitParity p) {
    switch (p) {
        case OrbitParity::even: return 0;
        case OrbitParity::odd: return 1;
        default: return 2;
    }
}

void sort_components(std::vector<SubmoduleBasis>& comps) {
    std::stable_sort(comps.begin(), comps.end(),
                     [](const SubmoduleBasis& a, const SubmoduleBasis& b) {
                         if (label_rank(a.label) != label_rank(b.label))
                             return label_rank(a.label) < label_rank(b.label);
                         return parity_rank(a.parity) < parity_rank(b.parity);
                     });
}

void check_field_label(const std::string& field) {
    if (field != "C" && field != "R")
        throw RangeError("field label must be \"C\" or \"R\", got \"" + field + "\"");
}

}  // namespace

DecompositionReport decompose_dihedral(std::uint32_t n, const std::string& field) {
    check_field_label(field);
    if (n % 2 != 0)
        throw OddOrder("decompose_dihedral handles even orders only; use decompose_generic for n = " +
                       std::to_string(n));
    if (n < 4) throw TooSmall("decompose_dihedral requires n >= 4, got " + std::to_string(n));

    const QuandlePtr q = Quandle::dihedral(n);
    const unsigned m = n / 2;
    const OrbitDecomposition od = q->orbits();

    std::vector<SubmoduleBasis> comps;
    for (const std::vector<std::uint32_t>& orbit : od.orbits) {
        const OrbitParity parity = orbit_parity(orbit);

        comps.push_back(make_component(orbit, parity,
                                       IrreducibleLabel{IrreducibleLabel::Kind::trivial, 0, 1},
                                       single_row(v_triv(q, orbit))));
        if (m % 2 == 0)
            comps.push_back(make_component(orbit, parity,
                                           IrreducibleLabel{IrreducibleLabel::Kind::ref, 0, 1},
                                           single_row(v_ref(q, orbit))));
        if (m < 3) continue;  // no two-dimensional components below D_3

        const GroupPtr g = q->restricted_inner_group(orbit);
        const auto witness = dihedral_witness(*g);
        if (!witness)
            throw Error("internal: restricted inner group on the orbit of " +
                        std::to_string(orbit.front()) + " lacks a dihedral witness");
        const auto irreducibles = dihedral_irreducible_characters(g, *witness, parity);

        // The first two restricted translations generate the whole group, so
        // invariance under them implies invariance under everything.
        const std::vector<Permutation>& ggens = g->generators();
        const std::vector<Permutation> close_gens(
            ggens.begin(), ggens.begin() + std::min<std::size_t>(2, ggens.size()));

        for (const LabeledCharacter& lc : irreducibles) {
            if (lc.label.kind != IrreducibleLabel::Kind::two_dim) continue;
            std::vector<CycVec> rows;
            rows.reserve(2);
            for (const CycVec& r : two_dim_component_rows(g, *witness, lc, close_gens))
                rows.push_back(embed_row(r, orbit, n));
            comps.push_back(make_component(orbit, parity, lc.label, std::move(rows)));
        }
    }
    sort_components(comps);

    // Two-dimensional components are verified invariant while they are built
    // (eigenvector identities); the closed-form one-dimensional ones are
    // checked here against the generating translations.
    const std::vector<Permutation> inn_gens{q->right_translation(0), q->right_translation(1)};
    for (const SubmoduleBasis& c : comps)
        if (c.dimension() == 1) require_invariant(c, inn_gens);

    DecompositionReport report;
    report.n = n;
    report.field = field;
    report.quandle = q;
    report.components = std::move(comps);
    if (n == 4)
        report.notes.push_back(
            "order 4: each orbit's restricted inner group has order 2 (cyclic, not dihedral); "
            "the decomposition degenerates to four one-dimensional components");
    return report;
}

std::vector<std::vector<CycVec>> split_two_dim_isotypic(const GroupPtr& g,
                                                        const DihedralWitness& witness,
                                                        unsigned j, const Character& chi_j,
                                                        unsigned mult) {
    if (!g) throw RangeError("split_two_dim_isotypic: null group");
    if (mult == 0) return {};
    const RepMatrices rep = psi_representation(g, witness, j);
    const std::uint32_t d = g->degree();
    const Rational scale = Rational(2) / Rational(static_cast<unsigned long>(g->order()));

    // Matrix-element projection p_ab = (2/|G|) sum_t psi(t^-1)[b][a] rho(t),
    // applied to a coordinate vector.
    const auto entry = [](const Mat2& mat, unsigned row, unsigned col) -> const Cyclotomic& {
        if (row == 0) return col == 0 ? mat.e00 : mat.e01;
        return col == 0 ? mat.e10 : mat.e11;
    };
    const auto p_apply = [&](unsigned a, unsigned b, const CycVec& v) {
        CycVec out(d);
        for (std::size_t t = 0; t < g->order(); ++t) {
            const Mat2& minv = rep.matrices[g->inverse_index(t)];
            const Cyclotomic coeff = scale * entry(minv, b, a);
            if (coeff.is_zero()) continue;
            const Permutation& perm = g->element(t);
            for (std::uint32_t i = 0; i < d; ++i) {
                if (v[i].is_zero()) continue;
                out[perm(i)] = out[perm(i)] + coeff * v[i];
            }
        }
        return out;
    };

    // Basis of p_00(V); one invariant two-dimensional block per basis row.
    EchelonBasis diag(d);
    for (std::uint32_t b = 0; b < d && diag.rank() < mult; ++b) {
        CycVec e(d);
        e[b] = Cyclotomic(1);
        diag.add(p_apply(0, 0, e));
    }
    if (diag.rank() != mult)
        throw Error("internal: p_00 image rank " + std::to_string(diag.rank()) +
                    ", expected multiplicity " + std::to_string(mult));

    std::vector<std::vector<CycVec>> parts;
    parts.reserve(mult);
    for (const CycVec& x : diag.rows()) {
        EchelonBasis block(d);
        block.add(x);
        block.add(p_apply(1, 0, x));
        if (block.rank() != 2)
            throw Error("internal: matrix-element split produced a block of rank " +
                        std::to_string(block.rank()));
        parts.push_back(block.rows());
    }

    // The blocks must be closed under the group; anything else is a bug.
    for (const std::vector<CycVec>& rows : parts) {
        EchelonBasis basis(d);
        for (const CycVec& r : rows) basis.add(r);
        for (const Permutation& p : g->generators())
            for (const CycVec& r : rows)
                if (!basis.contains(permute(p, r)))
                    throw Error("internal: matrix-element split block is not invariant");
    }
    (void)chi_j;
    return parts;
}

DecompositionReport decompose_generic(const QuandlePtr& q, const std::string& field) {
    check_field_label(field);
    if (!q) throw RangeError("decompose_generic: null quandle");
    const std::uint32_t n = q->order();
    const OrbitDecomposition od = q->orbits();

    std::vector<SubmoduleBasis> comps;
    for (const std::vector<std::uint32_t>& orbit : od.orbits) {
        const OrbitParity parity = orbit_parity(orbit);
        const GroupPtr g = q->restricted_inner_group(orbit);
        const std::uint32_t d = static_cast<std::uint32_t>(orbit.size());
        const Character pchar = permutation_character(g);

        std::vector<LabeledCharacter> irreducibles;
        std::optional<DihedralWitness> witness;
        if (g->is_abelian()) {
            irreducibles = abelian_linear_characters(g);
        } else {
            witness = dihedral_witness(*g);
            if (!witness)
                throw UnsupportedGroup(
                    "restricted inner group on the orbit of " + std::to_string(orbit.front()) +
                    " (order " + std::to_string(g->order()) +
                    ") is neither abelian nor dihedral; no character table available");
            irreducibles = dihedral_irreducible_characters(g, *witness, parity);
        }

        const auto mults = multiplicities(pchar, irreducibles);
        for (std::size_t i = 0; i < irreducibles.size(); ++i) {
            const LabeledCharacter& lc = irreducibles[i];
            const unsigned mu = mults[i].second;
            if (mu == 0) continue;

            if (lc.label.degree == 1) {
                // The action on a linear-character isotypic space is scalar,
                // so each basis row is itself an indecomposable component.
                EchelonBasis iso(d);
                for (std::uint32_t b = 0; b < d && iso.rank() < mu; ++b)
                    iso.add(isotypic_column(g, lc.character, b));
                if (iso.rank() != mu)
                    throw Error("internal: isotypic rank " + std::to_string(iso.rank()) +
                                " for " + lc.label.str() + ", expected " + std::to_string(mu));
                for (const CycVec& row : iso.rows())
                    comps.push_back(
                        make_component(orbit, parity, lc.label, {embed_row(row, orbit, n)}));
            } else if (mu == 1) {
                EchelonBasis iso(d);
                for (std::uint32_t b = 0; b < d && iso.rank() < 2; ++b)
                    iso.add(isotypic_column(g, lc.character, b));
                if (iso.rank() != 2)
                    throw Error("internal: isotypic rank " + std::to_string(iso.rank()) +
                                " for " + lc.label.str() + ", expected 2");
                std::vector<CycVec> rows;
                for (const CycVec& r : iso.rows()) rows.push_back(embed_row(r, orbit, n));
                comps.push_back(make_component(orbit, parity, lc.label, std::move(rows)));
            } else {
                const auto parts = split_two_dim_isotypic(g, *witness, lc.label.index,
                                                          lc.character, mu);
                for (const std::vector<CycVec>& local_rows : parts) {
                    std::vector<CycVec> rows;
                    for (const CycVec& r : local_rows) rows.push_back(embed_row(r, orbit, n));
                    comps.push_back(make_component(orbit, parity, lc.label, std::move(rows)));
                }
            }
        }
    }
    sort_components(comps);

    const std::vector<Permutation> translations = distinct_translations(*q);
    for (const SubmoduleBasis& c : comps) require_invariant(c, translations);

    DecompositionReport report;
    report.n = n;
    report.field = field;
    report.quandle = q;
    report.components = std::move(comps);
    return report;
}

Verdict verify_decomposition(const QuandlePtr& q, const DecompositionReport& report) {
    if (!q) throw RangeError("verify_decomposition: null quandle");
    const std::uint32_t n = q->order();
    if (report.n != n)
        throw QuandleMismatch("verify_decomposition: report order " + std::to_string(report.n) +
                              " does not match quandle order " + std::to_string(n));
    for (const SubmoduleBasis& c : report.components)
        for (const CycVec& row : c.vectors)
            if (row.size() != n)
                throw QuandleMismatch("verify_decomposition: component row length " +
                                      std::to_string(row.size()) + " does not match order " +
                                      std::to_string(n));

    Verdict verdict;
    const std::size_t total = report.total_dimension();
    verdict.dimension_sum = (total == n);

    // Joint independence: the union of all claimed generators must have rank
    // equal to the claimed dimension sum.
    std::vector<EchelonBasis> bases;
    bases.reserve(report.components.size());
    EchelonBasis joint(n);
    for (const SubmoduleBasis& c : report.components) {
        EchelonBasis b(n);
        for (const CycVec& row : c.vectors) {
            b.add(row);
            joint.add(row);
        }
        bases.push_back(std::move(b));
    }
    verdict.pairwise_independent = (joint.rank() == total);
    if (!verdict.pairwise_independent) {
        // Locate one offending pair when a single pair explains the collapse.
        for (std::size_t i = 0; i < bases.size() && !verdict.dependence_witness; ++i)
            for (std::size_t j = i + 1; j < bases.size(); ++j) {
                EchelonBasis pair(n);
                for (const CycVec& row : bases[i].rows()) pair.add(row);
                for (const CycVec& row : bases[j].rows()) pair.add(row);
                if (pair.rank() <
                    report.components[i].dimension() + report.components[j].dimension()) {
                    verdict.dependence_witness = std::make_pair(i, j);
                    break;
                }
            }
    }

    // Translations repeat in every dihedral quandle (R_x = R_{x+n/2}); one
    // representative per distinct permutation keeps the sweep exact, and the
    // witness x reported on failure is the least index realizing the map.
    std::vector<std::pair<std::uint32_t, Permutation>> translations;
    {
        std::set<std::vector<std::uint32_t>> seen;
        for (std::uint32_t x = 0; x < n; ++x) {
            Permutation rx = q->right_translation(x);
            if (seen.insert(rx.images()).second) translations.emplace_back(x, std::move(rx));
        }
    }

    const GroupPtr inn = q->inner_group();
    for (std::size_t ci = 0; ci < report.components.size(); ++ci) {
        const SubmoduleBasis& comp = report.components[ci];
        const EchelonBasis& basis = bases[ci];
        ComponentVerdict cv;

        cv.invariant = true;
        for (const auto& [x, rx] : translations) {
            for (const CycVec& row : comp.vectors)
                if (!basis.contains(permute(rx, row))) {
                    cv.invariant = false;
                    cv.failure_x = x;
                    cv.failure_vector = row;
                    break;
                }
            if (!cv.invariant) break;
        }

        if (cv.invariant && basis.rank() > 0) {
            // Character of the component read off the reduced basis: row
            // b_a has a 1 in its pivot column and zeros there in all other
            // rows, so trace(g) = sum_a (g . b_a)[pivot_a] = sum_a
            // b_a[g^{-1}(pivot_a)].
            Cyclotomic sum;
            for (std::size_t t = 0; t < inn->order(); ++t) {
                const Permutation& ginv = inn->element(inn->inverse_index(t));
                Cyclotomic trace;
                for (std::size_t a = 0; a < basis.rank(); ++a)
                    trace = trace + basis.rows()[a][ginv(static_cast<std::uint32_t>(
                                        basis.pivots()[a]))];
                sum = sum + trace * trace.conj();
            }
            const Cyclotomic scaled =
                Rational(1, static_cast<unsigned long>(inn->order())) * sum;
            const auto sip = to_rational(scaled);
            if (!sip)
                throw NonRationalResult(
                    "component character self inner product is not rational: " + scaled.str());
            cv.self_inner_product = *sip;
            cv.indecomposable = (*sip == 1);
        }
        verdict.components.push_back(std::move(cv));
    }
    return verdict;
}

}  // namespace qring
