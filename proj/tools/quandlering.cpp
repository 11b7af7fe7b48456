#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qring/decomposition.hpp"
#include "qring/errors.hpp"
#include "qring/json_io.hpp"
#include "qring/quandle.hpp"
#include "qring/quandle_ring.hpp"
#include "qring/rep_theory.hpp"

namespace {

using nlohmann::json;
using namespace qring;

// Exit codes: 0 success/verified, 1 mathematical failure, 2 usage error,
// 3 malformed input.
constexpr int kOk = 0;
constexpr int kMathFail = 1;
constexpr int kUsage = 2;
constexpr int kBadInput = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned long max_order() {
    if (const char* env = std::getenv("QUANDLERING_MAX_N")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 4096;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot read input file: " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw MalformedInput("invalid JSON in " + path + ": " + e.what());
    }
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw UsageError("cannot write output file: " + output_path);
    out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void check_order_cap(unsigned long n) {
    const unsigned long cap = max_order();
    if (n > cap)
        throw UsageError("n = " + std::to_string(n) + " exceeds QUANDLERING_MAX_N = " +
                         std::to_string(cap));
}

/// Quandle selected by --n (dihedral) or --input (validated table).
QuandlePtr select_quandle(long long n, const std::string& input) {
    if (n >= 0 && !input.empty()) throw UsageError("--n and --input are mutually exclusive");
    if (n >= 0) {
        if (n == 0) throw UsageError("--n must be positive");
        check_order_cap(static_cast<unsigned long>(n));
        return Quandle::dihedral(static_cast<std::uint32_t>(n));
    }
    if (input.empty()) throw UsageError("one of --n or --input is required");
    QuandlePtr q = quandle_from_json(load_json(input));
    check_order_cap(q->order());
    return q;
}

std::string orbit_str(const std::vector<std::uint32_t>& orbit) {
    std::string s = "{";
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(orbit[i]);
    }
    return s + "}";
}

std::string component_name(const SubmoduleBasis& c) {
    std::string label = c.label.kind == IrreducibleLabel::Kind::two_dim
                            ? std::to_string(c.label.index)
                            : c.label.str();
    std::string out = "V_{" + label;
    if (c.parity != OrbitParity::mixed) out += "," + parity_str(c.parity);
    return out + "}";
}

std::string report_text(const DecompositionReport& r) {
    std::ostringstream out;
    const bool dihedral = r.quandle && r.quandle->is_dihedral();
    if (dihedral)
        out << "K[R_" << r.n << "]";
    else
        out << "K[X], |X| = " << r.n << ",";
    out << " over " << r.field << ": " << r.components.size()
        << " components, total dimension " << r.total_dimension() << "\n";
    for (const std::string& note : r.notes) out << "note: " << note << "\n";
    out << "\n";
    for (const SubmoduleBasis& c : r.components) {
        out << component_name(c) << ": ";
        for (std::size_t i = 0; i < c.vectors.size(); ++i) {
            if (i) out << ", ";
            out << cyc_vec_str(c.vectors[i]);
        }
        out << "\n";
    }
    return out.str();
}

int run_decompose(long long n, const std::string& input, const std::string& field,
                  const std::string& format, const std::string& output) {
    const QuandlePtr q = select_quandle(n, input);
    DecompositionReport report;
    if (q->order() % 2 == 0 && q->order() >= 4 && q->is_dihedral())
        report = decompose_dihedral(q->order(), field);
    else
        report = decompose_generic(q, field);
    emit(format == "json" ? dump(report_to_json(report)) : report_text(report), output);
    return kOk;
}

std::string rational_str_or(const std::optional<Rational>& r) {
    return r ? to_string(*r) : std::string("n/a");
}

std::string verdict_text(const DecompositionReport& report, const Verdict& v) {
    std::ostringstream out;
    out << "verification of decomposition for n = " << report.n << " ("
        << report.components.size() << " components)\n";
    out << "dimension sum: " << (v.dimension_sum ? "PASS" : "FAIL") << " (total "
        << report.total_dimension() << ", order " << report.n << ")\n";
    out << "independence: " << (v.pairwise_independent ? "PASS" : "FAIL");
    if (v.dependence_witness)
        out << " (components " << v.dependence_witness->first << " and "
            << v.dependence_witness->second << " intersect)";
    out << "\n";
    for (std::size_t i = 0; i < v.components.size(); ++i) {
        const ComponentVerdict& cv = v.components[i];
        out << "component " << i << " " << component_name(report.components[i]) << ": invariant "
            << (cv.invariant ? "PASS" : "FAIL");
        if (!cv.invariant && cv.failure_x)
            out << " (witness x = " << *cv.failure_x << ", row "
                << cyc_vec_str(*cv.failure_vector) << ")";
        out << "; indecomposable " << (cv.indecomposable ? "PASS" : "FAIL")
            << " (self inner product = " << rational_str_or(cv.self_inner_product) << ")\n";
    }
    out << "verdict: " << (v.passed() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

int run_verify(long long n, const std::string& input, const std::string& format,
               const std::string& output) {
    if (input.empty()) throw UsageError("verify requires --input");
    DecompositionReport report = report_from_json(load_json(input));
    if (n >= 0 && static_cast<std::uint32_t>(n) != report.n)
        throw UsageError("--n " + std::to_string(n) + " does not match the report order " +
                         std::to_string(report.n));
    check_order_cap(report.n);
    const Verdict verdict = verify_decomposition(report.quandle, report);
    if (format == "json") {
        json out = verdict_to_json(verdict);
        out["n"] = report.n;
        emit(dump(out), output);
    } else {
        emit(verdict_text(report, verdict), output);
    }
    return verdict.passed() ? kOk : kMathFail;
}

struct OrbitTable {
    std::vector<std::uint32_t> orbit;
    OrbitParity parity = OrbitParity::mixed;
    GroupPtr group;
    std::optional<DihedralWitness> witness;
    std::vector<std::vector<std::size_t>> classes;
    Character pchar;
    std::vector<LabeledCharacter> irreducibles;
};

OrbitTable build_orbit_table(const QuandlePtr& q, const std::vector<std::uint32_t>& orbit) {
    GroupPtr g = q->restricted_inner_group(orbit);
    OrbitTable t{orbit, orbit_parity(orbit), g,          dihedral_witness(*g),
                 g->conjugacy_classes(),     permutation_character(g),
                 {}};
    if (t.witness)
        t.irreducibles = dihedral_irreducible_characters(g, *t.witness, t.parity);
    else if (g->is_abelian())
        t.irreducibles = abelian_linear_characters(g);
    return t;
}

std::string char_table_text(const QuandlePtr& q) {
    std::ostringstream out;
    const OrbitDecomposition od = q->orbits();
    bool first = true;
    for (const auto& orbit : od.orbits) {
        const OrbitTable t = build_orbit_table(q, orbit);
        if (!first) out << "\n";
        first = false;
        out << "orbit " << orbit_str(t.orbit);
        if (t.parity != OrbitParity::mixed) out << " (" << parity_str(t.parity) << ")";
        out << ": restricted inner group of order " << t.group->order();
        if (t.witness) out << ", dihedral witness m = " << t.witness->m;
        out << "\n";
        out << "classes are listed by a representative permutation of positions within the "
               "sorted orbit\n";

        std::vector<std::string> names{"class", "size", "perm"};
        for (const auto& lc : t.irreducibles) names.push_back(lc.label.str());

        // Column texts: one column per conjugacy class.
        std::vector<std::vector<std::string>> cols;
        for (const auto& cls : t.classes) {
            std::vector<std::string> col;
            col.push_back(t.group->element(cls.front()).str());
            col.push_back(std::to_string(cls.size()));
            col.push_back(t.pchar.value(cls.front()).str());
            for (const auto& lc : t.irreducibles)
                col.push_back(lc.character.value(cls.front()).str());
            cols.push_back(std::move(col));
        }
        std::size_t name_w = 0;
        for (const auto& s : names) name_w = std::max(name_w, s.size());
        std::vector<std::size_t> col_w(cols.size(), 0);
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (const auto& s : cols[c]) col_w[c] = std::max(col_w[c], s.size());
        for (std::size_t row = 0; row < names.size(); ++row) {
            out << names[row] << std::string(name_w - names[row].size(), ' ');
            for (std::size_t c = 0; c < cols.size(); ++c)
                out << "  " << std::string(col_w[c] - cols[c][row].size(), ' ') << cols[c][row];
            out << "\n";
        }
        if (t.irreducibles.empty())
            out << "(irreducible table unavailable: group is neither abelian nor dihedral)\n";
    }
    return out.str();
}

json cyc_value_json(const Cyclotomic& v) {
    const auto [re, im] = v.approx();
    return json{{"value", cyclotomic_to_json(v)},
                {"approx", json::array({re, im})},
                {"str", v.str()}};
}

json char_table_json(const QuandlePtr& q) {
    json tables = json::array();
    const OrbitDecomposition od = q->orbits();
    for (const auto& orbit : od.orbits) {
        const OrbitTable t = build_orbit_table(q, orbit);
        json classes = json::array();
        for (const auto& cls : t.classes)
            classes.push_back(json{{"representative", t.group->element(cls.front()).str()},
                                   {"representative_index", cls.front()},
                                   {"size", cls.size()}});
        json pvals = json::array();
        for (const auto& cls : t.classes) pvals.push_back(cyc_value_json(t.pchar.value(cls.front())));
        json irr = json::array();
        for (const auto& lc : t.irreducibles) {
            json vals = json::array();
            for (const auto& cls : t.classes)
                vals.push_back(cyc_value_json(lc.character.value(cls.front())));
            irr.push_back(json{{"label", lc.label.str()},
                               {"degree", lc.label.degree},
                               {"values", std::move(vals)}});
        }
        json table{{"orbit", t.orbit},
                   {"orbit_parity", parity_str(t.parity)},
                   {"group_order", t.group->order()},
                   {"classes", std::move(classes)},
                   {"permutation_character", std::move(pvals)},
                   {"irreducibles", std::move(irr)}};
        if (t.witness) table["witness_m"] = t.witness->m;
        tables.push_back(std::move(table));
    }
    return json{{"n", q->order()}, {"tables", std::move(tables)}};
}

int run_char_table(long long n, const std::string& input, const std::string& format,
                   const std::string& output) {
    const QuandlePtr q = select_quandle(n, input);
    emit(format == "json" ? dump(char_table_json(q)) : char_table_text(q), output);
    return kOk;
}

json witness_json(const DihedralWitness& w) {
    return json{{"m", w.m},
                {"r", json{{"images", w.r.images()}, {"cycles", w.r.str()}}},
                {"s", json{{"images", w.s.images()}, {"cycles", w.s.str()}}}};
}

int run_inn(long long n, const std::string& input, const std::string& format,
            const std::string& output) {
    const QuandlePtr q = select_quandle(n, input);
    const GroupPtr g = q->inner_group();
    const OrbitDecomposition od = q->orbits();
    const auto witness = dihedral_witness(*g);

    // Distinct translations with the first x producing each.
    std::vector<std::pair<std::uint32_t, Permutation>> gens;
    for (std::uint32_t x = 0; x < q->order(); ++x) {
        Permutation p = q->right_translation(x);
        bool fresh = true;
        for (const auto& [y, seen] : gens)
            if (seen == p) {
                fresh = false;
                break;
            }
        if (fresh) gens.emplace_back(x, std::move(p));
    }

    if (format == "json") {
        json jgens = json::array();
        for (const auto& [x, p] : gens)
            jgens.push_back(json{{"x", x}, {"images", p.images()}, {"cycles", p.str()}});
        json jorbits = json::array();
        for (const auto& orbit : od.orbits) jorbits.push_back(orbit);
        json restrictions = json::array();
        for (const auto& orbit : od.orbits) {
            const GroupPtr rg = q->restricted_inner_group(orbit);
            const auto rw = dihedral_witness(*rg);
            json jr{{"orbit", orbit}, {"order", rg->order()}};
            jr["witness"] = rw ? witness_json(*rw) : json(nullptr);
            restrictions.push_back(std::move(jr));
        }
        json out{{"n", q->order()},         {"order", g->order()},
                 {"degree", g->degree()},   {"generators", std::move(jgens)},
                 {"orbits", std::move(jorbits)}, {"connected", od.connected},
                 {"restrictions", std::move(restrictions)}};
        out["witness"] = witness ? witness_json(*witness) : json(nullptr);
        emit(dump(out), output);
        return kOk;
    }

    std::ostringstream out;
    out << "Inn for n = " << q->order() << ": degree " << g->degree() << ", order " << g->order()
        << ", connected " << (od.connected ? "yes" : "no") << "\n";
    out << "orbits:";
    for (const auto& orbit : od.orbits) out << " " << orbit_str(orbit);
    out << "\n";
    out << "generators (distinct right translations):\n";
    for (const auto& [x, p] : gens) out << "  R_" << x << " = " << p.str() << "\n";
    if (witness)
        out << "dihedral witness: m = " << witness->m << ", r = " << witness->r.str()
            << ", s = " << witness->s.str() << "\n";
    else
        out << "dihedral witness: none\n";
    for (const auto& orbit : od.orbits) {
        const GroupPtr rg = q->restricted_inner_group(orbit);
        const auto rw = dihedral_witness(*rg);
        out << "restriction to orbit " << orbit_str(orbit) << ": order " << rg->order();
        if (rw)
            out << ", dihedral witness m = " << rw->m << ", r = " << rw->r.str()
                << ", s = " << rw->s.str() << "\n";
        else
            out << ", dihedral witness: none\n";
    }
    emit(out.str(), output);
    return kOk;
}

int run_axioms(const std::string& input, const std::string& format, const std::string& output) {
    if (input.empty()) throw UsageError("axioms requires --input");
    const json j = load_json(input);
    QuandlePtr q;
    try {
        q = quandle_from_json(j);
    } catch (const AxiomViolation& e) {
        if (format == "json") {
            emit(dump(json{{"valid", false},
                           {"axiom", e.axiom},
                           {"witness", e.witness},
                           {"message", e.what()}}),
                 output);
        } else {
            emit(std::string("not a quandle: ") + e.what() + "\n", output);
        }
        return kMathFail;
    }
    check_order_cap(q->order());
    const OrbitDecomposition od = q->orbits();
    const GroupPtr g = q->inner_group();
    if (format == "json") {
        json jorbits = json::array();
        for (const auto& orbit : od.orbits) jorbits.push_back(orbit);
        emit(dump(json{{"valid", true},
                       {"n", q->order()},
                       {"orbits", std::move(jorbits)},
                       {"connected", od.connected},
                       {"inner_group_order", g->order()}}),
             output);
    } else {
        std::ostringstream out;
        out << "valid quandle of order " << q->order() << "; orbits:";
        for (const auto& orbit : od.orbits) out << " " << orbit_str(orbit);
        out << "; connected " << (od.connected ? "yes" : "no") << "; inner group order "
            << g->order() << "\n";
        emit(out.str(), output);
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact decomposition of quandle rings of finite quandles"};
    app.require_subcommand(1);

    long long n = -1;
    std::string input, field = "C", format = "text", output;

    const auto add_common = [&](CLI::App* cmd, bool with_field) {
        cmd->add_option("--input", input, "path to an input JSON file");
        if (with_field)
            cmd->add_option("--field", field, "coefficient field label (cosmetic)")
                ->check(CLI::IsMember({"C", "R"}));
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--output", output, "write the report to a file instead of stdout");
    };

    CLI::App* dec = app.add_subcommand("decompose", "decompose K[X] into indecomposable modules");
    dec->add_option("--n", n, "order of the dihedral quandle R_n");
    add_common(dec, true);

    CLI::App* ver = app.add_subcommand("verify", "independently verify a decomposition report");
    ver->add_option("--n", n, "expected order (optional cross-check)");
    add_common(ver, false);

    CLI::App* cht = app.add_subcommand("char-table", "permutation and irreducible characters");
    cht->add_option("--n", n, "order of the dihedral quandle R_n");
    add_common(cht, false);

    CLI::App* inn = app.add_subcommand("inn", "inner automorphism group and dihedral witness");
    inn->add_option("--n", n, "order of the dihedral quandle R_n");
    add_common(inn, false);

    CLI::App* axm = app.add_subcommand("axioms", "validate a quandle table");
    add_common(axm, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (dec->parsed()) return run_decompose(n, input, field, format, output);
        if (ver->parsed()) return run_verify(n, input, format, output);
        if (cht->parsed()) return run_char_table(n, input, format, output);
        if (inn->parsed()) return run_inn(n, input, format, output);
        if (axm->parsed()) return run_axioms(input, format, output);
        std::cerr << "no command given\n";
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const MalformedInput& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const AxiomViolation& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const RangeError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnsupportedGroup& e) {
        std::cerr << "cannot decompose: " << e.what() << "\n";
        return kMathFail;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMathFail;
    }
}
