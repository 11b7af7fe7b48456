#include "qring/json_io.hpp"

#include <string>

#include "qring/errors.hpp"

namespace qring {

using nlohmann::json;

namespace {

Integer integer_from_json(const json& j, const char* what) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Integer(static_cast<unsigned long>(j.get<std::uint64_t>()));
        return Integer(static_cast<long>(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw MalformedInput(std::string(what) + ": unparseable integer string \"" +
                                 j.get<std::string>() + "\"");
        }
    }
    throw MalformedInput(std::string(what) + ": expected an integer or integer string");
}

json integer_to_json(const Integer& z) {
    if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
    return json(z.get_str());
}

}  // namespace

json rational_to_json(const Rational& r) {
    return json::array({integer_to_json(r.get_num()), integer_to_json(r.get_den())});
}

Rational rational_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw MalformedInput("rational: expected [numerator, denominator]");
    const Integer num = integer_from_json(j[0], "rational numerator");
    const Integer den = integer_from_json(j[1], "rational denominator");
    if (den == 0) throw MalformedInput("rational: zero denominator");
    return make_rational(num, den);
}

json cyclotomic_to_json(const Cyclotomic& c) {
    if (const auto r = to_rational(c)) return rational_to_json(*r);
    json coeffs = json::array();
    for (const Rational& x : c.coeffs()) coeffs.push_back(rational_to_json(x));
    return json{{"m", c.conductor()}, {"coeffs", std::move(coeffs)}};
}

Cyclotomic cyclotomic_from_json(const json& j) {
    if (j.is_array()) return Cyclotomic(rational_from_json(j));
    if (!j.is_object() || !j.contains("m") || !j.contains("coeffs"))
        throw MalformedInput("cyclotomic: expected [num, den] or {\"m\", \"coeffs\"}");
    const Integer m = integer_from_json(j["m"], "cyclotomic conductor");
    if (m <= 0 || !m.fits_uint_p()) throw MalformedInput("cyclotomic: conductor out of range");
    if (!j["coeffs"].is_array()) throw MalformedInput("cyclotomic: coeffs must be an array");
    std::vector<Rational> coeffs;
    for (const json& e : j["coeffs"]) coeffs.push_back(rational_from_json(e));
    try {
        return Cyclotomic::from_coeffs(static_cast<unsigned>(m.get_ui()), std::move(coeffs));
    } catch (const Error& e) {
        throw MalformedInput(std::string("cyclotomic: ") + e.what());
    }
}

json quandle_to_json(const Quandle& q) {
    json table = json::array();
    for (std::uint32_t x = 0; x < q.order(); ++x) {
        json row = json::array();
        for (std::uint32_t y = 0; y < q.order(); ++y) row.push_back(q.op(x, y));
        table.push_back(std::move(row));
    }
    return json{{"n", q.order()}, {"table", std::move(table)}};
}

QuandlePtr quandle_from_json(const json& j) {
    if (!j.is_object() || !j.contains("table") || !j["table"].is_array())
        throw MalformedInput("quandle: expected {\"n\", \"table\"}");
    std::vector<std::vector<std::uint32_t>> table;
    for (const json& row : j["table"]) {
        if (!row.is_array()) throw MalformedInput("quandle: table rows must be arrays");
        std::vector<std::uint32_t> r;
        for (const json& e : row) {
            const Integer v = integer_from_json(e, "quandle table entry");
            if (v < 0 || !v.fits_uint_p())
                throw MalformedInput("quandle: table entry out of range");
            r.push_back(static_cast<std::uint32_t>(v.get_ui()));
        }
        table.push_back(std::move(r));
    }
    if (j.contains("n")) {
        const Integer n = integer_from_json(j["n"], "quandle order");
        if (n < 0 || !n.fits_uint_p() || n.get_ui() != table.size())
            throw MalformedInput("quandle: \"n\" does not match the table size");
    }
    try {
        return Quandle::validate(std::move(table));
    } catch (const RangeError& e) {
        throw MalformedInput(std::string("quandle: ") + e.what());
    }
}

json cyc_row_to_json(const CycVec& v) {
    json coeffs = json::array();
    for (const Cyclotomic& c : v) coeffs.push_back(cyclotomic_to_json(c));
    return json{{"n", v.size()}, {"coeffs", std::move(coeffs)}};
}

CycVec cyc_row_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw MalformedInput("ring element: expected {\"n\", \"coeffs\"}");
    CycVec v;
    for (const json& e : j["coeffs"]) v.push_back(cyclotomic_from_json(e));
    if (j.contains("n")) {
        const Integer n = integer_from_json(j["n"], "ring element length");
        if (n < 0 || !n.fits_uint_p() || n.get_ui() != v.size())
            throw MalformedInput("ring element: \"n\" does not match the coefficient count");
    }
    return v;
}

std::string label_to_string(const IrreducibleLabel& l) { return l.str(); }

IrreducibleLabel label_from_string(const std::string& s) {
    if (s == "triv") return IrreducibleLabel{IrreducibleLabel::Kind::trivial, 0, 1};
    if (s == "ref") return IrreducibleLabel{IrreducibleLabel::Kind::ref, 0, 1};
    if (s == "unlabeled") return IrreducibleLabel{IrreducibleLabel::Kind::unlabeled, 0, 1};
    const auto parse_index = [&](std::size_t prefix_len, const char* what) -> unsigned {
        try {
            const unsigned long v = std::stoul(s.substr(prefix_len));
            return static_cast<unsigned>(v);
        } catch (const std::exception&) {
            throw MalformedInput(std::string("label: bad index in ") + what + " \"" + s + "\"");
        }
    };
    if (s.rfind("lin_", 0) == 0)
        return IrreducibleLabel{IrreducibleLabel::Kind::one_dim_other, parse_index(4, "lin"), 1};
    if (s.rfind("psi_", 0) == 0)
        return IrreducibleLabel{IrreducibleLabel::Kind::two_dim, parse_index(4, "psi"), 2};
    throw MalformedInput("label: unknown label \"" + s + "\"");
}

std::string parity_to_string(OrbitParity p) { return parity_str(p); }

OrbitParity parity_from_string(const std::string& s) {
    if (s == "even") return OrbitParity::even;
    if (s == "odd") return OrbitParity::odd;
    if (s == "mixed") return OrbitParity::mixed;
    throw MalformedInput("orbit_parity: expected \"even\", \"odd\" or \"mixed\", got \"" + s +
                         "\"");
}

json component_to_json(const SubmoduleBasis& c) {
    json generators = json::array();
    for (const CycVec& row : c.vectors) generators.push_back(cyc_row_to_json(row));
    return json{{"orbit", c.orbit},
                {"orbit_parity", parity_to_string(c.parity)},
                {"label", label_to_string(c.label)},
                {"dimension", c.dimension()},
                {"generators", std::move(generators)}};
}

SubmoduleBasis component_from_json(const json& j) {
    if (!j.is_object() || !j.contains("label") || !j.contains("generators"))
        throw MalformedInput("component: expected {\"label\", \"generators\", ...}");
    SubmoduleBasis c;
    if (!j["label"].is_string()) throw MalformedInput("component: label must be a string");
    c.label = label_from_string(j["label"].get<std::string>());
    if (j.contains("orbit_parity")) {
        if (!j["orbit_parity"].is_string())
            throw MalformedInput("component: orbit_parity must be a string");
        c.parity = parity_from_string(j["orbit_parity"].get<std::string>());
    }
    if (j.contains("orbit")) {
        if (!j["orbit"].is_array()) throw MalformedInput("component: orbit must be an array");
        for (const json& e : j["orbit"]) {
            const Integer v = integer_from_json(e, "component orbit entry");
            if (v < 0 || !v.fits_uint_p())
                throw MalformedInput("component: orbit entry out of range");
            c.orbit.push_back(static_cast<std::uint32_t>(v.get_ui()));
        }
    }
    if (!j["generators"].is_array())
        throw MalformedInput("component: generators must be an array");
    for (const json& g : j["generators"]) c.vectors.push_back(cyc_row_from_json(g));
    if (j.contains("dimension")) {
        const Integer d = integer_from_json(j["dimension"], "component dimension");
        if (d < 0 || !d.fits_uint_p() || d.get_ui() != c.vectors.size())
            throw MalformedInput("component: \"dimension\" does not match the generator count");
    }
    return c;
}

json report_to_json(const DecompositionReport& r) {
    json components = json::array();
    for (const SubmoduleBasis& c : r.components) components.push_back(component_to_json(c));
    json out{{"n", r.n},
             {"field", r.field},
             {"components", std::move(components)},
             {"total_dimension", r.total_dimension()},
             {"notes", r.notes}};
    const bool dihedral_source = !r.quandle || r.quandle->is_dihedral();
    out["quandle"] = dihedral_source ? json("dihedral") : quandle_to_json(*r.quandle);
    return out;
}

DecompositionReport report_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("components"))
        throw MalformedInput("report: expected {\"n\", \"components\", ...}");
    DecompositionReport r;
    const Integer n = integer_from_json(j["n"], "report order");
    if (n <= 0 || !n.fits_uint_p()) throw MalformedInput("report: order out of range");
    r.n = static_cast<std::uint32_t>(n.get_ui());

    if (j.contains("field")) {
        if (!j["field"].is_string()) throw MalformedInput("report: field must be a string");
        r.field = j["field"].get<std::string>();
        if (r.field != "C" && r.field != "R")
            throw MalformedInput("report: field must be \"C\" or \"R\", got \"" + r.field + "\"");
    }
    if (j.contains("quandle") && !j["quandle"].is_string())
        r.quandle = quandle_from_json(j["quandle"]);
    else
        r.quandle = Quandle::dihedral(r.n);

    if (!j["components"].is_array())
        throw MalformedInput("report: components must be an array");
    for (const json& c : j["components"]) {
        SubmoduleBasis comp = component_from_json(c);
        for (const CycVec& row : comp.vectors)
            if (row.size() != r.n)
                throw MalformedInput("report: component row length does not match the order");
        r.components.push_back(std::move(comp));
    }
    if (j.contains("notes")) {
        if (!j["notes"].is_array()) throw MalformedInput("report: notes must be an array");
        for (const json& s : j["notes"]) {
            if (!s.is_string()) throw MalformedInput("report: notes must be strings");
            r.notes.push_back(s.get<std::string>());
        }
    }
    return r;
}

json verdict_to_json(const Verdict& v) {
    json components = json::array();
    for (const ComponentVerdict& c : v.components) {
        json jc{{"invariant", c.invariant}, {"indecomposable", c.indecomposable}};
        if (c.failure_x) jc["failure_x"] = *c.failure_x;
        if (c.failure_vector) jc["failure_vector"] = cyc_row_to_json(*c.failure_vector);
        if (c.self_inner_product)
            jc["self_inner_product"] = rational_to_json(*c.self_inner_product);
        components.push_back(std::move(jc));
    }
    json out{{"passed", v.passed()},
             {"dimension_sum", v.dimension_sum},
             {"pairwise_independent", v.pairwise_independent},
             {"components", std::move(components)}};
    if (v.dependence_witness)
        out["dependence_witness"] =
            json::array({v.dependence_witness->first, v.dependence_witness->second});
    return out;
}

}  // namespace qring
