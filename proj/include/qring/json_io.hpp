#pragma once

#include <json.hpp>

#include "qring/decomposition.hpp"
#include "qring/quandle.hpp"
#include "qring/quandle_ring.hpp"
#include "qring/rational.hpp"

namespace qring {

/// JSON conventions, shared by every command:
///   Rational          [num, den] with integer entries (strings accepted and
///                     emitted when a value exceeds 64 bits)
///   Cyclotomic        a plain Rational when the value is rational, else
///                     {"m": conductor, "coeffs": [Rational, ...]}
///   Quandle           {"n": order, "table": [[...], ...]} with table[x][y] = x |> y
///   RingElement/row   {"n": order, "coeffs": [Cyclotomic, ...]}
///   SubmoduleBasis    {"orbit": [...], "orbit_parity": "even"|"odd"|"mixed",
///                      "label": "triv"|"ref"|"lin_k"|"psi_j", "dimension": d,
///                      "generators": [row, ...]}
///   Report            {"n", "field", "quandle": "dihedral"|Quandle,
///                      "components": [...], "total_dimension", "notes"}
///   Verdict           {"passed", "dimension_sum", "pairwise_independent",
///                      "dependence_witness"?, "components": [...]}
/// Schema violations throw MalformedInput.

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json cyclotomic_to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const nlohmann::json& j);

nlohmann::json quandle_to_json(const Quandle& q);
/// Validates the table; axiom failures propagate as AxiomViolation.
QuandlePtr quandle_from_json(const nlohmann::json& j);

nlohmann::json cyc_row_to_json(const CycVec& v);
CycVec cyc_row_from_json(const nlohmann::json& j);

nlohmann::json component_to_json(const SubmoduleBasis& c);
SubmoduleBasis component_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const DecompositionReport& r);
DecompositionReport report_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const Verdict& v);

std::string label_to_string(const IrreducibleLabel& l);
IrreducibleLabel label_from_string(const std::string& s);

std::string parity_to_string(OrbitParity p);
OrbitParity parity_from_string(const std::string& s);

}  // namespace qring
