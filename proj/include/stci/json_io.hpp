#pragma once

#include "stci/bresinsky.hpp"
#include "stci/deform.hpp"
#include "stci/family.hpp"
#include "stci/herzog.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace stci {

using OJson = nlohmann::ordered_json;

// Rationals cross the JSON boundary as strings: "p" or "p/q"
// (rat_to_string / rat_from_string from rational.hpp).

// Enum names used in JSON output.
std::string verdict_name(CertVerdict v);
std::string verdict_name(ValueVerdict v);
std::string subcase_name(H2Subcase c);

OJson to_json(const NumericalSemigroup& s);
OJson to_json(const GapData& g);
OJson to_json(const Sextuple& t);
OJson to_json(const HerzogData& h);
OJson to_json(const DefiningEquations& e);
OJson to_json(const Gs1Image& r);
OJson to_json(const Gs2Image& r);
OJson to_json(const BresinskyData& b);
OJson to_json(const Parametrization& p);
OJson to_json(const CancellationWitness& w);
OJson to_json(const ValueSemigroupData& v);
OJson to_json(const LiftData& l);
OJson to_json(const Inequality& iq);
OJson to_json(const StciCertificate& c);
OJson to_json(const FamilyInstance& f);
OJson to_json(const ConductorBounds& b);
OJson to_json(const ClauseReport& r);
OJson to_json(const ScanRow& r);

// Parametrization input format:
//   { "l": 5, "m": 7, "n": 13,
//     "tails": { "y": [[11, "1"]], "z": [] } }
// Tail keys are "x", "y", "z" (each optional); entries are [exponent, coeff]
// with the coefficient an integer or a rational string. Throws ParseError on
// malformed input, then the make_parametrization checks apply.
Parametrization parse_parametrization(const OJson& j);
Parametrization parse_parametrization_file(const std::string& path);

// Scan output: one JSON object per row (JSON lines), or CSV with a header.
std::string scan_jsonl(const std::vector<ScanRow>& rows);
std::string scan_csv(const std::vector<ScanRow>& rows);

} // namespace stci
