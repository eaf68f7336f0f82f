#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mombound/cone.hpp"
#include "mombound/measures.hpp"
#include "mombound/momat.hpp"
#include "mombound/polynomial.hpp"
#include "mombound/problems.hpp"

namespace mombound {

using Json = nlohmann::json;

/// Term list [{"exps": [e1, ..., en], "coef": "p/q"}], graded lex order.
Json polynomial_to_json(const Polynomial& f);
/// Accepts the term list, or a string in the text format. Coefficients may
/// be strings ("p/q", "0.375") or JSON numbers (read from their decimal form).
Polynomial polynomial_from_json(const Json& j, std::size_t n);

/// {"kind": "...", "n": n, ...}; box adds "lower"/"upper", discrete adds
/// "points" and optional "weights", all as rational strings.
Json measure_to_json(const MeasureSpec& m);
/// Throws CapabilityError for unknown kinds, InputError for bad fields.
MeasureSpec measure_from_json(const Json& j);

/// {"v": 1, "variables": n, "objective": [...], "measure": {...}}
struct Problem {
  Polynomial objective{1};
  MeasureSpec measure = MeasureSpec::gaussian(1);
};
Json problem_to_json(const Problem& p);
Problem problem_from_json(const Json& j);

/// Square matrix as rows of rational strings; symmetry is required.
Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& rows);

/// {"v": 1, "n": n, "Q": [[...]], "seed": s}
Json maxcut_to_json(const MaxCutInstance& inst);
MaxCutInstance maxcut_from_json(const Json& j);

/// {"verdict", "k", "witness": [...] | null, "witness_value": "p/q" | null}
Json certificate_to_json(const Certificate& c);

Json copositivity_to_json(const CopositivityReport& r);

/// Parses text into JSON, converting syntax errors into InputError.
Json parse_json(const std::string& text);

}  // namespace mombound
