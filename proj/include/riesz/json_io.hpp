#pragma once

#include "riesz/approx.hpp"
#include "riesz/duality.hpp"
#include "riesz/ideals.hpp"
#include "riesz/piecewise_linear.hpp"
#include "riesz/spaces.hpp"

#include <json.hpp>

namespace riesz {

/// Preserves insertion order so every command emits fields
/// deterministically. Rationals always travel as reduced "p/q" strings;
/// no binary floats cross the I/O boundary.
using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);

Json lex_to_json(const LexElement& x);
LexElement lex_from_json(const Json& j);

// {"t": [...], "v": [...]}
Json pl_to_json(const PLFunction& f);
PLFunction pl_from_json(const Json& j);

// {"n": int, "zero_set": [int, ...]}
Json ideal_to_json(const SupportIdeal& d);
SupportIdeal ideal_from_json(const Json& j);

// {"points": ["p", "q", ...]}
Json finite_space_to_json(const FiniteSpace& x);
FiniteSpace finite_space_from_json(const Json& j);

// {"map": {"p": "r", ...}}; decoding needs the two spaces.
Json space_map_to_json(const SpaceMap& f);
SpaceMap space_map_from_json(const Json& j, FiniteSpace source, FiniteSpace target);

// {"assign": [{"from": i, "coeff": "p/q"}, ...]}
Json fin_hom_to_json(const FinHom& h);
FinHom fin_hom_from_json(const Json& j, std::size_t source_dim);

// {"index": i, "coeff": "p/q"}
Json spectrum_point_to_json(const SpectrumPoint& p);

// tagged tree {"op": "join"|"meet"|"add"|"scale"|"gen"|"const", ...}
Json expr_to_json(const LatticeExpr& e);
LatticeExpr expr_from_json(const Json& j);

// {"names": [...], "values": {point: ["p/q", ...]}}
Json generator_set_to_json(const GeneratorSet& d);
GeneratorSet generator_set_from_json(const Json& j, FiniteSpace domain);

// {"points": [...], "values": [...]}
Json target_to_json(const SampledTarget& g);
SampledTarget target_from_json(const Json& j);

Json law_report_to_json(const LawReport& r);

} // namespace riesz
