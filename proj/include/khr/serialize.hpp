#pragma once

// JSON interchange and human-readable rendering.
//
//   term      {"a": int, "q2": int, "t2": int, "c": "<integer>"}
//   Invariant {"num": [term...], "one_minus_t_pow": int}
//   leaf      {"path": "NENEE", "rule_tags": {"(1,1)": "Split", ...}, "value": Invariant}
//
// Terms are written in (a, q2, t2) order, so output is byte-deterministic.

#include <string>

#include <json.hpp>

#include "khr/dyck.hpp"
#include "khr/laurent.hpp"
#include "khr/sweep.hpp"

namespace khr {

using Json = nlohmann::ordered_json;

Json to_json(const LaurentPoly& p);
Json to_json(const Invariant& v);
Json to_json(const PathStats& s, const DyckPath& path);
Json to_json(const Leaf& leaf);
Json leaf_table_json(const SweepResult& result);

// Throw PreconditionError on malformed input.
LaurentPoly laurent_from_json(const Json& j);
Invariant invariant_from_json(const Json& j);

enum class RenderStyle { Text, Latex };

// Pulls out the common power of a and, when every term has half-integer q
// and t exponents, a factor (qt)^{-1/2}.
std::string render(const Invariant& v, RenderStyle style);
std::string render(const LaurentPoly& p, RenderStyle style);

inline std::string to_latex(const Invariant& v) { return render(v, RenderStyle::Latex); }
inline std::string to_text(const Invariant& v) { return render(v, RenderStyle::Text); }

}  // namespace khr
