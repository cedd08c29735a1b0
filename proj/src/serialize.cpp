#include "khr/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <climits>
#include <sstream>

#include "khr/errors.hpp"

namespace khr {

Json to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({{"a", e.a}, {"q2", e.q2}, {"t2", e.t2}, {"c", std::to_string(c)}});
  return terms;
}

Json to_json(const Invariant& v) {
  return {{"num", to_json(v.num())}, {"one_minus_t_pow", v.one_minus_t_pow()}};
}

static Json points_json(const std::vector<Point>& pts) {
  Json arr = Json::array();
  for (const auto& p : pts) arr.push_back({p.x, p.y});
  return arr;
}

Json to_json(const PathStats& s, const DyckPath& path) {
  Json kvals = Json::object();
  for (const auto& [p, k] : s.kvals) kvals[to_string(p)] = k;
  return {{"path", path.steps()},
          {"area", s.area},
          {"hplus", s.hplus},
          {"outer", points_json(s.outer)},
          {"inner", points_json(s.inner)},
          {"vstar", points_json(s.vstar)},
          {"interior", points_json(s.interior)},
          {"opairs", s.opairs},
          {"kvals", kvals}};
}

Json to_json(const Leaf& leaf) {
  Json tags = Json::object();
  for (const auto& ev : leaf.record.events) tags[to_string(ev.p)] = std::string(to_string(ev.tag));
  return {{"path", leaf.path.steps()}, {"rule_tags", tags}, {"value", to_json(leaf.value)}};
}

Json leaf_table_json(const SweepResult& result) {
  Json arr = Json::array();
  for (const auto& leaf : result.leaves) arr.push_back(to_json(leaf));
  return arr;
}

namespace {

int int_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
    throw PreconditionError(std::string("expected integer field '") + key + "'");
  const auto v = j.at(key).get<std::int64_t>();
  if (v < INT_MIN || v > INT_MAX) throw PreconditionError(std::string("field '") + key + "' out of range");
  return static_cast<int>(v);
}

Coeff parse_coeff(const Json& j) {
  if (!j.is_string()) throw PreconditionError("coefficient must be a string-encoded integer");
  const auto& s = j.get_ref<const std::string&>();
  Coeff c = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, c);
  if (ec == std::errc::result_out_of_range) throw OverflowError("coefficient '" + s + "' out of range");
  if (ec != std::errc() || ptr != last || s.empty())
    throw PreconditionError("malformed coefficient '" + s + "'");
  return c;
}

}  // namespace

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_array()) throw PreconditionError("polynomial must be a JSON array of terms");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j) {
    if (!t.contains("c")) throw PreconditionError("term without coefficient");
    terms.push_back({{int_field(t, "a"), int_field(t, "q2"), int_field(t, "t2")}, parse_coeff(t.at("c"))});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

Invariant invariant_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num")) throw PreconditionError("invariant must have a 'num' field");
  const int d = int_field(j, "one_minus_t_pow");
  if (d < 0) throw PreconditionError("negative denominator power");
  return Invariant(laurent_from_json(j.at("num")), d);
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

struct Syntax {
  const char* mul;
  const char* open_exp;
  const char* close_exp;
  const char* lparen;
  const char* rparen;
};

const Syntax kText{"*", "^(", ")", "(", ")"};
const Syntax kLatex{" ", "^{", "}", "\\left(", "\\right)"};

const Syntax& syntax(RenderStyle style) { return style == RenderStyle::Latex ? kLatex : kText; }

// Variable to a doubled exponent, e.g. ("q", 3) -> q^{3/2}.
std::string power(const char* var, int doubled, RenderStyle style) {
  if (doubled == 0) return {};
  const Syntax& sx = syntax(style);
  if (doubled == 2) return var;
  std::string e = doubled % 2 == 0 ? std::to_string(doubled / 2) : std::to_string(doubled) + "/2";
  // Plain positive integer exponents need no parentheses in text mode.
  if (style == RenderStyle::Text && doubled % 2 == 0 && doubled > 0) return std::string(var) + "^" + e;
  return std::string(var) + sx.open_exp + e + sx.close_exp;
}

std::string join_factors(const std::vector<std::string>& parts, RenderStyle style) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += syntax(style).mul;
    out += p;
  }
  return out;
}

std::string monomial(const Exponent& e, RenderStyle style) {
  std::vector<std::string> parts{power("a", 2 * e.a, style)};
  if (e.q2 % 2 != 0 && e.t2 % 2 != 0) {
    // q^{i/2} t^{j/2} with i, j odd: (qt)^{1/2} q^{(i-1)/2} t^{(j-1)/2}
    parts.push_back(style == RenderStyle::Latex ? "(qt)^{1/2}" : "(qt)^(1/2)");
    parts.push_back(power("q", e.q2 - 1, style));
    parts.push_back(power("t", e.t2 - 1, style));
  } else {
    parts.push_back(power("q", e.q2, style));
    parts.push_back(power("t", e.t2, style));
  }
  return join_factors(parts, style);
}

std::string sum(const LaurentPoly& p, RenderStyle style) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool neg = c < 0;
    const auto abs_c = neg ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    const std::string mag = std::to_string(abs_c);
    std::string mono = monomial(e, style);
    std::string term;
    if (mono.empty())
      term = mag;
    else if (mag == "1")
      term = mono;
    else
      term = mag + syntax(style).mul + mono;
    if (first)
      out += neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

struct Rendered {
  std::string text;
  bool bare_sum = false;  // several terms with no enclosing parentheses
};

Rendered render_poly(const LaurentPoly& p, RenderStyle style) {
  if (p.is_zero()) return {"0"};
  const Syntax& sx = syntax(style);

  int min_a = p.terms().front().exp.a;  // terms are sorted by a first
  const bool all_half = std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) {
    return t.exp.q2 % 2 != 0 && t.exp.t2 % 2 != 0;
  });
  const Exponent shift{-min_a, all_half ? 1 : 0, all_half ? 1 : 0};
  const LaurentPoly rest = p.scaled(shift);

  std::vector<std::string> prefix{power("a", 2 * min_a, style)};
  if (all_half) prefix.push_back(style == RenderStyle::Latex ? "(qt)^{-1/2}" : "(qt)^(-1/2)");
  const std::string pre = join_factors(prefix, style);
  const std::string body = sum(rest, style);
  if (pre.empty()) return {body, rest.size() > 1};
  if (rest.size() == 1 && rest.terms()[0].coeff == 1 && rest.terms()[0].exp == Exponent{})
    return {pre};
  if (rest.size() == 1 && rest.terms()[0].coeff > 0) return {pre + sx.mul + body};
  return {pre + sx.mul + sx.lparen + body + sx.rparen};
}

}  // namespace

std::string render(const LaurentPoly& p, RenderStyle style) { return render_poly(p, style).text; }

std::string render(const Invariant& v, RenderStyle style) {
  const Rendered r = render_poly(v.num(), style);
  const std::string& num = r.text;
  const int d = v.one_minus_t_pow();
  if (d == 0) return num;
  std::ostringstream out;
  if (style == RenderStyle::Latex) {
    out << "\\frac{" << num << "}{" << (d == 1 ? "1-t" : "(1-t)^{" + std::to_string(d) + "}")
        << "}";
  } else {
    out << (r.bare_sum ? "(" + num + ")" : num) << "/(1-t)";
    if (d > 1) out << "^" << d;
  }
  return out.str();
}

}  // namespace khr
