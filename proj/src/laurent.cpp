#include "khr/laurent.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "khr/errors.hpp"

namespace khr {

Coeff checked_add(Coeff x, Coeff y) {
  Coeff r;
  if (__builtin_add_overflow(x, y, &r))
    throw OverflowError("coefficient overflow in addition: " + std::to_string(x) + " + " +
                        std::to_string(y));
  return r;
}

Coeff checked_mul(Coeff x, Coeff y) {
  Coeff r;
  if (__builtin_mul_overflow(x, y, &r))
    throw OverflowError("coefficient overflow in multiplication: " + std::to_string(x) + " * " +
                        std::to_string(y));
  return r;
}

LaurentPoly::LaurentPoly(std::initializer_list<Term> terms)
    : LaurentPoly(from_terms(std::vector<Term>(terms))) {}

LaurentPoly LaurentPoly::constant(Coeff c) { return monomial({}, c); }

LaurentPoly LaurentPoly::monomial(Exponent e, Coeff c) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({e, c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.exp < y.exp; });
  LaurentPoly p;
  for (const auto& term : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == term.exp) {
      p.terms_.back().coeff = checked_add(p.terms_.back().coeff, term.coeff);
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(term);
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

Coeff LaurentPoly::coefficient(const Exponent& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& x, const Exponent& y) { return x.exp < y; });
  return (it != terms_.end() && it->exp == e) ? it->coeff : 0;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& term : p.terms_) term.coeff = checked_mul(term.coeff, -1);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& r) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + r.terms_.size());
  auto i = terms_.begin();
  auto j = r.terms_.begin();
  while (i != terms_.end() || j != r.terms_.end()) {
    if (j == r.terms_.end() || (i != terms_.end() && i->exp < j->exp)) {
      merged.push_back(*i++);
    } else if (i == terms_.end() || j->exp < i->exp) {
      merged.push_back(*j++);
    } else {
      Coeff c = checked_add(i->coeff, j->coeff);
      if (c != 0) merged.push_back({i->exp, c});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& r) { return *this += -r; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& r) { return *this = *this * r; }

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& r) {
  if (p.is_zero() || r.is_zero()) return {};
  if (r.size() == 1) return p.scaled(r.terms_[0].exp, r.terms_[0].coeff);
  if (p.size() == 1) return r.scaled(p.terms_[0].exp, p.terms_[0].coeff);
  std::vector<LaurentPoly::Term> prod;
  prod.reserve(p.size() * r.size());
  for (const auto& x : p.terms_)
    for (const auto& y : r.terms_) prod.push_back({x.exp + y.exp, checked_mul(x.coeff, y.coeff)});
  return LaurentPoly::from_terms(std::move(prod));
}

LaurentPoly LaurentPoly::scaled(const Exponent& e, Coeff c) const {
  if (c == 0) return {};
  LaurentPoly p = *this;
  // Adding a fixed exponent keeps the lexicographic order.
  for (auto& term : p.terms_) {
    term.exp = term.exp + e;
    term.coeff = checked_mul(term.coeff, c);
  }
  return p;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) throw PreconditionError("LaurentPoly::pow: negative exponent");
  LaurentPoly result = constant(1);
  for (int i = 0; i < k; ++i) result *= *this;
  return result;
}

LaurentPoly var_a(int k) { return LaurentPoly::monomial({k, 0, 0}); }
LaurentPoly var_q(int k) { return LaurentPoly::monomial({0, 2 * k, 0}); }
LaurentPoly var_t(int k) { return LaurentPoly::monomial({0, 0, 2 * k}); }

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& r) { return p + r; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& r) { return p * r; }

LaurentPoly swap_qt(const LaurentPoly& p) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& [e, c] : p.terms()) terms.push_back({{e.a, e.t2, e.q2}, c});
  return LaurentPoly::from_terms(std::move(terms));
}

static bool is_odd(int x) { return (x % 2) != 0; }

LaurentPoly euler_sign(const LaurentPoly& p) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& [e, c] : p.terms()) {
    if (is_odd(e.q2) != is_odd(e.t2))
      throw PreconditionError("euler_sign: term with q2=" + std::to_string(e.q2) +
                              ", t2=" + std::to_string(e.t2) + " has mismatched parity");
    terms.push_back({e, is_odd(e.q2) ? checked_mul(c, -1) : c});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

bool is_even_series(const LaurentPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const auto& term) { return !is_odd(term.exp.q2) && !is_odd(term.exp.t2); });
}

std::optional<MonomialRatio> monomial_ratio(const LaurentPoly& p, const LaurentPoly& r) {
  if (r.is_zero()) throw PreconditionError("monomial_ratio: divisor is zero");
  if (p.is_zero() || p.size() != r.size()) return std::nullopt;
  // Multiplying by a monomial preserves the term order, so leading terms pair up.
  const auto& lp = p.terms().front();
  const auto& lr = r.terms().front();
  if (lp.coeff % lr.coeff != 0) return std::nullopt;
  const Coeff c = lp.coeff / lr.coeff;
  const Exponent e = lp.exp - lr.exp;
  if (r.scaled(e, c) != p) return std::nullopt;
  return MonomialRatio{c > 0 ? 1 : -1, e, c > 0 ? c : -c};
}

std::optional<LaurentPoly> divide_exact_by_one_minus_t(const LaurentPoly& p) {
  // Within one (a, q2, t2 mod 2) class, p = (1 - t) s means the coefficients of
  // s are the running sums of those of p, and the full sum must vanish.
  std::map<std::tuple<int, int, int>, std::vector<LaurentPoly::Term>> classes;
  for (const auto& term : p.terms())
    classes[{term.exp.a, term.exp.q2, ((term.exp.t2 % 2) + 2) % 2}].push_back(term);

  std::vector<LaurentPoly::Term> quotient;
  for (auto& [key, terms] : classes) {
    // Already sorted by t2 inside the class.
    Coeff running = 0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      running = checked_add(running, terms[i].coeff);
      if (i + 1 == terms.size()) break;
      // s has the running sum at every t2 from terms[i] up to (but excluding) terms[i+1].
      for (int t2 = terms[i].exp.t2; t2 < terms[i + 1].exp.t2; t2 += 2)
        if (running != 0) quotient.push_back({{terms[i].exp.a, terms[i].exp.q2, t2}, running});
    }
    if (running != 0) return std::nullopt;
  }
  return LaurentPoly::from_terms(std::move(quotient));
}

static LaurentPoly one_minus_t() { return LaurentPoly::constant(1) - var_t(); }

Invariant::Invariant(LaurentPoly num, int one_minus_t_pow)
    : num_(std::move(num)), dpow_(one_minus_t_pow) {
  canonicalize();
}

void Invariant::canonicalize() {
  if (dpow_ < 0) {
    num_ *= one_minus_t().pow(-dpow_);
    dpow_ = 0;
  }
  if (num_.is_zero()) {
    dpow_ = 0;
    return;
  }
  while (dpow_ > 0) {
    auto q = divide_exact_by_one_minus_t(num_);
    if (!q) break;
    num_ = std::move(*q);
    --dpow_;
  }
}

LaurentPoly Invariant::numerator_over(int dpow) const {
  if (dpow < dpow_) throw PreconditionError("numerator_over: denominator power too small");
  return num_ * one_minus_t().pow(dpow - dpow_);
}

Invariant Invariant::operator-() const {
  Invariant v = *this;
  v.num_ = -v.num_;
  return v;
}

Invariant operator+(const Invariant& x, const Invariant& y) {
  const int d = std::max(x.dpow_, y.dpow_);
  return Invariant(x.numerator_over(d) + y.numerator_over(d), d);
}

Invariant operator*(const Invariant& x, const Invariant& y) {
  return Invariant(x.num_ * y.num_, x.dpow_ + y.dpow_);
}

Invariant operator*(const LaurentPoly& p, const Invariant& x) {
  return Invariant(p * x.num_, x.dpow_);
}

Invariant canonicalize(LaurentPoly num, int one_minus_t_pow) {
  return Invariant(std::move(num), one_minus_t_pow);
}

Coeff specialize_count(const Invariant& v) {
  Coeff total = 0;
  for (const auto& [e, c] : v.num().terms())
    if (e.a == 0) total = checked_add(total, c);
  return total;
}

}  // namespace khr
