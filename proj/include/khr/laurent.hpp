#pragma once

// Exact Laurent polynomials in a, q^{1/2}, t^{1/2} with integer coefficients,
// and fractions of them over powers of (1 - t).
//
// Exponents of q and t are stored doubled (q2 = 1 means q^{1/2}), so every
// exponent is an integer. Coefficients are 64-bit with checked arithmetic:
// any overflow throws OverflowError.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace khr {

using Coeff = std::int64_t;

struct Exponent {
  int a = 0;
  int q2 = 0;
  int t2 = 0;

  friend constexpr auto operator<=>(const Exponent&, const Exponent&) = default;

  constexpr Exponent operator+(const Exponent& o) const { return {a + o.a, q2 + o.q2, t2 + o.t2}; }
  constexpr Exponent operator-(const Exponent& o) const { return {a - o.a, q2 - o.q2, t2 - o.t2}; }
};

Coeff checked_add(Coeff x, Coeff y);
Coeff checked_mul(Coeff x, Coeff y);

class LaurentPoly {
 public:
  struct Term {
    Exponent exp;
    Coeff coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  LaurentPoly(std::initializer_list<Term> terms);

  static LaurentPoly constant(Coeff c);
  static LaurentPoly monomial(Exponent e, Coeff c = 1);
  // Sums duplicate exponents and drops zeros; input order is irrelevant.
  static LaurentPoly from_terms(std::vector<Term> terms);

  // Terms sorted by (a, q2, t2), no zero coefficients.
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Coeff coefficient(const Exponent& e) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& r);
  LaurentPoly& operator-=(const LaurentPoly& r);
  LaurentPoly& operator*=(const LaurentPoly& r);

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& r) { return p += r; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& r) { return p -= r; }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& r);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Multiply every term by c * x^e.
  LaurentPoly scaled(const Exponent& e, Coeff c = 1) const;
  LaurentPoly pow(int k) const;

 private:
  std::vector<Term> terms_;
};

// Variables, with integer exponents. Half powers go through LaurentPoly::monomial.
LaurentPoly var_a(int k = 1);
LaurentPoly var_q(int k = 1);
LaurentPoly var_t(int k = 1);

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& r);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& r);

// Exchange the roles of q and t.
LaurentPoly swap_qt(const LaurentPoly& p);

// Substitute (qt)^{1/2} -> -(qt)^{1/2}: negate the terms with odd q2.
// Throws PreconditionError if some term has q2 and t2 of different parity.
LaurentPoly euler_sign(const LaurentPoly& p);

// True iff every exponent of q and t is an integer.
bool is_even_series(const LaurentPoly& p);

struct MonomialRatio {
  int sign;            // +1 or -1
  Exponent exp;
  Coeff magnitude;     // > 0

  friend bool operator==(const MonomialRatio&, const MonomialRatio&) = default;
};

// Finds c * x^e with p == c * x^e * r. Empty if p is not such a multiple
// (including p == 0). r must be nonzero.
std::optional<MonomialRatio> monomial_ratio(const LaurentPoly& p, const LaurentPoly& r);

// p / (1 - t) when the division is exact in the Laurent ring, else empty.
std::optional<LaurentPoly> divide_exact_by_one_minus_t(const LaurentPoly& p);

// num / (1 - t)^one_minus_t_pow, kept in lowest terms.
class Invariant {
 public:
  Invariant() = default;
  explicit Invariant(LaurentPoly num, int one_minus_t_pow = 0);

  const LaurentPoly& num() const noexcept { return num_; }
  int one_minus_t_pow() const noexcept { return dpow_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  // Numerator over the given denominator power, which must be >= one_minus_t_pow().
  LaurentPoly numerator_over(int dpow) const;

  Invariant operator-() const;
  friend Invariant operator+(const Invariant& x, const Invariant& y);
  friend Invariant operator-(const Invariant& x, const Invariant& y) { return x + (-y); }
  friend Invariant operator*(const Invariant& x, const Invariant& y);
  friend Invariant operator*(const LaurentPoly& p, const Invariant& x);
  Invariant& operator+=(const Invariant& y) { return *this = *this + y; }
  friend bool operator==(const Invariant&, const Invariant&) = default;

 private:
  void canonicalize();

  LaurentPoly num_;
  int dpow_ = 0;
};

Invariant canonicalize(LaurentPoly num, int one_minus_t_pow);

// Numerator at a = 0, q = 1, t = 1. The denominator is ignored: callers pass
// (1 - t) * HHH so that this counts Dyck paths.
Coeff specialize_count(const Invariant& v);

}  // namespace khr
