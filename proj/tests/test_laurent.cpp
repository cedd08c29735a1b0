#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "khr/errors.hpp"
#include "khr/laurent.hpp"
#include "khr/serialize.hpp"

namespace khr {
namespace {

const LaurentPoly kOne = LaurentPoly::constant(1);
const LaurentPoly a = var_a();
const LaurentPoly q = var_q();
const LaurentPoly t = var_t();
// (qt)^{-1/2}
const LaurentPoly qt_mhalf = LaurentPoly::monomial({0, -1, -1});

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 5), ex(-3, 3), co(-4, 4);
  std::vector<LaurentPoly::Term> terms;
  for (int i = nterms(rng); i > 0; --i) terms.push_back({{ex(rng), ex(rng), ex(rng)}, co(rng)});
  return LaurentPoly::from_terms(std::move(terms));
}

TEST(Laurent, Add) {
  EXPECT_EQ((q + t) + (-t), q);
  EXPECT_EQ(q + LaurentPoly{}, q);
  EXPECT_EQ((q - a) + t, q + t - a);
  EXPECT_EQ(add(q, t), q + t);
}

TEST(Laurent, Mul) {
  EXPECT_EQ(q * (kOne - a * var_q(-1)), q - a);
  EXPECT_EQ(qt_mhalf * LaurentPoly::monomial({0, 1, 1}), kOne);
  EXPECT_EQ((kOne - a) * (kOne - t), kOne - a - t + a * t);
  EXPECT_EQ(mul(q, t), LaurentPoly::monomial({0, 2, 2}));
  EXPECT_TRUE((q * LaurentPoly{}).is_zero());
}

TEST(Laurent, TermsAreCanonical) {
  auto p = LaurentPoly::from_terms({{{0, 2, 0}, 3}, {{1, 0, 0}, 1}, {{0, 2, 0}, -3}, {{0, 0, 0}, 0}});
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.terms()[0].exp, (Exponent{1, 0, 0}));
  auto r = t + q + a + kOne;
  std::vector<Exponent> order;
  for (const auto& term : r.terms()) order.push_back(term.exp);
  EXPECT_EQ(order, (std::vector<Exponent>{{0, 0, 0}, {0, 0, 2}, {0, 2, 0}, {1, 0, 0}}));
}

TEST(Laurent, OverflowIsDetected) {
  const auto big = LaurentPoly::constant(std::numeric_limits<Coeff>::max());
  EXPECT_THROW(big + kOne, OverflowError);
  EXPECT_THROW(big * LaurentPoly::constant(2), OverflowError);
  EXPECT_THROW(-LaurentPoly::constant(std::numeric_limits<Coeff>::min()), OverflowError);
  EXPECT_THROW(checked_mul(std::numeric_limits<Coeff>::min(), -1), OverflowError);
}

TEST(Laurent, SwapQt) {
  EXPECT_EQ(swap_qt(q + t), q + t);
  EXPECT_EQ(swap_qt(q * q + q * t), t * t + q * t);
  // Trefoil numerator a (qt)^{-1/2} (q + t - a) is q,t-symmetric.
  const auto trefoil = a * qt_mhalf * (q + t - a);
  EXPECT_EQ(swap_qt(trefoil), trefoil);
}

TEST(Laurent, EulerSign) {
  EXPECT_EQ(euler_sign(kOne + q * t), kOne + q * t);
  EXPECT_EQ(euler_sign(a * qt_mhalf), -(a * qt_mhalf));
  const auto trefoil = a * qt_mhalf * (q + t - a);
  EXPECT_EQ(euler_sign(trefoil), -trefoil);
  EXPECT_THROW(euler_sign(LaurentPoly::monomial({0, 1, 0})), PreconditionError);
}

TEST(Laurent, MonomialRatio) {
  auto r = monomial_ratio(LaurentPoly::constant(2) * q * q, LaurentPoly::constant(2) * q);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, (MonomialRatio{1, {0, 2, 0}, 1}));
  EXPECT_FALSE(monomial_ratio(q + t, q));
  auto r2 = monomial_ratio(q * (q + t - a), q + t - a);
  ASSERT_TRUE(r2);
  EXPECT_EQ(*r2, (MonomialRatio{1, {0, 2, 0}, 1}));
  auto r3 = monomial_ratio(LaurentPoly::constant(-3) * a * (q - t), q - t);
  ASSERT_TRUE(r3);
  EXPECT_EQ(*r3, (MonomialRatio{-1, {1, 0, 0}, 3}));
  EXPECT_FALSE(monomial_ratio(LaurentPoly{}, q));
  EXPECT_FALSE(monomial_ratio(q + t, q + LaurentPoly::constant(2) * t));
  EXPECT_THROW(monomial_ratio(q, LaurentPoly{}), PreconditionError);
}

TEST(Laurent, IsEvenSeries) {
  EXPECT_TRUE(is_even_series(var_q(-1) * (q + t - a)));
  EXPECT_FALSE(is_even_series(LaurentPoly::monomial({0, 1, 0})));
  EXPECT_TRUE(is_even_series(LaurentPoly{}));
}

TEST(Laurent, DivideByOneMinusT) {
  const auto one_minus_t = kOne - t;
  EXPECT_EQ(divide_exact_by_one_minus_t(one_minus_t), kOne);
  EXPECT_EQ(divide_exact_by_one_minus_t(kOne - t * t), kOne + t);
  EXPECT_FALSE(divide_exact_by_one_minus_t(q + t - a));
  const auto p = a * qt_mhalf * (q + var_t(-2) - a) * one_minus_t;
  EXPECT_EQ(divide_exact_by_one_minus_t(p), a * qt_mhalf * (q + var_t(-2) - a));
  EXPECT_EQ(divide_exact_by_one_minus_t(LaurentPoly{}), LaurentPoly{});
}

TEST(Laurent, InvariantCanonicalForm) {
  const Invariant v((q + t - a) * (kOne - t) * (kOne - t), 3);
  EXPECT_EQ(v.one_minus_t_pow(), 1);
  EXPECT_EQ(v.num(), q + t - a);
  EXPECT_EQ(Invariant(LaurentPoly{}, 4).one_minus_t_pow(), 0);
  EXPECT_EQ(canonicalize(kOne - t, 1), Invariant(kOne));

  // 1/(1-t) + t/(1-t) stays over (1-t); 1/(1-t) - t/(1-t) = 1.
  const Invariant x(kOne, 1), y(t, 1);
  EXPECT_EQ((x + y).num(), kOne + t);
  EXPECT_EQ(x - y, Invariant(kOne));
  EXPECT_EQ(Invariant(kOne) + x, Invariant(LaurentPoly::constant(2) - t, 1));
  EXPECT_EQ(x * x, Invariant(kOne, 2));
}

TEST(Laurent, SpecializeCount) {
  EXPECT_EQ(specialize_count(Invariant(q + t - a)), 2);
  EXPECT_EQ(specialize_count(Invariant(kOne)), 1);
  // Sum of the five (4,3)/(3,4) q,t-Catalan monomials with a-free terms only.
  const auto p = q * q * q + q * q * t + q * t * t + t * t * t + q * t - a * (q + t);
  EXPECT_EQ(specialize_count(Invariant(p)), 5);
}

TEST(LaurentProperties, RingAxioms) {
  std::mt19937 rng(20231);
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = random_poly(rng), y = random_poly(rng), z = random_poly(rng);
    ASSERT_EQ(x + y, y + x);
    ASSERT_EQ(x * y, y * x);
    ASSERT_EQ((x + y) + z, x + (y + z));
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_TRUE((x - x).is_zero());
  }
}

TEST(LaurentProperties, Involutions) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    auto x = random_poly(rng);
    ASSERT_EQ(swap_qt(swap_qt(x)), x);
    // Restrict to the parity-coherent domain of euler_sign.
    std::vector<LaurentPoly::Term> coherent;
    for (auto term : x.terms()) {
      if ((term.exp.q2 - term.exp.t2) % 2 != 0) term.exp.t2 += 1;
      coherent.push_back(term);
    }
    const auto y = LaurentPoly::from_terms(coherent);
    ASSERT_EQ(euler_sign(euler_sign(y)), y);
  }
}

TEST(LaurentProperties, SpecializeMatchesTermIteration) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = random_poly(rng);
    Coeff direct = 0;
    for (const auto& [e, c] : x.terms()) direct += e.a == 0 ? c : 0;
    ASSERT_EQ(specialize_count(Invariant(x)), direct);
  }
}

TEST(LaurentProperties, DivisionInvertsMultiplication) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = random_poly(rng);
    ASSERT_EQ(divide_exact_by_one_minus_t(x * (kOne - t)), x);
    const Invariant v(x * (kOne - t), 1);
    ASSERT_EQ(v, Invariant(x));
  }
}

TEST(LaurentProperties, JsonRoundTrip) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Invariant v(random_poly(rng), trial % 3);
    const std::string text = to_json(v).dump();
    const Invariant back = invariant_from_json(Json::parse(text));
    ASSERT_EQ(back, v);
    ASSERT_EQ(to_json(back).dump(), text);
  }
}

}  // namespace
}  // namespace khr
