#include <gtest/gtest.h>

#include <numeric>

#include "khr/errors.hpp"
#include "khr/formula.hpp"
#include "oracle.hpp"

namespace khr {
namespace {

const LaurentPoly kOne = LaurentPoly::constant(1);
const LaurentPoly a = var_a(), q = var_q(), t = var_t();

LaurentPoly from_oracle(const oracle::Poly& p) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& [e, c] : p) terms.push_back({{std::get<0>(e), std::get<1>(e), std::get<2>(e)}, c});
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly frozen(std::initializer_list<std::pair<Exponent, Coeff>> terms) {
  std::vector<LaurentPoly::Term> out;
  for (const auto& [e, c] : terms) out.push_back({e, c});
  return LaurentPoly::from_terms(std::move(out));
}

// a (qt)^{-1/2} (q + t - a)
const LaurentPoly kTrefoilNum = frozen({{{1, -1, 1}, 1}, {{1, 1, -1}, 1}, {{2, -1, -1}, -1}});

TEST(Formula, Chi) {
  EXPECT_EQ(chi({3, 2}), 1);
  EXPECT_EQ(chi({1, 9}), 0);
  EXPECT_EQ(chi({4, 3}), 3);
  EXPECT_THROW(chi({4, 2}), LinksUnsupported);
  const auto nd = normalization({4, 3});
  EXPECT_EQ(nd.prefactor, LaurentPoly::monomial({3, -3, -3}));
}

TEST(Formula, PathSummand) {
  EXPECT_EQ(path_summand(DyckPath({3, 2}, "NNEEE")), t);
  EXPECT_EQ(path_summand(DyckPath({3, 2}, "NENEE")), q - a);
  EXPECT_EQ(path_summand(DyckPath({1, 6}, "NNNNNNE")), kOne);
}

TEST(Formula, HhhDirect) {
  const Invariant expected(var_q(-1) * (t + q - a), 1);
  EXPECT_EQ(hhh_direct({3, 2}), expected);
  EXPECT_EQ(hhh_direct({2, 3}), expected);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(hhh_direct({1, n}), Invariant(kOne, 1));
}

TEST(Formula, InvariantP) {
  EXPECT_EQ(invariant_p({3, 2}), Invariant(kTrefoilNum, 1));
  EXPECT_EQ(invariant_p({2, 3}), Invariant(kTrefoilNum, 1));
  EXPECT_EQ(invariant_p({1, 5}), Invariant(kOne, 1));
  EXPECT_THROW(invariant_p({6, 4}), LinksUnsupported);
}

// Values computed by the brute-force reference and frozen here.
TEST(Formula, FrozenReferenceValues) {
  EXPECT_EQ(invariant_p({5, 2}),
            Invariant(frozen({{{2, -2, 2}, 1}, {{2, 0, 0}, 1}, {{2, 2, -2}, 1},
                              {{3, -2, 0}, -1}, {{3, 0, -2}, -1}}),
                      1));
  EXPECT_EQ(invariant_p({4, 3}),
            Invariant(frozen({{{3, -3, 3}, 1},
                              {{3, -1, -1}, 1},
                              {{3, -1, 1}, 1},
                              {{3, 1, -1}, 1},
                              {{3, 3, -3}, 1},
                              {{4, -3, -1}, -1},
                              {{4, -3, 1}, -1},
                              {{4, -1, -3}, -1},
                              {{4, -1, -1}, -1},
                              {{4, 1, -3}, -1},
                              {{5, -3, -3}, 1}}),
                      1));
}

TEST(Formula, AgreesWithOracle) {
  for (int sum = 2; sum <= 13; ++sum)
    for (int m = 1; m < sum; ++m) {
      const int n = sum - m;
      if (std::gcd(m, n) != 1) continue;
      const auto expected = from_oracle(oracle::Oracle{m, n}.p_numerator());
      ASSERT_EQ(invariant_p({m, n}).numerator_over(1), expected) << m << "," << n;
    }
}

TEST(Formula, EulerCharacteristic) {
  EXPECT_EQ(euler_characteristic(invariant_p({1, 4})), Invariant(kOne, 1));
  EXPECT_EQ(euler_characteristic(invariant_p({3, 2})), Invariant(-kTrefoilNum, 1));
  EXPECT_EQ(euler_characteristic(Invariant{}), Invariant{});
}

}  // namespace
}  // namespace khr
