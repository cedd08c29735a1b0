#include <gtest/gtest.h>

#include <numeric>

#include "khr/errors.hpp"
#include "khr/sweep.hpp"

namespace khr {
namespace {

const KnotParams k32{3, 2};
const LaurentPoly kOne = LaurentPoly::constant(1);

TEST(Sweep, InitialColoring) {
  EXPECT_EQ(initial_coloring(k32).intervals(), (std::vector<Interval>{{0, 2}}));
  EXPECT_EQ(initial_coloring({1, 1}).intervals(), (std::vector<Interval>{{0, 1}}));
  EXPECT_EQ(initial_coloring({4, 3}).intervals(), (std::vector<Interval>{{0, 3}}));
}

TEST(Sweep, ColoringInvariants) {
  EXPECT_NO_THROW(Coloring(k32, {{0, 1}, {1, 2}}).check(1));
  EXPECT_THROW(Coloring(k32, {{1, 1}, {0, 2}}).check(1), InternalError);
  EXPECT_THROW(Coloring(k32, {{0, 2}, {1, 2}}).check(1), InternalError);
}

TEST(Sweep, EventList) {
  EXPECT_EQ(event_list(k32), (std::vector<Event>{{{1, 1}, 1}, {{2, 2}, 2}, {{0, 1}, 3},
                                                 {{1, 2}, 4}, {{0, 2}, 6}}));
  EXPECT_EQ(event_list({1, 1}), (std::vector<Event>{{{0, 1}, 1}}));
  for (int m = 1; m <= 7; ++m)
    for (int n = 1; n <= 7; ++n) {
      if (std::gcd(m, n) != 1) continue;
      const auto ev = event_list({m, n});
      for (std::size_t i = 1; i < ev.size(); ++i) ASSERT_LT(ev[i - 1].d, ev[i].d);
    }
}

TEST(Sweep, Classify) {
  const Coloring whole(k32, {{0, 2}});
  const Coloring split(k32, {{0, 1}, {1, 2}});
  auto c = classify(whole, {1, 1});
  EXPECT_EQ(c.rule, Rule::Branch);
  EXPECT_EQ(c.index, 0);
  c = classify(split, {0, 1});
  EXPECT_EQ(c.rule, Rule::Contract);
  EXPECT_EQ(c.index, 0);
  EXPECT_EQ(classify(whole, {0, 1}).rule, Rule::StartPass);
  EXPECT_EQ(classify(whole, {2, 2}).rule, Rule::EndPass);
  EXPECT_EQ(classify(split, {2, 2}).rule, Rule::EndPass);
  EXPECT_EQ(classify(Coloring(k32, {{1, 2}}), {0, 1}).rule, Rule::NoOp);
}

TEST(Sweep, ClassifyRejectsDoubleEndpoint) {
  // The end of (0,1) and the start of (1,2) both sit on (1,1).
  const Coloring odd({3, 2}, {{0, 1}, {1, 2}});
  EXPECT_THROW(classify(odd, {1, 1}), UnsupportedConfiguration);
}

TEST(Sweep, ApplyBranch) {
  const Coloring whole(k32, {{0, 2}});
  const auto succ = apply(whole, {1, 1}, classify(whole, {1, 1}));
  ASSERT_EQ(succ.size(), 2u);
  EXPECT_EQ(succ[0].tag, Tag::Split);
  EXPECT_EQ(succ[0].state.intervals(), (std::vector<Interval>{{0, 1}, {1, 2}}));
  EXPECT_EQ(succ[1].tag, Tag::Keep);
  EXPECT_EQ(succ[1].state, whole);
  const auto w = WeightProfile::hhh();
  EXPECT_EQ(w.weight(succ[0].tag, succ[0].karg), var_q(-1));
  EXPECT_EQ(w.weight(succ[1].tag, succ[1].karg), var_t() * var_q(-1));
}

TEST(Sweep, ApplyContract) {
  const Coloring split(k32, {{0, 1}, {1, 2}});
  auto succ = apply(split, {0, 1}, classify(split, {0, 1}));
  ASSERT_EQ(succ.size(), 1u);
  EXPECT_EQ(succ[0].tag, Tag::Contract);
  EXPECT_EQ(succ[0].state.intervals(), (std::vector<Interval>{{1, 2}}));
  EXPECT_EQ(WeightProfile::hhh().weight(succ[0].tag, succ[0].karg), var_q() - var_a());

  const Coloring last(k32, {{1, 2}});
  succ = apply(last, {1, 2}, classify(last, {1, 2}));
  ASSERT_EQ(succ.size(), 1u);
  EXPECT_EQ(succ[0].tag, Tag::Terminal);
  EXPECT_EQ(WeightProfile::hhh().base(), Invariant(kOne, 1));
}

TEST(Sweep, TagNames) {
  for (Tag t : {Tag::Contract, Tag::StartPass, Tag::EndPass, Tag::Split, Tag::Keep, Tag::NoOp,
                Tag::Terminal})
    EXPECT_EQ(tag_from_string(to_string(t)), t);
  EXPECT_THROW(tag_from_string("Twist"), PreconditionError);
}

TEST(Sweep, EvaluateHHH) {
  const auto r = evaluate(k32, WeightProfile::hhh());
  EXPECT_EQ(r.total, Invariant(var_q(-1) * (var_t() + var_q() - var_a()), 1));
  ASSERT_EQ(r.leaves.size(), 2u);
  EXPECT_EQ(r.leaves[0].path.steps(), "NNEEE");
  EXPECT_EQ(r.leaves[1].path.steps(), "NENEE");

  const auto u = evaluate({1, 1}, WeightProfile::hhh());
  EXPECT_EQ(u.total, Invariant(kOne, 1));
  ASSERT_EQ(u.leaves.size(), 1u);
  EXPECT_EQ(u.leaves[0].path.steps(), "NE");
}

TEST(Sweep, EvaluateI) {
  const auto r = evaluate(k32, WeightProfile::scalar_i());
  const auto expected = (kOne - var_a()) * (var_t() + LaurentPoly::monomial({0, 3, 0}) -
                                            var_a() * LaurentPoly::monomial({0, 1, 0}));
  EXPECT_EQ(r.total, Invariant(expected));
  EXPECT_EQ(r.leaves.size(), 2u);
}

TEST(Sweep, LeafRecords) {
  const auto r = evaluate(k32, WeightProfile::hhh());
  const auto& keep = r.leaves[0].record.events;  // NNEEE
  const std::vector<TaggedEvent> expected{{{1, 1}, Tag::Keep, 1},     {{2, 2}, Tag::EndPass, 1},
                                          {{0, 1}, Tag::StartPass, 1}, {{1, 2}, Tag::EndPass, 1},
                                          {{0, 2}, Tag::Terminal, 1}};
  EXPECT_EQ(keep, expected);
  EXPECT_EQ(r.leaves[1].record.events.front().tag, Tag::Split);
}

TEST(Sweep, ReconstructPath) {
  const auto r = evaluate(k32, WeightProfile::hhh());
  EXPECT_EQ(reconstruct_path(r.leaves[0].record, k32).steps(), "NNEEE");
  EXPECT_EQ(reconstruct_path(r.leaves[1].record, k32).steps(), "NENEE");
  const auto u = evaluate({1, 1}, WeightProfile::hhh());
  EXPECT_EQ(reconstruct_path(u.leaves[0].record, {1, 1}).steps(), "NE");

  BranchRecord bad = r.leaves[0].record;
  bad.events[1].tag = Tag::NoOp;
  EXPECT_THROW(reconstruct_path(bad, k32), InternalError);
  BranchRecord truncated{{r.leaves[0].record.events.front()}};
  EXPECT_THROW(reconstruct_path(truncated, k32), InternalError);
}

TEST(Sweep, LeafCountIsRationalCatalan) {
  for (int m = 1; m <= 8; ++m)
    for (int n = 1; n + m <= 12; ++n) {
      if (std::gcd(m, n) != 1) continue;
      const auto r = evaluate({m, n}, WeightProfile::hhh());
      ASSERT_EQ(r.leaves.size(), rational_catalan(m, n)) << m << "," << n;
      for (std::size_t i = 1; i < r.leaves.size(); ++i)
        ASSERT_LT(r.leaves[i - 1].path, r.leaves[i].path);
    }
}

}  // namespace
}  // namespace khr
