#include "khr/sweep.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "khr/errors.hpp"

namespace khr {

Coloring::Coloring(KnotParams params, std::vector<Interval> intervals)
    : params_(params), intervals_(std::move(intervals)) {}

void Coloring::check(std::int64_t d) const {
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const auto& iv = intervals_[i];
    KHR_ASSERT(distance(params_, {iv.start_x, iv.end_y}) > d, "dead interval in coloring");
    if (i > 0) {
      KHR_ASSERT(intervals_[i - 1].start_x < iv.start_x, "interval starts out of order");
      KHR_ASSERT(intervals_[i - 1].end_y < iv.end_y, "interval ends out of order");
    }
  }
}

int Coloring::strand_count(std::int64_t d) const {
  int strands = size();
  for (const auto& iv : intervals_) {
    // The interval spans y from just above (d + n A)/m up to B.
    const std::int64_t span = distance(params_, {iv.start_x, iv.end_y}) - d;
    strands += static_cast<int>((span - 1) / params_.m);
  }
  return strands;
}

Coloring initial_coloring(const KnotParams& params) {
  const KnotParams checked = KnotParams::make(params.m, params.n);
  return Coloring(checked, {Interval{0, checked.n}});
}

std::vector<Event> event_list(const KnotParams& params) {
  const KnotParams checked = KnotParams::make(params.m, params.n);
  const std::int64_t top = std::int64_t{checked.m} * checked.n;
  std::vector<Event> events;
  for (int x = 0; x <= checked.m; ++x)
    for (int y = 0; y <= checked.n; ++y) {
      const std::int64_t d = distance(checked, {x, y});
      if (d > 0 && d <= top) events.push_back({{x, y}, d});
    }
  std::sort(events.begin(), events.end(), [](const Event& e, const Event& f) {
    return e.d != f.d ? e.d < f.d : e.p.x < f.p.x;
  });
  for (std::size_t i = 1; i < events.size(); ++i)
    KHR_ASSERT(events[i - 1].d != events[i].d, "two lattice points at the same sweep height");
  return events;
}

Classification classify(const Coloring& state, const Point& p) {
  Classification found;
  const auto& ivs = state.intervals();
  for (int i = 0; i < static_cast<int>(ivs.size()); ++i) {
    const auto [a, b] = ivs[i];
    Rule rule;
    if (a == p.x && b == p.y)
      rule = Rule::Contract;
    else if (a == p.x && b > p.y)
      rule = Rule::StartPass;
    else if (b == p.y && a < p.x)
      rule = Rule::EndPass;
    else if (a < p.x && b > p.y)
      rule = Rule::Branch;
    else
      continue;
    if (found.index >= 0)
      throw UnsupportedConfiguration("intervals " + std::to_string(found.index) + " and " +
                                     std::to_string(i) + " both meet the sweep line at " +
                                     to_string(p));
    found = {rule, i};
  }
  return found;
}

std::string_view to_string(Tag tag) {
  switch (tag) {
    case Tag::Contract: return "Contract";
    case Tag::StartPass: return "StartPass";
    case Tag::EndPass: return "EndPass";
    case Tag::Split: return "Split";
    case Tag::Keep: return "Keep";
    case Tag::NoOp: return "NoOp";
    case Tag::Terminal: return "Terminal";
  }
  return "?";
}

Tag tag_from_string(std::string_view s) {
  for (Tag tag : {Tag::Contract, Tag::StartPass, Tag::EndPass, Tag::Split, Tag::Keep, Tag::NoOp,
                  Tag::Terminal})
    if (to_string(tag) == s) return tag;
  throw PreconditionError("unknown rule tag '" + std::string(s) + "'");
}

LaurentPoly WeightProfile::weight(Tag tag, int karg) const {
  switch (tag) {
    case Tag::Contract: return contract(karg);
    case Tag::StartPass: return startpass(karg);
    case Tag::EndPass: return endpass(karg);
    case Tag::Split: return split(karg);
    case Tag::Keep: return keep(karg);
    case Tag::NoOp: return LaurentPoly::constant(1);
    case Tag::Terminal: break;
  }
  throw InternalError("terminal events carry the base value, not a weight");
}

WeightProfile WeightProfile::hhh() {
  WeightProfile w;
  w.name = "HHH";
  w.contract = [](int k) { return var_q(k) - var_a(); };
  w.startpass = [](int) { return LaurentPoly::constant(1); };
  w.endpass = [](int) { return LaurentPoly::constant(1); };
  w.split = [](int k) { return var_q(-k); };
  w.keep = [](int k) { return var_t() * var_q(-k); };
  w.base = [] { return Invariant(LaurentPoly::constant(1), 1); };
  return w;
}

WeightProfile WeightProfile::scalar_i() {
  WeightProfile w;
  w.name = "I";
  w.contract = [](int k) { return var_a() - var_q(k); };
  w.startpass = [](int k) { return -var_q(k - 1); };
  w.endpass = [](int k) { return var_q(k - 1); };
  w.split = [](int) { return LaurentPoly::monomial({0, -1, 0}); };
  w.keep = [](int) { return var_t(); };
  w.base = [] { return Invariant(var_a() - LaurentPoly::constant(1)); };
  return w;
}

std::vector<Successor> apply(const Coloring& state, const Point& p, const Classification& c) {
  const int k = state.size();
  switch (c.rule) {
    case Rule::NoOp:
      return {{state, Tag::NoOp, 0}};
    case Rule::StartPass:
      return {{state, Tag::StartPass, k}};
    case Rule::EndPass:
      return {{state, Tag::EndPass, k}};
    case Rule::Contract: {
      auto ivs = state.intervals();
      ivs.erase(ivs.begin() + c.index);
      Coloring next(state.params(), std::move(ivs));
      if (k == 1) return {{std::move(next), Tag::Terminal, 0}};
      return {{std::move(next), Tag::Contract, k - 1}};
    }
    case Rule::Branch: {
      auto ivs = state.intervals();
      const Interval whole = ivs[c.index];
      ivs[c.index] = {whole.start_x, p.y};
      ivs.insert(ivs.begin() + c.index + 1, Interval{p.x, whole.end_y});
      return {{Coloring(state.params(), std::move(ivs)), Tag::Split, k},
              {state, Tag::Keep, k}};
    }
  }
  throw InternalError("unhandled rule");
}

namespace {

struct Explorer {
  const std::vector<Event>& events;
  const WeightProfile& profile;
  const Invariant base;
  std::vector<Leaf>& leaves;

  void run(std::size_t idx, const Coloring& state, const LaurentPoly& weight,
           std::vector<TaggedEvent>& trail) {
    KHR_ASSERT(idx < events.size(), "sweep ran out of events before the last contraction");
    const Event& ev = events[idx];
    const auto cls = classify(state, ev.p);
    for (auto& next : apply(state, ev.p, cls)) {
      trail.push_back({ev.p, next.tag, state.size()});
      if (next.tag == Tag::Terminal) {
        BranchRecord rec{trail};
        DyckPath path = reconstruct_path(rec, state.params());
        leaves.push_back({std::move(rec), std::move(path), weight * base});
      } else {
        next.state.check(ev.d);
        run(idx + 1, next.state, weight * profile.weight(next.tag, next.karg), trail);
      }
      trail.pop_back();
    }
  }
};

}  // namespace

SweepResult evaluate(const KnotParams& params, const WeightProfile& profile) {
  const Coloring start = initial_coloring(params);
  const auto events = event_list(params);
  SweepResult result;
  Explorer explorer{events, profile, profile.base(), result.leaves};
  std::vector<TaggedEvent> trail;
  explorer.run(0, start, LaurentPoly::constant(1), trail);
  std::sort(result.leaves.begin(), result.leaves.end(),
            [](const Leaf& x, const Leaf& y) { return x.path < y.path; });
  for (const auto& leaf : result.leaves) result.total += leaf.value;
  return result;
}

DyckPath reconstruct_path(const BranchRecord& record, const KnotParams& params) {
  const int m = params.m;
  const int n = params.n;

  // Height at which the path enters column x; the Keep points fill column x
  // from just above the diagonal up to one below that height.
  std::vector<int> enter(m + 1, 0);
  for (int x = 1; x < m; ++x) enter[x] = static_cast<int>(std::int64_t{n} * x / m) + 1;
  enter[m] = n;
  for (const auto& ev : record.events)
    if (ev.tag == Tag::Keep) {
      KHR_ASSERT(ev.p.x > 0 && ev.p.x < m, "Keep point outside the open strip");
      enter[ev.p.x] = std::max(enter[ev.p.x], ev.p.y + 1);
    }

  std::string steps;
  steps.reserve(m + n);
  int y = 0;
  for (int x = 0; x < m; ++x) {
    KHR_ASSERT(enter[x + 1] >= y, "Keep points do not bound a monotone path");
    steps.append(enter[x + 1] - y, 'N');
    y = enter[x + 1];
    steps.push_back('E');
  }

  std::optional<DyckPath> built;
  try {
    built.emplace(params, std::move(steps));
  } catch (const PreconditionError& e) {
    throw InternalError(std::string("branch record gives an invalid path: ") + e.what());
  }
  const DyckPath& path = *built;

  std::map<Point, Tag> expected;
  for (const auto& p : interior_points(path)) expected[p] = Tag::Keep;
  const auto pts = path.vertices();
  const auto& s = path.steps();
  for (std::size_t i = 1; i < s.size(); ++i) {
    const char in = s[i - 1];
    const char out = s[i];
    Tag t = in == 'N' ? (out == 'N' ? Tag::StartPass : Tag::Contract)
                      : (out == 'N' ? Tag::Split : Tag::EndPass);
    expected[pts[i]] = t;
  }
  expected[most_distant_outer(path)] = Tag::Terminal;

  std::size_t matched = 0;
  for (const auto& ev : record.events) {
    auto it = expected.find(ev.p);
    const Tag want = it == expected.end() ? Tag::NoOp : it->second;
    KHR_ASSERT(want == ev.tag, "event at " + to_string(ev.p) + " tagged " +
                                   std::string(to_string(ev.tag)) + " but path " + path.steps() +
                                   " implies " + std::string(to_string(want)));
    if (it != expected.end()) ++matched;
  }
  KHR_ASSERT(matched == expected.size(), "branch record misses points of path " + path.steps());
  KHR_ASSERT(!record.events.empty() && record.events.back().tag == Tag::Terminal,
             "branch record does not end in Terminal");
  return path;
}

}  // namespace khr
