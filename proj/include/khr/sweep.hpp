#pragma once

// The sweep-line recursion over admissible colorings.
//
// A line of slope slightly below n/m moves upward across the rectangle
// [0,m] x [0,n]. Its state is a list of disjoint intervals; each interval
// starts on a vertical grid line x = A and ends on a horizontal grid line
// y = B. Whenever the line passes a lattice point one of the local rules
// fires: contract a short interval, slide a start or end endpoint, or branch
// between splitting an interval at the point and keeping it whole. Each
// branch multiplies in a weight given by a WeightProfile.
//
// Positions along the line are never represented numerically. An event at
// lattice point p is resolved from the integer conditions A = x(p),
// B = y(p), A < x(p), B > y(p) alone.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "khr/dyck.hpp"
#include "khr/laurent.hpp"

namespace khr {

struct Interval {
  int start_x = 0;  // grid line x = A carrying the start endpoint
  int end_y = 0;    // grid line y = B carrying the end endpoint
  friend constexpr auto operator<=>(const Interval&, const Interval&) = default;
};

class Coloring {
 public:
  Coloring(KnotParams params, std::vector<Interval> intervals);

  const KnotParams& params() const noexcept { return params_; }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  int size() const noexcept { return static_cast<int>(intervals_.size()); }

  // Throws InternalError unless A and B increase strictly along the list and
  // every interval is still alive just after sweep parameter d.
  void check(std::int64_t d) const;

  // Number of strands of the associated braid diagram when the line sits
  // just after sweep parameter d: k plus the vertical grid lines crossed.
  int strand_count(std::int64_t d) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  KnotParams params_;
  std::vector<Interval> intervals_;
};

// The single tilted interval whose closure is the (m,n) torus knot.
Coloring initial_coloring(const KnotParams& params);

struct Event {
  Point p;
  std::int64_t d = 0;  // distance(p)
  friend bool operator==(const Event&, const Event&) = default;
};

// Lattice points with 0 < d <= m*n inside the rectangle, in the order the
// line meets them: d ascending, then x ascending.
std::vector<Event> event_list(const KnotParams& params);

enum class Rule { Contract, StartPass, EndPass, Branch, NoOp };

struct Classification {
  Rule rule = Rule::NoOp;
  int index = -1;  // affected interval, -1 for NoOp
};

// Throws UnsupportedConfiguration if two intervals meet p at once.
Classification classify(const Coloring& state, const Point& p);

enum class Tag { Contract, StartPass, EndPass, Split, Keep, NoOp, Terminal };

std::string_view to_string(Tag tag);
Tag tag_from_string(std::string_view s);

struct WeightProfile {
  std::string name;
  // Argument k' is the interval count after the move.
  std::function<LaurentPoly(int)> contract;
  std::function<LaurentPoly(int)> startpass;
  std::function<LaurentPoly(int)> endpass;
  // Argument k is the interval count before the branch.
  std::function<LaurentPoly(int)> split;
  std::function<LaurentPoly(int)> keep;
  std::function<Invariant()> base;

  // Weight of a non-terminal move; karg is the argument stored in Successor.
  LaurentPoly weight(Tag tag, int karg) const;

  // q^k - a per contraction, q^{-k} / t q^{-k} at branches, base 1/(1-t).
  static WeightProfile hhh();
  // The scalar evaluation I(c): a - q^k', -q^{k'-1}, q^{k'-1}, q^{-1/2}, t, base a - 1.
  static WeightProfile scalar_i();
};

struct Successor {
  Coloring state;
  Tag tag;
  int karg;  // argument to hand to the profile
};

// Terminal successors carry the emptied coloring; evaluation stops there.
std::vector<Successor> apply(const Coloring& state, const Point& p, const Classification& c);

struct TaggedEvent {
  Point p;
  Tag tag;
  int k;  // interval count before the event
  friend bool operator==(const TaggedEvent&, const TaggedEvent&) = default;
};

struct BranchRecord {
  std::vector<TaggedEvent> events;
};

struct Leaf {
  BranchRecord record;
  DyckPath path;
  Invariant value;
};

struct SweepResult {
  Invariant total;
  std::vector<Leaf> leaves;  // sorted by path
};

// Explores every branch. Leaves come back sorted by their reconstructed path.
SweepResult evaluate(const KnotParams& params, const WeightProfile& profile);

// The Dyck path traced by a branch: Keep points are the points strictly
// between path and diagonal, Split points the inner corners, Contract points
// the outer corners but the last, and Terminal the most distant outer corner.
// Throws InternalError if any tag disagrees with the rebuilt path.
DyckPath reconstruct_path(const BranchRecord& record, const KnotParams& params);

}  // namespace khr
