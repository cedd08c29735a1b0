#include "khr/dyck.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "khr/errors.hpp"

namespace khr {

KnotParams KnotParams::make(int m, int n) {
  if (m <= 0 || n <= 0)
    throw PreconditionError("torus knot parameters must be positive, got (" + std::to_string(m) +
                            "," + std::to_string(n) + ")");
  if (int g = std::gcd(m, n); g != 1) throw LinksUnsupported(m, n, g);
  return KnotParams{m, n};
}

std::string to_string(const Point& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::int64_t distance(const KnotParams& params, const Point& p) {
  return std::int64_t{params.m} * p.y - std::int64_t{params.n} * p.x;
}

__extension__ typedef unsigned __int128 u128;

std::uint64_t rational_catalan(int m, int n) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const int total = m + n;
  const int k = std::min(m, n);
  u128 c = 1;
  for (int i = 0; i < k; ++i) {
    c = c * static_cast<unsigned>(total - i) / static_cast<unsigned>(i + 1);
    if (c > static_cast<u128>(kMax) * static_cast<unsigned>(total)) return kMax;
  }
  c /= static_cast<unsigned>(total);
  return c > kMax ? kMax : static_cast<std::uint64_t>(c);
}

DyckPath::DyckPath(KnotParams params, std::string steps)
    : params_(params), steps_(std::move(steps)) {
  const auto north = std::count(steps_.begin(), steps_.end(), 'N');
  const auto east = std::count(steps_.begin(), steps_.end(), 'E');
  if (north != params_.n || east != params_.m ||
      static_cast<std::size_t>(north + east) != steps_.size())
    throw PreconditionError("'" + steps_ + "' is not a lattice path from (0,0) to (" +
                            std::to_string(params_.m) + "," + std::to_string(params_.n) + ")");
  for (const auto& v : vertices())
    if (distance(params_, v) < 0)
      throw PreconditionError("'" + steps_ + "' dips below the diagonal at " + to_string(v));
}

std::strong_ordering operator<=>(const DyckPath& x, const DyckPath& y) {
  // N and E compare in reverse of their character codes.
  return y.steps_ <=> x.steps_;
}

std::vector<Point> DyckPath::vertices() const {
  std::vector<Point> pts;
  pts.reserve(steps_.size() + 1);
  Point p{0, 0};
  pts.push_back(p);
  for (char s : steps_) {
    if (s == 'N')
      ++p.y;
    else
      ++p.x;
    pts.push_back(p);
  }
  return pts;
}

namespace {

void extend(const KnotParams& params, std::string& prefix, Point at,
            std::vector<DyckPath>& out) {
  if (at.x == params.m && at.y == params.n) {
    out.emplace_back(params, prefix);
    return;
  }
  if (at.y < params.n) {
    prefix.push_back('N');
    extend(params, prefix, {at.x, at.y + 1}, out);
    prefix.pop_back();
  }
  if (at.x < params.m && distance(params, {at.x + 1, at.y}) >= 0) {
    prefix.push_back('E');
    extend(params, prefix, {at.x + 1, at.y}, out);
    prefix.pop_back();
  }
}

// Height of the horizontal step leaving column x, for x in [0, m).
std::vector<int> column_heights(const DyckPath& path) {
  std::vector<int> h;
  h.reserve(path.params().m);
  int y = 0;
  for (char s : path.steps()) {
    if (s == 'N')
      ++y;
    else
      h.push_back(y);
  }
  return h;
}

}  // namespace

std::vector<DyckPath> enumerate_paths(const KnotParams& params) {
  const KnotParams checked = KnotParams::make(params.m, params.n);
  std::vector<DyckPath> out;
  std::string prefix;
  prefix.reserve(checked.m + checked.n);
  extend(checked, prefix, {0, 0}, out);
  return out;
}

int area(const DyckPath& path) {
  const auto& [m, n] = path.params();
  const auto h = column_heights(path);
  int cells = 0;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < h[x]; ++y)
      if (distance(path.params(), {x + 1, y}) > 0) ++cells;
  return cells;
}

int hplus(const DyckPath& path) {
  const auto& params = path.params();
  const auto pts = path.vertices();
  const auto& steps = path.steps();
  int count = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] != 'E') continue;
    const std::int64_t hi1 = distance(params, pts[i]);
    const std::int64_t lo1 = hi1 - params.n;
    for (std::size_t j = i + 1; j < steps.size(); ++j) {
      if (steps[j] != 'N') continue;
      const std::int64_t lo2 = distance(params, pts[j]);
      const std::int64_t hi2 = lo2 + params.m;
      const std::int64_t lo = std::max(lo1, lo2);
      const std::int64_t hi = std::min(hi1, hi2);
      KHR_ASSERT(lo != hi, "step offset ranges touch at a single point");
      if (lo < hi) ++count;
    }
  }
  return count;
}

int opairs(const DyckPath& path) {
  int east_seen = 0;
  int count = 0;
  for (char s : path.steps()) {
    if (s == 'E')
      ++east_seen;
    else
      count += east_seen;
  }
  return count;
}

Corners corners(const DyckPath& path) {
  Corners c;
  const auto pts = path.vertices();
  const auto& steps = path.steps();
  for (std::size_t i = 1; i < steps.size(); ++i) {
    if (steps[i - 1] == 'N' && steps[i] == 'E') c.outer.push_back(pts[i]);
    if (steps[i - 1] == 'E' && steps[i] == 'N') c.inner.push_back(pts[i]);
  }
  return c;
}

int k_of(const DyckPath& path, const Point& p) {
  const auto& params = path.params();
  const std::int64_t dp = distance(params, p);
  const auto pts = path.vertices();
  const auto& steps = path.steps();
  int vertical = 0;
  int horizontal = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::int64_t d = distance(params, pts[i]);
    if (steps[i] == 'N') {
      if (d < dp && dp < d + params.m) ++vertical;
    } else {
      if (d - params.n < dp && dp < d) ++horizontal;
    }
  }
  KHR_ASSERT(vertical == horizontal,
             "line through " + to_string(p) + " crosses " + std::to_string(vertical) +
                 " vertical and " + std::to_string(horizontal) + " horizontal steps of " +
                 path.steps());
  // The line through the farthest outer corner touches the path only there;
  // that touching counts once, matching the single interval left at the end
  // of the sweep.
  if (vertical == 0 && p == most_distant_outer(path)) return 1;
  return vertical;
}

Point most_distant_outer(const DyckPath& path) {
  const auto outer = corners(path).outer;
  KHR_ASSERT(!outer.empty(), "path without outer corner");
  const auto& params = path.params();
  auto best = std::max_element(outer.begin(), outer.end(), [&](const Point& x, const Point& y) {
    return distance(params, x) < distance(params, y);
  });
  for (auto it = outer.begin(); it != outer.end(); ++it)
    KHR_ASSERT(it == best || distance(params, *it) != distance(params, *best),
               "tie for the most distant outer corner");
  return *best;
}

std::vector<Point> vstar(const DyckPath& path) {
  auto outer = corners(path).outer;
  const Point far = most_distant_outer(path);
  std::erase(outer, far);
  return outer;
}

std::vector<Point> interior_points(const DyckPath& path) {
  const auto& params = path.params();
  const auto h = column_heights(path);
  std::vector<Point> pts;
  // The path enters column x (for 0 < x < m) at height h[x-1]; column 0 and
  // column m hold no point strictly between the path and the diagonal.
  for (int x = 1; x < params.m; ++x)
    for (int y = 0; y < h[x - 1]; ++y)
      if (distance(params, {x, y}) > 0) pts.push_back({x, y});
  return pts;
}

PathStats compute_stats(const DyckPath& path) {
  PathStats s;
  s.area = area(path);
  s.hplus = hplus(path);
  auto c = corners(path);
  s.outer = std::move(c.outer);
  s.inner = std::move(c.inner);
  s.vstar = vstar(path);
  s.interior = interior_points(path);
  s.opairs = opairs(path);
  for (const auto* group : {&s.outer, &s.inner, &s.interior})
    for (const auto& p : *group) s.kvals[p] = k_of(path, p);
  return s;
}

}  // namespace khr
