#pragma once

// (m,n)-Dyck paths and the statistics that enter the superpolynomial formula.
//
// Geometry is done in "distance" units: a lattice point p has distance
// d(p) = m*y - n*x, which is m times its vertical offset from the diagonal.
// All predicates are integer comparisons on d.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace khr {

struct KnotParams {
  int m = 1;  // horizontal extent
  int n = 1;  // vertical extent

  // Throws PreconditionError for non-positive entries, LinksUnsupported if gcd > 1.
  static KnotParams make(int m, int n);

  friend constexpr auto operator<=>(const KnotParams&, const KnotParams&) = default;
};

struct Point {
  int x = 0;
  int y = 0;
  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

std::string to_string(const Point& p);

// m*y - n*x.
std::int64_t distance(const KnotParams& params, const Point& p);

// C(m+n, n) / (m+n), saturating at UINT64_MAX.
std::uint64_t rational_catalan(int m, int n);

class DyckPath {
 public:
  // Validates length, step counts and the staying-above condition.
  DyckPath(KnotParams params, std::string steps);

  const KnotParams& params() const noexcept { return params_; }
  // Over {N, E}.
  const std::string& steps() const noexcept { return steps_; }
  // The m+n+1 vertices from (0,0) to (m,n).
  std::vector<Point> vertices() const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  // Lexicographic in the step string with N < E.
  friend std::strong_ordering operator<=>(const DyckPath& x, const DyckPath& y);

 private:
  KnotParams params_;
  std::string steps_;
};

// Every Dyck path once, in lexicographic order of the step string (N < E).
std::vector<DyckPath> enumerate_paths(const KnotParams& params);

// Unit cells lying entirely between the path and the diagonal.
int area(const DyckPath& path);

// Pairs (horizontal step, later vertical step) met by a common line parallel to the diagonal.
int hplus(const DyckPath& path);

// Pairs (horizontal step, later vertical step).
int opairs(const DyckPath& path);

struct Corners {
  std::vector<Point> outer;  // N then E
  std::vector<Point> inner;  // E then N
};
Corners corners(const DyckPath& path);

// Number of vertical steps whose interior meets the slope-n/m line through p.
// Also counts horizontal steps and throws InternalError if the two differ.
// At the farthest outer corner, where the line only touches the path, this is 1.
int k_of(const DyckPath& path, const Point& p);

// The outer corner farthest from the diagonal (unique for coprime m, n).
Point most_distant_outer(const DyckPath& path);

// Outer corners minus the most distant one.
std::vector<Point> vstar(const DyckPath& path);

// Lattice points with positive distance lying strictly below the path.
std::vector<Point> interior_points(const DyckPath& path);

struct PathStats {
  int area = 0;
  int hplus = 0;
  std::vector<Point> outer;
  std::vector<Point> inner;
  std::vector<Point> vstar;
  std::vector<Point> interior;
  int opairs = 0;
  // k for every point of vstar, inner and interior.
  std::map<Point, int> kvals;
};

PathStats compute_stats(const DyckPath& path);

}  // namespace khr
