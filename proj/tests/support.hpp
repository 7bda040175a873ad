#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "polyapprox/approx_error.hpp"
#include "polyapprox/curve.hpp"

namespace testsupport {

using polyapprox::DigitalCurve;
using polyapprox::Point;

// 8-point square outline: corners at even indices, edge midpoints at odd.
inline DigitalCurve square_with_midpoints() {
  return DigitalCurve({{0, 0}, {2, 0}, {4, 0}, {4, 2}, {4, 4}, {2, 4}, {0, 4}, {0, 2}});
}

// n distinct random lattice points in [0, span)^2, visited in random order.
inline DigitalCurve random_curve(std::mt19937_64& rng, std::size_t n, std::int64_t span = 20) {
  std::uniform_int_distribution<std::int64_t> coord(0, span - 1);
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  std::vector<Point> pts;
  while (pts.size() < n) {
    const Point p{coord(rng), coord(rng)};
    if (seen.insert({p.x, p.y}).second) pts.push_back(p);
  }
  return DigitalCurve(std::move(pts));
}

// Distance from w to the line through u and v, written out independently of
// the library.
inline double line_distance(const Point& u, const Point& v, const Point& w) {
  const double ax = static_cast<double>(v.x - u.x);
  const double ay = static_cast<double>(v.y - u.y);
  const double bx = static_cast<double>(w.x - u.x);
  const double by = static_cast<double>(w.y - u.y);
  return std::abs(ax * by - ay * bx) / std::hypot(ax, ay);
}

struct NaiveErrors {
  double e2 = 0.0;
  double emax = 0.0;
  bool degenerate = false;
};

// Walks every side of the polygon (sorted vertex indices) point by point.
inline NaiveErrors naive_polygon_errors(const DigitalCurve& c, const std::vector<std::size_t>& v) {
  NaiveErrors out;
  const std::size_t n = c.size();
  for (std::size_t j = 0; j < v.size(); ++j) {
    const std::size_t a = v[j];
    const std::size_t b = v[(j + 1) % v.size()];
    if (c[a] == c[b]) {
      out.degenerate = true;
      return out;
    }
    for (std::size_t w = (a + 1) % n; w != b; w = (w + 1) % n) {
      const double d = line_distance(c[a], c[b], c[w]);
      out.e2 += d * d;
      out.emax = std::max(out.emax, d);
    }
  }
  return out;
}

struct BruteOptimum {
  double e2 = std::numeric_limits<double>::infinity();
  double emax = std::numeric_limits<double>::infinity();
};

// Exhaustive minimum over all m-subsets of curve indices that contain start.
inline BruteOptimum brute_force_optimum(const DigitalCurve& c, std::size_t start, std::size_t m) {
  const std::size_t n = c.size();
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != start) others.push_back(i);
  }
  BruteOptimum best;
  std::vector<bool> pick(others.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(m - 1), true);
  do {
    std::vector<std::size_t> verts{start};
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (pick[i]) verts.push_back(others[i]);
    }
    std::sort(verts.begin(), verts.end());
    const NaiveErrors e = naive_polygon_errors(c, verts);
    if (e.degenerate) continue;
    best.e2 = std::min(best.e2, e.e2);
    best.emax = std::min(best.emax, e.emax);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

inline double relative_diff(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

}  // namespace testsupport
