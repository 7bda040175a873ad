#include "polyapprox/approx_error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polyapprox/error.hpp"

namespace polyapprox {

namespace {

using i128 = __int128;

std::int64_t cross(const Point& pu, const Point& pv, const Point& pw) noexcept {
  return (pw.x - pu.x) * (pv.y - pu.y) - (pw.y - pu.y) * (pv.x - pu.x);
}

std::int64_t squared_length(const Point& pu, const Point& pv) noexcept {
  const std::int64_t dx = pv.x - pu.x;
  const std::int64_t dy = pv.y - pu.y;
  return dx * dx + dy * dy;
}

void check_segment(const DigitalCurve& curve, std::size_t u, std::size_t v) {
  const std::size_t n = curve.size();
  if (u >= n || v >= n || u == v) {
    throw Error(ErrorCode::InvalidCounts, "segment indices (" + std::to_string(u) + ", " +
                                              std::to_string(v) + ") invalid for n=" +
                                              std::to_string(n));
  }
  if (curve[u] == curve[v]) {
    throw Error(ErrorCode::DegenerateSegment, "vertices " + std::to_string(u) + " and " +
                                                  std::to_string(v) + " share coordinates");
  }
}

}  // namespace

PolygonApprox::PolygonApprox(std::size_t curve_size, std::vector<std::size_t> vertex_indices)
    : n_(curve_size), vertices_(std::move(vertex_indices)) {
  std::sort(vertices_.begin(), vertices_.end());
  const std::size_t m = vertices_.size();
  if (m < 3 || m > n_) {
    throw Error(ErrorCode::InvalidCounts, "polygon needs 3 <= m <= n, got m=" +
                                              std::to_string(m) + ", n=" + std::to_string(n_));
  }
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw Error(ErrorCode::InvalidCounts, "polygon vertex indices must be distinct");
  }
  if (vertices_.back() >= n_) {
    throw Error(ErrorCode::InvalidCounts, "vertex index " + std::to_string(vertices_.back()) +
                                              " out of range for n=" + std::to_string(n_));
  }
}

bool PolygonApprox::contains(std::size_t index) const noexcept {
  return std::binary_search(vertices_.begin(), vertices_.end(), index);
}

std::vector<Point> PolygonApprox::points(const DigitalCurve& curve) const {
  std::vector<Point> out;
  out.reserve(vertices_.size());
  for (std::size_t v : vertices_) out.push_back(curve[v]);
  return out;
}

MomentTables::MomentTables(const DigitalCurve& curve)
    : n_(curve.size()), pts_(curve.points().begin(), curve.points().end()) {
  prefix_.resize(2 * n_ + 1);
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    const Point& p = pts_[i % n_];
    Sums s = prefix_[i];
    s.x += p.x;
    s.y += p.y;
    s.xx += p.x * p.x;
    s.yy += p.y * p.y;
    s.xy += p.x * p.y;
    prefix_[i + 1] = s;
  }
}

double MomentTables::arc_sum_sq(std::size_t u, std::size_t v) const noexcept {
  const std::size_t end = v > u ? v : v + n_;
  if (end - u < 2) return 0.0;
  const Sums& hi = prefix_[end];
  const Sums& lo = prefix_[u + 1];
  const i128 k = static_cast<i128>(end - u - 1);
  const i128 sx = hi.x - lo.x, sy = hi.y - lo.y;
  const i128 sxx = hi.xx - lo.xx, syy = hi.yy - lo.yy, sxy = hi.xy - lo.xy;

  // cross(w) = a*x_w + b*y_w + c; the sum of its squares expands into the
  // prefix moments and is an exact integer.
  const Point& pu = pts_[u];
  const Point& pv = pts_[v];
  const i128 a = pv.y - pu.y;
  const i128 b = -(pv.x - pu.x);
  const i128 c = -(a * pu.x + b * pu.y);
  const i128 num = a * a * sxx + b * b * syy + 2 * a * b * sxy + 2 * a * c * sx +
                   2 * b * c * sy + k * c * c;
  return static_cast<double>(num) / static_cast<double>(a * a + b * b);
}

double perpendicular_distance(const Point& pu, const Point& pv, const Point& pw) {
  if (pu == pv) throw Error(ErrorCode::DegenerateSegment, "line endpoints coincide");
  return std::abs(static_cast<double>(cross(pu, pv, pw))) /
         std::sqrt(static_cast<double>(squared_length(pu, pv)));
}

SegmentErrors segment_errors(const DigitalCurve& curve, std::size_t u, std::size_t v,
                             const MomentTables& tables) {
  check_segment(curve, u, v);
  const std::size_t n = curve.size();
  SegmentErrors out;
  out.sum_sq = tables.arc_sum_sq(u, v);
  std::int64_t max_cross = 0;
  const Point& pu = curve[u];
  const Point& pv = curve[v];
  for (std::size_t w = (u + 1) % n; w != v; w = (w + 1) % n) {
    max_cross = std::max(max_cross, std::abs(cross(pu, pv, curve[w])));
  }
  out.max_e = static_cast<double>(max_cross) / std::sqrt(static_cast<double>(squared_length(pu, pv)));
  return out;
}

SegmentErrors segment_errors_naive(const DigitalCurve& curve, std::size_t u, std::size_t v) {
  check_segment(curve, u, v);
  const std::size_t n = curve.size();
  SegmentErrors out;
  for (std::size_t w = (u + 1) % n; w != v; w = (w + 1) % n) {
    const double e = perpendicular_distance(curve[u], curve[v], curve[w]);
    out.sum_sq += e * e;
    out.max_e = std::max(out.max_e, e);
  }
  return out;
}

PolygonErrors polygon_errors(const DigitalCurve& curve, const PolygonApprox& poly) {
  return polygon_errors(curve, poly, MomentTables(curve));
}

PolygonErrors polygon_errors(const DigitalCurve& curve, const PolygonApprox& poly,
                             const MomentTables& tables) {
  if (poly.curve_size() != curve.size()) {
    throw Error(ErrorCode::InvalidCounts, "polygon was built for a curve of " +
                                              std::to_string(poly.curve_size()) +
                                              " points, curve has " +
                                              std::to_string(curve.size()));
  }
  PolygonErrors out;
  const std::size_t m = poly.size();
  for (std::size_t j = 0; j < m; ++j) {
    const SegmentErrors s = segment_errors(curve, poly[j], poly[(j + 1) % m], tables);
    out.e2 += s.sum_sq;
    out.emax = std::max(out.emax, s.max_e);
  }
  return out;
}

double compression_ratio(std::size_t n, std::size_t m) {
  if (m < 3 || m > n) {
    throw Error(ErrorCode::InvalidCounts,
                "compression ratio needs 3 <= m <= n, got n=" + std::to_string(n) +
                    ", m=" + std::to_string(m));
  }
  return static_cast<double>(n) / static_cast<double>(m);
}

}  // namespace polyapprox
