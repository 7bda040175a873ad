#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "polyapprox/curve.hpp"

namespace polyapprox {

/// Vertex subset of a curve. Indices are distinct, sorted ascending and lie
/// in [0, n); the polygon visits them in circular order.
class PolygonApprox {
 public:
  PolygonApprox(std::size_t curve_size, std::vector<std::size_t> vertex_indices);

  std::size_t curve_size() const noexcept { return n_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  std::span<const std::size_t> vertices() const noexcept { return vertices_; }
  std::size_t operator[](std::size_t i) const noexcept { return vertices_[i]; }
  bool contains(std::size_t index) const noexcept;

  std::vector<Point> points(const DigitalCurve& curve) const;

  friend bool operator==(const PolygonApprox&, const PolygonApprox&) = default;

 private:
  std::size_t n_;
  std::vector<std::size_t> vertices_;
};

struct SegmentErrors {
  double sum_sq = 0.0;
  double max_e = 0.0;
};

struct PolygonErrors {
  double e2 = 0.0;
  double emax = 0.0;
};

/// Prefix sums of x, y, x^2, y^2 and xy over the curve traversed twice, so
/// any forward arc is a contiguous range. Integer sums are exact.
class MomentTables {
 public:
  explicit MomentTables(const DigitalCurve& curve);

  /// Sum of squared distances of the points strictly between u and v (forward
  /// arc) from the line through point(u) and point(v). Caller guarantees the
  /// endpoints differ.
  double arc_sum_sq(std::size_t u, std::size_t v) const noexcept;

  std::size_t curve_size() const noexcept { return n_; }

 private:
  struct Sums {
    std::int64_t x = 0, y = 0, xx = 0, yy = 0, xy = 0;
  };

  std::size_t n_;
  std::vector<Point> pts_;
  std::vector<Sums> prefix_;  // length 2n + 1
};

/// Forward-arc intervening point count between curve indices u and v.
inline std::size_t arc_interior_count(std::size_t n, std::size_t u, std::size_t v) noexcept {
  return (v + n - u) % n - 1;
}

double perpendicular_distance(const Point& pu, const Point& pv, const Point& pw);

SegmentErrors segment_errors(const DigitalCurve& curve, std::size_t u, std::size_t v,
                             const MomentTables& tables);
/// Direct loop over the intervening points; reference for segment_errors.
SegmentErrors segment_errors_naive(const DigitalCurve& curve, std::size_t u, std::size_t v);

PolygonErrors polygon_errors(const DigitalCurve& curve, const PolygonApprox& poly);
PolygonErrors polygon_errors(const DigitalCurve& curve, const PolygonApprox& poly,
                             const MomentTables& tables);

double compression_ratio(std::size_t n, std::size_t m);

}  // namespace polyapprox
