#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polyapprox {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/// Closed circular sequence of lattice points. At least three points, no two
/// circularly adjacent points equal. Immutable after construction.
class DigitalCurve {
 public:
  explicit DigitalCurve(std::vector<Point> points);

  std::size_t size() const noexcept { return points_.size(); }
  std::span<const Point> points() const noexcept { return points_; }

  /// Circular access: any integer index is reduced modulo n.
  const Point& at(std::int64_t i) const noexcept;
  const Point& operator[](std::size_t i) const noexcept { return points_[i]; }

 private:
  std::vector<Point> points_;
};

struct Line {
  Vec2 point;
  Vec2 direction;  // unit length
};

struct CurveGeometry {
  Vec2 centroid;
  double d1 = 0.0;
  Line inertia_line;
  double d2 = 0.0;
  double d = 0.0;
};

DigitalCurve parse_point_list(std::string_view text);
DigitalCurve parse_chain_code(Point start, std::string_view codes);
/// Chain-code file: "x0 y0" on the first content line, digits on the second.
DigitalCurve parse_chain_file(std::string_view text);

/// Freeman digit for a unit move, or -1 when (dx, dy) is not an 8-neighbour step.
int chain_digit(std::int64_t dx, std::int64_t dy) noexcept;

Vec2 centroid(const DigitalCurve& curve);
Line inertia_line(const DigitalCurve& curve);
CurveGeometry curve_geometry(const DigitalCurve& curve);

/// Index of the point farthest from the centroid, lowest index on ties.
/// Distances are compared exactly in integer arithmetic.
std::size_t farthest_from_centroid(const DigitalCurve& curve);

std::string format_point_list(std::span<const Point> points);

}  // namespace polyapprox
