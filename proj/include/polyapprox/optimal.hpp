#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "polyapprox/approx_error.hpp"
#include "polyapprox/curve.hpp"
#include "polyapprox/kernels.hpp"

namespace polyapprox {

/// Minimum polygon error for each vertex count m in [3, m_max], over polygons
/// whose vertices lie on the curve and include `start`.
class ErrorProfile {
 public:
  ErrorProfile(std::size_t start, CostKind kind, std::vector<double> values_by_m);

  std::size_t start() const noexcept { return start_; }
  CostKind kind() const noexcept { return kind_; }
  std::size_t m_min() const noexcept { return 3; }
  std::size_t m_max() const noexcept { return values_.size() - 1; }
  /// Throws OutOfRange outside [3, m_max].
  double at(std::size_t m) const;

 private:
  std::size_t start_;
  CostKind kind_;
  std::vector<double> values_;  // indexed by m; entries below 3 unused
};

struct OptimalBaseline {
  double error_optimal = 0.0;
  double m_optimal = 0.0;
  std::size_t start = 0;
  std::size_t m_sub = 0;
  CostKind kind = CostKind::SumSquared;
  /// m_optimal was clamped because error_sub fell outside the profile range.
  bool clamped = false;
};

/// Dynamic program over (arc end position, segments used) for one start
/// vertex. Keeps the predecessor table so optimal polygons can be rebuilt.
class OptimalSolver {
 public:
  OptimalSolver(const SegmentCostTable& table, std::size_t start, std::size_t m_max,
                CostKind kind, Execution exec = Execution::Parallel);

  const ErrorProfile& profile() const noexcept { return profile_; }
  /// Optimal m-vertex polygon; predecessor ties resolve to the smaller index.
  PolygonApprox polygon(std::size_t m) const;

 private:
  std::size_t n_;
  std::size_t start_;
  std::vector<std::int32_t> parent_;  // (m_max + 1) x (n + 1)
  ErrorProfile profile_;
};

ErrorProfile optimal_profile(const DigitalCurve& curve, std::size_t start, std::size_t m_max,
                             CostKind kind);

std::size_t select_start_vertex(const DigitalCurve& curve, std::size_t m_sub, CostKind kind);
std::size_t select_start_vertex(const DigitalCurve& curve, const SegmentCostTable& table,
                                std::size_t m_sub, CostKind kind);

/// Vertex count the optimal algorithm needs to reach `error_sub`, linearly
/// interpolated between consecutive profile entries. When error_sub equals a
/// plateau of several m, the smallest one is returned unless `prefer_m` lies on
/// that plateau. Throws OutOfRange when error_sub is outside
/// [values[m_max], values[3]].
double interpolate_m_optimal(const ErrorProfile& profile, double error_sub,
                             std::optional<std::size_t> prefer_m = std::nullopt);

/// Relative tolerance under which error_sub counts as an exact profile hit.
inline constexpr double kExactHitRelTol = 1e-10;

/// Default profile length for a sub-optimal polygon of m_sub vertices.
std::size_t default_profile_m_max(std::size_t n, std::size_t m_sub);

struct BaselineOptions {
  /// 0 selects default_profile_m_max.
  std::size_t m_max = 0;
};

OptimalBaseline optimal_baseline(const DigitalCurve& curve, const PolygonApprox& poly_sub,
                                 CostKind kind, BaselineOptions options = {});

/// Shares the segment-cost table and per-(kind, m_sub) DP runs across every
/// polygon evaluated on one curve.
class BaselineEngine {
 public:
  explicit BaselineEngine(const DigitalCurve& curve, BaselineOptions options = {},
                          Execution exec = Execution::Parallel);

  const DigitalCurve& curve() const noexcept { return *curve_; }
  const SegmentCostTable& table() const noexcept { return table_; }

  OptimalBaseline baseline(const PolygonApprox& poly_sub, CostKind kind);
  /// Same as baseline() but with the sub-optimal error supplied by the caller.
  OptimalBaseline baseline(std::size_t m_sub, double error_sub, CostKind kind);

  std::size_t start_vertex(std::size_t m_sub, CostKind kind);
  const OptimalSolver& solver(std::size_t m_sub, CostKind kind);

 private:
  struct Entry {
    std::size_t m_sub;
    CostKind kind;
    std::size_t start;
    std::optional<OptimalSolver> solver;
  };

  Entry& entry(std::size_t m_sub, CostKind kind);

  const DigitalCurve* curve_;
  BaselineOptions options_;
  Execution exec_;
  SegmentCostTable table_;
  std::deque<Entry> entries_;
};

}  // namespace polyapprox
