#include "polyapprox/optimal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polyapprox/error.hpp"

namespace polyapprox {

ErrorProfile::ErrorProfile(std::size_t start, CostKind kind, std::vector<double> values_by_m)
    : start_(start), kind_(kind), values_(std::move(values_by_m)) {
  if (values_.size() < 4) {
    throw Error(ErrorCode::InvalidCounts, "profile must cover at least m = 3");
  }
}

double ErrorProfile::at(std::size_t m) const {
  if (m < 3 || m > m_max()) {
    throw Error(ErrorCode::OutOfRange, "profile covers m in [3, " + std::to_string(m_max()) +
                                           "], asked for m=" + std::to_string(m));
  }
  return values_[m];
}

OptimalSolver::OptimalSolver(const SegmentCostTable& table, std::size_t start,
                             std::size_t m_max, CostKind kind, Execution exec)
    : n_(table.curve_size()),
      start_(start),
      profile_(start, kind, std::vector<double>(4, 0.0)) {
  if (m_max < 3 || m_max > n_) {
    throw Error(ErrorCode::InvalidCounts, "profile needs 3 <= m_max <= n, got m_max=" +
                                              std::to_string(m_max) + ", n=" + std::to_string(n_));
  }
  if (start >= n_) {
    throw Error(ErrorCode::InvalidCounts, "start index " + std::to_string(start) +
                                              " out of range for n=" + std::to_string(n_));
  }
  const std::size_t width = n_ + 1;
  parent_.assign((m_max + 1) * width, -1);
  std::vector<double> prev(width, kInfeasible);
  std::vector<double> next(width, kInfeasible);
  prev[0] = 0.0;

  std::vector<double> values(m_max + 1, kInfeasible);
  for (std::size_t layer = 1; layer <= m_max; ++layer) {
    const std::span<std::int32_t> parent(parent_.data() + layer * width, width);
    if (exec == Execution::Serial) {
      kernels::relax_layer_serial(table, kind, start, layer, prev, next, parent);
    } else {
      kernels::relax_layer_parallel(table, kind, start, layer, prev, next, parent);
    }
    values[layer] = next[n_];
    std::swap(prev, next);
  }
  profile_ = ErrorProfile(start, kind, std::move(values));
}

PolygonApprox OptimalSolver::polygon(std::size_t m) const {
  if (m < 3 || m > profile_.m_max()) {
    throw Error(ErrorCode::OutOfRange, "no optimal polygon with m=" + std::to_string(m));
  }
  const std::size_t width = n_ + 1;
  std::vector<std::size_t> vertices{start_};
  std::size_t k = n_;
  for (std::size_t layer = m; layer >= 2; --layer) {
    const std::int32_t i = parent_[layer * width + k];
    if (i <= 0) {
      throw Error(ErrorCode::DegenerateSegment,
                  "no feasible " + std::to_string(m) + "-vertex polygon from start " +
                      std::to_string(start_));
    }
    k = static_cast<std::size_t>(i);
    vertices.push_back((start_ + k) % n_);
  }
  return PolygonApprox(n_, std::move(vertices));
}

ErrorProfile optimal_profile(const DigitalCurve& curve, std::size_t start, std::size_t m_max,
                             CostKind kind) {
  const SegmentCostTable table(curve);
  return OptimalSolver(table, start, m_max, kind).profile();
}

std::size_t select_start_vertex(const DigitalCurve& curve, std::size_t m_sub, CostKind kind) {
  return select_start_vertex(curve, SegmentCostTable(curve), m_sub, kind);
}

std::size_t select_start_vertex(const DigitalCurve& curve, const SegmentCostTable& table,
                                std::size_t m_sub, CostKind kind) {
  const std::size_t n = curve.size();
  if (m_sub < 3 || m_sub > n) {
    throw Error(ErrorCode::InvalidCounts, "start selection needs 3 <= m <= n, got m=" +
                                              std::to_string(m_sub) + ", n=" +
                                              std::to_string(n));
  }
  const std::size_t provisional = farthest_from_centroid(curve);
  const OptimalSolver solver(table, provisional, m_sub, kind);
  const PolygonApprox poly = solver.polygon(m_sub);
  std::size_t best = provisional;
  std::size_t best_offset = n;
  for (std::size_t v : poly.vertices()) {
    const std::size_t offset = (v + n - provisional) % n;
    if (offset > 0 && offset < best_offset) {
      best_offset = offset;
      best = v;
    }
  }
  return best;
}

double interpolate_m_optimal(const ErrorProfile& profile, double error_sub,
                             std::optional<std::size_t> prefer_m) {
  const std::size_t lo = profile.m_min();
  const std::size_t hi = profile.m_max();
  const auto hit = [&](std::size_t m) {
    const double v = profile.at(m);
    return std::abs(v - error_sub) <= kExactHitRelTol * std::max(std::abs(v), std::abs(error_sub));
  };

  if (prefer_m && *prefer_m >= lo && *prefer_m <= hi && hit(*prefer_m)) {
    return static_cast<double>(*prefer_m);
  }
  for (std::size_t m = lo; m <= hi; ++m) {
    if (hit(m)) return static_cast<double>(m);
  }
  if (error_sub > profile.at(lo)) {
    throw Error(ErrorCode::OutOfRange, "error " + std::to_string(error_sub) +
                                           " exceeds the m=3 optimum " +
                                           std::to_string(profile.at(lo)));
  }
  for (std::size_t m = lo; m < hi; ++m) {
    const double above = profile.at(m);
    const double below = profile.at(m + 1);
    if (above > error_sub && error_sub > below) {
      return static_cast<double>(m) + (above - error_sub) / (above - below);
    }
  }
  throw Error(ErrorCode::OutOfRange, "error " + std::to_string(error_sub) +
                                         " is below the m=" + std::to_string(hi) +
                                         " optimum " + std::to_string(profile.at(hi)));
}

std::size_t default_profile_m_max(std::size_t n, std::size_t m_sub) {
  return std::min(n, std::max<std::size_t>(3 * m_sub, 3));
}

OptimalBaseline optimal_baseline(const DigitalCurve& curve, const PolygonApprox& poly_sub,
                                 CostKind kind, BaselineOptions options) {
  BaselineEngine engine(curve, options);
  return engine.baseline(poly_sub, kind);
}

BaselineEngine::BaselineEngine(const DigitalCurve& curve, BaselineOptions options,
                               Execution exec)
    : curve_(&curve), options_(options), exec_(exec), table_(curve, exec) {}

BaselineEngine::Entry& BaselineEngine::entry(std::size_t m_sub, CostKind kind) {
  for (Entry& e : entries_) {
    if (e.m_sub == m_sub && e.kind == kind) return e;
  }
  const std::size_t n = curve_->size();
  const std::size_t start = select_start_vertex(*curve_, table_, m_sub, kind);
  std::size_t m_max = options_.m_max == 0 ? default_profile_m_max(n, m_sub)
                                          : std::min(options_.m_max, n);
  m_max = std::max(m_max, m_sub);
  entries_.push_back(Entry{m_sub, kind, start, OptimalSolver(table_, start, m_max, kind, exec_)});
  return entries_.back();
}

std::size_t BaselineEngine::start_vertex(std::size_t m_sub, CostKind kind) {
  return entry(m_sub, kind).start;
}

const OptimalSolver& BaselineEngine::solver(std::size_t m_sub, CostKind kind) {
  return *entry(m_sub, kind).solver;
}

OptimalBaseline BaselineEngine::baseline(const PolygonApprox& poly_sub, CostKind kind) {
  const PolygonErrors err = polygon_errors(*curve_, poly_sub);
  return baseline(poly_sub.size(), kind == CostKind::SumSquared ? err.e2 : err.emax, kind);
}

OptimalBaseline BaselineEngine::baseline(std::size_t m_sub, double error_sub, CostKind kind) {
  const Entry& e = entry(m_sub, kind);
  const ErrorProfile& profile = e.solver->profile();
  OptimalBaseline out;
  out.start = e.start;
  out.m_sub = m_sub;
  out.kind = kind;
  out.error_optimal = profile.at(m_sub);
  try {
    out.m_optimal = interpolate_m_optimal(profile, error_sub, m_sub);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::OutOfRange) throw;
    out.clamped = true;
    out.m_optimal = static_cast<double>(error_sub > profile.at(profile.m_min())
                                            ? profile.m_min()
                                            : profile.m_max());
  }
  return out;
}

}  // namespace polyapprox
