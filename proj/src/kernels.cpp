#include "polyapprox/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace polyapprox {

namespace kernels {

void fill_cost_column(const DigitalCurve& curve, const MomentTables& tables, std::size_t v,
                      std::span<double> sum_sq, std::span<double> max_e) {
  const std::size_t n = curve.size();
  const Point pv = curve[v];
  // Walk u backwards from v; the intervening arc (u, v) grows by one point
  // per step but the line changes, so the max is recomputed each time.
  for (std::size_t step = 1; step < n; ++step) {
    const std::size_t u = (v + n - step) % n;
    const Point pu = curve[u];
    if (pu == pv) {
      sum_sq[u] = kInfeasible;
      max_e[u] = kInfeasible;
      continue;
    }
    sum_sq[u] = tables.arc_sum_sq(u, v);
    const std::int64_t dx = pv.x - pu.x;
    const std::int64_t dy = pv.y - pu.y;
    std::int64_t max_cross = 0;
    for (std::size_t t = 1; t < step; ++t) {
      const Point& pw = curve[(u + t) % n];
      const std::int64_t c = (pw.x - pu.x) * dy - (pw.y - pu.y) * dx;
      max_cross = std::max(max_cross, c < 0 ? -c : c);
    }
    max_e[u] = static_cast<double>(max_cross) / std::sqrt(static_cast<double>(dx * dx + dy * dy));
  }
  sum_sq[v] = kInfeasible;
  max_e[v] = kInfeasible;
}

void build_cost_table_serial(const DigitalCurve& curve, const MomentTables& tables,
                             std::span<double> sum_sq, std::span<double> max_e) {
  const std::size_t n = curve.size();
  for (std::size_t v = 0; v < n; ++v) {
    fill_cost_column(curve, tables, v, sum_sq.subspan(v * n, n), max_e.subspan(v * n, n));
  }
}

void build_cost_table_parallel(const DigitalCurve& curve, const MomentTables& tables,
                               std::span<double> sum_sq, std::span<double> max_e) {
  const auto n = static_cast<std::int64_t>(curve.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t v = 0; v < n; ++v) {
    const auto col = static_cast<std::size_t>(v);
    const auto len = static_cast<std::size_t>(n);
    fill_cost_column(curve, tables, col, sum_sq.subspan(col * len, len),
                     max_e.subspan(col * len, len));
  }
}

namespace {

template <CostKind Kind>
inline void relax_position(const SegmentCostTable& table, std::size_t start, std::size_t layer,
                           std::span<const double> prev, std::span<double> next,
                           std::span<std::int32_t> parent, std::size_t k) {
  const std::size_t n = table.curve_size();
  const std::size_t cv = start + k >= n ? start + k - n : start + k;
  const std::span<const double> col = table.column(Kind, cv);
  double best = kInfeasible;
  std::int32_t arg = -1;
  std::size_t cu = start + layer - 1;
  if (cu >= n) cu -= n;
  for (std::size_t i = layer - 1; i < k; ++i) {
    const double value =
        Kind == CostKind::SumSquared ? prev[i] + col[cu] : std::max(prev[i], col[cu]);
    if (value < best) {
      best = value;
      arg = static_cast<std::int32_t>(i);
    }
    if (++cu == n) cu = 0;
  }
  next[k] = best;
  parent[k] = arg;
}

void clear_below(std::size_t layer, std::span<double> next, std::span<std::int32_t> parent) {
  for (std::size_t k = 0; k < layer && k < next.size(); ++k) {
    next[k] = kInfeasible;
    parent[k] = -1;
  }
}

}  // namespace

void relax_layer_serial(const SegmentCostTable& table, CostKind kind, std::size_t start,
                        std::size_t layer, std::span<const double> prev,
                        std::span<double> next, std::span<std::int32_t> parent) {
  const std::size_t n = table.curve_size();
  clear_below(layer, next, parent);
  for (std::size_t k = layer; k <= n; ++k) {
    if (kind == CostKind::SumSquared) {
      relax_position<CostKind::SumSquared>(table, start, layer, prev, next, parent, k);
    } else {
      relax_position<CostKind::MaxError>(table, start, layer, prev, next, parent, k);
    }
  }
}

void relax_layer_parallel(const SegmentCostTable& table, CostKind kind, std::size_t start,
                          std::size_t layer, std::span<const double> prev,
                          std::span<double> next, std::span<std::int32_t> parent) {
  const auto n = static_cast<std::int64_t>(table.curve_size());
  clear_below(layer, next, parent);
  const auto first = static_cast<std::int64_t>(layer);
  if (kind == CostKind::SumSquared) {
#pragma omp parallel for schedule(dynamic, 32)
    for (std::int64_t k = first; k <= n; ++k) {
      relax_position<CostKind::SumSquared>(table, start, layer, prev, next, parent,
                                           static_cast<std::size_t>(k));
    }
  } else {
#pragma omp parallel for schedule(dynamic, 32)
    for (std::int64_t k = first; k <= n; ++k) {
      relax_position<CostKind::MaxError>(table, start, layer, prev, next, parent,
                                         static_cast<std::size_t>(k));
    }
  }
}

}  // namespace kernels

SegmentCostTable::SegmentCostTable(const DigitalCurve& curve, Execution exec)
    : n_(curve.size()), sum_sq_(n_ * n_), max_e_(n_ * n_) {
  const MomentTables tables(curve);
  if (exec == Execution::Serial) {
    kernels::build_cost_table_serial(curve, tables, sum_sq_, max_e_);
  } else {
    kernels::build_cost_table_parallel(curve, tables, sum_sq_, max_e_);
  }
}

}  // namespace polyapprox
