#pragma once

// Data-parallel inner loops of the optimal approximation. Every kernel has a
// serial reference with the same arithmetic; the OpenMP variants distribute
// independent entries across threads and produce bitwise-identical results.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "polyapprox/approx_error.hpp"
#include "polyapprox/curve.hpp"

namespace polyapprox {

enum class CostKind { SumSquared, MaxError };

enum class Execution { Serial, Parallel };

inline constexpr double kInfeasible = std::numeric_limits<double>::infinity();

/// Segment costs for every ordered pair (u, v) of curve indices, forward arc
/// from u to v. Pairs whose endpoints share coordinates (including u == v)
/// hold kInfeasible. Stored column-major by end vertex so that a DP scan over
/// predecessors walks contiguous memory.
class SegmentCostTable {
 public:
  SegmentCostTable() = default;
  SegmentCostTable(const DigitalCurve& curve, Execution exec = Execution::Parallel);

  std::size_t curve_size() const noexcept { return n_; }

  double sum_sq(std::size_t u, std::size_t v) const noexcept { return sum_sq_[v * n_ + u]; }
  double max_e(std::size_t u, std::size_t v) const noexcept { return max_e_[v * n_ + u]; }
  double cost(CostKind kind, std::size_t u, std::size_t v) const noexcept {
    return kind == CostKind::SumSquared ? sum_sq(u, v) : max_e(u, v);
  }
  /// All costs ending at v, indexed by start vertex u.
  std::span<const double> column(CostKind kind, std::size_t v) const noexcept {
    const auto& data = kind == CostKind::SumSquared ? sum_sq_ : max_e_;
    return {data.data() + v * n_, n_};
  }

  friend bool operator==(const SegmentCostTable&, const SegmentCostTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> sum_sq_;
  std::vector<double> max_e_;
};

namespace kernels {

/// Fills costs for all segments ending at curve index v.
void fill_cost_column(const DigitalCurve& curve, const MomentTables& tables, std::size_t v,
                      std::span<double> sum_sq, std::span<double> max_e);

void build_cost_table_serial(const DigitalCurve& curve, const MomentTables& tables,
                             std::span<double> sum_sq, std::span<double> max_e);
void build_cost_table_parallel(const DigitalCurve& curve, const MomentTables& tables,
                               std::span<double> sum_sq, std::span<double> max_e);

/// One DP layer over positions along the curve reindexed from `start`
/// (position k is curve index (start + k) mod n; position n closes back on
/// start). For every k in [layer, n]:
///   next[k] = min over i in [layer-1, k-1] of combine(prev[i], cost(i -> k))
/// where combine is + for SumSquared and max for MaxError. parent[k] gets the
/// minimizing i, smallest i on ties. Entries below `layer` are set infeasible.
void relax_layer_serial(const SegmentCostTable& table, CostKind kind, std::size_t start,
                        std::size_t layer, std::span<const double> prev,
                        std::span<double> next, std::span<std::int32_t> parent);
void relax_layer_parallel(const SegmentCostTable& table, CostKind kind, std::size_t start,
                          std::size_t layer, std::span<const double> prev,
                          std::span<double> next, std::span<std::int32_t> parent);

}  // namespace kernels

}  // namespace polyapprox
