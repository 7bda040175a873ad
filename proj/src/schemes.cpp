#include "polyapprox/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polyapprox/error.hpp"

namespace polyapprox {

namespace {

void check_m(std::size_t n, std::size_t m) {
  if (m < 3 || m > n) {
    throw Error(ErrorCode::InvalidCounts,
                "need 3 <= m <= n, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
  }
}

double side_cost(const DigitalCurve& curve, const MomentTables& tables, std::size_t u,
                 std::size_t v) {
  if (curve[u] == curve[v]) return std::numeric_limits<double>::infinity();
  return tables.arc_sum_sq(u, v);
}

struct SideSplit {
  double max_e = -1.0;  // negative when the side cannot be split
  std::size_t at = 0;
};

// Farthest intervening point of side u -> v, first in arc order on ties.
// Points sharing coordinates with an endpoint would create a degenerate
// side, so they are never chosen.
SideSplit farthest_on_side(const DigitalCurve& curve, std::size_t u, std::size_t v) {
  const std::size_t n = curve.size();
  const Point pu = curve[u];
  const Point pv = curve[v];
  const std::int64_t dx = pv.x - pu.x;
  const std::int64_t dy = pv.y - pu.y;
  std::int64_t best = -1;
  SideSplit out;
  for (std::size_t w = (u + 1) % n; w != v; w = (w + 1) % n) {
    const Point pw = curve[w];
    if (pw == pu || pw == pv) continue;
    std::int64_t c = (pw.x - pu.x) * dy - (pw.y - pu.y) * dx;
    if (c < 0) c = -c;
    if (c > best) {
      best = c;
      out.at = w;
    }
  }
  if (best >= 0) {
    out.max_e = static_cast<double>(best) / std::sqrt(static_cast<double>(dx * dx + dy * dy));
  }
  return out;
}

std::int64_t squared_distance(const Point& a, const Point& b) {
  const std::int64_t dx = a.x - b.x;
  const std::int64_t dy = a.y - b.y;
  return dx * dx + dy * dy;
}

}  // namespace

std::string_view scheme_name(SchemeId id) {
  switch (id) {
    case SchemeId::SplitToM: return "split";
    case SchemeId::EliminateToM: return "elim";
    case SchemeId::EliminateStabilizedToM: return "elim-stab";
  }
  return "unknown";
}

std::optional<SchemeId> parse_scheme(std::string_view name) {
  for (SchemeId id :
       {SchemeId::SplitToM, SchemeId::EliminateToM, SchemeId::EliminateStabilizedToM}) {
    if (scheme_name(id) == name) return id;
  }
  return std::nullopt;
}

PolygonApprox split_to_m(const DigitalCurve& curve, std::size_t m) {
  const std::size_t n = curve.size();
  check_m(n, m);

  const std::size_t first = farthest_from_centroid(curve);
  std::size_t second = first;
  std::int64_t best = -1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t d = squared_distance(curve[i], curve[first]);
    if (d > best) {
      best = d;
      second = i;
    }
  }

  // side start vertex -> (end vertex, split candidate)
  std::map<std::size_t, std::pair<std::size_t, SideSplit>> sides;
  sides[first] = {second, farthest_on_side(curve, first, second)};
  sides[second] = {first, farthest_on_side(curve, second, first)};

  while (sides.size() < m) {
    auto pick = sides.end();
    for (auto it = sides.begin(); it != sides.end(); ++it) {
      if (it->second.second.max_e < 0.0) continue;
      if (pick == sides.end() || it->second.second.max_e > pick->second.second.max_e) pick = it;
    }
    if (pick == sides.end()) {
      throw Error(ErrorCode::DegenerateSegment,
                  "splitting stalled at " + std::to_string(sides.size()) +
                      " vertices: no side has a splittable point");
    }
    const std::size_t u = pick->first;
    const std::size_t v = pick->second.first;
    const std::size_t w = pick->second.second.at;
    pick->second = {w, farthest_on_side(curve, u, w)};
    sides[w] = {v, farthest_on_side(curve, w, v)};
  }

  std::vector<std::size_t> vertices;
  vertices.reserve(m);
  for (const auto& side : sides) vertices.push_back(side.first);
  return PolygonApprox(n, std::move(vertices));
}

PolygonApprox eliminate_to_m(const DigitalCurve& curve, std::size_t m) {
  const std::size_t n = curve.size();
  check_m(n, m);
  const MomentTables tables(curve);

  std::vector<std::size_t> prev(n), next(n);
  std::vector<double> cost(n);
  for (std::size_t i = 0; i < n; ++i) {
    prev[i] = (i + n - 1) % n;
    next[i] = (i + 1) % n;
  }
  std::set<std::pair<double, std::size_t>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    cost[i] = side_cost(curve, tables, prev[i], next[i]);
    queue.emplace(cost[i], i);
  }

  const auto refresh = [&](std::size_t i) {
    queue.erase({cost[i], i});
    cost[i] = side_cost(curve, tables, prev[i], next[i]);
    queue.emplace(cost[i], i);
  };

  std::vector<bool> alive(n, true);
  for (std::size_t remaining = n; remaining > m; --remaining) {
    const std::size_t victim = queue.begin()->second;
    queue.erase(queue.begin());
    alive[victim] = false;
    const std::size_t p = prev[victim];
    const std::size_t q = next[victim];
    next[p] = q;
    prev[q] = p;
    refresh(p);
    refresh(q);
  }

  std::vector<std::size_t> vertices;
  vertices.reserve(m);
  for (std::size_t i = 0; i < n; ++i) {
    if (alive[i]) vertices.push_back(i);
  }
  return PolygonApprox(n, std::move(vertices));
}

PolygonApprox stabilize(const DigitalCurve& curve, const PolygonApprox& poly) {
  const std::size_t n = curve.size();
  const MomentTables tables(curve);
  std::vector<std::size_t> verts(poly.vertices().begin(), poly.vertices().end());
  const std::size_t m = verts.size();

  for (std::size_t pass = 0; pass < kStabilizeMaxPasses; ++pass) {
    bool changed = false;
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t before = verts[(j + m - 1) % m];
      const std::size_t after = verts[(j + 1) % m];
      const std::size_t current = verts[j];
      double best = side_cost(curve, tables, before, current) +
                    side_cost(curve, tables, current, after);
      std::size_t best_at = current;
      for (std::size_t c = (before + 1) % n; c != after; c = (c + 1) % n) {
        if (c == current) continue;
        const double value =
            side_cost(curve, tables, before, c) + side_cost(curve, tables, c, after);
        if (value < best) {
          best = value;
          best_at = c;
        }
      }
      if (best_at != current) {
        verts[j] = best_at;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return PolygonApprox(n, std::move(verts));
}

std::size_t auto_target_m(std::size_t n, double target_cr) {
  if (!(target_cr >= 1.0)) {
    throw Error(ErrorCode::InvalidCounts, "target compression ratio must be >= 1");
  }
  const double m = std::round(static_cast<double>(n) / target_cr);
  return std::clamp(static_cast<std::size_t>(m), std::size_t{3}, n);
}

PolygonApprox run_scheme(SchemeId id, const DigitalCurve& curve, std::size_t m) {
  switch (id) {
    case SchemeId::SplitToM: return split_to_m(curve, m);
    case SchemeId::EliminateToM: return eliminate_to_m(curve, m);
    case SchemeId::EliminateStabilizedToM: return stabilize(curve, eliminate_to_m(curve, m));
  }
  throw Error(ErrorCode::InvalidCounts, "unknown scheme");
}

}  // namespace polyapprox
