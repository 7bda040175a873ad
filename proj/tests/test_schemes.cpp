#include <gtest/gtest.h>

#include <functional>
#include <limits>
#include <random>

#include "polyapprox/error.hpp"
#include "polyapprox/optimal.hpp"
#include "polyapprox/schemes.hpp"
#include "polyapprox/synthetic.hpp"
#include "support.hpp"

using namespace polyapprox;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::Io;
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Sum of squared line distances over the forward arc strictly between a and b.
double arc_cost(const DigitalCurve& c, std::size_t a, std::size_t b) {
  double s = 0.0;
  for (std::size_t w = (a + 1) % c.size(); w != b; w = (w + 1) % c.size()) {
    const double d = testsupport::line_distance(c[a], c[b], c[w]);
    s += d * d;
  }
  return s;
}

// Greedy elimination recomputing every associated error from scratch.
std::vector<std::size_t> eliminate_replay(const DigitalCurve& c, std::size_t m) {
  std::vector<std::size_t> v = all_indices(c.size());
  while (v.size() > m) {
    std::size_t pick = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < v.size(); ++j) {
      const double cost = arc_cost(c, v[(j + v.size() - 1) % v.size()], v[(j + 1) % v.size()]);
      if (cost < best * (1.0 - 1e-9)) {  // near-ties keep the lower index
        best = cost;
        pick = j;
      }
    }
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return v;
}

// 4x4 square outline through every lattice point, corners at 0, 4, 8, 12.
DigitalCurve full_square() {
  std::vector<Point> p;
  for (int i = 0; i < 4; ++i) p.push_back({i, 0});
  for (int i = 0; i < 4; ++i) p.push_back({4, i});
  for (int i = 4; i > 0; --i) p.push_back({i, 4});
  for (int i = 4; i > 0; --i) p.push_back({0, i});
  return DigitalCurve(std::move(p));
}

bool strictly_increasing(std::span<const std::size_t> v) {
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
}

}  // namespace

TEST(SplitToM, Examples) {
  const DigitalCurve sq = testsupport::square_with_midpoints();
  EXPECT_EQ(split_to_m(sq, 4), PolygonApprox(8, {0, 2, 4, 6}));
  EXPECT_EQ(split_to_m(sq, 8), PolygonApprox(8, all_indices(8)));
  const PolygonApprox tri = split_to_m(sq, 3);
  EXPECT_EQ(tri.size(), 3u);
  EXPECT_TRUE(tri.contains(0));  // farthest from centroid, lowest index
  EXPECT_TRUE(tri.contains(4));  // farthest from corner 0
  EXPECT_EQ(code_of([&] { split_to_m(sq, 2); }), ErrorCode::InvalidCounts);
  EXPECT_EQ(code_of([&] { split_to_m(sq, 9); }), ErrorCode::InvalidCounts);
}

TEST(SplitToM, SplitsAtTheFarthestPoint) {
  // Seeds 0 and 3; the lower arc holds the deeper point.
  const DigitalCurve c({{0, 0}, {5, -1}, {10, -4}, {20, 0}, {10, 2}});
  EXPECT_EQ(split_to_m(c, 3), PolygonApprox(5, {0, 2, 3}));
}

TEST(EliminateToM, Examples) {
  const DigitalCurve sq = testsupport::square_with_midpoints();
  EXPECT_EQ(eliminate_to_m(sq, 4), PolygonApprox(8, {0, 2, 4, 6}));
  EXPECT_EQ(eliminate_to_m(sq, 8), PolygonApprox(8, all_indices(8)));
}

TEST(EliminateToM, MatchesFromScratchReplay) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 5 + static_cast<std::size_t>(trial) % 8;
    const DigitalCurve c = testsupport::random_curve(rng, n, 20);
    for (std::size_t m = 3; m <= n; ++m) {
      const auto expected = eliminate_replay(c, m);
      const PolygonApprox got = eliminate_to_m(c, m);
      ASSERT_EQ(std::vector<std::size_t>(got.vertices().begin(), got.vertices().end()), expected)
          << "trial " << trial << " m " << m;
    }
  }
}

TEST(Stabilize, CornerSnapsBack) {
  const DigitalCurve c = full_square();
  const PolygonApprox displaced(16, {0, 5, 8, 12});
  // Every candidate strictly between 0 and 8 costs more than the corner.
  for (std::size_t k = 1; k < 8; ++k) {
    if (k == 4) continue;
    EXPECT_GT(arc_cost(c, 0, k) + arc_cost(c, k, 8), arc_cost(c, 0, 4) + arc_cost(c, 4, 8));
  }
  EXPECT_EQ(stabilize(c, displaced), PolygonApprox(16, {0, 4, 8, 12}));
}

TEST(Stabilize, FixedPoints) {
  const DigitalCurve sq = testsupport::square_with_midpoints();
  EXPECT_EQ(stabilize(sq, PolygonApprox(8, all_indices(8))), PolygonApprox(8, all_indices(8)));

  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const DigitalCurve c = testsupport::random_curve(rng, 14, 30);
    const std::size_t m = 4 + trial % 4;
    // Globally optimal polygon: best profile value over every start.
    const SegmentCostTable table(c);
    double best = std::numeric_limits<double>::infinity();
    std::optional<PolygonApprox> best_poly;
    for (std::size_t s = 0; s < c.size(); ++s) {
      const OptimalSolver solver(table, s, m, CostKind::SumSquared);
      if (solver.profile().at(m) < best) {
        best = solver.profile().at(m);
        best_poly = solver.polygon(m);
      }
    }
    const PolygonApprox after = stabilize(c, *best_poly);
    EXPECT_LE(polygon_errors(c, after).e2, best * (1.0 + 1e-12));
    EXPECT_GE(polygon_errors(c, after).e2, best * (1.0 - 1e-12));
  }
}

TEST(Stabilize, NeverIncreasesE2) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 10 + static_cast<std::size_t>(trial) % 30;
    const DigitalCurve c = testsupport::random_curve(rng, n, 40);
    const std::size_t m = 3 + static_cast<std::size_t>(rng() % (n - 3));
    for (const PolygonApprox& start : {split_to_m(c, m), eliminate_to_m(c, m)}) {
      const PolygonApprox after = stabilize(c, start);
      EXPECT_EQ(after.size(), m);
      EXPECT_LE(polygon_errors(c, after).e2, polygon_errors(c, start).e2 * (1.0 + 1e-12));
    }
  }
}

TEST(Schemes, ExactlyMDistinctOrderedVertices) {
  for (const CorpusEntry& e : synthetic_corpus(6, 17)) {
    for (SchemeId id :
         {SchemeId::SplitToM, SchemeId::EliminateToM, SchemeId::EliminateStabilizedToM}) {
      for (std::size_t m : {std::size_t{3}, std::size_t{11}, e.curve.size() / 7}) {
        const PolygonApprox p = run_scheme(id, e.curve, m);
        EXPECT_EQ(p.size(), m);
        EXPECT_TRUE(strictly_increasing(p.vertices()));
        EXPECT_LT(p.vertices().back(), e.curve.size());
        EXPECT_EQ(run_scheme(id, e.curve, m), p);
      }
    }
  }
}

TEST(Schemes, NamesRoundTrip) {
  for (SchemeId id :
       {SchemeId::SplitToM, SchemeId::EliminateToM, SchemeId::EliminateStabilizedToM}) {
    EXPECT_EQ(parse_scheme(scheme_name(id)), id);
  }
  EXPECT_FALSE(parse_scheme("rdp").has_value());
}

TEST(AutoTargetM, Examples) {
  EXPECT_EQ(auto_target_m(1578, 20.49), 77u);
  EXPECT_EQ(auto_target_m(100, 1.0), 100u);
  EXPECT_EQ(auto_target_m(9, 100.0), 3u);
  EXPECT_EQ(code_of([] { auto_target_m(10, 0.5); }), ErrorCode::InvalidCounts);
}
