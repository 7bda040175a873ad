#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>
#include <regex>

#include "polyapprox/analysis.hpp"
#include "polyapprox/error.hpp"
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

MeasureSeries series(std::vector<double> v, std::string label = "s") {
  MeasureSeries s;
  for (std::size_t i = 0; i < v.size(); ++i) s.curve_ids.push_back("c" + std::to_string(i));
  s.values = std::move(v);
  s.label = std::move(label);
  return s;
}

// Covariance over the product of standard deviations, accumulated from raw
// sums rather than centred deviations.
double covariance_oracle(const std::vector<double>& x, const std::vector<double>& y) {
  long double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  const auto n = static_cast<long double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += static_cast<long double>(x[i]) * x[i];
    syy += static_cast<long double>(y[i]) * y[i];
    sxy += static_cast<long double>(x[i]) * y[i];
  }
  const long double cov = sxy / n - (sx / n) * (sy / n);
  const long double vx = sxx / n - (sx / n) * (sx / n);
  const long double vy = syy / n - (sy / n) * (sy / n);
  return static_cast<double>(cov / std::sqrt(vx * vy));
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t c = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + 1)) {
    ++c;
  }
  return c;
}

// An axis-aligned square with every edge padded by collinear lattice points.
DigitalCurve padded_square(std::int64_t side, int pad) {
  std::vector<Point> p;
  const std::int64_t step = side / pad;
  for (int i = 0; i < pad; ++i) p.push_back({i * step, 0});
  for (int i = 0; i < pad; ++i) p.push_back({side, i * step});
  for (int i = 0; i < pad; ++i) p.push_back({side - i * step, side});
  for (int i = 0; i < pad; ++i) p.push_back({0, side - i * step});
  return DigitalCurve(std::move(p));
}

}  // namespace

TEST(Pearson, Examples) {
  EXPECT_EQ(pearson(series({1, 2, 3}), series({2, 4, 6})), 1.0);
  EXPECT_EQ(pearson(series({1, 2, 3}), series({3, 2, 1})), -1.0);
  EXPECT_EQ(pearson(series({0, 1, 2}), series({0, 1, 0})), 0.0);
}

TEST(Pearson, Errors) {
  EXPECT_EQ(code_of([] { pearson(series({1, 2, 3}), series({1, 2})); }), ErrorCode::LengthMismatch);
  EXPECT_EQ(code_of([] { pearson(series({1, 2}), series({1, 2})); }), ErrorCode::LengthMismatch);
  EXPECT_EQ(code_of([] { pearson(series({4, 4, 4}), series({1, 2, 3})); }),
            ErrorCode::ConstantSeries);
}

TEST(Pearson, MatchesIndependentCovariance) {
  std::mt19937_64 rng(61);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> x(20), y(20);
    for (int i = 0; i < 20; ++i) {
      x[i] = g(rng);
      y[i] = 0.3 * x[i] + g(rng);
    }
    EXPECT_NEAR(pearson(series(x), series(y)), covariance_oracle(x, y), 1e-12);
  }
}

TEST(Pearson, AffineInvarianceAndRange) {
  std::mt19937_64 rng(62);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> x(15), y(15);
    for (int i = 0; i < 15; ++i) {
      x[i] = u(rng);
      y[i] = u(rng) + x[i];
    }
    const double r = pearson(series(x), series(y));
    EXPECT_GE(r, -1.0);
    EXPECT_LE(r, 1.0);
    EXPECT_NEAR(pearson(series(x), series(x)), 1.0, 1e-12);
    std::vector<double> ax = x, neg = y;
    for (double& v : ax) v = 3.5 * v - 2.0;
    for (double& v : neg) v = -0.25 * v + 9.0;
    EXPECT_NEAR(pearson(series(ax), series(y)), r, 1e-12);
    EXPECT_NEAR(pearson(series(x), series(neg)), -r, 1e-12);
  }
}

TEST(DirectionAgreement, Examples) {
  EXPECT_EQ(direction_agreement(series({1, 2, 1}), series({2, 3, 1})),
            (std::vector<Agreement>{Agreement::Agree, Agreement::Agree}));
  EXPECT_EQ(direction_agreement(series({1, 2}), series({2, 1}), true),
            (std::vector<Agreement>{Agreement::Agree}));
  EXPECT_EQ(direction_agreement(series({1, 1}), series({1, 2})),
            (std::vector<Agreement>{Agreement::Disagree}));
  EXPECT_EQ(direction_agreement(series({1, 1}), series({5, 5})),
            (std::vector<Agreement>{Agreement::Agree}));
  EXPECT_EQ(code_of([] { direction_agreement(series({1, 2}), series({1})); }),
            ErrorCode::LengthMismatch);
}

TEST(DirectionAgreement, ReciprocalTogglesInversion) {
  std::mt19937_64 rng(63);
  std::uniform_real_distribution<double> u(0.5, 20.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> a(12), b(12), inv(12);
    for (int i = 0; i < 12; ++i) {
      a[i] = u(rng);
      b[i] = u(rng);
      inv[i] = 1.0 / b[i];
    }
    EXPECT_EQ(direction_agreement(series(a), series(b), false),
              direction_agreement(series(a), series(inv), true));
  }
}

TEST(ScaleForPlot, Examples) {
  const MeasureSeries s = scale_for_plot(series({1, 2, 4}, "WE"));
  EXPECT_EQ(s.values, (std::vector<double>{25, 50, 100}));
  EXPECT_NE(s.label.find("WE"), std::string::npos);
  EXPECT_NE(s.label.find("25"), std::string::npos);
  EXPECT_EQ(scale_for_plot(series({100, 100, 100})).values, (std::vector<double>{100, 100, 100}));
  EXPECT_EQ(code_of([] { scale_for_plot(series({0, 0})); }), ErrorCode::AllZero);

  std::mt19937_64 rng(64);
  std::uniform_real_distribution<double> u(-5.0, 50.0);
  std::vector<double> v(30);
  for (double& x : v) x = u(rng);
  const auto flags = direction_agreement(series(v), scale_for_plot(series(v)));
  EXPECT_TRUE(std::all_of(flags.begin(), flags.end(),
                          [](Agreement a) { return a == Agreement::Agree; }));
}

TEST(SvgLineDiagram, TwoPointCounting) {
  const std::string svg = emit_svg_line_diagram(series({10, 100}), series({100, 40}),
                                                std::vector<Agreement>{Agreement::Disagree});
  EXPECT_EQ(count(svg, "<polyline"), 2u);
  EXPECT_EQ(count(svg, "class=\"step "), 1u);
  EXPECT_NE(svg.find("width=\"1200\" height=\"600\""), std::string::npos);
  const std::regex points("points=\"([^\"]*)\"");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), points); it != std::sregex_iterator();
       ++it) {
    const std::string pts = (*it)[1];
    EXPECT_EQ(std::count(pts.begin(), pts.end(), ','), 2);
  }
  EXPECT_NE(svg.find("stroke=\"" + std::string(kDisagreeColor) + "\" stroke-width=\"1\""),
            std::string::npos);
}

TEST(SvgLineDiagram, ColoursAndDeterminism) {
  const std::vector<Agreement> agree(4, Agreement::Agree);
  const std::string a = emit_svg_line_diagram(series({1, 2, 3, 4, 5}), series({2, 3, 4, 5, 6}), agree);
  EXPECT_EQ(count(a, "class=\"step agree\""), 4u);
  EXPECT_EQ(count(a, "class=\"step disagree\""), 0u);
  EXPECT_EQ(count(a, "stroke=\"" + std::string(kAgreeColor) + "\" stroke-width=\"1\""), 4u);
  EXPECT_EQ(a, emit_svg_line_diagram(series({1, 2, 3, 4, 5}), series({2, 3, 4, 5, 6}), agree));
  EXPECT_EQ(code_of([&] { emit_svg_line_diagram(series({1, 2}), series({1, 2, 3}), agree); }),
            ErrorCode::LengthMismatch);
}

TEST(Pairings, WeightedValues) {
  MeasureRecord r;
  r.we = 4.0;
  r.we2 = 0.5;
  r.we3 = 0.25;
  r.we_inf = 2.0;
  r.fg = 1.3;
  r.rosin.merit = 70.0;
  r.rosin_emax.merit = 60.0;
  EXPECT_EQ(pairing_weighted_value(Pairing::MeritVsInvWe, r), 0.25);
  EXPECT_EQ(pairing_weighted_value(Pairing::MeritVsInvWe2, r), 2.0);
  EXPECT_EQ(pairing_weighted_value(Pairing::MeritVsWe3, r), 0.25);
  EXPECT_EQ(pairing_weighted_value(Pairing::MeritEmaxVsInvWeInf, r), 0.5);
  EXPECT_EQ(pairing_weighted_value(Pairing::MeritVsFg, r), 1.3);
  EXPECT_EQ(pairing_rosin_value(Pairing::MeritEmaxVsInvWeInf, r), 60.0);
  EXPECT_EQ(pairing_rosin_value(Pairing::MeritVsFg, r), 70.0);
  EXPECT_TRUE(pairing_is_inverse(Pairing::MeritVsWe3));
  EXPECT_FALSE(pairing_is_inverse(Pairing::MeritVsFg));
}

TEST(RunStudy, ExactFitCorpusReportsConstantSeries) {
  // n = 12 with target CR 3 asks for 4 vertices: the corners fit exactly.
  const std::vector<CorpusEntry> corpus{{"a", padded_square(12, 3)},
                                        {"b", padded_square(24, 3)},
                                        {"c", padded_square(36, 3)}};
  StudyOptions opt;
  opt.target_cr = 3.0;
  const StudyReport report =
      run_study(corpus, std::vector<SchemeId>{SchemeId::EliminateToM}, opt).front();
  ASSERT_EQ(report.curves.size(), 3u);
  for (const CurveResult& c : report.curves) {
    EXPECT_EQ(c.record.m, 4u);
    EXPECT_EQ(c.record.e2, 0.0);
    EXPECT_EQ(c.record.rosin.merit, 100.0);
    EXPECT_EQ(c.record.rosin_emax.merit, 100.0);
  }
  for (const PairingResult& p : report.pairings) {
    EXPECT_FALSE(p.r.has_value());
    EXPECT_FALSE(p.skip_reason.empty());
  }
}

TEST(RunStudy, SyntheticCorpusIsDeterministicAndBounded) {
  const auto corpus = synthetic_corpus(20, 2024);
  const std::vector<SchemeId> schemes{SchemeId::SplitToM, SchemeId::EliminateToM};
  const auto first = run_study(corpus, schemes);
  const auto second = run_study(corpus, schemes);
  for (const StudyReport& r : first) {
    EXPECT_EQ(r.curves.size(), 20u);
    EXPECT_TRUE(r.skipped.empty());
    for (const PairingResult& p : r.pairings) {
      ASSERT_TRUE(p.r.has_value());
      EXPECT_LE(std::abs(*p.r), 1.0);
      EXPECT_EQ(p.flags.size(), p.rosin.values.size() - 1);
    }
  }
  const auto files_a = render_study(first);
  const auto files_b = render_study(second);
  ASSERT_EQ(files_a.size(), files_b.size());
  for (std::size_t i = 0; i < files_a.size(); ++i) {
    EXPECT_EQ(files_a[i].name, files_b[i].name);
    EXPECT_EQ(files_a[i].content, files_b[i].content);
  }
}

TEST(RunStudy, NeedsThreeCurves) {
  const auto corpus = synthetic_corpus(2, 8);
  EXPECT_EQ(code_of([&] { run_study(corpus, std::vector<SchemeId>{SchemeId::SplitToM}); }),
            ErrorCode::InvalidCounts);
}

TEST(RenderStudy, CorrelationsCsvLayout) {
  const auto corpus = synthetic_corpus(5, 77);
  const auto reports = run_study(corpus, std::vector<SchemeId>{SchemeId::EliminateToM});
  const auto files = render_study(reports);
  const auto find = [&](const std::string& name) {
    const auto it = std::find_if(files.begin(), files.end(),
                                 [&](const StudyFile& f) { return f.name == name; });
    return it == files.end() ? std::string() : it->content;
  };
  const std::string corr = find("correlations.csv");
  EXPECT_EQ(corr.rfind("scheme,pairing,r,n_curves\n", 0), 0u);
  EXPECT_EQ(count(corr, "\n"), 6u);
  EXPECT_NE(corr.find("elim,merit_vs_we3,"), std::string::npos);
  EXPECT_FALSE(find("elim_records.csv").empty());
  EXPECT_FALSE(find("elim_merit_vs_fg.svg").empty());
  EXPECT_EQ(find("skipped.csv"), "curve,reason\n");
}
