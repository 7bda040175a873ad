#include "polyapprox/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>

#include "polyapprox/error.hpp"

namespace polyapprox {

namespace {

int sign_of(double d) { return (d > 0.0) - (d < 0.0); }

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

bool all_equal(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}

struct CurveOutcome {
  std::vector<CurveResult> per_scheme;  // one per scheme, in request order
  std::optional<std::string> failure;
};

CurveOutcome evaluate_curve(const CorpusEntry& entry, std::span<const SchemeId> schemes,
                            const StudyOptions& options) {
  CurveOutcome out;
  try {
    const DigitalCurve& curve = entry.curve;
    const std::size_t m = auto_target_m(curve.size(), options.target_cr);
    BaselineEngine engine(curve, options.baseline, Execution::Serial);
    for (SchemeId id : schemes) {
      PolygonApprox poly = run_scheme(id, curve, m);
      const PolygonErrors err = polygon_errors(curve, poly);
      const OptimalBaseline b2 = engine.baseline(poly.size(), err.e2, CostKind::SumSquared);
      const OptimalBaseline bmax = engine.baseline(poly.size(), err.emax, CostKind::MaxError);
      MeasureRecord record = evaluate(curve, poly, b2, bmax, options.nise);
      TheoremResiduals residuals = theorem_identity_check(record, b2, bmax);
      out.per_scheme.push_back(
          CurveResult{entry.id, std::move(poly), record, b2, bmax, residuals});
    }
  } catch (const std::exception& e) {
    out.per_scheme.clear();
    out.failure = e.what();
  }
  return out;
}

PairingResult correlate(Pairing pairing, const std::vector<CurveResult>& curves) {
  PairingResult out;
  out.pairing = pairing;
  out.rosin.label = pairing == Pairing::MeritEmaxVsInvWeInf ? "Merit_Emax" : "Merit";
  switch (pairing) {
    case Pairing::MeritVsInvWe: out.weighted.label = "1/WE"; break;
    case Pairing::MeritVsInvWe2: out.weighted.label = "1/WE2"; break;
    case Pairing::MeritVsWe3: out.weighted.label = "WE3"; break;
    case Pairing::MeritEmaxVsInvWeInf: out.weighted.label = "1/WEinf"; break;
    case Pairing::MeritVsFg: out.weighted.label = "FG"; break;
  }
  for (const CurveResult& c : curves) {
    const double x = pairing_rosin_value(pairing, c.record);
    const double y = pairing_weighted_value(pairing, c.record);
    if (!std::isfinite(x) || !std::isfinite(y)) continue;
    out.rosin.curve_ids.push_back(c.id);
    out.rosin.values.push_back(x);
    out.weighted.curve_ids.push_back(c.id);
    out.weighted.values.push_back(y);
  }
  if (out.rosin.values.size() >= 2) {
    out.flags = direction_agreement(out.rosin, out.weighted, pairing_is_inverse(pairing));
  }
  try {
    out.r = pearson(out.rosin, out.weighted);
  } catch (const Error& e) {
    out.skip_reason = std::string(to_string(e.code()));
  }
  return out;
}

}  // namespace

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw Error(ErrorCode::LengthMismatch, "series lengths differ: " + std::to_string(xs.size()) +
                                               " vs " + std::to_string(ys.size()));
  }
  if (xs.size() < 3) {
    throw Error(ErrorCode::LengthMismatch,
                "need at least 3 paired values, got " + std::to_string(xs.size()));
  }
  if (all_equal(xs) || all_equal(ys)) {
    throw Error(ErrorCode::ConstantSeries, "correlation is undefined for a constant series");
  }
  const auto n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double pearson(const MeasureSeries& xs, const MeasureSeries& ys) {
  return pearson(std::span<const double>(xs.values), std::span<const double>(ys.values));
}

std::vector<Agreement> direction_agreement(std::span<const double> a, std::span<const double> b,
                                           bool inverse_pairing) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::LengthMismatch, "series lengths differ: " + std::to_string(a.size()) +
                                               " vs " + std::to_string(b.size()));
  }
  std::vector<Agreement> flags;
  if (a.size() < 2) return flags;
  flags.reserve(a.size() - 1);
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    const int sa = sign_of(a[i + 1] - a[i]);
    int sb = sign_of(b[i + 1] - b[i]);
    if (inverse_pairing) sb = -sb;
    flags.push_back(sa == sb ? Agreement::Agree : Agreement::Disagree);
  }
  return flags;
}

std::vector<Agreement> direction_agreement(const MeasureSeries& a, const MeasureSeries& b,
                                           bool inverse_pairing) {
  return direction_agreement(std::span<const double>(a.values), std::span<const double>(b.values),
                             inverse_pairing);
}

MeasureSeries scale_for_plot(const MeasureSeries& s) {
  double peak = 0.0;
  for (double v : s.values) peak = std::max(peak, std::abs(v));
  if (peak == 0.0 || !std::isfinite(peak)) {
    throw Error(ErrorCode::AllZero, "cannot scale series '" + s.label + "' with no finite peak");
  }
  const double factor = 100.0 / peak;
  MeasureSeries out = s;
  for (double& v : out.values) v *= factor;
  out.label = s.label + " (x" + format_real(factor) + ")";
  return out;
}

std::string emit_svg_line_diagram(const MeasureSeries& rosin_like, const MeasureSeries& weighted,
                                  std::span<const Agreement> flags) {
  const std::size_t count = rosin_like.values.size();
  if (weighted.values.size() != count) {
    throw Error(ErrorCode::LengthMismatch, "diagram series lengths differ");
  }
  if (count >= 1 && flags.size() != count - 1) {
    throw Error(ErrorCode::LengthMismatch, "need one agreement flag per step");
  }
  constexpr double kWidth = 1200.0, kHeight = 600.0, kLeft = 60.0, kRight = 40.0;
  constexpr double kTop = 40.0, kBottom = 60.0;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  double lo = 0.0, hi = 100.0;
  for (const auto* s : {&rosin_like.values, &weighted.values}) {
    for (double v : *s) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  const auto x_at = [&](std::size_t i) {
    return count <= 1 ? kLeft + plot_w / 2.0
                      : kLeft + plot_w * static_cast<double>(i) / static_cast<double>(count - 1);
  };
  const auto y_at = [&](double v) { return kTop + plot_h * (hi - v) / (hi - lo); };
  const double base_y = y_at(lo);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1200\" height=\"600\" "
        "viewBox=\"0 0 1200 600\">\n";
  os << "<rect width=\"1200\" height=\"600\" fill=\"white\"/>\n";
  os << "<path class=\"axis\" d=\"M" << fixed2(kLeft) << ' ' << fixed2(kTop) << " V"
     << fixed2(base_y) << " H" << fixed2(kLeft + plot_w) << "\" stroke=\"black\" fill=\"none\"/>\n";

  for (std::size_t i = 0; i < flags.size(); ++i) {
    const bool agree = flags[i] == Agreement::Agree;
    const double top = std::min(y_at(rosin_like.values[i]), y_at(weighted.values[i]));
    os << "<line class=\"step " << (agree ? "agree" : "disagree") << "\" x1=\"" << fixed2(x_at(i))
       << "\" y1=\"" << fixed2(base_y) << "\" x2=\"" << fixed2(x_at(i)) << "\" y2=\""
       << fixed2(top) << "\" stroke=\"" << (agree ? kAgreeColor : kDisagreeColor)
       << "\" stroke-width=\"1\"/>\n";
  }

  const auto polyline = [&](const MeasureSeries& s, std::string_view cls, std::string_view color) {
    os << "<polyline class=\"" << cls << "\" fill=\"none\" stroke=\"" << color
       << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < s.values.size(); ++i) {
      if (i) os << ' ';
      os << fixed2(x_at(i)) << ',' << fixed2(y_at(s.values[i]));
    }
    os << "\"/>\n";
  };
  polyline(weighted, "weighted", kDisagreeColor);
  polyline(rosin_like, "rosin", kAgreeColor);

  os << "<text x=\"" << fixed2(kLeft) << "\" y=\"24\" font-size=\"14\" fill=\"" << kDisagreeColor
     << "\">" << xml_escape(weighted.label) << "</text>\n";
  os << "<text x=\"" << fixed2(kLeft + plot_w / 2.0) << "\" y=\"24\" font-size=\"14\" fill=\""
     << kAgreeColor << "\">" << xml_escape(rosin_like.label) << "</text>\n";
  os << "<text x=\"" << fixed2(kLeft + plot_w / 2.0) << "\" y=\"" << fixed2(kHeight - 20.0)
     << "\" font-size=\"14\" text-anchor=\"middle\">curve</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::string_view pairing_name(Pairing p) {
  switch (p) {
    case Pairing::MeritVsInvWe: return "merit_vs_inv_we";
    case Pairing::MeritVsInvWe2: return "merit_vs_inv_we2";
    case Pairing::MeritVsWe3: return "merit_vs_we3";
    case Pairing::MeritEmaxVsInvWeInf: return "merit_emax_vs_inv_we_inf";
    case Pairing::MeritVsFg: return "merit_vs_fg";
  }
  return "unknown";
}

bool pairing_is_inverse(Pairing p) { return p == Pairing::MeritVsWe3; }

double pairing_rosin_value(Pairing p, const MeasureRecord& r) {
  return p == Pairing::MeritEmaxVsInvWeInf ? r.rosin_emax.merit : r.rosin.merit;
}

double pairing_weighted_value(Pairing p, const MeasureRecord& r) {
  const auto inv = [](double v) {
    return v == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / v;
  };
  switch (p) {
    case Pairing::MeritVsInvWe: return inv(r.we);
    case Pairing::MeritVsInvWe2: return inv(r.we2);
    case Pairing::MeritVsWe3: return r.we3;
    case Pairing::MeritEmaxVsInvWeInf: return inv(r.we_inf);
    case Pairing::MeritVsFg: return r.fg;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

std::vector<StudyReport> run_study(std::span<const CorpusEntry> corpus,
                                   std::span<const SchemeId> schemes,
                                   const StudyOptions& options) {
  if (corpus.size() < 3) {
    throw Error(ErrorCode::InvalidCounts,
                "a study needs at least 3 curves, got " + std::to_string(corpus.size()));
  }
  if (schemes.empty()) throw Error(ErrorCode::InvalidCounts, "no schemes requested");
  std::vector<CurveOutcome> outcomes(corpus.size());
  const auto count = static_cast<std::ptrdiff_t>(corpus.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    outcomes[static_cast<std::size_t>(i)] =
        evaluate_curve(corpus[static_cast<std::size_t>(i)], schemes, options);
  }

  std::vector<StudyReport> reports(schemes.size());
  for (std::size_t s = 0; s < schemes.size(); ++s) reports[s].scheme = schemes[s];
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t s = 0; s < schemes.size(); ++s) {
      if (outcomes[i].failure) {
        reports[s].skipped.push_back({corpus[i].id, *outcomes[i].failure});
      } else {
        reports[s].curves.push_back(std::move(outcomes[i].per_scheme[s]));
      }
    }
  }
  for (StudyReport& report : reports) {
    for (Pairing p : kAllPairings) report.pairings.push_back(correlate(p, report.curves));
  }
  return reports;
}

std::vector<StudyFile> render_study(std::span<const StudyReport> reports) {
  std::vector<StudyFile> files;
  std::ostringstream corr;
  corr << "scheme,pairing,r,n_curves\n";
  std::ostringstream skipped;
  skipped << "curve,reason\n";
  bool skips_written = false;

  for (const StudyReport& report : reports) {
    const std::string scheme(scheme_name(report.scheme));
    std::ostringstream records;
    records << measure_csv_header() << '\n';
    for (const CurveResult& c : report.curves) {
      records << measure_csv_row(c.id, scheme, c.record) << '\n';
    }
    files.push_back({scheme + "_records.csv", records.str()});

    for (const PairingResult& p : report.pairings) {
      corr << scheme << ',' << pairing_name(p.pairing) << ','
           << (p.r ? format_real(*p.r) : std::string("NA")) << ',' << p.rosin.values.size()
           << '\n';
      if (p.rosin.values.size() < 2) continue;
      try {
        const MeasureSeries rosin = scale_for_plot(p.rosin);
        const MeasureSeries weighted = scale_for_plot(p.weighted);
        files.push_back({scheme + "_" + std::string(pairing_name(p.pairing)) + ".svg",
                         emit_svg_line_diagram(rosin, weighted, p.flags)});
      } catch (const Error&) {
        // An all-zero series has no diagram.
      }
    }
    if (!skips_written) {
      // Curve-level failures are shared by every scheme.
      for (const SkippedCurve& s : report.skipped) {
        std::string reason = s.reason;
        std::replace(reason.begin(), reason.end(), ',', ';');
        std::replace(reason.begin(), reason.end(), '\n', ' ');
        skipped << s.id << ',' << reason << '\n';
      }
      skips_written = true;
    }
  }
  files.push_back({"correlations.csv", corr.str()});
  files.push_back({"skipped.csv", skipped.str()});
  return files;
}

}  // namespace polyapprox
