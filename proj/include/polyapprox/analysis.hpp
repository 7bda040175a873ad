#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polyapprox/curve.hpp"
#include "polyapprox/measures.hpp"
#include "polyapprox/optimal.hpp"
#include "polyapprox/schemes.hpp"

namespace polyapprox {

struct MeasureSeries {
  std::vector<std::string> curve_ids;
  std::vector<double> values;
  std::string label;
};

enum class Agreement { Agree, Disagree };

double pearson(std::span<const double> xs, std::span<const double> ys);
double pearson(const MeasureSeries& xs, const MeasureSeries& ys);

/// One flag per step i -> i+1: Agree when both series move the same way
/// (opposite ways under inverse pairing). A flat step agrees only with a flat
/// step.
std::vector<Agreement> direction_agreement(std::span<const double> a, std::span<const double> b,
                                           bool inverse_pairing = false);
std::vector<Agreement> direction_agreement(const MeasureSeries& a, const MeasureSeries& b,
                                           bool inverse_pairing = false);

/// Rescales so the largest magnitude is 100.
MeasureSeries scale_for_plot(const MeasureSeries& s);

/// Deterministic 1200x600 SVG: the Rosin-type series in yellow, the weighted
/// series in blue, and one vertical line per step coloured by agreement.
std::string emit_svg_line_diagram(const MeasureSeries& rosin_like, const MeasureSeries& weighted,
                                  std::span<const Agreement> flags);

inline constexpr std::string_view kAgreeColor = "#f5c400";
inline constexpr std::string_view kDisagreeColor = "#1f4fd8";

enum class Pairing { MeritVsInvWe, MeritVsInvWe2, MeritVsWe3, MeritEmaxVsInvWeInf, MeritVsFg };

inline constexpr Pairing kAllPairings[] = {Pairing::MeritVsInvWe, Pairing::MeritVsInvWe2,
                                           Pairing::MeritVsWe3, Pairing::MeritEmaxVsInvWeInf,
                                           Pairing::MeritVsFg};

std::string_view pairing_name(Pairing p);
/// WE3 is compared directly rather than through its reciprocal, so its rises
/// are matched against falls of Merit.
bool pairing_is_inverse(Pairing p);
double pairing_rosin_value(Pairing p, const MeasureRecord& r);
double pairing_weighted_value(Pairing p, const MeasureRecord& r);

struct CorpusEntry {
  std::string id;
  DigitalCurve curve;
};

struct CurveResult {
  std::string id;
  PolygonApprox polygon;
  MeasureRecord record;
  OptimalBaseline e2_baseline;
  OptimalBaseline emax_baseline;
  TheoremResiduals residuals;
};

struct SkippedCurve {
  std::string id;
  std::string reason;
};

struct PairingResult {
  Pairing pairing;
  std::optional<double> r;
  std::string skip_reason;  // set when r is empty
  MeasureSeries rosin;
  MeasureSeries weighted;
  std::vector<Agreement> flags;
};

struct StudyReport {
  SchemeId scheme;
  std::vector<CurveResult> curves;
  std::vector<SkippedCurve> skipped;
  std::vector<PairingResult> pairings;
};

struct StudyOptions {
  double target_cr = 15.0;
  NiseVariant nise = NiseVariant::Printed;
  BaselineOptions baseline;
};

/// Evaluates every scheme on every curve (curves in parallel; results merged
/// in corpus order), then correlates each pairing per scheme.
std::vector<StudyReport> run_study(std::span<const CorpusEntry> corpus,
                                   std::span<const SchemeId> schemes,
                                   const StudyOptions& options = {});

struct StudyFile {
  std::string name;
  std::string content;
};

/// Every artefact of a study as (file name, bytes): per-scheme record CSVs,
/// correlations.csv, skipped.csv and one SVG per (scheme, pairing).
std::vector<StudyFile> render_study(std::span<const StudyReport> reports);

}  // namespace polyapprox
