#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "polyapprox/approx_error.hpp"
#include "polyapprox/curve.hpp"
#include "polyapprox/optimal.hpp"

namespace polyapprox {

/// Additive constant of the sigmoid-normalised error. `Printed` adds +1 and
/// lands in [2, 3); `Unit` subtracts 1 and lands in [0, 1).
enum class NiseVariant { Printed, Unit };

std::string_view nise_variant_name(NiseVariant v);

struct RosinBreakdown {
  double fidelity = 0.0;    // percent
  double efficiency = 0.0;  // percent
  double merit = 0.0;       // percent
  double error_optimal = 0.0;
  double m_optimal = 0.0;
  bool clamped = false;
};

struct WeightedFoms {
  double we = 0.0;      // E2 / CR
  double we2 = 0.0;     // E2 / CR^2
  double we3 = 0.0;     // E2 / CR^3
  double we_inf = 0.0;  // Emax / CR
};

struct MeasureRecord {
  std::size_t n = 0;
  std::size_t m = 0;
  double cr = 0.0;
  double e2 = 0.0;
  double emax = 0.0;
  double fom = 0.0;  // NaN for an exact fit
  double we = 0.0;
  double we2 = 0.0;
  double we3 = 0.0;
  double we_inf = 0.0;
  double fg = 0.0;
  RosinBreakdown rosin;
  RosinBreakdown rosin_emax;
};

double figure_of_merit(double cr, double e2);
WeightedFoms weighted_foms(double cr, double e2, double emax);

RosinBreakdown rosin_merit(double error_sub, std::size_t m_sub, const OptimalBaseline& baseline);
RosinBreakdown merit_emax(double emax_sub, std::size_t m_sub, const OptimalBaseline& baseline);

double fg_measure(double cr, double e2, double d, NiseVariant variant = NiseVariant::Printed);

/// Assembles every measure for one polygon. `e2_baseline` and
/// `emax_baseline` must come from SumSquared and MaxError profiles of the same
/// curve and vertex count.
MeasureRecord evaluate(const DigitalCurve& curve, const PolygonApprox& poly,
                       const OptimalBaseline& e2_baseline, const OptimalBaseline& emax_baseline,
                       NiseVariant variant = NiseVariant::Printed);
MeasureRecord evaluate(const DigitalCurve& curve, const PolygonApprox& poly,
                       BaselineEngine& engine, NiseVariant variant = NiseVariant::Printed);

/// Relative residuals between the squared merit (without the 100 and the
/// root) and each rearranged ratio built from the weighted measures.
struct TheoremResiduals {
  double merit_vs_we = 0.0;        // Merit against WE_opt / WE_sub
  double merit_vs_we2 = 0.0;       // Merit against (WE2_opt / WE2_sub) * (CR_opt / CR_sub)
  double merit_vs_we3 = 0.0;       // Merit against (WE3_opt / WE3_sub) * (CR_opt / CR_sub)^2
  double merit_emax_vs_we_inf = 0.0;  // Merit_Emax against WEinf_opt / WEinf_sub

  double max() const;
};

TheoremResiduals theorem_identity_check(const MeasureRecord& record,
                                        const OptimalBaseline& e2_baseline,
                                        const OptimalBaseline& emax_baseline);

/// Fixed column order shared by every CSV that carries measure records.
std::string_view measure_csv_header();
std::string measure_csv_row(std::string_view curve, std::string_view scheme,
                            const MeasureRecord& r);

/// Shortest round-trippable decimal; non-finite values print as NA.
std::string format_real(double value);

}  // namespace polyapprox
