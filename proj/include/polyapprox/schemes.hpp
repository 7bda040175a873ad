#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "polyapprox/approx_error.hpp"
#include "polyapprox/curve.hpp"

namespace polyapprox {

enum class SchemeId { SplitToM, EliminateToM, EliminateStabilizedToM };

/// CLI spelling: split, elim, elim-stab.
std::string_view scheme_name(SchemeId id);
std::optional<SchemeId> parse_scheme(std::string_view name);

/// Farthest-point splitting. Seeds with the point farthest from the centroid
/// and the point farthest from that seed, then repeatedly splits the side with
/// the largest deviation at its farthest point until m vertices exist.
PolygonApprox split_to_m(const DigitalCurve& curve, std::size_t m);

/// Reverse polygonization: start from every point and repeatedly delete the
/// vertex whose removal adds the least squared error.
PolygonApprox eliminate_to_m(const DigitalCurve& curve, std::size_t m);

/// Moves each vertex anywhere strictly between its neighbours to minimise the
/// squared error of its two sides. Round-robin until a quiet pass.
PolygonApprox stabilize(const DigitalCurve& curve, const PolygonApprox& poly);

inline constexpr std::size_t kStabilizeMaxPasses = 50;

std::size_t auto_target_m(std::size_t n, double target_cr);

PolygonApprox run_scheme(SchemeId id, const DigitalCurve& curve, std::size_t m);

}  // namespace polyapprox
