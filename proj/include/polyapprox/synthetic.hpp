#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "polyapprox/analysis.hpp"
#include "polyapprox/curve.hpp"

namespace polyapprox {

/// Traces a closed real-valued outline onto the lattice as an 8-connected
/// curve with every self-revisit loop erased, so all points are distinct.
DigitalCurve rasterize_closed(std::span<const Vec2> outline);

enum class ShapeFamily { Star, Blob, RoundedPolygon };

/// One noisy shape. Same (family, seed) gives the same curve.
DigitalCurve synthetic_shape(ShapeFamily family, std::uint64_t seed);

/// `count` shapes cycling through the families, ids "syn_NNN_<family>".
std::vector<CorpusEntry> synthetic_corpus(std::size_t count, std::uint64_t seed);

inline constexpr std::uint64_t kDefaultCorpusSeed = 20240615;

}  // namespace polyapprox
