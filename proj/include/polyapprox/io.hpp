#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "polyapprox/curve.hpp"

namespace polyapprox {

enum class CurveFormat { Auto, PointList, ChainCode };

std::string read_file(const std::filesystem::path& path);

/// Dispatches on extension (.pts / .chn) unless a format is forced.
DigitalCurve load_curve(const std::filesystem::path& path, CurveFormat format = CurveFormat::Auto);

/// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// Curve files (*.pts, *.chn) directly inside `dir`, sorted by file name.
std::vector<std::filesystem::path> list_corpus(const std::filesystem::path& dir);

/// Chain-code file text for an 8-connected curve. Throws MalformedLine when
/// two consecutive points are not 8-neighbours.
std::string format_chain_file(const DigitalCurve& curve);

}  // namespace polyapprox
