#include "polyapprox/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <system_error>

#include "polyapprox/error.hpp"

namespace polyapprox {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::Io, "read failed: " + path.string());
  return os.str();
}

DigitalCurve load_curve(const fs::path& path, CurveFormat format) {
  if (format == CurveFormat::Auto) {
    const std::string ext = path.extension().string();
    if (ext == ".chn") {
      format = CurveFormat::ChainCode;
    } else if (ext == ".pts") {
      format = CurveFormat::PointList;
    } else {
      throw Error(ErrorCode::Io, "cannot infer curve format from extension of " + path.string() +
                                     " (expected .pts or .chn)");
    }
  }
  const std::string text = read_file(path);
  if (format == CurveFormat::ChainCode) return parse_chain_file(text);
  return DigitalCurve(parse_point_list(text));
}

void write_file_atomic(const fs::path& path, std::string_view content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw Error(ErrorCode::Io, "write failed: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::Io, "cannot move output into place: " + path.string());
  }
}

std::vector<fs::path> list_corpus(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Error(ErrorCode::Io, "not a directory: " + dir.string());
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string ext = entry.path().extension().string();
    if (ext == ".pts" || ext == ".chn") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
  return out;
}

std::string format_chain_file(const DigitalCurve& curve) {
  const auto pts = curve.points();
  std::string codes;
  codes.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point& a = pts[i];
    const Point& b = pts[(i + 1) % pts.size()];
    const int digit = chain_digit(b.x - a.x, b.y - a.y);
    if (digit < 0) {
      throw Error(ErrorCode::MalformedLine,
                  "points " + std::to_string(i) + " and " + std::to_string((i + 1) % pts.size()) +
                      " are not 8-neighbours");
    }
    codes.push_back(static_cast<char>('0' + digit));
  }
  return std::to_string(pts.front().x) + ' ' + std::to_string(pts.front().y) + '\n' + codes + '\n';
}

}  // namespace polyapprox
