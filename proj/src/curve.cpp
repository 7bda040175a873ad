#include "polyapprox/curve.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "polyapprox/error.hpp"

namespace polyapprox {

namespace {

using i128 = __int128;

constexpr std::array<Point, 8> kChainSteps = {{
    {1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1},
}};

std::string_view trim(std::string_view s) {
  const auto not_space = [](char c) { return c != ' ' && c != '\t' && c != '\r' && c != '\n'; };
  auto b = std::find_if(s.begin(), s.end(), not_space);
  auto e = std::find_if(s.rbegin(), s.rend(), not_space).base();
  return b < e ? std::string_view(&*b, static_cast<std::size_t>(e - b)) : std::string_view{};
}

// Splits into lines, dropping blank lines and '#' comments. Keeps 1-based
// line numbers for error messages.
std::vector<std::pair<std::size_t, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t lineno = 0;
  while (!text.empty()) {
    ++lineno;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    out.emplace_back(lineno, line);
  }
  return out;
}

bool parse_int(std::string_view tok, std::int64_t& value) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  return ec == std::errc{} && ptr == tok.data() + tok.size() && !tok.empty();
}

Point parse_pair(std::size_t lineno, std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == ',')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != ',') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  Point p;
  if (toks.size() != 2 || !parse_int(toks[0], p.x) || !parse_int(toks[1], p.y)) {
    throw Error(ErrorCode::MalformedLine,
                "line " + std::to_string(lineno) + ": expected two integers, got '" +
                    std::string(line) + "'");
  }
  return p;
}

}  // namespace

DigitalCurve::DigitalCurve(std::vector<Point> points) : points_(std::move(points)) {
  const std::size_t n = points_.size();
  if (n < 3) {
    throw Error(ErrorCode::TooFewPoints, "a closed curve needs at least 3 points, got " +
                                             std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (points_[i] == points_[(i + 1) % n]) {
      throw Error(ErrorCode::DuplicateConsecutive,
                  "points " + std::to_string(i) + " and " + std::to_string((i + 1) % n) +
                      " are both (" + std::to_string(points_[i].x) + ", " +
                      std::to_string(points_[i].y) + ")");
    }
  }
}

const Point& DigitalCurve::at(std::int64_t i) const noexcept {
  const auto n = static_cast<std::int64_t>(points_.size());
  i %= n;
  if (i < 0) i += n;
  return points_[static_cast<std::size_t>(i)];
}

DigitalCurve parse_point_list(std::string_view text) {
  std::vector<Point> pts;
  for (const auto& [lineno, line] : content_lines(text)) pts.push_back(parse_pair(lineno, line));
  return DigitalCurve(std::move(pts));
}

DigitalCurve parse_chain_code(Point start, std::string_view codes) {
  std::vector<Point> pts{start};
  Point cur = start;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    const char c = codes[i];
    if (c < '0' || c > '7') {
      throw Error(ErrorCode::InvalidDigit,
                  "chain code position " + std::to_string(i) + ": '" + std::string(1, c) + "'");
    }
    const Point step = kChainSteps[static_cast<std::size_t>(c - '0')];
    cur = {cur.x + step.x, cur.y + step.y};
    pts.push_back(cur);
  }
  if (pts.back() != start) {
    throw Error(ErrorCode::NotClosed, "trace ends at (" + std::to_string(cur.x) + ", " +
                                          std::to_string(cur.y) + "), not at the start");
  }
  pts.pop_back();
  return DigitalCurve(std::move(pts));
}

DigitalCurve parse_chain_file(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.size() != 2) {
    throw Error(ErrorCode::MalformedLine,
                "chain-code file needs a start line and a digit line, found " +
                    std::to_string(lines.size()) + " content lines");
  }
  const Point start = parse_pair(lines[0].first, lines[0].second);
  return parse_chain_code(start, lines[1].second);
}

int chain_digit(std::int64_t dx, std::int64_t dy) noexcept {
  for (std::size_t d = 0; d < kChainSteps.size(); ++d) {
    if (kChainSteps[d].x == dx && kChainSteps[d].y == dy) return static_cast<int>(d);
  }
  return -1;
}

Vec2 centroid(const DigitalCurve& curve) {
  i128 sx = 0, sy = 0;
  for (const Point& p : curve.points()) {
    sx += p.x;
    sy += p.y;
  }
  const auto n = static_cast<double>(curve.size());
  return {static_cast<double>(sx) / n, static_cast<double>(sy) / n};
}

std::size_t farthest_from_centroid(const DigitalCurve& curve) {
  i128 sx = 0, sy = 0;
  for (const Point& p : curve.points()) {
    sx += p.x;
    sy += p.y;
  }
  const auto n = static_cast<i128>(curve.size());
  std::size_t best = 0;
  i128 best_d = -1;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    // n^2 times the squared distance to the centroid, exact.
    const i128 dx = n * curve[i].x - sx;
    const i128 dy = n * curve[i].y - sy;
    const i128 d = dx * dx + dy * dy;
    if (d > best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

Line inertia_line(const DigitalCurve& curve) {
  i128 sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (const Point& p : curve.points()) {
    sx += p.x;
    sy += p.y;
    sxx += static_cast<i128>(p.x) * p.x;
    syy += static_cast<i128>(p.y) * p.y;
    sxy += static_cast<i128>(p.x) * p.y;
  }
  const auto n = static_cast<i128>(curve.size());
  // n times the central second moments; exact integers.
  const auto mu20 = static_cast<double>(n * sxx - sx * sx);
  const auto mu02 = static_cast<double>(n * syy - sy * sy);
  const auto mu11 = static_cast<double>(n * sxy - sx * sy);

  Line line;
  line.point = centroid(curve);
  const double scale = 1e-12 * (mu20 + mu02);
  if (std::abs(mu20 - mu02) <= scale && std::abs(mu11) <= scale) {
    line.direction = {1.0, 0.0};
    return line;
  }
  const double theta = 0.5 * std::atan2(2.0 * mu11, mu20 - mu02);
  line.direction = {std::cos(theta), std::sin(theta)};
  return line;
}

CurveGeometry curve_geometry(const DigitalCurve& curve) {
  CurveGeometry g;
  g.inertia_line = inertia_line(curve);
  g.centroid = g.inertia_line.point;
  const Vec2 c = g.centroid;
  const Vec2 u = g.inertia_line.direction;
  for (const Point& p : curve.points()) {
    const double dx = static_cast<double>(p.x) - c.x;
    const double dy = static_cast<double>(p.y) - c.y;
    g.d1 = std::max(g.d1, std::hypot(dx, dy));
    g.d2 = std::max(g.d2, std::abs(dx * u.y - dy * u.x));
  }
  g.d = g.d1 + g.d2;
  return g;
}

std::string format_point_list(std::span<const Point> points) {
  std::ostringstream os;
  for (const Point& p : points) os << p.x << ' ' << p.y << '\n';
  return os.str();
}

}  // namespace polyapprox
