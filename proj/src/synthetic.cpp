#include "polyapprox/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <utility>

#include "polyapprox/error.hpp"

namespace polyapprox {

namespace {

std::int64_t sgn(std::int64_t v) { return (v > 0) - (v < 0); }

// Low-pass random walk sampled at `count` angles, wrapped so it closes.
std::vector<double> smooth_noise(std::mt19937_64& rng, std::size_t count, double amplitude) {
  std::normal_distribution<double> step(0.0, 1.0);
  std::vector<double> raw(count);
  for (double& v : raw) v = step(rng);
  std::vector<double> out(count, 0.0);
  constexpr int kHalfWindow = 12;
  for (std::size_t i = 0; i < count; ++i) {
    double sum = 0.0;
    for (int k = -kHalfWindow; k <= kHalfWindow; ++k) {
      const auto j = (static_cast<std::ptrdiff_t>(i) + k + static_cast<std::ptrdiff_t>(count)) %
                     static_cast<std::ptrdiff_t>(count);
      sum += raw[static_cast<std::size_t>(j)];
    }
    out[i] = amplitude * sum / std::sqrt(2.0 * kHalfWindow + 1.0);
  }
  return out;
}

const char* family_name(ShapeFamily f) {
  switch (f) {
    case ShapeFamily::Star: return "star";
    case ShapeFamily::Blob: return "blob";
    case ShapeFamily::RoundedPolygon: return "poly";
  }
  return "shape";
}

}  // namespace

DigitalCurve rasterize_closed(std::span<const Vec2> outline) {
  if (outline.size() < 3) throw Error(ErrorCode::TooFewPoints, "outline needs at least 3 points");
  std::vector<Point> trace;
  const auto lattice = [](const Vec2& v) { return Point{std::llround(v.x), std::llround(v.y)}; };
  Point cur = lattice(outline[0]);
  trace.push_back(cur);
  for (std::size_t i = 1; i <= outline.size(); ++i) {
    const Point target = lattice(outline[i % outline.size()]);
    while (!(cur == target)) {
      const std::int64_t dx = target.x - cur.x;
      const std::int64_t dy = target.y - cur.y;
      const std::int64_t ax = std::abs(dx), ay = std::abs(dy);
      cur.x += 2 * ax >= ay ? sgn(dx) : 0;
      cur.y += 2 * ay >= ax ? sgn(dy) : 0;
      trace.push_back(cur);
    }
  }
  trace.pop_back();  // back at the first point

  // Start inside a stretch the walk visits only once (the point and both
  // walk neighbours); a jitter loop through the start would otherwise swallow
  // the whole curve.
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> visits;
  for (const Point& p : trace) ++visits[{p.x, p.y}];
  const auto once = [&](std::size_t i) {
    const Point& p = trace[i % trace.size()];
    return visits[{p.x, p.y}] == 1;
  };
  std::size_t start = trace.size();
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (once(i + trace.size() - 1) && once(i) && once(i + 1)) {
      start = i;
      break;
    }
  }
  if (start == trace.size()) {
    throw Error(ErrorCode::InvalidGeometry, "outline revisits every lattice point it crosses");
  }
  std::rotate(trace.begin(), trace.begin() + static_cast<std::ptrdiff_t>(start), trace.end());

  std::vector<Point> path;
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> index;
  for (const Point& p : trace) {
    const auto key = std::make_pair(p.x, p.y);
    const auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(key, path.size());
      path.push_back(p);
      continue;
    }
    const std::size_t keep = it->second + 1;
    for (std::size_t j = keep; j < path.size(); ++j) index.erase({path[j].x, path[j].y});
    path.resize(keep);
  }
  return DigitalCurve(std::move(path));
}

DigitalCurve synthetic_shape(ShapeFamily family, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  constexpr std::size_t kSamples = 2048;
  constexpr double kTau = 2.0 * std::numbers::pi;

  const double radius = 20.0 + 38.0 * unit(rng);
  const double noise_amp = 0.01 + 0.025 * unit(rng);
  const std::vector<double> noise = smooth_noise(rng, kSamples, noise_amp);

  std::vector<double> amp(7, 0.0), phase(7, 0.0);
  int lobes = 0;
  double stretch = 1.0;
  switch (family) {
    case ShapeFamily::Star:
      lobes = 3 + static_cast<int>(unit(rng) * 5.0);
      amp[0] = 0.15 + 0.25 * unit(rng);
      phase[0] = kTau * unit(rng);
      break;
    case ShapeFamily::Blob:
      for (std::size_t k = 2; k < amp.size(); ++k) {
        amp[k] = (0.18 / static_cast<double>(k)) * unit(rng);
        phase[k] = kTau * unit(rng);
      }
      stretch = 0.6 + 0.4 * unit(rng);
      break;
    case ShapeFamily::RoundedPolygon:
      lobes = 3 + static_cast<int>(unit(rng) * 4.0);
      phase[0] = kTau * unit(rng);
      stretch = 0.75 + 0.25 * unit(rng);
      break;
  }
  const double tilt = kTau * unit(rng);

  std::vector<Vec2> outline;
  outline.reserve(kSamples);
  for (std::size_t i = 0; i < kSamples; ++i) {
    const double t = kTau * static_cast<double>(i) / kSamples;
    double r = 1.0;
    switch (family) {
      case ShapeFamily::Star: r += amp[0] * std::cos(lobes * t + phase[0]); break;
      case ShapeFamily::Blob:
        for (std::size_t k = 2; k < amp.size(); ++k) {
          r += amp[k] * std::cos(static_cast<double>(k) * t + phase[k]);
        }
        break;
      case ShapeFamily::RoundedPolygon: {
        const double sector = kTau / lobes;
        const double local = std::fmod(t + phase[0], sector) - sector / 2.0;
        r = std::cos(sector / 2.0) / std::cos(local);
        break;
      }
    }
    r = radius * (r + noise[i]);
    const double x = r * std::cos(t);
    const double y = stretch * r * std::sin(t);
    outline.push_back({x * std::cos(tilt) - y * std::sin(tilt) + 200.0,
                       x * std::sin(tilt) + y * std::cos(tilt) + 200.0});
  }
  return rasterize_closed(outline);
}

std::vector<CorpusEntry> synthetic_corpus(std::size_t count, std::uint64_t seed) {
  constexpr ShapeFamily kCycle[] = {ShapeFamily::Star, ShapeFamily::Blob,
                                    ShapeFamily::RoundedPolygon};
  std::vector<CorpusEntry> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const ShapeFamily family = kCycle[i % 3];
    char id[32];
    std::snprintf(id, sizeof id, "syn_%03zu_%s", i, family_name(family));
    out.push_back({id, synthetic_shape(family, seed + 7919 * i)});
  }
  return out;
}

}  // namespace polyapprox
