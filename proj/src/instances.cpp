#include "atsp/instances.h"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>

#include "atsp/error.h"

namespace atsp {

namespace {

std::string fmt_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// Fixed-output engine plus explicit mapping, so instances are identical on
// every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  std::size_t index(std::size_t bound) {
    return static_cast<std::size_t>(engine_() % bound);
  }

 private:
  std::mt19937_64 engine_;
};

Region random_segment(Rng& rng, const RandomParams& p) {
  const double x = rng.uniform(0.0, p.box);
  const double y = rng.uniform(0.0, p.box);
  const double h = 0.5 * p.seg_len;
  return Region::segment({x, y - h}, {x, y + h});
}

Region random_points(Rng& rng, const RandomParams& p, std::size_t k) {
  const double ax = rng.uniform(0.0, p.box);
  const double ay = rng.uniform(0.0, p.box);
  const double h = 0.5 * p.spread;
  std::vector<Point> pts;
  pts.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const double dx = rng.uniform(-h, h);
    const double dy = rng.uniform(-h, h);
    pts.push_back({ax + dx, ay + dy});
  }
  return Region::points(std::move(pts));
}

Region random_disk(Rng& rng, const RandomParams& p) {
  const double x = rng.uniform(0.0, p.box);
  const double y = rng.uniform(0.0, p.box);
  return Region::disk({x, y}, p.radius, p.samples_m);
}

std::vector<Region> disjoint_disks(Rng& rng, std::size_t n,
                                   const RandomParams& p) {
  std::vector<Region> out;
  std::size_t attempts = 0;
  while (out.size() < n) {
    if (++attempts > kMaxPlacementAttempts) {
      throw PackingTooDense("could not place " + std::to_string(n) +
                            " disjoint disks of radius " + fmt_g(p.radius) +
                            " in a box of side " + fmt_g(p.box));
    }
    const Region cand = random_disk(rng, p);
    const Point c = cand.as<Disk>().center;
    bool ok = true;
    for (const auto& r : out) {
      if (distance(r.as<Disk>().center, c) <= 2.0 * p.radius) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(cand);
  }
  return out;
}

}  // namespace

GridInstance gen_grid_segments(const GridSpec& spec) {
  if (spec.side < 2) throw InvalidArgument("grid side must be at least 2");
  if (!(spec.eps > 0.0 && spec.eps < 0.5)) {
    throw InvalidArgument("grid eps must lie in (0, 0.5)");
  }
  const std::size_t s = spec.side;
  GridInstance g;
  g.instance.label = "grid-" + std::to_string(s) + "x" + std::to_string(s) +
                     "-eps" + fmt_g(spec.eps);
  g.instance.epsilon_meta = spec.eps;
  for (std::size_t j = 0; j < s; ++j) {
    const double y = static_cast<double>(j) * (1.0 + spec.eps);
    for (std::size_t i = 0; i < s; ++i) {
      const double x = static_cast<double>(i);
      g.instance.regions.push_back(Region::segment({x, y - 0.5}, {x, y + 0.5}));
    }
  }

  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < s; ++j) {
    for (std::size_t t = 0; t < s; ++t) {
      const std::size_t i = (j % 2 == 0) ? t : s - 1 - t;
      rows.push_back(j * s + i);
    }
  }
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t t = 0; t < s; ++t) {
      const std::size_t j = (i % 2 == 0) ? t : s - 1 - t;
      cols.push_back(j * s + i);
    }
  }
  g.row_snake = Ordering::cycle(rows);
  g.col_snake = Ordering::cycle(cols);
  g.instance.named_orderings["row_snake"] = g.row_snake.sequence();
  g.instance.named_orderings["col_snake"] = g.col_snake.sequence();
  return g;
}

RadialInstance gen_radial_segments(const RadialSpec& spec) {
  if (spec.pairs < 2) throw InvalidArgument("radial pairs must be at least 2");
  if (!(spec.eps > 0.0 && spec.eps < 0.1)) {
    throw InvalidArgument("radial eps must lie in (0, 0.1)");
  }
  if (!(spec.long_len > 0.0) || !std::isfinite(spec.long_len)) {
    throw InvalidArgument("radial long_len must be positive");
  }
  const std::size_t n = 2 * spec.pairs;
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  RadialInstance r;
  r.instance.label = "radial-" + std::to_string(spec.pairs) + "pairs-eps" +
                     fmt_g(spec.eps);
  r.instance.epsilon_meta = spec.eps;
  std::vector<std::size_t> radial;
  std::vector<std::size_t> longs;
  std::vector<std::size_t> shorts;
  for (std::size_t k = 0; k < n; ++k) {
    const double angle =
        kTwoPi * static_cast<double>(k) / static_cast<double>(n);
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const double len = (k % 2 == 0) ? spec.long_len : spec.eps;
    const double outer = spec.eps + len;
    r.instance.regions.push_back(
        Region::segment({spec.eps * c, spec.eps * s}, {outer * c, outer * s}));
    radial.push_back(k);
    (k % 2 == 0 ? longs : shorts).push_back(k);
  }
  std::vector<std::size_t> alternating = longs;
  alternating.insert(alternating.end(), shorts.begin(), shorts.end());
  r.radial = Ordering::cycle(radial);
  r.alternating = Ordering::cycle(alternating);
  r.instance.named_orderings["radial"] = r.radial.sequence();
  r.instance.named_orderings["alternating"] = r.alternating.sequence();
  return r;
}

RandomKind parse_random_kind(std::string_view s) {
  if (s == "points") return RandomKind::Points;
  if (s == "segment") return RandomKind::Segment;
  if (s == "disk") return RandomKind::Disk;
  if (s == "mixed") return RandomKind::Mixed;
  throw InvalidArgument("unknown random kind '" + std::string(s) + "'");
}

std::string_view random_kind_name(RandomKind k) {
  switch (k) {
    case RandomKind::Points:
      return "points";
    case RandomKind::Segment:
      return "segment";
    case RandomKind::Disk:
      return "disk";
    case RandomKind::Mixed:
      return "mixed";
  }
  return "unknown";
}

Instance gen_random(RandomKind kind, std::size_t n, std::uint64_t seed,
                    const RandomParams& params) {
  if (n < 3) throw InvalidArgument("random instances need n >= 3");
  if (!(params.box > 0.0)) throw InvalidArgument("box must be positive");
  if (params.k == 0) throw InvalidArgument("k must be positive");

  Rng rng(seed);
  Instance inst;
  inst.label = "random-" + std::string(random_kind_name(kind)) + "-n" +
               std::to_string(n) + "-seed" + std::to_string(seed);
  switch (kind) {
    case RandomKind::Points:
      for (std::size_t i = 0; i < n; ++i) {
        inst.regions.push_back(random_points(rng, params, params.k));
      }
      break;
    case RandomKind::Segment:
      for (std::size_t i = 0; i < n; ++i) {
        inst.regions.push_back(random_segment(rng, params));
      }
      break;
    case RandomKind::Disk:
      inst.regions = disjoint_disks(rng, n, params);
      break;
    case RandomKind::Mixed:
      for (std::size_t i = 0; i < n; ++i) {
        switch (rng.index(3)) {
          case 0:
            inst.regions.push_back(
                random_points(rng, params, 1 + rng.index(params.k)));
            break;
          case 1:
            inst.regions.push_back(random_segment(rng, params));
            break;
          default:
            inst.regions.push_back(random_disk(rng, params));
            break;
        }
      }
      break;
  }
  return inst;
}

}  // namespace atsp
