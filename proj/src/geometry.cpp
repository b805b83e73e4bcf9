#include "atsp/geometry.h"

#include <cmath>
#include <numbers>
#include <string>

#include "atsp/error.h"

namespace atsp {

double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

bool is_finite(const Point& p) {
  return std::isfinite(p.x) && std::isfinite(p.y);
}

namespace {

void require_finite(const Point& p, const char* what) {
  if (!is_finite(p)) {
    throw InvalidRegion(std::string("non-finite coordinate in ") + what);
  }
}

struct Validator {
  void operator()(const PointSet& s) const {
    if (s.pts.empty()) throw InvalidRegion("point set region has no points");
    for (const auto& p : s.pts) require_finite(p, "point set");
  }
  void operator()(const Segment& s) const {
    require_finite(s.a, "segment");
    require_finite(s.b, "segment");
  }
  void operator()(const Disk& d) const {
    require_finite(d.center, "disk center");
    if (!std::isfinite(d.radius) || d.radius <= 0.0) {
      throw InvalidRegion("disk radius must be positive and finite");
    }
    if (d.samples == 0) throw InvalidRegion("disk needs at least one sample");
  }
};

}  // namespace

Region::Region(Shape shape) : shape_(std::move(shape)) {
  std::visit(Validator{}, shape_);
}

Region Region::points(std::vector<Point> pts) {
  return Region(PointSet{std::move(pts)});
}

Region Region::segment(Point a, Point b) { return Region(Segment{a, b}); }

Region Region::disk(Point center, double radius, std::size_t samples) {
  return Region(Disk{center, radius, samples});
}

RegionKind Region::kind() const {
  switch (shape_.index()) {
    case 0:
      return RegionKind::Points;
    case 1:
      return RegionKind::Segment;
    default:
      return RegionKind::Disk;
  }
}

std::vector<Point> compile_candidates(const Region& region) {
  struct Compiler {
    std::vector<Point> operator()(const PointSet& s) const { return s.pts; }
    std::vector<Point> operator()(const Segment& s) const {
      if (s.a == s.b) return {s.a};
      return {s.a, s.b};
    }
    std::vector<Point> operator()(const Disk& d) const {
      // angle = (2*pi*k)/m keeps sample k of m bitwise equal to sample 2k of
      // 2m, so refinements are exact supersets.
      constexpr double kTwoPi = 2.0 * std::numbers::pi;
      std::vector<Point> out;
      out.reserve(d.samples);
      for (std::size_t k = 0; k < d.samples; ++k) {
        const double angle =
            kTwoPi * static_cast<double>(k) / static_cast<double>(d.samples);
        out.push_back({d.center.x + d.radius * std::cos(angle),
                       d.center.y + d.radius * std::sin(angle)});
      }
      return out;
    }
  };
  return std::visit(Compiler{}, region.shape());
}

double point_set_diameter(std::span<const Point> pts) {
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      best = std::max(best, distance(pts[i], pts[j]));
    }
  }
  return best;
}

double diameter(const Region& region) {
  struct Diam {
    double operator()(const PointSet& s) const {
      return point_set_diameter(s.pts);
    }
    double operator()(const Segment& s) const { return distance(s.a, s.b); }
    double operator()(const Disk& d) const { return 2.0 * d.radius; }
  };
  return std::visit(Diam{}, region.shape());
}

Point center(const Region& region) {
  struct Center {
    Point operator()(const PointSet& s) const {
      double sx = 0.0;
      double sy = 0.0;
      for (const auto& p : s.pts) {
        sx += p.x;
        sy += p.y;
      }
      const auto n = static_cast<double>(s.pts.size());
      return {sx / n, sy / n};
    }
    Point operator()(const Segment& s) const {
      return {0.5 * (s.a.x + s.b.x), 0.5 * (s.a.y + s.b.y)};
    }
    Point operator()(const Disk& d) const { return d.center; }
  };
  return std::visit(Center{}, region.shape());
}

}  // namespace atsp
