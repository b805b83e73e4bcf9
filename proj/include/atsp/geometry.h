#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

namespace atsp {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

double distance(const Point& a, const Point& b);
bool is_finite(const Point& p);

// A finite set of admissible visitation points.
struct PointSet {
  std::vector<Point> pts;

  friend bool operator==(const PointSet&, const PointSet&) = default;
};

struct Segment {
  Point a;
  Point b;

  friend bool operator==(const Segment&, const Segment&) = default;
};

// Disk with its boundary sampling resolution. The adversary is evaluated on
// `samples` evenly spaced boundary points, the first one at angle 0.
struct Disk {
  Point center;
  double radius = 0.0;
  std::size_t samples = 0;

  friend bool operator==(const Disk&, const Disk&) = default;
};

enum class RegionKind { Points, Segment, Disk };

class Region {
 public:
  using Shape = std::variant<PointSet, Segment, Disk>;

  // Validates the shape; throws InvalidRegion on non-finite coordinates,
  // empty point lists, nonpositive radius or zero samples.
  explicit Region(Shape shape);

  static Region points(std::vector<Point> pts);
  static Region segment(Point a, Point b);
  static Region disk(Point center, double radius, std::size_t samples);

  RegionKind kind() const;
  const Shape& shape() const { return shape_; }

  template <typename T>
  const T& as() const {
    return std::get<T>(shape_);
  }

  friend bool operator==(const Region&, const Region&) = default;

 private:
  Shape shape_;
};

// Finite candidate set the adversary chooses from. Segments compile to their
// endpoints (one point if degenerate), disks to their boundary samples at
// angles 2*pi*k/samples, point sets verbatim.
std::vector<Point> compile_candidates(const Region& region);

// Continuous diameter: max pairwise distance for point sets, |ab| for a
// segment, 2r for a disk.
double diameter(const Region& region);

// Midpoint for segments, center for disks, centroid for point sets.
Point center(const Region& region);

// Max pairwise distance over a finite set; 0 for fewer than two points.
double point_set_diameter(std::span<const Point> pts);

}  // namespace atsp
