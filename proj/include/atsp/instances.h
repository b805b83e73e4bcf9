#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "atsp/adversary.h"
#include "atsp/instance.h"

namespace atsp {

// side x side vertical unit segments; horizontal midpoint spacing 1,
// vertical spacing 1 + eps.
struct GridSpec {
  std::size_t side = 2;
  double eps = 0.01;
};

// 2*pairs segments pointing outward from a circle of radius eps at equal
// angles, lengths alternating long_len and eps.
struct RadialSpec {
  std::size_t pairs = 2;
  double eps = 0.01;
  double long_len = 1.0;
};

struct GridInstance {
  Instance instance;
  Ordering row_snake;  // boustrophedon by rows
  Ordering col_snake;  // boustrophedon by columns
};

struct RadialInstance {
  Instance instance;
  Ordering radial;       // angular order
  Ordering alternating;  // all long segments, then all short ones
};

// Region index of grid cell (column i, row j) is j*side + i; its midpoint is
// (i, j*(1+eps)). Throws InvalidArgument unless side >= 2, 0 < eps < 0.5.
GridInstance gen_grid_segments(const GridSpec& spec);

// Segment k sits at angle 2*pi*k/(2*pairs); even k are long. Throws
// InvalidArgument unless pairs >= 2, 0 < eps < 0.1, long_len > 0.
RadialInstance gen_radial_segments(const RadialSpec& spec);

enum class RandomKind { Points, Segment, Disk, Mixed };

RandomKind parse_random_kind(std::string_view s);
std::string_view random_kind_name(RandomKind k);

struct RandomParams {
  double box = 10.0;          // placement square [0, box]^2
  std::size_t k = 3;          // candidates per point-set region
  double spread = 1.0;        // side of the square holding a point set
  double radius = 0.5;        // disk radius
  std::size_t samples_m = 8;  // disk boundary samples
  double seg_len = 1.0;       // vertical segment length
};

inline constexpr std::size_t kMaxPlacementAttempts = 100'000;

// Deterministic in (kind, n, seed, params). Segment instances are vertical
// segments of length seg_len; disk instances are pairwise disjoint (center
// distance > 2r) by rejection sampling, throwing PackingTooDense after
// kMaxPlacementAttempts draws. Mixed draws each region's kind uniformly;
// point sets then get 1..k candidates and disks may overlap.
Instance gen_random(RandomKind kind, std::size_t n, std::uint64_t seed,
                    const RandomParams& params = {});

// JSON schema:
//   {"label": str,
//    "regions": [{"kind":"points","pts":[[x,y],...]}
//              | {"kind":"segment","a":[x,y],"b":[x,y]}
//              | {"kind":"disk","c":[x,y],"r":r,"m":m}],
//    "meta": {"eps": x, "orderings": {"name": [i,...]}}}
// Doubles are written in shortest round-trip form.
std::string instance_to_json(const Instance& instance);
// Throws ParseError naming the line/column or field path, UnsupportedKind
// for an unknown region kind.
Instance instance_from_json(std::string_view text);

Instance read_instance(const std::filesystem::path& path);
void write_instance(const Instance& instance, const std::filesystem::path& path);

}  // namespace atsp
