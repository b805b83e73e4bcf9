#include "atsp/instances.h"

#include <cmath>
#include <filesystem>
#include <numbers>

#include <gtest/gtest.h>

#include "atsp/error.h"
#include "atsp/hatgraph.h"
#include "atsp/solvers.h"

namespace atsp {
namespace {

TEST(GridGenerator, SideTwoLayout) {
  const auto g = gen_grid_segments({2, 0.01});
  ASSERT_EQ(g.instance.size(), 4u);
  const std::vector<Point> mids = {{0, 0}, {1, 0}, {0, 1.01}, {1, 1.01}};
  for (std::size_t r = 0; r < 4; ++r) {
    const auto& s = g.instance.regions[r].as<Segment>();
    EXPECT_DOUBLE_EQ(center(g.instance.regions[r]).x, mids[r].x);
    EXPECT_NEAR(center(g.instance.regions[r]).y, mids[r].y, 1e-15);
    EXPECT_DOUBLE_EQ(distance(s.a, s.b), 1.0);
    EXPECT_EQ(s.a.x, s.b.x);
  }
  EXPECT_EQ(g.instance.epsilon_meta, 0.01);
}

TEST(GridGenerator, SnakesVisitNeighbours) {
  const auto g = gen_grid_segments({4, 0.01});
  EXPECT_EQ(g.row_snake.sequence(),
            (std::vector<std::size_t>{0, 1, 2, 3, 7, 6, 5, 4, 8, 9, 10, 11, 15, 14,
                                      13, 12}));
  EXPECT_EQ(g.instance.named_orderings.at("col_snake"), g.col_snake.sequence());
  EXPECT_EQ(g.col_snake, Ordering::cycle({0, 4, 8, 12, 13, 9, 5, 1, 2, 6, 10, 14, 15,
                                          11, 7, 3}));
}

TEST(GridGenerator, HorizontalNeighboursWeighSqrtTwo) {
  const auto g = gen_grid_segments({5, 0.01});
  const auto hat = build_hatgraph(g.instance);
  for (std::size_t j = 0; j < 5; ++j) {
    for (std::size_t i = 0; i + 1 < 5; ++i) {
      EXPECT_NEAR(hat.w(j * 5 + i, j * 5 + i + 1), std::sqrt(2.0), 1e-12);
    }
  }
}

TEST(GridGenerator, ExactBeatsRowSnakeOnThreeByThree) {
  const auto g = gen_grid_segments({3, 0.01});
  EXPECT_LE(exact_atsp(g.instance).tour.length,
            adversarial_value(g.instance, g.row_snake, true).length + 1e-12);
}

TEST(GridGenerator, RejectsBadSpecs) {
  EXPECT_THROW(gen_grid_segments({1, 0.01}), InvalidArgument);
  EXPECT_THROW(gen_grid_segments({3, 0.0}), InvalidArgument);
  EXPECT_THROW(gen_grid_segments({3, 0.5}), InvalidArgument);
}

TEST(RadialGenerator, PairsTwoLayout) {
  const auto r = gen_radial_segments({2, 0.01});
  ASSERT_EQ(r.instance.size(), 4u);
  const double lengths[] = {1.0, 0.01, 1.0, 0.01};
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& s = r.instance.regions[k].as<Segment>();
    EXPECT_NEAR(distance(s.a, s.b), lengths[k], 1e-15);
    EXPECT_NEAR(distance(s.a, {0, 0}), 0.01, 1e-15);
    const double angle = std::atan2(s.b.y - s.a.y, s.b.x - s.a.x);
    const double want = std::remainder(k * std::numbers::pi / 2, 2 * std::numbers::pi);
    EXPECT_NEAR(std::remainder(angle - want, 2 * std::numbers::pi), 0.0, 1e-12);
  }
  EXPECT_EQ(r.alternating.sequence(), (std::vector<std::size_t>{0, 2, 1, 3}));
}

TEST(RadialGenerator, RadialOrderingPaysDouble) {
  const auto r = gen_radial_segments({8, 0.01});
  const double radial = adversarial_value(r.instance, r.radial, true).length;
  const double alt = adversarial_value(r.instance, r.alternating, true).length;
  EXPECT_GE(radial / alt, 1.6);
  // Envelope p(1+O(eps)) + 4, and the frozen evaluator value for p = 8.
  EXPECT_LE(alt, 8.0 * 1.01 + 4.0);
  EXPECT_NEAR(alt, 8.903737, 1e-6);
}

TEST(RadialGenerator, ExactBeatsRadialOnSixSegments) {
  const auto r = gen_radial_segments({3, 0.01});
  EXPECT_LE(exact_atsp(r.instance).tour.length,
            adversarial_value(r.instance, r.radial, true).length + 1e-12);
}

TEST(RadialGenerator, RejectsBadSpecs) {
  EXPECT_THROW(gen_radial_segments({1, 0.01}), InvalidArgument);
  EXPECT_THROW(gen_radial_segments({4, 0.1}), InvalidArgument);
  EXPECT_THROW(gen_radial_segments({4, 0.01, -1.0}), InvalidArgument);
}

TEST(RandomGenerator, DeterministicInSeed) {
  RandomParams p;
  p.box = 10;
  EXPECT_EQ(gen_random(RandomKind::Segment, 5, 42, p),
            gen_random(RandomKind::Segment, 5, 42, p));
  EXPECT_NE(gen_random(RandomKind::Segment, 5, 42, p),
            gen_random(RandomKind::Segment, 5, 43, p));
  for (const auto& r : gen_random(RandomKind::Segment, 5, 42, p).regions) {
    const auto& s = r.as<Segment>();
    EXPECT_EQ(s.a.x, s.b.x);
    EXPECT_NEAR(s.b.y - s.a.y, 1.0, 1e-12);
  }
}

TEST(RandomGenerator, DisksAreDisjoint) {
  RandomParams p;
  p.radius = 0.5;
  const auto inst = gen_random(RandomKind::Disk, 6, 7, p);
  ASSERT_EQ(inst.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) {
      EXPECT_GT(distance(inst.regions[i].as<Disk>().center,
                         inst.regions[j].as<Disk>().center),
                1.0);
    }
  }
}

TEST(RandomGenerator, PointSetsHaveKCandidates) {
  const auto inst = gen_random(RandomKind::Points, 4, 1, {.k = 3});
  ASSERT_EQ(inst.size(), 4u);
  for (const auto& r : inst.regions) EXPECT_EQ(r.as<PointSet>().pts.size(), 3u);
}

TEST(RandomGenerator, Errors) {
  EXPECT_THROW(gen_random(RandomKind::Points, 2, 1), InvalidArgument);
  RandomParams crowded;
  crowded.box = 2.0;
  crowded.radius = 0.5;
  EXPECT_THROW(gen_random(RandomKind::Disk, 30, 1, crowded), PackingTooDense);
}

TEST(InstanceJson, RoundTripsExactly) {
  std::vector<Instance> samples = {
      gen_grid_segments({3, 0.01}).instance,
      gen_radial_segments({4, 0.03}).instance,
  };
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    samples.push_back(gen_random(RandomKind::Mixed, 3 + seed % 6, seed));
  }
  for (const auto& inst : samples) {
    const std::string text = instance_to_json(inst);
    const Instance back = instance_from_json(text);
    EXPECT_EQ(back, inst) << inst.label;
    EXPECT_EQ(instance_to_json(back), text);
  }
}

TEST(InstanceJson, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "atsp_io_test.json";
  const auto inst = gen_random(RandomKind::Disk, 5, 3);
  write_instance(inst, path);
  EXPECT_EQ(read_instance(path), inst);
  std::filesystem::remove(path);
  EXPECT_THROW(read_instance(path), IoError);
}

TEST(InstanceJson, RejectsUnsupportedKind) {
  EXPECT_THROW(instance_from_json(R"({"regions":[{"kind":"polygon","pts":[]}]})"),
               UnsupportedKind);
}

TEST(InstanceJson, DiagnosticsNameTheProblem) {
  try {
    instance_from_json(R"({"label":"x"})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("regions"), std::string::npos);
  }
  try {
    instance_from_json(
        R"({"regions":[{"kind":"segment","a":[0,0],"b":[0,1]},{"kind":"disk","c":[0,0],"r":"big","m":4}]})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("regions[1].r"), std::string::npos) << e.what();
  }
  try {
    instance_from_json("{\n  \"regions\": [\n    {\"kind\": \"points\",, }\n]}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(instance_from_json(R"({"regions":[{"kind":"disk","c":[0,0],"r":0,"m":4}]})"),
               ParseError);
  EXPECT_THROW(
      instance_from_json(
          R"({"regions":[{"kind":"points","pts":[[0,0]]}],"meta":{"orderings":{"x":[1]}}})"),
      ParseError);
}

}  // namespace
}  // namespace atsp
