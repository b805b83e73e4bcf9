// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "atsp/adversary.h"
#include "atsp/error.h"
#include "atsp/hatgraph.h"
#include "atsp/instances.h"
#include "atsp/solvers.h"
#include "atsp/tsp.h"
#include "cli.h"
#include "golden_cases.h"
#include "test_support.h"

namespace {

using namespace atsp;
namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Instance unit_segments(std::size_t n, std::uint64_t seed, double box) {
  RandomParams p;
  p.box = box;
  p.seg_len = 1.0;
  return gen_random(RandomKind::Segment, n, seed, p);
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(1);
  double worst = 0.0;
  std::size_t bad = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 3 + seed % 4;
    const Instance inst = testing::random_mixed(n, 1000 + seed, 4);
    const auto seq = testing::random_perm(n, rng);
    const bool closed = seed % 3 != 0;
    const Ordering ord = closed ? Ordering::cycle(seq) : Ordering::path(seq);
    const double dp = adversarial_value(inst, ord, closed).length;
    const double bf = adversarial_value_bruteforce(inst, ord, closed).length;
    const double oracle =
        testing::brute_force_adversary(compile_all(inst), seq, closed);
    const double diff = std::max(std::abs(dp - bf), std::abs(dp - oracle));
    worst = std::max(worst, diff);
    if (diff > 1e-9) ++bad;
  }
  return {bad == 0, fmt("300 instances, %zu mismatches, max |diff| %.3g", bad, worst)};
}

Outcome metric_law() {
  std::size_t violations = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 3 + seed % 8;
    const auto report = verify_metric(build_hatgraph(testing::random_mixed(n, 2000 + seed)));
    violations += report.violations.size();
  }
  return {violations == 0, fmt("200 instances, %zu violations", violations)};
}

struct ApproxSuite {
  std::vector<double> exact, two, three, christofides, held_karp;
};

const ApproxSuite& approx_suite() {
  static const ApproxSuite suite = [] {
    ApproxSuite s;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const Instance inst = testing::random_mixed(4 + seed % 5, 3000 + seed);
      s.exact.push_back(exact_atsp(inst).tour.length);
      s.two.push_back(atsp_2approx(inst).tour.length);
      s.three.push_back(atsp_3approx(inst).tour.length);
      const auto hat = build_hatgraph(inst);
      s.christofides.push_back(christofides_tsp(hat.w).weight);
      s.held_karp.push_back(held_karp_tsp(hat.w).weight);
    }
    return s;
  }();
  return suite;
}

Outcome two_approx() {
  const auto& s = approx_suite();
  double worst = 0.0;
  bool ok = true;
  for (std::size_t i = 0; i < s.exact.size(); ++i) {
    ok = ok && s.two[i] <= 2 * s.exact[i] + 1e-9;
    worst = std::max(worst, s.two[i] / s.exact[i]);
  }
  return {ok, fmt("100 instances, max ratio %.4f (bound 2)", worst)};
}

Outcome three_approx() {
  const auto& s = approx_suite();
  double worst = 0.0;
  double worst_c = 0.0;
  bool ok = true;
  for (std::size_t i = 0; i < s.exact.size(); ++i) {
    ok = ok && s.three[i] <= 3 * s.exact[i] + 1e-9;
    ok = ok && s.christofides[i] <= 1.5 * s.held_karp[i] + 1e-9;
    worst = std::max(worst, s.three[i] / s.exact[i]);
    worst_c = std::max(worst_c, s.christofides[i] / s.held_karp[i]);
  }
  return {ok, fmt("max ratio %.4f (bound 3), Christofides/Held-Karp max %.4f (bound 1.5)",
                  worst, worst_c)};
}

Outcome pair_constant() {
  const double v = segment_pair_minmax();
  return {std::abs(v - 1.5) <= 1e-6, fmt("minmax %.9f, target 1.5 +/- 1e-6", v)};
}

Outcome segment_lower_bound() {
  double slack = INFINITY;
  bool ok = true;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 4 + seed % 4;
    const double len = exact_atsp(unit_segments(n, 4000 + seed, 3.0)).tour.length;
    const double bound = n % 2 ? 0.75 * (n - 1) : 0.75 * n;
    ok = ok && len >= bound;
    slack = std::min(slack, len - bound);
  }
  return {ok, fmt("100 instances, min slack over bound %.4f", slack)};
}

Outcome center_bound() {
  bool ok = true;
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Instance inst = unit_segments(4 + seed % 5, 5000 + seed, 4.0);
    const double opt = exact_atsp(inst).tour.length;
    const auto c = center_tsp_ordering(inst, true);
    ok = ok && c.tour.length <= 7.0 / 3.0 * opt + 1 + 1e-9;
    ok = ok && c.aux_weight.has_value() && *c.aux_weight <= opt + 1e-9;
    worst = std::max(worst, c.tour.length / opt);
  }
  return {ok, fmt("50 instances, max center/exact %.4f", worst)};
}

Outcome sandwich() {
  bool ok = true;
  std::size_t tight = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance inst = testing::random_mixed(3 + seed % 4, 6000 + seed);
    const auto cands = compile_all(inst);
    double slack = 0.0;
    for (const auto& c : cands) slack += 2 * point_set_diameter(c);
    const double lo = tspn_exact(inst).length;
    const double mid = exact_atsp(inst).tour.length;
    ok = ok && lo <= mid + 1e-9 && mid <= lo + slack + 1e-9;
    if (std::abs(mid - lo) <= 1e-9) ++tight;
  }
  return {ok, fmt("100 instances, %zu with tspn == exact", tight)};
}

Outcome grid_gap() {
  const auto g7 = gen_grid_segments({7, 0.01});
  const double row = adversarial_value(g7.instance, g7.row_snake, true).length;
  const double col = adversarial_value(g7.instance, g7.col_snake, true).length;
  const auto g3 = gen_grid_segments({3, 0.01});
  const double opt = exact_atsp(g3.instance).tour.length;
  const double col3 = adversarial_value(g3.instance, g3.col_snake, true).length;
  const bool gap = row / col >= 1.25;
  const bool near = col3 <= 1.05 * opt;
  return {gap && near,
          fmt("7x7 row/col %.4f (need >= 1.25) %s; 3x3 col_snake/exact %.4f (need <= 1.05) %s",
              row / col, gap ? "ok" : "short", col3 / opt, near ? "ok" : "over")};
}

Outcome radial_gap() {
  const auto r = gen_radial_segments({8, 0.01});
  const double radial = adversarial_value(r.instance, r.radial, true).length;
  const double alt = adversarial_value(r.instance, r.alternating, true).length;
  return {radial / alt >= 1.6, fmt("radial/alternating %.4f (need >= 1.6)", radial / alt)};
}

Instance with_samples(const Instance& base, std::size_t m) {
  Instance out = base;
  for (auto& r : out.regions) {
    const auto& d = r.as<Disk>();
    r = Region::disk(d.center, d.radius, m);
  }
  return out;
}

Outcome disk_discretization() {
  bool ok = true;
  double worst_change = 0.0;
  double worst_w = 0.0;
  const std::size_t ms[] = {8, 16, 32, 64};
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    RandomParams p;
    p.radius = 0.5;
    p.box = 6.0;
    const Instance base = gen_random(RandomKind::Disk, 5, 7000 + seed, p);
    const Ordering fixed = Ordering::identity(5);
    double prev_fixed = -INFINITY;
    double prev_exact = -INFINITY;
    double at32[2] = {0, 0};
    for (const std::size_t m : ms) {
      const Instance inst = with_samples(base, m);
      const double vf = adversarial_value(inst, fixed, true).length;
      const double ve = exact_atsp(inst).tour.length;
      ok = ok && vf >= prev_fixed && ve >= prev_exact;
      prev_fixed = vf;
      prev_exact = ve;
      if (m == 32) {
        at32[0] = vf;
        at32[1] = ve;
      }
      if (m == 64) {
        const double change =
            std::max((vf - at32[0]) / at32[0], (ve - at32[1]) / at32[1]);
        worst_change = std::max(worst_change, change);
      }
    }
    const Instance fine = with_samples(base, 360);
    const auto hat = build_hatgraph(fine);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = i + 1; j < 5; ++j) {
        worst_w = std::max(worst_w, std::abs(hat.w(i, j) -
                                             disk_w_exact(fine.regions[i], fine.regions[j])));
      }
    }
  }
  ok = ok && worst_change <= 0.2 && worst_w <= 2e-4;
  return {ok, fmt("30 instances, max change 32->64 %.3g, max w error at m=360 %.3g",
                  worst_change, worst_w)};
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli_run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str() + err.str()};
}

Outcome determinism() {
  const fs::path dir = fs::temp_directory_path() / "atsp_acceptance";
  fs::create_directories(dir);
  auto p = [&](const std::string& name) { return (dir / name).string(); };

  const std::vector<std::vector<std::string>> gens = {
      {"--family", "grid", "--side", "4", "--eps", "0.01"},
      {"--family", "radial", "--pairs", "5", "--eps", "0.01"},
      {"--family", "random", "--kind", "mixed", "--n", "6", "--seed", "42"},
      {"--family", "random", "--kind", "disk", "--n", "5", "--seed", "42"},
  };
  std::size_t unstable = 0;
  std::size_t failed = 0;
  std::size_t round_trip = 0;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    std::vector<std::string> files;
    for (int pass = 0; pass < 2; ++pass) {
      files.push_back(p(fmt("gen%zu_%d.json", g, pass)));
      std::vector<std::string> args = {"gen"};
      args.insert(args.end(), gens[g].begin(), gens[g].end());
      args.insert(args.end(), {"--out", files.back()});
      failed += cli_run(args).code != cli::kOk;
    }
    const std::string text = testing::read_file(files[0]);
    unstable += text != testing::read_file(files[1]);
    const Instance inst = read_instance(files[0]);
    if (!(instance_from_json(instance_to_json(inst)) == inst) ||
        instance_to_json(inst) != text) {
      ++round_trip;
    }

    const std::size_t n = inst.size();
    std::vector<std::vector<std::string>> commands = {
        {"solve", "--in", files[0], "--method", "3approx"},
        {"solve", "--in", files[0], "--method", "mst2"},
        {"solve", "--in", files[0], "--method", "center"},
        {"eval", "--in", files[0], "--order", "0,1,2", "--open"},
        {"compare", "--in", files[0], "--methods", "exact,2approx,3approx,center,tspn",
         "--no-timing", "--json", p(fmt("cmp%zu.json", g)), "--svg",
         p(fmt("cmp%zu.svg", g))},
    };
    if (n <= 9) commands.push_back({"solve", "--in", files[0], "--method", "exact"});
    for (const auto& cmd : commands) {
      std::vector<std::string> produced;
      for (int pass = 0; pass < 2; ++pass) {
        const auto r = cli_run(cmd);
        failed += r.code != cli::kOk && cmd[0] != "eval";
        std::string all = r.out;
        if (cmd[0] == "compare") {
          all += testing::read_file(p(fmt("cmp%zu.json", g)));
          all += testing::read_file(p(fmt("cmp%zu.svg", g)));
        }
        produced.push_back(all);
      }
      unstable += produced[0] != produced[1];
    }
  }

  std::size_t golden_mismatch = 0;
  for (const auto& c : testing::golden_cases()) {
    const fs::path file = fs::path(ATSP_GOLDEN_DIR) / c.file;
    golden_mismatch += !fs::exists(file) || testing::render_golden(c) != testing::read_file(file);
  }
  fs::remove_all(dir);
  const bool ok = unstable == 0 && failed == 0 && round_trip == 0 && golden_mismatch == 0;
  return {ok, fmt("%zu unstable outputs, %zu failed commands, %zu round-trip errors, "
                  "%zu golden mismatches",
                  unstable, failed, round_trip, golden_mismatch)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "oracle equivalence", oracle_equivalence},
      {2, "metric law", metric_law},
      {3, "2-approximation", two_approx},
      {4, "3-approximation", three_approx},
      {5, "pair constant", pair_constant},
      {6, "segment lower bound", segment_lower_bound},
      {7, "center-order bound", center_bound},
      {8, "sandwich bound", sandwich},
      {9, "grid gap", grid_gap},
      {10, "radial gap", radial_gap},
      {11, "disk discretization", disk_discretization},
      {12, "determinism and format", determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2d %-24s %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
