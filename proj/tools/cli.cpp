#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "atsp/error.h"
#include "atsp/instances.h"
#include "json.hpp"

namespace atsp::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

std::vector<std::size_t> parse_order(const std::string& text,
                                     const Instance& instance) {
  if (const auto it = instance.named_orderings.find(text);
      it != instance.named_orderings.end()) {
    return it->second;
  }
  std::vector<std::size_t> perm;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      throw UsageError("bad index '" + item + "' in --order");
    }
    if (pos != item.size()) throw UsageError("bad index '" + item + "' in --order");
    perm.push_back(v);
  }
  if (perm.size() != instance.size() || !is_permutation_of_range(perm)) {
    throw UsageError("--order must be a permutation of 0.." +
                     std::to_string(instance.size() - 1));
  }
  return perm;
}

Json points_along(const CandidateSets& cands, const AdversarialTour& tour) {
  Json pts = Json::array();
  for (auto r : tour.ordering.sequence()) {
    const Point& p = cands[r][tour.choice[r]];
    pts.push_back(Json::array({p.x, p.y}));
  }
  return pts;
}

Json tour_json(const Instance& instance, const AdversarialTour& tour) {
  Json j;
  j["ordering"] = tour.ordering.sequence();
  j["closed"] = tour.closed;
  j["length"] = tour.length;
  j["choice"] = tour.choice;
  j["points"] = points_along(compile_all(instance), tour);
  return j;
}

Json optional_number(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// --- gen ---------------------------------------------------------------

struct GenOptions {
  std::string family;
  std::string out;
  std::size_t side = 5;
  double eps = 0.01;
  std::size_t pairs = 8;
  double long_len = 1.0;
  std::string kind = "segment";
  std::size_t n = 6;
  std::uint64_t seed = 1;
  RandomParams params;
};

int cmd_gen(const GenOptions& o, std::ostream& out) {
  Instance inst;
  if (o.family == "grid") {
    inst = gen_grid_segments({o.side, o.eps}).instance;
  } else if (o.family == "radial") {
    inst = gen_radial_segments({o.pairs, o.eps, o.long_len}).instance;
  } else {
    inst = gen_random(parse_random_kind(o.kind), o.n, o.seed, o.params);
  }
  write_instance(inst, o.out);
  out << "wrote " << inst.size() << " regions to " << o.out << "\n";
  return kOk;
}

// --- solve / eval ------------------------------------------------------

int cmd_solve(const std::string& in, const std::string& method,
              std::ostream& out) {
  const Instance inst = read_instance(in);
  const SolveResult r = run_method(method, inst);
  Json j;
  j["label"] = inst.label;
  j["method"] = method_tag(r.method);
  j["ordering"] = r.ordering.sequence();
  j["length"] = r.tour.length;
  j["aux_weight"] = optional_number(r.aux_weight);
  j["choice"] = r.tour.choice;
  j["points"] = points_along(compile_all(inst), r.tour);
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_eval(const std::string& in, const std::string& order, bool open,
             std::ostream& out) {
  const Instance inst = read_instance(in);
  auto perm = parse_order(order, inst);
  const Ordering ord =
      open ? Ordering::path(std::move(perm)) : Ordering::cycle(std::move(perm));
  const auto tour = adversarial_value(inst, ord, !open);
  Json j = tour_json(inst, tour);
  out << j.dump(2) << "\n";
  return kOk;
}

// --- compare -----------------------------------------------------------

int cmd_compare(const std::string& in, const std::vector<std::string>& methods,
                const std::string& svg, const std::string& json_out,
                bool timing, std::ostream& out) {
  const Instance inst = read_instance(in);
  const CompareReport report = compare(inst, methods);
  out << render_table(report, timing);
  if (!json_out.empty()) {
    std::ofstream f(json_out, std::ios::binary);
    if (!f) throw IoError("cannot write " + json_out);
    f << report_json(report, timing);
  }
  if (!svg.empty()) {
    std::ofstream f(svg, std::ios::binary);
    if (!f) throw IoError("cannot write " + svg);
    f << render_svg(inst, report);
  }
  return kOk;
}

}  // namespace

SolveResult run_method(std::string_view name, const Instance& instance) {
  if (name == "exact") return exact_atsp(instance);
  if (name == "2approx") return atsp_2approx(instance);
  if (name == "3approx") return atsp_3approx(instance);
  if (name == "mst2") return atsp_mst2(instance);
  if (name == "tspn") return tspn_ordering(instance);
  if (name == "center") {
    return center_tsp_ordering(instance, instance.size() <= kHeldKarpMaxNodes);
  }
  throw InvalidArgument("unknown method '" + std::string(name) + "'");
}

CompareReport compare(const Instance& instance,
                      const std::vector<std::string>& methods) {
  static const std::vector<std::string> kLibrary = {
      "exact", "2approx", "3approx", "mst2", "tspn", "center"};
  CompareReport report;
  report.instance_label = instance.label;
  report.best = std::numeric_limits<double>::infinity();
  for (const auto& m : methods) {
    CompareRow row;
    row.method = m;
    const auto start = std::chrono::steady_clock::now();
    try {
      if (std::find(kLibrary.begin(), kLibrary.end(), m) != kLibrary.end()) {
        const SolveResult r = run_method(m, instance);
        row.tag = method_tag(r.method);
        row.tour = r.tour;
        row.aux_weight = r.aux_weight;
      } else if (const auto it = instance.named_orderings.find(m);
                 it != instance.named_orderings.end()) {
        row.tag = "REFERENCE";
        row.tour = adversarial_value(instance, Ordering::cycle(it->second), true);
      } else {
        throw UsageError("unknown method or ordering '" + m + "'");
      }
    } catch (const TooLarge& e) {
      row.skipped = true;
      row.reason = e.what();
    }
    const auto stop = std::chrono::steady_clock::now();
    row.runtime_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    if (!row.skipped) report.best = std::min(report.best, row.tour.length);
    report.rows.push_back(std::move(row));
  }
  for (auto& row : report.rows) {
    if (!row.skipped) {
      row.ratio = report.best > 0.0 ? row.tour.length / report.best : 1.0;
    }
  }
  return report;
}

std::string render_table(const CompareReport& report, bool timing) {
  std::ostringstream os;
  os << "instance: " << report.instance_label << "\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-14s %-22s %14s %14s %10s", "method", "tag",
                "length", "aux_weight", "ratio");
  os << line << (timing ? "    runtime_ms" : "") << "\n";
  for (const auto& row : report.rows) {
    if (row.skipped) {
      std::snprintf(line, sizeof line, "%-14s %-22s %14s", row.method.c_str(),
                    "-", "skipped");
      os << line << "  (" << row.reason << ")\n";
      continue;
    }
    const std::string aux = row.aux_weight ? fixed(*row.aux_weight, 6) : "-";
    std::snprintf(line, sizeof line, "%-14s %-22s %14s %14s %10s",
                  row.method.c_str(), row.tag.c_str(),
                  fixed(row.tour.length, 6).c_str(), aux.c_str(),
                  fixed(row.ratio, 6).c_str());
    os << line;
    if (timing) {
      std::snprintf(line, sizeof line, " %13s", fixed(row.runtime_ms, 3).c_str());
      os << line;
    }
    os << "\n";
  }
  return os.str();
}

std::string report_json(const CompareReport& report, bool timing) {
  Json j;
  j["instance_label"] = report.instance_label;
  Json rows = Json::array();
  Json ratios = Json::object();
  for (const auto& row : report.rows) {
    Json r;
    r["method"] = row.method;
    if (row.skipped) {
      r["status"] = "skipped";
      r["reason"] = row.reason;
    } else {
      r["status"] = "ok";
      r["tag"] = row.tag;
      r["length"] = row.tour.length;
      r["aux_weight"] = optional_number(row.aux_weight);
      r["ratio"] = row.ratio;
      r["ordering"] = row.tour.ordering.sequence();
      ratios[row.method] = row.ratio;
    }
    if (timing) r["runtime_ms"] = row.runtime_ms;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  j["best"] = std::isfinite(report.best) ? Json(report.best) : Json(nullptr);
  j["ratios"] = std::move(ratios);
  return j.dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Adversarial TSP solver"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "generate an instance file");
  g->add_option("--family", gen.family, "grid | radial | random")
      ->required()
      ->check(CLI::IsMember({"grid", "radial", "random"}));
  g->add_option("--out", gen.out, "output JSON path")->required();
  g->add_option("--side", gen.side, "grid side");
  g->add_option("--eps", gen.eps, "grid/radial epsilon");
  g->add_option("--pairs", gen.pairs, "radial long/short pairs");
  g->add_option("--long-len", gen.long_len, "radial long segment length");
  g->add_option("--kind", gen.kind, "random kind")
      ->check(CLI::IsMember({"points", "segment", "disk", "mixed"}));
  g->add_option("--n", gen.n, "random region count");
  g->add_option("--seed", gen.seed, "random seed");
  g->add_option("--box", gen.params.box, "random placement box side");
  g->add_option("--k", gen.params.k, "candidates per point-set region");
  g->add_option("--spread", gen.params.spread, "point-set spread");
  g->add_option("--radius", gen.params.radius, "disk radius");
  g->add_option("--samples", gen.params.samples_m, "disk boundary samples");
  g->add_option("--seg-len", gen.params.seg_len, "segment length");

  std::string solve_in;
  std::string solve_method;
  auto* s = app.add_subcommand("solve", "solve an instance");
  s->add_option("--in", solve_in, "instance JSON")->required();
  s->add_option("--method", solve_method, "solver")
      ->required()
      ->check(CLI::IsMember({"exact", "2approx", "3approx", "center", "mst2",
                             "tspn"}));

  std::string eval_in;
  std::string eval_order;
  bool eval_open = false;
  auto* e = app.add_subcommand("eval", "evaluate an ordering adversarially");
  e->add_option("--in", eval_in, "instance JSON")->required();
  e->add_option("--order", eval_order,
                "comma-separated permutation or a named ordering")
      ->required();
  e->add_flag("--open", eval_open, "evaluate as an open path");

  std::string cmp_in;
  std::string cmp_methods = "exact,2approx,3approx,center";
  std::string cmp_svg;
  std::string cmp_json;
  bool cmp_no_timing = false;
  auto* c = app.add_subcommand("compare", "compare methods on one instance");
  c->add_option("--in", cmp_in, "instance JSON")->required();
  c->add_option("--methods", cmp_methods,
                "comma-separated methods and/or named orderings");
  c->add_option("--svg", cmp_svg, "write an SVG rendering");
  c->add_option("--json", cmp_json, "write the report as JSON");
  c->add_flag("--no-timing", cmp_no_timing, "omit the runtime column");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (g->parsed()) return cmd_gen(gen, out);
    if (s->parsed()) return cmd_solve(solve_in, solve_method, out);
    if (e->parsed()) return cmd_eval(eval_in, eval_order, eval_open, out);
    if (c->parsed()) {
      std::vector<std::string> methods;
      std::stringstream ss(cmp_methods);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (!item.empty()) methods.push_back(item);
      }
      if (methods.empty()) throw UsageError("--methods is empty");
      return cmd_compare(cmp_in, methods, cmp_svg, cmp_json, !cmp_no_timing,
                         out);
    }
  } catch (const TooLarge& ex) {
    err << "error: " << ex.what() << "\n";
    return kGuard;
  } catch (const PackingTooDense& ex) {
    err << "error: " << ex.what() << "\n";
    return kGuard;
  } catch (const IoError& ex) {
    err << "error: " << ex.what() << "\n";
    return kIo;
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kIo;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace atsp::cli
