#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atsp/instance.h"
#include "atsp/solvers.h"

namespace atsp::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kGuard = 2, kIo = 3 };

// Dispatches `args` (without the program name) to gen/solve/eval/compare.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// Library pipelines by CLI name: exact, 2approx, 3approx, center, mst2, tspn.
// `center` uses Held-Karp up to kHeldKarpMaxNodes regions, Christofides
// beyond. Throws InvalidArgument for an unknown name.
SolveResult run_method(std::string_view name, const Instance& instance);

struct CompareRow {
  std::string method;  // CLI name or a named ordering from the instance
  std::string tag;     // SolveResult tag, "REFERENCE" for named orderings
  bool skipped = false;
  std::string reason;
  AdversarialTour tour;
  std::optional<double> aux_weight;
  double ratio = 0.0;
  double runtime_ms = 0.0;
};

struct CompareReport {
  std::string instance_label;
  std::vector<CompareRow> rows;
  double best = 0.0;  // min length over rows that ran
};

// Runs each method; guard failures mark the row skipped. Names that are not
// library methods are looked up in instance.named_orderings.
CompareReport compare(const Instance& instance,
                      const std::vector<std::string>& methods);

std::string render_table(const CompareReport& report, bool timing);
std::string report_json(const CompareReport& report, bool timing);

// 1000x1000 SVG, uniform scale with a 5% margin: regions, candidates, then
// one polyline layer per non-skipped row.
std::string render_svg(const Instance& instance, const CompareReport& report);

}  // namespace atsp::cli
