#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "cli.h"

namespace atsp::cli {

namespace {

constexpr double kCanvas = 1000.0;
constexpr double kMargin = 0.05 * kCanvas;

constexpr std::array<const char*, 8> kPalette = {
    "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e",
    "#9467bd", "#8c564b", "#e377c2", "#17becf"};

struct Frame {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();
  double scale = 1.0;
  double off_x = 0.0;
  double off_y = 0.0;

  void include(double x, double y) {
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }

  void fit() {
    if (!std::isfinite(min_x)) {
      min_x = min_y = 0.0;
      max_x = max_y = 1.0;
    }
    const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
    const double usable = kCanvas - 2.0 * kMargin;
    scale = usable / span;
    // Center the drawing inside the margin box.
    off_x = kMargin + 0.5 * (usable - (max_x - min_x) * scale);
    off_y = kMargin + 0.5 * (usable - (max_y - min_y) * scale);
  }

  double sx(double x) const { return off_x + (x - min_x) * scale; }
  // SVG y grows downward.
  double sy(double y) const { return kCanvas - (off_y + (y - min_y) * scale); }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const Instance& instance, const CompareReport& report) {
  const CandidateSets cands = compile_all(instance);
  Frame f;
  for (const auto& r : instance.regions) {
    if (r.kind() == RegionKind::Disk) {
      const auto& d = r.as<Disk>();
      f.include(d.center.x - d.radius, d.center.y - d.radius);
      f.include(d.center.x + d.radius, d.center.y + d.radius);
    }
  }
  for (const auto& c : cands) {
    for (const auto& p : c) f.include(p.x, p.y);
  }
  f.fit();

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" "
        "height=\"1000\" viewBox=\"0 0 1000 1000\">\n"
     << "  <title>" << escape(report.instance_label) << "</title>\n"
     << "  <rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" "
        "fill=\"white\"/>\n";

  os << "  <g id=\"regions\" fill=\"none\" stroke=\"#555555\" "
        "stroke-width=\"2\">\n";
  for (const auto& r : instance.regions) {
    if (r.kind() == RegionKind::Segment) {
      const auto& s = r.as<Segment>();
      os << "    <line x1=\"" << num(f.sx(s.a.x)) << "\" y1=\"" << num(f.sy(s.a.y))
         << "\" x2=\"" << num(f.sx(s.b.x)) << "\" y2=\"" << num(f.sy(s.b.y))
         << "\"/>\n";
    } else if (r.kind() == RegionKind::Disk) {
      const auto& d = r.as<Disk>();
      os << "    <circle cx=\"" << num(f.sx(d.center.x)) << "\" cy=\""
         << num(f.sy(d.center.y)) << "\" r=\"" << num(d.radius * f.scale)
         << "\"/>\n";
    }
  }
  os << "  </g>\n";

  os << "  <g id=\"candidates\" fill=\"#222222\">\n";
  for (const auto& c : cands) {
    for (const auto& p : c) {
      os << "    <circle cx=\"" << num(f.sx(p.x)) << "\" cy=\"" << num(f.sy(p.y))
         << "\" r=\"3\"/>\n";
    }
  }
  os << "  </g>\n";

  std::size_t layer = 0;
  for (const auto& row : report.rows) {
    if (row.skipped) continue;
    const char* color = kPalette[layer % kPalette.size()];
    ++layer;
    os << "  <g id=\"tour-" << escape(row.method) << "\" fill=\"none\" stroke=\""
       << color << "\" stroke-width=\"2\" stroke-opacity=\"0.7\">\n"
       << "    <polyline points=\"";
    const auto& seq = row.tour.ordering.sequence();
    for (std::size_t t = 0; t <= seq.size(); ++t) {
      if (t == seq.size() && !row.tour.closed) break;
      const std::size_t r = seq[t % seq.size()];
      const Point& p = cands[r][row.tour.choice[r]];
      if (t > 0) os << ' ';
      os << num(f.sx(p.x)) << ',' << num(f.sy(p.y));
    }
    os << "\"/>\n"
       << "  </g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace atsp::cli
