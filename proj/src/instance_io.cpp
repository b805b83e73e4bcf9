#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "atsp/error.h"
#include "atsp/instances.h"

namespace atsp {

namespace {

using Json = nlohmann::ordered_json;

Json point_json(const Point& p) { return Json::array({p.x, p.y}); }

Json region_json(const Region& r) {
  Json j;
  switch (r.kind()) {
    case RegionKind::Points: {
      j["kind"] = "points";
      Json pts = Json::array();
      for (const auto& p : r.as<PointSet>().pts) pts.push_back(point_json(p));
      j["pts"] = std::move(pts);
      break;
    }
    case RegionKind::Segment:
      j["kind"] = "segment";
      j["a"] = point_json(r.as<Segment>().a);
      j["b"] = point_json(r.as<Segment>().b);
      break;
    case RegionKind::Disk:
      j["kind"] = "disk";
      j["c"] = point_json(r.as<Disk>().center);
      j["r"] = r.as<Disk>().radius;
      j["m"] = r.as<Disk>().samples;
      break;
  }
  return j;
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

double number(const Json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

Point point(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected [x, y]");
  return {number(j[0], path + "[0]"), number(j[1], path + "[1]")};
}

Region region(const Json& j, const std::string& path) {
  const Json& kind = field(j, "kind", path);
  if (!kind.is_string()) fail(path + ".kind", "expected a string");
  const auto k = kind.get<std::string>();
  try {
    if (k == "points") {
      const Json& pts = field(j, "pts", path);
      if (!pts.is_array()) fail(path + ".pts", "expected an array");
      std::vector<Point> out;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        out.push_back(point(pts[i], path + ".pts[" + std::to_string(i) + "]"));
      }
      return Region::points(std::move(out));
    }
    if (k == "segment") {
      return Region::segment(point(field(j, "a", path), path + ".a"),
                             point(field(j, "b", path), path + ".b"));
    }
    if (k == "disk") {
      const Json& m = field(j, "m", path);
      if (!m.is_number_integer() || m.get<long long>() <= 0) {
        fail(path + ".m", "expected a positive integer");
      }
      return Region::disk(point(field(j, "c", path), path + ".c"),
                          number(field(j, "r", path), path + ".r"),
                          m.get<std::size_t>());
    }
  } catch (const InvalidRegion& e) {
    fail(path, e.what());
  }
  throw UnsupportedKind(path + ".kind: unsupported region kind \"" + k + "\"");
}

}  // namespace

std::string instance_to_json(const Instance& instance) {
  Json root;
  root["label"] = instance.label;
  Json regions = Json::array();
  for (const auto& r : instance.regions) regions.push_back(region_json(r));
  root["regions"] = std::move(regions);
  Json meta = Json::object();
  if (instance.epsilon_meta) meta["eps"] = *instance.epsilon_meta;
  if (!instance.named_orderings.empty()) {
    Json ords = Json::object();
    for (const auto& [name, seq] : instance.named_orderings) ords[name] = seq;
    meta["orderings"] = std::move(ords);
  }
  root["meta"] = std::move(meta);
  return root.dump(2) + "\n";
}

Instance instance_from_json(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!root.is_object()) fail("$", "expected an object");

  Instance inst;
  if (const auto it = root.find("label"); it != root.end()) {
    if (!it->is_string()) fail("label", "expected a string");
    inst.label = it->get<std::string>();
  }
  const Json& regions = field(root, "regions", "$");
  if (!regions.is_array()) fail("regions", "expected an array");
  for (std::size_t i = 0; i < regions.size(); ++i) {
    inst.regions.push_back(
        region(regions[i], "regions[" + std::to_string(i) + "]"));
  }

  if (const auto it = root.find("meta"); it != root.end()) {
    const Json& meta = *it;
    if (!meta.is_object()) fail("meta", "expected an object");
    if (const auto eps = meta.find("eps"); eps != meta.end()) {
      inst.epsilon_meta = number(*eps, "meta.eps");
    }
    if (const auto ords = meta.find("orderings"); ords != meta.end()) {
      if (!ords->is_object()) fail("meta.orderings", "expected an object");
      for (const auto& [name, seq] : ords->items()) {
        const std::string path = "meta.orderings." + name;
        if (!seq.is_array()) fail(path, "expected an array");
        std::vector<std::size_t> perm;
        for (const auto& v : seq) {
          if (!v.is_number_unsigned()) fail(path, "expected region indices");
          perm.push_back(v.get<std::size_t>());
        }
        if (perm.size() != inst.size() || !is_permutation_of_range(perm)) {
          fail(path, "not a permutation of the regions");
        }
        inst.named_orderings[name] = std::move(perm);
      }
    }
  }
  return inst;
}

Instance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return instance_from_json(buf.str());
  } catch (const UnsupportedKind& e) {
    throw UnsupportedKind(path.string() + ": " + e.what());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_instance(const Instance& instance,
                    const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << instance_to_json(instance);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace atsp
