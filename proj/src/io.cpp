#include "kaninj/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace kaninj::io {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::parse_error, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::optional<std::size_t> suffix_number(std::string_view name, std::string_view prefix) {
  if (name.substr(0, prefix.size()) != prefix || name.size() == prefix.size()) return std::nullopt;
  std::size_t n = 0;
  auto rest = name.substr(prefix.size());
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
  if (ec != std::errc() || ptr != rest.data() + rest.size()) return std::nullopt;
  return n;
}

fs::path resolve(const std::string& spec, const fs::path& base) {
  fs::path p(spec);
  if (p.is_relative() && !base.empty()) p = base / p;
  return p;
}

Json failures_json(const std::vector<InjectivityFailure>& list) {
  Json out = Json::array();
  for (const auto& f : list) {
    Json e;
    e["h"] = f.h;
    if (f.f) e["f"] = f.f->image();
    e["reason"] = f.reason;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

Json to_json(const Poset& p) {
  Json j;
  j["elements"] = p.labels();
  Json leq = Json::array();
  for (auto [a, b] : p.covers()) leq.push_back({p.label(a), p.label(b)});
  j["leq"] = std::move(leq);
  return j;
}

Json to_json(const MonotoneMap& m) {
  Json j;
  j["dom"] = to_json(m.dom());
  j["cod"] = to_json(m.cod());
  Json image = Json::object();
  for (Elem a = 0; a < m.dom().size(); ++a) image[m.dom().label(a)] = m.cod().label(m(a));
  j["map"] = std::move(image);
  return j;
}

Json to_json(const MapClass& h) {
  Json j;
  j["name"] = h.name;
  Json maps = Json::array();
  for (const auto& m : h.maps) maps.push_back(to_json(m));
  j["maps"] = std::move(maps);
  return j;
}

Json to_json(const KanResult& r) {
  Json j;
  j["exists"] = r.exists;
  if (r.extension) j["extension"] = to_json(*r.extension);
  j["strict"] = r.strict;
  return j;
}

Json to_json(const InjectivityReport& r, const MapClass& h) {
  Json j;
  j["verdict"] = std::string(to_string(r.verdict));
  j["class"] = h.name;
  j["checked"] = r.witnesses.size();
  j["failures"] = failures_json(r.failures);
  j["non_strict"] = failures_json(r.non_strict);
  return j;
}

Json to_json(const ReflectionResult& r, bool trace) {
  Json j;
  j["converged"] = r.converged;
  if (r.converged) {
    j["converged_at"] = r.converged_at;
    j["stable_image"] = r.stable_image;
  }
  j["stages_used"] = r.stages_used;
  j["reflected"] = to_json(r.reflected);
  j["unit"] = to_json(r.unit);
  Json sizes = Json::array();
  for (const auto& s : r.trace.stages) sizes.push_back(s.size());
  j["stage_sizes"] = std::move(sizes);
  if (trace) {
    Json stages = Json::array();
    for (std::size_t i = 0; i < r.trace.stages.size(); ++i) {
      Json s;
      s["stage"] = i;
      s["poset"] = to_json(r.trace.stages[i]);
      if (i > 0) s["connector"] = r.trace.connectors[i - 1].image();
      if (i % 2 == 1) {
        std::size_t first = r.trace.first_span[i - 1];
        std::size_t last = i < r.trace.first_span.size() ? r.trace.first_span[i] : r.trace.spans.size();
        s["spans"] = last - first;
      } else if (i > 0) {
        const GammaLog& g = r.trace.gammas[i / 2 - 1];
        s["spans_examined"] = g.spans;
        s["groups"] = g.groups;
        s["constraints"] = g.constraints;
        s["passes"] = g.passes;
        s["trivial_coequifiers"] = g.trivial_coequifiers;
      }
      stages.push_back(std::move(s));
    }
    j["trace"] = std::move(stages);
  }
  return j;
}

Json to_json(const SaturationWitness& w) {
  Json j;
  j["recipe"] = std::string(to_string(w.recipe));
  j["produced"] = to_json(w.produced);
  if (!w.inputs.empty()) {
    Json inputs = Json::array();
    for (const auto& in : w.inputs) inputs.push_back(to_json(in));
    j["inputs"] = std::move(inputs);
  }
  return j;
}

Json to_json(const ClosureReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["objects_checked"] = r.objects_checked;
  j["maps_checked"] = r.maps_checked;
  if (r.object) j["object"] = to_json(*r.object);
  if (r.map) j["map"] = to_json(*r.map);
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

Json to_json(const UniversalReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["mode"] = r.mode == VerifyMode::exhaustive ? "exhaustive" : r.mode == VerifyMode::certificate ? "certificate" : "automatic";
  j["targets_checked"] = r.targets_checked;
  if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
  return j;
}

Poset poset_from_json(const Json& j, const fs::path& base) {
  if (j.is_string()) {
    std::string spec = j.get<std::string>();
    if (auto p = builtin_poset(spec)) return *p;
    fs::path path = resolve(spec, base);
    return poset_from_json(read_json(path), path.parent_path());
  }
  const Json& elements = field(j, "elements");
  if (!elements.is_array()) fail("\"elements\" must be an array");
  std::vector<std::string> labels;
  for (const auto& e : elements) labels.push_back(as_string(e, "element"));
  std::vector<std::pair<std::string, std::string>> pairs;
  if (j.contains("leq")) {
    const Json& leq = j.at("leq");
    if (!leq.is_array()) fail("\"leq\" must be an array");
    for (const auto& pair : leq) {
      if (!pair.is_array() || pair.size() != 2) fail("each \"leq\" entry must be a pair");
      pairs.emplace_back(as_string(pair[0], "leq entry"), as_string(pair[1], "leq entry"));
    }
  }
  return build_poset(labels, pairs);
}

MonotoneMap map_from_json(const Json& j, const fs::path& base) {
  if (j.is_string()) {
    std::string spec = j.get<std::string>();
    if (auto m = builtin_map(spec)) return *m;
    fs::path path = resolve(spec, base);
    return map_from_json(read_json(path), path.parent_path());
  }
  Poset dom = poset_from_json(field(j, "dom"), base);
  Poset cod = poset_from_json(field(j, "cod"), base);
  const Json& image = field(j, "map");
  if (image.is_array()) {
    std::vector<Elem> values;
    for (const auto& v : image) {
      auto idx = cod.index_of(as_string(v, "map value"));
      if (!idx) throw Error(ErrorCode::unknown_label, "map value " + v.get<std::string>());
      values.push_back(*idx);
    }
    if (values.size() != dom.size()) fail("\"map\" needs one value per domain element");
    return MonotoneMap(dom, cod, values);
  }
  if (!image.is_object()) fail("\"map\" must be an object or an array");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& [k, v] : image.items()) pairs.emplace_back(k, as_string(v, "map value"));
  return MonotoneMap::from_labels(dom, cod, pairs);
}

MapClass class_from_json(const Json& j, const fs::path& base) {
  if (j.is_string()) {
    std::string spec = j.get<std::string>();
    if (auto c = builtin_class(spec)) return *c;
    fs::path path = resolve(spec, base);
    return class_from_json(read_json(path), path.parent_path());
  }
  if (j.is_array()) {
    MapClass out{"class", {}};
    for (const auto& m : j) out.maps.push_back(map_from_json(m, base));
    return out;
  }
  MapClass out{j.contains("name") ? as_string(j.at("name"), "name") : "class", {}};
  const Json& maps = field(j, "maps");
  if (!maps.is_array()) fail("\"maps\" must be an array");
  for (const auto& m : maps) out.maps.push_back(map_from_json(m, base));
  return out;
}

std::optional<Poset> builtin_poset(std::string_view name) {
  if (name == "empty") return posets::empty();
  if (name == "one") return posets::one();
  if (name == "vee") return posets::vee();
  if (name == "diamond") return posets::diamond();
  if (auto n = suffix_number(name, "antichain")) return posets::antichain(*n);
  if (auto n = suffix_number(name, "chain")) return posets::chain(*n);
  return std::nullopt;
}

std::optional<MonotoneMap> builtin_map(std::string_view name) {
  if (name == "h_bottom") return maps::h_bottom();
  if (name == "h_join") return maps::h_join();
  return std::nullopt;
}

std::optional<MapClass> builtin_class(std::string_view name) {
  if (name == "none") return MapClass{"none", {}};
  if (name == "bottom") return MapClass{"bottom", {maps::h_bottom()}};
  if (name == "join") return MapClass{"join", {maps::h_join()}};
  if (name == "both") return MapClass{"both", {maps::h_bottom(), maps::h_join()}};
  return std::nullopt;
}

Poset load_poset(const std::string& spec) { return poset_from_json(Json(spec)); }
MonotoneMap load_map(const std::string& spec) { return map_from_json(Json(spec)); }
MapClass load_class(const std::string& spec) { return class_from_json(Json(spec)); }

Json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(path.string() + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace kaninj::io
