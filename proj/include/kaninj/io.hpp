#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "kaninj/chain.hpp"
#include "kaninj/saturation.hpp"

namespace kaninj::io {

/// Keys keep insertion order, so reports are byte-stable.
using Json = nlohmann::ordered_json;

// Posets: {"elements": [...], "leq": [[lo, hi], ...]}; written with cover
// pairs only. Maps: {"dom": P, "cod": Q, "map": {"x": "y", ...}}, where P and
// Q are posets, builtin names or file paths. Classes: {"name": ..., "maps":
// [...]} or a builtin name.

Json to_json(const Poset& p);
Json to_json(const MonotoneMap& m);
Json to_json(const MapClass& h);
Json to_json(const KanResult& r);
Json to_json(const InjectivityReport& r, const MapClass& h);
Json to_json(const ReflectionResult& r, bool trace = false);
Json to_json(const SaturationWitness& w);
Json to_json(const ClosureReport& r);
Json to_json(const UniversalReport& r);

/// `base` resolves relative paths found inside the document.
Poset poset_from_json(const Json& j, const std::filesystem::path& base = {});
MonotoneMap map_from_json(const Json& j, const std::filesystem::path& base = {});
MapClass class_from_json(const Json& j, const std::filesystem::path& base = {});

/// empty, one, vee, diamond, chainN, antichainN.
std::optional<Poset> builtin_poset(std::string_view name);
/// h_bottom, h_join.
std::optional<MonotoneMap> builtin_map(std::string_view name);
/// none, bottom, join, both.
std::optional<MapClass> builtin_class(std::string_view name);

/// A builtin name or a JSON file.
Poset load_poset(const std::string& spec);
MonotoneMap load_map(const std::string& spec);
MapClass load_class(const std::string& spec);

Json read_json(const std::filesystem::path& path);
/// Two-space indent and a trailing newline.
std::string dump(const Json& j);

}  // namespace kaninj::io
