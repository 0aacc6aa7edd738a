#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kaninj/io.hpp"

using namespace kaninj;
namespace fs = std::filesystem;

namespace {

const fs::path corpus = KANINJ_CORPUS_DIR;

std::vector<fs::path> files_in(const fs::path& dir) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("poset files round-trip") {
  auto files = files_in(corpus / "posets");
  CHECK(files.size() == 25);
  for (const auto& f : files) {
    Poset p = io::load_poset(f.string());
    Poset again = io::poset_from_json(io::to_json(p));
    CHECK(again == p);
    CHECK(again.labels() == p.labels());
    // The files were written by the serializer, so they reproduce byte for byte.
    CHECK(io::dump(io::to_json(p)) == slurp(f));
  }
}

TEST_CASE("map and class files round-trip") {
  for (const auto& f : files_in(corpus / "maps")) {
    MonotoneMap m = io::load_map(f.string());
    CHECK(io::map_from_json(io::to_json(m)) == m);
  }
  for (const auto& f : files_in(corpus / "classes")) {
    MapClass h = io::load_class(f.string());
    MapClass again = io::class_from_json(io::to_json(h));
    CHECK(again.name == h.name);
    REQUIRE(again.maps.size() == h.maps.size());
    for (std::size_t i = 0; i < h.maps.size(); ++i) CHECK(again.maps[i] == h.maps[i]);
  }
  CHECK(io::load_class((corpus / "classes/join.json").string()).maps[0] == maps::h_join());
}

TEST_CASE("builtins") {
  CHECK(io::load_poset("chain3") == posets::chain(3));
  CHECK(io::load_poset("antichain2") == posets::antichain(2));
  CHECK(io::load_poset("diamond") == posets::diamond());
  CHECK(io::load_map("h_bottom") == maps::h_bottom());
  CHECK(io::load_class("both").maps.size() == 2);
  CHECK_FALSE(io::builtin_poset("chainx"));
  CHECK_FALSE(io::builtin_poset("chain"));
}

TEST_CASE("maps given as arrays") {
  io::Json j = io::Json::parse(R"({"dom": "chain2", "cod": "chain3", "map": ["c0", "c2"]})");
  CHECK(io::map_from_json(j).image() == std::vector<Elem>{0, 2});
}

TEST_CASE("bad input") {
  auto code_of = [](auto&& load) -> std::optional<ErrorCode> {
    try {
      load();
    } catch (const Error& e) {
      return e.code();
    }
    return std::nullopt;
  };
  auto bad = [&](const char* name) { return (corpus / "bad" / name).string(); };
  CHECK(code_of([&] { io::load_poset(bad("malformed.json")); }) == ErrorCode::parse_error);
  CHECK(code_of([&] { io::load_poset(bad("cycle.json")); }) == ErrorCode::cycle_detected);
  CHECK(code_of([&] { io::load_poset(bad("duplicate.json")); }) == ErrorCode::duplicate_label);
  CHECK(code_of([&] { io::load_poset(bad("unknown_label.json")); }) == ErrorCode::unknown_label);
  CHECK(code_of([&] { io::load_map(bad("not_monotone.json")); }) == ErrorCode::not_monotone);
  CHECK(code_of([&] { io::load_map(bad("missing_field.json")); }) == ErrorCode::parse_error);
  CHECK(code_of([&] { io::load_poset("no/such/file.json"); }) == ErrorCode::parse_error);
  CHECK(code_of([&] { io::map_from_json(io::Json::parse(R"({"dom": "chain2", "cod": "chain2", "map": ["low"]})")); }) ==
        ErrorCode::parse_error);
}

TEST_CASE("reports serialize deterministically") {
  auto r = reflect(posets::antichain(2), {"join", {maps::h_join()}});
  CHECK(io::dump(io::to_json(r, true)) == io::dump(io::to_json(reflect(posets::antichain(2), {"join", {maps::h_join()}}), true)));
  auto j = io::to_json(r);
  CHECK(j["converged"] == true);
  CHECK(j["reflected"]["elements"].size() == 3);
}
