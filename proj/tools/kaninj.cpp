// kaninj: command-line front end. Reports go to stdout as JSON, messages to
// stderr. Exit codes: 0 success or strong, 1 property failure, 2 invalid
// input, 3 weak only, 4 not converged.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "kaninj/suites.hpp"

using namespace kaninj;
using io::Json;

namespace {

enum Exit { ok = 0, failure = 1, invalid = 2, weak_only = 3, not_converged = 4 };

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_converged:
      return not_converged;
    case ErrorCode::not_injective_context:
    case ErrorCode::not_injective_target:
    case ErrorCode::quotient_violation:
    case ErrorCode::invariant_violation:
      return failure;
    default:
      return invalid;
  }
}

void print(const Json& j) { std::cout << io::dump(j); }

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::invalid_argument, "cannot write " + path.string());
  out << text;
}

// A map read from the command line: a member of H when it is one.
SaturationWitness witness_of(const MonotoneMap& m, const MapClass& h) {
  for (std::size_t i = 0; i < h.maps.size(); ++i)
    if (h.maps[i] == m) return sat_member(h, i);
  return sat_asserted(m);
}

std::vector<Poset> sample_from(const std::string& dir, std::size_t size_cap) {
  if (dir.empty()) return enumerate_posets_up_to(size_cap);
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<Poset> out;
  for (const auto& f : files) out.push_back(io::poset_from_json(io::read_json(f), f.parent_path()));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("KANINJ_SIZE_CAP")) {
    char* end = nullptr;
    unsigned long long cap = std::strtoull(env, &end, 10);
    if (!*env || *end || cap == 0) {
      std::cerr << "kaninj: KANINJ_SIZE_CAP must be a positive integer\n";
      return invalid;
    }
    set_default_size_cap(static_cast<std::size_t>(cap));
  }

  CLI::App app{"Left Kan injectivity in finite posets"};
  app.require_subcommand(1);

  std::string f_path, h_path, x_path, class_path = "none", p_path;

  auto* kan = app.add_subcommand("kan", "Left Kan extension f/h");
  kan->add_option("map", f_path, "Map f: A -> X")->required();
  kan->add_option("along", h_path, "Map h: A -> B")->required();

  auto* dense = app.add_subcommand("dense", "Whether a map is dense");
  dense->add_option("map", f_path)->required();

  bool weak_flag = false, dual_flag = false, map_flag = false;
  auto* injective = app.add_subcommand("injective", "Injectivity of a poset, or of a map with --map");
  injective->add_option("object", x_path, "Poset, or map with --map")->required();
  injective->add_option("class", class_path, "Class H")->required();
  injective->add_flag("--weak", weak_flag, "Weak injectivity only");
  injective->add_flag("--dual", dual_flag, "Reverse every poset (right Kan injectivity)");
  injective->add_flag("--map", map_flag, "The first argument is a map");

  std::size_t max_steps = 16;
  bool trace_flag = false, plain_flag = false;
  std::string dot_dir;
  auto* reflect_cmd = app.add_subcommand("reflect", "Reflection of X into the strong posets for H");
  reflect_cmd->add_option("object", x_path)->required();
  reflect_cmd->add_option("class", class_path)->required();
  auto even_steps = CLI::Validator(
      [](std::string& s) -> std::string {
        std::size_t n = std::stoul(s);
        return n >= 2 && n % 2 == 0 ? "" : "must be even and at least 2";
      },
      "EVEN");
  reflect_cmd->add_option("--max-steps", max_steps, "Stage budget")->check(CLI::PositiveNumber)->check(even_steps);
  reflect_cmd->add_flag("--trace", trace_flag, "Per-stage report");
  reflect_cmd->add_option("--dot-dir", dot_dir, "Write one DOT file per stage");
  reflect_cmd->add_flag("--plain", plain_flag, "Do not saturate even steps");

  auto* extend = app.add_subcommand("extend", "Extension of p: X -> P along the unit of X");
  extend->add_option("map", p_path)->required();
  extend->add_option("class", class_path)->required();
  extend->add_option("--max-steps", max_steps)->check(CLI::PositiveNumber)->check(even_steps);

  auto* cone = app.add_subcommand("cone", "Mapping cone of a map, or the cone class of a class");
  std::string cone_input;
  cone->add_option("input", cone_input, "Map or class")->required();

  std::string op, sample_dir;
  std::vector<std::string> inputs;
  bool check_flag = false;
  std::size_t member_index = 0, sample_size = 4;
  auto* saturate = app.add_subcommand("saturate", "Build a saturation witness");
  saturate->add_option("--op", op, "Recipe")
      ->required()
      ->check(CLI::IsMember({"member", "lari", "iso", "compose", "pushout", "cocomma", "wide_pushout", "reflection",
                             "asserted"}));
  saturate->add_option("--inputs", inputs, "Maps, in the order the recipe takes them");
  saturate->add_option("--class", class_path, "Class H");
  saturate->add_option("--index", member_index, "member: index into H");
  saturate->add_flag("--check", check_flag, "Run closure_check on the result");
  saturate->add_option("--sample", sample_dir, "Directory of posets; default the corpus");
  saturate->add_option("--sample-size", sample_size, "Corpus size when no --sample is given");

  std::string suite;
  SuiteOptions suite_options;
  std::string out_path;
  auto* verify = app.add_subcommand("verify", "Run a property suite over the corpus");
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(choices));
  verify->add_option("--size-cap", suite_options.size_cap, "Largest corpus poset")->check(CLI::PositiveNumber);
  verify->add_flag("--mutate", suite_options.mutate, "cone: corrupt the cone builder");
  verify->add_option("--seed", suite_options.seed);
  verify->add_option("--out", out_path, "Also write the report here");

  std::size_t enum_n = 0;
  bool up_to = false;
  std::string out_dir;
  auto* enumerate = app.add_subcommand("enumerate", "Posets with n elements up to isomorphism");
  enumerate->add_option("n", enum_n)->required();
  enumerate->add_flag("--up-to", up_to, "All sizes up to n");
  enumerate->add_option("--out-dir", out_dir, "One file per poset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : invalid;
  }

  try {
    if (*kan) {
      KanResult r = left_kan(io::load_map(f_path), io::load_map(h_path));
      print(io::to_json(r));
      return r.exists ? ok : failure;
    }
    if (*dense) {
      MonotoneMap f = io::load_map(f_path);
      bool d = is_dense(f);
      print(Json{{"dense", d}});
      return d ? ok : failure;
    }
    if (*injective) {
      MapClass h = io::load_class(class_path);
      if (dual_flag) h = dual(h);
      InjectivityReport r;
      if (map_flag) {
        MonotoneMap p = io::load_map(x_path);
        if (dual_flag) p = p.dual();
        r = is_injective_map(p, h);
      } else {
        Poset x = io::load_poset(x_path);
        if (dual_flag) x = x.dual();
        r = weak_flag ? is_weakly_injective(x, h) : is_injective(x, h);
      }
      Json j = io::to_json(r, h);
      j["dual"] = dual_flag;
      print(j);
      if (weak_flag && !map_flag) return r.weak() ? ok : failure;
      return r.strong() ? ok : r.weak() ? weak_only : failure;
    }
    if (*reflect_cmd) {
      ReflectOptions o;
      o.max_steps = max_steps;
      o.saturate_even = !plain_flag;
      ReflectionResult r = reflect(io::load_poset(x_path), io::load_class(class_path), o);
      print(io::to_json(r, trace_flag));
      if (!dot_dir.empty()) {
        std::filesystem::create_directories(dot_dir);
        for (std::size_t i = 0; i < r.trace.stages.size(); ++i) {
          std::string name = "stage" + std::to_string(i);
          write_file(std::filesystem::path(dot_dir) / (name + ".dot"), to_dot(r.trace.stages[i], name));
        }
        write_file(std::filesystem::path(dot_dir) / "reflected.dot", to_dot(r.reflected, "reflected"));
      }
      return r.converged ? ok : not_converged;
    }
    if (*extend) {
      MonotoneMap p = io::load_map(p_path);
      MapClass h = io::load_class(class_path);
      ReflectOptions o;
      o.max_steps = max_steps;
      ReflectionResult r = reflect(p.dom(), h, o);
      MonotoneMap e = extend_along_unit(p, r, h);
      Json j;
      j["reflected"] = io::to_json(r.reflected);
      j["unit"] = io::to_json(r.unit);
      j["extension"] = io::to_json(e);
      print(j);
      return ok;
    }
    if (*cone) {
      std::optional<MonotoneMap> m = io::builtin_map(cone_input);
      std::optional<MapClass> h = io::builtin_class(cone_input);
      if (!m && !h) {
        Json spec = io::read_json(cone_input);
        auto base = std::filesystem::path(cone_input).parent_path();
        if (spec.is_object() && spec.contains("dom")) {
          m = io::map_from_json(spec, base);
        } else {
          h = io::class_from_json(spec, base);
        }
      }
      if (m) {
        MappingCone c = mapping_cone(*m);
        Json j;
        j["cone"] = io::to_json(c.cone);
        j["i_h"] = io::to_json(c.i_h);
        j["j"] = io::to_json(c.j);
        print(j);
      } else {
        print(io::to_json(cone_class(*h)));
      }
      return ok;
    }
    if (*saturate) {
      MapClass h = io::load_class(class_path);
      std::vector<MonotoneMap> maps;
      for (const auto& in : inputs) maps.push_back(io::load_map(in));
      auto need = [&](std::size_t n) {
        if (maps.size() != n) {
          throw Error(ErrorCode::invalid_argument,
                      "--op " + op + " takes " + std::to_string(n) + " maps, got " + std::to_string(maps.size()));
        }
      };
      SaturationWitness w;
      if (op == "member") {
        need(0);
        w = sat_member(h, member_index);
      } else if (op == "lari") {
        need(1);
        w = sat_lari(maps[0]);
      } else if (op == "iso") {
        need(3);
        w = sat_iso(witness_of(maps[0], h), maps[1], maps[2]);
      } else if (op == "compose") {
        need(2);
        w = sat_compose(witness_of(maps[0], h), witness_of(maps[1], h));
      } else if (op == "pushout" || op == "cocomma") {
        need(2);
        w = sat_pushout(witness_of(maps[0], h), maps[1], op == "pushout" ? GlueMode::pushout : GlueMode::cocomma);
      } else if (op == "wide_pushout") {
        std::vector<SaturationWitness> legs;
        for (const auto& m : maps) legs.push_back(witness_of(m, h));
        w = sat_wide_pushout(legs);
      } else if (op == "reflection") {
        need(4);
        w = sat_reflection(witness_of(maps[0], h), maps[1], maps[2], maps[3]);
      } else {
        need(1);
        w = sat_asserted(maps[0]);
      }
      Json j;
      j["witness"] = io::to_json(w);
      if (!check_flag) {
        print(j);
        return ok;
      }
      ClosureReport r = closure_check(w, h, sample_from(sample_dir, sample_size));
      j["closure"] = io::to_json(r);
      print(j);
      return r.ok ? ok : failure;
    }
    if (*verify) {
      std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
      Json report = Json::array();
      bool all_ok = true;
      for (const auto& name : names) {
        SuiteResult r = run_suite(name, suite_options);
        all_ok = all_ok && r.ok;
        report.push_back(std::move(r.report));
      }
      Json out = names.size() == 1 ? report[0] : Json{{"ok", all_ok}, {"suites", report}};
      print(out);
      if (!out_path.empty()) write_file(out_path, io::dump(out));
      return all_ok ? ok : failure;
    }
    if (*enumerate) {
      auto found = up_to ? enumerate_posets_up_to(enum_n) : enumerate_posets(enum_n);
      if (out_dir.empty()) {
        Json list = Json::array();
        for (const auto& p : found) list.push_back(io::to_json(p));
        print(list);
      } else {
        std::filesystem::create_directories(out_dir);
        std::map<std::size_t, std::size_t> count;
        for (const auto& p : found) {
          std::string name = "poset_" + std::to_string(p.size()) + "_" + std::to_string(count[p.size()]++) + ".json";
          write_file(std::filesystem::path(out_dir) / name, io::dump(io::to_json(p)));
        }
        print(Json{{"written", found.size()}, {"dir", out_dir}});
      }
      return ok;
    }
  } catch (const Error& e) {
    std::cerr << "kaninj: " << e.what() << "\n";
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "kaninj: " << e.what() << "\n";
    return invalid;
  }
  return invalid;
}
