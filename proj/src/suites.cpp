#include "kaninj/suites.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "kaninj/search.hpp"

namespace kaninj {

namespace {

using io::Json;
using io::to_json;

constexpr std::size_t kept_failures = 10;

struct Tally {
  std::size_t checks = 0;
  std::size_t failed = 0;
  Json failures = Json::array();

  void check(bool ok, const std::function<Json()>& what) {
    ++checks;
    if (ok) return;
    ++failed;
    if (failures.size() < kept_failures) failures.push_back(what());
  }
};

SuiteResult finish(const std::string& name, const SuiteOptions& options, Tally& t, Json details) {
  SuiteResult r;
  r.name = name;
  r.ok = t.failed == 0;
  r.checks = t.checks;
  r.failed = t.failed;
  r.report["suite"] = name;
  r.report["size_cap"] = options.size_cap;
  r.report["ok"] = r.ok;
  r.report["checks"] = t.checks;
  r.report["failed"] = t.failed;
  if (!details.is_null()) r.report["details"] = std::move(details);
  r.report["failures"] = std::move(t.failures);
  return r;
}

Json pair_json(const char* k1, Json v1, const char* k2, Json v2) {
  Json j;
  j[k1] = std::move(v1);
  j[k2] = std::move(v2);
  return j;
}

// The mutation: the cocomma without its 2-cell, i.e. a coproduct injection.
MapClass broken_cone_class(const MapClass& h) {
  MapClass out{"broken_cone(" + h.name + ")", {}};
  for (const auto& m : h.maps) out.maps.push_back(coproduct({m.dom(), m.cod()}).injections[0]);
  return out;
}

SuiteResult run_kz(const SuiteOptions& o) {
  Tally t;
  Json details = Json::array();
  auto corpus = enumerate_posets_up_to(o.size_cap);
  for (const MapClass& h : basic_classes()) {
    KzOptions k;
    k.targets = strong_posets(std::min<std::size_t>(o.size_cap, 3), h, o.cap);
    k.seed = o.seed;
    k.reflect.cap = o.cap;
    std::size_t algebras = 0, samples = 0, free = 0;
    for (const Poset& x : corpus) {
      KzReport r = kz_laws(x, h, k);
      algebras += r.object_strong;
      samples += r.restriction_samples;
      free += r.free_algebra_checked;
      t.check(r.ok(), [&] {
        Json j;
        j["class"] = h.name;
        j["object"] = to_json(x);
        j["unit_dense"] = r.unit_dense;
        j["restriction_law"] = r.restriction_law;
        j["algebra_iff"] = r.algebra_iff;
        j["free_algebra"] = r.free_algebra;
        j["notes"] = r.notes;
        return j;
      });
    }
    Json c;
    c["class"] = h.name;
    c["objects"] = corpus.size();
    c["strong_objects"] = algebras;
    c["restriction_samples"] = samples;
    c["free_algebra_checked"] = free;
    details.push_back(std::move(c));
  }
  return finish("kz", o, t, std::move(details));
}

SuiteResult run_cone(const SuiteOptions& o) {
  Tally t;
  auto corpus = enumerate_posets_up_to(o.size_cap);
  auto map_corpus = enumerate_posets_up_to(std::min<std::size_t>(o.size_cap, 3));
  Json details = Json::array();
  for (const MapClass& h : basic_classes()) {
    MapClass cones = o.mutate ? broken_cone_class(h) : cone_class(h);
    std::size_t maps_checked = 0;
    for (const Poset& x : corpus) {
      bool weak = is_weakly_injective(x, h, o.cap).weak();
      bool strong = is_injective(x, cones, o.cap).strong();
      t.check(weak == strong, [&] {
        Json j;
        j["class"] = h.name;
        j["object"] = to_json(x);
        j["weak"] = weak;
        j["strong_for_cones"] = strong;
        return j;
      });
    }
    for (const Poset& x : map_corpus)
      for (const Poset& y : map_corpus)
        for (const auto& p : enumerate_monotone(x, y, o.cap)) {
          ++maps_checked;
          bool weak = is_injective_map(p, h, o.cap).weak();
          bool strong = is_injective_map(p, cones, o.cap).strong();
          t.check(weak == strong, [&] {
            Json j;
            j["class"] = h.name;
            j["map"] = to_json(p);
            j["weak"] = weak;
            j["strong_for_cones"] = strong;
            return j;
          });
        }
    Json c;
    c["class"] = h.name;
    c["cones"] = to_json(cones);
    c["objects"] = corpus.size();
    c["maps"] = maps_checked;
    details.push_back(std::move(c));
  }
  return finish("cone", o, t, std::move(details));
}

SuiteResult run_bilimits(const SuiteOptions& o) {
  Tally t;
  Json details = Json::array();
  for (const MapClass& h : basic_classes()) {
    auto strong = strong_posets(o.size_cap, h, o.cap);
    t.check(is_injective(posets::one(), h, o.cap).strong(), [&] { return Json{{"class", h.name}, {"empty_product", false}}; });
    std::size_t products = 0;
    for (std::size_t i = 0; i < strong.size(); ++i)
      for (std::size_t k = i; k < strong.size(); ++k) {
        const Poset& a = strong[i];
        const Poset& b = strong[k];
        Product prod = product(a, b);
        ++products;
        bool object = is_injective(prod.object, h, o.cap).strong();
        bool first = object && is_injective_map(prod.first, h, o.cap).strong();
        bool second = object && is_injective_map(prod.second, h, o.cap).strong();
        t.check(object && first && second, [&] {
          Json j;
          j["class"] = h.name;
          j["factors"] = Json::array({to_json(a), to_json(b)});
          j["product_strong"] = object;
          j["first_projection_strong"] = first;
          j["second_projection_strong"] = second;
          return j;
        });
      }
    Json c;
    c["class"] = h.name;
    c["strong_objects"] = strong.size();
    c["products"] = products;
    details.push_back(std::move(c));
  }
  return finish("bilimits", o, t, std::move(details));
}

SuiteResult run_saturation(const SuiteOptions& o) {
  Tally t;
  auto sample = enumerate_posets_up_to(o.size_cap);
  Json details = Json::array();
  for (const MapClass& h : basic_classes()) {
    auto ws = standard_witnesses(h, o.cap);
    std::map<std::string, std::size_t> by_recipe;
    for (const auto& w : ws) {
      ++by_recipe[std::string(to_string(w.recipe))];
      ClosureReport r = closure_check(w, h, sample, o.cap);
      t.check(r.ok, [&] {
        Json j;
        j["class"] = h.name;
        j["witness"] = to_json(w);
        j["closure"] = to_json(r);
        return j;
      });
    }
    Json c;
    c["class"] = h.name;
    c["witnesses"] = ws.size();
    Json recipes = Json::object();
    for (const auto& [k, n] : by_recipe) recipes[k] = n;
    c["recipes"] = std::move(recipes);
    details.push_back(std::move(c));
  }

  // A constant map is in no saturation of {h_bottom}; closure_check must say so.
  MapClass bottom = basic_classes()[0];
  SaturationWitness fake = sat_asserted(MonotoneMap::constant(posets::chain(2), posets::one(), 0));
  ClosureReport control = closure_check(fake, bottom, sample, o.cap);
  t.check(!control.ok, [&] { return pair_json("negative_control", to_json(fake), "closure", to_json(control)); });

  // Lali squares over strong maps between small strong posets.
  std::size_t squares = 0;
  auto small = enumerate_posets_up_to(std::min<std::size_t>(o.size_cap, 3));
  for (const MapClass& h : basic_classes()) {
    std::vector<Poset> strong;
    for (const Poset& x : small)
      if (is_injective(x, h, o.cap).strong()) strong.push_back(x);
    for (const Poset& a : strong)
      for (const Poset& b : strong)
        for (const auto& f : enumerate_monotone(a, b, o.cap)) {
          if (!is_injective_map(f, h, o.cap).strong()) continue;
          for (const Poset& x : small)
            for (const auto& l1 : enumerate_monotone(a, x, o.cap)) {
              if (!classify_adjoint(l1).is_lali) continue;
              for (const Poset& y : small)
                for (const auto& l2 : enumerate_monotone(b, y, o.cap)) {
                  if (!classify_adjoint(l2).is_lali) continue;
                  for (const auto& g : enumerate_monotone(x, y, o.cap)) {
                    if (!(compose(g, l1) == compose(l2, f))) continue;
                    ++squares;
                    bool ok = lali_square(f, l1, l2, g, h, o.cap).strong();
                    t.check(ok, [&] {
                      Json j;
                      j["class"] = h.name;
                      j["f"] = to_json(f);
                      j["l1"] = to_json(l1);
                      j["l2"] = to_json(l2);
                      j["g"] = to_json(g);
                      return j;
                    });
                  }
                }
            }
        }
  }
  Json c;
  c["negative_control_rejected"] = !control.ok;
  c["lali_squares"] = squares;
  details.push_back(std::move(c));
  return finish("saturation", o, t, std::move(details));
}

// Colimits built by the other suites, each with a description.
std::vector<std::pair<std::string, ColimitResult>> sample_colimits(const SuiteOptions& o) {
  std::vector<std::pair<std::string, ColimitResult>> out;
  auto small = enumerate_posets_up_to(2);
  for (const MapClass& h : basic_classes()) {
    for (const auto& m : h.maps) {
      out.emplace_back(h.name + " cone", mapping_cone(m).colimit);
      for (const Poset& x : small)
        for (const auto& f : enumerate_monotone(m.dom(), x, o.cap)) {
          out.emplace_back(h.name + " pushout", pushout(f, m));
          out.emplace_back(h.name + " cocomma", cocomma(f, m));
        }
      out.emplace_back(h.name + " wide pushout", wide_pushout(m.dom(), {m, m}));
    }
  }
  for (const Poset& x : enumerate_posets_up_to(std::min<std::size_t>(o.size_cap, 3))) {
    for (const MapClass& h : basic_classes()) {
      ReflectOptions r;
      r.cap = o.cap;
      auto result = reflect(x, h, r);
      for (std::size_t i = 0; i < result.trace.steps.size(); ++i)
        out.emplace_back(h.name + " stage " + std::to_string(i + 1), result.trace.steps[i]);
      out.emplace_back(h.name + " chain", chain_colimit(result.trace.stages, result.trace.connectors));
    }
  }
  return out;
}

SuiteResult run_colimits(const SuiteOptions& o) {
  Tally t;
  VerifyOptions v;
  v.max_target_size = std::min<std::size_t>(o.size_cap, 4);
  std::size_t exhaustive = 0, certified = 0;
  auto colimits = sample_colimits(o);
  for (const auto& [what, c] : colimits) {
    UniversalReport r = verify_universal(c, v);
    (r.mode == VerifyMode::exhaustive ? exhaustive : certified)++;
    t.check(r.ok, [&] {
      Json j;
      j["colimit"] = what;
      j["object"] = to_json(c.object);
      j["report"] = to_json(r);
      return j;
    });
  }

  std::mt19937 rng(o.seed);
  auto corpus = enumerate_posets_up_to(3);
  std::size_t instances = 0;
  while (instances < 200) {
    const Poset& a = corpus[rng() % corpus.size()];
    const Poset& b = corpus[rng() % corpus.size()];
    const Poset& c = corpus[rng() % corpus.size()];
    auto hs = enumerate_monotone(a, b, o.cap);
    auto fs = enumerate_monotone(b, c, o.cap);
    if (hs.empty() || fs.empty()) continue;
    const auto& h = hs[rng() % hs.size()];
    const auto& f = fs[rng() % fs.size()];
    std::vector<MonotoneMap> gs;
    for (const auto& g : fs)
      if (compose(f, h).leq(compose(g, h))) gs.push_back(g);
    const auto& g = gs[rng() % gs.size()];
    ColimitResult q = coequinserter(h, f, g, TwoCell(compose(f, h), compose(g, h)));
    ColimitResult r = coinserter(f, g);
    bool same = q.object == r.object && q.injections[0] == r.injections[0];
    bool universal = same && verify_universal(q, v).ok;
    t.check(same && universal, [&] {
      Json j;
      j["h"] = to_json(h);
      j["f"] = to_json(f);
      j["g"] = to_json(g);
      j["equal"] = same;
      return j;
    });
    ++instances;
  }
  Json d;
  d["colimits"] = colimits.size();
  d["exhaustive"] = exhaustive;
  d["certified"] = certified;
  d["coequinserter_instances"] = instances;
  return finish("colimits", o, t, std::move(d));
}

// Least stage k with a map g: A -> X_k such that inj_k . g = a.
std::optional<std::size_t> factoring_stage(const ColimitResult& l, const MonotoneMap& a, std::size_t cap) {
  for (std::size_t k = 0; k < l.injections.size(); ++k) {
    const MonotoneMap& inj = l.injections[k];
    std::vector<Bitset> domains(a.dom().size(), Bitset(inj.dom().size()));
    for (Elem e = 0; e < a.dom().size(); ++e)
      for (Elem s = 0; s < inj.dom().size(); ++s)
        if (inj(s) == a(e)) domains[e].set(s);
    if (MonotoneSearch(a.dom(), inj.dom(), domains, cap).find()) return k;
  }
  return std::nullopt;
}

SuiteResult run_smallness(const SuiteOptions& o) {
  Tally t;
  constexpr std::size_t max_colimit = 10;
  auto sources = enumerate_posets_up_to(4);
  std::size_t prefixes = 0, maps_checked = 0, beyond_first = 0;
  for (const Poset& x : enumerate_posets_up_to(std::min<std::size_t>(o.size_cap, 2))) {
    for (const MapClass& h : basic_classes()) {
      for (bool saturate : {true, false}) {
        ReflectOptions r;
        r.cap = o.cap;
        r.saturate_even = saturate;
        auto result = reflect(x, h, r);
        const ChainState& s = result.trace;
        for (std::size_t n = 1; n <= s.stages.size(); ++n) {
          std::vector<Poset> stages(s.stages.begin(), s.stages.begin() + n);
          std::vector<MonotoneMap> connectors(s.connectors.begin(), s.connectors.begin() + (n - 1));
          ColimitResult l = chain_colimit(stages, connectors);
          if (l.object.size() > max_colimit) continue;
          ++prefixes;
          for (const Poset& a : sources) {
            for_each_monotone(
                a, l.object,
                [&](const std::vector<Elem>& image) {
                  MonotoneMap m = MonotoneMap::unchecked(a, l.object, image);
                  ++maps_checked;
                  auto k = factoring_stage(l, m, o.cap);
                  if (k && *k > 0) ++beyond_first;
                  t.check(k.has_value(), [&] {
                    Json j;
                    j["class"] = h.name;
                    j["object"] = to_json(x);
                    j["prefix"] = n;
                    j["map"] = to_json(m);
                    return j;
                  });
                  return true;
                },
                o.cap);
          }
        }
      }
    }
  }
  Json d;
  d["prefixes"] = prefixes;
  d["maps"] = maps_checked;
  d["factor_later_than_stage_0"] = beyond_first;
  // 2-cells between stage-factored maps lift because posets are thin, and
  // equal composite 2-cells are equal already.
  d["two_cells_lift"] = "degenerate";
  return finish("smallness", o, t, std::move(d));
}

SuiteResult run_reflection(const SuiteOptions& o) {
  Tally t;
  Json details = Json::array();
  for (const MapClass& h : basic_classes()) {
    auto targets = strong_posets(std::min<std::size_t>(o.size_cap + 1, 5), h, o.cap);
    std::size_t extensions = 0;
    Json sizes = Json::array();
    for (const Poset& x : enumerate_posets_up_to(o.size_cap)) {
      ReflectOptions r;
      r.cap = o.cap;
      ReflectionResult result = reflect(x, h, r);
      bool strong = result.converged && is_injective(result.reflected, h, o.cap).strong();
      sizes.push_back(result.reflected.size());
      t.check(strong, [&] {
        Json j;
        j["class"] = h.name;
        j["object"] = to_json(x);
        j["converged"] = result.converged;
        return j;
      });
      if (!strong) continue;
      for (const Poset& p : targets)
        for (const auto& f : enumerate_monotone(x, p, o.cap)) {
          ++extensions;
          MonotoneMap e = extend_along_unit(f, result, h, o.cap);
          KanResult k = left_kan(f, result.unit, KanMethod::automatic, o.cap);
          bool ok = k.exists && k.strict && *k.extension == e;
          t.check(ok, [&] {
            Json j;
            j["class"] = h.name;
            j["object"] = to_json(x);
            j["p"] = to_json(f);
            j["extension"] = to_json(e);
            return j;
          });
        }
    }
    Json c;
    c["class"] = h.name;
    c["reflected_sizes"] = std::move(sizes);
    c["extensions"] = extensions;
    details.push_back(std::move(c));
  }
  return finish("reflection", o, t, std::move(details));
}

}  // namespace

namespace {

// h_join retracted through lari squares: B = antichain, B' = V.
SaturationWitness join_retract_witness(const MapClass& h) {
  Poset b = posets::antichain(2);
  Poset v = posets::vee();
  Poset a = build_poset({"a", "a2", "b"}, {{"a", "a2"}});
  Poset a2 = build_poset({"a", "b", "top", "a2"}, {{"a", "top"}, {"b", "top"}, {"a", "a2"}});
  MonotoneMap l1 = MonotoneMap::from_labels(b, a, {{"a", "a"}, {"b", "b"}});
  MonotoneMap l2 = MonotoneMap::from_labels(v, a2, {{"a", "a"}, {"b", "b"}, {"top", "top"}});
  MonotoneMap s = MonotoneMap::from_labels(a, a2, {{"a", "a"}, {"a2", "a2"}, {"b", "b"}});
  std::size_t join = 0;
  while (!(h.maps[join] == maps::h_join())) ++join;
  return sat_reflection(sat_member(h, join), l1, l2, s);
}

}  // namespace

std::vector<SaturationWitness> standard_witnesses(const MapClass& h, std::size_t cap) {
  std::vector<SaturationWitness> ws;
  for (std::size_t i = 0; i < h.maps.size(); ++i) ws.push_back(sat_member(h, i));
  Poset c2 = posets::chain(2), c3 = posets::chain(3);
  ws.push_back(sat_lari(MonotoneMap(posets::one(), c2, {0})));
  ws.push_back(sat_lari(MonotoneMap(c2, c3, {0, 1})));
  std::size_t members = h.maps.size();
  for (std::size_t i = 0; i < members; ++i) {
    const SaturationWitness m = ws[i];
    for (const Poset& x : enumerate_posets_up_to(2)) {
      for (const auto& f : enumerate_monotone(m.produced.dom(), x, cap)) {
        ws.push_back(sat_pushout(m, f));
        ws.push_back(sat_pushout(m, f, GlueMode::cocomma));
      }
    }
    ws.push_back(sat_wide_pushout({m, m}));
    ws.push_back(sat_compose(m, sat_lari(MonotoneMap::identity(m.produced.cod()))));
    auto swap = find_isomorphism(m.produced.cod(), m.produced.cod());
    if (swap) ws.push_back(sat_iso(m, MonotoneMap::identity(m.produced.dom()), *swap));
  }
  for (const Poset& x : enumerate_posets_up_to(2)) {
    ReflectOptions r;
    r.cap = cap;
    auto result = reflect(x, h, r);
    for (std::size_t i = 1; i <= result.trace.top() && i <= 3; ++i) ws.push_back(sat_chain_connector(result, i));
  }
  if (std::any_of(h.maps.begin(), h.maps.end(), [](const MonotoneMap& m) { return m == maps::h_join(); }))
    ws.push_back(join_retract_witness(h));
  return ws;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"kz", "saturation", "cone", "bilimits", "colimits", "smallness", "reflection"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "kz") return run_kz(options);
  if (name == "saturation") return run_saturation(options);
  if (name == "cone") return run_cone(options);
  if (name == "bilimits") return run_bilimits(options);
  if (name == "colimits") return run_colimits(options);
  if (name == "smallness") return run_smallness(options);
  if (name == "reflection") return run_reflection(options);
  throw Error(ErrorCode::invalid_argument, "unknown suite " + name);
}

std::vector<MapClass> basic_classes() {
  return {{"bottom", {maps::h_bottom()}}, {"join", {maps::h_join()}}, {"both", {maps::h_bottom(), maps::h_join()}}};
}

std::vector<Poset> strong_posets(std::size_t max_size, const MapClass& h, std::size_t cap) {
  std::vector<Poset> out;
  for (Poset& x : enumerate_posets_up_to(max_size))
    if (is_injective(x, h, cap).strong()) out.push_back(std::move(x));
  return out;
}

}  // namespace kaninj
