#include "kaninj/saturation.hpp"

#include <map>

namespace kaninj {

std::string_view to_string(Recipe r) {
  switch (r) {
    case Recipe::member:
      return "member";
    case Recipe::lari:
      return "lari";
    case Recipe::iso_replacement:
      return "iso";
    case Recipe::compose:
      return "compose";
    case Recipe::reflection:
      return "reflection";
    case Recipe::pushout:
      return "pushout";
    case Recipe::cocomma:
      return "cocomma";
    case Recipe::wide_pushout:
      return "wide_pushout";
    case Recipe::chain_connector:
      return "chain_connector";
    case Recipe::asserted:
      return "asserted";
  }
  return "asserted";
}

SaturationWitness sat_member(const MapClass& h, std::size_t index) {
  if (index >= h.maps.size()) throw Error(ErrorCode::invalid_argument, "sat_member: index out of range");
  return {h.maps[index], Recipe::member, {}};
}

SaturationWitness sat_lari(const MonotoneMap& l) {
  if (!classify_adjoint(l).is_lari) throw Error(ErrorCode::not_lari, "sat_lari: " + describe(l));
  return {l, Recipe::lari, {}};
}

SaturationWitness sat_iso(const SaturationWitness& h, const MonotoneMap& alpha, const MonotoneMap& beta) {
  if (!alpha.is_isomorphism() || !beta.is_isomorphism()) {
    throw Error(ErrorCode::invalid_argument, "sat_iso: alpha and beta must be isomorphisms");
  }
  if (!(alpha.cod() == h.produced.dom()) || !(beta.dom() == h.produced.cod())) {
    throw Error(ErrorCode::not_composable, "sat_iso: isomorphisms do not meet h");
  }
  return {compose(beta, compose(h.produced, alpha)), Recipe::iso_replacement, {h}};
}

SaturationWitness sat_compose(const SaturationWitness& f, const SaturationWitness& g) {
  if (!(f.produced.cod() == g.produced.dom())) throw Error(ErrorCode::not_composable, "sat_compose: cod f != dom g");
  return {compose(g.produced, f.produced), Recipe::compose, {f, g}};
}

SaturationWitness sat_pushout(const SaturationWitness& h, const MonotoneMap& f, GlueMode mode) {
  if (!(h.produced.dom() == f.dom())) throw Error(ErrorCode::domain_mismatch, "sat_pushout: dom h != dom f");
  if (mode == GlueMode::pushout) return {pushout(f, h.produced).injections[0], Recipe::pushout, {h}};
  return {cocomma(f, h.produced).injections[0], Recipe::cocomma, {h}};
}

SaturationWitness sat_wide_pushout(const std::vector<SaturationWitness>& legs) {
  if (legs.empty()) throw Error(ErrorCode::invalid_argument, "sat_wide_pushout: no legs");
  std::vector<MonotoneMap> maps;
  for (const auto& w : legs) maps.push_back(w.produced);
  const Poset& apex = maps.front().dom();
  ColimitResult c = wide_pushout(apex, maps);
  return {compose(c.injections[0], maps[0]), Recipe::wide_pushout, legs};
}

SaturationWitness sat_reflection(const SaturationWitness& h, const MonotoneMap& l1, const MonotoneMap& l2,
                                 const MonotoneMap& s) {
  const MonotoneMap& m = h.produced;
  if (!(l1.dom() == m.dom()) || !(l2.dom() == m.cod()) || !(s.dom() == l1.cod()) || !(s.cod() == l2.cod())) {
    throw Error(ErrorCode::domain_mismatch, "sat_reflection: need l1: B -> A, l2: B' -> A', s: A -> A'");
  }
  if (!classify_adjoint(l1).is_lari) throw Error(ErrorCode::not_lari, "sat_reflection: l1 is not a lari");
  if (!classify_adjoint(l2).is_lari) throw Error(ErrorCode::not_lari, "sat_reflection: l2 is not a lari");
  MonotoneMap r1 = *right_adjoint(l1);
  MonotoneMap r2 = *right_adjoint(l2);
  if (!(compose(s, l1) == compose(l2, m))) {
    throw Error(ErrorCode::square_does_not_commute, "sat_reflection: s.l1 != l2.h");
  }
  if (!(compose(m, r1) == compose(r2, s))) {
    throw Error(ErrorCode::square_does_not_commute, "sat_reflection: h.r1 != r2.s");
  }
  return {s, Recipe::reflection, {h, {l1, Recipe::lari, {}}, {l2, Recipe::lari, {}}}};
}

SaturationWitness sat_chain_connector(const ReflectionResult& result, std::size_t stage) {
  if (stage > result.trace.top()) throw Error(ErrorCode::invalid_argument, "sat_chain_connector: no such stage");
  return {result.trace.connector(0, stage), Recipe::chain_connector, {}};
}

SaturationWitness sat_asserted(const MonotoneMap& m) { return {m, Recipe::asserted, {}}; }

namespace {

// Extensions along each map of a class, keyed by (map index, image of f).
using Table = std::map<std::pair<std::size_t, std::vector<Elem>>, std::vector<Elem>>;

Table table_of(const InjectivityReport& report) {
  Table t;
  for (const auto& w : report.witnesses) t[{w.h, w.f.image()}] = w.result.extension->image();
  return t;
}

// p carries every extension in `from` to the matching one in `to`.
bool carries(const MonotoneMap& p, const Table& from, const Table& to) {
  for (const auto& [key, ext] : from) {
    std::vector<Elem> pf(key.second.size()), pext(ext.size());
    for (std::size_t a = 0; a < pf.size(); ++a) pf[a] = p(key.second[a]);
    for (std::size_t a = 0; a < pext.size(); ++a) pext[a] = p(ext[a]);
    auto it = to.find({key.first, pf});
    if (it == to.end() || it->second != pext) return false;
  }
  return true;
}

}  // namespace

ClosureReport closure_check(const SaturationWitness& w, const MapClass& h, const std::vector<Poset>& sample,
                            std::size_t cap) {
  ClosureReport report;
  MapClass single{"witness", {w.produced}};
  struct Strong {
    const Poset* x;
    Table by_h;
    Table by_w;
  };
  std::vector<Strong> strong;
  for (const Poset& x : sample) {
    InjectivityReport base = is_injective(x, h, cap);
    if (!base.strong()) continue;
    ++report.objects_checked;
    InjectivityReport along = is_injective(x, single, cap);
    if (!along.strong()) {
      report.ok = false;
      report.object = x;
      report.reason = "strong for H but " + std::string(to_string(along.verdict)) + " for the witness";
      return report;
    }
    strong.push_back({&x, table_of(base), table_of(along)});
  }
  for (const Strong& from : strong) {
    for (const Strong& to : strong) {
      bool failed = false;
      for_each_monotone(
          *from.x, *to.x,
          [&](const std::vector<Elem>& image) {
            MonotoneMap p = MonotoneMap::unchecked(*from.x, *to.x, image);
            if (!carries(p, from.by_h, to.by_h)) return true;
            ++report.maps_checked;
            if (!carries(p, from.by_w, to.by_w)) {
              report.ok = false;
              report.map = std::move(p);
              report.reason = "H-strong map does not preserve extensions along the witness";
              failed = true;
              return false;
            }
            return true;
          },
          cap);
      if (failed) return report;
    }
  }
  return report;
}

InjectivityReport lali_square(const MonotoneMap& f, const MonotoneMap& l1, const MonotoneMap& l2,
                              const MonotoneMap& g, const MapClass& h, std::size_t cap) {
  if (!(l1.dom() == f.dom()) || !(l2.dom() == f.cod()) || !(g.dom() == l1.cod()) || !(g.cod() == l2.cod())) {
    throw Error(ErrorCode::domain_mismatch, "lali_square: need f: A -> B, l1: A -> X, l2: B -> Y, g: X -> Y");
  }
  if (!(compose(g, l1) == compose(l2, f))) throw Error(ErrorCode::square_does_not_commute, "lali_square: g.l1 != l2.f");
  if (!classify_adjoint(l1).is_lali || !classify_adjoint(l2).is_lali) {
    throw Error(ErrorCode::invalid_argument, "lali_square: l1 and l2 must be lalis");
  }
  if (!is_injective_map(f, h, cap).strong()) throw Error(ErrorCode::not_injective_context, "lali_square: f is not strong");
  return is_injective_map(g, h, cap);
}

}  // namespace kaninj
