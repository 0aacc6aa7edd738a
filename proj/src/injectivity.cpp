#include "kaninj/injectivity.hpp"

namespace kaninj {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::neither:
      return "neither";
    case Verdict::weak:
      return "weak";
    case Verdict::strong:
      return "strong";
  }
  return "neither";
}

namespace {

InjectivityReport scan(const Poset& x, const MapClass& hs, std::size_t cap) {
  InjectivityReport report;
  for (std::size_t i = 0; i < hs.maps.size(); ++i) {
    const MonotoneMap& h = hs.maps[i];
    for_each_monotone(
        h.dom(), x,
        [&](const std::vector<Elem>& image) {
          MonotoneMap f = MonotoneMap::unchecked(h.dom(), x, image);
          KanResult r = left_kan(f, h, KanMethod::automatic, cap);
          if (!r.exists) {
            report.failures.push_back({i, f, "no least extension"});
          } else if (!r.strict) {
            report.non_strict.push_back({i, f, "extension does not restrict to f"});
          }
          report.witnesses.push_back({i, std::move(f), std::move(r)});
          return true;
        },
        cap);
  }
  return report;
}

}  // namespace

InjectivityReport is_weakly_injective(const Poset& x, const MapClass& h, std::size_t cap) {
  InjectivityReport report = scan(x, h, cap);
  report.verdict = report.failures.empty() ? Verdict::weak : Verdict::neither;
  return report;
}

InjectivityReport is_injective(const Poset& x, const MapClass& h, std::size_t cap) {
  InjectivityReport report = scan(x, h, cap);
  if (!report.failures.empty()) report.verdict = Verdict::neither;
  else report.verdict = report.non_strict.empty() ? Verdict::strong : Verdict::weak;
  return report;
}

InjectivityReport is_injective_map(const MonotoneMap& p, const MapClass& h, std::size_t cap) {
  InjectivityReport source = is_injective(p.dom(), h, cap);
  InjectivityReport target = is_injective(p.cod(), h, cap);
  InjectivityReport report;
  for (auto& fail : source.failures) report.failures.push_back({fail.h, fail.f, "domain: " + fail.reason});
  for (auto& fail : target.failures) report.failures.push_back({fail.h, fail.f, "codomain: " + fail.reason});
  for (auto& fail : source.non_strict) report.non_strict.push_back({fail.h, fail.f, "domain: " + fail.reason});
  for (auto& fail : target.non_strict) report.non_strict.push_back({fail.h, fail.f, "codomain: " + fail.reason});
  if (report.failures.empty()) {
    for (auto& w : source.witnesses) {
      KanResult after = left_kan(compose(p, w.f), h.maps[w.h], KanMethod::automatic, cap);
      if (!(compose(p, *w.result.extension) == *after.extension)) {
        report.failures.push_back({w.h, w.f, "extension not preserved"});
      }
      report.witnesses.push_back(std::move(w));
    }
  }
  if (!report.failures.empty()) report.verdict = Verdict::neither;
  else report.verdict = report.non_strict.empty() ? Verdict::strong : Verdict::weak;
  return report;
}

MappingCone mapping_cone(const MonotoneMap& h) {
  ColimitResult c = cocomma(MonotoneMap::identity(h.dom()), h);
  MonotoneMap i_h = c.injections[0];
  MonotoneMap j = c.injections[1];
  TwoCell rho = c.cells[0];
  Poset cone = c.object;
  return {std::move(c), std::move(cone), std::move(i_h), std::move(j), std::move(rho)};
}

MapClass cone_class(const MapClass& h) {
  MapClass out{"cone(" + h.name + ")", {}};
  for (const auto& m : h.maps) out.maps.push_back(mapping_cone(m).i_h);
  return out;
}

MapClass dual(const MapClass& h) {
  MapClass out{h.name + "^op", {}};
  for (const auto& m : h.maps) out.maps.push_back(m.dual());
  return out;
}

}  // namespace kaninj
