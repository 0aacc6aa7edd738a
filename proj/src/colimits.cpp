#include "kaninj/colimits.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_set>

namespace kaninj {

std::size_t Presentation::add(Poset p, std::string tag) {
  components.push_back(std::move(p));
  tags.push_back(std::move(tag));
  return components.size() - 1;
}

std::size_t Presentation::generator_count() const {
  std::size_t n = 0;
  for (const auto& c : components) n += c.size();
  return n;
}

namespace {

// First occurrence of a label keeps it; later ones are qualified by their tag.
std::vector<std::string> generator_labels(const Presentation& p) {
  std::vector<std::string> out;
  out.reserve(p.generator_count());
  std::unordered_set<std::string> used;
  for (std::size_t i = 0; i < p.components.size(); ++i) {
    std::string tag = i < p.tags.size() && !p.tags[i].empty() ? p.tags[i] : "c" + std::to_string(i);
    for (const auto& l : p.components[i].labels()) {
      std::string name = used.count(l) ? tag + "." + l : l;
      while (used.count(name)) name += "'";
      used.insert(name);
      out.push_back(std::move(name));
    }
  }
  return out;
}

std::vector<std::size_t> offsets_of(const Presentation& p) {
  std::vector<std::size_t> offsets;
  std::size_t n = 0;
  for (const auto& c : p.components) {
    offsets.push_back(n);
    n += c.size();
  }
  return offsets;
}

// Every generating edge u <= v: component covers plus the relations.
std::vector<std::pair<Elem, Elem>> generator_edges(const Presentation& p, const std::vector<std::size_t>& offsets) {
  std::vector<std::pair<Elem, Elem>> edges;
  for (std::size_t i = 0; i < p.components.size(); ++i) {
    for (auto [a, b] : p.components[i].covers()) edges.emplace_back(offsets[i] + a, offsets[i] + b);
  }
  for (const auto& [lo, hi] : p.relations) {
    edges.emplace_back(offsets[lo.component] + lo.element, offsets[hi.component] + hi.element);
  }
  return edges;
}

void check_generator(const Presentation& p, const Generator& g) {
  if (g.component >= p.components.size() || g.element >= p.components[g.component].size()) {
    throw Error(ErrorCode::invalid_argument, "presentation relation refers to a missing generator");
  }
}

void require_parallel(const MonotoneMap& f, const MonotoneMap& g, const char* op) {
  if (!f.parallel_to(g)) throw Error(ErrorCode::not_parallel, std::string(op) + ": maps are not parallel");
}

// Image of every generator under the legs into a common target.
std::vector<Elem> leg_values(const ColimitResult& c, const std::vector<MonotoneMap>& legs) {
  std::vector<Elem> values;
  values.reserve(c.presentation.generator_count());
  for (const auto& leg : legs) values.insert(values.end(), leg.image().begin(), leg.image().end());
  return values;
}

void require_legs(const ColimitResult& c, const std::vector<MonotoneMap>& legs) {
  if (legs.size() != c.presentation.components.size()) {
    throw Error(ErrorCode::domain_mismatch, "one leg per component required");
  }
  for (std::size_t i = 0; i < legs.size(); ++i) {
    if (!(legs[i].dom() == c.presentation.components[i])) {
      throw Error(ErrorCode::domain_mismatch, "leg " + std::to_string(i) + " does not start at its component");
    }
    if (i && !(legs[i].cod() == legs[0].cod())) throw Error(ErrorCode::domain_mismatch, "legs need a common codomain");
  }
}

// Generator image under the computed injections.
std::vector<Elem> injection_classes(const ColimitResult& c) {
  std::vector<Elem> cls;
  cls.reserve(c.presentation.generator_count());
  for (const auto& inj : c.injections) cls.insert(cls.end(), inj.image().begin(), inj.image().end());
  return cls;
}

struct Graph {
  std::size_t n = 0;
  std::vector<std::pair<Elem, Elem>> edges;
};

Graph graph_of(const ColimitResult& c) {
  return {c.presentation.generator_count(), generator_edges(c.presentation, c.offsets)};
}

std::string describe_generator(const ColimitResult& c, Elem g) {
  std::size_t comp = std::upper_bound(c.offsets.begin(), c.offsets.end(), g) - c.offsets.begin() - 1;
  const auto& p = c.presentation;
  std::string tag = comp < p.tags.size() ? p.tags[comp] : "";
  return (tag.empty() ? "c" + std::to_string(comp) : tag) + "." + p.components[comp].label(g - c.offsets[comp]);
}

// Number of assignments of generators into `t` satisfying every edge;
// throws size_cap_exceeded after `cap` nodes.
std::size_t count_cocones(const Graph& g, const Poset& t, std::size_t cap) {
  std::vector<std::vector<Elem>> lower(g.n), upper(g.n);
  for (auto [u, v] : g.edges) {
    if (u == v) continue;
    // Checked when the later endpoint is assigned.
    if (u < v) lower[v].push_back(u);
    else upper[u].push_back(v);
  }
  std::vector<Elem> value(g.n, 0);
  std::size_t nodes = 0, count = 0;
  std::function<void(Elem)> rec = [&](Elem k) {
    if (k == g.n) {
      ++count;
      return;
    }
    Bitset allowed = t.all();
    for (Elem u : lower[k]) allowed &= t.up(value[u]);
    for (Elem w : upper[k]) allowed &= t.down(value[w]);
    for (Elem v = allowed.find_first(); v != Bitset::npos; v = allowed.find_next(v)) {
      if (++nodes > cap) throw Error(ErrorCode::size_cap_exceeded, "cocone enumeration exceeded its cap");
      value[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return count;
}

UniversalReport verify_exhaustive(const ColimitResult& c, const std::vector<Poset>& targets, std::size_t cap) {
  UniversalReport report;
  report.mode = VerifyMode::exhaustive;
  const Graph graph = graph_of(c);
  const auto cls = injection_classes(c);
  for (const Poset& t : targets) {
    ++report.targets_checked;
    const std::size_t cocones = count_cocones(graph, t, cap);
    std::set<std::vector<Elem>> induced;
    std::size_t maps = 0;
    std::string failure;
    for_each_monotone(
        c.object, t,
        [&](const std::vector<Elem>& m) {
          ++maps;
          std::vector<Elem> legs(graph.n);
          for (Elem g = 0; g < graph.n; ++g) legs[g] = m[cls[g]];
          for (auto [u, v] : graph.edges) {
            if (!t.leq(legs[u], legs[v])) {
              failure = "a map out of the colimit breaks " + describe_generator(c, u) + " <= " +
                        describe_generator(c, v);
              return false;
            }
          }
          if (!induced.insert(std::move(legs)).second) {
            failure = "two maps out of the colimit induce the same cocone";
            return false;
          }
          return true;
        },
        cap);
    if (failure.empty() && maps != cocones) {
      failure = std::to_string(cocones) + " cocones but " + std::to_string(maps) + " maps out of the colimit";
    }
    if (!failure.empty()) {
      report.ok = false;
      report.counterexample = "target of size " + std::to_string(t.size()) + ": " + failure;
      return report;
    }
  }
  return report;
}

UniversalReport verify_certificate(const ColimitResult& c) {
  UniversalReport report;
  report.mode = VerifyMode::certificate;
  auto fail = [&](std::string why) {
    report.ok = false;
    report.counterexample = std::move(why);
    return report;
  };
  const Graph graph = graph_of(c);
  const auto cls = injection_classes(c);
  const std::size_t m = c.object.size();

  std::vector<bool> hit(m, false);
  for (Elem g = 0; g < graph.n; ++g) hit[cls[g]] = true;
  for (Elem x = 0; x < m; ++x) {
    if (!hit[x]) return fail("element " + c.object.label(x) + " is not generated");
  }
  for (auto [u, v] : graph.edges) {
    if (!c.object.leq(cls[u], cls[v])) {
      return fail("relation " + describe_generator(c, u) + " <= " + describe_generator(c, v) + " does not hold");
    }
  }

  // The order must be exactly the reachability of the induced relation.
  std::vector<std::vector<Elem>> succ(m);
  for (auto [u, v] : graph.edges) succ[cls[u]].push_back(cls[v]);
  for (Elem x = 0; x < m; ++x) {
    Bitset seen(m);
    std::vector<Elem> stack{x};
    seen.set(x);
    while (!stack.empty()) {
      Elem y = stack.back();
      stack.pop_back();
      for (Elem z : succ[y]) {
        if (!seen.test(z)) {
          seen.set(z);
          stack.push_back(z);
        }
      }
    }
    if (seen != c.object.up(x)) return fail("order above " + c.object.label(x) + " is not the generated one");
  }

  // Each class must be strongly connected through edges inside the class.
  std::vector<std::vector<Elem>> fwd(graph.n), bwd(graph.n);
  for (auto [u, v] : graph.edges) {
    if (cls[u] == cls[v]) {
      fwd[u].push_back(v);
      bwd[v].push_back(u);
    }
  }
  std::vector<std::vector<Elem>> members(m);
  for (Elem g = 0; g < graph.n; ++g) members[cls[g]].push_back(g);
  for (Elem x = 0; x < m; ++x) {
    if (members[x].size() < 2) continue;
    for (const auto* adj : {&fwd, &bwd}) {
      std::set<Elem> seen{members[x][0]};
      std::vector<Elem> stack{members[x][0]};
      while (!stack.empty()) {
        Elem y = stack.back();
        stack.pop_back();
        for (Elem z : (*adj)[y]) {
          if (seen.insert(z).second) stack.push_back(z);
        }
      }
      if (seen.size() != members[x].size()) {
        return fail("class of " + c.object.label(x) + " merges generators that are not forced equal");
      }
    }
  }
  return report;
}

}  // namespace

ColimitResult colimit(Presentation presentation) {
  for (const auto& [lo, hi] : presentation.relations) {
    check_generator(presentation, lo);
    check_generator(presentation, hi);
  }
  ColimitResult out;
  out.offsets = offsets_of(presentation);
  out.collapse = preorder_collapse_indexed(generator_labels(presentation), generator_edges(presentation, out.offsets));
  out.object = out.collapse.quotient;
  for (std::size_t i = 0; i < presentation.components.size(); ++i) {
    const Poset& c = presentation.components[i];
    std::vector<Elem> image(out.collapse.class_of.begin() + out.offsets[i],
                            out.collapse.class_of.begin() + out.offsets[i] + c.size());
    out.injections.push_back(MonotoneMap::unchecked(c, out.object, std::move(image)));
  }
  out.presentation = std::move(presentation);
  return out;
}

ColimitResult coproduct(const std::vector<Poset>& parts) {
  Presentation p;
  for (std::size_t i = 0; i < parts.size(); ++i) p.add(parts[i], "c" + std::to_string(i));
  return colimit(std::move(p));
}

ColimitResult pushout(const MonotoneMap& f, const MonotoneMap& h) {
  if (!(f.dom() == h.dom())) throw Error(ErrorCode::domain_mismatch, "pushout: legs must share their domain");
  Presentation p;
  p.add(f.cod(), "B");
  p.add(h.cod(), "A'");
  for (Elem a = 0; a < f.dom().size(); ++a) p.identify({0, f(a)}, {1, h(a)});
  return colimit(std::move(p));
}

ColimitResult wide_pushout(const Poset& apex, const std::vector<MonotoneMap>& legs) {
  Presentation p;
  if (legs.empty()) {
    p.add(apex, "apex");
    return colimit(std::move(p));
  }
  for (std::size_t i = 0; i < legs.size(); ++i) {
    if (!(legs[i].dom() == apex)) throw Error(ErrorCode::domain_mismatch, "wide_pushout: every leg starts at the apex");
    p.add(legs[i].cod(), "L" + std::to_string(i));
  }
  for (std::size_t i = 1; i < legs.size(); ++i) {
    for (Elem a = 0; a < apex.size(); ++a) p.identify({0, legs[0](a)}, {i, legs[i](a)});
  }
  return colimit(std::move(p));
}

ColimitResult cocomma(const MonotoneMap& f, const MonotoneMap& g) {
  if (!(f.dom() == g.dom())) throw Error(ErrorCode::domain_mismatch, "cocomma: legs must share their domain");
  Presentation p;
  p.add(f.cod(), "B");
  p.add(g.cod(), "C");
  for (Elem a = 0; a < f.dom().size(); ++a) p.leq({0, f(a)}, {1, g(a)});
  ColimitResult out = colimit(std::move(p));
  out.cells.emplace_back(compose(out.injections[0], f), compose(out.injections[1], g));
  return out;
}

ColimitResult coinserter(const MonotoneMap& f, const MonotoneMap& g) {
  require_parallel(f, g, "coinserter");
  Presentation p;
  p.add(f.cod(), "C");
  for (Elem b = 0; b < f.dom().size(); ++b) p.leq({0, f(b)}, {0, g(b)});
  ColimitResult out = colimit(std::move(p));
  out.cells.emplace_back(compose(out.injections[0], f), compose(out.injections[0], g));
  return out;
}

ColimitResult coequifier(const TwoCell& sigma, const TwoCell& tau) {
  if (!(sigma.src() == tau.src()) || !(sigma.tgt() == tau.tgt())) {
    throw Error(ErrorCode::not_parallel, "coequifier: 2-cells have different boundaries");
  }
  Presentation p;
  p.add(sigma.src().cod(), "C");
  return colimit(std::move(p));
}

ColimitResult coequinserter(const MonotoneMap& h, const MonotoneMap& f, const MonotoneMap& g, const TwoCell& gamma) {
  require_parallel(f, g, "coequinserter");
  if (!(h.cod() == f.dom()) || !(gamma.src() == compose(f, h)) || !(gamma.tgt() == compose(g, h))) {
    throw Error(ErrorCode::invalid_two_cell, "coequinserter: gamma must run from f.h to g.h");
  }
  ColimitResult inserted = coinserter(f, g);
  const MonotoneMap& i = inserted.injections[0];
  // i.gamma against the inserted cell whiskered by h.
  TwoCell sigma(compose(i, gamma.src()), compose(i, gamma.tgt()));
  TwoCell tau(compose(inserted.cells[0].src(), h), compose(inserted.cells[0].tgt(), h));
  ColimitResult equified = coequifier(sigma, tau);
  if (!equified.injections[0].is_identity()) {
    throw Error(ErrorCode::invariant_violation, "coequifier between posets must be trivial");
  }
  return inserted;
}

ColimitResult chain_colimit(const std::vector<Poset>& stages, const std::vector<MonotoneMap>& connectors) {
  if (!stages.empty() && connectors.size() + 1 != stages.size()) {
    throw Error(ErrorCode::invalid_argument, "chain_colimit: need one connector between consecutive stages");
  }
  Presentation p;
  for (std::size_t i = 0; i < stages.size(); ++i) p.add(stages[i], "X" + std::to_string(i));
  for (std::size_t i = 0; i < connectors.size(); ++i) {
    if (!(connectors[i].dom() == stages[i]) || !(connectors[i].cod() == stages[i + 1])) {
      throw Error(ErrorCode::not_composable, "chain_colimit: connector " + std::to_string(i) + " does not fit");
    }
    for (Elem x = 0; x < stages[i].size(); ++x) p.identify({i, x}, {i + 1, connectors[i](x)});
  }
  return colimit(std::move(p));
}

bool is_cocone(const ColimitResult& colimit, const std::vector<MonotoneMap>& legs) {
  require_legs(colimit, legs);
  if (legs.empty()) return true;
  const Poset& t = legs[0].cod();
  const auto values = leg_values(colimit, legs);
  for (auto [u, v] : generator_edges(colimit.presentation, colimit.offsets)) {
    if (!t.leq(values[u], values[v])) return false;
  }
  return true;
}

std::optional<MonotoneMap> mediator(const ColimitResult& colimit, const Poset& target,
                                    const std::vector<MonotoneMap>& legs) {
  for (const auto& leg : legs) {
    if (!(leg.cod() == target)) throw Error(ErrorCode::domain_mismatch, "mediator: leg does not land in the target");
  }
  if (!is_cocone(colimit, legs)) return std::nullopt;
  const Poset& t = target;
  const auto values = leg_values(colimit, legs);
  std::vector<Elem> image(colimit.object.size(), 0);
  std::vector<bool> set(colimit.object.size(), false);
  for (Elem g = 0; g < values.size(); ++g) {
    Elem x = colimit.collapse.class_of[g];
    if (set[x] && image[x] != values[g]) return std::nullopt;
    image[x] = values[g];
    set[x] = true;
  }
  if (std::find(set.begin(), set.end(), false) != set.end()) return std::nullopt;
  try {
    return MonotoneMap(colimit.object, t, std::move(image));
  } catch (const Error&) {
    return std::nullopt;
  }
}

UniversalReport verify_universal(const ColimitResult& colimit, const VerifyOptions& options) {
  if (options.mode == VerifyMode::certificate) return verify_certificate(colimit);
  const auto targets = enumerate_posets_up_to(options.max_target_size);
  if (options.mode == VerifyMode::exhaustive) return verify_exhaustive(colimit, targets, options.cap);
  try {
    return verify_exhaustive(colimit, targets, options.cap);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::size_cap_exceeded) throw;
  }
  return verify_certificate(colimit);
}

namespace {

void write_nodes_and_edges(std::ostringstream& out, const Poset& p) {
  for (auto [a, b] : p.covers()) out << "  n" << a << " -> n" << b << ";\n";
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Poset& poset, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n  rankdir=BT;\n";
  for (Elem a = 0; a < poset.size(); ++a) out << "  n" << a << " [label=" << quoted(poset.label(a)) << "];\n";
  write_nodes_and_edges(out, poset);
  out << "}\n";
  return out.str();
}

std::string to_dot(const ColimitResult& colimit, const std::string& name) {
  static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  const Poset& p = colimit.object;
  std::vector<std::size_t> group(p.size(), 0);
  std::vector<bool> seen(p.size(), false);
  for (std::size_t c = 0; c < colimit.injections.size(); ++c) {
    for (Elem x : colimit.injections[c].image()) {
      if (!seen[x]) {
        seen[x] = true;
        group[x] = c;
      }
    }
  }
  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n  rankdir=BT;\n";
  for (Elem a = 0; a < p.size(); ++a) {
    const auto& tags = colimit.presentation.tags;
    std::string tag = group[a] < tags.size() ? tags[group[a]] : "";
    out << "  n" << a << " [label=" << quoted(p.label(a)) << ", color=" << quoted(palette[group[a] % 10]);
    if (!tag.empty()) out << ", group=" << quoted(tag);
    out << "];\n";
  }
  write_nodes_and_edges(out, p);
  out << "}\n";
  return out.str();
}

}  // namespace kaninj
