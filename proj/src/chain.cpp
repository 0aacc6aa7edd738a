#include "kaninj/chain.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "kaninj/search.hpp"

namespace kaninj {

MonotoneMap ChainState::connector(std::size_t j, std::size_t k) const {
  if (j > k || k >= stages.size()) throw Error(ErrorCode::invalid_argument, "connector: need j <= k <= top");
  std::vector<Elem> image(stages[j].size());
  for (Elem x = 0; x < image.size(); ++x) {
    Elem y = x;
    for (std::size_t s = j; s < k; ++s) y = connectors[s](y);
    image[x] = y;
  }
  return MonotoneMap::unchecked(stages[j], stages[k], std::move(image));
}

ChainState start_chain(const Poset& x) {
  ChainState state;
  state.stages.push_back(x);
  return state;
}

namespace {

void push_stage(ChainState& state, ColimitResult step) {
  state.connectors.push_back(step.injections[0]);
  state.stages.push_back(step.object);
  state.steps.push_back(std::move(step));
}

// m is an order embedding on `subset`.
bool restricts_to_embedding(const MonotoneMap& m, const Bitset& subset) {
  for (Elem a = subset.find_first(); a != Bitset::npos; a = subset.find_next(a)) {
    for (Elem b = subset.find_first(); b != Bitset::npos; b = subset.find_next(b)) {
      if (m.dom().leq(a, b) != m.cod().leq(m(a), m(b))) return false;
    }
  }
  return true;
}

// Minimal elements of `set`.
std::vector<Elem> minimal(const Poset& x, const Bitset& set) {
  std::vector<Elem> out;
  for (Elem v = set.find_first(); v != Bitset::npos; v = set.find_next(v)) {
    if ((x.down(v) & set).count() == 1) out.push_back(v);
  }
  return out;
}

}  // namespace

void step_odd(ChainState& state, const MapClass& hs, std::size_t cap) {
  const std::size_t i = state.top();
  if (i % 2 != 0) throw Error(ErrorCode::invalid_argument, "step_odd: top stage must be even");
  const Poset& xi = state.stages[i];
  Presentation p;
  p.add(xi, "X" + std::to_string(i));
  struct Pending {
    std::size_t h;
    MonotoneMap f;
    std::size_t component;
  };
  std::vector<Pending> pending;
  for (std::size_t k = 0; k < hs.maps.size(); ++k) {
    const MonotoneMap& h = hs.maps[k];
    for_each_monotone(
        h.dom(), xi,
        [&](const std::vector<Elem>& image) {
          std::size_t c = p.add(h.cod(), "s" + std::to_string(i + 1) + "_" + std::to_string(pending.size()));
          for (Elem a = 0; a < h.dom().size(); ++a) p.identify({0, image[a]}, {c, h(a)});
          pending.push_back({k, MonotoneMap::unchecked(h.dom(), xi, image), c});
          return true;
        },
        cap);
  }
  if (p.generator_count() > cap) throw Error(ErrorCode::size_cap_exceeded, "step_odd: stage exceeds the size cap");
  ColimitResult step = colimit(std::move(p));
  state.first_span.push_back(state.spans.size());
  for (auto& s : pending) {
    const MonotoneMap& h = hs.maps[s.h];
    SpanRecord record{i, s.h, std::move(s.f), step.injections[s.component], true};
    record.strict = compose(step.injections[0], record.f) == compose(record.glued, h);
    if (!record.strict) throw Error(ErrorCode::invariant_violation, "step_odd: pushout square does not commute");
    state.spans.push_back(std::move(record));
  }
  push_stage(state, std::move(step));
}

void step_even(ChainState& state, const MapClass& hs, std::size_t cap, bool saturate) {
  const std::size_t top = state.top();
  if (top % 2 != 1) throw Error(ErrorCode::invalid_argument, "step_even: top stage must be odd");
  const Poset& x = state.stages[top];
  GammaLog log;
  log.stage = top + 1;

  std::vector<std::optional<MonotoneMap>> into_top(top + 1);
  auto to_top = [&](std::size_t j) -> const MonotoneMap& {
    if (!into_top[j]) into_top[j] = state.connector(j, top);
    return *into_top[j];
  };

  struct Lifted {
    std::size_t h;
    std::vector<Elem> image;  // x_{j,top} . f
    Bitset hit;
    std::vector<std::vector<Elem>> glued;  // x_{j+1,top} . glued, per span
  };
  std::vector<Lifted> spans;
  {
    std::map<std::pair<std::size_t, std::vector<Elem>>, std::size_t> index;
    for (const SpanRecord& span : state.spans) {
      ++log.spans;
      auto image = compose(to_top(span.stage), span.f).image();
      auto [it, fresh] = index.try_emplace({span.h, image}, spans.size());
      if (fresh) spans.push_back({span.h, image, hs.maps[span.h].image_of(span.f.dom().all()), {}});
      spans[it->second].glued.push_back(compose(to_top(span.stage + 1), span.glued).image());
    }
  }

  // Pass 0 works in X_top itself. Later passes, when saturating, retake the
  // coinserters in the quotient so far and stop once nothing new is forced.
  std::vector<std::pair<Elem, Elem>> relations;
  MonotoneMap quotient = MonotoneMap::identity(x);
  for (std::size_t pass = 0;; ++pass) {
    const Poset& q = quotient.cod();
    std::vector<Elem> rep(q.size());
    for (Elem v = x.size(); v-- > 0;) rep[quotient(v)] = v;
    std::map<std::pair<std::size_t, std::vector<Elem>>, std::vector<const Lifted*>> groups;
    for (const Lifted& span : spans) {
      std::vector<Elem> image(span.image.size());
      for (std::size_t a = 0; a < image.size(); ++a) image[a] = quotient(span.image[a]);
      groups[{span.h, std::move(image)}].push_back(&span);
    }
    if (pass == 0) log.groups = groups.size();
    std::size_t added = 0;
    for (const auto& [key, members] : groups) {
      const MonotoneMap& h = hs.maps[key.first];
      const Poset& target = h.cod();
      std::vector<Bitset> domains(target.size(), q.all());
      for (Elem a = 0; a < h.dom().size(); ++a) {
        const Bitset& above = target.up(h(a));
        for (Elem t = above.find_first(); t != Bitset::npos; t = above.find_next(t)) domains[t] &= q.up(key.second[a]);
      }
      MonotoneSearch search(target, q, std::move(domains), cap);
      auto values = search.attainable();
      bool any = false;
      for (Elem t = 0; t < target.size(); ++t) {
        any = any || values[t].any();
        // glued . h = x . f, already below every g . h.
        if (members.front()->hit.test(t)) continue;
        auto lows = minimal(q, values[t]);
        for (const Lifted* span : members) {
          for (const auto& glued : span->glued) {
            Elem source = glued[t];
            for (Elem low : lows) {
              if (q.leq(quotient(source), low)) continue;
              relations.emplace_back(source, rep[low]);
              ++added;
            }
          }
        }
      }
      if (pass == 0 && any) ++log.trivial_coequifiers;
    }
    log.constraints += added;
    if (pass > 0) ++log.passes;
    if (!saturate || added == 0) break;
    Presentation p;
    p.add(x, "X" + std::to_string(top));
    for (auto [u, v] : relations) p.leq({0, u}, {0, v});
    quotient = colimit(std::move(p)).injections[0];
  }

  Presentation p;
  p.add(x, "X" + std::to_string(top));
  for (auto [u, v] : relations) p.leq({0, u}, {0, v});
  push_stage(state, colimit(std::move(p)));
  state.first_span.push_back(state.spans.size());
  state.gammas.push_back(log);
}

ReflectionResult reflect(const Poset& x, const MapClass& h, const ReflectOptions& options) {
  if (options.max_steps < 2 || options.max_steps % 2 != 0) {
    throw Error(ErrorCode::invalid_argument, "reflect: max_steps must be even and at least 2");
  }
  ReflectionResult result;
  result.trace = start_chain(x);
  ChainState& state = result.trace;
  for (std::size_t i = 0; i + 2 <= options.max_steps; i += 2) {
    step_odd(state, h, options.cap);
    step_even(state, h, options.cap, options.saturate_even);
    MonotoneMap next = state.connector(i, i + 2);
    if (next.is_isomorphism()) {
      result.converged = true;
      result.converged_at = i;
      result.embedding = MonotoneMap::identity(state.stages[i]);
      break;
    }
    if (i >= 2) {
      Bitset settled = state.connector(i - 2, i).image_of(state.stages[i - 2].all());
      if (next.image_of(settled) == next.image_of(state.stages[i].all()) &&
          restricts_to_embedding(next, settled)) {
        result.converged = true;
        result.converged_at = i;
        result.stable_image = true;
        result.embedding = subposet_inclusion(state.stages[i], settled);
        break;
      }
    }
  }
  result.stages_used = state.top();
  if (result.converged) {
    result.reflected = result.embedding.dom();
    std::vector<Elem> unit = state.connector(0, result.converged_at).image();
    for (Elem& y : unit) {
      y = static_cast<Elem>(std::distance(result.embedding.image().begin(),
                                          std::find(result.embedding.image().begin(), result.embedding.image().end(), y)));
    }
    result.unit = MonotoneMap::unchecked(state.stages[0], result.reflected, std::move(unit));
    if (!is_injective(result.reflected, h, options.cap).strong()) {
      throw Error(ErrorCode::invariant_violation, "reflect: converged stage is not strongly injective");
    }
  } else {
    result.omega = chain_colimit(state.stages, state.connectors);
    result.reflected = result.omega->object;
    result.unit = result.omega->injections[0];
  }
  return result;
}

MonotoneMap extend_along_unit(const MonotoneMap& p, const ReflectionResult& result, const MapClass& hs,
                              std::size_t cap) {
  if (!result.converged) throw Error(ErrorCode::not_converged, "extend_along_unit: reflection did not converge");
  const ChainState& state = result.trace;
  if (!(p.dom() == state.stages[0])) throw Error(ErrorCode::domain_mismatch, "extend_along_unit: p must start at X");
  const Poset& target = p.cod();
  if (!is_injective(target, hs, cap).strong()) {
    throw Error(ErrorCode::not_injective_target, "extend_along_unit: target is not strongly injective");
  }
  MonotoneMap current = p;
  for (std::size_t s = 0; s < result.converged_at; ++s) {
    const ColimitResult& step = state.steps[s];
    std::vector<MonotoneMap> legs{current};
    if (s % 2 == 0) {
      for (std::size_t k = 1; k < step.presentation.components.size(); ++k) {
        const SpanRecord& span = state.spans[state.first_span[s] + k - 1];
        const MonotoneMap& h = hs.maps[span.h];
        KanResult ext = left_kan(compose(current, span.f), h, KanMethod::automatic, cap);
        if (!ext.exists || !ext.strict) {
          throw Error(ErrorCode::not_injective_target, "extend_along_unit: missing strict extension in the target");
        }
        legs.push_back(*ext.extension);
      }
    }
    auto next = mediator(step, target, legs);
    if (!next) {
      throw Error(ErrorCode::quotient_violation,
                  "extend_along_unit: stage map does not descend to X" + std::to_string(s + 1));
    }
    current = std::move(*next);
  }
  current = compose(current, result.embedding);
  KanResult expected = left_kan(p, result.unit, KanMethod::automatic, cap);
  if (!expected.exists || !expected.strict || !(*expected.extension == current)) {
    throw Error(ErrorCode::invariant_violation, "extend_along_unit: induced map is not the strict extension p/d");
  }
  return current;
}

namespace {

bool has_lali_retraction(const MonotoneMap& d, std::size_t cap) {
  KanResult r = left_kan(MonotoneMap::identity(d.dom()), d, KanMethod::automatic, cap);
  if (!r.exists || !r.strict) return false;
  auto left = left_adjoint(d);
  return left && *left == *r.extension;
}

}  // namespace

KzReport kz_laws(const Poset& x, const MapClass& h, const KzOptions& options) {
  const std::size_t cap = options.reflect.cap;
  ReflectionResult r = reflect(x, h, options.reflect);
  if (!r.converged) throw Error(ErrorCode::not_converged, "kz_laws: reflection did not converge");
  KzReport report;
  const MonotoneMap& d = r.unit;

  report.unit_dense = is_dense(d, cap);
  if (!report.unit_dense) report.notes.push_back("unit is not dense");

  report.restriction_law = true;
  std::mt19937 rng(options.seed);
  for (const Poset& target : options.targets) {
    if (!is_injective(target, h, cap).strong()) continue;
    std::vector<std::vector<Elem>> sample;
    std::size_t seen = 0;
    for_each_monotone(
        r.reflected, target,
        [&](const std::vector<Elem>& image) {
          if (sample.size() < options.samples_per_target) {
            sample.push_back(image);
          } else {
            std::size_t slot = std::uniform_int_distribution<std::size_t>(0, seen)(rng);
            if (slot < sample.size()) sample[slot] = image;
          }
          ++seen;
          return true;
        },
        cap);
    for (auto& image : sample) {
      MonotoneMap f = MonotoneMap::unchecked(r.reflected, target, std::move(image));
      if (!is_injective_map(f, h, cap).strong()) continue;
      ++report.restriction_samples;
      KanResult back = left_kan(compose(f, d), d, KanMethod::automatic, cap);
      if (!back.exists || !(*back.extension == f)) {
        report.restriction_law = false;
        report.notes.push_back("(f.d)/d differs from f = " + describe(f));
      }
    }
  }

  report.object_strong = is_injective(x, h, cap).strong();
  report.lali_retraction = has_lali_retraction(d, cap);
  report.algebra_iff = report.object_strong == report.lali_retraction;
  if (!report.algebra_iff) report.notes.push_back("strong injectivity and the lali retraction disagree");

  if (r.reflected.size() > options.free_algebra_max_size) {
    report.notes.push_back("free-algebra check skipped: X* too large");
    return report;
  }
  report.free_algebra_checked = true;
  ReflectionResult again = reflect(r.reflected, h, options.reflect);
  report.free_algebra = again.converged && has_lali_retraction(again.unit, cap);
  if (report.free_algebra) {
    MonotoneMap id = MonotoneMap::identity(r.reflected);
    MonotoneMap structure = *left_kan(id, again.unit, KanMethod::automatic, cap).extension;
    report.free_algebra = is_injective_map(structure, h, cap).strong() && extend_along_unit(id, again, h, cap) == structure;
  }
  if (!report.free_algebra) report.notes.push_back("reflected object fails the free-algebra checks");
  return report;
}

}  // namespace kaninj
