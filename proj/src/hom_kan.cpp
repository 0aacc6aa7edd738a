#include "kaninj/hom_kan.hpp"

#include "kaninj/search.hpp"

namespace kaninj {

namespace {

std::string image_label(const MonotoneMap& g) {
  std::string out = "[";
  for (Elem a = 0; a < g.dom().size(); ++a) {
    if (a) out += ",";
    out += g.cod().label(g(a));
  }
  return out + "]";
}

void require_same_domain(const MonotoneMap& f, const MonotoneMap& h) {
  if (!(f.dom() == h.dom())) {
    throw Error(ErrorCode::domain_mismatch, "left_kan: f and h must share their domain");
  }
}

// D(a') = intersection of up(f(a)) over a with h(a) <= a'.
std::vector<Bitset> kan_domains(const MonotoneMap& f, const MonotoneMap& h) {
  const Poset& target = h.cod();
  const Poset& x = f.cod();
  std::vector<Bitset> domains(target.size(), x.all());
  for (Elem a = 0; a < f.dom().size(); ++a) {
    const Bitset& above = target.up(h(a));
    for (Elem t = above.find_first(); t != Bitset::npos; t = above.find_next(t)) domains[t] &= x.up(f(a));
  }
  return domains;
}

KanResult finish(const MonotoneMap& f, const MonotoneMap& h, std::optional<MonotoneMap> g) {
  KanResult result;
  if (!g) return result;
  result.exists = true;
  result.strict = compose(*g, h) == f;
  result.extension = std::move(g);
  return result;
}

}  // namespace

std::optional<std::size_t> HomPoset::index_of(const std::vector<Elem>& image) const {
  auto it = index_.find(image);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

HomPoset hom_poset(const Poset& a, const Poset& x, std::size_t cap) {
  HomPoset hom;
  hom.source = a;
  hom.target = x;
  hom.maps = enumerate_monotone(a, x, cap);
  const std::size_t n = hom.maps.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  std::vector<Bitset> up(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(image_label(hom.maps[i]));
    hom.index_.emplace(hom.maps[i].image(), i);
    for (std::size_t j = 0; j < n; ++j) {
      if (hom.maps[i].leq(hom.maps[j])) up[i].set(j);
    }
  }
  hom.order = Poset::from_closed(std::move(labels), std::move(up));
  return hom;
}

Precomposition precompose(const MonotoneMap& h, const Poset& x, std::size_t cap) {
  HomPoset from = hom_poset(h.cod(), x, cap);
  HomPoset to = hom_poset(h.dom(), x, cap);
  std::vector<Elem> image;
  image.reserve(from.maps.size());
  for (const auto& g : from.maps) image.push_back(*to.index_of(compose(g, h).image()));
  MonotoneMap map = MonotoneMap::unchecked(from.order, to.order, std::move(image));
  return {std::move(from), std::move(to), std::move(map)};
}

MonotoneMap postcompose(const MonotoneMap& p, const HomPoset& from, const HomPoset& to) {
  if (!(p.dom() == from.target) || !(p.cod() == to.target) || !(from.source == to.source)) {
    throw Error(ErrorCode::not_composable, "postcompose: hom-posets do not match p");
  }
  std::vector<Elem> image;
  image.reserve(from.maps.size());
  for (const auto& g : from.maps) image.push_back(*to.index_of(compose(p, g).image()));
  return MonotoneMap::unchecked(from.order, to.order, std::move(image));
}

std::optional<MonotoneMap> pointwise_candidate(const MonotoneMap& f, const MonotoneMap& h) {
  require_same_domain(f, h);
  const Poset& target = h.cod();
  const Poset& x = f.cod();
  std::vector<Bitset> below(target.size(), x.none());
  for (Elem a = 0; a < f.dom().size(); ++a) {
    const Bitset& above = target.up(h(a));
    for (Elem t = above.find_first(); t != Bitset::npos; t = above.find_next(t)) below[t].set(f(a));
  }
  std::vector<Elem> image(target.size());
  for (Elem t = 0; t < target.size(); ++t) {
    auto j = x.join(below[t]);
    if (!j) return std::nullopt;
    image[t] = *j;
  }
  return MonotoneMap::unchecked(target, x, std::move(image));
}

KanResult left_kan(const MonotoneMap& f, const MonotoneMap& h, KanMethod method, std::size_t cap) {
  require_same_domain(f, h);
  switch (method) {
    case KanMethod::pointwise:
      return finish(f, h, pointwise_candidate(f, h));
    case KanMethod::automatic:
      if (auto g = pointwise_candidate(f, h)) return finish(f, h, std::move(g));
      [[fallthrough]];
    case KanMethod::search: {
      MonotoneSearch search(h.cod(), f.cod(), kan_domains(f, h), cap);
      auto image = search.least();
      if (!image) return {};
      return finish(f, h, MonotoneMap::unchecked(h.cod(), f.cod(), std::move(*image)));
    }
    case KanMethod::brute_force: {
      std::vector<MonotoneMap> above;
      for_each_monotone(
          h.cod(), f.cod(),
          [&](const std::vector<Elem>& image) {
            MonotoneMap g = MonotoneMap::unchecked(h.cod(), f.cod(), image);
            if (f.leq(compose(g, h))) above.push_back(std::move(g));
            return true;
          },
          cap);
      for (const auto& g : above) {
        bool least = true;
        for (const auto& other : above) {
          if (!g.leq(other)) {
            least = false;
            break;
          }
        }
        if (least) return finish(f, h, g);
      }
      return {};
    }
  }
  return {};
}

bool is_dense(const MonotoneMap& f, std::size_t cap) {
  auto result = left_kan(f, f, KanMethod::automatic, cap);
  return result.exists && result.extension->is_identity();
}

bool preserves_kan(const MonotoneMap& p, const MonotoneMap& h, std::size_t cap) {
  bool preserved = true;
  for_each_monotone(
      h.dom(), p.dom(),
      [&](const std::vector<Elem>& image) {
        MonotoneMap f = MonotoneMap::unchecked(h.dom(), p.dom(), image);
        auto before = left_kan(f, h, KanMethod::automatic, cap);
        auto after = left_kan(compose(p, f), h, KanMethod::automatic, cap);
        if (!before.exists || !after.exists) {
          throw Error(ErrorCode::not_injective_context,
                      "preserves_kan: some extension along h does not exist in the domain or codomain of p");
        }
        if (!(compose(p, *before.extension) == *after.extension)) preserved = false;
        return true;
      },
      cap);
  return preserved;
}

bool beck_chevalley(const MonotoneMap& p, const MonotoneMap& h, std::size_t cap) {
  Precomposition left = precompose(h, p.dom(), cap);
  Precomposition right = precompose(h, p.cod(), cap);
  auto ext_left = left_adjoint(left.map);
  auto ext_right = left_adjoint(right.map);
  if (!ext_left || !ext_right) {
    throw Error(ErrorCode::not_injective_context, "beck_chevalley: (-)/h is not defined on every map");
  }
  MonotoneMap post_source = postcompose(p, left.to, right.to);
  MonotoneMap post_target = postcompose(p, left.from, right.from);
  return compose(post_target, *ext_left) == compose(*ext_right, post_source);
}

}  // namespace kaninj
