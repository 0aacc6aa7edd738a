#pragma once

// Brute-force reference implementations. They only use Poset::size/leq and
// plain loops over all functions, so they share no code path with the
// library's searches, closures or adjoint routines.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "kaninj/poset.hpp"

namespace oracle {

using kaninj::Elem;
using kaninj::Poset;
using Image = std::vector<Elem>;

inline bool monotone(const Poset& a, const Poset& x, const Image& f) {
  for (Elem i = 0; i < a.size(); ++i)
    for (Elem j = 0; j < a.size(); ++j)
      if (a.leq(i, j) && !x.leq(f[i], f[j])) return false;
  return true;
}

// Every function A -> X in odometer order, filtered for monotonicity.
inline std::vector<Image> all_monotone(const Poset& a, const Poset& x) {
  std::vector<Image> out;
  const std::size_t n = a.size(), m = x.size();
  if (n == 0) return {Image{}};
  if (m == 0) return out;
  Image f(n, 0);
  while (true) {
    if (monotone(a, x, f)) out.push_back(f);
    std::size_t k = 0;
    while (k < n && ++f[k] == m) f[k++] = 0;
    if (k == n) break;
  }
  return out;
}

inline bool leq(const Poset& x, const Image& f, const Image& g) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!x.leq(f[i], g[i])) return false;
  return true;
}

inline Image compose(const Image& g, const Image& f) {
  Image out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
  return out;
}

inline Image identity(std::size_t n) {
  Image out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

inline std::optional<Image> least(const Poset& x, const std::vector<Image>& set) {
  for (const auto& g : set) {
    bool below_all = true;
    for (const auto& other : set)
      if (!leq(x, g, other)) {
        below_all = false;
        break;
      }
    if (below_all) return g;
  }
  return std::nullopt;
}

// Least g: A' -> X with f <= g . h.
inline std::optional<Image> left_kan(const Poset& a_prime, const Poset& x, const Image& f, const Image& h) {
  std::vector<Image> above;
  for (const auto& g : all_monotone(a_prime, x))
    if (leq(x, f, compose(g, h))) above.push_back(g);
  return least(x, above);
}

// r with m(a) <= b <=> a <= r(b), searched over all monotone maps.
inline std::optional<Image> right_adjoint(const Poset& a, const Poset& b, const Image& m) {
  for (const auto& r : all_monotone(b, a)) {
    bool ok = true;
    for (Elem i = 0; i < a.size() && ok; ++i)
      for (Elem j = 0; j < b.size() && ok; ++j) ok = b.leq(m[i], j) == a.leq(i, r[j]);
    if (ok) return r;
  }
  return std::nullopt;
}

// t with t(b) <= a <=> b <= m(a).
inline std::optional<Image> left_adjoint(const Poset& a, const Poset& b, const Image& m) {
  for (const auto& t : all_monotone(b, a)) {
    bool ok = true;
    for (Elem i = 0; i < a.size() && ok; ++i)
      for (Elem j = 0; j < b.size() && ok; ++j) ok = a.leq(t[j], i) == b.leq(j, m[i]);
    if (ok) return t;
  }
  return std::nullopt;
}

// Order isomorphism by trying every permutation.
inline bool isomorphic(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return false;
  Image perm = identity(p.size());
  do {
    bool ok = true;
    for (Elem i = 0; i < p.size() && ok; ++i)
      for (Elem j = 0; j < p.size() && ok; ++j) ok = p.leq(i, j) == q.leq(perm[i], perm[j]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Backtracking over monotone maps A -> X, assigning elements in index order
// and pruning the values left to later elements after each assignment;
// allowed[a] lists the values a may take (empty list: no restriction).
// visit returns false to stop.
inline void each_monotone(const Poset& a, const Poset& x, const std::vector<std::vector<Elem>>& allowed,
                          const std::function<bool(const Image&)>& visit) {
  const std::size_t n = a.size();
  if (n > 0 && x.size() == 0) return;
  std::vector<std::vector<Elem>> start(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!allowed.empty() && !allowed[i].empty()) {
      start[i] = allowed[i];
    } else {
      for (Elem v = 0; v < x.size(); ++v) start[i].push_back(v);
    }
  }
  Image f(n, 0);
  bool stop = false;
  std::function<void(std::size_t, const std::vector<std::vector<Elem>>&)> go =
      [&](std::size_t k, const std::vector<std::vector<Elem>>& domains) {
        if (k == n) {
          if (!visit(f)) stop = true;
          return;
        }
        for (Elem v : domains[k]) {
          std::vector<std::vector<Elem>> next(domains);
          bool dead = false;
          for (std::size_t j = k + 1; j < n && !dead; ++j) {
            if (!a.leq(k, j) && !a.leq(j, k)) continue;
            std::vector<Elem> kept;
            for (Elem w : next[j])
              if ((!a.leq(k, j) || x.leq(v, w)) && (!a.leq(j, k) || x.leq(w, v))) kept.push_back(w);
            dead = kept.empty();
            next[j] = std::move(kept);
          }
          if (dead) continue;
          f[k] = v;
          go(k + 1, next);
          if (stop) return;
        }
      };
  go(0, start);
}

// Least g: A' -> X with f <= g . h, by backtracking: probe which values each
// element can take in some solution; the least map is the pointwise least
// attainable value when that is itself a solution.
inline std::optional<Image> least_extension(const Poset& a_prime, const Poset& x, const Image& f, const Image& h) {
  std::vector<std::vector<Elem>> allowed(a_prime.size());
  for (Elem b = 0; b < a_prime.size(); ++b) {
    for (Elem v = 0; v < x.size(); ++v) {
      bool ok = true;
      for (Elem i = 0; i < f.size() && ok; ++i)
        if (h[i] == b && !x.leq(f[i], v)) ok = false;
      if (ok) allowed[b].push_back(v);
    }
    if (allowed[b].empty()) return std::nullopt;
  }
  auto solvable = [&](const std::vector<std::vector<Elem>>& domains) {
    bool found = false;
    each_monotone(a_prime, x, domains, [&](const Image&) {
      found = true;
      return false;
    });
    return found;
  };
  if (a_prime.size() == 0) return Image{};
  if (!solvable(allowed)) return std::nullopt;
  Image g(a_prime.size());
  for (Elem b = 0; b < a_prime.size(); ++b) {
    std::vector<Elem> attained;
    for (Elem v : allowed[b]) {
      auto probe = allowed;
      probe[b] = {v};
      if (solvable(probe)) attained.push_back(v);
    }
    std::optional<Elem> low;
    for (Elem v : attained) {
      bool below = true;
      for (Elem w : attained)
        if (!x.leq(v, w)) below = false;
      if (below) low = v;
    }
    if (!low) return std::nullopt;
    g[b] = *low;
  }
  if (!monotone(a_prime, x, g)) return std::nullopt;
  return g;
}

// A map of the class as plain data.
struct Arrow {
  Poset dom, cod;
  Image image;
};

// Per (arrow, f) the least extension, if any; f enumerated by backtracking.
struct Table {
  bool weak = true;
  bool strong = true;
  std::vector<std::map<Image, std::optional<Image>>> rows;
};

inline Table extensions(const Poset& x, const std::vector<Arrow>& h) {
  Table t;
  for (const auto& m : h) {
    t.rows.emplace_back();
    each_monotone(m.dom, x, {}, [&](const Image& f) {
      auto g = least_extension(m.cod, x, f, m.image);
      if (!g) {
        t.weak = t.strong = false;
      } else if (compose(*g, m.image) != f) {
        t.strong = false;
      }
      t.rows.back().emplace(f, g);
      return true;
    });
  }
  return t;
}

// p: X -> Y carries every extension of `from` to the matching one in `to`.
inline bool preserves(const Image& p, const Table& from, const Table& to) {
  for (std::size_t k = 0; k < from.rows.size(); ++k)
    for (const auto& [f, g] : from.rows[k]) {
      if (!g) continue;
      const auto& pg = to.rows[k].at(compose(p, f));
      if (!pg || *pg != compose(p, *g)) return false;
    }
  return true;
}

// t(y) = least x with y <= m(x), when that is a left adjoint of m: A -> B.
inline std::optional<Image> left_adjoint_pointwise(const Poset& a, const Poset& b, const Image& m) {
  Image t(b.size());
  for (Elem y = 0; y < b.size(); ++y) {
    std::optional<Elem> low;
    for (Elem x = 0; x < a.size(); ++x) {
      if (!b.leq(y, m[x])) continue;
      bool least = true;
      for (Elem z = 0; z < a.size() && least; ++z)
        if (b.leq(y, m[z]) && !a.leq(x, z)) least = false;
      if (least) low = x;
    }
    if (!low) return std::nullopt;
    t[y] = *low;
  }
  for (Elem y = 0; y < b.size(); ++y)
    for (Elem x = 0; x < a.size(); ++x)
      if (a.leq(t[y], x) != b.leq(y, m[x])) return std::nullopt;
  return t;
}

}  // namespace oracle
