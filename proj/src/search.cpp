#include "kaninj/search.hpp"

#include <functional>

namespace kaninj {

MonotoneSearch::MonotoneSearch(Poset a, Poset x, std::vector<Bitset> domains, std::size_t cap)
    : a_(std::move(a)), x_(std::move(x)), domains_(std::move(domains)), cap_(cap) {
  if (domains_.size() != a_.size()) throw Error(ErrorCode::invalid_argument, "one domain per element required");
  order_ = a_.linear_extension();
  covers_ = a_.covers();
  std::vector<std::size_t> parent(a_.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> root = [&](std::size_t i) {
    return parent[i] == i ? i : parent[i] = root(parent[i]);
  };
  forest_ = true;
  for (auto [lo, hi] : covers_) {
    auto r1 = root(lo), r2 = root(hi);
    if (r1 == r2) forest_ = false;
    else parent[r1] = r2;
  }
}

// Arc consistency along covers: every value must have a compatible value at
// each neighbour. Returns false when some domain empties.
bool MonotoneSearch::propagate(std::vector<Bitset>& domains) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [lo, hi] : covers_) {
      Bitset support_above(x_.size());
      for (Elem v = domains[lo].find_first(); v != Bitset::npos; v = domains[lo].find_next(v)) {
        support_above |= x_.up(v);
      }
      Bitset narrowed = domains[hi] & support_above;
      if (narrowed != domains[hi]) {
        domains[hi] = std::move(narrowed);
        changed = true;
      }
      Bitset support_below(x_.size());
      for (Elem w = domains[hi].find_first(); w != Bitset::npos; w = domains[hi].find_next(w)) {
        support_below |= x_.down(w);
      }
      narrowed = domains[lo] & support_below;
      if (narrowed != domains[lo]) {
        domains[lo] = std::move(narrowed);
        changed = true;
      }
      if (domains[lo].none() || domains[hi].none()) return false;
    }
  }
  for (const auto& d : domains) {
    if (d.none()) return false;
  }
  return true;
}

std::optional<std::vector<Elem>> MonotoneSearch::solve(std::vector<Bitset> domains) const {
  const std::size_t n = a_.size();
  if (!propagate(domains)) return std::nullopt;
  std::vector<Elem> image(n, 0);
  std::size_t nodes = 0;
  std::vector<std::pair<Elem, Bitset>> trail;

  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == n) return true;
    Elem a = order_[k];
    const Bitset choices = domains[a];
    for (Elem v = choices.find_first(); v != Bitset::npos; v = choices.find_next(v)) {
      if (++nodes > cap_) {
        throw Error(ErrorCode::size_cap_exceeded, "constraint search exceeded " + std::to_string(cap_) + " nodes");
      }
      const std::size_t mark = trail.size();
      bool ok = true;
      image[a] = v;
      trail.emplace_back(a, domains[a]);
      domains[a] = x_.none();
      domains[a].set(v);
      for (std::size_t j = k + 1; j < n && ok; ++j) {
        Elem b = order_[j];
        if (a_.leq(a, b)) {
          Bitset narrowed = domains[b] & x_.up(v);
          if (narrowed != domains[b]) {
            trail.emplace_back(b, domains[b]);
            domains[b] = std::move(narrowed);
          }
        } else if (a_.leq(b, a)) {
          Bitset narrowed = domains[b] & x_.down(v);
          if (narrowed != domains[b]) {
            trail.emplace_back(b, domains[b]);
            domains[b] = std::move(narrowed);
          }
        } else {
          continue;
        }
        ok = domains[b].any();
      }
      if (ok && rec(k + 1)) return true;
      while (trail.size() > mark) {
        domains[trail.back().first] = std::move(trail.back().second);
        trail.pop_back();
      }
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return image;
}

std::optional<std::vector<Elem>> MonotoneSearch::find() const { return solve(domains_); }

std::optional<std::vector<Elem>> MonotoneSearch::find_with(Elem at, Elem value) const {
  if (!domains_[at].test(value)) return std::nullopt;
  auto domains = domains_;
  domains[at] = x_.none();
  domains[at].set(value);
  return solve(std::move(domains));
}

std::vector<Bitset> MonotoneSearch::attainable() const {
  const std::size_t n = a_.size();
  std::vector<Bitset> seen(n, x_.none());
  auto domains = domains_;
  if (!propagate(domains)) return seen;
  // Arc consistency is exact when the cover graph has no cycles.
  if (forest_) return domains;
  auto mark = [&](const std::vector<Elem>& image) {
    for (Elem a = 0; a < n; ++a) seen[a].set(image[a]);
  };
  for (Elem a = 0; a < n; ++a) {
    for (Elem v = domains[a].find_first(); v != Bitset::npos; v = domains[a].find_next(v)) {
      if (seen[a].test(v)) continue;
      if (auto solution = find_with(a, v)) mark(*solution);
    }
  }
  return seen;
}

std::optional<std::vector<Elem>> MonotoneSearch::least() const {
  const std::size_t n = a_.size();
  auto values = attainable();
  std::vector<Elem> image(n);
  for (Elem a = 0; a < n; ++a) {
    auto low = x_.least_of(values[a]);
    if (!low) return std::nullopt;
    image[a] = *low;
  }
  // The pointwise minimum lies below every solution; it is the least one iff
  // it is itself a solution.
  for (Elem a = 0; a < n; ++a) {
    if (!domains_[a].test(image[a])) return std::nullopt;
    for (Elem b = a_.up(a).find_first(); b != Bitset::npos; b = a_.up(a).find_next(b)) {
      if (!x_.leq(image[a], image[b])) return std::nullopt;
    }
  }
  return image;
}

}  // namespace kaninj
