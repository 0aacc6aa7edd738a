#include "kaninj/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "closure.hpp"

namespace kaninj {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::duplicate_label: return "DuplicateLabel";
    case ErrorCode::cycle_detected: return "CycleDetected";
    case ErrorCode::unknown_label: return "UnknownLabel";
    case ErrorCode::size_cap_exceeded: return "SizeCapExceeded";
    case ErrorCode::not_monotone: return "NotMonotone";
    case ErrorCode::domain_mismatch: return "DomainMismatch";
    case ErrorCode::not_parallel: return "NotParallel";
    case ErrorCode::invalid_two_cell: return "InvalidTwoCell";
    case ErrorCode::not_injective_context: return "NotInjectiveContext";
    case ErrorCode::not_injective_target: return "NotInjectiveTarget";
    case ErrorCode::quotient_violation: return "QuotientViolation";
    case ErrorCode::not_converged: return "NotConverged";
    case ErrorCode::not_lari: return "NotLari";
    case ErrorCode::not_composable: return "NotComposable";
    case ErrorCode::square_does_not_commute: return "SquareDoesNotCommute";
    case ErrorCode::invariant_violation: return "InvariantViolation";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

namespace {
std::atomic<std::size_t> g_size_cap{10'000'000};
}

std::size_t default_size_cap() { return g_size_cap.load(std::memory_order_relaxed); }
void set_default_size_cap(std::size_t cap) { g_size_cap.store(cap, std::memory_order_relaxed); }

// ---------------------------------------------------------------------------
// Poset

struct Poset::Data {
  std::vector<std::string> labels;
  std::vector<Bitset> up;
  std::vector<Bitset> down;
  std::unordered_map<std::string, Elem> index;
};

namespace {

std::shared_ptr<const Poset::Data> empty_data();

void check_unique(const std::vector<std::string>& labels) {
  std::set<std::string_view> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw Error(ErrorCode::duplicate_label, "label '" + l + "' repeats");
  }
}

}  // namespace

Poset::Poset() : data_(empty_data()) {}
Poset::Poset(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

namespace {
std::shared_ptr<const Poset::Data> empty_data() {
  static const auto data = std::make_shared<const Poset::Data>();
  return data;
}
}  // namespace

Poset Poset::from_closed(std::vector<std::string> labels, std::vector<Bitset> up) {
  const std::size_t n = labels.size();
  check_unique(labels);
  auto data = std::make_shared<Data>();
  data->down.assign(n, Bitset(n));
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = up[a].find_first(); b != Bitset::npos; b = up[a].find_next(b)) data->down[b].set(a);
  }
  for (Elem a = 0; a < n; ++a) data->index.emplace(labels[a], a);
  data->labels = std::move(labels);
  data->up = std::move(up);
  return Poset(std::move(data));
}

Poset Poset::from_pairs(std::vector<std::string> labels, const std::vector<std::pair<Elem, Elem>>& pairs) {
  const std::size_t n = labels.size();
  check_unique(labels);
  std::vector<std::vector<std::size_t>> adjacency(n);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw Error(ErrorCode::unknown_label, "relation index out of range");
    if (a != b) adjacency[a].push_back(b);
  }
  auto condensed = detail::condense(n, adjacency);
  if (condensed.count != n) {
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = a + 1; b < n; ++b) {
        if (condensed.component[a] == condensed.component[b]) {
          throw Error(ErrorCode::cycle_detected, "'" + labels[a] + "' and '" + labels[b] + "' are mutually related");
        }
      }
    }
  }
  // Without cycles every component is a single node and keeps its index.
  return from_closed(std::move(labels), std::move(condensed.reach));
}

std::size_t Poset::size() const noexcept { return data_->labels.size(); }
const std::string& Poset::label(Elem a) const { return data_->labels.at(a); }
const std::vector<std::string>& Poset::labels() const noexcept { return data_->labels; }

std::optional<Elem> Poset::index_of(std::string_view label) const {
  auto it = data_->index.find(std::string(label));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

const Bitset& Poset::up(Elem a) const { return data_->up[a]; }
const Bitset& Poset::down(Elem a) const { return data_->down[a]; }

Bitset Poset::all() const {
  Bitset b(size());
  b.set();
  return b;
}

Bitset Poset::none() const { return Bitset(size()); }

std::optional<Elem> Poset::least_of(const Bitset& candidates) const {
  for (Elem a = candidates.find_first(); a != Bitset::npos; a = candidates.find_next(a)) {
    if (candidates.is_subset_of(up(a))) return a;
  }
  return std::nullopt;
}

std::optional<Elem> Poset::greatest_of(const Bitset& candidates) const {
  for (Elem a = candidates.find_first(); a != Bitset::npos; a = candidates.find_next(a)) {
    if (candidates.is_subset_of(down(a))) return a;
  }
  return std::nullopt;
}

std::optional<Elem> Poset::join(const Bitset& subset) const {
  Bitset bounds = all();
  for (Elem a = subset.find_first(); a != Bitset::npos; a = subset.find_next(a)) bounds &= up(a);
  return least_of(bounds);
}

std::optional<Elem> Poset::meet(const Bitset& subset) const {
  Bitset bounds = all();
  for (Elem a = subset.find_first(); a != Bitset::npos; a = subset.find_next(a)) bounds &= down(a);
  return greatest_of(bounds);
}

std::optional<Elem> Poset::bottom() const { return least_of(all()); }
std::optional<Elem> Poset::top() const { return greatest_of(all()); }

Poset Poset::dual() const {
  auto data = std::make_shared<Data>(*data_);
  std::swap(data->up, data->down);
  return Poset(std::move(data));
}

Poset Poset::relabeled(std::vector<std::string> labels) const {
  if (labels.size() != size()) throw Error(ErrorCode::invalid_argument, "relabel size mismatch");
  return from_closed(std::move(labels), data_->up);
}

std::vector<std::pair<Elem, Elem>> Poset::covers() const {
  std::vector<std::pair<Elem, Elem>> out;
  const std::size_t n = size();
  for (Elem a = 0; a < n; ++a) {
    Bitset above = up(a);
    above.reset(a);
    for (Elem b = above.find_first(); b != Bitset::npos; b = above.find_next(b)) {
      Bitset between = above & down(b);
      between.reset(b);
      if (between.none()) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<std::pair<Elem, Elem>> Poset::strict_pairs() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < size(); ++a) {
    for (Elem b = up(a).find_first(); b != Bitset::npos; b = up(a).find_next(b)) {
      if (a != b) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<Elem> Poset::linear_extension() const {
  std::vector<Elem> order(size());
  std::iota(order.begin(), order.end(), Elem{0});
  std::stable_sort(order.begin(), order.end(),
                   [this](Elem a, Elem b) { return down(a).count() < down(b).count(); });
  return order;
}

bool operator==(const Poset& lhs, const Poset& rhs) {
  if (lhs.data_ == rhs.data_) return true;
  return lhs.data_->labels == rhs.data_->labels && lhs.data_->up == rhs.data_->up;
}

// ---------------------------------------------------------------------------
// MonotoneMap

MonotoneMap::MonotoneMap(Poset dom, Poset cod, std::vector<Elem> image)
    : MonotoneMap(std::move(dom), std::move(cod), std::move(image), true) {}

MonotoneMap::MonotoneMap(Poset dom, Poset cod, std::vector<Elem> image, bool check)
    : dom_(std::move(dom)), cod_(std::move(cod)), image_(std::move(image)) {
  if (!check) return;
  if (image_.size() != dom_.size()) throw Error(ErrorCode::not_monotone, "assignment is not total");
  for (Elem v : image_) {
    if (v >= cod_.size()) throw Error(ErrorCode::not_monotone, "assignment leaves the codomain");
  }
  for (Elem a = 0; a < dom_.size(); ++a) {
    for (Elem b = dom_.up(a).find_first(); b != Bitset::npos; b = dom_.up(a).find_next(b)) {
      if (!cod_.leq(image_[a], image_[b])) {
        throw Error(ErrorCode::not_monotone,
                    "'" + dom_.label(a) + "' <= '" + dom_.label(b) + "' is not preserved");
      }
    }
  }
}

MonotoneMap MonotoneMap::identity(const Poset& p) {
  std::vector<Elem> image(p.size());
  std::iota(image.begin(), image.end(), Elem{0});
  return MonotoneMap(p, p, std::move(image), false);
}

MonotoneMap MonotoneMap::constant(const Poset& dom, const Poset& cod, Elem value) {
  if (value >= cod.size()) throw Error(ErrorCode::invalid_argument, "constant value out of range");
  return MonotoneMap(dom, cod, std::vector<Elem>(dom.size(), value), false);
}

MonotoneMap MonotoneMap::unchecked(Poset dom, Poset cod, std::vector<Elem> image) {
  return MonotoneMap(std::move(dom), std::move(cod), std::move(image), false);
}

MonotoneMap MonotoneMap::from_labels(const Poset& dom, const Poset& cod,
                                     const std::vector<std::pair<std::string, std::string>>& assignment) {
  constexpr Elem unset = static_cast<Elem>(-1);
  std::vector<Elem> image(dom.size(), unset);
  for (const auto& [from, to] : assignment) {
    auto a = dom.index_of(from);
    auto b = cod.index_of(to);
    if (!a) throw Error(ErrorCode::unknown_label, "'" + from + "' is not in the domain");
    if (!b) throw Error(ErrorCode::unknown_label, "'" + to + "' is not in the codomain");
    image[*a] = *b;
  }
  for (Elem a = 0; a < dom.size(); ++a) {
    if (image[a] == unset) throw Error(ErrorCode::not_monotone, "'" + dom.label(a) + "' is not assigned");
  }
  return MonotoneMap(dom, cod, std::move(image));
}

bool MonotoneMap::leq(const MonotoneMap& other) const {
  for (Elem a = 0; a < image_.size(); ++a) {
    if (!cod_.leq(image_[a], other.image_[a])) return false;
  }
  return true;
}

bool MonotoneMap::is_identity() const {
  if (!(dom_ == cod_)) return false;
  for (Elem a = 0; a < image_.size(); ++a) {
    if (image_[a] != a) return false;
  }
  return true;
}

bool MonotoneMap::is_injective() const {
  Bitset hit(cod_.size());
  for (Elem v : image_) {
    if (hit.test(v)) return false;
    hit.set(v);
  }
  return true;
}

bool MonotoneMap::is_surjective() const {
  Bitset hit(cod_.size());
  for (Elem v : image_) hit.set(v);
  return hit.all();
}

bool MonotoneMap::is_order_embedding() const {
  for (Elem a = 0; a < dom_.size(); ++a) {
    for (Elem b = 0; b < dom_.size(); ++b) {
      if (cod_.leq(image_[a], image_[b]) != dom_.leq(a, b)) return false;
    }
  }
  return true;
}

bool MonotoneMap::is_isomorphism() const {
  return dom_.size() == cod_.size() && is_injective() && is_order_embedding();
}

bool MonotoneMap::parallel_to(const MonotoneMap& other) const {
  return dom_ == other.dom_ && cod_ == other.cod_;
}

Bitset MonotoneMap::image_of(const Bitset& subset) const {
  Bitset out(cod_.size());
  for (Elem a = subset.find_first(); a != Bitset::npos; a = subset.find_next(a)) out.set(image_[a]);
  return out;
}

MonotoneMap MonotoneMap::dual() const { return MonotoneMap(dom_.dual(), cod_.dual(), image_, false); }

bool operator==(const MonotoneMap& lhs, const MonotoneMap& rhs) {
  return lhs.image_ == rhs.image_ && lhs.dom_ == rhs.dom_ && lhs.cod_ == rhs.cod_;
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (!(f.cod() == g.dom())) throw Error(ErrorCode::not_composable, "codomain and domain differ");
  std::vector<Elem> image(f.dom().size());
  for (Elem a = 0; a < image.size(); ++a) image[a] = g(f(a));
  return MonotoneMap::unchecked(f.dom(), g.cod(), std::move(image));
}

TwoCell::TwoCell(MonotoneMap src, MonotoneMap tgt) : src_(std::move(src)), tgt_(std::move(tgt)) {
  if (!src_.parallel_to(tgt_)) throw Error(ErrorCode::not_parallel, "2-cell boundary maps are not parallel");
  if (!src_.leq(tgt_)) throw Error(ErrorCode::invalid_two_cell, "source is not pointwise below target");
}

std::optional<TwoCell> TwoCell::between(const MonotoneMap& src, const MonotoneMap& tgt) {
  if (!src.parallel_to(tgt) || !src.leq(tgt)) return std::nullopt;
  return TwoCell(src, tgt);
}

// ---------------------------------------------------------------------------
// Construction helpers

namespace {

std::map<std::string, Elem> label_index(const std::vector<std::string>& labels) {
  std::map<std::string, Elem> index;
  for (Elem i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], i).second) {
      throw Error(ErrorCode::duplicate_label, "label '" + labels[i] + "' repeats");
    }
  }
  return index;
}

std::vector<std::pair<Elem, Elem>> resolve(const std::map<std::string, Elem>& index,
                                           const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<std::pair<Elem, Elem>> out;
  out.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw Error(ErrorCode::unknown_label, "'" + a + "' is not an element");
    if (ib == index.end()) throw Error(ErrorCode::unknown_label, "'" + b + "' is not an element");
    out.emplace_back(ia->second, ib->second);
  }
  return out;
}

}  // namespace

Poset build_poset(const std::vector<std::string>& labels,
                  const std::vector<std::pair<std::string, std::string>>& pairs) {
  auto index = label_index(labels);
  return Poset::from_pairs(labels, resolve(index, pairs));
}

Collapse preorder_collapse_indexed(const std::vector<std::string>& labels,
                                   const std::vector<std::pair<Elem, Elem>>& pairs) {
  const std::size_t n = labels.size();
  std::vector<std::vector<std::size_t>> adjacency(n);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw Error(ErrorCode::unknown_label, "relation index out of range");
    if (a != b) adjacency[a].push_back(b);
  }
  auto condensed = detail::condense(n, adjacency);
  Collapse out;
  out.class_of = condensed.component;
  out.members.assign(condensed.count, {});
  std::vector<std::string> class_labels(condensed.count);
  for (Elem a = 0; a < n; ++a) {
    auto& m = out.members[condensed.component[a]];
    if (m.empty()) class_labels[condensed.component[a]] = labels[a];
    m.push_back(labels[a]);
  }
  out.quotient = Poset::from_closed(std::move(class_labels), std::move(condensed.reach));
  return out;
}

Collapse preorder_collapse(const std::vector<std::string>& labels,
                           const std::vector<std::pair<std::string, std::string>>& pairs) {
  auto index = label_index(labels);
  return preorder_collapse_indexed(labels, resolve(index, pairs));
}

// ---------------------------------------------------------------------------
// Enumeration

void for_each_monotone(const Poset& a, const Poset& x,
                       const std::function<bool(const std::vector<Elem>&)>& visit, std::size_t cap) {
  const std::size_t n = a.size();
  std::vector<std::vector<Elem>> below(n), above(n);
  for (Elem k = 0; k < n; ++k) {
    for (Elem j = 0; j < k; ++j) {
      if (a.leq(j, k)) below[k].push_back(j);
      if (a.leq(k, j)) above[k].push_back(j);
    }
  }
  std::vector<Elem> image(n, 0);
  std::size_t nodes = 0;
  bool stop = false;

  std::function<void(Elem)> rec = [&](Elem k) {
    if (stop) return;
    if (k == n) {
      if (!visit(image)) stop = true;
      return;
    }
    Bitset allowed = x.all();
    for (Elem j : below[k]) allowed &= x.up(image[j]);
    for (Elem j : above[k]) allowed &= x.down(image[j]);
    for (Elem v = allowed.find_first(); v != Bitset::npos && !stop; v = allowed.find_next(v)) {
      if (++nodes > cap) {
        throw Error(ErrorCode::size_cap_exceeded, "monotone map search exceeded " + std::to_string(cap) + " nodes");
      }
      image[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
}

std::vector<MonotoneMap> enumerate_monotone(const Poset& a, const Poset& x, std::size_t cap) {
  std::vector<MonotoneMap> out;
  for_each_monotone(
      a, x,
      [&](const std::vector<Elem>& image) {
        out.push_back(MonotoneMap::unchecked(a, x, image));
        return true;
      },
      cap);
  return out;
}

// ---------------------------------------------------------------------------
// Adjoints

std::optional<MonotoneMap> right_adjoint(const MonotoneMap& m) {
  const Poset& dom = m.dom();
  const Poset& cod = m.cod();
  std::vector<Elem> image(cod.size());
  for (Elem b = 0; b < cod.size(); ++b) {
    // r(b) is the greatest a with m(a) <= b.
    Bitset preimage(dom.size());
    for (Elem a = 0; a < dom.size(); ++a) {
      if (cod.leq(m(a), b)) preimage.set(a);
    }
    auto greatest = dom.greatest_of(preimage);
    if (!greatest) return std::nullopt;
    image[b] = *greatest;
  }
  return MonotoneMap::unchecked(cod, dom, std::move(image));
}

std::optional<MonotoneMap> left_adjoint(const MonotoneMap& m) {
  const Poset& dom = m.dom();
  const Poset& cod = m.cod();
  std::vector<Elem> image(cod.size());
  for (Elem b = 0; b < cod.size(); ++b) {
    // t(b) is the least a with b <= m(a).
    Bitset preimage(dom.size());
    for (Elem a = 0; a < dom.size(); ++a) {
      if (cod.leq(b, m(a))) preimage.set(a);
    }
    auto least = dom.least_of(preimage);
    if (!least) return std::nullopt;
    image[b] = *least;
  }
  return MonotoneMap::unchecked(cod, dom, std::move(image));
}

AdjointFlags classify_adjoint(const MonotoneMap& m) {
  AdjointFlags flags;
  if (auto r = right_adjoint(m)) {
    flags.is_lari = compose(*r, m).is_identity();
    flags.is_lali = compose(m, *r).is_identity();
  }
  if (auto t = left_adjoint(m)) {
    flags.is_rali = compose(m, *t).is_identity();
    flags.is_rari = compose(*t, m).is_identity();
  }
  return flags;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

std::vector<std::uint64_t> signatures(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::uint64_t> sig(n);
  for (Elem a = 0; a < n; ++a) sig[a] = (p.down(a).count() << 32) | p.up(a).count();
  // Two refinement rounds: fold in the sorted signatures of the up- and down-sets.
  for (int round = 0; round < 2; ++round) {
    std::vector<std::uint64_t> next(n);
    for (Elem a = 0; a < n; ++a) {
      std::vector<std::uint64_t> ups, downs;
      for (Elem b = 0; b < n; ++b) {
        if (b == a) continue;
        if (p.leq(a, b)) ups.push_back(sig[b]);
        if (p.leq(b, a)) downs.push_back(sig[b]);
      }
      std::sort(ups.begin(), ups.end());
      std::sort(downs.begin(), downs.end());
      std::uint64_t h = sig[a] * 0x9E3779B97F4A7C15ULL;
      for (auto v : ups) h = (h ^ v) * 0x100000001B3ULL + 1;
      h ^= 0xABCDEF;
      for (auto v : downs) h = (h ^ v) * 0x100000001B3ULL + 7;
      next[a] = h;
    }
    sig = std::move(next);
  }
  return sig;
}

}  // namespace

MonotoneMap subposet_inclusion(const Poset& x, const Bitset& subset) {
  std::vector<Elem> members;
  for (Elem a = subset.find_first(); a != Bitset::npos; a = subset.find_next(a)) members.push_back(a);
  std::vector<std::string> labels;
  std::vector<Bitset> up(members.size(), Bitset(members.size()));
  for (std::size_t i = 0; i < members.size(); ++i) {
    labels.push_back(x.label(members[i]));
    for (std::size_t j = 0; j < members.size(); ++j) up[i][j] = x.leq(members[i], members[j]);
  }
  return MonotoneMap::unchecked(Poset::from_closed(std::move(labels), std::move(up)), x, std::move(members));
}

std::optional<MonotoneMap> find_isomorphism(const Poset& p, const Poset& q) {
  const std::size_t n = p.size();
  if (q.size() != n) return std::nullopt;
  auto sp = signatures(p);
  auto sq = signatures(q);
  {
    auto a = sp, b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::map<std::uint64_t, std::vector<Elem>> candidates;
  for (Elem b = 0; b < n; ++b) candidates[sq[b]].push_back(b);
  // Rarest signatures first.
  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), Elem{0});
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) {
    return candidates[sp[a]].size() < candidates[sp[b]].size();
  });

  constexpr Elem unset = static_cast<Elem>(-1);
  std::vector<Elem> image(n, unset);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) return true;
    Elem a = order[k];
    for (Elem b : candidates[sp[a]]) {
      if (used[b]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        Elem a2 = order[j];
        Elem b2 = image[a2];
        ok = p.leq(a, a2) == q.leq(b, b2) && p.leq(a2, a) == q.leq(b2, b);
      }
      if (!ok) continue;
      image[a] = b;
      used[b] = true;
      if (rec(k + 1)) return true;
      used[b] = false;
      image[a] = unset;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return MonotoneMap::unchecked(p, q, std::move(image));
}

// ---------------------------------------------------------------------------
// Products and enumeration of small posets

Product product(const Poset& p, const Poset& q) {
  const std::size_t n = p.size() * q.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Elem a = 0; a < p.size(); ++a) {
    for (Elem b = 0; b < q.size(); ++b) labels.push_back("(" + p.label(a) + "," + q.label(b) + ")");
  }
  std::vector<Bitset> up(n, Bitset(n));
  for (Elem a = 0; a < p.size(); ++a) {
    for (Elem b = 0; b < q.size(); ++b) {
      for (Elem c = 0; c < p.size(); ++c) {
        if (!p.leq(a, c)) continue;
        for (Elem d = 0; d < q.size(); ++d) {
          if (q.leq(b, d)) up[a * q.size() + b].set(c * q.size() + d);
        }
      }
    }
  }
  Poset object = Poset::from_closed(std::move(labels), std::move(up));
  std::vector<Elem> first(n), second(n);
  for (Elem i = 0; i < n; ++i) {
    first[i] = i / q.size();
    second[i] = i % q.size();
  }
  return Product{object, MonotoneMap::unchecked(object, p, std::move(first)),
                 MonotoneMap::unchecked(object, q, std::move(second))};
}

std::vector<Poset> enumerate_posets(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));

  std::vector<Poset> reps;
  std::map<std::vector<std::uint64_t>, std::vector<std::size_t>> buckets;

  // Natural labelings: element k is added above a down-closed subset of 0..k-1.
  std::vector<Bitset> down;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) {
      std::vector<Bitset> up(n, Bitset(n));
      for (Elem b = 0; b < n; ++b) {
        for (Elem a = down[b].find_first(); a != Bitset::npos; a = down[b].find_next(a)) up[a].set(b);
      }
      Poset candidate = Poset::from_closed(labels, std::move(up));
      auto sig = signatures(candidate);
      std::sort(sig.begin(), sig.end());
      auto& bucket = buckets[sig];
      for (std::size_t r : bucket) {
        if (isomorphic(reps[r], candidate)) return;
      }
      bucket.push_back(reps.size());
      reps.push_back(std::move(candidate));
      return;
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      Bitset below(n);
      for (Elem j = 0; j < k; ++j) {
        if (mask & (std::uint64_t{1} << j)) below.set(j);
      }
      bool closed = true;
      for (Elem j = below.find_first(); j != Bitset::npos && closed; j = below.find_next(j)) {
        closed = down[j].is_subset_of(below);
      }
      if (!closed) continue;
      below.set(k);
      down.push_back(below);
      rec(k + 1);
      down.pop_back();
    }
  };
  rec(0);
  return reps;
}

std::vector<Poset> enumerate_posets_up_to(std::size_t n) {
  std::vector<Poset> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto level = enumerate_posets(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Named posets and maps

namespace posets {

Poset empty() { return Poset(); }

Poset one() { return Poset::from_pairs({"*"}, {}); }

Poset chain(std::size_t n) {
  std::vector<std::string> labels;
  if (n == 2) {
    labels = {"low", "high"};
  } else {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
  }
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Poset::from_pairs(std::move(labels), pairs);
}

Poset antichain(std::size_t n) {
  std::vector<std::string> labels;
  if (n == 2) {
    labels = {"a", "b"};
  } else {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  }
  return Poset::from_pairs(std::move(labels), {});
}

Poset vee() { return Poset::from_pairs({"a", "b", "top"}, {{0, 2}, {1, 2}}); }

Poset diamond() { return Poset::from_pairs({"bot", "a", "b", "top"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

}  // namespace posets

namespace maps {

MonotoneMap h_bottom() { return MonotoneMap::unchecked(posets::empty(), posets::one(), {}); }

MonotoneMap h_join() { return MonotoneMap::unchecked(posets::antichain(2), posets::vee(), {0, 1}); }

}  // namespace maps

std::string describe(const MonotoneMap& m) {
  std::ostringstream out;
  out << "{";
  for (Elem a = 0; a < m.dom().size(); ++a) {
    if (a) out << ", ";
    out << m.dom().label(a) << "->" << m.cod().label(m(a));
  }
  out << "}";
  return out.str();
}

}  // namespace kaninj
