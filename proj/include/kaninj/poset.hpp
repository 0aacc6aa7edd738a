#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "kaninj/error.hpp"

namespace kaninj {

using Bitset = boost::dynamic_bitset<std::uint64_t>;
using Elem = std::size_t;

/// Process-wide default for the number of search nodes any enumeration may
/// visit before it gives up with `size_cap_exceeded`.
std::size_t default_size_cap();
void set_default_size_cap(std::size_t cap);

/// Finite partial order. Elements are indices `0..size()-1` carrying unique
/// labels; the order is stored fully closed as one up-set and one down-set
/// bitset per element. Copies share the same immutable storage.
class Poset {
 public:
  Poset();

  /// Reflexive-transitive closure of `pairs` (index pairs a <= b). Throws
  /// `cycle_detected` if the closure is not antisymmetric and
  /// `duplicate_label` if labels repeat.
  static Poset from_pairs(std::vector<std::string> labels,
                          const std::vector<std::pair<Elem, Elem>>& pairs);

  /// Trusted constructor: `up[a]` must already be the closed up-set of `a`.
  static Poset from_closed(std::vector<std::string> labels, std::vector<Bitset> up);

  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  const std::string& label(Elem a) const;
  const std::vector<std::string>& labels() const noexcept;
  std::optional<Elem> index_of(std::string_view label) const;

  bool leq(Elem a, Elem b) const { return up(a).test(b); }
  bool less(Elem a, Elem b) const { return a != b && leq(a, b); }
  bool comparable(Elem a, Elem b) const { return leq(a, b) || leq(b, a); }
  const Bitset& up(Elem a) const;
  const Bitset& down(Elem a) const;
  Bitset all() const;
  Bitset none() const;

  /// Least element of `candidates`, if it has one.
  std::optional<Elem> least_of(const Bitset& candidates) const;
  std::optional<Elem> greatest_of(const Bitset& candidates) const;
  /// Least upper bound of `subset` (the empty join is the bottom element).
  std::optional<Elem> join(const Bitset& subset) const;
  std::optional<Elem> meet(const Bitset& subset) const;
  std::optional<Elem> bottom() const;
  std::optional<Elem> top() const;

  Poset dual() const;
  Poset relabeled(std::vector<std::string> labels) const;
  /// Hasse diagram edges (a, b) with a covered by b.
  std::vector<std::pair<Elem, Elem>> covers() const;
  /// All strict pairs a < b in index order.
  std::vector<std::pair<Elem, Elem>> strict_pairs() const;
  /// Element indices sorted so that a < b implies a precedes b.
  std::vector<Elem> linear_extension() const;

  /// Structural equality: same labels in the same order, same relation.
  friend bool operator==(const Poset& lhs, const Poset& rhs);
  bool same_storage(const Poset& other) const noexcept { return data_ == other.data_; }

  struct Data;

 private:
  explicit Poset(std::shared_ptr<const Data> data);
  std::shared_ptr<const Data> data_;
};

/// Order-preserving function between posets.
class MonotoneMap {
 public:
  /// The empty map between empty posets.
  MonotoneMap() = default;
  /// Validates totality and monotonicity (`not_monotone`).
  MonotoneMap(Poset dom, Poset cod, std::vector<Elem> image);
  static MonotoneMap identity(const Poset& p);
  static MonotoneMap constant(const Poset& dom, const Poset& cod, Elem value);
  /// Skips validation. Callers guarantee the invariants.
  static MonotoneMap unchecked(Poset dom, Poset cod, std::vector<Elem> image);
  /// Builds a map from label assignments; every dom label must be mapped.
  static MonotoneMap from_labels(const Poset& dom, const Poset& cod,
                                 const std::vector<std::pair<std::string, std::string>>& assignment);

  const Poset& dom() const noexcept { return dom_; }
  const Poset& cod() const noexcept { return cod_; }
  const std::vector<Elem>& image() const noexcept { return image_; }
  Elem operator()(Elem a) const { return image_[a]; }

  /// Pointwise order on parallel maps.
  bool leq(const MonotoneMap& other) const;
  bool is_identity() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_order_embedding() const;
  /// Bijective and order-reflecting.
  bool is_isomorphism() const;
  bool parallel_to(const MonotoneMap& other) const;
  /// Forward image of a subset of the domain.
  Bitset image_of(const Bitset& subset) const;

  MonotoneMap dual() const;

  friend bool operator==(const MonotoneMap& lhs, const MonotoneMap& rhs);

 private:
  MonotoneMap(Poset dom, Poset cod, std::vector<Elem> image, bool check);
  Poset dom_;
  Poset cod_;
  std::vector<Elem> image_;
};

/// g after f.
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);
/// The induced order on `subset`, as its inclusion into x.
MonotoneMap subposet_inclusion(const Poset& x, const Bitset& subset);

/// Witness that `src <= tgt` pointwise. Between given parallel maps there is
/// at most one, so the value carries no further data.
class TwoCell {
 public:
  /// Throws `not_parallel` or `invalid_two_cell`.
  TwoCell(MonotoneMap src, MonotoneMap tgt);
  static std::optional<TwoCell> between(const MonotoneMap& src, const MonotoneMap& tgt);

  const MonotoneMap& src() const noexcept { return src_; }
  const MonotoneMap& tgt() const noexcept { return tgt_; }
  bool invertible() const { return src_ == tgt_; }

  friend bool operator==(const TwoCell& lhs, const TwoCell& rhs) {
    return lhs.src_ == rhs.src_ && lhs.tgt_ == rhs.tgt_;
  }

 private:
  MonotoneMap src_;
  MonotoneMap tgt_;
};

/// Poset named by labels and a generating relation on labels.
Poset build_poset(const std::vector<std::string>& labels,
                  const std::vector<std::pair<std::string, std::string>>& pairs);

struct Collapse {
  Poset quotient;
  /// Input element index to quotient element.
  std::vector<Elem> class_of;
  /// Input labels of each class, in input order.
  std::vector<std::vector<std::string>> members;
};

/// Reflexive-transitive closure as a preorder, then identification of
/// mutually related elements. Quotient elements are ordered by first member
/// and labeled by it.
Collapse preorder_collapse(const std::vector<std::string>& labels,
                           const std::vector<std::pair<std::string, std::string>>& pairs);

/// Index-level form of `preorder_collapse`.
Collapse preorder_collapse_indexed(const std::vector<std::string>& labels,
                                   const std::vector<std::pair<Elem, Elem>>& pairs);

/// Calls `visit` on every monotone map A -> X in lexicographic order of
/// images (A's index order). Returning false from `visit` stops early.
/// Throws `size_cap_exceeded` once more than `cap` search nodes are visited.
void for_each_monotone(const Poset& a, const Poset& x,
                       const std::function<bool(const std::vector<Elem>&)>& visit,
                       std::size_t cap = default_size_cap());

std::vector<MonotoneMap> enumerate_monotone(const Poset& a, const Poset& x,
                                            std::size_t cap = default_size_cap());

std::optional<MonotoneMap> right_adjoint(const MonotoneMap& m);
std::optional<MonotoneMap> left_adjoint(const MonotoneMap& m);

struct AdjointFlags {
  bool is_lari = false;
  bool is_rali = false;
  bool is_lali = false;
  bool is_rari = false;
};

AdjointFlags classify_adjoint(const MonotoneMap& m);

std::optional<MonotoneMap> find_isomorphism(const Poset& p, const Poset& q);
inline bool isomorphic(const Poset& p, const Poset& q) { return find_isomorphism(p, q).has_value(); }

/// Cartesian product with projections.
struct Product {
  Poset object;
  MonotoneMap first;
  MonotoneMap second;
};
Product product(const Poset& p, const Poset& q);

/// All posets with exactly `n` elements up to isomorphism, labels "x0".."x{n-1}".
std::vector<Poset> enumerate_posets(std::size_t n);
/// All posets with at most `n` elements up to isomorphism, by size.
std::vector<Poset> enumerate_posets_up_to(std::size_t n);

namespace posets {
Poset empty();
Poset one();
/// c0 < c1 < ... ; `chain(2)` is labeled low < high.
Poset chain(std::size_t n);
Poset antichain(std::size_t n);
/// a, b < top.
Poset vee();
/// bot < a, b < top.
Poset diamond();
}  // namespace posets

namespace maps {
/// empty -> 1.
MonotoneMap h_bottom();
/// {a, b} -> V, the inclusion of the two minimal elements.
MonotoneMap h_join();
}  // namespace maps

std::string describe(const MonotoneMap& m);

}  // namespace kaninj
