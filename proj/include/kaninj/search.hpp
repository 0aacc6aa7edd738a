#pragma once

#include <optional>
#include <vector>

#include "kaninj/poset.hpp"

namespace kaninj {

/// Constraint search over monotone maps A -> X whose value at each element
/// `a` is restricted to `domains[a]`. Used wherever a least element of a set
/// of maps is needed without enumerating the whole hom-poset.
class MonotoneSearch {
 public:
  MonotoneSearch(Poset a, Poset x, std::vector<Bitset> domains, std::size_t cap = default_size_cap());

  /// Any solution, or none when the constraints are unsatisfiable.
  std::optional<std::vector<Elem>> find() const;
  /// Solution with the value at `at` fixed.
  std::optional<std::vector<Elem>> find_with(Elem at, Elem value) const;
  /// For every element, the set of values it takes across all solutions.
  std::vector<Bitset> attainable() const;
  /// The least solution in the pointwise order, if the solution set has one.
  std::optional<std::vector<Elem>> least() const;

  const std::vector<Bitset>& domains() const noexcept { return domains_; }

 private:
  std::optional<std::vector<Elem>> solve(std::vector<Bitset> domains) const;
  bool propagate(std::vector<Bitset>& domains) const;

  Poset a_;
  Poset x_;
  std::vector<Bitset> domains_;
  std::size_t cap_;
  std::vector<Elem> order_;
  std::vector<std::pair<Elem, Elem>> covers_;
  bool forest_ = false;
};

}  // namespace kaninj
