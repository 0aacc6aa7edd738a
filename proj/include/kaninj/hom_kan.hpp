#pragma once

#include <map>
#include <optional>
#include <vector>

#include "kaninj/poset.hpp"

namespace kaninj {

/// The hom-poset Pos(A, X): every monotone map ordered pointwise.
struct HomPoset {
  Poset source;
  Poset target;
  std::vector<MonotoneMap> maps;
  /// The maps as a poset; element i is maps[i].
  Poset order;

  std::optional<std::size_t> index_of(const std::vector<Elem>& image) const;

 private:
  friend HomPoset hom_poset(const Poset&, const Poset&, std::size_t);
  std::map<std::vector<Elem>, std::size_t> index_;
};

HomPoset hom_poset(const Poset& a, const Poset& x, std::size_t cap = default_size_cap());

/// Pos(h, X): Pos(A', X) -> Pos(A, X), g |-> g . h.
struct Precomposition {
  HomPoset from;  // Pos(A', X)
  HomPoset to;    // Pos(A, X)
  MonotoneMap map;
};

Precomposition precompose(const MonotoneMap& h, const Poset& x, std::size_t cap = default_size_cap());

/// Pos(A, p): Pos(A, X) -> Pos(A, X'), g |-> p . g, between prebuilt homs.
MonotoneMap postcompose(const MonotoneMap& p, const HomPoset& from, const HomPoset& to);

struct KanResult {
  bool exists = false;
  /// f/h, the least g with f <= g . h.
  std::optional<MonotoneMap> extension;
  /// (f/h) . h == f, i.e. the comparison 2-cell is invertible.
  bool strict = false;
};

enum class KanMethod {
  /// Pointwise joins when they all exist, constraint search otherwise.
  automatic,
  /// Pointwise joins only; reports non-existence when a join is missing.
  pointwise,
  /// Least solution of the constraint search.
  search,
  /// Enumerate Pos(A', X) and scan for the least element.
  brute_force,
};

/// Left Kan extension of f: A -> X along h: A -> A'. "Least" is global in
/// the pointwise order; a set of minimal but incomparable extensions yields
/// `exists == false`.
KanResult left_kan(const MonotoneMap& f, const MonotoneMap& h, KanMethod method = KanMethod::automatic,
                   std::size_t cap = default_size_cap());

/// The pointwise candidate g0(a') = join{ f(a) : h(a) <= a' }, when every join exists.
std::optional<MonotoneMap> pointwise_candidate(const MonotoneMap& f, const MonotoneMap& h);

/// True iff the identity is the least g: Y -> Y with f <= g . f.
bool is_dense(const MonotoneMap& f, std::size_t cap = default_size_cap());

/// p: X -> X' preserves left Kan extensions along h: p . (f/h) == (p . f)/h
/// for every f: A -> X. Throws `not_injective_context` unless every needed
/// extension exists in X and X'.
bool preserves_kan(const MonotoneMap& p, const MonotoneMap& h, std::size_t cap = default_size_cap());

/// The same question answered on hom-posets: (-)/h is computed as the left
/// adjoint of Pos(h, X) and Pos(h, X'), and the square
/// Pos(A', p) . (-)/h == (-)/h . Pos(A, p) is compared as maps.
bool beck_chevalley(const MonotoneMap& p, const MonotoneMap& h, std::size_t cap = default_size_cap());

}  // namespace kaninj
