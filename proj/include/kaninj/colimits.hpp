#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kaninj/poset.hpp"

namespace kaninj {

/// An element of one component of a presentation.
struct Generator {
  std::size_t component = 0;
  Elem element = 0;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Posets glued by generating inequalities between their elements. The
/// colimit is the generated preorder with mutually related elements merged.
struct Presentation {
  std::vector<Poset> components;
  /// Used to disambiguate element labels that occur in more than one component.
  std::vector<std::string> tags;
  /// lo <= hi in the colimit.
  std::vector<std::pair<Generator, Generator>> relations;

  std::size_t add(Poset p, std::string tag);
  void leq(Generator lo, Generator hi) { relations.emplace_back(lo, hi); }
  void identify(Generator x, Generator y) {
    leq(x, y);
    leq(y, x);
  }
  std::size_t generator_count() const;
};

struct ColimitResult {
  Poset object;
  /// One coprojection per component of the presentation.
  std::vector<MonotoneMap> injections;
  Presentation presentation;
  /// Classes over the generators, numbered by `offsets`.
  Collapse collapse;
  std::vector<std::size_t> offsets;
  /// Universal 2-cells (the cocomma's rho, the coinserter's cell).
  std::vector<TwoCell> cells;

  Elem class_of(Generator g) const { return collapse.class_of[offsets[g.component] + g.element]; }
};

ColimitResult colimit(Presentation presentation);

ColimitResult coproduct(const std::vector<Poset>& parts);
/// Glues cod(f) and cod(h) along f(a) = h(a). Injections: [B, A'].
ColimitResult pushout(const MonotoneMap& f, const MonotoneMap& h);
/// Codomains of the legs glued along the apex. No legs: the apex itself.
ColimitResult wide_pushout(const Poset& apex, const std::vector<MonotoneMap>& legs);
/// B and C with f(a) <= g(a) added. Injections: [B, C]; cells: [rho].
ColimitResult cocomma(const MonotoneMap& f, const MonotoneMap& g);
/// C with f(b) <= g(b) added. Injections: [C]; cells: [i.f <= i.g].
ColimitResult coinserter(const MonotoneMap& f, const MonotoneMap& g);
/// Parallel 2-cells between posets coincide, so this is the identity of the
/// codomain. Throws `not_parallel` when the boundaries differ.
ColimitResult coequifier(const TwoCell& sigma, const TwoCell& tau);
/// Coinserter of f, g followed by the coequifier of the two composite cells
/// over h. Throws `invalid_two_cell` if gamma is not f.h <= g.h.
ColimitResult coequinserter(const MonotoneMap& h, const MonotoneMap& f, const MonotoneMap& g,
                            const TwoCell& gamma);
/// Colimit of X0 -> X1 -> ... along `connectors[i]: stages[i] -> stages[i+1]`.
ColimitResult chain_colimit(const std::vector<Poset>& stages, const std::vector<MonotoneMap>& connectors);

/// Whether `legs` (one map per component, common codomain) respect every
/// component order and every generating relation.
bool is_cocone(const ColimitResult& colimit, const std::vector<MonotoneMap>& legs);
/// The unique map out of the colimit composing with the injections to
/// `legs`, or none when the legs are not a cocone.
std::optional<MonotoneMap> mediator(const ColimitResult& colimit, const Poset& target,
                                    const std::vector<MonotoneMap>& legs);

enum class VerifyMode {
  /// Enumerate cocones into every target and compare with maps out of the object.
  exhaustive,
  /// Check that the object is exactly the generated preorder, collapsed.
  certificate,
  /// Exhaustive while small enough, certificate otherwise.
  automatic,
};

struct UniversalReport {
  bool ok = true;
  /// Mode that produced the verdict.
  VerifyMode mode = VerifyMode::exhaustive;
  std::size_t targets_checked = 0;
  std::string counterexample;
};

struct VerifyOptions {
  VerifyMode mode = VerifyMode::automatic;
  /// Largest target size; targets are all posets up to this size up to isomorphism.
  std::size_t max_target_size = 4;
  /// Search nodes per target before exhaustive mode gives up.
  std::size_t cap = 200000;
};

UniversalReport verify_universal(const ColimitResult& colimit, const VerifyOptions& options = {});

/// Hasse diagram; nodes are grouped by the component of their first generator.
std::string to_dot(const ColimitResult& colimit, const std::string& name = "colimit");
std::string to_dot(const Poset& poset, const std::string& name = "poset");

}  // namespace kaninj
