#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kaninj/colimits.hpp"
#include "kaninj/hom_kan.hpp"

namespace kaninj {

/// A finite class of maps, the H that injectivity is taken against.
struct MapClass {
  std::string name;
  std::vector<MonotoneMap> maps;
};

enum class Verdict { neither, weak, strong };
std::string_view to_string(Verdict v);

struct KanWitness {
  std::size_t h = 0;  // index into the class
  MonotoneMap f;
  KanResult result;
};

struct InjectivityFailure {
  std::size_t h = 0;
  std::optional<MonotoneMap> f;
  std::string reason;
};

struct InjectivityReport {
  Verdict verdict = Verdict::neither;
  /// One entry per (h, f) examined.
  std::vector<KanWitness> witnesses;
  /// Missing extensions and, for maps, extensions that are not preserved.
  std::vector<InjectivityFailure> failures;
  /// Extensions that exist but do not restrict back to f.
  std::vector<InjectivityFailure> non_strict;

  bool weak() const { return verdict != Verdict::neither; }
  bool strong() const { return verdict == Verdict::strong; }
};

/// Every f: dom h -> X extends along every h. Verdict is weak or neither.
InjectivityReport is_weakly_injective(const Poset& x, const MapClass& h, std::size_t cap = default_size_cap());
/// Weak, and every extension restricts back exactly: strong.
InjectivityReport is_injective(const Poset& x, const MapClass& h, std::size_t cap = default_size_cap());
/// Both ends injective and p preserving every extension. Strong needs both
/// ends strong; weak needs both ends weak.
InjectivityReport is_injective_map(const MonotoneMap& p, const MapClass& h, std::size_t cap = default_size_cap());

struct MappingCone {
  ColimitResult colimit;
  Poset cone;
  MonotoneMap i_h;  // dom h -> C(h)
  MonotoneMap j;    // cod h -> C(h)
  TwoCell rho;      // i_h <= j . h
};

/// The cocomma of the identity of dom h and h.
MappingCone mapping_cone(const MonotoneMap& h);
/// { i_h : h in H }.
MapClass cone_class(const MapClass& h);

/// Reverses every poset, turning right Kan injectivity into left.
MapClass dual(const MapClass& h);

}  // namespace kaninj
