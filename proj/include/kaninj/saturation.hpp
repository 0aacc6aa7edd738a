#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kaninj/chain.hpp"
#include "kaninj/injectivity.hpp"

namespace kaninj {

enum class Recipe {
  member,          // a map of H itself
  lari,
  iso_replacement,
  compose,
  reflection,      // retract through lari squares
  pushout,
  cocomma,
  wide_pushout,
  chain_connector,  // x_{0,i} of a computed chain
  asserted,         // taken on trust; for negative controls
};

std::string_view to_string(Recipe r);

/// A map together with the construction that puts it in the saturation.
struct SaturationWitness {
  MonotoneMap produced;
  Recipe recipe = Recipe::asserted;
  std::vector<SaturationWitness> inputs;
};

SaturationWitness sat_member(const MapClass& h, std::size_t index);
/// Throws `not_lari`.
SaturationWitness sat_lari(const MonotoneMap& l);
/// beta . h . alpha for isomorphisms alpha: A2 -> A and beta: B -> B2.
SaturationWitness sat_iso(const SaturationWitness& h, const MonotoneMap& alpha, const MonotoneMap& beta);
/// g . f; throws `not_composable`.
SaturationWitness sat_compose(const SaturationWitness& f, const SaturationWitness& g);

enum class GlueMode { pushout, cocomma };
/// The leg cod f -> C opposite h in the pushout or cocomma of f and h.
SaturationWitness sat_pushout(const SaturationWitness& h, const MonotoneMap& f, GlueMode mode = GlueMode::pushout);
/// The diagonal of the wide pushout of legs with a common domain.
SaturationWitness sat_wide_pushout(const std::vector<SaturationWitness>& legs);
/// s: A -> A2 given h: B -> B2 and laris l1: B -> A, l2: B2 -> A2 with
/// s.l1 = l2.h and h.r1 = r2.s for the right adjoints r1, r2. Throws
/// `not_lari` and `square_does_not_commute`.
SaturationWitness sat_reflection(const SaturationWitness& h, const MonotoneMap& l1, const MonotoneMap& l2,
                                 const MonotoneMap& s);
SaturationWitness sat_chain_connector(const ReflectionResult& result, std::size_t stage);
SaturationWitness sat_asserted(const MonotoneMap& m);

struct ClosureReport {
  bool ok = true;
  std::size_t objects_checked = 0;
  std::size_t maps_checked = 0;
  std::optional<Poset> object;
  std::optional<MonotoneMap> map;
  std::string reason;

  explicit operator bool() const { return ok; }
};

/// Falsifier, not a decision procedure: every H-strong object of `sample`
/// must be strong for the witness, and every H-strong map between them must
/// preserve extensions along it.
ClosureReport closure_check(const SaturationWitness& w, const MapClass& h, const std::vector<Poset>& sample,
                            std::size_t cap = default_size_cap());

/// Closure of the strong objects under lalis: given g.l1 = l2.f with f an
/// H-strong map and l1: A -> X, l2: B -> Y lalis, the verdict for g, which
/// should be strong. Throws `square_does_not_commute`, `invalid_argument`
/// when l1 or l2 is not a lali, and `not_injective_context` unless f is
/// strong.
InjectivityReport lali_square(const MonotoneMap& f, const MonotoneMap& l1, const MonotoneMap& l2,
                              const MonotoneMap& g, const MapClass& h, std::size_t cap = default_size_cap());

}  // namespace kaninj
