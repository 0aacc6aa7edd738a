#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kaninj/colimits.hpp"
#include "kaninj/injectivity.hpp"

namespace kaninj {

/// A span (h, f: dom h -> X_j) glued in at odd stage j + 1.
struct SpanRecord {
  std::size_t stage = 0;  // j, even
  std::size_t h = 0;      // index into the class
  MonotoneMap f;          // dom h -> X_j
  MonotoneMap glued;      // f//h: cod h -> X_{j+1}
  /// x_{j,j+1} . f == glued . h; the pushout square is strict between posets.
  bool strict = true;
};

/// Bookkeeping of one even step.
struct GammaLog {
  std::size_t stage = 0;  // index of the stage produced
  std::size_t spans = 0;  // registered spans examined
  std::size_t groups = 0;  // distinct images of those spans in the odd stage
  std::size_t constraints = 0;
  /// Extra passes taken in the quotient when saturating.
  std::size_t passes = 0;
  /// Coequifiers taken; each is trivial since parallel 2-cells coincide.
  std::size_t trivial_coequifiers = 0;
};

struct ChainState {
  std::vector<Poset> stages;
  /// connectors[i]: X_i -> X_{i+1}.
  std::vector<MonotoneMap> connectors;
  std::vector<SpanRecord> spans;
  /// steps[i] presents X_{i+1}: over X_i and the glued spans when i is even,
  /// as a quotient of X_i when i is odd.
  std::vector<ColimitResult> steps;
  /// First span glued by each odd step; steps[i] component k >= 1 is
  /// spans[first_span[i] + k - 1].
  std::vector<std::size_t> first_span;
  std::vector<GammaLog> gammas;

  std::size_t top() const { return stages.size() - 1; }
  /// x_{j,k} for j <= k.
  MonotoneMap connector(std::size_t j, std::size_t k) const;
};

ChainState start_chain(const Poset& x);

/// X_{i+1} from X_i, i even: every span glued in one wide pushout.
void step_odd(ChainState& state, const MapClass& h, std::size_t cap = default_size_cap());
/// X_{i+2} from X_{i+1}: coinsert f//h below every g with x.f <= g.h.
/// With `saturate`, the coinserters are retaken in the quotient until no new
/// relation appears; every relation added holds in each strong target, so
/// only the speed of convergence changes.
void step_even(ChainState& state, const MapClass& h, std::size_t cap = default_size_cap(), bool saturate = false);

struct ReflectOptions {
  std::size_t max_steps = 16;
  std::size_t cap = default_size_cap();
  /// Saturate each even step; see step_even.
  bool saturate_even = true;
};

struct ReflectionResult {
  Poset reflected;
  MonotoneMap unit;
  bool converged = false;
  /// Even stage i where the chain stopped.
  std::size_t converged_at = 0;
  /// False: x_{i,i+2} is an isomorphism and X* = X_i. True: X* is the image
  /// of x_{i-2,i}, which x_{i,i+2} maps isomorphically onto the image of
  /// x_{i,i+2}; the rest of X_i is absorbed one round later.
  bool stable_image = false;
  /// X* -> X_i.
  MonotoneMap embedding;
  std::size_t stages_used = 0;
  ChainState trace;
  /// Colimit of the computed prefix when the chain did not converge.
  std::optional<ColimitResult> omega;
};

/// Runs the chain until, for an even i, x_{i,i+2} is an isomorphism or the
/// image of x_{i-2,i} is carried isomorphically onto the image of x_{i,i+2}.
ReflectionResult reflect(const Poset& x, const MapClass& h, const ReflectOptions& options = {});

/// The map X* -> P induced by p: X -> P, built stage by stage. Throws
/// `not_injective_target` unless P is strong, `not_converged` for a
/// non-converged result, and `quotient_violation` if a stage map fails to
/// descend through an even-step quotient.
MonotoneMap extend_along_unit(const MonotoneMap& p, const ReflectionResult& result, const MapClass& h,
                              std::size_t cap = default_size_cap());

struct KzOptions {
  /// Strong targets for the (f.d)/d = f check.
  std::vector<Poset> targets;
  /// Maps sampled per target, chosen by a seeded reservoir.
  std::size_t samples_per_target = 32;
  unsigned seed = 1;
  /// The free-algebra check reflects X* again; skipped above this size.
  std::size_t free_algebra_max_size = 8;
  ReflectOptions reflect;
};

struct KzReport {
  bool unit_dense = false;
  /// (f.d)/d == f for every sampled strong map f: X* -> P.
  bool restriction_law = false;
  std::size_t restriction_samples = 0;
  bool object_strong = false;
  /// 1/d exists, is strict, retracts d, and is left adjoint to d.
  bool lali_retraction = false;
  bool algebra_iff = false;
  /// The reflection of X* converges and d_{X*} has a lali retraction 1/d
  /// which is a strong map and equals the induced extension of the identity.
  /// d_{X*} itself need not be strong: adjoining a bottom to a poset that
  /// already has one gives a unit that misses the new bottom.
  bool free_algebra = false;
  bool free_algebra_checked = false;
  std::vector<std::string> notes;

  bool ok() const { return unit_dense && restriction_law && algebra_iff && (free_algebra || !free_algebra_checked); }
};

KzReport kz_laws(const Poset& x, const MapClass& h, const KzOptions& options = {});

}  // namespace kaninj
