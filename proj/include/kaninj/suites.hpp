#pragma once

#include <string>
#include <vector>

#include "kaninj/io.hpp"

namespace kaninj {

struct SuiteOptions {
  /// Corpus: every poset with at most this many elements.
  std::size_t size_cap = 4;
  /// `cone` only: build cones without their 2-cell, which must be caught.
  bool mutate = false;
  unsigned seed = 20261014;
  std::size_t cap = default_size_cap();
};

struct SuiteResult {
  std::string name;
  bool ok = true;
  std::size_t checks = 0;
  std::size_t failed = 0;
  /// Deterministic; no timings.
  io::Json report;
};

/// kz, saturation, cone, bilimits, colimits, smallness, reflection.
const std::vector<std::string>& suite_names();
/// Throws `invalid_argument` for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options = {});

/// {h_bottom}, {h_join} and both.
std::vector<MapClass> basic_classes();
/// The witnesses the saturation suite checks: members, laris, pushouts and
/// cocommas into small posets, wide pushouts, compositions, relabelings,
/// chain connectors and, when h_join is present, a retract of it.
std::vector<SaturationWitness> standard_witnesses(const MapClass& h, std::size_t cap = default_size_cap());
/// Posets of the corpus that are strong for h.
std::vector<Poset> strong_posets(std::size_t max_size, const MapClass& h, std::size_t cap = default_size_cap());

}  // namespace kaninj
