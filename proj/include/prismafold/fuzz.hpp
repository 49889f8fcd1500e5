#pragma once

#include "prismafold/verify.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace prismafold {

struct FuzzConfig {
  std::uint64_t count = 100;
  std::uint64_t seed = 0;  // instance i runs with seed + i
  int min_vertices = 3;
  int max_vertices = 12;
  bool prismoid = false;   // homothety tops (all-quad bands) instead of free tops
  std::string dump_dir;    // when set, failing instances are written here
};

struct FuzzFailure {
  std::uint64_t seed = 0;
  std::string check;     // first failing check name, or the thrown error code
  std::string witness;
  std::string instance;  // serialized instance for replay; empty if generation failed
};

/// Aggregate outcome of a fuzzing run. `aggregates` folds the extreme check
/// measures over every verified net (min_* keys keep minima, max_* keys keep
/// maxima) plus the counters cones_passed, nets_with_warnings and
/// cut_edge_missing.
struct FuzzReport {
  std::uint64_t total = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::vector<FuzzFailure> failures;  // ascending seed
  std::map<std::string, double> aggregates;
};

/// generate -> band -> plan (Auto) -> unfold -> verify, for `count` seeds
/// starting at cfg.seed. Vertex counts are drawn per seed from
/// [min_vertices, max_vertices]. Pipeline exceptions are recorded as
/// failures, never thrown. Deterministic in the config.
FuzzReport run_fuzz(const FuzzConfig& cfg);

/// Deterministic JSON rendering of a report, 17 significant digits.
std::string serialize_fuzz_report(const FuzzReport& r);

}  // namespace prismafold
