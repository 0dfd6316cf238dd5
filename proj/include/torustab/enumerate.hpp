#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "torustab/canonical.hpp"
#include "torustab/labelled_map.hpp"

namespace torustab {

// Projection-level switches. The defaults are the standing constraints of the
// torus tables: loopless, monogon-free, genus one.
struct EnumConfig {
  bool allow_loops = false;
  bool forbid_monogons = true;
  static constexpr int genus = 1;
};

// Connected, genus one, plus the loop and monogon conditions selected by config.
// Expects the standard rotation; returns false otherwise.
bool is_candidate(const LabelledMap& m, const EnumConfig& config);

struct EnumStats {
  std::uint64_t nodes = 0;      // partial matchings visited
  std::uint64_t leaves = 0;     // complete matchings reached
  std::uint64_t emitted = 0;    // complete matchings passing is_candidate
};

// Generates involutions alpha against sigma_0 by backtracking. The smallest
// unused dart is paired either with an unused dart of an already activated
// vertex or with the first dart of the next inactive vertex. Loop pairs and
// monogon-closing pairs are rejected as soon as they are placed, and partial
// matchings whose submap already has genus above one are abandoned. Every
// emitted map satisfies is_candidate. Visit order is deterministic.
EnumStats enumerate_matchings(int n, const EnumConfig& config, const std::function<void(const LabelledMap&)>& visit);

// Sorted, duplicate-free unsensed canonical encodings of all candidate
// projections with n crossings. `threads` > 1 splits the search tree by
// prefix; the result does not depend on it.
std::vector<CanonicalEncoding> enumerate_projection_classes(int n, const EnumConfig& config, int threads = 1);

}  // namespace torustab
