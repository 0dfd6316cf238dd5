#pragma once

#include <optional>
#include <utility>

#include "torustab/labelled_map.hpp"

namespace torustab {

struct PrimenessReport {
  // Edge indices into multigraph(m).edges, ascending.
  std::optional<std::pair<int, int>> two_edge_cut;
  // Straight-ahead component (0-based, numbered by minimal dart) with at most one mixed vertex.
  std::optional<int> split_component;
  bool prime = false;
};

// First pair of edges, in lexicographic order of edge indices, whose removal
// disconnects g; nullopt when g is 3-edge-connected. Throws DomainError if g is
// already disconnected.
std::optional<std::pair<int, int>> find_two_edge_cut(const Multigraph& g);

// Number of mixed vertices each straight-ahead component passes through.
std::vector<int> mixed_participation(const LabelledMap& m);

// Smallest component K with at most one mixed vertex. Throws DomainError for knots.
std::optional<int> split_witnessed(const LabelledMap& m);

// Knots are prime without a 2-edge-cut; links additionally must not be split-witnessed.
PrimenessReport is_prime(const LabelledMap& m);

}  // namespace torustab
