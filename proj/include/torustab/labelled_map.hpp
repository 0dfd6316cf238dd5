#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "torustab/perm.hpp"

namespace torustab {

// A 4-regular map on 4n darts: alpha pairs the darts of each edge and the
// cycles of sigma are the vertices (cyclic dart order around each crossing).
class LabelledMap {
 public:
  LabelledMap() = default;

  // Throws StructuralError unless alpha is a fixed-point-free involution, every
  // sigma-cycle has length 4 and both act on the same 4n darts.
  LabelledMap(Perm alpha, Perm sigma);

  // (alpha, sigma_0) with the standard rotation.
  static LabelledMap with_standard_rotation(Perm alpha);

  int n() const { return n_; }
  std::size_t dart_count() const { return alpha_.size(); }
  const Perm& alpha() const { return alpha_; }
  const Perm& sigma() const { return sigma_; }

  // True when sigma is (1 2 3 4)(5 6 7 8)...; vertex lookups then reduce to block arithmetic.
  bool has_standard_rotation() const { return standard_; }

  friend bool operator==(const LabelledMap& a, const LabelledMap& b) {
    return a.alpha_ == b.alpha_ && a.sigma_ == b.sigma_;
  }

 private:
  int n_ = 0;
  Perm alpha_;
  Perm sigma_;
  bool standard_ = false;
};

// Vertex bookkeeping for an arbitrary rotation. Vertices are the sigma-cycles
// in normal form (sorted by minimal dart), numbered from 1; within a vertex the
// darts are listed as (h0 h1 h2 h3) with h0 minimal and sigma(h_i) = h_{i+1}.
class VertexFrame {
 public:
  explicit VertexFrame(const LabelledMap& m);

  int vertex_count() const { return static_cast<int>(darts_.size()); }
  int vertex_of(Dart h) const { return vertex_[static_cast<std::size_t>(h)]; }
  int slot_of(Dart h) const { return slot_[static_cast<std::size_t>(h)]; }
  // 1-based vertex; slot taken mod 4.
  Dart dart(int vertex, int slot) const { return darts_[static_cast<std::size_t>(vertex - 1)][static_cast<std::size_t>(slot & 3)]; }
  const std::array<Dart, 4>& darts(int vertex) const { return darts_[static_cast<std::size_t>(vertex - 1)]; }

 private:
  std::vector<std::array<Dart, 4>> darts_;
  std::vector<int> vertex_;
  std::vector<int> slot_;
};

struct Multigraph {
  int vertex_count = 0;
  // One entry per alpha-orbit, ordered by minimal dart. Endpoints are 1-based; u == v is a loop.
  std::vector<std::pair<int, int>> edges;
};

// phi = sigma alpha, the face permutation.
Perm face_permutation(const LabelledMap& m);

// rho = sigma^2 alpha.
Perm straight_ahead_permutation(const LabelledMap& m);

bool is_connected(const LabelledMap& m);

// Genus from V - E + F = 2 - 2g. Throws DomainError for disconnected maps.
int euler_genus(const LabelledMap& m);

// Number of straight-ahead components, half the number of rho-cycles.
int component_count(const LabelledMap& m);

// Component id (0-based, numbered by minimal dart) of every dart; index 0 unused.
std::vector<int> straight_ahead_components(const LabelledMap& m);

bool has_monogon(const LabelledMap& m);

bool has_loop(const LabelledMap& m);

Multigraph multigraph(const LabelledMap& m);

// Edge index (0-based, ordered by minimal dart) of every dart; index 0 unused.
std::vector<int> edge_index(const LabelledMap& m);

// 1-based vertices whose four darts meet at least two straight-ahead components, ascending.
std::vector<int> mixed_vertices(const LabelledMap& m);

}  // namespace torustab
