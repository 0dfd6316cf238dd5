#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "torustab/diagram.hpp"
#include "torustab/laurent.hpp"

namespace torustab {

// Edge sets as bit masks over edge indices (edge_index ordering), so at most 64 edges.
using EdgeMask = std::uint64_t;

// Row-reduced GF(2) basis of the span of the face boundary vectors.
class F2FaceBasis {
 public:
  F2FaceBasis() = default;
  explicit F2FaceBasis(const std::vector<EdgeMask>& generators);

  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<EdgeMask>& rows() const { return rows_; }
  EdgeMask reduce(EdgeMask v) const;
  bool contains(EdgeMask v) const { return reduce(v) == 0; }

 private:
  // Each row has a distinct leading bit that is clear in every other row.
  std::vector<EdgeMask> rows_;
};

struct CircleGeometry {
  int contractible = 0;
  int essential = 0;
  friend bool operator==(const CircleGeometry&, const CircleGeometry&) = default;
};

// Smoothing data for every t in {0,1}^n, indexed by mask.
struct GeometryTable {
  int n = 0;
  std::vector<std::uint8_t> gamma;
  std::vector<std::uint8_t> delta;

  CircleGeometry at(std::uint32_t t) const { return {gamma[t], delta[t]}; }
};

inline constexpr int default_geometry_cap = 24;

// Mod-2 edge vector of each face boundary walk, one per phi-cycle in normal order.
std::vector<EdgeMask> face_vectors(const LabelledMap& p);

// Pairing inside every vertex (h0 h1 h2 h3): (h0 h1)(h2 h3) where t is 0 and
// (h1 h2)(h3 h0) where t is 1. With t = b xor s this is the smoothing of state s on diagram (P, b).
Perm smoothing_involution(const LabelledMap& p, const CrossingBits& t);

F2FaceBasis face_basis(const LabelledMap& p);

// State circles are the components of the dart graph with alpha- and tau_t-edges.
// A circle is contractible iff its edge set lies in the face span.
CircleGeometry circle_geometry(const LabelledMap& p, const CrossingBits& t, const F2FaceBasis& basis);

// Throws ResourceError when n exceeds `cap`.
GeometryTable precompute_geometry(const LabelledMap& p, int cap = default_geometry_cap);

// Sum over t of a^(n - 2|s|) (-a^2 - a^-2)^gamma(t) x^delta(t) with s = b xor t.
BracketPoly evaluate_bracket(const LabelledMap& p, const CrossingBits& b, const GeometryTable& table);

// (-a)^(-3w) <D> for knots. Throws DomainError for links.
BracketPoly x_polynomial(const Diagram& d, const GeometryTable& table);

// Per x-degree coefficient tuples in increasing exponent order, canonicalised
// over a -> a^-1 and global negation.
struct Skeleton {
  std::vector<std::pair<int, std::vector<Coefficient>>> degrees;
  friend auto operator<=>(const Skeleton&, const Skeleton&) = default;
  std::string to_string() const;
};

Skeleton skeleton(const BracketPoly& poly);

// Invariant key. Knots use min(serialize(X_D), serialize(X_D(a^-1))). Links use
// <D> up to a -> a^-1 and an overall factor +-a^k (shift_canonical_key); with
// `link_shift` off they get the plain mirror key instead.
std::string canonical_key(const Diagram& d, const GeometryTable& table, bool link_shift = true);

// min(serialize(P), serialize(P(a^-1))).
std::string mirror_canonical_key(const BracketPoly& poly);

// Smallest serialization of +-a^k P and +-a^k P(a^-1) over both signs, with k
// chosen so that the lowest a-exponent is zero.
std::string shift_canonical_key(const BracketPoly& poly);

std::string to_hex(const std::string& bytes);
std::string from_hex(const std::string& hex);

}  // namespace torustab
