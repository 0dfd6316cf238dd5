#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace torustab {

// Darts are 1-based: the dart set of a map with n crossings is {1, ..., 4n}.
using Dart = int;

using Cycle = std::vector<Dart>;

// A bijection on {1, ..., size}, stored as its image list.
//
// Composition uses the right action throughout the library: compose(p, q)
// applies p first and then q, so compose(p, q)(h) == q(p(h)).
class Perm {
 public:
  Perm() = default;

  // Throws StructuralError unless `images` is a bijection on {1, ..., images.size()}.
  explicit Perm(std::vector<Dart> images);

  static Perm identity(std::size_t size);

  // Builds a permutation from disjoint cycles; darts not mentioned are fixed.
  static Perm from_cycles(std::size_t size, const std::vector<Cycle>& cycles);

  // Skips validation. For hot loops that construct bijections by design.
  static Perm from_images_unchecked(std::vector<Dart> images);

  std::size_t size() const { return images_.size(); }

  Dart operator()(Dart h) const { return images_[static_cast<std::size_t>(h - 1)]; }

  std::span<const Dart> images() const { return images_; }

  bool is_identity() const;
  bool is_fixed_point_free_involution() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<Dart> images_;
};

Perm compose(const Perm& p, const Perm& q);

Perm inverse(const Perm& p);

// Transports p along the relabelling h -> relabel(h):
// result(relabel(h)) == relabel(p(h)).
Perm conjugate(const Perm& p, const Perm& relabel);

// Cycles in normal form: each cycle starts at its minimal dart, and the list is
// sorted by minimal dart. Fixed points appear as 1-cycles.
std::vector<Cycle> cycles(const Perm& p);

std::size_t cycle_count(const Perm& p);

// Sorted cycle lengths.
std::vector<std::size_t> cycle_type(const Perm& p);

// (1 2 3 4)(5 6 7 8)...(4n-3 4n-2 4n-1 4n). Throws DomainError for n < 1.
Perm standard_sigma(int n);

// Cycle notation such as "(1 5)(2 7)(3 6)(4 8)"; 1-cycles are omitted
// unless the permutation is the identity.
std::string to_cycle_string(const Perm& p);

}  // namespace torustab
