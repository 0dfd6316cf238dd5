#pragma once

#include <compare>
#include <string>
#include <vector>

#include "torustab/labelled_map.hpp"

namespace torustab {

// A labelled map in canonical position. The order used for minimisation is the
// lexicographic order of alpha_images followed by sigma_images.
struct CanonicalEncoding {
  int n = 0;
  std::vector<Dart> alpha_images;
  std::vector<Dart> sigma_images;

  LabelledMap to_map() const;

  // Orders by n first so that encodings of different sizes can share a container;
  // for equal n this agrees with compare_encodings.
  friend std::strong_ordering operator<=>(const CanonicalEncoding& a, const CanonicalEncoding& b);
  friend bool operator==(const CanonicalEncoding& a, const CanonicalEncoding& b) = default;
};

// Image lists of an arbitrary labelled map, without any normalisation.
CanonicalEncoding encode(const LabelledMap& m);

// Relabels the darts of m by a breadth-first traversal from `root`: the root gets
// label 1, and each dequeued dart h hands the next free labels to s(h) and then to
// alpha(h), where s is sigma, or sigma^-1 when `reversed` is set. Returns the
// relabelled (alpha, s). Throws DomainError if m is disconnected.
LabelledMap rooted_normalize(const LabelledMap& m, Dart root, bool reversed);

// Minimum over all 4n roots and both orientations.
CanonicalEncoding unsensed_canonical(const LabelledMap& m);

// Minimum over all 4n roots with the given orientation only.
CanonicalEncoding sensed_canonical(const LabelledMap& m);

// Lexicographic order on alpha_images ++ sigma_images. Throws StructuralError if n differs.
std::strong_ordering compare_encodings(const CanonicalEncoding& a, const CanonicalEncoding& b);

// Reusable scratch space for repeated canonicalisation in hot loops.
class Canonicalizer {
 public:
  const CanonicalEncoding& unsensed(const LabelledMap& m) { return run(m, true); }
  const CanonicalEncoding& sensed(const LabelledMap& m) { return run(m, false); }

 private:
  const CanonicalEncoding& run(const LabelledMap& m, bool both_orientations);

  CanonicalEncoding best_;
  std::vector<Dart> label_;
  std::vector<Dart> order_;
  std::vector<Dart> alpha_;
  std::vector<Dart> sigma_;
  std::vector<Dart> inverse_sigma_;
};

}  // namespace torustab
