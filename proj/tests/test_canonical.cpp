#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "torustab/canonical.hpp"
#include "torustab/enumerate.hpp"
#include "torustab/errors.hpp"

using namespace torustab;

namespace {

const LabelledMap knot2 = LabelledMap::with_standard_rotation(Perm::from_cycles(8, {{1, 5}, {2, 7}, {3, 6}, {4, 8}}));
const LabelledMap link2 = LabelledMap::with_standard_rotation(Perm::from_cycles(8, {{1, 5}, {2, 6}, {3, 7}, {4, 8}}));

LabelledMap relabelled(const LabelledMap& m, std::mt19937& rng, bool invert) {
  std::vector<Dart> images(m.dart_count());
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  const Perm pi(images);
  return LabelledMap(conjugate(m.alpha(), pi), conjugate(invert ? inverse(m.sigma()) : m.sigma(), pi));
}

}  // namespace

TEST_CASE("rooted normalization fixture") {
  const LabelledMap r = rooted_normalize(knot2, 1, false);
  CHECK(to_cycle_string(r.alpha()) == "(1 3)(2 5)(4 6)(7 8)");
  CHECK(to_cycle_string(r.sigma()) == "(1 2 4 7)(3 6 5 8)");
  CHECK(rooted_normalize(r, 1, false) == r);
}

TEST_CASE("rooted normalization is equivariant") {
  std::mt19937 rng(3);
  std::vector<Dart> images(8);
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  const Perm pi(images);
  const LabelledMap moved(conjugate(knot2.alpha(), pi), conjugate(knot2.sigma(), pi));
  for (Dart root = 1; root <= 8; ++root) {
    CHECK(rooted_normalize(knot2, root, false) == rooted_normalize(moved, pi(root), false));
    CHECK(rooted_normalize(knot2, root, true) == rooted_normalize(moved, pi(root), true));
  }
}

TEST_CASE("rooted normalization rejects disconnected maps") {
  const LabelledMap split = LabelledMap::with_standard_rotation(Perm::from_cycles(8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}}));
  CHECK_THROWS_AS(rooted_normalize(split, 1, false), DomainError);
}

TEST_CASE("unsensed canonical form") {
  const CanonicalEncoding c = unsensed_canonical(knot2);
  CHECK(to_cycle_string(c.to_map().alpha()) == "(1 3)(2 5)(4 6)(7 8)");
  CHECK(to_cycle_string(c.to_map().sigma()) == "(1 2 4 7)(3 6 8 5)");
  CHECK(unsensed_canonical(LabelledMap(knot2.alpha(), inverse(knot2.sigma()))) == c);
  CHECK(unsensed_canonical(link2) != c);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    CHECK(unsensed_canonical(relabelled(knot2, rng, trial % 2 == 1)) == c);
  }
}

TEST_CASE("sensed canonical form") {
  const CanonicalEncoding u = unsensed_canonical(knot2);
  const CanonicalEncoding s = sensed_canonical(knot2);
  CHECK(compare_encodings(u, s) != std::strong_ordering::greater);
  std::mt19937 rng(9);
  for (int trial = 0; trial < 50; ++trial) CHECK(sensed_canonical(relabelled(knot2, rng, false)) == s);
  // The two-crossing maps are mirror symmetric, so both minima agree.
  CHECK(s == u);
  CHECK(sensed_canonical(link2) == unsensed_canonical(link2));
}

TEST_CASE("sensed form separates a chiral pair") {
  // Some class must differ from its mirror image at five crossings.
  bool found = false;
  for (const auto& e : enumerate_projection_classes(5, EnumConfig{})) {
    const LabelledMap m = e.to_map();
    const LabelledMap mirror(m.alpha(), inverse(m.sigma()));
    if (sensed_canonical(m) != sensed_canonical(mirror)) {
      found = true;
      CHECK(unsensed_canonical(m) == unsensed_canonical(mirror));
      break;
    }
  }
  CHECK(found);
}

TEST_CASE("encoding order") {
  const CanonicalEncoding a{1, {2, 1, 4, 3}, {2, 3, 4, 1}};
  const CanonicalEncoding b{1, {3, 4, 1, 2}, {2, 3, 4, 1}};
  CHECK(compare_encodings(a, a) == std::strong_ordering::equal);
  CHECK(compare_encodings(a, b) == std::strong_ordering::less);
  CHECK(compare_encodings(b, a) == std::strong_ordering::greater);
  const CanonicalEncoding c{2, std::vector<Dart>(8, 1), std::vector<Dart>(8, 1)};
  CHECK_THROWS_AS(compare_encodings(a, c), StructuralError);
}

TEST_CASE("canonicalizer agrees with the reference functions") {
  Canonicalizer canon;
  for (int n = 2; n <= 4; ++n) {
    for (const auto& e : enumerate_projection_classes(n, EnumConfig{})) {
      const LabelledMap m = e.to_map();
      CHECK(canon.unsensed(m) == unsensed_canonical(m));
      CHECK(canon.sensed(m) == sensed_canonical(m));
    }
  }
}
