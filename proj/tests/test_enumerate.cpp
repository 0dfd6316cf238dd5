#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "torustab/enumerate.hpp"
#include "torustab/primeness.hpp"

using namespace torustab;

TEST_CASE("candidate test") {
  const EnumConfig defaults;
  CHECK(is_candidate(LabelledMap::with_standard_rotation(Perm::from_cycles(8, {{1, 5}, {2, 6}, {3, 7}, {4, 8}})),
                     defaults));
  CHECK_FALSE(is_candidate(
      LabelledMap::with_standard_rotation(Perm::from_cycles(8, {{1, 5}, {2, 8}, {3, 7}, {4, 6}})), defaults));
  CHECK_FALSE(is_candidate(LabelledMap::with_standard_rotation(Perm::from_cycles(4, {{1, 3}, {2, 4}})), defaults));
  CHECK_FALSE(is_candidate(LabelledMap::with_standard_rotation(Perm::from_cycles(4, {{1, 2}, {3, 4}})), defaults));
  EnumConfig loops;
  loops.allow_loops = true;
  CHECK(is_candidate(LabelledMap::with_standard_rotation(Perm::from_cycles(4, {{1, 3}, {2, 4}})), loops));
}

TEST_CASE("emitted matchings satisfy the candidate conditions") {
  int emitted = 0;
  const auto stats = enumerate_matchings(2, EnumConfig{}, [&](const LabelledMap& m) {
    ++emitted;
    CHECK(is_connected(m));
    CHECK_FALSE(has_loop(m));
    CHECK_FALSE(has_monogon(m));
    CHECK(oracle::face_count(m) == 2);
  });
  CHECK(stats.emitted == static_cast<std::uint64_t>(emitted));
  CHECK(emitted > 0);
}

TEST_CASE("two-crossing classes") {
  const auto classes = enumerate_projection_classes(2, EnumConfig{});
  CHECK(classes.size() == 2);
  std::set<int> components;
  for (const auto& c : classes) components.insert(component_count(c.to_map()));
  CHECK(components == std::set<int>{1, 2});
}

TEST_CASE("pruned search matches exhaustive matchings") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    const auto pruned = enumerate_projection_classes(n, EnumConfig{});
    const auto brute = oracle::brute_force_classes(n);
    CHECK(std::set<CanonicalEncoding>(pruned.begin(), pruned.end()) == brute);
  }
}

TEST_CASE("class counts") {
  CHECK(enumerate_projection_classes(3, EnumConfig{}).size() == 6);
  CHECK(enumerate_projection_classes(4, EnumConfig{}).size() == 28);
  CHECK(enumerate_projection_classes(5, EnumConfig{}).size() == 109);
}

TEST_CASE("thread count does not change the result") {
  CHECK(enumerate_projection_classes(5, EnumConfig{}, 1) == enumerate_projection_classes(5, EnumConfig{}, 4));
}

TEST_CASE("loops switch") {
  EnumConfig loops;
  loops.allow_loops = true;
  const auto with_loops = enumerate_projection_classes(1, loops);
  CHECK(with_loops.size() == 1);
  CHECK(enumerate_projection_classes(1, EnumConfig{}).empty());
  // Adding loops can only enlarge the pool.
  const auto base = enumerate_projection_classes(3, EnumConfig{});
  const auto wide = enumerate_projection_classes(3, loops);
  CHECK(std::includes(wide.begin(), wide.end(), base.begin(), base.end()));
  CHECK(wide.size() > base.size());
}
