#include <doctest.h>

#include <set>

#include "torustab/canonical.hpp"
#include "torustab/diagram.hpp"
#include "torustab/enumerate.hpp"
#include "torustab/errors.hpp"
#include "torustab/primeness.hpp"

using namespace torustab;

namespace {

const LabelledMap knot2 = LabelledMap::with_standard_rotation(Perm::from_cycles(8, {{1, 5}, {2, 7}, {3, 6}, {4, 8}}));
const LabelledMap link2 = LabelledMap::with_standard_rotation(Perm::from_cycles(8, {{1, 5}, {2, 6}, {3, 7}, {4, 8}}));

}  // namespace

TEST_CASE("crossing bits") {
  const CrossingBits b = CrossingBits::parse("0110");
  CHECK(b.size() == 4);
  CHECK(b.mask() == 0b0110);
  CHECK_FALSE(b[1]);
  CHECK(b[2]);
  CHECK(b.to_string() == "0110");
  CHECK(b.complement().to_string() == "1001");
  CHECK_THROWS_AS(CrossingBits::parse("012"), StructuralError);
  CHECK_THROWS_AS(CrossingBits(2, 4), DomainError);
  CHECK_THROWS_AS(CrossingBits(33, 0), DomainError);
}

TEST_CASE("assignments") {
  CHECK(assignments(knot2, false).size() == 4);
  const auto halved = assignments(knot2, true);
  REQUIRE(halved.size() == 2);
  CHECK(halved[0].to_string() == "00");
  CHECK(halved[1].to_string() == "01");
  const auto five = assignments(enumerate_projection_classes(5, EnumConfig{}).front().to_map(), true);
  CHECK(five.size() == 16);
  std::set<std::uint32_t> masks;
  for (const auto& b : five) masks.insert(b.mask());
  for (const auto& b : five) CHECK(masks.count(b.complement().mask()) == 0);
}

TEST_CASE("bigon faces") {
  const auto faces = bigon_faces(knot2);
  REQUIRE(faces.size() == 1);
  CHECK(faces[0].i == 2);
  CHECK(faces[0].j == 6);
  CHECK(faces[0].u == 1);
  CHECK(faces[0].v == 2);
  CHECK(bigon_faces(link2).empty());
  for (const auto& e : enumerate_projection_classes(4, EnumConfig{})) {
    for (const auto& f : bigon_faces(e.to_map())) CHECK(f.u != f.v);
  }
}

TEST_CASE("bigon reduction criterion") {
  const BigonFace f = bigon_faces(knot2).at(0);
  CHECK(bigon_reducible(Diagram::on(knot2, CrossingBits::parse("01")), f));
  CHECK(bigon_reducible(Diagram::on(knot2, CrossingBits::parse("10")), f));
  CHECK_FALSE(bigon_reducible(Diagram::on(knot2, CrossingBits::parse("00")), f));
  CHECK_FALSE(bigon_reducible(Diagram::on(knot2, CrossingBits::parse("11")), f));
  CHECK(passes_bigon_rule(Diagram::on(knot2, CrossingBits::parse("00"))));
  CHECK_FALSE(passes_bigon_rule(Diagram::on(knot2, CrossingBits::parse("01"))));
  CHECK(passes_bigon_rule(Diagram::on(link2, CrossingBits::parse("01"))));
}

TEST_CASE("bigon criterion follows the strands, not the labels") {
  // Relabelling a diagram changes which slot each bigon dart sits in; the verdict
  // must follow the crossings. Rotate vertex 2 by one slot and flip its bit.
  const Perm pi = Perm::from_cycles(8, {{5, 6, 7, 8}});
  const LabelledMap moved(conjugate(knot2.alpha(), pi), conjugate(knot2.sigma(), pi));
  REQUIRE(moved.has_standard_rotation());
  const BigonFace f = bigon_faces(moved).at(0);
  CHECK_FALSE(bigon_reducible(Diagram::on(moved, CrossingBits::parse("01")), f));
  CHECK(bigon_reducible(Diagram::on(moved, CrossingBits::parse("00")), f));
}

TEST_CASE("surviving two-crossing knot diagrams") {
  int survivors = 0;
  for (const auto& b : assignments(knot2, true)) survivors += passes_bigon_rule(Diagram::on(knot2, b));
  CHECK(survivors == 1);
}

TEST_CASE("participation") {
  CHECK_FALSE(participation_ok(Diagram::on(link2, CrossingBits::parse("00"))));
  CHECK(participation_ok(Diagram::on(link2, CrossingBits::parse("01"))));
  CHECK(participation_ok(Diagram::on(link2, CrossingBits::parse("10"))));
  CHECK_FALSE(participation_ok(Diagram::on(link2, CrossingBits::parse("11"))));
  CHECK_THROWS_AS(participation_ok(Diagram::on(knot2, CrossingBits::parse("00"))), DomainError);
}

TEST_CASE("writhe") {
  const Diagram d = Diagram::on(knot2, CrossingBits::parse("00"));
  CHECK(writhe(d) == 2);
  CHECK(writhe(Diagram::on(knot2, CrossingBits::parse("11"))) == -2);
  CHECK(writhe(Diagram::on(knot2, CrossingBits::parse("01"))) == 0);
  CHECK_THROWS_AS(writhe(Diagram::on(link2, CrossingBits::parse("00"))), DomainError);
  for (const auto& e : enumerate_projection_classes(4, EnumConfig{})) {
    const LabelledMap m = e.to_map();
    if (component_count(m) != 1) continue;
    for (const auto& b : assignments(m, false)) {
      CHECK(writhe(Diagram::on(m, b.complement())) == -writhe(Diagram::on(m, b)));
    }
  }
}
