#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "torustab/labelled_map.hpp"

namespace torustab {

// One crossing bit per vertex, vertex 1 in the lowest bit. bits[v] == false
// means the strand {h0, h2} of vertex v passes over; true means {h1, h3} does.
class CrossingBits {
 public:
  static constexpr int max_size = 32;

  CrossingBits() = default;
  // Throws DomainError unless 0 <= size <= 32 and mask fits in `size` bits.
  CrossingBits(int size, std::uint32_t mask);
  // "0101": the first character is vertex 1.
  static CrossingBits parse(const std::string& text);

  int size() const { return size_; }
  std::uint32_t mask() const { return mask_; }
  bool operator[](int vertex) const { return (mask_ >> (vertex - 1)) & 1U; }

  CrossingBits complement() const;
  std::string to_string() const;

  friend bool operator==(const CrossingBits&, const CrossingBits&) = default;

 private:
  int size_ = 0;
  std::uint32_t mask_ = 0;
};

struct BigonFace {
  Dart i = 0;  // i < j, phi = (i j)
  Dart j = 0;
  int u = 0;  // vertex of i
  int v = 0;  // vertex of j
};

// Projection data shared by all diagrams on one projection.
class Projection {
 public:
  explicit Projection(LabelledMap m);

  const LabelledMap& map() const { return map_; }
  const VertexFrame& frame() const { return frame_; }
  int n() const { return map_.n(); }
  int components() const { return components_; }
  // 0-based component id per dart, index 0 unused.
  const std::vector<int>& component_of() const { return component_of_; }
  const std::vector<BigonFace>& bigons() const { return bigons_; }
  const std::vector<int>& mixed() const { return mixed_; }

 private:
  LabelledMap map_;
  VertexFrame frame_;
  int components_;
  std::vector<int> component_of_;
  std::vector<BigonFace> bigons_;
  std::vector<int> mixed_;
};

struct Diagram {
  std::shared_ptr<const Projection> projection;
  CrossingBits bits;

  static Diagram on(const LabelledMap& m, CrossingBits bits);
};

// All 2^n assignments in increasing mask order; with the global switch only those
// with bits[1] == 0, one per {b, complement(b)} pair.
std::vector<CrossingBits> assignments(const LabelledMap& p, bool global_switch);

// One entry per 2-cycle of phi, sorted by i.
std::vector<BigonFace> bigon_faces(const LabelledMap& p);

// An immediate Reidemeister II move across f exists iff the two bits differ.
// Throws DomainError when both sides of f are at the same vertex.
bool bigon_reducible(const Diagram& d, const BigonFace& f);

// No two-vertex bigon is reducible. Bigons touching one vertex twice are ignored.
bool passes_bigon_rule(const Diagram& d);

// Every straight-ahead component is over at some mixed vertex and under at
// some mixed vertex. Throws DomainError for knots.
bool participation_ok(const Diagram& d);

// Signed crossing count of a knot, oriented from its smallest dart. At each vertex
// with outgoing over-dart o and outgoing under-dart u the sign is +1 iff sigma(u) == o.
// Throws DomainError for links.
int writhe(const Diagram& d);

}  // namespace torustab
