#include "torustab/diagram.hpp"

#include "torustab/errors.hpp"

namespace torustab {

CrossingBits::CrossingBits(int size, std::uint32_t mask) : size_(size), mask_(mask) {
  if (size < 0 || size > max_size) throw DomainError("CrossingBits: size " + std::to_string(size) + " out of range");
  if (size < max_size && (mask >> size) != 0) throw DomainError("CrossingBits: mask has bits beyond the vertex count");
}

CrossingBits CrossingBits::parse(const std::string& text) {
  if (text.size() > static_cast<std::size_t>(max_size)) throw DomainError("CrossingBits: too many bits");
  std::uint32_t mask = 0;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] == '1') {
      mask |= 1U << k;
    } else if (text[k] != '0') {
      throw StructuralError("CrossingBits: invalid character in '" + text + "'");
    }
  }
  return CrossingBits(static_cast<int>(text.size()), mask);
}

CrossingBits CrossingBits::complement() const {
  const std::uint32_t full = size_ == max_size ? ~0U : ((1U << size_) - 1U);
  return CrossingBits(size_, ~mask_ & full);
}

std::string CrossingBits::to_string() const {
  std::string out(static_cast<std::size_t>(size_), '0');
  for (int v = 1; v <= size_; ++v) {
    if ((*this)[v]) out[static_cast<std::size_t>(v - 1)] = '1';
  }
  return out;
}

Projection::Projection(LabelledMap m)
    : map_(std::move(m)),
      frame_(map_),
      components_(component_count(map_)),
      component_of_(straight_ahead_components(map_)),
      bigons_(bigon_faces(map_)),
      mixed_(mixed_vertices(map_)) {}

Diagram Diagram::on(const LabelledMap& m, CrossingBits bits) {
  if (bits.size() != m.n()) throw StructuralError("Diagram: bit vector length differs from vertex count");
  return Diagram{std::make_shared<const Projection>(m), bits};
}

std::vector<CrossingBits> assignments(const LabelledMap& p, bool global_switch) {
  const int n = p.n();
  if (n >= CrossingBits::max_size) throw ResourceError("assignments: too many crossings to enumerate");
  std::vector<CrossingBits> out;
  const std::uint32_t count = 1U << n;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    if (global_switch && (mask & 1U)) continue;
    out.emplace_back(n, mask);
  }
  return out;
}

std::vector<BigonFace> bigon_faces(const LabelledMap& p) {
  const VertexFrame frame(p);
  const Perm phi = face_permutation(p);
  std::vector<BigonFace> out;
  for (Dart i = 1; static_cast<std::size_t>(i) <= p.dart_count(); ++i) {
    const Dart j = phi(i);
    if (j > i && phi(j) == i) out.push_back({i, j, frame.vertex_of(i), frame.vertex_of(j)});
  }
  return out;
}

bool bigon_reducible(const Diagram& d, const BigonFace& f) {
  if (f.u == f.v) throw DomainError("bigon_reducible: bigon meets a single vertex twice");
  // The bigon edges attach at i, sigma(i) on u and at j, sigma(j) on v, and they
  // swap local strands between the two crossings. One geometric strand is over at
  // both crossings iff b(u) xor b(v) differs from the slot parity of i against j.
  const VertexFrame& frame = d.projection->frame();
  const bool slot_parity = ((frame.slot_of(f.i) ^ frame.slot_of(f.j)) & 1) != 0;
  return (d.bits[f.u] != d.bits[f.v]) != slot_parity;
}

bool passes_bigon_rule(const Diagram& d) {
  for (const auto& f : d.projection->bigons()) {
    if (f.u != f.v && bigon_reducible(d, f)) return false;
  }
  return true;
}

bool participation_ok(const Diagram& d) {
  const Projection& p = *d.projection;
  if (p.components() < 2) throw DomainError("participation_ok: diagram is a knot");
  std::vector<unsigned char> seen(static_cast<std::size_t>(p.components()), 0);
  constexpr unsigned char over = 1;
  constexpr unsigned char under = 2;
  for (const int v : p.mixed()) {
    const auto& darts = p.frame().darts(v);
    const int over_slot = d.bits[v] ? 1 : 0;
    seen[static_cast<std::size_t>(p.component_of()[static_cast<std::size_t>(darts[static_cast<std::size_t>(over_slot)])])] |= over;
    seen[static_cast<std::size_t>(p.component_of()[static_cast<std::size_t>(darts[static_cast<std::size_t>(1 - over_slot)])])] |= under;
  }
  for (const auto flags : seen) {
    if (flags != (over | under)) return false;
  }
  return true;
}

int writhe(const Diagram& d) {
  const Projection& p = *d.projection;
  if (p.components() != 1) throw DomainError("writhe: diagram is a link");
  const LabelledMap& m = p.map();
  std::vector<char> outgoing(m.dart_count() + 1, 0);
  // Leave through h, cross the edge to alpha(h), continue straight through that vertex.
  Dart h = 1;
  do {
    outgoing[static_cast<std::size_t>(h)] = 1;
    const Dart arrival = m.alpha()(h);
    h = m.sigma()(m.sigma()(arrival));
  } while (h != 1);
  int total = 0;
  for (int v = 1; v <= p.n(); ++v) {
    const auto& darts = p.frame().darts(v);
    const int over_slot = d.bits[v] ? 1 : 0;
    const int under_slot = 1 - over_slot;
    const Dart o = outgoing[static_cast<std::size_t>(darts[static_cast<std::size_t>(over_slot)])]
                       ? darts[static_cast<std::size_t>(over_slot)]
                       : darts[static_cast<std::size_t>(over_slot + 2)];
    const Dart u = outgoing[static_cast<std::size_t>(darts[static_cast<std::size_t>(under_slot)])]
                       ? darts[static_cast<std::size_t>(under_slot)]
                       : darts[static_cast<std::size_t>(under_slot + 2)];
    total += m.sigma()(u) == o ? 1 : -1;
  }
  return total;
}

}  // namespace torustab
