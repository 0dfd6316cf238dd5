#include "torustab/bracket.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "torustab/errors.hpp"

namespace torustab {

namespace {

EdgeMask edge_bit(int edge) { return EdgeMask{1} << edge; }

void require_edge_capacity(const LabelledMap& p) {
  if (p.dart_count() / 2 > 64) throw ResourceError("edge masks hold at most 64 edges");
}

LaurentPoly loop_value() {
  LaurentPoly d;
  d.add_term(2, -1);
  d.add_term(-2, -1);
  return d;
}

// Circles of alpha together with a smoothing given per dart.
template <typename Tau>
CircleGeometry trace_circles(const LabelledMap& p, const std::vector<int>& edge, const F2FaceBasis& basis, Tau tau,
                             std::vector<char>& seen) {
  CircleGeometry g;
  std::fill(seen.begin(), seen.end(), 0);
  for (Dart start = 1; static_cast<std::size_t>(start) <= p.dart_count(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    EdgeMask v = 0;
    int steps = 0;
    Dart h = start;
    do {
      const Dart across = p.alpha()(h);
      seen[static_cast<std::size_t>(h)] = 1;
      seen[static_cast<std::size_t>(across)] = 1;
      v ^= edge_bit(edge[static_cast<std::size_t>(h)]);
      ++steps;
      h = tau(across);
    } while (h != start);
    if (std::popcount(v) != steps) throw StructuralError("circle_geometry: a state circle reuses an edge");
    if (basis.contains(v)) {
      ++g.contractible;
    } else {
      ++g.essential;
    }
  }
  return g;
}

}  // namespace

F2FaceBasis::F2FaceBasis(const std::vector<EdgeMask>& generators) {
  for (EdgeMask v : generators) {
    v = reduce(v);
    if (v == 0) continue;
    const EdgeMask lead = EdgeMask{1} << (63 - std::countl_zero(v));
    for (auto& row : rows_) {
      if (row & lead) row ^= v;
    }
    rows_.push_back(v);
  }
  std::sort(rows_.begin(), rows_.end(), std::greater<>());
}

EdgeMask F2FaceBasis::reduce(EdgeMask v) const {
  for (const EdgeMask row : rows_) {
    const EdgeMask lead = EdgeMask{1} << (63 - std::countl_zero(row));
    if (v & lead) v ^= row;
  }
  return v;
}

std::vector<EdgeMask> face_vectors(const LabelledMap& p) {
  require_edge_capacity(p);
  const auto edge = edge_index(p);
  std::vector<EdgeMask> out;
  for (const auto& face : cycles(face_permutation(p))) {
    EdgeMask v = 0;
    // The step out of h runs along the edge {sigma(h), alpha(sigma(h))}.
    for (const Dart h : face) v ^= edge_bit(edge[static_cast<std::size_t>(p.sigma()(h))]);
    out.push_back(v);
  }
  return out;
}

Perm smoothing_involution(const LabelledMap& p, const CrossingBits& t) {
  if (t.size() != p.n()) throw StructuralError("smoothing_involution: bit vector length differs from vertex count");
  const VertexFrame frame(p);
  std::vector<Dart> images(p.dart_count());
  auto pair = [&](Dart x, Dart y) {
    images[static_cast<std::size_t>(x - 1)] = y;
    images[static_cast<std::size_t>(y - 1)] = x;
  };
  for (int v = 1; v <= p.n(); ++v) {
    const auto& h = frame.darts(v);
    if (t[v]) {
      pair(h[1], h[2]);
      pair(h[3], h[0]);
    } else {
      pair(h[0], h[1]);
      pair(h[2], h[3]);
    }
  }
  return Perm::from_images_unchecked(std::move(images));
}

F2FaceBasis face_basis(const LabelledMap& p) { return F2FaceBasis(face_vectors(p)); }

CircleGeometry circle_geometry(const LabelledMap& p, const CrossingBits& t, const F2FaceBasis& basis) {
  require_edge_capacity(p);
  const Perm tau = smoothing_involution(p, t);
  const auto edge = edge_index(p);
  std::vector<char> seen(p.dart_count() + 1, 0);
  return trace_circles(p, edge, basis, [&](Dart h) { return tau(h); }, seen);
}

GeometryTable precompute_geometry(const LabelledMap& p, int cap) {
  if (p.n() > cap) {
    throw ResourceError("precompute_geometry: " + std::to_string(p.n()) + " crossings exceed the cap of " +
                        std::to_string(cap));
  }
  require_edge_capacity(p);
  const VertexFrame frame(p);
  const auto edge = edge_index(p);
  const F2FaceBasis basis = face_basis(p);
  // Partner of each dart under the two smoothings, by vertex slot.
  std::vector<Dart> partner0(p.dart_count() + 1), partner1(p.dart_count() + 1);
  std::vector<int> vertex_bit(p.dart_count() + 1);
  for (int v = 1; v <= p.n(); ++v) {
    const auto& h = frame.darts(v);
    for (int k = 0; k < 4; ++k) {
      const Dart x = h[static_cast<std::size_t>(k)];
      partner0[static_cast<std::size_t>(x)] = h[static_cast<std::size_t>(k ^ 1)];
      partner1[static_cast<std::size_t>(x)] = h[static_cast<std::size_t>(3 - k)];
      vertex_bit[static_cast<std::size_t>(x)] = v - 1;
    }
  }
  GeometryTable table;
  table.n = p.n();
  const std::size_t size = std::size_t{1} << p.n();
  table.gamma.resize(size);
  table.delta.resize(size);
  std::vector<char> seen(p.dart_count() + 1, 0);
  for (std::uint32_t t = 0; t < size; ++t) {
    const auto g = trace_circles(
        p, edge, basis,
        [&](Dart h) {
          return ((t >> vertex_bit[static_cast<std::size_t>(h)]) & 1U) ? partner1[static_cast<std::size_t>(h)]
                                                                          : partner0[static_cast<std::size_t>(h)];
        },
        seen);
    table.gamma[t] = static_cast<std::uint8_t>(g.contractible);
    table.delta[t] = static_cast<std::uint8_t>(g.essential);
  }
  return table;
}

BracketPoly evaluate_bracket(const LabelledMap& p, const CrossingBits& b, const GeometryTable& table) {
  const int n = p.n();
  if (b.size() != n || table.n != n) throw StructuralError("evaluate_bracket: sizes differ");
  int max_gamma = 0, max_delta = 0;
  for (std::size_t t = 0; t < table.gamma.size(); ++t) {
    max_gamma = std::max<int>(max_gamma, table.gamma[t]);
    max_delta = std::max<int>(max_delta, table.delta[t]);
  }
  // counts[(delta * (max_gamma + 1) + gamma) * (2n + 1) + (exponent + n)]
  const std::size_t width = static_cast<std::size_t>(2 * n + 1);
  std::vector<Coefficient> counts(static_cast<std::size_t>((max_delta + 1) * (max_gamma + 1)) * width, 0);
  const std::uint32_t size = static_cast<std::uint32_t>(table.gamma.size());
  for (std::uint32_t t = 0; t < size; ++t) {
    const std::uint32_t s = t ^ b.mask();
    const int exponent = n - 2 * std::popcount(s);
    const std::size_t cell = static_cast<std::size_t>(table.delta[t] * (max_gamma + 1) + table.gamma[t]);
    ++counts[cell * width + static_cast<std::size_t>(exponent + n)];
  }
  std::vector<LaurentPoly> loop_power{LaurentPoly::monomial(0, 1)};
  for (int k = 1; k <= max_gamma; ++k) loop_power.push_back(loop_power.back() * loop_value());

  BracketPoly out;
  for (int delta = 0; delta <= max_delta; ++delta) {
    LaurentPoly sum;
    for (int gamma = 0; gamma <= max_gamma; ++gamma) {
      LaurentPoly weights;
      const std::size_t cell = static_cast<std::size_t>(delta * (max_gamma + 1) + gamma);
      for (std::size_t e = 0; e < width; ++e) {
        weights.add_term(static_cast<int>(e) - n, counts[cell * width + e]);
      }
      if (!weights.is_zero()) sum += weights * loop_power[static_cast<std::size_t>(gamma)];
    }
    out.add(delta, sum);
  }
  return out;
}

BracketPoly x_polynomial(const Diagram& d, const GeometryTable& table) {
  const int w = writhe(d);
  const BracketPoly bracket = evaluate_bracket(d.projection->map(), d.bits, table);
  // (-a)^(-3w) = (-1)^w a^(-3w)
  return bracket.scaled((w % 2 == 0) ? 1 : -1, -3 * w);
}

std::string Skeleton::to_string() const {
  std::string out;
  for (const auto& [m, tuple] : degrees) {
    out += "x^" + std::to_string(m) + ":(";
    for (std::size_t k = 0; k < tuple.size(); ++k) out += (k ? "," : "") + std::to_string(tuple[k]);
    out += ") ";
  }
  if (!out.empty()) out.pop_back();
  return out;
}

Skeleton skeleton(const BracketPoly& poly) {
  Skeleton base;
  for (const auto& [m, p] : poly.terms()) {
    std::vector<Coefficient> tuple;
    for (const auto& [k, c] : p.terms()) tuple.push_back(c);
    base.degrees.emplace_back(m, std::move(tuple));
  }
  Skeleton best = base;
  for (int transform = 1; transform < 4; ++transform) {
    Skeleton candidate = base;
    for (auto& [m, tuple] : candidate.degrees) {
      if (transform & 1) std::reverse(tuple.begin(), tuple.end());
      if (transform & 2) {
        for (auto& c : tuple) c = -c;
      }
    }
    best = std::min(best, candidate);
  }
  return best;
}

std::string mirror_canonical_key(const BracketPoly& poly) {
  return std::min(poly.serialize(), poly.mirrored().serialize());
}

std::string shift_canonical_key(const BracketPoly& poly) {
  if (poly.is_zero()) return poly.serialize();
  std::string best;
  for (const BracketPoly& q : {poly, poly.mirrored()}) {
    int lowest = std::numeric_limits<int>::max();
    for (const auto& [m, coeff] : q.terms()) lowest = std::min(lowest, coeff.terms().begin()->first);
    for (const Coefficient sign : {Coefficient{1}, Coefficient{-1}}) {
      std::string s = q.scaled(sign, -lowest).serialize();
      if (best.empty() || s < best) best = std::move(s);
    }
  }
  return best;
}

std::string canonical_key(const Diagram& d, const GeometryTable& table, bool link_shift) {
  if (d.projection->components() == 1) return mirror_canonical_key(x_polynomial(d, table));
  BracketPoly bracket = evaluate_bracket(d.projection->map(), d.bits, table);
  return link_shift ? shift_canonical_key(bracket) : mirror_canonical_key(bracket);
}

std::string to_hex(const std::string& bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (const unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

std::string from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw StructuralError("from_hex: odd length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw StructuralError("from_hex: invalid digit");
  };
  std::string out;
  out.reserve(hex.size() / 2);
  for (std::size_t k = 0; k < hex.size(); k += 2) {
    out.push_back(static_cast<char>(nibble(hex[k]) * 16 + nibble(hex[k + 1])));
  }
  return out;
}

}  // namespace torustab
