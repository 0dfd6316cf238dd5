#include "torustab/labelled_map.hpp"

#include <numeric>
#include <string>

#include "torustab/errors.hpp"

namespace torustab {

namespace {

// Orbits of the group generated by two involution-like maps given as callables.
template <typename F, typename G>
std::vector<int> orbit_labels(std::size_t darts, F first, G second, int* orbit_count) {
  std::vector<int> label(darts + 1, -1);
  std::vector<Dart> stack;
  int next = 0;
  for (Dart start = 1; static_cast<std::size_t>(start) <= darts; ++start) {
    if (label[static_cast<std::size_t>(start)] >= 0) continue;
    label[static_cast<std::size_t>(start)] = next;
    stack.push_back(start);
    while (!stack.empty()) {
      const Dart h = stack.back();
      stack.pop_back();
      for (const Dart g : {first(h), second(h)}) {
        if (label[static_cast<std::size_t>(g)] < 0) {
          label[static_cast<std::size_t>(g)] = next;
          stack.push_back(g);
        }
      }
    }
    ++next;
  }
  if (orbit_count) *orbit_count = next;
  return label;
}

}  // namespace

LabelledMap::LabelledMap(Perm alpha, Perm sigma) : alpha_(std::move(alpha)), sigma_(std::move(sigma)) {
  if (alpha_.size() != sigma_.size()) {
    throw StructuralError("LabelledMap: alpha and sigma act on different dart sets");
  }
  if (alpha_.size() == 0 || alpha_.size() % 4 != 0) {
    throw StructuralError("LabelledMap: dart count " + std::to_string(alpha_.size()) + " is not a positive multiple of 4");
  }
  if (!alpha_.is_fixed_point_free_involution()) {
    throw StructuralError("LabelledMap: alpha is not a fixed-point-free involution");
  }
  for (const auto& c : cycles(sigma_)) {
    if (c.size() != 4) {
      throw StructuralError("LabelledMap: sigma has a cycle of length " + std::to_string(c.size()));
    }
  }
  n_ = static_cast<int>(alpha_.size() / 4);
  standard_ = sigma_ == standard_sigma(n_);
}

LabelledMap LabelledMap::with_standard_rotation(Perm alpha) {
  const auto size = alpha.size();
  if (size == 0 || size % 4 != 0) {
    throw StructuralError("LabelledMap: dart count " + std::to_string(size) + " is not a positive multiple of 4");
  }
  return LabelledMap(std::move(alpha), standard_sigma(static_cast<int>(size / 4)));
}

VertexFrame::VertexFrame(const LabelledMap& m)
    : vertex_(m.dart_count() + 1, 0), slot_(m.dart_count() + 1, 0) {
  for (const auto& c : cycles(m.sigma())) {
    std::array<Dart, 4> block{c[0], c[1], c[2], c[3]};
    darts_.push_back(block);
    for (int k = 0; k < 4; ++k) {
      vertex_[static_cast<std::size_t>(block[static_cast<std::size_t>(k)])] = static_cast<int>(darts_.size());
      slot_[static_cast<std::size_t>(block[static_cast<std::size_t>(k)])] = k;
    }
  }
}

Perm face_permutation(const LabelledMap& m) { return compose(m.sigma(), m.alpha()); }

Perm straight_ahead_permutation(const LabelledMap& m) {
  return compose(compose(m.sigma(), m.sigma()), m.alpha());
}

bool is_connected(const LabelledMap& m) {
  int count = 0;
  orbit_labels(
      m.dart_count(), [&](Dart h) { return m.alpha()(h); }, [&](Dart h) { return m.sigma()(h); }, &count);
  return count == 1;
}

int euler_genus(const LabelledMap& m) {
  if (!is_connected(m)) throw DomainError("euler_genus: map is disconnected");
  const auto v = static_cast<long>(cycle_count(m.sigma()));
  const auto e = static_cast<long>(cycle_count(m.alpha()));
  const auto f = static_cast<long>(cycle_count(face_permutation(m)));
  const long chi = v - e + f;
  if (chi % 2 != 0 || chi > 2) {
    throw StructuralError("euler_genus: impossible Euler characteristic " + std::to_string(chi));
  }
  return static_cast<int>((2 - chi) / 2);
}

int component_count(const LabelledMap& m) {
  return static_cast<int>(cycle_count(straight_ahead_permutation(m)) / 2);
}

std::vector<int> straight_ahead_components(const LabelledMap& m) {
  return orbit_labels(
      m.dart_count(), [&](Dart h) { return m.alpha()(h); }, [&](Dart h) { return m.sigma()(m.sigma()(h)); },
      nullptr);
}

bool has_monogon(const LabelledMap& m) {
  for (Dart h = 1; static_cast<std::size_t>(h) <= m.dart_count(); ++h) {
    if (m.alpha()(m.sigma()(h)) == h) return true;
  }
  return false;
}

bool has_loop(const LabelledMap& m) {
  if (m.has_standard_rotation()) {
    for (Dart h = 1; static_cast<std::size_t>(h) <= m.dart_count(); ++h) {
      if ((h - 1) / 4 == (m.alpha()(h) - 1) / 4) return true;
    }
    return false;
  }
  const VertexFrame frame(m);
  for (Dart h = 1; static_cast<std::size_t>(h) <= m.dart_count(); ++h) {
    if (frame.vertex_of(h) == frame.vertex_of(m.alpha()(h))) return true;
  }
  return false;
}

std::vector<int> edge_index(const LabelledMap& m) {
  std::vector<int> index(m.dart_count() + 1, -1);
  int next = 0;
  for (Dart h = 1; static_cast<std::size_t>(h) <= m.dart_count(); ++h) {
    if (index[static_cast<std::size_t>(h)] >= 0) continue;
    index[static_cast<std::size_t>(h)] = next;
    index[static_cast<std::size_t>(m.alpha()(h))] = next;
    ++next;
  }
  return index;
}

Multigraph multigraph(const LabelledMap& m) {
  const VertexFrame frame(m);
  Multigraph g;
  g.vertex_count = frame.vertex_count();
  for (Dart h = 1; static_cast<std::size_t>(h) <= m.dart_count(); ++h) {
    const Dart partner = m.alpha()(h);
    if (partner < h) continue;
    g.edges.emplace_back(frame.vertex_of(h), frame.vertex_of(partner));
  }
  return g;
}

std::vector<int> mixed_vertices(const LabelledMap& m) {
  const auto component = straight_ahead_components(m);
  const VertexFrame frame(m);
  std::vector<int> mixed;
  for (int v = 1; v <= frame.vertex_count(); ++v) {
    const auto& d = frame.darts(v);
    const int first = component[static_cast<std::size_t>(d[0])];
    for (int k = 1; k < 4; ++k) {
      if (component[static_cast<std::size_t>(d[static_cast<std::size_t>(k)])] != first) {
        mixed.push_back(v);
        break;
      }
    }
  }
  return mixed;
}

}  // namespace torustab
