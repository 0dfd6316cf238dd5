#include "torustab/primeness.hpp"

#include <numeric>

#include "torustab/errors.hpp"

namespace torustab {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

// Connectivity of g with edges `skip_a` and `skip_b` removed (-1 to keep all).
bool connected_without(const Multigraph& g, int skip_a, int skip_b, std::vector<int>& parent) {
  parent.resize(static_cast<std::size_t>(g.vertex_count) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  int pieces = g.vertex_count;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    if (e == skip_a || e == skip_b) continue;
    const int a = find_root(parent, g.edges[static_cast<std::size_t>(e)].first);
    const int b = find_root(parent, g.edges[static_cast<std::size_t>(e)].second);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --pieces;
    }
  }
  return pieces == 1;
}

}  // namespace

std::optional<std::pair<int, int>> find_two_edge_cut(const Multigraph& g) {
  std::vector<int> parent;
  if (!connected_without(g, -1, -1, parent)) throw DomainError("find_two_edge_cut: multigraph is disconnected");
  const int e = static_cast<int>(g.edges.size());
  for (int a = 0; a < e; ++a) {
    for (int b = a + 1; b < e; ++b) {
      if (!connected_without(g, a, b, parent)) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

std::vector<int> mixed_participation(const LabelledMap& m) {
  const auto component = straight_ahead_components(m);
  const VertexFrame frame(m);
  std::vector<int> count(static_cast<std::size_t>(component_count(m)), 0);
  for (const int v : mixed_vertices(m)) {
    const auto& d = frame.darts(v);
    // Strands are {h0, h2} and {h1, h3}; at a mixed vertex they lie on different components.
    ++count[static_cast<std::size_t>(component[static_cast<std::size_t>(d[0])])];
    ++count[static_cast<std::size_t>(component[static_cast<std::size_t>(d[1])])];
  }
  return count;
}

std::optional<int> split_witnessed(const LabelledMap& m) {
  if (component_count(m) < 2) throw DomainError("split_witnessed: projection has a single component");
  const auto count = mixed_participation(m);
  for (std::size_t k = 0; k < count.size(); ++k) {
    if (count[k] <= 1) return static_cast<int>(k);
  }
  return std::nullopt;
}

PrimenessReport is_prime(const LabelledMap& m) {
  PrimenessReport report;
  report.two_edge_cut = find_two_edge_cut(multigraph(m));
  if (component_count(m) >= 2) report.split_component = split_witnessed(m);
  report.prime = !report.two_edge_cut && !report.split_component;
  return report;
}

}  // namespace torustab
