#include "torustab/enumerate.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <thread>

#include "torustab/errors.hpp"

namespace torustab {

namespace {

inline Dart sigma0(Dart h) { return (h % 4 == 0) ? h - 3 : h + 1; }
inline int block(Dart h) { return (h - 1) / 4; }

// Backtracking state over a partial matching on 4n darts with sigma_0 fixed.
class MatchingSearch {
 public:
  MatchingSearch(int n, const EnumConfig& config)
      : n_(n), darts_(4 * n), config_(config), alpha_(static_cast<std::size_t>(darts_) + 1, 0),
        seen_(static_cast<std::size_t>(darts_) + 1, 0) {}

  // Walks the tree; when `split_depth` >= 0, stops at that many placed edges and
  // hands the frontier state to `on_prefix` instead of descending.
  template <typename Leaf, typename Prefix>
  void run(Leaf&& on_leaf, Prefix&& on_prefix, int split_depth) {
    descend(on_leaf, on_prefix, split_depth, 0);
  }

  const std::vector<Dart>& alpha() const { return alpha_; }
  const EnumStats& stats() const { return stats_; }

  void restore(const std::vector<Dart>& alpha, int activated) {
    alpha_ = alpha;
    activated_ = activated;
  }
  int activated() const { return activated_; }

 private:
  bool allowed(Dart i, Dart j) const {
    if (!config_.allow_loops && block(i) == block(j)) return false;
    if (config_.forbid_monogons && (sigma0(i) == j || sigma0(j) == i)) return false;
    return true;
  }

  // Genus of the submap spanned by the matched darts on activated vertices is at most one.
  bool submap_genus_ok() {
    int matched = 0;
    int faces = 0;
    const int limit = 4 * activated_;
    ++stamp_;
    for (Dart h = 1; h <= limit; ++h) {
      if (alpha_[static_cast<std::size_t>(h)] == 0) continue;
      ++matched;
      if (seen_[static_cast<std::size_t>(h)] == stamp_) continue;
      ++faces;
      Dart x = h;
      do {
        seen_[static_cast<std::size_t>(x)] = stamp_;
        Dart next = sigma0(x);
        while (alpha_[static_cast<std::size_t>(next)] == 0) next = sigma0(next);
        x = alpha_[static_cast<std::size_t>(next)];
      } while (x != h);
    }
    const int edges = matched / 2;
    // 2 - 2g = V - E + F with g <= 1.
    return faces >= edges - activated_;
  }

  bool leaf_ok() {
    ++stamp_;
    int faces = 0;
    for (Dart h = 1; h <= darts_; ++h) {
      if (seen_[static_cast<std::size_t>(h)] == stamp_) continue;
      ++faces;
      if (faces > n_) return false;
      Dart x = h;
      do {
        seen_[static_cast<std::size_t>(x)] = stamp_;
        x = alpha_[static_cast<std::size_t>(sigma0(x))];
      } while (x != h);
    }
    return faces == n_;
  }

  template <typename Leaf, typename Prefix>
  void descend(Leaf& on_leaf, Prefix& on_prefix, int split_depth, int depth) {
    ++stats_.nodes;
    while (cursor_ <= darts_ && alpha_[static_cast<std::size_t>(cursor_)] != 0) ++cursor_;
    const Dart i = cursor_;
    if (i > darts_) {
      ++stats_.leaves;
      if (leaf_ok()) {
        ++stats_.emitted;
        on_leaf(alpha_);
      }
      return;
    }
    // Every dart of the activated vertices is used but vertices remain: disconnected.
    if (block(i) >= activated_) return;
    if (depth == split_depth) {
      on_prefix(alpha_, activated_);
      return;
    }
    const Dart saved_cursor = cursor_;
    const Dart activated_limit = 4 * activated_;
    for (Dart j = i + 1; j <= activated_limit; ++j) {
      if (alpha_[static_cast<std::size_t>(j)] != 0 || !allowed(i, j)) continue;
      alpha_[static_cast<std::size_t>(i)] = j;
      alpha_[static_cast<std::size_t>(j)] = i;
      if (submap_genus_ok()) descend(on_leaf, on_prefix, split_depth, depth + 1);
      alpha_[static_cast<std::size_t>(i)] = 0;
      alpha_[static_cast<std::size_t>(j)] = 0;
      cursor_ = saved_cursor;
    }
    if (activated_ < n_) {
      const Dart j = activated_limit + 1;
      if (allowed(i, j)) {
        alpha_[static_cast<std::size_t>(i)] = j;
        alpha_[static_cast<std::size_t>(j)] = i;
        ++activated_;
        descend(on_leaf, on_prefix, split_depth, depth + 1);
        --activated_;
        alpha_[static_cast<std::size_t>(i)] = 0;
        alpha_[static_cast<std::size_t>(j)] = 0;
        cursor_ = saved_cursor;
      }
    }
  }

  int n_;
  int darts_;
  EnumConfig config_;
  std::vector<Dart> alpha_;
  std::vector<unsigned> seen_;
  unsigned stamp_ = 0;
  int activated_ = 1;
  Dart cursor_ = 1;
  EnumStats stats_;
};

LabelledMap map_from_partial(const std::vector<Dart>& alpha) {
  return LabelledMap::with_standard_rotation(
      Perm::from_images_unchecked(std::vector<Dart>(alpha.begin() + 1, alpha.end())));
}

}  // namespace

bool is_candidate(const LabelledMap& m, const EnumConfig& config) {
  if (!m.has_standard_rotation()) return false;
  if (!is_connected(m)) return false;
  if (static_cast<int>(cycle_count(face_permutation(m))) != m.n() + 2 - 2 * EnumConfig::genus) return false;
  if (config.forbid_monogons && has_monogon(m)) return false;
  if (!config.allow_loops && has_loop(m)) return false;
  return true;
}

EnumStats enumerate_matchings(int n, const EnumConfig& config, const std::function<void(const LabelledMap&)>& visit) {
  if (n < 1) throw DomainError("enumerate_matchings: crossing count must be at least 1");
  MatchingSearch search(n, config);
  auto leaf = [&](const std::vector<Dart>& alpha) {
    const LabelledMap m = map_from_partial(alpha);
    if (!is_candidate(m, config)) throw StructuralError("enumerate_matchings: emitted a non-candidate");
    visit(m);
  };
  auto no_prefix = [](const std::vector<Dart>&, int) {};
  search.run(leaf, no_prefix, -1);
  return search.stats();
}

std::vector<CanonicalEncoding> enumerate_projection_classes(int n, const EnumConfig& config, int threads) {
  if (n < 1) throw DomainError("enumerate_projection_classes: crossing count must be at least 1");
  threads = std::max(1, threads);

  std::set<CanonicalEncoding> classes;
  Canonicalizer canon;
  auto collect = [&](std::set<CanonicalEncoding>& into, Canonicalizer& c) {
    return [&into, &c](const std::vector<Dart>& alpha) { into.insert(c.unsensed(map_from_partial(alpha))); };
  };

  if (threads == 1) {
    MatchingSearch search(n, config);
    auto leaf = collect(classes, canon);
    auto no_prefix = [](const std::vector<Dart>&, int) {};
    search.run(leaf, no_prefix, -1);
    return {classes.begin(), classes.end()};
  }

  // Frontier of partial matchings at a fixed depth; leaves above it are handled directly.
  struct Prefix {
    std::vector<Dart> alpha;
    int activated;
  };
  std::vector<Prefix> frontier;
  {
    MatchingSearch search(n, config);
    auto leaf = collect(classes, canon);
    auto prefix = [&](const std::vector<Dart>& alpha, int activated) { frontier.push_back({alpha, activated}); };
    search.run(leaf, prefix, std::min(3, 2 * n));
  }

  std::vector<std::set<CanonicalEncoding>> partial(static_cast<std::size_t>(threads));
  std::mutex mutex;
  std::size_t next = 0;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      Canonicalizer local_canon;
      auto leaf = collect(partial[static_cast<std::size_t>(t)], local_canon);
      auto no_prefix = [](const std::vector<Dart>&, int) {};
      for (;;) {
        std::size_t k;
        {
          std::lock_guard lock(mutex);
          if (next == frontier.size()) return;
          k = next++;
        }
        MatchingSearch search(n, config);
        search.restore(frontier[k].alpha, frontier[k].activated);
        search.run(leaf, no_prefix, -1);
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& s : partial) classes.insert(s.begin(), s.end());
  return {classes.begin(), classes.end()};
}

}  // namespace torustab
