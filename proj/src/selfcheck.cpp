#include "torustab/selfcheck.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "torustab/bracket.hpp"
#include "torustab/canonical.hpp"
#include "torustab/enumerate.hpp"
#include "torustab/pipeline.hpp"

namespace torustab {

namespace {

CheckResult relabelling_check(const SelfCheckOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::vector<std::vector<CanonicalEncoding>> pools;
  for (int n = 2; n <= std::max(2, options.max_n); ++n) pools.push_back(enumerate_projection_classes(n, EnumConfig{}));

  Canonicalizer canon;
  for (int trial = 0; trial < options.trials; ++trial) {
    const auto& pool = pools[rng() % pools.size()];
    const CanonicalEncoding& original = pool[rng() % pool.size()];
    const LabelledMap m = original.to_map();

    std::vector<Dart> images(m.dart_count());
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), rng);
    const Perm relabel(images);
    const bool invert = rng() & 1U;
    const Perm sigma = conjugate(invert ? inverse(m.sigma()) : m.sigma(), relabel);
    const LabelledMap moved(conjugate(m.alpha(), relabel), sigma);

    if (canon.unsensed(moved) != original) {
      return {"canonical relabelling", false, "trial " + std::to_string(trial) + " changed the canonical form"};
    }
  }
  return {"canonical relabelling", true, std::to_string(options.trials) + " trials"};
}

CheckResult mirror_check(const SelfCheckOptions& options) {
  std::uint64_t diagrams = 0;
  for (int n = 2; n <= options.max_n; ++n) {
    for (const auto& e : enumerate_projection_classes(n, EnumConfig{})) {
      const LabelledMap m = e.to_map();
      const GeometryTable table = precompute_geometry(m);
      for (const auto& b : assignments(m, false)) {
        ++diagrams;
        if (evaluate_bracket(m, b.complement(), table) != evaluate_bracket(m, b, table).mirrored()) {
          return {"mirror identity", false, "n=" + std::to_string(n) + " b=" + b.to_string()};
        }
      }
    }
  }
  return {"mirror identity", true, std::to_string(diagrams) + " diagrams"};
}

CheckResult conservation_check(const SelfCheckOptions& options) {
  std::uint64_t states = 0;
  for (int n = 2; n <= options.max_n; ++n) {
    for (const auto& e : enumerate_projection_classes(n, EnumConfig{})) {
      const LabelledMap m = e.to_map();
      const GeometryTable table = precompute_geometry(m);
      for (std::uint32_t t = 0; t < (1U << n); ++t) {
        ++states;
        const auto circles = cycle_count(compose(m.alpha(), smoothing_involution(m, CrossingBits(n, t)))) / 2;
        const CircleGeometry g = table.at(t);
        if (static_cast<std::size_t>(g.contractible + g.essential) != circles) {
          return {"circle conservation", false, "n=" + std::to_string(n) + " t=" + std::to_string(t)};
        }
      }
    }
  }
  return {"circle conservation", true, std::to_string(states) + " states"};
}

CheckResult thread_check(const SelfCheckOptions& options) {
  const int n = std::max(2, options.max_n);
  const bool same = enumerate_projection_classes(n, EnumConfig{}, 1) == enumerate_projection_classes(n, EnumConfig{}, 3);
  return {"thread independence", same, "n=" + std::to_string(n)};
}

CheckResult rerun_check(const SelfCheckOptions& options) {
  auto run = [&] {
    PipelineConfig config;
    KeyLibrary library;
    std::string dump;
    for (int n = 1; n <= options.max_n; ++n) {
      const auto projections = stage_projections(n, config);
      for (const auto& r : projections.records) dump += r.to_json().dump() + '\n';
      for (const auto& r : stage_diagrams(n, config, library, projections.records).records) dump += r.to_json().dump() + '\n';
    }
    return dump;
  };
  return {"deterministic rerun", run() == run(), "levels 1.." + std::to_string(options.max_n)};
}

}  // namespace

std::vector<CheckResult> run_self_checks(const SelfCheckOptions& options) {
  return {relabelling_check(options), mirror_check(options), conservation_check(options), thread_check(options),
          rerun_check(options)};
}

}  // namespace torustab
