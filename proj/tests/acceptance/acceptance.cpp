// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
//
// Criteria 1-4 compare counts with the reference tables; criterion 5 collects the
// property suites, which use only the test oracles.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "torustab/bracket.hpp"
#include "torustab/pipeline.hpp"

using namespace torustab;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool passed = true;
  std::vector<std::string> problems;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      problems.push_back(what);
    }
  }
};

template <typename T>
std::string mismatch(const std::string& what, T expected, T actual) {
  std::ostringstream os;
  os << what << ": expected " << expected << ", got " << actual;
  return os.str();
}

void report(int number, const std::string& title, const Outcome& o, double seconds) {
  std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << number << ": " << title << "  [" << seconds << " s]\n";
  for (const auto& p : o.problems) std::cout << "      " << p << '\n';
  std::cout.flush();
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void check_projection_row(Outcome& o, const ReferenceTables::ProjectionRow& row, const ProjectionStats& s) {
  const std::string n = "n=" + std::to_string(row.n) + " ";
  o.expect(s.unsensed == row.unsensed, mismatch(n + "unsensed", row.unsensed, s.unsensed));
  o.expect(s.removed_comp == row.removed_comp, mismatch(n + "removed comp", row.removed_comp, s.removed_comp));
  o.expect(s.removed_split == row.removed_split, mismatch(n + "removed split", row.removed_split, s.removed_split));
  o.expect(s.prime_total == row.prime_total, mismatch(n + "prime total", row.prime_total, s.prime_total));
  o.expect(s.prime_knots == row.knots, mismatch(n + "prime knots", row.knots, s.prime_knots));
  o.expect(s.prime_links == row.links, mismatch(n + "prime links", row.links, s.prime_links));
}

void check_distribution(Outcome& o, int n, const std::map<int, std::uint64_t>& expected, const ProjectionStats& s) {
  for (const auto& [c, count] : expected) {
    const auto it = s.link_distribution.find(c);
    const std::uint64_t actual = it == s.link_distribution.end() ? 0 : it->second;
    o.expect(actual == count, mismatch("n=" + std::to_string(n) + " c=" + std::to_string(c), count, actual));
  }
}

void check_diagram_row(Outcome& o, const ReferenceTables::DiagramRow& row, const DiagramStats& s) {
  const std::string n = "n=" + std::to_string(row.n) + " ";
  o.expect(s.new_knots == row.knots, mismatch(n + "new knots", row.knots, s.new_knots));
  o.expect(s.new_links == row.links, mismatch(n + "new links", row.links, s.new_links));
}

LabelledMap transformed(const LabelledMap& m, std::mt19937_64& rng, bool invert) {
  std::vector<Dart> images(m.dart_count());
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  const Perm pi(images);
  return LabelledMap(conjugate(m.alpha(), pi), conjugate(invert ? inverse(m.sigma()) : m.sigma(), pi));
}

// Component count plus sorted face degrees: a class invariant.
std::pair<int, std::vector<std::size_t>> invariants(const LabelledMap& m) {
  return {component_count(m), cycle_type(face_permutation(m))};
}

void canonical_completeness(Outcome& o) {
  std::mt19937_64 rng(20240601);
  std::vector<CanonicalEncoding> pool;
  for (int n = 2; n <= 6; ++n) {
    const auto classes = enumerate_projection_classes(n, EnumConfig{});
    pool.insert(pool.end(), classes.begin(), classes.end());
  }
  Canonicalizer canon;
  int failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const CanonicalEncoding& c = pool[rng() % pool.size()];
    const LabelledMap moved = transformed(c.to_map(), rng, rng() & 1U);
    if (canon.unsensed(moved) != c) ++failures;

    const CanonicalEncoding& d = pool[rng() % pool.size()];
    if (c.n == d.n && invariants(c.to_map()) != invariants(d.to_map()) && c == d) ++failures;
  }
  o.expect(failures == 0, "canonical completeness: " + std::to_string(failures) + " of 1000 trials failed");
}

void pruning_oracle(Outcome& o) {
  for (int n = 1; n <= 4; ++n) {
    const auto pruned = enumerate_projection_classes(n, EnumConfig{});
    const std::set<CanonicalEncoding> a(pruned.begin(), pruned.end());
    o.expect(a == oracle::brute_force_classes(n), "pruning oracle differs at n=" + std::to_string(n));
  }
}

void conservation(Outcome& o) {
  std::uint64_t checked = 0;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& e : enumerate_projection_classes(n, EnumConfig{})) {
      const LabelledMap m = e.to_map();
      if (!is_prime(m).prime) continue;
      const GeometryTable table = precompute_geometry(m);
      for (std::uint32_t t = 0; t < (1U << n); ++t) {
        ++checked;
        const auto circles = cycle_count(compose(m.alpha(), smoothing_involution(m, CrossingBits(n, t)))) / 2;
        const CircleGeometry g = table.at(t);
        if (static_cast<std::size_t>(g.contractible + g.essential) != circles) {
          o.expect(false, "conservation fails at n=" + std::to_string(n) + " t=" + std::to_string(t));
          return;
        }
      }
    }
  }
  o.expect(checked > 0, "conservation: nothing checked");
}

void bracket_oracles(Outcome& o) {
  std::uint64_t diagrams = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& e : enumerate_projection_classes(n, EnumConfig{})) {
      const LabelledMap m = e.to_map();
      const GeometryTable table = precompute_geometry(m);
      for (const auto& b : assignments(m, false)) {
        ++diagrams;
        const BracketPoly fast = evaluate_bracket(m, b, table);
        if (fast != oracle::slow_bracket(m, b)) {
          o.expect(false, "slow bracket differs: n=" + std::to_string(n) + " b=" + b.to_string());
          return;
        }
        if (evaluate_bracket(m, b.complement(), table) != fast.mirrored()) {
          o.expect(false, "mirror identity fails: n=" + std::to_string(n) + " b=" + b.to_string());
          return;
        }
      }
    }
  }
  o.expect(diagrams > 0, "bracket oracles: nothing checked");
}

std::string slurp(const fs::path& file) {
  std::ifstream is(file, std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void determinism(Outcome& o) {
  const fs::path root = fs::temp_directory_path() / ("torustab_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(root);
  for (const char* run : {"a", "b"}) {
    KeyLibrary library;
    for (int n = 1; n <= 4; ++n) {
      const auto projections = stage_projections(n, PipelineConfig{}, root / run);
      stage_diagrams(n, PipelineConfig{}, library, projections.records, root / run);
    }
    library.save(root / run / "library");
  }
  for (int n = 1; n <= 4; ++n) {
    o.expect(slurp(projection_file(root / "a", n)) == slurp(projection_file(root / "b", n)),
             "projection dataset differs at n=" + std::to_string(n));
    o.expect(slurp(diagram_file(root / "a", n)) == slurp(diagram_file(root / "b", n)),
             "diagram dataset differs at n=" + std::to_string(n));
    const std::string keys = std::to_string(n) + ".keys";
    o.expect(slurp(root / "a" / "library" / keys) == slurp(root / "b" / "library" / keys),
             "library differs at n=" + std::to_string(n));
  }
  fs::remove_all(root);
}

}  // namespace

int main() {
  const ReferenceTables& ref = ReferenceTables::builtin();
  const PipelineConfig config;
  bool all = true;

  // One pass over levels 1..8 feeds criteria 1-4.
  std::map<int, ProjectionStats> projections;
  std::map<int, DiagramStats> diagrams;
  std::map<int, double> projection_time, diagram_time;
  KeyLibrary library;
  for (int n = 1; n <= 8; ++n) {
    Timer t;
    auto stage = stage_projections(n, config);
    projection_time[n] = t.seconds();
    projections[n] = stage.projection_stats;
    Timer u;
    diagrams[n] = stage_diagrams(n, config, library, stage.records).stats;
    diagram_time[n] = u.seconds();
  }
  auto seconds = [](const std::map<int, double>& times, int lo, int hi) {
    double total = 0;
    for (int n = lo; n <= hi; ++n) total += times.at(n);
    return total;
  };

  {
    Outcome o;
    for (const auto& row : ref.projections) {
      if (row.n <= 6) check_projection_row(o, row, projections.at(row.n));
    }
    report(1, "projection counts, n = 3..6", o, seconds(projection_time, 3, 6));
    all = all && o.passed;
  }
  {
    Outcome o;
    for (const auto& row : ref.projections) {
      if (row.n >= 7) check_projection_row(o, row, projections.at(row.n));
    }
    for (const auto& [n, expected] : ref.link_distribution) check_distribution(o, n, expected, projections.at(n));
    report(2, "projection counts n = 7, 8 and link components n = 3..8", o, seconds(projection_time, 7, 8));
    all = all && o.passed;
  }
  {
    Outcome o;
    for (const auto& row : ref.diagrams) {
      if (row.n <= 5) check_diagram_row(o, row, diagrams.at(row.n));
    }
    report(3, "new diagram classes, n = 2..5", o, seconds(diagram_time, 2, 5));
    all = all && o.passed;
    Observed observed;
    for (int n = 2; n <= 5; ++n) observed.diagrams[n] = diagrams.at(n);
    for (const auto& c : verify(observed).diff()) {
      std::cout << "      note: n=" << c.n << ' ' << c.column << ' ' << c.actual << " - " << c.note << '\n';
    }
  }
  {
    Outcome o;
    for (const auto& row : ref.diagrams) {
      if (row.n >= 6) check_diagram_row(o, row, diagrams.at(row.n));
    }
    report(4, "new diagram classes, n = 6..8", o, seconds(diagram_time, 6, 8));
    all = all && o.passed;
  }
  {
    Outcome o;
    Timer t;
    canonical_completeness(o);
    pruning_oracle(o);
    conservation(o);
    bracket_oracles(o);
    determinism(o);
    report(5, "property suites (canonical forms, pruning, conservation, slow bracket, mirror, determinism)", o,
           t.seconds());
    all = all && o.passed;
  }
  return all ? 0 : 1;
}
