#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "torustab/canonical.hpp"
#include "torustab/enumerate.hpp"
#include "torustab/laurent.hpp"
#include "torustab/primeness.hpp"

namespace torustab {

// Written into every dataset header. Bump when the traversal order, the encoding
// order or the key serialization changes.
inline constexpr const char* format_version = "torustab-1;bfs=s-then-alpha;order=alpha,sigma;key=mmk";

struct PipelineConfig {
  EnumConfig projection;
  bool global_switch = true;
  bool bigon_rule = true;
  bool participation = true;
  // Link keys absorb an overall factor +-a^k (see shift_canonical_key).
  bool link_shift = true;
  // Knot diagrams at n <= this value that admit an immediate Reidemeister II move
  // reduce to at most one crossing, a range the loopless pool cannot represent.
  // Their keys enter the library so that those types are not reported as new later.
  int reducible_seed_max_n = 3;
  int threads = 1;

  nlohmann::json to_json() const;
};

// First 16 hex digits of the SHA-256 of the encoding's JSON text.
std::string projection_id(const CanonicalEncoding& e);

struct ProjectionRecord {
  std::string id;
  CanonicalEncoding encoding;
  int components = 0;
  PrimenessReport primeness;

  nlohmann::json to_json() const;
  static ProjectionRecord from_json(const nlohmann::json& j);
};

struct ProjectionStats {
  int n = 0;
  std::uint64_t unsensed = 0;
  std::uint64_t removed_comp = 0;
  std::uint64_t removed_split = 0;
  std::uint64_t prime_total = 0;
  std::uint64_t prime_knots = 0;
  std::uint64_t prime_links = 0;
  // Prime link projections by number of components.
  std::map<int, std::uint64_t> link_distribution;

  friend bool operator==(const ProjectionStats&, const ProjectionStats&) = default;
};

ProjectionStats projection_stats(int n, const std::vector<ProjectionRecord>& records);

enum class DiagramKind { knot, link };
std::string to_string(DiagramKind kind);
DiagramKind parse_kind(const std::string& text);

struct DiagramRecord {
  std::string projection_id;
  std::string bits;
  DiagramKind kind = DiagramKind::knot;
  bool bigon_ok = true;
  std::optional<bool> participation_ok;  // links only
  std::optional<int> writhe;             // knots only
  BracketPoly bracket;
  std::optional<BracketPoly> x_poly;     // knots only
  std::string key;                       // hex
  bool new_at_n = false;

  nlohmann::json to_json() const;
  static DiagramRecord from_json(const nlohmann::json& j);
};

struct DiagramStats {
  int n = 0;
  std::uint64_t projections = 0;
  std::uint64_t assignments = 0;
  std::uint64_t bigon_rejected = 0;
  std::uint64_t participation_rejected = 0;
  std::uint64_t knot_diagrams = 0;
  std::uint64_t link_diagrams = 0;
  std::uint64_t knot_classes = 0;
  std::uint64_t link_classes = 0;
  std::uint64_t new_knots = 0;
  std::uint64_t new_links = 0;

  friend bool operator==(const DiagramStats&, const DiagramStats&) = default;
};

// Canonical keys seen at each crossing number, with their kind.
class KeyLibrary {
 public:
  struct Entry {
    DiagramKind kind;
    std::string key;  // raw bytes
    bool reduced = false;  // from a diagram removed by the bigon rule
    friend auto operator<=>(const Entry&, const Entry&) = default;
  };

  bool has_level(int n) const { return levels_.count(n) != 0; }
  std::vector<int> levels() const;
  const std::set<Entry>& level(int n) const;

  // Replaces level n.
  void set_level(int n, std::set<Entry> entries);

  // Looks only at levels strictly below `n`; reduced entries count like the others.
  bool contains_below(int n, DiagramKind kind, const std::string& key) const;

  // One file per level, library/<n>.keys, "knot <hex>" or "link <hex>" per line
  // with an optional trailing "reduced".
  void save(const std::filesystem::path& dir) const;
  void save_level(const std::filesystem::path& dir, int n) const;
  static KeyLibrary load(const std::filesystem::path& dir);

  friend bool operator==(const KeyLibrary&, const KeyLibrary&) = default;

 private:
  std::map<int, std::set<Entry>> levels_;
};

// Counts published alongside the method, kept verbatim for regression checks.
struct ReferenceTables {
  struct ProjectionRow {
    int n;
    std::uint64_t unsensed, removed_comp, removed_split, prime_total, knots, links;
  };
  struct DiagramRow {
    int n;
    std::uint64_t knots, links;
    // Counts from the older genus-one lists where they differ by convention.
    std::optional<std::uint64_t> published_knots, published_links;
  };

  static constexpr const char* version = "torus-tables-2025";

  std::vector<ProjectionRow> projections;
  std::map<int, std::map<int, std::uint64_t>> link_distribution;  // n -> c -> count
  std::vector<DiagramRow> diagrams;

  static const ReferenceTables& builtin();
};

struct StageResult {
  ProjectionStats projection_stats;
  std::vector<ProjectionRecord> records;
};

// Enumerates candidate projections with n crossings, classifies them and, if
// `out` is set, writes proj_n<n>.jsonl into that directory.
StageResult stage_projections(int n, const PipelineConfig& config,
                              const std::optional<std::filesystem::path>& out = std::nullopt);

struct DiagramStageResult {
  DiagramStats stats;
  std::vector<DiagramRecord> records;
};

// Classifies all diagrams on the prime projections in `records` and stores level n
// of `library`. Throws OrderingError unless library has every level 1..n-1.
// Writes diag_n<n>.jsonl into `out` when set.
DiagramStageResult stage_diagrams(int n, const PipelineConfig& config, KeyLibrary& library,
                                  const std::vector<ProjectionRecord>& records,
                                  const std::optional<std::filesystem::path>& out = std::nullopt);

// Dataset files: a header object followed by one record per line.
std::filesystem::path projection_file(const std::filesystem::path& dir, int n);
std::filesystem::path diagram_file(const std::filesystem::path& dir, int n);

void write_jsonl(const std::filesystem::path& file, const nlohmann::json& header,
                 const std::vector<nlohmann::json>& records);
// Returns (header, records). Throws IoError with the file name on failure.
std::pair<nlohmann::json, std::vector<nlohmann::json>> read_jsonl(const std::filesystem::path& file);

std::vector<ProjectionRecord> read_projection_records(const std::filesystem::path& file);
std::vector<DiagramRecord> read_diagram_records(const std::filesystem::path& file);
DiagramStats diagram_stats(int n, const std::vector<DiagramRecord>& records);

struct Observed {
  std::map<int, ProjectionStats> projections;
  std::map<int, DiagramStats> diagrams;
};

enum class CellStatus { match, mismatch, annotated };

struct VerifyCell {
  std::string table;
  int n = 0;
  std::string column;
  std::uint64_t expected = 0;
  std::uint64_t actual = 0;
  CellStatus status = CellStatus::match;
  std::string note;
};

struct VerifyReport {
  std::vector<VerifyCell> cells;

  bool ok() const;
  // Cells that are not plain matches.
  std::vector<VerifyCell> diff() const;
  std::string to_string() const;
};

VerifyReport verify(const Observed& observed, const ReferenceTables& reference = ReferenceTables::builtin());

}  // namespace torustab
