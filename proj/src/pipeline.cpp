#include "torustab/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <openssl/evp.h>

#include "torustab/bracket.hpp"
#include "torustab/diagram.hpp"
#include "torustab/errors.hpp"

namespace torustab {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

json encoding_json(const CanonicalEncoding& e) {
  return json{{"n", e.n}, {"alpha", e.alpha_images}, {"sigma", e.sigma_images}};
}

json laurent_json(const LaurentPoly& p) {
  json j = json::object();
  for (const auto& [k, c] : p.terms()) j[std::to_string(k)] = c;
  return j;
}

json bracket_json(const BracketPoly& p) {
  json j = json::object();
  for (const auto& [m, coeff] : p.terms()) j[std::to_string(m)] = laurent_json(coeff);
  return j;
}

BracketPoly bracket_from_json(const json& j) {
  BracketPoly p;
  for (const auto& [m, coeff] : j.items()) {
    for (const auto& [k, c] : coeff.items()) p.add_term(std::stoi(m), std::stoi(k), c.get<Coefficient>());
  }
  return p;
}

json projection_stats_json(const ProjectionStats& s) {
  json dist = json::object();
  for (const auto& [c, count] : s.link_distribution) dist[std::to_string(c)] = count;
  return json{{"n", s.n},
              {"unsensed", s.unsensed},
              {"removed_comp", s.removed_comp},
              {"removed_split", s.removed_split},
              {"prime_total", s.prime_total},
              {"prime_knots", s.prime_knots},
              {"prime_links", s.prime_links},
              {"link_distribution", dist}};
}

json diagram_stats_json(const DiagramStats& s) {
  return json{{"n", s.n},
              {"projections", s.projections},
              {"assignments", s.assignments},
              {"bigon_rejected", s.bigon_rejected},
              {"participation_rejected", s.participation_rejected},
              {"knot_diagrams", s.knot_diagrams},
              {"link_diagrams", s.link_diagrams},
              {"knot_classes", s.knot_classes},
              {"link_classes", s.link_classes},
              {"new_knots", s.new_knots},
              {"new_links", s.new_links}};
}

int resolved_threads(int requested) {
  if (const char* env = std::getenv("TORUSTAB_THREADS")) {
    try {
      const int value = std::stoi(env);
      if (value >= 1) return value;
    } catch (const std::exception&) {
    }
  }
  return std::max(1, requested);
}

// Runs work(i) for i in [0, count) on up to `threads` workers.
template <typename Work>
void parallel_for(std::size_t count, int threads, Work work) {
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(workers, count); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          work(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

struct ProjectionOutcome {
  std::vector<DiagramRecord> survivors;
  std::vector<std::string> reduced_keys;  // raw knot keys of bigon-reducible diagrams
  std::uint64_t assignments = 0;
  std::uint64_t bigon_rejected = 0;
  std::uint64_t participation_rejected = 0;
};

ProjectionOutcome classify_projection(const ProjectionRecord& record, const PipelineConfig& config) {
  ProjectionOutcome out;
  const LabelledMap m = record.encoding.to_map();
  auto projection = std::make_shared<const Projection>(m);
  const bool knot = projection->components() == 1;
  const GeometryTable table = precompute_geometry(m);
  const bool seed_reduced = knot && m.n() <= config.reducible_seed_max_n;

  for (const CrossingBits& bits : assignments(m, config.global_switch)) {
    ++out.assignments;
    const Diagram d{projection, bits};
    const bool bigon_ok = passes_bigon_rule(d);
    if (config.bigon_rule && !bigon_ok) {
      ++out.bigon_rejected;
      if (seed_reduced) out.reduced_keys.push_back(canonical_key(d, table, config.link_shift));
      continue;
    }
    DiagramRecord r;
    r.projection_id = record.id;
    r.bits = bits.to_string();
    r.kind = knot ? DiagramKind::knot : DiagramKind::link;
    r.bigon_ok = bigon_ok;
    r.bracket = evaluate_bracket(m, bits, table);
    if (knot) {
      const int w = writhe(d);
      r.writhe = w;
      r.x_poly = r.bracket.scaled(w % 2 != 0 ? -1 : 1, -3 * w);
      r.key = mirror_canonical_key(*r.x_poly);
    } else {
      r.participation_ok = torustab::participation_ok(d);
      if (config.participation && !*r.participation_ok) {
        ++out.participation_rejected;
        continue;
      }
      r.key = config.link_shift ? shift_canonical_key(r.bracket) : mirror_canonical_key(r.bracket);
    }
    out.survivors.push_back(std::move(r));
  }
  return out;
}

void check_writable(std::ofstream& os, const fs::path& file) {
  if (!os) throw IoError("cannot write " + file.string());
}

}  // namespace

json PipelineConfig::to_json() const {
  return json{{"allow_loops", projection.allow_loops},
              {"forbid_monogons", projection.forbid_monogons},
              {"genus", EnumConfig::genus},
              {"global_switch", global_switch},
              {"bigon_rule", bigon_rule},
              {"participation", participation},
              {"link_shift", link_shift},
              {"reducible_seed_max_n", reducible_seed_max_n}};
}

std::string projection_id(const CanonicalEncoding& e) {
  const std::string text = encoding_json(e).dump();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw ResourceError("projection_id: SHA-256 failed");
  }
  return to_hex(std::string(reinterpret_cast<const char*>(digest), 8));
}

json ProjectionRecord::to_json() const {
  json j{{"id", id},
         {"n", encoding.n},
         {"alpha", encoding.alpha_images},
         {"sigma", encoding.sigma_images},
         {"components", components},
         {"prime", primeness.prime}};
  j["two_edge_cut"] = primeness.two_edge_cut ? json::array({primeness.two_edge_cut->first, primeness.two_edge_cut->second})
                                             : json(nullptr);
  j["split_component"] = primeness.split_component ? json(*primeness.split_component) : json(nullptr);
  return j;
}

ProjectionRecord ProjectionRecord::from_json(const json& j) {
  ProjectionRecord r;
  try {
    r.id = j.at("id").get<std::string>();
    r.encoding.n = j.at("n").get<int>();
    r.encoding.alpha_images = j.at("alpha").get<std::vector<Dart>>();
    r.encoding.sigma_images = j.at("sigma").get<std::vector<Dart>>();
    r.components = j.at("components").get<int>();
    r.primeness.prime = j.at("prime").get<bool>();
    if (const auto& cut = j.at("two_edge_cut"); !cut.is_null()) {
      r.primeness.two_edge_cut = std::make_pair(cut.at(0).get<int>(), cut.at(1).get<int>());
    }
    if (const auto& split = j.at("split_component"); !split.is_null()) r.primeness.split_component = split.get<int>();
  } catch (const json::exception& e) {
    throw StructuralError(std::string("projection record: ") + e.what());
  }
  // Validates the permutations.
  (void)r.encoding.to_map();
  if (projection_id(r.encoding) != r.id) throw StructuralError("projection record: id does not match encoding");
  return r;
}

ProjectionStats projection_stats(int n, const std::vector<ProjectionRecord>& records) {
  ProjectionStats s;
  s.n = n;
  for (const auto& r : records) {
    ++s.unsensed;
    if (r.primeness.two_edge_cut) {
      ++s.removed_comp;
    } else if (r.primeness.split_component) {
      ++s.removed_split;
    }
    if (!r.primeness.prime) continue;
    ++s.prime_total;
    if (r.components == 1) {
      ++s.prime_knots;
    } else {
      ++s.prime_links;
      ++s.link_distribution[r.components];
    }
  }
  return s;
}

std::string to_string(DiagramKind kind) { return kind == DiagramKind::knot ? "knot" : "link"; }

DiagramKind parse_kind(const std::string& text) {
  if (text == "knot") return DiagramKind::knot;
  if (text == "link") return DiagramKind::link;
  throw StructuralError("unknown diagram kind '" + text + "'");
}

json DiagramRecord::to_json() const {
  json j{{"projection", projection_id},
         {"bits", bits},
         {"kind", to_string(kind)},
         {"bigon_ok", bigon_ok}};
  j["participation_ok"] = participation_ok ? json(*participation_ok) : json(nullptr);
  j["writhe"] = writhe ? json(*writhe) : json(nullptr);
  j["bracket"] = bracket_json(bracket);
  j["x_poly"] = x_poly ? bracket_json(*x_poly) : json(nullptr);
  j["key"] = key;
  j["new_at_n"] = new_at_n;
  return j;
}

DiagramRecord DiagramRecord::from_json(const json& j) {
  DiagramRecord r;
  try {
    r.projection_id = j.at("projection").get<std::string>();
    r.bits = j.at("bits").get<std::string>();
    r.kind = parse_kind(j.at("kind").get<std::string>());
    r.bigon_ok = j.at("bigon_ok").get<bool>();
    if (!j.at("participation_ok").is_null()) r.participation_ok = j.at("participation_ok").get<bool>();
    if (!j.at("writhe").is_null()) r.writhe = j.at("writhe").get<int>();
    r.bracket = bracket_from_json(j.at("bracket"));
    if (!j.at("x_poly").is_null()) r.x_poly = bracket_from_json(j.at("x_poly"));
    r.key = j.at("key").get<std::string>();
    r.new_at_n = j.at("new_at_n").get<bool>();
  } catch (const json::exception& e) {
    throw StructuralError(std::string("diagram record: ") + e.what());
  }
  (void)CrossingBits::parse(r.bits);
  return r;
}

DiagramStats diagram_stats(int n, const std::vector<DiagramRecord>& records) {
  DiagramStats s;
  s.n = n;
  std::set<std::string> knots, links, new_knots, new_links;
  for (const auto& r : records) {
    const bool knot = r.kind == DiagramKind::knot;
    ++(knot ? s.knot_diagrams : s.link_diagrams);
    (knot ? knots : links).insert(r.key);
    if (r.new_at_n) (knot ? new_knots : new_links).insert(r.key);
  }
  s.knot_classes = knots.size();
  s.link_classes = links.size();
  s.new_knots = new_knots.size();
  s.new_links = new_links.size();
  return s;
}

std::vector<int> KeyLibrary::levels() const {
  std::vector<int> out;
  for (const auto& [n, entries] : levels_) out.push_back(n);
  return out;
}

const std::set<KeyLibrary::Entry>& KeyLibrary::level(int n) const {
  const auto it = levels_.find(n);
  if (it == levels_.end()) throw OrderingError("key library has no level " + std::to_string(n));
  return it->second;
}

void KeyLibrary::set_level(int n, std::set<Entry> entries) { levels_[n] = std::move(entries); }

bool KeyLibrary::contains_below(int n, DiagramKind kind, const std::string& key) const {
  for (auto it = levels_.begin(); it != levels_.end() && it->first < n; ++it) {
    const auto& entries = it->second;
    const auto hit = entries.lower_bound(Entry{kind, key, false});
    if (hit != entries.end() && hit->kind == kind && hit->key == key) return true;
  }
  return false;
}

void KeyLibrary::save_level(const fs::path& dir, int n) const {
  fs::create_directories(dir);
  const fs::path file = dir / (std::to_string(n) + ".keys");
  std::ofstream os(file);
  check_writable(os, file);
  os << "# " << format_version << " level " << n << '\n';
  for (const auto& e : level(n)) {
    os << to_string(e.kind) << ' ' << to_hex(e.key);
    if (e.reduced) os << " reduced";
    os << '\n';
  }
  if (!os) throw IoError("write failed: " + file.string());
}

void KeyLibrary::save(const fs::path& dir) const {
  for (const auto& [n, entries] : levels_) save_level(dir, n);
}

KeyLibrary KeyLibrary::load(const fs::path& dir) {
  KeyLibrary lib;
  if (!fs::exists(dir)) return lib;
  if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir.string());
  for (const auto& item : fs::directory_iterator(dir)) {
    const fs::path& file = item.path();
    if (file.extension() != ".keys") continue;
    int n = 0;
    try {
      n = std::stoi(file.stem().string());
    } catch (const std::exception&) {
      throw IoError("unexpected library file " + file.string());
    }
    std::ifstream is(file);
    if (!is) throw IoError("cannot read " + file.string());
    std::set<Entry> entries;
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
      ++line_no;
      if (line.empty() || line[0] == '#') continue;
      std::istringstream fields(line);
      std::string kind, hex, flag;
      fields >> kind >> hex >> flag;
      try {
        if (!flag.empty() && flag != "reduced") throw StructuralError("unknown flag '" + flag + "'");
        entries.insert(Entry{parse_kind(kind), from_hex(hex), flag == "reduced"});
      } catch (const StructuralError& e) {
        throw IoError(file.string() + ":" + std::to_string(line_no) + ": " + e.what());
      }
    }
    lib.set_level(n, std::move(entries));
  }
  return lib;
}

const ReferenceTables& ReferenceTables::builtin() {
  static const ReferenceTables tables = [] {
    ReferenceTables t;
    t.projections = {
        {3, 6, 0, 0, 6, 2, 4},
        {4, 28, 5, 0, 23, 10, 13},
        {5, 109, 28, 0, 81, 34, 47},
        {6, 595, 216, 0, 379, 170, 209},
        {7, 3216, 1421, 0, 1795, 777, 1018},
        {8, 19956, 10141, 0, 9815, 4308, 5507},
    };
    t.link_distribution = {
        {3, {{2, 3}, {3, 1}, {4, 0}, {5, 0}, {6, 0}}},
        {4, {{2, 9}, {3, 3}, {4, 1}, {5, 0}, {6, 0}}},
        {5, {{2, 37}, {3, 9}, {4, 1}, {5, 0}, {6, 0}}},
        {6, {{2, 150}, {3, 51}, {4, 7}, {5, 1}, {6, 0}}},
        {7, {{2, 775}, {3, 212}, {4, 30}, {5, 1}, {6, 0}}},
        {8, {{2, 4030}, {3, 1293}, {4, 169}, {5, 14}, {6, 1}}},
    };
    t.diagrams = {
        {2, 1, 1, std::nullopt, std::nullopt},
        {3, 3, 4, std::nullopt, std::nullopt},
        {4, 18, 22, 17, 21},
        {5, 71, 99, 69, std::nullopt},
        {6, 378, 525, std::nullopt, std::nullopt},
        {7, 1743, 2909, std::nullopt, std::nullopt},
        {8, 10704, 16752, std::nullopt, std::nullopt},
    };
    return t;
  }();
  return tables;
}

fs::path projection_file(const fs::path& dir, int n) { return dir / ("proj_n" + std::to_string(n) + ".jsonl"); }
fs::path diagram_file(const fs::path& dir, int n) { return dir / ("diag_n" + std::to_string(n) + ".jsonl"); }

void write_jsonl(const fs::path& file, const json& header, const std::vector<json>& records) {
  if (file.has_parent_path()) fs::create_directories(file.parent_path());
  std::ofstream os(file);
  check_writable(os, file);
  os << header.dump() << '\n';
  for (const auto& r : records) os << r.dump() << '\n';
  if (!os) throw IoError("write failed: " + file.string());
}

std::pair<json, std::vector<json>> read_jsonl(const fs::path& file) {
  std::ifstream is(file);
  if (!is) throw IoError("cannot read " + file.string());
  std::pair<json, std::vector<json>> out;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw IoError(file.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (line_no == 1) {
      if (!j.contains("format")) throw IoError(file.string() + ": missing header line");
      if (j["format"] != format_version) {
        throw IoError(file.string() + ": format '" + j["format"].get<std::string>() + "' is not " + format_version);
      }
      out.first = std::move(j);
    } else {
      out.second.push_back(std::move(j));
    }
  }
  if (line_no == 0) throw IoError(file.string() + ": empty file");
  return out;
}

std::vector<ProjectionRecord> read_projection_records(const fs::path& file) {
  auto [header, lines] = read_jsonl(file);
  std::vector<ProjectionRecord> records;
  records.reserve(lines.size());
  for (const auto& j : lines) records.push_back(ProjectionRecord::from_json(j));
  return records;
}

std::vector<DiagramRecord> read_diagram_records(const fs::path& file) {
  auto [header, lines] = read_jsonl(file);
  std::vector<DiagramRecord> records;
  records.reserve(lines.size());
  for (const auto& j : lines) records.push_back(DiagramRecord::from_json(j));
  return records;
}

StageResult stage_projections(int n, const PipelineConfig& config, const std::optional<fs::path>& out) {
  if (n < 1) throw DomainError("stage_projections: n must be at least 1");
  StageResult result;
  const auto classes = enumerate_projection_classes(n, config.projection, resolved_threads(config.threads));
  result.records.resize(classes.size());
  parallel_for(classes.size(), resolved_threads(config.threads), [&](std::size_t i) {
    ProjectionRecord& r = result.records[i];
    r.encoding = classes[i];
    r.id = projection_id(r.encoding);
    const LabelledMap m = r.encoding.to_map();
    r.components = component_count(m);
    r.primeness = is_prime(m);
  });
  result.projection_stats = projection_stats(n, result.records);

  if (out) {
    json header{{"format", format_version},
                {"kind", "projections"},
                {"n", n},
                {"config", config.to_json()},
                {"stats", projection_stats_json(result.projection_stats)}};
    std::vector<json> lines;
    lines.reserve(result.records.size());
    for (const auto& r : result.records) lines.push_back(r.to_json());
    write_jsonl(projection_file(*out, n), header, lines);
  }
  return result;
}

DiagramStageResult stage_diagrams(int n, const PipelineConfig& config, KeyLibrary& library,
                                  const std::vector<ProjectionRecord>& records, const std::optional<fs::path>& out) {
  for (int k = 1; k < n; ++k) {
    if (!library.has_level(k)) {
      throw OrderingError("stage_diagrams: level " + std::to_string(n) + " needs library level " + std::to_string(k));
    }
  }
  std::vector<const ProjectionRecord*> prime;
  for (const auto& r : records) {
    if (r.encoding.n != n) throw StructuralError("stage_diagrams: record " + r.id + " is not at level " + std::to_string(n));
    if (r.primeness.prime) prime.push_back(&r);
  }

  std::vector<ProjectionOutcome> outcomes(prime.size());
  parallel_for(prime.size(), resolved_threads(config.threads),
               [&](std::size_t i) { outcomes[i] = classify_projection(*prime[i], config); });

  // Single-threaded merge in projection order.
  DiagramStageResult result;
  DiagramStats& s = result.stats;
  s.n = n;
  s.projections = prime.size();
  std::set<KeyLibrary::Entry> level;
  std::set<std::string> knots, links, new_knots, new_links;
  for (auto& o : outcomes) {
    s.assignments += o.assignments;
    s.bigon_rejected += o.bigon_rejected;
    s.participation_rejected += o.participation_rejected;
    for (auto& key : o.reduced_keys) level.insert({DiagramKind::knot, std::move(key), true});
    for (auto& r : o.survivors) {
      const bool knot = r.kind == DiagramKind::knot;
      ++(knot ? s.knot_diagrams : s.link_diagrams);
      (knot ? knots : links).insert(r.key);
      r.new_at_n = !library.contains_below(n, r.kind, r.key);
      if (r.new_at_n) (knot ? new_knots : new_links).insert(r.key);
      level.insert({r.kind, r.key, false});
      r.key = to_hex(r.key);
    }
  }
  s.knot_classes = knots.size();
  s.link_classes = links.size();
  s.new_knots = new_knots.size();
  s.new_links = new_links.size();
  library.set_level(n, std::move(level));

  for (auto& o : outcomes) {
    std::move(o.survivors.begin(), o.survivors.end(), std::back_inserter(result.records));
    o.survivors.clear();
    o.survivors.shrink_to_fit();
  }

  if (out) {
    json header{{"format", format_version},
                {"kind", "diagrams"},
                {"n", n},
                {"config", config.to_json()},
                {"stats", diagram_stats_json(s)}};
    std::vector<json> lines;
    lines.reserve(result.records.size());
    for (const auto& r : result.records) lines.push_back(r.to_json());
    write_jsonl(diagram_file(*out, n), header, lines);
  }
  return result;
}

bool VerifyReport::ok() const {
  return std::none_of(cells.begin(), cells.end(), [](const VerifyCell& c) { return c.status == CellStatus::mismatch; });
}

std::vector<VerifyCell> VerifyReport::diff() const {
  std::vector<VerifyCell> out;
  for (const auto& c : cells) {
    if (c.status != CellStatus::match) out.push_back(c);
  }
  return out;
}

std::string VerifyReport::to_string() const {
  std::ostringstream os;
  for (const auto& c : cells) {
    const char* tag = c.status == CellStatus::match ? "ok" : c.status == CellStatus::mismatch ? "MISMATCH" : "note";
    os << tag << ' ' << c.table << " n=" << c.n << ' ' << c.column << " expected=" << c.expected
       << " actual=" << c.actual;
    if (!c.note.empty()) os << " (" << c.note << ')';
    os << '\n';
  }
  return os.str();
}

VerifyReport verify(const Observed& observed, const ReferenceTables& reference) {
  VerifyReport report;
  auto cell = [&](const std::string& table, int n, const std::string& column, std::uint64_t expected,
                  std::uint64_t actual) -> VerifyCell& {
    report.cells.push_back({table, n, column, expected, actual,
                            expected == actual ? CellStatus::match : CellStatus::mismatch, ""});
    return report.cells.back();
  };

  for (const auto& row : reference.projections) {
    const auto it = observed.projections.find(row.n);
    if (it == observed.projections.end()) continue;
    const ProjectionStats& s = it->second;
    cell("projections", row.n, "unsensed", row.unsensed, s.unsensed);
    cell("projections", row.n, "removed_comp", row.removed_comp, s.removed_comp);
    cell("projections", row.n, "removed_split", row.removed_split, s.removed_split);
    cell("projections", row.n, "prime_total", row.prime_total, s.prime_total);
    cell("projections", row.n, "prime_knots", row.knots, s.prime_knots);
    cell("projections", row.n, "prime_links", row.links, s.prime_links);
    if (const auto d = reference.link_distribution.find(row.n); d != reference.link_distribution.end()) {
      for (const auto& [c, expected] : d->second) {
        const auto a = s.link_distribution.find(c);
        cell("link_components", row.n, "c=" + std::to_string(c), expected, a == s.link_distribution.end() ? 0 : a->second);
      }
    }
  }

  for (const auto& row : reference.diagrams) {
    const auto it = observed.diagrams.find(row.n);
    if (it == observed.diagrams.end()) continue;
    auto annotate = [](VerifyCell& c, std::optional<std::uint64_t> published, const char* reason) {
      if (c.status != CellStatus::match || !published) return;
      c.status = CellStatus::annotated;
      c.note = "older genus-one list has " + std::to_string(*published) + "; " + reason;
    };
    VerifyCell& k = cell("diagrams", row.n, "new_knots", row.knots, it->second.new_knots);
    annotate(k, row.published_knots,
             row.n == 4 ? "the bigon-free projection carries a diagram excluded there by a global primeness convention"
                        : "two classes need global normalizations beyond the bigon rule");
    VerifyCell& l = cell("diagrams", row.n, "new_links", row.links, it->second.new_links);
    annotate(l, row.published_links, "a later global equivalence merges two classes");
  }
  return report;
}

}  // namespace torustab
