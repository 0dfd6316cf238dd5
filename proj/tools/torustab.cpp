// Command-line front end: enumerate projections, classify diagrams, check counts.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <regex>
#include <string>

#include <CLI11.hpp>

#include "torustab/bracket.hpp"
#include "torustab/errors.hpp"
#include "torustab/pipeline.hpp"
#include "torustab/selfcheck.hpp"

namespace fs = std::filesystem;
using namespace torustab;

namespace {

struct Options {
  int n = 0;
  fs::path out = ".";
  std::string library_dir;
  bool global_switch = true;
  bool bigon_rule = true;
  bool participation = true;
  bool link_shift = true;
  bool allow_loops = false;
  bool keep_monogons = false;
  int threads = 1;
  bool seed_check = false;
  std::uint64_t seed = 1;
  std::string show_file;
  int show_record = -1;
  std::string show_id;
};

PipelineConfig make_config(const Options& o) {
  PipelineConfig c;
  c.projection.allow_loops = o.allow_loops;
  c.projection.forbid_monogons = !o.keep_monogons;
  c.global_switch = o.global_switch;
  c.bigon_rule = o.bigon_rule;
  c.participation = o.participation;
  c.link_shift = o.link_shift;
  c.threads = o.threads;
  return c;
}

fs::path library_dir(const Options& o) { return o.library_dir.empty() ? o.out / "library" : fs::path(o.library_dir); }

void print_projection_stats(const ProjectionStats& s) {
  std::cout << "n=" << s.n << " unsensed=" << s.unsensed << " removed_comp=" << s.removed_comp
            << " removed_split=" << s.removed_split << " prime=" << s.prime_total << " knots=" << s.prime_knots
            << " links=" << s.prime_links;
  for (const auto& [c, count] : s.link_distribution) std::cout << " c" << c << "=" << count;
  std::cout << '\n';
}

void print_diagram_stats(const DiagramStats& s) {
  std::cout << "n=" << s.n << " projections=" << s.projections << " assignments=" << s.assignments
            << " bigon_rejected=" << s.bigon_rejected << " participation_rejected=" << s.participation_rejected
            << " knot_classes=" << s.knot_classes << " link_classes=" << s.link_classes << " new_knots=" << s.new_knots
            << " new_links=" << s.new_links << '\n';
}

std::vector<ProjectionRecord> projections_for(int n, const Options& o, const PipelineConfig& config) {
  const fs::path file = projection_file(o.out, n);
  if (fs::exists(file)) return read_projection_records(file);
  auto result = stage_projections(n, config, o.out);
  std::cerr << "built " << file.string() << '\n';
  return std::move(result.records);
}

int run_projections(const Options& o) {
  const auto result = stage_projections(o.n, make_config(o), o.out);
  print_projection_stats(result.projection_stats);
  std::cout << result.records.size() << " records -> " << projection_file(o.out, o.n).string() << '\n';
  return 0;
}

int run_diagrams(const Options& o) {
  const PipelineConfig config = make_config(o);
  const fs::path lib_dir = library_dir(o);
  KeyLibrary library = KeyLibrary::load(lib_dir);
  // Lower levels are built on demand so that the stage barrier holds.
  for (int k = 1; k < o.n; ++k) {
    if (library.has_level(k)) continue;
    const auto records = projections_for(k, o, config);
    stage_diagrams(k, config, library, records, o.out);
    library.save_level(lib_dir, k);
    std::cerr << "built library level " << k << '\n';
  }
  const auto records = projections_for(o.n, o, config);
  const auto result = stage_diagrams(o.n, config, library, records, o.out);
  library.save_level(lib_dir, o.n);
  print_diagram_stats(result.stats);
  std::cout << result.stats.new_knots << " new knot(s), " << result.stats.new_links << " new link(s)\n";
  return 0;
}

template <typename Stats>
Stats stats_from_header(const nlohmann::json& h);

template <>
ProjectionStats stats_from_header<ProjectionStats>(const nlohmann::json& h) {
  const auto& s = h.at("stats");
  ProjectionStats p;
  p.n = s.at("n");
  p.unsensed = s.at("unsensed");
  p.removed_comp = s.at("removed_comp");
  p.removed_split = s.at("removed_split");
  p.prime_total = s.at("prime_total");
  p.prime_knots = s.at("prime_knots");
  p.prime_links = s.at("prime_links");
  for (const auto& [c, count] : s.at("link_distribution").items()) p.link_distribution[std::stoi(c)] = count;
  return p;
}

template <>
DiagramStats stats_from_header<DiagramStats>(const nlohmann::json& h) {
  const auto& s = h.at("stats");
  DiagramStats d;
  d.n = s.at("n");
  d.projections = s.at("projections");
  d.assignments = s.at("assignments");
  d.bigon_rejected = s.at("bigon_rejected");
  d.participation_rejected = s.at("participation_rejected");
  d.knot_diagrams = s.at("knot_diagrams");
  d.link_diagrams = s.at("link_diagrams");
  d.knot_classes = s.at("knot_classes");
  d.link_classes = s.at("link_classes");
  d.new_knots = s.at("new_knots");
  d.new_links = s.at("new_links");
  return d;
}

int run_verify(const Options& o) {
  Observed observed;
  const std::regex name(R"((proj|diag)_n(\d+)\.jsonl)");
  if (!fs::is_directory(o.out)) throw IoError("no dataset directory " + o.out.string());
  for (const auto& item : fs::directory_iterator(o.out)) {
    std::smatch match;
    const std::string file = item.path().filename().string();
    if (!std::regex_match(file, match, name)) continue;
    const int n = std::stoi(match[2]);
    const auto [header, records] = read_jsonl(item.path());
    if (match[1] == "proj") {
      observed.projections[n] = stats_from_header<ProjectionStats>(header);
    } else {
      observed.diagrams[n] = stats_from_header<DiagramStats>(header);
    }
  }
  const VerifyReport report = verify(observed);
  std::cout << report.to_string();
  const auto diff = report.diff();
  std::cout << report.cells.size() << " cells checked, " << diff.size() << " not plain matches\n";
  return report.ok() ? 0 : 1;
}

void show_projection(const ProjectionRecord& r) {
  const LabelledMap m = r.encoding.to_map();
  std::cout << "projection " << r.id << "  n=" << r.encoding.n << '\n'
            << "  alpha  " << to_cycle_string(m.alpha()) << '\n'
            << "  sigma  " << to_cycle_string(m.sigma()) << '\n'
            << "  faces  " << to_cycle_string(face_permutation(m)) << '\n'
            << "  components " << r.components << "  prime " << (r.primeness.prime ? "yes" : "no") << '\n';
  if (r.primeness.two_edge_cut) {
    std::cout << "  two-edge cut: edges " << r.primeness.two_edge_cut->first << ", " << r.primeness.two_edge_cut->second
              << '\n';
  }
  if (r.primeness.split_component) std::cout << "  split component " << *r.primeness.split_component << '\n';
}

void show_diagram(const DiagramRecord& r) {
  std::cout << to_string(r.kind) << " diagram on " << r.projection_id << "  bits " << r.bits
            << (r.new_at_n ? "  (new)" : "") << '\n'
            << "  bracket " << r.bracket.to_string() << '\n';
  if (r.writhe) std::cout << "  writhe " << *r.writhe << '\n';
  if (r.x_poly) std::cout << "  X " << r.x_poly->to_string() << '\n';
  if (r.participation_ok) std::cout << "  participation " << (*r.participation_ok ? "ok" : "fails") << '\n';
  std::cout << "  key " << r.key << '\n';
}

int run_show(const Options& o) {
  const auto [header, records] = read_jsonl(o.show_file);
  const bool projections = header.value("kind", "") == "projections";
  std::cout << header.dump(2) << '\n';
  int shown = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (o.show_record >= 0 && static_cast<int>(i) != o.show_record) continue;
    if (projections) {
      const auto r = ProjectionRecord::from_json(records[i]);
      if (!o.show_id.empty() && r.id != o.show_id) continue;
      show_projection(r);
    } else {
      const auto r = DiagramRecord::from_json(records[i]);
      if (!o.show_id.empty() && r.projection_id != o.show_id) continue;
      show_diagram(r);
    }
    ++shown;
  }
  if (shown == 0 && (o.show_record >= 0 || !o.show_id.empty())) {
    std::cerr << "no matching record\n";
    return 1;
  }
  return 0;
}

int run_seed_check(const Options& o) {
  SelfCheckOptions options;
  options.seed = o.seed;
  bool ok = true;
  for (const auto& c : run_self_checks(options)) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
    ok = ok && c.passed;
  }
  return ok ? 0 : 1;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--out", o.out, "dataset directory")->capture_default_str();
  cmd->add_option("--threads", o.threads, "worker threads (TORUSTAB_THREADS overrides)")->check(CLI::PositiveNumber);
  cmd->add_flag("--allow-loops,!--no-allow-loops", o.allow_loops, "admit loop edges in projections");
  cmd->add_flag("--keep-monogons,!--no-keep-monogons", o.keep_monogons, "admit monogon faces in projections");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knot and link projections and diagrams on the torus"};
  app.require_subcommand(0, 1);
  Options o;
  app.add_flag("--seed-check", o.seed_check, "run the internal property checks");
  app.add_option("--seed", o.seed, "random seed for --seed-check")->capture_default_str();

  auto* projections = app.add_subcommand("projections", "enumerate projections and write proj_n<k>.jsonl");
  projections->add_option("--n", o.n, "crossing number")->required()->check(CLI::Range(1, 12));
  add_common(projections, o);

  auto* diagrams = app.add_subcommand("diagrams", "classify diagrams and write diag_n<k>.jsonl");
  diagrams->add_option("--n", o.n, "crossing number")->required()->check(CLI::Range(1, 12));
  add_common(diagrams, o);
  diagrams->add_option("--library-dir", o.library_dir, "key library (default <out>/library)");
  diagrams->add_flag("--global-switch,!--no-global-switch", o.global_switch, "identify b with its complement");
  diagrams->add_flag("--bigon-rule,!--no-bigon-rule", o.bigon_rule, "drop diagrams with a reducible bigon");
  diagrams->add_flag("--participation,!--no-participation", o.participation,
                     "links: every component must pass over and under");
  diagrams->add_flag("--link-shift,!--no-link-shift", o.link_shift, "link keys ignore an overall +-a^k factor");

  auto* verify_cmd = app.add_subcommand("verify", "compare dataset counts with the reference tables");
  verify_cmd->add_option("--out", o.out, "dataset directory")->capture_default_str();

  auto* show = app.add_subcommand("show", "pretty-print records of a dataset file");
  show->add_option("file", o.show_file, "proj_n<k>.jsonl or diag_n<k>.jsonl")->required();
  show->add_option("--record", o.show_record, "0-based record index");
  show->add_option("--id", o.show_id, "projection id");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 2;
  }

  try {
    int status = 0;
    if (o.seed_check) status = run_seed_check(o);
    if (*projections) return std::max(status, run_projections(o));
    if (*diagrams) return std::max(status, run_diagrams(o));
    if (*verify_cmd) return std::max(status, run_verify(o));
    if (*show) return std::max(status, run_show(o));
    if (!o.seed_check) {
      std::cerr << app.help();
      return 2;
    }
    return status;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
