// Command line front end. Every run is replayable: all randomness flows
// from --seed, and file outputs get a manifest naming the subcommand, the
// resolved flags, and every path touched.
//
// Exit codes: 0 completed, 1 domain error (invalid input, broken claim,
// truncated search without consent), 2 usage error.
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wicket/errors.hpp"
#include "wicket/extremal.hpp"
#include "wicket/generators.hpp"
#include "wicket/io.hpp"
#include "wicket/patterns.hpp"
#include "wicket/pipeline.hpp"
#include "wicket/system.hpp"
#include "wicket/version.hpp"

namespace {

// Insertion order is preserved in every JSON document the tool emits, so
// reports read naturally and reruns stay byte-identical.
using json = nlohmann::ordered_json;
using namespace wicket;

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int fail(const std::string& kind, const std::string& message) {
  json diag;
  diag["error"] = message;
  diag["kind"] = kind;
  std::cerr << diag.dump() << "\n";
  return kDomainError;
}

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << content;
  if (!out) throw IoError("write failed on " + path);
}

// Accepts both serializations: JSON when the first significant byte is
// '{', the line-oriented text format otherwise.
LinearTripleSystem load_system(const std::string& path) {
  std::string text = slurp(path);
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
    if (ch == '{') return read_system_json(text);
    break;
  }
  std::istringstream in(text);
  return read_system_text(in);
}

struct Manifest {
  std::string subcommand;
  std::map<std::string, json> flags;
  std::uint64_t seed = 0;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
};

void write_manifest(const Manifest& m, const std::string& path, double wall_seconds) {
  json doc;
  doc["subcommand"] = m.subcommand;
  doc["flags"] = m.flags;
  doc["seed"] = m.seed;
  doc["inputs"] = m.inputs;
  doc["outputs"] = m.outputs;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["wall_time_seconds"] = wall_seconds;
  spill(path, doc.dump(2) + "\n");
}

void print_report(const json& report, const std::string& format) {
  if (format == "json") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  // Flat two-line TSV: header row of keys, value row beneath. Nested
  // payloads are JSON-encoded in their cell.
  std::string keys, values;
  for (auto it = report.begin(); it != report.end(); ++it) {
    if (!keys.empty()) {
      keys += '\t';
      values += '\t';
    }
    keys += it.key();
    values += it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
  }
  std::cout << keys << "\n" << values << "\n";
}

std::string system_text(const LinearTripleSystem& sys) {
  std::ostringstream out;
  write_system_text(sys, out);
  return out.str();
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string type;
  int n = -1;
  int target = -1;
  std::uint64_t seed = 0;
  std::string pattern = "wicket";
  std::string out;
  std::string format = "json";
};

int run_gen(const GenArgs& a) {
  auto t0 = Clock::now();
  if (a.type != "ag23" && a.n < 0) {
    std::cerr << "gen --type " << a.type << " requires --n\n";
    return kUsageError;
  }
  if (a.type == "random" && a.target < 0) {
    std::cerr << "gen --type random requires --target\n";
    return kUsageError;
  }

  LinearTripleSystem sys(0);
  json config;
  config["type"] = a.type;
  json stats;
  if (a.type == "random") {
    GenResult r = random_linear(static_cast<VertexId>(a.n), a.target, a.seed);
    sys = std::move(r.system);
    config["n"] = a.n;
    config["target"] = a.target;
    config["seed"] = a.seed;
    stats["attempts"] = r.attempts;
    stats["rejections"] = r.rejections;
    stats["target_reached"] = r.target_reached;
  } else if (a.type == "sts") {
    sys = steiner_triple_system(static_cast<VertexId>(a.n));
    config["n"] = a.n;
  } else if (a.type == "ag23") {
    sys = affine_plane_order3();
  } else if (a.type == "rsz") {
    std::vector<long long> s = behrend_set(a.n);
    sys = rsz_system(static_cast<VertexId>(a.n), s);
    config["base"] = a.n;
    config["progression_free_set"] = s;
  } else {  // greedy
    Pattern pat = *pattern_from_string(a.pattern);
    GenResult r = greedy_pattern_free(static_cast<VertexId>(a.n), pat, a.seed);
    sys = std::move(r.system);
    config["n"] = a.n;
    config["pattern"] = a.pattern;
    config["seed"] = a.seed;
    stats["attempts"] = r.attempts;
    stats["rejections"] = r.rejections;
  }

  json cert;
  cert["linear"] = (validate(sys) == std::nullopt);
  if (a.type == "sts" || a.type == "ag23") {
    VertexId n = sys.vertex_count();
    cert["steiner"] = (sys.edge_count() * 6 == static_cast<std::size_t>(n) * (n - 1));
  } else if (a.type == "rsz") {
    cert["six_three_free"] = (count_63(sys) == 0);
  } else if (a.type == "greedy") {
    cert["pattern"] = a.pattern;
    cert["pattern_free"] = !contains_pattern(sys, *pattern_from_string(a.pattern));
  }

  std::string sidecar_path = a.out + ".json";
  std::string manifest_path = a.out + ".manifest.json";
  spill(a.out, system_text(sys));

  json sidecar;
  sidecar["config"] = config;
  if (!stats.is_null()) sidecar["stats"] = stats;
  sidecar["vertices"] = sys.vertex_count();
  sidecar["edges"] = sys.edge_count();
  sidecar["certification"] = cert;
  spill(sidecar_path, sidecar.dump(2) + "\n");

  Manifest m;
  m.subcommand = "gen";
  m.flags = {{"format", a.format}, {"n", a.n},        {"out", a.out},
             {"pattern", a.pattern}, {"seed", a.seed}, {"target", a.target},
             {"type", a.type}};
  m.seed = a.seed;
  m.outputs = {a.out, sidecar_path};
  write_manifest(m, manifest_path, seconds_since(t0));

  json report;
  report["out"] = a.out;
  report["sidecar"] = sidecar_path;
  report["manifest"] = manifest_path;
  report["vertices"] = sys.vertex_count();
  report["edges"] = sys.edge_count();
  report["certification"] = cert;
  print_report(report, a.format);

  for (auto it = cert.begin(); it != cert.end(); ++it)
    if (it.value().is_boolean() && !it.value().get<bool>())
      return fail("certification", "generated system failed check: " + it.key());
  return kOk;
}

// -------------------------------------------------------------- detect

struct DetectArgs {
  std::string in;
  std::string pattern;
  std::string out;
  std::string format = "json";
};

int run_detect(const DetectArgs& a) {
  auto t0 = Clock::now();
  LinearTripleSystem sys = load_system(a.in);
  Pattern pat = *pattern_from_string(a.pattern);

  std::optional<std::string> embedding_text;
  switch (pat) {
    case Pattern::wicket:
      if (auto w = find_wicket(sys)) embedding_text = to_json(*w);
      break;
    case Pattern::grid:
      if (auto g = find_grid(sys)) embedding_text = to_json(*g);
      break;
    case Pattern::six_three: {
      std::optional<SixThreeConfig> hit;
      enumerate_63(sys, [&](const SixThreeConfig& c) {
        hit = c;
        return false;
      });
      if (hit) embedding_text = to_json(*hit);
      break;
    }
    case Pattern::berge_c4:
      if (auto b = find_berge_c4(sys)) embedding_text = to_json(*b);
      break;
  }

  json report;
  report["pattern"] = a.pattern;
  report["found"] = embedding_text.has_value();
  if (embedding_text) report["embedding"] = json::parse(*embedding_text);
  print_report(report, a.format);

  if (!a.out.empty()) {
    spill(a.out, report.dump(2) + "\n");
    Manifest m;
    m.subcommand = "detect";
    m.flags = {{"format", a.format}, {"in", a.in}, {"out", a.out}, {"pattern", a.pattern}};
    m.inputs = {a.in};
    m.outputs = {a.out};
    write_manifest(m, a.out + ".manifest.json", seconds_since(t0));
  }
  return kOk;
}

// --------------------------------------------------------------- count

struct CountArgs {
  std::string in;
  std::string pattern;
  std::string format = "tsv";
};

int run_count(const CountArgs& a) {
  LinearTripleSystem sys = load_system(a.in);
  long long count = 0;
  if (a.pattern == "wicket")
    count = count_wickets(sys);
  else if (a.pattern == "grid")
    count = count_grids(sys);
  else
    count = count_63(sys);

  json report;
  report["n"] = sys.vertex_count();
  report["m"] = sys.edge_count();
  report["pattern"] = a.pattern;
  report["count"] = count;
  print_report(report, a.format);
  return kOk;
}

// ------------------------------------------------------------ extremal

struct ExtremalArgs {
  int n = 0;
  std::string pattern;  // empty: plain packing, no pattern barred
  long long budget_nodes = -1;
  double budget_seconds = -1.0;
  int threads = 1;
  bool allow_truncated = false;
  std::string out;
  std::string format = "tsv";
};

int run_extremal(const ExtremalArgs& a) {
  auto t0 = Clock::now();
  ExtremalOptions opt;
  opt.threads = a.threads;
  opt.node_budget = a.budget_nodes;
  opt.time_budget_seconds = a.budget_seconds;
  std::optional<Pattern> forbidden;
  if (!a.pattern.empty()) forbidden = *pattern_from_string(a.pattern);

  ExtremalRecord rec = max_edges_search(static_cast<VertexId>(a.n), forbidden, opt);
  if (!rec.proof_of_optimality && !a.allow_truncated)
    return fail("truncated",
                "budget ran out before the search space was exhausted; max_edges is only a "
                "lower bound. Pass --allow-truncated to accept the partial row.");
  if (auto err = check_witness(rec)) return fail("internal", *err);

  if (a.format == "json") {
    json report;
    report["n"] = rec.n;
    report["pattern"] = rec.forbidden ? to_string(*rec.forbidden) : "none";
    report["max_edges"] = rec.max_edges;
    report["proof"] = rec.proof_of_optimality;
    report["nodes"] = rec.nodes;
    report["seconds"] = rec.seconds;
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << extremal_tsv_header() << extremal_tsv_row(rec);
  }

  if (!a.out.empty()) {
    spill(a.out, extremal_tsv_header() + extremal_tsv_row(rec));
    std::string witness_path = a.out + ".witness.txt";
    spill(witness_path, system_text(rec.witness));
    Manifest m;
    m.subcommand = "extremal";
    m.flags = {{"allow-truncated", a.allow_truncated},
               {"budget-nodes", a.budget_nodes},
               {"budget-seconds", a.budget_seconds},
               {"format", a.format},
               {"n", a.n},
               {"out", a.out},
               {"pattern", a.pattern.empty() ? "none" : a.pattern},
               {"threads", a.threads}};
    m.outputs = {a.out, witness_path};
    write_manifest(m, a.out + ".manifest.json", seconds_since(t0));
  }
  return kOk;
}

// ------------------------------------------------------------ pipeline

struct PipelineArgs {
  std::string in;
  int proof = 1;
  std::uint64_t seed = 0;
  int rounds = 1;
  int threads = 1;
  std::string out;
  std::string format = "json";
};

int run_pipeline(const PipelineArgs& a) {
  auto t0 = Clock::now();
  LinearTripleSystem sys = load_system(a.in);
  SimulateOptions opt;
  opt.seed = a.seed;
  opt.rounds = a.rounds;
  opt.threads = a.threads;
  SimulationResult result =
      a.proof == 1 ? simulate_proof1(sys, opt) : simulate_proof2(sys, opt);

  json report;
  report["proof"] = a.proof;
  report["success"] = result.success;
  report["winning_round"] = result.winning_round;
  report["rounds_run"] = result.rounds_run;
  if (result.embedding) report["embedding"] = json::parse(to_json(*result.embedding));
  print_report(report, a.format);

  if (!a.out.empty()) {
    json trace;
    trace["proof"] = a.proof;
    trace["seed"] = a.seed;
    trace["rounds_requested"] = a.rounds;
    trace["rounds_run"] = result.rounds_run;
    trace["success"] = result.success;
    trace["winning_round"] = result.winning_round;
    json rounds = json::array();
    for (const RoundTrace& t : result.traces) {
      json r;
      r["round"] = t.round;
      r["transversal_edges"] = t.transversal_edges;
      r["eligible_configs"] = t.eligible;
      r["matching_size"] = t.matching_size;
      r["aux_edges"] = t.aux_edges;
      r["matching_classes"] = t.groups;
      r["candidates"] = t.candidates;
      r["success"] = t.success;
      rounds.push_back(r);
    }
    trace["rounds"] = rounds;

    std::string trace_path = a.out + ".trace.json";
    spill(trace_path, trace.dump(2) + "\n");
    Manifest m;
    m.subcommand = "pipeline";
    m.flags = {{"format", a.format}, {"in", a.in},         {"out", a.out},
               {"proof", a.proof},   {"rounds", a.rounds}, {"seed", a.seed},
               {"threads", a.threads}};
    m.seed = a.seed;
    m.inputs = {a.in};
    m.outputs = {trace_path};
    if (result.embedding) {
      std::string emb_path = a.out + ".embedding.json";
      spill(emb_path, to_json(*result.embedding) + "\n");
      m.outputs.push_back(emb_path);
    }
    write_manifest(m, a.out + ".manifest.json", seconds_since(t0));
  }
  return kOk;
}

// ------------------------------------------------------------ validate

struct ValidateArgs {
  std::string in;
  std::string embedding;
  std::string format = "json";
};

int run_validate(const ValidateArgs& a) {
  json report;
  LinearTripleSystem sys(0);
  try {
    sys = load_system(a.in);
  } catch (const ParseError& e) {
    report["valid"] = false;
    report["violation"] = e.what();
    print_report(report, a.format);
    return kDomainError;
  } catch (const FileValidationError& e) {
    report["valid"] = false;
    report["violation"] = e.what();
    print_report(report, a.format);
    return kDomainError;
  }

  if (a.embedding.empty()) {
    report["valid"] = true;
    report["vertices"] = sys.vertex_count();
    report["edges"] = sys.edge_count();
    print_report(report, a.format);
    return kOk;
  }

  std::string text = slurp(a.embedding);
  // detect's report wrapper nests the payload under "embedding"; accept it.
  try {
    json doc = json::parse(text);
    if (doc.is_object() && doc.contains("embedding")) text = doc["embedding"].dump();
  } catch (const json::parse_error&) {
    // leave text as is; the validator reports the malformed payload
  }
  std::optional<EmbeddingViolation> violation = validate_embedding_json(sys, text);
  report["valid"] = !violation.has_value();
  if (violation) report["violation"] = violation->detail;
  print_report(report, a.format);
  return violation ? kDomainError : kOk;
}

// ------------------------------------------------------------- convert

struct ConvertArgs {
  std::string in;
  std::string out;
  std::string format = "tsv";
};

int run_convert(const ConvertArgs& a) {
  auto t0 = Clock::now();
  LinearTripleSystem sys = load_system(a.in);
  std::string payload =
      a.format == "json" ? write_system_json(sys) + "\n" : system_text(sys);
  if (a.out.empty()) {
    std::cout << payload;
    return kOk;
  }
  spill(a.out, payload);
  Manifest m;
  m.subcommand = "convert";
  m.flags = {{"format", a.format}, {"in", a.in}, {"out", a.out}};
  m.inputs = {a.in};
  m.outputs = {a.out};
  write_manifest(m, a.out + ".manifest.json", seconds_since(t0));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for 3-uniform linear triple systems"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  const std::vector<std::string> kPatterns = {"wicket", "grid", "six_three", "berge_c4"};
  const std::vector<std::string> kFormats = {"tsv", "json"};

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "generate a system, write it with a sidecar");
  gen->add_option("--type", gen_args.type, "random|sts|ag23|rsz|greedy")
      ->required()
      ->check(CLI::IsMember({"random", "sts", "ag23", "rsz", "greedy"}));
  gen->add_option("--n", gen_args.n, "vertex count (rsz: base; ag23: fixed at 9)");
  gen->add_option("--target", gen_args.target, "edge target for --type random");
  gen->add_option("--seed", gen_args.seed, "64-bit seed, the only randomness source");
  gen->add_option("--pattern", gen_args.pattern, "pattern to avoid for --type greedy")
      ->check(CLI::IsMember(kPatterns));
  gen->add_option("--out", gen_args.out, "output path for the system file")->required();
  gen->add_option("--format", gen_args.format, "stdout report format")
      ->check(CLI::IsMember(kFormats));

  DetectArgs detect_args;
  CLI::App* detect = app.add_subcommand("detect", "find one embedding of a pattern");
  detect->add_option("--in", detect_args.in, "system file (text or JSON)")->required();
  detect->add_option("--pattern", detect_args.pattern, "pattern to look for")
      ->required()
      ->check(CLI::IsMember(kPatterns));
  detect->add_option("--out", detect_args.out, "also write the report here");
  detect->add_option("--format", detect_args.format, "report format")
      ->check(CLI::IsMember(kFormats));

  CountArgs count_args;
  CLI::App* count = app.add_subcommand("count", "count embeddings of a pattern");
  count->add_option("--in", count_args.in, "system file (text or JSON)")->required();
  count->add_option("--pattern", count_args.pattern, "wicket|grid|six_three")
      ->required()
      ->check(CLI::IsMember({"wicket", "grid", "six_three"}));
  count->add_option("--format", count_args.format, "report format")
      ->check(CLI::IsMember(kFormats));

  ExtremalArgs extremal_args;
  CLI::App* extremal =
      app.add_subcommand("extremal", "exact max edge count avoiding a pattern");
  extremal->add_option("--n", extremal_args.n, "vertex count")
      ->required()
      ->check(CLI::Range(0, 64));
  extremal->add_option("--pattern", extremal_args.pattern,
                       "pattern to forbid (omit for the plain packing number)")
      ->check(CLI::IsMember(kPatterns));
  extremal->add_option("--budget-nodes", extremal_args.budget_nodes,
                       "stop after this many search nodes (-1: unlimited)");
  extremal->add_option("--budget-seconds", extremal_args.budget_seconds,
                       "stop after this much wall time (-1: unlimited)");
  extremal->add_option("--threads", extremal_args.threads, "worker threads")
      ->check(CLI::Range(1, 256));
  extremal->add_flag("--allow-truncated", extremal_args.allow_truncated,
                     "emit a lower-bound row when a budget cuts the search short");
  extremal->add_option("--out", extremal_args.out,
                       "write the TSV table here, witness beside it");
  extremal->add_option("--format", extremal_args.format, "stdout report format")
      ->check(CLI::IsMember(kFormats));

  PipelineArgs pipeline_args;
  CLI::App* pipeline =
      app.add_subcommand("pipeline", "seeded wicket-finding rounds over an input system");
  pipeline->add_option("--in", pipeline_args.in, "system file (text or JSON)")->required();
  pipeline->add_option("--proof", pipeline_args.proof, "route: 1 or 2")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  pipeline->add_option("--seed", pipeline_args.seed, "64-bit master seed");
  pipeline->add_option("--rounds", pipeline_args.rounds, "round budget")
      ->check(CLI::PositiveNumber);
  pipeline->add_option("--threads", pipeline_args.threads, "worker threads")
      ->check(CLI::Range(1, 256));
  pipeline->add_option("--out", pipeline_args.out,
                       "base path: writes <out>.trace.json and, on success, "
                       "<out>.embedding.json");
  pipeline->add_option("--format", pipeline_args.format, "report format")
      ->check(CLI::IsMember(kFormats));

  ValidateArgs validate_args;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check a system file, or an embedding against it");
  validate_cmd->add_option("--in", validate_args.in, "system file (text or JSON)")
      ->required();
  validate_cmd->add_option("--embedding", validate_args.embedding,
                           "embedding JSON to check against the system");
  validate_cmd->add_option("--format", validate_args.format, "report format")
      ->check(CLI::IsMember(kFormats));

  ConvertArgs convert_args;
  CLI::App* convert =
      app.add_subcommand("convert", "normalize a system file (text or JSON either way)");
  convert->add_option("--in", convert_args.in, "system file (text or JSON)")->required();
  convert->add_option("--out", convert_args.out, "output path (stdout when absent)");
  convert->add_option("--format", convert_args.format, "tsv: text format; json")
      ->check(CLI::IsMember(kFormats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (gen->parsed()) return run_gen(gen_args);
    if (detect->parsed()) return run_detect(detect_args);
    if (count->parsed()) return run_count(count_args);
    if (extremal->parsed()) return run_extremal(extremal_args);
    if (pipeline->parsed()) return run_pipeline(pipeline_args);
    if (validate_cmd->parsed()) return run_validate(validate_args);
    if (convert->parsed()) return run_convert(convert_args);
  } catch (const ParseError& e) {
    return fail("parse", e.what());
  } catch (const FileValidationError& e) {
    return fail("validation", e.what());
  } catch (const SizeLimitExceeded& e) {
    return fail("domain", e.what());
  } catch (const std::invalid_argument& e) {
    return fail("domain", e.what());
  } catch (const IoError& e) {
    return fail("io", e.what());
  } catch (const std::exception& e) {
    return fail("internal", e.what());
  }
  return kUsageError;
}
