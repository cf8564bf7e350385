#include "finloc/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "finloc/cache.hpp"
#include "finloc/corpus.hpp"
#include "finloc/dot.hpp"
#include "finloc/errors.hpp"
#include "finloc/frame_spec.hpp"
#include "finloc/report.hpp"

namespace finloc {

namespace {

namespace fs = std::filesystem;

struct FileArgs {
  std::string file;
  bool oracle = false;
  bool timing = false;
  std::uint64_t seed = 0;
  std::string cache;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int report_command(const FileArgs &a, bool verify, std::ostream &out) {
  auto spec = parse_frame_spec(read_file(a.file));
  auto frame = build_frame(spec);
  const auto name = spec.name ? *spec.name : fs::path(a.file).stem().string();

  std::optional<ResultCache> cache;
  std::string key;
  if (!a.cache.empty()) {
    cache.emplace(a.cache);
    std::string flags = verify ? "verify" : "analyze";
    flags += a.oracle ? " oracle" : "";
    flags += a.timing ? " timing" : "";
    flags += " seed=" + std::to_string(a.seed) + " name=" + name;
    key = ResultCache::key(serialize_frame_spec(spec), flags);
    if (auto hit = cache->get(key)) {
      auto r = report_from_json(*hit);
      out << report_to_pretty_json(r) << '\n';
      return r.failed() ? kExitIntegrityFailure : kExitOk;
    }
  }

  AnalysisOptions options;
  options.verify = verify;
  options.oracle = a.oracle;
  options.timing = a.timing;
  options.seed = a.seed;
  auto r = analyze_frame(frame, name, options);
  if (cache)
    cache->put(key, report_to_json(r));
  out << report_to_pretty_json(r) << '\n';
  return r.failed() ? kExitIntegrityFailure : kExitOk;
}

void add_file_options(CLI::App *cmd, FileArgs &a, bool with_oracle) {
  cmd->add_option("file", a.file, "FrameSpec JSON file")->required();
  if (with_oracle)
    cmd->add_flag("--oracle", a.oracle, "Cross-check against the enumeration oracles");
  cmd->add_option("--seed", a.seed, "Seed for sampled checks");
  cmd->add_flag("--timing", a.timing, "Include runtime_ms in the report");
  cmd->add_option("--cache", a.cache, "Directory for cached results");
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Finite frames, sublocales, Booleanization and DeMorganization",
               "finloc"};
  app.require_subcommand(1);

  FileArgs analyze_args, verify_args;
  add_file_options(app.add_subcommand("analyze", "Report B_L, M_L and flags for one frame"),
                   analyze_args, true);
  add_file_options(app.add_subcommand("verify", "Run the full invariant suite on one frame"),
                   verify_args, true);

  CorpusOptions corpus;
  std::string corpus_out, corpus_cache;
  auto *corpus_cmd = app.add_subcommand("corpus", "Verify a sweep of finite topologies");
  corpus_cmd->add_option("--points", corpus.points, "Number of points")->required();
  auto *all = corpus_cmd->add_flag("--all", corpus.all, "Every topology (points <= 4)");
  auto *random = corpus_cmd->add_option("--random", corpus.random,
                                        "Number of seeded random topologies (points <= 6)");
  all->excludes(random);
  corpus_cmd->add_option("--seed", corpus.seed, "Seed");
  corpus_cmd->add_flag("--oracle", corpus.oracle, "Run the enumeration oracles");
  corpus_cmd->add_option("--out", corpus_out, "Write JSON-lines reports here");
  corpus_cmd->add_option("--jobs", corpus.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  corpus_cmd->add_flag("--timing", corpus.timing, "Include runtime_ms in reports");
  corpus_cmd->add_option("--cache", corpus_cache, "Directory for cached results");

  std::string dot_file, dot_what = "frame";
  auto *dot_cmd = app.add_subcommand("export-dot", "Hasse diagram in DOT format");
  dot_cmd->add_option("file", dot_file, "FrameSpec JSON file")->required();
  dot_cmd->add_option("--what", dot_what, "frame or sublocales")
      ->check(CLI::IsMember({"frame", "sublocales"}));

  std::vector<std::string> argv_store{"finloc"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char *> argv;
  for (auto &s : argv_store)
    argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (app.got_subcommand("analyze"))
      return report_command(analyze_args, false, out);
    if (app.got_subcommand("verify"))
      return report_command(verify_args, true, out);
    if (app.got_subcommand("export-dot")) {
      auto frame = build_frame(parse_frame_spec(read_file(dot_file)));
      out << (dot_what == "frame" ? frame_to_dot(frame) : sublocales_to_dot(frame));
      return kExitOk;
    }
    // corpus
    if (!corpus.all && corpus.random == 0)
      throw InputError("corpus needs --all or --random K");
    if (!corpus_cache.empty())
      corpus.cache = corpus_cache;
    CorpusSummary summary;
    if (corpus_out.empty()) {
      summary = run_corpus(corpus, out);
    } else {
      std::ofstream file(corpus_out, std::ios::binary | std::ios::trunc);
      if (!file)
        throw InputError("cannot write " + corpus_out);
      summary = run_corpus(corpus, file);
    }
    out << summary_to_json(summary) << '\n';
    return summary.failures == 0 ? kExitOk : kExitIntegrityFailure;
  } catch (const InputError &e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const IntegrityError &e) {
    err << "integrity failure: " << e.what() << '\n';
    return kExitIntegrityFailure;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << '\n';
    return kExitIntegrityFailure;
  }
}

} // namespace finloc
