#include "semsum/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "semsum/corpus.hpp"
#include "semsum/error.hpp"
#include "semsum/features.hpp"
#include "semsum/fusionlab.hpp"
#include "semsum/report.hpp"
#include "semsum/rouge.hpp"

namespace semsum::cli {

namespace {

constexpr double kDefaultClusterBytes = 665.0;
constexpr double kDefaultDocumentSentences = 3.0;

const std::set<std::string>& boolean_flags() {
  static const std::set<std::string> kFlags = {
      "use-compressed", "no-lazy",  "allow-missing",   "no-stem",
      "split-sentences", "raw-cosine", "mean-all-tokens", "singleton-check",
  };
  return kFlags;
}

const std::set<std::string>& budget_flags() {
  static const std::set<std::string> kFlags = {"budget-bytes", "budget-sentences",
                                               "budget-cost"};
  return kFlags;
}

struct Options {
  // Input and resources.
  std::string input;
  std::string format;
  bool split_sentences = false;
  std::string stopwords;
  bool use_compressed = false;
  std::string embeddings;
  std::string contextual;
  bool allow_missing = false;
  // Features and fusion.
  std::vector<std::string> features;
  std::string fusion = "none";
  std::vector<double> fusion_weights;
  std::size_t k_nn = 7;
  bool raw_cosine = false;
  bool mean_all_tokens = false;
  // Selection.
  std::optional<double> budget_bytes;
  std::optional<double> budget_sentences;
  std::optional<double> budget_cost;
  double lambda = 6.0;
  std::size_t partitions = 0;
  std::uint64_t seed = 0;
  bool no_lazy = false;
  bool singleton_check = false;
  // Evaluation.
  std::vector<std::string> metrics = {"r1", "r2", "rl"};
  std::optional<std::size_t> byte_limit;
  bool no_stem = false;
  // Outputs.
  std::string export_graph;
  std::string output;
  std::string report;
  std::size_t jobs = 1;
  std::string config;
  std::vector<std::string> evaluate_paths;
};

std::string trim_copy(std::string_view text) {
  const auto begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  const auto end = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(begin, end - begin + 1));
}

bool present(const std::vector<std::string>& args, const std::string& key) {
  const std::string flag = "--" + key;
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == flag || a.rfind(flag + "=", 0) == 0;
  });
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void add_input_options(CLI::App& cmd, Options& o) {
  cmd.add_option("--input", o.input, "Task unit file (summarize) or dataset directory (pipeline)")
      ->required();
  cmd.add_option("--format", o.format, "Input format; default from extension")
      ->check(CLI::IsMember({"lines", "cluster-json"}));
  cmd.add_flag("--split-sentences", o.split_sentences,
               "Split lines-format input with the rule-based splitter");
  cmd.add_option("--stopwords", o.stopwords, "Function-word list, one token per line");
  cmd.add_flag("--use-compressed", o.use_compressed,
               "Select over the compressed sentence variants of cluster-json input");
  cmd.add_option("--embeddings", o.embeddings, "Static word-vector table (text format)");
  cmd.add_option("--contextual", o.contextual,
                 "Contextual token vectors (JSONL file; a directory of <unit_id>.jsonl for "
                 "pipeline)");
  cmd.add_flag("--allow-missing", o.allow_missing,
               "Tolerate sentences absent from the contextual file");
}

void add_selection_options(CLI::App& cmd, Options& o) {
  cmd.add_option("--feature", o.features, "Similarity feature (repeatable)")
      ->delimiter(',')
      ->check(CLI::IsMember({"tfidf", "emb-mean", "bert-mean", "tss", "wmd"}));
  cmd.add_option("--fusion", o.fusion, "Fusion scheme")
      ->check(CLI::IsMember({"none", "graph", "late"}));
  cmd.add_option("--fusion-weights", o.fusion_weights, "Graph fusion weights, one per feature")
      ->delimiter(',');
  cmd.add_option("--k-nn", o.k_nn, "Neighbor rank used for local kernel scaling")
      ->check(CLI::PositiveNumber);
  cmd.add_flag("--raw-cosine", o.raw_cosine, "Do not clamp negative cosine similarities");
  cmd.add_flag("--mean-all-tokens", o.mean_all_tokens,
               "Average embeddings over all tokens rather than content tokens");
  auto* bytes = cmd.add_option("--budget-bytes", o.budget_bytes, "Summary byte budget")
                    ->check(CLI::PositiveNumber);
  auto* sentences =
      cmd.add_option("--budget-sentences", o.budget_sentences, "Summary sentence budget")
          ->check(CLI::PositiveNumber);
  auto* cost = cmd.add_option("--budget-cost", o.budget_cost, "Positional cost budget")
                   ->check(CLI::PositiveNumber);
  bytes->excludes(sentences)->excludes(cost);
  sentences->excludes(cost);
  cmd.add_option("--lambda", o.lambda, "Diversity weight")->check(CLI::NonNegativeNumber);
  cmd.add_option("--partitions", o.partitions, "Number of diversity clusters (0: automatic)");
  cmd.add_option("--seed", o.seed, "Seed for partition initialization");
  cmd.add_flag("--no-lazy", o.no_lazy, "Use plain greedy instead of lazy evaluation");
  cmd.add_flag("--singleton-check", o.singleton_check,
               "Return the best single sentence when it beats the greedy set");
  cmd.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

void add_evaluation_options(CLI::App& cmd, Options& o) {
  cmd.add_option("--metrics", o.metrics, "Comma-separated subset of r1,r2,rl")
      ->delimiter(',')
      ->check(CLI::IsMember({"r1", "r2", "rl"}, CLI::ignore_case));
  cmd.add_option("--byte-limit", o.byte_limit, "Truncate candidates to this many bytes");
  cmd.add_flag("--no-stem", o.no_stem, "Disable Porter stemming");
}

std::vector<Feature> features_for(const Options& o);

// Effective configuration echoed in reports. --jobs and output locations are
// left out so reports do not depend on them.
nlohmann::json effective_config(const Options& o) {
  nlohmann::json budget = nullptr;
  if (o.budget_bytes) budget = {{"bytes", *o.budget_bytes}};
  if (o.budget_sentences) budget = {{"sentences", *o.budget_sentences}};
  if (o.budget_cost) budget = {{"cost", *o.budget_cost}};
  std::vector<std::string> features;
  for (Feature f : features_for(o)) features.push_back(to_string(f));
  return {
      {"input", o.input},
      {"format", o.format},
      {"split_sentences", o.split_sentences},
      {"stopwords", o.stopwords},
      {"use_compressed", o.use_compressed},
      {"embeddings", o.embeddings},
      {"contextual", o.contextual},
      {"allow_missing", o.allow_missing},
      {"features", features},
      {"fusion", o.fusion},
      {"fusion_weights", o.fusion_weights},
      {"k_nn", o.k_nn},
      {"raw_cosine", o.raw_cosine},
      {"mean_all_tokens", o.mean_all_tokens},
      {"budget", budget},
      {"lambda", o.lambda},
      {"partitions", o.partitions},
      {"seed", o.seed},
      {"lazy", !o.no_lazy},
      {"singleton_check", o.singleton_check},
      {"metrics", o.metrics},
      {"byte_limit", o.byte_limit ? nlohmann::json(*o.byte_limit) : nlohmann::json(nullptr)},
      {"stemming", !o.no_stem},
  };
}

Budget budget_for(const Options& o, const TaskUnit& unit) {
  if (o.budget_bytes) return {BudgetMode::kBytes, *o.budget_bytes};
  if (o.budget_sentences) return {BudgetMode::kSentences, *o.budget_sentences};
  if (o.budget_cost) return {BudgetMode::kCost, *o.budget_cost};
  if (unit.document_count() > 1) return {BudgetMode::kBytes, kDefaultClusterBytes};
  return {BudgetMode::kSentences, kDefaultDocumentSentences};
}

InputFormat format_for(const Options& o, const std::filesystem::path& path) {
  if (!o.format.empty()) return format_from_string(o.format);
  return path.extension() == ".json" ? InputFormat::kClusterJson : InputFormat::kLines;
}

std::vector<Feature> features_for(const Options& o) {
  std::vector<Feature> features;
  for (const auto& name : o.features) features.push_back(feature_from_string(name));
  if (o.fusion == "none") {
    if (features.empty()) features.push_back(Feature::kTfidf);
    if (features.size() > 1) {
      throw Error("several --feature values need --fusion graph or --fusion late");
    }
  } else if (features.empty()) {
    features = default_fusion_features();
  }
  return features;
}

// Shared state for one summarize/pipeline invocation.
struct Session {
  Options options;
  std::optional<Stoplist> stoplist;
  std::optional<EmbeddingTable> embeddings;

  explicit Session(Options o) : options(std::move(o)) {
    if (!options.stopwords.empty()) stoplist = load_stoplist(options.stopwords);
    if (!options.embeddings.empty()) embeddings = load_embedding_table(options.embeddings);
    features_for(options);  // validate early
  }

  LoadOptions load_options() const {
    LoadOptions lo;
    lo.stoplist = stoplist ? &*stoplist : nullptr;
    lo.use_compressed = options.use_compressed;
    lo.split_sentences = options.split_sentences;
    return lo;
  }
};

struct UnitOutcome {
  TaskUnit unit;
  SelectionResult selection;
  nlohmann::json report;
  std::string summary;
  std::vector<std::string> warnings;
};

std::filesystem::path contextual_path_for(const Options& o, const TaskUnit& unit) {
  std::filesystem::path path(o.contextual);
  if (std::filesystem::is_directory(path)) return path / (unit.unit_id + ".jsonl");
  return path;
}

void export_graphs(const Options& o, const FusionRun& run, bool single) {
  if (o.export_graph.empty()) return;
  if (single) {
    export_graph_tsv(run.features.front().graph, o.export_graph);
    return;
  }
  if (run.fused) export_graph_tsv(*run.fused, o.export_graph);
  for (const auto& feature_run : run.features) {
    export_graph_tsv(feature_run.graph,
                     o.export_graph + "." + to_string(feature_run.feature) + ".tsv");
  }
}

UnitOutcome summarize_unit(const Session& session, TaskUnit unit, bool write_graphs,
                           std::size_t threads) {
  const Options& o = session.options;
  std::optional<ContextualEmbeddings> contextual;
  if (!o.contextual.empty()) {
    contextual = load_contextual_embeddings(contextual_path_for(o, unit), unit, o.allow_missing);
  }
  Resources resources;
  resources.embeddings = session.embeddings ? &*session.embeddings : nullptr;
  resources.contextual = contextual ? &*contextual : nullptr;

  RunOptions run_options;
  run_options.selection.lambda = o.lambda;
  run_options.selection.budget = budget_for(o, unit);
  run_options.selection.k_partitions = o.partitions;
  run_options.selection.seed = o.seed;
  run_options.selection.lazy = !o.no_lazy;
  run_options.selection.singleton_check = o.singleton_check;
  run_options.k_nn = o.k_nn;
  run_options.cosine.clamp_negative = !o.raw_cosine;
  run_options.mean_all_tokens = o.mean_all_tokens;
  run_options.threads = threads;

  const auto features = features_for(o);
  FusionRun run;
  nlohmann::json fusion_info = {{"scheme", o.fusion}};
  if (o.fusion == "none") {
    auto feature_run = run_feature(unit, features.front(), resources, run_options);
    run.selection = feature_run.selection;
    run.warnings = feature_run.warnings;
    run.features.push_back(std::move(feature_run));
  } else if (o.fusion == "graph") {
    run = run_graph_fusion(unit, features, o.fusion_weights, resources, run_options);
    std::vector<double> weights = o.fusion_weights;
    if (weights.empty()) weights.assign(features.size(), 1.0);
    fusion_info["weights"] = weights;
  } else {
    run = run_late_fusion(unit, features, resources, run_options);
    fusion_info["points"] = run.points;
    nlohmann::json rankings = nlohmann::json::array();
    for (const auto& feature_run : run.features) rankings.push_back(feature_run.ranking);
    fusion_info["rankings"] = rankings;
  }
  if (write_graphs) export_graphs(o, run, o.fusion == "none");

  std::vector<std::string> feature_names;
  for (Feature f : features) feature_names.push_back(to_string(f));
  fusion_info["features"] = feature_names;

  UnitOutcome outcome;
  outcome.selection = run.selection;
  outcome.warnings = run.warnings;
  outcome.summary = summary_text(unit, run.selection);
  outcome.report = {
      {"config", effective_config(o)},
      {"fusion", fusion_info},
      {"result", to_json(unit, run.selection)},
      {"warnings", run.warnings},
  };
  outcome.unit = std::move(unit);
  return outcome;
}

std::vector<RougeMetric> metrics_for(const Options& o) {
  std::vector<RougeMetric> metrics;
  for (const auto& name : o.metrics) metrics.push_back(rouge_metric_from_string(name));
  return metrics;
}

RougeOptions rouge_options_for(const Options& o) {
  RougeOptions ro;
  ro.byte_limit = o.byte_limit;
  ro.stemming = !o.no_stem;
  return ro;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

int cmd_summarize(const Options& o, std::ostream& out, std::ostream& err) {
  Session session(o);
  const std::filesystem::path input(o.input);
  TaskUnit unit = load_task_unit(input, format_for(o, input), session.load_options());
  auto outcome = summarize_unit(session, std::move(unit), true, o.jobs);
  for (const auto& w : outcome.warnings) err << "warning: " << w << '\n';

  if (o.output.empty()) {
    out << outcome.summary;
  } else {
    write_file_atomic(o.output, outcome.summary);
  }
  std::string report_path = o.report;
  if (report_path.empty() && !o.output.empty()) report_path = o.output + ".json";
  if (!report_path.empty()) write_file_atomic(report_path, dump(outcome.report));
  return 0;
}

int cmd_evaluate(const Options& o, std::ostream& out) {
  if (o.evaluate_paths.size() < 2) {
    throw Error("evaluate needs a candidate file and at least one reference file");
  }
  const std::string candidate = read_text(o.evaluate_paths.front());
  std::vector<std::string> references;
  for (std::size_t k = 1; k < o.evaluate_paths.size(); ++k) {
    references.push_back(read_text(o.evaluate_paths[k]));
  }
  const auto ro = rouge_options_for(o);
  nlohmann::json scores = nlohmann::json::array();
  for (RougeMetric metric : metrics_for(o)) {
    scores.push_back(to_json(rouge(metric, candidate, references, ro)));
  }
  const nlohmann::json report = {
      {"candidate", o.evaluate_paths.front()},
      {"references", std::vector<std::string>(o.evaluate_paths.begin() + 1,
                                              o.evaluate_paths.end())},
      {"byte_limit", o.byte_limit ? nlohmann::json(*o.byte_limit) : nlohmann::json(nullptr)},
      {"stemming", !o.no_stem},
      {"scores", scores},
  };
  if (o.output.empty()) {
    out << dump(report);
  } else {
    write_file_atomic(o.output, dump(report));
  }
  return 0;
}

struct PipelineEntry {
  std::string unit_id;
  nlohmann::json json;
  bool ok = false;
  std::vector<RougeReport> scores;
};

int cmd_pipeline(const Options& o, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(o.input)) throw Error("pipeline --input must be a directory");
  if (o.output.empty()) throw Error("pipeline needs --output DIR");
  if (!o.export_graph.empty()) throw Error("--export-graph is only supported by summarize");
  fs::create_directories(o.output);

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(o.input)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension();
    if (ext == ".json" || ext == ".txt") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw Error("no task units (*.json, *.txt) in " + o.input);

  Session session(o);
  const auto metrics = metrics_for(o);
  const auto ro = rouge_options_for(o);
  std::vector<PipelineEntry> entries(files.size());

  auto process = [&](std::size_t index) {
    PipelineEntry& entry = entries[index];
    entry.unit_id = files[index].stem().string();
    try {
      TaskUnit unit =
          load_task_unit(files[index], format_for(o, files[index]), session.load_options());
      entry.unit_id = unit.unit_id;
      auto outcome = summarize_unit(session, std::move(unit), false, 1);
      const fs::path base = fs::path(o.output) / outcome.unit.unit_id;
      write_file_atomic(base.string() + ".summary.txt", outcome.summary);
      write_file_atomic(base.string() + ".report.json", dump(outcome.report));

      nlohmann::json scores = nlohmann::json::array();
      if (!outcome.unit.references.empty()) {
        for (RougeMetric metric : metrics) {
          entry.scores.push_back(
              rouge(metric, outcome.summary, outcome.unit.references, ro));
          scores.push_back(to_json(entry.scores.back()));
        }
      }
      entry.json = {{"unit_id", entry.unit_id},
                    {"status", "ok"},
                    {"selected", document_order(outcome.selection)},
                    {"budget_used", outcome.selection.budget_used},
                    {"scores", scores},
                    {"warnings", outcome.warnings}};
      entry.ok = true;
    } catch (const std::exception& e) {
      entry.json = {{"unit_id", entry.unit_id},
                    {"status", "error"},
                    {"file", files[index].filename().string()},
                    {"error", e.what()}};
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(o.jobs, 1, files.size());
  if (workers == 1) {
    for (std::size_t i = 0; i < files.size(); ++i) process(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < files.size(); i = next++) process(i);
      });
    }
  }

  std::stable_sort(entries.begin(), entries.end(),
                   [](const PipelineEntry& a, const PipelineEntry& b) {
                     return a.unit_id < b.unit_id;
                   });
  nlohmann::json units = nlohmann::json::array();
  std::size_t failed = 0;
  std::vector<double> sum_p(metrics.size(), 0.0);
  std::vector<double> sum_r(metrics.size(), 0.0);
  std::vector<double> sum_f(metrics.size(), 0.0);
  std::size_t scored = 0;
  for (const auto& entry : entries) {
    units.push_back(entry.json);
    if (!entry.ok) {
      ++failed;
      err << "error: unit " << entry.unit_id << ": " << entry.json["error"].get<std::string>()
          << '\n';
      continue;
    }
    if (entry.scores.empty()) continue;
    ++scored;
    for (std::size_t m = 0; m < metrics.size(); ++m) {
      sum_p[m] += entry.scores[m].precision;
      sum_r[m] += entry.scores[m].recall;
      sum_f[m] += entry.scores[m].f1;
    }
  }
  nlohmann::json means = nlohmann::json::array();
  if (scored > 0) {
    const double count = static_cast<double>(scored);
    for (std::size_t m = 0; m < metrics.size(); ++m) {
      means.push_back({{"metric", to_string(metrics[m])},
                       {"p", round4(sum_p[m] / count)},
                       {"r", round4(sum_r[m] / count)},
                       {"f", round4(sum_f[m] / count)}});
    }
  }
  const nlohmann::json corpus = {
      {"config", effective_config(o)},
      {"units", units},
      {"scored_units", scored},
      {"failed_units", failed},
      {"means", means},
  };
  const auto corpus_path = fs::path(o.output) / "corpus_report.json";
  write_file_atomic(corpus_path, dump(corpus));
  out << corpus_path.string() << '\n';
  return failed == 0 ? 0 : 1;
}

std::optional<std::string> config_path(const std::vector<std::string>& args) {
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k] == "--config" && k + 1 < args.size()) return args[k + 1];
    if (args[k].rfind("--config=", 0) == 0) return args[k].substr(9);
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::string> merge_config(const std::vector<std::string>& args,
                                      const std::string& config_text) {
  std::vector<std::string> merged = args;
  const bool budget_on_command_line = std::any_of(
      budget_flags().begin(), budget_flags().end(),
      [&](const std::string& key) { return present(args, key); });
  std::istringstream in(config_text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim_copy(line);
    if (text.empty() || text[0] == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw Error("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const auto key = trim_copy(text.substr(0, eq));
    const auto value = trim_copy(text.substr(eq + 1));
    if (key.empty()) throw Error("config line " + std::to_string(line_no) + ": empty key");
    if (key == "config") continue;
    if (present(args, key)) continue;
    if (budget_flags().count(key) && budget_on_command_line) continue;
    if (boolean_flags().count(key)) {
      if (value == "true" || value == "1" || value == "yes") merged.push_back("--" + key);
      else if (value != "false" && value != "0" && value != "no") {
        throw Error("config line " + std::to_string(line_no) + ": " + key +
                    " expects true or false");
      }
      continue;
    }
    merged.push_back("--" + key);
    merged.push_back(value);
  }
  return merged;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unsupervised extractive summarizer with submodular sentence selection",
               "semsum"};
  app.require_subcommand(1);
  Options o;

  auto* summarize = app.add_subcommand("summarize", "Summarize one task unit");
  add_input_options(*summarize, o);
  add_selection_options(*summarize, o);
  summarize->add_option("--export-graph", o.export_graph, "Write similarity graph(s) as TSV");
  summarize->add_option("--output", o.output, "Summary text path (default: stdout)");
  summarize->add_option("--report", o.report, "JSON report path (default: <output>.json)");
  summarize->add_option("--config", o.config, "Config file of 'key = value' lines");

  auto* evaluate = app.add_subcommand("evaluate", "Score a candidate summary with ROUGE");
  evaluate->add_option("paths", o.evaluate_paths, "CANDIDATE REFERENCE [REFERENCE...]")
      ->required()
      ->check(CLI::ExistingFile);
  add_evaluation_options(*evaluate, o);
  evaluate->add_option("--output", o.output, "JSON output path (default: stdout)");
  evaluate->add_option("--config", o.config, "Config file of 'key = value' lines");

  auto* pipeline = app.add_subcommand("pipeline", "Summarize and score a dataset directory");
  add_input_options(*pipeline, o);
  add_selection_options(*pipeline, o);
  add_evaluation_options(*pipeline, o);
  pipeline->add_option("--output", o.output, "Output directory")->required();
  pipeline->add_option("--config", o.config, "Config file of 'key = value' lines");
  pipeline->add_option("--export-graph", o.export_graph, "Unsupported for pipeline");

  std::vector<std::string> args = raw_args;
  try {
    if (const auto path = config_path(args)) args = merge_config(args, read_text(*path));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App* failing = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << failing->help();
    return 2;
  }

  try {
    if (summarize->parsed()) return cmd_summarize(o, out, err);
    if (evaluate->parsed()) return cmd_evaluate(o, out);
    return cmd_pipeline(o, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace semsum::cli
