#include "infodiet/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "infodiet/analysis.hpp"
#include "infodiet/corpus.hpp"
#include "infodiet/diet.hpp"
#include "infodiet/inference.hpp"
#include "infodiet/reports.hpp"
#include "infodiet/simnet.hpp"
#include "infodiet/taxonomy.hpp"

#ifndef INFODIET_DATA_DIR
#define INFODIET_DATA_DIR ""
#endif

namespace infodiet {

namespace fs = std::filesystem;

namespace {

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_file(const fs::path& path, const std::string& what) {
  if (path.empty()) throw ValidationError(what + " path not set");
  if (!fs::exists(path)) {
    throw ValidationError(what + " file not found: " + path.string());
  }
}

// Options shared by the pipeline subcommands. Mirrors the run configuration:
// input paths, thresholds, and parse/filter flags.
struct PipelineOptions {
  std::string data_dir = INFODIET_DATA_DIR;
  std::string taxonomy_path;
  std::string experts_path;
  std::string expert_tweets_path;
  std::string tweets_path;
  std::string redirects_path;
  std::string dictionary_path;
  int min_support = 10;
  double alpha = 1e-4;
  bool english_filter = false;
  bool strict = false;

  fs::path taxonomy_file() const {
    return taxonomy_path.empty() ? fs::path(data_dir) / "table1.json"
                                 : fs::path(taxonomy_path);
  }
  fs::path baselines_dir() const { return fs::path(data_dir) / "baselines"; }
};

void add_pipeline_options(CLI::App* cmd, PipelineOptions* opt,
                          bool needs_experts = true) {
  cmd->add_option("--data-dir", opt->data_dir, "Bundled data directory");
  cmd->add_option("--taxonomy", opt->taxonomy_path,
                  "Taxonomy JSON (default: <data-dir>/table1.json)");
  if (needs_experts) {
    cmd->add_option("--experts", opt->experts_path, "Expert profiles JSONL")
        ->required();
    cmd->add_option("--expert-tweets", opt->expert_tweets_path,
                    "Tweets posted by the experts, JSONL")
        ->required();
  }
  cmd->add_option("--tweets", opt->tweets_path, "Target tweets JSONL")->required();
  cmd->add_option("--redirects", opt->redirects_path,
                  "Offline URL redirect map CSV (short,target)");
  cmd->add_option("--min-support", opt->min_support,
                  "Minimum distinct expert posters per keyword")
      ->check(CLI::Range(1, 1 << 30));
  cmd->add_option("--alpha", opt->alpha, "KL additive smoothing")
      ->check(CLI::NonNegativeNumber);
  cmd->add_flag("--english-filter", opt->english_filter,
                "Keep only dictionary-majority English tweets");
  cmd->add_option("--dictionary", opt->dictionary_path,
                  "Dictionary file (one lowercase word per line)");
  cmd->add_flag("--strict", opt->strict, "Fail on the first malformed record");
}

void validate_pipeline(const PipelineOptions& opt, bool needs_experts = true) {
  require_file(opt.taxonomy_file(), "taxonomy");
  if (needs_experts) {
    require_file(opt.experts_path, "experts");
    require_file(opt.expert_tweets_path, "expert tweets");
  }
  require_file(opt.tweets_path, "tweets");
  if (!opt.redirects_path.empty()) require_file(opt.redirects_path, "redirect map");
  if (opt.english_filter) {
    if (opt.dictionary_path.empty()) {
      throw ValidationError("--english-filter requires --dictionary");
    }
    require_file(opt.dictionary_path, "dictionary");
  }
}

struct PipelineData {
  Taxonomy taxonomy;
  std::vector<ExpertProfile> experts;
  std::vector<Tweet> expert_tweets;
  std::vector<Tweet> tweets;
  std::optional<RedirectMap> redirects;
  LoadStats stats;

  const RedirectMap* redirects_ptr() const {
    return redirects.has_value() ? &*redirects : nullptr;
  }
};

PipelineData load_pipeline(const PipelineOptions& opt, bool needs_experts = true) {
  PipelineData data;
  data.taxonomy = load_taxonomy(opt.taxonomy_file());
  if (!opt.redirects_path.empty()) {
    data.redirects = load_redirect_map_csv(opt.redirects_path);
  }
  if (needs_experts) {
    data.experts = load_experts_jsonl(opt.experts_path, opt.strict, &data.stats);
    data.expert_tweets =
        load_tweets_jsonl(opt.expert_tweets_path, opt.strict, &data.stats);
  }
  data.tweets = load_tweets_jsonl(opt.tweets_path, opt.strict, &data.stats);
  if (opt.english_filter) {
    const auto dictionary = load_dictionary(opt.dictionary_path);
    std::erase_if(data.tweets,
                  [&](const Tweet& t) { return !is_english(t.text, dictionary); });
  }
  return data;
}

std::set<Keyword> distinct_keywords(std::span<const Tweet> tweets,
                                    const RedirectMap* redirects) {
  std::set<Keyword> keywords;
  for (const auto& t : tweets) {
    for (auto& kw : extract_keywords(t.text, redirects)) {
      keywords.insert(std::move(kw));
    }
  }
  return keywords;
}

InferenceRun run_inference(const PipelineData& data, const PipelineOptions& opt) {
  const ExpertIndex index = build_expert_index(data.experts, data.expert_tweets,
                                               data.taxonomy, data.redirects_ptr());
  const auto keywords = distinct_keywords(data.tweets, data.redirects_ptr());
  return infer_all(keywords, index, opt.min_support);
}

void emit(const fs::path& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    if (out_path.has_parent_path()) fs::create_directories(out_path.parent_path());
    write_file_atomic(out_path, content);
  }
}

// ---- subcommand bodies ------------------------------------------------

int cmd_baselines(const std::string& data_dir, const std::string& name,
                  const std::string& format, const std::string& out) {
  const MediaBaseline baseline = load_baseline(name, fs::path(data_dir) / "baselines");
  emit(out, format == "csv" ? baseline_csv(baseline) : baseline_json(baseline));
  return 0;
}

int cmd_infer_topics(const PipelineOptions& opt, const std::string& out_dir) {
  validate_pipeline(opt);
  const PipelineData data = load_pipeline(opt);
  const InferenceRun run = run_inference(data, opt);
  fs::create_directories(out_dir);
  write_file_atomic(fs::path(out_dir) / "inferred.csv", inferences_csv(run.inferred));
  write_file_atomic(fs::path(out_dir) / "uninferred.csv",
                    skipped_keywords_csv(run.skipped));
  std::cout << "keywords: " << run.inferred.size() + run.skipped.size()
            << " inferred: " << run.inferred.size()
            << " coverage: " << format_double(run.coverage) << "\n";
  return 0;
}

int cmd_diet(const PipelineOptions& opt, const std::string& out) {
  validate_pipeline(opt);
  const PipelineData data = load_pipeline(opt);
  const InferenceRun run = run_inference(data, opt);
  const DietVector diet =
      compute_diet(data.tweets, run.inferred, data.redirects_ptr());
  emit(out, diet_report_json(diet));
  return 0;
}

std::vector<UserDiet> produced_diets(const PipelineData& data,
                                     const InferenceMap& inferences) {
  std::map<std::string, std::vector<Tweet>> by_author;
  for (const auto& t : data.tweets) by_author[t.author].push_back(t);
  std::vector<UserDiet> diets;
  for (const auto& [author, tweets] : by_author) {
    const DietVector vec = compute_diet(tweets, inferences, data.redirects_ptr());
    if (vec.weight_sum() <= 0.0) {
      std::cerr << "note: user " << author << " has an empty produced diet; skipped\n";
      continue;
    }
    diets.push_back({author, normalize(vec), DietRole::kProduced});
  }
  return diets;
}

std::vector<UserDiet> consumed_diets(const PipelineData& data,
                                     const InferenceMap& inferences,
                                     const FollowGraph& graph,
                                     const std::vector<std::string>& users) {
  std::vector<UserDiet> diets;
  std::map<std::string, const Tweet*> by_id;
  for (const auto& t : data.tweets) by_id.emplace(t.id, &t);
  for (const auto& user : users) {
    std::vector<Tweet> received;
    for (const auto& id : deliver_timeline(user, graph, data.tweets)) {
      received.push_back(*by_id.at(id));
    }
    const DietVector vec = compute_diet(received, inferences, data.redirects_ptr());
    if (vec.weight_sum() <= 0.0) {
      std::cerr << "note: user " << user << " has an empty consumed diet; skipped\n";
      continue;
    }
    diets.push_back({user, normalize(vec), DietRole::kConsumed});
  }
  return diets;
}

int cmd_analyze(const PipelineOptions& opt, const std::string& role,
                const std::string& graph_path, std::vector<std::string> users,
                const std::string& simresult_path, const std::string& baseline_name,
                const std::string& out_dir) {
  const bool corpus_mode = !opt.tweets_path.empty();
  if (!corpus_mode && simresult_path.empty()) {
    throw ValidationError("analyze needs --tweets or --simresult");
  }
  if (corpus_mode) validate_pipeline(opt);
  if (role == "consumed" && graph_path.empty()) {
    throw ValidationError("--role consumed requires --graph");
  }
  if (!graph_path.empty()) require_file(graph_path, "graph");
  if (!simresult_path.empty()) {
    require_file(simresult_path, "sim result");
    if (baseline_name.empty()) {
      throw ValidationError("--simresult requires --baseline");
    }
  }
  fs::create_directories(out_dir);

  if (corpus_mode) {
    const PipelineData data = load_pipeline(opt);
    const InferenceRun run = run_inference(data, opt);
    std::vector<UserDiet> diets;
    if (role == "consumed") {
      LoadStats gstats;
      const FollowGraph graph = load_follow_graph_csv(graph_path, opt.strict, &gstats);
      if (users.empty()) {
        users.assign(graph.users.begin(), graph.users.end());
      }
      diets = consumed_diets(data, run.inferred, graph, users);
    } else {
      diets = produced_diets(data, run.inferred);
    }
    write_file_atomic(fs::path(out_dir) / "groups.csv",
                      groups_csv(group_top_topic_means(diets)));
    write_file_atomic(fs::path(out_dir) / "distribution.csv",
                      distribution_csv(top_topic_distribution(diets)));
    std::cout << "users: " << diets.size() << " top2_share_gt_half: "
              << format_double(top_k_share_quantile(diets, 2, 0.5)) << "\n";
  }

  if (!simresult_path.empty()) {
    std::ifstream in(simresult_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const auto pairs = diet_pairs_from_sim_json(buf.str());
    const MediaBaseline baseline =
        load_baseline(baseline_name, fs::path(opt.data_dir) / "baselines");
    const MitigationReport report =
        mitigation_report(pairs, baseline.distribution, baseline.name, opt.alpha);
    write_file_atomic(fs::path(out_dir) / "mitigation.csv", mitigation_csv(report));
  }
  return 0;
}

int cmd_simulate(const PipelineOptions& opt, const std::string& graph_path,
                 std::vector<std::string> users, const std::string& baseline_name,
                 const SimConfig& cfg, const std::string& out_dir) {
  validate_pipeline(opt);
  require_file(graph_path, "graph");
  const PipelineData data = load_pipeline(opt);
  LoadStats gstats;
  const FollowGraph graph = load_follow_graph_csv(graph_path, opt.strict, &gstats);
  const InferenceRun run = run_inference(data, opt);
  if (users.empty()) {
    users.assign(graph.users.begin(), graph.users.end());
  }
  const MediaBaseline baseline =
      load_baseline(baseline_name, fs::path(opt.data_dir) / "baselines");

  const ExperimentOutput output =
      run_experiment(users, graph, data.tweets, run.inferred, cfg,
                     baseline.distribution, baseline.name, opt.alpha,
                     data.redirects_ptr());
  fs::create_directories(out_dir);
  write_file_atomic(fs::path(out_dir) / "simresult.json", sim_result_json(output.sim));
  write_file_atomic(fs::path(out_dir) / "mitigation.csv",
                    mitigation_csv(output.mitigation));
  for (const auto& warning : output.sim.warnings) {
    std::cerr << "warning: " << warning << "\n";
  }
  std::cout << "users: " << output.sim.users.size()
            << " mitigation_records: " << output.mitigation.records.size() << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"infodiet: topical information-diet analytics for tweet corpora"};
  app.require_subcommand(1);

  // baselines
  std::string bl_data_dir = INFODIET_DATA_DIR;
  std::string bl_name;
  std::string bl_format = "json";
  std::string bl_out;
  auto* baselines_cmd =
      app.add_subcommand("baselines", "Print a bundled mass-media baseline diet");
  baselines_cmd->add_option("--data-dir", bl_data_dir, "Bundled data directory");
  baselines_cmd->add_option("--name", bl_name, "nytimes | washpost | economist")
      ->required();
  baselines_cmd->add_option("--format", bl_format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  baselines_cmd->add_option("--out", bl_out, "Write to file instead of stdout");

  // infer-topics
  PipelineOptions infer_opt;
  std::string infer_out = "out";
  auto* infer_cmd =
      app.add_subcommand("infer-topics", "Infer a topic for each corpus keyword");
  add_pipeline_options(infer_cmd, &infer_opt);
  infer_cmd->add_option("--out", infer_out, "Output directory");

  // diet
  PipelineOptions diet_opt;
  std::string diet_out;
  auto* diet_cmd =
      app.add_subcommand("diet", "Information diet report for a tweet corpus");
  add_pipeline_options(diet_cmd, &diet_opt);
  diet_cmd->add_option("--out", diet_out, "Report path (stdout when omitted)");

  // analyze
  PipelineOptions analyze_opt;
  std::string analyze_role = "produced";
  std::string analyze_graph;
  std::vector<std::string> analyze_users;
  std::string analyze_simresult;
  std::string analyze_baseline;
  std::string analyze_out = "out";
  auto* analyze_cmd = app.add_subcommand(
      "analyze", "Per-user diet statistics (groups, distribution, mitigation)");
  add_pipeline_options(analyze_cmd, &analyze_opt);
  analyze_cmd->get_option("--tweets")->required(false);
  analyze_cmd->get_option("--experts")->required(false);
  analyze_cmd->get_option("--expert-tweets")->required(false);
  analyze_cmd->add_option("--role", analyze_role, "produced | consumed")
      ->check(CLI::IsMember({"produced", "consumed"}));
  analyze_cmd->add_option("--graph", analyze_graph, "Follow graph CSV");
  analyze_cmd->add_option("--users", analyze_users, "Users to analyze (default: all)");
  analyze_cmd->add_option("--simresult", analyze_simresult,
                          "Sim result JSON to derive mitigation.csv from");
  analyze_cmd->add_option("--baseline", analyze_baseline,
                          "Baseline name for mitigation.csv");
  analyze_cmd->add_option("--out", analyze_out, "Output directory");

  // simulate
  PipelineOptions sim_opt;
  std::string sim_graph;
  std::vector<std::string> sim_users;
  std::string sim_baseline = "nytimes";
  SimConfig sim_cfg;
  std::string sim_out = "out";
  auto* sim_cmd = app.add_subcommand(
      "simulate", "Replay delivery and 2-hop recommendations on a follow graph");
  sim_cmd->set_config("--config", "", "TOML config with flat key=value options");
  add_pipeline_options(sim_cmd, &sim_opt);
  sim_cmd->add_option("--graph", sim_graph, "Follow graph CSV")->required();
  sim_cmd->add_option("--users", sim_users, "Simulated users (default: all in graph)");
  sim_cmd->add_option("--baseline", sim_baseline, "Mass-media baseline name");
  sim_cmd->add_option("--snapshot-interval", sim_cfg.snapshot_interval,
                      "Seconds between recommendation snapshots")
      ->check(CLI::PositiveNumber);
  sim_cmd->add_option("--top-k", sim_cfg.top_k, "Recommendations kept per snapshot")
      ->check(CLI::PositiveNumber);
  sim_cmd->add_option("--window", sim_cfg.window,
                      "Popularity lookback seconds (default: snapshot interval)")
      ->check(CLI::NonNegativeNumber);
  sim_cmd->add_option("--seed", sim_cfg.seed, "Reserved for stochastic generators");
  sim_cmd->add_flag("--dedupe,!--no-dedupe", sim_cfg.dedupe_across_snapshots,
                    "Dedupe recommended tweets across snapshots");
  sim_cmd->add_flag("--include-followed", sim_cfg.include_followed_in_candidates,
                    "Keep direct followings' tweets as candidates");
  sim_cmd->add_option("--out", sim_out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (baselines_cmd->parsed()) {
      return cmd_baselines(bl_data_dir, bl_name, bl_format, bl_out);
    }
    if (infer_cmd->parsed()) return cmd_infer_topics(infer_opt, infer_out);
    if (diet_cmd->parsed()) return cmd_diet(diet_opt, diet_out);
    if (analyze_cmd->parsed()) {
      return cmd_analyze(analyze_opt, analyze_role, analyze_graph, analyze_users,
                         analyze_simresult, analyze_baseline, analyze_out);
    }
    if (sim_cmd->parsed()) {
      return cmd_simulate(sim_opt, sim_graph, sim_users, sim_baseline, sim_cfg,
                          sim_out);
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace infodiet
