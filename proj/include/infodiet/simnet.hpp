#ifndef INFODIET_SIMNET_HPP_
#define INFODIET_SIMNET_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "infodiet/analysis.hpp"
#include "infodiet/corpus.hpp"
#include "infodiet/diet.hpp"
#include "infodiet/inference.hpp"

namespace infodiet {

struct SimConfig {
  std::int64_t snapshot_interval = 1800;  // seconds between snapshots
  int top_k = 10;                         // recommendations kept per snapshot
  std::int64_t window = 0;                // popularity lookback; 0 = interval
  std::uint64_t seed = 0;                 // reserved for stochastic generators
  bool dedupe_across_snapshots = true;
  // Direct followings' tweets are already delivered; including them as
  // recommendation candidates is only useful for sensitivity analysis.
  bool include_followed_in_candidates = false;

  std::int64_t effective_window() const {
    return window > 0 ? window : snapshot_interval;
  }
};

// Every tweet authored by the user's followings (retweets included).
std::set<std::string> deliver_timeline(const std::string& user,
                                       const FollowGraph& graph,
                                       std::span<const Tweet> stream);

// Top-k tweets from the user's 2-hop neighborhood (followings plus
// followings-of-followings) in the window (t_end - window, t_end], scored by
// the number of distinct neighborhood users who authored or retweeted the
// tweet's root within the window. Ranked by score desc, timestamp desc,
// tweet id asc. This is a model of neighborhood-popularity recommendation,
// not a reconstruction of any deployed ranking system.
std::vector<std::string> recommend_snapshot(const std::string& user,
                                            const FollowGraph& graph,
                                            std::span<const Tweet> stream,
                                            std::int64_t t_end,
                                            const SimConfig& cfg);

struct SnapshotRec {
  std::int64_t at = 0;
  std::vector<std::string> tweet_ids;  // ranked, <= top_k entries
};

struct UserSimResult {
  std::string user;
  std::set<std::string> consumed;       // delivered tweet ids
  std::vector<SnapshotRec> snapshots;   // in time order
  std::vector<std::string> recommended; // aggregated per dedupe flag
  bool has_diets = false;               // false when either diet is empty
  DietDistribution consumed_diet;
  DietDistribution recommended_diet;
  DietDistribution combined_diet;
};

struct SimResult {
  SimConfig config;
  std::vector<UserSimResult> users;
  std::vector<std::string> warnings;
};

struct ExperimentOutput {
  SimResult sim;
  MitigationReport mitigation;
};

// Replays the stream for each user: consumed diet from the timeline,
// recommended diet from the union of snapshots over the stream span, combined
// diet as their mean, then the mitigation report against the baseline.
// Deterministic for identical inputs.
ExperimentOutput run_experiment(std::span<const std::string> users,
                                const FollowGraph& graph,
                                std::span<const Tweet> stream,
                                const InferenceMap& inferences,
                                const SimConfig& cfg,
                                const DietDistribution& baseline,
                                const std::string& baseline_name,
                                double alpha = 1e-4,
                                const RedirectMap* redirects = nullptr);

}  // namespace infodiet

#endif  // INFODIET_SIMNET_HPP_
