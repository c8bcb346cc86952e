#include "infodiet/simnet.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace infodiet {

namespace {

std::set<std::string> two_hop_neighborhood(const std::string& user,
                                           const FollowGraph& graph) {
  std::set<std::string> hood;
  const auto* first = graph.followings_of(user);
  if (first == nullptr) return hood;
  for (const auto& f : *first) {
    hood.insert(f);
    if (const auto* second = graph.followings_of(f)) {
      hood.insert(second->begin(), second->end());
    }
  }
  hood.erase(user);
  return hood;
}

const std::string& root_of(const Tweet& t) {
  return t.retweet_of.empty() ? t.id : t.retweet_of;
}

}  // namespace

std::set<std::string> deliver_timeline(const std::string& user,
                                       const FollowGraph& graph,
                                       std::span<const Tweet> stream) {
  std::set<std::string> delivered;
  const auto* followings = graph.followings_of(user);
  if (followings == nullptr) return delivered;
  for (const auto& tweet : stream) {
    if (followings->count(tweet.author) > 0) delivered.insert(tweet.id);
  }
  return delivered;
}

std::vector<std::string> recommend_snapshot(const std::string& user,
                                            const FollowGraph& graph,
                                            std::span<const Tweet> stream,
                                            std::int64_t t_end,
                                            const SimConfig& cfg) {
  const std::set<std::string> hood = two_hop_neighborhood(user, graph);
  if (hood.empty()) return {};
  const auto* followed = graph.followings_of(user);
  const std::int64_t t_begin = t_end - cfg.effective_window();

  // Distinct neighborhood users engaging (authoring or retweeting) each root
  // within the window.
  std::map<std::string, std::set<std::string>> root_engagers;
  std::vector<const Tweet*> candidates;
  for (const auto& tweet : stream) {
    if (tweet.timestamp <= t_begin || tweet.timestamp > t_end) continue;
    if (hood.count(tweet.author) == 0) continue;
    root_engagers[root_of(tweet)].insert(tweet.author);
    if (!cfg.include_followed_in_candidates && followed != nullptr &&
        followed->count(tweet.author) > 0) {
      continue;  // already on the user's timeline
    }
    candidates.push_back(&tweet);
  }

  std::sort(candidates.begin(), candidates.end(),
            [&](const Tweet* a, const Tweet* b) {
              const auto sa = root_engagers[root_of(*a)].size();
              const auto sb = root_engagers[root_of(*b)].size();
              if (sa != sb) return sa > sb;
              if (a->timestamp != b->timestamp) return a->timestamp > b->timestamp;
              return a->id < b->id;
            });
  if (candidates.size() > static_cast<std::size_t>(cfg.top_k)) {
    candidates.resize(static_cast<std::size_t>(cfg.top_k));
  }
  std::vector<std::string> out;
  out.reserve(candidates.size());
  for (const Tweet* t : candidates) out.push_back(t->id);
  return out;
}

ExperimentOutput run_experiment(std::span<const std::string> users,
                                const FollowGraph& graph,
                                std::span<const Tweet> stream,
                                const InferenceMap& inferences,
                                const SimConfig& cfg,
                                const DietDistribution& baseline,
                                const std::string& baseline_name,
                                double alpha,
                                const RedirectMap* redirects) {
  ExperimentOutput out;
  out.sim.config = cfg;
  if (stream.empty()) {
    out.sim.warnings.emplace_back("empty stream; nothing to simulate");
    out.mitigation.baseline_name = baseline_name;
    return out;
  }

  std::vector<Tweet> sorted(stream.begin(), stream.end());
  std::sort(sorted.begin(), sorted.end(), [](const Tweet& a, const Tweet& b) {
    if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
    return a.id < b.id;
  });
  std::unordered_map<std::string, const Tweet*> by_id;
  for (const auto& t : sorted) by_id.emplace(t.id, &t);

  const std::int64_t t_min = sorted.front().timestamp;
  const std::int64_t t_max = sorted.back().timestamp;
  std::vector<std::int64_t> snapshot_times;
  if (t_max - t_min < cfg.snapshot_interval) {
    snapshot_times.push_back(t_max);
    out.sim.warnings.emplace_back(
        "stream span shorter than one snapshot interval; single snapshot at "
        "stream end");
  } else {
    for (std::int64_t t = t_min + cfg.snapshot_interval; t <= t_max;
         t += cfg.snapshot_interval) {
      snapshot_times.push_back(t);
    }
  }

  std::vector<UserDietPair> diet_pairs;
  for (const auto& user : users) {
    UserSimResult ur;
    ur.user = user;
    if (!graph.has_user(user)) {
      out.sim.warnings.push_back("user " + user + ": not in graph");
    }
    ur.consumed = deliver_timeline(user, graph, sorted);

    std::set<std::string> seen;
    for (std::int64_t at : snapshot_times) {
      SnapshotRec rec;
      rec.at = at;
      rec.tweet_ids = recommend_snapshot(user, graph, sorted, at, cfg);
      for (const auto& id : rec.tweet_ids) {
        if (cfg.dedupe_across_snapshots && !seen.insert(id).second) continue;
        ur.recommended.push_back(id);
      }
      ur.snapshots.push_back(std::move(rec));
    }

    std::vector<Tweet> consumed_tweets;
    consumed_tweets.reserve(ur.consumed.size());
    for (const auto& id : ur.consumed) consumed_tweets.push_back(*by_id.at(id));
    std::vector<Tweet> recommended_tweets;
    recommended_tweets.reserve(ur.recommended.size());
    for (const auto& id : ur.recommended) recommended_tweets.push_back(*by_id.at(id));

    const DietVector consumed_vec = compute_diet(consumed_tweets, inferences, redirects);
    const DietVector recommended_vec =
        compute_diet(recommended_tweets, inferences, redirects);
    if (consumed_vec.weight_sum() > 0.0 && recommended_vec.weight_sum() > 0.0) {
      ur.consumed_diet = normalize(consumed_vec);
      ur.recommended_diet = normalize(recommended_vec);
      ur.combined_diet = combine(ur.consumed_diet, ur.recommended_diet);
      ur.has_diets = true;
      diet_pairs.push_back({user, ur.consumed_diet, ur.recommended_diet});
    } else {
      out.sim.warnings.push_back("user " + user +
                                 ": empty consumed or recommended diet; excluded "
                                 "from mitigation report");
    }
    out.sim.users.push_back(std::move(ur));
  }

  out.mitigation = mitigation_report(diet_pairs, baseline, baseline_name, alpha);
  return out;
}

}  // namespace infodiet
