#include "infodiet/inference.hpp"

#include <stdexcept>

namespace infodiet {

std::string_view inference_skip_name(InferenceSkip s) {
  return s == InferenceSkip::kUnknownKeyword ? "unknown_keyword" : "below_support";
}

ExpertIndex build_expert_index(std::span<const ExpertProfile> experts,
                               std::span<const Tweet> expert_tweets,
                               const Taxonomy& taxonomy,
                               const RedirectMap* redirects) {
  if (experts.empty()) {
    throw std::invalid_argument("build_expert_index: empty expert list");
  }
  ExpertIndex index;

  // Merge tag lists for repeated user ids before mapping.
  std::map<std::string, std::vector<std::string>> tags_by_user;
  for (const auto& e : experts) {
    auto& tags = tags_by_user[e.user];
    tags.insert(tags.end(), e.tags.begin(), e.tags.end());
  }
  for (const auto& [user, tags] : tags_by_user) {
    std::size_t unmatched = 0;
    std::set<Topic> topics = taxonomy.map_expert_tags(tags, &unmatched);
    index.unmatched_tags += unmatched;
    if (topics.empty()) {
      // An expert mapped to no topic can never contribute to any f_t;
      // keeping it in E_k would only dilute the fractions.
      ++index.experts_without_topic;
      continue;
    }
    for (Topic t : topics) ++index.topic_count[static_cast<std::size_t>(t)];
    index.topics_of.emplace(user, std::move(topics));
  }

  for (const auto& tweet : expert_tweets) {
    if (index.topics_of.find(tweet.author) == index.topics_of.end()) {
      ++index.tweets_by_unknown_users;
      continue;
    }
    for (auto& kw : extract_keywords(tweet.text, redirects, &index.extract_stats)) {
      index.posters[kw].insert(tweet.author);
    }
  }
  return index;
}

std::optional<TopicInference> infer_topic(const Keyword& keyword,
                                          const ExpertIndex& index,
                                          int min_support,
                                          InferenceSkip* skip) {
  if (min_support < 1) {
    throw std::invalid_argument("infer_topic: min_support must be >= 1");
  }
  auto it = index.posters.find(keyword);
  if (it == index.posters.end()) {
    if (skip != nullptr) *skip = InferenceSkip::kUnknownKeyword;
    return std::nullopt;
  }
  const auto& posters = it->second;
  const auto support = static_cast<std::int64_t>(posters.size());
  if (support < min_support) {
    if (skip != nullptr) *skip = InferenceSkip::kBelowSupport;
    return std::nullopt;
  }

  std::array<std::int64_t, kTopicCount> on_topic{};
  for (const auto& expert : posters) {
    for (Topic t : index.topics_of.at(expert)) {
      ++on_topic[static_cast<std::size_t>(t)];
    }
  }

  bool found = false;
  Topic best = Topic::kArtsCrafts;
  double best_score = 0.0;
  double best_fraction = 0.0;
  for (int i = 0; i < kTopicCount; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (on_topic[idx] == 0 || index.topic_count[idx] == 0) continue;
    const double f_t = static_cast<double>(on_topic[idx]) / static_cast<double>(support);
    const double score = f_t / static_cast<double>(index.topic_count[idx]);
    if (!found || score > best_score) {  // ties keep the earlier topic
      found = true;
      best = static_cast<Topic>(i);
      best_score = score;
      best_fraction = f_t;
    }
  }
  if (!found) {
    // Unreachable for a well-formed index (posters are always mapped), kept
    // as a guard for hand-built indexes.
    if (skip != nullptr) *skip = InferenceSkip::kUnknownKeyword;
    return std::nullopt;
  }
  return TopicInference{keyword, best, best_fraction, best_score,
                        static_cast<int>(support)};
}

InferenceRun infer_all(const std::set<Keyword>& keywords,
                       const ExpertIndex& index, int min_support) {
  InferenceRun run;
  for (const auto& kw : keywords) {
    InferenceSkip skip{};
    if (auto inf = infer_topic(kw, index, min_support, &skip)) {
      run.inferred.emplace(kw, std::move(*inf));
    } else {
      run.skipped.emplace(kw, skip);
    }
  }
  run.coverage = keywords.empty()
                     ? 0.0
                     : static_cast<double>(run.inferred.size()) /
                           static_cast<double>(keywords.size());
  return run;
}

}  // namespace infodiet
