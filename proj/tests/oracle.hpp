#ifndef INFODIET_TESTS_ORACLE_HPP_
#define INFODIET_TESTS_ORACLE_HPP_

#include <array>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "infodiet/corpus.hpp"
#include "infodiet/inference.hpp"
#include "infodiet/taxonomy.hpp"

namespace testutil {

// Brute-force topic inference recomputed from raw records with plain loops.
// Deliberately avoids ExpertIndex / infer_topic so it stays an independent
// check of the whole scoring path (E_k, f_t, N_t, argmax, support rule).
struct OracleInference {
  bool inferred = false;
  infodiet::Topic topic = infodiet::Topic::kArtsCrafts;
  double raw_fraction = 0.0;
  double normalized_score = 0.0;
  int support = 0;
};

inline OracleInference oracle_infer(
    const infodiet::Keyword& keyword,
    const std::vector<infodiet::ExpertProfile>& experts,
    const std::vector<infodiet::Tweet>& expert_tweets,
    const infodiet::Taxonomy& taxonomy, int min_support) {
  using infodiet::Topic;
  using infodiet::kTopicCount;

  // Merge duplicate expert rows, then map tags; experts with no topic are out.
  std::map<std::string, std::vector<std::string>> merged;
  for (const auto& e : experts) {
    auto& tags = merged[e.user];
    tags.insert(tags.end(), e.tags.begin(), e.tags.end());
  }
  std::map<std::string, std::set<Topic>> expert_topics;
  for (const auto& [user, tags] : merged) {
    auto topics = taxonomy.map_expert_tags(tags);
    if (!topics.empty()) expert_topics.emplace(user, std::move(topics));
  }

  // E_k: distinct mapped experts whose tweets contain the keyword.
  std::set<std::string> posters;
  for (const auto& tweet : expert_tweets) {
    if (expert_topics.find(tweet.author) == expert_topics.end()) continue;
    for (const auto& kw : infodiet::extract_keywords(tweet.text)) {
      if (kw == keyword) posters.insert(tweet.author);
    }
  }
  OracleInference out;
  out.support = static_cast<int>(posters.size());
  if (out.support < min_support || out.support == 0) return out;

  for (int i = 0; i < kTopicCount; ++i) {
    const Topic t = static_cast<Topic>(i);
    long total_on_topic = 0;  // N_t
    for (const auto& [user, topics] : expert_topics) {
      if (topics.count(t) > 0) ++total_on_topic;
    }
    long posters_on_topic = 0;
    for (const auto& user : posters) {
      if (expert_topics.at(user).count(t) > 0) ++posters_on_topic;
    }
    if (posters_on_topic == 0 || total_on_topic == 0) continue;
    const double f_t = static_cast<double>(posters_on_topic) /
                       static_cast<double>(out.support);
    const double score = f_t / static_cast<double>(total_on_topic);
    if (!out.inferred || score > out.normalized_score) {
      out.inferred = true;
      out.topic = t;
      out.raw_fraction = f_t;
      out.normalized_score = score;
    }
  }
  return out;
}

// Shared randomized corpus generator for the oracle-equivalence checks.
struct SyntheticCorpus {
  std::vector<infodiet::ExpertProfile> experts;
  std::vector<infodiet::Tweet> expert_tweets;
  std::vector<infodiet::Keyword> keywords;  // the pool, incl. never-posted ones
  int min_support = 2;
};

inline SyntheticCorpus make_synthetic_corpus(std::mt19937& rng) {
  using infodiet::Keyword;
  using infodiet::KeywordKind;

  SyntheticCorpus corpus;
  std::uniform_int_distribution<int> expert_count(3, 100);
  std::uniform_int_distribution<int> keyword_count(5, 200);
  std::uniform_int_distribution<int> support_pick(0, 2);
  corpus.min_support = std::array<int, 3>{2, 3, 10}[support_pick(rng)];

  // A small tag pool keeps topic collisions (and score ties) frequent.
  const std::vector<std::string> tag_pool = {
      "football", "politics", "music", "physics", "food",
      "climate",  "junk1",    "junk2", "",        "celebs"};
  std::uniform_int_distribution<int> tags_per_expert(0, 3);
  std::uniform_int_distribution<std::size_t> tag_pick(0, tag_pool.size() - 1);

  const int n_experts = expert_count(rng);
  for (int i = 0; i < n_experts; ++i) {
    infodiet::ExpertProfile p;
    p.user = "e" + std::to_string(i);
    const int n_tags = tags_per_expert(rng);
    for (int j = 0; j < n_tags; ++j) p.tags.push_back(tag_pool[tag_pick(rng)]);
    corpus.experts.push_back(std::move(p));
  }

  const int n_keywords = keyword_count(rng);
  for (int i = 0; i < n_keywords; ++i) {
    corpus.keywords.push_back(Keyword{KeywordKind::kHashtag, "kw" + std::to_string(i)});
  }

  // Each expert posts a random bag of keywords, with repeats.
  std::uniform_int_distribution<int> posts_per_expert(0, 12);
  std::uniform_int_distribution<std::size_t> kw_pick(0, corpus.keywords.size() - 1);
  int tweet_id = 0;
  for (const auto& e : corpus.experts) {
    const int n_posts = posts_per_expert(rng);
    for (int j = 0; j < n_posts; ++j) {
      infodiet::Tweet t;
      t.id = "x" + std::to_string(tweet_id++);
      t.author = e.user;
      t.timestamp = tweet_id;
      t.text = "#" + corpus.keywords[kw_pick(rng)].canonical + " post";
      corpus.expert_tweets.push_back(std::move(t));
    }
  }
  return corpus;
}

}  // namespace testutil

#endif  // INFODIET_TESTS_ORACLE_HPP_
