#ifndef INFODIET_INFERENCE_HPP_
#define INFODIET_INFERENCE_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>

#include "infodiet/corpus.hpp"
#include "infodiet/taxonomy.hpp"

namespace infodiet {

// Per-topic expert counts and keyword -> expert-poster sets. Built once,
// immutable afterwards; inference is read-only and parallel-safe per keyword.
struct ExpertIndex {
  // Only experts whose tags matched at least one topic appear here.
  std::map<std::string, std::set<Topic>> topics_of;
  // topic_count[t] = number of experts mapped to t across the dataset.
  std::array<std::int64_t, kTopicCount> topic_count{};
  // posters[k] = distinct experts who posted keyword k.
  std::map<Keyword, std::set<std::string>> posters;

  // Build statistics.
  std::int64_t experts_without_topic = 0;
  std::int64_t tweets_by_unknown_users = 0;
  std::size_t unmatched_tags = 0;
  ExtractStats extract_stats;
};

ExpertIndex build_expert_index(std::span<const ExpertProfile> experts,
                               std::span<const Tweet> expert_tweets,
                               const Taxonomy& taxonomy,
                               const RedirectMap* redirects = nullptr);

enum class InferenceSkip : int {
  kUnknownKeyword = 0,  // keyword never posted by any indexed expert
  kBelowSupport = 1,    // posted by fewer than min_support experts
};

std::string_view inference_skip_name(InferenceSkip s);

struct TopicInference {
  Keyword keyword;
  Topic topic;
  double raw_fraction = 0.0;     // f_t: fraction of the keyword's experts on topic
  double normalized_score = 0.0; // f_t / N_t
  int support = 0;               // |E_k|
};

// Picks the topic with the highest normalized fraction; ties break toward the
// earlier topic in canonical order. Returns nullopt when the keyword cannot
// be inferred (reason in *skip if given).
std::optional<TopicInference> infer_topic(const Keyword& keyword,
                                          const ExpertIndex& index,
                                          int min_support = 10,
                                          InferenceSkip* skip = nullptr);

using InferenceMap = std::map<Keyword, TopicInference>;

struct InferenceRun {
  InferenceMap inferred;
  std::map<Keyword, InferenceSkip> skipped;
  double coverage = 0.0;  // |inferred| / |keywords|, over distinct keywords
};

InferenceRun infer_all(const std::set<Keyword>& keywords,
                       const ExpertIndex& index, int min_support = 10);

}  // namespace infodiet

#endif  // INFODIET_INFERENCE_HPP_
