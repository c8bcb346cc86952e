#ifndef INFODIET_ANALYSIS_HPP_
#define INFODIET_ANALYSIS_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "infodiet/diet.hpp"

namespace infodiet {

enum class DietRole : int { kProduced, kConsumed, kRecommended, kCombined };

std::string_view diet_role_name(DietRole role);

struct UserDiet {
  std::string user;
  DietDistribution dist;
  DietRole role = DietRole::kProduced;
};

// Largest entry and its share; ties go to the earlier topic.
std::pair<Topic, double> top_topic(const DietDistribution& d);

// Sum of the k smallest entries (the "tail topics" of this diet).
double tail_contribution(const DietDistribution& d, int k = 12);

// Joint share of the k largest entries.
double top_k_share(const DietDistribution& d, int k);

struct TopicGroupStats {
  std::int64_t count = 0;
  double mean_top_share = 0.0;
  double mean_tail_share = 0.0;  // mean bottom-12 contribution
};

// Users grouped by their top topic; empty groups are omitted.
std::map<Topic, TopicGroupStats> group_top_topic_means(std::span<const UserDiet> diets);

// Fraction of users per top topic; values sum to 1.
std::map<Topic, double> top_topic_distribution(std::span<const UserDiet> diets);

// Fraction of users whose top-k topics jointly exceed `threshold` of their diet.
double top_k_share_quantile(std::span<const UserDiet> diets, int k = 2,
                            double threshold = 0.5);

struct UserDietPair {
  std::string user;
  DietDistribution consumed;
  DietDistribution recommended;
};

struct MitigationRecord {
  std::string user;
  double kl_consumed_baseline = 0.0;
  double kl_combined_baseline = 0.0;
  double kl_recommended_consumed = 0.0;
  bool mitigated = false;  // combined diet strictly closer to the baseline
};

struct MitigationReport {
  std::string baseline_name;
  std::vector<MitigationRecord> records;
};

MitigationReport mitigation_report(std::span<const UserDietPair> users,
                                   const DietDistribution& baseline,
                                   const std::string& baseline_name,
                                   double alpha = 1e-4);

}  // namespace infodiet

#endif  // INFODIET_ANALYSIS_HPP_
