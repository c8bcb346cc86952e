#include "infodiet/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace infodiet {

std::string_view diet_role_name(DietRole role) {
  switch (role) {
    case DietRole::kProduced: return "produced";
    case DietRole::kConsumed: return "consumed";
    case DietRole::kRecommended: return "recommended";
    case DietRole::kCombined: return "combined";
  }
  return "unknown";
}

std::pair<Topic, double> top_topic(const DietDistribution& d) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < static_cast<std::size_t>(kTopicCount); ++i) {
    if (d.p[i] > d.p[best]) best = i;  // strict: ties keep the earlier topic
  }
  return {static_cast<Topic>(best), d.p[best]};
}

namespace {

// Entries sorted ascending by (value, topic index).
std::array<std::pair<double, int>, kTopicCount> sorted_entries(const DietDistribution& d) {
  std::array<std::pair<double, int>, kTopicCount> entries;
  for (int i = 0; i < kTopicCount; ++i) {
    entries[static_cast<std::size_t>(i)] = {d.p[static_cast<std::size_t>(i)], i};
  }
  std::sort(entries.begin(), entries.end());
  return entries;
}

}  // namespace

double tail_contribution(const DietDistribution& d, int k) {
  if (k < 1 || k > kTopicCount) {
    throw std::invalid_argument("tail_contribution: k out of range");
  }
  const auto entries = sorted_entries(d);
  double sum = 0.0;
  for (int i = 0; i < k; ++i) sum += entries[static_cast<std::size_t>(i)].first;
  return sum;
}

double top_k_share(const DietDistribution& d, int k) {
  if (k < 1 || k > kTopicCount) {
    throw std::invalid_argument("top_k_share: k out of range");
  }
  const auto entries = sorted_entries(d);
  double sum = 0.0;
  for (int i = 0; i < k; ++i) {
    sum += entries[static_cast<std::size_t>(kTopicCount - 1 - i)].first;
  }
  return sum;
}

std::map<Topic, TopicGroupStats> group_top_topic_means(std::span<const UserDiet> diets) {
  std::map<Topic, TopicGroupStats> groups;
  for (const auto& ud : diets) {
    const auto [topic, share] = top_topic(ud.dist);
    auto& g = groups[topic];
    ++g.count;
    g.mean_top_share += share;
    g.mean_tail_share += tail_contribution(ud.dist, 12);
  }
  for (auto& [topic, g] : groups) {
    g.mean_top_share /= static_cast<double>(g.count);
    g.mean_tail_share /= static_cast<double>(g.count);
  }
  return groups;
}

std::map<Topic, double> top_topic_distribution(std::span<const UserDiet> diets) {
  std::map<Topic, double> dist;
  if (diets.empty()) return dist;
  for (const auto& ud : diets) {
    dist[top_topic(ud.dist).first] += 1.0;
  }
  for (auto& [topic, value] : dist) {
    value /= static_cast<double>(diets.size());
  }
  return dist;
}

double top_k_share_quantile(std::span<const UserDiet> diets, int k, double threshold) {
  if (diets.empty()) return 0.0;
  std::int64_t counted = 0;
  for (const auto& ud : diets) {
    if (top_k_share(ud.dist, k) > threshold) ++counted;
  }
  return static_cast<double>(counted) / static_cast<double>(diets.size());
}

MitigationReport mitigation_report(std::span<const UserDietPair> users,
                                   const DietDistribution& baseline,
                                   const std::string& baseline_name,
                                   double alpha) {
  MitigationReport report;
  report.baseline_name = baseline_name;
  report.records.reserve(users.size());
  for (const auto& u : users) {
    const DietDistribution combined = combine(u.consumed, u.recommended);
    MitigationRecord rec;
    rec.user = u.user;
    rec.kl_consumed_baseline = kl_divergence(u.consumed, baseline, alpha);
    rec.kl_combined_baseline = kl_divergence(combined, baseline, alpha);
    rec.kl_recommended_consumed = kl_divergence(u.recommended, u.consumed, alpha);
    rec.mitigated = rec.kl_combined_baseline < rec.kl_consumed_baseline;
    report.records.push_back(std::move(rec));
  }
  return report;
}

}  // namespace infodiet
