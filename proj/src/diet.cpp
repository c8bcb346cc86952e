#include "infodiet/diet.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace infodiet {

double DietVector::evaluate(const UnitCounts& units) {
  double total = 0.0;
  for (const auto& [denom, count] : units) {  // ascending denominator
    total += static_cast<double>(count) / static_cast<double>(denom);
  }
  return total;
}

void DietVector::merge(UnitCounts& into, const UnitCounts& from) {
  for (const auto& [denom, count] : from) into[denom] += count;
}

void DietVector::add_tweet(std::span<const std::optional<Topic>> topics_per_keyword) {
  const int n = static_cast<int>(topics_per_keyword.size());
  if (n == 0) {
    ++keywordless_count_;
    return;
  }
  ++tweet_count_;
  for (const auto& topic : topics_per_keyword) {
    if (topic.has_value()) {
      ++topic_units_[static_cast<std::size_t>(*topic)][n];
    } else {
      ++unattributed_units_[n];
    }
  }
}

double DietVector::weight(Topic t) const {
  return evaluate(topic_units_[static_cast<std::size_t>(t)]);
}

std::array<double, kTopicCount> DietVector::weights() const {
  std::array<double, kTopicCount> out{};
  for (int i = 0; i < kTopicCount; ++i) {
    out[static_cast<std::size_t>(i)] = evaluate(topic_units_[static_cast<std::size_t>(i)]);
  }
  return out;
}

double DietVector::weight_sum() const {
  double total = 0.0;
  for (const auto& units : topic_units_) total += evaluate(units);
  return total;
}

double DietVector::unattributed() const { return evaluate(unattributed_units_); }

DietVector& DietVector::operator+=(const DietVector& other) {
  for (int i = 0; i < kTopicCount; ++i) {
    merge(topic_units_[static_cast<std::size_t>(i)],
          other.topic_units_[static_cast<std::size_t>(i)]);
  }
  merge(unattributed_units_, other.unattributed_units_);
  tweet_count_ += other.tweet_count_;
  keywordless_count_ += other.keywordless_count_;
  return *this;
}

DietVector compute_diet(std::span<const Tweet> tweets,
                        const InferenceMap& inferences,
                        const RedirectMap* redirects, ExtractStats* stats) {
  DietVector diet;
  std::vector<std::optional<Topic>> topics;
  for (const auto& tweet : tweets) {
    topics.clear();
    for (const auto& kw : extract_keywords(tweet.text, redirects, stats)) {
      auto it = inferences.find(kw);
      if (it != inferences.end()) {
        topics.emplace_back(it->second.topic);
      } else {
        topics.emplace_back(std::nullopt);
      }
    }
    diet.add_tweet(topics);
  }
  return diet;
}

DietDistribution normalize(const DietVector& d) {
  const double sum = d.weight_sum();
  if (sum <= 0.0) throw EmptyDietError();
  DietDistribution dist;
  const auto w = d.weights();
  for (int i = 0; i < kTopicCount; ++i) {
    dist.p[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] / sum;
  }
  return dist;
}

std::array<double, kTopicCount + 1> normalize_with_unattributed(const DietVector& d) {
  const double unattributed = d.unattributed();
  const double sum = d.weight_sum() + unattributed;
  if (sum <= 0.0) throw EmptyDietError();
  std::array<double, kTopicCount + 1> out{};
  const auto w = d.weights();
  for (int i = 0; i < kTopicCount; ++i) {
    out[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] / sum;
  }
  out[kTopicCount] = unattributed / sum;
  return out;
}

double kl_divergence(const DietDistribution& p, const DietDistribution& q,
                     double alpha) {
  if (alpha < 0.0) throw std::invalid_argument("kl_divergence: alpha must be >= 0");
  const double denom = 1.0 + kTopicCount * alpha;
  double sum = 0.0;
  for (int i = 0; i < kTopicCount; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const double pi = (p.p[idx] + alpha) / denom;
    const double qi = (q.p[idx] + alpha) / denom;
    if (pi == 0.0) continue;  // 0 * ln(0/q) = 0
    if (qi == 0.0) {
      throw std::domain_error("kl_divergence: divergence undefined (q has a zero "
                              "where p is positive and alpha = 0)");
    }
    sum += pi * std::log(pi / qi);
  }
  return sum;
}

DietDistribution combine(const DietDistribution& consumed,
                         const DietDistribution& recommended) {
  DietDistribution out;
  for (int i = 0; i < kTopicCount; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    out.p[idx] = (consumed.p[idx] + recommended.p[idx]) / 2.0;
  }
  return out;
}

MediaBaseline load_baseline(const std::string& name,
                            const std::filesystem::path& baselines_dir) {
  if (std::find(kBaselineNames.begin(), kBaselineNames.end(), name) ==
      kBaselineNames.end()) {
    throw BaselineError("unknown baseline: " + name);
  }
  const auto path = baselines_dir / (name + ".csv");
  std::ifstream in(path);
  if (!in) throw BaselineError("cannot open baseline file: " + path.string());

  MediaBaseline baseline;
  baseline.name = name;
  std::array<bool, kTopicCount> seen{};
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty() || line == "topic,percent") continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw BaselineError("malformed baseline line: " + line);
    }
    const std::string topic_str = line.substr(0, comma);
    auto topic = topic_from_name(topic_str);
    if (!topic) throw BaselineError("unknown topic in baseline: " + topic_str);
    const auto idx = static_cast<std::size_t>(*topic);
    if (seen[idx]) throw BaselineError("duplicate topic in baseline: " + topic_str);
    seen[idx] = true;
    const std::string value = line.substr(comma + 1);
    char* endp = nullptr;
    const double percent = std::strtod(value.c_str(), &endp);
    if (endp == value.c_str() || *endp != '\0' || percent < 0.0) {
      throw BaselineError("malformed percent in baseline: " + line);
    }
    baseline.percent[idx] = percent;
  }
  for (int i = 0; i < kTopicCount; ++i) {
    if (!seen[static_cast<std::size_t>(i)]) {
      throw BaselineError("baseline missing topic: " +
                          std::string(topic_name(static_cast<Topic>(i))));
    }
  }
  // Printed columns are rounded to two decimals and may not sum to exactly
  // 100, so the distribution is renormalized.
  double sum = 0.0;
  for (double v : baseline.percent) sum += v / 100.0;
  if (sum <= 0.0) throw BaselineError("baseline has zero mass: " + name);
  for (int i = 0; i < kTopicCount; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    baseline.distribution.p[idx] = (baseline.percent[idx] / 100.0) / sum;
  }
  return baseline;
}

}  // namespace infodiet
