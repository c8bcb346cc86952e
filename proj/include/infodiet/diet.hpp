#ifndef INFODIET_DIET_HPP_
#define INFODIET_DIET_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "infodiet/corpus.hpp"
#include "infodiet/inference.hpp"
#include "infodiet/taxonomy.hpp"

namespace infodiet {

class EmptyDietError : public std::runtime_error {
 public:
  EmptyDietError() : std::runtime_error("empty diet") {}
};

// Raw topic-vector of a tweet set. A tweet with n keywords contributes 1/n
// per keyword to the keyword's topic (or to the unattributed pool), so every
// keyword-bearing tweet carries total weight 1. Internally each topic stores
// integer counts of 1/n units, which makes addition of disjoint tweet sets
// exact rather than subject to float association.
class DietVector {
 public:
  // topics_per_keyword[i] is the inferred topic of the tweet's i-th keyword,
  // or nullopt when the keyword has no inference. An empty vector records a
  // keyword-less tweet.
  void add_tweet(std::span<const std::optional<Topic>> topics_per_keyword);

  double weight(Topic t) const;
  std::array<double, kTopicCount> weights() const;
  double weight_sum() const;
  double unattributed() const;
  std::int64_t tweet_count() const { return tweet_count_; }
  std::int64_t keywordless_count() const { return keywordless_count_; }

  DietVector& operator+=(const DietVector& other);
  friend DietVector operator+(DietVector lhs, const DietVector& rhs) {
    lhs += rhs;
    return lhs;
  }
  bool operator==(const DietVector&) const = default;

 private:
  using UnitCounts = std::map<int, std::int64_t>;  // denominator -> count
  static double evaluate(const UnitCounts& units);
  static void merge(UnitCounts& into, const UnitCounts& from);

  std::array<UnitCounts, kTopicCount> topic_units_{};
  UnitCounts unattributed_units_;
  std::int64_t tweet_count_ = 0;
  std::int64_t keywordless_count_ = 0;
};

// Topical distribution over the 18 topics; entries sum to 1.
struct DietDistribution {
  std::array<double, kTopicCount> p{};

  bool operator==(const DietDistribution&) const = default;
};

DietVector compute_diet(std::span<const Tweet> tweets,
                        const InferenceMap& inferences,
                        const RedirectMap* redirects = nullptr,
                        ExtractStats* stats = nullptr);

// Distribution over topics only; unattributed mass is reported separately.
// Throws EmptyDietError when the topical mass is zero.
DietDistribution normalize(const DietVector& d);

// Reporting form: 18 topic shares plus a trailing unattributed share, all 19
// summing to 1. Comparisons always use the 18-topic normalize() form.
std::array<double, kTopicCount + 1> normalize_with_unattributed(const DietVector& d);

// KL(p || q) in nats with additive smoothing x <- (x + alpha)/(1 + 18*alpha)
// applied to both arguments. alpha = 0 requires q > 0 wherever p > 0.
double kl_divergence(const DietDistribution& p, const DietDistribution& q,
                     double alpha = 1e-4);

// Elementwise mean of the two diets (equal-attention combination).
DietDistribution combine(const DietDistribution& consumed,
                         const DietDistribution& recommended);

// A news organization's print-edition diet from the bundled data.
struct MediaBaseline {
  std::string name;
  std::array<double, kTopicCount> percent{};  // cells exactly as bundled
  DietDistribution distribution;              // percent/100, renormalized
};

inline constexpr std::array<std::string_view, 3> kBaselineNames = {
    "nytimes", "washpost", "economist"};

class BaselineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reads <dir>/<name>.csv ("topic,percent", all 18 topics exactly once).
MediaBaseline load_baseline(const std::string& name,
                            const std::filesystem::path& baselines_dir);

}  // namespace infodiet

#endif  // INFODIET_DIET_HPP_
