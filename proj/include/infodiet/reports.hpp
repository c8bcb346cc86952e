#ifndef INFODIET_REPORTS_HPP_
#define INFODIET_REPORTS_HPP_

#include <filesystem>
#include <map>
#include <string>

#include "infodiet/analysis.hpp"
#include "infodiet/diet.hpp"
#include "infodiet/inference.hpp"
#include "infodiet/simnet.hpp"

namespace infodiet {

// Shortest round-trip decimal form (matches the JSON serializer), so CSV and
// JSON reports agree and rerunning a pipeline is byte-identical.
std::string format_double(double value);

// Writes via a temp file in the same directory plus rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

// {"weights": {...}, "unattributed": .., "tweet_count": ..,
//  "keywordless_count": .., "distribution": {...}}  -- all 18 topics listed.
std::string diet_report_json(const DietVector& d);

std::string baseline_json(const MediaBaseline& baseline);
std::string baseline_csv(const MediaBaseline& baseline);

// keyword_kind,keyword,topic,raw_fraction,normalized_score,support
std::string inferences_csv(const InferenceMap& inferences);
// keyword_kind,keyword,reason
std::string skipped_keywords_csv(const std::map<Keyword, InferenceSkip>& skipped);

// topic,count,mean_top_share,mean_tail_share
std::string groups_csv(const std::map<Topic, TopicGroupStats>& groups);
// topic,fraction
std::string distribution_csv(const std::map<Topic, double>& dist);
// user,kl_consumed_baseline,kl_combined_baseline,kl_reco_consumed,mitigated_flag
std::string mitigation_csv(const MitigationReport& report);

std::string sim_result_json(const SimResult& result);

// Rebuilds the per-user diet pairs stored in a sim result JSON (users without
// diets are skipped).
std::vector<UserDietPair> diet_pairs_from_sim_json(const std::string& json_text);

}  // namespace infodiet

#endif  // INFODIET_REPORTS_HPP_
