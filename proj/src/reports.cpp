#include "infodiet/reports.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace infodiet {

using nlohmann::json;

std::string format_double(double value) { return json(value).dump(); }

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  const auto tmp = path.parent_path() / (path.filename().string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write: " + tmp.string());
    out << content;
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

namespace {

json topic_map_json(const std::array<double, kTopicCount>& values) {
  json obj = json::object();
  for (Topic t : all_topics()) {
    obj[std::string(topic_name(t))] = values[static_cast<std::size_t>(t)];
  }
  return obj;
}

json distribution_json(const DietDistribution& dist) { return topic_map_json(dist.p); }

}  // namespace

std::string diet_report_json(const DietVector& d) {
  json report;
  report["weights"] = topic_map_json(d.weights());
  report["unattributed"] = d.unattributed();
  report["tweet_count"] = d.tweet_count();
  report["keywordless_count"] = d.keywordless_count();
  if (d.weight_sum() > 0.0) {
    report["distribution"] = distribution_json(normalize(d));
  } else {
    report["distribution"] = json::object();
  }
  return report.dump(2) + "\n";
}

std::string baseline_json(const MediaBaseline& baseline) {
  json doc;
  doc["name"] = baseline.name;
  doc["percent"] = topic_map_json(baseline.percent);
  doc["distribution"] = distribution_json(baseline.distribution);
  return doc.dump(2) + "\n";
}

std::string baseline_csv(const MediaBaseline& baseline) {
  std::ostringstream out;
  out << "topic,percent,fraction\n";
  for (Topic t : all_topics()) {
    const auto idx = static_cast<std::size_t>(t);
    out << topic_name(t) << ',' << format_double(baseline.percent[idx]) << ','
        << format_double(baseline.distribution.p[idx]) << '\n';
  }
  return out.str();
}

std::string inferences_csv(const InferenceMap& inferences) {
  std::ostringstream out;
  out << "keyword_kind,keyword,topic,raw_fraction,normalized_score,support\n";
  for (const auto& [kw, inf] : inferences) {
    out << keyword_kind_name(kw.kind) << ',' << kw.canonical << ','
        << topic_name(inf.topic) << ',' << format_double(inf.raw_fraction) << ','
        << format_double(inf.normalized_score) << ',' << inf.support << '\n';
  }
  return out.str();
}

std::string skipped_keywords_csv(const std::map<Keyword, InferenceSkip>& skipped) {
  std::ostringstream out;
  out << "keyword_kind,keyword,reason\n";
  for (const auto& [kw, reason] : skipped) {
    out << keyword_kind_name(kw.kind) << ',' << kw.canonical << ','
        << inference_skip_name(reason) << '\n';
  }
  return out.str();
}

std::string groups_csv(const std::map<Topic, TopicGroupStats>& groups) {
  std::ostringstream out;
  out << "topic,count,mean_top_share,mean_tail_share\n";
  for (const auto& [topic, g] : groups) {
    out << topic_name(topic) << ',' << g.count << ','
        << format_double(g.mean_top_share) << ','
        << format_double(g.mean_tail_share) << '\n';
  }
  return out.str();
}

std::string distribution_csv(const std::map<Topic, double>& dist) {
  std::ostringstream out;
  out << "topic,fraction\n";
  for (const auto& [topic, fraction] : dist) {
    out << topic_name(topic) << ',' << format_double(fraction) << '\n';
  }
  return out.str();
}

std::string mitigation_csv(const MitigationReport& report) {
  std::ostringstream out;
  out << "user,kl_consumed_baseline,kl_combined_baseline,kl_reco_consumed,"
         "mitigated_flag\n";
  for (const auto& rec : report.records) {
    out << rec.user << ',' << format_double(rec.kl_consumed_baseline) << ','
        << format_double(rec.kl_combined_baseline) << ','
        << format_double(rec.kl_recommended_consumed) << ','
        << (rec.mitigated ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string sim_result_json(const SimResult& result) {
  json doc;
  doc["config"] = {
      {"snapshot_interval", result.config.snapshot_interval},
      {"top_k", result.config.top_k},
      {"window", result.config.effective_window()},
      {"seed", result.config.seed},
      {"dedupe_across_snapshots", result.config.dedupe_across_snapshots},
      {"include_followed_in_candidates", result.config.include_followed_in_candidates},
  };
  doc["users"] = json::array();
  for (const auto& ur : result.users) {
    json user_doc;
    user_doc["user"] = ur.user;
    user_doc["consumed"] = json(ur.consumed);
    json snaps = json::array();
    for (const auto& snap : ur.snapshots) {
      snaps.push_back({{"at", snap.at}, {"tweets", snap.tweet_ids}});
    }
    user_doc["snapshots"] = std::move(snaps);
    user_doc["recommended"] = json(ur.recommended);
    if (ur.has_diets) {
      user_doc["diets"] = {
          {"consumed", distribution_json(ur.consumed_diet)},
          {"recommended", distribution_json(ur.recommended_diet)},
          {"combined", distribution_json(ur.combined_diet)},
      };
    }
    doc["users"].push_back(std::move(user_doc));
  }
  doc["warnings"] = result.warnings;
  return doc.dump(2) + "\n";
}

std::vector<UserDietPair> diet_pairs_from_sim_json(const std::string& json_text) {
  const json doc = json::parse(json_text);
  std::vector<UserDietPair> pairs;
  if (!doc.contains("users")) return pairs;
  for (const auto& user_doc : doc["users"]) {
    if (!user_doc.contains("diets")) continue;
    UserDietPair pair;
    pair.user = user_doc["user"].get<std::string>();
    for (Topic t : all_topics()) {
      const auto name = std::string(topic_name(t));
      const auto idx = static_cast<std::size_t>(t);
      pair.consumed.p[idx] = user_doc["diets"]["consumed"].value(name, 0.0);
      pair.recommended.p[idx] = user_doc["diets"]["recommended"].value(name, 0.0);
    }
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

}  // namespace infodiet
