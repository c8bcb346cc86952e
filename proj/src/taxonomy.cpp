#include "infodiet/taxonomy.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace infodiet {

namespace {

constexpr std::array<std::string_view, kTopicCount> kTopicNames = {
    "arts-crafts",    "automotive",  "business-finance", "career",
    "education-books", "entertainment", "environment",   "fashion-style",
    "food-drink",     "health-fitness", "hobbies",       "paranormal",
    "politics-law",   "religion",    "science",          "society",
    "sports",         "technology",
};

bool is_ascii_punct(unsigned char c) { return std::ispunct(c) != 0; }

}  // namespace

std::string_view topic_name(Topic t) {
  return kTopicNames[static_cast<std::size_t>(t)];
}

std::optional<Topic> topic_from_name(std::string_view name) {
  for (int i = 0; i < kTopicCount; ++i) {
    if (kTopicNames[static_cast<std::size_t>(i)] == name) {
      return static_cast<Topic>(i);
    }
  }
  return std::nullopt;
}

const std::array<Topic, kTopicCount>& all_topics() {
  static const std::array<Topic, kTopicCount> topics = [] {
    std::array<Topic, kTopicCount> out{};
    for (int i = 0; i < kTopicCount; ++i) out[static_cast<std::size_t>(i)] = static_cast<Topic>(i);
    return out;
  }();
  return topics;
}

std::string normalize_term(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (unsigned char c : raw) {
    if (c == ' ' || c == '_' || c == '-') {
      if (!out.empty() && out.back() == '-') continue;
      out.push_back('-');
    } else {
      out.push_back(static_cast<char>(std::tolower(c)));
    }
  }
  // Strip surrounding ASCII punctuation (including hyphens produced above).
  std::size_t begin = 0;
  std::size_t end = out.size();
  while (begin < end && is_ascii_punct(static_cast<unsigned char>(out[begin]))) ++begin;
  while (end > begin && is_ascii_punct(static_cast<unsigned char>(out[end - 1]))) --end;
  return out.substr(begin, end - begin);
}

bool Taxonomy::has_term(Topic t, std::string_view normalized) const {
  const auto& set = terms[static_cast<std::size_t>(t)];
  return set.find(std::string(normalized)) != set.end();
}

std::set<Topic> Taxonomy::map_expert_tags(const std::vector<std::string>& tags,
                                          std::size_t* unmatched) const {
  std::set<Topic> out;
  std::size_t miss = 0;
  for (const auto& tag : tags) {
    const std::string norm = normalize_term(tag);
    auto it = term_topics.find(norm);
    if (it == term_topics.end()) {
      ++miss;
      continue;
    }
    out.insert(it->second.begin(), it->second.end());
  }
  if (unmatched != nullptr) *unmatched = miss;
  return out;
}

namespace {

Taxonomy build_from_json(const nlohmann::json& doc,
                         const std::map<std::string, int>& key_counts) {
  if (!doc.is_object()) {
    throw TaxonomyError("taxonomy file is not a JSON object");
  }
  for (const auto& [key, count] : key_counts) {
    if (count > 1) throw TaxonomyError("duplicate topic: " + key);
  }
  Taxonomy tax;
  std::array<bool, kTopicCount> seen{};
  for (const auto& [key, value] : doc.items()) {
    auto topic = topic_from_name(key);
    if (!topic) throw TaxonomyError("unknown topic: " + key);
    const auto idx = static_cast<std::size_t>(*topic);
    seen[idx] = true;
    if (!value.is_array() || value.empty()) {
      throw TaxonomyError("empty term list: " + key);
    }
    auto& terms = tax.terms[idx];
    terms.insert(std::string(topic_name(*topic)));
    for (const auto& term : value) {
      if (!term.is_string()) throw TaxonomyError("non-string term under topic: " + key);
      const std::string norm = normalize_term(term.get<std::string>());
      if (!norm.empty()) terms.insert(norm);
    }
  }
  for (int i = 0; i < kTopicCount; ++i) {
    if (!seen[static_cast<std::size_t>(i)]) {
      throw TaxonomyError("missing topic: " +
                          std::string(topic_name(static_cast<Topic>(i))));
    }
  }
  for (Topic t : all_topics()) {
    for (const auto& term : tax.terms[static_cast<std::size_t>(t)]) {
      tax.term_topics[term].insert(t);
    }
  }
  return tax;
}

}  // namespace

Taxonomy parse_taxonomy(const std::string& json_text) {
  // nlohmann silently keeps the last value for a repeated key, so duplicate
  // detection has to happen during the parse event stream.
  std::map<std::string, int> key_counts;
  int depth_of_root = -1;
  nlohmann::json::parser_callback_t cb =
      [&](int depth, nlohmann::json::parse_event_t event, nlohmann::json& parsed) {
        if (event == nlohmann::json::parse_event_t::object_start && depth_of_root < 0) {
          depth_of_root = depth;
        }
        if (event == nlohmann::json::parse_event_t::key && depth == depth_of_root + 1) {
          key_counts[parsed.get<std::string>()]++;
        }
        return true;
      };
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text, cb);
  } catch (const nlohmann::json::exception& e) {
    throw TaxonomyError(std::string("taxonomy parse failed: ") + e.what());
  }
  return build_from_json(doc, key_counts);
}

Taxonomy load_taxonomy(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw TaxonomyError("cannot open taxonomy file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_taxonomy(buf.str());
}

}  // namespace infodiet
