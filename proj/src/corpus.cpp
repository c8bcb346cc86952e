#include "infodiet/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include <json.hpp>

namespace infodiet {

namespace {

bool is_word_char(unsigned char c) {
  return std::isalnum(c) != 0 || c == '_';
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool starts_with_scheme(std::string_view token) {
  return token.rfind("http://", 0) == 0 || token.rfind("https://", 0) == 0;
}

}  // namespace

std::string_view keyword_kind_name(KeywordKind k) {
  return k == KeywordKind::kHashtag ? "hashtag" : "url";
}

const std::set<std::string>* FollowGraph::followings_of(const std::string& user) const {
  auto it = followings.find(user);
  return it == followings.end() ? nullptr : &it->second;
}

std::optional<Keyword> canonicalize_url(std::string_view raw,
                                        const RedirectMap* redirects) {
  std::string url = to_lower(raw);
  if (url.rfind("http://", 0) == 0) {
    url.erase(0, 7);
  } else if (url.rfind("https://", 0) == 0) {
    url.erase(0, 8);
  } else {
    return std::nullopt;
  }
  if (url.rfind("www.", 0) == 0) url.erase(0, 4);
  if (auto cut = url.find_first_of("?#"); cut != std::string::npos) {
    url.erase(cut);
  }
  while (!url.empty() && url.back() == '/') url.pop_back();
  const auto host_end = url.find('/');
  const std::string host = url.substr(0, host_end);
  if (host.empty()) return std::nullopt;
  if (redirects != nullptr) {
    if (auto it = redirects->find(url); it != redirects->end()) {
      url = it->second;  // applied once, no chaining
    }
  }
  if (url.empty()) return std::nullopt;
  return Keyword{KeywordKind::kUrl, std::move(url)};
}

std::vector<Keyword> extract_keywords(std::string_view text,
                                      const RedirectMap* redirects,
                                      ExtractStats* stats) {
  std::vector<Keyword> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i])) != 0) ++i;
    std::size_t end = i;
    while (end < n && std::isspace(static_cast<unsigned char>(text[end])) == 0) ++end;
    if (end == i) break;
    const std::string_view token = text.substr(i, end - i);
    if (starts_with_scheme(token)) {
      if (auto url = canonicalize_url(token, redirects)) {
        out.push_back(std::move(*url));
      } else if (stats != nullptr) {
        ++stats->malformed_urls;
      }
    } else {
      for (std::size_t j = 0; j < token.size(); ++j) {
        if (token[j] != '#') continue;
        std::size_t k = j + 1;
        while (k < token.size() && is_word_char(static_cast<unsigned char>(token[k]))) ++k;
        if (k > j + 1) {
          out.push_back(Keyword{KeywordKind::kHashtag,
                                to_lower(token.substr(j + 1, k - j - 1))});
        }
        j = k - 1;
      }
    }
    i = end;
  }
  return out;
}

bool is_english(std::string_view text,
                const std::unordered_set<std::string>& dictionary) {
  std::size_t total = 0;
  std::size_t in_dict = 0;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i])) != 0) ++i;
    std::size_t end = i;
    while (end < n && std::isspace(static_cast<unsigned char>(text[end])) == 0) ++end;
    if (end == i) break;
    std::string_view token = text.substr(i, end - i);
    i = end;
    if (token.front() == '#' || token.front() == '@' || starts_with_scheme(token)) {
      continue;  // keywords and mentions are not words
    }
    // Strip surrounding punctuation, keep inner apostrophes etc. as-is.
    std::size_t b = 0;
    std::size_t e = token.size();
    while (b < e && std::ispunct(static_cast<unsigned char>(token[b])) != 0) ++b;
    while (e > b && std::ispunct(static_cast<unsigned char>(token[e - 1])) != 0) --e;
    if (b == e) continue;
    ++total;
    if (dictionary.count(to_lower(token.substr(b, e - b))) > 0) ++in_dict;
  }
  if (total == 0) return false;
  return 2 * in_dict >= total;  // "at least half" is inclusive
}

namespace {

void count_or_throw(bool strict, std::int64_t line_no, const std::string& what,
                    std::int64_t* skipped) {
  if (strict) {
    throw CorpusError("line " + std::to_string(line_no) + ": " + what);
  }
  ++*skipped;
}

}  // namespace

std::vector<Tweet> load_tweets_jsonl(const std::filesystem::path& path,
                                     bool strict, LoadStats* stats) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open tweets file: " + path.string());
  LoadStats local;
  LoadStats* st = stats != nullptr ? stats : &local;
  std::vector<Tweet> out;
  std::set<std::string> seen_ids;
  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto doc = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.is_object() ||
        !doc.contains("id") || !doc["id"].is_string() ||
        !doc.contains("user") || !doc["user"].is_string() ||
        !doc.contains("ts") || !doc["ts"].is_number_integer() ||
        !doc.contains("text") || !doc["text"].is_string()) {
      count_or_throw(strict, line_no, "malformed tweet record", &st->tweets_skipped);
      continue;
    }
    Tweet t;
    t.id = doc["id"].get<std::string>();
    t.author = doc["user"].get<std::string>();
    t.timestamp = doc["ts"].get<std::int64_t>();
    t.text = doc["text"].get<std::string>();
    if (doc.contains("retweet_of") && doc["retweet_of"].is_string()) {
      t.retweet_of = doc["retweet_of"].get<std::string>();
    }
    if (t.id.empty() || t.author.empty()) {
      count_or_throw(strict, line_no, "empty tweet id or user", &st->tweets_skipped);
      continue;
    }
    if (!seen_ids.insert(t.id).second) {
      count_or_throw(strict, line_no, "duplicate tweet id: " + t.id,
                     &st->tweets_skipped);
      continue;
    }
    out.push_back(std::move(t));
    ++st->tweets_parsed;
  }
  return out;
}

std::vector<ExpertProfile> load_experts_jsonl(const std::filesystem::path& path,
                                              bool strict, LoadStats* stats) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open experts file: " + path.string());
  LoadStats local;
  LoadStats* st = stats != nullptr ? stats : &local;
  std::vector<ExpertProfile> out;
  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto doc = nlohmann::json::parse(line, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() ||
        !doc.contains("user") || !doc["user"].is_string() ||
        !doc.contains("tags") || !doc["tags"].is_array()) {
      count_or_throw(strict, line_no, "malformed expert record", &st->experts_skipped);
      continue;
    }
    ExpertProfile p;
    p.user = doc["user"].get<std::string>();
    if (p.user.empty()) {
      count_or_throw(strict, line_no, "empty expert user", &st->experts_skipped);
      continue;
    }
    bool ok = true;
    for (const auto& tag : doc["tags"]) {
      if (!tag.is_string()) {
        ok = false;
        break;
      }
      p.tags.push_back(tag.get<std::string>());
    }
    if (!ok) {
      count_or_throw(strict, line_no, "non-string expert tag", &st->experts_skipped);
      continue;
    }
    out.push_back(std::move(p));
    ++st->experts_parsed;
  }
  return out;
}

FollowGraph load_follow_graph_csv(const std::filesystem::path& path,
                                  bool strict, LoadStats* stats) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open graph file: " + path.string());
  LoadStats local;
  LoadStats* st = stats != nullptr ? stats : &local;
  FollowGraph graph;
  std::string line;
  std::int64_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != "follower,followee") {
        throw CorpusError("graph file missing 'follower,followee' header: " +
                          path.string());
      }
      header_seen = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 >= line.size() ||
        line.find(',', comma + 1) != std::string::npos) {
      count_or_throw(strict, line_no, "malformed edge", &st->edges_skipped);
      continue;
    }
    std::string follower = line.substr(0, comma);
    std::string followee = line.substr(comma + 1);
    if (follower == followee) {
      ++st->self_loops_dropped;
      continue;
    }
    graph.users.insert(follower);
    graph.users.insert(followee);
    if (!graph.followings[follower].insert(followee).second) {
      ++st->duplicate_edges;
      continue;
    }
    ++st->edges_parsed;
  }
  if (!header_seen) {
    throw CorpusError("graph file missing 'follower,followee' header: " +
                      path.string());
  }
  return graph;
}

RedirectMap load_redirect_map_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open redirect map: " + path.string());
  RedirectMap map;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty() || line == "short,target") continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw CorpusError("malformed redirect map line: " + line);
    }
    map[line.substr(0, comma)] = line.substr(comma + 1);
  }
  return map;
}

std::unordered_set<std::string> load_dictionary(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open dictionary: " + path.string());
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (!line.empty()) words.insert(line);
  }
  return words;
}

Corpus load_corpus(const std::filesystem::path& tweets_path,
                   const std::filesystem::path& experts_path,
                   const std::filesystem::path& graph_path, bool strict) {
  Corpus corpus;
  corpus.tweets = load_tweets_jsonl(tweets_path, strict, &corpus.stats);
  corpus.experts = load_experts_jsonl(experts_path, strict, &corpus.stats);
  corpus.graph = load_follow_graph_csv(graph_path, strict, &corpus.stats);
  return corpus;
}

}  // namespace infodiet
