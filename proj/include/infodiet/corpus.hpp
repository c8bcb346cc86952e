#ifndef INFODIET_CORPUS_HPP_
#define INFODIET_CORPUS_HPP_

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace infodiet {

struct Tweet {
  std::string id;
  std::string author;
  std::int64_t timestamp = 0;  // UTC epoch seconds
  std::string text;
  std::string retweet_of;  // empty when not a retweet

  bool is_retweet() const { return !retweet_of.empty(); }
};

enum class KeywordKind : int { kHashtag = 0, kUrl = 1 };

std::string_view keyword_kind_name(KeywordKind k);

// A hashtag ("nba") or URL ("nytimes.com/politics") in canonical form.
struct Keyword {
  KeywordKind kind;
  std::string canonical;

  auto operator<=>(const Keyword&) const = default;
};

struct ExpertProfile {
  std::string user;
  std::vector<std::string> tags;
};

// Directed follow edges: followings[u] = users that u follows.
struct FollowGraph {
  std::map<std::string, std::set<std::string>> followings;
  std::set<std::string> users;  // every id seen on either side of an edge

  const std::set<std::string>* followings_of(const std::string& user) const;
  bool has_user(const std::string& user) const { return users.count(user) > 0; }
};

// Offline shortener expansion: canonical short form -> canonical target.
using RedirectMap = std::map<std::string, std::string>;

struct ExtractStats {
  std::int64_t malformed_urls = 0;
};

// Lowercases, strips scheme / "www." / query / fragment / trailing slashes,
// keeps host+path, then applies the redirect map once. Empty host -> nullopt.
std::optional<Keyword> canonicalize_url(std::string_view raw,
                                        const RedirectMap* redirects = nullptr);

// Hashtags are '#' followed by [A-Za-z0-9_]+ (maximal run); URL tokens begin
// with http:// or https://. Order preserved, duplicates retained. Malformed
// URLs are dropped and counted in *stats.
std::vector<Keyword> extract_keywords(std::string_view text,
                                      const RedirectMap* redirects = nullptr,
                                      ExtractStats* stats = nullptr);

// Dictionary-majority rule: at least half of the plain words (keywords,
// mentions and punctuation stripped) occur in the dictionary. A text with no
// countable words is not English.
bool is_english(std::string_view text,
                const std::unordered_set<std::string>& dictionary);

struct LoadStats {
  std::int64_t tweets_parsed = 0;
  std::int64_t tweets_skipped = 0;
  std::int64_t experts_parsed = 0;
  std::int64_t experts_skipped = 0;
  std::int64_t edges_parsed = 0;
  std::int64_t edges_skipped = 0;
  std::int64_t self_loops_dropped = 0;
  std::int64_t duplicate_edges = 0;
};

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// JSONL, one object per line:
//   {"id":str, "user":str, "ts":int, "text":str, "retweet_of":str|null}
// Lenient mode counts and skips malformed lines; strict mode throws with the
// line number. Duplicate ids are malformed.
std::vector<Tweet> load_tweets_jsonl(const std::filesystem::path& path,
                                     bool strict = false,
                                     LoadStats* stats = nullptr);

// JSONL: {"user":str, "tags":[str,...]}
std::vector<ExpertProfile> load_experts_jsonl(const std::filesystem::path& path,
                                              bool strict = false,
                                              LoadStats* stats = nullptr);

// CSV with header "follower,followee". Self-loops dropped and counted.
FollowGraph load_follow_graph_csv(const std::filesystem::path& path,
                                  bool strict = false,
                                  LoadStats* stats = nullptr);

// CSV "short,target", both sides canonical host+path form.
RedirectMap load_redirect_map_csv(const std::filesystem::path& path);

// One lowercase word per line.
std::unordered_set<std::string> load_dictionary(const std::filesystem::path& path);

struct Corpus {
  std::vector<Tweet> tweets;
  std::vector<ExpertProfile> experts;
  FollowGraph graph;
  LoadStats stats;
};

Corpus load_corpus(const std::filesystem::path& tweets_path,
                   const std::filesystem::path& experts_path,
                   const std::filesystem::path& graph_path,
                   bool strict = false);

}  // namespace infodiet

template <>
struct std::hash<infodiet::Keyword> {
  std::size_t operator()(const infodiet::Keyword& k) const noexcept {
    return std::hash<std::string>()(k.canonical) * 2u +
           static_cast<std::size_t>(k.kind);
  }
};

#endif  // INFODIET_CORPUS_HPP_
