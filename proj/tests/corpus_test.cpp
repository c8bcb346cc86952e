#include "infodiet/corpus.hpp"

#include <algorithm>
#include <random>

#include <doctest.h>

#include "test_util.hpp"

using namespace infodiet;

TEST_CASE("extract_keywords finds hashtags and urls in order") {
  const auto kws = extract_keywords("Go #NBA! see https://nyti.ms/Abc?x=1");
  REQUIRE(kws.size() == 2);
  CHECK(kws[0] == Keyword{KeywordKind::kHashtag, "nba"});
  CHECK(kws[1] == Keyword{KeywordKind::kUrl, "nyti.ms/abc"});
}

TEST_CASE("extract_keywords on plain text is empty") {
  CHECK(extract_keywords("just chatting today").empty());
  CHECK(extract_keywords("").empty());
  CHECK(extract_keywords("# not a tag").empty());
}

TEST_CASE("duplicate keywords within a tweet are retained") {
  const auto kws = extract_keywords("#Health #health");
  REQUIRE(kws.size() == 2);
  CHECK(kws[0] == Keyword{KeywordKind::kHashtag, "health"});
  CHECK(kws[1] == Keyword{KeywordKind::kHashtag, "health"});
}

TEST_CASE("hashtags inside a url token are not extracted") {
  const auto kws = extract_keywords("https://ex.com/page#section");
  REQUIRE(kws.size() == 1);
  CHECK(kws[0] == Keyword{KeywordKind::kUrl, "ex.com/page"});
}

TEST_CASE("malformed urls are dropped and counted") {
  ExtractStats stats;
  const auto kws = extract_keywords("broken https:// link #ok", nullptr, &stats);
  REQUIRE(kws.size() == 1);
  CHECK(kws[0].canonical == "ok");
  CHECK(stats.malformed_urls == 1);
}

TEST_CASE("canonicalize_url strips scheme, www, query, fragment, slash") {
  SUBCASE("basic") {
    auto kw = canonicalize_url("https://www.NYTimes.com/politics/");
    REQUIRE(kw.has_value());
    CHECK(kw->canonical == "nytimes.com/politics");
  }
  SUBCASE("redirect map applied once") {
    RedirectMap redirects{{"t.co/x", "nytimes.com/a"}, {"nytimes.com/a", "elsewhere.com"}};
    auto kw = canonicalize_url("http://t.co/x", &redirects);
    REQUIRE(kw.has_value());
    CHECK(kw->canonical == "nytimes.com/a");  // no chaining
  }
  SUBCASE("empty host is malformed") {
    CHECK_FALSE(canonicalize_url("https://").has_value());
    CHECK_FALSE(canonicalize_url("http:///path").has_value());
  }
  SUBCASE("host only") {
    auto kw = canonicalize_url("HTTP://Example.COM");
    REQUIRE(kw.has_value());
    CHECK(kw->canonical == "example.com");
  }
}

TEST_CASE("re-canonicalizing extracted keywords is the identity") {
  const char* texts[] = {
      "Go #NBA! see https://nyti.ms/Abc?x=1",
      "#Health #health https://www.Ex.com/A/B/?q=1#frag",
      "mixed #Tag_1 http://HOST.com/Path/",
  };
  for (const char* text : texts) {
    for (const auto& kw : extract_keywords(text)) {
      if (kw.kind == KeywordKind::kUrl) {
        auto again = canonicalize_url("https://" + kw.canonical);
        REQUIRE(again.has_value());
        CHECK(again->canonical == kw.canonical);
      } else {
        const auto again = extract_keywords("#" + kw.canonical);
        REQUIRE(again.size() == 1);
        CHECK(again[0] == kw);
      }
    }
  }
}

TEST_CASE("is_english applies the dictionary-majority rule") {
  const std::unordered_set<std::string> dict = {"the", "cat", "sat", "on", "mat"};
  CHECK(is_english("the cat sat", dict));
  CHECK_FALSE(is_english("xyzzy qwerty zzz", dict));
  // Exactly half counts as English.
  CHECK(is_english("the cat abc def", dict));
  // Keywords, mentions and punctuation are not words.
  CHECK(is_english("the cat! #foo @bar https://x.com", dict));
  CHECK_FALSE(is_english("", dict));
  CHECK_FALSE(is_english("#only #tags", dict));
  CHECK(is_english("The CAT", dict));  // case-insensitive lookup
}

TEST_CASE("is_english is invariant under word reordering") {
  const std::unordered_set<std::string> dict = {"alpha", "beta", "gamma"};
  std::vector<std::string> words = {"alpha", "beta", "junkword", "gamma", "qq"};
  std::mt19937 rng(3);
  std::string joined;
  for (const auto& w : words) joined += w + " ";
  const bool expected = is_english(joined, dict);
  for (int i = 0; i < 50; ++i) {
    std::shuffle(words.begin(), words.end(), rng);
    std::string text;
    for (const auto& w : words) text += w + " ";
    CHECK(is_english(text, dict) == expected);
  }
}

TEST_CASE("load_tweets_jsonl lenient mode skips and counts malformed lines") {
  testutil::TempDir tmp("tweets");
  const auto path = tmp.path() / "tweets.jsonl";
  testutil::write_file(path,
                       R"({"id":"t1","user":"u1","ts":1,"text":"a"})"
                       "\n"
                       "this is not json\n"
                       R"({"id":"t2","user":"u2","ts":2,"text":"b","retweet_of":"t1"})"
                       "\n");
  LoadStats stats;
  const auto tweets = load_tweets_jsonl(path, false, &stats);
  REQUIRE(tweets.size() == 2);
  CHECK(stats.tweets_skipped == 1);
  CHECK(tweets[1].retweet_of == "t1");
  CHECK(tweets[0].retweet_of.empty());
}

TEST_CASE("load_tweets_jsonl strict mode reports the line number") {
  testutil::TempDir tmp("tweets_strict");
  const auto path = tmp.path() / "tweets.jsonl";
  testutil::write_file(path,
                       R"({"id":"t1","user":"u1","ts":1,"text":"a"})"
                       "\nbroken\n");
  CHECK_THROWS_WITH_AS(load_tweets_jsonl(path, true),
                       "line 2: malformed tweet record", CorpusError);
}

TEST_CASE("duplicate tweet ids are rejected") {
  testutil::TempDir tmp("tweets_dup");
  const auto path = tmp.path() / "tweets.jsonl";
  testutil::write_file(path,
                       R"({"id":"t1","user":"u1","ts":1,"text":"a"})"
                       "\n"
                       R"({"id":"t1","user":"u2","ts":2,"text":"b"})"
                       "\n");
  LoadStats stats;
  const auto tweets = load_tweets_jsonl(path, false, &stats);
  CHECK(tweets.size() == 1);
  CHECK(stats.tweets_skipped == 1);
}

TEST_CASE("empty experts file loads as an empty list") {
  testutil::TempDir tmp("experts");
  const auto path = tmp.path() / "experts.jsonl";
  testutil::write_file(path, "");
  LoadStats stats;
  CHECK(load_experts_jsonl(path, false, &stats).empty());
  CHECK(stats.experts_parsed == 0);
}

TEST_CASE("follow graph drops self-loops and duplicate edges") {
  testutil::TempDir tmp("graph");
  const auto path = tmp.path() / "graph.csv";
  testutil::write_file(path,
                       "follower,followee\n"
                       "u1,u2\n"
                       "u1,u1\n"
                       "u1,u2\n"
                       "u2,u3\n");
  LoadStats stats;
  const auto graph = load_follow_graph_csv(path, false, &stats);
  CHECK(stats.self_loops_dropped == 1);
  CHECK(stats.duplicate_edges == 1);
  CHECK(stats.edges_parsed == 2);
  REQUIRE(graph.followings_of("u1") != nullptr);
  CHECK(*graph.followings_of("u1") == std::set<std::string>{"u2"});
  CHECK(graph.has_user("u3"));
  CHECK_FALSE(graph.has_user("u4"));
}

TEST_CASE("follow graph requires the header") {
  testutil::TempDir tmp("graph_hdr");
  const auto path = tmp.path() / "graph.csv";
  testutil::write_file(path, "u1,u2\n");
  CHECK_THROWS_AS(load_follow_graph_csv(path), CorpusError);
}

TEST_CASE("loading a file equals loading it with a trailing empty file") {
  testutil::TempDir tmp("concat");
  const auto a = tmp.path() / "a.jsonl";
  const auto b = tmp.path() / "b.jsonl";
  const std::string content =
      R"({"id":"t1","user":"u1","ts":1,"text":"x"})" "\n";
  testutil::write_file(a, content);
  testutil::write_file(b, content + "\n\n");  // concatenated with blank lines
  const auto ta = load_tweets_jsonl(a);
  const auto tb = load_tweets_jsonl(b);
  REQUIRE(ta.size() == tb.size());
  CHECK(ta[0].id == tb[0].id);
}

TEST_CASE("load_corpus wires the three loaders together") {
  testutil::TempDir tmp("corpus");
  testutil::write_file(tmp.path() / "tweets.jsonl",
                       R"({"id":"t1","user":"u1","ts":1,"text":"#a"})" "\n");
  testutil::write_file(tmp.path() / "experts.jsonl",
                       R"({"user":"e1","tags":["music"]})" "\n");
  testutil::write_file(tmp.path() / "graph.csv", "follower,followee\nu1,u2\n");
  const Corpus corpus = load_corpus(tmp.path() / "tweets.jsonl",
                                    tmp.path() / "experts.jsonl",
                                    tmp.path() / "graph.csv");
  CHECK(corpus.tweets.size() == 1);
  CHECK(corpus.experts.size() == 1);
  CHECK(corpus.graph.users.size() == 2);
  CHECK_THROWS_AS(load_corpus(tmp.path() / "missing.jsonl",
                              tmp.path() / "experts.jsonl",
                              tmp.path() / "graph.csv"),
                  CorpusError);
}
