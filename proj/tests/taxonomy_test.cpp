#include "infodiet/taxonomy.hpp"

#include <random>

#include <doctest.h>

#include "test_util.hpp"

using namespace infodiet;

TEST_CASE("topic names are a bijection in table order") {
  CHECK(topic_name(Topic::kArtsCrafts) == "arts-crafts");
  CHECK(topic_name(Topic::kTechnology) == "technology");
  for (Topic t : all_topics()) {
    auto back = topic_from_name(topic_name(t));
    REQUIRE(back.has_value());
    CHECK(*back == t);
  }
  CHECK_FALSE(topic_from_name("sport").has_value());
}

TEST_CASE("normalize_term applies the canonical form") {
  CHECK(normalize_term("Real Estate") == "real-estate");
  CHECK(normalize_term("MOBILE_DEVICES") == "mobile-devices");
  CHECK(normalize_term("'music'") == "music");
  CHECK(normalize_term("  law ") == "law");
  CHECK(normalize_term("LGBT") == "lgbt");
  CHECK(normalize_term("#politics") == "politics");
  CHECK(normalize_term("") == "");
  CHECK(normalize_term("...") == "");
}

TEST_CASE("normalize_term is idempotent") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(0, 12);
  const std::string alphabet = "aBz9 _-#.'";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int i = 0; i < 500; ++i) {
    std::string s;
    const int n = len(rng);
    for (int j = 0; j < n; ++j) s.push_back(alphabet[pick(rng)]);
    const std::string once = normalize_term(s);
    CHECK(normalize_term(once) == once);
  }
}

TEST_CASE("bundled taxonomy loads with the printed terms") {
  const Taxonomy tax = testutil::bundled_taxonomy();
  const auto& ent = tax.terms[static_cast<std::size_t>(Topic::kEntertainment)];
  for (const char* term : {"music", "movies", "tv", "radio", "comedy", "adult"}) {
    CHECK(ent.count(term) == 1);
  }
  // The category name itself counts as a term.
  CHECK(ent.count("entertainment") == 1);
  CHECK(tax.terms[static_cast<std::size_t>(Topic::kSociety)].count("lgbt") == 1);
}

TEST_CASE("bundled taxonomy maps every term to exactly one topic") {
  const Taxonomy tax = testutil::bundled_taxonomy();
  for (const auto& [term, topics] : tax.term_topics) {
    CHECK(topics.size() == 1);
  }
}

TEST_CASE("taxonomy load errors name the offending topic") {
  SUBCASE("missing topic") {
    std::string json = testutil::read_file(testutil::data_dir() / "table1.json");
    const auto pos = json.find("\"science\"");
    REQUIRE(pos != std::string::npos);
    const auto end = json.find("],", pos);
    json.erase(pos, end + 2 - pos);
    CHECK_THROWS_WITH_AS(parse_taxonomy(json), "missing topic: science",
                         TaxonomyError);
  }
  SUBCASE("duplicate topic") {
    CHECK_THROWS_WITH_AS(
        parse_taxonomy(R"({"sports": ["football"], "sports": ["cricket"]})"),
        "duplicate topic: sports", TaxonomyError);
  }
  SUBCASE("empty term list") {
    std::string json = testutil::read_file(testutil::data_dir() / "table1.json");
    const auto pos = json.find("\"paranormal\": [");
    REQUIRE(pos != std::string::npos);
    const auto open = json.find('[', pos);
    const auto close = json.find(']', open);
    json = json.substr(0, open + 1) + json.substr(close);
    CHECK_THROWS_WITH_AS(parse_taxonomy(json), "empty term list: paranormal",
                         TaxonomyError);
  }
  SUBCASE("unknown topic") {
    CHECK_THROWS_AS(parse_taxonomy(R"({"astronomy": ["stars"]})"), TaxonomyError);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(load_taxonomy("/nonexistent/table1.json"), TaxonomyError);
  }
}

TEST_CASE("terms from the source are stored normalized") {
  testutil::TempDir tmp("tax");
  std::string json = testutil::read_file(testutil::data_dir() / "table1.json");
  const auto pos = json.find("\"retail\"");
  REQUIRE(pos != std::string::npos);
  json.replace(pos, 8, "\"Real Estate\"");
  const Taxonomy tax = parse_taxonomy(json);
  CHECK(tax.has_term(Topic::kBusinessFinance, "real-estate"));
  CHECK_FALSE(tax.has_term(Topic::kBusinessFinance, "Real Estate"));
}

TEST_CASE("map_expert_tags matches terms and canonical names") {
  const Taxonomy tax = testutil::bundled_taxonomy();

  SUBCASE("mixed matched and unmatched tags") {
    std::size_t unmatched = 0;
    const auto topics = tax.map_expert_tags(
        {"music", "entertainment", "singers", "celebs", "artists"}, &unmatched);
    CHECK(topics == std::set<Topic>{Topic::kEntertainment});
    CHECK(unmatched == 3);
  }
  SUBCASE("empty input") {
    CHECK(tax.map_expert_tags({}).empty());
  }
  SUBCASE("tags spanning two topics") {
    const auto topics = tax.map_expert_tags({"politics", "physics"});
    CHECK(topics == std::set<Topic>{Topic::kPoliticsLaw, Topic::kScience});
  }
  SUBCASE("tags are normalized before matching") {
    const auto topics = tax.map_expert_tags({"Real Estate"});
    CHECK(topics == std::set<Topic>{Topic::kBusinessFinance});
  }
}

TEST_CASE("map_expert_tags is monotone under added tags") {
  const Taxonomy tax = testutil::bundled_taxonomy();
  std::vector<std::string> pool = {"music",   "politics", "physics", "food",
                                   "unknown", "climate",  "jobs",    "zzz"};
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::shuffle(pool.begin(), pool.end(), rng);
    std::uniform_int_distribution<std::size_t> cut(0, pool.size() - 1);
    const std::size_t n = cut(rng);
    std::vector<std::string> base(pool.begin(), pool.begin() + n);
    std::vector<std::string> extended = base;
    extended.push_back(pool[n]);
    const auto before = tax.map_expert_tags(base);
    const auto after = tax.map_expert_tags(extended);
    CHECK(std::includes(after.begin(), after.end(), before.begin(), before.end()));
  }
}
