#ifndef INFODIET_TAXONOMY_HPP_
#define INFODIET_TAXONOMY_HPP_

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace infodiet {

// The 18 fixed topic categories, in canonical (alphabetical) order.
// The ordering doubles as the deterministic tie-break rule everywhere
// an argmax can tie.
enum class Topic : int {
  kArtsCrafts = 0,
  kAutomotive,
  kBusinessFinance,
  kCareer,
  kEducationBooks,
  kEntertainment,
  kEnvironment,
  kFashionStyle,
  kFoodDrink,
  kHealthFitness,
  kHobbies,
  kParanormal,
  kPoliticsLaw,
  kReligion,
  kScience,
  kSociety,
  kSports,
  kTechnology,
};

inline constexpr int kTopicCount = 18;

std::string_view topic_name(Topic t);
std::optional<Topic> topic_from_name(std::string_view name);
const std::array<Topic, kTopicCount>& all_topics();

// Canonical term form: ASCII lowercase, space/underscore runs collapsed to a
// single hyphen, surrounding punctuation stripped. Idempotent.
std::string normalize_term(std::string_view raw);

// Fixed topic set with the related-terms table. Immutable after load; safe to
// share across threads.
struct Taxonomy {
  // terms[t] always contains the canonical topic name itself.
  std::array<std::set<std::string>, kTopicCount> terms;
  // Reverse index over normalized terms. A term may map to several topics
  // only if the source file says so; the bundled table is disjoint.
  std::map<std::string, std::set<Topic>, std::less<>> term_topics;

  bool has_term(Topic t, std::string_view normalized) const;

  // Union of the topics matched by each tag (exact match on normalized
  // strings). Unmatched tags are ignored; their count lands in *unmatched.
  std::set<Topic> map_expert_tags(const std::vector<std::string>& tags,
                                  std::size_t* unmatched = nullptr) const;
};

// Parses the taxonomy JSON ({"<topic>": ["term", ...], ...}). Throws
// TaxonomyError on a missing/duplicate/unknown topic or an empty term list.
Taxonomy load_taxonomy(const std::filesystem::path& path);
Taxonomy parse_taxonomy(const std::string& json_text);

class TaxonomyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace infodiet

#endif  // INFODIET_TAXONOMY_HPP_
