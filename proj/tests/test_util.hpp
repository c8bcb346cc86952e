#ifndef INFODIET_TESTS_TEST_UTIL_HPP_
#define INFODIET_TESTS_TEST_UTIL_HPP_

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "infodiet/corpus.hpp"
#include "infodiet/diet.hpp"
#include "infodiet/taxonomy.hpp"

namespace testutil {

inline std::filesystem::path source_dir() { return INFODIET_SOURCE_DIR; }
inline std::filesystem::path data_dir() { return source_dir() / "data"; }
inline std::filesystem::path fixtures_dir() {
  return source_dir() / "tests" / "fixtures";
}

inline infodiet::Taxonomy bundled_taxonomy() {
  return infodiet::load_taxonomy(data_dir() / "table1.json");
}

// Unique scratch directory, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static std::atomic<int> counter{0};
    dir_ = std::filesystem::temp_directory_path() /
           ("infodiet_" + tag + "_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++));
    std::filesystem::create_directories(dir_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(dir_, ec);
  }
  const std::filesystem::path& path() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline infodiet::DietDistribution random_distribution(std::mt19937& rng) {
  infodiet::DietDistribution d;
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  double sum = 0.0;
  for (auto& v : d.p) {
    v = uniform(rng) + 1e-9;
    sum += v;
  }
  for (auto& v : d.p) v /= sum;
  return d;
}

inline infodiet::DietDistribution indicator(infodiet::Topic t) {
  infodiet::DietDistribution d;
  d.p[static_cast<std::size_t>(t)] = 1.0;
  return d;
}

inline infodiet::DietDistribution uniform_distribution() {
  infodiet::DietDistribution d;
  for (auto& v : d.p) v = 1.0 / infodiet::kTopicCount;
  return d;
}

}  // namespace testutil

#endif  // INFODIET_TESTS_TEST_UTIL_HPP_
