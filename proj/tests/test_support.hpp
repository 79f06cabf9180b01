#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "semsum/corpus.hpp"

namespace testing {

inline const std::filesystem::path kFixtures = SEMSUM_FIXTURES_DIR;
inline const std::filesystem::path kData = SEMSUM_DATA_DIR;

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("semsum_test_" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Unit built from literal sentences, one document, positions 1..n.
inline semsum::TaskUnit unit_of(std::initializer_list<std::string> texts,
                                const std::string& doc = "d") {
  semsum::TaskUnit unit;
  unit.unit_id = "u";
  std::size_t id = 0;
  for (const auto& t : texts) {
    auto s = semsum::make_sentence(t, semsum::default_stoplist());
    s.sent_id = id++;
    s.doc_id = doc;
    s.position_m = id;
    unit.sentences.push_back(std::move(s));
  }
  return unit;
}

}  // namespace testing
