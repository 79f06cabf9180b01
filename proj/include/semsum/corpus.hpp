#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace semsum {

using Stoplist = std::unordered_set<std::string>;

// One sentence of a task unit. When the unit runs on compressed variants,
// tokens, content_tokens and byte_len describe compressed_text, which is then
// also the text emitted into summaries.
struct Sentence {
  std::size_t sent_id = 0;
  std::string doc_id;
  std::size_t position_m = 1;
  std::string raw_text;
  std::vector<std::string> tokens;
  std::vector<std::string> content_tokens;
  std::size_t byte_len = 0;
  std::optional<std::string> compressed_text;
  bool compressed_active = false;

  const std::string& emitted_text() const {
    return compressed_active ? *compressed_text : raw_text;
  }
};

struct TaskUnit {
  std::string unit_id;
  std::vector<Sentence> sentences;
  std::vector<std::string> references;
  bool use_compressed = false;

  std::size_t size() const { return sentences.size(); }
  std::size_t document_count() const;
};

enum class InputFormat { kLines, kClusterJson };

struct LoadOptions {
  const Stoplist* stoplist = nullptr;  // null: built-in English list
  bool use_compressed = false;
  bool split_sentences = false;  // lines format: treat each line as a paragraph
};

std::vector<std::string> tokenize(std::string_view text);

std::vector<std::string> filter_function_words(
    const std::vector<std::string>& tokens, const Stoplist& stoplist);

std::vector<std::string> split_sentences(std::string_view text);

const Stoplist& default_stoplist();
Stoplist load_stoplist(const std::filesystem::path& path);

// Builds a sentence from text; sent_id/doc_id/position are set by the caller.
Sentence make_sentence(std::string text, const Stoplist& stoplist);

TaskUnit load_task_unit(const std::filesystem::path& path, InputFormat format,
                        const LoadOptions& options = {});

// Parses cluster-json content already in memory. `origin` is used in errors.
TaskUnit parse_cluster_json(std::string_view content, const LoadOptions& options,
                            const std::string& origin = "<memory>");

InputFormat format_from_string(std::string_view name);

}  // namespace semsum
