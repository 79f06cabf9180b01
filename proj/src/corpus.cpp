#include "semsum/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include "json.hpp"
#include "semsum/error.hpp"
#include "semsum/utf8.hpp"

namespace semsum {

namespace {

// Same words as data/stopwords_en.txt.
constexpr const char* kEnglishStopwords[] = {
    "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you",
    "you're", "you've", "you'll", "you'd", "your", "yours", "yourself",
    "yourselves", "he", "him", "his", "himself", "she", "she's", "her", "hers",
    "herself", "it", "it's", "its", "itself", "they", "them", "their",
    "theirs", "themselves", "what", "which", "who", "whom", "this", "that",
    "that'll", "these", "those", "am", "is", "are", "was", "were", "be",
    "been", "being", "have", "has", "had", "having", "do", "does", "did",
    "doing", "a", "an", "the", "and", "but", "if", "or", "because", "as",
    "until", "while", "of", "at", "by", "for", "with", "about", "against",
    "between", "into", "through", "during", "before", "after", "above",
    "below", "to", "from", "up", "down", "in", "out", "on", "off", "over",
    "under", "again", "further", "then", "once", "here", "there", "when",
    "where", "why", "how", "all", "any", "both", "each", "few", "more", "most",
    "other", "some", "such", "no", "nor", "not", "only", "own", "same", "so",
    "than", "too", "very", "s", "t", "can", "will", "just", "don", "don't",
    "should", "should've", "now", "d", "ll", "m", "o", "re", "ve", "y", "ain",
    "aren", "aren't", "couldn", "couldn't", "didn", "didn't", "doesn",
    "doesn't", "hadn", "hadn't", "hasn", "hasn't", "haven", "haven't", "isn",
    "isn't", "ma", "mightn", "mightn't", "mustn", "mustn't", "needn",
    "needn't", "shan", "shan't", "shouldn", "shouldn't", "wasn", "wasn't",
    "weren", "weren't", "won", "won't", "wouldn", "wouldn't",
};

// Lowercased abbreviations (without the final period) that never end a
// sentence when followed by a capitalized word.
const std::unordered_set<std::string>& abbreviations() {
  static const std::unordered_set<std::string> kList = {
      "mr", "mrs", "ms", "dr", "prof", "sr", "jr", "st", "mt", "ft",
      "gen", "gov", "sen", "rep", "rev", "hon", "sgt", "capt", "col", "lt",
      "maj", "cmdr", "adm", "pres", "supt", "inc", "ltd", "co", "corp",
      "bros", "vs", "etc", "no", "nos", "vol", "fig", "approx", "dept",
      "est", "jan", "feb", "mar", "apr", "jun", "jul", "aug", "sep", "sept",
      "oct", "nov", "dec", "mon", "tue", "wed", "thu", "fri", "sat", "sun",
      "u.s", "u.k", "u.n", "e.g", "i.e", "a.m", "p.m", "ph.d", "d.c",
  };
  return kList;
}

std::string ascii_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string_view trim(std::string_view text) {
  std::size_t begin = 0;
  while (begin < text.size()) {
    const auto d = utf8::decode(text, begin);
    if (!utf8::is_space(d.code_point)) break;
    begin += d.length;
  }
  std::size_t end = begin;
  for (std::size_t pos = begin; pos < text.size();) {
    const auto d = utf8::decode(text, pos);
    pos += d.length;
    if (!utf8::is_space(d.code_point)) end = pos;
  }
  return text.substr(begin, end - begin);
}

// Strips leading and trailing punctuation code points.
std::string_view strip_punct(std::string_view piece) {
  std::size_t begin = 0;
  while (begin < piece.size()) {
    const auto d = utf8::decode(piece, begin);
    if (!utf8::is_punct(d.code_point)) break;
    begin += d.length;
  }
  std::size_t end = begin;
  for (std::size_t pos = begin; pos < piece.size();) {
    const auto d = utf8::decode(piece, pos);
    pos += d.length;
    if (!utf8::is_punct(d.code_point)) end = pos;
  }
  return piece.substr(begin, end - begin);
}

struct Chunk {
  std::size_t begin;
  std::size_t end;
};

std::vector<Chunk> whitespace_chunks(std::string_view text) {
  constexpr auto kNone = std::string_view::npos;
  std::vector<Chunk> chunks;
  std::size_t pos = 0;
  std::size_t start = kNone;
  while (pos < text.size()) {
    const auto d = utf8::decode(text, pos);
    if (utf8::is_space(d.code_point)) {
      if (start != kNone) chunks.push_back({start, pos});
      start = kNone;
    } else if (start == kNone) {
      start = pos;
    }
    pos += d.length;
  }
  if (start != kNone) chunks.push_back({start, text.size()});
  return chunks;
}

bool is_closer(char c) {
  return c == '"' || c == '\'' || c == ')' || c == ']';
}

bool is_opener(char c) {
  return c == '"' || c == '\'' || c == '(' || c == '[';
}

bool ends_sentence(std::string_view chunk) {
  std::size_t end = chunk.size();
  while (end > 0 && is_closer(chunk[end - 1])) --end;
  if (end == 0) return false;
  const char last = chunk[end - 1];
  if (last == '?' || last == '!') return true;
  if (last != '.') return false;

  std::size_t begin = 0;
  while (begin < end && is_opener(chunk[begin])) ++begin;
  const std::string core = ascii_lower(chunk.substr(begin, end - 1 - begin));
  if (core.size() == 1 && core[0] >= 'a' && core[0] <= 'z') return false;
  return abbreviations().count(core) == 0;
}

bool starts_capitalized(std::string_view chunk) {
  std::size_t pos = 0;
  while (pos < chunk.size() && is_opener(chunk[pos])) ++pos;
  return pos < chunk.size() && chunk[pos] >= 'A' && chunk[pos] <= 'Z';
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::size_t line_of_offset(std::string_view content, std::size_t offset) {
  offset = std::min(offset, content.size());
  return 1 + static_cast<std::size_t>(
                 std::count(content.begin(), content.begin() + offset, '\n'));
}

}  // namespace

std::size_t TaskUnit::document_count() const {
  std::size_t count = 0;
  const std::string* previous = nullptr;
  for (const auto& s : sentences) {
    if (previous == nullptr || *previous != s.doc_id) ++count;
    previous = &s.doc_id;
  }
  return count;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  auto flush = [&](std::size_t begin, std::size_t end) {
    const auto stripped = strip_punct(text.substr(begin, end - begin));
    if (!stripped.empty()) tokens.push_back(ascii_lower(stripped));
  };
  constexpr auto kNone = std::string_view::npos;
  std::size_t start = kNone;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto d = utf8::decode(text, pos);
    if (utf8::is_space(d.code_point) || utf8::is_dash(d.code_point)) {
      if (start != kNone) flush(start, pos);
      start = kNone;
    } else if (start == kNone) {
      start = pos;
    }
    pos += d.length;
  }
  if (start != kNone) flush(start, text.size());
  return tokens;
}

std::vector<std::string> filter_function_words(
    const std::vector<std::string>& tokens, const Stoplist& stoplist) {
  std::vector<std::string> kept;
  kept.reserve(tokens.size());
  std::copy_if(tokens.begin(), tokens.end(), std::back_inserter(kept),
               [&](const std::string& t) { return stoplist.count(t) == 0; });
  return kept;
}

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> sentences;
  const auto chunks = whitespace_chunks(text);
  std::size_t first = 0;
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    const bool last = i + 1 == chunks.size();
    const auto chunk = text.substr(chunks[i].begin, chunks[i].end - chunks[i].begin);
    bool boundary = last;
    if (!last && ends_sentence(chunk)) {
      const auto next =
          text.substr(chunks[i + 1].begin, chunks[i + 1].end - chunks[i + 1].begin);
      boundary = starts_capitalized(next);
    }
    if (boundary) {
      const std::size_t begin = chunks[first].begin;
      sentences.emplace_back(text.substr(begin, chunks[i].end - begin));
      first = i + 1;
    }
  }
  return sentences;
}

const Stoplist& default_stoplist() {
  static const Stoplist kList(std::begin(kEnglishStopwords),
                              std::end(kEnglishStopwords));
  return kList;
}

Stoplist load_stoplist(const std::filesystem::path& path) {
  const std::string content = read_file(path);
  Stoplist list;
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    const auto word = trim(line);
    if (!word.empty()) list.insert(ascii_lower(word));
  }
  return list;
}

Sentence make_sentence(std::string text, const Stoplist& stoplist) {
  Sentence s;
  s.raw_text = std::move(text);
  s.tokens = tokenize(s.raw_text);
  s.content_tokens = filter_function_words(s.tokens, stoplist);
  s.byte_len = s.raw_text.size();
  return s;
}

namespace {

void activate_compressed(Sentence& s, const Stoplist& stoplist) {
  s.compressed_active = true;
  s.tokens = tokenize(*s.compressed_text);
  s.content_tokens = filter_function_words(s.tokens, stoplist);
  s.byte_len = s.compressed_text->size();
}

TaskUnit load_lines(const std::filesystem::path& path, const LoadOptions& options,
                    const Stoplist& stoplist) {
  if (options.use_compressed) {
    throw Error("--use-compressed requires cluster-json input");
  }
  const std::string content = read_file(path);
  TaskUnit unit;
  unit.unit_id = path.stem().string();
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    const auto text = trim(line);
    if (text.empty()) continue;
    std::vector<std::string> pieces;
    if (options.split_sentences) {
      pieces = split_sentences(text);
    } else {
      pieces.emplace_back(text);
    }
    for (auto& piece : pieces) {
      Sentence s = make_sentence(std::move(piece), stoplist);
      s.sent_id = unit.sentences.size();
      s.doc_id = unit.unit_id;
      s.position_m = unit.sentences.size() + 1;
      unit.sentences.push_back(std::move(s));
    }
  }
  if (unit.sentences.empty()) throw Error("empty task unit: " + path.string());
  return unit;
}

}  // namespace

TaskUnit parse_cluster_json(std::string_view content, const LoadOptions& options,
                            const std::string& origin) {
  const Stoplist& stoplist =
      options.stoplist != nullptr ? *options.stoplist : default_stoplist();
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(content);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(origin + ": parse error at line " +
                std::to_string(line_of_offset(content, e.byte)) + ": " + e.what());
  }
  auto schema_error = [&](const std::string& what) {
    return Error(origin + ": invalid cluster-json: " + what);
  };
  if (!root.is_object()) throw schema_error("top level must be an object");

  TaskUnit unit;
  unit.use_compressed = options.use_compressed;
  if (root.contains("cluster_id")) {
    if (!root["cluster_id"].is_string()) throw schema_error("cluster_id must be a string");
    unit.unit_id = root["cluster_id"].get<std::string>();
  } else {
    unit.unit_id = std::filesystem::path(origin).stem().string();
  }
  if (!root.contains("documents") || !root["documents"].is_array()) {
    throw schema_error("missing documents array");
  }
  for (const auto& doc : root["documents"]) {
    if (!doc.is_object() || !doc.contains("doc_id") || !doc["doc_id"].is_string()) {
      throw schema_error("each document needs a string doc_id");
    }
    const auto doc_id = doc["doc_id"].get<std::string>();
    if (!doc.contains("sentences") || !doc["sentences"].is_array()) {
      throw schema_error("document " + doc_id + " has no sentences array");
    }
    const auto& sentences = doc["sentences"];
    const nlohmann::json* compressed = nullptr;
    if (doc.contains("compressed")) {
      compressed = &doc["compressed"];
      if (!compressed->is_array() || compressed->size() != sentences.size()) {
        throw schema_error("document " + doc_id +
                           ": compressed must be an array parallel to sentences");
      }
    } else if (options.use_compressed) {
      throw schema_error("document " + doc_id + " lacks compressed sentences");
    }
    std::size_t position = 0;
    for (std::size_t k = 0; k < sentences.size(); ++k) {
      if (!sentences[k].is_string()) {
        throw schema_error("document " + doc_id + ": sentences must be strings");
      }
      const auto text = trim(sentences[k].get_ref<const std::string&>());
      if (text.empty()) continue;
      Sentence s = make_sentence(std::string(text), stoplist);
      if (compressed != nullptr) {
        if (!(*compressed)[k].is_string()) {
          throw schema_error("document " + doc_id + ": compressed must be strings");
        }
        s.compressed_text =
            std::string(trim((*compressed)[k].get_ref<const std::string&>()));
        if (options.use_compressed) activate_compressed(s, stoplist);
      }
      s.sent_id = unit.sentences.size();
      s.doc_id = doc_id;
      s.position_m = ++position;
      unit.sentences.push_back(std::move(s));
    }
  }
  if (root.contains("references")) {
    if (!root["references"].is_array()) throw schema_error("references must be an array");
    for (const auto& ref : root["references"]) {
      if (!ref.is_string()) throw schema_error("references must be strings");
      unit.references.push_back(ref.get<std::string>());
    }
  }
  if (unit.sentences.empty()) throw Error("empty task unit: " + origin);
  return unit;
}

TaskUnit load_task_unit(const std::filesystem::path& path, InputFormat format,
                        const LoadOptions& options) {
  const Stoplist& stoplist =
      options.stoplist != nullptr ? *options.stoplist : default_stoplist();
  if (format == InputFormat::kLines) return load_lines(path, options, stoplist);
  return parse_cluster_json(read_file(path), options, path.string());
}

InputFormat format_from_string(std::string_view name) {
  if (name == "lines") return InputFormat::kLines;
  if (name == "cluster-json") return InputFormat::kClusterJson;
  throw Error("unknown input format: " + std::string(name));
}

}  // namespace semsum
