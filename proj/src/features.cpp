#include "semsum/features.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "semsum/error.hpp"

namespace semsum {

EmbeddingTable::EmbeddingTable(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw Error("embedding dimension must be at least 1");
}

void EmbeddingTable::set(const std::string& token, Vector vec) {
  if (vec.size() != dim_) {
    throw Error("embedding for '" + token + "' has " + std::to_string(vec.size()) +
                " values, table dimension is " + std::to_string(dim_));
  }
  vectors_.insert_or_assign(token, std::move(vec));
}

const Vector* EmbeddingTable::find(const std::string& token) const {
  const auto it = vectors_.find(token);
  return it == vectors_.end() ? nullptr : &it->second;
}

std::vector<TfidfVector> compute_tfidf(const TaskUnit& unit) {
  const double n = static_cast<double>(unit.size());
  std::map<std::string, std::size_t> df;
  std::vector<std::map<std::string, double>> counts(unit.size());
  for (std::size_t i = 0; i < unit.size(); ++i) {
    for (const auto& token : unit.sentences[i].tokens) counts[i][token] += 1.0;
    for (const auto& [term, count] : counts[i]) ++df[term];
  }

  std::vector<TfidfVector> vectors(unit.size());
  for (std::size_t i = 0; i < unit.size(); ++i) {
    double sq = 0.0;
    for (const auto& [term, tf] : counts[i]) {
      const double idf =
          std::log((1.0 + n) / (1.0 + static_cast<double>(df[term]))) + 1.0;
      const double weight = tf * idf;
      vectors[i].entries.emplace(term, weight);
      sq += weight * weight;
    }
    if (sq > 0.0) {
      const double norm = std::sqrt(sq);
      for (auto& [term, weight] : vectors[i].entries) weight /= norm;
      vectors[i].norm = 1.0;
    }
  }
  return vectors;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    if (pos > start) fields.push_back(line.substr(start, pos - start));
  }
  return fields;
}

template <typename T>
bool parse_number(std::string_view field, T& out) {
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::string location(const std::filesystem::path& path, std::size_t line_no) {
  return path.string() + ":" + std::to_string(line_no);
}

}  // namespace

EmbeddingTable load_embedding_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open embedding table " + path.string());

  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw Error(location(path, 1) + ": missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split_fields(line);
  std::size_t declared = 0;
  std::size_t dim = 0;
  if (header.size() != 2 || !parse_number(header[0], declared) ||
      !parse_number(header[1], dim) || dim == 0) {
    throw Error(location(path, 1) + ": header must be '<vocab_count> <dim>'");
  }

  EmbeddingTable table(dim);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields.size() - 1 != dim) {
      throw Error(location(path, line_no) + ": expected " + std::to_string(dim) +
                  " values, found " + std::to_string(fields.size() - 1));
    }
    Vector vec(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      if (!parse_number(fields[k + 1], vec[k])) {
        throw Error(location(path, line_no) + ": non-numeric value '" +
                    std::string(fields[k + 1]) + "'");
      }
    }
    table.set(std::string(fields[0]), std::move(vec));
    ++rows;
  }
  if (rows != declared) {
    throw Error(path.string() + ": header declares " + std::to_string(declared) +
                " rows, found " + std::to_string(rows));
  }
  return table;
}

void save_embedding_table(const EmbeddingTable& table,
                          const std::filesystem::path& path) {
  std::vector<const std::string*> tokens;
  tokens.reserve(table.size());
  for (const auto& [token, vec] : table.entries()) tokens.push_back(&token);
  std::sort(tokens.begin(), tokens.end(),
            [](const std::string* a, const std::string* b) { return *a < *b; });

  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << table.size() << ' ' << table.dim() << '\n';
  char buf[32];
  for (const auto* token : tokens) {
    out << *token;
    for (double v : *table.find(*token)) {
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out << ' ' << buf;
    }
    out << '\n';
  }
}

ContextualEmbeddings load_contextual_embeddings(const std::filesystem::path& path,
                                                const TaskUnit& unit,
                                                bool allow_missing) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open contextual embeddings " + path.string());

  ContextualEmbeddings out;
  out.token_vecs.resize(unit.size());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json row;
    try {
      row = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(location(path, line_no) + ": parse error: " + e.what());
    }
    if (row.is_object() && row.contains("meta")) continue;
    const auto where = location(path, line_no);
    if (!row.is_object() || !row.contains("doc_id") || !row.contains("sent_id") ||
        !row.contains("tokens") || !row.contains("vectors")) {
      throw Error(where + ": row needs doc_id, sent_id, tokens and vectors");
    }
    std::string doc_id;
    std::size_t sent_id = 0;
    std::vector<std::string> tokens;
    std::vector<Vector> vectors;
    try {
      doc_id = row["doc_id"].get<std::string>();
      sent_id = row["sent_id"].get<std::size_t>();
      tokens = row["tokens"].get<std::vector<std::string>>();
      vectors = row["vectors"].get<std::vector<Vector>>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(where + ": " + e.what());
    }
    if (sent_id >= unit.size() || unit.sentences[sent_id].doc_id != doc_id) {
      throw Error(where + ": no sentence (" + doc_id + ", " +
                  std::to_string(sent_id) + ") in unit " + unit.unit_id);
    }
    const auto& expected = unit.sentences[sent_id].content_tokens;
    if (tokens != expected) {
      std::size_t k = 0;
      while (k < tokens.size() && k < expected.size() && tokens[k] == expected[k]) ++k;
      const std::string got = k < tokens.size() ? tokens[k] : "<end>";
      const std::string want = k < expected.size() ? expected[k] : "<end>";
      throw Error(where + ": token mismatch at index " + std::to_string(k) +
                  ": file has '" + got + "', sentence has '" + want + "'");
    }
    if (vectors.size() != tokens.size()) {
      throw Error(where + ": " + std::to_string(tokens.size()) + " tokens but " +
                  std::to_string(vectors.size()) + " vectors");
    }
    for (const auto& vec : vectors) {
      if (out.dim == 0) out.dim = vec.size();
      if (vec.empty() || vec.size() != out.dim) {
        throw Error(where + ": vector dimension " + std::to_string(vec.size()) +
                    " differs from " + std::to_string(out.dim));
      }
    }
    out.token_vecs[sent_id] = std::move(vectors);
  }

  for (std::size_t i = 0; i < unit.size(); ++i) {
    if (out.token_vecs[i]) continue;
    if (!allow_missing) {
      throw Error(path.string() + ": missing sentence (" + unit.sentences[i].doc_id +
                  ", " + std::to_string(i) + "); pass --allow-missing to continue");
    }
    out.missing.push_back(i);
  }
  return out;
}

std::optional<Vector> mean_of_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return std::nullopt;
  Vector mean(rows.front().size(), 0.0);
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < mean.size(); ++k) mean[k] += row[k];
  }
  const double count = static_cast<double>(rows.size());
  for (double& v : mean) v /= count;
  return mean;
}

std::optional<Vector> sentence_mean_embedding(const Sentence& sentence,
                                              const EmbeddingTable& table,
                                              bool use_all_tokens) {
  // Accumulate per distinct token so the result does not depend on order.
  std::map<std::string, std::size_t> counts;
  for (const auto& t : use_all_tokens ? sentence.tokens : sentence.content_tokens) {
    if (table.find(t) != nullptr) ++counts[t];
  }
  if (counts.empty()) return std::nullopt;
  Vector mean(table.dim(), 0.0);
  std::size_t total = 0;
  for (const auto& [token, count] : counts) {
    const Vector& vec = *table.find(token);
    for (std::size_t k = 0; k < mean.size(); ++k) {
      mean[k] += static_cast<double>(count) * vec[k];
    }
    total += count;
  }
  for (double& v : mean) v /= static_cast<double>(total);
  return mean;
}

std::vector<Vector> content_token_vectors(const Sentence& sentence,
                                          const EmbeddingTable& table) {
  std::vector<Vector> rows;
  for (const auto& t : sentence.content_tokens) {
    if (const Vector* vec = table.find(t)) rows.push_back(*vec);
  }
  return rows;
}

std::optional<Nbow> nbow_distribution(const Sentence& sentence,
                                      const EmbeddingTable& table) {
  std::map<std::string, std::size_t> counts;
  std::size_t total = 0;
  for (const auto& t : sentence.content_tokens) {
    if (table.find(t) == nullptr) continue;
    ++counts[t];
    ++total;
  }
  if (total == 0) return std::nullopt;
  Nbow nbow;
  for (const auto& [token, count] : counts) {
    nbow.tokens.push_back(token);
    nbow.vecs.push_back(*table.find(token));
    nbow.weights.push_back(static_cast<double>(count) / static_cast<double>(total));
  }
  return nbow;
}

}  // namespace semsum
