#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "semsum/corpus.hpp"

namespace semsum {

using Vector = std::vector<double>;

// Sparse L2-normalized tf-idf descriptor. `norm` is 1 after normalization,
// or 0 for a sentence without tokens.
struct TfidfVector {
  std::map<std::string, double> entries;
  double norm = 0.0;
};

class EmbeddingTable {
 public:
  explicit EmbeddingTable(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return vectors_.size(); }

  // Replaces an existing entry.
  void set(const std::string& token, Vector vec);
  const Vector* find(const std::string& token) const;
  const std::unordered_map<std::string, Vector>& entries() const { return vectors_; }

 private:
  std::size_t dim_;
  std::unordered_map<std::string, Vector> vectors_;
};

// Normalized bag-of-words over in-vocabulary content tokens, one row per
// distinct token in lexicographic token order.
struct Nbow {
  std::vector<std::string> tokens;
  std::vector<Vector> vecs;
  std::vector<double> weights;
};

struct SentenceFeatures {
  std::size_t sent_id = 0;
  TfidfVector tfidf;
  std::optional<Vector> mean_vec;
  std::optional<std::vector<Vector>> token_vecs;
  std::optional<std::vector<double>> token_weights;
};

// Per-sentence contextual token matrices indexed by sent_id; nullopt marks a
// sentence missing from the file (only possible with allow_missing).
struct ContextualEmbeddings {
  std::size_t dim = 0;
  std::vector<std::optional<std::vector<Vector>>> token_vecs;
  std::vector<std::size_t> missing;
};

std::vector<TfidfVector> compute_tfidf(const TaskUnit& unit);

EmbeddingTable load_embedding_table(const std::filesystem::path& path);
void save_embedding_table(const EmbeddingTable& table,
                          const std::filesystem::path& path);

ContextualEmbeddings load_contextual_embeddings(const std::filesystem::path& path,
                                                const TaskUnit& unit,
                                                bool allow_missing = false);

// Mean over content tokens (all tokens when use_all_tokens) found in the
// table; nullopt when none is in vocabulary.
std::optional<Vector> sentence_mean_embedding(const Sentence& sentence,
                                              const EmbeddingTable& table,
                                              bool use_all_tokens = false);

// Mean of the rows of a token matrix; nullopt for an empty matrix.
std::optional<Vector> mean_of_rows(const std::vector<Vector>& rows);

// Embedded content tokens in sentence order, repeats kept. OOV tokens skipped.
std::vector<Vector> content_token_vectors(const Sentence& sentence,
                                          const EmbeddingTable& table);

// nullopt signals the empty-distribution condition (every token OOV).
std::optional<Nbow> nbow_distribution(const Sentence& sentence,
                                      const EmbeddingTable& table);

}  // namespace semsum
