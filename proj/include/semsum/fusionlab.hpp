#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semsum/corpus.hpp"
#include "semsum/features.hpp"
#include "semsum/select.hpp"
#include "semsum/similarity.hpp"

namespace semsum {

enum class Feature { kTfidf, kEmbMean, kBertMean, kTss, kWmd };

std::string to_string(Feature feature);
Feature feature_from_string(std::string_view name);
// tf-idf, bert-mean, wmd and tss: the default set for both fusion schemes.
std::vector<Feature> default_fusion_features();

struct Resources {
  const EmbeddingTable* embeddings = nullptr;         // --embeddings
  const ContextualEmbeddings* contextual = nullptr;  // --contextual
};

struct RunOptions {
  SelectionConfig selection;
  std::size_t k_nn = 7;  // clamped to n - 1
  CosineOptions cosine;
  bool mean_all_tokens = false;
  std::size_t threads = 1;
};

// Per-unit inputs shared by every feature run.
struct PreparedUnit {
  std::vector<TfidfVector> tfidf;
  Partition partition;
  std::vector<double> costs;
  std::vector<std::size_t> byte_lens;
};

PreparedUnit prepare_unit(const TaskUnit& unit, const RunOptions& options);

struct FeatureRun {
  Feature feature = Feature::kTfidf;
  DistanceMatrix distances;
  SimilarityGraph graph;
  SelectionResult selection;
  std::vector<std::size_t> ranking;
  std::vector<std::size_t> degenerate;  // sentences without usable features
  std::vector<std::string> warnings;
};

struct FusionRun {
  std::vector<FeatureRun> features;
  std::optional<SimilarityGraph> fused;  // graph fusion only
  std::vector<double> points;            // late fusion only
  SelectionResult selection;
  std::vector<std::string> warnings;
};

FeatureRun run_feature(const TaskUnit& unit, Feature feature, const Resources& resources,
                       const RunOptions& options);
FeatureRun run_feature(const TaskUnit& unit, const PreparedUnit& prepared, Feature feature,
                       const Resources& resources, const RunOptions& options);

// Empty weights mean uniform.
FusionRun run_graph_fusion(const TaskUnit& unit, std::span<const Feature> features,
                           std::span<const double> weights, const Resources& resources,
                           const RunOptions& options);

FusionRun run_late_fusion(const TaskUnit& unit, std::span<const Feature> features,
                          const Resources& resources, const RunOptions& options);

// Selected ids in original document order.
std::vector<std::size_t> document_order(const SelectionResult& selection);

}  // namespace semsum
