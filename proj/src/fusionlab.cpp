#include "semsum/fusionlab.hpp"

#include <algorithm>
#include <exception>
#include <cstdint>
#include <functional>
#include <memory>
#include <thread>

#include "semsum/error.hpp"

namespace semsum {

std::string to_string(Feature feature) {
  switch (feature) {
    case Feature::kTfidf: return "tfidf";
    case Feature::kEmbMean: return "emb-mean";
    case Feature::kBertMean: return "bert-mean";
    case Feature::kTss: return "tss";
    case Feature::kWmd: return "wmd";
  }
  return "unknown";
}

Feature feature_from_string(std::string_view name) {
  if (name == "tfidf") return Feature::kTfidf;
  if (name == "emb-mean") return Feature::kEmbMean;
  if (name == "bert-mean") return Feature::kBertMean;
  if (name == "tss") return Feature::kTss;
  if (name == "wmd") return Feature::kWmd;
  throw Error("unknown feature: " + std::string(name));
}

std::vector<Feature> default_fusion_features() {
  return {Feature::kTfidf, Feature::kBertMean, Feature::kWmd, Feature::kTss};
}

PreparedUnit prepare_unit(const TaskUnit& unit, const RunOptions& options) {
  PreparedUnit prepared;
  const std::size_t n = unit.size();
  prepared.tfidf = compute_tfidf(unit);
  const std::size_t k = options.selection.k_partitions == 0
                            ? default_partition_count(n)
                            : options.selection.k_partitions;
  prepared.partition = partition_sentences(prepared.tfidf, k, options.selection.seed);
  prepared.costs.reserve(n);
  prepared.byte_lens.reserve(n);
  for (const auto& s : unit.sentences) {
    prepared.costs.push_back(sentence_cost(s.position_m, n));
    prepared.byte_lens.push_back(s.byte_len);
  }
  return prepared;
}

namespace {

const EmbeddingTable& need_embeddings(const Resources& resources, Feature feature) {
  if (resources.embeddings == nullptr) {
    throw Error("feature " + to_string(feature) +
                " needs a static embedding table: supply --embeddings PATH");
  }
  return *resources.embeddings;
}

const ContextualEmbeddings& need_contextual(const Resources& resources, Feature feature) {
  if (resources.contextual == nullptr) {
    throw Error("feature " + to_string(feature) +
                " needs contextual embeddings: supply --contextual PATH");
  }
  return *resources.contextual;
}

std::vector<Vector> contextual_rows(const ContextualEmbeddings& contextual, std::size_t i) {
  if (i < contextual.token_vecs.size() && contextual.token_vecs[i]) {
    return *contextual.token_vecs[i];
  }
  return {};
}

// Distance function plus per-sentence degeneracy for one feature.
struct FeatureSpace {
  std::function<double(std::size_t, std::size_t)> distance;
  std::vector<char> degenerate;
};

FeatureSpace make_space(const TaskUnit& unit, const PreparedUnit& prepared,
                        Feature feature, const Resources& resources,
                        const RunOptions& options) {
  const std::size_t n = unit.size();
  FeatureSpace space;
  space.degenerate.assign(n, 0);
  const CosineOptions cosine = options.cosine;

  switch (feature) {
    case Feature::kTfidf: {
      for (std::size_t i = 0; i < n; ++i) space.degenerate[i] = prepared.tfidf[i].norm == 0.0;
      space.distance = [&tfidf = prepared.tfidf](std::size_t i, std::size_t j) {
        return cosine_distance(tfidf[i], tfidf[j]);
      };
      break;
    }
    case Feature::kEmbMean:
    case Feature::kBertMean: {
      auto means = std::make_shared<std::vector<std::optional<Vector>>>(n);
      if (feature == Feature::kEmbMean) {
        const auto& table = need_embeddings(resources, feature);
        for (std::size_t i = 0; i < n; ++i) {
          (*means)[i] =
              sentence_mean_embedding(unit.sentences[i], table, options.mean_all_tokens);
        }
      } else {
        const auto& contextual = need_contextual(resources, feature);
        for (std::size_t i = 0; i < n; ++i) {
          (*means)[i] = mean_of_rows(contextual_rows(contextual, i));
        }
      }
      for (std::size_t i = 0; i < n; ++i) space.degenerate[i] = !(*means)[i].has_value();
      space.distance = [means, cosine](std::size_t i, std::size_t j) {
        return optional_cosine_distance((*means)[i], (*means)[j], cosine);
      };
      break;
    }
    case Feature::kTss: {
      if (resources.embeddings == nullptr && resources.contextual == nullptr) {
        throw Error(
            "feature tss needs word vectors: supply --embeddings PATH or --contextual PATH");
      }
      auto rows = std::make_shared<std::vector<std::vector<Vector>>>(n);
      for (std::size_t i = 0; i < n; ++i) {
        (*rows)[i] = resources.embeddings != nullptr
                         ? content_token_vectors(unit.sentences[i], *resources.embeddings)
                         : contextual_rows(*resources.contextual, i);
        space.degenerate[i] = (*rows)[i].empty();
      }
      space.distance = [rows, cosine](std::size_t i, std::size_t j) {
        return tss_distance((*rows)[i], (*rows)[j], cosine);
      };
      break;
    }
    case Feature::kWmd: {
      const auto& table = need_embeddings(resources, feature);
      auto nbows = std::make_shared<std::vector<std::optional<Nbow>>>(n);
      for (std::size_t i = 0; i < n; ++i) {
        (*nbows)[i] = nbow_distribution(unit.sentences[i], table);
        space.degenerate[i] = !(*nbows)[i].has_value();
      }
      space.distance = [nbows](std::size_t i, std::size_t j) {
        return wmd_distance((*nbows)[i], (*nbows)[j]).distance;
      };
      break;
    }
  }
  return space;
}

std::vector<std::uint8_t> hold_mask(std::size_t n,
                                    const std::vector<std::vector<std::size_t>>& degenerate) {
  // Held only when no feature has usable data for the sentence.
  std::vector<std::size_t> counts(n, 0);
  for (const auto& list : degenerate) {
    for (std::size_t i : list) ++counts[i];
  }
  std::vector<std::uint8_t> hold(n, 0);
  for (std::size_t i = 0; i < n; ++i) hold[i] = counts[i] == degenerate.size() ? 1 : 0;
  return hold;
}

Candidates candidates_of(const PreparedUnit& prepared, std::span<const std::uint8_t> hold) {
  return {prepared.costs, prepared.byte_lens, hold};
}

std::vector<FeatureRun> run_features(const TaskUnit& unit, const PreparedUnit& prepared,
                                     std::span<const Feature> features,
                                     const Resources& resources, const RunOptions& options) {
  std::vector<FeatureRun> runs(features.size());
  if (options.threads <= 1 || features.size() <= 1) {
    for (std::size_t k = 0; k < features.size(); ++k) {
      runs[k] = run_feature(unit, prepared, features[k], resources, options);
    }
    return runs;
  }
  std::vector<std::exception_ptr> errors(features.size());
  RunOptions inner = options;
  inner.threads = std::max<std::size_t>(1, options.threads / features.size());
  {
    std::vector<std::jthread> pool;
    for (std::size_t k = 0; k < features.size(); ++k) {
      pool.emplace_back([&, k] {
        try {
          runs[k] = run_feature(unit, prepared, features[k], resources, inner);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return runs;
}

void require_features(std::span<const Feature> features) {
  if (features.size() < 2) throw Error("fusion needs at least two features");
}

}  // namespace

FeatureRun run_feature(const TaskUnit& unit, Feature feature, const Resources& resources,
                       const RunOptions& options) {
  return run_feature(unit, prepare_unit(unit, options), feature, resources, options);
}

FeatureRun run_feature(const TaskUnit& unit, const PreparedUnit& prepared, Feature feature,
                       const Resources& resources, const RunOptions& options) {
  const std::size_t n = unit.size();
  FeatureRun run;
  run.feature = feature;
  const auto space = make_space(unit, prepared, feature, resources, options);
  for (std::size_t i = 0; i < n; ++i) {
    if (!space.degenerate[i]) continue;
    run.degenerate.push_back(i);
    run.warnings.push_back(to_string(feature) + ": sentence " + std::to_string(i) +
                           " has no usable features; distance 1 to all others");
  }

  run.distances = pairwise_distances(n, space.distance, options.threads);
  if (n == 1) {
    run.graph = SimilarityGraph::singleton(to_string(feature));
  } else {
    if (options.k_nn == 0) throw Error("k_nn must be at least 1");
    run.graph = build_graph(run.distances, std::min(options.k_nn, n - 1), to_string(feature));
  }

  const auto hold = hold_mask(n, {run.degenerate});
  run.selection =
      select_sentences(run.graph, prepared.partition, candidates_of(prepared, hold),
                       options.selection);
  run.ranking = full_ranking(run.graph, prepared.partition, prepared.costs, run.selection,
                             options.selection.lambda);
  return run;
}

FusionRun run_graph_fusion(const TaskUnit& unit, std::span<const Feature> features,
                           std::span<const double> weights, const Resources& resources,
                           const RunOptions& options) {
  require_features(features);
  std::vector<double> alphas(weights.begin(), weights.end());
  if (alphas.empty()) alphas.assign(features.size(), 1.0);

  const auto prepared = prepare_unit(unit, options);
  FusionRun fusion;
  fusion.features = run_features(unit, prepared, features, resources, options);
  std::vector<SimilarityGraph> graphs;
  std::vector<std::vector<std::size_t>> degenerate;
  for (const auto& run : fusion.features) {
    graphs.push_back(run.graph);
    degenerate.push_back(run.degenerate);
    fusion.warnings.insert(fusion.warnings.end(), run.warnings.begin(), run.warnings.end());
  }
  fusion.fused = fuse_graphs(graphs, alphas);
  const auto hold = hold_mask(unit.size(), degenerate);
  fusion.selection = select_sentences(*fusion.fused, prepared.partition,
                                      candidates_of(prepared, hold), options.selection);
  return fusion;
}

FusionRun run_late_fusion(const TaskUnit& unit, std::span<const Feature> features,
                          const Resources& resources, const RunOptions& options) {
  require_features(features);
  const auto prepared = prepare_unit(unit, options);
  FusionRun fusion;
  fusion.features = run_features(unit, prepared, features, resources, options);
  std::vector<std::vector<std::size_t>> rankings;
  for (const auto& run : fusion.features) {
    rankings.push_back(run.ranking);
    fusion.warnings.insert(fusion.warnings.end(), run.warnings.begin(), run.warnings.end());
  }
  fusion.points = borda_points(rankings);
  fusion.selection = borda_fuse(rankings, candidates_of(prepared, {}), options.selection);
  return fusion;
}

std::vector<std::size_t> document_order(const SelectionResult& selection) {
  std::vector<std::size_t> ids = selection.selected;
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace semsum
