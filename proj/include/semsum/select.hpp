#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "semsum/features.hpp"
#include "semsum/similarity.hpp"

namespace semsum {

enum class BudgetMode { kBytes, kSentences, kCost };

struct Budget {
  BudgetMode mode = BudgetMode::kSentences;
  double limit = 3.0;
};

std::string to_string(BudgetMode mode);

struct SelectionConfig {
  double lambda = 6.0;
  Budget budget;
  std::size_t k_partitions = 0;  // 0: max(2, floor(0.2 n)), capped at n
  std::uint64_t seed = 0;
  bool lazy = true;
  bool singleton_check = false;
};

void validate(const SelectionConfig& config);

struct Partition {
  std::vector<std::size_t> assignment;
  std::size_t k = 0;
};

struct TraceStep {
  std::size_t sent_id;
  double gain;   // cost-scaled marginal gain (Borda: points)
  double value;  // objective after the step (Borda: accumulated points)

  bool operator==(const TraceStep&) const = default;
};

struct SelectionResult {
  std::vector<std::size_t> selected;  // selection order
  std::vector<TraceStep> trace;
  double budget_used = 0.0;
  SelectionConfig config_echo;
};

// Per-sentence inputs to the selector. `hold_first` marks sentences that may
// not be picked while the selection is empty (no usable features), unless
// every sentence is marked.
struct Candidates {
  std::span<const double> costs;
  std::span<const std::size_t> byte_lens;
  std::span<const std::uint8_t> hold_first;
};

struct SelectionStats {
  std::size_t gain_evaluations = 0;
};

double sentence_cost(std::size_t position_m, std::size_t n);

double coverage(std::span<const std::size_t> selected, const SimilarityGraph& graph);
double diversity(std::span<const std::size_t> selected, const SimilarityGraph& graph,
                 const Partition& partition);
double objective(std::span<const std::size_t> selected, const SimilarityGraph& graph,
                 const Partition& partition, double lambda);

std::size_t default_partition_count(std::size_t n);

// Spherical-style k-means over tf-idf vectors with farthest-point seeding.
Partition partition_sentences(std::span<const TfidfVector> features, std::size_t k,
                              std::uint64_t seed);

SelectionResult greedy_select(const SimilarityGraph& graph, const Partition& partition,
                              const Candidates& candidates, const SelectionConfig& config,
                              SelectionStats* stats = nullptr);
SelectionResult lazy_greedy_select(const SimilarityGraph& graph,
                                   const Partition& partition,
                                   const Candidates& candidates,
                                   const SelectionConfig& config,
                                   SelectionStats* stats = nullptr);
// Dispatches on config.lazy.
SelectionResult select_sentences(const SimilarityGraph& graph, const Partition& partition,
                                 const Candidates& candidates,
                                 const SelectionConfig& config,
                                 SelectionStats* stats = nullptr);

// Total order over all sentences: the selection order followed by the
// unselected sentences by descending cost-scaled gain against the final
// selection (ties by lower id).
std::vector<std::size_t> full_ranking(const SimilarityGraph& graph,
                                      const Partition& partition,
                                      std::span<const double> costs,
                                      const SelectionResult& result, double lambda);

std::vector<double> borda_points(std::span<const std::vector<std::size_t>> rankings);

SelectionResult borda_fuse(std::span<const std::vector<std::size_t>> rankings,
                           const Candidates& candidates, const SelectionConfig& config);

}  // namespace semsum
