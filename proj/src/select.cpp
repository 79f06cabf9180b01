#include "semsum/select.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <queue>

#include "semsum/error.hpp"

namespace semsum {

std::string to_string(BudgetMode mode) {
  switch (mode) {
    case BudgetMode::kBytes: return "bytes";
    case BudgetMode::kSentences: return "sentences";
    case BudgetMode::kCost: return "cost";
  }
  return "unknown";
}

void validate(const SelectionConfig& config) {
  if (!(config.budget.limit > 0.0)) throw Error("budget must be positive");
  if (!(config.lambda >= 0.0)) throw Error("lambda must be nonnegative");
}

double sentence_cost(std::size_t position_m, std::size_t n) {
  if (position_m < 1 || position_m > n) {
    throw Error("sentence position " + std::to_string(position_m) +
                " outside [1, " + std::to_string(n) + "]");
  }
  return static_cast<double>(n) / static_cast<double>(n - position_m + 1);
}

namespace {

void check_partition(const SimilarityGraph& graph, const Partition& partition) {
  if (partition.assignment.size() != graph.n) {
    throw Error("partition covers " + std::to_string(partition.assignment.size()) +
                " sentences, graph has " + std::to_string(graph.n));
  }
  for (std::size_t c : partition.assignment) {
    if (c >= partition.k) throw Error("partition cluster id out of range");
  }
}

// (1/n) sum_i w_ij: the diversity credit a sentence contributes to its cluster.
std::vector<double> diversity_credits(const SimilarityGraph& graph) {
  std::vector<double> credit(graph.n, 0.0);
  for (std::size_t j = 0; j < graph.n; ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < graph.n; ++i) sum += graph(i, j);
    credit[j] = sum / static_cast<double>(graph.n);
  }
  return credit;
}

// Incremental objective state. Gains are computed so that in floating point
// they never increase as the selection grows, which keeps lazy evaluation
// exact.
class GainState {
 public:
  GainState(const SimilarityGraph& graph, const Partition& partition, double lambda)
      : graph_(graph),
        partition_(partition),
        lambda_(lambda),
        credit_(diversity_credits(graph)),
        best_(graph.n, 0.0),
        cluster_(partition.k, 0.0) {}

  double gain(std::size_t s) const {
    double cover = 0.0;
    for (std::size_t i = 0; i < graph_.n; ++i) {
      cover += std::max(0.0, graph_(s, i) - best_[i]);
    }
    const double r = credit_[s];
    if (r == 0.0) return cover;
    const double c = cluster_[partition_.assignment[s]];
    // sqrt(c + r) - sqrt(c), rewritten to be monotone in c under rounding.
    return cover + lambda_ * (r / (std::sqrt(c + r) + std::sqrt(c)));
  }

  void add(std::size_t s) {
    for (std::size_t i = 0; i < graph_.n; ++i) best_[i] = std::max(best_[i], graph_(s, i));
    cluster_[partition_.assignment[s]] += credit_[s];
  }

  double value() const {
    double cover = 0.0;
    for (double b : best_) cover += b;
    double div = 0.0;
    for (double c : cluster_) div += std::sqrt(c);
    return cover + lambda_ * div;
  }

 private:
  const SimilarityGraph& graph_;
  const Partition& partition_;
  double lambda_;
  std::vector<double> credit_;
  std::vector<double> best_;
  std::vector<double> cluster_;
};

class BudgetTracker {
 public:
  BudgetTracker(const Budget& budget, const Candidates& candidates)
      : budget_(budget), candidates_(candidates) {}

  double amount(std::size_t s) const {
    switch (budget_.mode) {
      case BudgetMode::kBytes: return static_cast<double>(candidates_.byte_lens[s]);
      case BudgetMode::kSentences: return 1.0;
      case BudgetMode::kCost: return candidates_.costs[s];
    }
    return 0.0;
  }

  bool fits(std::size_t s) const { return used_ + amount(s) <= budget_.limit; }
  void take(std::size_t s) { used_ += amount(s); }
  double used() const { return used_; }

 private:
  Budget budget_;
  const Candidates& candidates_;
  double used_ = 0.0;
};

void check_candidates(const SimilarityGraph& graph, const Candidates& candidates,
                      const Budget& budget) {
  if (candidates.costs.size() != graph.n) throw Error("costs do not cover the graph");
  for (double c : candidates.costs) {
    if (!(c > 0.0)) throw Error("sentence costs must be positive");
  }
  if (budget.mode == BudgetMode::kBytes && candidates.byte_lens.size() != graph.n) {
    throw Error("byte budget needs a byte length per sentence");
  }
  if (!candidates.hold_first.empty() && candidates.hold_first.size() != graph.n) {
    throw Error("hold_first does not cover the graph");
  }
}

// Hold flags only apply when at least one sentence is unflagged.
bool holding_applies(const Candidates& candidates) {
  return std::any_of(candidates.hold_first.begin(), candidates.hold_first.end(),
                     [](std::uint8_t h) { return h != 0; }) &&
         std::any_of(candidates.hold_first.begin(), candidates.hold_first.end(),
                     [](std::uint8_t h) { return h == 0; });
}

void apply_singleton_check(SelectionResult& result, const SimilarityGraph& graph,
                           const Partition& partition, const Candidates& candidates,
                           const SelectionConfig& config) {
  const double greedy_value = result.trace.empty() ? 0.0 : result.trace.back().value;
  std::size_t best = graph.n;
  double best_value = greedy_value;
  for (std::size_t s = 0; s < graph.n; ++s) {
    BudgetTracker budget(config.budget, candidates);
    if (!budget.fits(s)) continue;
    GainState state(graph, partition, config.lambda);
    state.add(s);
    if (state.value() > best_value) {
      best_value = state.value();
      best = s;
    }
  }
  if (best == graph.n) return;
  GainState state(graph, partition, config.lambda);
  const double scaled = state.gain(best) / candidates.costs[best];
  state.add(best);
  BudgetTracker budget(config.budget, candidates);
  budget.take(best);
  result.selected = {best};
  result.trace = {{best, scaled, state.value()}};
  result.budget_used = budget.used();
}

}  // namespace

double coverage(std::span<const std::size_t> selected, const SimilarityGraph& graph) {
  if (selected.empty()) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < graph.n; ++i) {
    double best = 0.0;
    for (std::size_t j : selected) best = std::max(best, graph(i, j));
    total += best;
  }
  return total;
}

double diversity(std::span<const std::size_t> selected, const SimilarityGraph& graph,
                 const Partition& partition) {
  check_partition(graph, partition);
  const auto credit = diversity_credits(graph);
  std::vector<double> cluster(partition.k, 0.0);
  for (std::size_t j : selected) cluster[partition.assignment[j]] += credit[j];
  double total = 0.0;
  for (double c : cluster) total += std::sqrt(c);
  return total;
}

double objective(std::span<const std::size_t> selected, const SimilarityGraph& graph,
                 const Partition& partition, double lambda) {
  return coverage(selected, graph) + lambda * diversity(selected, graph, partition);
}

std::size_t default_partition_count(std::size_t n) {
  return std::min(n, std::max<std::size_t>(2, n / 5));
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double squared_distance(const Vector& a, const Vector& b) {
  double sq = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double diff = a[k] - b[k];
    sq += diff * diff;
  }
  return sq;
}

}  // namespace

Partition partition_sentences(std::span<const TfidfVector> features, std::size_t k,
                              std::uint64_t seed) {
  const std::size_t n = features.size();
  if (k == 0 || k > n) {
    throw Error("cannot split " + std::to_string(n) + " sentences into " +
                std::to_string(k) + " partitions");
  }
  Partition partition;
  partition.k = k;
  partition.assignment.assign(n, 0);
  if (k == 1) return partition;

  std::map<std::string, std::size_t> vocab;
  for (const auto& f : features) {
    for (const auto& [term, weight] : f.entries) vocab.emplace(term, 0);
  }
  std::size_t next_id = 0;
  for (auto& [term, id] : vocab) id = next_id++;
  std::vector<Vector> points(n, Vector(vocab.size(), 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [term, weight] : features[i].entries) points[i][vocab[term]] = weight;
  }

  // Farthest-point seeding from a seed-chosen first point.
  std::vector<Vector> centers;
  std::vector<char> is_center(n, 0);
  const std::size_t first = static_cast<std::size_t>(splitmix64(seed) % n);
  centers.push_back(points[first]);
  is_center[first] = 1;
  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
  while (centers.size() < k) {
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (is_center[i]) continue;
      nearest[i] = std::min(nearest[i], squared_distance(points[i], centers.back()));
      if (pick == n || nearest[i] > nearest[pick]) pick = i;
    }
    centers.push_back(points[pick]);
    is_center[pick] = 1;
  }

  auto& assignment = partition.assignment;
  std::vector<std::size_t> previous;
  constexpr int kMaxIterations = 100;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t best = 0;
      double best_sq = squared_distance(points[i], centers[0]);
      for (std::size_t c = 1; c < k; ++c) {
        const double sq = squared_distance(points[i], centers[c]);
        if (sq < best_sq) {
          best_sq = sq;
          best = c;
        }
      }
      assignment[i] = best;
    }

    // Repair empty clusters by moving the farthest member out of the largest.
    for (;;) {
      std::vector<std::size_t> sizes(k, 0);
      for (std::size_t c : assignment) ++sizes[c];
      const auto empty = std::find(sizes.begin(), sizes.end(), 0);
      if (empty == sizes.end()) break;
      const auto largest = static_cast<std::size_t>(
          std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
      std::size_t mover = n;
      double mover_sq = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (assignment[i] != largest) continue;
        const double sq = squared_distance(points[i], centers[largest]);
        if (sq >= mover_sq) {
          mover_sq = sq;
          mover = i;
        }
      }
      const auto target = static_cast<std::size_t>(empty - sizes.begin());
      assignment[mover] = target;
      centers[target] = points[mover];
    }

    if (assignment == previous) break;
    previous = assignment;

    for (std::size_t c = 0; c < k; ++c) std::fill(centers[c].begin(), centers[c].end(), 0.0);
    std::vector<std::size_t> sizes(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      ++sizes[assignment[i]];
      auto& center = centers[assignment[i]];
      for (std::size_t d = 0; d < center.size(); ++d) center[d] += points[i][d];
    }
    for (std::size_t c = 0; c < k; ++c) {
      for (double& v : centers[c]) v /= static_cast<double>(sizes[c]);
    }
  }
  return partition;
}

SelectionResult greedy_select(const SimilarityGraph& graph, const Partition& partition,
                              const Candidates& candidates, const SelectionConfig& config,
                              SelectionStats* stats) {
  validate(config);
  check_partition(graph, partition);
  check_candidates(graph, candidates, config.budget);

  SelectionResult result;
  result.config_echo = config;
  GainState state(graph, partition, config.lambda);
  BudgetTracker budget(config.budget, candidates);
  const bool holding = holding_applies(candidates);
  std::vector<char> remaining(graph.n, 1);

  for (;;) {
    std::size_t best = graph.n;
    double best_gain = 0.0;
    for (std::size_t s = 0; s < graph.n; ++s) {
      if (!remaining[s]) continue;
      if (!budget.fits(s)) {
        remaining[s] = 0;  // budget use only grows
        continue;
      }
      if (holding && result.selected.empty() && candidates.hold_first[s]) continue;
      const double scaled = state.gain(s) / candidates.costs[s];
      if (stats != nullptr) ++stats->gain_evaluations;
      if (best == graph.n || scaled > best_gain) {
        best = s;
        best_gain = scaled;
      }
    }
    if (best == graph.n || best_gain <= 0.0) break;
    state.add(best);
    budget.take(best);
    remaining[best] = 0;
    result.selected.push_back(best);
    result.trace.push_back({best, best_gain, state.value()});
  }
  result.budget_used = budget.used();
  if (config.singleton_check) {
    apply_singleton_check(result, graph, partition, candidates, config);
  }
  return result;
}

namespace {

struct HeapEntry {
  double key;
  std::size_t id;
  std::size_t round;
};

// Max-heap on key; equal keys pop the lower id first.
struct HeapOrder {
  bool operator()(const HeapEntry& a, const HeapEntry& b) const {
    if (a.key != b.key) return a.key < b.key;
    return a.id > b.id;
  }
};

}  // namespace

SelectionResult lazy_greedy_select(const SimilarityGraph& graph,
                                   const Partition& partition,
                                   const Candidates& candidates,
                                   const SelectionConfig& config, SelectionStats* stats) {
  validate(config);
  check_partition(graph, partition);
  check_candidates(graph, candidates, config.budget);

  SelectionResult result;
  result.config_echo = config;
  GainState state(graph, partition, config.lambda);
  BudgetTracker budget(config.budget, candidates);
  const bool holding = holding_applies(candidates);

  auto evaluate = [&](std::size_t s) {
    if (stats != nullptr) ++stats->gain_evaluations;
    return state.gain(s) / candidates.costs[s];
  };

  std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapOrder> heap;
  std::vector<std::size_t> held;
  for (std::size_t s = 0; s < graph.n; ++s) {
    if (!budget.fits(s)) continue;
    if (holding && candidates.hold_first[s]) {
      held.push_back(s);
      continue;
    }
    heap.push({evaluate(s), s, 0});
  }

  std::size_t round = 0;
  while (!heap.empty()) {
    HeapEntry top = heap.top();
    heap.pop();
    if (!budget.fits(top.id)) continue;
    if (top.round != round) {
      top.key = evaluate(top.id);
      top.round = round;
      if (!heap.empty()) {
        const HeapEntry& next = heap.top();
        const bool wins = top.key > next.key || (top.key == next.key && top.id < next.id);
        if (!wins) {
          heap.push(top);
          continue;
        }
      }
    }
    if (top.key <= 0.0) break;
    state.add(top.id);
    budget.take(top.id);
    result.selected.push_back(top.id);
    result.trace.push_back({top.id, top.key, state.value()});
    ++round;
    for (std::size_t s : held) {
      if (budget.fits(s)) heap.push({evaluate(s), s, round});
    }
    held.clear();
  }
  result.budget_used = budget.used();
  if (config.singleton_check) {
    apply_singleton_check(result, graph, partition, candidates, config);
  }
  return result;
}

SelectionResult select_sentences(const SimilarityGraph& graph, const Partition& partition,
                                 const Candidates& candidates,
                                 const SelectionConfig& config, SelectionStats* stats) {
  return config.lazy ? lazy_greedy_select(graph, partition, candidates, config, stats)
                     : greedy_select(graph, partition, candidates, config, stats);
}

std::vector<std::size_t> full_ranking(const SimilarityGraph& graph,
                                      const Partition& partition,
                                      std::span<const double> costs,
                                      const SelectionResult& result, double lambda) {
  check_partition(graph, partition);
  GainState state(graph, partition, lambda);
  std::vector<char> chosen(graph.n, 0);
  for (std::size_t s : result.selected) {
    state.add(s);
    chosen[s] = 1;
  }
  std::vector<std::pair<double, std::size_t>> rest;
  for (std::size_t s = 0; s < graph.n; ++s) {
    if (!chosen[s]) rest.emplace_back(state.gain(s) / costs[s], s);
  }
  std::sort(rest.begin(), rest.end(), [](const auto& a, const auto& b) {
    return a.first > b.first || (a.first == b.first && a.second < b.second);
  });
  std::vector<std::size_t> ranking(result.selected);
  for (const auto& [gain, s] : rest) ranking.push_back(s);
  return ranking;
}

std::vector<double> borda_points(std::span<const std::vector<std::size_t>> rankings) {
  if (rankings.empty()) throw Error("borda: no rankings");
  const std::size_t n = rankings.front().size();
  std::vector<double> points(n, 0.0);
  for (const auto& ranking : rankings) {
    if (ranking.size() != n) throw Error("borda: rankings cover different sentence sets");
    std::vector<char> seen(n, 0);
    for (std::size_t pos = 0; pos < n; ++pos) {
      const std::size_t s = ranking[pos];
      if (s >= n || seen[s]) throw Error("borda: ranking is not a permutation of V");
      seen[s] = 1;
      points[s] += static_cast<double>(n - 1 - pos);
    }
  }
  return points;
}

SelectionResult borda_fuse(std::span<const std::vector<std::size_t>> rankings,
                           const Candidates& candidates, const SelectionConfig& config) {
  validate(config);
  const auto points = borda_points(rankings);
  const std::size_t n = points.size();
  if (candidates.costs.size() != n) throw Error("borda: costs do not cover V");
  if (config.budget.mode == BudgetMode::kBytes && candidates.byte_lens.size() != n) {
    throw Error("borda: byte budget needs a byte length per sentence");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return points[a] > points[b]; });

  SelectionResult result;
  result.config_echo = config;
  BudgetTracker budget(config.budget, candidates);
  double total = 0.0;
  for (std::size_t s : order) {
    if (!budget.fits(s)) continue;
    budget.take(s);
    total += points[s];
    result.selected.push_back(s);
    result.trace.push_back({s, points[s], total});
  }
  result.budget_used = budget.used();
  return result;
}

}  // namespace semsum
