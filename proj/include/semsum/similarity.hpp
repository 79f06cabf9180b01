#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semsum/features.hpp"

namespace semsum {

// Symmetric n x n matrix with zero diagonal, row-major.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(std::size_t n = 0) : n_(n), d_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  // Writes both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, double value);

 private:
  std::size_t n_;
  std::vector<double> d_;
};

struct SimilarityGraph {
  std::size_t n = 0;
  std::vector<double> w;  // row-major, symmetric, unit diagonal
  std::string meta;
  std::size_t k_nn = 0;

  double operator()(std::size_t i, std::size_t j) const { return w[i * n + j]; }
  double& at(std::size_t i, std::size_t j) { return w[i * n + j]; }

  // Single-vertex graph; build_graph needs at least two sentences.
  static SimilarityGraph singleton(std::string meta);
};

struct CosineOptions {
  bool clamp_negative = true;  // false: raw cosine, distance in [0, 2]
};

double cosine_similarity(std::span<const double> a, std::span<const double> b,
                         const CosineOptions& options = {});
double cosine_distance(std::span<const double> a, std::span<const double> b,
                       const CosineOptions& options = {});
double cosine_distance(const TfidfVector& a, const TfidfVector& b);
// Absent vectors count as zero vectors (distance 1).
double optional_cosine_distance(const std::optional<Vector>& a,
                                const std::optional<Vector>& b,
                                const CosineOptions& options = {});

// Word-level semantic overlap of two sentences given their embedded content
// tokens (rows); 0 when either side is empty.
double text_semantic_similarity(const std::vector<Vector>& si,
                                const std::vector<Vector>& sj,
                                const CosineOptions& options = {});
double tss_distance(const std::vector<Vector>& si, const std::vector<Vector>& sj,
                    const CosineOptions& options = {});

struct WmdResult {
  double distance = 0.0;
  bool degenerate = false;
};

double euclidean(std::span<const double> a, std::span<const double> b);

// Exact word mover's distance with Euclidean ground cost. A missing side
// yields the sentinel distance 1 with degenerate set.
WmdResult wmd_distance(const std::optional<Nbow>& pi, const std::optional<Nbow>& pj);
WmdResult wmd_distance(const Nbow& pi, const Nbow& pj);

// Evaluates dist(i, j) for i < j, split over `threads` workers.
DistanceMatrix pairwise_distances(std::size_t n,
                                  const std::function<double(std::size_t, std::size_t)>& dist,
                                  std::size_t threads = 1);

// Gaussian kernel with local scaling: bandwidth of vertex i is its distance to
// the k_nn-th nearest other vertex.
SimilarityGraph build_graph(const DistanceMatrix& d, std::size_t k_nn,
                            std::string meta = {});

// Per-vertex local scale used by build_graph (ties by lower index).
std::vector<double> local_scales(const DistanceMatrix& d, std::size_t k_nn);

SimilarityGraph fuse_graphs(std::span<const SimilarityGraph> graphs,
                            std::span<const double> weights);

void write_graph_tsv(const SimilarityGraph& graph, std::ostream& out);
void export_graph_tsv(const SimilarityGraph& graph, const std::filesystem::path& path);

}  // namespace semsum
