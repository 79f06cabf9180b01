#include "semsum/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <thread>

#include "semsum/error.hpp"
#include "semsum/transport.hpp"

namespace semsum {

void DistanceMatrix::set(std::size_t i, std::size_t j, double value) {
  d_[i * n_ + j] = value;
  d_[j * n_ + i] = value;
}

SimilarityGraph SimilarityGraph::singleton(std::string meta) {
  SimilarityGraph g;
  g.n = 1;
  g.w = {1.0};
  g.meta = std::move(meta);
  return g;
}

namespace {

double clamp_cosine(double cos, const CosineOptions& options) {
  return std::clamp(cos, options.clamp_negative ? 0.0 : -1.0, 1.0);
}

}  // namespace

double cosine_similarity(std::span<const double> a, std::span<const double> b,
                         const CosineOptions& options) {
  if (a.size() != b.size()) {
    throw Error("cosine: dimension mismatch (" + std::to_string(a.size()) + " vs " +
                std::to_string(b.size()) + ")");
  }
  double dot = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    dot += a[k] * b[k];
    na += a[k] * a[k];
    nb += b[k] * b[k];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  if (std::equal(a.begin(), a.end(), b.begin())) return 1.0;
  return clamp_cosine(dot / (std::sqrt(na) * std::sqrt(nb)), options);
}

double cosine_distance(std::span<const double> a, std::span<const double> b,
                       const CosineOptions& options) {
  return 1.0 - cosine_similarity(a, b, options);
}

double optional_cosine_distance(const std::optional<Vector>& a,
                                const std::optional<Vector>& b,
                                const CosineOptions& options) {
  if (!a || !b) return 1.0;
  return cosine_distance(*a, *b, options);
}

double cosine_distance(const TfidfVector& a, const TfidfVector& b) {
  if (a.norm == 0.0 || b.norm == 0.0) return 1.0;
  if (a.entries == b.entries) return 0.0;
  double dot = 0.0;
  auto ia = a.entries.begin();
  auto ib = b.entries.begin();
  while (ia != a.entries.end() && ib != b.entries.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      dot += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return 1.0 - std::clamp(dot, 0.0, 1.0);
}

namespace {

// Sum over words of `from` of their best cosine match in `to`.
double best_match_sum(const std::vector<Vector>& from, const std::vector<Vector>& to,
                      const CosineOptions& options) {
  double sum = 0.0;
  for (const auto& w : from) {
    double best = options.clamp_negative ? 0.0 : -1.0;
    for (const auto& u : to) best = std::max(best, cosine_similarity(w, u, options));
    sum += best;
  }
  return sum;
}

}  // namespace

double text_semantic_similarity(const std::vector<Vector>& si,
                                const std::vector<Vector>& sj,
                                const CosineOptions& options) {
  if (si.empty() || sj.empty()) return 0.0;
  const double forward =
      best_match_sum(si, sj, options) / (2.0 * static_cast<double>(si.size()));
  const double backward =
      best_match_sum(sj, si, options) / (2.0 * static_cast<double>(sj.size()));
  return forward + backward;
}

double tss_distance(const std::vector<Vector>& si, const std::vector<Vector>& sj,
                    const CosineOptions& options) {
  return 1.0 - text_semantic_similarity(si, sj, options);
}

double euclidean(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error("euclidean: dimension mismatch");
  double sq = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double diff = a[k] - b[k];
    sq += diff * diff;
  }
  return std::sqrt(sq);
}

namespace {

// Total order on distributions so that wmd(a, b) and wmd(b, a) solve the
// same oriented problem.
bool nbow_less(const Nbow& a, const Nbow& b) {
  if (a.tokens != b.tokens) return a.tokens < b.tokens;
  if (a.weights != b.weights) return a.weights < b.weights;
  return a.vecs < b.vecs;
}

bool nbow_equal(const Nbow& a, const Nbow& b) {
  return a.tokens == b.tokens && a.weights == b.weights && a.vecs == b.vecs;
}

}  // namespace

WmdResult wmd_distance(const Nbow& pi, const Nbow& pj) {
  if (pi.weights.empty() || pj.weights.empty()) return {1.0, true};
  if (nbow_equal(pi, pj)) return {0.0, false};
  const Nbow& from = nbow_less(pi, pj) ? pi : pj;
  const Nbow& to = nbow_less(pi, pj) ? pj : pi;

  CostMatrix cost;
  cost.rows = from.weights.size();
  cost.cols = to.weights.size();
  cost.values.reserve(cost.rows * cost.cols);
  for (const auto& u : from.vecs) {
    for (const auto& v : to.vecs) cost.values.push_back(euclidean(u, v));
  }
  return {solve_transport(from.weights, to.weights, cost).cost, false};
}

WmdResult wmd_distance(const std::optional<Nbow>& pi, const std::optional<Nbow>& pj) {
  if (!pi || !pj) return {1.0, true};
  return wmd_distance(*pi, *pj);
}

DistanceMatrix pairwise_distances(std::size_t n,
                                  const std::function<double(std::size_t, std::size_t)>& dist,
                                  std::size_t threads) {
  DistanceMatrix d(n);
  auto work = [&](std::size_t worker, std::size_t stride) {
    for (std::size_t i = worker; i < n; i += stride) {
      for (std::size_t j = i + 1; j < n; ++j) d.set(i, j, dist(i, j));
    }
  };
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
  if (threads == 1) {
    work(0, 1);
    return d;
  }
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  }
  return d;
}

std::vector<double> local_scales(const DistanceMatrix& d, std::size_t k_nn) {
  const std::size_t n = d.size();
  if (n < 2 || k_nn < 1 || k_nn > n - 1) {
    throw Error("k_nn must be in [1, n-1]; got k_nn=" + std::to_string(k_nn) +
                " with n=" + std::to_string(n));
  }
  std::vector<double> scales(n);
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < n; ++i) {
    others.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) others.push_back(j);
    }
    auto closer = [&](std::size_t a, std::size_t b) {
      return d(i, a) < d(i, b) || (d(i, a) == d(i, b) && a < b);
    };
    std::nth_element(others.begin(), others.begin() + static_cast<std::ptrdiff_t>(k_nn - 1),
                     others.end(), closer);
    scales[i] = d(i, others[k_nn - 1]);
  }
  return scales;
}

SimilarityGraph build_graph(const DistanceMatrix& d, std::size_t k_nn, std::string meta) {
  const auto scales = local_scales(d, k_nn);
  const std::size_t n = d.size();
  SimilarityGraph g;
  g.n = n;
  g.w.assign(n * n, 0.0);
  g.meta = std::move(meta);
  g.k_nn = k_nn;
  for (std::size_t i = 0; i < n; ++i) {
    g.at(i, i) = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dij = d(i, j);
      const double scale = scales[i] * scales[j];
      const double w = scale == 0.0 ? (dij == 0.0 ? 1.0 : 0.0)
                                    : std::exp(-(dij * dij) / scale);
      g.at(i, j) = w;
      g.at(j, i) = w;
    }
  }
  return g;
}

SimilarityGraph fuse_graphs(std::span<const SimilarityGraph> graphs,
                            std::span<const double> weights) {
  if (graphs.empty()) throw Error("fuse_graphs: no graphs");
  if (graphs.size() != weights.size()) {
    throw Error("fuse_graphs: " + std::to_string(graphs.size()) + " graphs but " +
                std::to_string(weights.size()) + " weights");
  }
  const std::size_t n = graphs.front().n;
  for (const auto& g : graphs) {
    if (g.n != n) throw Error("fuse_graphs: graph size mismatch");
  }
  double total = 0.0;
  for (double a : weights) {
    if (!(a >= 0.0)) throw Error("fuse_graphs: weights must be nonnegative");
    total += a;
  }
  if (!(total > 0.0)) throw Error("fuse_graphs: weights must not all be zero");

  SimilarityGraph fused;
  fused.n = n;
  fused.w.assign(n * n, 0.0);
  fused.k_nn = graphs.front().k_nn;
  fused.meta = "fused(";
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    fused.meta += (k ? "+" : "") + graphs[k].meta;
  }
  fused.meta += ")";

  for (std::size_t e = 0; e < n * n; ++e) {
    double value = 0.0;
    double lo = graphs.front().w[e];
    double hi = lo;
    for (std::size_t k = 0; k < graphs.size(); ++k) {
      value += (weights[k] / total) * graphs[k].w[e];
      lo = std::min(lo, graphs[k].w[e]);
      hi = std::max(hi, graphs[k].w[e]);
    }
    // Rounding may step a convex combination just outside its inputs.
    fused.w[e] = std::clamp(value, lo, hi);
  }
  return fused;
}

void write_graph_tsv(const SimilarityGraph& graph, std::ostream& out) {
  out << "# n=" << graph.n << " source=" << graph.meta << " k=" << graph.k_nn << '\n';
  char buf[32];
  for (std::size_t i = 0; i < graph.n; ++i) {
    for (std::size_t j = i + 1; j < graph.n; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", graph(i, j));
      out << i << '\t' << j << '\t' << buf << '\n';
    }
  }
}

void export_graph_tsv(const SimilarityGraph& graph, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  write_graph_tsv(graph, out);
}

}  // namespace semsum
