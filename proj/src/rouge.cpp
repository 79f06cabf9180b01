#include "semsum/rouge.hpp"

#include <algorithm>
#include <map>

#include "semsum/error.hpp"
#include "semsum/utf8.hpp"

namespace semsum {

std::string to_string(RougeMetric metric) {
  switch (metric) {
    case RougeMetric::kR1: return "R1";
    case RougeMetric::kR2: return "R2";
    case RougeMetric::kRL: return "RL";
  }
  return "unknown";
}

RougeMetric rouge_metric_from_string(std::string_view name) {
  std::string lower(name);
  for (char& c : lower) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  if (lower == "r1" || lower == "rouge-1") return RougeMetric::kR1;
  if (lower == "r2" || lower == "rouge-2") return RougeMetric::kR2;
  if (lower == "rl" || lower == "rouge-l") return RougeMetric::kRL;
  throw Error("unknown ROUGE metric: " + std::string(name));
}

std::string truncate_bytes(std::string_view text, std::size_t limit) {
  return std::string(utf8::truncate(text, limit));
}

std::vector<std::string> rouge_tokens(std::string_view text, bool stemming) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (current.empty()) return;
    tokens.push_back(stemming ? porter_stem(current) : current);
    current.clear();
  };
  for (char c : text) {
    const auto byte = static_cast<unsigned char>(c);
    if (byte >= 0x80 || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
      current.push_back(c);
    } else if (c >= 'A' && c <= 'Z') {
      current.push_back(static_cast<char>(c - 'A' + 'a'));
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

namespace {

using NgramCounts = std::map<std::vector<std::string>, std::size_t>;

NgramCounts count_ngrams(const std::vector<std::string>& tokens, int n, std::size_t& total) {
  NgramCounts counts;
  total = 0;
  const auto size = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i + size <= tokens.size(); ++i) {
    ++counts[std::vector<std::string>(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                      tokens.begin() + static_cast<std::ptrdiff_t>(i + size))];
    ++total;
  }
  return counts;
}

struct Prf {
  double p = 0.0;
  double r = 0.0;
  double f = 0.0;
};

Prf make_prf(double matched, double candidate_total, double reference_total) {
  Prf out;
  if (candidate_total > 0.0) out.p = matched / candidate_total;
  if (reference_total > 0.0) out.r = matched / reference_total;
  if (out.p + out.r > 0.0) out.f = 2.0 * out.p * out.r / (out.p + out.r);
  return out;
}

std::string prepare_candidate(std::string_view candidate, const RougeOptions& options) {
  if (options.byte_limit) return truncate_bytes(candidate, *options.byte_limit);
  return std::string(candidate);
}

// Keeps the reference with the highest F-1; the first one wins ties.
RougeReport best_of(RougeMetric metric, const std::vector<Prf>& scores,
                    const RougeOptions& options) {
  RougeReport report;
  report.metric = metric;
  report.byte_limit = options.byte_limit;
  report.stemming = options.stemming;
  const Prf* best = nullptr;
  for (const auto& s : scores) {
    if (best == nullptr || s.f > best->f) best = &s;
  }
  if (best != nullptr) {
    report.precision = best->p;
    report.recall = best->r;
    report.f1 = best->f;
  }
  return report;
}

void require_references(std::span<const std::string> references) {
  if (references.empty()) throw Error("ROUGE needs at least one reference");
}

}  // namespace

RougeReport rouge_n(std::string_view candidate, std::span<const std::string> references,
                    int n, const RougeOptions& options) {
  if (n != 1 && n != 2) throw Error("ROUGE-N supports n = 1 or 2");
  require_references(references);
  const auto cand_tokens = rouge_tokens(prepare_candidate(candidate, options), options.stemming);
  std::size_t cand_total = 0;
  const auto cand_counts = count_ngrams(cand_tokens, n, cand_total);

  std::vector<Prf> scores;
  for (const auto& reference : references) {
    std::size_t ref_total = 0;
    const auto ref_counts = count_ngrams(rouge_tokens(reference, options.stemming), n, ref_total);
    std::size_t matched = 0;
    for (const auto& [gram, count] : cand_counts) {
      const auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) matched += std::min(count, it->second);
    }
    scores.push_back(make_prf(static_cast<double>(matched), static_cast<double>(cand_total),
                              static_cast<double>(ref_total)));
  }
  return best_of(n == 1 ? RougeMetric::kR1 : RougeMetric::kR2, scores, options);
}

std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b) {
  std::vector<std::size_t> row(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = 0;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = a[i - 1] == b[j - 1] ? diag + 1 : std::max(row[j], row[j - 1]);
      diag = up;
    }
  }
  return row[b.size()];
}

RougeReport rouge_l(std::string_view candidate, std::span<const std::string> references,
                    const RougeOptions& options) {
  require_references(references);
  const auto cand_tokens = rouge_tokens(prepare_candidate(candidate, options), options.stemming);
  std::vector<Prf> scores;
  for (const auto& reference : references) {
    const auto ref_tokens = rouge_tokens(reference, options.stemming);
    const auto lcs = lcs_length(cand_tokens, ref_tokens);
    scores.push_back(make_prf(static_cast<double>(lcs), static_cast<double>(cand_tokens.size()),
                              static_cast<double>(ref_tokens.size())));
  }
  return best_of(RougeMetric::kRL, scores, options);
}

RougeReport rouge(RougeMetric metric, std::string_view candidate,
                  std::span<const std::string> references, const RougeOptions& options) {
  switch (metric) {
    case RougeMetric::kR1: return rouge_n(candidate, references, 1, options);
    case RougeMetric::kR2: return rouge_n(candidate, references, 2, options);
    case RougeMetric::kRL: return rouge_l(candidate, references, options);
  }
  throw Error("unknown ROUGE metric");
}

}  // namespace semsum
