#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace semsum {

// Classic Porter (1980) suffix stripper for lowercase ASCII words. Words
// with non-ASCII letters or of length <= 2 are returned unchanged.
std::string porter_stem(std::string_view word);

enum class RougeMetric { kR1, kR2, kRL };

std::string to_string(RougeMetric metric);
RougeMetric rouge_metric_from_string(std::string_view name);

struct RougeOptions {
  std::optional<std::size_t> byte_limit;
  bool stemming = true;
};

struct RougeReport {
  RougeMetric metric = RougeMetric::kR1;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::optional<std::size_t> byte_limit;
  bool stemming = true;
};

std::string truncate_bytes(std::string_view text, std::size_t limit);

// Scoring tokens: lowercased, non-alphanumeric ASCII treated as separators,
// optionally stemmed.
std::vector<std::string> rouge_tokens(std::string_view text, bool stemming);

RougeReport rouge_n(std::string_view candidate, std::span<const std::string> references,
                    int n, const RougeOptions& options = {});
RougeReport rouge_l(std::string_view candidate, std::span<const std::string> references,
                    const RougeOptions& options = {});
RougeReport rouge(RougeMetric metric, std::string_view candidate,
                  std::span<const std::string> references, const RougeOptions& options = {});

std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b);

}  // namespace semsum
