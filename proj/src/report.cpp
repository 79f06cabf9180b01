#include "semsum/report.hpp"

#include <cmath>
#include <fstream>
#include <system_error>

#include "semsum/error.hpp"
#include "semsum/fusionlab.hpp"

namespace semsum {

double round4(double value) { return std::round(value * 1e4) / 1e4; }

nlohmann::json to_json(const SelectionConfig& config) {
  return {
      {"lambda", config.lambda},
      {"budget", {{"mode", to_string(config.budget.mode)}, {"limit", config.budget.limit}}},
      {"k_partitions", config.k_partitions},
      {"seed", config.seed},
      {"lazy", config.lazy},
      {"singleton_check", config.singleton_check},
  };
}

nlohmann::json to_json(const TaskUnit& unit, const SelectionResult& result) {
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& step : result.trace) {
    trace.push_back({{"sent_id", step.sent_id}, {"gain", step.gain}, {"value", step.value}});
  }
  nlohmann::json summary = nlohmann::json::array();
  std::size_t emitted_bytes = 0;
  for (std::size_t id : document_order(result)) {
    const auto& s = unit.sentences[id];
    summary.push_back({{"sent_id", id},
                       {"doc_id", s.doc_id},
                       {"position", s.position_m},
                       {"text", s.emitted_text()}});
    emitted_bytes += s.byte_len;
  }
  return {
      {"unit_id", unit.unit_id},
      {"sentences", unit.size()},
      {"selection_order", result.selected},
      {"summary", summary},
      {"trace", trace},
      {"budget",
       {{"mode", to_string(result.config_echo.budget.mode)},
        {"limit", result.config_echo.budget.limit},
        {"used", result.budget_used},
        {"emitted_bytes", emitted_bytes}}},
      {"selection_config", to_json(result.config_echo)},
  };
}

nlohmann::json to_json(const RougeReport& report) {
  return {
      {"metric", to_string(report.metric)},
      {"p", round4(report.precision)},
      {"r", round4(report.recall)},
      {"f", round4(report.f1)},
  };
}

std::string summary_text(const TaskUnit& unit, const SelectionResult& result) {
  std::string text;
  for (std::size_t id : document_order(result)) {
    text += unit.sentences[id].emitted_text();
    text += '\n';
  }
  return text;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

}  // namespace semsum
