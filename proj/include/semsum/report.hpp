#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "semsum/corpus.hpp"
#include "semsum/rouge.hpp"
#include "semsum/select.hpp"

namespace semsum {

nlohmann::json to_json(const SelectionConfig& config);
nlohmann::json to_json(const TaskUnit& unit, const SelectionResult& result);
// Scores rounded to 4 decimal places.
nlohmann::json to_json(const RougeReport& report);

double round4(double value);

// Selected sentences in document order, one per line.
std::string summary_text(const TaskUnit& unit, const SelectionResult& result);

// Writes through a temporary sibling file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace semsum
