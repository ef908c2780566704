#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "clhs/design.hpp"
#include "clhs/diagnostics.hpp"
#include "clhs/sample_matrix.hpp"

namespace clhs {

enum class SampleFormat { csv, json };

// Design spec JSON:
//   {
//     "metadata": {...},
//     "variables": [
//       {"name": "x1", "dist": "uniform", "min": 0, "max": 1},
//       {"name": "x2", "dist": "normal", "mean": 0, "sd": 1},
//       {"name": "x3", "dist": "truncnorm", "mean": 0, "sd": 1, "min": -2, "max": 2}
//     ],
//     "links": [{"left": 1, "right": 2, "relation": "less"}]
//   }
// Link indices are 1-based; relation is "less"/"<" or "greater"/">".
// Errors throw SpecError with a field path such as "variables[1].max".
DesignSpec parse_design_spec(std::string_view text);
nlohmann::json design_spec_to_json(const DesignSpec& spec);
std::string serialize_design_spec(const DesignSpec& spec);

// CSV: header of names, then one line per row, values printed with 17
// significant digits (shortest form), '\n' line ends.
// JSON: {"names": [...], "rows": [[...], ...], "seed": <uint64 or null>}.
std::string write_samples(const SampleMatrix& m, SampleFormat format);
SampleMatrix parse_samples(std::string_view text, SampleFormat format);

// Format from the extension: ".json" -> json, anything else csv.
SampleFormat format_for_path(const std::filesystem::path& path);

nlohmann::json report_to_json(const DiagnosticsReport& r);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace clhs
