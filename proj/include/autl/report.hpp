#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "autl/theorems.hpp"

namespace autl {

enum class ReportFormat { json, csv, markdown };
std::optional<ReportFormat> parse_report_format(const std::string& name);

nlohmann::ordered_json report_to_json(const TheoremReport& r);
nlohmann::ordered_json census_to_json(const CensusResult& c);

/// Fixed column order; the header row documents it. Summary rows are appended
/// as '#' comment lines so the file stays machine-diffable.
std::string census_to_csv(const CensusResult& c);
std::string census_to_markdown(const CensusResult& c);

std::string render_report(const TheoremReport& r, ReportFormat f);
std::string render_census(const CensusResult& c, ReportFormat f);

}  // namespace autl
