#pragma once

#include "ldp/record.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace ldp {

enum class OutputFormat { kJson, kCsv, kMarkdown };

std::optional<OutputFormat> parse_format(std::string_view id);

nlohmann::json record_to_json(const CandidateRecord& r);
/// Throws InvalidInput on schema violations.
CandidateRecord record_from_json(const nlohmann::json& j);

std::string to_json(const std::vector<CandidateRecord>& records);
std::vector<CandidateRecord> parse_json(std::string_view text);

/// Same fields as the JSON form, one record per line after a header.
std::string to_csv(const std::vector<CandidateRecord>& records);
std::vector<CandidateRecord> parse_csv(std::string_view text);

/// Table in the layout of the published classification; not parseable.
std::string to_markdown(const std::vector<CandidateRecord>& records);

std::string serialize(const std::vector<CandidateRecord>& records, OutputFormat f);

}  // namespace ldp
