#pragma once

// Serialization of verification reports. Every number is written as an
// exact decimal string ("p" or "p/q").

#include <string>

#include "tribo/catalog.hpp"

namespace tribo {

enum class Format { Json, Tsv, Text };

std::string to_json(const VerifyReport& report);
std::string to_json(const SummaryReport& summary);

/// Inverse of to_json. Per-index statuses are not serialized and come back
/// empty. Throws std::invalid_argument on malformed input.
VerifyReport report_from_json(const std::string& text);
SummaryReport summary_from_json(const std::string& text);

std::string to_tsv(const SummaryReport& summary);
std::string to_text(const SummaryReport& summary, bool verbose = false);

std::string render(const SummaryReport& summary, Format format, bool verbose = false);

}  // namespace tribo
