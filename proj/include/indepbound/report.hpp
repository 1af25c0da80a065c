#pragma once

#include <string>

#include <json.hpp>

#include "indepbound/bounds.hpp"
#include "indepbound/permutation.hpp"
#include "indepbound/verification.hpp"

namespace indepbound {

inline constexpr const char* kSchema = "indepbound/1";

enum class Format { json, csv, text };

Format parse_format(const std::string& name);

nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const TrialBatch& batch);
nlohmann::json to_json(const VerificationReport& report);

// Rendered output always ends with a newline. Object keys are sorted, so equal
// inputs give byte-identical text.
std::string render(const BoundReport& report, Format format);
std::string render(const TrialBatch& batch, Format format);
std::string render(const VerificationReport& report, Format format);

/// Quotes a CSV cell when it holds a comma, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace indepbound
