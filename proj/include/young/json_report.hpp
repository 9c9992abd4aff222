#pragma once

#include <json.hpp>

#include "young/harness.hpp"
#include "young/structure.hpp"

namespace young {

inline constexpr const char* kReportSchema = "young-defined/1";

struct JsonOptions {
  bool timings = false;  // wall-clock fields make output non-reproducible
};

nlohmann::ordered_json to_json(const CheckReport& r, const JsonOptions& opt = {});
nlohmann::ordered_json to_json(const PropositionReport& r, const JsonOptions& opt = {});
nlohmann::ordered_json to_json(const AggregateReport& r, const JsonOptions& opt = {});
nlohmann::ordered_json to_json(const EmbeddingResult& r, const FinitePoset& poset);

/// Wraps a payload with the schema tag.
nlohmann::ordered_json envelope(const std::string& kind, nlohmann::ordered_json payload);

}  // namespace young
