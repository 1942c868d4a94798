#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "knotslice/search.hpp"

namespace knotslice {

enum class InputFormat { dt, pd };

std::string_view to_string(InputFormat f);

// One line of batch output. Exactly one of verdict and error is set.
struct ResultRecord {
  std::string name;
  InputFormat format = InputFormat::dt;
  std::string code;
  std::optional<Verdict> verdict;
  std::optional<std::string> error;  // parse or classification failure
  std::int64_t timings_ms = 0;
  std::string config_fingerprint;

  bool operator==(const ResultRecord&) const = default;
};

// FNV-1a over the move registry, the band parameterization, the budgets
// and the mirror mode, as 16 hex digits.
std::string config_fingerprint(const SearchConfig& cfg);

// A single JSON line without the trailing newline; keys in fixed order.
std::string serialize(const ResultRecord& r);

// Throws MalformedCode on anything serialize cannot have produced.
ResultRecord parse_record(std::string_view line);

// Tag written in the "verdict" field ("Error" for failed lines).
std::string verdict_tag(const ResultRecord& r);

// Parses and classifies one input; failures become error records.
ResultRecord make_record(std::string name, InputFormat format, std::string code, const SearchConfig& cfg,
                         bool with_timings = true);

// Guesses the format of a bare code: PD when it has brackets.
InputFormat detect_format(std::string_view code);
PlanarDiagram parse_code(InputFormat format, std::string_view code);

// Replays the record's certificate against its own input code; nullopt
// when the record carries no certificate.
std::optional<bool> verify_record(const ResultRecord& r);

}  // namespace knotslice
