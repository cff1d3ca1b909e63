#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ramseq/attention.hpp"

namespace ramseq {

/// A rule document could not be read or does not describe a valid rule.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Rule documents are JSON:
///
///   {
///     "alternatives": ["A", "B", "D"],
///     "utilities": {"A": 8, "B": 6, "D": 7},
///     "mode": "renormalize",
///     "attention": [
///       {"menu": ["A", "B", "D"], "consider": ["A", "B"], "prob": 0.3},
///       ...
///     ]
///   }
///
/// "mode" is optional and defaults to "renormalize". In no-choice mode an
/// empty "consider" list carries the no-choice mass. Every failure, including
/// semantic ones such as duplicate rows, is reported as ParseError.
AttentionRule parse_rule(std::string_view text);
AttentionRule read_rule_file(const std::filesystem::path& path);

/// Canonical document: alternatives in universe order, rows in (menu,
/// subset) code order, probabilities printed so they parse back bit-exactly.
std::string write_rule(const AttentionRule& rule, int indent = 2);

}  // namespace ramseq
