#include "ramseq/illustration.hpp"

#include "ramseq/rule_file.hpp"

namespace ramseq {

namespace {

// Same content as data/illustration.json.
constexpr std::string_view kDocument = R"json(
{
  "alternatives": ["A", "B", "D"],
  "utilities": {"A": 8, "B": 6, "D": 7},
  "mode": "renormalize",
  "attention": [
    {"menu": ["A", "B", "D"], "consider": ["A", "B"], "prob": 0.3},
    {"menu": ["A", "B", "D"], "consider": ["B", "D"], "prob": 0.4},
    {"menu": ["A", "B", "D"], "consider": ["A", "D"], "prob": 0.2},
    {"menu": ["A", "B", "D"], "consider": ["A", "B", "D"], "prob": 0.1},
    {"menu": ["A", "B"], "consider": ["A"], "prob": 0.1},
    {"menu": ["A", "B"], "consider": ["B"], "prob": 0.1},
    {"menu": ["A", "B"], "consider": ["A", "B"], "prob": 0.8},
    {"menu": ["A", "D"], "consider": ["A"], "prob": 0.1},
    {"menu": ["A", "D"], "consider": ["D"], "prob": 0.1},
    {"menu": ["A", "D"], "consider": ["A", "D"], "prob": 0.8},
    {"menu": ["B", "D"], "consider": ["B"], "prob": 0.2},
    {"menu": ["B", "D"], "consider": ["D"], "prob": 0.2},
    {"menu": ["B", "D"], "consider": ["B", "D"], "prob": 0.6}
  ]
}
)json";

}  // namespace

std::string_view illustration_document() { return kDocument; }

AttentionRule illustration_rule() { return parse_rule(kDocument); }

}  // namespace ramseq
