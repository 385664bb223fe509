// Copyright 2026 The spantag Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPANTAG_LINT_HPP_
#define SPANTAG_LINT_HPP_

#include <string>
#include <vector>

#include "spantag/span_types.hpp"

namespace spantag {

// Raw annotation forms, used before invariant enforcement. Unlike TokenSpan,
// a RawSpan may carry any number of segments so the linter can report
// guideline violations instead of refusing to represent them.
struct RawSpan {
  SpanCategory category = SpanCategory::Object;
  std::vector<TokenRange> segments;
  std::string source_id;  // e.g. the standoff T-id; may be empty
};

struct RawAnnotation {
  std::string sentence_id;
  std::vector<Token> tokens;
  std::vector<RawSpan> spans;
};

RawAnnotation to_raw(const SentenceAnnotation& annotation);

struct LintViolation {
  std::string rule;  // see kLintRule* constants
  TokenRange where;  // offending token range
  std::string message;
};

inline constexpr const char* kLintRuleUncoveredToken = "uncovered-token";
inline constexpr const char* kLintRuleOverlap = "overlap";
inline constexpr const char* kLintRuleMaxTwoParts = "max-two-parts";
inline constexpr const char* kLintRuleInterleaving = "interleaving";
inline constexpr const char* kLintRuleIllegalDiscontiguity =
    "illegal-discontiguity";
inline constexpr const char* kLintRuleEmptySegment = "empty-segment";

// Checks a gold annotation against the annotation guidelines: exhaustive
// coverage, no overlap, at most two segments per span, no same-category
// interleaving, no discontiguous spans for categories the tagset forbids,
// no empty segments. Violations are data, not failures.
std::vector<LintViolation> lint_gold(
    const RawAnnotation& annotation,
    const TagsetConfig& tagset = TagsetConfig::default_12());

std::vector<LintViolation> lint_gold(
    const SentenceAnnotation& annotation,
    const TagsetConfig& tagset = TagsetConfig::default_12());

}  // namespace spantag

#endif  // SPANTAG_LINT_HPP_
