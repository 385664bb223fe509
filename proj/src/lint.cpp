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

#include "spantag/lint.hpp"

#include <algorithm>
#include <sstream>

namespace spantag {

RawAnnotation to_raw(const SentenceAnnotation& annotation) {
  RawAnnotation raw;
  raw.sentence_id = annotation.sentence_id;
  raw.tokens = annotation.tokens;
  raw.spans.reserve(annotation.spans.size());
  for (const TokenSpan& span : annotation.spans) {
    RawSpan rs;
    rs.category = span.category;
    rs.segments.push_back(span.head);
    if (span.tail) rs.segments.push_back(*span.tail);
    raw.spans.push_back(std::move(rs));
  }
  return raw;
}

namespace {

std::string span_label(const RawSpan& span, size_t index) {
  std::ostringstream out;
  out << "span #" << index;
  if (!span.source_id.empty()) out << " (" << span.source_id << ")";
  out << " [" << category_name(span.category) << "]";
  return out.str();
}

TokenRange bounding_range(const RawSpan& span) {
  TokenRange range{0, 0};
  bool first = true;
  for (const TokenRange& seg : span.segments) {
    if (first) {
      range = seg;
      first = false;
    } else {
      range.start = std::min(range.start, seg.start);
      range.end = std::max(range.end, seg.end);
    }
  }
  return range;
}

}  // namespace

std::vector<LintViolation> lint_gold(const RawAnnotation& annotation,
                                     const TagsetConfig& tagset) {
  std::vector<LintViolation> out;
  const int n = static_cast<int>(annotation.tokens.size());

  auto add = [&](const char* rule, TokenRange where, std::string message) {
    out.push_back(LintViolation{rule, where, std::move(message)});
  };

  // Per-span structural checks; sorted segment copies for the positional
  // rules below.
  std::vector<std::vector<TokenRange>> sorted(annotation.spans.size());
  for (size_t s = 0; s < annotation.spans.size(); ++s) {
    const RawSpan& span = annotation.spans[s];
    if (span.segments.size() > 2) {
      add(kLintRuleMaxTwoParts, bounding_range(span),
          span_label(span, s) + " has " +
              std::to_string(span.segments.size()) +
              " segments, at most two are allowed");
    }
    for (const TokenRange& seg : span.segments) {
      if (seg.empty()) {
        add(kLintRuleEmptySegment, seg,
            span_label(span, s) + " contains an empty segment");
      } else {
        sorted[s].push_back(seg);
      }
    }
    std::sort(sorted[s].begin(), sorted[s].end(),
              [](const TokenRange& a, const TokenRange& b) {
                return a.start < b.start;
              });
    if (sorted[s].size() >= 2 &&
        !tagset.allows_discontiguous(span.category)) {
      add(kLintRuleIllegalDiscontiguity, bounding_range(span),
          span_label(span, s) +
              " is discontiguous but BD/ID are not allowed for " +
              std::string(category_name(span.category)));
    }
  }

  // Coverage and overlap over token indices.
  std::vector<int> cover(static_cast<size_t>(std::max(n, 0)), 0);
  for (size_t s = 0; s < annotation.spans.size(); ++s) {
    for (const TokenRange& seg : sorted[s]) {
      for (int i = std::max(seg.start, 0); i < std::min(seg.end, n); ++i) {
        ++cover[i];
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (cover[i] == 0) {
      add(kLintRuleUncoveredToken, TokenRange{i, i + 1},
          "token " + std::to_string(i) + " ('" +
              annotation.tokens[i].surface + "') is not covered by any span");
    }
  }
  for (size_t a = 0; a < annotation.spans.size(); ++a) {
    for (size_t b = a + 1; b < annotation.spans.size(); ++b) {
      for (const TokenRange& sa : sorted[a]) {
        for (const TokenRange& sb : sorted[b]) {
          const int lo = std::max(sa.start, sb.start);
          const int hi = std::min(sa.end, sb.end);
          if (lo < hi) {
            add(kLintRuleOverlap, TokenRange{lo, hi},
                span_label(annotation.spans[a], a) + " overlaps " +
                    span_label(annotation.spans[b], b) + " on tokens [" +
                    std::to_string(lo) + "," + std::to_string(hi) + ")");
          }
        }
      }
    }
  }

  // Same-category interleaving: a head segment must not start between the
  // head and the tail of a discontiguous span of the same category.
  for (size_t s = 0; s < annotation.spans.size(); ++s) {
    if (sorted[s].size() < 2) continue;
    const TokenRange& head = sorted[s][0];
    const TokenRange& tail = sorted[s][1];
    for (size_t t = 0; t < annotation.spans.size(); ++t) {
      if (t == s || sorted[t].empty()) continue;
      if (annotation.spans[t].category != annotation.spans[s].category)
        continue;
      const int start = sorted[t][0].start;
      if (start >= head.end && start < tail.start) {
        add(kLintRuleInterleaving, TokenRange{start, sorted[t][0].end},
            span_label(annotation.spans[t], t) + " starts between head and "
            "tail of " + span_label(annotation.spans[s], s));
      }
    }
  }

  return out;
}

std::vector<LintViolation> lint_gold(const SentenceAnnotation& annotation,
                                     const TagsetConfig& tagset) {
  return lint_gold(to_raw(annotation), tagset);
}

}  // namespace spantag
