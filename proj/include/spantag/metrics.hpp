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

#ifndef SPANTAG_METRICS_HPP_
#define SPANTAG_METRICS_HPP_

#include <string>
#include <vector>

#include "spantag/lexicon.hpp"
#include "spantag/span_types.hpp"

namespace spantag {

struct LabelMetrics {
  TagLabel label;
  double precision = 0.0;  // 0 when the label was never predicted
  double recall = 0.0;
  double f1 = 0.0;
  long support = 0;  // gold token count
};

struct MetricAverages {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct TagReport {
  std::vector<LabelMetrics> per_label;  // canonical tagset order
  double accuracy = 0.0;
  MetricAverages macro;     // unweighted mean over labels present in gold
  MetricAverages weighted;  // support-weighted mean
  long total_support = 0;
};

// Token-level multi-class precision/recall/F1 per label. Gold and
// prediction must be aligned sentence-by-sentence and token-by-token;
// anything else raises AlignmentError.
TagReport tag_classification_report(const std::vector<TagSequence>& gold,
                                    const std::vector<TagSequence>& pred,
                                    const TagsetConfig& tagset);

// Plain-text table in the per-tag report layout; percentages use a comma
// decimal separator.
std::string render_tag_report(const TagReport& report);

struct SpanMatchCounts {
  long exact = 0;
  long partial = 0;
  long missed = 0;
  long spurious = 0;
};

struct SpanMatchReport {
  SpanMatchCounts total;
  std::array<SpanMatchCounts, kNumCategories> per_category;
};

// Greedy one-to-one matching within each sentence: exact matches first
// (same category, identical token-index set), then partial matches (same
// category, non-empty overlap) by largest overlap with ties broken towards
// the earliest gold span. Leftovers count as missed/spurious.
SpanMatchReport span_match_report(const std::vector<TokenSpan>& gold,
                                  const std::vector<TokenSpan>& pred);

std::string render_span_match_report(const SpanMatchReport& report);

// Chance-corrected agreement between two equal-length label lists.
double cohen_kappa(const std::vector<std::string>& labels_a,
                   const std::vector<std::string>& labels_b);

struct CoverageReport {
  struct FoundTerm {
    std::string term;
    std::string normalized;
    std::string evidence;  // a matching predicted surface variant
  };
  struct MissingTerm {
    std::string term;
    std::string normalized;
    std::vector<std::string> nearest;  // closest predicted forms
  };
  std::vector<FoundTerm> found;
  std::vector<MissingTerm> missing;

  double coverage() const {
    const size_t total = found.size() + missing.size();
    return total == 0 ? 0.0
                      : static_cast<double>(found.size()) /
                            static_cast<double>(total);
  }
};

// A term counts as found iff its normalized form equals the normalized
// form of some predicted Object span. Missing terms list their nearest
// predictions by longest common token subsequence.
CoverageReport defined_term_coverage(const std::vector<std::string>& terms,
                                     const std::vector<LexiconEntry>& lexicon,
                                     const NormalizeConfig& normalize =
                                         NormalizeConfig{});

std::string render_coverage_report(const CoverageReport& report);

// Worst-case-proportion sample size with finite population correction;
// confidence must be one of 0.90, 0.95, 0.99 (z = 1.645, 1.960, 2.576).
int sample_size(long population, double confidence, double margin);

}  // namespace spantag

#endif  // SPANTAG_METRICS_HPP_
