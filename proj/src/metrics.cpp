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

#include "spantag/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "spantag/errors.hpp"

namespace spantag {

namespace {

// "80,68" style percentage with the comma decimal separator used in the
// rendered tables.
std::string pct(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", fraction * 100.0);
  std::string s(buf);
  const auto dot = s.find('.');
  if (dot != std::string::npos) s[dot] = ',';
  return s;
}

}  // namespace

TagReport tag_classification_report(const std::vector<TagSequence>& gold,
                                    const std::vector<TagSequence>& pred,
                                    const TagsetConfig& tagset) {
  if (gold.size() != pred.size()) {
    throw AlignmentError("gold has " + std::to_string(gold.size()) +
                         " sentences, prediction has " +
                         std::to_string(pred.size()));
  }
  const int labels = tagset.num_labels();
  std::vector<long> tp(labels, 0);
  std::vector<long> gold_count(labels, 0);
  std::vector<long> pred_count(labels, 0);
  long correct = 0;
  long total = 0;

  for (size_t s = 0; s < gold.size(); ++s) {
    if (gold[s].labels.size() != pred[s].labels.size()) {
      throw AlignmentError("sentence " + gold[s].sentence_id + " has " +
                           std::to_string(gold[s].labels.size()) +
                           " gold tokens but " +
                           std::to_string(pred[s].labels.size()) +
                           " predicted");
    }
    for (size_t t = 0; t < gold[s].labels.size(); ++t) {
      const int g = tagset.label_index(gold[s].labels[t]);
      const int p = tagset.label_index(pred[s].labels[t]);
      if (g < 0 || p < 0) {
        throw AlignmentError("label outside the tagset in sentence " +
                             gold[s].sentence_id);
      }
      ++gold_count[g];
      ++pred_count[p];
      ++total;
      if (g == p) {
        ++tp[g];
        ++correct;
      }
    }
  }

  TagReport report;
  report.total_support = total;
  report.accuracy = total > 0 ? static_cast<double>(correct) / total : 0.0;

  long present = 0;
  for (int l = 0; l < labels; ++l) {
    LabelMetrics m;
    m.label = tagset.label(l);
    m.support = gold_count[l];
    m.precision = pred_count[l] > 0
                      ? static_cast<double>(tp[l]) / pred_count[l]
                      : 0.0;
    m.recall =
        gold_count[l] > 0 ? static_cast<double>(tp[l]) / gold_count[l] : 0.0;
    m.f1 = m.precision + m.recall > 0.0
               ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
               : 0.0;
    report.per_label.push_back(m);

    if (gold_count[l] > 0) {
      ++present;
      report.macro.precision += m.precision;
      report.macro.recall += m.recall;
      report.macro.f1 += m.f1;
      report.weighted.precision += m.precision * m.support;
      report.weighted.recall += m.recall * m.support;
      report.weighted.f1 += m.f1 * m.support;
    }
  }
  if (present > 0) {
    report.macro.precision /= present;
    report.macro.recall /= present;
    report.macro.f1 /= present;
  }
  if (total > 0) {
    report.weighted.precision /= total;
    report.weighted.recall /= total;
    report.weighted.f1 /= total;
  }
  return report;
}

std::string render_tag_report(const TagReport& report) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-14s %8s %8s %8s %9s\n", "", "P", "R",
                "F1", "support");
  out << line;
  for (const LabelMetrics& m : report.per_label) {
    std::snprintf(line, sizeof(line), "%-14s %8s %8s %8s %9ld\n",
                  label_name(m.label).c_str(), pct(m.precision).c_str(),
                  pct(m.recall).c_str(), pct(m.f1).c_str(), m.support);
    out << line;
  }
  out << '\n';
  std::snprintf(line, sizeof(line), "%-14s %8s %8s %8s %9ld\n", "accuracy", "",
                "", pct(report.accuracy).c_str(), report.total_support);
  out << line;
  std::snprintf(line, sizeof(line), "%-14s %8s %8s %8s %9ld\n", "macro avg.",
                pct(report.macro.precision).c_str(),
                pct(report.macro.recall).c_str(), pct(report.macro.f1).c_str(),
                report.total_support);
  out << line;
  std::snprintf(line, sizeof(line), "%-14s %8s %8s %8s %9ld\n",
                "weighted avg.", pct(report.weighted.precision).c_str(),
                pct(report.weighted.recall).c_str(),
                pct(report.weighted.f1).c_str(), report.total_support);
  out << line;
  return out.str();
}

namespace {

std::set<int> span_index_set(const TokenSpan& span) {
  std::set<int> indices;
  for (int i = span.head.start; i < span.head.end; ++i) indices.insert(i);
  if (span.tail) {
    for (int i = span.tail->start; i < span.tail->end; ++i) indices.insert(i);
  }
  return indices;
}

long overlap_size(const std::set<int>& a, const std::set<int>& b) {
  long count = 0;
  for (int i : a) {
    if (b.count(i)) ++count;
  }
  return count;
}

}  // namespace

SpanMatchReport span_match_report(const std::vector<TokenSpan>& gold,
                                  const std::vector<TokenSpan>& pred) {
  // Spans only ever match within the same sentence.
  std::map<std::string, std::pair<std::vector<const TokenSpan*>,
                                  std::vector<const TokenSpan*>>> by_sentence;
  for (const TokenSpan& span : gold) {
    by_sentence[span.sentence_id].first.push_back(&span);
  }
  for (const TokenSpan& span : pred) {
    by_sentence[span.sentence_id].second.push_back(&span);
  }

  SpanMatchReport report;
  auto bump = [&](SpanCategory cat, long SpanMatchCounts::*member) {
    report.total.*member += 1;
    report.per_category[static_cast<int>(cat)].*member += 1;
  };

  for (auto& [sentence_id, pair] : by_sentence) {
    auto& [gold_spans, pred_spans] = pair;
    // Deterministic processing order: by head start, then tail start.
    auto ordering = [](const TokenSpan* a, const TokenSpan* b) {
      if (a->head.start != b->head.start) return a->head.start < b->head.start;
      const int at = a->tail ? a->tail->start : -1;
      const int bt = b->tail ? b->tail->start : -1;
      return at < bt;
    };
    std::sort(gold_spans.begin(), gold_spans.end(), ordering);
    std::sort(pred_spans.begin(), pred_spans.end(), ordering);

    std::vector<std::set<int>> gold_sets;
    std::vector<std::set<int>> pred_sets;
    for (const TokenSpan* s : gold_spans) gold_sets.push_back(span_index_set(*s));
    for (const TokenSpan* s : pred_spans) pred_sets.push_back(span_index_set(*s));
    std::vector<bool> gold_used(gold_spans.size(), false);
    std::vector<bool> pred_used(pred_spans.size(), false);

    // Pass 1: exact matches (same category, identical index set).
    for (size_t g = 0; g < gold_spans.size(); ++g) {
      for (size_t p = 0; p < pred_spans.size(); ++p) {
        if (gold_used[g] || pred_used[p]) continue;
        if (gold_spans[g]->category != pred_spans[p]->category) continue;
        if (gold_sets[g] == pred_sets[p]) {
          gold_used[g] = pred_used[p] = true;
          bump(gold_spans[g]->category, &SpanMatchCounts::exact);
          break;
        }
      }
    }

    // Pass 2: partial matches by largest overlap, earliest gold span on
    // ties, then earliest prediction.
    while (true) {
      long best_overlap = 0;
      size_t best_g = 0;
      size_t best_p = 0;
      for (size_t g = 0; g < gold_spans.size(); ++g) {
        if (gold_used[g]) continue;
        for (size_t p = 0; p < pred_spans.size(); ++p) {
          if (pred_used[p]) continue;
          if (gold_spans[g]->category != pred_spans[p]->category) continue;
          const long ov = overlap_size(gold_sets[g], pred_sets[p]);
          if (ov > best_overlap) {
            best_overlap = ov;
            best_g = g;
            best_p = p;
          }
        }
      }
      if (best_overlap == 0) break;
      gold_used[best_g] = pred_used[best_p] = true;
      bump(gold_spans[best_g]->category, &SpanMatchCounts::partial);
    }

    for (size_t g = 0; g < gold_spans.size(); ++g) {
      if (!gold_used[g]) bump(gold_spans[g]->category, &SpanMatchCounts::missed);
    }
    for (size_t p = 0; p < pred_spans.size(); ++p) {
      if (!pred_used[p]) bump(pred_spans[p]->category, &SpanMatchCounts::spurious);
    }
  }
  return report;
}

std::string render_span_match_report(const SpanMatchReport& report) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-12s %8s %8s %8s %9s\n", "", "exact",
                "partial", "missed", "spurious");
  out << line;
  for (SpanCategory cat : kAllCategories) {
    const SpanMatchCounts& c = report.per_category[static_cast<int>(cat)];
    std::snprintf(line, sizeof(line), "%-12s %8ld %8ld %8ld %9ld\n",
                  std::string(category_name(cat)).c_str(), c.exact, c.partial,
                  c.missed, c.spurious);
    out << line;
  }
  std::snprintf(line, sizeof(line), "%-12s %8ld %8ld %8ld %9ld\n", "total",
                report.total.exact, report.total.partial, report.total.missed,
                report.total.spurious);
  out << line;
  return out.str();
}

double cohen_kappa(const std::vector<std::string>& labels_a,
                   const std::vector<std::string>& labels_b) {
  if (labels_a.size() != labels_b.size()) {
    throw LengthMismatchError("label lists differ in length: " +
                              std::to_string(labels_a.size()) + " vs " +
                              std::to_string(labels_b.size()));
  }
  if (labels_a.empty()) throw EmptyInputError("empty label lists");

  const double n = static_cast<double>(labels_a.size());
  std::unordered_map<std::string, long> count_a;
  std::unordered_map<std::string, long> count_b;
  long agree = 0;
  for (size_t i = 0; i < labels_a.size(); ++i) {
    ++count_a[labels_a[i]];
    ++count_b[labels_b[i]];
    if (labels_a[i] == labels_b[i]) ++agree;
  }
  const double p_o = agree / n;
  double p_e = 0.0;
  for (const auto& [label, ca] : count_a) {
    auto it = count_b.find(label);
    if (it != count_b.end()) {
      p_e += (ca / n) * (it->second / n);
    }
  }
  if (p_e >= 1.0) return 1.0;  // single shared label used throughout
  return (p_o - p_e) / (1.0 - p_e);
}

namespace {

std::vector<std::string> whitespace_tokens(std::string_view text) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    size_t j = i;
    while (j < text.size() && text[j] != ' ') ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

long token_lcs(const std::vector<std::string>& a,
               const std::vector<std::string>& b) {
  std::vector<std::vector<long>> dp(a.size() + 1,
                                    std::vector<long>(b.size() + 1, 0));
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      dp[i][j] = a[i - 1] == b[j - 1]
                     ? dp[i - 1][j - 1] + 1
                     : std::max(dp[i - 1][j], dp[i][j - 1]);
    }
  }
  return dp[a.size()][b.size()];
}

}  // namespace

CoverageReport defined_term_coverage(const std::vector<std::string>& terms,
                                     const std::vector<LexiconEntry>& lexicon,
                                     const NormalizeConfig& normalize) {
  // Both sides go through the same normalization; re-normalizing the
  // lexicon's forms is safe because normalize_span is idempotent.
  std::unordered_map<std::string, const LexiconEntry*> predicted;
  for (const LexiconEntry& entry : lexicon) {
    const std::string form = normalize_form(entry.normalized_form, normalize);
    predicted.emplace(form, &entry);
  }

  CoverageReport report;
  for (const std::string& term : terms) {
    const std::string norm = normalize_form(term, normalize);
    auto it = predicted.find(norm);
    if (it != predicted.end()) {
      CoverageReport::FoundTerm found;
      found.term = term;
      found.normalized = norm;
      // Evidence: the entry's most frequent surface variant.
      long best = -1;
      for (const auto& [surface, freq] : it->second->surface_variants) {
        if (freq > best) {
          best = freq;
          found.evidence = surface;
        }
      }
      report.found.push_back(std::move(found));
    } else {
      CoverageReport::MissingTerm missing;
      missing.term = term;
      missing.normalized = norm;
      // Nearest predictions by longest common token subsequence.
      const std::vector<std::string> term_tokens = whitespace_tokens(norm);
      std::vector<std::pair<long, std::string>> candidates;
      for (const auto& [form, entry] : predicted) {
        const long lcs = token_lcs(term_tokens, whitespace_tokens(form));
        if (lcs > 0) candidates.emplace_back(lcs, form);
      }
      std::sort(candidates.begin(), candidates.end(),
                [](const auto& a, const auto& b) {
                  if (a.first != b.first) return a.first > b.first;
                  return a.second < b.second;
                });
      for (size_t i = 0; i < candidates.size() && i < 3; ++i) {
        missing.nearest.push_back(candidates[i].second);
      }
      report.missing.push_back(std::move(missing));
    }
  }
  return report;
}

std::string render_coverage_report(const CoverageReport& report) {
  std::ostringstream out;
  const size_t total = report.found.size() + report.missing.size();
  out << "terms: " << total << "  found: " << report.found.size()
      << "  missing: " << report.missing.size() << "  coverage: "
      << pct(report.coverage()) << "%\n\n";
  out << "Undetected defined terms | What we extracted\n";
  for (const auto& missing : report.missing) {
    out << missing.term << " | ";
    if (missing.nearest.empty()) {
      out << "nothing similar";
    } else {
      for (size_t i = 0; i < missing.nearest.size(); ++i) {
        if (i > 0) out << ", ";
        out << "'" << missing.nearest[i] << "'";
      }
    }
    out << '\n';
  }
  return out.str();
}

int sample_size(long population, double confidence, double margin) {
  if (population < 1) {
    throw InvalidArgumentError("population must be at least 1");
  }
  if (!(margin > 0.0 && margin < 1.0)) {
    throw InvalidArgumentError("margin must be in (0, 1)");
  }
  double z = 0.0;
  if (std::abs(confidence - 0.90) < 1e-9) {
    z = 1.645;
  } else if (std::abs(confidence - 0.95) < 1e-9) {
    z = 1.960;
  } else if (std::abs(confidence - 0.99) < 1e-9) {
    z = 2.576;
  } else {
    throw InvalidArgumentError("confidence must be 0.90, 0.95 or 0.99");
  }
  // Worst-case proportion 0.25, finite population correction.
  const double n0 = z * z * 0.25 / (margin * margin);
  const double corrected =
      n0 / (1.0 + (n0 - 1.0) / static_cast<double>(population));
  const long n = static_cast<long>(std::ceil(corrected));
  return static_cast<int>(std::min(n, population));
}

}  // namespace spantag
