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

#ifndef SPANTAG_FEATURES_HPP_
#define SPANTAG_FEATURES_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace spantag {

// The feature templates behind the emission scores. Window radius is 1;
// sentence boundaries use the sentinel neighbours "BOS"/"EOS". The set is
// fixed at training time and serialized with the model.
struct FeatureTemplateConfig {
  bool word = true;          // "w0=roof"
  bool prev_word = true;     // "w-1=BOS"
  bool next_word = true;     // "w+1=covering"
  bool prefixes = true;      // "pre1=r" .. "pre3=roo" (skipped for short words)
  bool suffixes = true;      // "suf1=f" .. "suf3=oof"
  bool shape = true;         // "shape=dddxx" (x/X letters, d digits, rest kept)
  bool is_punct = true;      // "ispunct=1"
  bool has_digit = true;     // "hasdigit=1"
  bool prev_bigram = true;   // "w-1|w0=bos|roof"
  bool next_bigram = true;   // "w0|w+1=roof|covering"

  static FeatureTemplateConfig all() { return FeatureTemplateConfig{}; }
  // Only the current-word template; used for memorization checks.
  static FeatureTemplateConfig word_identity();

  std::uint16_t bits() const;
  static FeatureTemplateConfig from_bits(std::uint16_t bits);
  bool operator==(const FeatureTemplateConfig&) const = default;
};

std::string word_shape(std::string_view surface);

std::vector<std::string> extract_features(
    const std::vector<std::string>& surfaces, int position,
    const FeatureTemplateConfig& config);

}  // namespace spantag

#endif  // SPANTAG_FEATURES_HPP_
