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

#include "spantag/features.hpp"

#include <cctype>

#include "spantag/text.hpp"

namespace spantag {

FeatureTemplateConfig FeatureTemplateConfig::word_identity() {
  FeatureTemplateConfig config;
  config.prev_word = config.next_word = false;
  config.prefixes = config.suffixes = false;
  config.shape = config.is_punct = config.has_digit = false;
  config.prev_bigram = config.next_bigram = false;
  return config;
}

std::uint16_t FeatureTemplateConfig::bits() const {
  std::uint16_t b = 0;
  const bool flags[] = {word,     prev_word, next_word, prefixes,
                        suffixes, shape,     is_punct,  has_digit,
                        prev_bigram, next_bigram};
  for (int i = 0; i < 10; ++i) {
    if (flags[i]) b |= static_cast<std::uint16_t>(1u << i);
  }
  return b;
}

FeatureTemplateConfig FeatureTemplateConfig::from_bits(std::uint16_t bits) {
  FeatureTemplateConfig config;
  bool* flags[] = {&config.word,     &config.prev_word, &config.next_word,
                   &config.prefixes, &config.suffixes,  &config.shape,
                   &config.is_punct, &config.has_digit, &config.prev_bigram,
                   &config.next_bigram};
  for (int i = 0; i < 10; ++i) {
    *flags[i] = (bits & (1u << i)) != 0;
  }
  return config;
}

std::string word_shape(std::string_view surface) {
  std::string shape;
  shape.reserve(surface.size());
  for (char c : surface) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isdigit(u)) {
      shape += 'd';
    } else if (std::islower(u)) {
      shape += 'x';
    } else if (std::isupper(u)) {
      shape += 'X';
    } else {
      shape += c;
    }
  }
  return shape;
}

std::vector<std::string> extract_features(
    const std::vector<std::string>& surfaces, int position,
    const FeatureTemplateConfig& config) {
  const std::string& cur = surfaces[position];
  const std::string lower = ascii_lowercase(cur);
  const std::string prev = position > 0
                               ? ascii_lowercase(surfaces[position - 1])
                               : std::string("BOS");
  const std::string next = position + 1 < static_cast<int>(surfaces.size())
                               ? ascii_lowercase(surfaces[position + 1])
                               : std::string("EOS");

  std::vector<std::string> features;
  if (config.word) features.push_back("w0=" + lower);
  if (config.prev_word) features.push_back("w-1=" + prev);
  if (config.next_word) features.push_back("w+1=" + next);
  if (config.prefixes) {
    for (size_t k = 1; k <= 3 && k <= lower.size(); ++k) {
      features.push_back("pre" + std::to_string(k) + "=" + lower.substr(0, k));
    }
  }
  if (config.suffixes) {
    for (size_t k = 1; k <= 3 && k <= lower.size(); ++k) {
      features.push_back("suf" + std::to_string(k) + "=" +
                         lower.substr(lower.size() - k));
    }
  }
  if (config.shape) features.push_back("shape=" + word_shape(cur));
  if (config.is_punct && is_punctuation_token(cur)) {
    features.push_back("ispunct=1");
  }
  if (config.has_digit) {
    for (char c : cur) {
      if (std::isdigit(static_cast<unsigned char>(c))) {
        features.push_back("hasdigit=1");
        break;
      }
    }
  }
  if (config.prev_bigram) features.push_back("w-1|w0=" + prev + "|" + lower);
  if (config.next_bigram) features.push_back("w0|w+1=" + lower + "|" + next);
  return features;
}

}  // namespace spantag
