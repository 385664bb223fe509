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

#include "spantag/span_types.hpp"

#include <algorithm>
#include <cctype>

namespace spantag {

namespace {

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

}  // namespace

std::string_view category_name(SpanCategory cat) {
  switch (cat) {
    case SpanCategory::Object: return "Object";
    case SpanCategory::Action: return "Action";
    case SpanCategory::Discourse: return "Discourse";
    case SpanCategory::Functional: return "Functional";
  }
  return "Object";
}

std::string_view category_short_name(SpanCategory cat) {
  switch (cat) {
    case SpanCategory::Object: return "obj";
    case SpanCategory::Action: return "act";
    case SpanCategory::Discourse: return "dis";
    case SpanCategory::Functional: return "func";
  }
  return "obj";
}

std::optional<SpanCategory> parse_category(std::string_view name) {
  const std::string lower = ascii_lower(name);
  for (SpanCategory cat : kAllCategories) {
    if (lower == ascii_lower(category_name(cat)) ||
        lower == category_short_name(cat)) {
      return cat;
    }
  }
  return std::nullopt;
}

std::string_view position_name(TagPosition pos) {
  switch (pos) {
    case TagPosition::BH: return "BH";
    case TagPosition::IH: return "IH";
    case TagPosition::BD: return "BD";
    case TagPosition::ID: return "ID";
  }
  return "BH";
}

std::string label_name(TagLabel label) {
  std::string out(position_name(label.position));
  out += '-';
  out += category_short_name(label.category);
  return out;
}

std::optional<TagLabel> parse_label(std::string_view name) {
  const auto dash = name.find('-');
  if (dash == std::string_view::npos) return std::nullopt;
  const std::string_view pos_part = name.substr(0, dash);
  const std::string_view cat_part = name.substr(dash + 1);
  std::optional<TagPosition> pos;
  for (TagPosition p :
       {TagPosition::BH, TagPosition::IH, TagPosition::BD, TagPosition::ID}) {
    if (pos_part == position_name(p)) pos = p;
  }
  if (!pos) return std::nullopt;
  const auto cat = parse_category(cat_part);
  if (!cat) return std::nullopt;
  return TagLabel{*pos, *cat};
}

TagsetConfig TagsetConfig::default_12() {
  return TagsetConfig({true, true, false, false});
}

TagsetConfig TagsetConfig::full_16() {
  return TagsetConfig({true, true, true, true});
}

TagsetConfig::TagsetConfig(std::array<bool, kNumCategories> allow_discontiguous)
    : allow_disc_(allow_discontiguous) {
  index_.fill(-1);
  // Canonical order: category-major (Object, Action, Discourse, Functional),
  // positions BH, IH, BD, ID within each category. This matches the
  // per-tag report row order.
  for (SpanCategory cat : kAllCategories) {
    for (TagPosition pos :
         {TagPosition::BH, TagPosition::IH, TagPosition::BD, TagPosition::ID}) {
      const bool disc = pos == TagPosition::BD || pos == TagPosition::ID;
      if (disc && !allow_disc_[static_cast<int>(cat)]) continue;
      index_[static_cast<int>(pos) * 4 + static_cast<int>(cat)] =
          static_cast<int>(labels_.size());
      labels_.push_back(TagLabel{pos, cat});
    }
  }
}

int TagsetConfig::label_index(TagLabel label) const {
  return index_[static_cast<int>(label.position) * 4 +
                static_cast<int>(label.category)];
}

bool TagsetConfig::start_allowed(int label) const {
  const TagPosition pos = labels_[label].position;
  return pos == TagPosition::BH || pos == TagPosition::BD;
}

bool TagsetConfig::transition_allowed(int from, int to) const {
  const TagLabel& dst = labels_[to];
  if (dst.position == TagPosition::BH || dst.position == TagPosition::BD) {
    return true;
  }
  const TagLabel& src = labels_[from];
  if (src.category != dst.category) return false;
  if (dst.position == TagPosition::IH) {
    return src.position == TagPosition::BH || src.position == TagPosition::IH;
  }
  // dst.position == TagPosition::ID
  return src.position == TagPosition::BD || src.position == TagPosition::ID;
}

}  // namespace spantag
