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

#include "spantag/tagged_io.hpp"

#include <istream>
#include <ostream>

#include <json.hpp>

#include "spantag/errors.hpp"

namespace spantag {

void write_token_tags(std::ostream& out,
                      const std::vector<TaggedSentence>& sentences) {
  bool first = true;
  for (const TaggedSentence& sentence : sentences) {
    if (!first) out << '\n';
    first = false;
    for (size_t t = 0; t < sentence.surfaces.size(); ++t) {
      out << sentence.surfaces[t] << '\t' << label_name(sentence.labels[t])
          << '\n';
    }
  }
}

std::vector<TaggedSentence> read_token_tags(std::istream& in) {
  std::vector<TaggedSentence> out;
  TaggedSentence current;
  int sentence_no = 0;
  std::string line;

  auto flush = [&]() {
    if (current.surfaces.empty()) return;
    current.sentence_id = "s" + std::to_string(sentence_no++);
    out.push_back(std::move(current));
    current = TaggedSentence{};
  };

  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') continue;  // provenance header
    const size_t tab = line.rfind('\t');
    if (tab == std::string::npos) {
      throw MalformedLineError("expected token<TAB>tag: '" + line + "'");
    }
    const auto label = parse_label(line.substr(tab + 1));
    if (!label) {
      throw MalformedLineError("unknown tag in line: '" + line + "'");
    }
    current.surfaces.push_back(line.substr(0, tab));
    current.labels.push_back(*label);
  }
  flush();
  return out;
}

namespace {

std::string collapse_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool in_space = false;
  for (char c : text) {
    const bool space = c == ' ' || c == '\t' || c == '\n' || c == '\r';
    if (space) {
      in_space = true;
    } else {
      if (in_space && !out.empty()) out += ' ';
      in_space = false;
      out += c;
    }
  }
  return out;
}

nlohmann::json span_to_json(const SpanRecordSpan& span) {
  nlohmann::json j;
  j["category"] = std::string(category_name(span.category));
  j["head"] = {span.head.start, span.head.end};
  j["char_head"] = {span.char_head.start, span.char_head.end};
  if (span.tail) {
    j["tail"] = {span.tail->start, span.tail->end};
    j["char_tail"] = {span.char_tail->start, span.char_tail->end};
  }
  j["surface"] = span.surface;
  return j;
}

SpanRecordSpan span_from_json(const nlohmann::json& j) {
  SpanRecordSpan span;
  const auto category = parse_category(j.at("category").get<std::string>());
  if (!category) {
    throw MalformedLineError("unknown category in span record");
  }
  span.category = *category;
  span.head = TokenRange{j.at("head")[0].get<int>(), j.at("head")[1].get<int>()};
  span.char_head = CharRange{j.at("char_head")[0].get<int>(),
                             j.at("char_head")[1].get<int>()};
  if (j.contains("tail")) {
    span.tail = TokenRange{j.at("tail")[0].get<int>(), j.at("tail")[1].get<int>()};
    span.char_tail = CharRange{j.at("char_tail")[0].get<int>(),
                               j.at("char_tail")[1].get<int>()};
  }
  span.surface = j.at("surface").get<std::string>();
  return span;
}

}  // namespace

SpanRecord make_span_record(const SentenceAnnotation& annotation,
                            std::string_view text) {
  SpanRecord record;
  record.sentence_id = annotation.sentence_id;
  record.text = std::string(text);

  auto char_range = [&](const TokenRange& seg) {
    return CharRange{annotation.tokens[seg.start].char_start,
                     annotation.tokens[seg.end - 1].char_end};
  };
  auto slice = [&](const CharRange& r) {
    return collapse_whitespace(text.substr(r.start, r.end - r.start));
  };

  for (const TokenSpan& span : annotation.spans) {
    SpanRecordSpan rec;
    rec.category = span.category;
    rec.head = span.head;
    rec.char_head = char_range(span.head);
    rec.surface = slice(rec.char_head);
    if (span.tail) {
      rec.tail = span.tail;
      rec.char_tail = char_range(*span.tail);
      rec.surface += ' ';
      rec.surface += slice(*rec.char_tail);
    }
    record.spans.push_back(std::move(rec));
  }
  return record;
}

void write_span_records(std::ostream& out,
                        const std::vector<SpanRecord>& records) {
  for (const SpanRecord& record : records) {
    nlohmann::json j;
    j["sentence_id"] = record.sentence_id;
    j["text"] = record.text;
    j["spans"] = nlohmann::json::array();
    for (const SpanRecordSpan& span : record.spans) {
      j["spans"].push_back(span_to_json(span));
    }
    out << j.dump() << '\n';
  }
}

std::vector<SpanRecord> read_span_records(std::istream& in) {
  std::vector<SpanRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw MalformedLineError("bad span record: " + std::string(e.what()));
    }
    if (j.contains("type") && j["type"] == "run_config") continue;
    SpanRecord record;
    try {
      record.sentence_id = j.at("sentence_id").get<std::string>();
      record.text = j.value("text", std::string());
      for (const auto& span : j.at("spans")) {
        record.spans.push_back(span_from_json(span));
      }
    } catch (const nlohmann::json::exception& e) {
      throw MalformedLineError("bad span record: " + std::string(e.what()));
    }
    out.push_back(std::move(record));
  }
  return out;
}

std::vector<TokenSpan> record_token_spans(const SpanRecord& record) {
  std::vector<TokenSpan> spans;
  spans.reserve(record.spans.size());
  for (const SpanRecordSpan& span : record.spans) {
    TokenSpan ts;
    ts.category = span.category;
    ts.head = span.head;
    ts.tail = span.tail;
    ts.sentence_id = record.sentence_id;
    spans.push_back(std::move(ts));
  }
  return spans;
}

}  // namespace spantag
