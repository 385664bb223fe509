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

#include "spantag/brat.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "spantag/errors.hpp"

namespace spantag {

namespace {

struct StandoffEntity {
  std::string id;
  SpanCategory category = SpanCategory::Object;
  std::vector<CharRange> fragments;
  std::string surface;
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
    pos = nl + 1;
    if (nl == text.size()) break;
  }
  return lines;
}

bool parse_int(std::string_view s, int* out) {
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, *out);
  return ec == std::errc() && ptr == end;
}

// Parses one T-line. Returns false for non-entity lines. Throws the typed
// errors in strict mode; in lenient mode records a problem and returns
// false (or degrades, for an unknown type, to skipping the line).
bool parse_entity_line(std::string_view line, std::string_view txt,
                       bool strict, StandoffEntity* out,
                       std::vector<std::string>* problems) {
  if (line.empty() || line[0] != 'T') return false;

  auto fail = [&](const std::string& what) -> bool {
    if (strict) throw MalformedLineError(what + ": '" + std::string(line) + "'");
    problems->push_back(what + ": '" + std::string(line) + "'");
    return false;
  };

  const size_t tab1 = line.find('\t');
  if (tab1 == std::string_view::npos) return fail("missing tab after id");
  const size_t tab2 = line.find('\t', tab1 + 1);
  if (tab2 == std::string_view::npos) return fail("missing surface field");
  out->id = std::string(line.substr(0, tab1));
  out->surface = std::string(line.substr(tab2 + 1));

  std::string_view middle = line.substr(tab1 + 1, tab2 - tab1 - 1);
  const size_t space = middle.find(' ');
  if (space == std::string_view::npos) return fail("missing offsets");
  const std::string_view type_name = middle.substr(0, space);
  const auto category = parse_category(type_name);
  if (!category) {
    if (strict) {
      throw UnknownTypeError("unknown span type '" + std::string(type_name) +
                             "' in line '" + std::string(line) + "'");
    }
    problems->push_back("unknown span type '" + std::string(type_name) + "'");
    return false;
  }
  out->category = *category;

  // Fragments are ';'-separated "start end" pairs.
  std::string_view offsets = middle.substr(space + 1);
  out->fragments.clear();
  size_t pos = 0;
  while (pos <= offsets.size()) {
    size_t semi = offsets.find(';', pos);
    if (semi == std::string_view::npos) semi = offsets.size();
    std::string_view pair = offsets.substr(pos, semi - pos);
    const size_t sp = pair.find(' ');
    int start = 0;
    int end = 0;
    if (sp == std::string_view::npos ||
        !parse_int(pair.substr(0, sp), &start) ||
        !parse_int(pair.substr(sp + 1), &end)) {
      return fail("bad offset pair '" + std::string(pair) + "'");
    }
    if (start >= end) return fail("empty or inverted fragment");
    if (start < 0 || end > static_cast<int>(txt.size())) {
      return fail("fragment outside text bounds");
    }
    out->fragments.push_back(CharRange{start, end});
    pos = semi + 1;
    if (semi == offsets.size()) break;
  }
  if (out->fragments.empty()) return fail("no fragments");

  std::sort(out->fragments.begin(), out->fragments.end(),
            [](const CharRange& a, const CharRange& b) {
              return a.start < b.start;
            });
  for (size_t i = 1; i < out->fragments.size(); ++i) {
    if (out->fragments[i].start < out->fragments[i - 1].end) {
      return fail("overlapping fragments");
    }
  }

  if (strict && out->fragments.size() > 2) {
    throw FragmentCountError("entity " + out->id + " has " +
                             std::to_string(out->fragments.size()) +
                             " fragments, at most two are allowed");
  }
  return true;
}

void check_surface(const StandoffEntity& entity, std::string_view txt,
                   std::vector<std::string>* warnings) {
  std::string joined;
  for (const CharRange& frag : entity.fragments) {
    if (!joined.empty()) joined += ' ';
    joined += std::string(txt.substr(frag.start, frag.end - frag.start));
  }
  if (!entity.surface.empty() && entity.surface != joined) {
    warnings->push_back("entity " + entity.id + ": surface field '" +
                        entity.surface + "' does not match text '" + joined +
                        "'");
  }
}

}  // namespace

std::vector<TokenRange> align_char_spans(const std::vector<Token>& tokens,
                                         const std::vector<CharRange>& fragments,
                                         AlignMode mode,
                                         std::vector<std::string>* log) {
  std::vector<TokenRange> out;
  out.reserve(fragments.size());
  for (const CharRange& frag : fragments) {
    int first = -1;
    int last = -1;
    bool boundary_inside = false;
    for (int t = 0; t < static_cast<int>(tokens.size()); ++t) {
      const Token& tok = tokens[t];
      if (std::max(frag.start, tok.char_start) <
          std::min(frag.end, tok.char_end)) {
        if (first < 0) first = t;
        last = t;
        if (frag.start > tok.char_start && frag.start < tok.char_end)
          boundary_inside = true;
        if (frag.end > tok.char_start && frag.end < tok.char_end)
          boundary_inside = true;
      }
    }
    if (first < 0) {
      if (mode == AlignMode::Strict) {
        throw BoundaryMismatchError(
            "fragment [" + std::to_string(frag.start) + "," +
            std::to_string(frag.end) + ") covers no token");
      }
      // Empty token range at the insertion point; the linter reports it.
      int at = static_cast<int>(tokens.size());
      for (int t = 0; t < static_cast<int>(tokens.size()); ++t) {
        if (tokens[t].char_start >= frag.end) { at = t; break; }
      }
      if (log) {
        log->push_back("fragment [" + std::to_string(frag.start) + "," +
                       std::to_string(frag.end) + ") covers no token");
      }
      out.push_back(TokenRange{at, at});
      continue;
    }
    if (boundary_inside) {
      if (mode == AlignMode::Strict) {
        throw BoundaryMismatchError(
            "fragment [" + std::to_string(frag.start) + "," +
            std::to_string(frag.end) + ") splits a token");
      }
      if (log) {
        log->push_back("fragment [" + std::to_string(frag.start) + "," +
                       std::to_string(frag.end) + ") widened to tokens [" +
                       std::to_string(first) + "," + std::to_string(last + 1) +
                       ")");
      }
    }
    out.push_back(TokenRange{first, last + 1});
  }
  return out;
}

ParsedSentence parse_brat(std::string_view ann_text, std::string_view txt_text,
                          std::string_view sentence_id, AlignMode align) {
  ParsedSentence out;
  out.annotation.sentence_id = std::string(sentence_id);
  out.annotation.tokens = tokenize(txt_text);

  for (std::string_view line : split_lines(ann_text)) {
    StandoffEntity entity;
    if (!parse_entity_line(line, txt_text, /*strict=*/true, &entity,
                           &out.warnings)) {
      continue;
    }
    check_surface(entity, txt_text, &out.warnings);
    std::vector<TokenRange> ranges = align_char_spans(
        out.annotation.tokens, entity.fragments, align, &out.warnings);

    TokenSpan span;
    span.category = entity.category;
    span.sentence_id = out.annotation.sentence_id;
    span.head = ranges[0];
    if (ranges.size() == 2) {
      if (ranges[1].start <= ranges[0].end) {
        // Adjacent (or, after snapping, overlapping) segments are
        // semantically contiguous; merge them.
        span.head.end = std::max(ranges[0].end, ranges[1].end);
        out.warnings.push_back("entity " + entity.id +
                               ": adjacent head/tail merged into one "
                               "contiguous span");
      } else {
        span.tail = ranges[1];
      }
    }
    out.annotation.spans.push_back(std::move(span));
  }
  return out;
}

ParsedRawSentence parse_brat_raw(std::string_view ann_text,
                                 std::string_view txt_text,
                                 std::string_view sentence_id) {
  ParsedRawSentence out;
  out.annotation.sentence_id = std::string(sentence_id);
  out.annotation.tokens = tokenize(txt_text);

  for (std::string_view line : split_lines(ann_text)) {
    StandoffEntity entity;
    if (!parse_entity_line(line, txt_text, /*strict=*/false, &entity,
                           &out.problems)) {
      continue;
    }
    check_surface(entity, txt_text, &out.problems);
    RawSpan span;
    span.category = entity.category;
    span.source_id = entity.id;
    span.segments = align_char_spans(out.annotation.tokens, entity.fragments,
                                     AlignMode::Snap, &out.problems);
    out.annotation.spans.push_back(std::move(span));
  }
  return out;
}

std::string serialize_brat(const SentenceAnnotation& annotation,
                           std::string_view txt_text) {
  // Deterministic output order: by first token index.
  std::vector<const TokenSpan*> ordered;
  ordered.reserve(annotation.spans.size());
  for (const TokenSpan& span : annotation.spans) ordered.push_back(&span);
  std::sort(ordered.begin(), ordered.end(),
            [](const TokenSpan* a, const TokenSpan* b) {
              return a->head.start < b->head.start;
            });

  auto char_range = [&](const TokenRange& seg) {
    return CharRange{annotation.tokens[seg.start].char_start,
                     annotation.tokens[seg.end - 1].char_end};
  };

  std::ostringstream out;
  int next_id = 1;
  for (const TokenSpan* span : ordered) {
    const CharRange head = char_range(span->head);
    out << 'T' << next_id++ << '\t' << category_name(span->category) << ' '
        << head.start << ' ' << head.end;
    std::string surface =
        std::string(txt_text.substr(head.start, head.end - head.start));
    if (span->tail) {
      const CharRange tail = char_range(*span->tail);
      out << ';' << tail.start << ' ' << tail.end;
      surface += ' ';
      surface += std::string(txt_text.substr(tail.start, tail.end - tail.start));
    }
    out << '\t' << surface << '\n';
  }
  return out.str();
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::filesystem::path> ann_files_sorted(const std::string& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".ann") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

std::vector<ParsedSentence> load_brat_dir(const std::string& dir,
                                          AlignMode align) {
  std::vector<ParsedSentence> out;
  for (const auto& ann_path : ann_files_sorted(dir)) {
    std::filesystem::path txt_path = ann_path;
    txt_path.replace_extension(".txt");
    const std::string ann = read_file(ann_path);
    const std::string txt = read_file(txt_path);
    out.push_back(parse_brat(ann, txt, ann_path.stem().string(), align));
  }
  return out;
}

std::vector<ParsedRawSentence> load_brat_dir_raw(const std::string& dir) {
  std::vector<ParsedRawSentence> out;
  for (const auto& ann_path : ann_files_sorted(dir)) {
    std::filesystem::path txt_path = ann_path;
    txt_path.replace_extension(".txt");
    const std::string ann = read_file(ann_path);
    const std::string txt = read_file(txt_path);
    out.push_back(parse_brat_raw(ann, txt, ann_path.stem().string()));
  }
  return out;
}

}  // namespace spantag
