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

// Command-line entry point. Every subcommand delegates to one library
// operation; all randomness flows from --seed and the resolved settings are
// echoed into each output artifact's header.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spantag/brat.hpp"
#include "spantag/codec.hpp"
#include "spantag/corpus.hpp"
#include "spantag/crf_training.hpp"
#include "spantag/errors.hpp"
#include "spantag/lexicon.hpp"
#include "spantag/lint.hpp"
#include "spantag/metrics.hpp"
#include "spantag/model_io.hpp"
#include "spantag/tagged_io.hpp"
#include "spantag/text.hpp"

namespace fs = std::filesystem;
using namespace spantag;

namespace {

constexpr const char* kVersion = "spantag 0.1.0";

using Settings = std::vector<std::pair<std::string, std::string>>;

std::string provenance(const std::string& command, const Settings& settings) {
  std::ostringstream out;
  out << "# " << kVersion << " " << command << '\n';
  for (const auto& [key, value] : settings) {
    out << "# " << key << "=" << value << '\n';
  }
  return out.str();
}

nlohmann::json provenance_json(const std::string& command,
                               const Settings& settings) {
  nlohmann::json j;
  j["type"] = "run_config";
  j["tool"] = kVersion;
  j["command"] = command;
  for (const auto& [key, value] : settings) j[key] = value;
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

// Output stream helper: file when a path is given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw IoError("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

TagsetConfig tagset_from_name(const std::string& name) {
  if (name == "12") return TagsetConfig::default_12();
  if (name == "16") return TagsetConfig::full_16();
  throw InvalidArgumentError("unknown tagset '" + name + "' (use 12 or 16)");
}

FeatureTemplateConfig features_from_name(const std::string& name) {
  if (name == "all") return FeatureTemplateConfig::all();
  if (name == "word") return FeatureTemplateConfig::word_identity();
  throw InvalidArgumentError("unknown feature set '" + name +
                             "' (use all or word)");
}

// A dataset argument is either a directory of BRAT pairs or a manifest of
// sentence ids resolved against --ann-dir.
std::vector<SentenceAnnotation> load_dataset(const std::string& path,
                                             const std::string& ann_dir) {
  if (fs::is_directory(path)) {
    std::vector<SentenceAnnotation> out;
    for (ParsedSentence& parsed : load_brat_dir(path)) {
      for (const std::string& warning : parsed.warnings) {
        std::cerr << "warning: " << parsed.annotation.sentence_id << ": "
                  << warning << '\n';
      }
      out.push_back(std::move(parsed.annotation));
    }
    return out;
  }
  if (ann_dir.empty()) {
    throw InvalidArgumentError("'" + path +
                               "' is a manifest; --ann-dir is required");
  }
  std::vector<SentenceAnnotation> all;
  for (ParsedSentence& parsed : load_brat_dir(ann_dir)) {
    all.push_back(std::move(parsed.annotation));
  }
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return apply_manifest(all, read_manifest(in));
}

std::vector<RawDocument> load_corpus(const std::vector<std::string>& paths) {
  std::vector<RawDocument> documents;
  for (const std::string& path : paths) {
    if (fs::is_directory(path)) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(path)) {
        if (entry.is_regular_file() && entry.path().extension() == ".txt") {
          files.push_back(entry.path());
        }
      }
      std::sort(files.begin(), files.end());
      for (const fs::path& file : files) {
        documents.push_back(
            RawDocument{file.stem().string(), read_file(file.string())});
      }
    } else {
      documents.push_back(
          RawDocument{fs::path(path).stem().string(), read_file(path)});
    }
  }
  return documents;
}

// ---------------------------------------------------------------------------
// train

struct TrainArgs {
  std::string train_path;
  std::string dev_path;
  std::string ann_dir;
  std::string out_path;
  std::string history_path;
  std::string tagset = "12";
  std::string features = "all";
  TrainConfig config;
};

int cmd_train(const TrainArgs& args) {
  const TagsetConfig tagset = tagset_from_name(args.tagset);
  const FeatureTemplateConfig features = features_from_name(args.features);
  const auto train_set = load_dataset(args.train_path, args.ann_dir);
  const auto dev_set = args.dev_path.empty()
                           ? std::vector<SentenceAnnotation>{}
                           : load_dataset(args.dev_path, args.ann_dir);

  const TrainResult result =
      train(train_set, dev_set, tagset, features, args.config);
  save_model(result.model, args.out_path);

  const Settings settings = {
      {"train", args.train_path},
      {"dev", args.dev_path},
      {"out", args.out_path},
      {"tagset", args.tagset},
      {"features", args.features},
      {"epochs", std::to_string(args.config.epochs)},
      {"learning_rate", std::to_string(args.config.learning_rate)},
      {"l2", std::to_string(args.config.l2_strength)},
      {"batch_size", std::to_string(args.config.batch_size)},
      {"dropout", std::to_string(args.config.feature_dropout)},
      {"threads", std::to_string(args.config.threads)},
      {"seed", std::to_string(args.config.seed)},
  };
  Output history(args.history_path);
  history.stream() << provenance("train", settings)
                   << "epoch\ttrain_nll\tdev_weighted_f1\n";
  for (const EpochRecord& record : result.history) {
    history.stream() << record.epoch << '\t' << record.train_nll << '\t'
                     << record.dev_weighted_f1 << '\n';
  }
  history.stream() << "# best_epoch=" << result.best_epoch << '\n';
  std::cerr << "model written to " << args.out_path << " (best epoch "
            << result.best_epoch << ")\n";
  return 0;
}

// ---------------------------------------------------------------------------
// tag

struct TagArgs {
  std::string model_path;
  std::vector<std::string> inputs;
  std::string format = "token";
  bool repair = false;
  std::string out_path;
};

int cmd_tag(const TagArgs& args) {
  const CrfModel model = load_model(args.model_path);
  const Settings settings = {
      {"model", args.model_path},
      {"format", args.format},
      {"repair", args.repair ? "true" : "false"},
  };

  std::vector<TaggedSentence> tagged;
  std::vector<SpanRecord> records;
  long repair_count = 0;

  for (const std::string& input : args.inputs) {
    const std::string text = read_file(input);
    const std::string stem = fs::path(input).stem().string();
    const auto ranges = split_sentences(text);
    for (size_t s = 0; s < ranges.size(); ++s) {
      const std::string sentence =
          text.substr(ranges[s].start, ranges[s].end - ranges[s].start);
      const std::vector<Token> tokens = tokenize(sentence);
      if (tokens.empty()) continue;
      std::vector<std::string> surfaces;
      surfaces.reserve(tokens.size());
      for (const Token& token : tokens) surfaces.push_back(token.surface);
      const std::string id = stem + "_s" + std::to_string(s);
      TagSequence tags = viterbi_tags(model, id, surfaces);

      if (args.format == "token") {
        TaggedSentence out;
        out.sentence_id = id;
        out.surfaces = std::move(surfaces);
        out.labels = tags.labels;
        tagged.push_back(std::move(out));
      } else {
        const DecodedSpans decoded =
            decode_tags(tags, model.tagset,
                        args.repair ? DecodeMode::Repair : DecodeMode::Strict);
        repair_count += static_cast<long>(decoded.repairs.size());
        SentenceAnnotation annotation;
        annotation.sentence_id = id;
        annotation.tokens = tokens;
        annotation.spans = decoded.spans;
        records.push_back(make_span_record(annotation, sentence));
      }
    }
  }

  Output out(args.out_path);
  if (args.format == "token") {
    out.stream() << provenance("tag", settings);
    write_token_tags(out.stream(), tagged);
  } else if (args.format == "spans") {
    out.stream() << provenance_json("tag", settings).dump() << '\n';
    write_span_records(out.stream(), records);
    if (repair_count > 0) {
      std::cerr << "applied " << repair_count << " decode repairs\n";
    }
  } else {
    throw InvalidArgumentError("unknown format '" + args.format +
                               "' (use token or spans)");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// eval

struct EvalArgs {
  std::string gold_path;
  std::string pred_path;
  std::string mode = "tags";
  std::string tagset = "12";
  std::string out_path;
  std::string json_path;
};

std::vector<TagSequence> load_tags_any(const std::string& path,
                                       const TagsetConfig& tagset) {
  std::vector<TagSequence> out;
  if (fs::is_directory(path)) {
    for (const ParsedSentence& parsed : load_brat_dir(path)) {
      out.push_back(encode_tags(parsed.annotation, tagset));
    }
    return out;
  }
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  for (const TaggedSentence& sentence : read_token_tags(in)) {
    out.push_back(TagSequence{sentence.sentence_id, sentence.labels});
  }
  return out;
}

std::vector<TokenSpan> load_spans_any(const std::string& path,
                                      const TagsetConfig& tagset) {
  std::vector<TokenSpan> spans;
  if (fs::is_directory(path)) {
    for (const ParsedSentence& parsed : load_brat_dir(path)) {
      for (const TokenSpan& span : parsed.annotation.spans) {
        spans.push_back(span);
      }
    }
    return spans;
  }
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  // Span-record JSONL or a token/tag file (decoded in repair mode).
  if (path.ends_with(".jsonl") || path.ends_with(".json")) {
    for (const SpanRecord& record : read_span_records(in)) {
      for (TokenSpan& span : record_token_spans(record)) {
        spans.push_back(std::move(span));
      }
    }
    return spans;
  }
  for (const TaggedSentence& sentence : read_token_tags(in)) {
    const TagSequence tags{sentence.sentence_id, sentence.labels};
    for (const TokenSpan& span :
         decode_tags(tags, tagset, DecodeMode::Repair).spans) {
      spans.push_back(span);
    }
  }
  return spans;
}

int cmd_eval(const EvalArgs& args) {
  const TagsetConfig tagset = tagset_from_name(args.tagset);
  const Settings settings = {
      {"gold", args.gold_path},
      {"pred", args.pred_path},
      {"mode", args.mode},
      {"tagset", args.tagset},
  };
  Output out(args.out_path);

  if (args.mode == "tags") {
    const auto gold = load_tags_any(args.gold_path, tagset);
    const auto pred = load_tags_any(args.pred_path, tagset);
    const TagReport report = tag_classification_report(gold, pred, tagset);
    out.stream() << provenance("eval", settings) << render_tag_report(report);
    if (!args.json_path.empty()) {
      nlohmann::json j = provenance_json("eval", settings);
      j["type"] = "tag_report";
      j["accuracy"] = report.accuracy;
      j["macro_f1"] = report.macro.f1;
      j["weighted_f1"] = report.weighted.f1;
      j["total_support"] = report.total_support;
      j["labels"] = nlohmann::json::array();
      for (const LabelMetrics& m : report.per_label) {
        j["labels"].push_back({{"label", label_name(m.label)},
                               {"precision", m.precision},
                               {"recall", m.recall},
                               {"f1", m.f1},
                               {"support", m.support}});
      }
      std::ofstream json_out(args.json_path);
      json_out << j.dump(2) << '\n';
    }
    return 0;
  }

  if (args.mode == "spans") {
    const auto gold = load_spans_any(args.gold_path, tagset);
    const auto pred = load_spans_any(args.pred_path, tagset);
    const SpanMatchReport report = span_match_report(gold, pred);
    out.stream() << provenance("eval", settings)
                 << render_span_match_report(report);
    return 0;
  }

  if (args.mode == "kappa-tags" || args.mode == "kappa-categories") {
    const auto a = load_tags_any(args.gold_path, tagset);
    const auto b = load_tags_any(args.pred_path, tagset);
    std::vector<std::string> labels_a;
    std::vector<std::string> labels_b;
    if (a.size() != b.size()) {
      throw AlignmentError("annotation sets differ in sentence count");
    }
    const bool categories = args.mode == "kappa-categories";
    for (size_t s = 0; s < a.size(); ++s) {
      for (TagLabel label : a[s].labels) {
        labels_a.push_back(categories
                               ? std::string(category_short_name(label.category))
                               : label_name(label));
      }
      for (TagLabel label : b[s].labels) {
        labels_b.push_back(categories
                               ? std::string(category_short_name(label.category))
                               : label_name(label));
      }
    }
    const double kappa = cohen_kappa(labels_a, labels_b);
    out.stream() << provenance("eval", settings) << "cohen_kappa=" << kappa
                 << '\n';
    return 0;
  }

  throw InvalidArgumentError(
      "unknown mode '" + args.mode +
      "' (use tags, spans, kappa-tags or kappa-categories)");
}

// ---------------------------------------------------------------------------
// coverage

struct CoverageArgs {
  std::string terms_path;
  std::string lexicon_path;
  bool plural_folding = true;
  std::string out_path;
  std::string json_path;
};

int cmd_coverage(const CoverageArgs& args) {
  const std::vector<std::string> terms = read_lines(args.terms_path);
  std::ifstream in(args.lexicon_path);
  if (!in) throw IoError("cannot open " + args.lexicon_path);
  const std::vector<LexiconEntry> lexicon = read_lexicon(in);
  NormalizeConfig normalize;
  normalize.plural_folding = args.plural_folding;
  const CoverageReport report =
      defined_term_coverage(terms, lexicon, normalize);

  const Settings settings = {
      {"terms", args.terms_path},
      {"lexicon", args.lexicon_path},
      {"plural_folding", args.plural_folding ? "true" : "false"},
  };
  Output out(args.out_path);
  out.stream() << provenance("coverage", settings)
               << render_coverage_report(report);
  if (!args.json_path.empty()) {
    nlohmann::json j = provenance_json("coverage", settings);
    j["type"] = "coverage_report";
    j["found"] = report.found.size();
    j["missing"] = nlohmann::json::array();
    for (const auto& missing : report.missing) {
      j["missing"].push_back(missing.term);
    }
    j["coverage"] = report.coverage();
    std::ofstream json_out(args.json_path);
    json_out << j.dump(2) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// lexicon

struct LexiconArgs {
  std::vector<std::string> tagged_paths;
  std::string out_path;
  std::string category = "Object";
};

int cmd_lexicon(const LexiconArgs& args) {
  const auto category = parse_category(args.category);
  if (!category) {
    throw InvalidArgumentError("unknown category '" + args.category + "'");
  }
  std::vector<SpanRecord> records;
  for (const std::string& path : args.tagged_paths) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    for (SpanRecord& record : read_span_records(in)) {
      records.push_back(std::move(record));
    }
  }
  const auto entries = build_lexicon(records, *category);

  const Settings settings = {
      {"category", args.category},
      {"records", std::to_string(records.size())},
  };
  Output out(args.out_path);
  std::vector<std::string> header;
  std::istringstream prov(provenance("lexicon", settings));
  std::string line;
  while (std::getline(prov, line)) header.push_back(line.substr(2));
  write_lexicon(out.stream(), entries, header);
  return 0;
}

// ---------------------------------------------------------------------------
// stats

struct StatsArgs {
  std::vector<std::string> corpus_paths;
  long growth_step = 0;
  bool vocab_include_punctuation = false;
  std::string out_path;
  std::string json_path;
};

int cmd_stats(const StatsArgs& args) {
  const std::vector<RawDocument> documents = load_corpus(args.corpus_paths);
  StatsConfig config;
  config.vocab_include_punctuation = args.vocab_include_punctuation;
  const CorpusStats stats = corpus_stats(documents, config);

  const Settings settings = {
      {"documents", std::to_string(documents.size())},
      {"growth_step", std::to_string(args.growth_step)},
      {"vocab_include_punctuation",
       args.vocab_include_punctuation ? "true" : "false"},
  };
  Output out(args.out_path);
  out.stream() << provenance("stats", settings) << render_corpus_stats(stats);

  std::vector<std::pair<long, long>> series;
  if (args.growth_step > 0) {
    series = vocab_growth(documents, args.growth_step, config);
    out.stream() << "vocab_growth (tokens_seen\tvocabulary):\n";
    for (const auto& [seen, vocab] : series) {
      out.stream() << seen << '\t' << vocab << '\n';
    }
  }
  if (!args.json_path.empty()) {
    nlohmann::json j = provenance_json("stats", settings);
    j["type"] = "corpus_stats";
    j["token_count"] = stats.token_count;
    j["word_token_count"] = stats.word_token_count;
    j["vocabulary_size"] = stats.vocabulary_size;
    j["sentence_count"] = stats.sentence_count;
    j["mean_sentence_length"] = stats.mean_sentence_length;
    j["std_dev_sentence_length"] = stats.std_dev_sentence_length;
    j["token_filter"] = stats.token_filter;
    if (!series.empty()) {
      j["vocab_growth"] = nlohmann::json::array();
      for (const auto& [seen, vocab] : series) {
        j["vocab_growth"].push_back({seen, vocab});
      }
    }
    std::ofstream json_out(args.json_path);
    json_out << j.dump(2) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// validate

struct ValidateArgs {
  std::string ann_dir;
  std::string tagset = "12";
  std::string out_path;
};

int cmd_validate(const ValidateArgs& args) {
  const TagsetConfig tagset = tagset_from_name(args.tagset);
  const Settings settings = {
      {"ann_dir", args.ann_dir},
      {"tagset", args.tagset},
  };
  Output out(args.out_path);
  out.stream() << provenance("validate", settings);

  long total = 0;
  for (const ParsedRawSentence& parsed : load_brat_dir_raw(args.ann_dir)) {
    for (const std::string& problem : parsed.problems) {
      out.stream() << parsed.annotation.sentence_id << "\tparse\t" << problem
                   << '\n';
      ++total;
    }
    for (const LintViolation& violation :
         lint_gold(parsed.annotation, tagset)) {
      out.stream() << parsed.annotation.sentence_id << '\t' << violation.rule
                   << "\t[" << violation.where.start << ","
                   << violation.where.end << ")\t" << violation.message
                   << '\n';
      ++total;
    }
  }
  out.stream() << "# violations=" << total << '\n';
  return total == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// sample

struct SampleArgs {
  std::string lexicon_path;
  std::string corpus_path;
  long n = 0;
  std::uint64_t seed = 1;
  std::string exclude_terms_path;
  std::string exclude_sentences_path;
  std::string out_path;
};

int cmd_sample(const SampleArgs& args) {
  std::ifstream lex_in(args.lexicon_path);
  if (!lex_in) throw IoError("cannot open " + args.lexicon_path);
  const std::vector<LexiconEntry> exported = read_lexicon(lex_in);
  std::unordered_set<std::string> wanted;
  for (const LexiconEntry& entry : exported) {
    wanted.insert(entry.normalized_form);
  }

  std::ifstream corpus_in(args.corpus_path);
  if (!corpus_in) throw IoError("cannot open " + args.corpus_path);
  const std::vector<SpanRecord> corpus = read_span_records(corpus_in);

  // The exported lexicon carries no occurrences; rebuild them from the
  // tagged corpus and keep the entries listed in the export.
  std::vector<LexiconEntry> lexicon;
  for (LexiconEntry& entry : build_lexicon(corpus)) {
    if (wanted.count(entry.normalized_form)) {
      lexicon.push_back(std::move(entry));
    }
  }

  std::unordered_set<std::string> excluded_forms;
  if (!args.exclude_terms_path.empty()) {
    for (const std::string& term : read_lines(args.exclude_terms_path)) {
      excluded_forms.insert(normalize_form(term));
    }
  }
  std::unordered_set<std::string> excluded_sentences;
  if (!args.exclude_sentences_path.empty()) {
    for (const std::string& id : read_lines(args.exclude_sentences_path)) {
      excluded_sentences.insert(id);
    }
  }

  const auto tasks = sample_for_judgement(lexicon, corpus, args.n, args.seed,
                                          excluded_forms, excluded_sentences);

  const Settings settings = {
      {"lexicon", args.lexicon_path},
      {"corpus", args.corpus_path},
      {"n", std::to_string(args.n)},
      {"seed", std::to_string(args.seed)},
      {"exclude_terms", args.exclude_terms_path},
      {"exclude_sentences", args.exclude_sentences_path},
  };
  Output out(args.out_path);
  out.stream() << provenance_json("sample", settings).dump() << '\n';
  write_judgement_tasks(out.stream(), tasks);
  return 0;
}

// ---------------------------------------------------------------------------
// split

struct SplitArgs {
  std::string ann_dir;
  std::vector<double> ratios = {0.6, 0.2, 0.2};
  std::uint64_t seed = 1;
  std::string out_dir;
};

int cmd_split(const SplitArgs& args) {
  if (args.ratios.size() != 3) {
    throw InvalidArgumentError("--ratios needs three values");
  }
  std::vector<SentenceAnnotation> annotations;
  for (ParsedSentence& parsed : load_brat_dir(args.ann_dir)) {
    annotations.push_back(std::move(parsed.annotation));
  }
  const DatasetSplit split = split_dataset(
      annotations, {args.ratios[0], args.ratios[1], args.ratios[2]},
      args.seed);

  fs::create_directories(args.out_dir);
  const Settings settings = {
      {"ann_dir", args.ann_dir},
      {"seed", std::to_string(args.seed)},
      {"ratios", std::to_string(args.ratios[0]) + "," +
                     std::to_string(args.ratios[1]) + "," +
                     std::to_string(args.ratios[2])},
  };
  const auto write_split = [&](const char* name,
                               const std::vector<SentenceAnnotation>& part) {
    std::ofstream out(fs::path(args.out_dir) / (std::string(name) + ".ids"));
    out << provenance("split", settings);
    write_manifest(out, part);
  };
  write_split("train", split.train);
  write_split("dev", split.dev);
  write_split("test", split.test);
  std::cerr << "split " << annotations.size() << " sentences into "
            << split.train.size() << "/" << split.dev.size() << "/"
            << split.test.size() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shallow-parsing toolkit for regulation text: discontiguous "
               "span tagging, CRF training, evaluation and lexicon export"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.set_config("--config", "", "INI config file ([subcommand] sections)");

  TrainArgs train_args;
  auto* train_cmd = app.add_subcommand(
      "train", "Train a CRF tagger on gold annotations");
  train_cmd->add_option("--train", train_args.train_path,
                        "BRAT directory or split manifest")->required();
  train_cmd->add_option("--dev", train_args.dev_path,
                        "dev set (BRAT directory or manifest)");
  train_cmd->add_option("--ann-dir", train_args.ann_dir,
                        "BRAT directory manifests resolve against");
  train_cmd->add_option("--out", train_args.out_path, "model output path")
      ->required();
  train_cmd->add_option("--history", train_args.history_path,
                        "per-epoch history output (default stdout)");
  train_cmd->add_option("--seed", train_args.config.seed, "random seed");
  train_cmd->add_option("--epochs", train_args.config.epochs, "epochs");
  train_cmd->add_option("--learning-rate", train_args.config.learning_rate,
                        "learning rate");
  train_cmd->add_option("--l2", train_args.config.l2_strength, "l2 strength");
  train_cmd->add_option("--batch-size", train_args.config.batch_size,
                        "minibatch size");
  train_cmd->add_option("--dropout", train_args.config.feature_dropout,
                        "feature dropout probability");
  double clip = 0.0;
  auto* clip_opt = train_cmd->add_option("--clip", clip,
                                         "gradient clip (global L2 norm)");
  train_cmd->add_option("--threads", train_args.config.threads,
                        "gradient accumulation chunks");
  train_cmd->add_option("--tagset", train_args.tagset, "12 or 16 labels");
  train_cmd->add_option("--features", train_args.features,
                        "feature templates: all or word");

  TagArgs tag_args;
  auto* tag_cmd =
      app.add_subcommand("tag", "Tag plain text files with a trained model");
  tag_cmd->add_option("--model", tag_args.model_path, "model file")
      ->required();
  tag_cmd->add_option("--input", tag_args.inputs, "plain text file(s)")
      ->required();
  tag_cmd->add_option("--format", tag_args.format, "token or spans");
  tag_cmd->add_flag("--repair", tag_args.repair,
                    "repair malformed predicted sequences while decoding");
  tag_cmd->add_option("--out", tag_args.out_path, "output path");

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand(
      "eval", "Evaluate predictions against gold (tags, spans or kappa)");
  eval_cmd->add_option("--gold", eval_args.gold_path,
                       "BRAT dir, token/tag file or span records")->required();
  eval_cmd->add_option("--pred", eval_args.pred_path, "same formats as --gold")
      ->required();
  eval_cmd->add_option("--mode", eval_args.mode,
                       "tags | spans | kappa-tags | kappa-categories");
  eval_cmd->add_option("--tagset", eval_args.tagset, "12 or 16 labels");
  eval_cmd->add_option("--out", eval_args.out_path, "report output path");
  eval_cmd->add_option("--json", eval_args.json_path,
                       "machine-readable report path");

  CoverageArgs coverage_args;
  auto* coverage_cmd = app.add_subcommand(
      "coverage", "Defined-term coverage of a predicted lexicon");
  coverage_cmd->add_option("--terms", coverage_args.terms_path,
                           "defined terms, one per line")->required();
  coverage_cmd->add_option("--lexicon", coverage_args.lexicon_path,
                           "lexicon file")->required();
  coverage_cmd->add_flag("--plural-folding,!--no-plural-folding",
                         coverage_args.plural_folding,
                         "fold plurals before comparing (default on)");
  coverage_cmd->add_option("--out", coverage_args.out_path, "report path");
  coverage_cmd->add_option("--json", coverage_args.json_path,
                           "machine-readable report path");

  LexiconArgs lexicon_args;
  auto* lexicon_cmd = app.add_subcommand(
      "lexicon", "Aggregate tagged span records into a lexicon");
  lexicon_cmd->add_option("--tagged", lexicon_args.tagged_paths,
                          "span-record files from 'tag --format spans'")
      ->required();
  lexicon_cmd->add_option("--out", lexicon_args.out_path, "lexicon path");
  lexicon_cmd->add_option("--category", lexicon_args.category,
                          "span category to aggregate");

  StatsArgs stats_args;
  auto* stats_cmd =
      app.add_subcommand("stats", "Corpus statistics and vocabulary growth");
  stats_cmd->add_option("--corpus", stats_args.corpus_paths,
                        "text files or directories")->required();
  stats_cmd->add_option("--growth-step", stats_args.growth_step,
                        "emit a vocabulary growth point every N tokens");
  stats_cmd->add_flag("--vocab-punctuation",
                      stats_args.vocab_include_punctuation,
                      "count punctuation towards the vocabulary");
  stats_cmd->add_option("--out", stats_args.out_path, "report path");
  stats_cmd->add_option("--json", stats_args.json_path,
                        "machine-readable report path");

  ValidateArgs validate_args;
  auto* validate_cmd = app.add_subcommand(
      "validate", "Lint gold annotations against the guidelines");
  validate_cmd->add_option("--ann-dir", validate_args.ann_dir,
                           "BRAT directory")->required();
  validate_cmd->add_option("--tagset", validate_args.tagset, "12 or 16");
  validate_cmd->add_option("--out", validate_args.out_path, "report path");

  SampleArgs sample_args;
  auto* sample_cmd = app.add_subcommand(
      "sample", "Export judgement tasks for human annotation");
  sample_cmd->add_option("--lexicon", sample_args.lexicon_path,
                         "lexicon file")->required();
  sample_cmd->add_option("--corpus", sample_args.corpus_path,
                         "tagged span records")->required();
  sample_cmd->add_option("--n", sample_args.n, "number of tasks")->required();
  sample_cmd->add_option("--seed", sample_args.seed, "random seed");
  sample_cmd->add_option("--exclude-terms", sample_args.exclude_terms_path,
                         "terms to exclude, one per line");
  sample_cmd->add_option("--exclude-sentences",
                         sample_args.exclude_sentences_path,
                         "sentence ids to exclude, one per line");
  sample_cmd->add_option("--out", sample_args.out_path, "task file path");

  SplitArgs split_args;
  auto* split_cmd = app.add_subcommand(
      "split", "Write train/dev/test manifests for a gold directory");
  split_cmd->add_option("--ann-dir", split_args.ann_dir, "BRAT directory")
      ->required();
  split_cmd->add_option("--ratios", split_args.ratios,
                        "train dev test ratios")->expected(3);
  split_cmd->add_option("--seed", split_args.seed, "random seed");
  split_cmd->add_option("--out-dir", split_args.out_dir,
                        "manifest output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*train_cmd) {
      if (clip_opt->count() > 0) train_args.config.gradient_clip = clip;
      return cmd_train(train_args);
    }
    if (*tag_cmd) return cmd_tag(tag_args);
    if (*eval_cmd) return cmd_eval(eval_args);
    if (*coverage_cmd) return cmd_coverage(coverage_args);
    if (*lexicon_cmd) return cmd_lexicon(lexicon_args);
    if (*stats_cmd) return cmd_stats(stats_args);
    if (*validate_cmd) return cmd_validate(validate_args);
    if (*sample_cmd) return cmd_sample(sample_args);
    if (*split_cmd) return cmd_split(split_args);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvalidArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
