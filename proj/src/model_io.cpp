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

#include "spantag/model_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "spantag/errors.hpp"

namespace spantag {

namespace {

constexpr char kMagic[8] = {'S', 'P', 'T', 'A', 'G', 'M', 'D', 'L'};
constexpr char kTrailer[4] = {'E', 'N', 'D', '.'};
constexpr std::uint32_t kVersion = 1;
constexpr std::uint8_t kFloatWidth = 8;   // 64-bit IEEE
constexpr std::uint8_t kLittleEndian = 1; // declared byte order

void put_u8(std::ostream& out, std::uint8_t v) {
  out.put(static_cast<char>(v));
}

void put_u32(std::ostream& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) put_u8(out, static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u64(std::ostream& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) put_u8(out, static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_f64(std::ostream& out, double v) {
  put_u64(out, std::bit_cast<std::uint64_t>(v));
}

void put_string(std::ostream& out, const std::string& s) {
  put_u32(out, static_cast<std::uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

void put_matrix(std::ostream& out, const Eigen::MatrixXd& m) {
  put_u64(out, static_cast<std::uint64_t>(m.rows()));
  put_u64(out, static_cast<std::uint64_t>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) put_f64(out, m(r, c));
  }
}

std::uint8_t get_u8(std::istream& in) {
  const int c = in.get();
  if (c == EOF) throw CorruptModelError("unexpected end of model file");
  return static_cast<std::uint8_t>(c);
}

std::uint32_t get_u32(std::istream& in) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(get_u8(in)) << (8 * i);
  return v;
}

std::uint64_t get_u64(std::istream& in) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(get_u8(in)) << (8 * i);
  return v;
}

double get_f64(std::istream& in) {
  return std::bit_cast<double>(get_u64(in));
}

std::string get_string(std::istream& in) {
  const std::uint32_t size = get_u32(in);
  if (size > (1u << 28)) throw CorruptModelError("implausible string length");
  std::string s(size, '\0');
  in.read(s.data(), static_cast<std::streamsize>(size));
  if (in.gcount() != static_cast<std::streamsize>(size)) {
    throw CorruptModelError("unexpected end of model file");
  }
  return s;
}

Eigen::MatrixXd get_matrix(std::istream& in) {
  const std::uint64_t rows = get_u64(in);
  const std::uint64_t cols = get_u64(in);
  if (rows > (1u << 26) || cols > (1u << 26)) {
    throw CorruptModelError("implausible matrix dimensions");
  }
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows),
                    static_cast<Eigen::Index>(cols));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = get_f64(in);
  }
  return m;
}

}  // namespace

void save_model(const CrfModel& model, std::ostream& out) {
  out.write(kMagic, sizeof(kMagic));
  put_u32(out, kVersion);
  put_u8(out, kFloatWidth);
  put_u8(out, kLittleEndian);

  const auto flags = model.tagset.discontiguous_flags();
  for (bool flag : flags) put_u8(out, flag ? 1 : 0);
  put_u32(out, model.features.bits());

  put_u64(out, model.meta.seed);
  put_string(out, model.meta.config_digest);
  put_string(out, model.meta.toolkit_version);

  put_u32(out, static_cast<std::uint32_t>(model.feature_names.size()));
  for (const std::string& name : model.feature_names) put_string(out, name);

  put_matrix(out, model.emission_weights);
  put_matrix(out, model.transitions);
  put_u8(out, model.projection ? 1 : 0);
  if (model.projection) put_matrix(out, *model.projection);

  out.write(kTrailer, sizeof(kTrailer));
  if (!out) throw IoError("failed writing model");
}

CrfModel load_model(std::istream& in) {
  char magic[sizeof(kMagic)] = {};
  in.read(magic, sizeof(magic));
  if (in.gcount() != sizeof(magic) ||
      std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    throw CorruptModelError("not a model file (bad magic)");
  }
  const std::uint32_t version = get_u32(in);
  if (version != kVersion) {
    throw VersionMismatchError("unsupported model version " +
                               std::to_string(version));
  }
  if (get_u8(in) != kFloatWidth || get_u8(in) != kLittleEndian) {
    throw CorruptModelError("unsupported float width or byte order");
  }

  std::array<bool, kNumCategories> flags{};
  for (int i = 0; i < kNumCategories; ++i) flags[i] = get_u8(in) != 0;
  const auto features = FeatureTemplateConfig::from_bits(
      static_cast<std::uint16_t>(get_u32(in)));

  ModelMeta meta;
  meta.seed = get_u64(in);
  meta.config_digest = get_string(in);
  meta.toolkit_version = get_string(in);

  const std::uint32_t feature_count = get_u32(in);
  if (feature_count > (1u << 28)) {
    throw CorruptModelError("implausible feature count");
  }
  std::vector<std::string> names;
  names.reserve(feature_count);
  for (std::uint32_t i = 0; i < feature_count; ++i) {
    names.push_back(get_string(in));
  }

  CrfModel model = CrfModel::make(TagsetConfig(flags), features,
                                  std::move(names));
  model.meta = std::move(meta);
  model.emission_weights = get_matrix(in);
  model.transitions = get_matrix(in);
  if (get_u8(in) != 0) model.projection = get_matrix(in);

  if (model.emission_weights.rows() !=
          static_cast<Eigen::Index>(model.feature_names.size()) ||
      model.emission_weights.cols() != model.num_labels() ||
      model.transitions.rows() != model.num_labels() + 1 ||
      model.transitions.cols() != model.num_labels() + 1) {
    throw CorruptModelError("weight table dimensions do not match header");
  }

  char trailer[sizeof(kTrailer)] = {};
  in.read(trailer, sizeof(trailer));
  if (in.gcount() != sizeof(trailer) ||
      std::memcmp(trailer, kTrailer, sizeof(kTrailer)) != 0) {
    throw CorruptModelError("missing trailer (truncated file?)");
  }
  return model;
}

void save_model(const CrfModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  save_model(model, out);
}

CrfModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return load_model(in);
}

}  // namespace spantag
