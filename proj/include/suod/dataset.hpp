// Copyright 2026 The suod-engine Authors.
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

#ifndef SUOD_DATASET_HPP
#define SUOD_DATASET_HPP

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "suod/matrix.hpp"
#include "suod/rng.hpp"

namespace suod {

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline double parse_cell(const std::string& raw, std::size_t data_row,
                         const std::string& column) {
  const std::string s = trim(raw);
  if (s.empty()) {
    throw std::runtime_error("CSV parse error at row " + std::to_string(data_row) +
                             ", column '" + column + "': empty cell");
  }
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) {
    throw std::runtime_error("CSV parse error at row " + std::to_string(data_row) +
                             ", column '" + column + "': cannot parse '" + s + "'");
  }
  if (!std::isfinite(v)) {
    throw std::runtime_error("CSV parse error at row " + std::to_string(data_row) +
                             ", column '" + column + "': non-finite value '" + s + "'");
  }
  return v;
}

}  // namespace detail

/// Loads a headered CSV of decimal floats. When label_column is given, that
/// column is stripped from the features and parsed as 0/1 labels. Row order
/// and the order of the remaining columns are preserved.
inline LabeledDataset load_csv(const std::string& path,
                               const std::optional<std::string>& label_column = std::nullopt) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_csv: cannot open '" + path + "'");

  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("load_csv: '" + path + "' is empty");
  std::vector<std::string> header = detail::split_csv_line(line);
  for (auto& h : header) h = detail::trim(h);

  std::size_t label_idx = header.size();
  if (label_column) {
    for (std::size_t j = 0; j < header.size(); ++j)
      if (header[j] == *label_column) label_idx = j;
    if (label_idx == header.size())
      throw std::runtime_error("load_csv: label column '" + *label_column + "' not found");
  }

  const std::size_t d = header.size() - (label_column ? 1 : 0);
  if (d < 1) throw std::runtime_error("load_csv: no feature columns");

  std::vector<double> values;
  std::vector<int> labels;
  std::size_t n = 0;
  std::size_t data_row = 0;
  while (std::getline(in, line)) {
    ++data_row;
    if (detail::trim(line).empty()) continue;
    const auto cells = detail::split_csv_line(line);
    if (cells.size() != header.size()) {
      throw std::runtime_error("load_csv: row " + std::to_string(data_row) + " has " +
                               std::to_string(cells.size()) + " cells, expected " +
                               std::to_string(header.size()));
    }
    for (std::size_t j = 0; j < cells.size(); ++j) {
      const double v = detail::parse_cell(cells[j], data_row, header[j]);
      if (j == label_idx) {
        if (v != 0.0 && v != 1.0) {
          throw std::runtime_error("load_csv: row " + std::to_string(data_row) +
                                   ": label must be 0 or 1, got '" + cells[j] + "'");
        }
        labels.push_back(static_cast<int>(v));
      } else {
        values.push_back(v);
      }
    }
    ++n;
  }
  if (n == 0) throw std::runtime_error("load_csv: '" + path + "' has no data rows");

  LabeledDataset ds;
  ds.features.rows = n;
  ds.features.cols = d;
  ds.features.values = std::move(values);
  if (label_column) ds.labels = std::move(labels);
  ds.validate();
  return ds;
}

/// Writes scores as "index,score" rows.
inline void save_scores_csv(const std::string& path, const ScoreVector& scores) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_scores_csv: cannot open '" + path + "' for writing");
  out << "index,score\n";
  out.precision(17);
  for (std::size_t i = 0; i < scores.size(); ++i) out << i << ',' << scores[i] << '\n';
  if (!out) throw std::runtime_error("save_scores_csv: write failed for '" + path + "'");
}

/// Synthetic benchmark data: inliers uniform over [-4, 4]^d, outliers
/// isotropic Normal(0, 3^2), listed inliers first. Deterministic per rng.
inline LabeledDataset make_synthetic(std::size_t n_inliers, std::size_t n_outliers,
                                     std::size_t d, RngStream rng) {
  if (n_inliers < 1 || n_outliers < 1 || d < 1)
    throw std::invalid_argument("make_synthetic: counts and dimension must be >= 1");
  LabeledDataset ds;
  ds.features = DataMatrix(n_inliers + n_outliers, d);
  std::vector<int> labels(n_inliers + n_outliers, 0);
  for (std::size_t i = 0; i < n_inliers; ++i)
    for (std::size_t j = 0; j < d; ++j) ds.features.at(i, j) = rng.uniform(-4.0, 4.0);
  for (std::size_t i = n_inliers; i < n_inliers + n_outliers; ++i) {
    labels[i] = 1;
    for (std::size_t j = 0; j < d; ++j) ds.features.at(i, j) = rng.normal(0.0, 3.0);
  }
  ds.labels = std::move(labels);
  return ds;
}

/// Shuffles rows, then splits: train takes floor(n * train_fraction) rows.
inline std::pair<LabeledDataset, LabeledDataset> train_test_split(const LabeledDataset& ds,
                                                                  double train_fraction,
                                                                  RngStream rng) {
  const std::size_t n = ds.size();
  if (n < 2) throw std::invalid_argument("train_test_split: need at least 2 rows");
  if (!(train_fraction > 0.0 && train_fraction < 1.0))
    throw std::invalid_argument("train_test_split: train_fraction must be in (0, 1)");

  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  rng.shuffle(perm);

  const std::size_t n_train = static_cast<std::size_t>(std::floor(double(n) * train_fraction));
  if (n_train == 0 || n_train == n)
    throw std::invalid_argument("train_test_split: a side would be empty");

  const std::size_t d = ds.features.cols;
  auto take = [&](std::size_t begin, std::size_t count) {
    LabeledDataset out;
    out.features = DataMatrix(count, d);
    if (ds.labels) out.labels = std::vector<int>(count, 0);
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t src = perm[begin + i];
      for (std::size_t j = 0; j < d; ++j) out.features.at(i, j) = ds.features.at(src, j);
      if (ds.labels) (*out.labels)[i] = (*ds.labels)[src];
    }
    return out;
  };
  return {take(0, n_train), take(n_train, n - n_train)};
}

}  // namespace suod

#endif  // SUOD_DATASET_HPP
