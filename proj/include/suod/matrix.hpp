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

#ifndef SUOD_MATRIX_HPP
#define SUOD_MATRIX_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace suod {

/// Dense row-major matrix of doubles. The universal carrier for train/test
/// data, projected subspaces and per-model score columns.
struct DataMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;  // row-major, length rows * cols

  DataMatrix() = default;
  DataMatrix(std::size_t n, std::size_t d, double fill = 0.0)
      : rows(n), cols(d), values(n * d, fill) {}

  double& at(std::size_t i, std::size_t j) { return values[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return values[i * cols + j]; }

  const double* row(std::size_t i) const { return values.data() + i * cols; }
  double* row(std::size_t i) { return values.data() + i * cols; }

  bool empty() const { return rows == 0 || cols == 0; }

  /// Ingestion contract: shape consistent, at least one row/column, all
  /// entries finite.
  void validate() const {
    if (rows < 1 || cols < 1) throw std::invalid_argument("DataMatrix: empty shape");
    if (values.size() != rows * cols)
      throw std::invalid_argument("DataMatrix: value count does not match shape");
    for (std::size_t idx = 0; idx < values.size(); ++idx) {
      if (!std::isfinite(values[idx])) {
        throw std::invalid_argument("DataMatrix: non-finite value at row " +
                                    std::to_string(idx / cols) + ", column " +
                                    std::to_string(idx % cols));
      }
    }
  }
};

/// One outlyingness score per sample; higher = more outlying.
using ScoreVector = std::vector<double>;

/// Feature matrix plus optional binary labels (1 = outlier).
struct LabeledDataset {
  DataMatrix features;
  std::optional<std::vector<int>> labels;

  std::size_t size() const { return features.rows; }

  void validate() const {
    features.validate();
    if (labels) {
      if (labels->size() != features.rows)
        throw std::invalid_argument("LabeledDataset: label count does not match row count");
      for (int v : *labels)
        if (v != 0 && v != 1)
          throw std::invalid_argument("LabeledDataset: labels must be 0 or 1");
    }
  }
};

}  // namespace suod

#endif  // SUOD_MATRIX_HPP
