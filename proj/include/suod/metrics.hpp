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

#ifndef SUOD_METRICS_HPP
#define SUOD_METRICS_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "suod/matrix.hpp"

namespace suod {

namespace detail {

/// Midranks: ranks 1..n, tie groups receive the group's average rank.
inline std::vector<double> average_ranks(const std::vector<double>& v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
    const double avg = 0.5 * double(i + j) + 1.0;  // ranks are 1-based
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

}  // namespace detail

/// Probability that a random outlier outscores a random inlier, ties counted
/// one half. Computed via the rank-sum statistic, O(n log n).
inline double roc_auc(const ScoreVector& scores, const std::vector<int>& labels) {
  if (scores.size() != labels.size())
    throw std::invalid_argument("roc_auc: score/label length mismatch");
  std::size_t n_pos = 0, n_neg = 0;
  for (int y : labels) (y == 1 ? n_pos : n_neg)++;
  if (n_pos == 0 || n_neg == 0)
    throw std::invalid_argument("roc_auc: both classes must be present");

  const auto ranks = detail::average_ranks(scores);
  double rank_sum_pos = 0.0;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == 1) rank_sum_pos += ranks[i];
  const double u = rank_sum_pos - 0.5 * double(n_pos) * double(n_pos + 1);
  return u / (double(n_pos) * double(n_neg));
}

/// Fraction of true outliers among the top-N scored samples, N = number of
/// positive labels. Score ties are broken by the lower original index.
inline double precision_at_n(const ScoreVector& scores, const std::vector<int>& labels) {
  if (scores.size() != labels.size())
    throw std::invalid_argument("precision_at_n: score/label length mismatch");
  std::size_t n_pos = 0;
  for (int y : labels) n_pos += (y == 1);
  if (n_pos == 0) throw std::invalid_argument("precision_at_n: no positive labels");

  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  std::size_t hits = 0;
  for (std::size_t i = 0; i < n_pos; ++i) hits += (labels[order[i]] == 1);
  return double(hits) / double(n_pos);
}

/// Spearman's rank correlation with average ranks for ties.
inline double spearman_rho(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("spearman_rho: length mismatch");
  if (a.size() < 2) throw std::invalid_argument("spearman_rho: need at least 2 values");
  const auto ra = detail::average_ranks(a);
  const auto rb = detail::average_ranks(b);
  const double n = double(a.size());
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += ra[i];
    mb += rb[i];
  }
  ma /= n;
  mb /= n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (ra[i] - ma) * (rb[i] - mb);
    saa += (ra[i] - ma) * (ra[i] - ma);
    sbb += (rb[i] - mb) * (rb[i] - mb);
  }
  if (saa == 0.0 || sbb == 0.0)
    throw std::invalid_argument("spearman_rho: zero rank variance");
  return sab / std::sqrt(saa * sbb);
}

/// Standardizes each column to mean 0, population (divide-by-n) stddev 1.
/// Zero-variance columns map to all-zeros.
inline DataMatrix zscore_columns(const DataMatrix& m) {
  if (m.rows < 2) throw std::invalid_argument("zscore_columns: need at least 2 rows");
  DataMatrix out(m.rows, m.cols);
  for (std::size_t j = 0; j < m.cols; ++j) {
    double mean = 0.0;
    for (std::size_t i = 0; i < m.rows; ++i) mean += m.at(i, j);
    mean /= double(m.rows);
    double var = 0.0;
    for (std::size_t i = 0; i < m.rows; ++i) {
      const double d = m.at(i, j) - mean;
      var += d * d;
    }
    var /= double(m.rows);
    if (var == 0.0) continue;  // column stays all-zero
    const double inv_sd = 1.0 / std::sqrt(var);
    for (std::size_t i = 0; i < m.rows; ++i) out.at(i, j) = (m.at(i, j) - mean) * inv_sd;
  }
  return out;
}

/// Symmetric n x n matrix of squared Euclidean distances, zero diagonal.
inline DataMatrix pairwise_sq_dists(const DataMatrix& m) {
  if (m.rows < 1) throw std::invalid_argument("pairwise_sq_dists: empty matrix");
  DataMatrix out(m.rows, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = i + 1; j < m.rows; ++j) {
      double s = 0.0;
      const double* a = m.row(i);
      const double* b = m.row(j);
      for (std::size_t k = 0; k < m.cols; ++k) {
        const double d = a[k] - b[k];
        s += d * d;
      }
      out.at(i, j) = s;
      out.at(j, i) = s;
    }
  }
  return out;
}

}  // namespace suod

#endif  // SUOD_METRICS_HPP
