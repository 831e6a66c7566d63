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

#ifndef SUOD_PROJECTION_HPP
#define SUOD_PROJECTION_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "suod/matrix.hpp"
#include "suod/rng.hpp"

namespace suod {

enum class ProjectionMethod { kNone, kBasic, kDiscrete, kCirculant, kToeplitz, kFeatureSelect };

inline std::string to_string(ProjectionMethod m) {
  switch (m) {
    case ProjectionMethod::kNone: return "none";
    case ProjectionMethod::kBasic: return "basic";
    case ProjectionMethod::kDiscrete: return "discrete";
    case ProjectionMethod::kCirculant: return "circulant";
    case ProjectionMethod::kToeplitz: return "toeplitz";
    case ProjectionMethod::kFeatureSelect: return "feature_select";
  }
  return "none";
}

inline ProjectionMethod projection_method_from_string(const std::string& s) {
  if (s == "none") return ProjectionMethod::kNone;
  if (s == "basic") return ProjectionMethod::kBasic;
  if (s == "discrete") return ProjectionMethod::kDiscrete;
  if (s == "circulant") return ProjectionMethod::kCirculant;
  if (s == "toeplitz") return ProjectionMethod::kToeplitz;
  if (s == "feature_select" || s == "rs") return ProjectionMethod::kFeatureSelect;
  throw std::invalid_argument("unknown projection method '" + s + "'");
}

struct ProjectionSpec {
  ProjectionMethod method = ProjectionMethod::kNone;
  std::size_t target_dim = 0;  // ignored for method none
  std::uint64_t seed = 0;
};

/// Materialized transform. For the matrix methods W is k x d and the map is
/// x -> (1/sqrt(k)) x W^T. For feature_select, `selected` lists k distinct
/// source columns copied verbatim (no scaling). Regenerated bit-identically
/// from (method, d, k, seed), which is all the bundle persists.
struct ProjectionMatrix {
  ProjectionMethod method = ProjectionMethod::kNone;
  std::size_t d = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  DataMatrix w;                        // k x d, matrix methods only
  std::vector<std::size_t> selected;   // feature_select only

  std::size_t output_dim() const { return method == ProjectionMethod::kNone ? d : k; }
};

struct DistortionReport {
  double epsilon = 0.0;
  double fraction_within = 0.0;  // share of pair ratios inside [1-eps, 1+eps]
  double min_ratio = 0.0;
  double max_ratio = 0.0;
};

/// Dimension sufficient to preserve pairwise distances of n points within
/// (1 +- eps): k = ceil(4 ln(n) / (eps^2/2 - eps^3/3)).
inline std::size_t jl_target_dim(std::size_t n, double epsilon) {
  if (n < 2) throw std::invalid_argument("jl_target_dim: need n >= 2");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("jl_target_dim: epsilon must be in (0, 1)");
  const double denom = epsilon * epsilon / 2.0 - epsilon * epsilon * epsilon / 3.0;
  return static_cast<std::size_t>(std::ceil(4.0 * std::log(double(n)) / denom));
}

namespace detail {

// Fixed stream id so projection draws never alias detector or forest draws
// made from the same seed.
inline constexpr std::uint64_t kProjectionStreamId = 0x70726f6aULL;  // "proj"

}  // namespace detail

/// Generates the transform for input dimension d.
///
/// Draw order is part of the format (bundles regenerate W from the seed):
/// basic/discrete fill row-major; circulant draws a fresh generator row every
/// d rows and cyclically shifts it right by one for the rows in between;
/// toeplitz draws the first row left-to-right then the first column downward,
/// with W[i][j] = W[i-1][j-1].
///
/// The matrix methods accept any k >= 1, including k > d (a widening map is
/// well-defined and the distortion bound only improves with k); the usual
/// reduction setting is k < d and the pipeline never requests k >= d.
inline ProjectionMatrix make_projection(const ProjectionSpec& spec, std::size_t d) {
  if (d < 1) throw std::invalid_argument("make_projection: d must be >= 1");
  ProjectionMatrix p;
  p.method = spec.method;
  p.d = d;
  p.seed = spec.seed;
  if (spec.method == ProjectionMethod::kNone) {
    p.k = d;
    return p;
  }

  const std::size_t k = spec.target_dim;
  if (k < 1) throw std::invalid_argument("make_projection: target_dim must be >= 1");
  p.k = k;
  RngStream rng(spec.seed, detail::kProjectionStreamId);

  switch (spec.method) {
    case ProjectionMethod::kBasic: {
      p.w = DataMatrix(k, d);
      for (double& v : p.w.values) v = rng.normal();
      break;
    }
    case ProjectionMethod::kDiscrete: {
      p.w = DataMatrix(k, d);
      for (double& v : p.w.values) v = (rng.next_u64() & 1u) ? 1.0 : -1.0;
      break;
    }
    case ProjectionMethod::kCirculant: {
      p.w = DataMatrix(k, d);
      for (std::size_t r = 0; r < k; ++r) {
        if (r % d == 0) {
          for (std::size_t j = 0; j < d; ++j) p.w.at(r, j) = rng.normal();
        } else {
          p.w.at(r, 0) = p.w.at(r - 1, d - 1);
          for (std::size_t j = 1; j < d; ++j) p.w.at(r, j) = p.w.at(r - 1, j - 1);
        }
      }
      break;
    }
    case ProjectionMethod::kToeplitz: {
      p.w = DataMatrix(k, d);
      for (std::size_t j = 0; j < d; ++j) p.w.at(0, j) = rng.normal();
      for (std::size_t i = 1; i < k; ++i) p.w.at(i, 0) = rng.normal();
      for (std::size_t i = 1; i < k; ++i)
        for (std::size_t j = 1; j < d; ++j) p.w.at(i, j) = p.w.at(i - 1, j - 1);
      break;
    }
    case ProjectionMethod::kFeatureSelect: {
      if (k > d)
        throw std::invalid_argument("make_projection: feature_select cannot pick more than d columns");
      p.selected = rng.sample_indices(d, k);
      break;
    }
    case ProjectionMethod::kNone:
      break;  // handled above
  }
  return p;
}

/// Applies the transform: (1/sqrt(k)) X W^T for matrix methods, column
/// selection for feature_select, identity for none.
inline DataMatrix project(const DataMatrix& x, const ProjectionMatrix& p) {
  if (p.method == ProjectionMethod::kNone) return x;
  if (x.cols != p.d)
    throw std::invalid_argument("project: input has " + std::to_string(x.cols) +
                                " columns, transform expects " + std::to_string(p.d));

  if (p.method == ProjectionMethod::kFeatureSelect) {
    DataMatrix out(x.rows, p.k);
    for (std::size_t i = 0; i < x.rows; ++i)
      for (std::size_t j = 0; j < p.k; ++j) out.at(i, j) = x.at(i, p.selected[j]);
    return out;
  }

  DataMatrix out(x.rows, p.k);
  const double scale = 1.0 / std::sqrt(double(p.k));
  for (std::size_t i = 0; i < x.rows; ++i) {
    const double* xi = x.row(i);
    for (std::size_t r = 0; r < p.k; ++r) {
      const double* wr = p.w.row(r);
      double s = 0.0;
      for (std::size_t j = 0; j < p.d; ++j) s += xi[j] * wr[j];
      out.at(i, r) = s * scale;
    }
  }
  return out;
}

/// Ratio of projected to original squared pairwise distances over all i < j
/// with nonzero original distance. Matrix methods only.
inline DistortionReport distortion_report(const DataMatrix& x, const ProjectionMatrix& p,
                                          double epsilon) {
  if (p.method == ProjectionMethod::kNone || p.method == ProjectionMethod::kFeatureSelect)
    throw std::invalid_argument("distortion_report: requires a matrix projection method");
  if (x.rows < 2) throw std::invalid_argument("distortion_report: need at least 2 rows");

  const DataMatrix proj = project(x, p);
  DistortionReport rep;
  rep.epsilon = epsilon;
  std::size_t total = 0, within = 0;
  double mn = 0.0, mx = 0.0;
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t j = i + 1; j < x.rows; ++j) {
      double orig = 0.0;
      for (std::size_t c = 0; c < x.cols; ++c) {
        const double dd = x.at(i, c) - x.at(j, c);
        orig += dd * dd;
      }
      if (orig == 0.0) continue;  // coincident points carry no distance information
      double pr = 0.0;
      for (std::size_t c = 0; c < proj.cols; ++c) {
        const double dd = proj.at(i, c) - proj.at(j, c);
        pr += dd * dd;
      }
      const double ratio = pr / orig;
      if (total == 0) {
        mn = mx = ratio;
      } else {
        mn = std::min(mn, ratio);
        mx = std::max(mx, ratio);
      }
      ++total;
      if (ratio >= 1.0 - epsilon && ratio <= 1.0 + epsilon) ++within;
    }
  }
  if (total == 0) throw std::invalid_argument("distortion_report: all point pairs coincide");
  rep.fraction_within = double(within) / double(total);
  rep.min_ratio = mn;
  rep.max_ratio = mx;
  return rep;
}

}  // namespace suod

#endif  // SUOD_PROJECTION_HPP
