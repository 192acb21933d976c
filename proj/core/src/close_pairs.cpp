// Copyright 2026 The prngbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "prngbench/close_pairs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "prngbench/error.hpp"
#include "test_support.hpp"

namespace prngbench {
namespace {

double torus_dist2(const double* a, const double* b, int t) noexcept {
  double s = 0.0;
  for (int j = 0; j < t; ++j) {
    double dx = std::fabs(a[j] - b[j]);
    dx = std::min(dx, 1.0 - dx);
    s += dx * dx;
  }
  return s;
}

double brute_min_dist2(std::span<const double> coords, int t) {
  const std::size_t n = coords.size() / t;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      best = std::min(best, torus_dist2(&coords[i * t], &coords[j * t], t));
    }
  }
  return best;
}

std::size_t grid_cell(double u, std::size_t g) noexcept {
  return std::min(static_cast<std::size_t>(u * static_cast<double>(g)), g - 1);
}

}  // namespace

double ball_volume(int t, double r) {
  const double half = 0.5 * t;
  return std::exp(half * std::log(std::numbers::pi) - std::lgamma(half + 1.0)) * std::pow(r, t);
}

double torus_min_distance(std::span<const double> coords, int t) {
  detail::require(t >= 1, "dimension must be positive");
  detail::require(coords.size() % t == 0, "coordinate count must be a multiple of t");
  const std::size_t n = coords.size() / t;
  detail::require(n >= 2, "need at least two points");

  const auto g = static_cast<std::size_t>(
      std::floor(std::pow(static_cast<double>(n), 1.0 / t) + 1e-9));
  if (g < 3) return std::sqrt(brute_min_dist2(coords, t));

  // Bucket points by grid cell (counting sort by linear cell index).
  std::size_t cells = 1;
  for (int j = 0; j < t; ++j) cells *= g;
  std::vector<std::size_t> cell_of(n);
  std::vector<std::size_t> start(cells + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t c = 0;
    for (int j = 0; j < t; ++j) c = c * g + grid_cell(coords[i * t + j], g);
    cell_of[i] = c;
    ++start[c + 1];
  }
  for (std::size_t c = 0; c < cells; ++c) start[c + 1] += start[c];
  std::vector<std::size_t> order(n);
  {
    std::vector<std::size_t> pos(start.begin(), start.end() - 1);
    for (std::size_t i = 0; i < n; ++i) order[pos[cell_of[i]]++] = i;
  }

  std::size_t neighbours = 1;
  for (int j = 0; j < t; ++j) neighbours *= 3;
  std::vector<std::size_t> coord(t);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t c = cell_of[i];
    for (int j = t - 1; j >= 0; --j) {
      coord[j] = c % g;
      c /= g;
    }
    for (std::size_t m = 0; m < neighbours; ++m) {
      std::size_t code = m;
      std::size_t other = 0;
      for (int j = 0; j < t; ++j) {
        const std::size_t step = code % 3;  // 0, 1, 2 -> -1, 0, +1
        code /= 3;
        other = other * g + (coord[j] + g + step - 1) % g;
      }
      for (std::size_t q = start[other]; q < start[other + 1]; ++q) {
        const std::size_t k = order[q];
        if (k <= i) continue;
        best = std::min(best, torus_dist2(&coords[i * t], &coords[k * t], t));
      }
    }
  }
  // Any pair closer than 1/g lies in adjacent cells, so the grid answer is
  // exact once it is below that bound.
  const double bound = 1.0 / static_cast<double>(g);
  if (best <= bound * bound) return std::sqrt(best);
  return std::sqrt(brute_min_dist2(coords, t));
}

void validate_close_pairs(const TestParams& p) {
  detail::check_slice(p.bits);
  detail::require(p.t >= kClosePairsMinDim && p.t <= kClosePairsMaxDim,
                  "ClosePairs needs t in [2, 9]");
  detail::require(p.n >= 2, "ClosePairs needs n >= 2");
}

TestOutcome close_pairs(WordSource& src, const TestParams& p) {
  validate_close_pairs(p);
  const std::uint64_t words = p.n * static_cast<std::uint64_t>(p.t);
  std::vector<double> coords;
  coords.reserve(words);
  for_each_word(src, words, [&](std::uint32_t w) {
    coords.push_back(to_unit_interval(slice_word(w, p.bits)));
  });
  const double dmin = torus_min_distance(coords, p.t);
  const auto nd = static_cast<double>(p.n);
  const double x = 0.5 * nd * (nd - 1.0) * ball_volume(p.t, dmin);
  TestOutcome out;
  out.statistics.push_back({"D", dmin, std::exp(-x)});
  out.samples_consumed = words;
  return out;
}

}  // namespace prngbench
