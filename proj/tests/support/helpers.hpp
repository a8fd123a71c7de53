// Copyright 2026 hweyl developers
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

#pragma once

// Shared test utilities: seeded generators and boundary/edge samplers of
// the fundamental triangle.

#include <complex>
#include <random>
#include <vector>

#include "hweyl/lattice.hpp"

namespace testutil {

inline std::mt19937 rng(unsigned seed = 20260809u) { return std::mt19937(seed); }

inline double uniform(std::mt19937& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline hweyl::OmegaVector random_vector(std::mt19937& g, double lo, double hi) {
  return {uniform(g, lo, hi), uniform(g, lo, hi)};
}

inline std::complex<double> random_complex(std::mt19937& g, double radius) {
  return {uniform(g, -radius, radius), uniform(g, -radius, radius)};
}

/// n points spread over the three edges of the fundamental triangle
/// (x1 = 0, x2 = 0 and x1 + x2 = 1), vertices excluded.
inline std::vector<hweyl::OmegaVector> boundary_points(std::mt19937& g,
                                                       int n) {
  std::vector<hweyl::OmegaVector> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double t = uniform(g, 0.05, 0.95);
    switch (i % 3) {
      case 0: out.push_back({0.0, t}); break;
      case 1: out.push_back({t, 0.0}); break;
      default: out.push_back({t, 1.0 - t}); break;
    }
  }
  return out;
}

/// An edge point together with the unit normal of its edge (in omega
/// coordinates, normalized in the Euclidean metric).
struct EdgeSample {
  hweyl::OmegaVector point;
  hweyl::OmegaVector normal;
};

inline std::vector<EdgeSample> edge_samples(std::mt19937& g, int n) {
  // alpha1, alpha2 and the highest root all have squared length 2
  const double inv = 1.0 / std::sqrt(2.0);
  const hweyl::OmegaVector n1{2.0 * inv, -1.0 * inv};  // edge x1 = 0
  const hweyl::OmegaVector n2{-1.0 * inv, 2.0 * inv};  // edge x2 = 0
  const hweyl::OmegaVector n3{inv, inv};               // edge x1 + x2 = 1
  std::vector<EdgeSample> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double t = uniform(g, 0.1, 0.9);
    switch (i % 3) {
      case 0: out.push_back({{0.0, t}, n1}); break;
      case 1: out.push_back({{t, 0.0}, n2}); break;
      default: out.push_back({{t, 1.0 - t}, n3}); break;
    }
  }
  return out;
}

}  // namespace testutil
