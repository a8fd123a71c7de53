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

/// Exact construction of the point and weight sets of the A2 triangle
/// grids and the honeycomb fragment, together with the discrete
/// multiplicity functions and the cyclic weight action that enter every
/// transform normalization.
///
/// Points and weights are stored as integer triples plus the resolution M,
/// so set membership, congruence filters and orderings are exact; floating
/// coordinates are derived on demand.

#include <array>
#include <cassert>
#include <cstddef>
#include <vector>

#include "hweyl/errors.hpp"

namespace hweyl {

/// A vector of the plane in coordinates relative to the fundamental
/// weights omega_1, omega_2.
struct OmegaVector {
  double x1 = 0.0;
  double x2 = 0.0;
};

constexpr OmegaVector operator+(OmegaVector a, OmegaVector b) {
  return {a.x1 + b.x1, a.x2 + b.x2};
}
constexpr OmegaVector operator-(OmegaVector a, OmegaVector b) {
  return {a.x1 - b.x1, a.x2 - b.x2};
}
constexpr OmegaVector operator*(double t, OmegaVector v) {
  return {t * v.x1, t * v.x2};
}

/// The simple roots in omega coordinates: alpha_1 = 2w1 - w2,
/// alpha_2 = -w1 + 2w2.  Shifting an argument by either leaves all
/// kernels unchanged.
inline constexpr OmegaVector alpha1{2.0, -1.0};
inline constexpr OmegaVector alpha2{-1.0, 2.0};

/// Euclidean scalar product of two vectors given in omega coordinates,
/// <x,y> = (2 x1 y1 + x1 y2 + x2 y1 + 2 x2 y2) / 3.
constexpr double scalar_product(OmegaVector x, OmegaVector y) {
  return (2.0 * x.x1 * y.x1 + x.x1 * y.x2 + x.x2 * y.x1 +
          2.0 * x.x2 * y.x2) / 3.0;
}

/// The six images of x under the reflection group, identity first.
/// Entry j carries determinant weyl_orbit_signs[j]; the ordering is the
/// one whose alternating signs produce the antisymmetrized kernels.
constexpr std::array<OmegaVector, 6> weyl_orbit(OmegaVector x) {
  const double a = x.x1, b = x.x2;
  return {{{a, b},
           {-a, a + b},
           {-a - b, a},
           {-b, -a},
           {b, -a - b},
           {a + b, -b}}};
}

inline constexpr std::array<int, 6> weyl_orbit_signs{+1, -1, +1, -1, +1, -1};

/// A node of the refined weight lattice inside the fundamental triangle,
/// held as the exact triple [s0,s1,s2] with s0+s1+s2 = M.  Its plane
/// position is (s1/M) w1 + (s2/M) w2.
struct LatticePoint {
  int s0 = 0;
  int s1 = 0;
  int s2 = 0;
  int M = 1;

  OmegaVector coords() const {
    return {static_cast<double>(s1) / M, static_cast<double>(s2) / M};
  }
  std::array<int, 3> triple() const { return {s0, s1, s2}; }
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// A weight [l0,l1,l2] with l0+l1+l2 = M; its plane position is
/// l1 w1 + l2 w2.
struct Weight {
  int l0 = 0;
  int l1 = 0;
  int l2 = 0;
  int M = 1;

  OmegaVector coords() const {
    return {static_cast<double>(l1), static_cast<double>(l2)};
  }
  std::array<int, 3> triple() const { return {l0, l1, l2}; }
  friend bool operator==(const Weight&, const Weight&) = default;
};

enum class PointSetKind {
  FPM,           ///< refined weight-lattice triangle grid
  FQM,           ///< refined root-lattice subgrid (s1+2s2 = 0 mod 3)
  HM,            ///< honeycomb fragment, FPM minus FQM
  HM1,           ///< honeycomb coset with s1+2s2 = 1 mod 3
  HM2,           ///< honeycomb coset with s1+2s2 = 2 mod 3
  FPMInterior,
  FQMInterior,
  HMInterior,
};

enum class WeightSetKind {
  LambdaQM,          ///< all triples summing to M
  LambdaPM,          ///< dominant fundamental-domain representatives
  LM,                ///< LambdaPM minus the cyclic fixed point
  LambdaQMInterior,
  LambdaPMInterior,
  LMInterior,
  Fixed,             ///< the single cyclically fixed triple [M/3,M/3,M/3]
};

inline const char* to_string(PointSetKind k) {
  switch (k) {
    case PointSetKind::FPM: return "FPM";
    case PointSetKind::FQM: return "FQM";
    case PointSetKind::HM: return "HM";
    case PointSetKind::HM1: return "HM1";
    case PointSetKind::HM2: return "HM2";
    case PointSetKind::FPMInterior: return "FPM_interior";
    case PointSetKind::FQMInterior: return "FQM_interior";
    case PointSetKind::HMInterior: return "HM_interior";
  }
  return "?";
}

inline const char* to_string(WeightSetKind k) {
  switch (k) {
    case WeightSetKind::LambdaQM: return "LQM";
    case WeightSetKind::LambdaPM: return "LPM";
    case WeightSetKind::LM: return "LM";
    case WeightSetKind::LambdaQMInterior: return "LQM_interior";
    case WeightSetKind::LambdaPMInterior: return "LPM_interior";
    case WeightSetKind::LMInterior: return "LM_interior";
    case WeightSetKind::Fixed: return "fixed";
  }
  return "?";
}

namespace detail {

inline void require_resolution(int M) {
  if (M < 1) throw DomainError("resolution M must be a positive integer");
}

constexpr bool point_kind_interior(PointSetKind k) {
  return k == PointSetKind::FPMInterior || k == PointSetKind::FQMInterior ||
         k == PointSetKind::HMInterior;
}

constexpr bool weight_kind_interior(WeightSetKind k) {
  return k == WeightSetKind::LambdaQMInterior ||
         k == WeightSetKind::LambdaPMInterior ||
         k == WeightSetKind::LMInterior;
}

// congruence/positivity filter of each point-set kind on (s1 + 2 s2) mod 3
constexpr bool point_class_kept(PointSetKind k, int cls) {
  switch (k) {
    case PointSetKind::FPM:
    case PointSetKind::FPMInterior: return true;
    case PointSetKind::FQM:
    case PointSetKind::FQMInterior: return cls == 0;
    case PointSetKind::HM:
    case PointSetKind::HMInterior: return cls != 0;
    case PointSetKind::HM1: return cls == 1;
    case PointSetKind::HM2: return cls == 2;
  }
  return false;
}

constexpr bool weight_triple_kept(WeightSetKind k, int l0, int l1, int l2) {
  const bool dominant = (l0 > l1 && l0 > l2) || (l0 == l1 && l1 >= l2);
  const bool unfixed_dominant = (l0 > l1 && l0 > l2) || (l0 == l1 && l1 > l2);
  switch (k) {
    case WeightSetKind::LambdaQM:
    case WeightSetKind::LambdaQMInterior: return true;
    case WeightSetKind::LambdaPM:
    case WeightSetKind::LambdaPMInterior: return dominant;
    case WeightSetKind::LM:
    case WeightSetKind::LMInterior: return unfixed_dominant;
    case WeightSetKind::Fixed: return l0 == l1 && l1 == l2;
  }
  return false;
}

}  // namespace detail

/// Number of points of the set, by the closed counting formulas.
/// Enumeration (generate_points) is authoritative; this is the
/// cross-check used by tests and for container reservations.
inline std::size_t point_count(PointSetKind kind, int M) {
  detail::require_resolution(M);
  const long long m = M;
  const bool div3 = (m % 3 == 0);
  long long n = 0;
  switch (kind) {
    case PointSetKind::FPM: n = (m * m + 3 * m + 2) / 2; break;
    case PointSetKind::FQM:
      n = div3 ? (m * m + 3 * m + 6) / 6 : (m * m + 3 * m + 2) / 6;
      break;
    case PointSetKind::HM:
      n = div3 ? (m * m + 3 * m) / 3 : (m * m + 3 * m + 2) / 3;
      break;
    case PointSetKind::HM1:
    case PointSetKind::HM2:
      n = point_count(PointSetKind::HM, M) / 2;
      break;
    case PointSetKind::FPMInterior: n = (m * m - 3 * m + 2) / 2; break;
    case PointSetKind::FQMInterior:
      n = div3 ? (m * m - 3 * m + 6) / 6 : (m * m - 3 * m + 2) / 6;
      break;
    case PointSetKind::HMInterior:
      n = div3 ? (m * m - 3 * m) / 3 : (m * m - 3 * m + 2) / 3;
      break;
  }
  return static_cast<std::size_t>(n < 0 ? 0 : n);
}

inline std::size_t weight_count(WeightSetKind kind, int M) {
  detail::require_resolution(M);
  switch (kind) {
    case WeightSetKind::LambdaQM: return point_count(PointSetKind::FPM, M);
    case WeightSetKind::LambdaPM: return point_count(PointSetKind::FQM, M);
    case WeightSetKind::LM: return point_count(PointSetKind::HM, M) / 2;
    case WeightSetKind::LambdaQMInterior:
      return point_count(PointSetKind::FPMInterior, M);
    case WeightSetKind::LambdaPMInterior:
      return point_count(PointSetKind::FQMInterior, M);
    case WeightSetKind::LMInterior:
      return point_count(PointSetKind::HMInterior, M) / 2;
    case WeightSetKind::Fixed: return (M % 3 == 0) ? 1 : 0;
  }
  return 0;
}

/// Enumerate the point set in strictly ascending lexicographic order of
/// the triple (s0,s1,s2).  Interior kinds are empty for M <= 3.
inline std::vector<LatticePoint> generate_points(PointSetKind kind, int M) {
  detail::require_resolution(M);
  const int lo = detail::point_kind_interior(kind) ? 1 : 0;
  std::vector<LatticePoint> out;
  out.reserve(point_count(kind, M));
  for (int s0 = lo; s0 <= M; ++s0) {
    for (int s1 = lo; s0 + s1 <= M; ++s1) {
      const int s2 = M - s0 - s1;
      if (s2 < lo) continue;
      if (detail::point_class_kept(kind, (s1 + 2 * s2) % 3))
        out.push_back({s0, s1, s2, M});
    }
  }
  return out;
}

/// Enumerate the weight set in strictly ascending lexicographic order of
/// the triple (l0,l1,l2).
inline std::vector<Weight> generate_weights(WeightSetKind kind, int M) {
  detail::require_resolution(M);
  const int lo = detail::weight_kind_interior(kind) ? 1 : 0;
  std::vector<Weight> out;
  out.reserve(weight_count(kind, M));
  for (int l0 = lo; l0 <= M; ++l0) {
    for (int l1 = lo; l0 + l1 <= M; ++l1) {
      const int l2 = M - l0 - l1;
      if (l2 < lo) continue;
      if (detail::weight_triple_kept(kind, l0, l1, l2))
        out.push_back({l0, l1, l2, M});
    }
  }
  return out;
}

/// Point multiplicity: 6 in the interior, 3 on an edge, 1 at a vertex of
/// the fundamental triangle.
inline int epsilon(const LatticePoint& s) {
  assert(s.s0 >= 0 && s.s1 >= 0 && s.s2 >= 0 && s.s0 + s.s1 + s.s2 == s.M);
  const int zeros = (s.s0 == 0) + (s.s1 == 0) + (s.s2 == 0);
  switch (zeros) {
    case 0: return 6;
    case 1: return 3;
    default: return 1;
  }
}

/// Weight multiplicity: 1 in the interior, 2 with one vanishing
/// coordinate, 6 with two.
inline int h_weight(const Weight& l) {
  assert(l.l0 >= 0 && l.l1 >= 0 && l.l2 >= 0 && l.l0 + l.l1 + l.l2 == l.M);
  const int zeros = (l.l0 == 0) + (l.l1 == 0) + (l.l2 == 0);
  switch (zeros) {
    case 0: return 1;
    case 1: return 2;
    default: return 6;
  }
}

/// 3 for the cyclically fixed weight (l0=l1=l2), 1 otherwise.
inline int d_weight(const Weight& l) {
  return (l.l0 == l.l1 && l.l1 == l.l2) ? 3 : 1;
}

/// Action of the k-th element of the cyclic group on a weight: a cyclic
/// permutation of the triple.  k is taken mod 3, so composed actions add.
inline Weight gamma_action(int k, const Weight& l) {
  switch (((k % 3) + 3) % 3) {
    case 0: return l;
    case 1: return {l.l2, l.l0, l.l1, l.M};
    default: return {l.l1, l.l2, l.l0, l.M};
  }
}

}  // namespace hweyl
