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

/// The four base kernels: symmetrized ("C") and antisymmetrized ("S")
/// sums of plane waves over the six-element reflection orbit of the
/// label, in exponential (Fourier) and cas = cos + sin (Hartley) form.
///
/// Production evaluation expands each orbit image c of the label b into
/// the integer pair (2c1+c2, c1+2c2), so the phase at a grid point
/// [s0,s1,s2] is 2*pi*(p*s1 + q*s2)/(3M) with an integer numerator that
/// is reduced mod 3M before any floating multiply.  This keeps Gram and
/// unitarity residuals near machine precision for every resolution used
/// here.

#include <array>
#include <cmath>
#include <complex>

#include "hweyl/lattice.hpp"

namespace hweyl {

enum class Kernel {
  FourierC,  ///< symmetric exponential sum
  FourierS,  ///< antisymmetric exponential sum
  HartleyC,  ///< symmetric cas sum (real valued)
  HartleyS,  ///< antisymmetric cas sum (real valued)
};

constexpr bool kernel_is_hartley(Kernel k) {
  return k == Kernel::HartleyC || k == Kernel::HartleyS;
}

/// True for the antisymmetrized kinds, which carry the orbit signs and
/// vanish on the triangle boundary.
constexpr bool kernel_is_odd(Kernel k) {
  return k == Kernel::FourierS || k == Kernel::HartleyS;
}

inline const char* to_string(Kernel k) {
  switch (k) {
    case Kernel::FourierC: return "fourier-C";
    case Kernel::FourierS: return "fourier-S";
    case Kernel::HartleyC: return "hartley-C";
    case Kernel::HartleyS: return "hartley-S";
  }
  return "?";
}

namespace detail {

inline constexpr double two_pi = 6.283185307179586476925286766559;

/// Phase coefficient pairs (2c1+c2, c1+2c2) over the orbit of (b1,b2),
/// in weyl_orbit order.
template <class T>
constexpr std::array<std::array<T, 2>, 6> phase_pairs(T b1, T b2) {
  return {{{2 * b1 + b2, b1 + 2 * b2},
           {-b1 + b2, b1 + 2 * b2},
           {-b1 - 2 * b2, b1 - b2},
           {-b1 - 2 * b2, -2 * b1 - b2},
           {-b1 + b2, -2 * b1 - b2},
           {2 * b1 + b2, b1 - b2}}};
}

inline double cas(double a) { return std::cos(a) + std::sin(a); }

template <class AngleAt>
std::complex<double> kernel_sum(Kernel kind, AngleAt&& angle_at) {
  if (kernel_is_hartley(kind)) {
    double acc = 0.0;
    for (int j = 0; j < 6; ++j) {
      const double term = cas(angle_at(j));
      acc += kernel_is_odd(kind) ? weyl_orbit_signs[j] * term : term;
    }
    return {acc, 0.0};
  }
  std::complex<double> acc{0.0, 0.0};
  for (int j = 0; j < 6; ++j) {
    const std::complex<double> term = std::polar(1.0, angle_at(j));
    acc += kernel_is_odd(kind) ? double(weyl_orbit_signs[j]) * term : term;
  }
  return acc;
}

}  // namespace detail

/// Kernel value for a general real label b at a general argument x.
/// Phases are reduced mod a full turn before the trigonometric calls.
inline std::complex<double> eval_kernel(Kernel kind, OmegaVector b,
                                        OmegaVector x) {
  const auto pairs = detail::phase_pairs(b.x1, b.x2);
  return detail::kernel_sum(kind, [&](int j) {
    const double turns = (pairs[j][0] * x.x1 + pairs[j][1] * x.x2) / 3.0;
    return detail::two_pi * std::remainder(turns, 1.0);
  });
}

/// Kernel value for an integer weight label at a general argument.
inline std::complex<double> eval_kernel(Kernel kind, const Weight& b,
                                        OmegaVector x) {
  return eval_kernel(kind, b.coords(), x);
}

/// Kernel value for a weight label at a grid point, with the phase
/// numerator reduced exactly in integer arithmetic.
inline std::complex<double> eval_kernel(Kernel kind, const Weight& b,
                                        const LatticePoint& s) {
  const auto pairs =
      detail::phase_pairs<long long>(b.l1, b.l2);
  const long long den = 3LL * s.M;
  return detail::kernel_sum(kind, [&](int j) {
    long long r = (pairs[j][0] * s.s1 + pairs[j][1] * s.s2) % den;
    if (r < 0) r += den;
    return detail::two_pi * static_cast<double>(r) / static_cast<double>(den);
  });
}

/// Reference evaluation straight from the defining orbit sum, composed
/// from weyl_orbit and scalar_product with no phase folding.  Kept
/// deliberately independent of the production path above; the test
/// suites hold the two to within 1e-12 of each other.
inline std::complex<double> eval_kernel_reference(Kernel kind, OmegaVector b,
                                                  OmegaVector x) {
  const auto orbit = weyl_orbit(b);
  return detail::kernel_sum(kind, [&](int j) {
    return detail::two_pi * scalar_product(orbit[j], x);
  });
}

inline std::complex<double> eval_kernel_reference(Kernel kind, const Weight& b,
                                                  OmegaVector x) {
  return eval_kernel_reference(kind, b.coords(), x);
}

}  // namespace hweyl
