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

/// Spectral interpolation from honeycomb samples, the Gaussian test
/// profile used by the interpolation experiment, triangle quadrature for
/// the squared-error integrals, and the honeycomb spring-lattice
/// eigenfrequency formula.

#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "hweyl/errors.hpp"
#include "hweyl/family.hpp"
#include "hweyl/lattice.hpp"
#include "hweyl/transform.hpp"

namespace hweyl {

/// Gaussian test profile centred at the triangle midpoint (1/3, 1/3);
/// the amplitude is fixed at 0.4.
struct ModelParams {
  double sigma = 0.065;
};

inline double model_function(const ModelParams& p, OmegaVector x) {
  if (!(p.sigma > 0.0)) throw DomainError("sigma must be positive");
  const double u = x.x1 - 1.0 / 3.0;
  const double v = x.x1 + 2.0 * x.x2 - 1.0;
  return 0.4 * std::exp(-(u * u + v * v / 3.0) / (4.0 * p.sigma * p.sigma));
}

/// A spectral interpolant: the family expansion with fixed coefficients,
/// evaluable anywhere.  For speed the plus/minus coefficient pairs are
/// merged per cyclic term, so one evaluation costs at most three kernel
/// sums per weight.
class Interpolant {
 public:
  Interpolant(HoneycombFamily family, SpectrumVector spectrum)
      : family_(std::move(family)), spectrum_(std::move(spectrum)) {
    detail::require_spectrum(spectrum_, family_);
    terms_.reserve(3 * family_.size());
    for (std::size_t i = 0; i < family_.size(); ++i) {
      const auto& c = family_.coeffs(i);
      for (int k = 0; k < 3; ++k) {
        const std::complex<double> merged =
            spectrum_.plus[i] * c.plus[k] + spectrum_.minus[i] * c.minus[k];
        if (merged == 0.0) continue;
        terms_.push_back({gamma_action(k, family_.weight(i)), merged});
      }
    }
  }

  const HoneycombFamily& family() const { return family_; }
  const SpectrumVector& spectrum() const { return spectrum_; }

  std::complex<double> operator()(OmegaVector x) const {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& t : terms_)
      acc += t.coefficient * eval_kernel(family_.kernel(), t.label, x);
    return acc;
  }

 private:
  struct Term {
    Weight label;
    std::complex<double> coefficient;
  };
  HoneycombFamily family_;
  SpectrumVector spectrum_;
  std::vector<Term> terms_;
};

/// Interpolant of the given samples under the family's transform.
inline Interpolant make_interpolant(const HoneycombFamily& fam,
                                    const SampleVector& samples) {
  return Interpolant(fam, forward(fam, samples));
}

/// One-off interpolation of sampled data at an arbitrary argument.  At
/// the sample nodes this reproduces the data.
inline std::complex<double> interpolate(const HoneycombFamily& fam,
                                        const SampleVector& samples,
                                        OmegaVector x) {
  return make_interpolant(fam, samples)(x);
}

/// Euclidean area of the fundamental triangle, sqrt(3)/6.
inline constexpr double fundamental_triangle_area =
    0.28867513459481288225457439025098;

/// Midpoint rule over the fundamental triangle subdivided into
/// resolution^2 congruent sub-triangles: the integrand is evaluated at
/// every sub-triangle centroid and weighted by the constant cell area.
/// Accumulation order is fixed, so results are reproducible bit for bit.
template <class F>
double triangle_quadrature(F&& integrand, int resolution) {
  if (resolution < 1) throw DomainError("quadrature resolution must be >= 1");
  const double n = resolution;
  double acc = 0.0;
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution - i; ++j) {
      acc += integrand(OmegaVector{(i + 1.0 / 3.0) / n, (j + 1.0 / 3.0) / n});
      if (i + j <= resolution - 2)
        acc +=
            integrand(OmegaVector{(i + 2.0 / 3.0) / n, (j + 2.0 / 3.0) / n});
    }
  }
  return acc * fundamental_triangle_area / (n * n);
}

/// Integral of |model - interpolant|^2 over the fundamental triangle,
/// where the interpolant is built from the model's samples on the
/// family's point set.
inline double integral_error(const HoneycombFamily& fam, const ModelParams& p,
                             int resolution) {
  if (resolution < 50)
    throw DomainError("integral_error requires resolution >= 50");
  const auto samples =
      sample_on(family_point_set(fam.kind()), fam.resolution(),
                [&](OmegaVector x) {
                  return std::complex<double>(model_function(p, x), 0.0);
                });
  const Interpolant ih = make_interpolant(fam, samples);
  return triangle_quadrature(
      [&](OmegaVector x) {
        const std::complex<double> diff = model_function(p, x) - ih(x);
        return std::norm(diff);
      },
      resolution);
}

/// Spring-lattice parameters: spring constant, node mass and the
/// stretching ratio (natural length over equilibrium spacing, < 1).
struct GrapheneParams {
  double kappa = 1.0;
  double mass = 1.0;
  double eta = 0.5;
};

/// Transversal eigenfrequency pair of the stretched spring lattice for
/// one mode label,
///   omega± = sqrt(kappa (1-eta)/m (3 ± |Phi_l(w1/M)| / 2)).
/// The minus radicand is non-negative since |Phi| <= 6; tiny negative
/// rounding is clamped, anything worse raises DomainError.
inline std::pair<double, double> graphene_frequencies(const GrapheneParams& g,
                                                      const Weight& l) {
  if (!(g.kappa > 0.0)) throw DomainError("kappa must be positive");
  if (!(g.mass > 0.0)) throw DomainError("mass must be positive");
  if (!(g.eta > 0.0 && g.eta < 1.0))
    throw DomainError("eta must lie strictly between 0 and 1");
  const double mag = std::abs(
      eval_kernel(Kernel::FourierC, l, LatticePoint{l.M - 1, 1, 0, l.M}));
  const double base = g.kappa * (1.0 - g.eta) / g.mass;
  const double rp = base * (3.0 + 0.5 * mag);
  double rm = base * (3.0 - 0.5 * mag);
  if (rm < 0.0) {
    if (rm > -1e-12 * base)
      rm = 0.0;
    else
      throw DomainError("negative radicand in the frequency formula");
  }
  return {std::sqrt(rp), std::sqrt(rm)};
}

}  // namespace hweyl
