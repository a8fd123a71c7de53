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

/// Discrete scalar products on the honeycomb fragment and its interior,
/// the four forward/backward transforms, and assembly of the unitary
/// transform matrices.
///
/// Forward C coefficients: (12 M^2 h(l) mu±(l))^-1 sum_s eps(s) f(s)
/// conj(B±_l(s)) over the honeycomb fragment.  Forward S coefficients:
/// (2 M^2 mu±(l))^-1 sum over the interior without point weights.
/// Matrices stack the plus block over the minus block, rows and columns
/// in the canonical lexicographic orders.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "hweyl/errors.hpp"
#include "hweyl/family.hpp"
#include "hweyl/lattice.hpp"

namespace hweyl {

/// Function samples on an ordered point set (one value per point of
/// generate_points(domain, M)).
struct SampleVector {
  int M = 1;
  PointSetKind domain = PointSetKind::HM;
  std::vector<std::complex<double>> values;
};

/// Paired spectra over the ordered weight set of a family.
struct SpectrumVector {
  int M = 1;
  FamilyKind kind = FamilyKind::C;
  std::vector<std::complex<double>> plus;
  std::vector<std::complex<double>> minus;
};

namespace detail {

inline void require_same_shape(const SampleVector& f, const SampleVector& g) {
  if (f.M != g.M || f.domain != g.domain ||
      f.values.size() != g.values.size())
    throw DimensionMismatchError(
        "sample vectors differ in resolution, domain or length");
}

inline void require_domain(const SampleVector& f, PointSetKind domain,
                           int M) {
  if (f.M != M || f.domain != domain)
    throw DimensionMismatchError(
        "sample vector does not live on the expected point set");
  if (f.values.size() != point_count(domain, M))
    throw DimensionMismatchError("sample vector has the wrong length");
}

inline void require_spectrum(const SpectrumVector& c,
                             const HoneycombFamily& fam) {
  if (c.M != fam.resolution() || c.kind != fam.kind() ||
      c.plus.size() != fam.size() || c.minus.size() != fam.size())
    throw DimensionMismatchError("spectrum does not match the family");
}

}  // namespace detail

/// Weighted scalar product over the honeycomb fragment,
/// sum_s eps(s) f(s) conj(g(s)).
inline std::complex<double> scalar_product_hm(const SampleVector& f,
                                              const SampleVector& g) {
  detail::require_same_shape(f, g);
  if (f.domain != PointSetKind::HM)
    throw DimensionMismatchError("samples are not on the honeycomb fragment");
  const auto pts = generate_points(PointSetKind::HM, f.M);
  if (pts.size() != f.values.size())
    throw DimensionMismatchError("sample vector has the wrong length");
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t j = 0; j < pts.size(); ++j)
    acc += static_cast<double>(epsilon(pts[j])) * f.values[j] *
           std::conj(g.values[j]);
  return acc;
}

/// Scalar product over the interior fragment, 6 sum_s f(s) conj(g(s)).
inline std::complex<double> scalar_product_hm_interior(const SampleVector& f,
                                                       const SampleVector& g) {
  detail::require_same_shape(f, g);
  if (f.domain != PointSetKind::HMInterior)
    throw DimensionMismatchError("samples are not on the interior fragment");
  if (f.values.size() != point_count(PointSetKind::HMInterior, f.M))
    throw DimensionMismatchError("sample vector has the wrong length");
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t j = 0; j < f.values.size(); ++j)
    acc += f.values[j] * std::conj(g.values[j]);
  return 6.0 * acc;
}

/// Sample an arbitrary function on the canonical ordered point set.
template <class F>
SampleVector sample_on(PointSetKind domain, int M, F&& fn) {
  const auto pts = generate_points(domain, M);
  SampleVector out{M, domain, {}};
  out.values.reserve(pts.size());
  for (const auto& s : pts) out.values.push_back(fn(s.coords()));
  return out;
}

/// Samples of one family member on the family's own point set, on the
/// exact evaluation path.
inline SampleVector sample_family(const HoneycombFamily& fam, Sign sign,
                                  std::size_t index) {
  const auto domain = family_point_set(fam.kind());
  const auto pts = generate_points(domain, fam.resolution());
  SampleVector out{fam.resolution(), domain, {}};
  out.values.reserve(pts.size());
  for (const auto& s : pts) out.values.push_back(fam.eval(sign, index, s));
  return out;
}

/// Forward transform for C-kind families.
inline SpectrumVector forward_c(const HoneycombFamily& fam,
                                const SampleVector& f) {
  if (fam.kind() != FamilyKind::C)
    throw DomainError("forward_c requires a C-kind family");
  detail::require_domain(f, PointSetKind::HM, fam.resolution());
  const auto pts = generate_points(PointSetKind::HM, fam.resolution());
  const double m2 = static_cast<double>(fam.resolution()) * fam.resolution();
  SpectrumVector out{fam.resolution(), fam.kind(), {}, {}};
  out.plus.resize(fam.size());
  out.minus.resize(fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i) {
    std::complex<double> accp{0.0, 0.0}, accm{0.0, 0.0};
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const double w = epsilon(pts[j]);
      accp += w * f.values[j] * std::conj(fam.eval(Sign::Plus, i, pts[j]));
      accm += w * f.values[j] * std::conj(fam.eval(Sign::Minus, i, pts[j]));
    }
    const double h = h_weight(fam.weight(i));
    out.plus[i] = accp / (12.0 * m2 * h * fam.mu(Sign::Plus, i));
    out.minus[i] = accm / (12.0 * m2 * h * fam.mu(Sign::Minus, i));
  }
  return out;
}

/// Backward transform for C-kind families: evaluates the spectral sum at
/// every honeycomb node.
inline SampleVector inverse_c(const HoneycombFamily& fam,
                              const SpectrumVector& c) {
  if (fam.kind() != FamilyKind::C)
    throw DomainError("inverse_c requires a C-kind family");
  detail::require_spectrum(c, fam);
  const auto pts = generate_points(PointSetKind::HM, fam.resolution());
  SampleVector out{fam.resolution(), PointSetKind::HM, {}};
  out.values.assign(pts.size(), {0.0, 0.0});
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      out.values[j] += c.plus[i] * fam.eval(Sign::Plus, i, pts[j]) +
                       c.minus[i] * fam.eval(Sign::Minus, i, pts[j]);
  return out;
}

/// Forward transform for S-kind families (interior samples, no point
/// weights in the sum).
inline SpectrumVector forward_s(const HoneycombFamily& fam,
                                const SampleVector& f) {
  if (fam.kind() != FamilyKind::S)
    throw DomainError("forward_s requires an S-kind family");
  if (fam.resolution() <= 3)
    throw DomainError("S-kind transforms require M > 3");
  detail::require_domain(f, PointSetKind::HMInterior, fam.resolution());
  const auto pts =
      generate_points(PointSetKind::HMInterior, fam.resolution());
  const double m2 = static_cast<double>(fam.resolution()) * fam.resolution();
  SpectrumVector out{fam.resolution(), fam.kind(), {}, {}};
  out.plus.resize(fam.size());
  out.minus.resize(fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i) {
    std::complex<double> accp{0.0, 0.0}, accm{0.0, 0.0};
    for (std::size_t j = 0; j < pts.size(); ++j) {
      accp += f.values[j] * std::conj(fam.eval(Sign::Plus, i, pts[j]));
      accm += f.values[j] * std::conj(fam.eval(Sign::Minus, i, pts[j]));
    }
    out.plus[i] = accp / (2.0 * m2 * fam.mu(Sign::Plus, i));
    out.minus[i] = accm / (2.0 * m2 * fam.mu(Sign::Minus, i));
  }
  return out;
}

inline SampleVector inverse_s(const HoneycombFamily& fam,
                              const SpectrumVector& c) {
  if (fam.kind() != FamilyKind::S)
    throw DomainError("inverse_s requires an S-kind family");
  detail::require_spectrum(c, fam);
  const auto pts =
      generate_points(PointSetKind::HMInterior, fam.resolution());
  SampleVector out{fam.resolution(), PointSetKind::HMInterior, {}};
  out.values.assign(pts.size(), {0.0, 0.0});
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      out.values[j] += c.plus[i] * fam.eval(Sign::Plus, i, pts[j]) +
                       c.minus[i] * fam.eval(Sign::Minus, i, pts[j]);
  return out;
}

/// Kind-dispatching conveniences.
inline SpectrumVector forward(const HoneycombFamily& fam,
                              const SampleVector& f) {
  return fam.kind() == FamilyKind::C ? forward_c(fam, f) : forward_s(fam, f);
}
inline SampleVector inverse(const HoneycombFamily& fam,
                            const SpectrumVector& c) {
  return fam.kind() == FamilyKind::C ? inverse_c(fam, c) : inverse_s(fam, c);
}

/// The square unitary matrix of the normalized transform.  Row blocks:
/// plus family first, then minus, each over the canonical weight order.
/// Columns run over the canonical point order.
struct TransformMatrix {
  int M = 1;
  FamilyKind kind = FamilyKind::C;
  KernelFamily kernel = KernelFamily::Fourier;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::complex<double>> entries;  // row-major

  std::complex<double>& at(std::size_t r, std::size_t c) {
    return entries[r * cols + c];
  }
  const std::complex<double>& at(std::size_t r, std::size_t c) const {
    return entries[r * cols + c];
  }
};

/// Assemble the normalized transform matrix of a family.  Row scaling:
/// sqrt(eps(s) / (12 M^2 h(l) mu±(l))) for the C kind and
/// sqrt(1 / (2 M^2 h(l) mu±(l))) for the S kind, times the conjugated
/// family value at the point.
inline TransformMatrix build_matrix(const HoneycombFamily& fam) {
  const auto pts =
      generate_points(family_point_set(fam.kind()), fam.resolution());
  const double m2 = static_cast<double>(fam.resolution()) * fam.resolution();
  TransformMatrix out;
  out.M = fam.resolution();
  out.kind = fam.kind();
  out.kernel = fam.kernel_family();
  out.rows = 2 * fam.size();
  out.cols = pts.size();
  out.entries.assign(out.rows * out.cols, {0.0, 0.0});
  for (const Sign sign : {Sign::Plus, Sign::Minus}) {
    const std::size_t row0 = sign == Sign::Plus ? 0 : fam.size();
    for (std::size_t i = 0; i < fam.size(); ++i) {
      const double h = h_weight(fam.weight(i));
      const double mu = fam.mu(sign, i);
      for (std::size_t j = 0; j < pts.size(); ++j) {
        const double factor =
            fam.kind() == FamilyKind::C
                ? std::sqrt(epsilon(pts[j]) / (12.0 * m2 * h * mu))
                : std::sqrt(1.0 / (2.0 * m2 * h * mu));
        out.at(row0 + i, j) =
            factor * std::conj(fam.eval(sign, i, pts[j]));
      }
    }
  }
  return out;
}

/// max |A A^dagger - 1| over all entries.
inline double unitarity_residual(const TransformMatrix& a) {
  double worst = 0.0;
  for (std::size_t r = 0; r < a.rows; ++r) {
    for (std::size_t c = 0; c < a.rows; ++c) {
      std::complex<double> acc{0.0, 0.0};
      for (std::size_t k = 0; k < a.cols; ++k)
        acc += a.at(r, k) * std::conj(a.at(c, k));
      if (r == c) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

/// Largest deviation of the family Gram matrix from its expected
/// diagonal, normalized by the largest expected diagonal entry.  Uses
/// the discrete scalar product matching the family kind; the expected
/// diagonal is 12 M^2 h(l) mu±(l) for the C kind and 12 M^2 mu±(l) for
/// the S kind.
inline double gram_residual(const HoneycombFamily& fam) {
  const std::size_t n = fam.size();
  std::vector<SampleVector> basis;
  basis.reserve(2 * n);
  for (const Sign sign : {Sign::Plus, Sign::Minus})
    for (std::size_t i = 0; i < n; ++i)
      basis.push_back(sample_family(fam, sign, i));
  const double m2 = static_cast<double>(fam.resolution()) * fam.resolution();
  std::vector<double> expected(2 * n);
  double scale = 0.0;
  for (std::size_t a = 0; a < 2 * n; ++a) {
    const Sign sign = a < n ? Sign::Plus : Sign::Minus;
    const std::size_t i = a < n ? a : a - n;
    const double h =
        fam.kind() == FamilyKind::C ? h_weight(fam.weight(i)) : 1.0;
    expected[a] = 12.0 * m2 * h * fam.mu(sign, i);
    scale = std::max(scale, expected[a]);
  }
  double worst = 0.0;
  for (std::size_t a = 0; a < 2 * n; ++a) {
    for (std::size_t b = a; b < 2 * n; ++b) {
      const std::complex<double> g =
          fam.kind() == FamilyKind::C
              ? scalar_product_hm(basis[a], basis[b])
              : scalar_product_hm_interior(basis[a], basis[b]);
      const double dev =
          a == b ? std::abs(g - expected[a]) : std::abs(g);
      worst = std::max(worst, dev);
    }
  }
  return worst / scale;
}

}  // namespace hweyl
