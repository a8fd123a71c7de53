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

#include <complex>

#include <catch2/catch_amalgamated.hpp>

#include "hweyl/orbit.hpp"
#include "support/helpers.hpp"

using namespace hweyl;

namespace {
constexpr std::array<Kernel, 4> all_kernels{Kernel::FourierC, Kernel::FourierS,
                                            Kernel::HartleyC,
                                            Kernel::HartleyS};
}

TEST_CASE("kernels at trivial labels and arguments") {
  auto g = testutil::rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = testutil::random_vector(g, -3.0, 3.0);
    CHECK(std::abs(eval_kernel(Kernel::FourierC, OmegaVector{0, 0}, x) - 6.0) <
          1e-12);
    CHECK(std::abs(eval_kernel(Kernel::HartleyC, OmegaVector{0, 0}, x) - 6.0) <
          1e-12);
    const auto b = testutil::random_vector(g, -6.0, 6.0);
    CHECK(std::abs(eval_kernel(Kernel::FourierS, b, OmegaVector{0, 0})) <
          1e-12);
    CHECK(std::abs(eval_kernel(Kernel::FourierC, b, OmegaVector{0, 0}) - 6.0) <
          1e-12);
  }
}

TEST_CASE("closed form agrees with the defining orbit sum") {
  auto g = testutil::rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    const Kernel kind = all_kernels[trial % 4];
    const auto b = testutil::random_vector(g, -8.0, 8.0);
    const auto x = testutil::random_vector(g, -2.0, 2.0);
    const auto lhs = eval_kernel(kind, b, x);
    const auto rhs = eval_kernel_reference(kind, b, x);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("exact grid path agrees with the generic path and the orbit sum") {
  auto g = testutil::rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const int M = 1 + int(testutil::uniform(g, 0, 12));
    const auto ws = generate_weights(WeightSetKind::LambdaQM, M);
    const auto pts = generate_points(PointSetKind::FPM, M);
    const auto& b = ws[std::size_t(testutil::uniform(g, 0, double(ws.size())))];
    const auto& s =
        pts[std::size_t(testutil::uniform(g, 0, double(pts.size())))];
    const Kernel kind = all_kernels[trial % 4];
    const auto exact = eval_kernel(kind, b, s);
    const auto generic = eval_kernel(kind, b, s.coords());
    const auto reference = eval_kernel_reference(kind, b.coords(), s.coords());
    CHECK(std::abs(exact - generic) < 1e-12);
    CHECK(std::abs(exact - reference) < 1e-12);
  }
}

TEST_CASE("argument symmetry under the reflection group") {
  auto g = testutil::rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto b = testutil::random_vector(g, -6.0, 6.0);
    const auto x = testutil::random_vector(g, -2.0, 2.0);
    const auto images = weyl_orbit(x);
    for (int j = 0; j < 6; ++j) {
      for (const Kernel kind : all_kernels) {
        const auto base = eval_kernel(kind, b, x);
        const auto moved = eval_kernel(kind, b, images[j]);
        const double sign = kernel_is_odd(kind) ? weyl_orbit_signs[j] : 1.0;
        CHECK(std::abs(moved - sign * base) < 1e-12);
      }
    }
  }
}

TEST_CASE("root-lattice shift invariance") {
  auto g = testutil::rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    // integer label: shift periodicity holds for weight-lattice labels
    const OmegaVector b{double(int(testutil::uniform(g, -6, 7))),
                        double(int(testutil::uniform(g, -6, 7)))};
    const auto x = testutil::random_vector(g, -2.0, 2.0);
    for (const Kernel kind : all_kernels) {
      const auto base = eval_kernel(kind, b, x);
      CHECK(std::abs(eval_kernel(kind, b, x + alpha1) - base) < 1e-12);
      CHECK(std::abs(eval_kernel(kind, b, x + alpha2) - base) < 1e-12);
    }
  }
}

TEST_CASE("antisymmetric kernels vanish on the triangle boundary") {
  auto g = testutil::rng(7);
  const auto pts = testutil::boundary_points(g, 60);
  for (const auto& x : pts) {
    const OmegaVector b{double(int(testutil::uniform(g, 0, 9))),
                        double(int(testutil::uniform(g, 0, 9)))};
    CHECK(std::abs(eval_kernel(Kernel::FourierS, b, x)) < 1e-10);
    CHECK(std::abs(eval_kernel(Kernel::HartleyS, b, x)) < 1e-10);
  }
}

TEST_CASE("conjugation under argument negation") {
  auto g = testutil::rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const auto b = testutil::random_vector(g, -6.0, 6.0);
    const auto x = testutil::random_vector(g, -2.0, 2.0);
    const auto v = eval_kernel(Kernel::FourierC, b, x);
    const auto w = eval_kernel(Kernel::FourierC, b, OmegaVector{-x.x1, -x.x2});
    CHECK(std::abs(w - std::conj(v)) < 1e-12);
  }
}

TEST_CASE("Hartley kernels are exactly real") {
  auto g = testutil::rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const auto b = testutil::random_vector(g, -6.0, 6.0);
    const auto x = testutil::random_vector(g, -2.0, 2.0);
    CHECK(eval_kernel(Kernel::HartleyC, b, x).imag() == 0.0);
    CHECK(eval_kernel(Kernel::HartleyS, b, x).imag() == 0.0);
  }
}
