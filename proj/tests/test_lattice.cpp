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

#include <algorithm>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "hweyl/lattice.hpp"
#include "support/golden.hpp"
#include "support/helpers.hpp"

using namespace hweyl;

namespace {

std::vector<std::array<int, 3>> triples(const std::vector<LatticePoint>& v) {
  std::vector<std::array<int, 3>> out;
  for (const auto& p : v) out.push_back(p.triple());
  return out;
}

std::vector<std::array<int, 3>> triples(const std::vector<Weight>& v) {
  std::vector<std::array<int, 3>> out;
  for (const auto& w : v) out.push_back(w.triple());
  return out;
}

}  // namespace

TEST_CASE("scalar product of omega-basis vectors") {
  CHECK(scalar_product({1, 0}, {1, 0}) == Catch::Approx(2.0 / 3.0));
  CHECK(scalar_product({0, 1}, {0, 1}) == Catch::Approx(2.0 / 3.0));
  CHECK(scalar_product({1, 0}, {0, 1}) == Catch::Approx(1.0 / 3.0));
  CHECK(scalar_product({0, 0}, {3.7, -1.2}) == 0.0);
  CHECK(scalar_product({1, 1}, {1, 1}) == Catch::Approx(2.0));
}

TEST_CASE("reflection orbit of (1,0)") {
  const auto orbit = weyl_orbit({1.0, 0.0});
  const std::array<OmegaVector, 6> expected{
      {{1, 0}, {-1, 1}, {-1, 1}, {0, -1}, {0, -1}, {1, 0}}};
  for (int j = 0; j < 6; ++j) {
    CHECK(orbit[j].x1 == expected[j].x1);
    CHECK(orbit[j].x2 == expected[j].x2);
  }
}

TEST_CASE("reflection orbit fixes the origin") {
  for (const auto& v : weyl_orbit({0.0, 0.0})) {
    CHECK(v.x1 == 0.0);
    CHECK(v.x2 == 0.0);
  }
}

TEST_CASE("reflection orbit preserves the norm") {
  auto g = testutil::rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = testutil::random_vector(g, -5.0, 5.0);
    const double n = scalar_product(x, x);
    for (const auto& y : weyl_orbit(x))
      CHECK(scalar_product(y, y) == Catch::Approx(n).margin(1e-12));
  }
}

TEST_CASE("printed point sets") {
  CHECK(triples(generate_points(PointSetKind::HM, 4)) ==
        std::vector<std::array<int, 3>>(golden::h4.begin(), golden::h4.end()));
  CHECK(triples(generate_points(PointSetKind::HMInterior, 7)) ==
        std::vector<std::array<int, 3>>(golden::h7_interior.begin(),
                                        golden::h7_interior.end()));
  CHECK(triples(generate_points(PointSetKind::FPM, 1)) ==
        std::vector<std::array<int, 3>>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
}

TEST_CASE("printed weight sets") {
  CHECK(triples(generate_weights(WeightSetKind::LM, 4)) ==
        std::vector<std::array<int, 3>>(golden::l4.begin(), golden::l4.end()));
  CHECK(triples(generate_weights(WeightSetKind::LMInterior, 7)) ==
        std::vector<std::array<int, 3>>(golden::l7_interior.begin(),
                                        golden::l7_interior.end()));
  CHECK(triples(generate_weights(WeightSetKind::Fixed, 6)) ==
        std::vector<std::array<int, 3>>{{2, 2, 2}});
  CHECK(generate_weights(WeightSetKind::Fixed, 7).empty());
}

TEST_CASE("enumeration matches the closed counting formulas") {
  for (int M = 1; M <= 30; ++M) {
    for (const auto kind :
         {PointSetKind::FPM, PointSetKind::FQM, PointSetKind::HM,
          PointSetKind::HM1, PointSetKind::HM2, PointSetKind::FPMInterior,
          PointSetKind::FQMInterior, PointSetKind::HMInterior}) {
      INFO("point set " << to_string(kind) << " M=" << M);
      CHECK(generate_points(kind, M).size() == point_count(kind, M));
    }
    for (const auto kind :
         {WeightSetKind::LambdaQM, WeightSetKind::LambdaPM, WeightSetKind::LM,
          WeightSetKind::LambdaQMInterior, WeightSetKind::LambdaPMInterior,
          WeightSetKind::LMInterior, WeightSetKind::Fixed}) {
      INFO("weight set " << to_string(kind) << " M=" << M);
      CHECK(generate_weights(kind, M).size() == weight_count(kind, M));
    }
  }
}

TEST_CASE("weight sets pair off with point sets") {
  for (int M = 1; M <= 30; ++M) {
    CHECK(weight_count(WeightSetKind::LambdaQM, M) ==
          point_count(PointSetKind::FPM, M));
    CHECK(weight_count(WeightSetKind::LambdaPM, M) ==
          point_count(PointSetKind::FQM, M));
    CHECK(2 * weight_count(WeightSetKind::LM, M) ==
          point_count(PointSetKind::HM, M));
    if (M > 3)
      CHECK(2 * weight_count(WeightSetKind::LMInterior, M) ==
            point_count(PointSetKind::HMInterior, M));
  }
}

TEST_CASE("reference set sizes") {
  CHECK(generate_points(PointSetKind::FPM, 7).size() == 36);
  CHECK(generate_points(PointSetKind::FQM, 7).size() == 12);
  CHECK(generate_points(PointSetKind::FPMInterior, 7).size() == 15);
  CHECK(generate_points(PointSetKind::FQMInterior, 7).size() == 5);
  CHECK(generate_points(PointSetKind::HM, 6).size() == 18);
  CHECK(generate_points(PointSetKind::HMInterior, 6).size() == 6);
  CHECK(generate_weights(WeightSetKind::LM, 6).size() == 9);
  CHECK(generate_weights(WeightSetKind::LMInterior, 6).size() == 3);
  CHECK(generate_weights(WeightSetKind::LM, 7).size() == 12);
  CHECK(generate_weights(WeightSetKind::LMInterior, 7).size() == 5);
}

TEST_CASE("honeycomb set is the grid difference and splits into cosets") {
  for (const int M : {4, 6, 7, 9}) {
    const auto fp = triples(generate_points(PointSetKind::FPM, M));
    const auto fq = triples(generate_points(PointSetKind::FQM, M));
    const auto hm = triples(generate_points(PointSetKind::HM, M));
    std::vector<std::array<int, 3>> diff;
    std::set_difference(fp.begin(), fp.end(), fq.begin(), fq.end(),
                        std::back_inserter(diff));
    CHECK(hm == diff);

    const auto h1 = triples(generate_points(PointSetKind::HM1, M));
    const auto h2 = triples(generate_points(PointSetKind::HM2, M));
    std::vector<std::array<int, 3>> merged;
    std::set_union(h1.begin(), h1.end(), h2.begin(), h2.end(),
                   std::back_inserter(merged));
    CHECK(merged == hm);
    CHECK(h1.size() + h2.size() == hm.size());
  }
}

TEST_CASE("generated lists are strictly increasing") {
  for (const int M : {1, 5, 12}) {
    for (const auto kind :
         {PointSetKind::FPM, PointSetKind::HM, PointSetKind::HM1,
          PointSetKind::HMInterior}) {
      const auto t = triples(generate_points(kind, M));
      CHECK(std::is_sorted(t.begin(), t.end()));
      CHECK(std::adjacent_find(t.begin(), t.end()) == t.end());
    }
    for (const auto kind : {WeightSetKind::LambdaQM, WeightSetKind::LM}) {
      const auto t = triples(generate_weights(kind, M));
      CHECK(std::is_sorted(t.begin(), t.end()));
      CHECK(std::adjacent_find(t.begin(), t.end()) == t.end());
    }
  }
}

TEST_CASE("interior sets are empty for small M") {
  for (const int M : {1, 2, 3}) {
    CHECK(generate_points(PointSetKind::HMInterior, M).empty());
    CHECK(generate_weights(WeightSetKind::LMInterior, M).empty());
  }
  CHECK(generate_points(PointSetKind::FPMInterior, 3).size() == 1);
}

TEST_CASE("invalid resolution is rejected") {
  CHECK_THROWS_AS(generate_points(PointSetKind::HM, 0), DomainError);
  CHECK_THROWS_AS(generate_weights(WeightSetKind::LM, -2), DomainError);
}

TEST_CASE("point multiplicity") {
  CHECK(epsilon({1, 2, 4, 7}) == 6);
  CHECK(epsilon({0, 3, 4, 7}) == 3);
  CHECK(epsilon({7, 0, 0, 7}) == 1);
}

TEST_CASE("weight multiplicity") {
  CHECK(h_weight({3, 2, 2, 7}) == 1);
  CHECK(h_weight({0, 3, 4, 7}) == 2);
  CHECK(h_weight({7, 0, 0, 7}) == 6);
}

TEST_CASE("fixed-point multiplicity") {
  CHECK(d_weight({2, 2, 2, 6}) == 3);
  CHECK(d_weight({3, 2, 1, 6}) == 1);
  CHECK(d_weight({4, 0, 0, 4}) == 1);
}

TEST_CASE("cyclic weight action") {
  const Weight w{3, 2, 1, 6};
  CHECK(gamma_action(0, w) == w);
  CHECK(gamma_action(1, w) == Weight{1, 3, 2, 6});
  CHECK(gamma_action(2, w) == Weight{2, 1, 3, 6});
  CHECK(gamma_action(2, gamma_action(1, w)) == w);
  CHECK(gamma_action(3, w) == w);

  for (const auto& l : generate_weights(WeightSetKind::LambdaQM, 9))
    for (int k = 0; k < 3; ++k)
      CHECK(h_weight(gamma_action(k, l)) == h_weight(l));
}
