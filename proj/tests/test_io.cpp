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

#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "hweyl/io.hpp"
#include "support/helpers.hpp"

using namespace hweyl;

TEST_CASE("sample CSV round trip with scrambled rows") {
  auto g = testutil::rng(41);
  const int M = 6;
  SampleVector f{M, PointSetKind::HM, {}};
  const auto n = point_count(PointSetKind::HM, M);
  for (std::size_t j = 0; j < n; ++j)
    f.values.push_back(testutil::random_complex(g, 2.0));

  std::ostringstream os;
  io::write_samples_csv(os, f);
  const std::string text = os.str();

  // canonical order parses back exactly
  std::istringstream is(text);
  const auto back = io::read_samples_csv(is, M, PointSetKind::HM);
  for (std::size_t j = 0; j < n; ++j) CHECK(back.values[j] == f.values[j]);

  // reversed data rows parse to the same canonical vector
  std::vector<std::string> lines;
  std::istringstream splitter(text);
  std::string line;
  while (std::getline(splitter, line)) lines.push_back(line);
  std::ostringstream scrambled;
  scrambled << lines[0] << '\n';
  for (std::size_t i = lines.size(); i-- > 1;) scrambled << lines[i] << '\n';
  std::istringstream is2(scrambled.str());
  const auto back2 = io::read_samples_csv(is2, M, PointSetKind::HM);
  for (std::size_t j = 0; j < n; ++j) CHECK(back2.values[j] == f.values[j]);
}

TEST_CASE("sample CSV rejects missing, duplicate and alien nodes") {
  const int M = 4;
  const std::string header = "s0,s1,s2,re,im\n";
  std::istringstream missing(header + "0,0,4,1.0,0.0\n");
  CHECK_THROWS_AS(io::read_samples_csv(missing, M, PointSetKind::HM),
                  ParseError);

  std::ostringstream full;
  const auto pts = generate_points(PointSetKind::HM, M);
  full << header;
  for (const auto& p : pts)
    full << p.s0 << ',' << p.s1 << ',' << p.s2 << ",1.0,0.0\n";
  std::istringstream dup(full.str() + "0,0,4,2.0,0.0\n");
  CHECK_THROWS_AS(io::read_samples_csv(dup, M, PointSetKind::HM), ParseError);

  std::istringstream alien(full.str() + "0,2,2,2.0,0.0\n");
  CHECK_THROWS_AS(io::read_samples_csv(alien, M, PointSetKind::HM),
                  ParseError);

  std::istringstream badnum(header + "0,0,x,1.0,0.0\n");
  CHECK_THROWS_AS(io::read_samples_csv(badnum, M, PointSetKind::HM),
                  ParseError);
}

TEST_CASE("spectrum CSV round trip") {
  auto g = testutil::rng(42);
  const int M = 7;
  const auto n = weight_count(WeightSetKind::LMInterior, M);
  SpectrumVector c{M, FamilyKind::S, {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    c.plus.push_back(testutil::random_complex(g, 1.0));
    c.minus.push_back(testutil::random_complex(g, 1.0));
  }
  std::ostringstream os;
  io::write_spectrum_csv(os, c);
  std::istringstream is(os.str());
  const auto back = io::read_spectrum_csv(is, M, FamilyKind::S);
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(back.plus[i] == c.plus[i]);
    CHECK(back.minus[i] == c.minus[i]);
  }
}

TEST_CASE("coefficient JSON round trip rebuilds the family") {
  const HoneycombFamily fam(FamilyKind::C, KernelFamily::Hartley, 5,
                            CoeffPreset::Type2);
  std::stringstream buf;
  buf << io::coeffs_to_json(fam).dump();
  const auto file = io::read_coeffs_json(buf);
  CHECK(file.M == 5);
  CHECK(file.kind == FamilyKind::C);
  const auto rebuilt = HoneycombFamily::from_pairs(
      file.kind, KernelFamily::Hartley, file.M, file.entries);
  REQUIRE(rebuilt.size() == fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i) {
    CHECK(rebuilt.weight(i) == fam.weight(i));
    CHECK(rebuilt.coeffs(i) == fam.coeffs(i));
  }
}

TEST_CASE("matrix CSV shape and precision") {
  const HoneycombFamily real_fam(FamilyKind::C, KernelFamily::Hartley, 4,
                                 CoeffPreset::Type2);
  std::ostringstream os;
  io::write_matrix_csv(os, build_matrix(real_fam), 3);
  std::istringstream is(os.str());
  std::string line;
  std::size_t rows = 0;
  while (std::getline(is, line)) {
    ++rows;
    CHECK(io::detail::split_csv_line(line).size() == 10);
  }
  CHECK(rows == 10);

  // complex entries double the cell count
  const HoneycombFamily cplx_fam(FamilyKind::C, KernelFamily::Fourier, 4,
                                 CoeffPreset::Type3);
  std::ostringstream os2;
  io::write_matrix_csv(os2, build_matrix(cplx_fam), -1);
  std::istringstream is2(os2.str());
  std::getline(is2, line);
  CHECK(io::detail::split_csv_line(line).size() == 20);
}

TEST_CASE("point and weight CSV layout") {
  std::ostringstream os;
  io::write_points_csv(os, generate_points(PointSetKind::FPM, 1));
  CHECK(os.str() ==
        "index,c0,c1,c2,M\n0,0,0,1,1\n1,0,1,0,1\n2,1,0,0,1\n");
  std::ostringstream ws;
  io::write_weights_csv(ws, generate_weights(WeightSetKind::Fixed, 6));
  CHECK(ws.str() == "index,c0,c1,c2,M\n0,2,2,2,6\n");
}

TEST_CASE("full-precision doubles survive the round trip") {
  const double v = 0.12345678901234567;
  CHECK(io::detail::parse_double(io::format_double(v), "v") == v);
  CHECK(io::format_double(0.4330127018922193, 3) == "0.433");
}
