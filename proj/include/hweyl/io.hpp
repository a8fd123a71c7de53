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

/// CSV and JSON serialization of point/weight lists, sample and spectrum
/// vectors, transform matrices and coefficient tables.
///
/// CSV numbers are written with 17 significant digits unless a display
/// precision is requested; JSON goes through nlohmann::json, which emits
/// shortest round-trip doubles.  Readers accept rows in any order and
/// canonicalize to the lexicographic point/weight order, rejecting
/// missing or duplicate entries.

#include <algorithm>
#include <array>
#include <cctype>
#include <complex>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hweyl/errors.hpp"
#include "hweyl/family.hpp"
#include "hweyl/lattice.hpp"
#include "hweyl/transform.hpp"

namespace hweyl {

namespace io {

using nlohmann::json;

/// Shortest-precision-preserving or fixed-precision decimal rendering.
inline std::string format_double(double v, int precision = -1) {
  char buf[64];
  if (precision < 0)
    std::snprintf(buf, sizeof(buf), "%.17g", v);
  else
    std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  return buf;
}

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

inline int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("bad integer for ") + what + ": '" + s + "'");
  }
}

inline double parse_double(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("bad number for ") + what + ": '" + s + "'");
  }
}

/// Column indices of the named headers; throws if one is absent.
inline std::vector<std::size_t> header_columns(
    const std::vector<std::string>& header,
    const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  for (const auto& name : names) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end())
      throw ParseError("missing CSV column '" + name + "'");
    out.push_back(static_cast<std::size_t>(it - header.begin()));
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------- points

inline void write_points_csv(std::ostream& os,
                             const std::vector<LatticePoint>& pts) {
  os << "index,c0,c1,c2,M\n";
  for (std::size_t i = 0; i < pts.size(); ++i)
    os << i << ',' << pts[i].s0 << ',' << pts[i].s1 << ',' << pts[i].s2
       << ',' << pts[i].M << '\n';
}

inline void write_weights_csv(std::ostream& os,
                              const std::vector<Weight>& ws) {
  os << "index,c0,c1,c2,M\n";
  for (std::size_t i = 0; i < ws.size(); ++i)
    os << i << ',' << ws[i].l0 << ',' << ws[i].l1 << ',' << ws[i].l2 << ','
       << ws[i].M << '\n';
}

inline json points_to_json(const std::string& set_name, int M,
                           const std::vector<LatticePoint>& pts) {
  json triples = json::array();
  for (const auto& p : pts) triples.push_back({p.s0, p.s1, p.s2});
  return json{{"set", set_name}, {"M", M}, {"points", std::move(triples)}};
}

inline json weights_to_json(const std::string& set_name, int M,
                            const std::vector<Weight>& ws) {
  json triples = json::array();
  for (const auto& w : ws) triples.push_back({w.l0, w.l1, w.l2});
  return json{{"set", set_name}, {"M", M}, {"weights", std::move(triples)}};
}

// --------------------------------------------------------------- samples

inline void write_samples_csv(std::ostream& os, const SampleVector& f) {
  const auto pts = generate_points(f.domain, f.M);
  os << "index,s0,s1,s2,re,im\n";
  for (std::size_t i = 0; i < pts.size(); ++i)
    os << i << ',' << pts[i].s0 << ',' << pts[i].s1 << ',' << pts[i].s2
       << ',' << format_double(f.values[i].real()) << ','
       << format_double(f.values[i].imag()) << '\n';
}

/// Parse samples from CSV with columns s0,s1,s2,re,im (other columns are
/// ignored).  Rows may arrive in any order; each canonical point must
/// appear exactly once.
inline SampleVector read_samples_csv(std::istream& is, int M,
                                     PointSetKind domain) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty sample file");
  const auto header = detail::split_csv_line(line);
  const auto cols =
      detail::header_columns(header, {"s0", "s1", "s2", "re", "im"});
  std::map<std::array<int, 3>, std::complex<double>> rows;
  while (std::getline(is, line)) {
    if (detail::trim(line).empty()) continue;
    const auto fields = detail::split_csv_line(line);
    if (fields.size() < header.size())
      throw ParseError("short CSV row: '" + line + "'");
    const std::array<int, 3> t{detail::parse_int(fields[cols[0]], "s0"),
                               detail::parse_int(fields[cols[1]], "s1"),
                               detail::parse_int(fields[cols[2]], "s2")};
    const std::complex<double> v{detail::parse_double(fields[cols[3]], "re"),
                                 detail::parse_double(fields[cols[4]], "im")};
    if (!rows.emplace(t, v).second)
      throw ParseError("duplicate sample node [" + std::to_string(t[0]) +
                       "," + std::to_string(t[1]) + "," +
                       std::to_string(t[2]) + "]");
  }
  const auto pts = generate_points(domain, M);
  SampleVector out{M, domain, {}};
  out.values.reserve(pts.size());
  for (const auto& p : pts) {
    const auto it = rows.find(p.triple());
    if (it == rows.end())
      throw ParseError("missing sample node [" + std::to_string(p.s0) + "," +
                       std::to_string(p.s1) + "," + std::to_string(p.s2) +
                       "]");
    out.values.push_back(it->second);
    rows.erase(it);
  }
  if (!rows.empty())
    throw ParseError("sample file contains nodes outside the point set");
  return out;
}

inline json samples_to_json(const SampleVector& f) {
  const auto pts = generate_points(f.domain, f.M);
  json rows = json::array();
  for (std::size_t i = 0; i < pts.size(); ++i)
    rows.push_back({{"point", {pts[i].s0, pts[i].s1, pts[i].s2}},
                    {"value", {f.values[i].real(), f.values[i].imag()}}});
  return json{{"M", f.M},
              {"domain", to_string(f.domain)},
              {"samples", std::move(rows)}};
}

// --------------------------------------------------------------- spectra

inline void write_spectrum_csv(std::ostream& os, const SpectrumVector& c) {
  const auto ws = generate_weights(
      c.kind == FamilyKind::C ? WeightSetKind::LM : WeightSetKind::LMInterior,
      c.M);
  os << "index,sign,l0,l1,l2,re,im\n";
  std::size_t idx = 0;
  for (const Sign sign : {Sign::Plus, Sign::Minus}) {
    const auto& vals = sign == Sign::Plus ? c.plus : c.minus;
    for (std::size_t i = 0; i < ws.size(); ++i, ++idx)
      os << idx << ',' << to_string(sign) << ',' << ws[i].l0 << ','
         << ws[i].l1 << ',' << ws[i].l2 << ','
         << format_double(vals[i].real()) << ','
         << format_double(vals[i].imag()) << '\n';
  }
}

inline SpectrumVector read_spectrum_csv(std::istream& is, int M,
                                        FamilyKind kind) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty spectrum file");
  const auto header = detail::split_csv_line(line);
  const auto cols = detail::header_columns(
      header, {"sign", "l0", "l1", "l2", "re", "im"});
  std::map<std::pair<std::string, std::array<int, 3>>, std::complex<double>>
      rows;
  while (std::getline(is, line)) {
    if (detail::trim(line).empty()) continue;
    const auto fields = detail::split_csv_line(line);
    if (fields.size() < header.size())
      throw ParseError("short CSV row: '" + line + "'");
    const std::string sign = fields[cols[0]];
    if (sign != "plus" && sign != "minus")
      throw ParseError("sign must be 'plus' or 'minus', got '" + sign + "'");
    const std::array<int, 3> t{detail::parse_int(fields[cols[1]], "l0"),
                               detail::parse_int(fields[cols[2]], "l1"),
                               detail::parse_int(fields[cols[3]], "l2")};
    const std::complex<double> v{detail::parse_double(fields[cols[4]], "re"),
                                 detail::parse_double(fields[cols[5]], "im")};
    if (!rows.emplace(std::make_pair(sign, t), v).second)
      throw ParseError("duplicate spectrum entry");
  }
  const auto ws = generate_weights(
      kind == FamilyKind::C ? WeightSetKind::LM : WeightSetKind::LMInterior,
      M);
  SpectrumVector out{M, kind, {}, {}};
  for (const Sign sign : {Sign::Plus, Sign::Minus}) {
    auto& vals = sign == Sign::Plus ? out.plus : out.minus;
    vals.reserve(ws.size());
    for (const auto& w : ws) {
      const auto it = rows.find({to_string(sign), w.triple()});
      if (it == rows.end())
        throw ParseError("missing spectrum entry for weight [" +
                         std::to_string(w.l0) + "," + std::to_string(w.l1) +
                         "," + std::to_string(w.l2) + "] sign " +
                         to_string(sign));
      vals.push_back(it->second);
      rows.erase(it);
    }
  }
  if (!rows.empty())
    throw ParseError("spectrum file contains weights outside the set");
  return out;
}

inline json spectrum_to_json(const SpectrumVector& c) {
  const auto ws = generate_weights(
      c.kind == FamilyKind::C ? WeightSetKind::LM : WeightSetKind::LMInterior,
      c.M);
  json rows = json::array();
  for (const Sign sign : {Sign::Plus, Sign::Minus}) {
    const auto& vals = sign == Sign::Plus ? c.plus : c.minus;
    for (std::size_t i = 0; i < ws.size(); ++i)
      rows.push_back({{"sign", to_string(sign)},
                      {"weight", {ws[i].l0, ws[i].l1, ws[i].l2}},
                      {"value", {vals[i].real(), vals[i].imag()}}});
  }
  return json{{"M", c.M},
              {"kind", to_string(c.kind)},
              {"coefficients", std::move(rows)}};
}

// -------------------------------------------------------------- matrices

/// Row-major numeric cells, no header.  Matrices whose entries all have
/// exactly zero imaginary part (Hartley families with real coefficients)
/// are written with one cell per entry; otherwise each entry becomes a
/// re,im cell pair.
inline void write_matrix_csv(std::ostream& os, const TransformMatrix& m,
                             int precision = -1) {
  bool real_only = true;
  for (const auto& e : m.entries)
    if (e.imag() != 0.0) {
      real_only = false;
      break;
    }
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (c) os << ',';
      const auto& e = m.at(r, c);
      if (real_only)
        os << format_double(e.real(), precision);
      else
        os << format_double(e.real(), precision) << ','
           << format_double(e.imag(), precision);
    }
    os << '\n';
  }
}

inline json matrix_to_json(const TransformMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols; ++c)
      row.push_back({m.at(r, c).real(), m.at(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return json{{"M", m.M},
              {"kind", to_string(m.kind)},
              {"kernel", to_string(m.kernel)},
              {"rows", m.rows},
              {"cols", m.cols},
              {"entries", std::move(rows)}};
}

// ------------------------------------------------------------ coefficients

inline json coeffs_to_json(const HoneycombFamily& fam) {
  json list = json::array();
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const auto& w = fam.weight(i);
    const auto& c = fam.coeffs(i);
    json plus = json::array(), minus = json::array();
    for (int k = 0; k < 3; ++k) {
      plus.push_back({c.plus[k].real(), c.plus[k].imag()});
      minus.push_back({c.minus[k].real(), c.minus[k].imag()});
    }
    list.push_back({{"weight", {w.l0, w.l1, w.l2}},
                    {"plus", std::move(plus)},
                    {"minus", std::move(minus)}});
  }
  return json{{"M", fam.resolution()},
              {"kind", to_string(fam.kind())},
              {"coeffs", std::move(list)}};
}

struct CoeffFile {
  int M = 1;
  FamilyKind kind = FamilyKind::C;
  std::vector<std::pair<std::array<int, 3>, ExtensionCoeffs>> entries;
};

inline CoeffFile read_coeffs_json(std::istream& is) {
  json j;
  try {
    is >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad coefficient JSON: ") + e.what());
  }
  CoeffFile out;
  try {
    out.M = j.at("M").get<int>();
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "C")
      out.kind = FamilyKind::C;
    else if (kind == "S")
      out.kind = FamilyKind::S;
    else
      throw ParseError("kind must be 'C' or 'S'");
    for (const auto& entry : j.at("coeffs")) {
      std::array<int, 3> triple{};
      for (int k = 0; k < 3; ++k) triple[k] = entry.at("weight").at(k);
      ExtensionCoeffs c;
      for (int k = 0; k < 3; ++k) {
        c.plus[k] = {entry.at("plus").at(k).at(0).get<double>(),
                     entry.at("plus").at(k).at(1).get<double>()};
        c.minus[k] = {entry.at("minus").at(k).at(0).get<double>(),
                      entry.at("minus").at(k).at(1).get<double>()};
      }
      out.entries.emplace_back(triple, c);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad coefficient JSON: ") + e.what());
  }
  return out;
}

}  // namespace io
}  // namespace hweyl
