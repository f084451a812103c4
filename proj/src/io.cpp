// Copyright 2026 The lucasmagic Authors
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

#include "lucas/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace lucas {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::vector<std::vector<ExactInt>> parse_groups(std::string_view text, std::size_t width,
                                                const char* what) {
  std::vector<std::vector<ExactInt>> groups;
  text = trim(text);
  if (text.empty()) throw Error(Errc::parse_error, std::string("empty ") + what + " parameter string");
  std::string normalized(text);
  std::replace(normalized.begin(), normalized.end(), '/', ';');
  for (auto group : split(normalized, ';')) {
    auto fields = split(group, ',');
    if (fields.size() != width) {
      throw Error(Errc::parse_error, std::string(what) + " parameter group '" +
                                         std::string(trim(group)) + "' needs " +
                                         std::to_string(width) + " comma-separated integers");
    }
    std::vector<ExactInt> vals;
    for (auto f : fields) vals.push_back(parse_integer(trim(f)));
    groups.push_back(std::move(vals));
  }
  return groups;
}

}  // namespace

ExactInt parse_integer(std::string_view token) {
  std::string_view digits = token;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) throw Error(Errc::parse_error, "expected an integer, got '" + std::string(token) + "'");
  for (char ch : digits)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw Error(Errc::parse_error, "expected an integer, got '" + std::string(token) + "'");
  ExactInt x{std::string(digits)};
  return negative ? ExactInt(-x) : x;
}

LucasParams parse_lucas_params(std::string_view text) {
  LucasParams p;
  for (auto& g : parse_groups(text, 3, "Lucas")) p.triples.push_back({g[0], g[1], g[2]});
  return p;
}

FriersonParams parse_frierson_params(std::string_view text) {
  FriersonParams p;
  for (auto& g : parse_groups(text, 2, "Frierson")) {
    if (g[0] < 0 || g[1] < 0)
      throw Error(Errc::invalid_argument, "Frierson parameters must be nonnegative");
    p.pairs.push_back({g[0], g[1]});
  }
  return p;
}

std::string format_params(const LucasParams& p) {
  std::string s;
  for (std::size_t i = 0; i < p.triples.size(); ++i) {
    if (i) s += ';';
    const auto& t = p.triples[i];
    s += t.c.str() + "," + t.v.str() + "," + t.y.str();
  }
  return s;
}

std::string format_params(const FriersonParams& p) {
  std::string s;
  for (std::size_t i = 0; i < p.pairs.size(); ++i) {
    if (i) s += ';';
    s += p.pairs[i].v.str() + "," + p.pairs[i].y.str();
  }
  return s;
}

SquareMatrix parse_grid(std::string_view text) {
  std::vector<std::vector<ExactInt>> rows;
  std::size_t line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    std::vector<ExactInt> row;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) {
        try {
          row.push_back(parse_integer(line.substr(i, j - i)));
        } catch (const Error& e) {
          throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": " + e.what());
        }
      }
      i = j;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": ragged row (" +
                                         std::to_string(row.size()) + " vs " +
                                         std::to_string(rows.front().size()) + " elements)");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(Errc::parse_error, "empty matrix");
  if (rows.front().size() != rows.size()) {
    throw Error(Errc::parse_error, "matrix is not square (" + std::to_string(rows.size()) +
                                       " rows of " + std::to_string(rows.front().size()) + ")");
  }
  return SquareMatrix::from_rows(rows);
}

std::string format_grid(const SquareMatrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) {
      if (j) s += ' ';
      s += m(i, j).str();
    }
    s += '\n';
  }
  return s;
}

std::string format_grid(const RationalMatrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) {
      if (j) s += ' ';
      s += to_string(m(i, j));
    }
    s += '\n';
  }
  return s;
}

nlohmann::json json_int(const ExactInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

nlohmann::json matrix_to_json(const SquareMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.order(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : m.row(i)) row.push_back(json_int(x));
    rows.push_back(std::move(row));
  }
  return {{"order", m.order()}, {"rows", std::move(rows)}};
}

SquareMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
    throw Error(Errc::parse_error, "matrix JSON needs a \"rows\" array");
  std::vector<std::vector<ExactInt>> rows;
  for (const auto& r : j["rows"]) {
    if (!r.is_array()) throw Error(Errc::parse_error, "matrix JSON rows must be arrays");
    std::vector<ExactInt> row;
    for (const auto& x : r) {
      if (x.is_number_integer()) {
        row.push_back(ExactInt(x.get<std::int64_t>()));
      } else if (x.is_string()) {
        row.push_back(parse_integer(x.get<std::string>()));
      } else {
        throw Error(Errc::parse_error, "matrix JSON element is not an integer: " + x.dump());
      }
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw Error(Errc::parse_error, "matrix JSON has ragged rows");
    rows.push_back(std::move(row));
  }
  if (rows.empty() || rows.front().size() != rows.size())
    throw Error(Errc::parse_error, "matrix JSON is not square");
  if (j.contains("order") && j["order"] != rows.size())
    throw Error(Errc::parse_error, "matrix JSON \"order\" does not match its rows");
  return SquareMatrix::from_rows(rows);
}

SquareMatrix parse_matrix(std::string_view text) {
  std::string_view t = trim(text);
  if (!t.empty() && t.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(t);
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::parse_error, std::string("invalid matrix JSON: ") + e.what());
    }
    return matrix_from_json(j);
  }
  return parse_grid(text);
}

SquareMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_matrix(ss.str());
}

nlohmann::json radical_to_json(const Radical& r) {
  nlohmann::json j = {{"exact", r.to_string()},
                      {"coeff", {json_int(numerator(r.coeff())), json_int(denominator(r.coeff()))}},
                      {"radicand", json_int(r.radicand())}};
  const auto z = r.to_complex();
  if (r.is_real()) {
    j["approx"] = z.real();
  } else {
    j["approx"] = {z.real(), z.imag()};
  }
  return j;
}

nlohmann::json params_to_json(const LucasParams& p) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& t : p.triples) levels.push_back({json_int(t.c), json_int(t.v), json_int(t.y)});
  return {{"level", p.level()}, {"triples", std::move(levels)}, {"string", format_params(p)}};
}

}  // namespace lucas
