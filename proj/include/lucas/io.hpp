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

#ifndef LUCAS_IO_HPP
#define LUCAS_IO_HPP

#include <string>
#include <string_view>

#include "json.hpp"
#include "lucas/construct.hpp"
#include "lucas/exact_matrix.hpp"
#include "lucas/radical.hpp"

namespace lucas {

// Parameter strings: "c1,v1,y1;c2,v2,y2;..." for Lucas squares and
// "v1,y1;v2,y2;..." for Frierson squares, innermost level first. '/' may
// stand in for ';'.
LucasParams parse_lucas_params(std::string_view text);
FriersonParams parse_frierson_params(std::string_view text);
std::string format_params(const LucasParams& p);
std::string format_params(const FriersonParams& p);

ExactInt parse_integer(std::string_view token);

// Text grid: one row per line, base-10 integers separated by single spaces,
// no header. Parsing accepts any run of blanks between tokens and ignores
// blank lines; ragged or non-square input is a parse error.
SquareMatrix parse_grid(std::string_view text);
std::string format_grid(const SquareMatrix& m);
std::string format_grid(const RationalMatrix& m);

// JSON form: {"order": n, "rows": [[...], ...]}.
nlohmann::json matrix_to_json(const SquareMatrix& m);
SquareMatrix matrix_from_json(const nlohmann::json& j);

/// Grid or JSON, chosen by the first non-blank character.
SquareMatrix parse_matrix(std::string_view text);
SquareMatrix read_matrix_file(const std::string& path);

/// Integer as a JSON number when it fits in 64 bits, otherwise a string.
nlohmann::json json_int(const ExactInt& x);
/// {"coeff": [num, den], "radicand": d}
nlohmann::json radical_to_json(const Radical& r);
nlohmann::json params_to_json(const LucasParams& p);

}  // namespace lucas

#endif  // LUCAS_IO_HPP
