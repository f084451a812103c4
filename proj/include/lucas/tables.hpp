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

#ifndef LUCAS_TABLES_HPP
#define LUCAS_TABLES_HPP

#include <string>

namespace lucas {

/// Nonzero eigenvalue moduli and sigma_i / sqrt(3) of the twelve
/// fundamental level-2 Frierson squares, two labels per row.
std::string table1_markdown();
/// Census rows for levels 1..max_level.
std::string table2_markdown(std::size_t max_level = 6);

}  // namespace lucas

#endif  // LUCAS_TABLES_HPP
