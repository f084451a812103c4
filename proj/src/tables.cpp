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

#include "lucas/tables.hpp"

#include <sstream>

#include "lucas/algebra.hpp"
#include "lucas/enumerate.hpp"
#include "lucas/spectra.hpp"

namespace lucas {
namespace {

// 1234567 -> "1,234,567"
std::string grouped(const ExactInt& x) {
  std::string digits = x.str();
  std::string out;
  const std::size_t lead = digits.size() % 3;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0 && (i + 3 - lead) % 3 == 0) out += ',';
    out += digits[i];
  }
  return out;
}

}  // namespace

std::string table1_markdown() {
  const auto fundamentals = frierson9_fundamentals();
  // Rows pair the first six labels with the last six.
  const std::size_t order[6] = {0, 3, 1, 4, 2, 5};
  std::ostringstream out;
  out << "| v,y,s,t | \\|l1\\| | \\|l2\\| | s2/sqrt3 | s3/sqrt3 | s4/sqrt3 | s5/sqrt3 |\n";
  out << "|---|---|---|---|---|---|---|\n";
  for (std::size_t k : order) {
    const auto& [first, params] = fundamentals[k];
    const SpectralTableRow row = spectral_table_row(params.to_lucas());
    out << "| " << first << ", " << fundamentals[k + 6].first << " |";
    for (const auto& r : row.eigen_moduli) out << ' ' << r.to_string() << " |";
    for (const auto& r : row.sv_over_sqrt3) out << ' ' << r.to_string() << " |";
    out << '\n';
  }
  return out.str();
}

std::string table2_markdown(std::size_t max_level) {
  std::ostringstream out;
  out << "| l | n | mu | N_L | N_F | Rank | N_SV |\n";
  out << "|---|---|---|---|---|---|---|\n";
  for (std::size_t level = 1; level <= max_level; ++level) {
    const CensusRow r = census(level);
    out << "| " << level << " | " << grouped(r.order) << " | " << grouped(r.mu) << " | "
        << grouped(r.lucas_fundamental) << " | " << grouped(r.frierson_fundamental) << " | " << r.rank << " | "
        << grouped(r.sv_classes) << " |\n";
  }
  return out.str();
}

}  // namespace lucas
