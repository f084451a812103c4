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

#ifndef LUCAS_SPECTRA_HPP
#define LUCAS_SPECTRA_HPP

#include <complex>
#include <optional>
#include <vector>

#include "json.hpp"
#include "lucas/construct.hpp"
#include "lucas/radical.hpp"

namespace lucas {

// Closed-form spectral data for compound Lucas squares. Diagonal lists use
// block order: mu first, then one pair per level (innermost first), then
// zeros. For eigenvalues the pair is (+l_i, -l_i); for singular values it is
// (|phi_i|, |psi_i|), both scaled by 3^(level-1).

/// lambda(v, y) = sqrt(3) sqrt(v^2 - y^2); imaginary when y^2 > v^2.
Radical lambda_value(const ExactInt& v, const ExactInt& y);
/// phi(v, y) = sqrt(3) (v + y), psi(v, y) = sqrt(3) (v - y).
Radical phi_value(const ExactInt& v, const ExactInt& y);
Radical psi_value(const ExactInt& v, const ExactInt& y);
/// Omega(v, y) = 3 (v + y) / lambda(v, y); requires v^2 != y^2.
Radical omega_value(const ExactInt& v, const ExactInt& y);

/// 3^level * sum(c_i), the common line sum of lucas(params).
ExactInt summation_index(const LucasParams& params);

std::vector<Radical> eigenvalues(const LucasParams& params);
std::vector<Radical> singular_values(const LucasParams& params);
/// Descending by modulus; ties keep their block order.
std::vector<Radical> sorted_by_magnitude(std::vector<Radical> values);

class SurdMatrix {
 public:
  SurdMatrix(std::size_t order, std::vector<SurdSum> elements);
  static SurdMatrix from(const SquareMatrix& m);

  std::size_t order() const noexcept { return order_; }
  const SurdSum& operator()(std::size_t i, std::size_t j) const { return elements_[i * order_ + j]; }
  std::span<const SurdSum> elements() const noexcept { return elements_; }
  std::vector<SurdSum> column(std::size_t j) const;

  friend bool operator==(const SurdMatrix&, const SurdMatrix&) = default;

 private:
  std::size_t order_;
  std::vector<SurdSum> elements_;
};

SurdMatrix kronecker(const SurdMatrix& a, const SurdMatrix& b);
SurdMatrix matmul(const SurdMatrix& a, const SurdMatrix& b);
SurdMatrix transpose(const SurdMatrix& m);
SurdMatrix diagonal(const std::vector<Radical>& d);

/// M = S D S^-1 with the columns of S in block order.
struct JordanDecomposition {
  SurdMatrix s;
  std::vector<Radical> d;
};

/// M = U Sigma V^T with nonnegative sigma in block order.
struct SingularDecomposition {
  SurdMatrix u;
  std::vector<Radical> sigma;
  SurdMatrix v;
};

/// Throws Errc::precondition when v_i^2 == y_i^2 at some level (Omega is
/// undefined there).
JordanDecomposition jcf_matrices(const LucasParams& params);
SingularDecomposition svd_matrices(const LucasParams& params);

/// Exact identities in surd arithmetic.
bool jcf_holds_exactly(const SquareMatrix& m, const JordanDecomposition& j);
bool svd_holds_exactly(const SquareMatrix& m, const SingularDecomposition& s);

/// ||M S - S D||_F / ||M||_F in complex double precision.
double jcf_residual(const SquareMatrix& m, const JordanDecomposition& j);
/// ||U Sigma V^T - M||_F / ||M||_F.
double svd_residual(const SquareMatrix& m, const SingularDecomposition& s);
/// max |(Q^T Q - I)_ij|.
double orthonormality_defect(const SurdMatrix& q);

struct SpectrumReport {
  std::size_t order = 0;
  ExactInt mu = 0;
  std::vector<Radical> eigenvalues;
  std::vector<Radical> singular_values;
  std::size_t rank = 0;
  std::optional<double> jcf_residual;  // absent for degenerate parameters
  std::optional<double> svd_residual;
};

/// Residuals are computed up to `residual_level_limit` (orders beyond 27
/// make the dense check slow); above it they are left absent.
SpectrumReport spectrum_report(const LucasParams& params, std::size_t residual_level_limit = 3);
nlohmann::json to_json(const SpectrumReport& r);

/// Nonzero |lambda_i| per level and sigma_2.. / sqrt(3), in block order.
struct SpectralTableRow {
  std::vector<Radical> eigen_moduli;
  std::vector<Radical> sv_over_sqrt3;
};
SpectralTableRow spectral_table_row(const LucasParams& params);

struct PowerResult {
  SquareMatrix matrix;
  bool closed_form = false;  // false: repeated multiplication
};

/// k >= 1. Closed forms exist for levels 1 and 2; other levels multiply.
PowerResult matrix_power(const LucasParams& params, unsigned k);
SquareMatrix lucas3_power(const ExactInt& c, const ExactInt& v, const ExactInt& y, unsigned k);
SquareMatrix lucas9_power(const LucasParams& params, unsigned k);

/// Requires c != 0 and v^2 != y^2.
RationalMatrix lucas3_inverse(const ExactInt& c, const ExactInt& v, const ExactInt& y);

}  // namespace lucas

#endif  // LUCAS_SPECTRA_HPP
