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

#include "lucas/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lucas/io.hpp"

namespace lucas {
namespace {

using Complex = std::complex<double>;
using boost::multiprecision::pow;

ExactInt pow3(std::size_t k) { return pow(ExactInt(3), static_cast<unsigned>(k)); }

// Diagonal positions of the level pairs in Kronecker order are 3^i and
// 2*3^i; block order lists them first, after position 0.
std::vector<std::size_t> block_order(std::size_t level) {
  const std::size_t n = order_of_level(level);
  std::vector<std::size_t> order{0};
  std::vector<bool> used(n, false);
  used[0] = true;
  std::size_t stride = 1;
  for (std::size_t i = 0; i < level; ++i, stride *= 3) {
    order.push_back(stride);
    order.push_back(2 * stride);
    used[stride] = used[2 * stride] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    if (!used[k]) order.push_back(k);
  return order;
}

SurdMatrix permute_columns(const SurdMatrix& m, const std::vector<std::size_t>& perm) {
  const std::size_t n = m.order();
  std::vector<SurdSum> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[i * n + j] = m(i, perm[j]);
  return SurdMatrix(n, std::move(e));
}

template <class T>
std::vector<T> permute(const std::vector<T>& v, const std::vector<std::size_t>& perm) {
  std::vector<T> out;
  out.reserve(v.size());
  for (auto k : perm) out.push_back(v[k]);
  return out;
}

// diag(3, 0, 0) (x) inner + outer3 (x) diag(m, 0, ..., 0), m = inner size.
std::vector<Radical> compound_diagonal(const std::vector<Radical>& inner,
                                       const std::array<Radical, 3>& outer3) {
  const std::size_t m = inner.size();
  std::vector<Radical> out(3 * m);
  for (std::size_t b = 0; b < m; ++b) out[b] = inner[b].mul_by_int(3);
  for (std::size_t a = 0; a < 3; ++a) {
    Radical extra = outer3[a].mul_by_int(ExactInt(m));
    if (extra.is_zero()) continue;
    // Position (a, 0). At a == 0 both terms are rational, so the sum stays a
    // single radical.
    const std::size_t k = a * m;
    if (out[k].is_zero()) {
      out[k] = extra;
    } else {
      out[k] = Radical::normalize(out[k].coeff() + extra.coeff(), 1);
    }
  }
  return out;
}

SurdMatrix s3(const ExactInt& v, const ExactInt& y) {
  const SurdSum one(Rational(1)), two(Rational(2));
  const SurdSum omega(omega_value(v, y));
  return SurdMatrix(3, {one, one + omega, one - omega,
                        one, -two, -two,
                        one, one - omega, one + omega});
}

SurdMatrix u3() {
  const Rational sixth(1, 6);
  auto r = [&](int k, int d) { return SurdSum(Radical::normalize(sixth * k, d)); };
  return SurdMatrix(3, {r(2, 3), r(-3, 2), r(1, 6),
                        r(2, 3), SurdSum(), r(-2, 6),
                        r(2, 3), r(3, 2), r(1, 6)});
}

SurdMatrix v3() {
  const Rational sixth(1, 6);
  auto r = [&](int k, int d) { return SurdSum(Radical::normalize(sixth * k, d)); };
  return SurdMatrix(3, {r(2, 3), r(-1, 6), r(3, 2),
                        r(2, 3), r(2, 6), SurdSum(),
                        r(2, 3), r(-1, 6), r(-3, 2)});
}

std::vector<Complex> to_complex(const SurdMatrix& m) {
  std::vector<Complex> out;
  out.reserve(m.elements().size());
  for (const auto& x : m.elements()) out.push_back(x.to_complex());
  return out;
}

std::vector<Complex> to_complex(const SquareMatrix& m) {
  std::vector<Complex> out;
  out.reserve(m.elements().size());
  for (const auto& x : m.elements()) out.emplace_back(x.convert_to<double>(), 0.0);
  return out;
}

std::vector<Complex> cmatmul(const std::vector<Complex>& a, const std::vector<Complex>& b, std::size_t n) {
  std::vector<Complex> c(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a[i * n + k];
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

double fro(const std::vector<Complex>& a) {
  double s = 0;
  for (const auto& z : a) s += std::norm(z);
  return std::sqrt(s);
}

double relative(double residual, const SquareMatrix& m) {
  const double scale = std::sqrt(frobenius_sq(m).convert_to<double>());
  return scale > 0 ? residual / scale : residual;
}

}  // namespace

Radical lambda_value(const ExactInt& v, const ExactInt& y) {
  return Radical::normalize(1, 3 * (v * v - y * y));
}

Radical phi_value(const ExactInt& v, const ExactInt& y) { return Radical::normalize(v + y, 3); }
Radical psi_value(const ExactInt& v, const ExactInt& y) { return Radical::normalize(v - y, 3); }

Radical omega_value(const ExactInt& v, const ExactInt& y) {
  const Radical lam = lambda_value(v, y);
  if (lam.is_zero()) throw Error(Errc::precondition, "Omega(v, y) is undefined for v^2 == y^2");
  // 3 (v + y) / (a sqrt(d)) = 3 (v + y) sqrt(d) / (a d); also right for d < 0.
  return Radical::normalize(Rational(3 * (v + y)) / (lam.coeff() * lam.radicand()), lam.radicand());
}

ExactInt summation_index(const LucasParams& params) {
  return pow3(params.level()) * params.c_sum();
}

std::vector<Radical> eigenvalues(const LucasParams& params) {
  const std::size_t level = params.level();
  const std::size_t n = order_of_level(level);
  const ExactInt scale = pow3(level - 1);
  std::vector<Radical> out;
  out.reserve(n);
  out.emplace_back(summation_index(params));
  for (const auto& t : params.triples) {
    const Radical l = lambda_value(t.v, t.y).mul_by_int(scale);
    out.push_back(l);
    out.push_back(-l);
  }
  out.resize(n);
  return out;
}

std::vector<Radical> singular_values(const LucasParams& params) {
  const std::size_t level = params.level();
  const std::size_t n = order_of_level(level);
  const ExactInt scale = pow3(level - 1);
  std::vector<Radical> out;
  out.reserve(n);
  out.push_back(Radical(summation_index(params)).abs());
  for (const auto& t : params.triples) {
    out.push_back(phi_value(t.v, t.y).mul_by_int(scale).abs());
    out.push_back(psi_value(t.v, t.y).mul_by_int(scale).abs());
  }
  out.resize(n);
  return out;
}

std::vector<Radical> sorted_by_magnitude(std::vector<Radical> values) {
  std::stable_sort(values.begin(), values.end(), [](const Radical& a, const Radical& b) {
    return compare_magnitude(a.modulus(), b.modulus()) == std::strong_ordering::greater;
  });
  return values;
}

SurdMatrix::SurdMatrix(std::size_t order, std::vector<SurdSum> elements)
    : order_(order), elements_(std::move(elements)) {
  if (elements_.size() != order_ * order_)
    throw Error(Errc::invalid_argument, "element count does not match order");
}

SurdMatrix SurdMatrix::from(const SquareMatrix& m) {
  std::vector<SurdSum> e;
  e.reserve(m.elements().size());
  for (const auto& x : m.elements()) e.emplace_back(Rational(x));
  return SurdMatrix(m.order(), std::move(e));
}

std::vector<SurdSum> SurdMatrix::column(std::size_t j) const {
  std::vector<SurdSum> c;
  for (std::size_t i = 0; i < order_; ++i) c.push_back((*this)(i, j));
  return c;
}

SurdMatrix kronecker(const SurdMatrix& a, const SurdMatrix& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<SurdSum> e(n * n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const SurdSum& s = a(i, j);
      if (s.is_zero()) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) e[(i * nb + k) * n + j * nb + l] = s * b(k, l);
    }
  return SurdMatrix(n, std::move(e));
}

SurdMatrix matmul(const SurdMatrix& a, const SurdMatrix& b) {
  if (a.order() != b.order()) throw Error(Errc::order_mismatch, "matmul: order mismatch");
  const std::size_t n = a.order();
  std::vector<SurdSum> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const SurdSum& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b(k, j).is_zero()) e[i * n + j] += aik * b(k, j);
    }
  return SurdMatrix(n, std::move(e));
}

SurdMatrix transpose(const SurdMatrix& m) {
  const std::size_t n = m.order();
  std::vector<SurdSum> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[j * n + i] = m(i, j);
  return SurdMatrix(n, std::move(e));
}

SurdMatrix diagonal(const std::vector<Radical>& d) {
  const std::size_t n = d.size();
  std::vector<SurdSum> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = SurdSum(d[i]);
  return SurdMatrix(n, std::move(e));
}

JordanDecomposition jcf_matrices(const LucasParams& params) {
  if (params.triples.empty()) throw Error(Errc::invalid_argument, "empty parameters");
  for (const auto& t : params.triples)
    if (t.v * t.v == t.y * t.y)
      throw Error(Errc::precondition, "Jordan form needs v_i^2 != y_i^2 at every level");

  const auto& first = params.triples.front();
  SurdMatrix s = s3(first.v, first.y);
  const Radical l0 = lambda_value(first.v, first.y);
  std::vector<Radical> d{Radical(3 * first.c), l0, -l0};
  for (std::size_t i = 1; i < params.level(); ++i) {
    const auto& t = params.triples[i];
    const Radical l = lambda_value(t.v, t.y);
    s = kronecker(s3(t.v, t.y), s);
    d = compound_diagonal(d, {Radical(3 * t.c), l, -l});
  }
  const auto perm = block_order(params.level());
  return {permute_columns(s, perm), permute(d, perm)};
}

SingularDecomposition svd_matrices(const LucasParams& params) {
  if (params.triples.empty()) throw Error(Errc::invalid_argument, "empty parameters");
  // Build with every sign selector at +1 and signed phi/psi; fix signs last.
  const auto& first = params.triples.front();
  SurdMatrix u = u3(), v = v3();
  std::vector<Radical> sigma{Radical(3 * first.c), phi_value(first.v, first.y),
                             psi_value(first.v, first.y)};
  for (std::size_t i = 1; i < params.level(); ++i) {
    const auto& t = params.triples[i];
    u = kronecker(u3(), u);
    v = kronecker(v3(), v);
    sigma = compound_diagonal(sigma, {Radical(3 * t.c), phi_value(t.v, t.y), psi_value(t.v, t.y)});
  }
  const std::size_t n = u.order();
  std::vector<SurdSum> ue(u.elements().begin(), u.elements().end());
  for (std::size_t j = 0; j < n; ++j) {
    if (sigma[j].coeff() >= 0) continue;
    sigma[j] = -sigma[j];
    for (std::size_t i = 0; i < n; ++i) ue[i * n + j] = -ue[i * n + j];
  }
  const auto perm = block_order(params.level());
  return {permute_columns(SurdMatrix(n, std::move(ue)), perm), permute(sigma, perm),
          permute_columns(v, perm)};
}

bool jcf_holds_exactly(const SquareMatrix& m, const JordanDecomposition& j) {
  return matmul(SurdMatrix::from(m), j.s) == matmul(j.s, diagonal(j.d));
}

bool svd_holds_exactly(const SquareMatrix& m, const SingularDecomposition& s) {
  return matmul(matmul(s.u, diagonal(s.sigma)), transpose(s.v)) == SurdMatrix::from(m);
}

double jcf_residual(const SquareMatrix& m, const JordanDecomposition& j) {
  const std::size_t n = m.order();
  const auto mc = to_complex(m);
  const auto sc = to_complex(j.s);
  auto ms = cmatmul(mc, sc, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) ms[r * n + c] -= sc[r * n + c] * j.d[c].to_complex();
  return relative(fro(ms), m);
}

double svd_residual(const SquareMatrix& m, const SingularDecomposition& s) {
  const std::size_t n = m.order();
  auto us = to_complex(s.u);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) us[r * n + c] *= s.sigma[c].to_complex();
  const auto vt = to_complex(transpose(s.v));
  auto rec = cmatmul(us, vt, n);
  const auto mc = to_complex(m);
  for (std::size_t k = 0; k < rec.size(); ++k) rec[k] -= mc[k];
  return relative(fro(rec), m);
}

double orthonormality_defect(const SurdMatrix& q) {
  const std::size_t n = q.order();
  const auto qc = to_complex(q);
  const auto qt = to_complex(transpose(q));
  const auto g = cmatmul(qt, qc, n);
  double worst = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      worst = std::max(worst, std::abs(g[i * n + j] - Complex(i == j ? 1.0 : 0.0, 0.0)));
  return worst;
}

SpectrumReport spectrum_report(const LucasParams& params, std::size_t residual_level_limit) {
  SpectrumReport r;
  const SquareMatrix m = lucas(params);
  r.order = m.order();
  r.mu = summation_index(params);
  r.eigenvalues = eigenvalues(params);
  r.singular_values = singular_values(params);
  r.rank = exact_rank(m);
  if (params.level() <= residual_level_limit) {
    bool degenerate = false;
    for (const auto& t : params.triples) degenerate |= (t.v * t.v == t.y * t.y);
    if (!degenerate) r.jcf_residual = jcf_residual(m, jcf_matrices(params));
    r.svd_residual = svd_residual(m, svd_matrices(params));
  }
  return r;
}

nlohmann::json to_json(const SpectrumReport& r) {
  nlohmann::json ev = nlohmann::json::array(), sv = nlohmann::json::array();
  for (const auto& x : r.eigenvalues) ev.push_back(radical_to_json(x));
  for (const auto& x : r.singular_values) sv.push_back(radical_to_json(x));
  nlohmann::json j;
  j["order"] = r.order;
  j["mu"] = json_int(r.mu);
  j["eigenvalues"] = std::move(ev);
  j["singular_values"] = std::move(sv);
  j["rank"] = r.rank;
  j["jcf_residual"] = r.jcf_residual ? nlohmann::json(*r.jcf_residual) : nlohmann::json(nullptr);
  j["svd_residual"] = r.svd_residual ? nlohmann::json(*r.svd_residual) : nlohmann::json(nullptr);
  return j;
}

SpectralTableRow spectral_table_row(const LucasParams& params) {
  SpectralTableRow row;
  const auto ev = eigenvalues(params);
  const auto sv = singular_values(params);
  for (std::size_t i = 0; i < params.level(); ++i) {
    row.eigen_moduli.push_back(ev[1 + 2 * i].modulus());
    for (std::size_t k = 1; k <= 2; ++k) {
      const Radical& s = sv[2 * i + k];
      // a sqrt(d) / sqrt(3) = (a / 3) sqrt(3 d)
      row.sv_over_sqrt3.push_back(Radical::normalize(s.coeff() / 3, 3 * s.radicand()));
    }
  }
  return row;
}

SquareMatrix lucas3_power(const ExactInt& c, const ExactInt& v, const ExactInt& y, unsigned k) {
  if (k == 0) throw Error(Errc::invalid_argument, "power exponent must be positive");
  const ExactInt diff = v * v - y * y;
  const SquareMatrix e3 = all_ones(3);
  const SquareMatrix tail = scalar_mul(pow(ExactInt(3), k - 1) * pow(c, k), e3);
  if (k % 2) {
    const unsigned h = (k - 1) / 2;
    return scalar_mul(pow(ExactInt(3), h) * pow(diff, h), lucas3(c, v, y) - scalar_mul(c, e3)) + tail;
  }
  const unsigned h = k / 2;
  return scalar_mul(pow(ExactInt(3), h - 1) * pow(diff, h),
                    scalar_mul(3, SquareMatrix::identity(3)) - e3) + tail;
}

SquareMatrix lucas9_power(const LucasParams& params, unsigned k) {
  if (params.level() != 2) throw Error(Errc::invalid_argument, "order-9 power needs level-2 parameters");
  if (k == 0) throw Error(Errc::invalid_argument, "power exponent must be positive");
  const auto& in = params.triples[0];
  const auto& out = params.triples[1];
  const ExactInt d_in = in.v * in.v - in.y * in.y;
  const ExactInt d_out = out.v * out.v - out.y * out.y;
  const SquareMatrix e3 = all_ones(3), e9 = all_ones(9), i3 = SquareMatrix::identity(3);
  const SquareMatrix tail = scalar_mul(pow(ExactInt(9), k - 1) * pow(in.c + out.c, k), e9);
  if (k % 2) {
    const unsigned h = (k - 1) / 2;  // (3 sqrt 3)^(k-1) = 27^h
    const SquareMatrix a9 = kronecker(e3, lucas3(in.c, in.v, in.y));
    const SquareMatrix b9 = kronecker(lucas3(out.c, out.v, out.y), e3);
    return scalar_mul(pow(ExactInt(27), h) * pow(d_in, h), a9 - scalar_mul(in.c, e9)) +
           scalar_mul(pow(ExactInt(27), h) * pow(d_out, h), b9 - scalar_mul(out.c, e9)) + tail;
  }
  const unsigned h = k / 2;
  const ExactInt scale = pow(ExactInt(3), 3 * h - 2);
  return scalar_mul(scale * pow(d_in, h), scalar_mul(3, kronecker(e3, i3)) - e9) +
         scalar_mul(scale * pow(d_out, h), scalar_mul(3, kronecker(i3, e3)) - e9) + tail;
}

PowerResult matrix_power(const LucasParams& params, unsigned k) {
  if (k == 0) throw Error(Errc::invalid_argument, "power exponent must be positive");
  if (params.level() == 1) {
    const auto& t = params.triples[0];
    return {lucas3_power(t.c, t.v, t.y, k), true};
  }
  if (params.level() == 2) return {lucas9_power(params, k), true};
  return {power(lucas(params), k), false};
}

RationalMatrix lucas3_inverse(const ExactInt& c, const ExactInt& v, const ExactInt& y) {
  const ExactInt diff = v * v - y * y;
  if (c == 0 || diff == 0)
    throw Error(Errc::precondition, "L3(c, v, y) is singular unless c != 0 and v^2 != y^2");
  const SquareMatrix numer = scalar_mul(3 * c, lucas3(c, v, y)) + scalar_mul(diff - 3 * c * c, all_ones(3));
  const Rational denom = Rational(9 * c * diff);
  std::vector<Rational> e;
  for (const auto& x : numer.elements()) e.push_back(Rational(x) / denom);
  return RationalMatrix(3, std::move(e));
}

}  // namespace lucas
