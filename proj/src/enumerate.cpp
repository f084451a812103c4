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

#include "lucas/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <thread>

#include "lucas/io.hpp"
#include "lucas/spectra.hpp"
#include "lucas/verify.hpp"

namespace lucas {
namespace {

using boost::multiprecision::pow;

ExactInt factorial(std::size_t n) {
  ExactInt f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

void require_level(std::size_t level) {
  if (level == 0) throw Error(Errc::invalid_argument, "level must be at least 1");
}

struct Partial {
  std::set<LucasParams> keys;
  ExactInt total = 0;
  bool all_natural = true;
};

std::vector<std::string> sv_multiset(const LucasParams& p) {
  std::vector<std::string> out;
  for (const auto& s : singular_values(p)) out.push_back(s.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

void search_squares(std::size_t count, const ExactInt& target_sq, const std::optional<ExactInt>& target_sum,
                    bool distinct, std::vector<ExactInt>& cur, const ExactInt& start,
                    std::vector<std::vector<ExactInt>>& out) {
  const ExactInt& rem_sq = target_sq;
  if (count == 0) {
    if (rem_sq == 0 && (!target_sum || *target_sum == 0)) out.push_back(cur);
    return;
  }
  if (count == 1) {
    const ExactInt r = sqrt(rem_sq);
    if (r * r == rem_sq && r >= start && (!target_sum || *target_sum == r)) {
      cur.push_back(r);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (ExactInt a = start;; ++a) {
    // The remaining count values are all >= a.
    if (a * a * count > rem_sq) break;
    if (target_sum && a * count > *target_sum) break;
    cur.push_back(a);
    std::optional<ExactInt> next_sum;
    if (target_sum) next_sum = *target_sum - a;
    search_squares(count - 1, rem_sq - a * a, next_sum, distinct, cur, distinct ? ExactInt(a + 1) : a, out);
    cur.pop_back();
  }
}

}  // namespace

std::string_view family_name(Family f) { return f == Family::lucas ? "lucas" : "frierson"; }

Family parse_family(std::string_view name) {
  if (name == "lucas") return Family::lucas;
  if (name == "frierson") return Family::frierson;
  throw Error(Errc::parse_error, "unknown family '" + std::string(name) + "' (lucas|frierson)");
}

ExactInt assignment_count(std::size_t level, Family family) {
  require_level(level);
  const ExactInt orderings = factorial(2 * level);
  return family == Family::lucas ? ExactInt(pow(ExactInt(2), static_cast<unsigned>(2 * level)) * orderings)
                                 : orderings;
}

void for_each_natural_assignment(std::size_t level, Family family,
                                 const std::function<void(const LucasParams&)>& visit,
                                 std::optional<std::size_t> first_value) {
  require_level(level);
  const std::size_t k = 2 * level;
  std::vector<ExactInt> values(k);
  for (std::size_t i = 0; i < k; ++i) values[i] = pow(ExactInt(3), static_cast<unsigned>(i));
  const std::size_t sign_patterns = family == Family::lucas ? (std::size_t{1} << k) : 1;

  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  LucasParams p;
  p.triples.resize(level);
  do {
    if (first_value && perm[0] != *first_value) continue;
    for (std::size_t mask = 0; mask < sign_patterns; ++mask) {
      for (std::size_t i = 0; i < level; ++i) {
        ExactInt v = values[perm[2 * i]], y = values[perm[2 * i + 1]];
        p.triples[i].c = v + y;
        if (mask & (std::size_t{1} << (2 * i))) v = -v;
        if (mask & (std::size_t{1} << (2 * i + 1))) y = -y;
        p.triples[i].v = std::move(v);
        p.triples[i].y = std::move(y);
      }
      visit(p);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<LucasParams> natural_parameter_assignments(std::size_t level, Family family) {
  std::vector<LucasParams> out;
  for_each_natural_assignment(level, family, [&](const LucasParams& p) { out.push_back(p); });
  return out;
}

bool sample_naturalness(std::size_t level, Family family, std::size_t samples, std::uint64_t seed) {
  require_level(level);
  std::mt19937_64 rng(seed);
  std::vector<ExactInt> values;
  for (std::size_t i = 0; i < 2 * level; ++i) values.push_back(pow(ExactInt(3), static_cast<unsigned>(i)));
  for (std::size_t n = 0; n < samples; ++n) {
    std::shuffle(values.begin(), values.end(), rng);
    LucasParams p;
    for (std::size_t i = 0; i < level; ++i) {
      ExactInt v = values[2 * i], y = values[2 * i + 1];
      const ExactInt c = v + y;
      if (family == Family::lucas) {
        if (rng() & 1) v = -v;
        if (rng() & 1) y = -y;
      }
      p.triples.push_back({c, v, y});
    }
    if (!check_natural(lucas(p))) return false;
  }
  return true;
}

EnumerationResult enumerate_fundamental(std::size_t level, Family family, const EnumerationOptions& options) {
  require_level(level);
  EnumerationResult r;
  r.level = level;
  r.family = family;
  r.total_assignments = assignment_count(level, family);
  r.formula_fundamental_count = r.total_assignments / (family == Family::lucas ? 8 : 2);
  r.sv_class_count = sv_class_count(level);
  r.loly_cameron_frierson_count = factorial(2 * level) / pow(ExactInt(2), static_cast<unsigned>(level));

  if (level > options.ceiling) {
    if (options.emit) {
      throw Error(Errc::resource_limit, "level " + std::to_string(level) + " exceeds the materialization ceiling " +
                                            std::to_string(options.ceiling));
    }
    r.fundamental_count = r.formula_fundamental_count;
    return r;
  }

  // Partition the stream by the first value of the ordering; each worker
  // deduplicates locally and the sets are merged afterwards.
  const std::size_t parts = 2 * level;
  unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, parts));
  std::vector<Partial> partials(parts);
  auto run = [&](std::size_t part) {
    Partial& acc = partials[part];
    for_each_natural_assignment(
        level, family,
        [&](const LucasParams& p) {
          const SquareMatrix m = lucas(p);
          acc.all_natural = acc.all_natural && check_natural(m);
          acc.keys.insert(apply_phase(p, canonical_phase_of(m)));
          ++acc.total;
        },
        part);
  };
  if (workers <= 1) {
    for (std::size_t part = 0; part < parts; ++part) run(part);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t part = w; part < parts; part += workers) run(part);
      });
    }
    for (auto& t : pool) t.join();
  }

  std::set<LucasParams> keys;
  ExactInt total = 0;
  r.all_natural = true;
  for (auto& part : partials) {
    keys.merge(part.keys);
    total += part.total;
    r.all_natural = r.all_natural && part.all_natural;
  }
  if (total != r.total_assignments)
    throw Error(Errc::invalid_argument, "assignment stream size disagrees with its count formula");
  r.materialized = true;
  r.fundamental_count = keys.size();
  r.representatives.assign(keys.begin(), keys.end());
  return r;
}

nlohmann::json to_json(const EnumerationResult& r, bool with_representatives) {
  nlohmann::json j;
  j["level"] = r.level;
  j["order"] = order_of_level(r.level);
  j["family"] = std::string(family_name(r.family));
  j["total_assignments"] = json_int(r.total_assignments);
  j["fundamental_count"] = json_int(r.fundamental_count);
  j["formula_fundamental_count"] = json_int(r.formula_fundamental_count);
  j["materialized"] = r.materialized;
  j["all_natural"] = r.materialized ? nlohmann::json(r.all_natural) : nlohmann::json(nullptr);
  j["sv_class_count"] = json_int(r.sv_class_count);
  if (r.family == Family::frierson) j["loly_cameron_count"] = json_int(r.loly_cameron_frierson_count);
  if (with_representatives) {
    nlohmann::json reps = nlohmann::json::array();
    for (const auto& p : r.representatives) reps.push_back(format_params(p));
    j["representatives"] = std::move(reps);
  }
  return j;
}

std::vector<std::vector<ExactInt>> natural_value_solutions(std::size_t level) {
  require_level(level);
  if (level > 3) throw Error(Errc::resource_limit, "natural value search is limited to levels 1..3");
  const ExactInt value_sum = (pow(ExactInt(3), static_cast<unsigned>(2 * level)) - 1) / 2;
  std::vector<std::vector<ExactInt>> out;
  std::vector<ExactInt> cur;
  search_squares(2 * level, fnc_parameter_equation(level), value_sum, true, cur, 1, out);
  return out;
}

std::vector<std::vector<ExactInt>> fnc_integer_solutions(std::size_t level, bool distinct) {
  require_level(level);
  if (level > 2) throw Error(Errc::resource_limit, "integer search is limited to levels 1..2");
  std::vector<std::vector<ExactInt>> out;
  std::vector<ExactInt> cur;
  search_squares(2 * level, fnc_parameter_equation(level), std::nullopt, distinct, cur, 1, out);
  return out;
}

bool duplicate_element_check(const LucasParams& params) {
  const SquareMatrix m = lucas(params);
  std::vector<ExactInt> e(m.elements().begin(), m.elements().end());
  std::sort(e.begin(), e.end());
  return std::adjacent_find(e.begin(), e.end()) == e.end();
}

bool ternary_offsets_distinct(std::size_t level) {
  require_level(level);
  const std::size_t digits = 2 * level;
  std::set<ExactInt> seen;
  std::vector<int> a(digits, -1);
  while (true) {
    ExactInt s = 0, w = 1;
    for (std::size_t i = 0; i < digits; ++i, w *= 3) s += a[i] * w;
    if (!seen.insert(s).second) return false;
    std::size_t i = 0;
    while (i < digits && a[i] == 1) a[i++] = -1;
    if (i == digits) break;
    ++a[i];
  }
  return true;
}

ExactInt sv_class_count(std::size_t level) {
  require_level(level);
  ExactInt r = 1;
  for (std::size_t k = 1; k < 2 * level; k += 2) r *= k;
  return r;
}

std::size_t materialized_sv_class_count(std::size_t level) {
  const EnumerationResult r = enumerate_fundamental(level, Family::frierson);
  std::set<std::vector<std::string>> classes;
  for (const auto& p : r.representatives) classes.insert(sv_multiset(p));
  return classes.size();
}

CensusRow census(std::size_t level) {
  require_level(level);
  CensusRow row;
  row.level = level;
  row.order = pow(ExactInt(3), static_cast<unsigned>(level));
  row.mu = row.order * (row.order * row.order - 1) / 2;
  row.lucas_fundamental = assignment_count(level, Family::lucas) / 8;
  row.frierson_fundamental = assignment_count(level, Family::frierson) / 2;
  row.rank = 2 * level + 1;
  row.sv_classes = sv_class_count(level);
  return row;
}

}  // namespace lucas
