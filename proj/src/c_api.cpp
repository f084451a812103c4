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

#include "lucas/lucas.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <set>
#include <string>

#include "lucas/algebra.hpp"
#include "lucas/enumerate.hpp"
#include "lucas/error.hpp"
#include "lucas/io.hpp"
#include "lucas/spectra.hpp"
#include "lucas/tables.hpp"
#include "lucas/verify.hpp"

struct lucas_matrix {
  lucas::SquareMatrix value;
};

namespace {

thread_local std::string last_error;

lucas_status status_of(lucas::Errc code) {
  switch (code) {
    case lucas::Errc::order_mismatch: return LUCAS_ERR_ORDER_MISMATCH;
    case lucas::Errc::invalid_argument: return LUCAS_ERR_INVALID_ARGUMENT;
    case lucas::Errc::parse_error: return LUCAS_ERR_PARSE;
    case lucas::Errc::precondition: return LUCAS_ERR_PRECONDITION;
    case lucas::Errc::resource_limit: return LUCAS_ERR_RESOURCE_LIMIT;
    case lucas::Errc::io_error: return LUCAS_ERR_IO;
  }
  return LUCAS_ERR_INTERNAL;
}

template <class F>
lucas_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return LUCAS_OK;
  } catch (const lucas::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return LUCAS_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return LUCAS_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw lucas::Error(lucas::Errc::invalid_argument, std::string(what) + " is null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

lucas::LucasParams parse_params(const char* family, const char* params) {
  require(family, "family");
  require(params, "params");
  if (lucas::parse_family(family) == lucas::Family::lucas) return lucas::parse_lucas_params(params);
  return lucas::parse_frierson_params(params).to_lucas();
}

lucas_matrix* wrap(lucas::SquareMatrix m) { return new lucas_matrix{std::move(m)}; }

nlohmann::json spectra_json(const lucas::LucasParams& p) {
  nlohmann::json j = lucas::to_json(lucas::spectrum_report(p));
  j["params"] = lucas::params_to_json(p);
  const auto row = lucas::spectral_table_row(p);
  nlohmann::json ev = nlohmann::json::array(), sv = nlohmann::json::array();
  for (const auto& r : row.eigen_moduli) ev.push_back(r.to_string());
  for (const auto& r : row.sv_over_sqrt3) sv.push_back(r.to_string());
  j["table_row"] = {{"eigen_moduli", ev}, {"sv_over_sqrt3", sv}};
  return j;
}

nlohmann::json pair_list(const std::vector<std::string>& labels,
                         const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  nlohmann::json out = nlohmann::json::array();
  for (auto [i, j] : pairs) out.push_back({labels[i], labels[j]});
  return out;
}

nlohmann::json fier9_suite_json() {
  const auto suite = lucas::frierson9_commute_suite();
  std::vector<lucas::SquareMatrix> squares;
  std::vector<std::string> labels;
  for (const auto& s : suite) {
    squares.push_back(s.matrix);
    labels.push_back(s.label);
  }
  const auto pairs = lucas::find_commuting_pairs(squares);
  nlohmann::json reports = nlohmann::json::array();
  bool consistent = true;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    for (std::size_t k = i + 1; k < suite.size(); ++k) {
      const auto r = lucas::commuting_report(suite[i].params, suite[k].params);
      consistent = consistent && r.consistent;
      if (r.observed || (r.predicted && *r.predicted)) {
        nlohmann::json j = lucas::to_json(r);
        j["labels"] = {suite[i].label, suite[k].label};
        reports.push_back(std::move(j));
      }
    }
  }
  std::set<std::pair<std::string, std::string>> expected, found;
  for (auto [a, b] : lucas::frierson9_expected_pairs()) expected.insert(std::minmax(a, b));
  for (auto [i, k] : pairs) found.insert(std::minmax(labels[i], labels[k]));
  return {{"suite", "fier9"},
          {"matrices", suite.size()},
          {"commuting_pairs", pair_list(labels, pairs)},
          {"reports", reports},
          {"all_consistent", consistent},
          {"matches_expected", found == expected}};
}

nlohmann::json order3_suite_json() {
  std::vector<lucas::LucasParams> params = lucas::natural_parameter_assignments(1, lucas::Family::lucas);
  std::vector<lucas::SquareMatrix> squares;
  std::vector<std::string> labels;
  for (const auto& p : params) {
    squares.push_back(lucas::lucas(p));
    labels.push_back(lucas::format_params(p));
  }
  return {{"suite", "order3"}, {"matrices", squares.size()},
          {"commuting_pairs", pair_list(labels, lucas::find_commuting_pairs(squares))}};
}

nlohmann::json pairs64_json() {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [label, f] : lucas::frierson9_fundamentals()) {
    const auto c = lucas::count_commuting(lucas::commuting_64_family(f));
    rows.push_back({{"label", label},
                    {"params", lucas::format_params(f)},
                    {"matrices", c.matrices},
                    {"unordered_pairs", c.unordered_pairs},
                    {"ordered_pairs", c.ordered_pairs}});
  }
  return {{"suite", "pairs64"}, {"rows", rows}};
}

}  // namespace

extern "C" {

LUCAS_API const char* lucas_version(void) { return "1.0.0"; }

LUCAS_API const char* lucas_last_error(void) { return last_error.c_str(); }

LUCAS_API void lucas_string_free(char* s) { std::free(s); }

LUCAS_API lucas_status lucas_generate(const char* family, const char* params, lucas_matrix** out) {
  return guarded([&] {
    require(out, "out");
    require(family, "family");
    require(params, "params");
    if (lucas::parse_family(family) == lucas::Family::lucas) {
      *out = wrap(lucas::lucas(lucas::parse_lucas_params(params)));
    } else {
      *out = wrap(lucas::frierson(lucas::parse_frierson_params(params)));
    }
  });
}

LUCAS_API lucas_status lucas_matrix_parse(const char* text, lucas_matrix** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = wrap(lucas::parse_matrix(text));
  });
}

LUCAS_API lucas_status lucas_matrix_read_file(const char* path, lucas_matrix** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = wrap(lucas::read_matrix_file(path));
  });
}

LUCAS_API void lucas_matrix_free(lucas_matrix* m) { delete m; }

LUCAS_API size_t lucas_matrix_order(const lucas_matrix* m) { return m ? m->value.order() : 0; }

LUCAS_API lucas_status lucas_matrix_element(const lucas_matrix* m, size_t i, size_t j, char** out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    if (i >= m->value.order() || j >= m->value.order())
      throw lucas::Error(lucas::Errc::invalid_argument, "index out of range");
    *out = dup_string(m->value(i, j).str());
  });
}

LUCAS_API lucas_status lucas_matrix_format(const lucas_matrix* m, const char* format, char** out) {
  return guarded([&] {
    require(m, "matrix");
    require(format, "format");
    require(out, "out");
    const std::string f = format;
    if (f == "grid") {
      *out = dup_string(lucas::format_grid(m->value));
    } else if (f == "json") {
      *out = dup_string(lucas::matrix_to_json(m->value).dump() + "\n");
    } else {
      throw lucas::Error(lucas::Errc::invalid_argument, "unknown format '" + f + "' (grid|json)");
    }
  });
}

LUCAS_API lucas_status lucas_matrix_equal(const lucas_matrix* a, const lucas_matrix* b, int* equal) {
  return guarded([&] {
    require(a, "matrix");
    require(b, "matrix");
    require(equal, "equal");
    *equal = a->value == b->value;
  });
}

LUCAS_API lucas_status lucas_check(const lucas_matrix* m, const char* property, int* result) {
  return guarded([&] {
    require(m, "matrix");
    require(property, "property");
    require(result, "result");
    const std::string p = property;
    if (p == "magic") {
      *result = lucas::check_magic(m->value).magic;
    } else if (p == "regular") {
      *result = lucas::check_magic(m->value).magic && lucas::check_regular(m->value);
    } else if (p == "natural") {
      *result = lucas::check_natural(m->value);
    } else if (p == "fnc") {
      *result = lucas::check_fnc(m->value);
    } else {
      throw lucas::Error(lucas::Errc::invalid_argument, "unknown property '" + p + "'");
    }
  });
}

LUCAS_API lucas_status lucas_verify(const lucas_matrix* m, int recover_params, char** json_out) {
  return guarded([&] {
    require(m, "matrix");
    require(json_out, "json_out");
    *json_out = dup_string(lucas::to_json(lucas::verify(m->value, recover_params != 0)).dump());
  });
}

LUCAS_API lucas_status lucas_spectra(const char* family, const char* params, char** json_out) {
  return guarded([&] {
    require(json_out, "json_out");
    *json_out = dup_string(spectra_json(parse_params(family, params)).dump());
  });
}

LUCAS_API lucas_status lucas_spectra_matrix(const lucas_matrix* m, char** json_out) {
  return guarded([&] {
    require(m, "matrix");
    require(json_out, "json_out");
    const auto p = lucas::recover_lucas_params(m->value);
    if (!p) throw lucas::Error(lucas::Errc::precondition, "matrix is not a compound Lucas square");
    *json_out = dup_string(spectra_json(*p).dump());
  });
}

LUCAS_API lucas_status lucas_enumerate(size_t level, const char* family, size_t ceiling, int emit,
                                       unsigned workers, char** json_out) {
  return guarded([&] {
    require(family, "family");
    require(json_out, "json_out");
    lucas::EnumerationOptions options;
    options.ceiling = ceiling;
    options.emit = emit != 0;
    options.workers = workers;
    const auto r = lucas::enumerate_fundamental(level, lucas::parse_family(family), options);
    *json_out = dup_string(lucas::to_json(r, emit != 0).dump());
  });
}

LUCAS_API lucas_status lucas_census(size_t level, char** json_out) {
  return guarded([&] {
    require(json_out, "json_out");
    const auto r = lucas::census(level);
    nlohmann::json j = {{"level", r.level},
                        {"order", lucas::json_int(r.order)},
                        {"mu", lucas::json_int(r.mu)},
                        {"lucas_fundamental", lucas::json_int(r.lucas_fundamental)},
                        {"frierson_fundamental", lucas::json_int(r.frierson_fundamental)},
                        {"rank", r.rank},
                        {"sv_classes", lucas::json_int(r.sv_classes)}};
    *json_out = dup_string(j.dump());
  });
}

LUCAS_API lucas_status lucas_power(const char* family, const char* params, unsigned k, lucas_matrix** out,
                                   int* closed_form) {
  return guarded([&] {
    require(out, "out");
    auto r = lucas::matrix_power(parse_params(family, params), k);
    if (closed_form) *closed_form = r.closed_form;
    *out = wrap(std::move(r.matrix));
  });
}

LUCAS_API lucas_status lucas_inverse3(const char* family, const char* params, char** grid_out) {
  return guarded([&] {
    require(grid_out, "grid_out");
    const auto p = parse_params(family, params);
    if (p.level() != 1) throw lucas::Error(lucas::Errc::invalid_argument, "inverse needs order-3 parameters");
    const auto& t = p.triples[0];
    *grid_out = dup_string(lucas::format_grid(lucas::lucas3_inverse(t.c, t.v, t.y)));
  });
}

LUCAS_API lucas_status lucas_commute(const lucas_matrix* a, const lucas_matrix* b, char** json_out) {
  return guarded([&] {
    require(a, "matrix");
    require(b, "matrix");
    require(json_out, "json_out");
    *json_out = dup_string(lucas::to_json(lucas::commuting_report(a->value, b->value)).dump());
  });
}

LUCAS_API lucas_status lucas_commute_suite(const char* suite, char** json_out) {
  return guarded([&] {
    require(suite, "suite");
    require(json_out, "json_out");
    const std::string s = suite;
    nlohmann::json j;
    if (s == "fier9") {
      j = fier9_suite_json();
    } else if (s == "order3") {
      j = order3_suite_json();
    } else if (s == "pairs64") {
      j = pairs64_json();
    } else {
      throw lucas::Error(lucas::Errc::invalid_argument, "unknown suite '" + s + "' (fier9|order3|pairs64)");
    }
    *json_out = dup_string(j.dump());
  });
}

LUCAS_API lucas_status lucas_table(int which, char** markdown_out) {
  return guarded([&] {
    require(markdown_out, "markdown_out");
    if (which == 1) {
      *markdown_out = dup_string(lucas::table1_markdown());
    } else if (which == 2) {
      *markdown_out = dup_string(lucas::table2_markdown());
    } else {
      throw lucas::Error(lucas::Errc::invalid_argument, "table must be 1 or 2");
    }
  });
}

}  // extern "C"
