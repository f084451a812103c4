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

// Command-line front end. Talks to the library through the C API only.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lucas/lucas.h"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

using json = nlohmann::json;

// Library failure: reported and mapped to the usage exit code.
struct Failure {
  std::string message;
};

void check(lucas_status s) {
  if (s != LUCAS_OK) throw Failure{lucas_last_error()};
}

struct MatrixDeleter {
  void operator()(lucas_matrix* m) const { lucas_matrix_free(m); }
};
using Matrix = std::unique_ptr<lucas_matrix, MatrixDeleter>;

std::string take(char* s) {
  std::string out = s;
  lucas_string_free(s);
  return out;
}

Matrix read_matrix(const std::string& path) {
  lucas_matrix* m = nullptr;
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    check(lucas_matrix_parse(text.c_str(), &m));
  } else {
    check(lucas_matrix_read_file(path.c_str(), &m));
  }
  return Matrix(m);
}

std::string format_matrix(const lucas_matrix* m, const std::string& format) {
  char* s = nullptr;
  check(lucas_matrix_format(m, format.c_str(), &s));
  return take(s);
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Failure{"cannot write '" + path + "'"};
  out << text;
}

std::string exact_list(const json& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ", ";
    out += v.is_string() ? v.get<std::string>() : v["exact"].get<std::string>();
  }
  return out;
}

std::string spectra_text(const json& j) {
  std::ostringstream out;
  out << "params: " << j["params"]["string"].get<std::string>() << '\n';
  out << "order: " << j["order"] << "  mu: " << j["mu"] << "  rank: " << j["rank"] << '\n';
  out << "eigenvalues (nonzero):";
  for (const auto& v : j["eigenvalues"])
    if (v["radicand"] != 0) out << ' ' << v["exact"].get<std::string>();
  out << "\nsingular values (nonzero):";
  for (const auto& v : j["singular_values"])
    if (v["radicand"] != 0) out << ' ' << v["exact"].get<std::string>() << " (" << v["approx"].dump() << ")";
  out << "\n| |l_i| | s_i/sqrt3 |\n|---|---|\n";
  out << "| " << exact_list(j["table_row"]["eigen_moduli"]) << " | " << exact_list(j["table_row"]["sv_over_sqrt3"])
      << " |\n";
  for (const char* key : {"jcf_residual", "svd_residual"})
    if (!j[key].is_null()) out << key << ": " << j[key].get<double>() << '\n';
  return out.str();
}

std::string verify_text(const json& j) {
  std::ostringstream out;
  out << "order: " << j["order"] << '\n';
  for (const char* key : {"is_magic", "is_regular", "is_natural", "fnc_pass"}) out << key << ": " << j[key] << '\n';
  if (j.contains("summation_index")) out << "summation_index: " << j["summation_index"] << '\n';
  out << "frobenius_sq: " << j["frobenius_sq"] << "\nexact_rank: " << j["exact_rank"] << '\n';
  if (j.contains("lucas_params") && !j["lucas_params"].is_null())
    out << "lucas_params: " << j["lucas_params"]["string"].get<std::string>() << '\n';
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compound Lucas and Frierson magic squares of order 3^l"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(lucas_version()));

  std::string family = "lucas", params, format, output;

  auto* gen = app.add_subcommand("generate", "Build a square from parameters");
  gen->add_option("--family", family, "lucas | frierson")->check(CLI::IsMember({"lucas", "frierson"}));
  gen->add_option("--params", params, "c,v,y;... (lucas) or v,y;... (frierson), innermost first; / may replace ;")->required();
  std::optional<std::size_t> gen_level;
  gen->add_option("--level", gen_level, "Expected level (checked against --params)");
  gen->add_option("--format", format, "grid | json")->check(CLI::IsMember({"grid", "json"}))->default_val("grid");
  gen->add_option("-o,--output", output, "Output file (default stdout)");

  auto* ver = app.add_subcommand("verify", "Check magic, regular, natural and FNC properties");
  std::string input;
  std::vector<std::string> expect;
  bool recover = false;
  ver->add_option("file", input, "Matrix file (grid or JSON), - for stdin")->required();
  ver->add_option("--expect", expect, "Properties that must hold")
      ->check(CLI::IsMember({"magic", "regular", "natural", "fnc"}));
  ver->add_flag("--recover-params", recover, "Recover compound Lucas parameters");
  std::string ver_format = "json";
  ver->add_option("--format", ver_format, "json | text")->check(CLI::IsMember({"json", "text"}));

  auto* spe = app.add_subcommand("spectra", "Closed-form eigenvalues, singular values and residuals");
  std::string spe_file;
  auto* spe_params = spe->add_option("--params", params, "Parameters (see generate)");
  spe->add_option("--family", family, "lucas | frierson")->check(CLI::IsMember({"lucas", "frierson"}));
  auto* spe_input = spe->add_option("file", spe_file, "Matrix file instead of --params");
  spe_params->excludes(spe_input);
  std::string spe_format = "json";
  spe->add_option("--format", spe_format, "json | text")->check(CLI::IsMember({"json", "text"}));

  auto* enu = app.add_subcommand("enumerate", "Count or list natural squares of a level");
  std::size_t level = 0, ceiling = 3;
  unsigned workers = 0;
  bool fundamental = false, count_only = false, with_matrices = false;
  std::string emit_dir;
  enu->add_option("--level", level, "Level l (order 3^l)")->required()->check(CLI::PositiveNumber);
  enu->add_option("--family", family, "lucas | frierson")->check(CLI::IsMember({"lucas", "frierson"}));
  enu->add_flag("--fundamental", fundamental, "Count fundamental squares (phases identified)");
  enu->add_flag("--count-only", count_only, "Print only the count");
  enu->add_option("--emit", emit_dir, "Write representatives to this directory");
  enu->add_flag("--matrices", with_matrices, "With --emit, also write one grid file per representative");
  enu->add_option("--ceiling", ceiling, "Highest level materialized")->capture_default_str();
  enu->add_option("--workers", workers, "Worker threads (0 = hardware)");
  std::string enu_format = "json";
  enu->add_option("--format", enu_format, "json | markdown")->check(CLI::IsMember({"json", "markdown"}));

  auto* pow = app.add_subcommand("power", "Integer power of a square");
  unsigned k = 1;
  pow->add_option("--params", params, "Parameters (see generate)")->required();
  pow->add_option("--family", family, "lucas | frierson")->check(CLI::IsMember({"lucas", "frierson"}));
  pow->add_option("-k,--exponent", k, "Exponent >= 1")->required()->check(CLI::PositiveNumber);
  pow->add_option("--format", format, "grid | json")->check(CLI::IsMember({"grid", "json"}))->default_val("grid");

  auto* inv = app.add_subcommand("inverse", "Exact inverse of an order-3 square");
  inv->add_option("--params", params, "c,v,y or v,y")->required();
  inv->add_option("--family", family, "lucas | frierson")->check(CLI::IsMember({"lucas", "frierson"}));

  auto* com = app.add_subcommand("commute", "Commutation of two squares or a fixture suite");
  std::vector<std::string> com_files;
  std::string suite;
  auto* com_in = com->add_option("files", com_files, "Two matrix files")->expected(2);
  auto* com_suite = com->add_option("--suite", suite, "fier9 | order3 | pairs64")
                        ->check(CLI::IsMember({"fier9", "order3", "pairs64"}));
  com_in->excludes(com_suite);

  auto* tab = app.add_subcommand("tables", "Reproduce the spectral and census tables as markdown");
  int which = 0;
  tab->add_option("--which", which, "1 | 2")->required()->check(CLI::IsMember({1, 2}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) {
      lucas_matrix* raw = nullptr;
      check(lucas_generate(family.c_str(), params.c_str(), &raw));
      Matrix m(raw);
      if (gen_level) {
        std::size_t order = 1;
        for (std::size_t i = 0; i < *gen_level; ++i) order *= 3;
        if (order != lucas_matrix_order(m.get()))
          throw Failure{"--params describe a different level than --level " + std::to_string(*gen_level)};
      }
      write_output(format_matrix(m.get(), format), output);
      return kOk;
    }

    if (*ver) {
      Matrix m = read_matrix(input);
      char* s = nullptr;
      check(lucas_verify(m.get(), recover ? 1 : 0, &s));
      const json report = json::parse(take(s));
      std::cout << (ver_format == "json" ? report.dump(2) + "\n" : verify_text(report));
      int status = kOk;
      for (const auto& property : expect) {
        int ok = 0;
        check(lucas_check(m.get(), property.c_str(), &ok));
        if (!ok) {
          std::cerr << "expected property '" << property << "' does not hold\n";
          status = kCheckFailed;
        }
      }
      return status;
    }

    if (*spe) {
      char* s = nullptr;
      if (!params.empty()) {
        check(lucas_spectra(family.c_str(), params.c_str(), &s));
      } else if (!spe_file.empty()) {
        Matrix m = read_matrix(spe_file);
        check(lucas_spectra_matrix(m.get(), &s));
      } else {
        throw CLI::RequiredError("--params or file");
      }
      const json report = json::parse(take(s));
      std::cout << (spe_format == "json" ? report.dump(2) + "\n" : spectra_text(report));
      return kOk;
    }

    if (*enu) {
      char* s = nullptr;
      check(lucas_enumerate(level, family.c_str(), ceiling, emit_dir.empty() ? 0 : 1, workers, &s));
      json result = json::parse(take(s));
      if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        const std::string stem = "level" + std::to_string(level) + "_" + family;
        std::ofstream list(std::filesystem::path(emit_dir) / (stem + ".txt"));
        std::size_t index = 0;
        for (const auto& rep : result["representatives"]) {
          const std::string p = rep.get<std::string>();
          list << p << '\n';
          if (with_matrices) {
            lucas_matrix* raw = nullptr;
            check(lucas_generate("lucas", p.c_str(), &raw));
            Matrix m(raw);
            std::ofstream grid(std::filesystem::path(emit_dir) / (stem + "_" + std::to_string(index) + ".txt"));
            grid << format_matrix(m.get(), "grid");
          }
          ++index;
        }
        if (!list) throw Failure{"cannot write to '" + emit_dir + "'"};
        result.erase("representatives");
      }
      const json& count = fundamental ? result["fundamental_count"] : result["total_assignments"];
      if (count_only) {
        std::cout << (count.is_string() ? count.get<std::string>() : count.dump()) << '\n';
      } else if (enu_format == "markdown") {
        char* row = nullptr;
        check(lucas_census(level, &row));
        const json c = json::parse(take(row));
        std::cout << "| l | n | mu | family | assignments | fundamental | rank | N_SV |\n"
                  << "|---|---|---|---|---|---|---|---|\n"
                  << "| " << level << " | " << c["order"].dump() << " | " << c["mu"].dump() << " | " << family
                  << " | " << result["total_assignments"].dump() << " | " << result["fundamental_count"].dump()
                  << " | " << c["rank"].dump() << " | " << c["sv_classes"].dump() << " |\n";
      } else {
        std::cout << result.dump(2) << '\n';
      }
      return kOk;
    }

    if (*pow) {
      lucas_matrix* raw = nullptr;
      int closed = 0;
      check(lucas_power(family.c_str(), params.c_str(), k, &raw, &closed));
      Matrix m(raw);
      std::cout << format_matrix(m.get(), format);
      return kOk;
    }

    if (*inv) {
      char* s = nullptr;
      check(lucas_inverse3(family.c_str(), params.c_str(), &s));
      std::cout << take(s);
      return kOk;
    }

    if (*com) {
      char* s = nullptr;
      if (!suite.empty()) {
        check(lucas_commute_suite(suite.c_str(), &s));
        const json report = json::parse(take(s));
        std::cout << report.dump(2) << '\n';
        if (report.contains("matches_expected") &&
            !(report["matches_expected"].get<bool>() && report["all_consistent"].get<bool>()))
          return kCheckFailed;
        return kOk;
      }
      if (com_files.size() != 2) throw CLI::RequiredError("two matrix files or --suite");
      Matrix a = read_matrix(com_files[0]);
      Matrix b = read_matrix(com_files[1]);
      check(lucas_commute(a.get(), b.get(), &s));
      const json report = json::parse(take(s));
      std::cout << report.dump(2) << '\n';
      return report["consistent"].get<bool>() ? kOk : kCheckFailed;
    }

    if (*tab) {
      char* s = nullptr;
      check(lucas_table(which, &s));
      std::cout << take(s);
      return kOk;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
