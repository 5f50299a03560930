/*
   Copyright 2026 The bellkit authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// bellkit command line tool.
//
// Exit codes are a stable contract:
//   0  success, or verdict true for `verify`
//   1  verdict false (violations found)
//   2  usage errors, domain errors, failed hypothesis precheck
//   3  input file errors (open or parse failure)
//   4  internal cross-path mismatch from --check-all-paths

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bellkit/arithfn.hpp"
#include "bellkit/bell.hpp"
#include "bellkit/congruence.hpp"
#include "bellkit/polyfam.hpp"
#include "bellkit/polynomial.hpp"
#include "bellkit/rational.hpp"

namespace {

using Json = nlohmann::ordered_json;
using bellkit::Rational;

std::string format_double(double value) {
  if (value == 0.0) {
    value = 0.0;  // never print "-0"
  }
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.15g", value);
  return std::string(buffer);
}

std::vector<std::string> render(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const Rational& v : values) {
    out.push_back(bellkit::to_string(v));
  }
  return out;
}

std::vector<std::string> render(const std::vector<double>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (double v : values) {
    out.push_back(format_double(v));
  }
  return out;
}

// Options for picking a driver; shared by exponents, coeffs and verify.
struct DriverFlags {
  std::string name;
  std::uint64_t k = 0;
  std::uint64_t q = 0;
  std::string c;
  std::string file;
  CLI::Option* name_opt = nullptr;
  CLI::Option* k_opt = nullptr;
  CLI::Option* q_opt = nullptr;
  CLI::Option* c_opt = nullptr;
  CLI::Option* file_opt = nullptr;
};

void add_driver_flags(CLI::App* cmd, DriverFlags& flags, bool required) {
  flags.name_opt = cmd->add_option(
      "--driver", flags.name,
      "driver name: epsilon, power_k, chi4, phi, ramanujan_q, r4, "
      "constant_c, log_float or custom_file");
  if (required) {
    flags.name_opt->required();
  }
  flags.k_opt = cmd->add_option("--k", flags.k, "parameter for power_k");
  flags.q_opt = cmd->add_option("--q", flags.q, "parameter for ramanujan_q");
  flags.c_opt = cmd->add_option("--c", flags.c,
                                "parameter for constant_c, a rational");
  flags.file_opt =
      cmd->add_option("--file", flags.file, "driver file for custom_file");
}

// A resolved driver plus the metadata echoed into output records.
struct SelectedDriver {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  bool is_float = false;
  bellkit::Driver<Rational> exact;
  bellkit::Driver<double> approx;
};

SelectedDriver select_driver(const DriverFlags& flags) {
  const bool has_k = flags.k_opt->count() > 0;
  const bool has_q = flags.q_opt->count() > 0;
  const bool has_c = flags.c_opt->count() > 0;
  const bool has_file = flags.file_opt->count() > 0;
  auto forbid_unused = [&](bool uses_k, bool uses_q, bool uses_c,
                           bool uses_file) {
    if (has_k && !uses_k) {
      throw std::invalid_argument("--k does not apply to driver " +
                                  flags.name);
    }
    if (has_q && !uses_q) {
      throw std::invalid_argument("--q does not apply to driver " +
                                  flags.name);
    }
    if (has_c && !uses_c) {
      throw std::invalid_argument("--c does not apply to driver " +
                                  flags.name);
    }
    if (has_file && !uses_file) {
      throw std::invalid_argument("--file does not apply to driver " +
                                  flags.name);
    }
  };

  SelectedDriver out;
  if (flags.name == "log_float") {
    forbid_unused(false, false, false, false);
    out.name = flags.name;
    out.is_float = true;
    out.approx = bellkit::log_float_driver();
    return out;
  }
  if (flags.name == "custom_file") {
    forbid_unused(false, false, false, true);
    if (!has_file) {
      throw std::invalid_argument("driver custom_file requires --file");
    }
    bellkit::ArithmeticFunction fn = bellkit::load_driver_file(flags.file);
    out.name = fn.name();
    out.params.emplace_back("file", flags.file);
    out.exact = fn.driver();
    return out;
  }

  std::vector<Rational> params;
  if (flags.name == "power_k") {
    forbid_unused(true, false, false, false);
    if (!has_k) {
      throw std::invalid_argument("driver power_k requires --k");
    }
    params.emplace_back(static_cast<unsigned long>(flags.k));
    out.params.emplace_back("k", std::to_string(flags.k));
  } else if (flags.name == "ramanujan_q") {
    forbid_unused(false, true, false, false);
    if (!has_q) {
      throw std::invalid_argument("driver ramanujan_q requires --q");
    }
    params.emplace_back(static_cast<unsigned long>(flags.q));
    out.params.emplace_back("q", std::to_string(flags.q));
  } else if (flags.name == "constant_c") {
    forbid_unused(false, false, true, false);
    if (!has_c) {
      throw std::invalid_argument("driver constant_c requires --c");
    }
    Rational c = bellkit::parse_rational(flags.c);
    params.push_back(c);
    out.params.emplace_back("c", bellkit::to_string(c));
  } else {
    forbid_unused(false, false, false, false);
  }
  bellkit::ArithmeticFunction fn = bellkit::builtin_driver(flags.name, params);
  out.name = fn.name();
  out.exact = fn.driver();
  return out;
}

void print_sequence(const std::string& command, const SelectedDriver& driver,
                    std::uint64_t limit,
                    const std::optional<std::string>& path,
                    const std::vector<std::string>& values,
                    std::size_t start_index, const std::string& format) {
  if (format == "csv") {
    for (std::size_t i = 0; i < values.size(); ++i) {
      std::cout << start_index + i << ',' << values[i] << '\n';
    }
    return;
  }
  Json record;
  record["command"] = command;
  record["driver"] = driver.name;
  Json params = Json::object();
  for (const auto& [key, value] : driver.params) {
    params[key] = value;
  }
  record["params"] = params;
  record["limit"] = limit;
  if (path) {
    record["path"] = *path;
  }
  record["values"] = values;
  std::cout << record.dump() << '\n';
}

int cmd_exponents(const DriverFlags& flags, std::uint64_t limit,
                  const std::string& format) {
  if (limit == 0) {
    throw std::invalid_argument("exponents needs --limit at least 1");
  }
  SelectedDriver driver = select_driver(flags);
  std::vector<std::string> values;
  if (driver.is_float) {
    values = render(
        bellkit::bell_exponents<double>(driver.approx, limit).values());
  } else {
    values = render(
        bellkit::bell_exponents<Rational>(driver.exact, limit).values());
  }
  print_sequence("exponents", driver, limit, std::nullopt, values, 1, format);
  return 0;
}

template <typename R>
std::vector<R> coeffs_by_path(const bellkit::Driver<R>& g, std::uint64_t limit,
                              const std::string& path) {
  if (path == "recurrence") {
    return bellkit::coeffs_via_recurrence<R>(g, limit).values();
  }
  if (path == "bellpoly") {
    return bellkit::coeffs_via_bell_poly<R>(g, limit).values();
  }
  return bellkit::coeffs_via_product<R>(g, limit).values();
}

int cmd_coeffs(const DriverFlags& flags, std::uint64_t limit,
               const std::string& path, bool check_all_paths,
               const std::string& format) {
  SelectedDriver driver = select_driver(flags);
  if (check_all_paths) {
    if (driver.is_float) {
      throw std::invalid_argument(
          "--check-all-paths needs exact arithmetic; not available with "
          "log_float");
    }
    std::vector<Rational> recurrence =
        coeffs_by_path<Rational>(driver.exact, limit, "recurrence");
    std::vector<Rational> bellpoly =
        coeffs_by_path<Rational>(driver.exact, limit, "bellpoly");
    std::vector<Rational> product =
        coeffs_by_path<Rational>(driver.exact, limit, "product");
    for (std::size_t n = 0; n <= limit; ++n) {
      if (recurrence[n] != bellpoly[n] || recurrence[n] != product[n]) {
        std::cerr << "coefficient paths disagree at n = " << n
                  << ": recurrence = " << bellkit::to_string(recurrence[n])
                  << ", bellpoly = " << bellkit::to_string(bellpoly[n])
                  << ", product = " << bellkit::to_string(product[n]) << '\n';
        return 4;
      }
    }
    print_sequence("coeffs", driver, limit, "all", render(recurrence), 0,
                   format);
    return 0;
  }
  std::vector<std::string> values;
  if (driver.is_float) {
    values = render(coeffs_by_path<double>(driver.approx, limit, path));
  } else {
    values = render(coeffs_by_path<Rational>(driver.exact, limit, path));
  }
  print_sequence("coeffs", driver, limit, path, values, 0, format);
  return 0;
}

// Flags for `verify`; --k and --q double as the preset parameters.
struct VerifyFlags {
  DriverFlags driver;
  std::string preset;
  CLI::Option* preset_opt = nullptr;
  std::uint64_t p = 0;
  std::uint64_t limit = 100;
  std::string format = "json";
};

bellkit::Driver<Rational> make_verify_driver(const VerifyFlags& flags) {
  const bool has_preset = flags.preset_opt->count() > 0;
  const bool has_driver = flags.driver.name_opt->count() > 0;
  if (has_preset == has_driver) {
    throw std::invalid_argument(
        "verify needs exactly one of --preset or --driver");
  }
  if (!has_preset) {
    SelectedDriver driver = select_driver(flags.driver);
    if (driver.is_float) {
      throw std::invalid_argument(
          "verify needs an exact driver; log_float is float-only");
    }
    return driver.exact;
  }
  if (flags.preset == "tau") {
    return [](std::uint64_t n) {
      Rational s = bellkit::sigma(1, n);
      s *= 24;
      return s;
    };
  }
  if (flags.preset == "colored") {
    if (flags.driver.k_opt->count() == 0) {
      throw std::invalid_argument("preset colored requires --k");
    }
    if (flags.driver.k == 0) {
      throw std::invalid_argument("preset colored needs --k at least 1");
    }
    const std::uint64_t k = flags.driver.k;
    return [k](std::uint64_t n) {
      Rational s = bellkit::sigma(1, n);
      s *= static_cast<unsigned long>(k);
      return Rational(-s);
    };
  }
  if (flags.preset == "cyclotomic") {
    if (flags.driver.q_opt->count() == 0) {
      throw std::invalid_argument("preset cyclotomic requires --q");
    }
    if (flags.driver.q == 0) {
      throw std::invalid_argument("preset cyclotomic needs --q at least 1");
    }
    const std::uint64_t q = flags.driver.q;
    return [q](std::uint64_t n) {
      Rational acc(0);
      for (std::uint64_t d : bellkit::divisors(n)) {
        if (q % d == 0) {
          acc += static_cast<long>(d) * bellkit::mobius(q / d);
        }
      }
      return acc;
    };
  }
  throw std::invalid_argument("unknown preset '" + flags.preset +
                              "' (expected tau, colored or cyclotomic)");
}

int cmd_verify(const std::string& kind, const VerifyFlags& flags) {
  if (flags.limit == 0) {
    throw std::invalid_argument("verify needs --limit at least 1");
  }
  bellkit::Driver<Rational> g = make_verify_driver(flags);
  bellkit::CongruenceReport report =
      kind == "congruence" ? bellkit::verify_congruence(g, flags.p, flags.limit)
                           : bellkit::verify_vanishing(g, flags.p, flags.limit);
  if (!report.hypothesis_ok) {
    std::cerr << "hypothesis precheck failed: the exponents do not satisfy "
                 "the "
              << report.theorem << " condition for p = " << flags.p << '\n';
    return 2;
  }
  if (flags.format == "csv") {
    for (const bellkit::CongruenceViolation& v : report.violations) {
      std::cout << v.index << ',' << v.residue << '\n';
    }
  } else {
    std::cout << bellkit::to_json(report) << '\n';
  }
  return report.verdict ? 0 : 1;
}

// Flags for `poly`.
struct PolyFlags {
  std::string family;
  std::uint64_t n = 0;
  bool table = false;
  std::uint64_t upto = 0;
  std::string alpha;
  std::string a;
  std::string format = "json";
  CLI::Option* n_opt = nullptr;
  CLI::Option* upto_opt = nullptr;
  CLI::Option* alpha_opt = nullptr;
  CLI::Option* a_opt = nullptr;
};

Json poly_record(const bellkit::FamilySpec& spec, std::uint64_t n,
                 const bellkit::Polynomial& poly) {
  Json record;
  record["family"] = bellkit::family_name(spec.family);
  record["n"] = n;
  Json params = Json::object();
  if (spec.family == bellkit::Family::Laguerre) {
    params["alpha"] = bellkit::to_string(spec.alpha);
  }
  if (spec.family == bellkit::Family::Charlier) {
    params["a"] = bellkit::to_string(spec.a);
  }
  record["params"] = params;
  record["coeffs"] = render(poly.coeffs());
  return record;
}

int cmd_poly(const PolyFlags& flags) {
  bellkit::FamilySpec spec;
  spec.family = bellkit::family_from_name(flags.family);
  const bool has_alpha = flags.alpha_opt->count() > 0;
  const bool has_a = flags.a_opt->count() > 0;
  if (spec.family == bellkit::Family::Laguerre) {
    if (!has_alpha) {
      throw std::invalid_argument("family laguerre requires --alpha");
    }
    spec.alpha = bellkit::parse_rational(flags.alpha);
  } else if (has_alpha) {
    throw std::invalid_argument("--alpha only applies to family laguerre");
  }
  if (spec.family == bellkit::Family::Charlier) {
    if (!has_a) {
      throw std::invalid_argument("family charlier requires --a");
    }
    spec.a = bellkit::parse_rational(flags.a);
  } else if (has_a) {
    throw std::invalid_argument("--a only applies to family charlier");
  }

  if (flags.table) {
    if (flags.upto_opt->count() == 0) {
      throw std::invalid_argument("--table requires --upto");
    }
    if (flags.n_opt->count() > 0) {
      throw std::invalid_argument("--n and --table are mutually exclusive");
    }
    std::vector<bellkit::Polynomial> table =
        bellkit::family_table(spec, flags.upto);
    for (std::uint64_t n = 0; n <= flags.upto; ++n) {
      if (flags.format == "csv") {
        const auto coeffs = table[n].coeffs();
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
          std::cout << n << ',' << i << ',' << bellkit::to_string(coeffs[i])
                    << '\n';
        }
      } else {
        std::cout << poly_record(spec, n, table[n]).dump() << '\n';
      }
    }
    return 0;
  }

  if (flags.upto_opt->count() > 0) {
    throw std::invalid_argument("--upto requires --table");
  }
  if (flags.n_opt->count() == 0) {
    throw std::invalid_argument("poly requires --n (or --table with --upto)");
  }
  bellkit::Polynomial poly = bellkit::family_poly(spec, flags.n);
  if (flags.format == "csv") {
    const auto coeffs = poly.coeffs();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      std::cout << i << ',' << bellkit::to_string(coeffs[i]) << '\n';
    }
  } else {
    std::cout << poly_record(spec, flags.n, poly).dump() << '\n';
  }
  return 0;
}

int cmd_recover(const std::string& input, const std::string& format) {
  std::ifstream in(input);
  if (!in) {
    throw std::runtime_error("cannot open coefficient file '" + input + "'");
  }
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::exception& e) {
    throw std::runtime_error("coefficient file '" + input + "': " + e.what());
  }
  if (!doc.is_object() || !doc.contains("name") || !doc["name"].is_string() ||
      !doc.contains("values") || !doc["values"].is_array() ||
      doc["values"].empty()) {
    throw std::runtime_error(
        "coefficient file '" + input +
        "': expected an object with string \"name\" and nonempty array "
        "\"values\"");
  }
  std::vector<Rational> values;
  values.reserve(doc["values"].size());
  for (std::size_t i = 0; i < doc["values"].size(); ++i) {
    const auto& entry = doc["values"][i];
    if (!entry.is_string()) {
      throw std::runtime_error("coefficient file '" + input + "': values[" +
                               std::to_string(i) + "] is not a string");
    }
    try {
      values.push_back(bellkit::parse_rational(entry.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("coefficient file '" + input + "': values[" +
                               std::to_string(i) + "]: " + e.what());
    }
  }
  if (!(values[0] == 1)) {
    throw std::invalid_argument("coefficient file '" + input +
                                "': a(0) must be 1");
  }
  const std::uint64_t limit = values.size() - 1;
  bellkit::CoefficientSequence<Rational> a(std::move(values));
  std::vector<Rational> g = bellkit::recover_driver<Rational>(a);

  if (format == "csv") {
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::cout << i + 1 << ',' << bellkit::to_string(g[i]) << '\n';
    }
    return 0;
  }
  Json record;
  record["command"] = "recover";
  record["name"] = doc["name"].get<std::string>();
  record["limit"] = limit;
  record["values"] = render(g);
  std::cout << record.dump() << '\n';
  return 0;
}

void add_format_flag(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "bellkit: exact Euler-product exponents, series coefficients, "
      "divisibility sweeps and classical polynomial families for drivers of "
      "the formal Bell transform"};
  app.require_subcommand(1);

  DriverFlags exp_driver;
  std::uint64_t exp_limit = 0;
  std::string exp_format = "json";
  CLI::App* exponents =
      app.add_subcommand("exponents", "Euler-product exponents beta(1..N)");
  add_driver_flags(exponents, exp_driver, true);
  exponents->add_option("--limit", exp_limit, "largest index N")->required();
  add_format_flag(exponents, exp_format);

  DriverFlags coeffs_driver;
  std::uint64_t coeffs_limit = 0;
  std::string coeffs_path = "recurrence";
  bool coeffs_check_all = false;
  std::string coeffs_format = "json";
  CLI::App* coeffs =
      app.add_subcommand("coeffs", "series coefficients a(0..N)");
  add_driver_flags(coeffs, coeffs_driver, true);
  coeffs->add_option("--limit", coeffs_limit, "largest index N")->required();
  coeffs->add_option("--path", coeffs_path, "computation path")
      ->check(CLI::IsMember({"recurrence", "bellpoly", "product"}))
      ->capture_default_str();
  coeffs->add_flag("--check-all-paths", coeffs_check_all,
                   "run all three paths and fail on mismatch");
  add_format_flag(coeffs, coeffs_format);

  CLI::App* verify =
      app.add_subcommand("verify", "check a divisibility theorem");
  verify->require_subcommand(1);
  VerifyFlags verify_flags[2];
  const char* kinds[2] = {"congruence", "vanishing"};
  const char* kind_help[2] = {
      "a(n) = 0 mod p for p not dividing n, given exponents = 0 mod p away "
      "from p",
      "a(n) = 0 for p not dividing n, given exponents vanish away from p"};
  CLI::App* verify_cmds[2];
  for (int i = 0; i < 2; ++i) {
    VerifyFlags& flags = verify_flags[i];
    CLI::App* cmd = verify->add_subcommand(kinds[i], kind_help[i]);
    verify_cmds[i] = cmd;
    flags.preset_opt =
        cmd->add_option("--preset", flags.preset,
                        "built-in scenario: tau, colored or cyclotomic");
    add_driver_flags(cmd, flags.driver, false);
    flags.preset_opt->excludes(flags.driver.name_opt);
    cmd->add_option("--p", flags.p, "prime modulus")->required();
    cmd->add_option("--limit", flags.limit, "scan indices up to this bound")
        ->capture_default_str();
    add_format_flag(cmd, flags.format);
  }

  PolyFlags poly_flags;
  CLI::App* poly = app.add_subcommand("poly", "classical polynomial families");
  poly->add_option("--family", poly_flags.family,
                   "bernoulli, euler, hermite, charlier, laguerre or "
                   "touchard")
      ->required();
  poly_flags.n_opt = poly->add_option("--n", poly_flags.n, "degree");
  poly->add_flag("--table", poly_flags.table, "emit degrees 0..N");
  poly_flags.upto_opt =
      poly->add_option("--upto", poly_flags.upto, "table bound N");
  poly_flags.alpha_opt =
      poly->add_option("--alpha", poly_flags.alpha, "Laguerre parameter");
  poly_flags.a_opt = poly->add_option("--a", poly_flags.a,
                                      "Charlier parameter (nonzero)");
  add_format_flag(poly, poly_flags.format);

  std::string recover_input;
  std::string recover_format = "json";
  CLI::App* recover = app.add_subcommand(
      "recover", "recover the driver g(1..N) from coefficients a(0..N)");
  recover->add_option("--input", recover_input, "coefficient file (JSON)")
      ->required();
  add_format_flag(recover, recover_format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (exponents->parsed()) {
      return cmd_exponents(exp_driver, exp_limit, exp_format);
    }
    if (coeffs->parsed()) {
      return cmd_coeffs(coeffs_driver, coeffs_limit, coeffs_path,
                        coeffs_check_all, coeffs_format);
    }
    if (verify->parsed()) {
      for (int i = 0; i < 2; ++i) {
        if (verify_cmds[i]->parsed()) {
          return cmd_verify(kinds[i], verify_flags[i]);
        }
      }
    }
    if (poly->parsed()) {
      return cmd_poly(poly_flags);
    }
    if (recover->parsed()) {
      return cmd_recover(recover_input, recover_format);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
