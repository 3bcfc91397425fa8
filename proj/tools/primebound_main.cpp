// Command-line front end: zero-table inspection and conversion, bound-table
// generation, Schoenfeld verification scans, explicit-formula cross-checks,
// and the threshold solver.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "primebound/cli.hpp"

namespace {

using primebound::bounds::PrimeFunction;
using primebound::cli::RunConfig;

std::vector<PrimeFunction> parse_functions(const std::string& csv) {
  std::vector<PrimeFunction> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "psi") out.push_back(PrimeFunction::psi);
    else if (item == "theta") out.push_back(PrimeFunction::theta);
    else if (item == "pi") out.push_back(PrimeFunction::pi);
    else if (item == "pi_star") out.push_back(PrimeFunction::pi_star);
    else throw CLI::ValidationError("unknown function: " + item);
  }
  return out;
}

// writes the collected output to --out (default stdout) once, at the end
int deliver(int status, const std::string& payload, const std::string& path) {
  if (status == 1) return 1;  // no partial output on errors
  if (path.empty() || path == "-") {
    std::cout << payload;
    return status;
  }
  std::ofstream sink(path, std::ios::binary);
  if (!sink) {
    std::cerr << "error: cannot open " << path << "\n";
    return 1;
  }
  sink << payload;
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified prime-counting bounds from verified zeta zeros"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  RunConfig config;
  std::string format = "csv";
  std::string out_path = "-";
  std::vector<std::string> tol_overrides;
  app.add_option("--zeros", config.zeros_path, "zero-table file (text or binary)");
  app.add_option("--sieve-limit", config.sieve_limit, "prime sieve limit");
  app.add_option("--format", format, "output format: csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out_path, "output path or - for stdout");
  app.add_option("--tol", tol_overrides, "named tolerance override name=value");

  auto* table_cmd = app.add_subcommand("table", "optimized delta0 bound table");
  std::vector<std::string> row_specs;
  table_cmd->add_option("--row", row_specs, "row as <x>,<T> (x may be e^N)")
      ->required(false);

  auto* verify_cmd = app.add_subcommand("verify", "scan prime-counting inequalities");
  double lo = 0, hi = 0;
  std::string functions = "psi,theta,pi,pi_star";
  verify_cmd->add_option("--lo", lo, "lower end of the scan")->required();
  verify_cmd->add_option("--hi", hi, "upper end of the scan")->required();
  verify_cmd->add_option("--functions", functions, "subset of psi,theta,pi,pi_star");

  auto* cross_cmd = app.add_subcommand("crosscheck", "explicit-formula residuals");
  std::vector<double> xs;
  double cc_c = 10.0, cc_eps = 1e-3;
  cross_cmd->add_option("--x", xs, "evaluation points");
  cross_cmd->add_option("--c", cc_c, "kernel sharpness c");
  cross_cmd->add_option("--eps", cc_eps, "kernel width eps");

  auto* zeros_cmd = app.add_subcommand("zeros-info", "inspect or convert a zero table");
  std::string convert_to;
  zeros_cmd->add_option("--convert", convert_to,
                        "write the table to this path (.bin selects binary)");

  auto* thr_cmd = app.add_subcommand("threshold", "largest x covered by RH height T");
  std::vector<double> heights;
  thr_cmd->add_option("--T", heights, "verified RH heights")->required();

  CLI11_PARSE(app, argc, argv);

  config.format = format == "json" ? RunConfig::OutputFormat::json
                                   : RunConfig::OutputFormat::csv;
  for (const auto& spec : tol_overrides) {
    auto eq = spec.find('=');
    if (eq == std::string::npos) {
      std::cerr << "error: --tol expects name=value\n";
      return 1;
    }
    try {
      config.tolerances[spec.substr(0, eq)] =
          primebound::cli::parse_real(spec.substr(eq + 1));
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }

  std::ostringstream out;
  int status = 1;
  try {
    if (table_cmd->parsed()) {
      std::vector<std::pair<double, double>> rows;
      for (const auto& spec : row_specs) {
        auto comma = spec.find(',');
        if (comma == std::string::npos) {
          std::cerr << "error: --row expects <x>,<T>\n";
          return 1;
        }
        rows.emplace_back(primebound::cli::parse_real(spec.substr(0, comma)),
                          primebound::cli::parse_real(spec.substr(comma + 1)));
      }
      status = primebound::cli::cmd_table(rows, config, out, std::cerr);
    } else if (verify_cmd->parsed()) {
      status = primebound::cli::cmd_verify(lo, hi, parse_functions(functions),
                                           config, out, std::cerr);
    } else if (cross_cmd->parsed()) {
      status = primebound::cli::cmd_crosscheck(xs, cc_c, cc_eps, config, out,
                                               std::cerr);
    } else if (zeros_cmd->parsed()) {
      status = primebound::cli::cmd_zeros_info(config, convert_to, out, std::cerr);
    } else if (thr_cmd->parsed()) {
      status = primebound::cli::cmd_threshold(heights, config, out, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return deliver(status, out.str(), out_path);
}
