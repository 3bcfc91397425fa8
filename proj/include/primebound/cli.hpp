// Command implementations behind the command-line front end. Each returns
// the process exit status and writes its complete output in one piece.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "primebound/bounds.hpp"

namespace primebound::cli {

struct RunConfig {
  std::string zeros_path;
  std::uint64_t sieve_limit = 10'000'000;
  enum class OutputFormat { csv, json } format = OutputFormat::csv;
  std::map<std::string, double> tolerances;  // named overrides, all > 0
};

// exit codes: 0 success, 1 I/O or precondition failure, 2 completed with
// infeasible rows / violations / failed residual checks

// one (x, c, T, alpha, delta0) row per (target_x, T) input pair
int cmd_table(const std::vector<std::pair<double, double>>& rows,
              const RunConfig& config, std::ostream& out, std::ostream& err);

int cmd_verify(double lo, double hi,
               const std::vector<bounds::PrimeFunction>& which,
               const RunConfig& config, std::ostream& out, std::ostream& err);

int cmd_crosscheck(const std::vector<double>& xs, double c, double eps,
                   const RunConfig& config, std::ostream& out,
                   std::ostream& err);

int cmd_zeros_info(const RunConfig& config, const std::string& convert_to,
                   std::ostream& out, std::ostream& err);

int cmd_threshold(const std::vector<double>& heights, const RunConfig& config,
                  std::ostream& out, std::ostream& err);

// accepts plain decimals plus the table notation e^N
double parse_real(const std::string& text);

}  // namespace primebound::cli
