#include "primebound/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace primebound::cli {

namespace {

// shortest round-trip formatting
std::string fmt(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// fixed 6-significant-digit formatting used for delta0 columns
std::string fmt6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.5e", v);
  return buf;
}

double round6(double v) { return std::strtod(fmt6(v).c_str(), nullptr); }

bool check_tolerances(const RunConfig& config, std::ostream& err) {
  for (const auto& [name, value] : config.tolerances) {
    if (!(value > 0)) {
      err << "error: tolerance " << name << " must be positive\n";
      return false;
    }
  }
  return true;
}

double bracket_tol(const RunConfig& config) {
  auto it = config.tolerances.find("bracket_tol");
  return it == config.tolerances.end() ? 1e-4 : it->second;
}

zeros::ZeroTable load_table_checked(const RunConfig& config) {
  if (config.zeros_path.empty())
    throw std::runtime_error("no zero table configured (--zeros)");
  return zeros::load_zeros_file(config.zeros_path);
}

const char* function_label(bounds::PrimeFunction f) {
  using PF = bounds::PrimeFunction;
  switch (f) {
    case PF::psi: return "psi";
    case PF::theta: return "theta";
    case PF::pi: return "pi";
    case PF::pi_star: return "pi_star";
  }
  return "?";
}

}  // namespace

double parse_real(const std::string& text) {
  if (text.rfind("e^", 0) == 0) {
    char* end = nullptr;
    double n = std::strtod(text.c_str() + 2, &end);
    if (end == text.c_str() + 2 || *end != '\0')
      throw std::runtime_error("cannot parse real: " + text);
    return std::exp(n);
  }
  char* end = nullptr;
  double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0')
    throw std::runtime_error("cannot parse real: " + text);
  return v;
}

int cmd_table(const std::vector<std::pair<double, double>>& rows,
              const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!check_tolerances(config, err)) return 1;
  zeros::ZeroTable table;
  try {
    table = load_table_checked(config);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  kernel::BracketProvider brackets(bracket_tol(config));
  bool any_infeasible = false;
  nlohmann::json jrows = nlohmann::json::array();
  std::ostringstream csv;
  csv << "x,c,T,alpha,delta0\n";
  for (auto [x, t] : rows) {
    try {
      auto [p, cert] = bounds::optimize_params(x, t, table, brackets);
      csv << fmt(x) << ',' << fmt(p.c) << ',' << fmt(t) << ',' << fmt(p.alpha)
          << ',' << fmt6(cert.delta0) << "\n";
      jrows.push_back({{"x", x},
                       {"c", p.c},
                       {"T", t},
                       {"alpha", p.alpha},
                       {"delta0", round6(cert.delta0)}});
    } catch (const bounds::InfeasibleError& e) {
      any_infeasible = true;
      err << "infeasible row x=" << fmt(x) << " T=" << fmt(t) << ": "
          << e.what() << "\n";
    } catch (const std::exception& e) {
      err << "error: row x=" << fmt(x) << " T=" << fmt(t) << ": " << e.what()
          << "\n";
      return 1;
    }
  }
  if (config.format == RunConfig::OutputFormat::csv)
    out << csv.str();
  else
    out << nlohmann::json{{"rows", jrows}}.dump() << "\n";
  return any_infeasible ? 2 : 0;
}

int cmd_verify(double lo, double hi,
               const std::vector<bounds::PrimeFunction>& which,
               const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!check_tolerances(config, err)) return 1;
  if (!(hi <= static_cast<double>(config.sieve_limit))) {
    err << "error: hi exceeds the configured sieve limit\n";
    return 1;
  }
  bounds::SchoenfeldReport report;
  try {
    auto sieve = primes::PrimePowerSieve::build(config.sieve_limit);
    report = bounds::schoenfeld_verify(lo, hi, which, sieve);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (config.format == RunConfig::OutputFormat::csv) {
    std::ostringstream csv;
    csv << "x,function,lhs,rhs\n";
    for (const auto& v : report.violations)
      csv << fmt(v.x) << ',' << v.function << ',' << fmt(v.lhs) << ','
          << fmt(v.rhs) << "\n";
    out << csv.str();
  } else {
    nlohmann::json jv = nlohmann::json::array();
    for (const auto& v : report.violations)
      jv.push_back(
          {{"x", v.x}, {"function", v.function}, {"lhs", v.lhs}, {"rhs", v.rhs}});
    nlohmann::json checked = nlohmann::json::array();
    for (auto f : report.inequalities_checked) checked.push_back(function_label(f));
    out << nlohmann::json{{"lo", report.lo},
                          {"hi", report.hi},
                          {"checked", checked},
                          {"scan_points", report.scan_points},
                          {"violations", jv}}
               .dump()
        << "\n";
  }
  return report.passed() ? 0 : 2;
}

int cmd_crosscheck(const std::vector<double>& xs, double c, double eps,
                   const RunConfig& config, std::ostream& out,
                   std::ostream& err) {
  if (!check_tolerances(config, err)) return 1;
  zeros::ZeroTable table;
  try {
    table = load_table_checked(config);
    if (!(eps > 0 && eps < 0.1))
      throw std::runtime_error("crosscheck requires 0 < eps < 1/10");
    if (!(c / eps <= table.height))
      throw std::runtime_error("zero table height below c/eps");
    for (double x : xs)
      if (!(std::exp(eps) * x <= static_cast<double>(config.sieve_limit)))
        throw std::runtime_error("exp(eps) x exceeds the sieve limit");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  bool all_pass = true;
  std::ostringstream csv;
  csv << "x,lhs,rhs,residual,budget,pass\n";
  nlohmann::json jrows = nlohmann::json::array();
  try {
    specfun::KernelParams kp(c, eps);
    auto sieve = primes::PrimePowerSieve::build(config.sieve_limit);
    for (double x : xs) {
      double lhs = primes::psi_smoothed(x, kp, sieve);
      auto rhs = bounds::explicit_formula_rhs(x, kp, table);
      double residual = std::fabs(lhs - rhs.value);
      bool pass = residual <= rhs.error_budget;
      all_pass = all_pass && pass;
      csv << fmt(x) << ',' << fmt(lhs) << ',' << fmt(rhs.value) << ','
          << fmt(residual) << ',' << fmt(rhs.error_budget) << ','
          << (pass ? "1" : "0") << "\n";
      jrows.push_back({{"x", x},
                       {"lhs", lhs},
                       {"rhs", rhs.value},
                       {"residual", residual},
                       {"budget", rhs.error_budget},
                       {"pass", pass}});
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (config.format == RunConfig::OutputFormat::csv)
    out << csv.str();
  else
    out << nlohmann::json{{"rows", jrows}}.dump() << "\n";
  return all_pass ? 0 : 2;
}

int cmd_zeros_info(const RunConfig& config, const std::string& convert_to,
                   std::ostream& out, std::ostream& err) {
  if (!check_tolerances(config, err)) return 1;
  zeros::ZeroTable table;
  try {
    table = load_table_checked(config);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (!convert_to.empty()) {
    bool binary = convert_to.size() > 4 &&
                  convert_to.compare(convert_to.size() - 4, 4, ".bin") == 0;
    std::ofstream sink(convert_to, std::ios::binary);
    if (!sink) {
      err << "error: cannot open " << convert_to << "\n";
      return 1;
    }
    zeros::save_zeros(table, sink,
                      binary ? zeros::Format::binary : zeros::Format::text);
  }
  if (config.format == RunConfig::OutputFormat::csv) {
    out << "count,height,precision,first,last\n";
    out << table.ordinates.size() << ',' << fmt(table.height) << ','
        << fmt(table.precision) << ',' << fmt(table.ordinates.front()) << ','
        << fmt(table.ordinates.back()) << "\n";
  } else {
    out << nlohmann::json{{"count", table.ordinates.size()},
                          {"height", table.height},
                          {"precision", table.precision},
                          {"first", table.ordinates.front()},
                          {"last", table.ordinates.back()},
                          {"source", table.source}}
               .dump()
        << "\n";
  }
  return 0;
}

int cmd_threshold(const std::vector<double>& heights, const RunConfig& config,
                  std::ostream& out, std::ostream& err) {
  if (!check_tolerances(config, err)) return 1;
  std::ostringstream csv;
  csv << "T,x_max\n";
  nlohmann::json jrows = nlohmann::json::array();
  try {
    for (double t : heights) {
      double x = bounds::schoenfeld_threshold(t);
      csv << fmt(t) << ',' << fmt6(x) << "\n";
      jrows.push_back({{"T", t}, {"x_max", round6(x)}});
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (config.format == RunConfig::OutputFormat::csv)
    out << csv.str();
  else
    out << nlohmann::json{{"rows", jrows}}.dump() << "\n";
  return 0;
}

}  // namespace primebound::cli
