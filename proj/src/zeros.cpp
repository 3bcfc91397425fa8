#include "primebound/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "internal.hpp"

namespace primebound::zeros {

namespace {

constexpr char kMagic[8] = {'Z', 'E', 'T', 'Z', 'E', 'R', 'O', '1'};

[[noreturn]] void parse_fail(const std::string& what) {
  throw std::runtime_error("zero table: " + what);
}

void validate(ZeroTable& t) {
  if (t.ordinates.empty()) parse_fail("empty input");
  for (std::size_t i = 0; i < t.ordinates.size(); ++i) {
    double g = t.ordinates[i];
    if (!(g > 0) || !std::isfinite(g))
      parse_fail("non-positive ordinate at record " + std::to_string(i + 1));
    // equal neighbours are allowed and count as multiplicity
    if (i > 0 && g < t.ordinates[i - 1])
      parse_fail("monotonicity violation at record " + std::to_string(i + 1));
  }
  double first = t.ordinates.front();
  if (!(first > 14.0 && first < 15.0))
    parse_fail("first ordinate must be the lowest zero (~14.13)");
  if (t.height == 0) t.height = t.ordinates.back();
  if (t.height < t.ordinates.back())
    parse_fail("declared height below the last ordinate");
  if (!(t.precision > 0)) parse_fail("precision must be positive");
  // Rosser consistency of cumulative counts, checked on a stride
  for (std::size_t i = 0; i < t.ordinates.size(); i += 997) {
    double g = t.ordinates[i];
    if (g < 14.2) continue;
    double dev = std::fabs(static_cast<double>(i + 1) - counting_main_term(g));
    if (dev > std::log(g))
      parse_fail("counts disagree with the counting main term near t=" +
                 std::to_string(g));
  }
}

void write_u64_le(std::ostream& out, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 8);
}

std::uint64_t read_u64_le(std::istream& in) {
  unsigned char b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  if (!in) parse_fail("truncated binary header");
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

ZeroTable load_text(std::istream& in) {
  ZeroTable t;
  std::string line;
  std::size_t record = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t pos = line.find_first_not_of(" \t");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') {
      std::string body = line.substr(pos + 1);
      for (const char* key : {"height=", "precision=", "source="}) {
        std::size_t at = body.find(key);
        if (at == std::string::npos) continue;
        std::string val = body.substr(at + std::strlen(key));
        if (std::strcmp(key, "source=") == 0) {
          t.source = val;
        } else {
          char* end = nullptr;
          double v = std::strtod(val.c_str(), &end);
          if (end == val.c_str()) parse_fail(std::string("bad ") + key + " header");
          (std::strcmp(key, "height=") == 0 ? t.height : t.precision) = v;
        }
      }
      continue;
    }
    ++record;
    char* end = nullptr;
    double v = std::strtod(line.c_str() + pos, &end);
    if (end == line.c_str() + pos || !std::isfinite(v))
      parse_fail("parse error at record " + std::to_string(record));
    t.ordinates.push_back(v);
  }
  validate(t);
  return t;
}

ZeroTable load_binary(std::istream& in) {
  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, kMagic, 8) != 0)
    parse_fail("bad binary magic (expected ZETZERO1)");
  std::uint64_t n = read_u64_le(in);
  ZeroTable t;
  t.ordinates.resize(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    std::uint64_t bits = read_u64_le(in);
    double v;
    std::memcpy(&v, &bits, 8);
    t.ordinates[i] = v;
  }
  t.source = "binary cache";
  validate(t);
  return t;
}

}  // namespace

std::size_t ZeroTable::count_below(double t) const {
  return static_cast<std::size_t>(
      std::upper_bound(ordinates.begin(), ordinates.end(), t) -
      ordinates.begin());
}

ZeroTable load_zeros(std::istream& in, Format format) {
  return format == Format::text ? load_text(in) : load_binary(in);
}

ZeroTable load_zeros_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("zero table: cannot open " + path);
  char magic[8] = {};
  in.read(magic, 8);
  in.clear();
  in.seekg(0);
  return load_zeros(in, std::memcmp(magic, kMagic, 8) == 0 ? Format::binary
                                                           : Format::text);
}

void save_zeros(const ZeroTable& table, std::ostream& out, Format format) {
  if (format == Format::binary) {
    out.write(kMagic, 8);
    write_u64_le(out, table.ordinates.size());
    for (double g : table.ordinates) {
      std::uint64_t bits;
      std::memcpy(&bits, &g, 8);
      write_u64_le(out, bits);
    }
    return;
  }
  out.precision(17);
  out << "# height=" << table.height << "\n";
  out << "# precision=" << table.precision << "\n";
  if (!table.source.empty()) out << "# source=" << table.source << "\n";
  for (double g : table.ordinates) out << g << "\n";
}

double counting_main_term(double t) {
  if (!(t >= 14)) throw std::domain_error("counting_main_term: requires t >= 14");
  constexpr double two_pi_e = 2.0 * std::numbers::pi * std::numbers::e;
  return t / (2.0 * std::numbers::pi) * std::log(t / two_pi_e) + 0.875;
}

CountingEstimate counting_bounds(double t) {
  double g = counting_main_term(t);
  double r = std::log(t);
  return {t, g, g - r, g + r};
}

double reciprocal_sum_bound(double t1, double t2) {
  if (!(t1 >= 14) || !(t2 > t1))
    throw std::domain_error("reciprocal_sum_bound: requires 14 <= t1 < t2");
  double two_pi = 2.0 * std::numbers::pi;
  double a = std::log(t2 / two_pi), b = std::log(t1 / two_pi);
  double main = (a * a - b * b) / (4.0 * std::numbers::pi);
  return detail::certify_up(main + 5.0 * std::log(t1) / t1);
}

double reciprocal_sum_bound_from_zero(double t2) {
  if (!(t2 >= 5000))
    throw std::domain_error("reciprocal_sum_bound_from_zero: requires t2 >= 5000");
  double a = std::log(t2 / (2.0 * std::numbers::pi));
  return detail::certify_up(a * a / (4.0 * std::numbers::pi));
}

double weighted_tail_bound(const specfun::KernelParams& p, double t0, double t1) {
  if (!(t0 >= 14) || !(t1 > t0))
    throw std::domain_error("weighted_tail_bound: requires 14 <= T0 < T1");
  if (!(t1 <= p.cutoff()))
    throw std::domain_error("weighted_tail_bound: requires T1 <= c/eps");
  double two_pi = 2.0 * std::numbers::pi;
  double a = std::log(t1 / two_pi), b = std::log(t0 / two_pi);
  double bracket = a * a - b * b +
                   20.0 * std::numbers::pi * std::log(t1) / t1;
  double ell = specfun::logan_ell(p, t0);  // decreasing on [0, c/eps]
  return detail::certify_up(ell / (4.0 * std::numbers::pi) * bracket);
}

double exact_weighted_sum(const ZeroTable& table, const specfun::KernelParams& p,
                          double up_to) {
  if (!(up_to <= table.height))
    throw std::domain_error("exact_weighted_sum: up_to exceeds table height");
  detail::Kahan acc;
  for (double g : table.ordinates) {
    if (g > up_to) break;
    acc.add(specfun::logan_ell(p, g) / g);
  }
  return acc.sum;
}

}  // namespace primebound::zeros
