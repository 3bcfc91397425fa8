#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "primebound/zeros.hpp"
#include "table_fixture.hpp"

using namespace primebound;

TEST_CASE("load_zeros text parsing") {
  std::istringstream in("14.134725141\n21.022039639\n25.010857580\n");
  auto t = zeros::load_zeros(in, zeros::Format::text);
  REQUIRE(t.ordinates.size() == 3);
  CHECK(t.ordinates[0] == doctest::Approx(14.134725).epsilon(1e-6));
  CHECK(t.height == doctest::Approx(25.010857580));

  std::istringstream empty("");
  CHECK_THROWS_WITH_AS(zeros::load_zeros(empty, zeros::Format::text),
                       doctest::Contains("empty"), std::runtime_error);

  std::istringstream nonmono("14.13\n25.01\n21.02\n");
  CHECK_THROWS_WITH_AS(zeros::load_zeros(nonmono, zeros::Format::text),
                       doctest::Contains("record 3"), std::runtime_error);

  std::istringstream header(
      "# a demo table\n# height=30.5\n# precision=1e-9\n# source=demo\n"
      "14.134725141\n21.022039639\n25.010857580\n");
  auto h = zeros::load_zeros(header, zeros::Format::text);
  CHECK(h.height == 30.5);
  CHECK(h.precision == 1e-9);
  CHECK(h.source == "demo");

  std::istringstream junk("14.134725141\nnot-a-number\n");
  CHECK_THROWS_WITH_AS(zeros::load_zeros(junk, zeros::Format::text),
                       doctest::Contains("record 2"), std::runtime_error);

  std::istringstream negative("-14.1\n21.0\n");
  CHECK_THROWS_AS(zeros::load_zeros(negative, zeros::Format::text),
                  std::runtime_error);

  // a table not starting at the lowest zero is rejected
  std::istringstream tail_only("21.022039639\n25.010857580\n");
  CHECK_THROWS_AS(zeros::load_zeros(tail_only, zeros::Format::text),
                  std::runtime_error);
}

TEST_CASE("binary cache round trip") {
  std::istringstream in("14.134725141\n21.022039639\n25.010857580\n");
  auto t = zeros::load_zeros(in, zeros::Format::text);
  std::ostringstream sink(std::ios::binary);
  zeros::save_zeros(t, sink, zeros::Format::binary);
  std::string blob = sink.str();
  CHECK(blob.substr(0, 8) == "ZETZERO1");
  CHECK(blob.size() == 16 + 3 * 8);

  std::istringstream back(blob, std::ios::binary);
  auto t2 = zeros::load_zeros(back, zeros::Format::binary);
  REQUIRE(t2.ordinates.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(t2.ordinates[i] == t.ordinates[i]);

  std::istringstream bad("WRONGMAG\x01\x00", std::ios::binary);
  CHECK_THROWS_WITH_AS(zeros::load_zeros(bad, zeros::Format::binary),
                       doctest::Contains("magic"), std::runtime_error);

  std::istringstream trunc(blob.substr(0, 20), std::ios::binary);
  CHECK_THROWS_AS(zeros::load_zeros(trunc, zeros::Format::binary),
                  std::runtime_error);
}

TEST_CASE("text save round trip") {
  std::istringstream in(
      "# height=30.5\n# precision=1e-9\n# source=demo\n"
      "14.134725141\n21.022039639\n25.010857580\n");
  auto t = zeros::load_zeros(in, zeros::Format::text);
  std::ostringstream sink;
  zeros::save_zeros(t, sink, zeros::Format::text);
  std::istringstream back(sink.str());
  auto t2 = zeros::load_zeros(back, zeros::Format::text);
  REQUIRE(t2.ordinates.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(t2.ordinates[i] == t.ordinates[i]);
  CHECK(t2.height == t.height);
  CHECK(t2.precision == t.precision);
  CHECK(t2.source == "demo");
}

TEST_CASE("counting main term and bounds") {
  double two_pi_e = 2 * std::numbers::pi * std::numbers::e;
  CHECK(zeros::counting_main_term(two_pi_e) == doctest::Approx(0.875).epsilon(1e-12));
  double g100 = 100 / (2 * std::numbers::pi) * std::log(100 / two_pi_e) + 0.875;
  CHECK(zeros::counting_main_term(100.0) == doctest::Approx(g100));
  CHECK(zeros::counting_main_term(100.0) ==
        doctest::Approx(29.002343587325348).epsilon(1e-12));
  CHECK_THROWS_AS(zeros::counting_main_term(13.9), std::domain_error);

  auto low = zeros::counting_bounds(14.0);
  CHECK(low.hi - low.lo == doctest::Approx(2 * std::log(14.0)));
  CHECK(low.lo <= 0.0);  // encloses N(14) whether 0 or 1
  CHECK(low.hi >= 1.0);

  auto est = zeros::counting_bounds(100.0);
  CHECK(est.lo == doctest::Approx(g100 - std::log(100.0)));
  CHECK(est.hi == doctest::Approx(g100 + std::log(100.0)));

  const auto& table = bundled_zeros();
  for (double t : {100.0, 500.0, 1000.0}) {
    auto e = zeros::counting_bounds(t);
    auto n = static_cast<double>(table.count_below(t));
    CHECK(e.lo <= n);
    CHECK(n <= e.hi);
  }
  // Rosser enclosure along the data: |N - g| <= log t
  for (std::size_t i = 99; i < table.ordinates.size(); i += 100) {
    double t = table.ordinates[i];
    CHECK(std::fabs(static_cast<double>(i + 1) - zeros::counting_main_term(t)) <=
          std::log(t));
  }
}

TEST_CASE("reciprocal sum bounds dominate the data") {
  const auto& table = bundled_zeros();
  CHECK_THROWS_AS(zeros::reciprocal_sum_bound(14.0, 14.0), std::domain_error);
  CHECK_THROWS_AS(zeros::reciprocal_sum_bound(13.0, 20.0), std::domain_error);
  CHECK_THROWS_AS(zeros::reciprocal_sum_bound_from_zero(4000.0), std::domain_error);

  auto exact_sum = [&](double t1, double t2) {
    double s = 0;
    for (double g : table.ordinates) {
      if (g >= t2) break;
      if (g >= t1) s += 1.0 / g;
    }
    return s;
  };

  CHECK(exact_sum(14.0, 100.0) <= zeros::reciprocal_sum_bound(14.0, 100.0));

  std::mt19937 rng(20260811);
  std::uniform_real_distribution<double> pick(14.0, table.height);
  for (int i = 0; i < 20; ++i) {
    double a = pick(rng), b = pick(rng);
    if (a > b) std::swap(a, b);
    if (b - a < 1) b = a + 1;
    CHECK(exact_sum(a, b) <= zeros::reciprocal_sum_bound(a, b));
  }

  double whole = zeros::reciprocal_sum_bound_from_zero(5000.0);
  CHECK(whole == doctest::Approx(3.5502107383972101).epsilon(1e-9));
  CHECK(exact_sum(0.0, 5000.0) <= whole);
  CHECK(exact_sum(0.0, 5000.0) == doctest::Approx(3.52).epsilon(0.02));
}

TEST_CASE("weighted tail bound dominates the data") {
  const auto& table = bundled_zeros();
  specfun::KernelParams p(10.0, 1e-3);
  double exact = 0;
  for (double g : table.ordinates) {
    if (g >= 5000.0) break;
    if (g >= 100.0) exact += specfun::logan_ell(p, g) / g;
  }
  CHECK(exact <= zeros::weighted_tail_bound(p, 100.0, 5000.0));

  CHECK_THROWS_AS(zeros::weighted_tail_bound(p, 100.0, 1e4 + 1.0),
                  std::domain_error);
  CHECK_THROWS_AS(zeros::weighted_tail_bound(p, 13.0, 100.0), std::domain_error);
  CHECK_THROWS_AS(zeros::weighted_tail_bound(p, 200.0, 100.0), std::domain_error);
  // T1 = c/eps itself is allowed: the composition splits exactly there
  CHECK(zeros::weighted_tail_bound(p, 100.0, 1e4) > 0);
}

TEST_CASE("exact weighted sum") {
  const auto& table = bundled_zeros();
  specfun::KernelParams p(10.0, 1e-3);
  CHECK(zeros::exact_weighted_sum(table, p, 14.0) == 0.0);

  double manual = 0;
  std::size_t count = 0;
  for (double g : table.ordinates) {
    if (g > 100.0) break;
    manual += specfun::logan_ell(p, g) / g;
    ++count;
  }
  CHECK(count == 29);
  double got = zeros::exact_weighted_sum(table, p, 100.0);
  CHECK(got == doctest::Approx(manual).epsilon(1e-14));
  // ell <= 1, so the weighted sum sits below the reciprocal sum
  double recip = 0;
  for (double g : table.ordinates) {
    if (g > 100.0) break;
    recip += 1.0 / g;
  }
  CHECK(got <= recip);
  // data value; 29 reciprocals of the ordinates up to 100
  CHECK(recip == doctest::Approx(0.5922).epsilon(0.001));

  // monotone in the cut
  CHECK(zeros::exact_weighted_sum(table, p, 1000.0) >= got);
  CHECK_THROWS_AS(zeros::exact_weighted_sum(table, p, table.height + 1),
                  std::domain_error);
}

TEST_CASE("prefix plus tail dominates a longer exact prefix") {
  const auto& table = bundled_zeros();
  specfun::KernelParams p(10.0, 1e-3);
  double split = zeros::exact_weighted_sum(table, p, 1000.0) +
                 zeros::weighted_tail_bound(p, 1000.0, 5000.0);
  double direct = zeros::exact_weighted_sum(table, p, 5000.0);
  CHECK(direct <= split);
}

TEST_CASE("bundled table sanity") {
  const auto& table = bundled_zeros();
  CHECK(table.ordinates.size() >= 100000);
  CHECK(table.height >= 7e4);
  CHECK(table.precision <= 1e-7);
  CHECK(table.ordinates.front() == doctest::Approx(14.134725141734693).epsilon(1e-9));
}
