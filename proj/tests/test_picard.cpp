#include <doctest.h>

#include "jumpscan/picard.hpp"

#include <complex>

using namespace jumpscan;
using namespace jumpscan::picard;
using arith::IntPoly;
using arith::RatPoly;
using zeta::WeilPolynomial;

namespace {

// Cyclotomic multiplicities by repeated division of M(T) over Q.
CycloMultiplicities by_rational_division(const H2Poly& h) {
  RatPoly rest = normalized_h2_poly(h);
  CycloMultiplicities out;
  for (unsigned long n = 1; n <= 400 && rest.degree() > 0; ++n) {
    const RatPoly phi(arith::cyclotomic_poly(n));
    if (phi.degree() > rest.degree()) continue;
    while (true) {
      auto [quo, rem] = rest.divmod(phi);
      if (!rem.is_zero()) break;
      rest = quo;
      ++out[n];
    }
  }
  return out;
}

// Reversed characteristic polynomial of the products alpha_i alpha_j plus
// two copies of q, from numerically computed roots.
std::vector<std::complex<double>> h2_by_products(const std::vector<std::complex<double>>& alphas, double q) {
  std::vector<std::complex<double>> lambdas = {q, q};
  for (const auto& a : alphas)
    for (const auto& b : alphas) lambdas.push_back(a * b);
  std::vector<std::complex<double>> poly = {1.0};
  for (const auto& l : lambdas) {
    std::vector<std::complex<double>> next(poly.size() + 1, 0.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + 1] -= l * poly[i];
    }
    poly = next;
  }
  return poly;
}

const WeilPolynomial ss3{3, 1, {1, 0, 3}};
const WeilPolynomial ord5{5, 1, {1, 2, 5}};

}  // namespace

TEST_CASE("H2 polynomial examples") {
  // Inverse roots {3,3,3,3,-3,-3}: (1-3T)^4 (1+3T)^2.
  const IntPoly expect3 = IntPoly{1, -3} * IntPoly{1, -3} * IntPoly{1, -3} * IntPoly{1, -3} * IntPoly{1, 3} * IntPoly{1, 3};
  const auto h3 = h2_char_poly(ss3);
  CHECK(h3.degree == 6);
  CHECK(IntPoly(h3.coeffs) == expect3);
  // {5,5,5,5,-3-4i,-3+4i}: (1-5T)^4 (1 + 6T + 25T^2).
  const IntPoly expect5 = IntPoly{1, -5} * IntPoly{1, -5} * IntPoly{1, -5} * IntPoly{1, -5} * IntPoly{1, 6, 25};
  CHECK(IntPoly(h2_char_poly(ord5).coeffs) == expect5);
  const auto h0 = h2_char_poly(WeilPolynomial{7, 0, {1}});
  CHECK(IntPoly(h0.coeffs) == IntPoly{1, -7} * IntPoly{1, -7});
}

TEST_CASE("H2 polynomial against explicit products of roots") {
  // Genus 2: f = (1 + 2T + 5T^2)(1 - 4T + 5T^2), alphas -1 +- 2i and 2 +- i.
  const IntPoly f = IntPoly{1, 2, 5} * IntPoly{1, -4, 5};
  const WeilPolynomial w{5, 2, f.coeffs()};
  const auto h = h2_char_poly(w);
  CHECK(h.degree == 18);
  const auto ref = h2_by_products({{-1, 2}, {-1, -2}, {2, 1}, {2, -1}}, 5.0);
  REQUIRE(ref.size() == h.coeffs.size());
  for (std::size_t i = 0; i < ref.size(); ++i) {
    CHECK(h.coeffs[i].get_d() == doctest::Approx(ref[i].real()).epsilon(1e-9));
    CHECK(std::abs(ref[i].imag()) < 1e-6 * (1 + std::abs(ref[i].real())));
  }
}

TEST_CASE("cyclotomic multiplicities") {
  CHECK(cyclo_multiplicities(h2_char_poly(ss3)) == CycloMultiplicities{{1, 4}, {2, 2}});
  CHECK(cyclo_multiplicities(h2_char_poly(ord5)) == CycloMultiplicities{{1, 4}});
  CHECK(cyclo_multiplicities(h2_char_poly(WeilPolynomial{7, 0, {1}})) == CycloMultiplicities{{1, 2}});
  // M(T) for the ordinary case: (T-1)^4 (T^2 + 6/5 T + 1).
  const RatPoly m5 = normalized_h2_poly(h2_char_poly(ord5));
  const RatPoly quad(std::vector<arith::Rational>{1, arith::Rational(6, 5), 1});
  const RatPoly lin(IntPoly{-1, 1});
  CHECK(m5 == lin * lin * lin * lin * quad);
}

TEST_CASE("integer and rational cyclotomic routes agree") {
  std::vector<WeilPolynomial> ws = {ss3, ord5, {5, 1, {1, 0, 5}}, {7, 1, {1, 0, 7}}, {9, 1, {1, 3, 9}},
                                    {9, 1, {1, -9 + 3, 9}}, {3, 1, {1, 3, 3}},   {4, 1, {1, 2, 4}}};
  ws.push_back({5, 2, (IntPoly{1, 2, 5} * IntPoly{1, -4, 5}).coeffs()});
  ws.push_back({3, 2, (IntPoly{1, 0, 3} * IntPoly{1, 3, 3}).coeffs()});
  ws.push_back({7, 2, {1, 0, 0, 0, 49}});
  for (const auto& w : ws) {
    const auto h = h2_char_poly(w);
    CHECK(cyclo_multiplicities(h) == by_rational_division(h));
  }
}

TEST_CASE("picard numbers and parity") {
  const auto h3 = h2_char_poly(ss3);
  CHECK(picard_number(h3, 1) == 4);
  CHECK(picard_number(h3, 2) == 6);
  CHECK(picard_number(h3, 0) == 6);
  CHECK(picard_number(h2_char_poly(ord5), 0) == 4);
  CHECK(verify_parity(h3));
  CHECK(verify_parity(h2_char_poly(WeilPolynomial{7, 0, {1}})));
  CHECK(picard_number(h2_char_poly(WeilPolynomial{7, 0, {1}}), 0) == 2);
  // phi-weighting: a primitive 3rd-root eigenvalue pair counts twice.
  CHECK(picard_number(CycloMultiplicities{{1, 2}, {3, 1}}, 3) == 4);
  CHECK(picard_number(CycloMultiplicities{{1, 2}, {3, 1}}, 2) == 2);
  CHECK_FALSE(verify_parity(CycloMultiplicities{{1, 3}}));
}

TEST_CASE("trace identity") {
  auto t3 = verify_trace_identity(4, ss3);
  CHECK(t3.ok());
  CHECK(t3.h2_trace_formula == 6);
  auto t5 = verify_trace_identity(8, ord5);
  CHECK(t5.ok());
  CHECK(t5.h2_trace_formula == 14);
  CHECK(verify_trace_identity(8, WeilPolynomial{7, 0, {1}}).ok());
  CHECK_FALSE(verify_trace_identity(9, ord5).lefschetz);
}

TEST_CASE("jump scan for the CM curve") {
  const curves::CurveModel e(2, IntPoly{0, -1, 0, 1});
  const characters::EndomorphismData cm({{IntPoly{1, 0, 1}, IntPoly{0, -1}}}, -4);
  CHECK(cm.baseline() == 4);
  const auto entries = jump_scan(e, cm, primes_in_range(3, 60));
  REQUIRE(entries.size() == primes_in_range(3, 60).size());
  for (const auto& en : entries) {
    REQUIRE(en.report);
    CHECK(en.report->jumped == (en.p % 4 == 3));
    CHECK(en.report->picard_geom == (en.p % 4 == 3 ? 6u : 4u));
  }
  // Parallel scans return the same ordered results.
  ScanOptions opts;
  opts.jobs = 3;
  const auto par = jump_scan(e, cm, primes_in_range(3, 60), opts);
  for (std::size_t i = 0; i < par.size(); ++i) {
    CHECK(par[i].p == entries[i].p);
    CHECK(par[i].report->picard_geom == entries[i].report->picard_geom);
  }
  CHECK(primes_in_range(1, 20) == std::vector<std::uint64_t>{3, 5, 7, 11, 13, 17, 19});
}

TEST_CASE("jump scan records skipped primes") {
  const curves::CurveModel c(2, IntPoly{1, 1, 0, 0, 0, 0, 0, 1});
  const characters::EndomorphismData trivial({}, 1);
  ScanOptions opts;
  opts.budget = 1000;
  const auto entries = jump_scan(c, trivial, {3, 5, 13}, opts);
  CHECK(entries[0].report);
  CHECK_FALSE(entries[2].report);
  CHECK(entries[2].skipped.find("enumeration too large") != std::string::npos);
}
