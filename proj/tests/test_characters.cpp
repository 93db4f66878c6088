#include <doctest.h>

#include "jumpscan/characters.hpp"

#include <cmath>
#include <numeric>
#include <random>

using namespace jumpscan;
using namespace jumpscan::characters;
using arith::IntPoly;

namespace {

using Matrix = std::vector<std::vector<Integer>>;

// Leibniz expansion over all permutations.
Integer leibniz_det(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Integer term = sign;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Multiplication by zeta_p on zeta, ..., zeta^{p-1}: shift down, and the last
// basis vector goes to 1 = -(zeta + ... + zeta^{p-1}).
Matrix zeta_companion(unsigned p) {
  const unsigned n = p - 1;
  Matrix m(n, std::vector<Integer>(n, 0));
  for (unsigned j = 0; j + 1 < n; ++j) m[j + 1][j] = 1;
  for (unsigned i = 0; i < n; ++i) m[i][n - 1] = -1;
  return m;
}

EndomorphismFactor zeta_mult(unsigned p) {
  return {arith::cyclotomic_poly(p), IntPoly{0, 1}, ActionKind::Multiplication, Basis::Shifted};
}

const EndomorphismFactor sqrt17_conj{IntPoly{-17, 0, 1}, IntPoly{0, -1}, ActionKind::Automorphism, Basis::Power};

}  // namespace

TEST_CASE("endomorphism data") {
  const EndomorphismData cm({{IntPoly{1, 0, 1}, IntPoly{0, -1}}}, -4);
  CHECK(cm.rank() == 2);
  CHECK(cm.baseline() == 4);
  CHECK_FALSE(cm.trivial_character());
  CHECK(EndomorphismData({}, 1).trivial_character());
  CHECK(EndomorphismData({}, 17).baseline() == 2);
  CHECK_THROWS(EndomorphismData({}, 18));
  CHECK(is_fundamental_discriminant(-4));
  CHECK(is_fundamental_discriminant(-3));
  CHECK(is_fundamental_discriminant(8));
  CHECK_FALSE(is_fundamental_discriminant(-1));
  CHECK(is_squarefree(17));
  CHECK_FALSE(is_squarefree(18));
}

TEST_CASE("companion determinant for multiplication by zeta_p") {
  for (unsigned p : {5u, 7u}) {
    CHECK(action_matrix(zeta_mult(p)) == zeta_companion(p));
    CHECK(leibniz_det(zeta_companion(p)) == 1);
  }
  for (unsigned p : {5u, 7u, 11u, 13u}) {
    CHECK(action_matrix(zeta_mult(p)) == zeta_companion(p));
    CHECK(action_determinant(zeta_mult(p)) == 1);
  }
}

TEST_CASE("conjugation on Q(sqrt 17)") {
  CHECK(action_matrix(sqrt17_conj) == Matrix{{1, 0}, {0, -1}});
  CHECK(action_determinant(sqrt17_conj) == -1);
  // Complex conjugation on Z[i] likewise.
  CHECK(action_determinant(EndomorphismFactor{IntPoly{1, 0, 1}, IntPoly{0, -1}}) == -1);
  const EndomorphismData both({sqrt17_conj, zeta_mult(5)}, 17);
  CHECK(action_determinant(both) == -1);
}

TEST_CASE("non-automorphisms are rejected") {
  // sqrt17 -> 2 sqrt17 does not preserve x^2 - 17.
  CHECK_THROWS_WITH_AS(action_determinant(EndomorphismFactor{IntPoly{-17, 0, 1}, IntPoly{0, 2}}),
                       doctest::Contains("not an automorphism"), ArithError);
  // Multiplication by 2 has determinant 4.
  CHECK_THROWS_AS(action_determinant(EndomorphismFactor{IntPoly{1, 0, 1}, IntPoly{2}, ActionKind::Multiplication}),
                  ArithError);
}

TEST_CASE("jump character") {
  const EndomorphismData cm({}, -4);
  CHECK(jump_character(cm, 3) == -1);
  CHECK(jump_character(cm, 5) == 1);
  const EndomorphismData trivial({}, 1);
  for (long p : {3L, 5L, 7L, 11L, 13L, 101L}) CHECK(jump_character(trivial, p) == 1);
  const EndomorphismData e17({sqrt17_conj}, 17);
  CHECK(jump_character(e17, 13) == 1);
  CHECK(jump_character(e17, 3) == -1);
  CHECK(jump_character(e17, 17) == 0);
}

TEST_CASE("density report") {
  const EndomorphismData cm({}, -4);
  const auto empty = density_report({}, cm);
  CHECK(empty.insufficient_data);
  CHECK(empty.note == "insufficient data");
  const auto triv = density_report({picard::picard_report({4}, 3, 1, 2)}, EndomorphismData({}, 1));
  CHECK_FALSE(triv.predicted_density);
  CHECK(triv.note == "no lower bound from character");

  std::vector<picard::PicardReport> reports;
  for (long p : {3L, 5L, 7L, 11L, 13L})
    reports.push_back(picard::picard_report({p % 4 == 3 ? p + 1 : (p == 5 ? 8 : (p == 13 ? 8 : 0))}, p, 1, 4));
  for (auto& r : reports) r.p = r.q.get_ui();
  const auto d = density_report(reports, cm);
  CHECK(d.total_good_primes == 5);
  CHECK(d.jumped_count == 3);
  CHECK(d.character_minus_count == 3);
  CHECK(d.character_mismatches.empty());
  CHECK(d.empirical_density == arith::Rational(3, 5));
  REQUIRE(d.predicted_density);
  CHECK(*d.predicted_density == arith::Rational(1, 2));
}

TEST_CASE("moment references match Monte-Carlo oracles") {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double pi = std::acos(-1.0);
  const int n = 400'000;
  // Sato-Tate measure (2/pi) sin^2 on [0, pi], by rejection.
  double m2 = 0, m4 = 0;
  std::vector<double> st;
  for (int got = 0; got < n;) {
    const double th = pi * u(rng);
    if (u(rng) > std::sin(th) * std::sin(th)) continue;
    const double t = 2 * std::cos(th);
    m2 += t * t;
    m4 += t * t * t * t;
    if (st.size() < 5000) st.push_back(t);
    ++got;
  }
  CHECK(m2 / n == doctest::Approx(1.0).epsilon(0.01));
  CHECK(m4 / n == doctest::Approx(usp_fourth_moment(1)).epsilon(0.02));
  CHECK_FALSE(moment_report(st, 1).non_generic);

  // CM measure: half zero traces, half 2 cos(theta) with theta uniform.
  double c2 = 0, c4 = 0;
  std::vector<double> cm;
  for (int i = 0; i < n; ++i) {
    const double t = (i % 2 == 0) ? 0.0 : 2 * std::cos(pi * u(rng));
    c2 += t * t;
    c4 += t * t * t * t;
    if (cm.size() < 5000) cm.push_back(t);
  }
  CHECK(c2 / n == doctest::Approx(1.0).epsilon(0.01));
  CHECK(c4 / n == doctest::Approx(3.0).epsilon(0.02));
  const auto cm_report = moment_report(cm, 1);
  CHECK(cm_report.non_generic);
  CHECK(cm_report.zero_trace_fraction == doctest::Approx(0.5));

  // USp(4) by the Weyl density (cos a - cos b)^2 sin^2 a sin^2 b.
  double w2 = 0, w4 = 0;
  for (int got = 0; got < n;) {
    const double a = pi * u(rng), b = pi * u(rng);
    const double dens = std::pow(std::cos(a) - std::cos(b), 2) * std::pow(std::sin(a) * std::sin(b), 2);
    if (4 * u(rng) > dens) continue;
    const double t = 2 * std::cos(a) + 2 * std::cos(b);
    w2 += t * t;
    w4 += t * t * t * t;
    ++got;
  }
  CHECK(w2 / n == doctest::Approx(1.0).epsilon(0.02));
  CHECK(w4 / n == doctest::Approx(usp_fourth_moment(2)).epsilon(0.03));
}

TEST_CASE("trace statistics of actual curves") {
  const curves::CurveModel generic(2, IntPoly{1, 1, 0, 1});
  const auto g = sato_tate_stats(generic, 1500);
  CHECK(g.samples > 200);
  CHECK(g.second_moment == doctest::Approx(1.0).epsilon(0.2));
  CHECK_FALSE(g.non_generic);
  std::size_t total = 0;
  for (auto c : g.histogram) total += c;
  CHECK(total == g.samples);

  const curves::CurveModel e(2, IntPoly{0, -1, 0, 1});
  const auto c = sato_tate_stats(e, 1500);
  CHECK(c.non_generic);
  CHECK(c.zero_trace_fraction > 0.4);

  CHECK(sato_tate_stats(e, 2).samples == 0);
}
