#include "jumpscan/zeta.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>

namespace jumpscan::zeta {

std::vector<Integer> WeilPolynomial::power_sums(std::size_t count) const {
  return arith::inverse_root_power_sums(coeffs, count);
}

namespace {

bool within_hasse_weil(const Integer& qk, const Integer& n, unsigned g) {
  const Integer t = qk + 1 - n;
  return t * t <= Integer(4 * g * g) * qk;
}

double root_circle_deviation(const WeilPolynomial& w) {
  if (w.g == 0) return 0.0;
  // Monic polynomial with roots alpha_i: reverse of f.
  std::vector<arith::Rational> rev;
  for (auto it = w.coeffs.rbegin(); it != w.coeffs.rend(); ++it) rev.emplace_back(*it);
  const arith::RatPoly sf = arith::squarefree_part(arith::RatPoly(std::move(rev)));
  const long r = sf.degree();
  if (r < 1) return 0.0;
  // Rescale alpha = sqrt(q) u so the roots should land on |u| = 1.
  const long double sq = std::sqrt(static_cast<long double>(w.q.get_d()));
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(r, r);
  for (long j = 0; j < r; ++j) {
    const long double c = static_cast<long double>(sf[j].get_d()) * std::pow(sq, static_cast<long double>(j - r));
    companion(j, r - 1) = static_cast<double>(-c);
    if (j > 0) companion(j, j - 1) = 1.0;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  double worst = 0.0;
  for (const auto& z : solver.eigenvalues()) worst = std::max(worst, std::abs(std::abs(z) - 1.0));
  return worst;
}

}  // namespace

ValidationReport validate_weil(const WeilPolynomial& w) {
  ValidationReport rep;
  const unsigned g = w.g;
  const auto a = [&](std::size_t i) { return i < w.coeffs.size() ? w.coeffs[i] : Integer(0); };

  rep.functional_equation = w.coeffs.size() == 2 * g + 1 && a(0) == 1;
  for (unsigned i = 0; i <= g && rep.functional_equation; ++i)
    if (a(2 * g - i) != arith::ipow(w.q, g - i) * a(i)) rep.functional_equation = false;
  if (!rep.functional_equation) rep.failures.push_back("functional equation");

  // q^g T^{2g} f(1/(qT)) has coefficient q^g a_{2g-j} / q^{2g-j} at T^j.
  rep.reciprocal_pairing = w.coeffs.size() == 2 * g + 1;
  for (unsigned j = 0; j <= 2 * g && rep.reciprocal_pairing; ++j) {
    arith::Rational c(arith::ipow(w.q, g) * a(2 * g - j), arith::ipow(w.q, 2 * g - j));
    c.canonicalize();
    if (c != arith::Rational(a(j))) rep.reciprocal_pairing = false;
  }
  if (!rep.reciprocal_pairing) rep.failures.push_back("reciprocal pairing");

  rep.max_root_deviation = root_circle_deviation(w);
  rep.root_circle = rep.max_root_deviation <= kRootCircleTolerance;
  if (!rep.root_circle) rep.failures.push_back("root circle");
  return rep;
}

WeilPolynomial weil_polynomial(const std::vector<Integer>& counts, const Integer& q, unsigned g) {
  if (counts.size() != g) throw InconsistentCounts("expected exactly g point counts");
  std::vector<Integer> s;
  for (unsigned k = 1; k <= g; ++k) {
    const Integer qk = arith::ipow(q, k);
    if (!within_hasse_weil(qk, counts[k - 1], g))
      throw InconsistentCounts("N_" + std::to_string(k) + " violates the Hasse-Weil bound");
    s.push_back(qk + 1 - counts[k - 1]);
  }
  std::vector<Integer> lower;
  try {
    lower = arith::reversed_poly_from_power_sums(s);
  } catch (const ArithError&) {
    throw InconsistentCounts("non-integral Newton identity step");
  }
  WeilPolynomial w{q, g, std::vector<Integer>(2 * g + 1, 0)};
  for (unsigned i = 0; i <= g; ++i) {
    w.coeffs[i] = lower[i];
    w.coeffs[2 * g - i] = arith::ipow(q, g - i) * lower[i];
  }
  const ValidationReport rep = validate_weil(w);
  if (!rep.ok()) throw InconsistentCounts("Weil polynomial failed validation: " + rep.failures.front());
  return w;
}

Integer point_count_from_weil(const WeilPolynomial& w, unsigned k) {
  if (k == 0) throw InconsistentCounts("k must be >= 1");
  const Integer sk = w.g == 0 ? Integer(0) : w.power_sums(k).back();
  return arith::ipow(w.q, k) + 1 - sk;
}

WeilPolynomial weil_polynomial_of(const curves::ReducedCurve& curve, std::uint64_t budget) {
  const unsigned g = curve.model().genus();
  const auto pc = curves::count_points_up_to(curve, g, budget);
  return weil_polynomial(pc.counts, pc.q, g);
}

}  // namespace jumpscan::zeta
