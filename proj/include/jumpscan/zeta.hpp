// Weil polynomials: reconstruction from point counts and validation.

#pragma once

#include "jumpscan/arith.hpp"
#include "jumpscan/curves.hpp"

#include <string>
#include <vector>

namespace jumpscan::zeta {

using arith::Integer;

class InconsistentCounts : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// f(C, T) = prod_{i=1}^{2g} (1 - alpha_i T) = a_0 + a_1 T + ... + a_{2g} T^{2g}.
struct WeilPolynomial {
  Integer q;
  unsigned g = 0;
  std::vector<Integer> coeffs;  // a_0 .. a_{2g}, a_0 = 1

  arith::IntPoly as_poly() const { return arith::IntPoly(coeffs); }
  /// s_k = sum alpha_i^k for k = 1..count.
  std::vector<Integer> power_sums(std::size_t count) const;
  friend bool operator==(const WeilPolynomial&, const WeilPolynomial&) = default;
};

struct ValidationReport {
  bool functional_equation = false;
  bool reciprocal_pairing = false;
  bool root_circle = false;
  double max_root_deviation = 0.0;
  std::vector<std::string> failures;

  bool exact_ok() const { return functional_equation && reciprocal_pairing; }
  bool ok() const { return failures.empty(); }
};

inline constexpr double kRootCircleTolerance = 1e-9;

/// Exactly g counts N_1..N_g over F_q, F_{q^2}, ... Throws InconsistentCounts
/// if a count is outside the Hasse-Weil interval or the result fails
/// validation.
WeilPolynomial weil_polynomial(const std::vector<Integer>& counts, const Integer& q, unsigned g);

/// N_k = q^k + 1 - s_k from the integer power-sum recurrence.
Integer point_count_from_weil(const WeilPolynomial& w, unsigned k);

/// (a) a_{2g-i} = q^{g-i} a_i; (b) q^g T^{2g} f(1/(qT)) == f(T) coefficientwise;
/// (c) |alpha| = sqrt(q) numerically, on the squarefree part.
ValidationReport validate_weil(const WeilPolynomial& w);

/// Counts N_1..N_g by enumeration, then weil_polynomial.
WeilPolynomial weil_polynomial_of(const curves::ReducedCurve& curve,
                                  std::uint64_t budget = curves::kDefaultBudget);

}  // namespace jumpscan::zeta
