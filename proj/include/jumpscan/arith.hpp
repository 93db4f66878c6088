// Exact integer and polynomial arithmetic shared by every module.
//
// Everything here is arbitrary precision (GMP) and free of floating point.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jumpscan {

/// Raised when an input violates an operation's precondition.
class ArithError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace arith {

using Integer = mpz_class;
using Rational = mpq_class;

// ---------------------------------------------------------------------------
// Elementary number theory
// ---------------------------------------------------------------------------

/// Deterministic for n < 3.3e24 (Miller-Rabin on the first 13 prime bases);
/// larger inputs fall back to GMP's BPSW-based test.
bool is_prime(const Integer& n);

/// Legendre symbol (a/p). Throws ArithError unless p is an odd prime.
int legendre_symbol(const Integer& a, const Integer& p);

/// Kronecker symbol (a/n), multiplicative in n. Throws on n == 0.
int kronecker_symbol(const Integer& a, const Integer& n);

/// Prime factorization by trial division, as (prime, exponent) pairs in
/// increasing order. n must be >= 1.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

std::vector<Integer> divisors(const Integer& n);

Integer euler_phi(const Integer& n);

/// Smallest t >= 1 with a^t = 1 mod n. Throws ArithError("not a unit")
/// when gcd(a, n) != 1.
Integer multiplicative_order(const Integer& a, const Integer& n);

Integer ipow(const Integer& base, unsigned long exp);

/// Exact square root if n is a perfect square.
bool exact_sqrt(const Integer& n, Integer& root);

// ---------------------------------------------------------------------------
// Polynomials (constant term first)
// ---------------------------------------------------------------------------

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly monomial(const Integer& c, std::size_t degree);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  /// Coefficient of T^i; zero beyond the degree.
  Integer operator[](std::size_t i) const;
  const Integer& leading() const;

  Integer eval(const Integer& x) const;
  IntPoly derivative() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  /// Division by a monic divisor; exact in Z[T].
  std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& divisor) const;

  std::string to_string(char var = 'T') const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  explicit RatPoly(const IntPoly& p);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational operator[](std::size_t i) const;
  const Rational& leading() const;

  RatPoly monic() const;
  RatPoly derivative() const;

  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend bool operator==(const RatPoly& a, const RatPoly& b) = default;

  std::pair<RatPoly, RatPoly> divmod(const RatPoly& divisor) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd over Q.
RatPoly gcd(RatPoly a, RatPoly b);

/// Product of the distinct monic irreducible factors of p (p / gcd(p, p')).
RatPoly squarefree_part(const RatPoly& p);

/// Resultant of two integer polynomials (Sylvester determinant, Bareiss).
Integer resultant(const IntPoly& a, const IntPoly& b);

/// disc(f) = (-1)^(n(n-1)/2) res(f, f') / lc(f).
Integer discriminant(const IntPoly& f);

/// Exact determinant of a square integer matrix (fraction-free Bareiss).
Integer determinant(std::vector<std::vector<Integer>> m);

/// The n-th cyclotomic polynomial, by dividing T^n - 1 by Phi_d for d | n, d < n.
IntPoly cyclotomic_poly(unsigned long n);

/// Power sums s_1..s_count of the inverse roots of a reversed polynomial
/// 1 + a_1 T + ... (i.e. the alpha with prod (1 - alpha T)).
std::vector<Integer> inverse_root_power_sums(const std::vector<Integer>& reversed_coeffs,
                                             std::size_t count);

/// Inverse of the above: coefficients 1, a_1, ..., a_count of prod(1 - alpha T)
/// from power sums via Newton's identities. Throws ArithError if some step is not
/// an exact integer division.
std::vector<Integer> reversed_poly_from_power_sums(const std::vector<Integer>& power_sums);

}  // namespace arith
}  // namespace jumpscan
