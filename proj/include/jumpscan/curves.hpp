// Superelliptic curves y^m = f(x) over Q, their reductions, and exhaustive
// point counting over F_{p^k} on the smooth projective model.

#pragma once

#include "jumpscan/arith.hpp"
#include "jumpscan/finite_field.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace jumpscan::curves {

using arith::Integer;
using arith::IntPoly;

class CurveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default cap on q^k for enumeration.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

class CurveModel {
 public:
  /// Requires m >= 2, deg f >= 1 and disc(f) != 0.
  CurveModel(unsigned m, IntPoly f, std::string label = {});

  unsigned m() const { return m_; }
  const IntPoly& f() const { return f_; }
  const std::string& label() const { return label_; }
  unsigned genus() const { return genus_; }
  const Integer& discriminant() const { return disc_; }

  /// Stable 64-bit FNV-1a digest of (m, f), printed as 16 hex digits.
  std::string hash() const;

 private:
  unsigned m_;
  IntPoly f_;
  std::string label_;
  unsigned genus_;
  Integer disc_;
};

/// ((m-1)(d-1) - gcd(m, d) + 1) / 2 for squarefree f of degree d.
unsigned superelliptic_genus(unsigned m, unsigned d);

enum class BadReductionReason { CharacteristicDividesExponent, LeadingCoefficientVanishes, DiscriminantVanishes };

struct BadReduction {
  std::uint64_t p;
  BadReductionReason reason;
  std::string describe() const;
};

class ReducedCurve {
 public:
  const CurveModel& model() const { return model_; }
  const arith::PrimeField& field() const { return field_; }
  std::uint64_t p() const { return field_.word(); }
  /// Coefficients of f mod p, constant term first.
  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }

 private:
  friend std::variant<ReducedCurve, BadReduction> reduce_curve(const CurveModel&, const Integer&);
  ReducedCurve(CurveModel model, arith::PrimeField field, std::vector<std::uint64_t> coeffs)
      : model_(std::move(model)), field_(std::move(field)), coeffs_(std::move(coeffs)) {}

  CurveModel model_;
  arith::PrimeField field_;
  std::vector<std::uint64_t> coeffs_;
};

/// Good iff p does not divide m * lc(f) * disc(f). p must be >= 3; p = 2
/// reports CharacteristicDividesExponent when m is even and is rejected
/// otherwise.
std::variant<ReducedCurve, BadReduction> reduce_curve(const CurveModel& model, const Integer& p);

/// Points over F_{p^k} on the smooth projective model. Throws CurveError
/// ("enumeration too large") when p^k exceeds budget.
Integer count_points(const ReducedCurve& curve, unsigned k, std::uint64_t budget = kDefaultBudget);

/// Same, over an explicitly supplied field F_{p^k} (any irreducible modulus).
Integer count_points(const ReducedCurve& curve, const arith::ExtensionField& field,
                     std::uint64_t budget = kDefaultBudget);

struct PointCounts {
  Integer q;
  std::vector<Integer> counts;  // N_1 .. N_r
};

PointCounts count_points_up_to(const ReducedCurve& curve, unsigned r, std::uint64_t budget = kDefaultBudget);

/// q + 1 - N_1.
Integer frobenius_trace(const ReducedCurve& curve, std::uint64_t budget = kDefaultBudget);

}  // namespace jumpscan::curves
