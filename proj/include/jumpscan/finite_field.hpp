// Prime fields and their extensions F_p[T]/(modulus).
//
// Field elements are dense coefficient vectors over F_p with word-sized
// coefficients; p must fit in 32 bits, which is always the case for any
// field small enough to enumerate.

#pragma once

#include "jumpscan/arith.hpp"

#include <cstdint>
#include <vector>

namespace jumpscan::arith {

class PrimeField {
 public:
  /// Rejects p = 2 and composite p.
  explicit PrimeField(const Integer& p);

  const Integer& p() const { return p_; }
  std::uint64_t word() const { return word_; }

  std::uint64_t reduce(const Integer& a) const;

 private:
  Integer p_;
  std::uint64_t word_;
};

/// Polynomial over F_p, constant term first, trimmed.
using FpPoly = std::vector<std::uint64_t>;

namespace fp {
void trim(FpPoly& a);
FpPoly mul(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly sub(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly mod(const FpPoly& a, const FpPoly& m, std::uint64_t p);
FpPoly gcd(FpPoly a, FpPoly b, std::uint64_t p);
FpPoly powmod(const FpPoly& base, const Integer& e, const FpPoly& m, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
}  // namespace fp

/// Rabin's irreducibility test.
bool is_irreducible(const FpPoly& f, std::uint64_t p);

/// Lexicographically first monic irreducible polynomial of degree k over F_p,
/// where candidates are ordered by sum c_i p^i over the non-leading
/// coefficients.
FpPoly find_irreducible(std::uint64_t p, unsigned k);

class ExtensionField {
 public:
  using Element = std::vector<std::uint64_t>;  // exactly k coefficients

  /// F_p[T]/(modulus); verifies that modulus is monic irreducible.
  ExtensionField(const PrimeField& base, FpPoly modulus);
  /// Uses find_irreducible(p, k).
  ExtensionField(const PrimeField& base, unsigned k);

  const PrimeField& base() const { return base_; }
  unsigned degree() const { return k_; }
  const FpPoly& modulus() const { return modulus_; }
  /// q = p^k.
  const Integer& size() const { return size_; }

  Element zero() const { return Element(k_, 0); }
  Element one() const;
  Element from_base(std::uint64_t c) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& a, const Integer& e) const;
  /// Throws ArithError on zero.
  Element inv(const Element& a) const;
  Element frobenius(const Element& a) const { return pow(a, base_.p()); }
  bool is_zero(const Element& a) const;

  /// Bijection with [0, q): index = sum c_i p^i.
  std::uint64_t index_of(const Element& a) const;
  Element element_at(std::uint64_t index) const;

 private:
  PrimeField base_;
  FpPoly modulus_;
  unsigned k_;
  Integer size_;
};

/// Discrete logarithm tables for a field small enough to enumerate. Elements
/// are addressed by ExtensionField::index_of.
class LogTable {
 public:
  explicit LogTable(const ExtensionField& field);

  std::uint64_t order() const { return exp_.size(); }  // q - 1
  /// log of a nonzero element index.
  std::uint32_t log(std::uint64_t index) const { return log_[index]; }
  std::uint32_t exp(std::uint64_t e) const { return exp_[e % exp_.size()]; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t generator() const { return exp_.size() > 1 ? exp_[1] : exp_[0]; }

 private:
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace jumpscan::arith
