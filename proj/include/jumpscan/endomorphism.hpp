// Description of the geometric endomorphism ring End J(C) as a product of
// number fields, plus the discriminant fixing the jump character.

#pragma once

#include "jumpscan/arith.hpp"

#include <vector>

namespace jumpscan::characters {

using arith::Integer;
using arith::IntPoly;

enum class ActionKind {
  Multiplication,  ///< x -> action(x) * x on the lattice
  Automorphism,    ///< the ring map generator -> action(generator)
};

enum class Basis {
  Power,  ///< 1, x, ..., x^{d-1}
  Shifted ///< x, x^2, ..., x^d (the zeta_p, ..., zeta_p^{p-1} convention)
};

struct EndomorphismFactor {
  IntPoly min_poly;
  IntPoly action;
  ActionKind kind = ActionKind::Automorphism;
  Basis basis = Basis::Power;

  unsigned degree() const { return static_cast<unsigned>(min_poly.degree()); }
};

class EndomorphismData {
 public:
  /// disc_label must be 1, squarefree, or a fundamental discriminant.
  EndomorphismData(std::vector<EndomorphismFactor> factors, Integer disc_label);

  const std::vector<EndomorphismFactor>& factors() const { return factors_; }
  const Integer& disc_label() const { return disc_label_; }
  /// Total Z-rank: sum of the factor degrees.
  unsigned rank() const { return rank_; }
  bool trivial_character() const { return disc_label_ == 1; }
  /// Picard number of C x C in characteristic 0: 2 + rank.
  unsigned baseline() const { return 2 + rank_; }

 private:
  std::vector<EndomorphismFactor> factors_;
  Integer disc_label_;
  unsigned rank_ = 0;
};

bool is_squarefree(const Integer& n);
bool is_fundamental_discriminant(const Integer& d);

}  // namespace jumpscan::characters
