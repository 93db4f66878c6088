// Decomposability obstructions for Jacobians isogenous to E^g: supersingular
// reduction, Hasse-Weil extremality, genus bounds and prime splitting.

#pragma once

#include "jumpscan/zeta.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jumpscan::decomp {

using arith::Integer;

/// Deuring: supersingular iff p is not split in Q(sqrt(cm_disc)), i.e.
/// kronecker(cm_disc, p) != +1. cm_disc must be negative.
bool deuring_supersingular(const Integer& cm_disc, const Integer& p);

enum class Extremality { Maximal, Minimal, Neither };

struct HWStatus {
  Extremality kind = Extremality::Neither;
  unsigned m = 1;
  Integer count;         // N_m
  Integer upper, lower;  // q^m + 1 +- 2g q^{m/2}; zero when q^{m/2} is irrational
  bool bound_integral = false;
};

std::string to_string(Extremality e);

/// For g = 0 the bound term vanishes and every m is Maximal.
HWStatus hw_status(const zeta::WeilPolynomial& w, unsigned m);

/// Smallest m <= cutoff at which the curve is maximal or minimal.
std::optional<unsigned> period(const zeta::WeilPolynomial& w, unsigned cutoff);

/// Ihara: a maximal curve over F_{s^2} has genus <= s(s-1)/2. Throws unless
/// q is a perfect square.
Integer ihara_max_genus(const Integer& q);

/// (q + 1)^2 < 4 g^2 q, i.e. the Hasse-Weil lower bound is negative.
bool lauter_minimal_impossible(unsigned g, const Integer& q);

struct GenusCap {
  Integer cap;
  std::map<unsigned, std::optional<Integer>> per_degree;  // m -> ihara bound, or none if q^m is not a square
};

/// Largest genus compatible with Hasse-Weil maximality over an extension of
/// degree m in {1, 2, 3}.
GenusCap genus_cap(const Integer& q);

struct SplittingData {
  unsigned e = 1;
  Integer f;
  Integer g;
  Integer modulus;  // 2^k
  bool splits_completely = false;
};

/// Splitting of an odd prime p in Q(zeta_{2^k}), k >= 2.
SplittingData cyclotomic_splitting(const Integer& p, unsigned k);

struct WitnessRow {
  std::uint64_t p;
  bool minus_one_mod_4g;          // p = -1 mod 4g
  bool supersingular_class;       // p = 3 mod 4
  bool ordinary_class;            // p = 1 mod 4
};

struct WitnessReport {
  unsigned genus;
  std::uint64_t bound;
  std::vector<WitnessRow> rows;
  std::size_t minus_one_count = 0, supersingular_count = 0, ordinary_count = 0;
  std::size_t both_minus_one_and_ordinary = 0;  // always 0; reported, not assumed
};

/// Odd primes p <= bound with the congruence predicates for y^2 = x^{2g+1} - 1
/// and E with CM by Z[i]. g must be >= 2.
WitnessReport congruence_witnesses(unsigned g, std::uint64_t bound);

struct IsogenyFactor {
  std::string isogeny_class;
  unsigned exponent = 1;
};

struct GateResult {
  bool admissible = false;
  unsigned genus = 0;
  std::string reason;
};

/// A Jacobian isomorphic to prod E_i^{n_i} must have all E_i in one isogeny
/// class, since its principal polarization is irreducible.
GateResult isogeny_isomorphism_gate(const std::vector<IsogenyFactor>& decomposition);

}  // namespace jumpscan::decomp
