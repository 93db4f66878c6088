// Picard numbers of (C x C) over finite fields from the Frobenius action on H^2.
//
// The H^2 polynomial P_2(T) = (1 - qT)^2 prod_{i,j} (1 - alpha_i alpha_j T) is
// built exactly from power sums of the alpha_i (a composed product). Picard
// numbers come from the multiplicities of cyclotomic factors of
// M(T) = prod (T - lambda/q), which are exact multiplicities of q * zeta_n as
// eigenvalues.

#pragma once

#include "jumpscan/curves.hpp"
#include "jumpscan/endomorphism.hpp"
#include "jumpscan/zeta.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jumpscan::picard {

using arith::Integer;

struct H2Poly {
  Integer q;
  unsigned degree = 2;          // 4g^2 + 2
  std::vector<Integer> coeffs;  // reversed characteristic polynomial, b_0 = 1
};

/// n -> multiplicity of Phi_n in M(T); only nonzero entries.
using CycloMultiplicities = std::map<unsigned long, unsigned>;

H2Poly h2_char_poly(const zeta::WeilPolynomial& w);

/// M(T) = sum_i b_i q^{-i} T^{D-i}, whose roots are lambda / q.
arith::RatPoly normalized_h2_poly(const H2Poly& h);

CycloMultiplicities cyclo_multiplicities(const H2Poly& h);

/// Sum of multiplicities over n | m; m = 0 gives the geometric Picard number.
unsigned picard_number(const CycloMultiplicities& mult, unsigned m);
unsigned picard_number(const H2Poly& h, unsigned m);

/// picard_number(h, m) is even for m = 0..12.
bool verify_parity(const H2Poly& h);
bool verify_parity(const CycloMultiplicities& mult);

struct TraceCheck {
  bool lefschetz = false;  // N_1^2 = 1 - 2F + (2q + F^2) - 2qF + q^2
  bool h2_trace = false;   // 2q + F^2 = -b_1(P_2)
  Integer n1, f1, h2_trace_formula, h2_trace_poly;
  std::string diff;
  bool ok() const { return lefschetz && h2_trace; }
};

TraceCheck verify_trace_identity(const Integer& n1, const zeta::WeilPolynomial& w);
TraceCheck verify_trace_identity(const curves::ReducedCurve& curve, const zeta::WeilPolynomial& w,
                                 std::uint64_t budget = curves::kDefaultBudget);

struct PicardReport {
  std::uint64_t p = 0;
  Integer q;
  std::vector<Integer> counts;  // N_1 .. N_g
  zeta::WeilPolynomial weil;
  unsigned picard_fq = 0;
  unsigned picard_geom = 0;
  CycloMultiplicities cyclo;
  unsigned baseline = 0;
  bool jumped = false;
  Integer f1;
};

/// Builds the full report for one good reduction.
PicardReport picard_report(const std::vector<Integer>& counts, const Integer& q, unsigned g, unsigned baseline);

/// One row of a scan: a report, or the reason the prime was skipped.
struct ScanEntry {
  std::uint64_t p = 0;
  std::optional<PicardReport> report;
  std::string skipped;  // nonempty iff !report
};

/// Point-count provider for (reduced curve, k); lets callers interpose a cache.
using CountFn = std::function<Integer(const curves::ReducedCurve&, unsigned)>;

struct ScanOptions {
  std::uint64_t budget = curves::kDefaultBudget;
  unsigned jobs = 1;
  CountFn counter;  // defaults to enumeration
};

/// Odd primes in [lo, hi], ascending.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

/// Results are ordered by p regardless of worker scheduling.
std::vector<ScanEntry> jump_scan(const curves::CurveModel& model, const characters::EndomorphismData& endo,
                                 const std::vector<std::uint64_t>& primes, const ScanOptions& opts = {});

}  // namespace jumpscan::picard
