// Jump character, Galois-action determinants, jump density and Frobenius
// trace statistics.

#pragma once

#include "jumpscan/endomorphism.hpp"
#include "jumpscan/picard.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jumpscan::characters {

/// Matrix of the action on the chosen basis, column j = image of basis vector j.
std::vector<std::vector<Integer>> action_matrix(const EndomorphismFactor& factor);

/// Exact determinant of the action; throws ArithError("not an automorphism")
/// when the action does not preserve the ring or the determinant is not a unit.
int action_determinant(const EndomorphismFactor& factor);

/// Product of the factor determinants.
int action_determinant(const EndomorphismData& endo);

/// (disc_label / p); identically +1 when disc_label = 1.
int jump_character(const EndomorphismData& endo, const Integer& p);

struct DensityReport {
  std::size_t total_good_primes = 0;
  std::size_t jumped_count = 0;
  std::size_t character_minus_count = 0;
  std::size_t jumps_at_plus_primes = 0;
  arith::Rational empirical_density;
  std::optional<arith::Rational> predicted_density;  // 1/2 iff the character is nontrivial
  std::vector<std::uint64_t> character_mismatches;   // character -1, baseline even, no jump
  bool insufficient_data = false;
  std::string note;
};

DensityReport density_report(const std::vector<picard::PicardReport>& reports, const EndomorphismData& endo);

struct MomentReport {
  unsigned genus = 0;
  std::size_t samples = 0;
  double mean = 0, second_moment = 0, fourth_moment = 0;
  double zero_trace_fraction = 0;
  double reference_mean = 0, reference_second = 1, reference_fourth = 0;
  bool non_generic = false;
  double bucket_lo = 0, bucket_hi = 0;
  std::vector<std::size_t> histogram;
};

/// Distance from the USp(2g) fourth moment, or fraction of vanishing traces,
/// beyond which a sample is flagged non-generic.
inline constexpr double kFourthMomentTolerance = 0.5;
inline constexpr double kZeroTraceThreshold = 0.25;

/// E[tr^4] under Haar measure on USp(2g): 2 for g = 1, 3 for g >= 2.
double usp_fourth_moment(unsigned g);

/// Normalized traces F_1 / sqrt(p) over good primes 3 <= p <= bound.
MomentReport sato_tate_stats(const curves::CurveModel& model, std::uint64_t bound, unsigned buckets = 20,
                             std::uint64_t budget = curves::kDefaultBudget);

/// Same statistics from precomputed normalized traces.
MomentReport moment_report(const std::vector<double>& traces, unsigned genus, unsigned buckets = 20);

}  // namespace jumpscan::characters
