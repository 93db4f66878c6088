#include "jumpscan/characters.hpp"

#include <cmath>

namespace jumpscan::characters {

namespace {

arith::IntPoly reduce_mod(const arith::IntPoly& a, const arith::IntPoly& modulus) {
  return a.divmod_monic(modulus).second;
}

}  // namespace

std::vector<std::vector<Integer>> action_matrix(const EndomorphismFactor& factor) {
  const arith::IntPoly& mod = factor.min_poly;
  const unsigned d = factor.degree();
  const arith::IntPoly image = reduce_mod(factor.action, mod);
  if (factor.kind == ActionKind::Automorphism) {
    // min_poly(image) must vanish in Z[x]/(min_poly).
    arith::IntPoly acc;
    for (long i = mod.degree(); i >= 0; --i) acc = reduce_mod(acc * image + arith::IntPoly(std::vector<Integer>{mod[i]}), mod);
    if (!acc.is_zero()) throw ArithError("not an automorphism: action does not preserve the minimal polynomial");
  }
  const unsigned offset = factor.basis == Basis::Shifted ? 1 : 0;
  // Basis vector j is x^(j + offset), reduced.
  std::vector<arith::IntPoly> basis;
  for (unsigned j = 0; j < d; ++j) basis.push_back(reduce_mod(arith::IntPoly::monomial(1, j + offset), mod));

  // Express a reduced polynomial in the chosen basis. For the shifted basis,
  // 1 = -(x + ... + x^{d}) only holds when min_poly is 1 + x + ... + x^d,
  // so solve generally: coordinates come from the power-basis expansion.
  std::vector<std::vector<Integer>> to_basis(d, std::vector<Integer>(d, 0));
  for (unsigned j = 0; j < d; ++j)
    for (unsigned i = 0; i < d; ++i) to_basis[i][j] = basis[j][i];
  const Integer det_b = arith::determinant(to_basis);
  if (abs(det_b) != 1) throw ArithError("chosen basis is not a Z-basis of Z[x]/(min_poly)");

  std::vector<std::vector<Integer>> images(d, std::vector<Integer>(d, 0));  // power-basis columns
  for (unsigned j = 0; j < d; ++j) {
    arith::IntPoly img;
    if (factor.kind == ActionKind::Multiplication) {
      img = reduce_mod(image * basis[j], mod);
    } else {
      arith::IntPoly pw{1};
      for (unsigned e = 0; e < j + offset; ++e) pw = reduce_mod(pw * image, mod);
      img = pw;
    }
    for (unsigned i = 0; i < d; ++i) images[i][j] = img[i];
  }

  // Solve to_basis * X = images by Cramer's rule (det_b = +-1, so exact).
  std::vector<std::vector<Integer>> out(d, std::vector<Integer>(d, 0));
  for (unsigned col = 0; col < d; ++col) {
    for (unsigned row = 0; row < d; ++row) {
      auto m = to_basis;
      for (unsigned i = 0; i < d; ++i) m[i][row] = images[i][col];
      out[row][col] = arith::determinant(std::move(m)) * det_b;
    }
  }
  return out;
}

int action_determinant(const EndomorphismFactor& factor) {
  const Integer det = arith::determinant(action_matrix(factor));
  if (det == 1) return 1;
  if (det == -1) return -1;
  throw ArithError("not an automorphism: determinant " + det.get_str() + " is not a unit");
}

int action_determinant(const EndomorphismData& endo) {
  int sign = 1;
  for (const auto& f : endo.factors()) sign *= action_determinant(f);
  return sign;
}

int jump_character(const EndomorphismData& endo, const Integer& p) {
  if (endo.trivial_character()) return 1;
  return arith::kronecker_symbol(endo.disc_label(), p);
}

DensityReport density_report(const std::vector<picard::PicardReport>& reports, const EndomorphismData& endo) {
  DensityReport d;
  d.total_good_primes = reports.size();
  for (const auto& r : reports) {
    const int chi = jump_character(endo, Integer(static_cast<unsigned long>(r.p)));
    if (r.jumped) ++d.jumped_count;
    if (chi == -1) {
      ++d.character_minus_count;
      if (r.baseline % 2 == 0 && !r.jumped) d.character_mismatches.push_back(r.p);
    } else if (r.jumped) {
      ++d.jumps_at_plus_primes;
    }
  }
  if (reports.empty()) {
    d.insufficient_data = true;
    d.empirical_density = 0;
    d.note = "insufficient data";
  } else {
    d.empirical_density = arith::Rational(static_cast<unsigned long>(d.jumped_count),
                                          static_cast<unsigned long>(d.total_good_primes));
    d.empirical_density.canonicalize();
  }
  if (endo.trivial_character()) {
    if (d.note.empty()) d.note = "no lower bound from character";
  } else {
    d.predicted_density = arith::Rational(1, 2);
  }
  return d;
}

double usp_fourth_moment(unsigned g) { return g == 1 ? 2.0 : 3.0; }

MomentReport moment_report(const std::vector<double>& traces, unsigned genus, unsigned buckets) {
  MomentReport m;
  m.genus = genus;
  m.samples = traces.size();
  m.reference_fourth = usp_fourth_moment(genus);
  m.bucket_lo = -2.0 * genus;
  m.bucket_hi = 2.0 * genus;
  m.histogram.assign(buckets, 0);
  if (traces.empty()) return m;
  std::size_t zeros = 0;
  for (double t : traces) {
    m.mean += t;
    m.second_moment += t * t;
    m.fourth_moment += t * t * t * t;
    if (t == 0.0) ++zeros;
    if (buckets > 0) {
      double pos = (t - m.bucket_lo) / (m.bucket_hi - m.bucket_lo) * buckets;
      auto b = static_cast<long>(std::floor(pos));
      b = std::clamp<long>(b, 0, static_cast<long>(buckets) - 1);
      ++m.histogram[b];
    }
  }
  const double n = static_cast<double>(traces.size());
  m.mean /= n;
  m.second_moment /= n;
  m.fourth_moment /= n;
  m.zero_trace_fraction = static_cast<double>(zeros) / n;
  m.non_generic = std::abs(m.fourth_moment - m.reference_fourth) > kFourthMomentTolerance ||
                  m.zero_trace_fraction > kZeroTraceThreshold;
  return m;
}

MomentReport sato_tate_stats(const curves::CurveModel& model, std::uint64_t bound, unsigned buckets,
                             std::uint64_t budget) {
  if (model.genus() < 1) throw ArithError("sato_tate_stats requires genus >= 1");
  std::vector<double> traces;
  for (std::uint64_t p : picard::primes_in_range(3, bound)) {
    auto red = curves::reduce_curve(model, Integer(static_cast<unsigned long>(p)));
    const auto* curve = std::get_if<curves::ReducedCurve>(&red);
    if (!curve) continue;
    const Integer f1 = curves::frobenius_trace(*curve, budget);
    traces.push_back(f1.get_d() / std::sqrt(static_cast<double>(p)));
  }
  return moment_report(traces, model.genus(), buckets);
}

}  // namespace jumpscan::characters
