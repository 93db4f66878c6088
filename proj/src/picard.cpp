#include "jumpscan/picard.hpp"

#include <atomic>
#include <thread>

namespace jumpscan::picard {

H2Poly h2_char_poly(const zeta::WeilPolynomial& w) {
  const unsigned pairs = 4 * w.g * w.g;
  std::vector<Integer> prod{1};
  if (pairs > 0) {
    // sum_{i,j} (alpha_i alpha_j)^k = s_k^2
    std::vector<Integer> s = w.power_sums(pairs);
    for (auto& v : s) v *= v;
    prod = arith::reversed_poly_from_power_sums(s);
  }
  const arith::IntPoly one_minus_qt{arith::IntPoly(std::vector<Integer>{1, -w.q})};
  const arith::IntPoly full = arith::IntPoly(prod) * one_minus_qt * one_minus_qt;
  H2Poly h{w.q, pairs + 2, full.coeffs()};
  h.coeffs.resize(h.degree + 1, 0);
  return h;
}

arith::RatPoly normalized_h2_poly(const H2Poly& h) {
  std::vector<arith::Rational> c(h.degree + 1);
  for (unsigned i = 0; i <= h.degree; ++i) c[h.degree - i] = arith::Rational(h.coeffs[i], arith::ipow(h.q, i));
  return arith::RatPoly(std::move(c));
}

namespace {

std::vector<unsigned long> phi_table(unsigned long limit) {
  std::vector<unsigned long> phi(limit + 1);
  for (unsigned long i = 0; i <= limit; ++i) phi[i] = i;
  for (unsigned long i = 2; i <= limit; ++i)
    if (phi[i] == i)
      for (unsigned long j = i; j <= limit; j += i) phi[j] -= phi[j] / i;
  return phi;
}

// q^phi(n) Phi_n(T / q): monic, with roots q * zeta_n.
arith::IntPoly scaled_cyclotomic(unsigned long n, const Integer& q) {
  const arith::IntPoly phi = arith::cyclotomic_poly(n);
  const long d = phi.degree();
  std::vector<Integer> c(d + 1);
  for (long i = 0; i <= d; ++i) c[i] = phi[i] * arith::ipow(q, static_cast<unsigned long>(d - i));
  return arith::IntPoly(std::move(c));
}

}  // namespace

CycloMultiplicities cyclo_multiplicities(const H2Poly& h) {
  // Q(T) = T^D P_2(1/T) = prod (T - lambda). Phi_n divides M(T) exactly when
  // the scaled cyclotomic divides Q(T), so the division stays in Z[T].
  std::vector<Integer> rev(h.coeffs.rbegin(), h.coeffs.rend());
  arith::IntPoly rest(std::move(rev));
  const unsigned long D = h.degree;
  const unsigned long limit = 2 * D * D + 6;
  const auto phi = phi_table(limit);

  CycloMultiplicities out;
  for (unsigned long n = 1; n <= limit && rest.degree() > 0; ++n) {
    if (phi[n] > static_cast<unsigned long>(rest.degree())) continue;
    const arith::IntPoly div = scaled_cyclotomic(n, h.q);
    unsigned mult = 0;
    while (rest.degree() >= div.degree()) {
      auto [quo, rem] = rest.divmod_monic(div);
      if (!rem.is_zero()) break;
      rest = std::move(quo);
      ++mult;
    }
    if (mult) out[n] = mult;
  }
  return out;
}

unsigned picard_number(const CycloMultiplicities& mult, unsigned m) {
  unsigned total = 0;
  for (const auto& [n, k] : mult)
    if (m == 0 || m % n == 0) total += k * static_cast<unsigned>(arith::euler_phi(n).get_ui());
  return total;
}

unsigned picard_number(const H2Poly& h, unsigned m) { return picard_number(cyclo_multiplicities(h), m); }

bool verify_parity(const CycloMultiplicities& mult) {
  for (unsigned m = 0; m <= 12; ++m)
    if (picard_number(mult, m) % 2 != 0) return false;
  return true;
}

bool verify_parity(const H2Poly& h) { return verify_parity(cyclo_multiplicities(h)); }

TraceCheck verify_trace_identity(const Integer& n1, const zeta::WeilPolynomial& w) {
  TraceCheck tc;
  const Integer& q = w.q;
  tc.n1 = n1;
  tc.f1 = q + 1 - n1;
  const Integer& f = tc.f1;
  tc.h2_trace_formula = 2 * q + f * f;
  const H2Poly h = h2_char_poly(w);
  tc.h2_trace_poly = -h.coeffs[1];
  // Alternating sum of Frobenius traces on H^0..H^4 of C x C, with the odd
  // traces taken from the Weil polynomial and the H^2 trace from P_2.
  const Integer fw = w.coeffs.size() > 1 ? Integer(-w.coeffs[1]) : Integer(0);
  const Integer rhs = 1 - 2 * fw + tc.h2_trace_poly - 2 * q * fw + q * q;
  tc.lefschetz = n1 * n1 == rhs;
  tc.h2_trace = tc.h2_trace_poly == tc.h2_trace_formula;
  if (!tc.lefschetz) tc.diff += "N1^2 = " + Integer(n1 * n1).get_str() + " but alternating trace sum = " + rhs.get_str() + ". ";
  if (!tc.h2_trace)
    tc.diff += "2q + F1^2 = " + tc.h2_trace_formula.get_str() + " but -b_1(P_2) = " + tc.h2_trace_poly.get_str() + ".";
  return tc;
}

TraceCheck verify_trace_identity(const curves::ReducedCurve& curve, const zeta::WeilPolynomial& w,
                                 std::uint64_t budget) {
  return verify_trace_identity(curves::count_points(curve, 1, budget), w);
}

PicardReport picard_report(const std::vector<Integer>& counts, const Integer& q, unsigned g, unsigned baseline) {
  PicardReport r;
  r.p = 0;
  r.q = q;
  r.counts = counts;
  r.weil = zeta::weil_polynomial(counts, q, g);
  const H2Poly h = h2_char_poly(r.weil);
  r.cyclo = cyclo_multiplicities(h);
  r.picard_fq = picard_number(r.cyclo, 1);
  r.picard_geom = picard_number(r.cyclo, 0);
  r.baseline = baseline;
  r.jumped = r.picard_geom > baseline;
  r.f1 = g == 0 ? Integer(0) : Integer(-r.weil.coeffs[1]);
  return r;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 3) return out;
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t i = 2; i * i <= hi; ++i)
    if (!composite[i])
      for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  for (std::uint64_t n = std::max<std::uint64_t>(lo, 3); n <= hi; ++n)
    if (!composite[n]) out.push_back(n);
  return out;
}

std::vector<ScanEntry> jump_scan(const curves::CurveModel& model, const characters::EndomorphismData& endo,
                                 const std::vector<std::uint64_t>& primes, const ScanOptions& opts) {
  std::vector<ScanEntry> results(primes.size());
  const unsigned g = model.genus();
  const unsigned baseline = endo.baseline();
  CountFn counter = opts.counter;
  if (!counter) {
    const std::uint64_t budget = opts.budget;
    counter = [budget](const curves::ReducedCurve& c, unsigned k) { return curves::count_points(c, k, budget); };
  }

  auto work = [&](std::size_t i) {
    ScanEntry& e = results[i];
    e.p = primes[i];
    try {
      auto red = curves::reduce_curve(model, Integer(static_cast<unsigned long>(e.p)));
      if (auto* bad = std::get_if<curves::BadReduction>(&red)) {
        e.skipped = "bad reduction: " + bad->describe();
        return;
      }
      const auto& curve = std::get<curves::ReducedCurve>(red);
      std::vector<Integer> counts;
      for (unsigned k = 1; k <= g; ++k) counts.push_back(counter(curve, k));
      PicardReport rep = picard_report(counts, curve.field().p(), g, baseline);
      rep.p = e.p;
      e.report = std::move(rep);
    } catch (const std::exception& ex) {
      e.skipped = ex.what();
    }
  };

  const unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < primes.size(); ++i) work(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < primes.size(); i = next++) work(i);
    });
  pool.clear();
  return results;
}

}  // namespace jumpscan::picard
