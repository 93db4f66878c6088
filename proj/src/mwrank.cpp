#include "jumpscan/mwrank.hpp"

namespace jumpscan::mwrank {

long shioda_tate_mw(long rk_ns, const std::vector<Fiber>& fibers) {
  long correction = 0;
  for (const auto& f : fibers) {
    if (f.components < 1) throw ArithError("fiber " + f.label + " has no components");
    correction += static_cast<long>(f.components) - 1;
  }
  const long rank = rk_ns - 2 - correction;
  if (rank < 0) throw ArithError("inconsistent input: Neron-Severi rank too small for the fiber data");
  return rank;
}

long ulmer_simplified_rank(long hom_rank_mu, long c1, long c2) { return hom_rank_mu - c1 + c2; }

UlmerBound ulmer_lower_bound(const Integer& p, unsigned n, const Integer& q) {
  if (!arith::is_prime(p)) throw ArithError("ulmer_lower_bound: p must be prime");
  if (n < 1) throw ArithError("ulmer_lower_bound: n must be >= 1");
  UlmerBound b;
  const Integer pn = arith::ipow(p, n);
  b.d = pn + 1;
  b.sum = 0;
  Integer phi_total = 0;
  for (const Integer& e : arith::divisors(b.d)) {
    phi_total += arith::euler_phi(e);
    if (e <= 2) continue;
    Integer g;
    mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), e.get_mpz_t());
    if (g != 1) throw ArithError("invalid q: gcd(q, " + e.get_str() + ") != 1");
    Rational term(arith::euler_phi(e), arith::multiplicative_order(q, e));
    term.canonicalize();
    b.sum += term;
    b.terms_e.push_back(e);
  }
  if (phi_total != b.d) throw ArithError("divisor enumeration failed the sum phi(e) = d check");
  b.sum.canonicalize();
  b.closed_form = Rational(pn - 1, Integer(2 * n));
  b.closed_form.canonicalize();
  b.bound_holds = b.sum >= b.closed_form;
  return b;
}

UlmerExact ulmer_exact_rank(const Integer& p, unsigned n, const Integer& q, bool char_zero) {
  UlmerExact out;
  if (char_zero) {
    out.rank = 0;
    return out;
  }
  const Integer pn = arith::ipow(p, n);
  const Integer d = pn + 1;
  if (q % d == 1) {
    out.rank = (p == 2) ? pn : Integer(pn - 1);
  } else {
    out.bound = ulmer_lower_bound(p, n, q);
  }
  return out;
}

}  // namespace jumpscan::mwrank
