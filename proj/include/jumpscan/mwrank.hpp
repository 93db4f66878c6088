// Mordell-Weil rank bookkeeping over function fields k(t).

#pragma once

#include "jumpscan/arith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jumpscan::mwrank {

using arith::Integer;
using arith::Rational;

struct Fiber {
  std::string label;
  unsigned components = 1;  // f_v >= 1
};

/// rk MW = rk NS - 2 - sum (f_v - 1). Throws ArithError if the result would
/// be negative or some f_v is 0.
long shioda_tate_mw(long rk_ns, const std::vector<Fiber>& fibers);

/// rk Hom^{mu_d} - c1 + c2, with all three supplied by the caller.
long ulmer_simplified_rank(long hom_rank_mu, long c1, long c2);

struct UlmerBound {
  Integer d;                   // p^n + 1
  Rational sum;                // sum_{e | d, e > 2} phi(e) / o_e(q)
  Rational closed_form;        // (p^n - 1) / (2n)
  bool bound_holds = false;    // sum >= closed_form
  std::vector<Integer> terms_e;
};

/// Throws ArithError("invalid q") if gcd(q, e) != 1 for some e | d, e > 2.
UlmerBound ulmer_lower_bound(const Integer& p, unsigned n, const Integer& q);

struct UlmerExact {
  std::optional<Integer> rank;      // set when the hypothesis holds
  std::optional<UlmerBound> bound;  // attached when it does not
};

/// If q = 1 mod d: p^n - 1 for odd p, p^n for p = 2. In characteristic 0
/// (char_zero = true) the rank is 0 for every d.
UlmerExact ulmer_exact_rank(const Integer& p, unsigned n, const Integer& q, bool char_zero = false);

}  // namespace jumpscan::mwrank
