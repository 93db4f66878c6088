#include "jumpscan/decomp.hpp"

#include "jumpscan/picard.hpp"

#include <set>

namespace jumpscan::decomp {

bool deuring_supersingular(const Integer& cm_disc, const Integer& p) {
  if (cm_disc >= 0) throw ArithError("deuring_supersingular: CM discriminant must be negative");
  if (p < 3 || !arith::is_prime(p)) throw ArithError("deuring_supersingular: p must be an odd prime");
  return arith::kronecker_symbol(cm_disc, p) != 1;
}

std::string to_string(Extremality e) {
  switch (e) {
    case Extremality::Maximal: return "maximal";
    case Extremality::Minimal: return "minimal";
    case Extremality::Neither: return "neither";
  }
  return "neither";
}

HWStatus hw_status(const zeta::WeilPolynomial& w, unsigned m) {
  if (m == 0) throw ArithError("hw_status: m must be >= 1");
  HWStatus st;
  st.m = m;
  st.count = zeta::point_count_from_weil(w, m);
  const Integer qm = arith::ipow(w.q, m);
  Integer root;
  if (w.g == 0) {
    st.bound_integral = true;
    st.upper = st.lower = qm + 1;
    st.kind = Extremality::Maximal;
    return st;
  }
  st.bound_integral = arith::exact_sqrt(qm, root);
  if (!st.bound_integral) return st;
  st.upper = qm + 1 + 2 * w.g * root;
  st.lower = qm + 1 - 2 * w.g * root;
  if (st.count == st.upper)
    st.kind = Extremality::Maximal;
  else if (st.count == st.lower)
    st.kind = Extremality::Minimal;
  return st;
}

std::optional<unsigned> period(const zeta::WeilPolynomial& w, unsigned cutoff) {
  if (cutoff == 0) throw ArithError("period: cutoff must be >= 1");
  for (unsigned m = 1; m <= cutoff; ++m)
    if (hw_status(w, m).kind != Extremality::Neither) return m;
  return std::nullopt;
}

Integer ihara_max_genus(const Integer& q) {
  Integer s;
  if (q < 1 || !arith::exact_sqrt(q, s)) throw ArithError("ihara_max_genus: q must be a perfect square");
  return s * (s - 1) / 2;
}

bool lauter_minimal_impossible(unsigned g, const Integer& q) {
  return (q + 1) * (q + 1) < Integer(4) * g * g * q;
}

GenusCap genus_cap(const Integer& q) {
  if (q < 2) throw ArithError("genus_cap: q must be a prime power");
  if (arith::factorize(q).size() != 1) throw ArithError("genus_cap: q must be a prime power");
  GenusCap gc;
  gc.cap = 0;
  for (unsigned m = 1; m <= 3; ++m) {
    const Integer qm = arith::ipow(q, m);
    Integer s;
    if (arith::exact_sqrt(qm, s)) {
      const Integer b = ihara_max_genus(qm);
      gc.per_degree[m] = b;
      if (b > gc.cap) gc.cap = b;
    } else {
      gc.per_degree[m] = std::nullopt;
    }
  }
  return gc;
}

SplittingData cyclotomic_splitting(const Integer& p, unsigned k) {
  if (k < 2) throw ArithError("cyclotomic_splitting: k must be >= 2");
  if (p == 2) throw ArithError("cyclotomic_splitting: p = 2 ramifies and is not supported");
  if (p < 3 || !arith::is_prime(p)) throw ArithError("cyclotomic_splitting: p must be an odd prime");
  SplittingData s;
  s.modulus = arith::ipow(Integer(2), k);
  s.e = 1;
  s.f = arith::multiplicative_order(p, s.modulus);
  s.g = arith::euler_phi(s.modulus) / s.f;
  s.splits_completely = (p % s.modulus) == 1;
  return s;
}

WitnessReport congruence_witnesses(unsigned g, std::uint64_t bound) {
  if (g < 2) throw ArithError("congruence_witnesses: genus must be >= 2");
  WitnessReport rep{g, bound, {}};
  const std::uint64_t mod = 4ull * g;
  for (std::uint64_t p : picard::primes_in_range(3, bound)) {
    WitnessRow row{p, p % mod == mod - 1, p % 4 == 3, p % 4 == 1};
    rep.minus_one_count += row.minus_one_mod_4g;
    rep.supersingular_count += row.supersingular_class;
    rep.ordinary_count += row.ordinary_class;
    rep.both_minus_one_and_ordinary += row.minus_one_mod_4g && row.ordinary_class;
    rep.rows.push_back(row);
  }
  return rep;
}

GateResult isogeny_isomorphism_gate(const std::vector<IsogenyFactor>& decomposition) {
  GateResult r;
  std::set<std::string> classes;
  for (const auto& f : decomposition) {
    if (f.exponent == 0) continue;
    classes.insert(f.isogeny_class);
    r.genus += f.exponent;
  }
  if (classes.empty()) {
    r.reason = "empty decomposition";
  } else if (classes.size() == 1) {
    r.admissible = true;
    r.reason = "single isogeny class; route to genus_cap";
  } else {
    r.reason = "factors from " + std::to_string(classes.size()) +
               " isogeny classes force a reducible principal polarization";
  }
  return r;
}

}  // namespace jumpscan::decomp
