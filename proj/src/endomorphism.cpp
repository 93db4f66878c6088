#include "jumpscan/endomorphism.hpp"

namespace jumpscan::characters {

bool is_squarefree(const Integer& n) {
  if (n == 0) return false;
  for (const auto& [prime, e] : arith::factorize(abs(n)))
    if (e > 1) return false;
  return true;
}

bool is_fundamental_discriminant(const Integer& d) {
  if (d == 0 || d == 1) return false;
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), d.get_mpz_t(), 4);
  if (r == 1) return is_squarefree(d);
  if (r != 0) return false;
  const Integer m = d / 4;
  Integer r4;
  mpz_fdiv_r_ui(r4.get_mpz_t(), m.get_mpz_t(), 4);
  return (r4 == 2 || r4 == 3) && is_squarefree(m);
}

EndomorphismData::EndomorphismData(std::vector<EndomorphismFactor> factors, Integer disc_label)
    : factors_(std::move(factors)), disc_label_(std::move(disc_label)) {
  if (!(disc_label_ == 1 || is_squarefree(disc_label_) || is_fundamental_discriminant(disc_label_)))
    throw ArithError("disc_label must be 1, squarefree, or a fundamental discriminant");
  for (const auto& f : factors_) {
    if (f.min_poly.degree() < 1 || f.min_poly.leading() != 1)
      throw ArithError("endomorphism factor minimal polynomial must be monic of degree >= 1");
    rank_ += f.degree();
  }
}

}  // namespace jumpscan::characters
