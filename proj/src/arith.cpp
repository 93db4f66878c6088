#include "jumpscan/arith.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace jumpscan::arith {

namespace {

bool miller_rabin_round(const Integer& n, const Integer& d, unsigned s, unsigned long base) {
  Integer a = base;
  if (a % n == 0) return true;
  Integer x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  static constexpr unsigned long kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned long b : kBases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  static const Integer kDeterministicLimit("3317044064679887385961981");
  if (n >= kDeterministicLimit) return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
  Integer d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  for (unsigned long b : kBases)
    if (!miller_rabin_round(n, d, s, b)) return false;
  return true;
}

int legendre_symbol(const Integer& a, const Integer& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_prime(p))
    throw ArithError("legendre_symbol: modulus must be an odd prime");
  return mpz_legendre(Integer(a % p + p).get_mpz_t(), p.get_mpz_t());
}

int kronecker_symbol(const Integer& a, const Integer& n) {
  if (n == 0) throw ArithError("kronecker_symbol: n must be nonzero");
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n) {
  if (n < 1) throw ArithError("factorize: n must be positive");
  std::vector<std::pair<Integer, unsigned>> out;
  Integer m = n;
  auto strip = [&](const Integer& d) {
    unsigned e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  };
  strip(2);
  for (Integer d = 3; d * d <= m; d += 2) strip(d);
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out{1};
  for (const auto& [prime, e] : factorize(n)) {
    std::size_t existing = out.size();
    Integer pk = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk *= prime;
      for (std::size_t j = 0; j < existing; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer euler_phi(const Integer& n) {
  Integer phi = n;
  for (const auto& [prime, e] : factorize(n)) phi = phi / prime * (prime - 1);
  return phi;
}

Integer multiplicative_order(const Integer& a, const Integer& n) {
  if (n < 2) throw ArithError("multiplicative_order: modulus must be >= 2");
  Integer g;
  Integer ar = ((a % n) + n) % n;
  mpz_gcd(g.get_mpz_t(), ar.get_mpz_t(), n.get_mpz_t());
  if (g != 1) throw ArithError("multiplicative_order: not a unit");
  // The order divides phi(n); strip prime factors while a^(t/r) stays 1.
  Integer t = euler_phi(n);
  for (const auto& [prime, e] : factorize(t)) {
    for (unsigned i = 0; i < e; ++i) {
      Integer cand = t / prime;
      Integer x;
      mpz_powm(x.get_mpz_t(), ar.get_mpz_t(), cand.get_mpz_t(), n.get_mpz_t());
      if (x != 1) break;
      t = cand;
    }
  }
  return t;
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

bool exact_sqrt(const Integer& n, Integer& root) {
  if (n < 0) return false;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return true;
}

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1, 0);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& IntPoly::leading() const {
  if (coeffs_.empty()) throw ArithError("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Integer IntPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::derivative() const {
  std::vector<Integer> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return IntPoly(std::move(d));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
  return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(r));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(const IntPoly& divisor) const {
  if (divisor.is_zero() || divisor.leading() != 1) throw ArithError("divmod_monic: divisor must be monic");
  std::vector<Integer> rem = coeffs_;
  const long dd = divisor.degree();
  if (degree() < dd) return {IntPoly{}, *this};
  std::vector<Integer> quo(rem.size() - dd, 0);
  for (long i = static_cast<long>(rem.size()) - 1; i >= dd; --i) {
    const Integer c = rem[i];
    if (c == 0) continue;
    quo[i - dd] = c;
    for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= c * divisor.coeffs_[j];
  }
  rem.resize(dd);
  return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// RatPoly

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RatPoly::RatPoly(const IntPoly& p) {
  for (const auto& c : p.coeffs()) coeffs_.emplace_back(c);
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPoly::operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& RatPoly::leading() const {
  if (coeffs_.empty()) throw ArithError("leading coefficient of zero polynomial");
  return coeffs_.back();
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> r = coeffs_;
  const Rational lc = leading();
  for (auto& c : r) c /= lc;
  return RatPoly(std::move(r));
}

RatPoly RatPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return RatPoly(std::move(d));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RatPoly(std::move(r));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
  return RatPoly(std::move(r));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& divisor) const {
  if (divisor.is_zero()) throw ArithError("division by zero polynomial");
  const long dd = divisor.degree();
  if (degree() < dd) return {RatPoly{}, *this};
  std::vector<Rational> rem = coeffs_;
  std::vector<Rational> quo(rem.size() - dd, 0);
  const Rational lc = divisor.leading();
  for (long i = static_cast<long>(rem.size()) - 1; i >= dd; --i) {
    if (rem[i] == 0) continue;
    const Rational c = rem[i] / lc;
    quo[i - dd] = c;
    for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= c * divisor.coeffs_[j];
  }
  rem.resize(dd);
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return p.divmod(gcd(p, p.derivative())).first.monic();
}

// ---------------------------------------------------------------------------

Integer determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer resultant(const IntPoly& a, const IntPoly& b) {
  const long m = a.degree();
  const long n = b.degree();
  if (m < 0 || n < 0) return 0;
  if (m == 0 && n == 0) return 1;
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Integer>> syl(size, std::vector<Integer>(size, 0));
  for (long r = 0; r < n; ++r)
    for (long i = 0; i <= m; ++i) syl[r][r + i] = a[m - i];
  for (long r = 0; r < m; ++r)
    for (long i = 0; i <= n; ++i) syl[n + r][r + i] = b[n - i];
  return determinant(std::move(syl));
}

Integer discriminant(const IntPoly& f) {
  const long n = f.degree();
  if (n < 1) throw ArithError("discriminant of a constant");
  if (n == 1) return 1;
  Integer r = resultant(f, f.derivative());
  Integer d;
  mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
  return ((n * (n - 1) / 2) % 2 == 0) ? d : Integer(-d);
}

IntPoly cyclotomic_poly(unsigned long n) {
  if (n == 0) throw ArithError("cyclotomic_poly: n must be >= 1");
  static std::map<unsigned long, IntPoly> memo;
  static std::mutex memo_mutex;
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  IntPoly num = IntPoly::monomial(1, n) - IntPoly{1};
  for (const Integer& d : divisors(n)) {
    if (d == n) continue;
    num = num.divmod_monic(cyclotomic_poly(d.get_ui())).first;
  }
  std::lock_guard lock(memo_mutex);
  memo.emplace(n, num);
  return num;
}

std::vector<Integer> inverse_root_power_sums(const std::vector<Integer>& rc, std::size_t count) {
  // Newton: s_k = -k a_k - sum_{i=1}^{k-1} a_i s_{k-i}
  std::vector<Integer> s(count + 1, 0);
  auto a = [&](std::size_t i) { return i < rc.size() ? rc[i] : Integer(0); };
  for (std::size_t k = 1; k <= count; ++k) {
    Integer v = -Integer(static_cast<unsigned long>(k)) * a(k);
    for (std::size_t i = 1; i < k; ++i) v -= a(i) * s[k - i];
    s[k] = v;
  }
  s.erase(s.begin());
  return s;
}

std::vector<Integer> reversed_poly_from_power_sums(const std::vector<Integer>& s) {
  // k a_k = -sum_{i=1}^{k} a_{k-i} s_i
  std::vector<Integer> a(s.size() + 1, 0);
  a[0] = 1;
  for (std::size_t k = 1; k <= s.size(); ++k) {
    Integer v = 0;
    for (std::size_t i = 1; i <= k; ++i) v -= a[k - i] * s[i - 1];
    if (!mpz_divisible_ui_p(v.get_mpz_t(), k)) throw ArithError("power sums do not give an integral polynomial");
    mpz_divexact_ui(a[k].get_mpz_t(), v.get_mpz_t(), k);
  }
  return a;
}

}  // namespace jumpscan::arith
