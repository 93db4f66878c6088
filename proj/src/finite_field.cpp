#include "jumpscan/finite_field.hpp"

#include <limits>

namespace jumpscan::arith {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

}  // namespace

PrimeField::PrimeField(const Integer& p) : p_(p) {
  if (p_ == 2) throw ArithError("characteristic 2 is not supported");
  if (!is_prime(p_)) throw ArithError("PrimeField: " + p_.get_str() + " is not prime");
  if (p_ > std::numeric_limits<std::uint32_t>::max())
    throw ArithError("PrimeField: characteristic too large for word arithmetic");
  word_ = p_.get_ui();
}

std::uint64_t PrimeField::reduce(const Integer& a) const {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), word_);
  return r.get_ui();
}

namespace fp {

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  // Fermat: a^(p-2)
  u64 r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

FpPoly mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}

FpPoly sub(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0;
    u64 y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  trim(r);
  return r;
}

FpPoly mod(const FpPoly& a, const FpPoly& m, std::uint64_t p) {
  FpPoly r = a;
  trim(r);
  if (m.empty()) throw ArithError("reduction modulo zero polynomial");
  const std::size_t dm = m.size() - 1;
  const u64 lc_inv = inv(m.back(), p);
  while (r.size() > dm) {
    const std::size_t shift = r.size() - 1 - dm;
    const u64 c = mulmod(r.back(), lc_inv, p);
    for (std::size_t j = 0; j <= dm; ++j) r[shift + j] = (r[shift + j] + p - mulmod(c, m[j], p)) % p;
    trim(r);
  }
  return r;
}

FpPoly gcd(FpPoly a, FpPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FpPoly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const u64 li = inv(a.back(), p);
    for (auto& c : a) c = mulmod(c, li, p);
  }
  return a;
}

FpPoly powmod(const FpPoly& base, const Integer& e, const FpPoly& m, std::uint64_t p) {
  FpPoly result{1};
  result = mod(result, m, p);
  FpPoly b = mod(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mod(mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mod(mul(result, b, p), m, p);
  }
  return result;
}

}  // namespace fp

bool is_irreducible(const FpPoly& f_in, std::uint64_t p) {
  FpPoly f = f_in;
  fp::trim(f);
  if (f.size() < 2) return false;
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  if (k == 1) return true;
  const FpPoly x{0, 1};
  const Integer P = p;
  // f | T^(p^k) - T
  if (!fp::sub(fp::powmod(x, ipow(P, k), f, p), fp::mod(x, f, p), p).empty()) return false;
  for (const auto& [r, e] : factorize(k)) {
    const FpPoly h = fp::sub(fp::powmod(x, ipow(P, k / r.get_ui()), f, p), fp::mod(x, f, p), p);
    if (fp::gcd(f, h, p).size() != 1) return false;
  }
  return true;
}

FpPoly find_irreducible(std::uint64_t p, unsigned k) {
  if (k == 0) throw ArithError("find_irreducible: degree must be >= 1");
  // Enumerate non-leading coefficient vectors in increasing sum c_i p^i.
  FpPoly f(k + 1, 0);
  f[k] = 1;
  while (true) {
    if (is_irreducible(f, p)) return f;
    std::size_t i = 0;
    while (i < k && ++f[i] == p) f[i++] = 0;
    if (i == k) throw ArithError("find_irreducible: exhausted candidates");
  }
}

// ---------------------------------------------------------------------------

ExtensionField::ExtensionField(const PrimeField& base, FpPoly modulus)
    : base_(base), modulus_(std::move(modulus)) {
  fp::trim(modulus_);
  if (modulus_.size() < 2 || modulus_.back() != 1) throw ArithError("ExtensionField: modulus must be monic of degree >= 1");
  for (auto c : modulus_)
    if (c >= base_.word()) throw ArithError("ExtensionField: modulus coefficients must be reduced");
  if (!is_irreducible(modulus_, base_.word())) throw ArithError("ExtensionField: modulus is reducible");
  k_ = static_cast<unsigned>(modulus_.size() - 1);
  size_ = ipow(base_.p(), k_);
}

ExtensionField::ExtensionField(const PrimeField& base, unsigned k)
    : ExtensionField(base, find_irreducible(base.word(), k)) {}

ExtensionField::Element ExtensionField::one() const {
  Element e(k_, 0);
  e[0] = 1;
  return e;
}

ExtensionField::Element ExtensionField::from_base(std::uint64_t c) const {
  Element e(k_, 0);
  e[0] = c % base_.word();
  return e;
}

ExtensionField::Element ExtensionField::add(const Element& a, const Element& b) const {
  Element r(k_);
  const u64 p = base_.word();
  for (unsigned i = 0; i < k_; ++i) r[i] = (a[i] + b[i]) % p;
  return r;
}

ExtensionField::Element ExtensionField::sub(const Element& a, const Element& b) const {
  Element r(k_);
  const u64 p = base_.word();
  for (unsigned i = 0; i < k_; ++i) r[i] = (a[i] + p - b[i]) % p;
  return r;
}

ExtensionField::Element ExtensionField::neg(const Element& a) const { return sub(zero(), a); }

ExtensionField::Element ExtensionField::mul(const Element& a, const Element& b) const {
  FpPoly r = fp::mod(fp::mul(a, b, base_.word()), modulus_, base_.word());
  r.resize(k_, 0);
  return r;
}

ExtensionField::Element ExtensionField::pow(const Element& a, const Integer& e) const {
  Element result = one();
  const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mul(result, result);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, a);
  }
  return result;
}

ExtensionField::Element ExtensionField::inv(const Element& a) const {
  if (is_zero(a)) throw ArithError("inverse of zero");
  return pow(a, size_ - 2);
}

bool ExtensionField::is_zero(const Element& a) const {
  for (auto c : a)
    if (c) return false;
  return true;
}

std::uint64_t ExtensionField::index_of(const Element& a) const {
  u64 idx = 0;
  for (unsigned i = k_; i-- > 0;) idx = idx * base_.word() + a[i];
  return idx;
}

ExtensionField::Element ExtensionField::element_at(std::uint64_t index) const {
  Element e(k_);
  for (unsigned i = 0; i < k_; ++i) {
    e[i] = index % base_.word();
    index /= base_.word();
  }
  return e;
}

// ---------------------------------------------------------------------------

LogTable::LogTable(const ExtensionField& field) {
  if (!field.size().fits_ulong_p() || field.size() > std::numeric_limits<std::uint32_t>::max())
    throw ArithError("LogTable: field too large");
  const u64 q = field.size().get_ui();
  const u64 order = q - 1;
  const auto factors = factorize(Integer(static_cast<unsigned long>(order)));

  auto is_primitive = [&](const ExtensionField::Element& g) {
    for (const auto& [r, e] : factors) {
      if (field.pow(g, Integer(static_cast<unsigned long>(order)) / r) == field.one()) return false;
    }
    return true;
  };

  u64 gen = 1;
  while (!is_primitive(field.element_at(gen))) ++gen;
  const ExtensionField::Element g = field.element_at(gen);

  // Multiplication by g as a k x k matrix over F_p: column j is g * T^j.
  const unsigned k = field.degree();
  const u64 p = field.base().word();
  std::vector<u64> mat(static_cast<std::size_t>(k) * k);
  for (unsigned j = 0; j < k; ++j) {
    ExtensionField::Element tj = field.zero();
    tj[j] = 1;
    const auto col = field.mul(g, tj);
    for (unsigned i = 0; i < k; ++i) mat[i * k + j] = col[i];
  }

  exp_.resize(order);
  log_.assign(q, 0);
  std::vector<u64> x(k, 0), y(k);
  x[0] = 1;
  for (u64 i = 0; i < order; ++i) {
    u64 idx = 0;
    for (unsigned c = k; c-- > 0;) idx = idx * p + x[c];
    exp_[i] = static_cast<std::uint32_t>(idx);
    log_[idx] = static_cast<std::uint32_t>(i);
    for (unsigned r = 0; r < k; ++r) {
      u64 acc = 0;
      for (unsigned c = 0; c < k; ++c) acc = (acc + mat[r * k + c] * x[c]) % p;
      y[r] = acc;
    }
    x.swap(y);
  }
}

std::uint64_t LogTable::mul(std::uint64_t a, std::uint64_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<u64>(log_[a]) + log_[b]) % exp_.size()];
}

}  // namespace jumpscan::arith
