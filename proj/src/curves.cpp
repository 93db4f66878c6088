#include "jumpscan/curves.hpp"

#include <numeric>
#include <sstream>
#include <iomanip>

namespace jumpscan::curves {

unsigned superelliptic_genus(unsigned m, unsigned d) {
  const unsigned num = (m - 1) * (d - 1) - std::gcd(m, d) + 1;
  return num / 2;
}

CurveModel::CurveModel(unsigned m, IntPoly f, std::string label)
    : m_(m), f_(std::move(f)), label_(std::move(label)) {
  if (m_ < 2) throw CurveError("superelliptic exponent must be >= 2");
  if (f_.degree() < 1) throw CurveError("f must have degree >= 1");
  disc_ = arith::discriminant(f_);
  if (disc_ == 0) throw CurveError("f is not squarefree (zero discriminant)");
  genus_ = superelliptic_genus(m_, static_cast<unsigned>(f_.degree()));
}

std::string CurveModel::hash() const {
  std::uint64_t h = 14695981039346656037ull;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  feed("m=" + std::to_string(m_) + ";f=");
  for (const auto& c : f_.coeffs()) feed(c.get_str() + ",");
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string BadReduction::describe() const {
  switch (reason) {
    case BadReductionReason::CharacteristicDividesExponent: return "characteristic divides m";
    case BadReductionReason::LeadingCoefficientVanishes: return "leading coefficient vanishes";
    case BadReductionReason::DiscriminantVanishes: return "discriminant vanishes";
  }
  return "bad reduction";
}

std::variant<ReducedCurve, BadReduction> reduce_curve(const CurveModel& model, const Integer& p) {
  if (p < 2 || !arith::is_prime(p)) throw ArithError("reduce_curve: p must be prime");
  const std::uint64_t pw = p.get_ui();
  if (model.m() % pw == 0) return BadReduction{pw, BadReductionReason::CharacteristicDividesExponent};
  arith::PrimeField field(p);  // rejects p = 2
  if (field.reduce(model.f().leading()) == 0) return BadReduction{pw, BadReductionReason::LeadingCoefficientVanishes};
  if (field.reduce(model.discriminant()) == 0) return BadReduction{pw, BadReductionReason::DiscriminantVanishes};
  std::vector<std::uint64_t> coeffs;
  for (const auto& c : model.f().coeffs()) coeffs.push_back(field.reduce(c));
  return ReducedCurve(model, std::move(field), std::move(coeffs));
}

Integer count_points(const ReducedCurve& curve, const arith::ExtensionField& field, std::uint64_t budget) {
  if (field.base().word() != curve.p()) throw CurveError("field characteristic does not match the curve");
  if (field.size() > budget) throw CurveError("enumeration too large: q^k = " + field.size().get_str());
  const std::uint64_t p = curve.p();
  const std::uint64_t q = field.size().get_ui();
  const arith::LogTable logs(field);
  const auto& f = curve.coeffs();
  const std::uint64_t m = curve.model().m();

  // For each nonzero value v: #{y : y^m = v} is gcd(m, q-1) when log v is
  // divisible by that gcd, else 0.
  const std::uint64_t d = std::gcd(m, q - 1);
  std::uint64_t affine = 0;
  for (std::uint64_t x = 0; x < q; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) {
      acc = logs.mul(acc, x);
      const std::uint64_t low = acc % p;
      acc = acc - low + (low + f[i]) % p;
    }
    if (acc == 0)
      affine += 1;
    else if (logs.log(acc) % d == 0)
      affine += d;
  }

  // Places over x = infinity: the delta-th roots of lc(f) in F_q, where
  // delta = gcd(m, deg f).
  const std::uint64_t delta = std::gcd(m, static_cast<std::uint64_t>(f.size() - 1));
  const std::uint64_t dinf = std::gcd(delta, q - 1);
  const std::uint64_t lc = f.back();
  const std::uint64_t at_infinity = (logs.log(lc) % dinf == 0) ? dinf : 0;

  return Integer(static_cast<unsigned long>(affine + at_infinity));
}

Integer count_points(const ReducedCurve& curve, unsigned k, std::uint64_t budget) {
  if (k == 0) throw CurveError("extension degree must be >= 1");
  const Integer q = arith::ipow(curve.field().p(), k);
  if (q > budget) throw CurveError("enumeration too large: q^k = " + q.get_str());
  return count_points(curve, arith::ExtensionField(curve.field(), k), budget);
}

PointCounts count_points_up_to(const ReducedCurve& curve, unsigned r, std::uint64_t budget) {
  PointCounts out{curve.field().p(), {}};
  for (unsigned k = 1; k <= r; ++k) out.counts.push_back(count_points(curve, k, budget));
  return out;
}

Integer frobenius_trace(const ReducedCurve& curve, std::uint64_t budget) {
  return curve.field().p() + 1 - count_points(curve, 1, budget);
}

}  // namespace jumpscan::curves
