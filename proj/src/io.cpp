#include "jumpscan/io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace jumpscan::io {

json integer_to_json(const arith::Integer& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

arith::Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return arith::Integer(j.get<std::uint64_t>());
    return arith::Integer(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    arith::Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw FormatError("not an integer: " + j.get<std::string>());
    return v;
  }
  throw FormatError("expected an integer, got " + j.dump());
}

json rational_to_json(const arith::Rational& v) { return v.get_str(); }

namespace {

arith::IntPoly poly_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array of integers");
  std::vector<arith::Integer> c;
  for (const auto& x : j) c.push_back(integer_from_json(x));
  return arith::IntPoly(std::move(c));
}

json poly_to_json(const std::vector<arith::Integer>& c) {
  json a = json::array();
  for (const auto& x : c) a.push_back(integer_to_json(x));
  return a;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

std::string fixed12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

}  // namespace

curves::CurveModel curve_from_json(const json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("f")) throw FormatError("curve needs \"m\" and \"f\"");
  const auto m = j.at("m").get<long>();
  if (m < 2) throw FormatError("curve exponent m must be >= 2");
  return curves::CurveModel(static_cast<unsigned>(m), poly_from_json(j.at("f"), "f"), j.value("label", std::string{}));
}

json curve_to_json(const curves::CurveModel& c) {
  return json{{"m", c.m()}, {"f", poly_to_json(c.f().coeffs())}, {"label", c.label()}};
}

curves::CurveModel load_curve(const std::filesystem::path& path) { return curve_from_json(read_json_file(path)); }

characters::EndomorphismData endo_from_json(const json& j) {
  if (!j.is_object() || !j.contains("disc_label")) throw FormatError("endomorphism data needs \"disc_label\"");
  std::vector<characters::EndomorphismFactor> factors;
  for (const auto& f : j.value("factors", json::array())) {
    characters::EndomorphismFactor ef;
    ef.min_poly = poly_from_json(f.at("min_poly"), "min_poly");
    ef.action = poly_from_json(f.value("action", json::array({0, 1})), "action");
    const std::string kind = f.value("kind", std::string("automorphism"));
    if (kind == "automorphism")
      ef.kind = characters::ActionKind::Automorphism;
    else if (kind == "multiplication")
      ef.kind = characters::ActionKind::Multiplication;
    else
      throw FormatError("unknown action kind " + kind);
    const std::string basis = f.value("basis", std::string("power"));
    if (basis == "power")
      ef.basis = characters::Basis::Power;
    else if (basis == "shifted")
      ef.basis = characters::Basis::Shifted;
    else
      throw FormatError("unknown basis " + basis);
    factors.push_back(std::move(ef));
  }
  return characters::EndomorphismData(std::move(factors), integer_from_json(j.at("disc_label")));
}

characters::EndomorphismData load_endo(const std::filesystem::path& path) { return endo_from_json(read_json_file(path)); }

json weil_to_json(const zeta::WeilPolynomial& w) {
  return json{{"q", integer_to_json(w.q)}, {"g", w.g}, {"coeffs", poly_to_json(w.coeffs)}};
}

zeta::WeilPolynomial weil_from_json(const json& j) {
  zeta::WeilPolynomial w;
  w.q = integer_from_json(j.at("q"));
  w.g = j.at("g").get<unsigned>();
  for (const auto& c : j.at("coeffs")) w.coeffs.push_back(integer_from_json(c));
  return w;
}

json scan_record(const curves::CurveModel& curve, const picard::PicardReport& r, int character) {
  json cyclo = json::object();
  for (const auto& [n, k] : r.cyclo) cyclo[std::to_string(n)] = k;
  return json{{"curve", curve.label()},
              {"curve_hash", curve.hash()},
              {"p", r.p},
              {"q", integer_to_json(r.q)},
              {"counts", poly_to_json(r.counts)},
              {"weil", weil_to_json(r.weil)},
              {"f1", integer_to_json(r.f1)},
              {"picard_fq", r.picard_fq},
              {"picard_geom", r.picard_geom},
              {"cyclo", cyclo},
              {"baseline", r.baseline},
              {"jumped", r.jumped},
              {"character", character}};
}

std::string scan_csv_header() { return "curve,p,q,f1,picard_fq,picard_geom,baseline,jumped,character"; }

std::string scan_csv_row(const curves::CurveModel& curve, const picard::PicardReport& r, int character) {
  std::ostringstream os;
  os << curve.label() << ',' << r.p << ',' << r.q << ',' << r.f1 << ',' << r.picard_fq << ',' << r.picard_geom << ','
     << r.baseline << ',' << (r.jumped ? "true" : "false") << ',' << character;
  return os.str();
}

json density_to_json(const characters::DensityReport& d) {
  json j{{"total_good_primes", d.total_good_primes},
         {"jumped_count", d.jumped_count},
         {"character_minus_count", d.character_minus_count},
         {"jumps_at_plus_primes", d.jumps_at_plus_primes},
         {"empirical_density", d.insufficient_data ? json("0/0") : rational_to_json(d.empirical_density)},
         {"predicted_density", d.predicted_density ? rational_to_json(*d.predicted_density) : json(nullptr)},
         {"character_mismatches", d.character_mismatches},
         {"insufficient_data", d.insufficient_data}};
  if (!d.note.empty()) j["note"] = d.note;
  return j;
}

std::string moments_to_json_text(const characters::MomentReport& m) {
  std::ostringstream os;
  os << "{\"genus\":" << m.genus << ",\"samples\":" << m.samples << ",\"mean\":" << fixed12(m.mean)
     << ",\"second_moment\":" << fixed12(m.second_moment) << ",\"fourth_moment\":" << fixed12(m.fourth_moment)
     << ",\"zero_trace_fraction\":" << fixed12(m.zero_trace_fraction)
     << ",\"reference_mean\":" << fixed12(m.reference_mean) << ",\"reference_second\":" << fixed12(m.reference_second)
     << ",\"reference_fourth\":" << fixed12(m.reference_fourth)
     << ",\"non_generic\":" << (m.non_generic ? "true" : "false") << ",\"histogram\":[";
  for (std::size_t i = 0; i < m.histogram.size(); ++i) os << (i ? "," : "") << m.histogram[i];
  os << "]}";
  return os.str();
}

std::string histogram_csv(const characters::MomentReport& m) {
  std::ostringstream os;
  os << "bucket_lo,bucket_hi,count\n";
  const double width = m.histogram.empty() ? 0 : (m.bucket_hi - m.bucket_lo) / static_cast<double>(m.histogram.size());
  for (std::size_t i = 0; i < m.histogram.size(); ++i)
    os << fixed12(m.bucket_lo + width * i) << ',' << fixed12(m.bucket_lo + width * (i + 1)) << ',' << m.histogram[i]
       << '\n';
  return os.str();
}

json hw_status_to_json(const decomp::HWStatus& s) {
  json j{{"m", s.m}, {"status", decomp::to_string(s.kind)}, {"count", integer_to_json(s.count)},
         {"bound_integral", s.bound_integral}};
  if (s.bound_integral) {
    j["upper"] = integer_to_json(s.upper);
    j["lower"] = integer_to_json(s.lower);
  }
  return j;
}

json splitting_to_json(const decomp::SplittingData& s) {
  return json{{"e", s.e},
              {"f", integer_to_json(s.f)},
              {"g", integer_to_json(s.g)},
              {"modulus", integer_to_json(s.modulus)},
              {"splits_completely", s.splits_completely}};
}

json witnesses_to_json(const decomp::WitnessReport& w) {
  json minus_one = json::array();
  for (const auto& r : w.rows)
    if (r.minus_one_mod_4g) minus_one.push_back(r.p);
  return json{{"genus", w.genus},
              {"bound", w.bound},
              {"minus_one_mod_4g", minus_one},
              {"counts",
               {{"minus_one_mod_4g", w.minus_one_count},
                {"supersingular_p3mod4", w.supersingular_count},
                {"ordinary_p1mod4", w.ordinary_count},
                {"minus_one_and_ordinary", w.both_minus_one_and_ordinary}}}};
}

json ulmer_bound_to_json(const mwrank::UlmerBound& b) {
  json es = json::array();
  for (const auto& e : b.terms_e) es.push_back(integer_to_json(e));
  return json{{"d", integer_to_json(b.d)},
              {"sum", rational_to_json(b.sum)},
              {"closed_form", rational_to_json(b.closed_form)},
              {"bound_holds", b.bound_holds},
              {"divisors", es}};
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoull(text);
      return {v, v};
    }
    return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw FormatError("bad range \"" + text + "\"; expected a..b");
  }
}

}  // namespace jumpscan::io
