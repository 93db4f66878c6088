// JSON input formats (curves, endomorphism data) and report serialization.

#pragma once

#include "jumpscan/characters.hpp"
#include "jumpscan/decomp.hpp"
#include "jumpscan/mwrank.hpp"
#include "jumpscan/picard.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace jumpscan::io {

using nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
json integer_to_json(const arith::Integer& v);
arith::Integer integer_from_json(const json& j);
json rational_to_json(const arith::Rational& v);  // "num/den" string

/// {"m": int, "f": [c0, c1, ...], "label": str}
curves::CurveModel curve_from_json(const json& j);
json curve_to_json(const curves::CurveModel& c);
curves::CurveModel load_curve(const std::filesystem::path& path);

/// {"factors": [{"min_poly": [...], "action": [...],
///               "kind": "automorphism" | "multiplication",
///               "basis": "power" | "shifted"}, ...],
///  "disc_label": int}
characters::EndomorphismData endo_from_json(const json& j);
characters::EndomorphismData load_endo(const std::filesystem::path& path);

/// {"q": int, "g": int, "coeffs": [int...]}
json weil_to_json(const zeta::WeilPolynomial& w);
zeta::WeilPolynomial weil_from_json(const json& j);

/// A ScanRecord row: curve label and hash, p, q, counts, Weil coefficients,
/// Picard numbers, jump flag and character value.
json scan_record(const curves::CurveModel& curve, const picard::PicardReport& r, int character);
/// CSV projection of scan records.
std::string scan_csv_header();
std::string scan_csv_row(const curves::CurveModel& curve, const picard::PicardReport& r, int character);

json density_to_json(const characters::DensityReport& d);
/// Fixed 12-digit formatting for every floating-point field.
std::string moments_to_json_text(const characters::MomentReport& m);
std::string histogram_csv(const characters::MomentReport& m);

json hw_status_to_json(const decomp::HWStatus& s);
json splitting_to_json(const decomp::SplittingData& s);
json witnesses_to_json(const decomp::WitnessReport& w);
json ulmer_bound_to_json(const mwrank::UlmerBound& b);

/// "a..b" -> (a, b).
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text);

}  // namespace jumpscan::io
