#include "monopole/rational.hpp"

#include <cctype>
#include <string>

#include "monopole/error.hpp"

namespace monopole {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::not_finite_type: return "NotFiniteType";
    case Errc::malformed_matrix: return "MalformedMatrix";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::duplicate_node: return "DuplicateNode";
    case Errc::inexact_division: return "InexactDivision";
    case Errc::invariant_violation: return "InvariantViolation";
    case Errc::not_a_root: return "NotARoot";
    case Errc::coincident_roots: return "CoincidentRoots";
    case Errc::zero_y: return "ZeroY";
    case Errc::outside_chart: return "OutsideChart";
    case Errc::coincident_evaluation: return "CoincidentEvaluation";
    case Errc::left_chart: return "LeftChart";
    case Errc::support_violation: return "SupportViolation";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

Int parse_int(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) throw Error(Errc::parse_error, "not a rational: '" + std::string(whole) + "'");
  Int out;
  out.set_str(std::string(digits), 10);
  return (!s.empty() && s.front() == '-') ? Int(-out) : out;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(Errc::parse_error, "empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Int num = parse_int(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw Error(Errc::parse_error, "bad denominator in '" + std::string(text) + "'");
    Int den(std::string(den_text), 10);
    if (den == 0) throw Error(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
    Rat out(num, den);
    out.canonicalize();
    return out;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (!frac.empty() && !all_digits(frac)) throw Error(Errc::parse_error, "not a rational: '" + std::string(text) + "'");
    const bool negative = !int_part.empty() && int_part.front() == '-';
    std::string_view mag = int_part;
    if (!mag.empty() && (mag.front() == '-' || mag.front() == '+')) mag.remove_prefix(1);
    if (mag.empty() && frac.empty()) throw Error(Errc::parse_error, "not a rational: '" + std::string(text) + "'");
    if (!mag.empty() && !all_digits(mag)) throw Error(Errc::parse_error, "not a rational: '" + std::string(text) + "'");
    Int num(std::string(mag.empty() ? "0" : mag) + std::string(frac), 10);
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rat out(negative ? Int(-num) : num, den);
    out.canonicalize();
    return out;
  }
  return Rat(parse_int(text, text));
}

std::string to_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace monopole
