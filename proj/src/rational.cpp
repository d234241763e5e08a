#include "degen/rational.hpp"

#include <cctype>

#include "degen/errors.hpp"

namespace degen {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::parse: return "ParseError";
    case ErrorCode::io: return "IoError";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::not_a_unit: return "NotAUnit";
    case ErrorCode::inconsistent: return "Inconsistent";
    case ErrorCode::singular: return "Singular";
    case ErrorCode::degree_mixing: return "DegreeMixing";
    case ErrorCode::negative_valuation: return "NegativeValuation";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::not_jacobi: return "NotJacobi";
    case ErrorCode::not_associative: return "NotAssociative";
    case ErrorCode::no_unit: return "NoUnit";
    case ErrorCode::not_generated: return "NotGenerated";
    case ErrorCode::cap_exceeded: return "CapExceeded";
    case ErrorCode::insufficient_order: return "InsufficientOrder";
    case ErrorCode::wrong_leading_term: return "WrongLeadingTerm";
    case ErrorCode::trivial: return "Trivial";
    case ErrorCode::not_rank2_invertible: return "NotRank2Invertible";
    case ErrorCode::not_a_complex: return "NotAComplex";
    case ErrorCode::cycle_found: return "CycleFound";
    case ErrorCode::bounds_insufficient: return "BoundsInsufficient";
    case ErrorCode::witness_rejected: return "WitnessRejected";
  }
  return "Unknown";
}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::parse, "malformed rational \"" + std::string(text) + "\"");
  }
  Integer p(std::string(num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) {
    throw Error(ErrorCode::parse, "zero denominator in \"" + std::string(text) + "\"");
  }
  Rational r(negative ? Integer(-p) : p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational inverse(const Rational& q) {
  if (is_zero(q)) throw Error(ErrorCode::singular, "division by zero");
  return Rational(1) / q;
}

}  // namespace degen
