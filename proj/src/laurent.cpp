#include "degen/laurent.hpp"

#include <sstream>

#include "degen/errors.hpp"

namespace degen {

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (!degen::is_zero(constant)) terms_.emplace(0, constant);
}

LaurentPoly::LaurentPoly(std::map<int, Rational> terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return degen::is_zero(kv.second); });
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
  LaurentPoly p;
  if (!degen::is_zero(c)) p.terms_.emplace(exponent, c);
  return p;
}

int LaurentPoly::valuation() const { return terms_.empty() ? kInfinity : terms_.begin()->first; }

int LaurentPoly::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

Rational LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::leading_coeff() const {
  return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentPoly LaurentPoly::normalize_unit_part() const {
  if (is_zero()) return {};
  return shifted(-valuation());
}

Rational LaurentPoly::eval_at_zero() const {
  if (valuation() < 0) {
    throw Error(ErrorCode::negative_valuation, "cannot evaluate " + to_string(*this) + " at t=0");
  }
  return coeff(0);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& kv : out.terms_) kv.second = -kv.second;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (degen::is_zero(it->second)) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  std::map<int, Rational> out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : rhs.terms_) out[e1 + e2] += c1 * c2;
  }
  *this = LaurentPoly(std::move(out));
  return *this;
}

std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) os << to_string(mag) << "*";
    os << "t";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

void poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quotient,
                 LaurentPoly& remainder) {
  if (b.is_zero()) throw Error(ErrorCode::singular, "polynomial division by zero");
  if (a.valuation() < 0 || b.valuation() < 0) {
    throw Error(ErrorCode::invalid_argument, "poly_divmod needs non-negative exponents");
  }
  quotient = LaurentPoly();
  remainder = a;
  const int db = b.degree();
  const Rational lb = b.leading_coeff();
  while (!remainder.is_zero() && remainder.degree() >= db) {
    LaurentPoly step = LaurentPoly::monomial(remainder.leading_coeff() / lb, remainder.degree() - db);
    quotient += step;
    remainder -= step * b;
  }
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
  while (!b.is_zero()) {
    LaurentPoly q, r;
    poly_divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * LaurentPoly(Rational(1) / a.leading_coeff());
}

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den)
    : num_(num), den_(den) {
  if (den_.is_zero()) throw Error(ErrorCode::singular, "rational function with zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  const int shift = num_.valuation() - den_.valuation();
  LaurentPoly n = num_.normalize_unit_part();
  LaurentPoly d = den_.normalize_unit_part();
  if (d.degree() > 0) {
    LaurentPoly g = poly_gcd(n, d);
    if (g.degree() > 0) {
      LaurentPoly r;
      LaurentPoly nq, dq;
      poly_divmod(n, g, nq, r);
      poly_divmod(d, g, dq, r);
      n = std::move(nq);
      d = std::move(dq);
    }
  }
  const Rational lead = d.leading_coeff();
  if (lead != 1) {
    const LaurentPoly scale(Rational(1) / lead);
    n *= scale;
    d *= scale;
  }
  num_ = n.shifted(shift);
  den_ = std::move(d);
}

Rational RationalFunction::eval_at_zero() const {
  if (valuation() < 0) {
    throw Error(ErrorCode::negative_valuation, "cannot evaluate " + to_string(*this) + " at t=0");
  }
  return num_.coeff(0) / den_.coeff(0);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::singular, "division by zero rational function");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  canonicalize();
  return *this;
}

RationalFunction inverse(const RationalFunction& f) { return RationalFunction(1) / f; }

std::string to_string(const RationalFunction& f) {
  if (f.den() == LaurentPoly(1)) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace degen
