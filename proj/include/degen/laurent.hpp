#pragma once

#include <map>
#include <string>

#include "degen/rational.hpp"

namespace degen {

/// Finite sum of c_k t^k with k in Z. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(int constant) : LaurentPoly(Rational(constant)) {}  // NOLINT
  explicit LaurentPoly(std::map<int, Rational> terms);

  static LaurentPoly monomial(const Rational& c, int exponent);
  static LaurentPoly t(int exponent = 1) { return monomial(1, exponent); }

  bool is_zero() const { return terms_.empty(); }
  /// Least exponent with a nonzero coefficient; kInfinity for zero.
  int valuation() const;
  /// Greatest exponent; only meaningful for nonzero values.
  int degree() const;
  Rational coeff(int exponent) const;
  Rational leading_coeff() const;
  const std::map<int, Rational>& terms() const { return terms_; }

  /// t^k * f
  LaurentPoly shifted(int k) const;
  /// t^{-v(f)} f; zero maps to zero.
  LaurentPoly normalize_unit_part() const;
  /// Value at t = 0. Requires valuation >= 0.
  Rational eval_at_zero() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

 private:
  std::map<int, Rational> terms_;
};

inline bool is_zero(const LaurentPoly& f) { return f.is_zero(); }
inline int valuation(const LaurentPoly& f) { return f.valuation(); }
inline LaurentPoly normalize_unit_part(const LaurentPoly& f) { return f.normalize_unit_part(); }
std::string to_string(const LaurentPoly& f);

/// Polynomial division with remainder for Laurent polynomials supported in
/// non-negative degrees. Throws on a zero divisor.
void poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quotient,
                 LaurentPoly& remainder);
/// Monic gcd of two polynomials (non-negative support); gcd(0,0) = 0.
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);

/// Element of K(t). Canonical form: gcd(num, den) = 1, den has valuation 0 and
/// leading coefficient 1, so all powers of t live in the numerator.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(int c) : RationalFunction(Rational(c)) {}  // NOLINT
  RationalFunction(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT
  RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  int valuation() const { return num_.valuation(); }
  /// Value at t = 0. Requires valuation >= 0.
  Rational eval_at_zero() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }
inline bool is_invertible(const RationalFunction& f) { return !f.is_zero(); }
inline int valuation(const RationalFunction& f) { return f.valuation(); }
RationalFunction inverse(const RationalFunction& f);
std::string to_string(const RationalFunction& f);

}  // namespace degen
