#pragma once

#include <string>
#include <vector>

#include "degen/laurent.hpp"
#include "degen/rational.hpp"

namespace degen {

/// Power series in t known modulo t^{order+1}. order == kInfinity marks an
/// exact polynomial. Arithmetic keeps the smaller of the operand orders, and
/// equality compares the common prefix only.
class TruncSeries {
 public:
  TruncSeries() = default;
  TruncSeries(const Rational& constant);  // NOLINT(google-explicit-constructor)
  TruncSeries(int constant) : TruncSeries(Rational(constant)) {}  // NOLINT
  TruncSeries(std::vector<Rational> coeffs, int order);

  static TruncSeries monomial(const Rational& c, int exponent, int order = kInfinity);
  /// Expansion of a Laurent polynomial or rational function with valuation >= 0.
  static TruncSeries from(const LaurentPoly& p, int order);
  static TruncSeries from(const RationalFunction& f, int order);

  int order() const { return order_; }
  bool is_exact() const { return order_ == kInfinity; }
  /// Coefficient of t^k; zero past the stored prefix. Throws when k > order.
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// True when every known coefficient vanishes.
  bool is_zero() const { return valuation() == kInfinity; }
  /// Index of the first nonzero known coefficient, kInfinity if none.
  int valuation() const;
  bool is_unit() const { return !coeffs_.empty() && sgn(coeffs_[0]) != 0; }

  TruncSeries truncated(int order) const;
  /// t^k f
  TruncSeries shifted_up(int k) const;
  /// f / t^k; needs valuation >= k and loses k orders of precision.
  TruncSeries shifted_down(int k) const;

  TruncSeries operator-() const;
  TruncSeries& operator+=(const TruncSeries& rhs);
  TruncSeries& operator-=(const TruncSeries& rhs);
  TruncSeries& operator*=(const TruncSeries& rhs);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const TruncSeries& b) { return a *= b; }
  friend bool operator==(const TruncSeries& a, const TruncSeries& b);

 private:
  void trim();

  std::vector<Rational> coeffs_;
  int order_ = kInfinity;
};

inline bool is_zero(const TruncSeries& f) { return f.is_zero(); }
inline int valuation(const TruncSeries& f) { return f.valuation(); }
inline bool is_invertible(const TruncSeries& f) { return f.is_unit(); }

/// Inverse of a unit modulo t^{order+1}. Throws NotAUnit when the constant
/// term vanishes.
TruncSeries series_invert(const TruncSeries& u);
inline TruncSeries inverse(const TruncSeries& u) { return series_invert(u); }

/// Product with sharp precision: if a is known to order A with valuation
/// at least va (and b likewise), the product is known to order
/// min(A + vb, B + va). operator* keeps the coarser min(A, B).
TruncSeries mul_sharp(const TruncSeries& a, const TruncSeries& b);

std::string to_string(const TruncSeries& f);

}  // namespace degen
