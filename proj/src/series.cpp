#include "degen/series.hpp"

#include <algorithm>
#include <sstream>

#include "degen/errors.hpp"

namespace degen {

TruncSeries::TruncSeries(const Rational& constant) {
  if (sgn(constant) != 0) coeffs_.push_back(constant);
}

TruncSeries::TruncSeries(std::vector<Rational> coeffs, int order)
    : coeffs_(std::move(coeffs)), order_(order) {
  if (order_ < 0) throw Error(ErrorCode::invalid_argument, "negative truncation order");
  trim();
}

void TruncSeries::trim() {
  if (order_ != kInfinity && coeffs_.size() > static_cast<size_t>(order_) + 1) {
    coeffs_.resize(static_cast<size_t>(order_) + 1);
  }
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

TruncSeries TruncSeries::monomial(const Rational& c, int exponent, int order) {
  if (exponent < 0) throw Error(ErrorCode::invalid_argument, "negative exponent in power series");
  std::vector<Rational> v;
  if (order == kInfinity || exponent <= order) {
    v.assign(static_cast<size_t>(exponent) + 1, Rational(0));
    v.back() = c;
  }
  return TruncSeries(std::move(v), order);
}

TruncSeries TruncSeries::from(const LaurentPoly& p, int order) {
  if (p.valuation() < 0) {
    throw Error(ErrorCode::negative_valuation, "cannot expand " + to_string(p) + " in K[[t]]");
  }
  std::vector<Rational> v;
  for (const auto& [e, c] : p.terms()) {
    if (order != kInfinity && e > order) break;
    if (v.size() <= static_cast<size_t>(e)) v.resize(static_cast<size_t>(e) + 1);
    v[static_cast<size_t>(e)] = c;
  }
  return TruncSeries(std::move(v), order);
}

TruncSeries TruncSeries::from(const RationalFunction& f, int order) {
  if (order == kInfinity) {
    if (f.den() == LaurentPoly(1)) return from(f.num(), order);
    throw Error(ErrorCode::invalid_argument, "expanding a rational function needs a finite order");
  }
  if (f.valuation() < 0) {
    throw Error(ErrorCode::negative_valuation, "cannot expand " + to_string(f) + " in K[[t]]");
  }
  return from(f.num(), order) * series_invert(from(f.den(), order));
}

Rational TruncSeries::coeff(int k) const {
  if (k < 0) return 0;
  if (k > order_) {
    throw Error(ErrorCode::insufficient_order,
                "coefficient t^" + std::to_string(k) + " beyond order " + std::to_string(order_));
  }
  return static_cast<size_t>(k) < coeffs_.size() ? coeffs_[static_cast<size_t>(k)] : Rational(0);
}

int TruncSeries::valuation() const {
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return static_cast<int>(i);
  }
  return kInfinity;
}

TruncSeries TruncSeries::truncated(int order) const {
  return TruncSeries(coeffs_, std::min(order, order_));
}

TruncSeries TruncSeries::shifted_up(int k) const {
  std::vector<Rational> v(static_cast<size_t>(k), Rational(0));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return TruncSeries(std::move(v), order_ == kInfinity ? kInfinity : order_ + k);
}

TruncSeries TruncSeries::shifted_down(int k) const {
  if (k == 0) return *this;
  if (valuation() < k) {
    throw Error(ErrorCode::invalid_argument, "series not divisible by t^" + std::to_string(k));
  }
  if (order_ != kInfinity && order_ < k) {
    throw Error(ErrorCode::insufficient_order, "division by t^" + std::to_string(k) +
                                                   " exhausts order " + std::to_string(order_));
  }
  std::vector<Rational> v;
  if (coeffs_.size() > static_cast<size_t>(k)) v.assign(coeffs_.begin() + k, coeffs_.end());
  return TruncSeries(std::move(v), order_ == kInfinity ? kInfinity : order_ - k);
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs) {
  order_ = std::min(order_, rhs.order_);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs) { return *this += -rhs; }

TruncSeries& TruncSeries::operator*=(const TruncSeries& rhs) {
  const int order = std::min(order_, rhs.order_);
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    order_ = order;
    return *this;
  }
  size_t len = coeffs_.size() + rhs.coeffs_.size() - 1;
  if (order != kInfinity) len = std::min(len, static_cast<size_t>(order) + 1);
  std::vector<Rational> out(len, Rational(0));
  for (size_t i = 0; i < coeffs_.size() && i < len; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (size_t j = 0; j < rhs.coeffs_.size() && i + j < len; ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  order_ = order;
  trim();
  return *this;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
  const int order = std::min(a.order_, b.order_);
  const size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  for (size_t i = 0; i < n; ++i) {
    if (order != kInfinity && i > static_cast<size_t>(order)) break;
    const Rational ca = i < a.coeffs_.size() ? a.coeffs_[i] : Rational(0);
    const Rational cb = i < b.coeffs_.size() ? b.coeffs_[i] : Rational(0);
    if (ca != cb) return false;
  }
  return true;
}

TruncSeries series_invert(const TruncSeries& u) {
  if (!u.is_unit()) {
    throw Error(ErrorCode::not_a_unit, "series " + to_string(u) + " has zero constant term");
  }
  const auto& a = u.coeffs();
  if (u.is_exact()) {
    if (a.size() == 1) return TruncSeries(Rational(1) / a[0]);
    throw Error(ErrorCode::invalid_argument, "inverting a non-constant series needs a finite order");
  }
  const int order = u.order();
  std::vector<Rational> b(static_cast<size_t>(order) + 1, Rational(0));
  const Rational a0_inv = Rational(1) / a[0];
  b[0] = a0_inv;
  for (int k = 1; k <= order; ++k) {
    Rational acc = 0;
    for (int i = 1; i <= k && static_cast<size_t>(i) < a.size(); ++i) {
      acc += a[static_cast<size_t>(i)] * b[static_cast<size_t>(k - i)];
    }
    b[static_cast<size_t>(k)] = -acc * a0_inv;
  }
  return TruncSeries(std::move(b), order);
}

namespace {

// Lower bound for the valuation that is certain given the known prefix.
int certain_valuation(const TruncSeries& f) {
  const int v = f.valuation();
  if (v != kInfinity || f.is_exact()) return v;
  return f.order() + 1;
}

int add_orders(int a, int b) {
  if (a == kInfinity || b == kInfinity) return kInfinity;
  return a + b;
}

}  // namespace

TruncSeries mul_sharp(const TruncSeries& a, const TruncSeries& b) {
  const int order = std::min(add_orders(a.order(), certain_valuation(b)),
                             add_orders(b.order(), certain_valuation(a)));
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  if (x.empty() || y.empty()) return TruncSeries({}, order);
  size_t len = x.size() + y.size() - 1;
  if (order != kInfinity) len = std::min(len, static_cast<size_t>(order) + 1);
  std::vector<Rational> out(len, Rational(0));
  for (size_t i = 0; i < x.size() && i < len; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (size_t j = 0; j < y.size() && i + j < len; ++j) out[i + j] += x[i] * y[j];
  }
  return TruncSeries(std::move(out), order);
}

std::string to_string(const TruncSeries& f) {
  std::map<int, Rational> terms;
  for (size_t i = 0; i < f.coeffs().size(); ++i) terms[static_cast<int>(i)] = f.coeffs()[i];
  std::string s = to_string(LaurentPoly(std::move(terms)));
  if (!f.is_exact()) s += " + O(t^" + std::to_string(f.order() + 1) + ")";
  return s;
}

}  // namespace degen
