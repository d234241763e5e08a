#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degen/errors.hpp"
#include "degen/laurent.hpp"
#include "degen/matrix.hpp"
#include "degen/rational.hpp"
#include "degen/series.hpp"
#include "degen/sparse.hpp"

namespace degen {

enum class AlgebraKind { lie, associative, graded_associative };

const char* kind_name(AlgebraKind kind) noexcept;
AlgebraKind parse_kind(std::string_view name);
inline bool is_associative_kind(AlgebraKind k) { return k != AlgebraKind::lie; }

/// "x", "y", "z" for dimension 3, otherwise "e0", "e1", ...
std::vector<std::string> default_basis_names(size_t dim);

inline Rational eval_at_zero(const Rational& q) { return q; }
inline Rational eval_at_zero(const LaurentPoly& f) { return f.eval_at_zero(); }
inline Rational eval_at_zero(const RationalFunction& f) { return f.eval_at_zero(); }
inline Rational eval_at_zero(const TruncSeries& f) { return f.coeff(0); }
inline int valuation(const Rational& q) { return is_zero(q) ? kInfinity : 0; }

/// Structure constants c_{ij}^k: e_i e_j = sum_k c_{ij}^k e_k. Storage is
/// dense. For the lie kind, set() writes both (i,j) and (j,i).
template <class R>
class StructureTensor {
 public:
  using value_type = R;

  StructureTensor() = default;
  StructureTensor(AlgebraKind kind, size_t dim, std::vector<int> degrees = {},
                  std::optional<size_t> unit = std::nullopt,
                  std::vector<std::string> basis = {})
      : kind_(kind),
        dim_(dim),
        degrees_(std::move(degrees)),
        unit_(unit),
        basis_(std::move(basis)),
        coeffs_(dim * dim * dim) {
    if (basis_.empty()) basis_ = default_basis_names(dim);
    if (basis_.size() != dim) throw Error(ErrorCode::dimension_mismatch, "basis name count differs from dim");
    if (kind_ == AlgebraKind::graded_associative && degrees_.size() != dim) {
      throw Error(ErrorCode::invalid_argument, "graded algebra needs one degree per basis element");
    }
    if (kind_ != AlgebraKind::graded_associative && !degrees_.empty() && degrees_.size() != dim) {
      throw Error(ErrorCode::dimension_mismatch, "degree vector length differs from dim");
    }
    if (unit_ && kind_ == AlgebraKind::lie) throw Error(ErrorCode::invalid_argument, "lie algebras have no unit");
    if (unit_ && *unit_ >= dim) throw Error(ErrorCode::invalid_argument, "unit index out of range");
  }

  /// Same shape (kind, dim, degrees, names) without a unit: the shape of a
  /// degree-2 cochain on this algebra.
  StructureTensor<R> cochain_shape() const {
    return StructureTensor<R>(kind_, dim_, degrees_, std::nullopt, basis_);
  }

  AlgebraKind kind() const { return kind_; }
  size_t dim() const { return dim_; }
  const std::vector<int>& degrees() const { return degrees_; }
  bool graded() const { return kind_ == AlgebraKind::graded_associative; }
  std::optional<size_t> unit() const { return unit_; }
  void set_unit(std::optional<size_t> u) { unit_ = u; }
  const std::vector<std::string>& basis() const { return basis_; }

  const R& operator()(size_t i, size_t j, size_t k) const { return coeffs_[(i * dim_ + j) * dim_ + k]; }

  /// Writes c_{ij}^k, mirroring for the lie kind. Enforces the lie and
  /// grading constraints.
  void set(size_t i, size_t j, size_t k, const R& value) {
    check_index(i, j, k);
    if (kind_ == AlgebraKind::lie) {
      if (i == j && !is_zero(value)) {
        throw Error(ErrorCode::invalid_argument, "lie bracket [e_i,e_i] must vanish");
      }
      at(j, i, k) = -value;
    }
    if (graded() && !is_zero(value) && degrees_[k] != degrees_[i] + degrees_[j]) {
      throw Error(ErrorCode::degree_mixing, "product " + basis_[i] + "*" + basis_[j] + " has a component in " +
                                                basis_[k] + " of the wrong degree");
    }
    at(i, j, k) = value;
  }
  void add_to(size_t i, size_t j, size_t k, const R& value) { set(i, j, k, (*this)(i, j, k) + value); }

  /// Checks antisymmetry, grading and the unit property.
  void validate() const {
    for (size_t i = 0; i < dim_; ++i)
      for (size_t j = 0; j < dim_; ++j)
        for (size_t k = 0; k < dim_; ++k) {
          const R& c = (*this)(i, j, k);
          if (kind_ == AlgebraKind::lie && !((*this)(j, i, k) == -c)) {
            throw Error(ErrorCode::invalid_argument, "bracket is not antisymmetric");
          }
          if (graded() && !is_zero(c) && degrees_[k] != degrees_[i] + degrees_[j]) {
            throw Error(ErrorCode::degree_mixing, "structure constant violates the grading");
          }
        }
    if (unit_) {
      const size_t u = *unit_;
      for (size_t i = 0; i < dim_; ++i)
        for (size_t k = 0; k < dim_; ++k) {
          const R expect = (i == k) ? R(1) : R(0);
          if (!((*this)(u, i, k) == expect) || !((*this)(i, u, k) == expect)) {
            throw Error(ErrorCode::no_unit, "basis element " + basis_[u] + " is not a two-sided unit");
          }
        }
    }
  }

  bool is_zero_tensor() const {
    for (const R& c : coeffs_)
      if (!is_zero(c)) return false;
    return true;
  }

  /// Bilinear extension: (sum a_i e_i)(sum b_j e_j).
  std::vector<R> multiply(const std::vector<R>& a, const std::vector<R>& b) const {
    std::vector<R> out(dim_);
    for (size_t i = 0; i < dim_; ++i) {
      if (is_zero(a[i])) continue;
      for (size_t j = 0; j < dim_; ++j) {
        if (is_zero(b[j])) continue;
        const R ab = a[i] * b[j];
        for (size_t k = 0; k < dim_; ++k) {
          const R& c = (*this)(i, j, k);
          if (!is_zero(c)) out[k] += ab * c;
        }
      }
    }
    return out;
  }

  template <class Fn>
  auto map(Fn fn) const -> StructureTensor<decltype(fn(std::declval<const R&>()))> {
    using S = decltype(fn(std::declval<const R&>()));
    StructureTensor<S> out(kind_, dim_, degrees_, unit_, basis_);
    for (size_t i = 0; i < dim_; ++i)
      for (size_t j = 0; j < dim_; ++j)
        for (size_t k = 0; k < dim_; ++k) out.set_unchecked(i, j, k, fn((*this)(i, j, k)));
    return out;
  }

  /// Raw write without mirroring; callers must validate() afterwards.
  void set_unchecked(size_t i, size_t j, size_t k, const R& value) { at(i, j, k) = value; }

  friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
    return a.kind_ == b.kind_ && a.dim_ == b.dim_ && a.degrees_ == b.degrees_ && a.unit_ == b.unit_ &&
           a.coeffs_ == b.coeffs_;
  }

 private:
  R& at(size_t i, size_t j, size_t k) { return coeffs_[(i * dim_ + j) * dim_ + k]; }
  void check_index(size_t i, size_t j, size_t k) const {
    if (i >= dim_ || j >= dim_ || k >= dim_) throw Error(ErrorCode::invalid_argument, "structure index out of range");
  }

  AlgebraKind kind_ = AlgebraKind::lie;
  size_t dim_ = 0;
  std::vector<int> degrees_;
  std::optional<size_t> unit_;
  std::vector<std::string> basis_;
  std::vector<R> coeffs_;
};

using Algebra = StructureTensor<Rational>;

template <class R>
struct Violation {
  size_t i, j, k;
  std::vector<R> residual;
};

template <class R>
struct IdentityReport {
  bool passed = true;
  std::vector<Violation<R>> violations;
};

/// Jacobi (lie) or associativity (associative kinds) on every basis triple.
template <class R>
IdentityReport<R> check_identities(const StructureTensor<R>& T) {
  IdentityReport<R> report;
  const size_t n = T.dim();
  auto e = [n](size_t i) {
    std::vector<R> v(n);
    v[i] = R(1);
    return v;
  };
  auto row = [&](size_t i, size_t j) {
    std::vector<R> v(n);
    for (size_t k = 0; k < n; ++k) v[k] = T(i, j, k);
    return v;
  };
  auto nonzero = [](const std::vector<R>& v) {
    for (const R& c : v)
      if (!is_zero(c)) return true;
    return false;
  };
  if (T.kind() == AlgebraKind::lie) {
    // the Jacobi sum is alternating, so distinct increasing triples suffice
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        for (size_t k = j + 1; k < n; ++k) {
          std::vector<R> r = T.multiply(e(i), row(j, k));
          const std::vector<R> b = T.multiply(e(j), row(k, i));
          const std::vector<R> c = T.multiply(e(k), row(i, j));
          for (size_t m = 0; m < n; ++m) r[m] += b[m] + c[m];
          if (nonzero(r)) report.violations.push_back({i, j, k, std::move(r)});
        }
  } else {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) {
          std::vector<R> r = T.multiply(row(i, j), e(k));
          const std::vector<R> b = T.multiply(e(i), row(j, k));
          for (size_t m = 0; m < n; ++m) r[m] -= b[m];
          if (nonzero(r)) report.violations.push_back({i, j, k, std::move(r)});
        }
  }
  report.passed = report.violations.empty();
  return report;
}

/// Throws NotJacobi / NotAssociative when identities fail.
template <class R>
void require_identities(const StructureTensor<R>& T) {
  const auto report = check_identities(T);
  if (report.passed) return;
  const auto& v = report.violations.front();
  const std::string where = "(" + T.basis()[v.i] + "," + T.basis()[v.j] + "," + T.basis()[v.k] + ")";
  if (T.kind() == AlgebraKind::lie) throw Error(ErrorCode::not_jacobi, "Jacobi identity fails at " + where);
  throw Error(ErrorCode::not_associative, "associativity fails at " + where);
}

/// Raises DegreeMixing unless g maps each degree block to itself.
template <class R>
void require_degree_preserving(const Matrix<R>& g, const std::vector<int>& degrees) {
  for (size_t i = 0; i < g.rows(); ++i)
    for (size_t j = 0; j < g.cols(); ++j)
      if (degrees[i] != degrees[j] && !is_zero(g(i, j))) {
        throw Error(ErrorCode::degree_mixing, "matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                  ") mixes degrees " + std::to_string(degrees[j]) + " and " +
                                                  std::to_string(degrees[i]));
      }
}

/// g.T = g o T o (g^-1 (x) g^-1), given both g and its inverse:
/// c'_{ij}^k = sum (g^-1)_{ai} (g^-1)_{bj} c_{ab}^c g_{kc}.
template <class R>
StructureTensor<R> act_with_inverse(const Matrix<R>& g, const Matrix<R>& ginv, const StructureTensor<R>& T) {
  const size_t n = T.dim();
  if (g.rows() != n || g.cols() != n || ginv.rows() != n || ginv.cols() != n) {
    throw Error(ErrorCode::dimension_mismatch, "action matrix size differs from algebra dimension");
  }
  if (T.graded()) {
    require_degree_preserving(g, T.degrees());
    require_degree_preserving(ginv, T.degrees());
  }
  // s1[i][b][c] = sum_a ginv(a,i) c_ab^c
  std::vector<R> s1(n * n * n), s2(n * n * n);
  for (size_t a = 0; a < n; ++a)
    for (size_t i = 0; i < n; ++i) {
      if (is_zero(ginv(a, i))) continue;
      for (size_t b = 0; b < n; ++b)
        for (size_t c = 0; c < n; ++c)
          if (!is_zero(T(a, b, c))) s1[(i * n + b) * n + c] += ginv(a, i) * T(a, b, c);
    }
  // s2[i][j][c] = sum_b ginv(b,j) s1[i][b][c]
  for (size_t i = 0; i < n; ++i)
    for (size_t b = 0; b < n; ++b)
      for (size_t j = 0; j < n; ++j) {
        if (is_zero(ginv(b, j))) continue;
        for (size_t c = 0; c < n; ++c) {
          const R& s = s1[(i * n + b) * n + c];
          if (!is_zero(s)) s2[(i * n + j) * n + c] += ginv(b, j) * s;
        }
      }
  StructureTensor<R> out(T.kind(), n, T.degrees(), T.unit(), T.basis());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        R acc;
        for (size_t c = 0; c < n; ++c) {
          const R& s = s2[(i * n + j) * n + c];
          if (!is_zero(s) && !is_zero(g(k, c))) acc += g(k, c) * s;
        }
        out.set_unchecked(i, j, k, acc);
      }
  // a unit index is only kept when g fixes it
  if (T.unit()) {
    const size_t u = *T.unit();
    bool fixed = true;
    for (size_t k = 0; k < n; ++k)
      if (!(g(k, u) == R(k == u ? 1 : 0))) fixed = false;
    if (!fixed) out.set_unit(std::nullopt);
  }
  return out;
}

/// Action over a field; throws Singular when det g = 0.
template <class F>
StructureTensor<F> act(const Matrix<F>& g, const StructureTensor<F>& T) {
  return act_with_inverse(g, inverse(g), T);
}

/// Evaluation at t = 0. Throws NegativeValuation naming every offending entry.
template <class R>
Algebra specialize(const StructureTensor<R>& T) {
  const size_t n = T.dim();
  std::string bad;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        if (valuation(T(i, j, k)) < 0) {
          if (!bad.empty()) bad += ", ";
          bad += "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
        }
  if (!bad.empty()) throw Error(ErrorCode::negative_valuation, "negative valuation at " + bad);
  return T.map([](const R& c) { return eval_at_zero(c); });
}

/// n x C(n,2) matrix whose columns are [e_i, e_j], i < j (lie), or the
/// n x n^2 matrix of all products e_i e_j (associative kinds).
template <class R>
Matrix<R> product_matrix(const StructureTensor<R>& T) {
  const size_t n = T.dim();
  const bool lie = T.kind() == AlgebraKind::lie;
  const size_t cols = lie ? n * (n - (n > 0 ? 1 : 0)) / 2 : n * n;
  Matrix<R> m(n, cols);
  size_t col = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = lie ? i + 1 : 0; j < n; ++j, ++col)
      for (size_t k = 0; k < n; ++k) m(k, col) = T(i, j, k);
  return m;
}

/// dim of the span of all products / brackets ("rank" of a Lie algebra).
template <class F>
size_t derived_rank(const StructureTensor<F>& T) {
  return rank(product_matrix(T));
}

/// Linear system for derivations D (unknowns D_{ab}, D e_b = sum_a D_{ab} e_a):
/// D(e_i e_j) = D(e_i) e_j + e_i D(e_j). With degree_preserving, unknowns
/// joining different degrees are fixed to 0.
size_t derivation_dim(const Algebra& T, bool degree_preserving = false);

}  // namespace degen
