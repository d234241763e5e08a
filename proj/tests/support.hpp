#pragma once

#include <random>
#include <vector>

#include "degen/algebra.hpp"
#include "degen/deformation.hpp"
#include "degen/koszul.hpp"
#include "degen/laurent.hpp"
#include "degen/lie3.hpp"
#include "degen/series.hpp"

namespace testing {

using degen::Algebra;
using degen::LaurentPoly;
using degen::Matrix;
using degen::Rational;
using degen::RationalFunction;
using degen::TruncSeries;

inline Rational random_rational(std::mt19937& rng, int range = 5, int max_den = 3) {
  std::uniform_int_distribution<int> num(-range, range), den(1, max_den);
  const int p = num(rng), q = den(rng);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline Rational random_nonzero(std::mt19937& rng, int range = 5, int max_den = 3) {
  Rational q;
  do q = random_rational(rng, range, max_den);
  while (sgn(q) == 0);
  return q;
}

inline LaurentPoly random_poly(std::mt19937& rng, int max_degree, int range = 3) {
  std::map<int, Rational> terms;
  for (int e = 0; e <= max_degree; ++e) terms[e] = random_rational(rng, range, 2);
  return LaurentPoly(std::move(terms));
}

/// Row-reduction rank over Q, written independently of the library.
inline size_t plain_rank(std::vector<std::vector<Rational>> rows) {
  size_t rank = 0;
  const size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < cols && rank < rows.size(); ++c) {
    size_t p = rank;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || sgn(rows[r][c]) == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Solves P x = v for invertible P by Gauss-Jordan.
inline std::vector<Rational> plain_solve(std::vector<std::vector<Rational>> P, std::vector<Rational> v) {
  const size_t n = P.size();
  for (size_t r = 0; r < n; ++r) P[r].push_back(v[r]);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (sgn(P[p][c]) == 0) ++p;
    std::swap(P[p], P[c]);
    const Rational piv = P[c][c];
    for (auto& e : P[c]) e /= piv;
    for (size_t r = 0; r < n; ++r) {
      if (r == c || sgn(P[r][c]) == 0) continue;
      const Rational f = P[r][c];
      for (size_t k = c; k <= n; ++k) P[r][k] -= f * P[c][k];
    }
  }
  std::vector<Rational> x(n);
  for (size_t r = 0; r < n; ++r) x[r] = P[r][n];
  return x;
}

inline std::vector<std::vector<Rational>> random_invertible(std::mt19937& rng, size_t n) {
  for (;;) {
    std::vector<std::vector<Rational>> P(n, std::vector<Rational>(n));
    for (auto& row : P)
      for (auto& e : row) e = random_rational(rng, 3, 2);
    if (plain_rank(P) == n) return P;
  }
}

/// Structure constants in the basis given by the columns of P, computed by
/// bracketing the new basis vectors and solving for their coordinates.
inline Algebra change_basis(const Algebra& T, const std::vector<std::vector<Rational>>& P) {
  const size_t n = T.dim();
  std::vector<std::vector<Rational>> cols(n, std::vector<Rational>(n));
  for (size_t c = 0; c < n; ++c)
    for (size_t r = 0; r < n; ++r) cols[c][r] = P[r][c];
  Algebra out(T.kind(), n);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      if (T.kind() == degen::AlgebraKind::lie && a >= b) continue;
      std::vector<Rational> prod(n);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
          for (size_t k = 0; k < n; ++k) prod[k] += cols[a][i] * cols[b][j] * T(i, j, k);
      const std::vector<Rational> c = plain_solve(P, prod);
      for (size_t k = 0; k < n; ++k)
        if (sgn(c[k]) != 0) out.set(a, b, k, c[k]);
    }
  return out;
}

inline Algebra random_lie_cochain(std::mt19937& rng, const Algebra& T, double density = 0.3) {
  std::bernoulli_distribution keep(density);
  Algebra F = T.cochain_shape();
  for (size_t i = 0; i < T.dim(); ++i)
    for (size_t j = i + 1; j < T.dim(); ++j)
      for (size_t k = 0; k < T.dim(); ++k)
        if (keep(rng)) F.set(i, j, k, random_rational(rng, 3, 2));
  return F;
}

/// Admissible truncated deformation of the L2 representative: a semidirect
/// product x |x span(y,z) whose ad x has leading deviation -lambda t^n on z,
/// conjugated by I + t^{n+1} X and expanded to order M.
inline degen::DeformationFamily random_l2_deformation(std::mt19937& rng, int n, int M) {
  const Rational lambda = random_nonzero(rng, 4, 2);
  const LaurentPoly tn1 = LaurentPoly::t(n + 1);
  const LaurentPoly a11 = LaurentPoly(1) + tn1 * random_poly(rng, 2);
  const LaurentPoly a21 = tn1 * random_poly(rng, 2);
  const LaurentPoly a12 = tn1 * random_poly(rng, 2);
  const LaurentPoly a22 = LaurentPoly::monomial(-lambda, n) + tn1 * random_poly(rng, 2);
  degen::StructureTensor<RationalFunction> T(degen::AlgebraKind::lie, 3);
  // [x,y] = a11 y + a21 z, [x,z] = a12 y + a22 z
  T.set(0, 1, 1, a11);
  T.set(0, 1, 2, a21);
  T.set(0, 2, 1, a12);
  T.set(0, 2, 2, a22);
  Matrix<RationalFunction> P = Matrix<RationalFunction>::identity(3);
  for (size_t r = 0; r < 3; ++r)
    for (size_t c = 0; c < 3; ++c) P(r, c) += RationalFunction(tn1 * LaurentPoly(random_rational(rng, 2, 2)));
  // g = P^{-1}: the columns of P become the new basis
  const auto conj = degen::act(degen::inverse(P), T);
  const auto series = conj.map([M](const RationalFunction& f) { return TruncSeries::from(f, M); });
  return degen::DeformationFamily::from_series(series);
}

/// Elementary unimodular matrix product over K[t].
inline std::pair<Matrix<LaurentPoly>, Matrix<LaurentPoly>> random_unimodular(std::mt19937& rng, size_t n) {
  Matrix<LaurentPoly> Q = Matrix<LaurentPoly>::identity(n), Qinv = Matrix<LaurentPoly>::identity(n);
  if (n < 2) return {Q, Qinv};
  std::uniform_int_distribution<size_t> idx(0, n - 1);
  for (int step = 0; step < 4; ++step) {
    size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const LaurentPoly p = random_poly(rng, 1, 2);
    Matrix<LaurentPoly> E = Matrix<LaurentPoly>::identity(n), Einv = Matrix<LaurentPoly>::identity(n);
    E(i, j) = p;
    Einv(i, j) = -p;
    Q = Q * E;
    Qinv = Einv * Qinv;
  }
  return {Q, Qinv};
}

inline Matrix<TruncSeries> to_series(const Matrix<LaurentPoly>& m, int order) {
  return m.map([order](const LaurentPoly& p) { return TruncSeries::from(p, order); });
}

/// P_2 -> P_1 -> P_0 with d1 = X [I_a | 0] Q^{-1} and d2 = Q [0 ; I_b] Y, so
/// d1 d2 = 0 exactly. With exact_reduction the reductions of X and Y make
/// the middle homology of P/tP vanish.
inline degen::FreeComplex random_free_complex(std::mt19937& rng, int M, bool exact_reduction) {
  std::uniform_int_distribution<size_t> small(0, 2);
  const size_t a = 1 + small(rng) % 2, b = 1 + small(rng) % 2;
  const size_t r1 = a + b;
  const size_t r0 = std::min<size_t>(4, a + small(rng) % 2), r2 = std::min<size_t>(4, b + small(rng) % 2);
  const LaurentPoly t = LaurentPoly::t(1);
  auto [Q, Qinv] = random_unimodular(rng, r1);
  Matrix<LaurentPoly> X(r0, r0), E1(r0, r1), E2(r1, b), Y(b, r2);
  for (size_t i = 0; i < r0; ++i)
    for (size_t j = 0; j < r0; ++j) X(i, j) = (i == j ? LaurentPoly(1) : LaurentPoly()) + t * random_poly(rng, 1, 2);
  if (!exact_reduction) X(0, 0) = t * random_poly(rng, 1, 2);
  for (size_t i = 0; i < a; ++i) E1(i, i) = 1;
  for (size_t i = 0; i < b; ++i) E2(a + i, i) = 1;
  for (size_t i = 0; i < b; ++i)
    for (size_t j = 0; j < r2; ++j) Y(i, j) = (i == j ? LaurentPoly(1) : LaurentPoly()) + t * random_poly(rng, 1, 2);
  if (!exact_reduction) Y(0, 0) = t * random_poly(rng, 1, 2);
  const Matrix<LaurentPoly> d1 = X * E1 * Qinv, d2 = Q * E2 * Y;
  return degen::FreeComplex({r0, r1, r2}, {to_series(d1, M), to_series(d2, M)}, M);
}

}  // namespace testing
