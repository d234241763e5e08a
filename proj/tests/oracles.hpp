#pragma once

// Independent reference computations used to cross-check the library. They
// share only the Rational type and StructureTensor storage with it.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "support.hpp"

namespace oracle {

using degen::Algebra;
using degen::Rational;
using Vec = std::vector<Rational>;

// ---------------------------------------------------------------------------
// Chevalley-Eilenberg cohomology H^i(g, g)

inline std::vector<std::vector<size_t>> increasing_tuples(size_t n, size_t len) {
  std::vector<std::vector<size_t>> out;
  std::vector<size_t> cur;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (cur.size() == len) {
      out.push_back(cur);
      return;
    }
    for (size_t v = start; v < n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

/// Alternating cochain stored on increasing tuples; evaluation on any tuple
/// sorts it and tracks the sign.
struct AltCochain {
  size_t n;
  std::map<std::vector<size_t>, Vec> values;

  Vec eval(std::vector<size_t> tuple) const {
    int sign = 1;
    for (size_t i = 0; i < tuple.size(); ++i)
      for (size_t j = 0; j + 1 < tuple.size() - i; ++j)
        if (tuple[j] > tuple[j + 1]) {
          std::swap(tuple[j], tuple[j + 1]);
          sign = -sign;
        }
    for (size_t i = 0; i + 1 < tuple.size(); ++i)
      if (tuple[i] == tuple[i + 1]) return Vec(n);
    auto it = values.find(tuple);
    if (it == values.end()) return Vec(n);
    Vec out = it->second;
    if (sign < 0)
      for (auto& c : out) c = -c;
    return out;
  }
};

inline Vec bracket(const Algebra& g, size_t a, const Vec& v) {
  Vec out(g.dim());
  for (size_t b = 0; b < g.dim(); ++b)
    for (size_t k = 0; k < g.dim(); ++k) out[k] += v[b] * g(a, b, k);
  return out;
}

/// (d w)(v_0..v_i) = sum_j (-1)^j [v_j, w(..^j..)] + sum_{j<k} (-1)^{j+k} w([v_j,v_k], ..^j..^k..)
inline Vec ce_apply(const Algebra& g, const AltCochain& w, const std::vector<size_t>& v) {
  const size_t n = g.dim();
  Vec out(n);
  for (size_t j = 0; j < v.size(); ++j) {
    std::vector<size_t> rest;
    for (size_t q = 0; q < v.size(); ++q)
      if (q != j) rest.push_back(v[q]);
    const Vec inner = bracket(g, v[j], w.eval(rest));
    for (size_t k = 0; k < n; ++k) out[k] += (j % 2 ? -1 : 1) * inner[k];
  }
  for (size_t j = 0; j < v.size(); ++j)
    for (size_t k = j + 1; k < v.size(); ++k) {
      std::vector<size_t> rest;
      for (size_t q = 0; q < v.size(); ++q)
        if (q != j && q != k) rest.push_back(v[q]);
      const int sign = (j + k) % 2 ? -1 : 1;
      for (size_t c = 0; c < n; ++c) {
        const Rational& coeff = g(v[j], v[k], c);
        if (sgn(coeff) == 0) continue;
        std::vector<size_t> args{c};
        args.insert(args.end(), rest.begin(), rest.end());
        const Vec val = w.eval(args);
        for (size_t o = 0; o < n; ++o) out[o] += sign * coeff * val[o];
      }
    }
  return out;
}

/// Dense matrix of d_i : C^i -> C^{i+1}, as rows of images.
inline std::vector<Vec> ce_images(const Algebra& g, size_t i) {
  const size_t n = g.dim();
  const auto src = increasing_tuples(n, i), dst = increasing_tuples(n, i + 1);
  std::vector<Vec> images;
  for (const auto& tuple : src)
    for (size_t o = 0; o < n; ++o) {
      AltCochain w{n, {}};
      Vec e(n);
      e[o] = 1;
      w.values[tuple] = e;
      Vec image;
      for (const auto& target : dst) {
        const Vec val = ce_apply(g, w, target);
        image.insert(image.end(), val.begin(), val.end());
      }
      images.push_back(image);
    }
  return images;
}

inline size_t ce_h_dim(const Algebra& g, size_t i) {
  const size_t n = g.dim();
  const size_t space = increasing_tuples(n, i).size() * n;
  const size_t r_out = i + 1 <= n ? testing::plain_rank(ce_images(g, i)) : 0;
  const size_t r_in = i == 0 ? 0 : testing::plain_rank(ce_images(g, i - 1));
  return space - r_out - r_in;
}

/// Coordinates of a tensor-shaped lie 2-cochain in the layout of ce_images(g, 1).
inline Vec ce2_coords(const Algebra& F) {
  Vec out;
  for (const auto& t : increasing_tuples(F.dim(), 2))
    for (size_t o = 0; o < F.dim(); ++o) out.push_back(F(t[0], t[1], o));
  return out;
}

inline bool ce_is_cocycle(const Algebra& g, const Algebra& F) {
  AltCochain w{g.dim(), {}};
  for (const auto& t : increasing_tuples(g.dim(), 2)) {
    Vec v(g.dim());
    for (size_t o = 0; o < g.dim(); ++o) v[o] = F(t[0], t[1], o);
    w.values[t] = v;
  }
  for (const auto& t : increasing_tuples(g.dim(), 3))
    for (const auto& c : ce_apply(g, w, t))
      if (sgn(c) != 0) return false;
  return true;
}

inline bool ce_is_coboundary(const Algebra& g, const Algebra& F) {
  std::vector<Vec> rows = ce_images(g, 1);
  const size_t r = testing::plain_rank(rows);
  rows.push_back(ce2_coords(F));
  return testing::plain_rank(rows) == r;
}

// ---------------------------------------------------------------------------
// Hochschild cohomology HH^i(A, A) on the full tensor spaces

inline std::vector<std::vector<size_t>> all_tuples(size_t n, size_t len) {
  std::vector<std::vector<size_t>> out{{}};
  for (size_t l = 0; l < len; ++l) {
    std::vector<std::vector<size_t>> next;
    for (const auto& t : out)
      for (size_t v = 0; v < n; ++v) {
        next.push_back(t);
        next.back().push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

inline Vec mult(const Algebra& A, const Vec& u, const Vec& v) {
  Vec out(A.dim());
  for (size_t i = 0; i < A.dim(); ++i)
    for (size_t j = 0; j < A.dim(); ++j) {
      if (sgn(u[i]) == 0 || sgn(v[j]) == 0) continue;
      for (size_t k = 0; k < A.dim(); ++k) out[k] += u[i] * v[j] * A(i, j, k);
    }
  return out;
}

inline Vec unit_vec(size_t n, size_t i) {
  Vec e(n);
  e[i] = 1;
  return e;
}

/// f given on basis tuples; returns (d f) on the tuple a.
inline Vec hh_apply(const Algebra& A, const std::map<std::vector<size_t>, Vec>& f, const std::vector<size_t>& a) {
  const size_t n = A.dim(), i = a.size() - 1;
  auto F = [&](const std::vector<size_t>& t) {
    auto it = f.find(t);
    return it == f.end() ? Vec(n) : it->second;
  };
  Vec out = mult(A, unit_vec(n, a[0]), F(std::vector<size_t>(a.begin() + 1, a.end())));
  for (size_t j = 0; j < i; ++j) {
    const int sign = (j + 1) % 2 ? -1 : 1;
    for (size_t m = 0; m < n; ++m) {
      const Rational& c = A(a[j], a[j + 1], m);
      if (sgn(c) == 0) continue;
      std::vector<size_t> t(a.begin(), a.begin() + j);
      t.push_back(m);
      t.insert(t.end(), a.begin() + j + 2, a.end());
      const Vec val = F(t);
      for (size_t k = 0; k < n; ++k) out[k] += sign * c * val[k];
    }
  }
  const Vec last = mult(A, F(std::vector<size_t>(a.begin(), a.end() - 1)), unit_vec(n, a.back()));
  const int sign = (i + 1) % 2 ? -1 : 1;
  for (size_t k = 0; k < n; ++k) out[k] += sign * last[k];
  return out;
}

inline int degree_of(const Algebra& A, size_t b) { return A.degrees().empty() ? 0 : A.degrees()[b]; }

/// Basis cochains of C^i with an optional internal degree filter
/// (deg out - sum deg inputs).
inline std::vector<std::pair<std::vector<size_t>, size_t>> hh_basis(const Algebra& A, size_t i,
                                                                    std::optional<int> internal) {
  std::vector<std::pair<std::vector<size_t>, size_t>> out;
  for (const auto& t : all_tuples(A.dim(), i))
    for (size_t o = 0; o < A.dim(); ++o) {
      int d = degree_of(A, o);
      for (size_t b : t) d -= degree_of(A, b);
      if (!internal || d == *internal) out.emplace_back(t, o);
    }
  return out;
}

inline size_t hh_rank(const Algebra& A, size_t i, std::optional<int> internal) {
  const auto targets = all_tuples(A.dim(), i + 1);
  std::vector<Vec> images;
  for (const auto& [t, o] : hh_basis(A, i, internal)) {
    std::map<std::vector<size_t>, Vec> f{{t, unit_vec(A.dim(), o)}};
    Vec image;
    for (const auto& a : targets) {
      const Vec v = hh_apply(A, f, a);
      image.insert(image.end(), v.begin(), v.end());
    }
    images.push_back(std::move(image));
  }
  return testing::plain_rank(images);
}

inline size_t hh_h_dim(const Algebra& A, size_t i, std::optional<int> internal = std::nullopt) {
  const size_t space = hh_basis(A, i, internal).size();
  return space - hh_rank(A, i, internal) - (i == 0 ? 0 : hh_rank(A, i - 1, internal));
}

// ---------------------------------------------------------------------------
// Monomial algebras and minimal graded resolutions of K

/// K<x_1..x_m> modulo the words outside a factor-closed set S; basis S.
struct MonomialAlgebra {
  size_t letters = 0;
  std::vector<std::string> words;  // words[0] is the empty word
  Algebra algebra;
};

inline Algebra monomial_algebra(size_t letters, const std::vector<std::string>& words) {
  std::map<std::string, size_t> index;
  for (size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
  std::vector<int> degrees;
  std::vector<std::string> names;
  for (const auto& w : words) {
    degrees.push_back(static_cast<int>(w.size()));
    names.push_back(w.empty() ? "1" : w);
  }
  Algebra A(degen::AlgebraKind::graded_associative, words.size(), degrees, 0, names);
  for (size_t i = 0; i < words.size(); ++i)
    for (size_t j = 0; j < words.size(); ++j) {
      auto it = index.find(words[i] + words[j]);
      if (it != index.end()) A.set(i, j, it->second, 1);
    }
  (void)letters;
  return A;
}

inline bool factor_closed(const std::set<std::string>& S) {
  for (const auto& w : S)
    for (size_t len = 0; len < w.size(); ++len)
      for (size_t start = 0; start + len <= w.size(); ++start)
        if (!S.count(w.substr(start, len))) return false;
  return true;
}

/// Every monomial algebra generated in degree 1 with 1 <= letters and total
/// dimension <= max_dim (letters named a, b, c, ...).
inline std::vector<MonomialAlgebra> all_monomial_algebras(size_t max_dim) {
  std::vector<MonomialAlgebra> out;
  for (size_t m = 1; m + 1 <= max_dim; ++m) {
    std::set<std::string> base{""};
    for (size_t l = 0; l < m; ++l) base.insert(std::string(1, char('a' + l)));
    const size_t extra = max_dim - base.size();
    std::set<std::set<std::string>> seen;
    std::function<void(std::set<std::string>)> grow = [&](std::set<std::string> S) {
      if (!seen.insert(S).second) return;
      std::vector<std::string> words(S.begin(), S.end());
      std::stable_sort(words.begin(), words.end(),
                       [](const std::string& a, const std::string& b) { return a.size() < b.size(); });
      out.push_back({m, words, monomial_algebra(m, words)});
      if (S.size() - base.size() >= extra) return;
      // extend by a word whose proper factors are already present
      for (const auto& w : S)
        for (size_t l = 0; l < m; ++l) {
          std::string v = w + char('a' + l);
          if (S.count(v)) continue;
          std::set<std::string> T = S;
          T.insert(v);
          if (factor_closed(T)) grow(T);
        }
    };
    grow(base);
  }
  return out;
}

/// Dense echelon basis grown one vector at a time.
class DenseSpan {
 public:
  bool add(Vec v) {
    for (const auto& [pivot, row] : rows_) {
      if (sgn(v[pivot]) == 0) continue;
      const Rational f = v[pivot];
      for (size_t k = 0; k < v.size(); ++k) v[k] -= f * row[k];
    }
    size_t pivot = 0;
    while (pivot < v.size() && sgn(v[pivot]) == 0) ++pivot;
    if (pivot == v.size()) return false;
    const Rational inv = 1 / v[pivot];
    for (auto& c : v) c *= inv;
    for (auto& [p, row] : rows_) {
      if (sgn(row[pivot]) == 0) continue;
      const Rational f = row[pivot];
      for (size_t k = 0; k < row.size(); ++k) row[k] -= f * v[k];
    }
    rows_.emplace_back(pivot, std::move(v));
    return true;
  }

 private:
  std::vector<std::pair<size_t, Vec>> rows_;
};

/// Tor_{i,j}(K,K) from a minimal graded free resolution of the trivial left
/// module, built degree by degree with linear algebra. Requires A_0 = K.1
/// with the unit at basis index 0.
inline std::vector<std::vector<size_t>> minimal_resolution_tor(const Algebra& A, int s, int d) {
  const size_t n = A.dim();
  std::vector<std::vector<size_t>> tor(s + 1, std::vector<size_t>(d + 1));
  // a free module: generator degrees; basis of degree j = pairs (generator, algebra basis b)
  struct Free {
    std::vector<int> gens;
  };
  auto basis_of = [&](const Free& P, int j) {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t g = 0; g < P.gens.size(); ++g)
      for (size_t b = 0; b < n; ++b)
        if (P.gens[g] + degree_of(A, b) == j) out.emplace_back(g, b);
    return out;
  };
  using Elem = std::map<std::pair<size_t, size_t>, Rational>;  // (generator, basis) -> coeff
  auto left_mult = [&](size_t a, const Elem& x) {
    Elem out;
    for (const auto& [key, c] : x)
      for (size_t k = 0; k < n; ++k) {
        const Rational& m = A(a, key.second, k);
        if (sgn(m) != 0) out[{key.first, k}] += c * m;
      }
    return out;
  };
  auto coords = [&](const Elem& x, const std::vector<std::pair<size_t, size_t>>& basis) {
    Vec v(basis.size());
    for (size_t q = 0; q < basis.size(); ++q) {
      auto it = x.find(basis[q]);
      if (it != x.end()) v[q] = it->second;
    }
    return v;
  };
  auto kernel = [&](const std::vector<Vec>& rows_as_columns, size_t dim) {
    // kernel of the linear map whose images of the basis vectors are given
    std::vector<Vec> aug;
    for (size_t q = 0; q < rows_as_columns.size(); ++q) {
      Vec r = rows_as_columns[q];
      for (size_t e = 0; e < rows_as_columns.size(); ++e) r.push_back(e == q ? 1 : 0);
      aug.push_back(r);
    }
    // row-reduce on the image part; rows that vanish there give kernel vectors
    size_t rank = 0;
    for (size_t c = 0; c < dim && rank < aug.size(); ++c) {
      size_t p = rank;
      while (p < aug.size() && sgn(aug[p][c]) == 0) ++p;
      if (p == aug.size()) continue;
      std::swap(aug[p], aug[rank]);
      for (size_t r = 0; r < aug.size(); ++r) {
        if (r == rank || sgn(aug[r][c]) == 0) continue;
        const Rational f = aug[r][c] / aug[rank][c];
        for (size_t k = 0; k < aug[r].size(); ++k) aug[r][k] -= f * aug[rank][k];
      }
      ++rank;
    }
    std::vector<Vec> out;
    for (size_t r = rank; r < aug.size(); ++r) out.emplace_back(aug[r].begin() + dim, aug[r].end());
    return out;
  };

  tor[0][0] = 1;
  // current module P_i, and the kernel of P_i -> P_{i-1} as elements per degree
  Free P{{0}};
  std::vector<std::vector<Elem>> K(d + 1);
  for (int j = 1; j <= d; ++j)
    for (const auto& key : basis_of(P, j)) K[j].push_back(Elem{{key, Rational(1)}});
  for (int i = 1; i <= s; ++i) {
    // minimal generators of K: complement of J.K in each degree
    Free next;
    std::vector<Elem> images;  // image in P of each new generator
    for (int j = 1; j <= d; ++j) {
      const auto basis = basis_of(P, j);
      DenseSpan span;
      for (size_t a = 0; a < n; ++a) {
        const int da = degree_of(A, a);
        if (da <= 0 || da > j) continue;
        for (const Elem& k : K[j - da]) span.add(coords(left_mult(a, k), basis));
      }
      for (const Elem& k : K[j]) {
        if (span.add(coords(k, basis))) {
          next.gens.push_back(j);
          images.push_back(k);
        }
      }
      tor[i][j] = std::count(next.gens.begin(), next.gens.end(), j);
    }
    if (i == s) break;
    // kernel of next -> P, degree by degree
    std::vector<std::vector<Elem>> K2(d + 1);
    for (int j = 0; j <= d; ++j) {
      const auto src = basis_of(next, j), dst = basis_of(P, j);
      std::vector<Vec> cols;
      for (const auto& [g, b] : src) cols.push_back(coords(left_mult(b, images[g]), dst));
      for (const Vec& v : kernel(cols, dst.size())) {
        Elem e;
        for (size_t q = 0; q < src.size(); ++q)
          if (sgn(v[q]) != 0) e[src[q]] = v[q];
        K2[j].push_back(e);
      }
    }
    P = next;
    K = std::move(K2);
  }
  return tor;
}

}  // namespace oracle
