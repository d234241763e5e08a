#include "degen/cohomology.hpp"

#include <map>

namespace degen {

namespace {

void add_entry(SparseVec& v, size_t index, const Rational& value) {
  if (sgn(value) == 0) return;
  auto [it, inserted] = v.try_emplace(index, value);
  if (!inserted) {
    it->second += value;
    if (sgn(it->second) == 0) v.erase(it);
  }
}

using Tuple = std::vector<size_t>;

std::vector<Tuple> increasing_tuples(size_t n, size_t len) {
  std::vector<Tuple> out;
  Tuple cur;
  auto rec = [&](auto&& self, size_t start) -> void {
    if (cur.size() == len) {
      out.push_back(cur);
      return;
    }
    for (size_t v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

size_t power(size_t base, size_t exp) {
  size_t r = 1;
  for (size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

Tuple decode(size_t index, size_t n, size_t len) {
  Tuple t(len);
  for (size_t p = len; p-- > 0;) {
    t[p] = index % n;
    index /= n;
  }
  return t;
}

size_t encode(const Tuple& t, size_t n) {
  size_t index = 0;
  for (size_t a : t) index = index * n + a;
  return index;
}

int degree_of(const Algebra& A, size_t b) { return A.degrees().empty() ? 0 : A.degrees()[b]; }

}  // namespace

CochainComplex::CochainComplex(std::vector<size_t> spaces, std::vector<std::vector<SparseVec>> differentials,
                               std::vector<std::vector<int>> internal_degrees)
    : spaces_(std::move(spaces)),
      differentials_(std::move(differentials)),
      internal_degrees_(std::move(internal_degrees)),
      rank_cache_(differentials_.size()) {
  if (differentials_.size() + 1 != spaces_.size()) {
    throw Error(ErrorCode::dimension_mismatch, "complex needs one differential per consecutive pair of spaces");
  }
  for (size_t i = 0; i < differentials_.size(); ++i) {
    if (differentials_[i].size() != spaces_[i]) {
      throw Error(ErrorCode::dimension_mismatch, "differential column count differs from space dimension");
    }
  }
  for (size_t i = 0; i + 1 < differentials_.size(); ++i) {
    for (const SparseVec& col : differentials_[i]) {
      if (!apply(i + 1, col).empty()) {
        throw Error(ErrorCode::not_a_complex, "d_" + std::to_string(i + 1) + " d_" + std::to_string(i) + " != 0");
      }
    }
  }
}

Matrix<Rational> CochainComplex::differential_matrix(size_t i) const {
  Matrix<Rational> m(space_dim(i + 1), space_dim(i));
  const auto& cols = differentials_.at(i);
  for (size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : cols[c]) m(r, c) = v;
  return m;
}

size_t CochainComplex::rank_restricted(size_t i, std::optional<int> internal_degree) const {
  VectorSpan span;
  const auto& cols = differentials_.at(i);
  for (size_t c = 0; c < cols.size(); ++c) {
    if (internal_degree && internal_degrees_[i][c] != *internal_degree) continue;
    span.add(cols[c]);
  }
  return span.dim();
}

size_t CochainComplex::rank(size_t i) const {
  if (i >= differentials_.size()) return 0;
  if (!rank_cache_[i]) rank_cache_[i] = rank_restricted(i, std::nullopt);
  return *rank_cache_[i];
}

size_t CochainComplex::h_dim(size_t i) const {
  if (i >= differentials_.size()) {
    throw Error(ErrorCode::invalid_argument, "H^" + std::to_string(i) + " needs d_" + std::to_string(i));
  }
  return space_dim(i) - rank(i) - (i > 0 ? rank(i - 1) : 0);
}

size_t CochainComplex::space_dim(size_t i, int internal_degree) const {
  if (i >= internal_degrees_.size()) return 0;
  size_t count = 0;
  for (int d : internal_degrees_[i])
    if (d == internal_degree) ++count;
  return count;
}

size_t CochainComplex::h_dim(size_t i, int internal_degree) const {
  if (i >= differentials_.size()) {
    throw Error(ErrorCode::invalid_argument, "H^" + std::to_string(i) + " needs d_" + std::to_string(i));
  }
  return space_dim(i, internal_degree) - rank_restricted(i, internal_degree) -
         (i > 0 ? rank_restricted(i - 1, internal_degree) : 0);
}

SparseVec CochainComplex::apply(size_t i, const SparseVec& cochain) const {
  SparseVec out;
  const auto& cols = differentials_.at(i);
  for (const auto& [c, v] : cochain) axpy(out, v, cols.at(c));
  return out;
}

bool CochainComplex::is_coboundary(size_t i, const SparseVec& cochain) const {
  if (i == 0) return cochain.empty();
  VectorSpan span;
  for (const SparseVec& col : differentials_.at(i - 1)) span.add(col);
  return span.contains(cochain);
}

CochainComplex ce_complex(const Algebra& g, size_t max_degree) {
  if (g.kind() != AlgebraKind::lie) throw Error(ErrorCode::invalid_argument, "CE complex needs a lie algebra");
  require_identities(g);
  const size_t n = g.dim();
  const size_t top = max_degree + 1;
  std::vector<std::vector<Tuple>> subsets(top + 1);
  std::vector<std::map<Tuple, size_t>> index(top + 1);
  std::vector<size_t> spaces(top + 1);
  std::vector<std::vector<int>> degrees(top + 1);
  for (size_t i = 0; i <= top; ++i) {
    if (i <= n) subsets[i] = increasing_tuples(n, i);
    for (size_t s = 0; s < subsets[i].size(); ++s) index[i][subsets[i][s]] = s;
    spaces[i] = subsets[i].size() * n;
    degrees[i].assign(spaces[i], 0);
  }
  std::vector<std::vector<SparseVec>> diffs(top);
  for (size_t i = 0; i < top; ++i) {
    auto& cols = diffs[i];
    cols.assign(spaces[i], SparseVec{});
    for (size_t t = 0; t < subsets[i + 1].size(); ++t) {
      const Tuple& T = subsets[i + 1][t];
      for (size_t m = 0; m < n; ++m) {
        const size_t row = t * n + m;
        // sum_j (-1)^j [v_j, w(..v_j^..)]
        for (size_t j = 0; j <= i; ++j) {
          Tuple rest = T;
          rest.erase(rest.begin() + static_cast<long>(j));
          const size_t r = index[i].at(rest);
          const Rational sign = (j % 2 == 0) ? 1 : -1;
          for (size_t c = 0; c < n; ++c) {
            const Rational& coef = g(T[j], c, m);
            if (sgn(coef) != 0) add_entry(cols[r * n + c], row, sign * coef);
          }
        }
        // sum_{j<k} (-1)^{j+k} w([v_j,v_k], ..v_j^..v_k^..)
        for (size_t j = 0; j <= i; ++j)
          for (size_t k = j + 1; k <= i; ++k) {
            Tuple rest = T;
            rest.erase(rest.begin() + static_cast<long>(k));
            rest.erase(rest.begin() + static_cast<long>(j));
            const Rational sign = ((j + k) % 2 == 0) ? 1 : -1;
            for (size_t c = 0; c < n; ++c) {
              const Rational& coef = g(T[j], T[k], c);
              if (sgn(coef) == 0) continue;
              Tuple S;
              size_t pos = 0;
              bool repeated = false;
              for (size_t a : rest) {
                if (a == c) repeated = true;
                if (a < c) ++pos;
              }
              if (repeated) continue;
              S = rest;
              S.insert(S.begin() + static_cast<long>(pos), c);
              const Rational move_sign = (pos % 2 == 0) ? 1 : -1;
              add_entry(cols[index[i].at(S) * n + m], row, sign * move_sign * coef);
            }
          }
      }
    }
  }
  return CochainComplex(std::move(spaces), std::move(diffs), std::move(degrees));
}

CochainComplex hochschild_complex(const Algebra& A, size_t max_degree) {
  if (!is_associative_kind(A.kind())) {
    throw Error(ErrorCode::invalid_argument, "Hochschild complex needs an associative algebra");
  }
  if (!A.unit()) throw Error(ErrorCode::no_unit, "Hochschild complex needs a unital algebra");
  require_identities(A);
  const size_t n = A.dim();
  const size_t top = max_degree + 1;
  std::vector<size_t> spaces(top + 1);
  std::vector<std::vector<int>> degrees(top + 1);
  for (size_t i = 0; i <= top; ++i) {
    const size_t tuples = power(n, i);
    spaces[i] = tuples * n;
    degrees[i].resize(spaces[i]);
    for (size_t t = 0; t < tuples; ++t) {
      const Tuple tau = decode(t, n, i);
      int in = 0;
      for (size_t a : tau) in += degree_of(A, a);
      for (size_t k = 0; k < n; ++k) degrees[i][t * n + k] = degree_of(A, k) - in;
    }
  }
  std::vector<std::vector<SparseVec>> diffs(top);
  for (size_t i = 0; i < top; ++i) {
    auto& cols = diffs[i];
    cols.assign(spaces[i], SparseVec{});
    const size_t tuples = power(n, i + 1);
    const Rational last_sign = (i % 2 == 1) ? 1 : -1;  // (-1)^{i+1}
    for (size_t s = 0; s < tuples; ++s) {
      const Tuple sigma = decode(s, n, i + 1);
      const size_t tail = encode(Tuple(sigma.begin() + 1, sigma.end()), n);
      const size_t head = encode(Tuple(sigma.begin(), sigma.end() - 1), n);
      for (size_t m = 0; m < n; ++m) {
        const size_t row = s * n + m;
        // a_0 f(a_1..a_i)
        for (size_t k = 0; k < n; ++k) {
          const Rational& coef = A(sigma[0], k, m);
          if (sgn(coef) != 0) add_entry(cols[tail * n + k], row, coef);
        }
        // (-1)^{j+1} f(.., a_j a_{j+1}, ..)
        for (size_t j = 0; j < i; ++j) {
          const Rational sign = (j % 2 == 0) ? -1 : 1;
          for (size_t c = 0; c < n; ++c) {
            const Rational& coef = A(sigma[j], sigma[j + 1], c);
            if (sgn(coef) == 0) continue;
            Tuple tau;
            tau.reserve(i);
            for (size_t p = 0; p < j; ++p) tau.push_back(sigma[p]);
            tau.push_back(c);
            for (size_t p = j + 2; p <= i; ++p) tau.push_back(sigma[p]);
            add_entry(cols[encode(tau, n) * n + m], row, sign * coef);
          }
        }
        // (-1)^{i+1} f(a_0..a_{i-1}) a_i
        for (size_t k = 0; k < n; ++k) {
          const Rational& coef = A(k, sigma[i], m);
          if (sgn(coef) != 0) add_entry(cols[head * n + k], row, last_sign * coef);
        }
      }
    }
  }
  return CochainComplex(std::move(spaces), std::move(diffs), std::move(degrees));
}

namespace {

void check_degree_cap(size_t i, const CohomologyCaps& caps) {
  if (i > caps.max_degree) {
    throw Error(ErrorCode::cap_exceeded,
                "cohomological degree " + std::to_string(i) + " exceeds the cap " + std::to_string(caps.max_degree));
  }
}

void check_hochschild_cap(const Algebra& A, size_t i, const CohomologyCaps& caps) {
  check_degree_cap(i, caps);
  const size_t n = A.dim();
  if (caps.max_dim) {
    if (n > *caps.max_dim) {
      throw Error(ErrorCode::cap_exceeded, "dimension " + std::to_string(n) + " exceeds --max-dim " +
                                               std::to_string(*caps.max_dim));
    }
    return;
  }
  if (power(n, i + 2) > 1024) {
    throw Error(ErrorCode::cap_exceeded, "HH^" + std::to_string(i) + " of a " + std::to_string(n) +
                                             "-dimensional algebra exceeds the default size cap");
  }
}

}  // namespace

size_t lie_h_dim(const Algebra& g, size_t i, const CohomologyCaps& caps) {
  check_degree_cap(i, caps);
  return ce_complex(g, i).h_dim(i);
}

size_t hochschild_h_dim(const Algebra& A, size_t i, const CohomologyCaps& caps) {
  check_hochschild_cap(A, i, caps);
  return hochschild_complex(A, i).h_dim(i);
}

size_t hochschild_h_dim(const Algebra& A, size_t i, int internal_degree, const CohomologyCaps& caps) {
  check_hochschild_cap(A, i, caps);
  return hochschild_complex(A, i).h_dim(i, internal_degree);
}

size_t graded_h2_dim(const Algebra& A) {
  if (!A.graded()) throw Error(ErrorCode::invalid_argument, "graded_h2_dim needs a graded algebra");
  if (auto bad = first_ungenerated_degree(A)) {
    throw Error(ErrorCode::not_generated, "not generated in degree 1 (fails in degree " + std::to_string(*bad) + ")");
  }
  return hochschild_h_dim(A, 2, 0);
}

SparseVec cochain2_coordinates(const Algebra& F) {
  const size_t n = F.dim();
  SparseVec v;
  if (F.kind() == AlgebraKind::lie) {
    size_t s = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j, ++s)
        for (size_t k = 0; k < n; ++k) add_entry(v, s * n + k, F(i, j, k));
  } else {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) add_entry(v, (i * n + j) * n + k, F(i, j, k));
  }
  return v;
}

SparseVec cochain1_coordinates(const Matrix<Rational>& D) {
  const size_t n = D.rows();
  SparseVec v;
  for (size_t b = 0; b < n; ++b)
    for (size_t a = 0; a < n; ++a) add_entry(v, b * n + a, D(a, b));
  return v;
}

namespace {

CochainComplex complex_for(const Algebra& T, size_t max_degree) {
  return T.kind() == AlgebraKind::lie ? ce_complex(T, max_degree) : hochschild_complex(T, max_degree);
}

Algebra tensor_from_cochain2(const Algebra& T, const SparseVec& v) {
  const size_t n = T.dim();
  Algebra F = T.cochain_shape();
  for (const auto& [index, c] : v) {
    const size_t k = index % n;
    const size_t s = index / n;
    if (T.kind() == AlgebraKind::lie) {
      const Tuple pair = increasing_tuples(n, 2).at(s);
      F.set_unchecked(pair[0], pair[1], k, c);
      F.set_unchecked(pair[1], pair[0], k, -c);
    } else {
      F.set_unchecked(s / n, s % n, k, c);
    }
  }
  return F;
}

void require_shape(const Algebra& F, const Algebra& T) {
  if (F.dim() != T.dim() || F.kind() != T.kind()) {
    throw Error(ErrorCode::dimension_mismatch, "cochain shape differs from the algebra");
  }
}

}  // namespace

Algebra coboundary_of(const Algebra& T, const Matrix<Rational>& D) {
  if (D.rows() != T.dim() || D.cols() != T.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "linear map size differs from the algebra");
  }
  return tensor_from_cochain2(T, complex_for(T, 1).apply(1, cochain1_coordinates(D)));
}

bool is_two_cocycle(const Algebra& F, const Algebra& T) {
  require_shape(F, T);
  return complex_for(T, 2).apply(2, cochain2_coordinates(F)).empty();
}

bool class_nonzero(const Algebra& F, const Algebra& T) {
  require_shape(F, T);
  return !complex_for(T, 1).is_coboundary(2, cochain2_coordinates(F));
}

size_t classes_rank(const std::vector<Algebra>& cocycles, const Algebra& T) {
  const CochainComplex c = complex_for(T, 1);
  VectorSpan span;
  for (const SparseVec& col : c.differential(1)) span.add(col);
  const size_t base = span.dim();
  for (const Algebra& F : cocycles) {
    require_shape(F, T);
    span.add(cochain2_coordinates(F));
  }
  return span.dim() - base;
}

Algebra wedge_cochain(const Algebra& T, size_t a, size_t b, size_t out, const Rational& coeff) {
  if (T.kind() != AlgebraKind::lie) throw Error(ErrorCode::invalid_argument, "wedge cochains are lie cochains");
  Algebra F = T.cochain_shape();
  if (a != b) F.set(a, b, out, coeff);
  return F;
}

std::optional<int> first_ungenerated_degree(const Algebra& A) {
  const size_t n = A.dim();
  int top = 0;
  std::vector<size_t> ones;
  std::map<int, size_t> dims;
  for (size_t b = 0; b < n; ++b) {
    const int d = degree_of(A, b);
    top = std::max(top, d);
    if (d == 1) ones.push_back(b);
    if (d >= 1) ++dims[d];
  }
  // products of j generators, as sparse vectors
  std::vector<SparseVec> layer;
  for (size_t b : ones) layer.push_back(SparseVec{{b, Rational(1)}});
  for (int j = 1; j <= top; ++j) {
    VectorSpan span;
    std::vector<SparseVec> basis;
    for (const SparseVec& v : layer)
      if (span.add(v)) basis.push_back(v);
    if (span.dim() < dims[j]) return j;
    std::vector<SparseVec> next;
    for (size_t g : ones)
      for (const SparseVec& v : basis) {
        SparseVec p;
        for (const auto& [b, c] : v)
          for (size_t k = 0; k < n; ++k) add_entry(p, k, c * A(g, b, k));
        next.push_back(std::move(p));
      }
    layer = std::move(next);
  }
  return std::nullopt;
}

}  // namespace degen
