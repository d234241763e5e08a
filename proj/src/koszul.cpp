#include "degen/koszul.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "degen/cohomology.hpp"
#include "degen/sparse.hpp"

namespace degen {

GenerationCheck check_generated_degree_one(const Algebra& A) {
  if (!A.graded()) throw Error(ErrorCode::invalid_argument, "generation check needs a graded algebra");
  GenerationCheck out;
  out.failing_degree = first_ungenerated_degree(A);
  out.generated = !out.failing_degree.has_value();
  return out;
}

GradedAlgebra::GradedAlgebra(Algebra A) : A_(std::move(A)) {
  if (!A_.graded()) throw Error(ErrorCode::invalid_argument, "expected a graded_associative algebra");
  if (!A_.unit()) throw Error(ErrorCode::no_unit, "graded algebra has no declared unit");
  A_.validate();
  require_identities(A_);
  const size_t u = *A_.unit();
  if (A_.degrees()[u] != 0) throw Error(ErrorCode::invalid_argument, "the unit must have degree 0");
  for (size_t b = 0; b < A_.dim(); ++b) {
    if (b == u) continue;
    if (A_.degrees()[b] <= 0) {
      throw Error(ErrorCode::invalid_argument, "basis element " + A_.basis()[b] +
                                                   " has degree <= 0; A_0 must be spanned by the unit");
    }
    ideal_.push_back(b);
  }
  const GenerationCheck gen = check_generated_degree_one(A_);
  if (!gen.generated) {
    throw Error(ErrorCode::not_generated,
                "not generated in degree 1 (fails in degree " + std::to_string(*gen.failing_degree) + ")");
  }
}

size_t TorTable::at(int i, int j) const {
  if (i < 0 || j < 0 || i > s || j > d) return 0;
  return dims[i][j];
}

namespace {

using Word = std::vector<size_t>;  // positions in the ideal basis

class BarComplex {
 public:
  explicit BarComplex(const GradedAlgebra& A) : A_(A) {
    const auto& ideal = A.ideal_basis();
    for (size_t p = 0; p < ideal.size(); ++p) position_[ideal[p]] = p;
  }

  std::vector<Word> words(int length, int degree) const {
    std::vector<Word> out;
    Word w;
    extend(w, length, degree, out);
    return out;
  }

  /// Images of the words of B_{i,j} in B_{i-1,j}, indexed by the order of
  /// words(i-1, j).
  std::vector<SparseVec> differential(int i, int j) const {
    std::vector<SparseVec> images;
    if (i < 2) {
      images.resize(words(i, j).size());
      return images;
    }
    std::map<Word, size_t> target;
    for (const Word& w : words(i - 1, j)) target.emplace(w, target.size());
    const Algebra& T = A_.algebra();
    const auto& ideal = A_.ideal_basis();
    for (const Word& w : words(i, j)) {
      SparseVec image;
      for (int k = 1; k < i; ++k) {
        const Rational sign = k % 2 == 0 ? 1 : -1;
        const size_t a = ideal[w[k - 1]], b = ideal[w[k]];
        for (size_t m = 0; m < T.dim(); ++m) {
          const Rational& c = T(a, b, m);
          if (sgn(c) == 0) continue;
          Word merged(w.begin(), w.begin() + (k - 1));
          merged.push_back(position_.at(m));
          merged.insert(merged.end(), w.begin() + k + 1, w.end());
          axpy(image, sign * c, SparseVec{{target.at(merged), Rational(1)}});
        }
      }
      images.push_back(std::move(image));
    }
    return images;
  }

  /// rank of d : B_{i,j} -> B_{i-1,j}
  size_t rank(int i, int j) const {
    if (i < 2) return 0;
    VectorSpan span;
    for (SparseVec& v : differential(i, j)) span.add(std::move(v));
    return span.dim();
  }

 private:
  void extend(Word& w, int length, int degree, std::vector<Word>& out) const {
    if (length == 0) {
      if (degree == 0) out.push_back(w);
      return;
    }
    const auto& ideal = A_.ideal_basis();
    for (size_t p = 0; p < ideal.size(); ++p) {
      const int dg = A_.degree(ideal[p]);
      // every remaining letter has degree >= 1
      if (dg + (length - 1) > degree) continue;
      w.push_back(p);
      extend(w, length - 1, degree - dg, out);
      w.pop_back();
    }
  }

  const GradedAlgebra& A_;
  std::map<size_t, size_t> position_;
};

template <class Job>
void run_parallel(size_t jobs, const Job& job) {
  const size_t workers = std::max<size_t>(1, std::min<size_t>(jobs, std::thread::hardware_concurrency()));
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (size_t k = next++; k < jobs; k = next++) job(k);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

std::vector<SparseVec> bar_differential(const GradedAlgebra& A, int i, int j) {
  if (i < 0 || j < 0) throw Error(ErrorCode::invalid_argument, "bar degrees must be non-negative");
  return BarComplex(A).differential(i, j);
}

size_t bar_dim(const GradedAlgebra& A, int i, int j) {
  if (i < 0 || j < 0) throw Error(ErrorCode::invalid_argument, "bar degrees must be non-negative");
  return BarComplex(A).words(i, j).size();
}

TorTable tor_dims(const GradedAlgebra& A, int s, int d) {
  if (s < 0 || d < 0) throw Error(ErrorCode::invalid_argument, "Tor bounds must be non-negative");
  const BarComplex bar(A);
  // ranks[i][j] for d_i, i = 0..s+1
  const size_t rows = static_cast<size_t>(s) + 2, cols = static_cast<size_t>(d) + 1;
  std::vector<size_t> ranks(rows * cols), sizes(rows * cols);
  run_parallel(rows * cols, [&](size_t cell) {
    const int i = static_cast<int>(cell / cols), j = static_cast<int>(cell % cols);
    ranks[cell] = bar.rank(i, j);
    if (i <= s) sizes[cell] = bar.words(i, j).size();
  });
  TorTable t;
  t.s = s;
  t.d = d;
  t.dims.assign(s + 1, std::vector<size_t>(d + 1));
  for (int i = 0; i <= s; ++i)
    for (int j = 0; j <= d; ++j) {
      const size_t cell = static_cast<size_t>(i) * cols + j;
      t.dims[i][j] = sizes[cell] - ranks[cell] - ranks[cell + cols];
    }
  return t;
}

int jump(int i, int N) {
  if (i < 0 || N < 2) throw Error(ErrorCode::invalid_argument, "jump needs i >= 0 and N >= 2");
  return (i / 2) * N + (i % 2);
}

const char* verdict_name(KoszulVerdict::Kind k) noexcept {
  switch (k) {
    case KoszulVerdict::koszul_up_to_bounds: return "koszul_up_to_bounds";
    case KoszulVerdict::not_koszul: return "not_koszul";
    case KoszulVerdict::bounds_insufficient: return "bounds_insufficient";
  }
  return "?";
}

std::string KoszulVerdict::to_string() const {
  switch (kind) {
    case koszul_up_to_bounds:
      return "N-Koszul up to i=" + std::to_string(s) + " (N=" + std::to_string(N) +
             ", internal degree <= " + std::to_string(d) + ")";
    case not_koszul:
      return "not Koszul: Tor_{" + std::to_string(cell_i) + "," + std::to_string(cell_j) + "} ≠ 0 (N=" +
             std::to_string(N) + ", n(" + std::to_string(cell_i) + ")=" + std::to_string(jump(cell_i, N)) + ")";
    case bounds_insufficient:
      return "bounds insufficient: internal degree bound " + std::to_string(d) + " < n(" + std::to_string(s) +
             ")=" + std::to_string(jump(s, N));
  }
  return {};
}

KoszulVerdict koszul_verdict(const TorTable& table, int N) {
  KoszulVerdict v;
  v.N = N;
  v.s = table.s;
  v.d = table.d;
  if (table.d < jump(table.s, N)) {
    v.kind = KoszulVerdict::bounds_insufficient;
    return v;
  }
  for (int i = 0; i <= table.s; ++i)
    for (int j = 0; j <= table.d; ++j)
      if (table.at(i, j) != 0 && j != jump(i, N)) {
        v.kind = KoszulVerdict::not_koszul;
        v.cell_i = i;
        v.cell_j = j;
        return v;
      }
  return v;
}

KoszulVerdict is_N_koszul(const GradedAlgebra& A, int N, int s, std::optional<int> d) {
  const int bound = d.value_or(jump(s, N));
  if (bound < jump(s, N)) {
    KoszulVerdict v;
    v.kind = KoszulVerdict::bounds_insufficient;
    v.N = N;
    v.s = s;
    v.d = bound;
    return v;
  }
  return koszul_verdict(tor_dims(A, s, bound), N);
}

TransferReport transfer_from_tables(TorTable tor_a, TorTable tor_b, int N) {
  TransferReport r;
  r.a = koszul_verdict(tor_a, N);
  r.b = koszul_verdict(tor_b, N);
  r.violation = r.b.kind == KoszulVerdict::koszul_up_to_bounds && r.a.kind == KoszulVerdict::not_koszul;
  const int s = std::min(tor_a.s, tor_b.s), d = std::min(tor_a.d, tor_b.d);
  for (int i = 0; i <= s; ++i)
    for (int j = 0; j <= d; ++j)
      if (tor_b.at(i, j) < tor_a.at(i, j)) r.semicontinuity_failures.emplace_back(i, j);
  r.tor_a = std::move(tor_a);
  r.tor_b = std::move(tor_b);
  return r;
}

std::string TransferReport::to_string() const {
  std::string out = violation ? "VIOLATION" : "CONSISTENT";
  out += "\nA: " + a.to_string() + "\nB: " + b.to_string() + "\nbetti semicontinuity (standard): ";
  if (semicontinuity_failures.empty()) {
    out += "holds";
  } else {
    out += "fails at";
    for (const auto& [i, j] : semicontinuity_failures) out += " (" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return out;
}

TransferReport koszul_transfer_check(const GradedAlgebra& A, const GradedAlgebra& B, const Witness& g, int N, int s,
                                     std::optional<int> d) {
  const WitnessVerdict v = verify_witness(A.algebra(), B.algebra(), g);
  if (!v.accepted) throw Error(ErrorCode::witness_rejected, "graded witness rejected: " + v.failure);
  const int bound = d.value_or(jump(s, N));
  return transfer_from_tables(tor_dims(A, s, bound), tor_dims(B, s, bound), N);
}

FreeComplex::FreeComplex(std::vector<size_t> ranks, std::vector<Matrix<TruncSeries>> diffs, int order)
    : ranks_(std::move(ranks)), diffs_(std::move(diffs)), order_(order) {
  if (order_ < 0 || order_ == kInfinity) throw Error(ErrorCode::invalid_argument, "complex needs a finite order");
  if (ranks_.empty() || diffs_.size() != ranks_.size() - 1) {
    throw Error(ErrorCode::dimension_mismatch, "need one differential between consecutive modules");
  }
  for (size_t k = 1; k < ranks_.size(); ++k) {
    Matrix<TruncSeries>& m = diffs_[k - 1];
    if (m.rows() != ranks_[k - 1] || m.cols() != ranks_[k]) {
      throw Error(ErrorCode::dimension_mismatch, "d_" + std::to_string(k) + " has the wrong shape");
    }
    m = m.map([&](const TruncSeries& f) { return f.truncated(order_); });
  }
  for (size_t k = 2; k < ranks_.size(); ++k) {
    const Matrix<TruncSeries> dd = diffs_[k - 2] * diffs_[k - 1];
    for (size_t r = 0; r < dd.rows(); ++r)
      for (size_t c = 0; c < dd.cols(); ++c)
        if (!dd(r, c).is_zero()) {
          throw Error(ErrorCode::not_a_complex, "d_" + std::to_string(k - 1) + " d_" + std::to_string(k) +
                                                    " is nonzero modulo t^" + std::to_string(order_ + 1));
        }
  }
}

Matrix<TruncSeries> FreeComplex::differential(size_t k) const {
  if (k >= 1 && k < ranks_.size()) return diffs_[k - 1];
  return Matrix<TruncSeries>(k == 0 ? 0 : rank(k - 1), rank(k));
}

Matrix<Rational> FreeComplex::reduced(size_t k) const {
  return differential(k).map([](const TruncSeries& f) { return f.coeff(0); });
}

namespace {

size_t safe_rank(const Matrix<Rational>& m) { return m.rows() == 0 || m.cols() == 0 ? 0 : rank(m); }

std::vector<TruncSeries> apply(const Matrix<TruncSeries>& m, const std::vector<TruncSeries>& v, int order) {
  std::vector<TruncSeries> out(m.rows(), TruncSeries({}, order));
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  return out;
}

}  // namespace

LiftReport lift_check(const FreeComplex& P, size_t i) {
  if (i >= P.length()) throw Error(ErrorCode::invalid_argument, "degree outside the complex");
  LiftReport rep;
  rep.i = i;
  rep.order = P.order();
  const int M = P.order();
  const size_t r = P.rank(i), below = i == 0 ? 0 : P.rank(i - 1);
  const Matrix<Rational> dbar_i = P.reduced(i), dbar_up = P.reduced(i + 1);
  rep.reduced_homology_dim = r - safe_rank(dbar_i) - safe_rank(dbar_up);
  rep.applicable = rep.reduced_homology_dim == 0;
  if (!rep.applicable) return rep;

  // cycles modulo t^{M+1}: y = sum_k y_k t^k with d_i y = 0, as a Q-space
  const size_t unknowns = static_cast<size_t>(M + 1) * r;
  std::vector<std::vector<Rational>> cycles;
  if (below == 0 || r == 0) {
    for (size_t u = 0; u < unknowns; ++u) {
      std::vector<Rational> e(unknowns);
      e[u] = 1;
      cycles.push_back(std::move(e));
    }
  } else {
    const Matrix<TruncSeries> d = P.differential(i);
    Matrix<Rational> eq(static_cast<size_t>(M + 1) * below, unknowns);
    for (int m = 0; m <= M; ++m)
      for (size_t a = 0; a < below; ++a)
        for (int k = 0; k <= m; ++k)
          for (size_t c = 0; c < r; ++c) eq(m * below + a, k * r + c) = d(a, c).coeff(m - k);
    cycles = kernel_basis(eq);
  }
  rep.cycle_space_dim = cycles.size();
  for (int k = 0; k <= M; ++k) rep.steps.push_back(LiftStep{k, 0, true});

  const Matrix<TruncSeries> d_up = P.differential(i + 1);
  const size_t above = P.rank(i + 1);
  bool all_ok = true;
  for (const auto& coords : cycles) {
    std::vector<TruncSeries> y(r);
    for (size_t c = 0; c < r; ++c) {
      std::vector<Rational> cs(M + 1);
      for (int k = 0; k <= M; ++k) cs[k] = coords[k * r + c];
      y[c] = TruncSeries(std::move(cs), M);
    }
    std::vector<TruncSeries> x(above, TruncSeries({}, M));
    for (int k = 0; k <= M; ++k) {
      const std::vector<TruncSeries> dx = apply(d_up, x, M);
      std::vector<Rational> residual(r);
      bool nonzero = false;
      for (size_t c = 0; c < r; ++c) {
        const TruncSeries res = y[c] - dx[c];
        if (res.valuation() < k) rep.steps[k].ok = false;
        residual[c] = res.coeff(k);
        nonzero = nonzero || sgn(residual[c]) != 0;
      }
      if (!nonzero) continue;
      if (above == 0) {
        rep.steps[k].ok = false;
        continue;
      }
      try {
        const std::vector<Rational> w = solve(dbar_up, residual);
        for (size_t c = 0; c < above; ++c) x[c] += TruncSeries::monomial(w[c], k, M);
        ++rep.steps[k].corrections;
      } catch (const Error&) {
        rep.steps[k].ok = false;
      }
    }
    const std::vector<TruncSeries> dx = apply(d_up, x, M);
    for (size_t c = 0; c < r; ++c) all_ok = all_ok && (y[c] - dx[c]).is_zero();
  }
  for (const LiftStep& s : rep.steps) all_ok = all_ok && s.ok;
  rep.verified = all_ok;
  return rep;
}

std::string LiftReport::to_string() const {
  std::string out = "H_" + std::to_string(i) + "(P/tP) dim " + std::to_string(reduced_homology_dim);
  if (!applicable) return out + ": not applicable";
  out += "; cycles to order " + std::to_string(order) + ": " + std::to_string(cycle_space_dim);
  for (const LiftStep& s : steps) {
    out += "\n  t^" + std::to_string(s.degree) + ": " + std::to_string(s.corrections) + " corrections" +
           (s.ok ? "" : " FAILED");
  }
  out += verified ? "\nlifting verified" : "\nlifting FAILED";
  return out;
}

}  // namespace degen
