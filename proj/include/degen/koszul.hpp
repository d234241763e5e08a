#pragma once

#include <optional>
#include <string>
#include <vector>

#include "degen/algebra.hpp"
#include "degen/degeneration.hpp"
#include "degen/matrix.hpp"
#include "degen/series.hpp"
#include "degen/sparse.hpp"

namespace degen {

struct GenerationCheck {
  bool generated = true;
  std::optional<int> failing_degree;
};

/// Whether products of degree-1 elements span every nonzero A_j.
GenerationCheck check_generated_degree_one(const Algebra& A);

/// Connected graded algebra: A_0 = K.1, generated by A_1.
class GradedAlgebra {
 public:
  /// Throws NotGenerated, NoUnit, NotAssociative or InvalidArgument.
  explicit GradedAlgebra(Algebra A);

  const Algebra& algebra() const { return A_; }
  /// Basis indices of the augmentation ideal (every basis element but 1).
  const std::vector<size_t>& ideal_basis() const { return ideal_; }
  int degree(size_t basis_index) const { return A_.degrees()[basis_index]; }

 private:
  Algebra A_;
  std::vector<size_t> ideal_;
};

/// dims[i][j] = dim Tor^A_{i,j}(K,K) for i <= s, j <= d.
struct TorTable {
  int s = 0;
  int d = 0;
  std::vector<std::vector<size_t>> dims;

  size_t at(int i, int j) const;
};

/// Reduced bar complex B_{i,j}: words of length i in the augmentation ideal
/// basis with total degree j. d(a_1|...|a_i) = sum_{k=1}^{i-1} (-1)^k
/// (..|a_k a_{k+1}|..). bar_differential returns the images of the words of
/// B_{i,j} in B_{i-1,j}, in the order used by bar_dim's enumeration.
size_t bar_dim(const GradedAlgebra& A, int i, int j);
std::vector<SparseVec> bar_differential(const GradedAlgebra& A, int i, int j);

/// Homology of the reduced bar complex, one (i, j) cell at a time.
TorTable tor_dims(const GradedAlgebra& A, int s, int d);

/// n(2i) = iN, n(2i+1) = iN + 1.
int jump(int i, int N);

struct KoszulVerdict {
  enum Kind { koszul_up_to_bounds, not_koszul, bounds_insufficient } kind = koszul_up_to_bounds;
  int N = 2;
  int s = 0;
  int d = 0;
  /// first cell (i, j) with Tor_{i,j} != 0 and j != n(i)
  int cell_i = -1;
  int cell_j = -1;

  std::string to_string() const;
};

const char* verdict_name(KoszulVerdict::Kind k) noexcept;

/// Verdict read off a table (cells scanned by i, then j).
KoszulVerdict koszul_verdict(const TorTable& table, int N);

/// d defaults to jump(s, N).
KoszulVerdict is_N_koszul(const GradedAlgebra& A, int N, int s = 5, std::optional<int> d = std::nullopt);

struct TransferReport {
  bool violation = false;
  KoszulVerdict a;
  KoszulVerdict b;
  TorTable tor_a;
  TorTable tor_b;
  /// cells where dims_B < dims_A (Betti numbers can only grow in the limit)
  std::vector<std::pair<int, int>> semicontinuity_failures;

  std::string to_string() const;
};

/// Consistency of the verdicts for A degenerating to B, from their tables.
TransferReport transfer_from_tables(TorTable tor_a, TorTable tor_b, int N);

/// Checks the witness, then compares the N-Koszul verdicts of A and B: a
/// Koszul limit B with a non-Koszul A is a VIOLATION. Throws WitnessRejected.
TransferReport koszul_transfer_check(const GradedAlgebra& A, const GradedAlgebra& B, const Witness& g, int N,
                                     int s = 5, std::optional<int> d = std::nullopt);

/// Complex of free K[[t]]-modules P_m -> ... -> P_0 known modulo t^{M+1}.
/// differential(k) : P_k -> P_{k-1} is a ranks[k-1] x ranks[k] matrix.
class FreeComplex {
 public:
  /// diffs[k-1] is d_k. Entries are truncated to order M. Throws NotAComplex
  /// when some d_{k-1} d_k is nonzero modulo t^{M+1}.
  FreeComplex(std::vector<size_t> ranks, std::vector<Matrix<TruncSeries>> diffs, int order);

  size_t length() const { return ranks_.size(); }
  size_t rank(size_t k) const { return k < ranks_.size() ? ranks_[k] : 0; }
  int order() const { return order_; }
  /// Zero matrix outside 1..length()-1.
  Matrix<TruncSeries> differential(size_t k) const;
  /// d_k at t = 0.
  Matrix<Rational> reduced(size_t k) const;

 private:
  std::vector<size_t> ranks_;
  std::vector<Matrix<TruncSeries>> diffs_;
  int order_;
};

struct LiftStep {
  int degree = 0;
  /// cycles whose residual needed a correction t^degree w at this step
  size_t corrections = 0;
  bool ok = true;
};

struct LiftReport {
  size_t i = 0;
  int order = 0;
  size_t reduced_homology_dim = 0;
  bool applicable = false;
  size_t cycle_space_dim = 0;
  std::vector<LiftStep> steps;
  bool verified = false;

  std::string to_string() const;
};

/// When H_i(P/tP) = 0, lifts every cycle of P_i (modulo t^{M+1}) to a
/// boundary degree by degree and checks d x = y modulo t^{M+1}.
LiftReport lift_check(const FreeComplex& P, size_t i);

}  // namespace degen
