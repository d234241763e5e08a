#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "degen/algebra.hpp"
#include "degen/sparse.hpp"

namespace degen {

/// Finite cochain complex over Q. differentials[i] maps C^i to C^{i+1} and
/// is stored by columns (images of the basis cochains of C^i). Each basis
/// cochain carries an internal degree; the differentials preserve it.
class CochainComplex {
 public:
  CochainComplex(std::vector<size_t> spaces, std::vector<std::vector<SparseVec>> differentials,
                 std::vector<std::vector<int>> internal_degrees);

  size_t top_degree() const { return spaces_.size() - 1; }
  size_t space_dim(size_t i) const { return i < spaces_.size() ? spaces_[i] : 0; }
  const std::vector<SparseVec>& differential(size_t i) const { return differentials_.at(i); }
  /// Dense copy of d_i.
  Matrix<Rational> differential_matrix(size_t i) const;

  size_t rank(size_t i) const;
  /// dim H^i = dim C^i - rank d_i - rank d_{i-1}; needs i < top_degree().
  size_t h_dim(size_t i) const;
  /// Same, restricted to cochains of one internal degree.
  size_t h_dim(size_t i, int internal_degree) const;
  size_t space_dim(size_t i, int internal_degree) const;

  /// Image of an arbitrary cochain under d_i.
  SparseVec apply(size_t i, const SparseVec& cochain) const;
  bool is_coboundary(size_t i, const SparseVec& cochain) const;

 private:
  size_t rank_restricted(size_t i, std::optional<int> internal_degree) const;

  std::vector<size_t> spaces_;
  std::vector<std::vector<SparseVec>> differentials_;
  std::vector<std::vector<int>> internal_degrees_;
  mutable std::vector<std::optional<size_t>> rank_cache_;
};

/// Chevalley-Eilenberg complex C^i = Hom(Lambda^i g, g), i = 0..max_degree+1
/// (truncated at dim g). Basis cochains are indexed by (lexicographically
/// ordered increasing index tuple, output index).
CochainComplex ce_complex(const Algebra& g, size_t max_degree);

/// Hochschild complex C^i = Hom(A^{(x)i}, A) on the full (non-normalized)
/// tensor spaces, i = 0..max_degree+1.
CochainComplex hochschild_complex(const Algebra& A, size_t max_degree);

struct CohomologyCaps {
  /// Largest supported cohomological degree.
  size_t max_degree = 4;
  /// Hochschild: largest dim allowed; when unset, n^{i+2} <= 4^5 is required
  /// (so n <= 4 for H^3).
  std::optional<size_t> max_dim;
};

size_t lie_h_dim(const Algebra& g, size_t i, const CohomologyCaps& caps = {});
size_t hochschild_h_dim(const Algebra& A, size_t i, const CohomologyCaps& caps = {});
/// Internal-degree part of HH^i for a graded algebra.
size_t hochschild_h_dim(const Algebra& A, size_t i, int internal_degree, const CohomologyCaps& caps = {});
/// Internal-degree-0 part of HH^2; requires generation in degree 1.
size_t graded_h2_dim(const Algebra& A);

/// Coordinates of a degree-2 cochain, given as a tensor of the algebra's
/// shape, in the basis of C^2 used by ce_complex / hochschild_complex.
SparseVec cochain2_coordinates(const Algebra& F);
/// Coordinates of a degree-1 cochain D (D e_b = sum_a D(a,b) e_a).
SparseVec cochain1_coordinates(const Matrix<Rational>& D);
/// The degree-2 cochain d_1 D as a tensor of T's shape.
Algebra coboundary_of(const Algebra& T, const Matrix<Rational>& D);

bool is_two_cocycle(const Algebra& F, const Algebra& T);
/// True when F is not a coboundary. Assumes F is a cocycle.
bool class_nonzero(const Algebra& F, const Algebra& T);
/// Number of independent classes among the given cocycles (rank modulo
/// coboundaries).
size_t classes_rank(const std::vector<Algebra>& cocycles, const Algebra& T);

/// e_k-valued wedge of dual basis forms: (a^ ^ b^) (x) e_out as a lie cochain,
/// with (a^ ^ b^)(u,v) = a^(u) b^(v) - a^(v) b^(u).
Algebra wedge_cochain(const Algebra& T, size_t a, size_t b, size_t out, const Rational& coeff = 1);

/// First degree j with A_j not spanned by products of degree-1 elements, or
/// nullopt when A is generated in degree 1.
std::optional<int> first_ungenerated_degree(const Algebra& A);

}  // namespace degen
