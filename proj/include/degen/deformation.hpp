#pragma once

#include <optional>
#include <string>
#include <vector>

#include "degen/algebra.hpp"

namespace degen {

/// [v,w]_t = [v,w] + F_1(v,w) t + ... + F_M(v,w) t^M, known modulo t^{M+1}.
/// Each F_i has the shape of the base (no unit); for graded bases the shape
/// forces every F_i to have internal degree 0.
class DeformationFamily {
 public:
  DeformationFamily(Algebra base, std::vector<Algebra> maps, int order);

  /// Splits a series tensor into base = coefficient of t^0 and F_i = t^i.
  static DeformationFamily from_series(const StructureTensor<TruncSeries>& T);
  /// All F_i = 0.
  static DeformationFamily trivial(const Algebra& base, int order);

  const Algebra& base() const { return base_; }
  int order() const { return order_; }
  /// F_i for 1 <= i <= order.
  const Algebra& map(int i) const { return maps_.at(static_cast<size_t>(i - 1)); }
  const std::vector<Algebra>& maps() const { return maps_; }
  bool is_trivial() const;

  StructureTensor<TruncSeries> as_series() const;

 private:
  Algebra base_;
  std::vector<Algebra> maps_;
  int order_;
};

/// Identities of the t-expanded operation, coefficientwise through t^M.
IdentityReport<TruncSeries> verify_deformation(const DeformationFamily& D);

struct LeadingAnalysis {
  int n = 0;
  bool is_cocycle = false;
  bool class_nonzero = false;
  /// False when the family already fails its identities; with a leading term
  /// that is not a cocycle this is always the case (the t^n coefficient of
  /// the identity is d F_n).
  bool identities_hold = false;
};

/// Throws Trivial when every F_i vanishes.
LeadingAnalysis leading_analysis(const DeformationFamily& D);

struct FiberInvariants {
  int order = 0;
  /// valuations of the columns [e_i,e_j] (i<j) or e_i e_j, kInfinity for
  /// entries that vanish modulo t^{M+1}; rows are output components
  std::vector<std::vector<int>> bracket_matrix_valuations;
  /// valuations of the successive pivots of a minimal-valuation elimination
  /// (the invariant factors of the bracket matrix over K[[t]])
  std::vector<int> pivot_valuations;
  size_t certified_rank_lower_bound = 0;
  /// True when the remaining block is zero modulo t^{M+1}, so no larger rank
  /// can be certified at this order (InsufficientOrder for higher ranks).
  bool higher_rank_undecided = false;
  /// Dimension-3 lie families: trace and determinant valuations of ad(e_0)
  /// acting on V/K e_0 in the basis e_1, e_2.
  std::optional<int> ad_trace_valuation;
  std::optional<int> ad_det_valuation;
};

FiberInvariants fiber_invariants(const DeformationFamily& D);

std::string to_string_valuation(int v, int order);

}  // namespace degen
