#include "degen/deformation.hpp"

#include "degen/cohomology.hpp"

namespace degen {

DeformationFamily::DeformationFamily(Algebra base, std::vector<Algebra> maps, int order)
    : base_(std::move(base)), maps_(std::move(maps)), order_(order) {
  if (order_ < 1) throw Error(ErrorCode::invalid_argument, "deformation order must be at least 1");
  if (maps_.size() > static_cast<size_t>(order_)) {
    throw Error(ErrorCode::invalid_argument, "more maps F_i than the truncation order");
  }
  while (maps_.size() < static_cast<size_t>(order_)) maps_.push_back(base_.cochain_shape());
  for (const Algebra& F : maps_) {
    if (F.dim() != base_.dim() || F.kind() != base_.kind()) {
      throw Error(ErrorCode::dimension_mismatch, "deformation map shape differs from the base");
    }
    if (F.graded() && F.degrees() != base_.degrees()) {
      throw Error(ErrorCode::degree_mixing, "deformation map grading differs from the base");
    }
    if (F.unit()) throw Error(ErrorCode::invalid_argument, "deformation maps carry no unit");
    F.validate();
  }
}

DeformationFamily DeformationFamily::from_series(const StructureTensor<TruncSeries>& T) {
  int order = kInfinity;
  const size_t n = T.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) order = std::min(order, T(i, j, k).order());
  if (order == kInfinity) throw Error(ErrorCode::invalid_argument, "series tensor needs a finite order");
  Algebra base = T.map([](const TruncSeries& s) { return s.coeff(0); });
  std::vector<Algebra> maps;
  for (int d = 1; d <= order; ++d) {
    StructureTensor<Rational> F = T.map([d](const TruncSeries& s) { return s.coeff(d); });
    F.set_unit(std::nullopt);
    maps.push_back(std::move(F));
  }
  return DeformationFamily(std::move(base), std::move(maps), order);
}

DeformationFamily DeformationFamily::trivial(const Algebra& base, int order) {
  return DeformationFamily(base, {}, order);
}

bool DeformationFamily::is_trivial() const {
  for (const Algebra& F : maps_)
    if (!F.is_zero_tensor()) return false;
  return true;
}

StructureTensor<TruncSeries> DeformationFamily::as_series() const {
  const size_t n = base_.dim();
  StructureTensor<TruncSeries> T(base_.kind(), n, base_.degrees(), base_.unit(), base_.basis());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        std::vector<Rational> c(static_cast<size_t>(order_) + 1);
        c[0] = base_(i, j, k);
        for (int d = 1; d <= order_; ++d) c[static_cast<size_t>(d)] = map(d)(i, j, k);
        T.set_unchecked(i, j, k, TruncSeries(std::move(c), order_));
      }
  return T;
}

IdentityReport<TruncSeries> verify_deformation(const DeformationFamily& D) {
  return check_identities(D.as_series());
}

LeadingAnalysis leading_analysis(const DeformationFamily& D) {
  LeadingAnalysis out;
  for (int i = 1; i <= D.order(); ++i) {
    if (!D.map(i).is_zero_tensor()) {
      out.n = i;
      break;
    }
  }
  if (out.n == 0) throw Error(ErrorCode::trivial, "deformation is trivial: every F_i vanishes");
  const Algebra& F = D.map(out.n);
  out.is_cocycle = is_two_cocycle(F, D.base());
  out.class_nonzero = out.is_cocycle && class_nonzero(F, D.base());
  out.identities_hold = verify_deformation(D).passed;
  return out;
}

FiberInvariants fiber_invariants(const DeformationFamily& D) {
  FiberInvariants out;
  out.order = D.order();
  const StructureTensor<TruncSeries> T = D.as_series();
  const Matrix<TruncSeries> m = product_matrix(T);
  out.bracket_matrix_valuations.assign(m.rows(), std::vector<int>(m.cols()));
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c) out.bracket_matrix_valuations[r][c] = m(r, c).valuation();
  const LocalRank lr = local_rank(m);
  out.pivot_valuations = lr.pivot_valuations;
  out.certified_rank_lower_bound = lr.certified_rank();
  out.higher_rank_undecided =
      lr.exhausted_precision && out.certified_rank_lower_bound < std::min(m.rows(), m.cols());
  if (T.kind() == AlgebraKind::lie && T.dim() == 3) {
    const TruncSeries a = T(0, 1, 1), b = T(0, 2, 1), c = T(0, 1, 2), d = T(0, 2, 2);
    out.ad_trace_valuation = (a + d).valuation();
    out.ad_det_valuation = (a * d - b * c).valuation();
  }
  return out;
}

std::string to_string_valuation(int v, int order) {
  if (v == kInfinity) return ">" + std::to_string(order);
  return std::to_string(v);
}

}  // namespace degen
