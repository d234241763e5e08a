#include "degen/matrix.hpp"

namespace degen {

LocalRank local_rank(Matrix<TruncSeries> m) {
  LocalRank out;
  std::vector<bool> row_used(m.rows(), false), col_used(m.cols(), false);
  for (;;) {
    int best = kInfinity;
    size_t pr = 0, pc = 0;
    bool any_inexact = false;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (row_used[i]) continue;
      for (size_t j = 0; j < m.cols(); ++j) {
        if (col_used[j]) continue;
        const TruncSeries& e = m(i, j);
        if (!e.is_exact()) any_inexact = true;
        const int v = e.valuation();
        if (v < best) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    }
    if (best == kInfinity) {
      out.exhausted_precision = any_inexact;
      return out;
    }
    out.pivot_valuations.push_back(best);
    row_used[pr] = true;
    col_used[pc] = true;
    // Every remaining entry has valuation >= best, so dividing the products
    // by the pivot loses no precision when the products are sharp.
    const TruncSeries unit_inv = series_invert(m(pr, pc).shifted_down(best));
    for (size_t i = 0; i < m.rows(); ++i) {
      if (row_used[i] || m(i, pc).is_zero()) continue;
      const TruncSeries factor = mul_sharp(m(i, pc), unit_inv);
      for (size_t j = 0; j < m.cols(); ++j) {
        if (col_used[j] && j != pc) continue;
        TruncSeries prod = mul_sharp(factor, m(pr, j));
        m(i, j) -= prod.shifted_down(best);
      }
      m(i, pc) = TruncSeries({}, m(i, pc).order());
    }
  }
}

}  // namespace degen
