#include "degen/sparse.hpp"

namespace degen {

void axpy(SparseVec& y, const Rational& a, const SparseVec& x) {
  if (sgn(a) == 0) return;
  for (const auto& [i, c] : x) {
    auto [it, inserted] = y.try_emplace(i, a * c);
    if (!inserted) {
      it->second += a * c;
      if (sgn(it->second) == 0) y.erase(it);
    }
  }
}

void VectorSpan::reduce(SparseVec& v) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const size_t pivot = it->first;
    const Rational c = it->second;
    axpy(v, -c, row->second);
    it = v.lower_bound(pivot);
  }
}

bool VectorSpan::add(SparseVec v) {
  reduce(v);
  if (v.empty()) return false;
  const size_t pivot = v.begin()->first;
  const Rational inv = 1 / v.begin()->second;
  for (auto& kv : v) kv.second *= inv;
  // keep rows fully reduced against the new pivot so later reductions stay short
  for (auto& [p, row] : rows_) {
    auto hit = row.find(pivot);
    if (hit != row.end()) {
      const Rational c = hit->second;
      axpy(row, -c, v);
    }
  }
  rows_.emplace(pivot, std::move(v));
  return true;
}

bool VectorSpan::contains(SparseVec v) const {
  reduce(v);
  return v.empty();
}

size_t span_rank(const std::vector<SparseVec>& vectors) {
  VectorSpan span;
  for (const auto& v : vectors) span.add(v);
  return span.dim();
}

}  // namespace degen
