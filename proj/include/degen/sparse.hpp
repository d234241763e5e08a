#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "degen/rational.hpp"

namespace degen {

/// Sparse rational vector: index -> nonzero coefficient.
using SparseVec = std::map<size_t, Rational>;

void axpy(SparseVec& y, const Rational& a, const SparseVec& x);

/// Incrementally maintained echelon basis of a subspace of Q^ambient. Used
/// for ranks of the large, very sparse differentials of the cochain and bar
/// complexes.
class VectorSpan {
 public:
  /// Adds v to the span; returns true when the dimension grew.
  bool add(SparseVec v);
  bool contains(SparseVec v) const;
  size_t dim() const { return rows_.size(); }

 private:
  void reduce(SparseVec& v) const;

  // keyed by pivot index; each row has pivot coefficient 1 and no entries
  // below its pivot
  std::map<size_t, SparseVec> rows_;
};

size_t span_rank(const std::vector<SparseVec>& vectors);

}  // namespace degen
