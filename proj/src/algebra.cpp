#include "degen/algebra.hpp"

namespace degen {

const char* kind_name(AlgebraKind kind) noexcept {
  switch (kind) {
    case AlgebraKind::lie: return "lie";
    case AlgebraKind::associative: return "associative";
    case AlgebraKind::graded_associative: return "graded_associative";
  }
  return "?";
}

AlgebraKind parse_kind(std::string_view name) {
  if (name == "lie") return AlgebraKind::lie;
  if (name == "associative") return AlgebraKind::associative;
  if (name == "graded_associative") return AlgebraKind::graded_associative;
  throw Error(ErrorCode::parse, "unknown algebra kind '" + std::string(name) + "'");
}

std::vector<std::string> default_basis_names(size_t dim) {
  if (dim == 3) return {"x", "y", "z"};
  std::vector<std::string> names;
  for (size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

size_t derivation_dim(const Algebra& T, bool degree_preserving) {
  const size_t n = T.dim();
  auto allowed = [&](size_t a, size_t b) {
    return !degree_preserving || T.degrees().empty() || T.degrees()[a] == T.degrees()[b];
  };
  size_t unknowns = 0;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      if (allowed(a, b)) ++unknowns;
  const bool lie = T.kind() == AlgebraKind::lie;
  VectorSpan span;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = lie ? i + 1 : 0; j < n; ++j)
      for (size_t m = 0; m < n; ++m) {
        // sum_c c_ij^c D_mc - sum_a D_ai c_aj^m - sum_b D_bj c_ib^m = 0
        SparseVec eq;
        auto add = [&](size_t a, size_t b, const Rational& c) {
          if (sgn(c) == 0 || !allowed(a, b)) return;
          SparseVec term{{a * n + b, c}};
          axpy(eq, 1, term);
        };
        for (size_t c = 0; c < n; ++c) add(m, c, T(i, j, c));
        for (size_t a = 0; a < n; ++a) add(a, i, -T(a, j, m));
        for (size_t b = 0; b < n; ++b) add(b, j, -T(i, b, m));
        span.add(std::move(eq));
      }
  return unknowns - span.dim();
}

}  // namespace degen
