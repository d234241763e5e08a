#include "degen/lie3.hpp"

#include <algorithm>
#include <map>

#include "degen/cohomology.hpp"

namespace degen {

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

}  // namespace

Rational canonical_alpha(const Rational& alpha) {
  if (sgn(alpha) == 0) throw Error(ErrorCode::invalid_argument, "L4(alpha) needs alpha != 0");
  if (abs(alpha) < 1) return Rational(1) / alpha;
  return alpha;
}

ClassLabel ClassLabel::simple(Tag t) {
  ClassLabel l;
  l.tag = t;
  return l;
}

ClassLabel ClassLabel::l4(const Rational& alpha) {
  ClassLabel l;
  l.tag = L4;
  l.alpha = canonical_alpha(alpha);
  l.kappa = Rational((1 + *l.alpha) * (1 + *l.alpha)) / *l.alpha;
  return l;
}

ClassLabel ClassLabel::l4_kappa(const Rational& kappa) {
  ClassLabel l;
  l.tag = L4;
  l.kappa = kappa;
  // alpha + 1/alpha = kappa - 2
  const Rational b = kappa - 2;
  if (auto s = rational_sqrt(b * b - 4)) l.alpha = canonical_alpha((b + *s) / 2);
  return l;
}

std::string ClassLabel::to_string() const {
  static const char* names[] = {"L0", "L1", "L2", "L3", "L4", "L5"};
  if (tag != L4) return names[tag];
  if (alpha) return "L4(alpha=" + degen::to_string(*alpha) + ", kappa=" + degen::to_string(*kappa) + ")";
  return "L4(kappa=" + degen::to_string(*kappa) + ")";
}

std::string ClassLabel::short_name() const {
  if (tag != L4) return to_string();
  if (alpha) return "L4(" + degen::to_string(*alpha) + ")";
  return "L4(kappa=" + degen::to_string(*kappa) + ")";
}

bool operator<(const ClassLabel& a, const ClassLabel& b) {
  if (a.tag != b.tag) return a.tag < b.tag;
  if (a.alpha.has_value() != b.alpha.has_value()) return a.alpha.has_value();
  if (a.alpha && *a.alpha != *b.alpha) return *a.alpha < *b.alpha;
  if (a.kappa.has_value() != b.kappa.has_value()) return b.kappa.has_value();
  if (a.kappa && *a.kappa != *b.kappa) return *a.kappa < *b.kappa;
  return false;
}

Algebra representative(ClassLabel::Tag tag, const Rational& alpha) {
  Algebra g(AlgebraKind::lie, 3);
  constexpr size_t x = 0, y = 1, z = 2;
  switch (tag) {
    case ClassLabel::L0: break;
    case ClassLabel::L1: g.set(x, y, z, 1); break;
    case ClassLabel::L2: g.set(x, y, y, 1); break;
    case ClassLabel::L3:
      g.set(x, y, y, 1);
      g.set(x, z, y, 1);
      g.set(x, z, z, 1);
      break;
    case ClassLabel::L4:
      if (sgn(alpha) == 0) throw Error(ErrorCode::invalid_argument, "L4(alpha) needs alpha != 0");
      g.set(x, y, y, 1);
      g.set(x, z, z, alpha);
      break;
    case ClassLabel::L5:
      g.set(x, y, y, 1);
      g.set(x, z, z, -1);
      g.set(y, z, x, 1);
      break;
  }
  return g;
}

Algebra representative(const ClassLabel& label) {
  if (label.tag != ClassLabel::L4) return representative(label.tag);
  if (label.alpha) return representative(ClassLabel::L4, *label.alpha);
  // companion form: ad x on span(y,z) has trace kappa and determinant kappa
  Algebra g(AlgebraKind::lie, 3);
  g.set(0, 1, 2, 1);
  g.set(0, 2, 1, -*label.kappa);
  g.set(0, 2, 2, *label.kappa);
  return g;
}

ClassLabel classify3(const Algebra& T) {
  if (T.kind() != AlgebraKind::lie || T.dim() != 3) {
    throw Error(ErrorCode::invalid_argument, "classify3 needs a 3-dimensional Lie algebra");
  }
  require_identities(T);
  const Matrix<Rational> pm = product_matrix(T);
  const RowEchelon<Rational> e = row_reduce(pm);
  const size_t r = e.pivot_cols.size();
  if (r == 0) return ClassLabel::simple(ClassLabel::L0);
  if (r == 3) return ClassLabel::simple(ClassLabel::L5);
  auto column = [&](size_t c) {
    std::vector<Rational> v(3);
    for (size_t k = 0; k < 3; ++k) v[k] = pm(k, c);
    return v;
  };
  auto unit = [](size_t i) {
    std::vector<Rational> v(3);
    v[i] = 1;
    return v;
  };
  if (r == 1) {
    const std::vector<Rational> d = column(e.pivot_cols[0]);
    for (size_t i = 0; i < 3; ++i)
      for (const Rational& c : T.multiply(unit(i), d))
        if (sgn(c) != 0) return ClassLabel::simple(ClassLabel::L2);
    return ClassLabel::simple(ClassLabel::L1);
  }
  const std::vector<Rational> d1 = column(e.pivot_cols[0]), d2 = column(e.pivot_cols[1]);
  Matrix<Rational> D(3, 2);
  for (size_t k = 0; k < 3; ++k) {
    D(k, 0) = d1[k];
    D(k, 1) = d2[k];
  }
  size_t x = 3;
  for (size_t i = 0; i < 3 && x == 3; ++i) {
    Matrix<Rational> test(3, 3);
    for (size_t k = 0; k < 3; ++k) {
      test(k, 0) = d1[k];
      test(k, 1) = d2[k];
      test(k, 2) = k == i ? 1 : 0;
    }
    if (rank(test) == 3) x = i;
  }
  Matrix<Rational> M(2, 2);
  for (size_t c = 0; c < 2; ++c) {
    const std::vector<Rational> image = T.multiply(unit(x), c == 0 ? d1 : d2);
    const std::vector<Rational> coords = solve(D, image);
    M(0, c) = coords[0];
    M(1, c) = coords[1];
  }
  const Rational tr = M(0, 0) + M(1, 1);
  const Rational dt = M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0);
  if (sgn(dt) == 0) {
    throw Error(ErrorCode::not_rank2_invertible, "ad(x) on the derived algebra is singular");
  }
  const Rational kappa = tr * tr / dt;
  if (kappa == 4) {
    const bool scalar = sgn(M(0, 1)) == 0 && sgn(M(1, 0)) == 0 && M(0, 0) == M(1, 1);
    return scalar ? ClassLabel::l4(1) : ClassLabel::simple(ClassLabel::L3);
  }
  return ClassLabel::l4_kappa(kappa);
}

std::vector<std::pair<ClassLabel, size_t>> h2_table() {
  const std::vector<ClassLabel> labels = {
      ClassLabel::simple(ClassLabel::L0), ClassLabel::simple(ClassLabel::L1), ClassLabel::simple(ClassLabel::L2),
      ClassLabel::simple(ClassLabel::L3), ClassLabel::l4(2),  ClassLabel::l4(3),
      ClassLabel::l4(-1),                 ClassLabel::l4(1),  ClassLabel::simple(ClassLabel::L5)};
  std::vector<std::pair<ClassLabel, size_t>> out;
  for (const auto& l : labels) out.emplace_back(l, lie_h_dim(representative(l), 2));
  return out;
}

namespace {

Algebra plus(Algebra a, const Algebra& b) {
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = i + 1; j < a.dim(); ++j)
      for (size_t k = 0; k < a.dim(); ++k) a.add_to(i, j, k, b(i, j, k));
  return a;
}

}  // namespace

std::vector<Algebra> h2_basis_cocycles(const ClassLabel& label) {
  const Algebra T = representative(label);
  constexpr size_t x = 0, y = 1, z = 2;
  auto w = [&](size_t a, size_t b, size_t out, const Rational& c = 1) { return wedge_cochain(T, a, b, out, c); };
  switch (label.tag) {
    case ClassLabel::L0: {
      std::vector<Algebra> all;
      for (size_t a = 0; a < 3; ++a)
        for (size_t b = a + 1; b < 3; ++b)
          for (size_t k = 0; k < 3; ++k) all.push_back(w(a, b, k));
      return all;
    }
    case ClassLabel::L1:
      return {w(y, x, x), w(y, x, y), w(z, x, y), w(z, y, x), plus(w(z, x, x), w(z, y, y, -1))};
    case ClassLabel::L2: return {w(z, x, z)};
    case ClassLabel::L3: return {w(y, x, z)};
    case ClassLabel::L4:
      if (label.alpha && *label.alpha == -1) return {w(z, x, z), w(z, y, x)};
      if (label.alpha && *label.alpha == 1) return {w(y, x, z), w(z, x, y), w(z, x, z)};
      return {w(z, x, z)};
    case ClassLabel::L5: return {};
  }
  return {};
}

RigidityCertificate l2_rigidity(const DeformationFamily& D) {
  const Algebra& base = D.base();
  if (base.kind() != AlgebraKind::lie || base.dim() != 3 || !(base == representative(ClassLabel::L2))) {
    throw Error(ErrorCode::invalid_argument, "l2_rigidity needs a family over the L2 representative");
  }
  int n = 0;
  for (int i = 1; i <= D.order() && n == 0; ++i)
    if (!D.map(i).is_zero_tensor()) n = i;
  if (n == 0) throw Error(ErrorCode::trivial, "deformation is trivial: every F_i vanishes");
  constexpr size_t x = 0, y = 1, z = 2;
  const Algebra& Fn = D.map(n);
  const Rational lambda = Fn(z, x, z);
  if (!(Fn == wedge_cochain(base, z, x, z, lambda)) || sgn(lambda) == 0) {
    throw Error(ErrorCode::wrong_leading_term, "leading term F_" + std::to_string(n) +
                                                   " is not a nonzero multiple of z^ ^ x^ (x) z");
  }
  if (D.order() < n + 1) {
    throw Error(ErrorCode::insufficient_order, "order " + std::to_string(D.order()) + " < n+1 = " +
                                                   std::to_string(n + 1));
  }
  const auto report = verify_deformation(D);
  if (!report.passed) throw Error(ErrorCode::not_jacobi, "family fails the Jacobi identity modulo t^(M+1)");

  RigidityCertificate cert;
  cert.lambda = lambda;
  cert.n = n;
  cert.order = D.order();
  const StructureTensor<TruncSeries> S = D.as_series();
  const int M = D.order();
  const TruncSeries lam_tn = TruncSeries::monomial(lambda, n, M);
  const auto down = [n](const TruncSeries& s) { return s.shifted_down(n + 1); };
  const auto up = [n](const TruncSeries& s) { return s.shifted_up(n + 1); };

  // [y,x] = t^{n+1} f1 x + (-1 + t^{n+1} f2) y + t^{n+1} f3 z, and similarly
  const TruncSeries f1 = down(S(y, x, x)), f2 = down(S(y, x, y) + 1), f3 = down(S(y, x, z));
  const TruncSeries g1 = down(S(z, x, x)), g2 = down(S(z, x, y)), g3 = down(S(z, x, z) - lam_tn);
  const TruncSeries h1 = down(S(z, y, x)), h2 = down(S(z, y, y)), h3 = down(S(z, y, z));

  // (a)
  cert.minor = S(y, x, y) * S(z, x, z) - S(z, x, y) * S(y, x, z);
  cert.rank_lower_bound_2 = cert.minor.valuation() == n && cert.minor.coeff(n) == -lambda;

  // (b) ad(x) on V/Kx: columns -[y,x] and -[z,x] in the basis y, z
  const TruncSeries a11 = -S(y, x, y), a21 = -S(y, x, z), a12 = -S(z, x, y), a22 = -S(z, x, z);
  const TruncSeries tr = a11 + a22;
  const TruncSeries det = a11 * a22 - a12 * a21;
  cert.trace_valuation = tr.valuation();
  cert.det_valuation = det.valuation();
  cert.rank2_contradiction = n >= 1 && cert.trace_valuation == 0 && cert.det_valuation >= n;

  // (c) solve the constraints for h1, g1, h3; each step fixes n+1 more orders
  const int K = M - n - 1;
  const TruncSeries one(1);
  const TruncSeries lam_tn_K = TruncSeries::monomial(lambda, n, K);
  const TruncSeries t_n1 = TruncSeries::monomial(1, n + 1, K);
  const TruncSeries inv_a = series_invert(TruncSeries(std::vector<Rational>{1}, K) - t_n1 * f2);
  const TruncSeries inv_b = series_invert(TruncSeries(std::vector<Rational>{1}, K) - lam_tn_K - t_n1 * (f2 + g3));
  TruncSeries sh1({}, K), sg1({}, K), sh3({}, K);
  for (int step = 0; step <= K + 1; ++step) {
    const TruncSeries ng1 = (-(lam_tn_K * h2) + t_n1 * (g2 * sh3 - f1 * g2 - g3 * h2)) * inv_a;
    const TruncSeries nh3 = (lam_tn_K * f1 - t_n1 * (f3 * sg1 - f1 * g3 + f3 * h2)) * inv_a;
    const TruncSeries nh1 = -(t_n1 * (f1 * h2 + sg1 * sh3)) * inv_b;
    const bool stable = ng1 == sg1 && nh3 == sh3 && nh1 == sh1;
    sg1 = ng1;
    sh3 = nh3;
    sh1 = nh1;
    if (stable) break;
  }
  cert.h1 = sh1;
  cert.g1 = sg1;
  cert.h3 = sh3;
  cert.constraints_match_family = sh1 == h1 && sg1 == g1 && sh3 == h3;
  Matrix<TruncSeries> rows(3, 3);
  for (size_t k = 0; k < 3; ++k) rows(0, k) = S(y, x, k);
  rows(1, 0) = up(sg1);
  rows(1, 1) = S(z, x, y);
  rows(1, 2) = S(z, x, z);
  rows(2, 0) = up(sh1);
  rows(2, 1) = up(h2);
  rows(2, 2) = up(sh3);
  cert.bracket_det = det_expand(rows);
  cert.rank3_det_zero = cert.constraints_match_family && cert.bracket_det.is_zero() && cert.bracket_det.order() >= M;
  (void)one;
  return cert;
}

std::vector<ClassLabel> diagram_labels(const std::vector<Rational>& alphas) {
  std::vector<ClassLabel> labels = {ClassLabel::simple(ClassLabel::L0), ClassLabel::simple(ClassLabel::L1),
                                    ClassLabel::simple(ClassLabel::L2), ClassLabel::simple(ClassLabel::L3),
                                    ClassLabel::simple(ClassLabel::L5)};
  std::vector<Rational> all = {-1, 1, 2, 3};
  all.insert(all.end(), alphas.begin(), alphas.end());
  for (const Rational& a : all) labels.push_back(ClassLabel::l4(a));
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

namespace {

using RF = RationalFunction;

// Witness from new basis vectors given as coordinate columns.
Witness basis_witness(std::string id, const std::vector<std::vector<RF>>& columns) {
  Matrix<RF> P(3, 3);
  for (size_t c = 0; c < 3; ++c)
    for (size_t r = 0; r < 3; ++r) P(r, c) = columns[c][r];
  return Witness::from_basis(P, std::move(id));
}

}  // namespace

std::vector<LibraryWitness> witness_library(const std::vector<Rational>& alphas) {
  const RF t(LaurentPoly::t(1));
  const RF t2(LaurentPoly::t(2));
  const std::vector<ClassLabel> labels = diagram_labels(alphas);
  const ClassLabel L0 = ClassLabel::simple(ClassLabel::L0), L1 = ClassLabel::simple(ClassLabel::L1),
                   L2 = ClassLabel::simple(ClassLabel::L2), L3 = ClassLabel::simple(ClassLabel::L3),
                   L5 = ClassLabel::simple(ClassLabel::L5);
  std::vector<LibraryWitness> lib;
  for (const auto& l : labels) {
    lib.push_back({"identity-" + l.short_name(), l, l, Witness::identity(3, "identity-" + l.short_name())});
    if (l.tag != ClassLabel::L0) {
      lib.push_back({"scaling-" + l.short_name(), l, L0, Witness::scaling(3, "scaling-" + l.short_name())});
    }
  }
  lib.push_back({"L5-L1", L5, L1, basis_witness("L5-L1", {{0, t, 0}, {0, 0, t}, {t2, 0, 0}})});
  lib.push_back({"L5-L4(-1)", L5, ClassLabel::l4(-1), basis_witness("L5-L4(-1)", {{1, 0, 0}, {0, t, 0}, {0, 0, 1}})});
  lib.push_back({"L3-L4(1)", L3, ClassLabel::l4(1), basis_witness("L3-L4(1)", {{1, 0, 0}, {0, 1, 0}, {0, 0, t}})});
  lib.push_back({"L3-L1", L3, L1, basis_witness("L3-L1", {{t, 0, 0}, {0, 0, 1}, {0, t, t}})});
  lib.push_back({"L2-L1", L2, L1, basis_witness("L2-L1", {{t, 0, 0}, {0, 1, 1}, {0, t, 0}})});
  for (const auto& l : labels) {
    if (l.tag != ClassLabel::L4 || !l.alpha || *l.alpha == 1) continue;
    const RF a(*l.alpha);
    const std::string id = l.short_name() + "-L1";
    lib.push_back({id, l, L1, basis_witness(id, {{t, 0, 0}, {0, 1, 1}, {0, t, t * a}})});
  }
  return lib;
}

size_t Diagram::inconclusive_count() const {
  return static_cast<size_t>(std::count_if(entries.begin(), entries.end(),
                                           [](const DiagramEntry& e) { return e.kind == DiagramEntry::inconclusive; }));
}

Diagram degeneration_diagram(const std::vector<Rational>& alphas) {
  Diagram out;
  out.labels = diagram_labels(alphas);
  std::map<std::pair<std::string, std::string>, const LibraryWitness*> by_pair;
  const std::vector<LibraryWitness> lib = witness_library(alphas);
  for (const auto& w : lib) by_pair.emplace(std::make_pair(w.from.short_name(), w.to.short_name()), &w);

  // one sample normalized family over L2 (n = 1, lambda = 1)
  const Algebra l2 = representative(ClassLabel::L2);
  const DeformationFamily sample(l2, {wedge_cochain(l2, 2, 0, 2)}, 6);
  const bool rigidity_ok = l2_rigidity(sample).complete();

  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& a : out.labels)
    for (const auto& b : out.labels) {
      DiagramEntry e;
      e.from = a;
      e.to = b;
      const Algebra A = representative(a), B = representative(b);
      auto hit = by_pair.find({a.short_name(), b.short_name()});
      if (hit != by_pair.end()) {
        const WitnessVerdict v = verify_witness(A, B, hit->second->witness);
        if (v.accepted) {
          e.kind = DiagramEntry::edge;
          e.witness_id = hit->second->id;
          edges.emplace_back(a.short_name(), b.short_name());
          out.entries.push_back(e);
          continue;
        }
        e.note = "bundled witness rejected";
      }
      const ObstructionReport report = obstruction_battery(A, B);
      if (const ObstructionTest* t = report.decisive()) {
        e.kind = DiagramEntry::refuted;
        e.test = t->name;
        e.note = t->note;
        if (b.tag == ClassLabel::L2 && a.tag != ClassLabel::L2 && rigidity_ok) {
          e.note += "; l2-rigidity certificate verified";
        }
      }
      out.entries.push_back(e);
    }
  out.audit = partial_order_audit(edges);
  return out;
}

}  // namespace degen
