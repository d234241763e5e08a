#include "degen/degeneration.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "degen/cohomology.hpp"
#include "degen/lie3.hpp"

namespace degen {

Witness Witness::from_basis(const Matrix<RationalFunction>& P, std::string id) {
  return Witness{std::move(id), inverse(P)};
}

Witness Witness::identity(size_t n, std::string id) {
  return Witness{std::move(id), Matrix<RationalFunction>::identity(n)};
}

Witness Witness::scaling(size_t n, std::string id) {
  Matrix<RationalFunction> g(n, n);
  for (size_t i = 0; i < n; ++i) g(i, i) = RationalFunction(LaurentPoly::t(-1));
  return Witness{std::move(id), std::move(g)};
}

namespace {

std::string entry_name(const Algebra& A, size_t i, size_t j, size_t k) {
  const auto& b = A.basis();
  return "(" + b[i] + "," + b[j] + ";" + b[k] + ")";
}

void require_compatible(const Algebra& A, const Algebra& B) {
  if (A.dim() != B.dim()) throw Error(ErrorCode::dimension_mismatch, "algebras have different dimensions");
  if (A.kind() != B.kind()) throw Error(ErrorCode::dimension_mismatch, "algebras have different kinds");
  if (A.graded() && A.degrees() != B.degrees()) {
    throw Error(ErrorCode::dimension_mismatch, "graded algebras have different degree vectors");
  }
}

}  // namespace

WitnessVerdict verify_witness(const Algebra& A, const Algebra& B, const Witness& w) {
  require_compatible(A, B);
  require_identities(A);
  require_identities(B);
  const size_t n = A.dim();
  if (w.g.rows() != n || w.g.cols() != n) {
    throw Error(ErrorCode::dimension_mismatch, "witness matrix size differs from algebra dimension");
  }
  WitnessVerdict out;
  const auto Arf = A.map([](const Rational& c) { return RationalFunction(c); });
  out.conjugated = act(w.g, Arf);
  const auto& T = out.conjugated;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        const int v = T(i, j, k).valuation();
        if (v < 0) {
          out.diagnostics.push_back("coefficient " + entry_name(A, i, j, k) + " = " + to_string(T(i, j, k)) +
                                    " has valuation " + std::to_string(v));
        }
      }
  if (!out.diagnostics.empty()) {
    out.failure = "negative-valuation";
    return out;
  }
  const Algebra limit = specialize(T);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        if (limit(i, j, k) != B(i, j, k)) {
          out.diagnostics.push_back("limit " + entry_name(A, i, j, k) + " = " + to_string(limit(i, j, k)) +
                                    ", expected " + to_string(B(i, j, k)));
        }
  if (!out.diagnostics.empty()) {
    out.failure = "limit-mismatch";
    return out;
  }
  out.accepted = true;
  return out;
}

DeformationFamily witness_to_deformation(const Algebra& A, const Algebra& B, const Witness& g, int order) {
  const WitnessVerdict v = verify_witness(A, B, g);
  if (!v.accepted) {
    std::string msg = "witness rejected (" + v.failure + ")";
    if (!v.diagnostics.empty()) msg += ": " + v.diagnostics.front();
    throw Error(ErrorCode::witness_rejected, msg);
  }
  const auto S = v.conjugated.map([order](const RationalFunction& f) { return TruncSeries::from(f, order); });
  std::vector<Algebra> maps;
  for (int d = 1; d <= order; ++d) {
    Algebra F = B.cochain_shape();
    for (size_t i = 0; i < B.dim(); ++i)
      for (size_t j = 0; j < B.dim(); ++j)
        for (size_t k = 0; k < B.dim(); ++k) F.set_unchecked(i, j, k, S(i, j, k).coeff(d));
    maps.push_back(std::move(F));
  }
  return DeformationFamily(B, std::move(maps), order);
}

const char* status_name(ObstructionStatus s) noexcept {
  switch (s) {
    case ObstructionStatus::pass: return "pass";
    case ObstructionStatus::refute: return "refute";
    case ObstructionStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

bool ObstructionReport::refuted() const { return decisive() != nullptr; }

const ObstructionTest* ObstructionReport::decisive() const {
  for (const auto& t : tests)
    if (t.status == ObstructionStatus::refute) return &t;
  return nullptr;
}

namespace {

// polynomial in x_0..x_{n-1}; a monomial is its sorted list of variable indices
using Monomial = std::vector<size_t>;
using Poly = std::map<Monomial, Rational>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m;
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      out[m] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

// tr(L_x^k) as a polynomial in the coordinates of x
Poly trace_power(const Algebra& T, size_t power) {
  const size_t n = T.dim();
  std::vector<Matrix<Rational>> L(n, Matrix<Rational>(n, n));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t k = 0; k < n; ++k) L[a](k, b) = T(a, b, k);
  Poly out;
  std::vector<size_t> idx(power, 0);
  for (;;) {
    Matrix<Rational> prod = L[idx[0]];
    for (size_t p = 1; p < power; ++p) prod = prod * L[idx[p]];
    Rational tr = 0;
    for (size_t d = 0; d < n; ++d) tr += prod(d, d);
    if (sgn(tr) != 0) {
      Monomial m(idx.begin(), idx.end());
      std::sort(m.begin(), m.end());
      out[m] += tr;
    }
    size_t p = 0;
    while (p < power && ++idx[p] == n) idx[p++] = 0;
    if (p == power) break;
  }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

std::vector<std::vector<Poly>> invariant_forms(const Algebra& T) {
  const Poly t1 = trace_power(T, 1), t2 = trace_power(T, 2), t3 = trace_power(T, 3);
  return {{t1}, {poly_mul(t1, t1), t2}, {poly_mul(poly_mul(t1, t1), t1), poly_mul(t1, t2), t3}};
}

std::vector<std::vector<Rational>> relations_among(const std::vector<Poly>& forms) {
  std::map<Monomial, size_t> rows;
  for (const Poly& p : forms)
    for (const auto& kv : p) rows.emplace(kv.first, rows.size());
  Matrix<Rational> m(rows.size(), forms.size());
  for (size_t c = 0; c < forms.size(); ++c)
    for (const auto& [mono, coef] : forms[c]) m(rows.at(mono), c) = coef;
  return kernel_basis(m);
}

bool relation_holds(const std::vector<Rational>& r, const std::vector<Poly>& forms) {
  Poly sum;
  for (size_t c = 0; c < forms.size(); ++c)
    for (const auto& [mono, coef] : forms[c]) sum[mono] += r[c] * coef;
  for (const auto& kv : sum)
    if (sgn(kv.second) != 0) return false;
  return true;
}

size_t group_dim(const Algebra& T) {
  if (!T.graded()) return T.dim() * T.dim();
  std::map<int, size_t> blocks;
  for (int d : T.degrees()) ++blocks[d];
  size_t total = 0;
  for (const auto& kv : blocks) total += kv.second * kv.second;
  return total;
}

size_t orbit_dim(const Algebra& T) { return group_dim(T) - derivation_dim(T, T.graded()); }

bool hochschild_within_cap(const Algebra& T, size_t i) {
  size_t size = 1;
  for (size_t p = 0; p < i + 2; ++p) size *= T.dim();
  return T.unit().has_value() && size <= 1024;
}

std::string relation_text(const std::vector<Rational>& r) {
  std::string s = "(";
  for (size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + to_string(r[i]);
  return s + ")";
}

// An isomorphism invariant on which A and B differ, or empty.
std::string distinguishing_invariant(const Algebra& A, const Algebra& B) {
  if (derived_rank(A) != derived_rank(B)) return "product rank";
  if (A.kind() == AlgebraKind::lie) {
    if (A.dim() == 3) {
      const ClassLabel la = classify3(A), lb = classify3(B);
      if (!(la == lb)) return "labels " + la.to_string() + " vs " + lb.to_string();
    }
    for (size_t i = 0; i <= std::min<size_t>(3, A.dim()); ++i)
      if (lie_h_dim(A, i) != lie_h_dim(B, i)) return "lie H^" + std::to_string(i);
  } else {
    for (size_t i = 0; i <= 3; ++i)
      if (hochschild_within_cap(A, i) && hochschild_h_dim(A, i) != hochschild_h_dim(B, i)) {
        return "Hochschild H^" + std::to_string(i);
      }
  }
  const auto fa = invariant_forms(A), fb = invariant_forms(B);
  for (size_t d = 0; d < fa.size(); ++d) {
    for (const auto& r : relations_among(fa[d]))
      if (!relation_holds(r, fb[d])) return "trace relations";
    for (const auto& r : relations_among(fb[d]))
      if (!relation_holds(r, fa[d])) return "trace relations";
  }
  return {};
}

ObstructionTest compare_test(std::string name, size_t a, size_t b, bool refute, bool standard,
                             std::string note = {}) {
  ObstructionTest t;
  t.name = std::move(name);
  t.a_value = std::to_string(a);
  t.b_value = std::to_string(b);
  t.status = refute ? ObstructionStatus::refute : ObstructionStatus::pass;
  t.standard = standard;
  t.note = std::move(note);
  return t;
}

}  // namespace

TraceRelations trace_relations(const Algebra& T) {
  const auto forms = invariant_forms(T);
  return {relations_among(forms[0]), relations_among(forms[1]), relations_among(forms[2])};
}

ObstructionReport obstruction_battery(const Algebra& A, const Algebra& B) {
  require_compatible(A, B);
  require_identities(A);
  require_identities(B);
  ObstructionReport report;

  const size_t ra = derived_rank(A), rb = derived_rank(B);
  report.tests.push_back(compare_test("rank", ra, rb, rb > ra, false, "needs rank(B) <= rank(A)"));

  const size_t oa = orbit_dim(A), ob = orbit_dim(B);
  if (ob > oa) {
    report.tests.push_back(compare_test("orbit-dimension", oa, ob, true, false, "needs dim O(B) < dim O(A)"));
  } else if (ob == oa) {
    const std::string why = distinguishing_invariant(A, B);
    report.tests.push_back(compare_test("orbit-dimension", oa, ob, !why.empty(), false,
                                        why.empty() ? "equal orbit dimensions, no invariant separates A and B"
                                                    : "equal orbit dimensions but non-isomorphic (" + why + ")"));
  } else {
    report.tests.push_back(compare_test("orbit-dimension", oa, ob, false, false, "needs dim O(B) < dim O(A)"));
  }

  if (A.kind() != AlgebraKind::lie) {
    for (size_t i = 0; i <= 3; ++i) {
      const std::string name = "hochschild-h" + std::to_string(i);
      if (!hochschild_within_cap(A, i)) {
        ObstructionTest t;
        t.name = name;
        t.status = ObstructionStatus::inconclusive;
        t.note = A.unit() ? "size cap" : "no unit";
        report.tests.push_back(t);
        continue;
      }
      const size_t ha = hochschild_h_dim(A, i), hb = hochschild_h_dim(B, i);
      report.tests.push_back(compare_test(name, ha, hb, hb < ha, false, "needs dim H(B) >= dim H(A)"));
    }
  } else {
    for (size_t i = 0; i <= std::min<size_t>(3, A.dim()); ++i) {
      const size_t ha = lie_h_dim(A, i), hb = lie_h_dim(B, i);
      report.tests.push_back(compare_test("lie-cohomology-h" + std::to_string(i), ha, hb, hb < ha, true,
                                          "standard semicontinuity; needs dim H(B) >= dim H(A)"));
    }
  }

  const auto fa = invariant_forms(A), fb = invariant_forms(B);
  ObstructionTest t;
  t.name = "trace-relations";
  t.standard = true;
  size_t count = 0;
  for (size_t d = 0; d < fa.size(); ++d) {
    const auto rels = relations_among(fa[d]);
    count += rels.size();
    for (const auto& r : rels) {
      if (t.status == ObstructionStatus::pass && !relation_holds(r, fb[d])) {
        t.status = ObstructionStatus::refute;
        t.note = "standard closed condition; degree-" + std::to_string(d + 1) + " relation " + relation_text(r) +
                 " of A fails on B";
      }
    }
  }
  t.a_value = std::to_string(count) + " relations";
  t.b_value = std::to_string(relations_among(fb[0]).size() + relations_among(fb[1]).size() +
                             relations_among(fb[2]).size()) +
              " relations";
  if (t.status == ObstructionStatus::pass) t.note = "standard closed condition; relations of A hold on B";
  report.tests.push_back(t);
  return report;
}

AuditReport partial_order_audit(const std::vector<std::pair<std::string, std::string>>& labelled_edges) {
  AuditReport out;
  std::set<std::string> labels;
  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& [a, b] : labelled_edges) {
    labels.insert(a);
    labels.insert(b);
    if (a != b) edges.insert({a, b});
  }
  out.labels.assign(labels.begin(), labels.end());
  out.edges.assign(edges.begin(), edges.end());
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& [a, b] : edges) adj[a].push_back(b);
  std::map<std::string, int> color;  // 0 new, 1 on stack, 2 done
  std::vector<std::string> stack;
  std::function<void(const std::string&)> visit = [&](const std::string& v) {
    color[v] = 1;
    stack.push_back(v);
    for (const auto& w : adj[v]) {
      if (color[w] == 1) {
        std::string cycle;
        auto it = std::find(stack.begin(), stack.end(), w);
        for (; it != stack.end(); ++it) cycle += *it + " -> ";
        throw Error(ErrorCode::cycle_found, "cycle " + cycle + w);
      }
      if (color[w] == 0) visit(w);
    }
    stack.pop_back();
    color[v] = 2;
  };
  for (const auto& v : out.labels)
    if (color[v] == 0) visit(v);
  return out;
}

AuditReport partial_order_audit(const std::vector<WitnessRecord>& witnesses) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& w : witnesses) {
    const WitnessVerdict v = verify_witness(w.from, w.to, w.witness);
    if (!v.accepted) throw Error(ErrorCode::witness_rejected, "witness '" + w.witness.id + "' rejected");
    edges.emplace_back(classify3(w.from).to_string(), classify3(w.to).to_string());
  }
  return partial_order_audit(edges);
}

}  // namespace degen
