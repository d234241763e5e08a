#include "report.hpp"

#include "json.hpp"

namespace degen::report {

using json = nlohmann::json;

namespace {

template <class R>
std::string vector_text(const std::vector<R>& v) {
  std::string out = "[";
  for (size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + degen::to_string(v[k]);
  return out + "]";
}

template <class R>
json vector_json(const std::vector<R>& v) {
  json out = json::array();
  for (const R& c : v) out.push_back(degen::to_string(c));
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string valuation_text(int v) { return v == kInfinity ? "inf" : std::to_string(v); }

json valuation_json(int v) { return v == kInfinity ? json("inf") : json(v); }

std::string triple(const Algebra& A, size_t i, size_t j, size_t k) {
  const auto& b = A.basis();
  return "(" + b[i] + "," + b[j] + "," + b[k] + ")";
}

}  // namespace

std::string identities(const Algebra& A, const IdentityReport<Rational>& r, bool as_json) {
  const char* name = A.kind() == AlgebraKind::lie ? "jacobi" : "associativity";
  if (as_json) {
    json v = json::array();
    for (const auto& x : r.violations) {
      v.push_back({{"triple", {x.i, x.j, x.k}}, {"residual", vector_json(x.residual)}});
    }
    return dump({{"identity", name}, {"passed", r.passed}, {"violations", v}});
  }
  std::string out = std::string(name) + ": " + (r.passed ? "PASS" : "FAIL") + "\n";
  for (const auto& x : r.violations) {
    out += "violation " + triple(A, x.i, x.j, x.k) + " residual " + vector_text(x.residual) + "\n";
  }
  return out;
}

std::string label(const ClassLabel& l, bool as_json) {
  if (as_json) {
    json j{{"label", l.to_string()}, {"short", l.short_name()}};
    if (l.kappa) j["kappa"] = degen::to_string(*l.kappa);
    if (l.alpha) j["alpha"] = degen::to_string(*l.alpha);
    return dump(j);
  }
  return l.to_string() + "\n";
}

std::string witness(const Algebra& A, const WitnessVerdict& v, const std::string& witness_id, bool as_json) {
  if (as_json) {
    json j{{"accepted", v.accepted}, {"diagnostics", v.diagnostics}, {"witness", witness_id}};
    if (!v.accepted) j["failure"] = v.failure;
    return dump(j);
  }
  std::string out = v.accepted ? "ACCEPT" : "REJECT: " + v.failure;
  if (!witness_id.empty()) out += " (witness " + witness_id + ")";
  out += "\n";
  for (const auto& d : v.diagnostics) out += "  " + d + "\n";
  (void)A;
  return out;
}

std::string battery(const ObstructionReport& r, bool as_json) {
  if (as_json) {
    json tests = json::array();
    for (const auto& t : r.tests) {
      tests.push_back({{"name", t.name},
                       {"status", status_name(t.status)},
                       {"a", t.a_value},
                       {"b", t.b_value},
                       {"note", t.note},
                       {"standard", t.standard}});
    }
    json j{{"refuted", r.refuted()}, {"tests", tests}};
    if (const auto* d = r.decisive()) j["decisive"] = d->name;
    return dump(j);
  }
  std::string out;
  for (const auto& t : r.tests) {
    out += std::string(status_name(t.status)) + ": " + t.name + " (A " + t.a_value + ", B " + t.b_value + ")";
    if (t.standard) out += " [standard]";
    if (!t.note.empty()) out += " " + t.note;
    out += "\n";
  }
  out += r.refuted() ? "verdict: no degeneration (refuted by " + r.decisive()->name + ")\n"
                     : "verdict: not refuted\n";
  return out;
}

std::string deformation(const DeformationFamily& D, const IdentityReport<TruncSeries>& r,
                        const std::optional<LeadingAnalysis>& lead, const FiberInvariants& fiber, bool as_json) {
  const Algebra& A = D.base();
  const char* name = A.kind() == AlgebraKind::lie ? "jacobi" : "associativity";
  if (as_json) {
    json v = json::array();
    for (const auto& x : r.violations) {
      v.push_back({{"triple", {x.i, x.j, x.k}}, {"residual", vector_json(x.residual)}});
    }
    json j{{"identity", name}, {"order", D.order()}, {"passed", r.passed}, {"violations", v}};
    if (lead) {
      j["leading"] = {{"n", lead->n}, {"is_cocycle", lead->is_cocycle}, {"class_nonzero", lead->class_nonzero}};
    } else {
      j["leading"] = nullptr;
    }
    json vals = json::array();
    for (const auto& row : fiber.bracket_matrix_valuations) {
      json jr = json::array();
      for (int x : row) jr.push_back(valuation_json(x));
      vals.push_back(jr);
    }
    json pivots = json::array();
    for (int x : fiber.pivot_valuations) pivots.push_back(valuation_json(x));
    j["fiber"] = {{"bracket_matrix_valuations", vals},
                  {"pivot_valuations", pivots},
                  {"certified_rank_lower_bound", fiber.certified_rank_lower_bound},
                  {"higher_rank_undecided", fiber.higher_rank_undecided}};
    if (fiber.ad_trace_valuation) j["fiber"]["ad_trace_valuation"] = valuation_json(*fiber.ad_trace_valuation);
    if (fiber.ad_det_valuation) j["fiber"]["ad_det_valuation"] = valuation_json(*fiber.ad_det_valuation);
    return dump(j);
  }
  std::string out = std::string(name) + " mod t^" + std::to_string(D.order() + 1) + ": " +
                    (r.passed ? "PASS" : "FAIL") + "\n";
  for (const auto& x : r.violations) {
    out += "violation " + triple(A, x.i, x.j, x.k) + " residual " + vector_text(x.residual) + "\n";
  }
  if (lead) {
    out += "leading term: n=" + std::to_string(lead->n) + " cocycle=" + yes_no(lead->is_cocycle) +
           " class_nonzero=" + yes_no(lead->class_nonzero) + "\n";
  } else {
    out += "leading term: none (trivial family)\n";
  }
  out += "pivot valuations:";
  for (int x : fiber.pivot_valuations) out += " " + valuation_text(x);
  out += "\ncertified rank >= " + std::to_string(fiber.certified_rank_lower_bound);
  if (fiber.higher_rank_undecided) out += " (higher rank undecided at this order)";
  out += "\n";
  if (fiber.ad_trace_valuation) {
    out += "ad(e0) on V/Ke0: v(tr)=" + valuation_text(*fiber.ad_trace_valuation) +
           " v(det)=" + valuation_text(*fiber.ad_det_valuation) + "\n";
  }
  return out;
}

std::string rigidity(const RigidityCertificate& c, bool as_json) {
  if (as_json) {
    return dump({{"lambda", degen::to_string(c.lambda)},
                 {"n", c.n},
                 {"order", c.order},
                 {"minor", degen::to_string(c.minor)},
                 {"rank_lower_bound_2", c.rank_lower_bound_2},
                 {"trace_valuation", valuation_json(c.trace_valuation)},
                 {"det_valuation", valuation_json(c.det_valuation)},
                 {"rank2_contradiction", c.rank2_contradiction},
                 {"h1", degen::to_string(c.h1)},
                 {"g1", degen::to_string(c.g1)},
                 {"h3", degen::to_string(c.h3)},
                 {"constraints_match_family", c.constraints_match_family},
                 {"bracket_det", degen::to_string(c.bracket_det)},
                 {"rank3_det_zero", c.rank3_det_zero},
                 {"complete", c.complete()}});
  }
  std::string out = "l2-rigidity: lambda=" + degen::to_string(c.lambda) + " n=" + std::to_string(c.n) +
                    " order=" + std::to_string(c.order) + "\n";
  out += "(a) minor " + degen::to_string(c.minor) + ": rank >= 2 " + yes_no(c.rank_lower_bound_2) + "\n";
  out += "(b) v(tr)=" + valuation_text(c.trace_valuation) + " v(det)=" + valuation_text(c.det_valuation) +
         ": rank 2 excluded " + yes_no(c.rank2_contradiction) + "\n";
  out += "(c) h1=" + degen::to_string(c.h1) + " g1=" + degen::to_string(c.g1) + " h3=" + degen::to_string(c.h3) +
         "\n    constraints match family " + yes_no(c.constraints_match_family) + "; det " +
         degen::to_string(c.bracket_det) + ": rank 3 excluded " + yes_no(c.rank3_det_zero) + "\n";
  out += c.complete() ? "certificate: COMPLETE\n" : "certificate: INCOMPLETE\n";
  return out;
}

std::string koszul(const KoszulVerdict& v, const TorTable& t, bool as_json) {
  if (as_json) {
    json j{{"verdict", verdict_name(v.kind)}, {"N", v.N}, {"s", v.s}, {"d", v.d}, {"tor", t.dims}};
    if (v.kind == KoszulVerdict::not_koszul) j["cell"] = {v.cell_i, v.cell_j};
    return dump(j);
  }
  std::string out = v.to_string() + "\n";
  for (int i = 0; i <= t.s; ++i) {
    out += "Tor_" + std::to_string(i) + ":";
    for (int j = 0; j <= t.d; ++j) out += " " + std::to_string(t.at(i, j));
    out += "\n";
  }
  return out;
}

std::string diagram(const Diagram& d, bool as_json) {
  auto kind_name = [](DiagramEntry::Kind k) {
    switch (k) {
      case DiagramEntry::edge: return "edge";
      case DiagramEntry::refuted: return "refuted";
      case DiagramEntry::inconclusive: return "inconclusive";
    }
    return "?";
  };
  if (as_json) {
    json labels = json::array();
    for (const auto& l : d.labels) labels.push_back(l.short_name());
    json entries = json::array();
    for (const auto& e : d.entries) {
      json j{{"from", e.from.short_name()}, {"to", e.to.short_name()}, {"kind", kind_name(e.kind)}};
      if (e.kind == DiagramEntry::edge) j["witness"] = e.witness_id;
      if (e.kind == DiagramEntry::refuted) j["test"] = e.test;
      if (!e.note.empty()) j["note"] = e.note;
      entries.push_back(j);
    }
    json edges = json::array();
    for (const auto& [a, b] : d.audit.edges) edges.push_back({a, b});
    return dump({{"labels", labels},
                 {"entries", entries},
                 {"audit", {{"acyclic", true}, {"edges", edges}}},
                 {"inconclusive", d.inconclusive_count()}});
  }
  std::string out = "labels:";
  for (const auto& l : d.labels) out += " " + l.short_name();
  out += "\n";
  for (const auto& e : d.entries) {
    out += e.from.short_name() + " -> " + e.to.short_name() + ": ";
    switch (e.kind) {
      case DiagramEntry::edge: out += "edge(" + e.witness_id + ")"; break;
      case DiagramEntry::refuted: out += "refuted(" + e.test + ")"; break;
      case DiagramEntry::inconclusive: out += "inconclusive"; break;
    }
    if (!e.note.empty() && e.kind != DiagramEntry::edge) out += "  # " + e.note;
    out += "\n";
  }
  out += "audit: acyclic, " + std::to_string(d.audit.edges.size()) + " proper edges\n";
  out += "inconclusive pairs: " + std::to_string(d.inconclusive_count()) + "\n";
  return out;
}

}  // namespace degen::report
