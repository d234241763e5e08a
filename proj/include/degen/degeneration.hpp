#pragma once

#include <string>
#include <utility>
#include <vector>

#include "degen/algebra.hpp"
#include "degen/deformation.hpp"

namespace degen {

/// Invertible matrix g over K(t). The columns of g^{-1} are the new basis
/// vectors in which the limit is taken.
struct Witness {
  std::string id;
  Matrix<RationalFunction> g;

  /// Witness whose new basis (columns of P, in old coordinates) is given.
  static Witness from_basis(const Matrix<RationalFunction>& P, std::string id = {});
  static Witness identity(size_t n, std::string id = "identity");
  /// g = t^{-1} I; every structure constant is multiplied by t.
  static Witness scaling(size_t n, std::string id = "scaling");
};

struct WitnessVerdict {
  bool accepted = false;
  /// "negative-valuation" or "limit-mismatch" when rejected
  std::string failure;
  std::vector<std::string> diagnostics;
  StructureTensor<RationalFunction> conjugated;
};

/// Accepts when g.A has all valuations >= 0 and its value at t = 0 equals B
/// coefficientwise.
WitnessVerdict verify_witness(const Algebra& A, const Algebra& B, const Witness& g);

/// Family over B with F_i = coefficient of t^i in g.A - B, to order M.
/// Throws WitnessRejected when the witness is not accepted.
DeformationFamily witness_to_deformation(const Algebra& A, const Algebra& B, const Witness& g, int order);

enum class ObstructionStatus { pass, refute, inconclusive };
const char* status_name(ObstructionStatus s) noexcept;

struct ObstructionTest {
  std::string name;
  ObstructionStatus status = ObstructionStatus::pass;
  std::string a_value;
  std::string b_value;
  std::string note;
  /// necessary condition coming from standard semicontinuity facts rather
  /// than from the rank / Hochschild / orbit-dimension core set
  bool standard = false;
};

struct ObstructionReport {
  std::vector<ObstructionTest> tests;
  bool refuted() const;
  /// First refuting test, or nullptr.
  const ObstructionTest* decisive() const;
};

/// Necessary conditions for A to degenerate to B. A refutation is sound;
/// passing every test proves nothing.
ObstructionReport obstruction_battery(const Algebra& A, const Algebra& B);

/// Linear relations among the invariant forms tr(L_x), tr(L_x)^2, tr(L_x^2),
/// tr(L_x)^3, tr(L_x) tr(L_x^2), tr(L_x^3) (L_x = left multiplication /
/// ad x); each entry is a relation vector for the forms of one degree.
struct TraceRelations {
  std::vector<std::vector<Rational>> degree1, degree2, degree3;
};
TraceRelations trace_relations(const Algebra& T);

struct AuditReport {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> edges;  // without self-loops
};

/// Checks that accepted edges between labels contain no cycle through two
/// distinct labels. Throws CycleFound naming the cycle.
AuditReport partial_order_audit(const std::vector<std::pair<std::string, std::string>>& labelled_edges);

struct WitnessRecord {
  Algebra from;
  Algebra to;
  Witness witness;
};
/// Verifies each witness, labels both ends with the dimension-3 classifier
/// and audits the resulting graph. Rejected witnesses raise WitnessRejected.
AuditReport partial_order_audit(const std::vector<WitnessRecord>& witnesses);

}  // namespace degen
