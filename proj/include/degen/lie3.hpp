#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "degen/algebra.hpp"
#include "degen/deformation.hpp"
#include "degen/degeneration.hpp"

namespace degen {

/// Isomorphism class of a 3-dimensional Lie algebra. L4 carries
/// kappa = tr^2/det of ad(x) on the derived algebra and, when
/// z^2 - (kappa-2) z + 1 splits over Q, the canonical alpha with |alpha| >= 1.
struct ClassLabel {
  enum Tag { L0, L1, L2, L3, L4, L5 };
  Tag tag = L0;
  std::optional<Rational> kappa;
  std::optional<Rational> alpha;

  static ClassLabel simple(Tag t);
  /// L4(alpha) with kappa = (1+alpha)^2/alpha, alpha canonicalized.
  static ClassLabel l4(const Rational& alpha);
  static ClassLabel l4_kappa(const Rational& kappa);

  /// "L3", "L4(alpha=2, kappa=9/2)", "L4(kappa=5)"
  std::string to_string() const;
  /// "L3", "L4(2)", "L4(kappa=5)"
  std::string short_name() const;

  friend bool operator==(const ClassLabel& a, const ClassLabel& b) {
    return a.tag == b.tag && a.kappa == b.kappa && a.alpha == b.alpha;
  }
  friend bool operator<(const ClassLabel& a, const ClassLabel& b);
};

/// alpha and 1/alpha name the same algebra; returns the one with |a| >= 1.
Rational canonical_alpha(const Rational& alpha);

/// The representatives: L1 [x,y]=z; L2 [x,y]=y; L3 [x,y]=y, [x,z]=y+z;
/// L4(a) [x,y]=y, [x,z]=a z; L5 [x,y]=y, [x,z]=-z, [y,z]=x.
Algebra representative(ClassLabel::Tag tag, const Rational& alpha = 1);
Algebra representative(const ClassLabel& label);

ClassLabel classify3(const Algebra& T);

/// H^2 dimension for each representative (L4 at alpha = 2, 3, -1, 1).
std::vector<std::pair<ClassLabel, size_t>> h2_table();

/// Cocycle representatives of H^2 listed for each representative.
std::vector<Algebra> h2_basis_cocycles(const ClassLabel& label);

struct RigidityCertificate {
  Rational lambda;
  int n = 0;
  int order = 0;
  // branch a: the minor of rows [y,x], [z,x] in the y,z columns
  TruncSeries minor;
  bool rank_lower_bound_2 = false;
  // branch b: ad(x) on V/Kx in the basis y, z
  int trace_valuation = 0;
  int det_valuation = 0;
  bool rank2_contradiction = false;
  // branch c: Jacobi constraints solved for h1, g1, h3; determinant of the
  // rows [y,x], [z,x], [z,y]
  TruncSeries h1, g1, h3;
  bool constraints_match_family = false;
  TruncSeries bracket_det;
  bool rank3_det_zero = false;

  bool complete() const { return rank_lower_bound_2 && rank2_contradiction && rank3_det_zero; }
};

/// Certificate that a normalized deformation of L2 (leading term
/// lambda z^ ^ x^ (x) z at t^n) has generic fiber of rank neither 2 nor 3.
/// Throws WrongLeadingTerm for other leading terms and InsufficientOrder when
/// order < n + 1.
RigidityCertificate l2_rigidity(const DeformationFamily& D);

struct LibraryWitness {
  std::string id;
  ClassLabel from;
  ClassLabel to;
  Witness witness;
};

/// Witnesses between representatives (new bases given as columns of g^{-1}).
std::vector<LibraryWitness> witness_library(const std::vector<Rational>& alphas);

/// Labels of the diagram: L0..L3, L5 and L4 at -1, 1, 2, 3 plus the given
/// alphas, sorted.
std::vector<ClassLabel> diagram_labels(const std::vector<Rational>& alphas);

struct DiagramEntry {
  ClassLabel from;
  ClassLabel to;
  enum Kind { edge, refuted, inconclusive } kind = inconclusive;
  std::string witness_id;
  std::string test;
  std::string note;
};

struct Diagram {
  std::vector<ClassLabel> labels;
  std::vector<DiagramEntry> entries;
  AuditReport audit;
  size_t inconclusive_count() const;
};

Diagram degeneration_diagram(const std::vector<Rational>& alphas);

}  // namespace degen
