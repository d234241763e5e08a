#include <random>

#include "doctest.h"
#include "degen/algebra.hpp"
#include "degen/lie3.hpp"
#include "support.hpp"

using namespace degen;

namespace {

std::vector<ClassLabel> representatives() {
  std::vector<ClassLabel> out;
  for (auto t : {ClassLabel::L0, ClassLabel::L1, ClassLabel::L2, ClassLabel::L3, ClassLabel::L5})
    out.push_back(ClassLabel::simple(t));
  for (int a : {-1, 1, 2, 3}) out.push_back(ClassLabel::l4(a));
  return out;
}

Matrix<Rational> to_matrix(const std::vector<std::vector<Rational>>& rows) {
  Matrix<Rational> m(rows.size(), rows.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  return m;
}

// Derivations as the kernel of D -> D[.,.] - [D.,.] - [.,D.], built from
// explicit basis images.
size_t derivation_oracle(const Algebra& T) {
  const size_t n = T.dim();
  std::vector<std::vector<Rational>> rows;  // one row per unknown D_{ab}
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      std::vector<Rational> row;
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
          for (size_t k = 0; k < n; ++k) {
            // D e_b = e_a: contribution to D(e_i e_j) - D(e_i) e_j - e_i D(e_j) at e_k
            Rational v;
            if (k == a) v += T(i, j, b);
            if (i == b) v -= T(a, j, k);
            if (j == b) v -= T(i, a, k);
            row.push_back(v);
          }
      rows.push_back(row);
    }
  return n * n - testing::plain_rank(rows);
}

}  // namespace

TEST_CASE("representatives satisfy Jacobi") {
  for (const auto& l : representatives()) {
    CAPTURE(l.to_string());
    CHECK(check_identities(representative(l)).passed);
  }
}

TEST_CASE("Jacobi violation is reported with its triple") {
  Algebra T(AlgebraKind::lie, 3);
  T.set(0, 1, 1, 1);
  T.set(1, 2, 0, 1);
  const auto r = check_identities(T);
  REQUIRE_FALSE(r.passed);
  CHECK(r.violations.front().i == 0);
  CHECK(r.violations.front().j == 1);
  CHECK(r.violations.front().k == 2);
}

TEST_CASE("lie set rejects nonzero diagonal and mirrors") {
  Algebra T(AlgebraKind::lie, 3);
  T.set(0, 1, 2, 5);
  CHECK(T(1, 0, 2) == Rational(-5));
  CHECK_THROWS_AS(T.set(1, 1, 0, 1), Error);
}

TEST_CASE("graded set rejects degree mixing") {
  Algebra T(AlgebraKind::graded_associative, 3, {0, 1, 2}, 0);
  CHECK_NOTHROW(T.set(1, 1, 2, 1));
  try {
    T.set(1, 1, 1, 1);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::degree_mixing);
  }
}

TEST_CASE("act agrees with an independent change of basis") {
  std::mt19937 rng(21);
  for (const auto& l : representatives()) {
    const Algebra T = representative(l);
    for (int trial = 0; trial < 10; ++trial) {
      const auto P = testing::random_invertible(rng, 3);
      const Algebra viaAct = act(inverse(to_matrix(P)), T);
      CHECK(viaAct == testing::change_basis(T, P));
    }
  }
}

TEST_CASE("act preserves Jacobi and associativity") {
  std::mt19937 rng(22);
  for (const auto& l : representatives()) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto g = to_matrix(testing::random_invertible(rng, 3));
      CHECK(check_identities(act(g, representative(l))).passed);
    }
  }
  Algebra A(AlgebraKind::associative, 2, {}, 0);
  A.set(0, 0, 0, 1);
  A.set(0, 1, 1, 1);
  A.set(1, 0, 1, 1);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = to_matrix(testing::random_invertible(rng, 2));
    CHECK(check_identities(act(g, A)).passed);
  }
}

TEST_CASE("act by a group element and its inverse round-trips") {
  std::mt19937 rng(23);
  const Algebra T = representative(ClassLabel::l4(Rational(5, 2)));
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = to_matrix(testing::random_invertible(rng, 3));
    CHECK(act(inverse(g), act(g, T)) == T);
  }
}

TEST_CASE("graded act rejects degree mixing matrices") {
  Algebra T(AlgebraKind::graded_associative, 2, {0, 1}, 0);
  T.set(0, 0, 0, 1);
  T.set(0, 1, 1, 1);
  T.set(1, 0, 1, 1);
  Matrix<Rational> g = Matrix<Rational>::identity(2);
  g(1, 0) = 1;
  CHECK_THROWS_AS(act(g, T), Error);
}

TEST_CASE("derived rank of the representatives") {
  CHECK(derived_rank(representative(ClassLabel::simple(ClassLabel::L0))) == 0);
  CHECK(derived_rank(representative(ClassLabel::simple(ClassLabel::L1))) == 1);
  CHECK(derived_rank(representative(ClassLabel::simple(ClassLabel::L2))) == 1);
  CHECK(derived_rank(representative(ClassLabel::simple(ClassLabel::L3))) == 2);
  CHECK(derived_rank(representative(ClassLabel::l4(2))) == 2);
  CHECK(derived_rank(representative(ClassLabel::simple(ClassLabel::L5))) == 3);
}

TEST_CASE("derivation_dim matches an independent linear system") {
  std::mt19937 rng(24);
  for (const auto& l : representatives()) {
    CAPTURE(l.to_string());
    const Algebra T = representative(l);
    CHECK(derivation_dim(T) == derivation_oracle(T));
    const auto g = to_matrix(testing::random_invertible(rng, 3));
    CHECK(derivation_dim(act(g, T)) == derivation_dim(T));
  }
}

TEST_CASE("specialize reports negative valuations") {
  StructureTensor<RationalFunction> T(AlgebraKind::lie, 3);
  T.set(0, 1, 2, RationalFunction(LaurentPoly(1), LaurentPoly::t(1)));
  try {
    specialize(T);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::negative_valuation);
  }
}
