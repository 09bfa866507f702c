#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "qrep/algebra.hpp"
#include "qrep/errors.hpp"

using namespace qrep;

namespace {

const Field Q = Field::rational();
const Field Fq = Field::ratfunc("q");

SVec word(int n, int a, int b) { return SVec::unit(a * n + b); }

TEST(Algebra, PolynomialAndGrassmann) {
  Idempotent a2 = antisym(2, Q);
  EXPECT_TRUE(oracle::same_span(algebra_X(a2).relations, {word(2, 0, 1) - word(2, 1, 0)}));
  EXPECT_TRUE(oracle::same_span(algebra_Xi(a2).relations,
                                {word(2, 0, 0), word(2, 0, 1) + word(2, 1, 0), word(2, 1, 1)}));
  EXPECT_EQ(algebra_X(zero_idempotent(3, Q)).relations.dim(), 0);
  EXPECT_EQ(algebra_X(a2).relation_strings().size(), 1U);
}

TEST(Algebra, KoszulDual) {
  Idempotent a2 = antisym(2, Q);
  EXPECT_EQ(koszul_dual(algebra_X(a2)).relations, algebra_Xi(a2).relations);
  EXPECT_EQ(koszul_dual(koszul_dual(algebra_X(a2))).relations, algebra_X(a2).relations);
  EXPECT_EQ(koszul_dual(tensor_algebra(2, Q)).relations.dim(), 4);
}

TEST(Algebra, ProductDimensions) {
  QuadraticAlgebra x = algebra_X(antisym(2, Q));
  // r·p² + n²·s − r·s with n = p = 2 and r = s = 1
  EXPECT_EQ(product(x, x, ProductKind::white).relations.dim(), 7);
  EXPECT_EQ(product(x, x, ProductKind::black).relations.dim(), 1);
  QuadraticAlgebra kx = tensor_algebra(1, Q);
  QuadraticAlgebra even = product(kx, kx, ProductKind::even_tensor);
  EXPECT_TRUE(oracle::same_span(even.relations, {word(2, 0, 1) - word(2, 1, 0)}));
  QuadraticAlgebra odd = product(kx, kx, ProductKind::odd_tensor);
  EXPECT_TRUE(oracle::same_span(odd.relations, {word(2, 0, 1) + word(2, 1, 0)}));
  EXPECT_EQ(product(kx, kx, ProductKind::amalg).relations.dim(), 0);
}

TEST(Algebra, ProductsMatchOracle) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    QuadraticAlgebra a = algebra_X(random_idempotent(2, rng, Q));
    QuadraticAlgebra b = algebra_X(random_idempotent(1 + static_cast<int>(rng() % 2), rng, Q));
    EXPECT_TRUE(oracle::same_span(product(a, b, ProductKind::white).relations, oracle::white_relations(a, b)));
    EXPECT_TRUE(oracle::same_span(product(a, b, ProductKind::black).relations, oracle::black_relations(a, b)));
  }
}

TEST(Algebra, StructuralEqualities) {
  std::mt19937 rng(29);
  Idempotent a2 = antisym(2, Q);
  QuadraticAlgebra x = algebra_X(a2);
  EXPECT_EQ(algebra_X(tep(a2, a2)).relations, product(x, x, ProductKind::white).relations);
  for (int trial = 0; trial < 8; ++trial) {
    Idempotent b = random_idempotent(1 + static_cast<int>(rng() % 2), rng, Q);
    Idempotent c = random_idempotent(1 + static_cast<int>(rng() % 2), rng, Q);
    EXPECT_EQ(algebra_X(dis(b, c)).relations, product(algebra_X(b), algebra_X(c), ProductKind::even_tensor).relations);
    EXPECT_EQ(algebra_X(cop(b, c)).relations, product(algebra_X(b), algebra_X(c), ProductKind::amalg).relations);
    EXPECT_EQ(algebra_X(tep(b, c)).relations, product(algebra_X(b), algebra_X(c), ProductKind::white).relations);
    EXPECT_EQ(algebra_X(black_tep(b, c)).relations, product(algebra_X(b), algebra_X(c), ProductKind::black).relations);
    EXPECT_EQ(algebra_X(conj21(b)).relations, opposite(algebra_X(b)).relations);
  }
}

// Classical Manin relations for generators M^i_j at index i·m + j:
// column entries commute and [M^i_j, M^k_l] = [M^k_j, M^i_l] for i < k, j < l.
std::vector<SVec> classical_manin(int m) {
  int n = m * m;
  auto g = [m](int i, int j) { return i * m + j; };
  auto comm = [n](int x, int y) { return SVec::unit(x * n + y) - SVec::unit(y * n + x); };
  std::vector<SVec> rows;
  for (int i = 0; i < m; ++i)
    for (int k = i + 1; k < m; ++k)
      for (int j = 0; j < m; ++j) {
        rows.push_back(comm(g(i, j), g(k, j)));
        for (int l = j + 1; l < m; ++l) rows.push_back(comm(g(i, j), g(k, l)) - comm(g(k, j), g(i, l)));
      }
  return rows;
}

TEST(Cohom, ClassicalManinRelations) {
  for (int m = 2; m <= 3; ++m) {
    Idempotent a = antisym(m, Q);
    QuadraticAlgebra c = cohom_algebra(a, a);
    EXPECT_TRUE(oracle::same_span(c.relations, classical_manin(m))) << "m = " << m;
  }
  EXPECT_EQ(cohom_algebra(antisym(2, Q), antisym(2, Q)).relations.dim(), 3);
}

TEST(Cohom, ZeroSideIsFree) {
  EXPECT_EQ(cohom_algebra(antisym(2, Q), zero_idempotent(2, Q)).relations.dim(), 0);
  EXPECT_EQ(cohom_algebra(one_idempotent(2, Q), antisym(2, Q)).relations.dim(), 0);
}

// cohom(B,A) is the black product of 𝔛_A with Ξ_B, equivalently the Koszul
// dual of the white product of Ξ_A with 𝔛_B.
TEST(Cohom, DualPresentation) {
  std::mt19937 rng(31);
  for (const Field& f : {Q, Fq}) {
    for (int trial = 0; trial < 6; ++trial) {
      Idempotent b = random_idempotent(1 + static_cast<int>(rng() % 2), rng, f);
      Idempotent a = random_idempotent(1 + static_cast<int>(rng() % 2), rng, f);
      QuadraticAlgebra c = cohom_algebra(b, a);
      EXPECT_TRUE(oracle::same_span(c.relations, oracle::black_relations(algebra_X(a), algebra_Xi(b))));
      EXPECT_EQ(c.relations, koszul_dual(product(algebra_Xi(a), algebra_X(b), ProductKind::white)).relations);
    }
  }
}

TEST(Hom, ExtendsToHom) {
  QuadraticAlgebra poly = algebra_X(antisym(2, Q));
  QuadraticAlgebra grass = algebra_Xi(antisym(2, Q));
  EXPECT_TRUE(extends_to_hom(Matrix::identity(2, Q), poly, poly));
  Matrix any = Matrix::from_values({{Scalar(1), Scalar(5)}, {Scalar(-2), Scalar(3)}}, Q);
  EXPECT_TRUE(extends_to_hom(any, tensor_algebra(2, Q), grass));
  Matrix swap = Matrix::from_values({{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}}, Q);
  EXPECT_FALSE(extends_to_hom(swap, poly, grass));
  EXPECT_THROW(extends_to_hom(Matrix::identity(3, Q), poly, poly), ShapeError);
}

TEST(Graded, Binomials) {
  for (int m = 1; m <= 3; ++m) {
    QuadraticAlgebra x = algebra_X(antisym(m, Q));
    QuadraticAlgebra xi = algebra_Xi(antisym(m, Q));
    for (int k = 0; k <= 4; ++k) {
      EXPECT_EQ(graded_dim(x, k), oracle::binomial(m + k - 1, k));
      EXPECT_EQ(graded_dim(xi, k), oracle::binomial(m, k));
    }
  }
  EXPECT_EQ(graded_dim(tensor_algebra(2, Q), 3), 8);
  EXPECT_THROW(graded_dim(tensor_algebra(2, Q), 7), CapExceeded);
}

TEST(GradedProperty, AgreesWithBruteForce) {
  std::mt19937 rng(37);
  for (const Field& f : {Q, Fq}) {
    for (int trial = 0; trial < 8; ++trial) {
      QuadraticAlgebra a = algebra_X(random_idempotent(2, rng, f));
      for (int k = 0; k <= 4; ++k) {
        int want = oracle::hilbert_brute(a.relations.basis(), a.n, k, oracle::points()[0]);
        EXPECT_EQ(graded_dim(a, k), want);
        EXPECT_EQ(graded_dim_direct(a, k), want);
      }
    }
  }
}

TEST(GradedProperty, WhiteDegreeTwoAndEvenConvolution) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 6; ++trial) {
    QuadraticAlgebra a = algebra_X(random_idempotent(2, rng, Q));
    QuadraticAlgebra b = algebra_X(random_idempotent(1 + static_cast<int>(rng() % 2), rng, Q));
    EXPECT_EQ(graded_dim(product(a, b, ProductKind::white), 2), graded_dim(a, 2) * graded_dim(b, 2));
    QuadraticAlgebra e = product(a, b, ProductKind::even_tensor);
    for (int k = 0; k <= 4; ++k) {
      int sum = 0;
      for (int l = 0; l <= k; ++l) sum += graded_dim(a, l) * graded_dim(b, k - l);
      EXPECT_EQ(graded_dim(e, k), sum);
    }
  }
}

TEST(Graded, NormalForms) {
  QuadraticAlgebra poly = algebra_X(antisym(2, Q));
  GradedQuotient g(poly, 3);
  EXPECT_EQ(g.normal_form({1, 0}), g.normal_form({0, 1}));
  QuadraticAlgebra grass = algebra_Xi(antisym(2, Q));
  GradedQuotient h(grass, 2);
  EXPECT_TRUE(h.normal_form({0, 0}).is_zero());
  EXPECT_EQ(h.normal_form({1, 0}), -h.normal_form({0, 1}));
}

}  // namespace
