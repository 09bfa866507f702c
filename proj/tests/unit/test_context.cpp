#include <gtest/gtest.h>

#include <random>

#include "qrep/context.hpp"
#include "qrep/errors.hpp"

using namespace qrep;

namespace {

const Field Q = Field::rational();
const Field Fq = Field::ratfunc("q");

SVec u(int i) { return SVec::unit(i); }

TEST(QaContext, Polynomial) {
  ContextPtr c = qa_context(algebra_X(antisym(2, Q)), 2);
  EXPECT_EQ(c->dim(1), 2);
  EXPECT_EQ(c->dim(2), 3);
  EXPECT_EQ(c->mul(u(1), u(0)), c->mul(u(0), u(1)));
  EXPECT_TRUE(c->commutative());
}

TEST(QaContext, GrassmannAndFree) {
  ContextPtr g = qa_context(algebra_Xi(antisym(2, Q)), 2);
  EXPECT_TRUE(g->mul(u(0), u(0)).is_zero());
  EXPECT_EQ(g->mul(u(0), u(1)), -g->mul(u(1), u(0)));
  ContextPtr t = qa_context(tensor_algebra(2, Q), 2);
  EXPECT_EQ(t->dim(2), 4);
  std::vector<SVec> images;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) images.push_back(t->mul(u(x), u(y)));
  EXPECT_EQ(Subspace::span(images, 4, Q).dim(), 4);
  EXPECT_THROW(t->dim(3), ContextTooShallow);
}

TEST(QaContext, Associative) {
  ContextPtr c = qa_context(algebra_X(so_B(3, Q)), 3);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z)
        EXPECT_EQ(c->mul(2, c->mul(u(x), u(y)), 1, u(z)), c->mul(1, u(x), 2, c->mul(u(y), u(z))));
}

TEST(PbwContext, AbelianIsCommutative) {
  EXPECT_TRUE(pbw_context(abelian_lie(3, Q), 2)->commutative());
}

// In gl_2 with E_ij at grade-1 index 1 + (i−1)·2 + (j−1) and the unit at 0,
// E12·E21 − E21·E12 = [E12, E21] = E11 − E22.
TEST(PbwContext, Gl2Commutator) {
  ContextPtr c = pbw_context(gl_lie(2, Q), 2);
  SVec lhs = c->mul(u(2), u(3)) - c->mul(u(3), u(2));
  SVec rhs = c->mul(u(0), u(1) - u(4));
  EXPECT_EQ(lhs, rhs);
  EXPECT_FALSE(c->commutative());
}

TEST(PbwContext, JacobiViolationRejected) {
  LieAlgebra bad = abelian_lie(3, Q);
  // [e0,e1] = e2, [e1,e2] = e0, [e0,e2] = e2 breaks Jacobi
  bad.bracket[0][1] = u(2);
  bad.bracket[1][0] = -u(2);
  bad.bracket[1][2] = u(0);
  bad.bracket[2][1] = -u(0);
  bad.bracket[0][2] = u(2);
  bad.bracket[2][0] = -u(2);
  EXPECT_THROW(bad.validate(), InvalidArgument);
  EXPECT_THROW(pbw_context(bad, 2), InvalidArgument);
}

// Straightening is independent of the order in which descents are rewritten.
TEST(PbwProperty, StraighteningIsConfluent) {
  LieAlgebra g = gl_lie(2, Q);
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> letter(0, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> w(static_cast<std::size_t>(2 + trial % 3));
    for (int& x : w) x = letter(rng);
    EXPECT_EQ(pbw_straighten(g, w), pbw_straighten(g, w, &rng));
  }
}

TEST(SEmbedding, GroundField) {
  AlgebraStructureConstants k;
  k.n = 1;
  k.labels = {"1"};
  k.dual_labels = {"v"};
  k.c = {{u(0)}};
  k.d = {Scalar(1)};
  k.field = Q;
  ContextPtr c = s_embedding_context(k, 2);
  EXPECT_EQ(c->dim(1), 1);
  EXPECT_EQ(c->coproduct(1, u(0)), u(0));
  EXPECT_EQ(c->counit_of(1, u(0)), Scalar(1));
}

TEST(SEmbedding, MatrixCoproduct) {
  int m = 2;
  ContextPtr c = s_embedding_context(matrix_algebra(m, Q), 2);
  int n = c->dim(1);
  ASSERT_EQ(n, 4);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      SVec want;
      for (int k = 0; k < m; ++k) add_scaled(want, Scalar(1), u((i * m + k) * n + k * m + j));
      EXPECT_EQ(c->coproduct(1, u(i * m + j)), want);
      EXPECT_EQ(c->counit_of(1, u(i * m + j)), Scalar(i == j ? 1 : 0));
    }
  EXPECT_TRUE(c->commutative());
}

TEST(SEmbedding, FunctionsOnZ2) {
  ContextPtr c = s_embedding_context(z2_function_algebra(Q), 2);
  // pointwise product δ_x δ_y = δ_{x=y} δ_x makes each dual basis vector grouplike
  EXPECT_EQ(c->coproduct(1, u(0)), u(0));
  EXPECT_EQ(c->coproduct(1, u(1)), u(3));
  EXPECT_NO_THROW(c->validate());
}

TEST(TableContext, FieldContexts) {
  for (const Field& f : {Q, Fq}) {
    ContextPtr c = field_context(f, 2);
    EXPECT_NO_THROW(c->validate());
    EXPECT_TRUE(c->commutative());
    EXPECT_EQ(c->unit_p2(), u(0));
  }
}

TEST(TableContext, CoassociativityFailure) {
  MulContext raw;
  raw.field = Q;
  raw.labels = {{"1"}, {"a", "b"}, {"aa", "ab", "ba", "bb"}};
  raw.tables[{1, 1}] = {{u(0), u(1)}, {u(2), u(3)}};
  raw.delta[1] = {u(0) + u(3), u(3)};
  raw.counit[1] = {Scalar(1), Scalar(0)};
  try {
    table_context(raw);
    FAIL() << "expected coassociativity failure";
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("coassociativity fails at basis vector a"), std::string::npos);
  }
}

TEST(TableContext, ShapeErrors) {
  MulContext raw;
  raw.field = Q;
  raw.labels = {{"1"}, {"a"}, {"aa"}};
  EXPECT_THROW(table_context(raw), InvalidArgument);
  raw.tables[{1, 1}] = {{u(3)}};
  EXPECT_THROW(table_context(raw), InvalidArgument);
  raw.tables[{1, 1}] = {{u(0)}};
  EXPECT_NO_THROW(table_context(raw));
}

TEST(Context, LiftAndOpposites) {
  ContextPtr c = qa_context(tensor_algebra(2, Q), 4);
  ContextPtr l = lift(c);
  EXPECT_EQ(l->dim(1), 4);
  EXPECT_EQ(l->dim(2), 16);
  EXPECT_THROW(lift(qa_context(tensor_algebra(2, Q), 2)), ContextTooShallow);
  ContextPtr op = opposite_mul(c);
  EXPECT_EQ(op->mul(u(0), u(1)), c->mul(u(1), u(0)));
  ContextPtr s = s_embedding_context(matrix_algebra(2, Q), 2);
  ContextPtr co = coopposite(s);
  // Δ^cop(a^1_2) = Σ_k a^k_2 ⊗ a^1_k
  EXPECT_EQ(co->coproduct(1, u(1)), u(1 * 4 + 0) + u(3 * 4 + 1));
}

}  // namespace
