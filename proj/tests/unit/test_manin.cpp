#include <gtest/gtest.h>

#include <random>

#include "instances.hpp"
#include "qrep/errors.hpp"
#include "qrep/corep.hpp"

using namespace qrep;

namespace {

const Field Q = Field::rational();

SVec u(int i) { return SVec::unit(i); }

Matrix random_scalar(std::mt19937& rng, int r, int c) {
  std::uniform_int_distribution<int> d(-3, 3);
  Matrix k(r, c, Q);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) k(i, j) = Scalar(d(rng));
  return k;
}

TEST(Manin, IdentityReducesToIdempotency) {
  ContextPtr ctx = field_context(Q);
  std::mt19937 rng(1);
  for (int trial = 0; trial < 5; ++trial) {
    Idempotent b = random_idempotent(2, rng, Q);
    EXPECT_TRUE(check_manin(b, b, FirstOrderMatrix::identity(2, ctx)).pass);
  }
}

TEST(Manin, ScalarMatricesAreAntisymmetrizerManin) {
  std::mt19937 rng(2);
  for (int m = 2; m <= 3; ++m)
    for (int trial = 0; trial < 5; ++trial) EXPECT_TRUE(check_scalar_manin(antisym(m, Q), antisym(m, Q), random_scalar(rng, m, m)).pass);
}

TEST(Manin, UniversalMatrix) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 6; ++trial) {
    Idempotent a = random_idempotent(2, rng, Q);
    Idempotent b = random_idempotent(trial % 2 + 1, rng, Q);
    ContextPtr ctx = qa_context(cohom_algebra(b, a), 2);
    EXPECT_TRUE(check_manin(a, b, FirstOrderMatrix::universal(a.n(), b.n(), ctx)).pass);
  }
}

TEST(Manin, WitnessOnFailure) {
  ContextPtr free2 = qa_context(tensor_algebra(4, Q), 2);
  Idempotent a = antisym(2, Q);
  Report r = check_manin(a, a, FirstOrderMatrix::universal(2, 2, free2));
  ASSERT_FALSE(r.pass);
  EXPECT_EQ(r.witness_kind, "ijkl");
  EXPECT_EQ(r.witness.size(), 4U);
  EXPECT_FALSE(r.expansion.empty());
}

TEST(Manin, Commute) {
  ContextPtr comm = qa_context(algebra_X(antisym(2, Q)), 2);
  FirstOrderMatrix x(1, 1, comm), y(1, 1, comm);
  x.set(0, 0, u(0));
  y.set(0, 0, u(1));
  EXPECT_TRUE(commute_entrywise(x, x).pass);
  EXPECT_TRUE(commute_entrywise(x, y).pass);
  ContextPtr free2 = qa_context(tensor_algebra(2, Q), 2);
  FirstOrderMatrix xf(1, 1, free2), yf(1, 1, free2);
  xf.set(0, 0, u(0));
  yf.set(0, 0, u(1));
  EXPECT_FALSE(commute_entrywise(xf, yf).pass);
}

TEST(Manin, DirectSumAndDotTensor) {
  ContextPtr f = field_context(Q, 4);
  EXPECT_EQ(direct_sum(FirstOrderMatrix::identity(2, f), FirstOrderMatrix::identity(1, f)), FirstOrderMatrix::identity(3, f));
  std::mt19937 rng(4);
  Matrix k = random_scalar(rng, 2, 2), l = random_scalar(rng, 2, 1);
  FirstOrderMatrix ds = direct_sum(FirstOrderMatrix::from_scalar(k, f), FirstOrderMatrix::from_scalar(l, f));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 3; ++j) {
      Scalar want = i < 2 && j < 2 ? k(i, j) : (i >= 2 && j >= 2 ? l(i - 2, j - 2) : Scalar(0));
      EXPECT_EQ(ds.at(i, j), u(0).scaled(want));
    }
  ContextPtr lifted = lift(f);
  EXPECT_EQ(dot_tensor(FirstOrderMatrix::identity(2, f), FirstOrderMatrix::identity(2, f)), FirstOrderMatrix::identity(4, lifted));
  FirstOrderMatrix dt = dot_tensor(FirstOrderMatrix::from_scalar(k, f), FirstOrderMatrix::from_scalar(l, f));
  EXPECT_EQ(dt, FirstOrderMatrix::from_scalar(kron(k, l), lifted));
}

TEST(Manin, Multiplicative) {
  EXPECT_TRUE(multiplicative_check(FirstOrderMatrix::identity(3, field_context(Q))).pass);
  ComonoidPtr c = coend_comonoid(antisym(2, Q));
  EXPECT_TRUE(multiplicative_check(FirstOrderMatrix::universal(2, 2, c->ctx)).pass);
  // Δ(0) = 0 ⊗ 0 holds but ε(0) = 0 ≠ 1
  FirstOrderMatrix zero(1, 1, field_context(Q));
  Report r = multiplicative_check(zero);
  EXPECT_FALSE(r.pass);
}

TEST(Manin, CohomMap) {
  Idempotent a = antisym(2, Q);
  Matrix id = Matrix::identity(2, Q);
  CohomMap same = cohom_map(id, id, a, a, a, a);
  EXPECT_TRUE(same.valid);
  EXPECT_EQ(same.f1, Matrix::identity(4, Q));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 5; ++trial) EXPECT_TRUE(cohom_map(random_scalar(rng, 2, 2), random_scalar(rng, 2, 2), a, a, a, a).valid);
  // so_B(2) mixes in the quadric, which a generic scalar matrix does not preserve
  Matrix bad = Matrix::from_values({{Scalar(1), Scalar(2)}, {Scalar(0), Scalar(1)}}, Q);
  EXPECT_THROW(cohom_map(bad, id, so_B(2, Q), so_B(2, Q), a, a), InvalidArgument);
}

// Direct sum over block idempotents with antisymmetrized mixed pairs is Manin
// exactly when both blocks are and their entries commute; the coproduct
// idempotent drops the commutation requirement.
TEST(ManinProperty, BlockTheorems) {
  std::mt19937 rng(101);
  int positives = 0, negatives = 0, noncommuting_positive = 0;
  for (int i = 0; i < 100; ++i) {
    instances::BlockInstance inst = instances::random_block_instance(rng, i);
    auto ds = instances::direct_sum_verdict(inst);
    EXPECT_EQ(ds.composite, ds.m_manin && ds.n_manin && ds.commute) << inst.family << " #" << i;
    auto cp = instances::coproduct_verdict(inst);
    EXPECT_EQ(cp.composite, cp.m_manin && cp.n_manin) << inst.family << " #" << i;
    (ds.composite ? positives : negatives)++;
    if (cp.composite && !cp.commute) ++noncommuting_positive;
  }
  EXPECT_GT(positives, 10);
  EXPECT_GT(negatives, 10);
  EXPECT_GT(noncommuting_positive, 3);
}

// Dot tensor products against the independently computed commutation
// condition, with M and N Manin in every instance.
TEST(ManinProperty, TensorTheorem) {
  Idempotent a = antisym(2, Q), z = zero_idempotent(2, Q), s = so_B(2, Q);
  struct Case {
    Idempotent b, b2, c, c2;
    int mode;
  };
  std::vector<Case> cases = {{a, a, a, a, 0}, {a, a, a, a, 1}, {a, a, a, a, 2}, {a, a, z, z, 0}, {s, a, a, a, 2}};
  int pass = 0, fail = 0;
  for (const Case& cs : cases) {
    ContextPtr ctx = instances::pmn_context(cs.b, cs.b2, cs.c, cs.c2, cs.mode);
    FirstOrderMatrix m(2, 2, ctx), n(2, 2, ctx);
    for (int i = 0; i < 4; ++i) {
      m.set(i / 2, i % 2, u(i));
      n.set(i / 2, i % 2, u(4 + i));
    }
    ASSERT_TRUE(check_manin(cs.b, cs.b2, m).pass);
    ASSERT_TRUE(check_manin(cs.c, cs.c2, n).pass);
    bool lhs = check_manin(tep(cs.b, cs.c), tep(cs.b2, cs.c2), dot_tensor(m, n)).pass;
    bool rhs = instances::mn_commutation(cs.b, cs.b2, cs.c, cs.c2, m, n);
    EXPECT_EQ(lhs, rhs) << "mode " << cs.mode;
    (lhs ? pass : fail)++;
  }
  EXPECT_GT(pass, 0);
  EXPECT_GT(fail, 0);
}

}  // namespace
