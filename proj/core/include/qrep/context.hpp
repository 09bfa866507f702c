#pragma once

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qrep/algebra.hpp"

namespace qrep {

// Graded coefficient context. Grade 1 is the entry space E, grade k ≥ 2 the
// product space P_k. tables[{j,k}][x][y] is the product of basis x of grade j
// with basis y of grade k, a vector of grade j + k.
struct MulContext {
  enum class Kind { qa, table, pbw, slice };

  Kind kind = Kind::table;
  Field field;
  int max_degree = 2;
  std::vector<std::vector<std::string>> labels;  // labels[g] for g = 0..max_degree
  std::map<std::pair<int, int>, std::vector<std::vector<SVec>>> tables;
  std::optional<SVec> unit;                 // in E
  std::map<int, std::vector<SVec>> delta;   // Δ of each grade-g basis vector, index a·dim_g + b
  std::map<int, std::vector<Scalar>> counit;

  int dim(int g) const;
  bool has_table(int j, int k) const { return tables.count({j, k}) > 0; }
  SVec mul(int j, const SVec& x, int k, const SVec& y) const;
  SVec mul(const SVec& x, const SVec& y) const { return mul(1, x, 1, y); }
  bool has_coalgebra(int g = 1) const { return delta.count(g) && counit.count(g); }
  SVec coproduct(int g, const SVec& x) const;
  Scalar counit_of(int g, const SVec& x) const;
  // mul(u, u) for the designated unit u.
  SVec unit_p2() const;
  // Symmetric degree-(1,1) table.
  bool commutative() const;
  std::string format(int g, const SVec& v) const;
  std::string kind_name() const;

  // Throws InvalidArgument on inconsistent dimensions, a unit that is not
  // central-injective, or failed coassociativity/counit (with witness index).
  void validate() const;
};

using ContextPtr = std::shared_ptr<const MulContext>;

MulContext::Kind context_kind_from_string(const std::string& s);

struct LieAlgebra {
  int n = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<SVec>> bracket;  // [a][b] = Σ_c γ_{ab}^c e_c
  Field field;

  // Antisymmetry and Jacobi; throws InvalidArgument naming a witness triple.
  void validate() const;
};

// [E_ij, E_kl] = δ_jk E_il − δ_li E_kj, basis index (i−1)m + j.
LieAlgebra gl_lie(int m, const Field& f);
LieAlgebra abelian_lie(int n, const Field& f, std::vector<std::string> labels = {});

// Ordered-monomial normal form of a word in U(g). With an rng the descent to
// rewrite is chosen at random; without, the leftmost one.
std::map<std::vector<int>, Scalar> pbw_straighten(const LieAlgebra& g, const std::vector<int>& word,
                                                  std::mt19937* rng = nullptr);

// v_i v_j = Σ_k c[i][j]_k v_k with unit Σ d_k v_k.
struct AlgebraStructureConstants {
  int n = 0;
  std::vector<std::string> labels;       // algebra basis
  std::vector<std::string> dual_labels;  // dual basis, used as context labels
  std::vector<std::vector<SVec>> c;
  std::vector<Scalar> d;
  Field field;

  void validate() const;
};

AlgebraStructureConstants matrix_algebra(int m, const Field& f);
// Functions on ℤ/2 with pointwise product, basis δ_e, δ_g.
AlgebraStructureConstants z2_function_algebra(const Field& f);

ContextPtr qa_context(const QuadraticAlgebra& a, int max_degree);
// qa_context plus Δ₁, ε₁ extended multiplicatively to every grade.
ContextPtr qa_bialgebra_context(const QuadraticAlgebra& a, const std::vector<SVec>& delta1,
                                const std::vector<Scalar>& eps1, int max_degree, MulContext::Kind kind);
ContextPtr pbw_context(const LieAlgebra& g, int max_degree);
ContextPtr s_embedding_context(const AlgebraStructureConstants& alg, int max_degree);
ContextPtr t_embedding_context(const AlgebraStructureConstants& alg, int max_degree);
// Every grade equal to the algebra `mult` with coalgebra (delta, eps) on it.
ContextPtr constant_slice_context(const AlgebraStructureConstants& mult, const std::vector<SVec>& delta,
                                  const std::vector<Scalar>& eps, int max_degree);
ContextPtr table_context(MulContext raw);
// E = P_k = span{1}.
ContextPtr field_context(const Field& f, int max_degree = 2);

// E' = P₂, P₂' = P₄, Δ' = Δ₂; requires max_degree ≥ 4.
ContextPtr lift(const ContextPtr& ctx);
ContextPtr opposite_mul(const ContextPtr& ctx);
ContextPtr coopposite(const ContextPtr& ctx);

}  // namespace qrep
