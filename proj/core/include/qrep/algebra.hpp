#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "qrep/linalg.hpp"

namespace qrep {

// Square matrix E on K^n ⊗ K^n with E² = E, validated at construction.
class Idempotent {
 public:
  // Throws ShapeError unless square of side n², NotIdempotent with a witness
  // entry of E² − E otherwise.
  static Idempotent make(const Matrix& m);

  int n() const { return n_; }
  const Matrix& matrix() const { return m_; }
  const Field& field() const { return m_.field(); }
  // 1 − E
  Matrix complement() const;

  friend bool operator==(const Idempotent& a, const Idempotent& b) { return a.m_ == b.m_; }

 private:
  Idempotent(int n, Matrix m) : n_(n), m_(std::move(m)) {}
  int n_ = 0;
  Matrix m_;
};

inline Idempotent make_idempotent(const Matrix& m) { return Idempotent::make(m); }

// P D P⁻¹ on K^n ⊗ K^n with P a random small-integer matrix (entries may
// involve the field variable) and D a 0/1 diagonal of the given rank
// (random when negative).
Idempotent random_idempotent(int n, std::mt19937& rng, const Field& f, int rank = -1);

// (P_m)^{ij}_{kl} = δ^i_l δ^j_k
Matrix perm_matrix(int m, const Field& f);
// (P^q)^{ij}_{kl} = q_{ji} δ^i_l δ^j_k for a parameter matrix q (0-based q[i][j]).
Matrix q_perm_matrix(const std::vector<std::vector<Scalar>>& q, const Field& f);
// (Q_m)^{ij}_{kl} = δ^{i+j}_{m+1} δ^{k+l}_{m+1}
Matrix q_matrix(int m, const Field& f);
// Parameters q_{ij} = q for i < j, q_{ji} = 1/q, q_{ii} = 1.
std::vector<std::vector<Scalar>> uniform_q_params(int m, const Scalar& q);

Idempotent antisym(int m, const Field& f);
// Requires q_{ij} q_{ji} = 1 and q_{ii} = 1; throws InvalidArgument otherwise.
Idempotent q_antisym(const std::vector<std::vector<Scalar>>& q, const Field& f);
Idempotent so_B(int m, const Field& f);
Idempotent zero_idempotent(int m, const Field& f);
Idempotent one_idempotent(int m, const Field& f);

// σ E σ, entries (E^{(21)})^{ij}_{kl} = E^{ji}_{lk}
Idempotent conj21(const Idempotent& e);
// σ23 (B⊗1 + 1⊗C − B⊗C) σ23⁻¹ on K^m⊗K^n⊗K^m⊗K^n
Idempotent tep(const Idempotent& b, const Idempotent& c);
// σ23 (B⊗C) σ23⁻¹
Idempotent black_tep(const Idempotent& b, const Idempotent& c);
// Blocks B and C; mixed pairs carry the antisymmetrizer.
Idempotent dis(const Idempotent& b, const Idempotent& c);
// Blocks B and C only.
Idempotent cop(const Idempotent& b, const Idempotent& c);

// TV/(R) with R ⊂ V⊗V held canonically.
struct QuadraticAlgebra {
  int n = 0;
  std::vector<std::string> labels;
  Subspace relations;

  const Field& field() const { return relations.field(); }
  // Human-readable relation list, e.g. "x1*x2 - x2*x1 = 0".
  std::vector<std::string> relation_strings() const;
  std::string monomial(int idx) const;
};

std::vector<std::string> indexed_labels(const std::string& prefix, int n);
// Linear combination printer: "2*x1 - q*x2", "0" for the zero vector.
std::string format_linear(const Field& f, const SVec& v, const std::function<std::string(int)>& label);

QuadraticAlgebra make_algebra(int n, const std::vector<SVec>& relations, const Field& f,
                              std::vector<std::string> labels = {});
QuadraticAlgebra tensor_algebra(int n, const Field& f);
// Relations rowspace(E).
QuadraticAlgebra algebra_X(const Idempotent& e);
// Relations rowspace((1 − E)ᵀ).
QuadraticAlgebra algebra_Xi(const Idempotent& e);
QuadraticAlgebra koszul_dual(const QuadraticAlgebra& a);
QuadraticAlgebra opposite(const QuadraticAlgebra& a);

enum class ProductKind { white, black, even_tensor, odd_tensor, amalg };
ProductKind product_kind_from_string(const std::string& s);
std::string to_string(ProductKind k);
QuadraticAlgebra product(const QuadraticAlgebra& a, const QuadraticAlgebra& b, ProductKind kind);

// Generators M^i_j (i on the A side, j on the B side, index i·m + j);
// relations Σ A^{pq}_{st} (1−B)^{kl}_{ij} M^s_k ⊗ M^t_l.
QuadraticAlgebra cohom_algebra(const Idempotent& b, const Idempotent& a);

// True iff (f1⊗f1) maps the relations of src into those of dst. f1 has
// dst.n rows and src.n columns.
bool extends_to_hom(const Matrix& f1, const QuadraticAlgebra& src, const QuadraticAlgebra& dst);

// Degree-by-degree normal forms of a quadratic algebra. Basis monomials of A_k
// are the pivot-complement words of the degree-k relation span, found by
// extending A_{k-1} ⊗ V and reducing the new relations V^{k-2} ⊗ R.
class GradedQuotient {
 public:
  // memory_guard bounds the column count of the working space A_{k-1} ⊗ V.
  GradedQuotient(const QuadraticAlgebra& a, int max_degree, long memory_guard = 400'000);

  int max_degree() const { return static_cast<int>(levels_.size()) - 1; }
  int dim(int k) const;
  const std::vector<int>& basis_word(int k, int idx) const;
  std::string basis_label(int k, int idx) const;
  // Normal form of a word, in A_{word.size()} coordinates.
  SVec normal_form(const std::vector<int>& word) const;
  // Product of basis elements of A_j and A_k, in A_{j+k} coordinates.
  SVec product(int j, int x, int k, int y) const;

 private:
  struct Level {
    std::vector<std::vector<int>> words;
    std::vector<int> ycol_to_basis;
    RowEchelon ech{0, RowEchelon::Mode::field};
    mutable std::unordered_map<std::int64_t, SVec> memo;
  };
  SVec nf_code(int k, std::int64_t code, const std::vector<int>& word) const;
  QuadraticAlgebra alg_;
  int n_;
  std::vector<Level> levels_;
};

// dim A_k through the normal-form construction. Throws CapExceeded when
// k > cap or the working space exceeds the memory guard.
int graded_dim(const QuadraticAlgebra& a, int k, int cap = 6);
// dim A_k = n^k − rank(Σ V^{⊗i} ⊗ R ⊗ V^{⊗(k−2−i)}) computed on the full space.
int graded_dim_direct(const QuadraticAlgebra& a, int k);

}  // namespace qrep
