#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qrep/field.hpp"
#include "qrep/scalar.hpp"

namespace qrep {

// Sparse vector: (index, nonzero value) pairs in strictly increasing index order.
struct SVec {
  std::vector<std::pair<int, Scalar>> e;

  bool is_zero() const { return e.empty(); }
  std::size_t nnz() const { return e.size(); }
  Scalar at(int i) const;
  int lead_index() const { return e.empty() ? -1 : e.front().first; }

  static SVec unit(int i, Scalar v = Scalar(1));
  static SVec from_dense(const std::vector<Scalar>& d);
  std::vector<Scalar> to_dense(int n) const;

  SVec scaled(const Scalar& s) const;
  SVec operator-() const { return scaled(Scalar(-1)); }
  friend SVec operator+(const SVec& a, const SVec& b);
  friend SVec operator-(const SVec& a, const SVec& b);
  friend bool operator==(const SVec&, const SVec&) = default;
};

// y + a·x
SVec axpy(const SVec& y, const Scalar& a, const SVec& x);
// Accumulates a·x into y in place.
void add_scaled(SVec& y, const Scalar& a, const SVec& x);
// Coordinates of x⊗y in a product space whose second factor has dimension dy.
SVec outer(const SVec& x, const SVec& y, int dy);

// Dense exact matrix over a declared field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, Field field);
  static Matrix identity(int n, const Field& f);
  static Matrix from_rows(const std::vector<SVec>& rows, int cols, const Field& f);
  static Matrix from_values(const std::vector<std::vector<Scalar>>& v, const Field& f);

  int rows() const { return r_; }
  int cols() const { return c_; }
  const Field& field() const { return f_; }

  Scalar& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(c_) + static_cast<std::size_t>(j)]; }
  const Scalar& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(c_) + static_cast<std::size_t>(j)]; }

  SVec row(int i) const;
  SVec col(int j) const;
  std::vector<SVec> row_list() const;

  Matrix transpose() const;
  Matrix scaled(const Scalar& s) const;
  bool is_zero() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  // Matrix times column vector given sparsely.
  SVec apply(const SVec& x) const;

 private:
  int r_ = 0;
  int c_ = 0;
  Field f_;
  std::vector<Scalar> a_;
};

Matrix kron(const Matrix& a, const Matrix& b);
// Permutation V⊗V⊗W⊗W → V⊗W⊗V⊗W, basis (a,b,c,d) ↦ (a,c,b,d); dim V = n, dim W = m.
Matrix shuffle_23(int n, int m, const Field& f);
// The flip σ on K^n ⊗ K^n.
Matrix flip(int n, const Field& f);
// Index of (a,b,c,d) ↦ (a,c,b,d) for the shuffle, 0-based flattened indices.
int shuffle_23_index(int idx, int n, int m);

// Incremental row echelon form. Field mode keeps pivot entries equal to one and
// reduces exactly; fraction-free mode keeps polynomial rows with primitive
// normalization and is used for ranks and spans over Q(t).
class RowEchelon {
 public:
  enum class Mode { field, fraction_free };
  RowEchelon(int ncols, Mode mode);
  static Mode mode_for(const Field& f) {
    return f.is_ratfunc() ? Mode::fraction_free : Mode::field;
  }

  // Adds a row; returns true if it increased the rank.
  bool insert(SVec v);
  // Eliminates all pivot columns. Exact in field mode; in fraction-free mode
  // the result is a nonzero multiple of the exact residual.
  SVec reduce(SVec v) const;
  bool in_span(const SVec& v) const { return reduce(v).is_zero(); }

  int rank() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return n_; }
  bool is_pivot(int col) const { return where_[static_cast<std::size_t>(col)] >= 0; }
  std::vector<int> pivots() const;
  // Canonical reduced row echelon basis, sorted by pivot.
  std::vector<SVec> rref() const;

 private:
  void eliminate(SVec& v, std::size_t k, const SVec& row) const;
  int n_;
  Mode mode_;
  std::vector<SVec> rows_;
  std::vector<int> where_;
};

struct RrefResult {
  Matrix basis;
  std::vector<int> pivots;
  int rank = 0;
};

RrefResult rref(const Matrix& m);
int rank(const Matrix& m);

// Subspace of F^ambient held by its canonical RREF basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(int ambient, Field f) : amb_(ambient), f_(std::move(f)) {}
  static Subspace span(const std::vector<SVec>& rows, int ambient, const Field& f);
  static Subspace rowspace(const Matrix& m);
  static Subspace full(int ambient, const Field& f);

  int ambient() const { return amb_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const Field& field() const { return f_; }
  const std::vector<SVec>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return piv_; }
  Matrix basis_matrix() const;

  bool contains(const SVec& v) const;
  bool contains(const Subspace& s) const;
  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  // {x : <x, b> = 0 for all basis vectors b} under the standard pairing.
  Subspace annihilator() const;
  // {T v : v in this}, where vectors are columns and T maps ambient → T.rows().
  Subspace image(const Matrix& t) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.amb_ == b.amb_ && a.basis_ == b.basis_;
  }

 private:
  int amb_ = 0;
  Field f_;
  std::vector<SVec> basis_;
  std::vector<int> piv_;
};

// Throws ShapeError unless square, DivisionByZero when singular.
Matrix inverse(const Matrix& m);

// Null space {x : m x = 0}.
Subspace kernel(const Matrix& m);

}  // namespace qrep
