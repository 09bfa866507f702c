#include <cmath>
#include <string>

#include "qrep/algebra.hpp"
#include "qrep/errors.hpp"

namespace qrep {

namespace {

int side_root(int side) {
  int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(side))));
  while (n * n > side) --n;
  while ((n + 1) * (n + 1) <= side) ++n;
  return n * n == side ? n : -1;
}

// out(p(r), p(c)) = in(r, c) for an index permutation p.
template <class Perm>
Matrix conjugate_by(const Matrix& in, Perm p) {
  Matrix out(in.rows(), in.cols(), in.field());
  for (int r = 0; r < in.rows(); ++r)
    for (int c = 0; c < in.cols(); ++c)
      if (!in(r, c).is_zero()) out(p(r), p(c)) = in(r, c);
  return out;
}

}  // namespace

Idempotent Idempotent::make(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("idempotent must be square");
  int n = side_root(m.rows());
  if (n < 1) throw ShapeError("idempotent side " + std::to_string(m.rows()) + " is not a perfect square");
  Matrix d = m * m - m;
  for (int r = 0; r < d.rows(); ++r)
    for (int c = 0; c < d.cols(); ++c)
      if (!d(r, c).is_zero())
        throw NotIdempotent("E^2 - E has entry " + m.field().format(d(r, c)) + " at row " +
                            std::to_string(r + 1) + ", column " + std::to_string(c + 1));
  return Idempotent(n, m);
}

Matrix Idempotent::complement() const { return Matrix::identity(m_.rows(), m_.field()) - m_; }

Matrix perm_matrix(int m, const Field& f) { return flip(m, f); }

Matrix q_perm_matrix(const std::vector<std::vector<Scalar>>& q, const Field& f) {
  int m = static_cast<int>(q.size());
  Matrix p(m * m, m * m, f);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      f.check_member(q[j][i]);
      p(i * m + j, j * m + i) = q[j][i];
    }
  return p;
}

Matrix q_matrix(int m, const Field& f) {
  Matrix out(m * m, m * m, f);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) out(i * m + (m - 1 - i), k * m + (m - 1 - k)) = Scalar(1);
  return out;
}

std::vector<std::vector<Scalar>> uniform_q_params(int m, const Scalar& q) {
  if (q.is_zero()) throw InvalidArgument("q must be nonzero");
  std::vector<std::vector<Scalar>> out(static_cast<std::size_t>(m), std::vector<Scalar>(static_cast<std::size_t>(m), Scalar(1)));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      out[i][j] = q;
      out[j][i] = q.inv();
    }
  return out;
}

Idempotent antisym(int m, const Field& f) {
  if (m < 1) throw InvalidArgument("m must be positive");
  Matrix one = Matrix::identity(m * m, f);
  return Idempotent::make((one - flip(m, f)).scaled(Scalar::fraction(1, 2)));
}

Idempotent q_antisym(const std::vector<std::vector<Scalar>>& q, const Field& f) {
  int m = static_cast<int>(q.size());
  if (m < 1) throw InvalidArgument("m must be positive");
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(q[i].size()) != m) throw ShapeError("q parameters must form a square table");
    if (!q[i][i].is_one()) throw InvalidArgument("q_ii must equal 1");
    for (int j = 0; j < m; ++j)
      if (!(q[i][j] * q[j][i]).is_one()) throw InvalidArgument("q_ij q_ji must equal 1");
  }
  Matrix one = Matrix::identity(m * m, f);
  return Idempotent::make((one - q_perm_matrix(q, f)).scaled(Scalar::fraction(1, 2)));
}

Idempotent so_B(int m, const Field& f) {
  Matrix a = antisym(m, f).matrix();
  return Idempotent::make(a + q_matrix(m, f).scaled(Scalar::fraction(1, m)));
}

Idempotent zero_idempotent(int m, const Field& f) {
  if (m < 1) throw InvalidArgument("m must be positive");
  return Idempotent::make(Matrix(m * m, m * m, f));
}

Idempotent one_idempotent(int m, const Field& f) {
  if (m < 1) throw InvalidArgument("m must be positive");
  return Idempotent::make(Matrix::identity(m * m, f));
}

Idempotent conj21(const Idempotent& e) {
  int n = e.n();
  return Idempotent::make(conjugate_by(e.matrix(), [n](int r) { return (r % n) * n + r / n; }));
}

Idempotent tep(const Idempotent& b, const Idempotent& c) {
  require_same_field(b.field(), c.field());
  const Field& f = b.field();
  Matrix b1 = kron(b.matrix(), Matrix::identity(c.n() * c.n(), f));
  Matrix c1 = kron(Matrix::identity(b.n() * b.n(), f), c.matrix());
  Matrix bc = kron(b.matrix(), c.matrix());
  int n = b.n();
  int m = c.n();
  return Idempotent::make(conjugate_by(b1 + c1 - bc, [n, m](int r) { return shuffle_23_index(r, n, m); }));
}

Idempotent black_tep(const Idempotent& b, const Idempotent& c) {
  require_same_field(b.field(), c.field());
  int n = b.n();
  int m = c.n();
  return Idempotent::make(
      conjugate_by(kron(b.matrix(), c.matrix()), [n, m](int r) { return shuffle_23_index(r, n, m); }));
}

namespace {

Matrix block_sum(const Idempotent& b, const Idempotent& c) {
  require_same_field(b.field(), c.field());
  int m = b.n();
  int n = c.n();
  int s = m + n;
  Matrix d(s * s, s * s, b.field());
  for (int r = 0; r < m * m; ++r)
    for (int col = 0; col < m * m; ++col)
      d((r / m) * s + r % m, (col / m) * s + col % m) = b.matrix()(r, col);
  for (int r = 0; r < n * n; ++r)
    for (int col = 0; col < n * n; ++col)
      d((m + r / n) * s + m + r % n, (m + col / n) * s + m + col % n) = c.matrix()(r, col);
  return d;
}

}  // namespace

Idempotent dis(const Idempotent& b, const Idempotent& c) {
  Matrix d = block_sum(b, c);
  int m = b.n();
  int s = m + c.n();
  Scalar h = Scalar::fraction(1, 2);
  for (int i = 0; i < m; ++i)
    for (int a = m; a < s; ++a) {
      int ia = i * s + a;
      int ai = a * s + i;
      d(ia, ia) = h;
      d(ai, ai) = h;
      d(ia, ai) = -h;
      d(ai, ia) = -h;
    }
  return Idempotent::make(d);
}

Idempotent cop(const Idempotent& b, const Idempotent& c) { return Idempotent::make(block_sum(b, c)); }

Idempotent random_idempotent(int n, std::mt19937& rng, const Field& f, int rank) {
  int side = n * n;
  std::uniform_int_distribution<int> small(-2, 2);
  std::uniform_int_distribution<int> coin(0, 5);
  if (rank < 0) rank = std::uniform_int_distribution<int>(0, side)(rng);
  for (;;) {
    Matrix p(side, side, f);
    for (int i = 0; i < side; ++i)
      for (int j = 0; j < side; ++j) {
        Scalar v(small(rng));
        if (f.is_ratfunc() && coin(rng) == 0) v += Scalar(small(rng)) * Scalar::variable();
        p(i, j) = v;
      }
    Matrix pinv;
    try {
      pinv = inverse(p);
    } catch (const DivisionByZero&) {
      continue;
    }
    Matrix d(side, side, f);
    for (int i = 0; i < rank; ++i) d(i, i) = Scalar(1);
    return Idempotent::make(p * d * pinv);
  }
}

}  // namespace qrep
