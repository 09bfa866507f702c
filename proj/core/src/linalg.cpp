#include "qrep/linalg.hpp"

#include <algorithm>

#include "qrep/errors.hpp"

namespace qrep {

// ---------------------------------------------------------------- SVec

Scalar SVec::at(int i) const {
  auto it = std::lower_bound(e.begin(), e.end(), i,
                             [](const auto& p, int v) { return p.first < v; });
  if (it != e.end() && it->first == i) return it->second;
  return Scalar();
}

SVec SVec::unit(int i, Scalar v) {
  SVec s;
  if (!v.is_zero()) s.e.emplace_back(i, std::move(v));
  return s;
}

SVec SVec::from_dense(const std::vector<Scalar>& d) {
  SVec s;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!d[i].is_zero()) s.e.emplace_back(static_cast<int>(i), d[i]);
  return s;
}

std::vector<Scalar> SVec::to_dense(int n) const {
  std::vector<Scalar> d(static_cast<std::size_t>(n));
  for (const auto& [i, v] : e) d[static_cast<std::size_t>(i)] = v;
  return d;
}

SVec SVec::scaled(const Scalar& s) const {
  if (s.is_zero()) return {};
  if (s.is_one()) return *this;
  SVec r = *this;
  for (auto& p : r.e) p.second *= s;
  return r;
}

SVec axpy(const SVec& y, const Scalar& a, const SVec& x) {
  if (a.is_zero() || x.is_zero()) return y;
  SVec r;
  r.e.reserve(y.e.size() + x.e.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < y.e.size() || j < x.e.size()) {
    if (j == x.e.size() || (i < y.e.size() && y.e[i].first < x.e[j].first)) {
      r.e.push_back(y.e[i++]);
    } else if (i == y.e.size() || x.e[j].first < y.e[i].first) {
      r.e.emplace_back(x.e[j].first, a * x.e[j].second);
      ++j;
    } else {
      Scalar v = y.e[i].second + a * x.e[j].second;
      if (!v.is_zero()) r.e.emplace_back(y.e[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return r;
}

void add_scaled(SVec& y, const Scalar& a, const SVec& x) { y = axpy(y, a, x); }

SVec operator+(const SVec& a, const SVec& b) { return axpy(a, Scalar(1), b); }
SVec operator-(const SVec& a, const SVec& b) { return axpy(a, Scalar(-1), b); }

SVec outer(const SVec& x, const SVec& y, int dy) {
  SVec r;
  r.e.reserve(x.nnz() * y.nnz());
  for (const auto& [i, a] : x.e)
    for (const auto& [j, b] : y.e) r.e.emplace_back(i * dy + j, a * b);
  return r;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(int rows, int cols, Field field)
    : r_(rows), c_(cols), f_(std::move(field)),
      a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
}

Matrix Matrix::identity(int n, const Field& f) {
  Matrix m(n, n, f);
  for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<SVec>& rows, int cols, const Field& f) {
  Matrix m(static_cast<int>(rows.size()), cols, f);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [j, v] : rows[i].e) m(static_cast<int>(i), j) = v;
  return m;
}

Matrix Matrix::from_values(const std::vector<std::vector<Scalar>>& v, const Field& f) {
  int r = static_cast<int>(v.size());
  int c = r ? static_cast<int>(v[0].size()) : 0;
  Matrix m(r, c, f);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(v[static_cast<std::size_t>(i)].size()) != c) throw ShapeError("ragged matrix rows");
    for (int j = 0; j < c; ++j) {
      f.check_member(v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      m(i, j) = v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return m;
}

SVec Matrix::row(int i) const {
  SVec s;
  for (int j = 0; j < c_; ++j)
    if (!(*this)(i, j).is_zero()) s.e.emplace_back(j, (*this)(i, j));
  return s;
}

SVec Matrix::col(int j) const {
  SVec s;
  for (int i = 0; i < r_; ++i)
    if (!(*this)(i, j).is_zero()) s.e.emplace_back(i, (*this)(i, j));
  return s;
}

std::vector<SVec> Matrix::row_list() const {
  std::vector<SVec> out;
  out.reserve(static_cast<std::size_t>(r_));
  for (int i = 0; i < r_; ++i) out.push_back(row(i));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_, f_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m = *this;
  for (auto& x : m.a_) x *= s;
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& x) { return x.is_zero(); });
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a.f_, b.f_);
  if (a.r_ != b.r_ || a.c_ != b.c_) throw ShapeError("matrix sum shape mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_field(a.f_, b.f_);
  if (a.r_ != b.r_ || a.c_ != b.c_) throw ShapeError("matrix difference shape mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a.f_, b.f_);
  if (a.c_ != b.r_) throw ShapeError("matrix product shape mismatch");
  Matrix m(a.r_, b.c_, a.f_);
  std::vector<std::vector<std::pair<int, const Scalar*>>> brows(static_cast<std::size_t>(b.r_));
  for (int k = 0; k < b.r_; ++k)
    for (int j = 0; j < b.c_; ++j)
      if (!b(k, j).is_zero()) brows[static_cast<std::size_t>(k)].emplace_back(j, &b(k, j));
  for (int i = 0; i < a.r_; ++i)
    for (int k = 0; k < a.c_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (const auto& [j, y] : brows[static_cast<std::size_t>(k)]) m(i, j) += x * *y;
    }
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.r_ == b.r_ && a.c_ == b.c_ && a.f_ == b.f_ && a.a_ == b.a_;
}

SVec Matrix::apply(const SVec& x) const {
  if (x.lead_index() >= c_ || (!x.e.empty() && x.e.back().first >= c_)) throw ShapeError("vector exceeds matrix width");
  SVec out;
  for (int i = 0; i < r_; ++i) {
    Scalar acc;
    for (const auto& [j, v] : x.e) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero()) acc += a * v;
    }
    if (!acc.is_zero()) out.e.emplace_back(i, std::move(acc));
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) m(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return m;
}

int shuffle_23_index(int idx, int n, int m) {
  int d = idx % m;
  idx /= m;
  int c = idx % m;
  idx /= m;
  int b = idx % n;
  int a = idx / n;
  return ((a * m + c) * n + b) * m + d;
}

Matrix shuffle_23(int n, int m, const Field& f) {
  if (n < 1 || m < 1) throw ShapeError("shuffle dimensions must be positive");
  int N = n * n * m * m;
  Matrix s(N, N, f);
  for (int idx = 0; idx < N; ++idx) s(shuffle_23_index(idx, n, m), idx) = Scalar(1);
  return s;
}

Matrix flip(int n, const Field& f) {
  Matrix s(n * n, n * n, f);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s(j * n + i, i * n + j) = Scalar(1);
  return s;
}

// ---------------------------------------------------------------- RowEchelon

namespace {

Poly lcm(const Poly& a, const Poly& b) {
  if (a.degree() <= 0) return b;
  if (b.degree() <= 0) return a;
  Poly g = Poly::gcd(a, b);
  return Poly::divmod(a * b, g).first.monic();
}

// Clears denominators so every entry is a polynomial.
void make_polynomial(SVec& v) {
  Poly l(Rational(1));
  for (const auto& [i, x] : v.e)
    if (!x.is_polynomial()) l = lcm(l, x.as_ratfunc().den());
  if (l.degree() <= 0) return;
  Scalar s{RatFunc(l)};
  for (auto& p : v.e) p.second *= s;
}

int max_degree(const SVec& v) {
  int d = 0;
  for (const auto& [i, x] : v.e)
    if (!x.is_rational()) d = std::max(d, x.as_ratfunc().num().degree());
  return d;
}

// Divides a polynomial row by the gcd of its entries and makes the leading
// entry monic.
void make_primitive(SVec& v) {
  if (v.is_zero()) return;
  Poly g;
  for (const auto& [i, x] : v.e) {
    g = Poly::gcd(g, x.as_poly());
    if (g.degree() == 0) break;
  }
  Scalar s = Scalar(RatFunc(g)).inv();
  Rational lead = v.e.front().second.as_poly().lead() / g.lead();
  s *= Scalar(Rational(1 / lead));
  for (auto& p : v.e) p.second *= s;
}

}  // namespace

RowEchelon::RowEchelon(int ncols, Mode mode)
    : n_(ncols), mode_(mode), where_(static_cast<std::size_t>(ncols), -1) {}

void RowEchelon::eliminate(SVec& v, std::size_t k, const SVec& row) const {
  Scalar c = v.e[k].second;
  if (mode_ == Mode::field) {
    v = axpy(v, -c, row);
  } else {
    v = axpy(v.scaled(row.e.front().second), -c, row);
  }
}

SVec RowEchelon::reduce(SVec v) const {
  if (!v.e.empty() && v.e.back().first >= n_) throw ShapeError("vector exceeds echelon width");
  if (mode_ == Mode::fraction_free) make_polynomial(v);
  std::size_t k = 0;
  while (k < v.e.size()) {
    int r = where_[static_cast<std::size_t>(v.e[k].first)];
    if (r < 0) {
      ++k;
      continue;
    }
    eliminate(v, k, rows_[static_cast<std::size_t>(r)]);
    if (mode_ == Mode::fraction_free && max_degree(v) > 6) make_primitive(v);
  }
  if (mode_ == Mode::fraction_free) make_primitive(v);
  return v;
}

bool RowEchelon::insert(SVec v) {
  v = reduce(std::move(v));
  if (v.is_zero()) return false;
  if (mode_ == Mode::field) v = v.scaled(v.e.front().second.inv());
  where_[static_cast<std::size_t>(v.e.front().first)] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

std::vector<int> RowEchelon::pivots() const {
  std::vector<int> p;
  for (int c = 0; c < n_; ++c)
    if (where_[static_cast<std::size_t>(c)] >= 0) p.push_back(c);
  return p;
}

std::vector<SVec> RowEchelon::rref() const {
  std::vector<SVec> out;
  std::vector<int> piv = pivots();
  out.reserve(piv.size());
  for (int c : piv) out.push_back(rows_[static_cast<std::size_t>(where_[static_cast<std::size_t>(c)])]);
  for (std::size_t i = out.size(); i-- > 0;) {
    SVec& r = out[i];
    if (!r.e.front().second.is_one()) r = r.scaled(r.e.front().second.inv());
    int p = piv[i];
    for (std::size_t j = 0; j < i; ++j) {
      Scalar c = out[j].at(p);
      if (!c.is_zero()) out[j] = axpy(out[j], -c, r);
    }
  }
  return out;
}

RrefResult rref(const Matrix& m) {
  RowEchelon ech(m.cols(), RowEchelon::mode_for(m.field()));
  for (int i = 0; i < m.rows(); ++i) ech.insert(m.row(i));
  RrefResult r;
  r.pivots = ech.pivots();
  r.rank = ech.rank();
  r.basis = Matrix::from_rows(ech.rref(), m.cols(), m.field());
  return r;
}

Matrix inverse(const Matrix& m) {
  int n = m.rows();
  if (m.cols() != n) throw ShapeError("only square matrices are invertible");
  RowEchelon ech(2 * n, RowEchelon::mode_for(m.field()));
  for (int i = 0; i < n; ++i) {
    SVec r = m.row(i);
    r.e.emplace_back(n + i, Scalar(1));
    ech.insert(std::move(r));
  }
  std::vector<SVec> rows = ech.rref();
  if (static_cast<int>(rows.size()) != n || rows.back().lead_index() >= n) throw DivisionByZero("matrix is singular");
  Matrix out(n, n, m.field());
  for (int i = 0; i < n; ++i)
    for (const auto& [j, c] : rows[static_cast<std::size_t>(i)].e)
      if (j >= n) out(i, j - n) = c;
  return out;
}

int rank(const Matrix& m) {
  RowEchelon ech(m.cols(), RowEchelon::mode_for(m.field()));
  for (int i = 0; i < m.rows(); ++i) ech.insert(m.row(i));
  return ech.rank();
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(const std::vector<SVec>& rows, int ambient, const Field& f) {
  RowEchelon ech(ambient, RowEchelon::mode_for(f));
  for (const auto& r : rows) ech.insert(r);
  Subspace s(ambient, f);
  s.basis_ = ech.rref();
  s.piv_ = ech.pivots();
  return s;
}

Subspace Subspace::rowspace(const Matrix& m) { return span(m.row_list(), m.cols(), m.field()); }

Subspace Subspace::full(int ambient, const Field& f) {
  Subspace s(ambient, f);
  for (int i = 0; i < ambient; ++i) {
    s.basis_.push_back(SVec::unit(i));
    s.piv_.push_back(i);
  }
  return s;
}

Matrix Subspace::basis_matrix() const { return Matrix::from_rows(basis_, amb_, f_); }

bool Subspace::contains(const SVec& v) const {
  // The basis is reduced, so subtracting along pivots is exact.
  SVec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Scalar c = r.at(piv_[i]);
    if (!c.is_zero()) r = axpy(r, -c, basis_[i]);
  }
  return r.is_zero();
}

bool Subspace::contains(const Subspace& s) const {
  if (s.amb_ != amb_) throw ShapeError("ambient dimension mismatch");
  require_same_field(f_, s.f_);
  return std::all_of(s.basis_.begin(), s.basis_.end(), [&](const SVec& v) { return contains(v); });
}

Subspace Subspace::sum(const Subspace& o) const {
  if (o.amb_ != amb_) throw ShapeError("ambient dimension mismatch");
  require_same_field(f_, o.f_);
  std::vector<SVec> rows = basis_;
  rows.insert(rows.end(), o.basis_.begin(), o.basis_.end());
  return span(rows, amb_, f_);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (o.amb_ != amb_) throw ShapeError("ambient dimension mismatch");
  require_same_field(f_, o.f_);
  RowEchelon ech(2 * amb_, RowEchelon::mode_for(f_));
  for (const auto& a : basis_) {
    SVec r = a;
    for (const auto& [i, v] : a.e) r.e.emplace_back(i + amb_, v);
    ech.insert(r);
  }
  for (const auto& b : o.basis_) ech.insert(b);
  std::vector<SVec> inter;
  for (const auto& r : ech.rref()) {
    if (r.lead_index() < amb_) continue;
    SVec s;
    for (const auto& [i, v] : r.e) s.e.emplace_back(i - amb_, v);
    inter.push_back(std::move(s));
  }
  return span(inter, amb_, f_);
}

Subspace Subspace::annihilator() const {
  Subspace k = kernel(basis_matrix());
  return k;
}

Subspace Subspace::image(const Matrix& t) const {
  if (t.cols() != amb_) throw ShapeError("operator width does not match ambient dimension");
  require_same_field(f_, t.field());
  std::vector<SVec> rows;
  rows.reserve(basis_.size());
  for (const auto& b : basis_) rows.push_back(t.apply(b));
  return span(rows, t.rows(), f_);
}

Subspace kernel(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_piv(static_cast<std::size_t>(m.cols()), false);
  for (int p : r.pivots) is_piv[static_cast<std::size_t>(p)] = true;
  std::vector<SVec> vecs;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_piv[static_cast<std::size_t>(f)]) continue;
    std::vector<Scalar> x(static_cast<std::size_t>(m.cols()));
    x[static_cast<std::size_t>(f)] = Scalar(1);
    for (int i = 0; i < r.rank; ++i) x[static_cast<std::size_t>(r.pivots[static_cast<std::size_t>(i)])] = -r.basis(i, f);
    vecs.push_back(SVec::from_dense(x));
  }
  return Subspace::span(vecs, m.cols(), m.field());
}

}  // namespace qrep
