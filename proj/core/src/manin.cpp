#include "qrep/manin.hpp"

#include <string>

#include "qrep/errors.hpp"

namespace qrep {

Report Report::failure(std::string check, std::string message) {
  Report r = ok(std::move(check));
  r.pass = false;
  r.message = std::move(message);
  return r;
}

bool Report::all_pass() const {
  if (!pass) return false;
  for (const auto& p : parts)
    if (!p.all_pass()) return false;
  return true;
}

Report& Report::add(Report part) {
  pass = pass && part.all_pass();
  parts.push_back(std::move(part));
  return *this;
}

FirstOrderMatrix::FirstOrderMatrix(int rows, int cols, ContextPtr ctx)
    : r_(rows), c_(cols), ctx_(std::move(ctx)), e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) throw ShapeError("matrix dimensions must be nonnegative");
  if (!ctx_) throw InvalidArgument("matrix needs a context");
}

FirstOrderMatrix FirstOrderMatrix::identity(int n, ContextPtr ctx) {
  if (!ctx->unit) throw InvalidArgument("identity matrix needs a context with a unit");
  FirstOrderMatrix m(n, n, ctx);
  for (int i = 0; i < n; ++i) m.at(i, i) = *ctx->unit;
  return m;
}

FirstOrderMatrix FirstOrderMatrix::from_scalar(const Matrix& k, ContextPtr ctx) {
  if (!ctx->unit) throw InvalidArgument("scalar matrix needs a context with a unit");
  FirstOrderMatrix m(k.rows(), k.cols(), ctx);
  for (int i = 0; i < k.rows(); ++i)
    for (int j = 0; j < k.cols(); ++j)
      if (!k(i, j).is_zero()) m.at(i, j) = ctx->unit->scaled(k(i, j));
  return m;
}

FirstOrderMatrix FirstOrderMatrix::universal(int rows, int cols, ContextPtr ctx) {
  if (ctx->dim(1) != rows * cols) throw ShapeError("universal matrix needs rows*cols generators");
  FirstOrderMatrix m(rows, cols, ctx);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = SVec::unit(i * cols + j);
  return m;
}

void FirstOrderMatrix::set(int i, int j, SVec v) {
  if (i < 0 || i >= r_ || j < 0 || j >= c_) throw ShapeError("entry index out of range");
  if (!v.is_zero() && v.e.back().first >= ctx_->dim(1)) throw ShapeError("entry vector exceeds the entry space");
  for (const auto& [k, c] : v.e) ctx_->field.check_member(c);
  at(i, j) = std::move(v);
}

FirstOrderMatrix FirstOrderMatrix::transpose() const {
  FirstOrderMatrix t(c_, r_, ctx_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::string FirstOrderMatrix::entry_str(int i, int j) const { return ctx_->format(1, at(i, j)); }

namespace {

void require_same_context(const FirstOrderMatrix& x, const FirstOrderMatrix& y) {
  if (x.context() != y.context()) throw InvalidArgument("matrices live in different contexts");
}

}  // namespace

Report check_manin(const Idempotent& a, const Idempotent& b, const FirstOrderMatrix& x, const FirstOrderMatrix& y) {
  require_same_context(x, y);
  const MulContext& ctx = *x.context();
  int n = a.n();
  int m = b.n();
  if (x.rows() != n || y.rows() != n || x.cols() != m || y.cols() != m)
    throw ShapeError("Manin check needs " + std::to_string(n) + "x" + std::to_string(m) + " matrices");
  require_same_field(a.field(), b.field());
  int p2 = ctx.dim(2);
  int nn = n * n;
  int mm = m * m;
  Matrix c = b.complement();

  // U[(ab)][(kl)] = Σ_cd mul(X^a_c, Y^b_d) (1−B)^{cd}_{kl}
  std::vector<std::vector<SVec>> u(static_cast<std::size_t>(nn), std::vector<SVec>(static_cast<std::size_t>(mm)));
  for (int ab = 0; ab < nn; ++ab) {
    std::vector<std::vector<Scalar>> acc(static_cast<std::size_t>(mm));
    bool any = false;
    for (int cd = 0; cd < mm; ++cd) {
      SVec t = ctx.mul(x.at(ab / n, cd / m), y.at(ab % n, cd % m));
      if (t.is_zero()) continue;
      for (int kl = 0; kl < mm; ++kl) {
        const Scalar& coef = c(cd, kl);
        if (coef.is_zero()) continue;
        auto& slot = acc[static_cast<std::size_t>(kl)];
        if (slot.empty()) slot.resize(static_cast<std::size_t>(p2));
        for (const auto& [i, v] : t.e) slot[static_cast<std::size_t>(i)] += coef * v;
        any = true;
      }
    }
    if (!any) continue;
    for (int kl = 0; kl < mm; ++kl)
      if (!acc[static_cast<std::size_t>(kl)].empty()) u[static_cast<std::size_t>(ab)][static_cast<std::size_t>(kl)] = SVec::from_dense(acc[static_cast<std::size_t>(kl)]);
  }

  Report r = Report::ok("manin");
  const Matrix& am = a.matrix();
  for (int ij = 0; ij < nn; ++ij)
    for (int kl = 0; kl < mm; ++kl) {
      std::vector<Scalar> acc(static_cast<std::size_t>(p2));
      bool any = false;
      for (int ab = 0; ab < nn; ++ab) {
        const Scalar& coef = am(ij, ab);
        if (coef.is_zero()) continue;
        for (const auto& [i, v] : u[static_cast<std::size_t>(ab)][static_cast<std::size_t>(kl)].e) {
          acc[static_cast<std::size_t>(i)] += coef * v;
          any = true;
        }
      }
      if (!any) continue;
      SVec w = SVec::from_dense(acc);
      if (w.is_zero()) continue;
      r.pass = false;
      r.witness_kind = "ijkl";
      r.witness = {ij / n + 1, ij % n + 1, kl / m + 1, kl % m + 1};
      r.expansion = ctx.format(2, w);
      r.message = "component (" + std::to_string(ij / n + 1) + "," + std::to_string(ij % n + 1) + "),(" +
                  std::to_string(kl / m + 1) + "," + std::to_string(kl % m + 1) + ") is nonzero";
      return r;
    }
  return r;
}

Report check_scalar_manin(const Idempotent& a, const Idempotent& b, const Matrix& k) {
  require_same_field(k.field(), a.field());
  auto ctx = field_context(k.field());
  return check_manin(a, b, FirstOrderMatrix::from_scalar(k, ctx));
}

Report commute_entrywise(const FirstOrderMatrix& m, const FirstOrderMatrix& n) {
  require_same_context(m, n);
  const MulContext& ctx = *m.context();
  Report r = Report::ok("commute");
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      for (int a = 0; a < n.rows(); ++a)
        for (int b = 0; b < n.cols(); ++b) {
          SVec d = ctx.mul(m.at(i, j), n.at(a, b)) - ctx.mul(n.at(a, b), m.at(i, j));
          if (d.is_zero()) continue;
          r.pass = false;
          r.witness_kind = "ijab";
          r.witness = {i + 1, j + 1, a + 1, b + 1};
          r.expansion = ctx.format(2, d);
          r.message = "entries M(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") and N(" + std::to_string(a + 1) +
                      "," + std::to_string(b + 1) + ") do not commute";
          return r;
        }
  return r;
}

FirstOrderMatrix direct_sum(const FirstOrderMatrix& m, const FirstOrderMatrix& n) {
  require_same_context(m, n);
  FirstOrderMatrix l(m.rows() + n.rows(), m.cols() + n.cols(), m.context());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) l.at(i, j) = m.at(i, j);
  for (int i = 0; i < n.rows(); ++i)
    for (int j = 0; j < n.cols(); ++j) l.at(m.rows() + i, m.cols() + j) = n.at(i, j);
  return l;
}

FirstOrderMatrix dot_tensor(const FirstOrderMatrix& m, const FirstOrderMatrix& n, ContextPtr lifted) {
  require_same_context(m, n);
  const MulContext& ctx = *m.context();
  if (!lifted) lifted = lift(m.context());
  if (lifted->dim(1) != ctx.dim(2)) throw InvalidArgument("lifted context does not match the product space");
  FirstOrderMatrix p(m.rows() * n.rows(), m.cols() * n.cols(), lifted);
  for (int i = 0; i < m.rows(); ++i)
    for (int a = 0; a < n.rows(); ++a)
      for (int j = 0; j < m.cols(); ++j)
        for (int b = 0; b < n.cols(); ++b) p.at(i * n.rows() + a, j * n.cols() + b) = ctx.mul(m.at(i, j), n.at(a, b));
  return p;
}

Report multiplicative_check(const FirstOrderMatrix& m) {
  const MulContext& ctx = *m.context();
  if (!ctx.has_coalgebra(1)) throw InvalidArgument("multiplicativity needs coproduct and counit tables");
  if (m.rows() != m.cols()) throw ShapeError("multiplicativity needs a square matrix");
  int d = ctx.dim(1);
  Report r = Report::ok("multiplicative");
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      SVec lhs = ctx.coproduct(1, m.at(i, j));
      SVec rhs;
      for (int k = 0; k < m.cols(); ++k) add_scaled(rhs, Scalar(1), outer(m.at(i, k), m.at(k, j), d));
      if (!(lhs == rhs)) {
        const auto& l = ctx.labels[1];
        r.pass = false;
        r.witness_kind = "ij";
        r.witness = {i + 1, j + 1};
        r.expansion = format_linear(ctx.field, lhs - rhs, [&l, d](int x) {
          return l[static_cast<std::size_t>(x / d)] + "(x)" + l[static_cast<std::size_t>(x % d)];
        });
        r.message = "coproduct clause fails at entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        return r;
      }
      Scalar e = ctx.counit_of(1, m.at(i, j));
      if (!(e == Scalar(i == j ? 1 : 0))) {
        r.pass = false;
        r.witness_kind = "ij";
        r.witness = {i + 1, j + 1};
        r.expansion = ctx.field.format(e);
        r.message = "counit clause fails at entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        return r;
      }
    }
  return r;
}

CohomMap cohom_map(const Matrix& k, const Matrix& m, const Idempotent& b, const Idempotent& b2, const Idempotent& a,
                   const Idempotent& a2) {
  if (k.rows() != b2.n() || k.cols() != b.n()) throw ShapeError("K must be dim(B') x dim(B)");
  if (m.rows() != a.n() || m.cols() != a2.n()) throw ShapeError("M must be dim(A) x dim(A')");
  Report rk = check_scalar_manin(b2, b, k);
  if (!rk.pass) throw InvalidArgument("K is not a (B',B)-Manin matrix: " + rk.message);
  Report rm = check_scalar_manin(a, a2, m);
  if (!rm.pass) throw InvalidArgument("M is not an (A,A')-Manin matrix: " + rm.message);
  CohomMap out{cohom_algebra(b, a), cohom_algebra(b2, a2), Matrix(), false};
  int n = a.n();
  int mm = b.n();
  int n2 = a2.n();
  int m2 = b2.n();
  out.f1 = Matrix(n2 * m2, n * mm, k.field());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < mm; ++j)
      for (int x = 0; x < n2; ++x)
        for (int y = 0; y < m2; ++y) out.f1(x * m2 + y, i * mm + j) = m(i, x) * k(y, j);
  out.valid = extends_to_hom(out.f1, out.src, out.dst);
  return out;
}

}  // namespace qrep
