#include "oracle.hpp"

#include <map>
#include <utility>

namespace oracle {

u64 add(u64 a, u64 b) {
  u64 s = a + b;
  return s >= kPrime ? s - kPrime : s;
}

u64 sub(u64 a, u64 b) { return a >= b ? a - b : a + kPrime - b; }

u64 mul(u64 a, u64 b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  u64 lo = static_cast<u64>(p & kPrime);
  u64 hi = static_cast<u64>(p >> 61);
  return add(lo, hi);
}

u64 inv(u64 a) {
  u64 result = 1;
  u64 base = a;
  for (u64 e = kPrime - 2; e; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

namespace {

u64 from_mpz(const mpz_class& z) {
  mpz_class r = z % mpz_class(static_cast<unsigned long>(kPrime));
  if (r < 0) r += static_cast<unsigned long>(kPrime);
  return r.get_ui();
}

u64 from_rational(const qrep::Rational& q) { return mul(from_mpz(q.get_num()), inv(from_mpz(q.get_den()))); }

u64 eval(const qrep::Poly& p, u64 x) {
  u64 acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = add(mul(acc, x), from_rational(*it));
  return acc;
}

}  // namespace

u64 reduce(const qrep::Scalar& s, u64 point) {
  if (s.is_rational()) return from_rational(s.rational());
  qrep::RatFunc f = s.as_ratfunc();
  return mul(eval(f.num(), point), inv(eval(f.den(), point)));
}

Rows dense(const std::vector<qrep::SVec>& rows, int ncols, u64 point) {
  Rows out;
  for (const auto& r : rows) {
    std::vector<u64> d(static_cast<std::size_t>(ncols), 0);
    for (const auto& [i, c] : r.e) d[static_cast<std::size_t>(i)] = reduce(c, point);
    out.push_back(std::move(d));
  }
  return out;
}

Rows dense(const qrep::Matrix& m, u64 point) {
  Rows out(static_cast<std::size_t>(m.rows()), std::vector<u64>(static_cast<std::size_t>(m.cols())));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = reduce(m(i, j), point);
  return out;
}

int rank(Rows a) {
  if (a.empty()) return 0;
  std::size_t ncols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    u64 s = inv(a[r][c]);
    for (std::size_t j = c; j < ncols; ++j) a[r][j] = mul(a[r][j], s);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      u64 f = a[i][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < ncols; ++j)
        if (a[r][j]) a[i][j] = sub(a[i][j], mul(f, a[r][j]));
    }
    ++r;
  }
  return static_cast<int>(r);
}

bool same_span(const Rows& u, const Rows& v) {
  Rows both = u;
  both.insert(both.end(), v.begin(), v.end());
  int ru = rank(u);
  return ru == rank(v) && ru == rank(both);
}

Rows matmul(const Rows& a, const Rows& b) {
  std::size_t n = a.size();
  std::size_t k = b.size();
  std::size_t m = k ? b[0].size() : 0;
  Rows c(n, std::vector<u64>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      u64 x = a[i][l];
      if (!x) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] = add(c[i][j], mul(x, b[l][j]));
    }
  return c;
}

Rows transpose(const Rows& a) {
  if (a.empty()) return {};
  Rows t(a[0].size(), std::vector<u64>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Rows identity(int n) {
  Rows r(static_cast<std::size_t>(n), std::vector<u64>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return r;
}

Rows kron(const Rows& a, const Rows& b) {
  std::size_t ar = a.size(), ac = a.empty() ? 0 : a[0].size();
  std::size_t br = b.size(), bc = b.empty() ? 0 : b[0].size();
  Rows out(ar * br, std::vector<u64>(ac * bc));
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ac; ++j)
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < bc; ++l) out[i * br + k][j * bc + l] = mul(a[i][j], b[k][l]);
  return out;
}

const std::vector<u64>& points() {
  static const std::vector<u64> p = {1'000'003, 982'451'653, 2'305'843'009'213'693'000ULL};
  return p;
}

int hilbert_brute(const std::vector<qrep::SVec>& relations, int n, int k, u64 point) {
  long total = 1;
  for (int i = 0; i < k; ++i) total *= n;
  if (k < 2) return static_cast<int>(total);
  Rows r = dense(relations, n * n, point);
  Rows rows;
  long nn = static_cast<long>(n) * n;
  for (int i = 0; i + 2 <= k; ++i) {
    long left = 1;
    for (int a = 0; a < i; ++a) left *= n;
    long right = total / (left * nn);
    for (long x = 0; x < left; ++x)
      for (const auto& rel : r)
        for (long y = 0; y < right; ++y) {
          std::vector<u64> row(static_cast<std::size_t>(total), 0);
          for (long c = 0; c < nn; ++c)
            if (rel[static_cast<std::size_t>(c)]) row[static_cast<std::size_t>((x * nn + c) * right + y)] = rel[static_cast<std::size_t>(c)];
          rows.push_back(std::move(row));
        }
  }
  return static_cast<int>(total) - rank(std::move(rows));
}

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool same_span(const std::vector<qrep::SVec>& u, const std::vector<qrep::SVec>& v, int ncols) {
  for (u64 p : points())
    if (!same_span(dense(u, ncols, p), dense(v, ncols, p))) return false;
  return true;
}

bool same_span(const qrep::Subspace& u, const std::vector<qrep::SVec>& v) {
  return same_span(u.basis(), v, u.ambient());
}

namespace {

// Coefficient of x_{a}x_{b} ⊗ y_{c}y_{d} lands on (x_a y_c)(x_b y_d).
qrep::SVec pair_row(const std::vector<std::pair<int, qrep::Scalar>>& left, const std::vector<std::pair<int, qrep::Scalar>>& right,
                    int n, int p) {
  std::map<int, qrep::Scalar> acc;
  for (const auto& [ab, x] : left)
    for (const auto& [cd, y] : right) {
      int a = ab / n, b = ab % n, c = cd / p, d = cd % p;
      int g = (a * p + c) * (n * p) + (b * p + d);
      acc[g] = acc[g] + x * y;
    }
  qrep::SVec out;
  for (const auto& [i, v] : acc)
    if (!v.is_zero()) out.e.emplace_back(i, v);
  return out;
}

}  // namespace

std::vector<qrep::SVec> white_relations(const qrep::QuadraticAlgebra& a, const qrep::QuadraticAlgebra& b) {
  int n = a.n, p = b.n;
  std::vector<qrep::SVec> rows;
  for (const auto& r : a.relations.basis())
    for (int w = 0; w < p * p; ++w) rows.push_back(pair_row(r.e, {{w, qrep::Scalar(1)}}, n, p));
  for (int v = 0; v < n * n; ++v)
    for (const auto& s : b.relations.basis()) rows.push_back(pair_row({{v, qrep::Scalar(1)}}, s.e, n, p));
  return rows;
}

std::vector<qrep::SVec> black_relations(const qrep::QuadraticAlgebra& a, const qrep::QuadraticAlgebra& b) {
  std::vector<qrep::SVec> rows;
  for (const auto& r : a.relations.basis())
    for (const auto& s : b.relations.basis()) rows.push_back(pair_row(r.e, s.e, a.n, b.n));
  return rows;
}

}  // namespace oracle
