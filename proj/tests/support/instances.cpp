#include "instances.hpp"

#include <algorithm>

namespace instances {

namespace {

int pick(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

SVec random_vector(std::mt19937& rng, int dim) {
  SVec v;
  for (int i = 0; i < dim; ++i) {
    if (pick(rng, 0, 2) != 0) continue;
    int c = pick(rng, -2, 2);
    if (c != 0) v.e.emplace_back(i, Scalar(c));
  }
  return v;
}

std::vector<SVec> shifted(const std::vector<SVec>& rows, int ngen, int total, int offset) {
  std::vector<SVec> out;
  for (const auto& r : rows) {
    SVec s;
    for (const auto& [idx, c] : r.e) s.e.emplace_back((offset + idx / ngen) * total + offset + idx % ngen, c);
    std::sort(s.e.begin(), s.e.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

ContextPtr random_table_context(std::mt19937& rng, int d, bool commutative, const Field& f) {
  MulContext raw;
  raw.field = f;
  int p = pick(rng, d, d * d);
  raw.labels.resize(3);
  raw.labels[0] = {"1"};
  for (int i = 0; i < d; ++i) raw.labels[1].push_back("e" + std::to_string(i + 1));
  for (int i = 0; i < p; ++i) raw.labels[2].push_back("p" + std::to_string(i + 1));
  auto& tab = raw.tables[{1, 1}];
  tab.assign(static_cast<std::size_t>(d), std::vector<SVec>(static_cast<std::size_t>(d)));
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      if (commutative && y < x) {
        tab[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = tab[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
        continue;
      }
      tab[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = random_vector(rng, p);
    }
  return table_context(std::move(raw));
}

FirstOrderMatrix random_entries(std::mt19937& rng, int rows, int cols, const ContextPtr& ctx) {
  FirstOrderMatrix m(rows, cols, ctx);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.set(i, j, random_vector(rng, ctx->dim(1)));
  return m;
}

Idempotent random_pool_idempotent(std::mt19937& rng, int n, const Field& f) {
  switch (pick(rng, 0, 3)) {
    case 0:
      return zero_idempotent(n, f);
    case 1:
      return one_idempotent(n, f);
    case 2:
      return antisym(n, f);
    default:
      return random_idempotent(n, rng, f);
  }
}

BlockInstance random_block_instance(std::mt19937& rng, int index) {
  const Field q = Field::rational();
  int n = pick(rng, 1, 2), n2 = pick(rng, 1, 2), m = pick(rng, 1, 2), m2 = pick(rng, 1, 2);
  int family = index % 4;
  if (family <= 1) {
    bool commutative = family == 1;
    ContextPtr ctx = random_table_context(rng, pick(rng, 2, 3), commutative, q);
    Idempotent a = commutative ? antisym(n, q) : random_pool_idempotent(rng, n, q);
    Idempotent b = commutative ? antisym(n2, q) : random_pool_idempotent(rng, n2, q);
    Idempotent c = commutative ? antisym(m, q) : random_pool_idempotent(rng, m, q);
    Idempotent d = commutative ? antisym(m2, q) : random_pool_idempotent(rng, m2, q);
    return {commutative ? "commutative-table" : "table", a, b, c, d, random_entries(rng, n, n2, ctx),
            random_entries(rng, m, m2, ctx)};
  }
  Idempotent a = random_pool_idempotent(rng, n, q), b = random_pool_idempotent(rng, n2, q);
  Idempotent c = random_pool_idempotent(rng, m, q), d = random_pool_idempotent(rng, m2, q);
  ProductKind kind = family == 2 ? ProductKind::even_tensor : (pick(rng, 0, 1) ? ProductKind::odd_tensor : ProductKind::amalg);
  QuadraticAlgebra alg = product(cohom_algebra(b, a), cohom_algebra(d, c), kind);
  ContextPtr ctx = qa_context(alg, 2);
  FirstOrderMatrix mm(n, n2, ctx), nn(m, m2, ctx);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n2; ++j) mm.set(i, j, SVec::unit(i * n2 + j));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m2; ++j) nn.set(i, j, SVec::unit(n * n2 + i * m2 + j));
  // Occasionally check against other idempotents so that the Manin blocks fail.
  if (pick(rng, 0, 2) == 0) a = random_pool_idempotent(rng, n, q);
  if (pick(rng, 0, 2) == 0) d = random_pool_idempotent(rng, m2, q);
  return {"universal-" + to_string(kind), a, b, c, d, mm, nn};
}

BlockVerdict direct_sum_verdict(const BlockInstance& inst) {
  FirstOrderMatrix l = direct_sum(inst.m, inst.n);
  return {check_manin(dis(inst.a, inst.c), dis(inst.b, inst.d), l).pass, check_manin(inst.a, inst.b, inst.m).pass,
          check_manin(inst.c, inst.d, inst.n).pass, commute_entrywise(inst.m, inst.n).pass};
}

BlockVerdict coproduct_verdict(const BlockInstance& inst) {
  FirstOrderMatrix l = direct_sum(inst.m, inst.n);
  return {check_manin(cop(inst.a, inst.c), cop(inst.b, inst.d), l).pass, check_manin(inst.a, inst.b, inst.m).pass,
          check_manin(inst.c, inst.d, inst.n).pass, commute_entrywise(inst.m, inst.n).pass};
}

ContextPtr pmn_context(const Idempotent& b, const Idempotent& b2, const Idempotent& c, const Idempotent& c2, int mode) {
  const Field& f = b.field();
  QuadraticAlgebra um = cohom_algebra(b2, b);
  QuadraticAlgebra un = cohom_algebra(c2, c);
  int gm = um.n, gn = un.n, total = gm + gn;
  std::vector<SVec> rel = shifted(um.relations.basis(), gm, total, 0);
  std::vector<SVec> reln = shifted(un.relations.basis(), gn, total, gm);
  rel.insert(rel.end(), reln.begin(), reln.end());
  for (int x = 0; x < gm; ++x)
    for (int y = gm; y < total; ++y) {
      if (mode == 0 || (mode == 2 && x != 0)) continue;
      rel.push_back(SVec::unit(x * total + y) - SVec::unit(y * total + x));
    }
  std::vector<std::string> labels = um.labels;
  for (const auto& l : un.labels) labels.push_back("N" + l.substr(1));
  return qa_context(make_algebra(total, rel, f, labels), 4);
}

bool mn_commutation(const Idempotent& b, const Idempotent& b2, const Idempotent& c, const Idempotent& c2,
                    const FirstOrderMatrix& m, const FirstOrderMatrix& n) {
  const MulContext& ctx = *m.context();
  int p = m.rows(), p2 = m.cols(), r = n.rows(), r2 = n.cols();
  int rows = p * p * r * r, cols = p2 * p2 * r2 * r2;
  auto row_of = [&](int i, int k, int a, int c_) { return ((i * p + k) * r + a) * r + c_; };
  auto col_of = [&](int j, int l, int b_, int d) { return ((j * p2 + l) * r2 + b_) * r2 + d; };

  std::vector<SVec> t(static_cast<std::size_t>(rows * cols));
  for (int i = 0; i < p; ++i)
    for (int k = 0; k < p; ++k)
      for (int a = 0; a < r; ++a)
        for (int c_ = 0; c_ < r; ++c_)
          for (int j = 0; j < p2; ++j)
            for (int l = 0; l < p2; ++l)
              for (int b_ = 0; b_ < r2; ++b_)
                for (int d = 0; d < r2; ++d) {
                  const SVec& mij = m.at(i, j);
                  const SVec& mkl = m.at(k, l);
                  const SVec& nab = n.at(a, b_);
                  const SVec& ncd = n.at(c_, d);
                  SVec mnmn = ctx.mul(2, ctx.mul(mij, nab), 2, ctx.mul(mkl, ncd));
                  SVec mmnn = ctx.mul(2, ctx.mul(mij, mkl), 2, ctx.mul(nab, ncd));
                  t[static_cast<std::size_t>(row_of(i, k, a, c_) * cols + col_of(j, l, b_, d))] = mnmn - mmnn;
                }

  const Matrix& bm = b.matrix();
  const Matrix& cm = c.matrix();
  Matrix b2c = b2.complement();
  Matrix c2c = c2.complement();
  auto ftilde = [&](int ik, int ac, int ik2, int ac2) {
    Scalar x = bm(ik, ik2) * Scalar(ac == ac2 ? 1 : 0) + Scalar(ik == ik2 ? 1 : 0) * cm(ac, ac2) - bm(ik, ik2) * cm(ac, ac2);
    return x;
  };
  std::vector<SVec> g(static_cast<std::size_t>(rows * cols));
  for (int ik = 0; ik < p * p; ++ik)
    for (int ac = 0; ac < r * r; ++ac)
      for (int ik2 = 0; ik2 < p * p; ++ik2)
        for (int ac2 = 0; ac2 < r * r; ++ac2) {
          Scalar f = ftilde(ik, ac, ik2, ac2);
          if (f.is_zero()) continue;
          int src = ik2 * r * r + ac2;
          int dst = ik * r * r + ac;
          for (int col = 0; col < cols; ++col)
            add_scaled(g[static_cast<std::size_t>(dst * cols + col)], f, t[static_cast<std::size_t>(src * cols + col)]);
        }
  for (int row = 0; row < rows; ++row)
    for (int jl = 0; jl < p2 * p2; ++jl)
      for (int bd = 0; bd < r2 * r2; ++bd) {
        SVec acc;
        for (int jl2 = 0; jl2 < p2 * p2; ++jl2)
          for (int bd2 = 0; bd2 < r2 * r2; ++bd2) {
            Scalar f = b2c(jl2, jl) * c2c(bd2, bd);
            if (f.is_zero()) continue;
            add_scaled(acc, f, g[static_cast<std::size_t>(row * cols + jl2 * r2 * r2 + bd2)]);
          }
        if (!acc.is_zero()) return false;
      }
  return true;
}

}  // namespace instances
