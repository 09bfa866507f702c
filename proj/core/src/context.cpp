#include "qrep/context.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "qrep/errors.hpp"

namespace qrep {

namespace {

std::string word_label(const std::vector<std::string>& letters, const std::vector<int>& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "*" : "") + letters[static_cast<std::size_t>(w[i])];
  return s;
}

using Words = std::vector<std::vector<std::vector<int>>>;  // words[g][idx]
using WordIndex = std::vector<std::map<std::vector<int>, int>>;

WordIndex index_words(const Words& words) {
  WordIndex idx(words.size());
  for (std::size_t g = 0; g < words.size(); ++g)
    for (std::size_t i = 0; i < words[g].size(); ++i) idx[g][words[g][i]] = static_cast<int>(i);
  return idx;
}

// Extends Δ₁, ε₁ to grades 2..max by multiplicativity along the factorization
// word = prefix · last letter.
void derive_coalgebra(MulContext& ctx, const Words& words) {
  WordIndex idx = index_words(words);
  for (int g = 2; g <= ctx.max_degree; ++g) {
    const auto& tab = ctx.tables.at({g - 1, 1});
    int dg = ctx.dim(g);
    std::vector<SVec> dl;
    std::vector<Scalar> el;
    for (const auto& w : words[static_cast<std::size_t>(g)]) {
      std::vector<int> prefix(w.begin(), w.end() - 1);
      int p = idx[static_cast<std::size_t>(g - 1)].at(prefix);
      int l = w.back();
      const SVec& dp = ctx.delta.at(g - 1)[static_cast<std::size_t>(p)];
      const SVec& d1 = ctx.delta.at(1)[static_cast<std::size_t>(l)];
      int dprev = ctx.dim(g - 1);
      int d1n = ctx.dim(1);
      std::map<int, Scalar> acc;
      for (const auto& [pq, a] : dp.e)
        for (const auto& [rs, b] : d1.e) {
          const SVec& left = tab[static_cast<std::size_t>(pq / dprev)][static_cast<std::size_t>(rs / d1n)];
          const SVec& right = tab[static_cast<std::size_t>(pq % dprev)][static_cast<std::size_t>(rs % d1n)];
          Scalar ab = a * b;
          for (const auto& [i, x] : left.e)
            for (const auto& [j, y] : right.e) acc[i * dg + j] += ab * x * y;
        }
      SVec v;
      for (auto& [i, c] : acc)
        if (!c.is_zero()) v.e.emplace_back(i, std::move(c));
      dl.push_back(std::move(v));
      el.push_back(ctx.counit.at(g - 1)[static_cast<std::size_t>(p)] * ctx.counit.at(1)[static_cast<std::size_t>(l)]);
    }
    ctx.delta[g] = std::move(dl);
    ctx.counit[g] = std::move(el);
  }
}

void check_coalgebra_grade(const MulContext& ctx, int g) {
  int n = ctx.dim(g);
  const auto& d = ctx.delta.at(g);
  const auto& e = ctx.counit.at(g);
  if (static_cast<int>(d.size()) != n || static_cast<int>(e.size()) != n)
    throw InvalidArgument("coalgebra table of grade " + std::to_string(g) + " has wrong size");
  for (int x = 0; x < n; ++x) {
    const SVec& dx = d[static_cast<std::size_t>(x)];
    if (!dx.is_zero() && dx.e.back().first >= n * n)
      throw InvalidArgument("coproduct index out of range at basis vector " + ctx.labels[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)]);
    std::map<std::int64_t, Scalar> diff;
    SVec cl;
    SVec cr;
    auto nn = static_cast<std::int64_t>(n);
    for (const auto& [ab, c] : dx.e) {
      int a = ab / n;
      int b = ab % n;
      for (const auto& [pq, y] : d[static_cast<std::size_t>(a)].e) diff[pq * nn + b] += c * y;
      for (const auto& [pq, y] : d[static_cast<std::size_t>(b)].e) diff[a * nn * nn + pq] -= c * y;
      add_scaled(cl, c * e[static_cast<std::size_t>(a)], SVec::unit(b));
      add_scaled(cr, c * e[static_cast<std::size_t>(b)], SVec::unit(a));
    }
    bool coassoc = std::all_of(diff.begin(), diff.end(), [](const auto& kv) { return kv.second.is_zero(); });
    const std::string& lbl = ctx.labels[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)];
    if (!coassoc) throw InvalidArgument("coassociativity fails at basis vector " + lbl + " (grade " + std::to_string(g) + ")");
    if (!(cl == SVec::unit(x)) || !(cr == SVec::unit(x)))
      throw InvalidArgument("counit law fails at basis vector " + lbl + " (grade " + std::to_string(g) + ")");
  }
}

std::vector<std::vector<int>> nondecreasing_words(int n, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(static_cast<std::size_t>(len), 0);
  if (len == 0) return {{}};
  if (n == 0) return {};
  for (;;) {
    out.push_back(w);
    int i = len - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == n - 1) --i;
    if (i < 0) break;
    int v = w[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j < len; ++j) w[static_cast<std::size_t>(j)] = v;
  }
  return out;
}

std::vector<std::vector<int>> all_words(int n, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(static_cast<std::size_t>(len), 0);
  if (len == 0) return {{}};
  if (n == 0) return {};
  for (;;) {
    out.push_back(w);
    int i = len - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == n - 1) w[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++w[static_cast<std::size_t>(i)];
  }
  return out;
}

void check_max_degree(int d, int lo, int hi) {
  if (d < lo || d > hi)
    throw InvalidArgument("max degree must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

// Context whose grade-g basis consists of words; products concatenate, then
// `normalize` maps a word to the grade's basis.
ContextPtr word_context(MulContext::Kind kind, const Field& f, const std::vector<std::string>& letters,
                        const Words& words, int max_degree, bool sort_words) {
  MulContext ctx;
  ctx.kind = kind;
  ctx.field = f;
  ctx.max_degree = max_degree;
  WordIndex idx = index_words(words);
  ctx.labels.resize(static_cast<std::size_t>(max_degree) + 1);
  for (int g = 0; g <= max_degree; ++g)
    for (const auto& w : words[static_cast<std::size_t>(g)]) ctx.labels[static_cast<std::size_t>(g)].push_back(word_label(letters, w));
  for (int j = 1; j <= max_degree; ++j)
    for (int k = 1; j + k <= max_degree; ++k) {
      auto& tab = ctx.tables[{j, k}];
      for (const auto& u : words[static_cast<std::size_t>(j)]) {
        std::vector<SVec> row;
        for (const auto& v : words[static_cast<std::size_t>(k)]) {
          std::vector<int> w = u;
          w.insert(w.end(), v.begin(), v.end());
          if (sort_words) std::sort(w.begin(), w.end());
          row.push_back(SVec::unit(idx[static_cast<std::size_t>(j + k)].at(w)));
        }
        tab.push_back(std::move(row));
      }
    }
  return std::make_shared<MulContext>(std::move(ctx));
}

ContextPtr embedding_context(const AlgebraStructureConstants& alg, int max_degree, bool symmetric) {
  alg.validate();
  check_max_degree(max_degree, 2, 6);
  Words words(static_cast<std::size_t>(max_degree) + 1);
  for (int g = 0; g <= max_degree; ++g)
    words[static_cast<std::size_t>(g)] = symmetric ? nondecreasing_words(alg.n, g) : all_words(alg.n, g);
  ContextPtr base = word_context(MulContext::Kind::slice, alg.field, alg.dual_labels, words, max_degree, symmetric);
  MulContext ctx = *base;
  std::vector<SVec> d1(static_cast<std::size_t>(alg.n));
  for (int i = 0; i < alg.n; ++i)
    for (int j = 0; j < alg.n; ++j)
      for (const auto& [k, c] : alg.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].e)
        add_scaled(d1[static_cast<std::size_t>(k)], c, SVec::unit(i * alg.n + j));
  ctx.delta[1] = d1;
  ctx.counit[1] = alg.d;
  derive_coalgebra(ctx, words);
  ctx.validate();
  return std::make_shared<MulContext>(std::move(ctx));
}

}  // namespace

int MulContext::dim(int g) const {
  if (g < 0 || g > max_degree || static_cast<std::size_t>(g) >= labels.size())
    throw ContextTooShallow("context too shallow: grade " + std::to_string(g) + " is not available (max degree " +
                            std::to_string(max_degree) + ")");
  return static_cast<int>(labels[static_cast<std::size_t>(g)].size());
}

SVec MulContext::mul(int j, const SVec& x, int k, const SVec& y) const {
  auto it = tables.find({j, k});
  if (it == tables.end())
    throw ContextTooShallow("context too shallow: no product table for grades " + std::to_string(j) + " x " +
                            std::to_string(k));
  if (x.is_zero() || y.is_zero()) return {};
  if (x.nnz() == 1 && y.nnz() == 1) {
    const SVec& t = it->second[static_cast<std::size_t>(x.e[0].first)][static_cast<std::size_t>(y.e[0].first)];
    Scalar c = x.e[0].second * y.e[0].second;
    return c.is_one() ? t : t.scaled(c);
  }
  std::vector<Scalar> acc(static_cast<std::size_t>(dim(j + k)));
  for (const auto& [a, xa] : x.e)
    for (const auto& [b, yb] : y.e) {
      Scalar c = xa * yb;
      for (const auto& [i, v] : it->second[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].e)
        acc[static_cast<std::size_t>(i)] += c * v;
    }
  return SVec::from_dense(acc);
}

SVec MulContext::coproduct(int g, const SVec& x) const {
  auto it = delta.find(g);
  if (it == delta.end()) throw InvalidArgument("context has no coproduct table for grade " + std::to_string(g));
  SVec out;
  for (const auto& [a, c] : x.e) add_scaled(out, c, it->second[static_cast<std::size_t>(a)]);
  return out;
}

Scalar MulContext::counit_of(int g, const SVec& x) const {
  auto it = counit.find(g);
  if (it == counit.end()) throw InvalidArgument("context has no counit table for grade " + std::to_string(g));
  Scalar s;
  for (const auto& [a, c] : x.e) s += c * it->second[static_cast<std::size_t>(a)];
  return s;
}

SVec MulContext::unit_p2() const {
  if (!unit) throw InvalidArgument("context has no designated unit");
  return mul(*unit, *unit);
}

bool MulContext::commutative() const {
  auto it = tables.find({1, 1});
  if (it == tables.end()) return false;
  int n = dim(1);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!(it->second[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == it->second[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)])) return false;
  return true;
}

std::string MulContext::format(int g, const SVec& v) const {
  const auto& l = labels.at(static_cast<std::size_t>(g));
  return format_linear(field, v, [&l](int i) { return l[static_cast<std::size_t>(i)]; });
}

std::string MulContext::kind_name() const {
  switch (kind) {
    case Kind::qa: return "qa";
    case Kind::table: return "table";
    case Kind::pbw: return "pbw";
    case Kind::slice: return "slice";
  }
  return "";
}

MulContext::Kind context_kind_from_string(const std::string& s) {
  if (s == "qa") return MulContext::Kind::qa;
  if (s == "table") return MulContext::Kind::table;
  if (s == "pbw") return MulContext::Kind::pbw;
  if (s == "slice") return MulContext::Kind::slice;
  throw InvalidArgument("unknown context kind '" + s + "'");
}

void MulContext::validate() const {
  if (max_degree < 2) throw InvalidArgument("context needs at least grade 2");
  if (static_cast<int>(labels.size()) != max_degree + 1) throw InvalidArgument("context label table has wrong depth");
  if (!tables.count({1, 1})) throw InvalidArgument("context lacks the E x E product table");
  for (const auto& [jk, tab] : tables) {
    auto [j, k] = jk;
    if (j < 1 || k < 1 || j + k > max_degree)
      throw InvalidArgument("product table for grades " + std::to_string(j) + " x " + std::to_string(k) + " exceeds the max degree");
    int dj = dim(j);
    int dk = dim(k);
    int dt = dim(j + k);
    if (static_cast<int>(tab.size()) != dj) throw InvalidArgument("product table has wrong row count");
    for (const auto& row : tab) {
      if (static_cast<int>(row.size()) != dk) throw InvalidArgument("product table has wrong column count");
      for (const SVec& v : row) {
        if (!v.is_zero() && (v.e.front().first < 0 || v.e.back().first >= dt)) throw InvalidArgument("product index out of range");
        for (const auto& [i, c] : v.e) field.check_member(c);
      }
    }
  }
  if (unit) {
    int n = dim(1);
    if (!unit->is_zero() && unit->e.back().first >= n) throw InvalidArgument("unit index out of range");
    std::vector<SVec> images;
    for (int x = 0; x < n; ++x) {
      SVec l = mul(*unit, SVec::unit(x));
      if (!(l == mul(SVec::unit(x), *unit)))
        throw InvalidArgument("unit does not commute with " + labels[1][static_cast<std::size_t>(x)]);
      images.push_back(std::move(l));
    }
    if (Subspace::span(images, dim(2), field).dim() != n) throw InvalidArgument("multiplication by the unit is not injective");
  }
  for (const auto& [g, d] : delta) {
    if (!counit.count(g)) throw InvalidArgument("coproduct without counit at grade " + std::to_string(g));
    check_coalgebra_grade(*this, g);
  }
}

void LieAlgebra::validate() const {
  if (static_cast<int>(bracket.size()) != n) throw InvalidArgument("bracket table has wrong size");
  for (const auto& row : bracket)
    if (static_cast<int>(row.size()) != n) throw InvalidArgument("bracket table has wrong size");
  auto br = [this](const SVec& u, int c) {
    SVec out;
    for (const auto& [a, x] : u.e) add_scaled(out, x, bracket[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)]);
    return out;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!(bracket[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == -bracket[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]))
        throw InvalidArgument("bracket not antisymmetric at (" + labels[static_cast<std::size_t>(a)] + ", " + labels[static_cast<std::size_t>(b)] + ")");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        SVec j = br(bracket[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)], c) +
                 br(bracket[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)], a) +
                 br(bracket[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)], b);
        if (!j.is_zero())
          throw InvalidArgument("Jacobi identity fails at (" + labels[static_cast<std::size_t>(a)] + ", " +
                                labels[static_cast<std::size_t>(b)] + ", " + labels[static_cast<std::size_t>(c)] + ")");
      }
}

LieAlgebra gl_lie(int m, const Field& f) {
  LieAlgebra g;
  g.n = m * m;
  g.field = f;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) g.labels.push_back("E" + std::to_string(i) + std::to_string(j));
  g.bracket.assign(static_cast<std::size_t>(g.n), std::vector<SVec>(static_cast<std::size_t>(g.n)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          SVec v;
          if (j == k) add_scaled(v, Scalar(1), SVec::unit(i * m + l));
          if (l == i) add_scaled(v, Scalar(-1), SVec::unit(k * m + j));
          g.bracket[static_cast<std::size_t>(i * m + j)][static_cast<std::size_t>(k * m + l)] = v;
        }
  return g;
}

LieAlgebra abelian_lie(int n, const Field& f, std::vector<std::string> labels) {
  LieAlgebra g;
  g.n = n;
  g.field = f;
  g.labels = labels.empty() ? indexed_labels("e", n) : std::move(labels);
  g.bracket.assign(static_cast<std::size_t>(n), std::vector<SVec>(static_cast<std::size_t>(n)));
  return g;
}

namespace {

using PbwPoly = std::map<std::vector<int>, Scalar>;

void add_poly(PbwPoly& acc, const Scalar& c, const PbwPoly& p) {
  for (const auto& [w, x] : p) {
    Scalar& slot = acc[w];
    slot += c * x;
    if (slot.is_zero()) acc.erase(w);
  }
}

PbwPoly straighten(const LieAlgebra& g, const std::vector<int>& w, std::mt19937* rng,
                   std::map<std::vector<int>, PbwPoly>& memo) {
  if (!rng)
    if (auto it = memo.find(w); it != memo.end()) return it->second;
  std::vector<std::size_t> descents;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) descents.push_back(i);
  PbwPoly out;
  if (descents.empty()) {
    out[w] = Scalar(1);
  } else {
    std::size_t i = descents.front();
    if (rng) i = descents[std::uniform_int_distribution<std::size_t>(0, descents.size() - 1)(*rng)];
    std::vector<int> swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    add_poly(out, Scalar(1), straighten(g, swapped, rng, memo));
    for (const auto& [c, x] : g.bracket[static_cast<std::size_t>(w[i])][static_cast<std::size_t>(w[i + 1])].e) {
      std::vector<int> shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      shorter.push_back(c);
      shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
      add_poly(out, x, straighten(g, shorter, rng, memo));
    }
  }
  if (!rng) memo[w] = out;
  return out;
}

}  // namespace

std::map<std::vector<int>, Scalar> pbw_straighten(const LieAlgebra& g, const std::vector<int>& word, std::mt19937* rng) {
  std::map<std::vector<int>, PbwPoly> memo;
  return straighten(g, word, rng, memo);
}

ContextPtr pbw_context(const LieAlgebra& g, int max_degree) {
  g.validate();
  check_max_degree(max_degree, 2, 4);
  MulContext ctx;
  ctx.kind = MulContext::Kind::pbw;
  ctx.field = g.field;
  ctx.max_degree = max_degree;
  Words words(static_cast<std::size_t>(max_degree) + 1);
  for (int d = 0; d <= max_degree; ++d)
    for (int len = 0; len <= d; ++len)
      for (auto& w : nondecreasing_words(g.n, len)) words[static_cast<std::size_t>(d)].push_back(std::move(w));
  WordIndex idx = index_words(words);
  ctx.labels.resize(static_cast<std::size_t>(max_degree) + 1);
  for (int d = 0; d <= max_degree; ++d)
    for (const auto& w : words[static_cast<std::size_t>(d)]) ctx.labels[static_cast<std::size_t>(d)].push_back(word_label(g.labels, w));
  std::map<std::vector<int>, PbwPoly> memo;
  for (int j = 1; j <= max_degree; ++j)
    for (int k = 1; j + k <= max_degree; ++k) {
      auto& tab = ctx.tables[{j, k}];
      for (const auto& u : words[static_cast<std::size_t>(j)]) {
        std::vector<SVec> row;
        for (const auto& v : words[static_cast<std::size_t>(k)]) {
          std::vector<int> w = u;
          w.insert(w.end(), v.begin(), v.end());
          std::vector<Scalar> acc(words[static_cast<std::size_t>(j + k)].size());
          for (const auto& [nw, c] : straighten(g, w, nullptr, memo)) acc[static_cast<std::size_t>(idx[static_cast<std::size_t>(j + k)].at(nw))] += c;
          row.push_back(SVec::from_dense(acc));
        }
        tab.push_back(std::move(row));
      }
    }
  ctx.unit = SVec::unit(0);
  ctx.validate();
  return std::make_shared<MulContext>(std::move(ctx));
}

void AlgebraStructureConstants::validate() const {
  if (static_cast<int>(c.size()) != n || static_cast<int>(d.size()) != n) throw InvalidArgument("structure constants have wrong size");
  for (const auto& row : c)
    if (static_cast<int>(row.size()) != n) throw InvalidArgument("structure constants have wrong size");
  if (static_cast<int>(dual_labels.size()) != n || static_cast<int>(labels.size()) != n) throw InvalidArgument("structure constants need n labels");
  auto prod = [this](const SVec& x, const SVec& y) {
    SVec out;
    for (const auto& [i, a] : x.e)
      for (const auto& [j, b] : y.e) add_scaled(out, a * b, c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return out;
  };
  SVec unit = SVec::from_dense(d);
  for (int i = 0; i < n; ++i) {
    SVec ei = SVec::unit(i);
    if (!(prod(unit, ei) == ei) || !(prod(ei, unit) == ei)) throw InvalidArgument("unit law fails at " + labels[static_cast<std::size_t>(i)]);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        SVec ej = SVec::unit(j);
        SVec ek = SVec::unit(k);
        if (!(prod(prod(ei, ej), ek) == prod(ei, prod(ej, ek))))
          throw InvalidArgument("associativity fails at (" + labels[static_cast<std::size_t>(i)] + ", " + labels[static_cast<std::size_t>(j)] +
                                ", " + labels[static_cast<std::size_t>(k)] + ")");
      }
  }
}

AlgebraStructureConstants matrix_algebra(int m, const Field& f) {
  AlgebraStructureConstants a;
  a.n = m * m;
  a.field = f;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      a.labels.push_back("e" + std::to_string(i) + std::to_string(j));
      a.dual_labels.push_back("a" + std::to_string(i) + std::to_string(j));
    }
  a.c.assign(static_cast<std::size_t>(a.n), std::vector<SVec>(static_cast<std::size_t>(a.n)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int l = 0; l < m; ++l) a.c[static_cast<std::size_t>(i * m + j)][static_cast<std::size_t>(j * m + l)] = SVec::unit(i * m + l);
  a.d.assign(static_cast<std::size_t>(a.n), Scalar(0));
  for (int i = 0; i < m; ++i) a.d[static_cast<std::size_t>(i * m + i)] = Scalar(1);
  return a;
}

AlgebraStructureConstants z2_function_algebra(const Field& f) {
  AlgebraStructureConstants a;
  a.n = 2;
  a.field = f;
  a.labels = {"d_e", "d_g"};
  a.dual_labels = {"e", "g"};
  a.c = {{SVec::unit(0), SVec()}, {SVec(), SVec::unit(1)}};
  a.d = {Scalar(1), Scalar(1)};
  return a;
}

ContextPtr qa_context(const QuadraticAlgebra& a, int max_degree) {
  check_max_degree(max_degree, 2, 6);
  GradedQuotient gq(a, max_degree);
  MulContext ctx;
  ctx.kind = MulContext::Kind::qa;
  ctx.field = a.field();
  ctx.max_degree = max_degree;
  ctx.labels.resize(static_cast<std::size_t>(max_degree) + 1);
  for (int g = 0; g <= max_degree; ++g)
    for (int i = 0; i < gq.dim(g); ++i) ctx.labels[static_cast<std::size_t>(g)].push_back(gq.basis_label(g, i));
  for (int j = 1; j <= max_degree; ++j)
    for (int k = 1; j + k <= max_degree; ++k) {
      auto& tab = ctx.tables[{j, k}];
      tab.resize(static_cast<std::size_t>(gq.dim(j)));
      for (int x = 0; x < gq.dim(j); ++x)
        for (int y = 0; y < gq.dim(k); ++y) tab[static_cast<std::size_t>(x)].push_back(gq.product(j, x, k, y));
    }
  return std::make_shared<MulContext>(std::move(ctx));
}

ContextPtr qa_bialgebra_context(const QuadraticAlgebra& a, const std::vector<SVec>& delta1, const std::vector<Scalar>& eps1,
                                int max_degree, MulContext::Kind kind) {
  if (static_cast<int>(delta1.size()) != a.n || static_cast<int>(eps1.size()) != a.n)
    throw ShapeError("coalgebra tables must have one entry per generator");
  MulContext ctx = *qa_context(a, max_degree);
  ctx.kind = kind;
  ctx.delta[1] = delta1;
  ctx.counit[1] = eps1;
  GradedQuotient gq(a, max_degree);
  Words words(static_cast<std::size_t>(max_degree) + 1);
  for (int g = 0; g <= max_degree; ++g)
    for (int i = 0; i < gq.dim(g); ++i) words[static_cast<std::size_t>(g)].push_back(gq.basis_word(g, i));
  derive_coalgebra(ctx, words);
  return std::make_shared<MulContext>(std::move(ctx));
}

ContextPtr s_embedding_context(const AlgebraStructureConstants& alg, int max_degree) {
  return embedding_context(alg, max_degree, true);
}

ContextPtr t_embedding_context(const AlgebraStructureConstants& alg, int max_degree) {
  return embedding_context(alg, max_degree, false);
}

ContextPtr constant_slice_context(const AlgebraStructureConstants& mult, const std::vector<SVec>& delta,
                                  const std::vector<Scalar>& eps, int max_degree) {
  mult.validate();
  check_max_degree(max_degree, 2, 8);
  MulContext ctx;
  ctx.kind = MulContext::Kind::slice;
  ctx.field = mult.field;
  ctx.max_degree = max_degree;
  ctx.labels.assign(static_cast<std::size_t>(max_degree) + 1, mult.labels);
  ctx.labels[0] = {"1"};
  for (int j = 1; j <= max_degree; ++j)
    for (int k = 1; j + k <= max_degree; ++k) ctx.tables[{j, k}] = mult.c;
  for (int g = 1; g <= max_degree; ++g) {
    ctx.delta[g] = delta;
    ctx.counit[g] = eps;
  }
  ctx.unit = SVec::from_dense(mult.d);
  ctx.validate();
  return std::make_shared<MulContext>(std::move(ctx));
}

ContextPtr table_context(MulContext raw) {
  raw.validate();
  return std::make_shared<MulContext>(std::move(raw));
}

ContextPtr field_context(const Field& f, int max_degree) {
  MulContext ctx;
  ctx.kind = MulContext::Kind::table;
  ctx.field = f;
  ctx.max_degree = max_degree;
  ctx.labels.assign(static_cast<std::size_t>(max_degree) + 1, {"1"});
  for (int j = 1; j <= max_degree; ++j)
    for (int k = 1; j + k <= max_degree; ++k) ctx.tables[{j, k}] = {{SVec::unit(0)}};
  for (int g = 1; g <= max_degree; ++g) {
    ctx.delta[g] = {SVec::unit(0)};
    ctx.counit[g] = {Scalar(1)};
  }
  ctx.unit = SVec::unit(0);
  ctx.validate();
  return std::make_shared<MulContext>(std::move(ctx));
}

ContextPtr lift(const ContextPtr& ctx) {
  if (ctx->max_degree < 4 || !ctx->has_table(2, 2))
    throw ContextTooShallow("context too shallow: lifting needs grades up to 4 and the P2 x P2 table");
  MulContext out;
  out.kind = ctx->kind;
  out.field = ctx->field;
  out.max_degree = ctx->max_degree / 2;
  out.labels.resize(static_cast<std::size_t>(out.max_degree) + 1);
  out.labels[0] = {"1"};
  for (int g = 1; g <= out.max_degree; ++g) out.labels[static_cast<std::size_t>(g)] = ctx->labels[static_cast<std::size_t>(2 * g)];
  for (const auto& [jk, tab] : ctx->tables)
    if (jk.first % 2 == 0 && jk.second % 2 == 0) out.tables[{jk.first / 2, jk.second / 2}] = tab;
  if (ctx->unit) out.unit = ctx->unit_p2();
  for (const auto& [g, d] : ctx->delta)
    if (g % 2 == 0 && g / 2 <= out.max_degree && ctx->counit.count(g)) {
      out.delta[g / 2] = d;
      out.counit[g / 2] = ctx->counit.at(g);
    }
  return std::make_shared<MulContext>(std::move(out));
}

ContextPtr opposite_mul(const ContextPtr& ctx) {
  MulContext out = *ctx;
  out.tables.clear();
  for (const auto& [jk, tab] : ctx->tables) {
    auto it = ctx->tables.find({jk.second, jk.first});
    if (it == ctx->tables.end()) continue;
    std::vector<std::vector<SVec>> t(tab.size(), std::vector<SVec>(it->second.size()));
    for (std::size_t x = 0; x < tab.size(); ++x)
      for (std::size_t y = 0; y < it->second.size(); ++y) t[x][y] = it->second[y][x];
    out.tables[jk] = std::move(t);
  }
  return std::make_shared<MulContext>(std::move(out));
}

ContextPtr coopposite(const ContextPtr& ctx) {
  MulContext out = *ctx;
  for (auto& [g, d] : out.delta) {
    int n = out.dim(g);
    for (SVec& v : d) {
      SVec f;
      for (const auto& [ab, c] : v.e) add_scaled(f, c, SVec::unit((ab % n) * n + ab / n));
      v = std::move(f);
    }
  }
  return std::make_shared<MulContext>(std::move(out));
}

}  // namespace qrep
