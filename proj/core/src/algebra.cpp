#include <algorithm>
#include <cctype>
#include <set>
#include <string>

#include "qrep/algebra.hpp"
#include "qrep/errors.hpp"

namespace qrep {

namespace {

template <class F>
SVec remapped(const SVec& v, F map) {
  SVec out;
  out.e.reserve(v.e.size());
  for (const auto& [i, x] : v.e) out.e.emplace_back(map(i), x);
  std::sort(out.e.begin(), out.e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::string dual_label(const std::string& s) {
  bool indexed = s.size() > 1 && std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  if (indexed && s[0] == 'x') return "v" + s.substr(1);
  if (indexed && s[0] == 'v') return "x" + s.substr(1);
  if (!s.empty() && s.back() == '\'') return s.substr(0, s.size() - 1);
  return s + "'";
}

std::string coefficient_term(const Field& f, Scalar c, const std::string& mono, bool first) {
  bool unit_label = mono == "1";
  std::string s = f.format(c);
  bool neg = !s.empty() && s[0] == '-';
  if (neg) {
    c = -c;
    s = f.format(c);
  }
  std::string out = first ? (neg ? "-" : "") : (neg ? " - " : " + ");
  bool wrap = s.find_first_of("+-") != std::string::npos && s.front() != '(';
  if (unit_label) return out + s;
  if (!c.is_one()) out += (wrap ? "(" + s + ")" : s) + "*";
  return out + mono;
}

std::vector<SVec> relation_rows(const QuadraticAlgebra& a) { return a.relations.basis(); }

}  // namespace

std::vector<std::string> indexed_labels(const std::string& prefix, int n) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::string QuadraticAlgebra::monomial(int idx) const {
  return labels[static_cast<std::size_t>(idx / n)] + "*" + labels[static_cast<std::size_t>(idx % n)];
}

std::string format_linear(const Field& f, const SVec& v, const std::function<std::string(int)>& label) {
  if (v.is_zero()) return "0";
  std::string line;
  bool first = true;
  for (const auto& [i, c] : v.e) {
    line += coefficient_term(f, c, label(i), first);
    first = false;
  }
  return line;
}

std::vector<std::string> QuadraticAlgebra::relation_strings() const {
  std::vector<std::string> out;
  for (const SVec& r : relations.basis())
    out.push_back(format_linear(field(), r, [this](int i) { return monomial(i); }) + " = 0");
  return out;
}

QuadraticAlgebra make_algebra(int n, const std::vector<SVec>& relations, const Field& f, std::vector<std::string> labels) {
  if (n < 0) throw InvalidArgument("generator count must be nonnegative");
  if (labels.empty()) labels = indexed_labels("x", n);
  if (static_cast<int>(labels.size()) != n) throw ShapeError("label count does not match generator count");
  for (const SVec& r : relations)
    for (const auto& [i, c] : r.e) {
      if (i < 0 || i >= n * n) throw ShapeError("relation index out of range");
      f.check_member(c);
    }
  return QuadraticAlgebra{n, std::move(labels), Subspace::span(relations, n * n, f)};
}

QuadraticAlgebra tensor_algebra(int n, const Field& f) { return make_algebra(n, {}, f); }

QuadraticAlgebra algebra_X(const Idempotent& e) {
  return QuadraticAlgebra{e.n(), indexed_labels("x", e.n()), Subspace::rowspace(e.matrix())};
}

QuadraticAlgebra algebra_Xi(const Idempotent& e) {
  return QuadraticAlgebra{e.n(), indexed_labels("v", e.n()), Subspace::rowspace(e.complement().transpose())};
}

QuadraticAlgebra koszul_dual(const QuadraticAlgebra& a) {
  std::vector<std::string> labels;
  for (const auto& l : a.labels) labels.push_back(dual_label(l));
  return QuadraticAlgebra{a.n, std::move(labels), a.relations.annihilator()};
}

QuadraticAlgebra opposite(const QuadraticAlgebra& a) {
  int n = a.n;
  std::vector<SVec> rows;
  for (const SVec& r : relation_rows(a)) rows.push_back(remapped(r, [n](int i) { return (i % n) * n + i / n; }));
  return QuadraticAlgebra{n, a.labels, Subspace::span(rows, n * n, a.field())};
}

ProductKind product_kind_from_string(const std::string& s) {
  if (s == "white") return ProductKind::white;
  if (s == "black") return ProductKind::black;
  if (s == "even_tensor" || s == "even") return ProductKind::even_tensor;
  if (s == "odd_tensor" || s == "odd") return ProductKind::odd_tensor;
  if (s == "amalg" || s == "coproduct") return ProductKind::amalg;
  throw InvalidArgument("unknown product kind '" + s + "'");
}

std::string to_string(ProductKind k) {
  switch (k) {
    case ProductKind::white: return "white";
    case ProductKind::black: return "black";
    case ProductKind::even_tensor: return "even_tensor";
    case ProductKind::odd_tensor: return "odd_tensor";
    case ProductKind::amalg: return "amalg";
  }
  return "";
}

QuadraticAlgebra product(const QuadraticAlgebra& a, const QuadraticAlgebra& b, ProductKind kind) {
  require_same_field(a.field(), b.field());
  const Field& f = a.field();
  int n = a.n;
  int p = b.n;
  std::vector<SVec> rows;
  if (kind == ProductKind::white || kind == ProductKind::black) {
    auto sh = [n, p](int i) { return shuffle_23_index(i, n, p); };
    if (kind == ProductKind::white) {
      for (const SVec& r : relation_rows(a))
        for (int w = 0; w < p * p; ++w) rows.push_back(remapped(outer(r, SVec::unit(w), p * p), sh));
      for (int v = 0; v < n * n; ++v)
        for (const SVec& s : relation_rows(b)) rows.push_back(remapped(outer(SVec::unit(v), s, p * p), sh));
    } else {
      for (const SVec& r : relation_rows(a))
        for (const SVec& s : relation_rows(b)) rows.push_back(remapped(outer(r, s, p * p), sh));
    }
    std::vector<std::string> labels;
    for (const auto& x : a.labels)
      for (const auto& y : b.labels) labels.push_back("(" + x + "," + y + ")");
    int g = n * p;
    return QuadraticAlgebra{g, std::move(labels), Subspace::span(rows, g * g, f)};
  }

  int s = n + p;
  for (const SVec& r : relation_rows(a)) rows.push_back(remapped(r, [n, s](int i) { return (i / n) * s + i % n; }));
  for (const SVec& r : relation_rows(b))
    rows.push_back(remapped(r, [n, p, s](int i) { return (n + i / p) * s + n + i % p; }));
  if (kind != ProductKind::amalg) {
    Scalar sign = kind == ProductKind::even_tensor ? Scalar(-1) : Scalar(1);
    for (int v = 0; v < n; ++v)
      for (int w = n; w < s; ++w) {
        SVec x;
        int vw = v * s + w;
        int wv = w * s + v;
        x.e = {{std::min(vw, wv), vw < wv ? Scalar(1) : sign}, {std::max(vw, wv), vw < wv ? sign : Scalar(1)}};
        rows.push_back(x);
      }
  }
  std::set<std::string> left(a.labels.begin(), a.labels.end());
  std::vector<std::string> labels = a.labels;
  for (const auto& y : b.labels) labels.push_back(left.count(y) ? y + "'" : y);
  return QuadraticAlgebra{s, std::move(labels), Subspace::span(rows, s * s, f)};
}

QuadraticAlgebra cohom_algebra(const Idempotent& b, const Idempotent& a) {
  require_same_field(a.field(), b.field());
  const Field& f = a.field();
  int n = a.n();
  int m = b.n();
  Subspace ra = Subspace::rowspace(a.matrix());
  Subspace rb = Subspace::rowspace(b.complement().transpose());
  std::vector<SVec> rows;
  for (const SVec& x : ra.basis())
    for (const SVec& y : rb.basis())
      rows.push_back(remapped(outer(x, y, m * m), [n, m](int i) { return shuffle_23_index(i, n, m); }));
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) labels.push_back("M" + std::to_string(i) + "_" + std::to_string(j));
  int g = n * m;
  return QuadraticAlgebra{g, std::move(labels), Subspace::span(rows, g * g, f)};
}

bool extends_to_hom(const Matrix& f1, const QuadraticAlgebra& src, const QuadraticAlgebra& dst) {
  if (f1.rows() != dst.n || f1.cols() != src.n)
    throw ShapeError("generator map must be " + std::to_string(dst.n) + "x" + std::to_string(src.n));
  require_same_field(f1.field(), src.field());
  require_same_field(f1.field(), dst.field());
  std::vector<SVec> cols;
  for (int j = 0; j < src.n; ++j) cols.push_back(f1.col(j));
  for (const SVec& r : relation_rows(src)) {
    SVec img;
    for (const auto& [i, c] : r.e) add_scaled(img, c, outer(cols[static_cast<std::size_t>(i / src.n)], cols[static_cast<std::size_t>(i % src.n)], dst.n));
    if (!dst.relations.contains(img)) return false;
  }
  return true;
}

}  // namespace qrep
