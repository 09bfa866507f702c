#include <string>

#include "qrep/algebra.hpp"
#include "qrep/errors.hpp"

namespace qrep {

namespace {

SVec shifted(const SVec& v, int n, int b) {
  SVec out;
  out.e.reserve(v.e.size());
  for (const auto& [i, x] : v.e) out.e.emplace_back(i * n + b, x);
  return out;
}

}  // namespace

GradedQuotient::GradedQuotient(const QuadraticAlgebra& a, int max_degree, long memory_guard)
    : alg_(a), n_(a.n) {
  if (max_degree < 0) throw InvalidArgument("degree must be nonnegative");
  levels_.resize(static_cast<std::size_t>(max_degree) + 1);
  levels_[0].words = {{}};
  if (max_degree >= 1)
    for (int i = 0; i < n_; ++i) levels_[1].words.push_back({i});
  for (int k = 2; k <= max_degree; ++k) {
    long cols = static_cast<long>(levels_[k - 1].words.size()) * n_;
    if (cols > memory_guard)
      throw CapExceeded("degree " + std::to_string(k) + " working space of " + std::to_string(cols) +
                        " columns exceeds the memory guard");
    Level& lv = levels_[static_cast<std::size_t>(k)];
    lv.ech = RowEchelon(static_cast<int>(cols), RowEchelon::Mode::field);
    for (const auto& u : levels_[k - 2].words)
      for (const SVec& r : alg_.relations.basis()) {
        SVec row;
        for (const auto& [ab, c] : r.e) {
          std::vector<int> w = u;
          w.push_back(ab / n_);
          add_scaled(row, c, shifted(normal_form(w), n_, ab % n_));
        }
        lv.ech.insert(std::move(row));
      }
    lv.ycol_to_basis.assign(static_cast<std::size_t>(cols), -1);
    for (int y = 0; y < cols; ++y) {
      if (lv.ech.is_pivot(y)) continue;
      lv.ycol_to_basis[static_cast<std::size_t>(y)] = static_cast<int>(lv.words.size());
      std::vector<int> w = levels_[k - 1].words[static_cast<std::size_t>(y / n_)];
      w.push_back(y % n_);
      lv.words.push_back(std::move(w));
    }
  }
}

int GradedQuotient::dim(int k) const {
  if (k < 0 || k > max_degree()) throw ContextTooShallow("degree " + std::to_string(k) + " not computed");
  return static_cast<int>(levels_[static_cast<std::size_t>(k)].words.size());
}

const std::vector<int>& GradedQuotient::basis_word(int k, int idx) const {
  dim(k);
  return levels_[static_cast<std::size_t>(k)].words.at(static_cast<std::size_t>(idx));
}

std::string GradedQuotient::basis_label(int k, int idx) const {
  const auto& w = basis_word(k, idx);
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "*" : "") + alg_.labels[static_cast<std::size_t>(w[i])];
  return s;
}

SVec GradedQuotient::normal_form(const std::vector<int>& word) const {
  int k = static_cast<int>(word.size());
  if (k > max_degree()) throw ContextTooShallow("word of degree " + std::to_string(k) + " exceeds the computed degree");
  std::int64_t code = 0;
  for (int x : word) {
    if (x < 0 || x >= n_) throw InvalidArgument("generator index out of range");
    code = code * n_ + x;
  }
  return nf_code(k, code, word);
}

SVec GradedQuotient::nf_code(int k, std::int64_t code, const std::vector<int>& word) const {
  if (k == 0) return SVec::unit(0);
  if (k == 1) return SVec::unit(word[0]);
  const Level& lv = levels_[static_cast<std::size_t>(k)];
  if (auto it = lv.memo.find(code); it != lv.memo.end()) return it->second;
  std::vector<int> prefix(word.begin(), word.end() - 1);
  SVec y = lv.ech.reduce(shifted(nf_code(k - 1, code / n_, prefix), n_, word.back()));
  SVec out;
  out.e.reserve(y.e.size());
  for (auto& [i, x] : y.e) out.e.emplace_back(lv.ycol_to_basis[static_cast<std::size_t>(i)], std::move(x));
  lv.memo.emplace(code, out);
  return out;
}

SVec GradedQuotient::product(int j, int x, int k, int y) const {
  std::vector<int> w = basis_word(j, x);
  const auto& v = basis_word(k, y);
  w.insert(w.end(), v.begin(), v.end());
  return normal_form(w);
}

int graded_dim(const QuadraticAlgebra& a, int k, int cap) {
  if (k < 0) throw InvalidArgument("degree must be nonnegative");
  if (k > cap) throw CapExceeded("degree " + std::to_string(k) + " exceeds the cap " + std::to_string(cap));
  return GradedQuotient(a, k).dim(k);
}

int graded_dim_direct(const QuadraticAlgebra& a, int k) {
  if (k < 0) throw InvalidArgument("degree must be nonnegative");
  int n = a.n;
  long total = 1;
  for (int i = 0; i < k; ++i) total *= n;
  if (k < 2) return static_cast<int>(total);
  RowEchelon ech(static_cast<int>(total), RowEchelon::mode_for(a.field()));
  for (int i = 0; i + 2 <= k; ++i) {
    long pre = 1;
    for (int t = 0; t < i; ++t) pre *= n;
    long post = total / (pre * n * n);
    for (long p = 0; p < pre; ++p)
      for (long q = 0; q < post; ++q)
        for (const SVec& r : a.relations.basis()) {
          SVec row;
          row.e.reserve(r.e.size());
          for (const auto& [ab, c] : r.e) row.e.emplace_back(static_cast<int>((p * n * n + ab) * post + q), c);
          ech.insert(std::move(row));
        }
  }
  return static_cast<int>(total) - ech.rank();
}

}  // namespace qrep
