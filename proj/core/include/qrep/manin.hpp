#pragma once

#include <string>
#include <vector>

#include "qrep/context.hpp"

namespace qrep {

// Verdict of a check. Witness indices are 1-based; their meaning is given by
// witness_kind (e.g. "ijkl" for a Manin component).
struct Report {
  std::string check;
  bool pass = true;
  bool sufficient_only = false;
  std::string witness_kind;
  std::vector<int> witness;
  std::string expansion;
  std::string message;
  std::vector<Report> parts;

  static Report ok(std::string check) {
    Report r;
    r.check = std::move(check);
    return r;
  }
  static Report failure(std::string check, std::string message);
  // pass of this report and of every part
  bool all_pass() const;
  // Appends a part and folds its verdict into this one.
  Report& add(Report part);
};

// Matrix whose entries are vectors of grade 1 in a context.
class FirstOrderMatrix {
 public:
  FirstOrderMatrix(int rows, int cols, ContextPtr ctx);
  static FirstOrderMatrix identity(int n, ContextPtr ctx);
  // K^i_j · unit; the context must designate a unit.
  static FirstOrderMatrix from_scalar(const Matrix& k, ContextPtr ctx);
  // Entry (i,j) = basis vector i·cols + j of E; the generator matrix of a cohom algebra.
  static FirstOrderMatrix universal(int rows, int cols, ContextPtr ctx);

  int rows() const { return r_; }
  int cols() const { return c_; }
  const ContextPtr& context() const { return ctx_; }
  SVec& at(int i, int j) { return e_[static_cast<std::size_t>(i * c_ + j)]; }
  const SVec& at(int i, int j) const { return e_[static_cast<std::size_t>(i * c_ + j)]; }
  void set(int i, int j, SVec v);
  FirstOrderMatrix transpose() const;
  std::string entry_str(int i, int j) const;

  friend bool operator==(const FirstOrderMatrix& a, const FirstOrderMatrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.e_ == b.e_;
  }

 private:
  int r_;
  int c_;
  ContextPtr ctx_;
  std::vector<SVec> e_;
};

// Σ A^{ij}_{ab} mul(X^a_c, Y^b_d) (1−B)^{cd}_{kl} for all (ij), (kl); reports
// the lexicographically first nonzero component.
Report check_manin(const Idempotent& a, const Idempotent& b, const FirstOrderMatrix& x, const FirstOrderMatrix& y);
inline Report check_manin(const Idempotent& a, const Idempotent& b, const FirstOrderMatrix& m) {
  return check_manin(a, b, m, m);
}
// K over the field context.
Report check_scalar_manin(const Idempotent& a, const Idempotent& b, const Matrix& k);

Report commute_entrywise(const FirstOrderMatrix& m, const FirstOrderMatrix& n);
FirstOrderMatrix direct_sum(const FirstOrderMatrix& m, const FirstOrderMatrix& n);
// Entries mul(M^i_j, N^a_b) at ((i,a),(j,b)), over `lifted` (lift of the
// entries' context when null).
FirstOrderMatrix dot_tensor(const FirstOrderMatrix& m, const FirstOrderMatrix& n, ContextPtr lifted = nullptr);
// Δ(M^i_j) = Σ_k M^i_k ⊗ M^k_j and ε(M^i_j) = δ^i_j.
Report multiplicative_check(const FirstOrderMatrix& m);

struct CohomMap {
  QuadraticAlgebra src;
  QuadraticAlgebra dst;
  Matrix f1;  // dst generators × src generators
  bool valid = false;
};
// K is (B',B)-Manin and M is (A,A')-Manin, both scalar; maps cohom(B,A) to
// cohom(B',A') by M^i_j ↦ Σ M^i_a K^b_j N^a_b. Throws InvalidArgument when a
// precondition fails.
CohomMap cohom_map(const Matrix& k, const Matrix& m, const Idempotent& b, const Idempotent& b2,
                   const Idempotent& a, const Idempotent& a2);

}  // namespace qrep
