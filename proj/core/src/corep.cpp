#include "qrep/corep.hpp"

#include <string>

#include "qrep/errors.hpp"

namespace qrep {

namespace {

FirstOrderMatrix rebind(const FirstOrderMatrix& m, ContextPtr ctx) {
  FirstOrderMatrix out(m.rows(), m.cols(), std::move(ctx));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
  return out;
}

void require_slice(const Comonoid& c, const std::string& what) {
  if (c.kind != Comonoid::Kind::bialgebra_slice)
    throw InvalidArgument(what + " is defined only for bialgebra slices; this comonoid is connected_qa, whose products leave the entry space");
}

void require_shared(const Corepresentation& a, const Corepresentation& b) {
  if (a.comonoid != b.comonoid) throw InvalidArgument("corepresentations belong to different comonoids");
}

std::string idx_str(std::initializer_list<int> v) {
  std::string s = "(";
  bool first = true;
  for (int x : v) {
    s += (first ? "" : ",") + std::to_string(x);
    first = false;
  }
  return s + ")";
}

}  // namespace

ComonoidPtr connected_comonoid(const QuadraticAlgebra& a, std::vector<SVec> delta1, std::vector<Scalar> eps1, int max_degree) {
  Comonoid c;
  c.kind = Comonoid::Kind::connected_qa;
  c.ctx = qa_bialgebra_context(a, delta1, eps1, max_degree, MulContext::Kind::qa);
  c.algebra = a;
  c.delta1 = std::move(delta1);
  c.eps1 = std::move(eps1);
  return std::make_shared<Comonoid>(std::move(c));
}

ComonoidPtr slice_comonoid(ContextPtr ctx) {
  if (!ctx->has_coalgebra(1)) throw InvalidArgument("a bialgebra slice needs coproduct and counit tables on E");
  Comonoid c;
  c.kind = Comonoid::Kind::bialgebra_slice;
  c.ctx = std::move(ctx);
  return std::make_shared<Comonoid>(std::move(c));
}

ComonoidPtr coend_comonoid(const Idempotent& b, int max_degree) {
  int m = b.n();
  int n = m * m;
  std::vector<SVec> delta(static_cast<std::size_t>(n));
  std::vector<Scalar> eps(static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      SVec d;
      for (int k = 0; k < m; ++k) d.e.emplace_back((i * m + k) * n + k * m + j, Scalar(1));
      delta[static_cast<std::size_t>(i * m + j)] = std::move(d);
      eps[static_cast<std::size_t>(i * m + j)] = Scalar(i == j ? 1 : 0);
    }
  return connected_comonoid(cohom_algebra(b, b), std::move(delta), std::move(eps), max_degree);
}

ComonoidPtr s_embedding_comonoid(const AlgebraStructureConstants& alg, int max_degree) {
  alg.validate();
  QuadraticAlgebra poly = algebra_X(antisym(alg.n, alg.field));
  poly.labels = alg.dual_labels;
  std::vector<SVec> delta(static_cast<std::size_t>(alg.n));
  for (int i = 0; i < alg.n; ++i)
    for (int j = 0; j < alg.n; ++j)
      for (const auto& [k, c] : alg.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].e)
        add_scaled(delta[static_cast<std::size_t>(k)], c, SVec::unit(i * alg.n + j));
  return connected_comonoid(poly, std::move(delta), alg.d, max_degree);
}

Report validate_comonoid(const Comonoid& c) {
  Report r = Report::ok("comonoid");
  Report co = Report::ok("coalgebra");
  try {
    c.ctx->validate();
  } catch (const InvalidArgument& e) {
    co = Report::failure("coalgebra", e.what());
  }
  r.add(co);
  if (c.kind != Comonoid::Kind::connected_qa) return r;

  const QuadraticAlgebra& a = *c.algebra;
  int n = a.n;
  QuadraticAlgebra w = product(a, a, ProductKind::white);
  Report ext = Report::ok("extension");
  Report cu = Report::ok("counit_extension");
  const auto& rel = a.relations.basis();
  for (std::size_t k = 0; k < rel.size(); ++k) {
    SVec img;
    Scalar e;
    for (const auto& [ab, x] : rel[k].e) {
      add_scaled(img, x, outer(c.delta1[static_cast<std::size_t>(ab / n)], c.delta1[static_cast<std::size_t>(ab % n)], n * n));
      e += x * c.eps1[static_cast<std::size_t>(ab / n)] * c.eps1[static_cast<std::size_t>(ab % n)];
    }
    std::string rs = a.relation_strings()[k];
    if (ext.pass && !w.relations.contains(img)) {
      ext = Report::failure("extension", "coproduct of relation " + std::to_string(k + 1) + " leaves the white-product relations");
      ext.witness_kind = "relation";
      ext.witness = {static_cast<int>(k) + 1};
      ext.expansion = rs;
    }
    if (cu.pass && !e.is_zero()) {
      cu = Report::failure("counit_extension", "counit does not vanish on relation " + std::to_string(k + 1));
      cu.witness_kind = "relation";
      cu.witness = {static_cast<int>(k) + 1};
      cu.expansion = rs;
    }
  }
  r.add(ext);
  r.add(cu);
  return r;
}

Corepresentation identity_corep(const ComonoidPtr& coend, const Idempotent& b) {
  return Corepresentation{coend, b, FirstOrderMatrix::universal(b.n(), b.n(), coend->ctx)};
}

FirstOrderMatrix s_embed_representation(const std::vector<Matrix>& rho, ContextPtr ctx) {
  if (static_cast<int>(rho.size()) != ctx->dim(1)) throw ShapeError("need one representation matrix per basis vector");
  int m = rho.empty() ? 0 : rho[0].rows();
  FirstOrderMatrix out(m, m, ctx);
  for (std::size_t a = 0; a < rho.size(); ++a) {
    if (rho[a].rows() != m || rho[a].cols() != m) throw ShapeError("representation matrices must be square and equal-sized");
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (!rho[a](i, j).is_zero()) add_scaled(out.at(i, j), rho[a](i, j), SVec::unit(static_cast<int>(a)));
  }
  return out;
}

Report corep_check(const Comonoid& c, const Idempotent& b, const FirstOrderMatrix& m) {
  if (m.context() != c.ctx) throw InvalidArgument("matrix does not live in the comonoid's context");
  if (m.rows() != b.n() || m.cols() != b.n()) throw ShapeError("corepresentation matrix must be square of the idempotent's size");
  Report r = Report::ok("corep");
  r.add(multiplicative_check(m));
  r.add(check_manin(b, b, m));
  return r;
}

Report corep_morphism_check(const Matrix& k, const Corepresentation& src, const Corepresentation& dst) {
  require_shared(src, dst);
  int m = src.b.n();
  int m2 = dst.b.n();
  if (k.rows() != m || k.cols() != m2) throw ShapeError("intertwiner must be dim(src) x dim(dst)");
  const MulContext& ctx = *src.comonoid->ctx;
  Report r = Report::ok("morphism");
  r.add(check_scalar_manin(src.b, dst.b, k));
  Report inter = Report::ok("intertwining");
  for (int i = 0; i < m && inter.pass; ++i)
    for (int j = 0; j < m2; ++j) {
      SVec lhs;
      SVec rhs;
      for (int b = 0; b < m2; ++b) add_scaled(lhs, k(i, b), dst.m.at(b, j));
      for (int a = 0; a < m; ++a) add_scaled(rhs, k(a, j), src.m.at(i, a));
      if (lhs == rhs) continue;
      inter = Report::failure("intertwining", "K M' differs from M K at entry " + idx_str({i + 1, j + 1}));
      inter.witness_kind = "ij";
      inter.witness = {i + 1, j + 1};
      inter.expansion = ctx.format(1, lhs - rhs);
      break;
    }
  r.add(inter);
  return r;
}

CorepResult corep_direct_sum(const Corepresentation& a, const Corepresentation& b) {
  require_shared(a, b);
  Report r = Report::ok("direct_sum");
  Report com = commute_entrywise(a.m, b.m);
  if (!com.pass) {
    r.add(com);
    r.message = "NonCommutingEntries";
    return {std::nullopt, r};
  }
  r.add(com);
  Corepresentation out{a.comonoid, dis(a.b, b.b), direct_sum(a.m, b.m)};
  r.add(corep_check(out));
  if (!r.all_pass()) return {std::nullopt, r};
  return {out, r};
}

CorepResult corep_coproduct(const Corepresentation& a, const Corepresentation& b) {
  require_shared(a, b);
  Report r = Report::ok("coproduct");
  Corepresentation out{a.comonoid, cop(a.b, b.b), direct_sum(a.m, b.m)};
  r.add(corep_check(out));
  if (!r.all_pass()) return {std::nullopt, r};
  return {out, r};
}

CorepResult corep_tensor(const Corepresentation& a, const Corepresentation& b, TensorKind kind) {
  require_shared(a, b);
  require_slice(*a.comonoid, "the tensor product of corepresentations");
  const ContextPtr& ctx = a.comonoid->ctx;
  Report r = Report::ok(kind == TensorKind::white ? "tensor" : "black_tensor");
  if (ctx->max_degree < 4 || !ctx->has_table(2, 2)) {
    Report com = commute_entrywise(a.m, b.m);
    r.sufficient_only = true;
    r.message = "P4 unavailable; entrywise commutation checked as a sufficient condition only";
    r.add(com);
    return {std::nullopt, r};
  }
  ContextPtr lifted = lift(ctx);
  ComonoidPtr lc = slice_comonoid(lifted);
  Idempotent e = kind == TensorKind::white ? tep(a.b, b.b) : black_tep(a.b, b.b);
  Corepresentation out{lc, e, dot_tensor(a.m, b.m, lifted)};
  Report chk = corep_check(out);
  r.add(chk);
  if (!r.all_pass()) {
    r.message = "NonExistence";
    return {std::nullopt, r};
  }
  return {out, r};
}

Report inverse_check(const FirstOrderMatrix& m, const FirstOrderMatrix& minv) {
  if (m.context() != minv.context()) throw InvalidArgument("inverse lives in a different context");
  if (m.rows() != m.cols() || minv.rows() != m.rows() || minv.cols() != m.cols()) throw ShapeError("inverse must match the square matrix");
  const MulContext& ctx = *m.context();
  SVec one = ctx.unit_p2();
  Report r = Report::ok("inverse");
  int n = m.rows();
  for (int side = 0; side < 2; ++side) {
    const FirstOrderMatrix& x = side == 0 ? m : minv;
    const FirstOrderMatrix& y = side == 0 ? minv : m;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        SVec s;
        for (int k = 0; k < n; ++k) add_scaled(s, Scalar(1), ctx.mul(x.at(i, k), y.at(k, j)));
        if (i == j) s = s - one;
        if (s.is_zero()) continue;
        Report f = Report::failure("inverse", std::string(side == 0 ? "M Minv" : "Minv M") + " differs from the identity at " +
                                                  idx_str({i + 1, j + 1}));
        f.witness_kind = "ij";
        f.witness = {i + 1, j + 1};
        f.expansion = ctx.format(2, s);
        return f;
      }
  }
  return r;
}

CorepResult corep_dual(const Corepresentation& a, const FirstOrderMatrix& minv, DualFlavor flavor) {
  require_slice(*a.comonoid, "the dual corepresentation");
  Report r = Report::ok(flavor == DualFlavor::dual ? "dual" : "koszul_dual");
  Report inv = inverse_check(a.m, minv);
  r.add(inv);
  if (!inv.pass) {
    r.message = "InverseFailure";
    return {std::nullopt, r};
  }
  if (flavor == DualFlavor::dual) {
    Idempotent e = Idempotent::make(conj21(a.b).complement().transpose());
    Corepresentation out{a.comonoid, e, minv.transpose()};
    r.add(corep_check(out));
    if (!r.all_pass()) return {std::nullopt, r};
    return {out, r};
  }
  ComonoidPtr op = slice_comonoid(opposite_mul(a.comonoid->ctx));
  Idempotent e = Idempotent::make(a.b.complement().transpose());
  Corepresentation out{op, e, rebind(minv.transpose(), op->ctx)};
  r.add(corep_check(out));
  if (!r.all_pass()) return {std::nullopt, r};
  return {out, r};
}

CorepResult hom_corep(const Corepresentation& a, const Corepresentation& b, const FirstOrderMatrix& minv) {
  require_shared(a, b);
  require_slice(*a.comonoid, "the hom corepresentation");
  const ContextPtr& ctx = a.comonoid->ctx;
  if (!ctx->commutative()) throw InvalidArgument("hom corepresentation needs a commutative slice");
  Report r = Report::ok("hom");
  Report inv = inverse_check(a.m, minv);
  r.add(inv);
  if (!inv.pass) {
    r.message = "InverseFailure";
    return {std::nullopt, r};
  }
  ContextPtr lifted = lift(ctx);
  ComonoidPtr lc = slice_comonoid(lifted);
  Idempotent e = black_tep(Idempotent::make(a.b.complement().transpose()), b.b);
  Corepresentation out{lc, e, dot_tensor(minv.transpose(), b.m, lifted)};
  r.add(corep_check(out));
  if (!r.all_pass()) return {std::nullopt, r};
  return {out, r};
}

ClassicalData dequantise(const Corepresentation& a) {
  const Comonoid& c = *a.comonoid;
  if (c.kind != Comonoid::Kind::connected_qa) throw InvalidArgument("dequantisation needs a connected_qa comonoid");
  int n = c.algebra->n;
  ClassicalData out;
  AlgebraStructureConstants& alg = out.algebra;
  alg.n = n;
  alg.field = c.ctx->field;
  alg.dual_labels = c.algebra->labels;
  for (const auto& l : alg.dual_labels) alg.labels.push_back("d(" + l + ")");
  alg.c.assign(static_cast<std::size_t>(n), std::vector<SVec>(static_cast<std::size_t>(n)));
  for (int k = 0; k < n; ++k)
    for (const auto& [ab, x] : c.delta1[static_cast<std::size_t>(k)].e)
      add_scaled(alg.c[static_cast<std::size_t>(ab / n)][static_cast<std::size_t>(ab % n)], x, SVec::unit(k));
  alg.d = c.eps1;
  int m = a.m.rows();
  for (int v = 0; v < n; ++v) {
    Matrix rho(m, m, alg.field);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) rho(i, j) = a.m.at(i, j).at(v);
    out.rho.push_back(std::move(rho));
  }
  return out;
}

}  // namespace qrep
