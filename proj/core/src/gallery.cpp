#include "qrep/gallery.hpp"

#include <algorithm>

#include "qrep/errors.hpp"

namespace qrep {

namespace {

Report expect(const std::string& check, bool ok, const std::string& failure_message) {
  return ok ? Report::ok(check) : Report::failure(check, failure_message);
}

Report named(Report r, const std::string& check) {
  r.check = check;
  return r;
}

// The check is supposed to fail; the part passes when it does and carries its witness.
Report expect_failure(const std::string& check, const Report& r) {
  if (r.all_pass()) return Report::failure(check, "expected a failing check, but it passed");
  const Report* w = &r;
  while (w->pass && !w->parts.empty()) {
    auto it = std::find_if(w->parts.begin(), w->parts.end(), [](const Report& p) { return !p.all_pass(); });
    w = &*it;
  }
  while (!w->pass && w->witness.empty() && !w->parts.empty()) {
    auto it = std::find_if(w->parts.begin(), w->parts.end(), [](const Report& p) { return !p.all_pass(); });
    if (it == w->parts.end()) break;
    w = &*it;
  }
  Report out = Report::ok(check);
  out.message = "fails as expected: " + w->message;
  out.witness_kind = w->witness_kind;
  out.witness = w->witness;
  out.expansion = w->expansion;
  return out;
}

Document new_bundle(const Field& f) {
  Document d;
  d.field = f;
  return d;
}

json ref_payload(const std::string& kind, std::initializer_list<std::pair<const std::string, json>> fields) {
  json j = json::object();
  for (const auto& [k, v] : fields) j[k] = v;
  j["kind"] = kind;
  return j;
}

std::vector<SVec> swap_tensor_factors(const std::vector<SVec>& delta, int n) {
  std::vector<SVec> out;
  for (const auto& d : delta) {
    SVec s;
    for (const auto& [ab, c] : d.e) add_scaled(s, c, SVec::unit((ab % n) * n + ab / n));
    out.push_back(std::move(s));
  }
  return out;
}

ComonoidPtr coopposite_comonoid(const Comonoid& c) {
  int n = c.algebra->n;
  return connected_comonoid(*c.algebra, swap_tensor_factors(c.delta1, n), c.eps1, c.ctx->max_degree);
}

std::vector<Matrix> unit_matrices(int m, const Field& f, bool transposed) {
  std::vector<Matrix> out;
  for (int a = 0; a < m * m; ++a) {
    Matrix r(m, m, f);
    if (transposed) {
      r(a % m, a / m) = Scalar(1);
    } else {
      r(a / m, a % m) = Scalar(1);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<SVec> specialized(const std::vector<SVec>& rows, const Rational& value) {
  std::vector<SVec> out;
  for (const auto& r : rows) {
    SVec s;
    for (const auto& [i, c] : r.e) add_scaled(s, c.specialize(value), SVec::unit(i));
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<SVec> reindexed(const std::vector<SVec>& rows, int ngen, const std::function<int(int)>& f) {
  std::vector<SVec> out;
  for (const auto& r : rows) {
    SVec s;
    for (const auto& [i, c] : r.e) add_scaled(s, c, SVec::unit(f(i / ngen) * ngen + f(i % ngen)));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<SVec> manin_relation_list(const Idempotent& a, const Idempotent& b, int ngen, const std::function<int(int, int)>& g) {
  int n = a.n();
  int m = b.n();
  Matrix c = b.complement();
  std::vector<SVec> out;
  for (int ij = 0; ij < n * n; ++ij)
    for (int kl = 0; kl < m * m; ++kl) {
      SVec v;
      for (int ab = 0; ab < n * n; ++ab) {
        const Scalar& x = a.matrix()(ij, ab);
        if (x.is_zero()) continue;
        for (int cd = 0; cd < m * m; ++cd) {
          const Scalar& y = c(cd, kl);
          if (y.is_zero()) continue;
          add_scaled(v, x * y, SVec::unit(g(ab / n, cd / m) * ngen + g(ab % n, cd % m)));
        }
      }
      if (!v.is_zero()) out.push_back(std::move(v));
    }
  return out;
}

std::vector<SVec> mq_relation_list(int m, const Scalar& q) {
  int n = m * m;
  auto gen = [m](int i, int j) { return i * m + j; };
  auto term = [n](int x, int y) { return SVec::unit(x * n + y); };
  std::vector<SVec> out;
  Scalar qinv_minus_q = q.inv() - q;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = 0; k < m; ++k) out.push_back(axpy(term(gen(j, k), gen(i, k)), -q, term(gen(i, k), gen(j, k))));
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k)
      for (int l = k + 1; l < m; ++l) out.push_back(axpy(term(gen(i, l), gen(i, k)), -q, term(gen(i, k), gen(i, l))));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = k + 1; l < m; ++l) {
          out.push_back(term(gen(i, l), gen(j, k)) - term(gen(j, k), gen(i, l)));
          SVec r = term(gen(i, k), gen(j, l)) - term(gen(j, l), gen(i, k));
          out.push_back(axpy(r, -qinv_minus_q, term(gen(j, k), gen(i, l))));
        }
  return out;
}

ScenarioResult scenario_mq(int m) {
  if (m < 2 || m > 3) throw InvalidArgument("mq is available for m = 2, 3");
  Field f = Field::ratfunc("q");
  Scalar q = Scalar::variable();
  int n = m * m;
  ScenarioResult res;
  res.name = "mq";
  res.parameter = m;
  res.description = "q-deformed matrix bialgebra M_q(m): its relations are exactly the A^q-Manin conditions on M and its transpose";
  res.report = Report::ok("scenario mq");

  Idempotent aq = q_antisym(uniform_q_params(m, q), f);
  std::vector<SVec> rel = mq_relation_list(m, q);
  Subspace srel = Subspace::span(rel, n * n, f);
  auto row_major = [m](int i, int j) { return i * m + j; };
  auto col_major = [m](int i, int j) { return j * m + i; };
  Subspace sm = Subspace::span(manin_relation_list(aq, aq, n, row_major), n * n, f);
  Subspace smt = Subspace::span(manin_relation_list(aq, aq, n, col_major), n * n, f);
  Subspace both = sm.sum(smt);
  res.facts["relations_listed"] = rel.size();
  res.facts["relation_span_dim"] = srel.dim();
  res.facts["manin_M_dim"] = sm.dim();
  res.facts["manin_Mt_dim"] = smt.dim();
  res.facts["manin_union_dim"] = both.dim();
  res.report.add(expect("span_equality", srel == both, "relation span differs from the Manin conditions on M and its transpose"));
  res.report.add(expect("cohom_agrees", cohom_algebra(aq, aq).relations == sm,
                        "cohom algebra relations differ from the Manin conditions on M"));

  Field qf = Field::rational();
  Subspace s1 = Subspace::span(specialized(rel, Rational(1)), n * n, qf);
  Idempotent a1 = antisym(m, qf);
  std::vector<SVec> c1 = cohom_algebra(a1, a1).relations.basis();
  std::vector<SVec> c1t = reindexed(c1, n, [m](int x) { return (x % m) * m + x / m; });
  c1.insert(c1.end(), c1t.begin(), c1t.end());
  std::vector<SVec> commutators;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) commutators.push_back(SVec::unit(x * n + y) - SVec::unit(y * n + x));
  Subspace classical = Subspace::span(c1, n * n, qf);
  res.facts["q1_span_dim"] = s1.dim();
  res.report.add(expect("q1_specialization", s1 == classical && classical == Subspace::span(commutators, n * n, qf),
                        "q = 1 relations differ from the commutative matrix bialgebra"));

  QuadraticAlgebra mq = make_algebra(n, rel, f, cohom_algebra(aq, aq).labels);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) mq.labels[static_cast<std::size_t>(i * m + j)] = "a" + std::to_string(i + 1) + std::to_string(j + 1);
  std::vector<SVec> delta(static_cast<std::size_t>(n));
  std::vector<Scalar> eps(static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) add_scaled(delta[static_cast<std::size_t>(i * m + j)], Scalar(1), SVec::unit((i * m + k) * n + k * m + j));
      eps[static_cast<std::size_t>(i * m + j)] = Scalar(i == j ? 1 : 0);
    }
  ComonoidPtr co = connected_comonoid(mq, delta, eps, 2);
  ComonoidPtr cop = coopposite_comonoid(*co);
  res.report.add(named(validate_comonoid(*co), "comonoid"));
  res.report.add(named(validate_comonoid(*cop), "comonoid_cop"));
  res.report.add(named(corep_check(*co, aq, FirstOrderMatrix::universal(m, m, co->ctx)), "corep_omega_q"));
  res.report.add(named(corep_check(*cop, aq, FirstOrderMatrix::universal(m, m, cop->ctx).transpose()), "corep_omega_q_transposed"));

  Document d = new_bundle(f);
  d.put("Aq", ref_payload("idempotent", {{"builtin", "q_antisym"}, {"m", m}}));
  d.put("Mq", export_algebra(mq));
  d.put("Mq_comonoid", export_connected_comonoid(*co, "Mq"));
  d.put("Mq_cop", export_connected_comonoid(*cop, "Mq"));
  d.put("M", ref_payload("matrix", {{"context", "Mq_comonoid"}, {"universal", {m, m}}}));
  d.put("M_cop", ref_payload("matrix", {{"context", "Mq_cop"}, {"universal", {m, m}}}));
  d.put("Mt", ref_payload("matrix", {{"op", "transpose"}, {"args", {"M_cop"}}}));
  d.put("omega_q", ref_payload("corep", {{"comonoid", "Mq_comonoid"}, {"idempotent", "Aq"}, {"matrix", "M"}}));
  d.put("omega_q_t", ref_payload("corep", {{"comonoid", "Mq_cop"}, {"idempotent", "Aq"}, {"matrix", "Mt"}}));
  res.bundle = std::move(d);
  return res;
}

ScenarioResult scenario_matrix_algebra(int m) {
  if (m < 2 || m > 3) throw InvalidArgument("matrix_algebra is available for m = 2, 3");
  Field f = Field::rational();
  int n = m * m;
  ScenarioResult res;
  res.name = "matrix_algebra";
  res.parameter = m;
  res.description = "S-embedding of Mat_m acting on column and row vectors";
  res.report = Report::ok("scenario matrix_algebra");

  AlgebraStructureConstants mat = matrix_algebra(m, f);
  Idempotent a = antisym(m, f);
  ComonoidPtr co = s_embedding_comonoid(mat, 2);
  ComonoidPtr cop = coopposite_comonoid(*co);
  res.report.add(named(validate_comonoid(*co), "comonoid"));

  bool delta_ok = true;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      SVec want;
      for (int k = 0; k < m; ++k) add_scaled(want, Scalar(1), SVec::unit((i * m + k) * n + k * m + j));
      delta_ok = delta_ok && co->delta1[static_cast<std::size_t>(i * m + j)] == want &&
                 co->eps1[static_cast<std::size_t>(i * m + j)] == Scalar(i == j ? 1 : 0);
    }
  res.report.add(expect("matrix_coproduct", delta_ok, "coproduct or counit differs from the matrix coproduct"));

  std::vector<Matrix> rho = unit_matrices(m, f, false);
  Corepresentation omega{co, a, s_embed_representation(rho, co->ctx)};
  Corepresentation omega_t{cop, a, s_embed_representation(unit_matrices(m, f, true), cop->ctx)};
  res.report.add(named(corep_check(omega), "corep_standard"));
  res.report.add(named(corep_check(omega_t), "corep_transposed"));

  ClassicalData cd = dequantise(omega);
  res.report.add(expect("dequantise_roundtrip", cd.algebra.c == mat.c && cd.algebra.d == mat.d && cd.rho == rho,
                        "recovered structure constants or representation differ"));

  ContextPtr p = s_embedding_context(mat, 4);
  ComonoidPtr slice = slice_comonoid(p);
  Corepresentation w{slice, a, s_embed_representation(rho, p)};
  res.facts["entry_dim"] = p->dim(1);
  res.facts["p4_dim"] = p->dim(4);
  res.report.add(named(corep_check(w), "corep_slice"));
  res.report.add(named(corep_direct_sum(w, w).report, "direct_sum"));
  res.report.add(named(corep_tensor(w, w, TensorKind::white).report, "tensor"));
  res.report.add(named(corep_tensor(w, w, TensorKind::black).report, "black_tensor"));

  Document d = new_bundle(f);
  d.put("Mat", ref_payload("structure", {{"builtin", "matrix_algebra"}, {"m", m}}));
  d.put("A", ref_payload("idempotent", {{"builtin", "antisym"}, {"m", m}}));
  d.put("S", ref_payload("comonoid", {{"type", "s_embedding"}, {"structure", "Mat"}}));
  json names = json::array();
  for (int i = 0; i < n; ++i) {
    std::string nm = "rho_" + mat.labels[static_cast<std::size_t>(i)];
    d.put(nm, export_scalar_matrix(rho[static_cast<std::size_t>(i)]));
    names.push_back(nm);
  }
  d.put("M", ref_payload("matrix", {{"context", "S"}, {"representation", names}}));
  d.put("omega", ref_payload("corep", {{"comonoid", "S"}, {"idempotent", "A"}, {"matrix", "M"}}));
  d.put("Sym", export_algebra(*co->algebra));
  d.put("S_cop", export_connected_comonoid(*cop, "Sym"));
  d.put("M_cop", ref_payload("matrix", {{"context", "S_cop"}, {"universal", {m, m}}}));
  d.put("Mt", ref_payload("matrix", {{"op", "transpose"}, {"args", {"M_cop"}}}));
  d.put("omega_t", ref_payload("corep", {{"comonoid", "S_cop"}, {"idempotent", "A"}, {"matrix", "Mt"}}));
  d.put("P", ref_payload("context", {{"type", "s_embedding"}, {"structure", "Mat"}, {"max_degree", 4}}));
  d.put("P_slice", ref_payload("comonoid", {{"type", "slice"}, {"context", "P"}}));
  d.put("M4", ref_payload("matrix", {{"context", "P_slice"}, {"representation", names}}));
  d.put("omega4", ref_payload("corep", {{"comonoid", "P_slice"}, {"idempotent", "A"}, {"matrix", "M4"}}));
  res.bundle = std::move(d);
  return res;
}

ScenarioResult scenario_yangian_eval(int m) {
  if (m < 2 || m > 3) throw InvalidArgument("yangian_eval is available for m = 2, 3");
  Field f = Field::ratfunc("z");
  Scalar z = Scalar::variable();
  ScenarioResult res;
  res.name = "yangian_eval";
  res.parameter = m;
  res.description = "evaluation image of the Yangian: X = 1 + E/z and Y = 1 + E/(z-1) satisfy A X(1) Y(2) (1 - A) = 0 in U(gl_m)";
  res.report = Report::ok("scenario yangian_eval");

  Idempotent a = antisym(m, f);
  LieAlgebra gl = gl_lie(m, f);
  auto build = [&](const ContextPtr& ctx, const Scalar& shift) {
    FirstOrderMatrix x(m, m, ctx);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        SVec v = SVec::unit(1 + i * m + j, (z - shift).inv());
        if (i == j) v = v + SVec::unit(0);
        x.set(i, j, v);
      }
    return x;
  };
  ContextPtr u = pbw_context(gl, 2);
  FirstOrderMatrix x = build(u, Scalar(0));
  FirstOrderMatrix y = build(u, Scalar(1));
  res.report.add(named(check_manin(a, a, x, y), "shifted_identity"));
  res.report.add(expect_failure("unshifted_fails", check_manin(a, a, x, x)));
  ContextPtr ab = pbw_context(abelian_lie(m * m, f, gl.labels), 2);
  FirstOrderMatrix xa = build(ab, Scalar(0));
  res.report.add(named(check_manin(a, a, xa, xa), "abelian_same_matrix"));
  res.report.add(expect_failure("abelian_shift_fails", check_manin(a, a, xa, build(ab, Scalar(1)))));
  res.facts["entry_dim"] = u->dim(1);
  res.facts["p2_dim"] = u->dim(2);

  Document d = new_bundle(f);
  d.put("gl", ref_payload("lie", {{"builtin", "gl"}, {"m", m}}));
  d.put("U", ref_payload("context", {{"type", "pbw"}, {"lie", "gl"}, {"max_degree", 2}}));
  d.put("A", ref_payload("idempotent", {{"builtin", "antisym"}, {"m", m}}));
  d.put("X", export_matrix(x, "U"));
  d.put("Y", export_matrix(y, "U"));
  res.bundle = std::move(d);
  return res;
}

ScenarioResult scenario_so_quadratic(int m) {
  if (m < 2 || m > 4) throw InvalidArgument("so_quadratic is available for m = 2, 3, 4");
  Field f = Field::rational();
  ScenarioResult res;
  res.name = "so_quadratic";
  res.parameter = m;
  res.description = "the idempotent B_m: commuting coordinates subject to one invariant quadric";
  res.report = Report::ok("scenario so_quadratic");

  Idempotent b = so_B(m, f);
  res.report.add(expect("idempotent", b.matrix() * b.matrix() == b.matrix(), "B^2 differs from B"));
  QuadraticAlgebra x = algebra_X(b);
  std::vector<SVec> want;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) want.push_back(SVec::unit(i * m + j) - SVec::unit(j * m + i));
  SVec quadric;
  for (int i = 0; i < m; ++i) add_scaled(quadric, Scalar(1), SVec::unit(i * m + (m - 1 - i)));
  want.push_back(quadric);
  res.report.add(expect("relations", x.relations == Subspace::span(want, m * m, f),
                        "relations differ from commutators plus the invariant quadric"));
  QuadraticAlgebra dual = koszul_dual(x);
  res.report.add(expect("koszul_involution", koszul_dual(dual).relations == x.relations, "double Koszul dual differs"));
  res.facts["relation_dim"] = x.relations.dim();
  res.facts["dual_relation_dim"] = dual.relations.dim();
  json h = json::array();
  for (int k = 0; k <= 4; ++k) h.push_back(graded_dim(x, k));
  res.facts["hilbert"] = h;

  Document d = new_bundle(f);
  d.put("B", ref_payload("idempotent", {{"builtin", "so_B"}, {"m", m}}));
  d.put("XB", ref_payload("algebra", {{"op", "X"}, {"args", {"B"}}}));
  d.put("XB_dual", ref_payload("algebra", {{"op", "koszul_dual"}, {"args", {"XB"}}}));
  res.bundle = std::move(d);
  return res;
}

ScenarioResult scenario_finite_group() {
  Field f = Field::rational();
  ScenarioResult res;
  res.name = "finite_group";
  res.parameter = 2;
  res.description = "functions on Z/2 as a commutative Hopf algebra; regular and sign corepresentations";
  res.report = Report::ok("scenario finite_group");

  AlgebraStructureConstants z2 = z2_function_algebra(f);
  // basis δ_e, δ_g; Δ(δ_x) = Σ_{yz = x} δ_y ⊗ δ_z
  std::vector<SVec> delta = {SVec::from_dense({1, 0, 0, 1}), SVec::from_dense({0, 1, 1, 0})};
  std::vector<Scalar> eps = {Scalar(1), Scalar(0)};
  std::vector<int> antipode = {0, 1};
  ContextPtr ctx = constant_slice_context(z2, delta, eps, 4);
  ComonoidPtr g = slice_comonoid(ctx);

  bool antipode_ok = true;
  for (int x = 0; x < 2; ++x) {
    SVec lhs;
    SVec rhs;
    for (const auto& [ab, c] : delta[static_cast<std::size_t>(x)].e) {
      add_scaled(lhs, c, ctx->mul(SVec::unit(antipode[static_cast<std::size_t>(ab / 2)]), SVec::unit(ab % 2)));
      add_scaled(rhs, c, ctx->mul(SVec::unit(ab / 2), SVec::unit(antipode[static_cast<std::size_t>(ab % 2)])));
    }
    SVec want = ctx->unit_p2().scaled(eps[static_cast<std::size_t>(x)]);
    antipode_ok = antipode_ok && lhs == want && rhs == want;
  }
  res.report.add(expect("antipode", antipode_ok, "antipode axiom fails"));

  FirstOrderMatrix r(2, 2, ctx);
  r.set(0, 0, SVec::unit(0));
  r.set(1, 1, SVec::unit(0));
  r.set(0, 1, SVec::unit(1));
  r.set(1, 0, SVec::unit(1));
  FirstOrderMatrix chi(1, 1, ctx);
  chi.set(0, 0, SVec::from_dense({1, -1}));
  // antipode applied entrywise
  FirstOrderMatrix rinv = r;
  Idempotent a2 = antisym(2, f);
  Idempotent a1 = antisym(1, f);
  Corepresentation reg{g, a2, r};
  Corepresentation sgn{g, a1, chi};
  res.report.add(expect("character", ctx->coproduct(1, chi.at(0, 0)) == outer(chi.at(0, 0), chi.at(0, 0), 2),
                        "the sign function is not grouplike"));
  res.report.add(named(corep_check(reg), "corep_regular"));
  res.report.add(named(corep_check(sgn), "corep_sign"));
  res.report.add(named(inverse_check(r, rinv), "regular_inverse"));
  res.report.add(named(corep_dual(reg, rinv, DualFlavor::dual).report, "dual"));
  res.report.add(named(corep_dual(reg, rinv, DualFlavor::koszul_dual).report, "koszul_dual"));
  res.report.add(named(hom_corep(reg, sgn, rinv).report, "hom_regular_sign"));
  Matrix k = Matrix::from_values({{Scalar(1)}, {Scalar(-1)}}, f);
  res.report.add(named(corep_morphism_check(k, reg, sgn), "morphism_regular_to_sign"));

  Document d = new_bundle(f);
  d.put("Z2", ref_payload("structure", {{"builtin", "z2_functions"}}));
  d.put("F", ref_payload("context", {{"type", "constant_slice"},
                                     {"structure", "Z2"},
                                     {"max_degree", 4},
                                     {"coproduct", {{"d_e", {{"d_e⊗d_e", "1"}, {"d_g⊗d_g", "1"}}},
                                                    {"d_g", {{"d_e⊗d_g", "1"}, {"d_g⊗d_e", "1"}}}}},
                                     {"counit", {{"d_e", "1"}, {"d_g", "0"}}}}));
  d.put("G", ref_payload("comonoid", {{"type", "slice"}, {"context", "F"}}));
  d.put("R", export_matrix(r, "G"));
  d.put("chi", export_matrix(chi, "G"));
  d.put("A2", ref_payload("idempotent", {{"builtin", "antisym"}, {"m", 2}}));
  d.put("A1", ref_payload("idempotent", {{"builtin", "antisym"}, {"m", 1}}));
  d.put("regular", ref_payload("corep", {{"comonoid", "G"}, {"idempotent", "A2"}, {"matrix", "R"}}));
  d.put("sign", ref_payload("corep", {{"comonoid", "G"}, {"idempotent", "A1"}, {"matrix", "chi"}}));
  d.put("K", export_scalar_matrix(k));
  res.bundle = std::move(d);
  return res;
}

const std::vector<ScenarioInfo>& gallery_scenarios() {
  static const std::vector<ScenarioInfo> all = {
      {"mq", "q-deformed matrix bialgebra and the quantum plane", {2, 3}, 2},
      {"matrix_algebra", "S-embedding of the matrix algebra Mat_m", {2, 3}, 2},
      {"yangian_eval", "evaluation Yangian identity in U(gl_m)", {2, 3}, 2},
      {"so_quadratic", "the orthogonal quadric idempotent B_m", {2, 3, 4}, 3},
      {"finite_group", "Z/2 function Hopf algebra", {2}, 2},
  };
  return all;
}

ScenarioResult run_scenario(const std::string& name, std::optional<int> parameter) {
  const auto& all = gallery_scenarios();
  auto it = std::find_if(all.begin(), all.end(), [&](const ScenarioInfo& s) { return s.name == name; });
  if (it == all.end()) throw InvalidArgument("unknown scenario '" + name + "'");
  int p = parameter.value_or(it->default_parameter);
  if (std::find(it->parameters.begin(), it->parameters.end(), p) == it->parameters.end())
    throw InvalidArgument("scenario '" + name + "' does not take parameter " + std::to_string(p));
  if (name == "mq") return scenario_mq(p);
  if (name == "matrix_algebra") return scenario_matrix_algebra(p);
  if (name == "yangian_eval") return scenario_yangian_eval(p);
  if (name == "so_quadratic") return scenario_so_quadratic(p);
  return scenario_finite_group();
}

}  // namespace qrep
