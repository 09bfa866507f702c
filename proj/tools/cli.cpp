#include "cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>

#include <CLI11.hpp>

#include "qrep/errors.hpp"
#include "qrep/gallery.hpp"
#include "qrep/io.hpp"

namespace qrep::cli {

namespace {

struct Options {
  std::string doc;
  std::string field;
  std::string format = "text";
  std::string out;
  int max_degree = -1;
  unsigned seed = 1;

  std::string name, other, kind, a, b, x, y, m, n, k, src, dst, inverse, flavor = "dual", presentation, op, expr, rhs,
      a2, b2, f1, type, source;
  std::vector<std::string> args;
  int degree = -1;
  int param = -1;
  int count = 20;
  int dim_n = -1;
  int dim_m = -1;
  bool direct = false;
};

struct Outcome {
  std::optional<Report> report;
  json result = json::object();
  std::optional<Document> produced;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

using Handler = std::function<Outcome(const Options&, Resolver&)>;

std::string require(const std::string& v, const std::string& flag) {
  if (v.empty()) throw UsageError("missing required option " + flag);
  return v;
}

json algebra_info(const QuadraticAlgebra& a) {
  json j;
  j["generators"] = a.labels;
  j["relation_dim"] = a.relations.dim();
  j["relations"] = a.relation_strings();
  j["field"] = a.field().str();
  return j;
}

json matrix_rows(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(m.field().format(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

json entry_rows(const FirstOrderMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(m.entry_str(i, j));
    rows.push_back(r);
  }
  return rows;
}

json subspace_rows(const Subspace& s) {
  json rows = json::array();
  for (const auto& v : s.basis()) {
    json r = json::array();
    for (const auto& c : v.to_dense(s.ambient())) r.push_back(s.field().format(c));
    rows.push_back(r);
  }
  return rows;
}

Document single(const Field& f, const std::string& name, json payload) {
  Document d;
  d.field = f;
  d.put(name, std::move(payload));
  return d;
}

Outcome corep_outcome(const CorepResult& r) {
  Outcome o;
  o.report = r.report;
  if (r.corep) {
    o.result["dimension"] = r.corep->b.n();
    o.result["entry_space_dim"] = r.corep->comonoid->ctx->dim(1);
    o.result["matrix"] = entry_rows(r.corep->m);
  }
  return o;
}

QuadraticAlgebra algebra_arg(const Options& o, Resolver& r) {
  if (!o.name.empty()) return r.algebra(o.name);
  std::string e = require(o.a, "--name or --idempotent");
  Idempotent idem = r.idempotent(e);
  return o.presentation == "Xi" ? algebra_Xi(idem) : algebra_X(idem);
}

// ---------------------------------------------------------------- handlers

Outcome cmd_check_idempotent(const Options& o, Resolver& r) {
  std::string name = require(o.name, "--name");
  Outcome out;
  Matrix m = r.kind_of(name) == "scalar_matrix" ? r.scalar_matrix(name) : r.idempotent(name).matrix();
  out.result["size"] = m.rows();
  try {
    Idempotent e = Idempotent::make(m);
    out.report = Report::ok("idempotent");
    out.result["rank"] = rank(e.matrix());
  } catch (const NotIdempotent& ex) {
    out.report = Report::failure("idempotent", ex.what());
  }
  return out;
}

Outcome cmd_algebra_info(const Options& o, Resolver& r) {
  Outcome out;
  out.result = algebra_info(algebra_arg(o, r));
  return out;
}

Outcome cmd_algebra_hilbert(const Options& o, Resolver& r) {
  QuadraticAlgebra a = algebra_arg(o, r);
  if (o.degree < 0) throw UsageError("missing required option --k");
  Outcome out;
  json values = json::array();
  GradedQuotient gq(a, o.degree);
  for (int k = 0; k <= o.degree; ++k) values.push_back(gq.dim(k));
  out.result["k"] = o.degree;
  out.result["dim"] = gq.dim(o.degree);
  out.result["values"] = values;
  if (o.direct) {
    int d = graded_dim_direct(a, o.degree);
    out.result["direct_dim"] = d;
    out.report = d == gq.dim(o.degree) ? Report::ok("hilbert_crosscheck")
                                       : Report::failure("hilbert_crosscheck", "normal-form and direct ranks disagree");
  }
  return out;
}

Outcome cmd_algebra_koszul(const Options& o, Resolver& r) {
  QuadraticAlgebra d = koszul_dual(algebra_arg(o, r));
  Outcome out;
  out.result = algebra_info(d);
  out.produced = single(r.field(), "koszul_dual", export_algebra(d));
  return out;
}

Outcome cmd_algebra_product(const Options& o, Resolver& r) {
  QuadraticAlgebra p = product(r.algebra(require(o.name, "--name")), r.algebra(require(o.other, "--other")),
                               product_kind_from_string(require(o.kind, "--kind")));
  Outcome out;
  out.result = algebra_info(p);
  out.produced = single(r.field(), "product", export_algebra(p));
  return out;
}

Outcome cmd_algebra_cohom(const Options& o, Resolver& r) {
  QuadraticAlgebra c = cohom_algebra(r.idempotent(require(o.b, "--b")), r.idempotent(require(o.a, "--a")));
  Outcome out;
  out.result = algebra_info(c);
  out.produced = single(r.field(), "cohom", export_algebra(c));
  return out;
}

Outcome cmd_algebra_structural(const Options& o, Resolver& r) {
  std::string op = require(o.op, "--op");
  Outcome out;
  if (op == "opposite") {
    QuadraticAlgebra a = opposite(r.algebra(require(o.name, "--name")));
    out.result = algebra_info(a);
    out.produced = single(r.field(), "opposite", export_algebra(a));
    return out;
  }
  auto arg = [&](std::size_t i) {
    if (o.args.size() <= i) throw UsageError("--args needs more idempotents for '" + op + "'");
    return r.idempotent(o.args[i]);
  };
  std::optional<Idempotent> e;
  if (op == "conj21") e = conj21(arg(0));
  if (op == "tep") e = tep(arg(0), arg(1));
  if (op == "black_tep") e = black_tep(arg(0), arg(1));
  if (op == "dis") e = dis(arg(0), arg(1));
  if (op == "cop") e = cop(arg(0), arg(1));
  if (op == "complement_transpose") e = Idempotent::make(arg(0).complement().transpose());
  if (!e) throw UsageError("unknown structural operation '" + op + "'");
  out.result["n"] = e->n();
  out.result["rank"] = rank(e->matrix());
  out.result["matrix"] = matrix_rows(e->matrix());
  out.produced = single(r.field(), op, export_idempotent(*e));
  return out;
}

Outcome cmd_algebra_hom_check(const Options& o, Resolver& r) {
  Matrix f1 = r.scalar_matrix(require(o.f1, "--f1"));
  bool ok = extends_to_hom(f1, r.algebra(require(o.name, "--name")), r.algebra(require(o.other, "--other")));
  Outcome out;
  out.report = ok ? Report::ok("extends_to_hom")
                  : Report::failure("extends_to_hom", "the generator map does not preserve the relations");
  return out;
}

Outcome cmd_linalg_rref(const Options& o, Resolver& r) {
  RrefResult res = rref(r.scalar_matrix(require(o.name, "--name")));
  Outcome out;
  out.result["rank"] = res.rank;
  out.result["pivots"] = res.pivots;
  out.result["basis"] = matrix_rows(res.basis);
  return out;
}

Outcome cmd_linalg_kernel(const Options& o, Resolver& r) {
  Subspace k = kernel(r.scalar_matrix(require(o.name, "--name")));
  Outcome out;
  out.result["dim"] = k.dim();
  out.result["basis"] = subspace_rows(k);
  return out;
}

Outcome cmd_linalg_subspace(const Options& o, Resolver& r) {
  Subspace sa = Subspace::rowspace(r.scalar_matrix(require(o.name, "--name")));
  Subspace sb = Subspace::rowspace(r.scalar_matrix(require(o.other, "--other")));
  std::string op = require(o.op, "--op");
  Outcome out;
  if (op == "sum" || op == "intersect") {
    Subspace s = op == "sum" ? sa.sum(sb) : sa.intersect(sb);
    out.result["dim"] = s.dim();
    out.result["basis"] = subspace_rows(s);
  } else if (op == "contains") {
    out.report = sa.contains(sb) ? Report::ok("contains") : Report::failure("contains", "second rowspace is not contained in the first");
  } else if (op == "equals") {
    out.report = sa == sb ? Report::ok("equals") : Report::failure("equals", "rowspaces differ");
  } else {
    throw UsageError("--op must be sum, intersect, contains or equals");
  }
  return out;
}

Outcome cmd_linalg_kron(const Options& o, Resolver& r) {
  Matrix k = kron(r.scalar_matrix(require(o.name, "--name")), r.scalar_matrix(require(o.other, "--other")));
  Outcome out;
  out.result["rows"] = matrix_rows(k);
  out.produced = single(r.field(), "kron", export_scalar_matrix(k));
  return out;
}

Outcome cmd_linalg_shuffle(const Options& o, Resolver& r) {
  if (o.dim_n < 1 || o.dim_m < 1) throw UsageError("--n and --m must be positive");
  Matrix s = shuffle_23(o.dim_n, o.dim_m, r.field());
  Outcome out;
  out.result["rows"] = matrix_rows(s);
  return out;
}

Outcome cmd_scalar_eval(const Options& o, Resolver& r) {
  const Field& f = r.field();
  Scalar a = f.parse(require(o.expr, "--expr"));
  Outcome out;
  if (o.op.empty()) {
    out.result["value"] = f.format(a);
    return out;
  }
  auto rhs = [&] { return f.parse(require(o.rhs, "--rhs")); };
  if (o.op == "eq") {
    out.result["value"] = a == rhs();
  } else if (o.op == "neg") {
    out.result["value"] = f.format(-a);
  } else if (o.op == "inv") {
    out.result["value"] = f.format(a.inv());
  } else if (o.op == "add") {
    out.result["value"] = f.format(a + rhs());
  } else if (o.op == "sub") {
    out.result["value"] = f.format(a - rhs());
  } else if (o.op == "mul") {
    out.result["value"] = f.format(a * rhs());
  } else if (o.op == "div") {
    out.result["value"] = f.format(a / rhs());
  } else {
    throw UsageError("--op must be add, sub, mul, div, inv, neg or eq");
  }
  return out;
}

Outcome cmd_context_info(const Options& o, Resolver& r) {
  ContextPtr ctx;
  if (!o.type.empty()) {
    int d = o.max_degree > 0 ? o.max_degree : 2;
    std::string s = require(o.source, "--source");
    if (o.type == "qa") {
      ctx = qa_context(r.algebra(s), d);
    } else if (o.type == "pbw") {
      ctx = pbw_context(r.lie(s), d);
    } else if (o.type == "s_embedding") {
      ctx = s_embedding_context(r.structure(s), d);
    } else if (o.type == "t_embedding") {
      ctx = t_embedding_context(r.structure(s), d);
    } else {
      throw UsageError("--type must be qa, pbw, s_embedding or t_embedding");
    }
  } else {
    ctx = r.context(require(o.name, "--name or --type"));
  }
  Outcome out;
  json dims = json::array();
  for (int g = 0; g <= ctx->max_degree; ++g) dims.push_back(ctx->dim(g));
  out.result["kind"] = ctx->kind_name();
  out.result["max_degree"] = ctx->max_degree;
  out.result["dims"] = dims;
  out.result["entry_basis"] = ctx->labels.at(1);
  out.result["commutative"] = ctx->commutative();
  out.result["unit"] = ctx->unit ? json(ctx->format(1, *ctx->unit)) : json();
  out.result["coalgebra"] = ctx->has_coalgebra(1);
  try {
    ctx->validate();
    out.report = Report::ok("context");
  } catch (const InvalidArgument& e) {
    out.report = Report::failure("context", e.what());
  }
  out.produced = single(r.field(), "context", export_context(*ctx));
  return out;
}

Outcome cmd_manin_check(const Options& o, Resolver& r) {
  Idempotent a = r.idempotent(require(o.a, "--a"));
  Idempotent b = r.idempotent(require(o.b, "--b"));
  FirstOrderMatrix x = r.matrix(require(o.x, "--x"));
  FirstOrderMatrix y = o.y.empty() ? x : r.matrix(o.y);
  Outcome out;
  out.report = check_manin(a, b, x, y);
  return out;
}

Outcome cmd_manin_commute(const Options& o, Resolver& r) {
  Outcome out;
  out.report = commute_entrywise(r.matrix(require(o.m, "--m")), r.matrix(require(o.n, "--n")));
  return out;
}

Outcome cmd_manin_dsum(const Options& o, Resolver& r) {
  Outcome out;
  out.result["matrix"] = entry_rows(direct_sum(r.matrix(require(o.m, "--m")), r.matrix(require(o.n, "--n"))));
  return out;
}

Outcome cmd_manin_dtensor(const Options& o, Resolver& r) {
  FirstOrderMatrix t = dot_tensor(r.matrix(require(o.m, "--m")), r.matrix(require(o.n, "--n")));
  Outcome out;
  out.result["entry_space_dim"] = t.context()->dim(1);
  out.result["matrix"] = entry_rows(t);
  return out;
}

Outcome cmd_manin_multiplicative(const Options& o, Resolver& r) {
  Outcome out;
  out.report = multiplicative_check(r.matrix(require(o.m, "--m")));
  return out;
}

Outcome cmd_manin_cohom_map(const Options& o, Resolver& r) {
  CohomMap cm = cohom_map(r.scalar_matrix(require(o.k, "--k")), r.scalar_matrix(require(o.m, "--m")),
                          r.idempotent(require(o.b, "--b")), r.idempotent(require(o.b2, "--b2")),
                          r.idempotent(require(o.a, "--a")), r.idempotent(require(o.a2, "--a2")));
  Outcome out;
  out.report = cm.valid ? Report::ok("cohom_map") : Report::failure("cohom_map", "generator map does not preserve relations");
  out.result["f1"] = matrix_rows(cm.f1);
  out.result["source"] = algebra_info(cm.src);
  out.result["target"] = algebra_info(cm.dst);
  return out;
}

Outcome cmd_comonoid_validate(const Options& o, Resolver& r) {
  ComonoidPtr c = r.comonoid(require(o.name, "--name"));
  Outcome out;
  out.report = validate_comonoid(*c);
  out.result["type"] = c->kind_name();
  out.result["entry_space_dim"] = c->ctx->dim(1);
  return out;
}

Outcome cmd_comonoid_coend(const Options& o, Resolver& r) {
  Idempotent b = r.idempotent(require(o.b, "--b"));
  ComonoidPtr c = coend_comonoid(b, o.max_degree > 0 ? o.max_degree : 2);
  Outcome out;
  out.report = validate_comonoid(*c);
  out.result = algebra_info(*c->algebra);
  Document d;
  d.field = r.field();
  d.put("coend_algebra", export_algebra(*c->algebra));
  d.put("coend", export_connected_comonoid(*c, "coend_algebra"));
  out.produced = std::move(d);
  return out;
}

Outcome cmd_corep_check(const Options& o, Resolver& r) {
  Outcome out;
  out.report = corep_check(r.corep(require(o.name, "--name")));
  return out;
}

Outcome cmd_corep_morphism(const Options& o, Resolver& r) {
  Outcome out;
  out.report = corep_morphism_check(r.scalar_matrix(require(o.k, "--k")), r.corep(require(o.src, "--src")),
                                    r.corep(require(o.dst, "--dst")));
  return out;
}

Outcome cmd_corep_dsum(const Options& o, Resolver& r) {
  return corep_outcome(corep_direct_sum(r.corep(require(o.a, "--a")), r.corep(require(o.b, "--b"))));
}

Outcome cmd_corep_coproduct(const Options& o, Resolver& r) {
  return corep_outcome(corep_coproduct(r.corep(require(o.a, "--a")), r.corep(require(o.b, "--b"))));
}

Outcome cmd_corep_tensor(const Options& o, Resolver& r) {
  std::string k = o.kind.empty() ? "white" : o.kind;
  if (k != "white" && k != "black") throw UsageError("--kind must be white or black");
  return corep_outcome(corep_tensor(r.corep(require(o.a, "--a")), r.corep(require(o.b, "--b")),
                                    k == "white" ? TensorKind::white : TensorKind::black));
}

Outcome cmd_corep_dual(const Options& o, Resolver& r) {
  if (o.flavor != "dual" && o.flavor != "koszul_dual") throw UsageError("--flavor must be dual or koszul_dual");
  return corep_outcome(corep_dual(r.corep(require(o.name, "--name")), r.matrix(require(o.inverse, "--inverse")),
                                  o.flavor == "dual" ? DualFlavor::dual : DualFlavor::koszul_dual));
}

Outcome cmd_corep_hom(const Options& o, Resolver& r) {
  return corep_outcome(hom_corep(r.corep(require(o.a, "--a")), r.corep(require(o.b, "--b")), r.matrix(require(o.inverse, "--inverse"))));
}

Outcome cmd_corep_dequantise(const Options& o, Resolver& r) {
  ClassicalData cd = dequantise(r.corep(require(o.name, "--name")));
  Outcome out;
  out.result["structure"] = export_structure(cd.algebra);
  json rho = json::object();
  for (std::size_t i = 0; i < cd.rho.size(); ++i) rho[cd.algebra.labels[i]] = matrix_rows(cd.rho[i]);
  out.result["representation"] = rho;
  Outcome o2 = std::move(out);
  o2.produced = single(r.field(), "structure", export_structure(cd.algebra));
  return o2;
}

Outcome cmd_gallery(const Options& o, Resolver& r) {
  std::string name = require(o.name, "<scenario>");
  Outcome out;
  if (name == "list") {
    json list = json::array();
    for (const auto& s : gallery_scenarios()) list.push_back({{"name", s.name}, {"summary", s.summary}, {"parameters", s.parameters}});
    out.result["scenarios"] = list;
    return out;
  }
  std::optional<int> p;
  if (o.param >= 0) p = o.param;
  ScenarioResult res = run_scenario(name, p);
  (void)r;
  out.report = res.report;
  out.result["scenario"] = res.name;
  out.result["parameter"] = res.parameter;
  out.result["description"] = res.description;
  out.result["facts"] = res.facts;
  out.produced = res.bundle;
  return out;
}

Outcome cmd_property(const Options& o, Resolver& r) {
  std::string name = require(o.name, "<property>");
  std::mt19937 rng(o.seed);
  const Field& f = r.field();
  Report rep = Report::ok("property " + name);
  std::uniform_int_distribution<int> dim(1, 3);
  int failures = 0;
  for (int t = 0; t < o.count; ++t) {
    int n = dim(rng);
    std::string where = "instance " + std::to_string(t + 1) + " (n = " + std::to_string(n) + ")";
    Report part = Report::ok(where);
    if (name == "koszul") {
      Idempotent e = random_idempotent(n, rng, f);
      QuadraticAlgebra x = algebra_X(e);
      QuadraticAlgebra d = koszul_dual(x);
      if (!(koszul_dual(d).relations == x.relations)) part = Report::failure(where, "double Koszul dual differs");
      if (!(d.relations == algebra_Xi(e).relations)) part = Report::failure(where, "Koszul dual of X_E differs from Xi_E");
    } else if (name == "hilbert") {
      Idempotent e = random_idempotent(n, rng, f);
      QuadraticAlgebra x = algebra_X(e);
      int k = std::uniform_int_distribution<int>(2, n == 3 ? 3 : 4)(rng);
      if (graded_dim(x, k) != graded_dim_direct(x, k)) part = Report::failure(where, "normal-form and direct dimensions differ");
    } else if (name == "idempotent") {
      int n2 = n == 3 ? 1 : dim(rng) % 2 + 1;
      Idempotent e = random_idempotent(n, rng, f);
      Idempotent g = random_idempotent(n2, rng, f);
      try {
        (void)conj21(e);
        (void)tep(e, g);
        (void)black_tep(e, g);
        (void)dis(e, g);
        (void)cop(e, g);
      } catch (const NotIdempotent& ex) {
        part = Report::failure(where, ex.what());
      }
    } else {
      throw UsageError("unknown property '" + name + "' (koszul, hilbert, idempotent)");
    }
    if (!part.pass) {
      ++failures;
      rep.add(part);
    }
  }
  Outcome out;
  out.report = rep;
  out.result["instances"] = o.count;
  out.result["failures"] = failures;
  out.result["seed"] = o.seed;
  return out;
}

Outcome cmd_doc_check(const Options& o, Resolver& r) {
  require(o.doc, "--doc");
  Outcome out;
  out.report = Report::ok("document");
  std::map<std::string, int> kinds;
  for (const auto& [name, p] : r.document().objects.items()) ++kinds[p["kind"].get<std::string>()];
  out.result["objects"] = kinds;
  out.result["field"] = r.field().str();
  return out;
}

Outcome cmd_doc_normalize(const Options& o, Resolver& r) {
  require(o.doc, "--doc");
  Outcome out;
  out.produced = r.document();
  out.result["objects"] = r.document().objects.size();
  return out;
}

struct Entry {
  CommandInfo info;
  Handler handler;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = {
      {{"check-idempotent", {"make_idempotent", "std_idempotents"}, "validate E^2 = E for a matrix or builtin"}, cmd_check_idempotent},
      {{"algebra info", {"algebra_X", "algebra_Xi"}, "generators and relations"}, cmd_algebra_info},
      {{"algebra hilbert", {"graded_dim"}, "graded dimensions up to degree k"}, cmd_algebra_hilbert},
      {{"algebra koszul", {"koszul_dual"}, "Koszul dual"}, cmd_algebra_koszul},
      {{"algebra product", {"product"}, "white, black, tensor or free products"}, cmd_algebra_product},
      {{"algebra cohom", {"cohom_algebra"}, "universal Manin algebra"}, cmd_algebra_cohom},
      {{"algebra structural", {"structural_equalities"}, "opposite algebra and idempotent composites"}, cmd_algebra_structural},
      {{"algebra hom-check", {"extends_to_hom"}, "does a generator map respect relations"}, cmd_algebra_hom_check},
      {{"linalg rref", {"rref"}, "reduced row echelon form"}, cmd_linalg_rref},
      {{"linalg kernel", {"kernel"}, "null space"}, cmd_linalg_kernel},
      {{"linalg subspace", {"subspace_ops"}, "sum, intersection, containment, equality of rowspaces"}, cmd_linalg_subspace},
      {{"linalg kron", {"kron"}, "Kronecker product"}, cmd_linalg_kron},
      {{"linalg shuffle", {"shuffle_23"}, "middle-factor permutation"}, cmd_linalg_shuffle},
      {{"scalar eval", {"parse_scalar", "arith"}, "parse and combine field elements"}, cmd_scalar_eval},
      {{"context info",
        {"qa_context", "pbw_context", "s_embedding_context", "t_embedding_context", "table_context"},
        "build and validate a coefficient context"},
       cmd_context_info},
      {{"manin check", {"check_manin"}, "A X(1) Y(2) (1 - B) = 0"}, cmd_manin_check},
      {{"manin commute", {"commute_entrywise"}, "entrywise commutation"}, cmd_manin_commute},
      {{"manin dsum", {"direct_sum"}, "block-diagonal matrix"}, cmd_manin_dsum},
      {{"manin dtensor", {"dot_tensor"}, "dot tensor product over the lifted context"}, cmd_manin_dtensor},
      {{"manin multiplicative", {"multiplicative_check"}, "matrix coproduct and counit"}, cmd_manin_multiplicative},
      {{"manin cohom-map", {"cohom_map"}, "map between cohom algebras"}, cmd_manin_cohom_map},
      {{"comonoid validate", {"validate_comonoid"}, "coalgebra axioms and extension"}, cmd_comonoid_validate},
      {{"comonoid coend", {"coend_comonoid"}, "coend comonoid of an idempotent"}, cmd_comonoid_coend},
      {{"corep check", {"corep_check"}, "multiplicative and Manin"}, cmd_corep_check},
      {{"corep morphism", {"corep_morphism_check"}, "intertwiner check"}, cmd_corep_morphism},
      {{"corep dsum", {"corep_direct_sum"}, "direct sum"}, cmd_corep_dsum},
      {{"corep coproduct", {"corep_coproduct"}, "coproduct"}, cmd_corep_coproduct},
      {{"corep tensor", {"corep_tensor"}, "white or black tensor product"}, cmd_corep_tensor},
      {{"corep dual", {"corep_dual"}, "dual or Koszul dual"}, cmd_corep_dual},
      {{"corep hom", {"hom_corep"}, "hom corepresentation"}, cmd_corep_hom},
      {{"corep dequantise", {"dequantise"}, "classical structure constants and representation"}, cmd_corep_dequantise},
      {{"gallery",
        {"scenario_mq", "scenario_matrix_algebra", "scenario_yangian_eval", "scenario_so_quadratic", "scenario_finite_group"},
        "built-in worked examples"},
       cmd_gallery},
      {{"property", {"random_idempotent"}, "randomized property runs (koszul, hilbert, idempotent)"}, cmd_property},
      {{"doc check", {"load"}, "load and validate a document"}, cmd_doc_check},
      {{"doc normalize", {"save"}, "rewrite a document canonically (with --out)"}, cmd_doc_normalize},
  };
  return all;
}

void emit(const std::string& path, const Outcome& oc, const Options& o, std::ostream& out) {
  bool pass = !oc.report || oc.report->all_pass();
  json j;
  j["command"] = path;
  j["pass"] = pass;
  j["report"] = oc.report ? report_json(*oc.report) : json();
  j["result"] = oc.result;
  if (o.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << path << ": " << (pass ? "pass" : "FAIL") << "\n";
    if (oc.report) out << report_text(*oc.report);
    for (const auto& [k, v] : oc.result.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
  if (!o.out.empty()) {
    if (oc.produced) {
      save_document(*oc.produced, o.out);
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!f) throw InvalidArgument("cannot write '" + o.out + "'");
      f << j.dump(2) << "\n";
    }
  }
}

}  // namespace

const std::vector<CommandInfo>& dispatch_table() {
  static const std::vector<CommandInfo> table = [] {
    std::vector<CommandInfo> t;
    for (const auto& e : entries()) t.push_back(e.info);
    return t;
  }();
  return table;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  bool help_format = false;
  CLI::App app{"qrep: quadratic algebras, Manin matrices and their corepresentations", "qrep"};
  app.add_flag("--help-format", help_format, "print the document schema and exit");
  app.add_option("--doc", o.doc, "input document");
  app.add_option("--field", o.field, "field for builtins: rational or ratfunc:<var>");
  app.add_option("--max-degree", o.max_degree, "degree bound for constructed contexts");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", o.seed, "seed for randomized property runs");
  app.add_option("--out", o.out, "write produced objects (or the JSON report) here");

  std::string chosen;
  std::map<std::string, CLI::App*> groups;
  for (const auto& e : entries()) {
    const std::string& path = e.info.path;
    auto sp = path.find(' ');
    CLI::App* parent = &app;
    std::string leaf = path;
    if (sp != std::string::npos) {
      std::string group = path.substr(0, sp);
      leaf = path.substr(sp + 1);
      if (!groups.count(group)) {
        groups[group] = app.add_subcommand(group, group + " commands");
        groups[group]->require_subcommand(1);
        groups[group]->fallthrough();
      }
      parent = groups[group];
    }
    CLI::App* sub = parent->add_subcommand(leaf, e.info.summary);
    sub->fallthrough();
    sub->callback([&chosen, path] { chosen = path; });
    // Options shared across subcommands; each handler reads the ones it needs.
    if (path == "gallery" || path == "property") {
      sub->add_option("name", o.name, path == "gallery" ? "scenario name or 'list'" : "koszul, hilbert or idempotent")->required();
      if (path == "gallery") sub->add_option("--m", o.param, "scenario parameter");
      if (path == "property") sub->add_option("--count", o.count, "number of random instances");
      continue;
    }
    sub->add_option("--name", o.name, "object name");
    if (e.info.path.starts_with("algebra") || path == "linalg subspace" || path == "linalg kron") sub->add_option("--other", o.other);
    if (path.starts_with("algebra")) {
      sub->add_option("--idempotent", o.a, "build X_E or Xi_E from this idempotent");
      sub->add_option("--presentation", o.presentation)->check(CLI::IsMember({"X", "Xi"}));
      sub->add_option("--k", o.degree);
      sub->add_flag("--direct", o.direct, "cross-check by rank on the full tensor power");
      sub->add_option("--kind", o.kind);
      sub->add_option("--op", o.op);
      sub->add_option("--args", o.args);
      sub->add_option("--f1", o.f1);
      if (path == "algebra cohom") {
        sub->add_option("--a", o.a);
        sub->add_option("--b", o.b);
      }
    }
    if (path.starts_with("linalg") || path == "scalar eval") {
      sub->add_option("--op", o.op);
      sub->add_option("--n", o.dim_n);
      sub->add_option("--m", o.dim_m);
      sub->add_option("--expr", o.expr);
      sub->add_option("--rhs", o.rhs);
    }
    if (path == "context info") {
      sub->add_option("--type", o.type);
      sub->add_option("--source", o.source);
    }
    if (path.starts_with("manin") || path.starts_with("corep") || path == "comonoid coend") {
      if (path != "manin cohom-map" && path != "comonoid coend" && !path.starts_with("corep")) {
        sub->add_option("--a", o.a);
        sub->add_option("--b", o.b);
      }
      sub->add_option("--x", o.x);
      sub->add_option("--y", o.y);
      sub->add_option("--m", o.m);
      sub->add_option("--n", o.n);
      sub->add_option("--k", o.k);
      sub->add_option("--src", o.src);
      sub->add_option("--dst", o.dst);
      sub->add_option("--inverse", o.inverse);
      sub->add_option("--flavor", o.flavor);
      sub->add_option("--kind", o.kind);
      if (path == "manin cohom-map" || path == "comonoid coend" || path.starts_with("corep")) {
        sub->add_option("--a", o.a);
        sub->add_option("--b", o.b);
        sub->add_option("--a2", o.a2);
        sub->add_option("--b2", o.b2);
      }
    }
  }
  app.require_subcommand(0, 1);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  if (help_format) {
    out << document_schema_help();
    return 0;
  }
  if (chosen.empty()) {
    err << "usage error: no subcommand given\n" << app.help();
    return 2;
  }
  try {
    Document doc;
    if (!o.doc.empty()) {
      doc = load_document(o.doc);
      if (!o.field.empty() && !(Field::from_string(o.field) == doc.field))
        throw UsageError("--field disagrees with the document field " + doc.field.str());
    } else if (!o.field.empty()) {
      doc.field = Field::from_string(o.field);
    }
    Resolver r(doc);
    const auto& all = entries();
    auto it = std::find_if(all.begin(), all.end(), [&](const Entry& e) { return e.info.path == chosen; });
    Outcome oc = it->handler(o, r);
    emit(chosen, oc, o, out);
    return (!oc.report || oc.report->all_pass()) ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qrep::cli
