#include "qrep/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "qrep/errors.hpp"

namespace qrep {

namespace {

std::string path_of(const std::string& name, const std::string& key) { return "objects." + name + "." + key; }

Scalar parse_scalar_at(const Field& f, const json& v, const std::string& path) {
  if (!v.is_string()) throw FieldMismatch(path + ": scalars must be strings");
  std::string text = v.get<std::string>();
  try {
    Scalar s = f.parse(text);
    return s;
  } catch (const Error& e) {
    throw FieldMismatch(path + ": '" + text + "': " + e.what());
  }
}

const json& member(const json& p, const std::string& key, const std::string& path) {
  auto it = p.find(key);
  if (it == p.end()) throw FormatError(path + ": missing key '" + key + "'");
  return *it;
}

int int_member(const json& p, const std::string& key, const std::string& path) {
  const json& v = member(p, key, path);
  if (!v.is_number_integer()) throw FormatError(path + "." + key + ": expected an integer");
  return v.get<int>();
}

int int_or(const json& p, const std::string& key, int dflt, const std::string& path) {
  return p.contains(key) ? int_member(p, key, path) : dflt;
}

std::string str_member(const json& p, const std::string& key, const std::string& path) {
  const json& v = member(p, key, path);
  if (!v.is_string()) throw FormatError(path + "." + key + ": expected a string");
  return v.get<std::string>();
}

std::vector<std::string> str_list(const json& v, const std::string& path) {
  if (!v.is_array()) throw FormatError(path + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string()) throw FormatError(path + ": expected an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::map<std::string, int> label_index(const std::vector<std::string>& labels) {
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < labels.size(); ++i) idx[labels[i]] = static_cast<int>(i);
  return idx;
}

int lookup(const std::map<std::string, int>& idx, const std::string& label, const std::string& path) {
  auto it = idx.find(label);
  if (it == idx.end()) throw FormatError(path + ": unknown basis label '" + label + "'");
  return it->second;
}

// {label: coefficient}
SVec parse_linear(const json& v, const Field& f, const std::map<std::string, int>& idx, const std::string& path) {
  if (!v.is_object()) throw FormatError(path + ": expected {label: scalar}");
  SVec out;
  for (const auto& [k, c] : v.items()) add_scaled(out, parse_scalar_at(f, c, path + "." + k), SVec::unit(lookup(idx, k, path)));
  return out;
}

// {"a⊗b": coefficient} or {"a*b": coefficient} over a product basis a·n + b.
SVec parse_pairs(const json& v, const Field& f, const std::map<std::string, int>& idx, int n, const std::string& sep,
                 const std::string& path) {
  if (!v.is_object()) throw FormatError(path + ": expected {pair: scalar}");
  SVec out;
  for (const auto& [k, c] : v.items()) {
    auto cut = k.find(sep);
    if (cut == std::string::npos) throw FormatError(path + ": key '" + k + "' must have the form a" + sep + "b");
    int a = lookup(idx, k.substr(0, cut), path);
    int b = lookup(idx, k.substr(cut + sep.size()), path);
    add_scaled(out, parse_scalar_at(f, c, path + "." + k), SVec::unit(a * n + b));
  }
  return out;
}

json linear_json(const Field& f, const SVec& v, const std::vector<std::string>& labels) {
  json o = json::object();
  for (const auto& [i, c] : v.e) o[labels[static_cast<std::size_t>(i)]] = f.format(c);
  return o;
}

json pairs_json(const Field& f, const SVec& v, const std::vector<std::string>& labels, const std::string& sep) {
  json o = json::object();
  int n = static_cast<int>(labels.size());
  for (const auto& [i, c] : v.e)
    o[labels[static_cast<std::size_t>(i / n)] + sep + labels[static_cast<std::size_t>(i % n)]] = f.format(c);
  return o;
}

Matrix parse_rows(const json& v, const Field& f, const std::string& path) {
  if (!v.is_array() || v.empty()) throw FormatError(path + ": expected a nonempty array of rows");
  std::vector<std::vector<Scalar>> rows;
  std::size_t width = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_array()) throw FormatError(path + ": rows must be arrays");
    if (i == 0) width = v[i].size();
    if (v[i].size() != width) throw ShapeError(path + ": ragged rows");
    std::vector<Scalar> row;
    for (std::size_t j = 0; j < v[i].size(); ++j)
      row.push_back(parse_scalar_at(f, v[i][j], path + "[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
    rows.push_back(std::move(row));
  }
  return Matrix::from_values(rows, f);
}

std::pair<std::string, int> split_builtin(const std::string& name) {
  static const std::regex re("([A-Za-z_]+?)([0-9]+)");
  std::smatch m;
  if (std::regex_match(name, m, re)) return {m[1].str(), std::stoi(m[2].str())};
  return {name, -1};
}

Idempotent builtin_idempotent(const std::string& kind, int m, const Field& f, const std::optional<Scalar>& q) {
  if (m < 1 || m > 8) throw InvalidArgument("builtin dimension must lie in [1, 8]");
  if (kind == "antisym") return antisym(m, f);
  if (kind == "so_B") return so_B(m, f);
  if (kind == "zero") return zero_idempotent(m, f);
  if (kind == "one") return one_idempotent(m, f);
  if (kind == "q_antisym") {
    if (!q && !f.is_ratfunc()) throw FieldMismatch("q_antisym needs a parameter q or a rational function field");
    return q_antisym(uniform_q_params(m, q ? *q : Scalar::variable()), f);
  }
  throw ReferenceError("unknown builtin idempotent '" + kind + "'");
}

const std::set<std::string> kBuiltinIdem = {"antisym", "q_antisym", "so_B", "zero", "one"};
const std::set<std::string> kBuiltinAlg = {"polyalg", "extalg", "tensoralg"};

}  // namespace

// ---------------------------------------------------------------- documents

Document parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t end = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("malformed JSON", line, col);
  }
  if (!j.is_object()) throw FormatError("document must be a JSON object");
  if (!j.contains("format") || j["format"] != kDocumentFormat) throw FormatError("not a qrep document (format tag missing)");
  if (!j.contains("version") || !j["version"].is_number_integer() || j["version"].get<int>() != kDocumentVersion)
    throw FormatError("unsupported document version; expected " + std::to_string(kDocumentVersion));
  Document doc;
  doc.field = Field::from_string(str_member(j, "field", "document"));
  if (j.contains("objects")) {
    if (!j["objects"].is_object()) throw FormatError("objects must be a JSON object");
    doc.objects = j["objects"];
  }
  for (const auto& [name, p] : doc.objects.items())
    if (!p.is_object() || !p.contains("kind") || !p["kind"].is_string()) throw FormatError("objects." + name + ": missing kind tag");
  Resolver r(doc);
  r.resolve_all();
  return doc;
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string dump_document(const Document& doc) {
  json j;
  j["format"] = kDocumentFormat;
  j["version"] = kDocumentVersion;
  j["field"] = doc.field.str();
  j["objects"] = doc.objects;
  return j.dump(2) + "\n";
}

void save_document(const Document& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << dump_document(doc);
}

// ---------------------------------------------------------------- resolver

Resolver::Resolver(Document doc) : doc_(std::move(doc)) {}

std::string Resolver::kind_of(const std::string& name) const {
  if (doc_.has(name)) return doc_.objects[name]["kind"].get<std::string>();
  auto [b, m] = split_builtin(name);
  if (m >= 0 && kBuiltinIdem.count(b)) return "idempotent";
  if (m >= 0 && kBuiltinAlg.count(b)) return "algebra";
  if ((b == "mat" && m >= 0) || name == "z2") return "structure";
  if (b == "gl" && m >= 0) return "lie";
  throw ReferenceError("unresolved reference '" + name + "'");
}

const json& Resolver::payload(const std::string& name, const std::string& kind) const {
  if (!doc_.has(name)) throw ReferenceError("unresolved reference '" + name + "' (expected " + kind + ")");
  const json& p = doc_.objects[name];
  if (p["kind"] != kind) throw ReferenceError("'" + name + "' is a " + p["kind"].get<std::string>() + ", expected " + kind);
  return p;
}

void Resolver::enter(const std::string& name) {
  if (!active_.insert(name).second) throw ReferenceError("reference cycle through '" + name + "'");
}

namespace {
struct Guard {
  std::set<std::string>& s;
  std::string n;
  ~Guard() { s.erase(n); }
};
}  // namespace

Idempotent Resolver::idempotent(const std::string& name) {
  if (auto it = idem_.find(name); it != idem_.end()) return it->second;
  if (!doc_.has(name)) {
    auto [b, m] = split_builtin(name);
    if (m < 0 || !kBuiltinIdem.count(b)) (void)payload(name, "idempotent");
    return idem_.emplace(name, builtin_idempotent(b, m, field(), std::nullopt)).first->second;
  }
  const json& p = payload(name, "idempotent");
  enter(name);
  Guard g{active_, name};
  std::string path = "objects." + name;
  const Field& f = field();
  Idempotent out = [&]() -> Idempotent {
    if (p.contains("matrix")) return Idempotent::make(parse_rows(p["matrix"], f, path + ".matrix"));
    if (p.contains("builtin")) {
      std::optional<Scalar> q;
      if (p.contains("q")) q = parse_scalar_at(f, p["q"], path + ".q");
      return builtin_idempotent(str_member(p, "builtin", path), int_member(p, "m", path), f, q);
    }
    std::string op = str_member(p, "op", path);
    std::vector<std::string> args = str_list(member(p, "args", path), path + ".args");
    auto need = [&](std::size_t k) {
      if (args.size() != k) throw FormatError(path + ".args: '" + op + "' takes " + std::to_string(k) + " arguments");
    };
    if (op == "conj21") {
      need(1);
      return conj21(idempotent(args[0]));
    }
    need(2);
    Idempotent a = idempotent(args[0]);
    Idempotent b = idempotent(args[1]);
    if (op == "tep") return tep(a, b);
    if (op == "black_tep") return black_tep(a, b);
    if (op == "dis") return dis(a, b);
    if (op == "cop") return cop(a, b);
    throw FormatError(path + ".op: unknown idempotent operation '" + op + "'");
  }();
  return idem_.emplace(name, out).first->second;
}

QuadraticAlgebra Resolver::algebra(const std::string& name) {
  if (auto it = alg_.find(name); it != alg_.end()) return it->second;
  const Field& f = field();
  if (!doc_.has(name)) {
    auto [b, m] = split_builtin(name);
    if (m < 1 || m > 8 || !kBuiltinAlg.count(b)) (void)payload(name, "algebra");
    QuadraticAlgebra a = b == "polyalg" ? algebra_X(antisym(m, f))
                        : b == "extalg" ? algebra_Xi(antisym(m, f))
                                        : tensor_algebra(m, f);
    return alg_.emplace(name, a).first->second;
  }
  const json& p = payload(name, "algebra");
  enter(name);
  Guard g{active_, name};
  std::string path = "objects." + name;
  QuadraticAlgebra out = [&]() -> QuadraticAlgebra {
    if (p.contains("generators")) {
      std::vector<std::string> labels = str_list(p["generators"], path + ".generators");
      auto idx = label_index(labels);
      if (idx.size() != labels.size()) throw FormatError(path + ".generators: duplicate label");
      std::vector<SVec> rel;
      const json& rs = member(p, "relations", path);
      if (!rs.is_array()) throw FormatError(path + ".relations: expected an array");
      int n = static_cast<int>(labels.size());
      for (std::size_t k = 0; k < rs.size(); ++k)
        rel.push_back(parse_pairs(rs[k], f, idx, n, "*", path + ".relations[" + std::to_string(k) + "]"));
      return make_algebra(n, rel, f, labels);
    }
    if (p.contains("builtin")) {
      std::string b = str_member(p, "builtin", path);
      int n = int_member(p, "n", path);
      if (!kBuiltinAlg.count(b)) throw FormatError(path + ".builtin: unknown algebra '" + b + "'");
      return algebra(b + std::to_string(n));
    }
    std::string op = str_member(p, "op", path);
    std::vector<std::string> args = str_list(member(p, "args", path), path + ".args");
    std::size_t want = (op == "product" || op == "cohom") ? 2 : 1;
    if (args.size() != want) throw FormatError(path + ".args: '" + op + "' takes " + std::to_string(want) + " arguments");
    if (op == "X") return algebra_X(idempotent(args[0]));
    if (op == "Xi") return algebra_Xi(idempotent(args[0]));
    if (op == "koszul_dual") return koszul_dual(algebra(args[0]));
    if (op == "opposite") return opposite(algebra(args[0]));
    if (op == "product") return product(algebra(args[0]), algebra(args[1]), product_kind_from_string(str_member(p, "product", path)));
    if (op == "cohom") return cohom_algebra(idempotent(args[0]), idempotent(args[1]));
    throw FormatError(path + ".op: unknown algebra operation '" + op + "'");
  }();
  return alg_.emplace(name, out).first->second;
}

Matrix Resolver::scalar_matrix(const std::string& name) {
  if (auto it = smat_.find(name); it != smat_.end()) return it->second;
  const json& p = payload(name, "scalar_matrix");
  return smat_.emplace(name, parse_rows(member(p, "rows", "objects." + name), field(), path_of(name, "rows"))).first->second;
}

LieAlgebra Resolver::lie(const std::string& name) {
  if (auto it = lie_.find(name); it != lie_.end()) return it->second;
  if (!doc_.has(name)) {
    auto [b, m] = split_builtin(name);
    if (b != "gl" || m < 1 || m > 4) (void)payload(name, "lie");
    return lie_.emplace(name, gl_lie(m, field())).first->second;
  }
  const json& p = payload(name, "lie");
  std::string path = "objects." + name;
  LieAlgebra g;
  if (p.contains("builtin")) {
    std::string b = str_member(p, "builtin", path);
    int m = int_member(p, "m", path);
    if (b == "gl") {
      g = gl_lie(m, field());
    } else if (b == "abelian") {
      g = abelian_lie(m, field());
    } else {
      throw FormatError(path + ".builtin: unknown Lie algebra '" + b + "'");
    }
  } else {
    g.field = field();
    g.labels = str_list(member(p, "generators", path), path + ".generators");
    g.n = static_cast<int>(g.labels.size());
    g.bracket.assign(static_cast<std::size_t>(g.n), std::vector<SVec>(static_cast<std::size_t>(g.n)));
    auto idx = label_index(g.labels);
    const json& br = member(p, "brackets", path);
    if (!br.is_object()) throw FormatError(path + ".brackets: expected {\"a,b\": {label: scalar}}");
    for (const auto& [k, v] : br.items()) {
      auto cut = k.find(',');
      if (cut == std::string::npos) throw FormatError(path + ".brackets: key '" + k + "' must have the form a,b");
      int a = lookup(idx, k.substr(0, cut), path + ".brackets");
      int b = lookup(idx, k.substr(cut + 1), path + ".brackets");
      g.bracket[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = parse_linear(v, field(), idx, path + ".brackets." + k);
    }
    g.validate();
  }
  return lie_.emplace(name, g).first->second;
}

AlgebraStructureConstants Resolver::structure(const std::string& name) {
  if (auto it = sc_.find(name); it != sc_.end()) return it->second;
  if (!doc_.has(name)) {
    auto [b, m] = split_builtin(name);
    if (name == "z2") return sc_.emplace(name, z2_function_algebra(field())).first->second;
    if (b != "mat" || m < 1 || m > 4) (void)payload(name, "structure");
    return sc_.emplace(name, matrix_algebra(m, field())).first->second;
  }
  const json& p = payload(name, "structure");
  std::string path = "objects." + name;
  AlgebraStructureConstants a;
  if (p.contains("builtin")) {
    std::string b = str_member(p, "builtin", path);
    if (b == "matrix_algebra") {
      a = matrix_algebra(int_member(p, "m", path), field());
    } else if (b == "z2_functions") {
      a = z2_function_algebra(field());
    } else {
      throw FormatError(path + ".builtin: unknown structure '" + b + "'");
    }
  } else {
    a.field = field();
    a.labels = str_list(member(p, "basis", path), path + ".basis");
    a.dual_labels = str_list(member(p, "dual_basis", path), path + ".dual_basis");
    a.n = static_cast<int>(a.labels.size());
    auto idx = label_index(a.labels);
    a.c.assign(static_cast<std::size_t>(a.n), std::vector<SVec>(static_cast<std::size_t>(a.n)));
    const json& pr = member(p, "products", path);
    if (!pr.is_object()) throw FormatError(path + ".products: expected {\"a*b\": {label: scalar}}");
    for (const auto& [k, v] : pr.items()) {
      auto cut = k.find('*');
      if (cut == std::string::npos) throw FormatError(path + ".products: key '" + k + "' must have the form a*b");
      int i = lookup(idx, k.substr(0, cut), path + ".products");
      int j = lookup(idx, k.substr(cut + 1), path + ".products");
      a.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = parse_linear(v, field(), idx, path + ".products." + k);
    }
    a.d = parse_linear(member(p, "unit", path), field(), idx, path + ".unit").to_dense(a.n);
    a.validate();
  }
  return sc_.emplace(name, a).first->second;
}

ContextPtr Resolver::context(const std::string& name) {
  if (auto it = ctx_.find(name); it != ctx_.end()) return it->second;
  if (doc_.has(name) && doc_.objects[name]["kind"] == "comonoid") return comonoid(name)->ctx;
  const json& p = payload(name, "context");
  enter(name);
  Guard g{active_, name};
  std::string path = "objects." + name;
  const Field& f = field();
  std::string type = str_member(p, "type", path);
  ContextPtr out;
  if (type == "qa") {
    out = qa_context(algebra(str_member(p, "algebra", path)), int_or(p, "max_degree", 2, path));
  } else if (type == "qa_bialgebra") {
    QuadraticAlgebra a = algebra(str_member(p, "algebra", path));
    auto idx = label_index(a.labels);
    std::vector<SVec> d(static_cast<std::size_t>(a.n));
    std::vector<Scalar> e(static_cast<std::size_t>(a.n));
    const json& dj = member(p, "coproduct", path);
    const json& ej = member(p, "counit", path);
    for (int i = 0; i < a.n; ++i) {
      const std::string& l = a.labels[static_cast<std::size_t>(i)];
      if (dj.contains(l)) d[static_cast<std::size_t>(i)] = parse_pairs(dj[l], f, idx, a.n, "⊗", path + ".coproduct." + l);
      if (ej.contains(l)) e[static_cast<std::size_t>(i)] = parse_scalar_at(f, ej[l], path + ".counit." + l);
    }
    out = qa_bialgebra_context(a, d, e, int_or(p, "max_degree", 2, path), MulContext::Kind::qa);
  } else if (type == "pbw") {
    out = pbw_context(lie(str_member(p, "lie", path)), int_or(p, "max_degree", 2, path));
  } else if (type == "s_embedding" || type == "t_embedding") {
    AlgebraStructureConstants a = structure(str_member(p, "structure", path));
    int d = int_or(p, "max_degree", 2, path);
    out = type == "s_embedding" ? s_embedding_context(a, d) : t_embedding_context(a, d);
  } else if (type == "constant_slice") {
    AlgebraStructureConstants a = structure(str_member(p, "structure", path));
    auto idx = label_index(a.labels);
    std::vector<SVec> d(static_cast<std::size_t>(a.n));
    std::vector<Scalar> e(static_cast<std::size_t>(a.n));
    const json& dj = member(p, "coproduct", path);
    const json& ej = member(p, "counit", path);
    for (int i = 0; i < a.n; ++i) {
      const std::string& l = a.labels[static_cast<std::size_t>(i)];
      if (dj.contains(l)) d[static_cast<std::size_t>(i)] = parse_pairs(dj[l], f, idx, a.n, "⊗", path + ".coproduct." + l);
      if (ej.contains(l)) e[static_cast<std::size_t>(i)] = parse_scalar_at(f, ej[l], path + ".counit." + l);
    }
    out = constant_slice_context(a, d, e, int_or(p, "max_degree", 2, path));
  } else if (type == "field") {
    out = field_context(f, int_or(p, "max_degree", 2, path));
  } else if (type == "lift" || type == "opposite_mul" || type == "coopposite") {
    ContextPtr base = context(str_member(p, "context", path));
    out = type == "lift" ? lift(base) : type == "opposite_mul" ? opposite_mul(base) : coopposite(base);
  } else if (type == "table") {
    MulContext raw;
    raw.kind = context_kind_from_string(p.value("context_kind", std::string("table")));
    raw.field = f;
    raw.max_degree = int_member(p, "max_degree", path);
    const json& lj = member(p, "labels", path);
    if (!lj.is_array() || static_cast<int>(lj.size()) != raw.max_degree + 1)
      throw FormatError(path + ".labels: need one label list per grade 0.." + std::to_string(raw.max_degree));
    std::vector<std::map<std::string, int>> idx;
    for (std::size_t gr = 0; gr < lj.size(); ++gr) {
      raw.labels.push_back(str_list(lj[gr], path + ".labels"));
      idx.push_back(label_index(raw.labels.back()));
    }
    const json& pj = member(p, "products", path);
    for (const auto& [k, tab] : pj.items()) {
      auto cut = k.find(',');
      if (cut == std::string::npos) throw FormatError(path + ".products: key '" + k + "' must have the form j,k");
      int j = std::stoi(k.substr(0, cut));
      int kk = std::stoi(k.substr(cut + 1));
      if (j < 1 || kk < 1 || j + kk > raw.max_degree) throw FormatError(path + ".products: grades " + k + " out of range");
      std::string tp = path + ".products." + k;
      if (!tab.is_array() || tab.size() != raw.labels[static_cast<std::size_t>(j)].size())
        throw ShapeError(tp + ": need one row per grade-" + std::to_string(j) + " basis vector");
      std::vector<std::vector<SVec>> t;
      for (std::size_t x = 0; x < tab.size(); ++x) {
        if (!tab[x].is_array() || tab[x].size() != raw.labels[static_cast<std::size_t>(kk)].size())
          throw ShapeError(tp + ": need one entry per grade-" + std::to_string(kk) + " basis vector");
        std::vector<SVec> row;
        for (std::size_t y = 0; y < tab[x].size(); ++y)
          row.push_back(parse_linear(tab[x][y], f, idx[static_cast<std::size_t>(j + kk)],
                                     tp + "[" + std::to_string(x) + "][" + std::to_string(y) + "]"));
        t.push_back(std::move(row));
      }
      raw.tables[{j, kk}] = std::move(t);
    }
    if (p.contains("unit") && !p["unit"].is_null()) raw.unit = parse_linear(p["unit"], f, idx[1], path + ".unit");
    if (p.contains("coproduct")) {
      for (const auto& [gk, list] : p["coproduct"].items()) {
        int gr = std::stoi(gk);
        if (gr < 1 || gr > raw.max_degree) throw FormatError(path + ".coproduct: grade " + gk + " out of range");
        const auto& lab = raw.labels[static_cast<std::size_t>(gr)];
        std::vector<SVec> d;
        for (std::size_t x = 0; x < list.size(); ++x)
          d.push_back(parse_pairs(list[x], f, idx[static_cast<std::size_t>(gr)], static_cast<int>(lab.size()), "⊗",
                                  path + ".coproduct." + gk + "[" + std::to_string(x) + "]"));
        raw.delta[gr] = std::move(d);
      }
    }
    if (p.contains("counit")) {
      for (const auto& [gk, list] : p["counit"].items()) {
        std::vector<Scalar> e;
        for (std::size_t x = 0; x < list.size(); ++x)
          e.push_back(parse_scalar_at(f, list[x], path + ".counit." + gk + "[" + std::to_string(x) + "]"));
        raw.counit[std::stoi(gk)] = std::move(e);
      }
    }
    out = table_context(std::move(raw));
  } else {
    throw FormatError(path + ".type: unknown context type '" + type + "'");
  }
  return ctx_.emplace(name, out).first->second;
}

FirstOrderMatrix Resolver::matrix(const std::string& name) {
  if (auto it = fom_.find(name); it != fom_.end()) return it->second;
  const json& p = payload(name, "matrix");
  enter(name);
  Guard g{active_, name};
  std::string path = "objects." + name;
  FirstOrderMatrix out = [&]() -> FirstOrderMatrix {
    if (p.contains("op")) {
      std::string op = str_member(p, "op", path);
      std::vector<std::string> args = str_list(member(p, "args", path), path + ".args");
      if (op == "transpose" && args.size() == 1) return matrix(args[0]).transpose();
      if (op == "direct_sum" && args.size() == 2) return direct_sum(matrix(args[0]), matrix(args[1]));
      if (op == "dot_tensor" && args.size() == 2) return dot_tensor(matrix(args[0]), matrix(args[1]));
      throw FormatError(path + ".op: unknown matrix operation '" + op + "' or wrong argument count");
    }
    ContextPtr ctx = context(str_member(p, "context", path));
    if (p.contains("universal")) {
      const json& u = p["universal"];
      if (!u.is_array() || u.size() != 2) throw FormatError(path + ".universal: expected [rows, cols]");
      return FirstOrderMatrix::universal(u[0].get<int>(), u[1].get<int>(), ctx);
    }
    if (p.contains("identity")) return FirstOrderMatrix::identity(int_member(p, "identity", path), ctx);
    if (p.contains("scalar")) return FirstOrderMatrix::from_scalar(scalar_matrix(str_member(p, "scalar", path)), ctx);
    if (p.contains("representation")) {
      std::vector<Matrix> rho;
      for (const auto& r : str_list(p["representation"], path + ".representation")) rho.push_back(scalar_matrix(r));
      return s_embed_representation(rho, ctx);
    }
    const json& rows = member(p, "entries", path);
    if (!rows.is_array() || rows.empty() || !rows[0].is_array()) throw FormatError(path + ".entries: expected rows of entries");
    int r = static_cast<int>(rows.size());
    int c = static_cast<int>(rows[0].size());
    auto idx = label_index(ctx->labels.at(1));
    FirstOrderMatrix m(r, c, ctx);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c) throw ShapeError(path + ".entries: ragged rows");
      for (int j = 0; j < c; ++j)
        m.set(i, j, parse_linear(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], field(), idx,
                                 path + ".entries[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
    }
    return m;
  }();
  return fom_.emplace(name, out).first->second;
}

ComonoidPtr Resolver::comonoid(const std::string& name) {
  if (auto it = com_.find(name); it != com_.end()) return it->second;
  const json& p = payload(name, "comonoid");
  enter(name);
  Guard g{active_, name};
  std::string path = "objects." + name;
  std::string type = str_member(p, "type", path);
  int d = int_or(p, "max_degree", 2, path);
  ComonoidPtr out;
  if (type == "coend") {
    out = coend_comonoid(idempotent(str_member(p, "idempotent", path)), d);
  } else if (type == "slice") {
    out = slice_comonoid(context(str_member(p, "context", path)));
  } else if (type == "s_embedding") {
    out = s_embedding_comonoid(structure(str_member(p, "structure", path)), d);
  } else if (type == "connected") {
    QuadraticAlgebra a = algebra(str_member(p, "algebra", path));
    auto idx = label_index(a.labels);
    std::vector<SVec> dl(static_cast<std::size_t>(a.n));
    std::vector<Scalar> el(static_cast<std::size_t>(a.n));
    const json& dj = member(p, "coproduct", path);
    const json& ej = member(p, "counit", path);
    for (int i = 0; i < a.n; ++i) {
      const std::string& l = a.labels[static_cast<std::size_t>(i)];
      if (dj.contains(l)) dl[static_cast<std::size_t>(i)] = parse_pairs(dj[l], field(), idx, a.n, "⊗", path + ".coproduct." + l);
      if (ej.contains(l)) el[static_cast<std::size_t>(i)] = parse_scalar_at(field(), ej[l], path + ".counit." + l);
    }
    out = connected_comonoid(a, dl, el, d);
  } else {
    throw FormatError(path + ".type: unknown comonoid type '" + type + "'");
  }
  return com_.emplace(name, out).first->second;
}

Corepresentation Resolver::corep(const std::string& name) {
  const json& p = payload(name, "corep");
  enter(name);
  Guard g{active_, name};
  std::string path = "objects." + name;
  ComonoidPtr c = comonoid(str_member(p, "comonoid", path));
  Idempotent b = idempotent(str_member(p, "idempotent", path));
  if (p.contains("universal") && p["universal"] == true) return identity_corep(c, b);
  FirstOrderMatrix m = matrix(str_member(p, "matrix", path));
  if (m.context() != c->ctx)
    throw ReferenceError(path + ".matrix: entries must live in the context of comonoid '" + p["comonoid"].get<std::string>() +
                         "' (name the comonoid as the matrix context)");
  if (m.rows() != b.n() || m.cols() != b.n()) throw ShapeError(path + ": matrix size does not match the idempotent");
  return Corepresentation{c, b, m};
}

void Resolver::resolve_all() {
  for (const auto& [name, p] : doc_.objects.items()) {
    std::string kind = p["kind"].get<std::string>();
    try {
      if (kind == "idempotent") {
        idempotent(name);
      } else if (kind == "algebra") {
        algebra(name);
      } else if (kind == "scalar_matrix") {
        scalar_matrix(name);
      } else if (kind == "lie") {
        lie(name);
      } else if (kind == "structure") {
        structure(name);
      } else if (kind == "context") {
        context(name);
      } else if (kind == "matrix") {
        matrix(name);
      } else if (kind == "comonoid") {
        comonoid(name);
      } else if (kind == "corep") {
        corep(name);
      } else {
        throw FormatError("unknown kind '" + kind + "'");
      }
    } catch (const ReferenceError& e) {
      throw ReferenceError("objects." + name + ": " + e.what());
    } catch (const FieldMismatch& e) {
      std::string w = e.what();
      throw FieldMismatch(w.starts_with("objects.") ? w : "objects." + name + ": " + w);
    } catch (const FormatError& e) {
      std::string w = e.what();
      throw FormatError(w.starts_with("objects.") ? w : "objects." + name + ": " + w);
    } catch (const json::exception& e) {
      throw FormatError("objects." + name + ": " + e.what());
    }
  }
}

// ---------------------------------------------------------------- export

json export_idempotent(const Idempotent& e) {
  json j;
  j["kind"] = "idempotent";
  j["matrix"] = export_scalar_matrix(e.matrix())["rows"];
  return j;
}

json export_algebra(const QuadraticAlgebra& a) {
  json j;
  j["kind"] = "algebra";
  j["generators"] = a.labels;
  j["relations"] = json::array();
  for (const auto& r : a.relations.basis()) j["relations"].push_back(pairs_json(a.field(), r, a.labels, "*"));
  return j;
}

json export_scalar_matrix(const Matrix& m) {
  json j;
  j["kind"] = "scalar_matrix";
  j["rows"] = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(m.field().format(m(i, k)));
    j["rows"].push_back(row);
  }
  return j;
}

json export_matrix(const FirstOrderMatrix& m, const std::string& context_name) {
  json j;
  j["kind"] = "matrix";
  j["context"] = context_name;
  j["entries"] = json::array();
  const auto& labels = m.context()->labels.at(1);
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(linear_json(m.context()->field, m.at(i, k), labels));
    j["entries"].push_back(row);
  }
  return j;
}

json export_context(const MulContext& ctx) {
  json j;
  j["kind"] = "context";
  j["type"] = "table";
  j["context_kind"] = ctx.kind_name();
  j["max_degree"] = ctx.max_degree;
  j["labels"] = ctx.labels;
  j["products"] = json::object();
  for (const auto& [jk, tab] : ctx.tables) {
    json t = json::array();
    const auto& out_labels = ctx.labels.at(static_cast<std::size_t>(jk.first + jk.second));
    for (const auto& row : tab) {
      json r = json::array();
      for (const auto& v : row) r.push_back(linear_json(ctx.field, v, out_labels));
      t.push_back(r);
    }
    j["products"][std::to_string(jk.first) + "," + std::to_string(jk.second)] = t;
  }
  j["unit"] = ctx.unit ? linear_json(ctx.field, *ctx.unit, ctx.labels.at(1)) : json();
  if (!ctx.delta.empty()) {
    j["coproduct"] = json::object();
    j["counit"] = json::object();
    for (const auto& [g, list] : ctx.delta) {
      json l = json::array();
      for (const auto& v : list) l.push_back(pairs_json(ctx.field, v, ctx.labels.at(static_cast<std::size_t>(g)), "⊗"));
      j["coproduct"][std::to_string(g)] = l;
    }
    for (const auto& [g, list] : ctx.counit) {
      json l = json::array();
      for (const auto& s : list) l.push_back(ctx.field.format(s));
      j["counit"][std::to_string(g)] = l;
    }
  }
  return j;
}

json export_structure(const AlgebraStructureConstants& a) {
  json j;
  j["kind"] = "structure";
  j["basis"] = a.labels;
  j["dual_basis"] = a.dual_labels;
  j["products"] = json::object();
  for (int i = 0; i < a.n; ++i)
    for (int k = 0; k < a.n; ++k) {
      const SVec& v = a.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      if (!v.is_zero())
        j["products"][a.labels[static_cast<std::size_t>(i)] + "*" + a.labels[static_cast<std::size_t>(k)]] = linear_json(a.field, v, a.labels);
    }
  j["unit"] = linear_json(a.field, SVec::from_dense(a.d), a.labels);
  return j;
}

json export_connected_comonoid(const Comonoid& c, const std::string& algebra_name) {
  if (c.kind != Comonoid::Kind::connected_qa) throw InvalidArgument("only connected comonoids export as explicit coproducts");
  const QuadraticAlgebra& a = *c.algebra;
  json j;
  j["kind"] = "comonoid";
  j["type"] = "connected";
  j["algebra"] = algebra_name;
  j["max_degree"] = c.ctx->max_degree;
  j["coproduct"] = json::object();
  j["counit"] = json::object();
  for (int i = 0; i < a.n; ++i) {
    const std::string& l = a.labels[static_cast<std::size_t>(i)];
    j["coproduct"][l] = pairs_json(a.field(), c.delta1[static_cast<std::size_t>(i)], a.labels, "⊗");
    j["counit"][l] = a.field().format(c.eps1[static_cast<std::size_t>(i)]);
  }
  return j;
}

// ---------------------------------------------------------------- reports

json report_json(const Report& r) {
  json j;
  j["check"] = r.check;
  j["pass"] = r.pass;
  j["sufficient_only"] = r.sufficient_only;
  j["witness_kind"] = r.witness_kind;
  j["witness"] = r.witness;
  j["expansion"] = r.expansion;
  j["message"] = r.message;
  j["parts"] = json::array();
  for (const auto& p : r.parts) j["parts"].push_back(report_json(p));
  return j;
}

namespace {
void report_text_into(const Report& r, int depth, std::string& out) {
  out += std::string(static_cast<std::size_t>(2 * depth), ' ') + (r.pass ? "PASS " : "FAIL ") + r.check;
  if (r.sufficient_only) out += " (sufficient condition only)";
  if (!r.message.empty()) out += ": " + r.message;
  out += "\n";
  if (!r.witness.empty()) {
    out += std::string(static_cast<std::size_t>(2 * depth + 2), ' ') + "witness " + r.witness_kind + " =";
    for (int w : r.witness) out += " " + std::to_string(w);
    out += "\n";
  }
  if (!r.expansion.empty()) out += std::string(static_cast<std::size_t>(2 * depth + 2), ' ') + "expansion " + r.expansion + "\n";
  for (const auto& p : r.parts) report_text_into(p, depth + 1, out);
}
}  // namespace

std::string report_text(const Report& r) {
  std::string out;
  report_text_into(r, 0, out);
  return out;
}

std::string document_schema_help() {
  return R"(qrep document format, version 1

A document is a JSON object:
  {"format": "qrep-document", "version": 1, "field": "rational" | "ratfunc:<var>",
   "objects": {"<name>": {"kind": "<kind>", ...}, ...}}

Scalars are always strings in the field grammar: integers, the field variable,
+ - * / ^ (nonnegative integer exponents) and parentheses, e.g. "1/2", "q^2-1/q".
Linear combinations are objects {"<basis label>": "<scalar>"}. Pairs of basis
vectors are written "a*b" (a product) or "a⊗b" (a tensor). Saved documents have
sorted keys and two-space indentation; loading and saving a saved document
reproduces it byte for byte.

Kinds and payloads ("<ref>" names another object or a builtin):
  idempotent     {"matrix": [[s, ...], ...]}                       n²×n² matrix, E² = E
                 {"builtin": "antisym|q_antisym|so_B|zero|one", "m": int, "q"?: s}
                 {"op": "conj21", "args": [<ref>]}
                 {"op": "tep|black_tep|dis|cop", "args": [<ref>, <ref>]}
  algebra        {"generators": [label, ...], "relations": [{"a*b": s, ...}, ...]}
                 {"builtin": "polyalg|extalg|tensoralg", "n": int}
                 {"op": "X|Xi", "args": [<idempotent>]}
                 {"op": "koszul_dual|opposite", "args": [<algebra>]}
                 {"op": "product", "product": "white|black|even_tensor|odd_tensor|amalg", "args": [<a>, <b>]}
                 {"op": "cohom", "args": [<idempotent B>, <idempotent A>]}
  scalar_matrix  {"rows": [[s, ...], ...]}
  lie            {"builtin": "gl|abelian", "m": int}
                 {"generators": [...], "brackets": {"a,b": {label: s}}}
  structure      {"builtin": "matrix_algebra", "m": int} | {"builtin": "z2_functions"}
                 {"basis": [...], "dual_basis": [...], "products": {"a*b": {label: s}}, "unit": {label: s}}
  context        {"type": "qa", "algebra": <ref>, "max_degree"?: int}
                 {"type": "qa_bialgebra", "algebra": <ref>, "coproduct": {gen: {"a⊗b": s}}, "counit": {gen: s}}
                 {"type": "pbw", "lie": <ref>, "max_degree"?: int}
                 {"type": "s_embedding|t_embedding", "structure": <ref>, "max_degree"?: int}
                 {"type": "constant_slice", "structure": <ref>, "coproduct": {...}, "counit": {...}}
                 {"type": "field"} | {"type": "lift|opposite_mul|coopposite", "context": <ref>}
                 {"type": "table", "max_degree": int, "labels": [[grade 0], [grade 1], ...],
                  "products": {"j,k": [[{label: s}, ...], ...]}, "unit"?: {label: s},
                  "coproduct"?: {"g": [{"a⊗b": s}, ...]}, "counit"?: {"g": [s, ...]}}
  matrix         {"context": <context or comonoid>, "entries": [[{label: s}, ...], ...]}
                 {"context": <ref>, "universal": [rows, cols]} | {"context": <ref>, "identity": n}
                 {"context": <ref>, "scalar": <scalar_matrix>}
                 {"context": <ref>, "representation": [<scalar_matrix>, ...]}
                 {"op": "transpose|direct_sum|dot_tensor", "args": [...]}
  comonoid       {"type": "coend", "idempotent": <ref>, "max_degree"?: int}
                 {"type": "slice", "context": <ref>}
                 {"type": "s_embedding", "structure": <ref>, "max_degree"?: int}
                 {"type": "connected", "algebra": <ref>, "coproduct": {...}, "counit": {...}}
  corep          {"comonoid": <ref>, "idempotent": <ref>, "matrix": <ref>}
                 {"comonoid": <ref>, "idempotent": <ref>, "universal": true}

Builtin names usable without a document object: antisymN, q_antisymN, so_BN,
zeroN, oneN, polyalgN, extalgN, tensoralgN, matN, z2, glN.
)";
}

}  // namespace qrep
