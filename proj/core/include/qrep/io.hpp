#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qrep/corep.hpp"

namespace qrep {

using json = nlohmann::json;

inline constexpr const char* kDocumentFormat = "qrep-document";
inline constexpr int kDocumentVersion = 1;

// A named collection of objects over one field. Each object is a JSON payload
// carrying a "kind" tag; scalars are stored as strings in the field grammar.
struct Document {
  Field field;
  json objects = json::object();

  void put(const std::string& name, json payload) { objects[name] = std::move(payload); }
  bool has(const std::string& name) const { return objects.contains(name); }
};

// Parses and validates: version, field, every reference and every scalar.
// Errors: ParseError (line/column), FormatError, ReferenceError, FieldMismatch.
Document parse_document(std::string_view text);
Document load_document(const std::string& path);
// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump_document(const Document& doc);
void save_document(const Document& doc, const std::string& path);

// Text of the document schema, printed by the CLI's --help-format.
std::string document_schema_help();

// Builds library objects from a document on demand. Names absent from the
// document fall back to builtins: antisymN, q_antisymN, so_BN, zeroN, oneN
// (idempotents); polyalgN, extalgN, tensoralgN (algebras); matN, z2
// (structure constants); glN (Lie algebras). Objects are cached, so two
// references to one context yield the same pointer.
class Resolver {
 public:
  explicit Resolver(Document doc);

  const Document& document() const { return doc_; }
  const Field& field() const { return doc_.field; }
  // Kind tag of a document object or builtin; throws ReferenceError.
  std::string kind_of(const std::string& name) const;

  Idempotent idempotent(const std::string& name);
  QuadraticAlgebra algebra(const std::string& name);
  Matrix scalar_matrix(const std::string& name);
  LieAlgebra lie(const std::string& name);
  AlgebraStructureConstants structure(const std::string& name);
  // Also accepts a comonoid name, yielding its context.
  ContextPtr context(const std::string& name);
  FirstOrderMatrix matrix(const std::string& name);
  ComonoidPtr comonoid(const std::string& name);
  Corepresentation corep(const std::string& name);

  // Resolves every object; errors are prefixed with the object path.
  void resolve_all();

 private:
  const json& payload(const std::string& name, const std::string& kind) const;
  void enter(const std::string& name);
  void leave(const std::string& name) { active_.erase(name); }

  Document doc_;
  std::set<std::string> active_;
  std::map<std::string, Idempotent> idem_;
  std::map<std::string, QuadraticAlgebra> alg_;
  std::map<std::string, Matrix> smat_;
  std::map<std::string, LieAlgebra> lie_;
  std::map<std::string, AlgebraStructureConstants> sc_;
  std::map<std::string, ContextPtr> ctx_;
  std::map<std::string, FirstOrderMatrix> fom_;
  std::map<std::string, ComonoidPtr> com_;
};

// Payload builders, the inverse of the resolver for explicit forms.
json export_idempotent(const Idempotent& e);
json export_algebra(const QuadraticAlgebra& a);
json export_scalar_matrix(const Matrix& m);
// Entries as label-keyed linear combinations over `context_name`.
json export_matrix(const FirstOrderMatrix& m, const std::string& context_name);
// Full multiplication and coalgebra tables.
json export_context(const MulContext& ctx);
json export_structure(const AlgebraStructureConstants& a);
// A connected comonoid over the algebra object `algebra_name`.
json export_connected_comonoid(const Comonoid& c, const std::string& algebra_name);

json report_json(const Report& r);
// Indented PASS/FAIL tree.
std::string report_text(const Report& r);

}  // namespace qrep
