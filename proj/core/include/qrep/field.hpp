#pragma once

#include <string>
#include <string_view>

#include "qrep/scalar.hpp"

namespace qrep {

// Base field: Q, or Q(var) for a single named indeterminate.
struct Field {
  enum class Kind { rational, ratfunc };
  Kind kind = Kind::rational;
  std::string variable;

  static Field rational() { return {}; }
  static Field ratfunc(std::string var);
  // Accepts "rational", "Q", "ratfunc:q", "Q(q)".
  static Field from_string(std::string_view text);

  bool is_ratfunc() const { return kind == Kind::ratfunc; }
  std::string str() const;

  // Grammar: integers, the variable, + - * / ^ (nonnegative integer
  // exponents) and parentheses. Throws ParseError with a byte position.
  Scalar parse(std::string_view text) const;
  std::string format(const Scalar& s) const;

  // Throws FieldMismatch when `s` involves the variable but this is Q.
  void check_member(const Scalar& s) const;

  friend bool operator==(const Field&, const Field&) = default;
};

// Throws FieldMismatch unless the two descriptors agree.
void require_same_field(const Field& a, const Field& b);

}  // namespace qrep
