#include "qrep/field.hpp"

#include <cctype>

#include "qrep/errors.hpp"

namespace qrep {

Field Field::ratfunc(std::string var) {
  bool ok = !var.empty() && (std::isalpha(static_cast<unsigned char>(var[0])) || var[0] == '_');
  for (char ch : var) ok = ok && (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_');
  if (!ok) throw InvalidArgument("field variable must be a nonempty identifier: '" + var + "'");
  Field f;
  f.kind = Kind::ratfunc;
  f.variable = std::move(var);
  return f;
}

Field Field::from_string(std::string_view text) {
  if (text == "rational" || text == "Q" || text == "QQ") return rational();
  if (text.starts_with("ratfunc:")) return ratfunc(std::string(text.substr(8)));
  if (text.size() > 3 && text.starts_with("Q(") && text.ends_with(")"))
    return ratfunc(std::string(text.substr(2, text.size() - 3)));
  throw InvalidArgument("unknown field descriptor '" + std::string(text) + "'");
}

std::string Field::str() const { return is_ratfunc() ? "ratfunc:" + variable : "rational"; }

namespace {

class Parser {
 public:
  Parser(std::string_view s, const Field& f) : s_(s), f_(f) {}

  Scalar run() {
    Scalar v = expr();
    skip();
    if (p_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[p_]) + "'", p_);
    return v;
  }

 private:
  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool eat(char c) {
    skip();
    if (p_ < s_.size() && s_[p_] == c) {
      ++p_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        std::size_t at = p_;
        Scalar d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = p_;
      while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
      if (start == p_) throw ParseError("expected nonnegative integer exponent", start);
      if (p_ - start > 4) throw ParseError("exponent too large", start);
      unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, p_ - start))));
      return base.pow(e);
    }
    return base;
  }

  Scalar atom() {
    skip();
    if (p_ >= s_.size()) throw ParseError("unexpected end of input", p_);
    char c = s_[p_];
    if (c == '(') {
      ++p_;
      Scalar v = expr();
      if (!eat(')')) throw ParseError("expected ')'", p_);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = p_;
      while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
      return Scalar(Rational(mpz_class(std::string(s_.substr(start, p_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = p_;
      while (p_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_')) ++p_;
      std::string_view name = s_.substr(start, p_ - start);
      if (!f_.is_ratfunc() || name != f_.variable)
        throw ParseError("unknown variable '" + std::string(name) + "'", start);
      return Scalar::variable();
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", p_);
  }

  std::string_view s_;
  const Field& f_;
  std::size_t p_ = 0;
};

}  // namespace

Scalar Field::parse(std::string_view text) const {
  try {
    return Parser(text, *this).run();
  } catch (const DivisionByZero&) {
    throw ParseError("division by zero", 0);
  }
}

std::string Field::format(const Scalar& s) const { return s.str(is_ratfunc() ? variable : "t"); }

void Field::check_member(const Scalar& s) const {
  if (!is_ratfunc() && !s.is_rational()) throw FieldMismatch("rational-function scalar in field Q");
}

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw FieldMismatch("field mismatch: " + a.str() + " vs " + b.str());
}

}  // namespace qrep
