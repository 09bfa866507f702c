#include "qrep/scalar.hpp"

#include <algorithm>

#include "qrep/errors.hpp"

namespace qrep {

// ---------------------------------------------------------------- Poly

Poly::Poly(Rational constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::variable() { return monomial(Rational(1), 1); }

Poly Poly::monomial(const Rational& coeff, int degree) {
  if (coeff == 0) return Poly();
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, Rational(0));
  c.back() = coeff;
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(c));
}

Poly Poly::scaled(const Rational& s) const {
  if (s == 0) return Poly();
  Poly r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / lead();
  return scaled(inv);
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> r = a.c_;
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
  const Rational inv_lead = 1 / b.lead();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    Rational f = r[static_cast<std::size_t>(k)] * inv_lead;
    if (f == 0) continue;
    q[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) throw DivisionByZero("zero denominator polynomial");
  if (num.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  if (den.degree() > 0) {
    Poly g = Poly::gcd(num, den);
    if (g.degree() > 0) {
      num = Poly::divmod(num, g).first;
      den = Poly::divmod(den, g).first;
    }
  }
  Rational l = den.lead();
  if (l != 1) {
    Rational inv = 1 / l;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(RatFunc f) : v_(std::move(f)) { demote(); }

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw DivisionByZero();
  return Scalar(Rational(num, den));
}

Scalar Scalar::variable() { return Scalar(RatFunc(Poly::variable())); }

void Scalar::demote() {
  if (auto* f = std::get_if<RatFunc>(&v_); f && f->is_constant()) {
    Rational c = f->num().coeff(0);
    v_ = std::move(c);
  }
}

bool Scalar::is_zero() const {
  if (auto* q = std::get_if<Rational>(&v_)) return *q == 0;
  return false;  // canonical ratfuncs are never constant
}

bool Scalar::is_one() const {
  if (auto* q = std::get_if<Rational>(&v_)) return *q == 1;
  return false;
}

bool Scalar::is_polynomial() const {
  if (is_rational()) return true;
  return std::get<RatFunc>(v_).is_polynomial();
}

RatFunc Scalar::as_ratfunc() const {
  if (auto* q = std::get_if<Rational>(&v_)) return RatFunc(Poly(*q));
  return std::get<RatFunc>(v_);
}

Poly Scalar::as_poly() const {
  if (auto* q = std::get_if<Rational>(&v_)) return Poly(*q);
  const auto& f = std::get<RatFunc>(v_);
  if (!f.is_polynomial()) throw InvalidArgument("scalar is not a polynomial");
  return f.num();
}

Scalar Scalar::operator-() const {
  if (auto* q = std::get_if<Rational>(&v_)) return Scalar(Rational(-*q));
  const auto& f = std::get<RatFunc>(v_);
  Scalar r;
  r.v_ = RatFunc(-f.num(), f.den(), RatFunc::Raw{});
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(v_) += o.rational();
    return *this;
  }
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  RatFunc a = as_ratfunc();
  RatFunc b = o.as_ratfunc();
  if (a.den() == b.den()) {
    if (a.is_polynomial()) {
      v_ = RatFunc(a.num() + b.num(), a.den(), RatFunc::Raw{});
    } else {
      v_ = RatFunc(a.num() + b.num(), a.den());
    }
  } else {
    v_ = RatFunc(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
  }
  demote();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(v_) *= o.rational();
    return *this;
  }
  if (is_zero() || o.is_zero()) return *this = Scalar();
  if (o.is_rational()) {
    const auto& f = std::get<RatFunc>(v_);
    v_ = RatFunc(f.num().scaled(o.rational()), f.den(), RatFunc::Raw{});
    return *this;
  }
  if (is_rational()) {
    const auto& f = std::get<RatFunc>(o.v_);
    v_ = RatFunc(f.num().scaled(rational()), f.den(), RatFunc::Raw{});
    return *this;
  }
  const auto& a = std::get<RatFunc>(v_);
  const auto& b = std::get<RatFunc>(o.v_);
  if (a.is_polynomial() && b.is_polynomial()) {
    v_ = RatFunc(a.num() * b.num(), Poly(Rational(1)), RatFunc::Raw{});
  } else {
    v_ = RatFunc(a.num() * b.num(), a.den() * b.den());
  }
  demote();
  return *this;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return Scalar(Rational(1 / rational()));
  const auto& f = std::get<RatFunc>(v_);
  return Scalar(RatFunc(f.den(), f.num()));
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

Scalar Scalar::pow(unsigned e) const {
  Scalar r(1);
  Scalar b = *this;
  while (e) {
    if (e & 1U) r *= b;
    b *= b;
    e >>= 1U;
  }
  return r;
}

Scalar Scalar::specialize(const Rational& value) const {
  if (is_rational()) return *this;
  const auto& f = std::get<RatFunc>(v_);
  Rational d = f.den().eval(value);
  if (d == 0) throw DivisionByZero("denominator vanishes at the specialization point");
  return Scalar(Rational(f.num().eval(value) / d));
}

namespace {

std::string poly_str(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (c == 0) continue;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    std::string term;
    if (k == 0) {
      term = a.get_str();
    } else {
      std::string mono = var + (k > 1 ? "^" + std::to_string(k) : "");
      term = a == 1 ? mono : a.get_str() + "*" + mono;
    }
    if (first) {
      out += neg ? "-" + term : term;
    } else {
      out += (neg ? "-" : "+") + term;
    }
    first = false;
  }
  return out;
}

std::size_t term_count(const Poly& p) {
  return static_cast<std::size_t>(
      std::count_if(p.coeffs().begin(), p.coeffs().end(), [](const Rational& c) { return c != 0; }));
}

}  // namespace

std::string Scalar::str(const std::string& var) const {
  if (is_rational()) return rational().get_str();
  const auto& f = std::get<RatFunc>(v_);
  std::string n = poly_str(f.num(), var);
  if (f.is_polynomial()) return n;
  if (term_count(f.num()) > 1) n = "(" + n + ")";
  std::string d = poly_str(f.den(), var);
  if (term_count(f.den()) > 1) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace qrep
