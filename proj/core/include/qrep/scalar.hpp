#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qrep {

using Rational = mpq_class;

// Dense univariate polynomial over Q; c[i] is the coefficient of t^i.
// Trailing zero coefficients are never stored, so zero is the empty vector.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rational constant);
  explicit Poly(std::vector<Rational> coeffs);

  static Poly variable();
  static Poly monomial(const Rational& coeff, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Rational& lead() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& s) const;
  Poly monic() const;
  Rational eval(const Rational& x) const;

  // Euclidean division; throws DivisionByZero for a zero divisor.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  // Monic gcd; gcd(0, 0) = 0.
  static Poly gcd(Poly a, Poly b);

  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Element of Q(t) in canonical form: gcd(num, den) = 1, den monic, zero is 0/1.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rational(1)) {}
  explicit RatFunc(Poly p) : num_(std::move(p)), den_(Rational(1)) {}
  RatFunc(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return num_.is_constant() && den_.degree() == 0; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

 private:
  friend class Scalar;
  struct Raw {};
  RatFunc(Poly num, Poly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

// Exact scalar: a rational number or an element of Q(t). Rational functions
// that happen to be constant are stored as rationals, so structural equality
// coincides with mathematical equality.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(long n) : v_(Rational(n)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational q) : v_(std::move(q)) { std::get<Rational>(v_).canonicalize(); }  // NOLINT
  explicit Scalar(RatFunc f);
  static Scalar fraction(long num, long den);
  static Scalar variable();

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return v_.index() == 0; }
  bool is_polynomial() const;
  const Rational& rational() const { return std::get<Rational>(v_); }
  RatFunc as_ratfunc() const;
  // Numerator of a polynomial-valued scalar, as a Poly.
  Poly as_poly() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar inv() const;
  Scalar pow(unsigned e) const;

  // Substitute a rational value for the variable; throws DivisionByZero when
  // the denominator vanishes there.
  Scalar specialize(const Rational& value) const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

  // Canonical text using `var` for the indeterminate; reparses to itself.
  std::string str(const std::string& var = "t") const;

 private:
  void demote();
  std::variant<Rational, RatFunc> v_;
};

}  // namespace qrep
