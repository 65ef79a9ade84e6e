#pragma once

// Exact scalars: rationals, elements of cyclotomic fields Q(zeta_m) and
// sparse polynomials over them in the deformation parameters eta.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sra {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

int euler_phi(int m);
long lcm_of(long a, long b);

/// Data of the field Q(zeta_m), shared process-wide and immutable once built.
struct CyclotomicField {
  int order = 1;
  int degree = 1;                               // deg Phi_m
  std::vector<Rational> phi;                    // Phi_m, low to high, monic
  std::vector<std::vector<Rational>> power;     // zeta^k reduced, k in [0, m)
};

const CyclotomicField& cyclotomic_field(int m);

/// An element of Q(zeta_m) in the canonical power basis 1, zeta, ...,
/// zeta^{phi(m)-1}. Rational values are always demoted to order 1, so a value
/// carries order > 1 only if it is genuinely irrational. Mixed-order
/// arithmetic embeds both operands into Q(zeta_lcm).
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(int v) : Cyclotomic(Rational(v)) {}
  Cyclotomic(long v) : Cyclotomic(Rational(v)) {}
  Cyclotomic(const Rational& r);

  static Cyclotomic zeta(int m, long k = 1);
  /// Sum c_k zeta_m^k for arbitrary k (reduced mod m, then mod Phi_m).
  static Cyclotomic from_power_sum(int m, std::span<const Rational> coeffs);
  /// From canonical basis coefficients; `coeffs.size()` must equal phi(m).
  static Cyclotomic from_basis(int m, std::vector<Rational> coeffs);

  int order() const { return order_; }
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return order_ == 1; }
  bool is_one() const;
  Rational rational() const;

  /// Canonical coefficient sequence in Q(zeta_m). Requires order() | m.
  std::vector<Rational> coefficients(int m) const;
  /// Same value, represented in Q(zeta_m). Requires order() | m.
  Cyclotomic embed(int m) const;

  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Deterministic byte key; equal values of equal order share a key.
  std::string key() const;
  /// Literal of the form "1/2 + 1/2*z^3" with z = zeta_m; order() | m.
  std::string to_literal(int m) const;
  /// Compact form for human output, e.g. "(1/2 - z^2)" style with z = zeta_order.
  std::string to_string() const;

 private:
  void normalize();
  static void align(Cyclotomic& a, Cyclotomic& b);

  int order_ = 1;
  std::vector<Rational> c_;  // empty = 0; size 1 when rational
};

/// Parses the literal grammar  rat | rat*z^k | z^k | sums and differences
/// thereof, where z is zeta_m.
Cyclotomic parse_cyclotomic(const std::string& text, int m);

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

/// Sparse polynomial in the eta variables with cyclotomic coefficients.
/// Constants of arity 0 promote to any arity; otherwise mixing arities
/// throws std::invalid_argument.
class EtaPolynomial {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Cyclotomic>;

  EtaPolynomial() = default;
  EtaPolynomial(int v) : EtaPolynomial(Cyclotomic(v)) {}
  EtaPolynomial(const Rational& v) : EtaPolynomial(Cyclotomic(v)) {}
  EtaPolynomial(const Cyclotomic& c);
  EtaPolynomial(int arity, const Cyclotomic& c);

  static EtaPolynomial variable(int arity, int index);

  int arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Cyclotomic constant_term() const;
  int total_degree() const;
  int degree_in(int var) const;
  Cyclotomic coefficient(const Exponents& e) const;

  EtaPolynomial with_arity(int arity) const;
  Cyclotomic evaluate(std::span<const Cyclotomic> point) const;
  EtaPolynomial substitute(int var, const Cyclotomic& value) const;
  /// Rational roots of a univariate polynomial with rational coefficients,
  /// ascending, without multiplicity. Throws on arity != 1 or on
  /// irrational coefficients.
  std::vector<Rational> rational_roots() const;

  EtaPolynomial& operator+=(const EtaPolynomial& o);
  EtaPolynomial& operator-=(const EtaPolynomial& o);
  EtaPolynomial& operator*=(const EtaPolynomial& o);
  EtaPolynomial& operator*=(const Cyclotomic& c);
  EtaPolynomial operator-() const;

  friend EtaPolynomial operator+(EtaPolynomial a, const EtaPolynomial& b) { return a += b; }
  friend EtaPolynomial operator-(EtaPolynomial a, const EtaPolynomial& b) { return a -= b; }
  friend EtaPolynomial operator*(const EtaPolynomial& a, const EtaPolynomial& b);
  friend EtaPolynomial operator*(EtaPolynomial a, const Cyclotomic& c) { return a *= c; }
  friend EtaPolynomial operator*(const Cyclotomic& c, EtaPolynomial a) { return a *= c; }
  friend bool operator==(const EtaPolynomial& a, const EtaPolynomial& b);
  friend bool operator!=(const EtaPolynomial& a, const EtaPolynomial& b) { return !(a == b); }

  /// Human/grammar form over variables eta0, eta1, ...
  std::string to_string() const;

 private:
  void unify(const EtaPolynomial& o);
  void add_term(const Exponents& e, const Cyclotomic& c);

  int arity_ = 0;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const EtaPolynomial& p);

}  // namespace sra
