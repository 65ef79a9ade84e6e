#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sra/scalar.hpp"

using namespace sra;

namespace {

Cyclotomic power_sum(int m, std::vector<int> coeffs) {
  std::vector<Rational> c(coeffs.begin(), coeffs.end());
  return Cyclotomic::from_power_sum(m, c);
}

Cyclotomic random_cyclotomic(std::mt19937& rng, int m) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  std::vector<Rational> c(m);
  for (auto& x : c) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return Cyclotomic::from_power_sum(m, c);
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("normalization modulo the cyclotomic polynomial") {
  for (int m : {1, 2, 3, 5, 6, 12}) CHECK(Cyclotomic::zeta(m, m) == Cyclotomic(1));
  CHECK(Cyclotomic::zeta(4, 2) == Cyclotomic(-1));
  CHECK(power_sum(3, {1, 1, 1}).is_zero());
  CHECK(cyclotomic_field(12).degree == 4);
  CHECK(euler_phi(60) == 16);
  // idempotent: renormalizing the canonical coefficients gives the same value
  Cyclotomic x = power_sum(12, {1, 0, 3, -2, 0, 1, 0, 0, 7, 0, 0, 1});
  auto c = x.coefficients(12);
  CHECK(Cyclotomic::from_power_sum(12, c) == x);
}

TEST_CASE("inverse") {
  for (int m : {3, 4, 5, 8}) CHECK(Cyclotomic::zeta(m).inverse() == Cyclotomic::zeta(m, m - 1));
  CHECK(Cyclotomic(2).inverse() == Cyclotomic(Rational(1, 2)));
  Cyclotomic one_minus = Cyclotomic(1) - Cyclotomic::zeta(4);
  Cyclotomic expected = Cyclotomic(Rational(1, 2)) + Cyclotomic(Rational(1, 2)) * Cyclotomic::zeta(4);
  CHECK(one_minus.inverse() == expected);
  CHECK_THROWS(Cyclotomic().inverse());
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(7);
  for (int m : {3, 4, 5, 8, 12}) {
    for (int trial = 0; trial < 20; ++trial) {
      Cyclotomic a = random_cyclotomic(rng, m), b = random_cyclotomic(rng, m), c = random_cyclotomic(rng, m);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("normalization is a ring homomorphism from power sums") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-3, 3);
  const int m = 6;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> p(m), q(m);
    for (auto& x : p) x = d(rng);
    for (auto& x : q) x = d(rng);
    std::vector<int> sum(m), prod(2 * m);
    for (int i = 0; i < m; ++i) sum[i] = p[i] + q[i];
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) prod[i + j] += p[i] * q[j];
    CHECK(power_sum(m, sum) == power_sum(m, p) + power_sum(m, q));
    CHECK(power_sum(m, prod) == power_sum(m, p) * power_sum(m, q));
  }
}

TEST_CASE("mixed orders embed into the lcm") {
  Cyclotomic i = Cyclotomic::zeta(4), w = Cyclotomic::zeta(3);
  Cyclotomic s = i * w;
  CHECK(s.order() == 12);
  CHECK(s == Cyclotomic::zeta(12, 7));
  CHECK((i * i).is_rational());
}

TEST_CASE("literal round trip") {
  const int m = 12;
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Cyclotomic x = random_cyclotomic(rng, m);
    CHECK(parse_cyclotomic(x.to_literal(m), m) == x);
  }
  CHECK(parse_cyclotomic("1/2 + 1/2*z^3", 4) == Cyclotomic(Rational(1, 2)) - Cyclotomic(Rational(1, 2)) * Cyclotomic::zeta(4));
  CHECK(parse_cyclotomic("z", 4) == Cyclotomic::zeta(4));
  CHECK(parse_cyclotomic("-z^2", 4) == Cyclotomic(1));
  CHECK_THROWS_AS(parse_cyclotomic("1 +", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_cyclotomic("y", 4), std::invalid_argument);
}

TEST_CASE("eta polynomial operations") {
  EtaPolynomial eta = EtaPolynomial::variable(1, 0);
  EtaPolynomial one(1);
  EtaPolynomial p = one - eta * eta;
  CHECK((one + eta) * (one - eta) == p);
  Cyclotomic half(Rational(1, 2));
  CHECK(p.evaluate(std::span<const Cyclotomic>(&half, 1)) == Cyclotomic(Rational(3, 4)));
  EtaPolynomial q = eta * eta - EtaPolynomial(Rational(1, 4));
  CHECK(q.rational_roots() == std::vector<Rational>{Rational(-1, 2), Rational(1, 2)});
  CHECK(p.to_string() == "1 - eta0^2");
  CHECK_THROWS_AS(EtaPolynomial::variable(2, 0) + eta, std::invalid_argument);
  CHECK_THROWS(EtaPolynomial::variable(2, 0).rational_roots());
}

TEST_CASE("rational roots need the primitive integer form") {
  EtaPolynomial x = EtaPolynomial::variable(1, 0);
  // (3x - 2)(x + 5)(4x + 1) expanded with a rational scale
  EtaPolynomial f = (EtaPolynomial(3) * x - EtaPolynomial(2)) * (x + EtaPolynomial(5)) *
                    (EtaPolynomial(4) * x + EtaPolynomial(1)) * Cyclotomic(Rational(2, 7));
  CHECK(f.rational_roots() == std::vector<Rational>{Rational(-5), Rational(-1, 4), Rational(2, 3)});
}

TEST_CASE("evaluation commutes with ring operations") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-4, 4);
  auto random_poly = [&] {
    EtaPolynomial p(2, Cyclotomic());
    for (int k = 0; k < 4; ++k) {
      EtaPolynomial term(2, Cyclotomic(d(rng)));
      for (int v = 0; v < 2; ++v)
        for (int e = d(rng) & 1; e > 0; --e) term *= EtaPolynomial::variable(2, v);
      p += term;
    }
    return p;
  };
  for (int trial = 0; trial < 20; ++trial) {
    EtaPolynomial p = random_poly(), q = random_poly();
    std::vector<Cyclotomic> pt{Cyclotomic(Rational(d(rng), 3)), Cyclotomic(Rational(d(rng), 5))};
    CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
    CHECK((p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt));
  }
}
