#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sra/expr.hpp"

using namespace sra;

namespace {

std::shared_ptr<const Group> shared(Group g) { return std::make_shared<const Group>(std::move(g)); }

ParseError::Kind error_kind(const std::string& text, const Algebra& A, std::size_t* position = nullptr) {
  try {
    parse(text, A);
  } catch (const ParseError& e) {
    if (position) *position = e.position();
    return e.kind();
  }
  FAIL("expected a parse error for " << text);
  return ParseError::Kind::Syntax;
}

}  // namespace

TEST_CASE("parsing into normal form") {
  Algebra A(shared(cyclic_sp2(2)));
  Element f = parse("a1*a2*g0 + 3/2", A);
  CHECK(f.terms().size() == 2);
  Element s = A.element(A.group().generators()[0]);
  CHECK(f == A.generator(0) * A.generator(1) * s + A.scalar(EtaPolynomial(Cyclotomic(Rational(3, 2)))));
  CHECK(parse("a2*a1", A) == parse("a1*a2 - 1 - eta0*g0", A));
  CHECK(parse("-a1^2", A) == -(A.generator(0) * A.generator(0)));
  CHECK(parse("(a1 + a2)^2", A) == parse("a1^2 + a1*a2 + a2*a1 + a2^2", A));
  CHECK(parse("e", A) == A.scalar(EtaPolynomial(1)));
  CHECK(parse("g0^2", A) == A.scalar(EtaPolynomial(1)));
}

TEST_CASE("parse errors carry positions") {
  Algebra A(shared(cyclic_sp2(2)));
  std::size_t pos = 0;
  CHECK(error_kind("a3", A, &pos) == ParseError::Kind::IndexOutOfRange);
  CHECK(pos == 1);
  CHECK(error_kind("a1 * b2", A, &pos) == ParseError::Kind::UnknownSymbol);
  CHECK(pos == 6);
  CHECK(error_kind("a1 # 2", A, &pos) == ParseError::Kind::Lexical);
  CHECK(pos == 4);
  CHECK(error_kind("a1^-2", A, &pos) == ParseError::Kind::NegativeExponent);
  CHECK(error_kind("eta1", A) == ParseError::Kind::IndexOutOfRange);
  CHECK(error_kind("g1", A) == ParseError::Kind::IndexOutOfRange);
  CHECK(error_kind("(a1", A, &pos) == ParseError::Kind::Syntax);
  CHECK(pos == 4);
  CHECK(error_kind("a1 a2", A) == ParseError::Kind::Syntax);
}

TEST_CASE("cyclotomic literals") {
  Algebra A(shared(cyclic_sp2(4)));
  CHECK(parse("z^2", A) == A.scalar(EtaPolynomial(-1)));
  CHECK(parse("z*z^3", A) == A.scalar(EtaPolynomial(1)));
}

TEST_CASE("print then parse is the identity") {
  std::mt19937 rng(9);
  for (auto spec : {"cyclic:2", "cyclic:3", "doubled-B:2", "cyclic:5"}) {
    Algebra A(shared(builtin(spec)));
    const Group& G = A.group();
    std::uniform_int_distribution<int> letter(0, G.dim() - 1), elem(0, G.size() - 1), deg(0, 3), coef(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
      Element f = A.zero();
      for (int k = 0; k < 3; ++k) {
        Cyclotomic c = Cyclotomic(Rational(coef(rng), 2)) + Cyclotomic(coef(rng)) * Cyclotomic::zeta(G.field_order());
        EtaPolynomial p(c);
        if (G.eta_count() > 0 && coef(rng) > 0) p = p * A.eta(0) + EtaPolynomial(coef(rng));
        Element t = A.scalar(p);
        for (int d = deg(rng); d > 0; --d) t = t * A.generator(letter(rng));
        f += t * A.element(elem(rng));
      }
      std::string text = print(f);
      CAPTURE(text);
      CHECK(parse(text, A) == f);
    }
  }
  Algebra Z2(shared(cyclic_sp2(2)));
  CHECK(print(parse("a2*a1", Z2)) == "a1*a2 - 1 - eta0*g0");
  CHECK(print(Z2.zero()) == "0");
}
