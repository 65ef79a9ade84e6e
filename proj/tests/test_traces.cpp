#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sra/expr.hpp"
#include "sra/traces.hpp"

using namespace sra;

namespace {

std::shared_ptr<const Group> shared(Group g) { return std::make_shared<const Group>(std::move(g)); }

}  // namespace

TEST_CASE("ground level conditions on Z_2") {
  Algebra A(shared(cyclic_sp2(2)));
  const Group& G = A.group();
  int sigma = G.generators()[0];
  EtaPolynomial eta = A.eta(0);

  TraceFunctional str = solve_glc(A, -1);
  REQUIRE(str.params() == 1);
  CHECK(str.free_classes[0] == G.class_of(G.identity()));
  CHECK(str.value_of_class(G.class_of(sigma)) == TraceValue::parameter(1, 0, 1) * (-eta));

  TraceFunctional tr = solve_glc(A, 1);
  REQUIRE(tr.params() == 1);
  CHECK(tr.free_classes[0] == G.class_of(sigma));
  CHECK(tr.value_of_class(G.class_of(G.identity())) == TraceValue::parameter(1, 0, 1) * (-eta));
}

TEST_CASE("free parameter counts") {
  Algebra A(shared(doubled_a(2)));
  CHECK(solve_glc(A, -1).params() == 2);
  CHECK(solve_glc(A, 1).params() == 1);
}

TEST_CASE("evaluation on Z_2") {
  Algebra A(shared(cyclic_sp2(2)));
  const Group& G = A.group();
  TraceEvaluator str(A, solve_glc(A, -1));
  EtaPolynomial eta = A.eta(0);
  TraceValue one = TraceValue::parameter(1, 0, 1);
  CHECK(str.evaluate(parse("a1*a2", A)) == one * (EtaPolynomial(Cyclotomic(Rational(1, 2))) * (EtaPolynomial(1) - eta * eta)));
  CHECK(str.evaluate(parse("a1", A)).is_zero());
  CHECK(str.evaluate(parse("a1*a2*a1*g0", A)).is_zero());
  CHECK(str.evaluate(parse("g0", A)) == str.functional().value_of_class(G.class_of(G.generators()[0])));
}

TEST_CASE("eta = 0 form") {
  Group z4 = cyclic_sp2(4);
  int g = z4.generators()[0];
  Matrix w = eta0_form(z4, g, 1);
  CHECK(w(0, 1) == Cyclotomic::zeta(4));
  CHECK(w(1, 0) == Cyclotomic::zeta(4));
  CHECK(w == Matrix(w.transpose()));

  Group z2 = cyclic_sp2(2);
  CHECK(is_zero(eta0_form(z2, z2.identity(), -1)));
  CHECK_THROWS_AS(eta0_form(z2, z2.identity(), 1), KappaEigenvaluePresent);
}

TEST_CASE("eta = 0 traces") {
  Group z4 = cyclic_sp2(4);
  int g = z4.generators()[0];
  // sp(sym(a1 a2) g) = -zeta_4 / 2 sp(g): hand computation in the Weyl algebra
  CHECK(eta0_trace(z4, {1, 1}, g, 1) == Cyclotomic::zeta(4) * Cyclotomic(Rational(-1, 2)));
  CHECK(eta0_trace(z4, {2, 1}, g, 1).is_zero());
  CHECK(eta0_trace(z4, {1, 1}, z4.identity(), 1).is_zero());
  CHECK(eta0_trace(z4, {0, 0}, g, 1) == Cyclotomic(1));
}

TEST_CASE("Gram matrix at cutoff zero") {
  Algebra A(shared(cyclic_sp2(2)));
  TraceEvaluator str(A, solve_glc(A, -1));
  GramReport r = gram(str, 0);
  REQUIRE(r.basis.size() == 2);
  EtaPolynomial eta = A.eta(0);
  const Group& G = A.group();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      int g = G.multiply(r.basis[i].second, r.basis[j].second);
      EtaPolynomial expected = g == G.identity() ? EtaPolynomial(1) : -eta;
      CHECK(r.matrix[i][j] == expected);
    }
  REQUIRE(r.determinant);
  CHECK(*r.determinant == EtaPolynomial(1) - eta * eta);
  CHECK(r.rational_roots == std::vector<Rational>{Rational(-1), Rational(1)});

  TraceEvaluator zero(A, zero_functional(A, -1));
  GramReport z = gram(zero, 0);
  for (const auto& row : z.matrix)
    for (const auto& x : row) CHECK(x.is_zero());
}
