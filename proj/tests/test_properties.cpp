#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sra/checks.hpp"

using namespace sra;

namespace {

std::shared_ptr<const Group> shared(Group g) { return std::make_shared<const Group>(std::move(g)); }

const char* const kGroups[] = {"cyclic:2", "cyclic:3", "cyclic:4", "doubled-A:2", "doubled-B:2",
                               "product(cyclic:2,cyclic:3)"};

void require_ok(const CheckReport& r) {
  INFO(r.name << ": " << r.first_failure);
  CHECK(r.samples > 0);
  CHECK(r.ok());
}

}  // namespace

TEST_CASE("group invariants and counts") {
  for (auto spec : kGroups) {
    Group G = builtin(spec);
    require_ok(check_group_invariants(G));
    Group::Counts a = G.kappa_counts(), b = brute_force_counts(G);
    CHECK(a.traces == b.traces);
    CHECK(a.supertraces == b.supertraces);
  }
}

TEST_CASE("kappa-trace properties") {
  Rng rng(2024);
  for (auto spec : kGroups) {
    Algebra A(shared(builtin(spec)));
    for (int kappa : {1, -1}) {
      CAPTURE(spec);
      CAPTURE(kappa);
      require_ok(check_glc_dimension(A, kappa));
      TraceFunctional f = solve_glc(A, kappa);
      TraceEvaluator sp(A, f);
      CheckReport consistency = check_glc_consistency(sp);
      CHECK(consistency.ok());
      require_ok(check_cyclicity(sp, rng, 15, 3));
      require_ok(check_g_invariance(sp, rng, 15, 3));
      require_ok(check_linearity(sp, rng, 15, 3));
      require_ok(check_confluence(A, f, rng, 15, 6));
    }
  }
}

TEST_CASE("eta = 0 reduction matches the closed form") {
  for (auto spec : {"cyclic:2", "cyclic:3", "cyclic:4", "doubled-A:2"}) {
    Algebra A(shared(builtin(spec)));
    for (int kappa : {1, -1}) {
      TraceEvaluator sp(A, solve_glc(A, kappa));
      require_ok(check_eta0_oracle(A, sp, 4));
    }
  }
}

TEST_CASE("Klein operator turns the supertrace into a trace") {
  Rng rng(5);
  for (auto spec : {"cyclic:2", "doubled-B:2"}) {
    Algebra A(shared(builtin(spec)));
    TraceEvaluator str(A, solve_glc(A, -1));
    require_ok(check_klein(str, rng, 15, 3));
    Group::Counts c = A.group().kappa_counts();
    CHECK(c.traces == c.supertraces);
  }
}

TEST_CASE("the checks catch a functional that violates the ground level conditions") {
  Algebra A(shared(cyclic_sp2(2)));
  TraceFunctional broken = solve_glc(A, -1);
  int sigma = A.group().generators()[0];
  broken.table[A.group().class_of(sigma)] = TraceValue(1);
  TraceEvaluator sp(A, broken);
  Rng rng(1);
  CHECK_FALSE(check_cyclicity(sp, rng, 30, 2).ok());
  CHECK_FALSE(check_glc_consistency(sp).ok());
}

TEST_CASE("random elements have the requested parity") {
  Algebra A(shared(builtin("doubled-A:2")));
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    Element even = random_element(A, rng, 4, Parity::Even), odd = random_element(A, rng, 4, Parity::Odd);
    if (!even.is_zero()) CHECK(even.parity() == Parity::Even);
    if (!odd.is_zero()) CHECK(odd.parity() == Parity::Odd);
    CHECK(even.max_degree() <= 4);
  }
}
