#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sra/group.hpp"

using namespace sra;

TEST_CASE("closure of builtin groups") {
  Group z4 = cyclic_sp2(4);
  CHECK(z4.size() == 4);
  CHECK(z4.classes().size() == 4);
  CHECK(z4.field_order() == 4);

  Group a2 = doubled_a(2);
  CHECK(a2.size() == 6);
  CHECK(a2.dim() == 4);
  CHECK(a2.classes().size() == 3);
  CHECK(a2.reflections().size() == 3);
  CHECK(a2.eta_count() == 1);

  Group b2 = doubled_b(2);
  CHECK(b2.size() == 8);
  CHECK(b2.eta_count() == 2);
  CHECK(b2.reflections().size() == 4);

  Group p = builtin("product(cyclic:2,cyclic:3)");
  CHECK(p.size() == 6);
  CHECK(p.dim() == 4);
  CHECK(p.eta_count() == 3);  // sigma x 1, 1 x r, 1 x r^2

  CHECK(builtin("dihedral:5").size() == 10);
  CHECK(builtin("doubled-A:3").size() == 24);
  CHECK(cyclic_sp2(1).size() == 1);
  CHECK_THROWS_AS(builtin("nope:3"), GroupError);
}

TEST_CASE("closure errors") {
  Matrix shear(2, 2);
  shear << Cyclotomic(1), Cyclotomic(1), Cyclotomic(0), Cyclotomic(1);
  GroupOptions opts;
  opts.cap = 1000;
  opts.allow_non_reflections = true;
  try {
    Group::close({shear}, standard_omega(1), opts);
    FAIL("expected cap error");
  } catch (const GroupError& e) {
    CHECK(e.kind() == GroupError::Kind::CapExceeded);
  }
  Matrix stretch(2, 2);
  stretch << Cyclotomic(2), Cyclotomic(0), Cyclotomic(0), Cyclotomic(2);
  try {
    Group::close({stretch}, standard_omega(1));
    FAIL("expected symplectic error");
  } catch (const GroupError& e) {
    CHECK(e.kind() == GroupError::Kind::NotSymplectic);
  }
  // -I in Sp(4) is symplectic but moves a 4-dimensional space
  Matrix minus = -Matrix(Matrix::Identity(4, 4));
  try {
    Group::close({minus}, standard_omega(2));
    FAIL("expected reflection error");
  } catch (const GroupError& e) {
    CHECK(e.kind() == GroupError::Kind::NotAReflection);
  }
}

TEST_CASE("trace and supertrace counts") {
  auto counts = [](const Group& g) {
    auto c = g.kappa_counts();
    return std::pair{c.traces, c.supertraces};
  };
  CHECK(counts(doubled_a(2)) == std::pair{1, 2});
  CHECK(counts(cyclic_sp2(4)) == std::pair{3, 3});
  CHECK(counts(cyclic_sp2(1)) == std::pair{0, 1});
}

TEST_CASE("E-grading") {
  Group a2 = doubled_a(2);
  CHECK(a2.e_grading(a2.identity(), 1).E == 2);
  Group z2 = cyclic_sp2(2);
  int sigma = z2.generators()[0];
  CHECK(z2.e_grading(sigma, -1).E == 1);
  for (int r : a2.reflections()) CHECK(a2.e_grading(r, 1).E == 1);
}

TEST_CASE("Klein operator") {
  CHECK(doubled_b(2).klein().has_value());
  CHECK_FALSE(doubled_a(2).klein().has_value());
  Group z2 = cyclic_sp2(2);
  REQUIRE(z2.klein().has_value());
  CHECK(*z2.klein() == z2.generators()[0]);
}

TEST_CASE("reflection projectors") {
  Group b2 = doubled_b(2);
  for (int r : b2.reflections()) {
    const auto& d = b2.reflection(r);
    CHECK(multiply(d.projector, d.projector) == d.projector);
    CHECK(d.image.dim() == 2);
    CHECK(d.fixed.dim() == 2);
    CHECK(is_zero(Matrix(multiply(d.projector, d.fixed.basis))));
  }
}

TEST_CASE("eigenspaces are cached and embedded in the group field") {
  Group z3 = cyclic_sp2(3);
  int g = z3.generators()[0];
  const auto& e = z3.eigenspaces(g);
  CHECK(&e == &z3.eigenspaces(g));
  REQUIRE(e.size() == 2);
  CHECK(e[0].lambda == Cyclotomic::zeta(3, 1));
  CHECK(e[1].lambda == Cyclotomic::zeta(3, 2));
}

namespace {

const char* const kSpecs[] = {"cyclic:2",    "cyclic:5",    "doubled-A:2", "doubled-A:3",
                              "doubled-B:2", "dihedral:5", "product(cyclic:2,cyclic:3)"};

}  // namespace

TEST_CASE("a reflection lowers the grading by one") {
  // for g and R with omega_R nonzero on E(g): E(Rg) = E(g) - 1 and E(Rg) = Z_R cap E(g)
  for (auto spec : kSpecs) {
    Group G = builtin(spec);
    int tested = 0;
    for (int kappa : {1, -1})
      for (int g = 0; g < G.size(); ++g) {
        const EGrading& eg = G.e_grading(g, kappa);
        if (eg.E == 0) continue;
        for (int r : G.reflections()) {
          const ReflectionData& R = G.reflection(r);
          Matrix pairing = multiply(multiply(Matrix(eg.eigenspace.basis.transpose()), R.form), eg.eigenspace.basis);
          if (is_zero(pairing)) continue;
          ++tested;
          int rg = G.multiply(r, g);
          const EGrading& lower = G.e_grading(rg, kappa);
          CHECK(lower.E == eg.E - 1);
          CHECK(same_subspace(lower.eigenspace, intersect(R.fixed, eg.eigenspace)));
        }
      }
    CHECK(tested > 0);
  }
}

TEST_CASE("class functions are constant on classes") {
  for (auto spec : kSpecs) {
    Group G = builtin(spec);
    for (const auto& cls : G.classes()) {
      int rep = cls.representative;
      std::vector<std::pair<int, Index>> spectrum;
      for (const auto& e : G.eigenspaces(rep)) spectrum.emplace_back(e.exponent, e.space.dim());
      for (int g : cls.members) {
        CHECK(G.element_order(g) == G.element_order(rep));
        for (int kappa : {1, -1}) CHECK(G.e_grading(g, kappa).E == G.e_grading(rep, kappa).E);
        std::vector<std::pair<int, Index>> s;
        for (const auto& e : G.eigenspaces(g)) s.emplace_back(e.exponent, e.space.dim());
        CHECK(s == spectrum);
        CHECK(G.key(rep) <= G.key(g));
      }
    }
  }
}

TEST_CASE("Klein operator pairs the counts") {
  for (auto spec : kSpecs) {
    Group G = builtin(spec);
    if (!G.klein()) continue;
    auto c = G.kappa_counts();
    CHECK(c.traces == c.supertraces);
  }
}

TEST_CASE("counts multiply over direct products") {
  for (auto [a, b] : {std::pair{"cyclic:2", "cyclic:3"}, {"cyclic:3", "cyclic:4"}, {"doubled-A:2", "cyclic:2"}}) {
    Group G = builtin(std::string("product(") + a + "," + b + ")");
    auto ca = builtin(a).kappa_counts(), cb = builtin(b).kappa_counts(), c = G.kappa_counts();
    CHECK(c.traces == ca.traces * cb.traces);
    CHECK(c.supertraces == ca.supertraces * cb.supertraces);
  }
}

TEST_CASE("doubled Coxeter reflections") {
  Group a2 = doubled_a(2);
  int t = a2.generators()[0];
  CHECK(a2.e_grading(t, 1).E == 1);
  CHECK(a2.e_grading(t, -1).E == 1);
  for (auto spec : {"doubled-A:3", "doubled-B:2", "dihedral:5"}) {
    Group G = builtin(spec);
    for (int r : G.reflections()) CHECK(rank(Matrix(G.matrix(r) - Matrix(Matrix::Identity(G.dim(), G.dim())))) == 2);
  }
}
