#include "sra/checks.hpp"

#include <sstream>

#include "sra/expr.hpp"

namespace sra {

void CheckReport::fail(const std::string& what) {
  if (failures++ == 0) first_failure = what;
}

namespace {

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Monomial random_of_degree(int letters, Rng& rng, int degree) {
  Monomial m(letters, 0);
  for (int k = 0; k < degree; ++k) ++m[pick(rng, 0, letters - 1)];
  return m;
}

Element random_term(const Algebra& algebra, Rng& rng, int degree) {
  const Group& G = algebra.group();
  int num = 0;
  while (num == 0) num = pick(rng, -3, 3);
  EtaPolynomial c(G.eta_count(), Cyclotomic(Rational(num, pick(rng, 1, 2))));
  if (G.eta_count() > 0 && pick(rng, 0, 2) == 0) c = c * algebra.eta(pick(rng, 0, G.eta_count() - 1));
  Terms t;
  add_term(t, pick(rng, 0, G.size() - 1), random_of_degree(G.dim(), rng, degree), c);
  return Element(algebra.standard(), std::move(t));
}

std::string show(const Element& f) { return f.frame().is_standard() ? print(f) : "<chart element>"; }

std::string show(const TraceValue& v, int m) {
  std::ostringstream os;
  for (int i = 0; i < v.params(); ++i) os << (i ? ", " : "") << print(v.coeff(i), m);
  return "[" + os.str() + "]";
}

Element random_pair_member(const Algebra& algebra, Rng& rng, int max_degree) {
  return random_element(algebra, rng, max_degree, pick(rng, 0, 1) ? Parity::Odd : Parity::Even);
}

int sign(int kappa, Parity a, Parity b) { return (a == Parity::Odd && b == Parity::Odd) ? kappa : 1; }

}  // namespace

Monomial random_monomial(int letters, Rng& rng, int max_degree, bool even_only) {
  int d = pick(rng, 0, max_degree);
  if (even_only && d % 2) --d;
  return random_of_degree(letters, rng, d);
}

Element random_element(const Algebra& algebra, Rng& rng, int max_degree, Parity parity) {
  if (parity == Parity::Mixed) throw std::invalid_argument("random elements have a definite parity");
  int offset = parity == Parity::Odd ? 1 : 0;
  if (offset > max_degree) throw std::invalid_argument("no odd elements of degree 0");
  Element out = algebra.zero();
  for (int k = pick(rng, 1, 3); k > 0; --k) {
    int d = offset + 2 * pick(rng, 0, (max_degree - offset) / 2);
    out += random_term(algebra, rng, d);
  }
  return out;
}

CheckReport check_group_invariants(const Group& G) {
  CheckReport r{"group invariants " + G.name()};
  const Index n = G.dim();
  const Matrix id = Matrix::Identity(n, n);
  for (int g = 0; g < G.size(); ++g) {
    ++r.samples;
    const Matrix& M = G.matrix(g);
    std::string where = G.name() + " element " + G.key(g) + ": ";
    // g^ord = 1 below, so every eigenvalue is an ord-th root of unity
    const int ord = G.element_order(g);
    std::vector<Eigenspace> spaces;
    try {
      spaces = eigen_decompose(M, ord);
    } catch (const DecompositionIncomplete&) {
      r.fail(where + "not diagonalizable over the m-th roots of unity");
      continue;
    }
    Matrix power = id;
    for (int k = 0; k < ord; ++k) power = multiply(power, M);
    if (power != id) r.fail(where + "order does not annihilate");
    if (!(determinant(M) == Cyclotomic(1))) r.fail(where + "determinant is not 1");
    std::map<int, Index> mult;
    for (const auto& e : spaces) mult[e.exponent] = e.space.dim();
    const int m = ord;
    for (const auto& [k, d] : mult) {
      auto it = mult.find((m - k) % m);
      if (it == mult.end() || it->second != d) r.fail(where + "spectrum is not closed under inversion");
    }
    if (mult.count(0) && mult[0] % 2) r.fail(where + "odd multiplicity of eigenvalue 1");
    if (m % 2 == 0 && mult.count(m / 2) && mult[m / 2] % 2) r.fail(where + "odd multiplicity of eigenvalue -1");
    if (!is_symplectic(M, G.omega())) r.fail(where + "not symplectic");
  }
  return r;
}

Group::Counts brute_force_counts(const Group& G) {
  Group::Counts c;
  const Index n = G.dim();
  for (const auto& cls : G.classes()) {
    const Matrix& M = G.matrix(cls.representative);
    Matrix minus = M - Matrix(Matrix::Identity(n, n));
    Matrix plus = M + Matrix(Matrix::Identity(n, n));
    if (!determinant(minus).is_zero()) ++c.traces;
    if (!determinant(plus).is_zero()) ++c.supertraces;
  }
  return c;
}

CheckReport check_glc_dimension(const Algebra& algebra, int kappa) {
  const Group& G = algebra.group();
  CheckReport r{"GLC dimension " + G.name() + " kappa=" + std::to_string(kappa), 1};
  int expected = 0;
  for (const auto& cls : G.classes())
    if (G.e_grading(cls.representative, kappa).E == 0) ++expected;
  try {
    TraceFunctional sp = solve_glc(algebra, kappa);
    if (sp.params() != expected)
      r.fail(std::to_string(sp.params()) + " free parameters, " + std::to_string(expected) + " classes with E = 0");
  } catch (const GlcInconsistent& e) {
    r.fail(e.what());
  }
  return r;
}

CheckReport check_cyclicity(const TraceEvaluator& sp, Rng& rng, int samples, int max_degree) {
  const Algebra& A = sp.algebra();
  CheckReport r{"cyclicity " + A.group().name() + " kappa=" + std::to_string(sp.kappa())};
  for (int s = 0; s < samples; ++s) {
    ++r.samples;
    Element f = random_pair_member(A, rng, max_degree), h = random_pair_member(A, rng, max_degree);
    TraceValue lhs = sp.evaluate(f * h);
    TraceValue rhs = sp.evaluate(h * f) * EtaPolynomial(sign(sp.kappa(), f.parity(), h.parity()));
    if (lhs != rhs)
      r.fail("f = " + show(f) + ", h = " + show(h) + ": " + show(lhs, A.group().field_order()) + " vs " +
             show(rhs, A.group().field_order()));
  }
  return r;
}

CheckReport check_g_invariance(const TraceEvaluator& sp, Rng& rng, int samples, int max_degree) {
  const Algebra& A = sp.algebra();
  const Group& G = A.group();
  CheckReport r{"G-invariance " + G.name() + " kappa=" + std::to_string(sp.kappa())};
  for (int s = 0; s < samples; ++s) {
    ++r.samples;
    Element f = random_pair_member(A, rng, max_degree);
    int tau = pick(rng, 0, G.size() - 1);
    TraceValue lhs = sp.evaluate(A.element(tau) * f * A.element(G.inverse(tau)));
    TraceValue rhs = sp.evaluate(f);
    if (lhs != rhs) r.fail("f = " + show(f) + ", tau = " + G.key(tau));
  }
  return r;
}

CheckReport check_linearity(const TraceEvaluator& sp, Rng& rng, int samples, int max_degree) {
  const Algebra& A = sp.algebra();
  const Group& G = A.group();
  CheckReport r{"linearity " + G.name() + " kappa=" + std::to_string(sp.kappa())};
  for (int s = 0; s < samples; ++s) {
    ++r.samples;
    Element f = random_pair_member(A, rng, max_degree), h = random_pair_member(A, rng, max_degree);
    EtaPolynomial a(G.eta_count(), Cyclotomic(Rational(pick(rng, -4, 4), pick(rng, 1, 3))));
    EtaPolynomial b(G.eta_count(), Cyclotomic::zeta(G.field_order(), pick(rng, 0, G.field_order() - 1)));
    if (G.eta_count() > 0) b = b * A.eta(0);
    TraceValue lhs = sp.evaluate(a * f + b * h);
    TraceValue rhs = sp.evaluate(f) * a + sp.evaluate(h) * b;
    if (lhs != rhs) r.fail("f = " + show(f) + ", h = " + show(h));
  }
  return r;
}

CheckReport check_glc_consistency(const TraceEvaluator& sp) {
  const Algebra& A = sp.algebra();
  const Group& G = A.group();
  CheckReport r{"GLC consistency " + G.name() + " kappa=" + std::to_string(sp.kappa())};
  for (int g = 0; g < G.size(); ++g) {
    const EGrading& e = G.e_grading(g, sp.kappa());
    if (e.E == 0) continue;
    std::vector<Vector> c = darboux_basis(e.eigenspace, G.omega());
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        ++r.samples;
        Element x = A.vector(c[i]), y = A.vector(c[j]);
        Element f = (x * y - y * x) * A.element(g);
        if (!sp.evaluate(f).is_zero())
          r.fail("element " + G.key(g) + ", pair " + std::to_string(i) + "," + std::to_string(j));
      }
  }
  return r;
}

CheckReport check_confluence(const Algebra& algebra, const TraceFunctional& sp, Rng& rng, int samples,
                             int max_degree) {
  const Group& G = algebra.group();
  CheckReport r{"confluence " + G.name() + " kappa=" + std::to_string(sp.kappa)};
  std::vector<std::unique_ptr<TraceEvaluator>> evaluators;
  for (auto letter : {Strategy::Letter::First, Strategy::Letter::Last})
    for (auto pair : {Strategy::Pair::First, Strategy::Pair::Last})
      evaluators.push_back(std::make_unique<TraceEvaluator>(algebra, sp, Strategy{letter, pair}));
  for (int s = 0; s < samples; ++s) {
    ++r.samples;
    Monomial e = random_monomial(G.dim(), rng, max_degree, true);
    int g = pick(rng, 0, G.size() - 1);
    TraceValue first = evaluators[0]->monomial(e, g);
    for (std::size_t k = 1; k < evaluators.size(); ++k)
      if (evaluators[k]->monomial(e, g) != first) {
        std::ostringstream os;
        for (int x : e) os << x << ' ';
        r.fail("exponents " + os.str() + "at " + G.key(g) + ", strategy " + std::to_string(k));
        break;
      }
  }
  return r;
}

CheckReport check_eta0_oracle(const Algebra& algebra, const TraceEvaluator& sp, int max_degree) {
  const Group& G = algebra.group();
  CheckReport r{"eta=0 oracle " + G.name() + " kappa=" + std::to_string(sp.kappa())};
  auto at_zero = [&](TraceValue v) {
    for (int k = 0; k < G.eta_count(); ++k) v = v.substitute(k, Cyclotomic());
    return v;
  };
  for (int d = 0; d <= max_degree; ++d)
    for (const Monomial& e : monomials_of_degree(G.dim(), d)) {
      Element s = symmetrized(algebra, e);
      for (int g = 0; g < G.size(); ++g) {
        ++r.samples;
        TraceValue lhs = at_zero(sp.evaluate(s * algebra.element(g)));
        TraceValue rhs = at_zero(sp.functional().value_of_class(G.class_of(g)) *
                                 EtaPolynomial(G.eta_count(), eta0_trace(G, e, g, sp.kappa())));
        if (lhs != rhs) {
          std::ostringstream os;
          for (int x : e) os << x << ' ';
          r.fail("exponents " + os.str() + "at " + G.key(g) + ": " + show(lhs, G.field_order()) + " vs " +
                 show(rhs, G.field_order()));
        }
      }
    }
  return r;
}

CheckReport check_klein(const TraceEvaluator& str, Rng& rng, int samples, int max_degree) {
  const Algebra& A = str.algebra();
  const Group& G = A.group();
  CheckReport r{"Klein correspondence " + G.name()};
  auto K = G.klein();
  if (!K) {
    r.fail("-1 is not in the group");
    return r;
  }
  if (str.kappa() != -1) throw std::invalid_argument("the Klein check needs a supertrace");
  Element k = A.element(*K);
  for (int s = 0; s < samples; ++s) {
    ++r.samples;
    Element f = random_pair_member(A, rng, max_degree), h = random_pair_member(A, rng, max_degree);
    if (str.evaluate(k * (f * h)) != str.evaluate(k * (h * f))) r.fail("f = " + show(f) + ", h = " + show(h));
  }
  return r;
}

}  // namespace sra
