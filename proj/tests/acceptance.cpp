// One line per acceptance criterion; exit status 1 when any criterion fails.

#include <chrono>
#include <algorithm>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "sra/checks.hpp"
#include "sra/expr.hpp"

using namespace sra;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void absorb(const CheckReport& r) {
    require(r.ok(), r.name + ": " + r.first_failure);
    samples += r.samples;
  }
  long samples = 0;
};

std::shared_ptr<const Group> shared(const std::string& spec) { return std::make_shared<const Group>(builtin(spec)); }

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// the groups every structural check runs on
const std::vector<std::string> kTestGroups = {"cyclic:2",    "cyclic:3",    "cyclic:4",    "doubled-A:1",
                                              "doubled-A:2", "doubled-A:3", "doubled-B:2", "dihedral:5",
                                              "product(cyclic:2,cyclic:3)"};

Outcome a_series() {
  Outcome o;
  auto start = Clock::now();
  const int supertraces[] = {1, 2, 2, 3};
  std::ostringstream got;
  for (int n = 2; n <= 5; ++n) {
    Group G = doubled_a(n - 1);
    Group::Counts c = G.kappa_counts();
    got << "S_" << n << ": T=" << c.traces << " S=" << c.supertraces << "  ";
    o.require(c.traces == 1, "T for S_" + std::to_string(n));
    o.require(c.supertraces == supertraces[n - 2], "S for S_" + std::to_string(n));
  }
  double t = seconds_since(start);
  o.require(t < 60, "runtime " + std::to_string(t) + " s exceeds 60 s");
  o.detail = got.str() + o.detail;
  return o;
}

Outcome cyclic_counts() {
  Outcome o;
  auto start = Clock::now();
  for (int n = 2; n <= 12; ++n) {
    Group G = cyclic_sp2(n);
    Group::Counts c = G.kappa_counts();
    // every element of the abelian group is its own class: enumerate eigenvalues directly
    int t = 0, s = 0;
    for (int g = 0; g < G.size(); ++g) {
      bool plus = false, minus = false;
      for (const auto& e : eigen_decompose(G.matrix(g), G.field_order())) {
        plus = plus || e.lambda == Cyclotomic(1);
        minus = minus || e.lambda == Cyclotomic(-1);
      }
      t += !plus;
      s += !minus;
    }
    std::string tag = "n=" + std::to_string(n);
    o.require(c.traces == n - 1 && t == n - 1, tag + " T");
    o.require(c.supertraces == (n % 2 == 0 ? n - 1 : n) && s == c.supertraces, tag + " S");
  }
  double t = seconds_since(start);
  o.require(t < 5, "runtime " + std::to_string(t) + " s exceeds 5 s");
  return o;
}

Outcome glc_dimension() {
  Outcome o;
  for (const auto& spec : kTestGroups) {
    Algebra A(shared(spec));
    for (int kappa : {1, -1}) o.absorb(check_glc_dimension(A, kappa));
  }
  Algebra s5(std::make_shared<const Group>(doubled_a(4)));
  for (int kappa : {1, -1}) o.absorb(check_glc_dimension(s5, kappa));
  return o;
}

Outcome cyclicity() {
  Outcome o;
  Rng rng(4);
  for (auto spec : {"cyclic:2", "cyclic:3", "doubled-A:2"}) {
    Algebra A(shared(spec));
    for (int kappa : {1, -1}) {
      TraceEvaluator sp(A, solve_glc(A, kappa));
      o.absorb(check_cyclicity(sp, rng, 200, 4));
    }
  }
  return o;
}

Outcome confluence() {
  Outcome o;
  Rng rng(5);
  for (const auto& spec : kTestGroups) {
    Algebra A(shared(spec));
    for (int kappa : {1, -1}) o.absorb(check_confluence(A, solve_glc(A, kappa), rng, 50, 6));
  }
  return o;
}

Outcome eta0_oracle() {
  Outcome o;
  for (auto spec : {"cyclic:2", "cyclic:3", "cyclic:4", "doubled-A:2"}) {
    Algebra A(shared(spec));
    for (int kappa : {1, -1}) {
      TraceEvaluator sp(A, solve_glc(A, kappa));
      o.absorb(check_eta0_oracle(A, sp, 6));
    }
  }
  return o;
}

Outcome klein() {
  Outcome o;
  Rng rng(6);
  for (auto spec : {"doubled-B:2", "cyclic:2"}) {
    Algebra A(shared(spec));
    o.require(A.group().klein().has_value(), std::string(spec) + " lacks -1");
    Group::Counts c = A.group().kappa_counts();
    o.require(c.traces == c.supertraces, std::string(spec) + ": T != S");
    TraceEvaluator str(A, solve_glc(A, -1));
    o.absorb(check_klein(str, rng, 50, 4));
  }
  return o;
}

Outcome product() {
  Outcome o;
  Group::Counts a = cyclic_sp2(2).kappa_counts(), b = cyclic_sp2(3).kappa_counts();
  Group::Counts p = builtin("product(cyclic:2,cyclic:3)").kappa_counts();
  o.require(p.traces == a.traces * b.traces && p.traces == 2, "T = " + std::to_string(p.traces));
  o.require(p.supertraces == a.supertraces * b.supertraces && p.supertraces == 3,
            "S = " + std::to_string(p.supertraces));
  o.detail = "T=" + std::to_string(p.traces) + " S=" + std::to_string(p.supertraces) + o.detail;
  return o;
}

Outcome gram_degeneracy() {
  Outcome o;
  auto start = Clock::now();
  Algebra A(shared("cyclic:2"));
  TraceEvaluator str(A, solve_glc(A, -1));
  EtaPolynomial eta = A.eta(0);
  GramReport zero = gram(str, 0, {Cyclotomic(1)});
  o.require(zero.determinant && *zero.determinant == EtaPolynomial(1) - eta * eta, "d=0 determinant is not 1 - eta^2");
  const Rational half(1, 2);
  std::optional<int> minimal;
  std::ostringstream roots;
  for (int d = 0; d <= 4 && !minimal; ++d) {
    GramReport r = gram(str, d, {Cyclotomic(1)});
    roots << " d=" << d << ":{";
    for (std::size_t i = 0; i < r.rational_roots.size(); ++i) roots << (i ? "," : "") << r.rational_roots[i];
    roots << "}";
    auto has = [&](const Rational& q) {
      return std::find(r.rational_roots.begin(), r.rational_roots.end(), q) != r.rational_roots.end();
    };
    if (has(half) && has(-half)) minimal = d;
  }
  o.require(minimal.has_value(), "no cutoff d <= 4 has roots +-1/2; roots" + roots.str());
  if (minimal) o.detail = "minimal cutoff d=" + std::to_string(*minimal) + o.detail;
  double t = seconds_since(start);
  o.require(t < 60, "runtime " + std::to_string(t) + " s exceeds 60 s");
  return o;
}

Outcome group_invariants() {
  Outcome o;
  for (const auto& spec : kTestGroups) o.absorb(check_group_invariants(builtin(spec)));
  o.absorb(check_group_invariants(doubled_a(4)));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"A-series counts (S_2..S_5)", a_series},
      {"cyclic group counts n=2..12", cyclic_counts},
      {"GLC dimension and redundant equations", glc_dimension},
      {"kappa-trace cyclicity", cyclicity},
      {"confluence of reduction strategies", confluence},
      {"eta=0 closed form up to degree 6", eta0_oracle},
      {"Klein correspondence", klein},
      {"product multiplicativity", product},
      {"Gram degeneracy for Z_2 supertrace", gram_degeneracy},
      {"group invariant suite", group_invariants},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ["
              << std::fixed << std::setprecision(2) << seconds_since(start) << " s";
    if (o.samples) std::cout << ", " << o.samples << " samples";
    std::cout << "]";
    if (!o.detail.empty()) std::cout << " " << o.detail;
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
