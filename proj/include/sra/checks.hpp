#pragma once

// Randomized and exhaustive checks of the structural identities: group
// invariants, kappa-trace cyclicity, G-invariance, confluence of the
// reduction, consistency with the ground level conditions, the eta = 0
// closed form and the Klein correspondence. Shared by the test suites and
// the selftest subcommand.

#include <random>
#include <string>

#include "sra/traces.hpp"

namespace sra {

using Rng = std::mt19937_64;

struct CheckReport {
  explicit CheckReport(std::string name, int samples = 0) : name(std::move(name)), samples(samples) {}

  std::string name;
  int samples = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
  void fail(const std::string& what);
};

/// A random homogeneous-parity element: a few terms c a^e g with small
/// rational c, optionally times an eta variable, and deg(e) <= max_degree.
Element random_element(const Algebra& algebra, Rng& rng, int max_degree, Parity parity);
Monomial random_monomial(int letters, Rng& rng, int max_degree, bool even_only);

/// Diagonalizability, root-of-unity spectrum, det 1, spectrum closed under
/// inversion, even multiplicity of +1 and -1, symplecticity.
CheckReport check_group_invariants(const Group& group);

/// T_G and S_G from the raw matrices: classes whose representative has no
/// eigenvalue +1, resp. -1, tested by invertibility of g - kappa.
Group::Counts brute_force_counts(const Group& group);

/// Free parameter count equals the number of E = 0 classes; solving also
/// verifies every redundant equation.
CheckReport check_glc_dimension(const Algebra& algebra, int kappa);

CheckReport check_cyclicity(const TraceEvaluator& sp, Rng& rng, int samples, int max_degree);
CheckReport check_g_invariance(const TraceEvaluator& sp, Rng& rng, int samples, int max_degree);
CheckReport check_linearity(const TraceEvaluator& sp, Rng& rng, int samples, int max_degree);
/// sp([c_I, c_J] g) = 0 for every element g and Darboux pair of Ker(g - kappa).
CheckReport check_glc_consistency(const TraceEvaluator& sp);
/// All four strategy combinations agree on random monomials.
CheckReport check_confluence(const Algebra& algebra, const TraceFunctional& sp, Rng& rng, int samples,
                             int max_degree);
/// The reduction at eta = 0 against the closed form, on every symmetrized
/// monomial of degree <= max_degree and every group element.
CheckReport check_eta0_oracle(const Algebra& algebra, const TraceEvaluator& sp, int max_degree);
/// f -> str(K f) is a trace. Requires -1 in G.
CheckReport check_klein(const TraceEvaluator& str, Rng& rng, int samples, int max_degree);

}  // namespace sra
