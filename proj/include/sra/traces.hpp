#pragma once

// kappa-traces on H_{t,eta}(G): the ground level conditions on C[G], the
// reduction of sp(P(a) g) to group values, the eta = 0 closed form and Gram
// matrices of the induced bilinear forms.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sra/algebra.hpp"

namespace sra {

/// sum_i coeffs[i] * P_i over the free parameters P_i.
class TraceValue {
 public:
  TraceValue() = default;
  explicit TraceValue(int params) : coeffs_(params) {}
  static TraceValue parameter(int params, int i, int arity);

  int params() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<EtaPolynomial>& coeffs() const { return coeffs_; }
  const EtaPolynomial& coeff(int i) const { return coeffs_.at(i); }
  bool is_zero() const;

  /// Value under a concrete assignment of the free parameters.
  EtaPolynomial at(const std::vector<Cyclotomic>& assignment) const;
  TraceValue substitute(int var, const Cyclotomic& value) const;

  TraceValue& operator+=(const TraceValue& o);
  TraceValue& operator-=(const TraceValue& o);
  TraceValue& operator*=(const EtaPolynomial& c);
  friend TraceValue operator+(TraceValue a, const TraceValue& b) { return a += b; }
  friend TraceValue operator-(TraceValue a, const TraceValue& b) { return a -= b; }
  friend TraceValue operator*(TraceValue a, const EtaPolynomial& c) { return a *= c; }
  friend TraceValue operator*(const EtaPolynomial& c, TraceValue a) { return a *= c; }
  friend bool operator==(const TraceValue& a, const TraceValue& b);
  friend bool operator!=(const TraceValue& a, const TraceValue& b) { return !(a == b); }

 private:
  std::vector<EtaPolynomial> coeffs_;
};

class GlcInconsistent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A kappa-trace restricted to C[G]: one TraceValue per conjugacy class.
struct TraceFunctional {
  int kappa = 1;
  int arity = 0;
  std::vector<int> free_classes;
  std::vector<TraceValue> table;  // indexed by class id

  int params() const { return static_cast<int>(free_classes.size()); }
  const TraceValue& value_of_class(int c) const { return table.at(c); }
};

/// Solves the ground level conditions for kappa = +1 or -1 and verifies
/// every redundant equation. Throws GlcInconsistent if one is nonzero.
TraceFunctional solve_glc(const Algebra& algebra, int kappa);

/// The functional with every table entry zero.
TraceFunctional zero_functional(const Algebra& algebra, int kappa);

/// Tie-breaks of the reduction: which regular letter is split first, and
/// which Darboux pair drives the special step.
struct Strategy {
  enum class Letter { First, Last };
  enum class Pair { First, Last };
  Letter letter = Letter::First;
  Pair pair = Pair::First;
};

class TraceEvaluator {
 public:
  TraceEvaluator(const Algebra& algebra, TraceFunctional functional, Strategy strategy = {});
  ~TraceEvaluator();

  const TraceFunctional& functional() const { return functional_; }
  const Algebra& algebra() const { return algebra_; }
  int kappa() const { return functional_.kappa; }

  /// sp(f) for an element of the standard frame.
  TraceValue evaluate(const Element& f) const;
  TraceValue evaluate_terms(const Terms& t) const;
  /// sp(a^e g)
  TraceValue monomial(const Monomial& e, int g) const;

 private:
  struct Spectral;  // per-element projectors and Darboux basis
  const Spectral& spectral(int g) const;
  TraceValue reduce(const Monomial& e, int g) const;
  void special(std::vector<Vector> word, int g, Terms& out) const;
  void sorted(int p, std::vector<Vector> rest, std::size_t scan, const EtaPolynomial& weight, const Vector& ci,
              const Vector& cj, int g, Terms& out) const;

  const Algebra& algebra_;
  TraceFunctional functional_;
  Strategy strategy_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, Monomial>, TraceValue> memo_;
  mutable std::map<int, std::unique_ptr<Spectral>> spectral_;
};

/// Thrown when the eta = 0 form is requested for g with E_kappa(g) != 0.
class KappaEigenvaluePresent : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// omega~ = Omega^T (kappa + g)(kappa - g)^{-1}, symmetric.
Matrix eta0_form(const Group& group, int g, int kappa);

/// Exact value of sp(sym(a^e) g) / sp(g) in H_{1,0}(G), from the series of
/// exp(-1/4 mu^T omega~ mu); zero when E_kappa(g) != 0 or |e| is odd.
Cyclotomic eta0_trace(const Group& group, const Monomial& e, int g, int kappa);

/// The symmetrized monomial: the average of all orderings of a^e.
Element symmetrized(const Algebra& algebra, const Monomial& e);

/// Exponent vectors of the given total degree in `n` variables, ascending
/// in the graded lexicographic order.
std::vector<Monomial> monomials_of_degree(int n, int degree);

using PolyMatrix = std::vector<std::vector<EtaPolynomial>>;

struct GramReport {
  int kappa = 1;
  int cutoff = 0;
  std::vector<std::pair<Monomial, int>> basis;  // (a-monomial, class representative)
  std::vector<std::vector<TraceValue>> entries;
  std::vector<Cyclotomic> assignment;
  PolyMatrix matrix;  // entries under the assignment
  std::optional<EtaPolynomial> determinant;  // when the group has at most one eta
  std::vector<Rational> rational_roots;
};

GramReport gram(const TraceEvaluator& evaluator, int cutoff, std::vector<Cyclotomic> assignment = {});

/// Determinant of a matrix of polynomials in at most one eta variable, by
/// evaluation at integer points and Newton interpolation.
EtaPolynomial univariate_determinant(const PolyMatrix& m);

}  // namespace sra
