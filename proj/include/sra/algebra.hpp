#pragma once

// Normal-form arithmetic in H_{t,eta}(G). An element is a sum of terms
// P(b) g with all generators to the left of the group element; P is an
// ordered polynomial in the letters b_1 < ... < b_2N of a frame. The
// standard frame uses b_i = a_i; eigenbasis charts use eigenvectors of one
// group element as letters.

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "sra/group.hpp"

namespace sra {

using Monomial = std::vector<int>;  // exponents of b_1 .. b_2N

/// Graded lexicographic order: total degree first, then lexicographic on
/// the exponent vector.
struct GrLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

int degree(const Monomial& m);

using Polynomial = std::map<Monomial, EtaPolynomial, GrLex>;
using Terms = std::map<int, Polynomial>;  // group element id -> P

void add_term(Terms& out, int g, const Monomial& m, const EtaPolynomial& c);
void add_scaled(Terms& out, const Terms& in, const EtaPolynomial& c);

struct AlgebraParams {
  Cyclotomic t = Cyclotomic(1);
  /// Value of eta_k for each reflection class k; a variable when symbolic.
  std::vector<EtaPolynomial> eta;
};

/// t = 1 and every eta_k symbolic.
AlgebraParams symbolic_params(const Group& group);

/// A choice of generators b_j = sum_i basis(i, j) a_i together with the
/// relations rewritten in it and the memoized rewriting tables.
class Frame {
 public:
  Frame(std::shared_ptr<const Group> group, AlgebraParams params, Matrix basis);

  const Group& group() const { return *group_; }
  const std::shared_ptr<const Group>& group_ptr() const { return group_; }
  const AlgebraParams& params() const { return params_; }
  int arity() const { return static_cast<int>(params_.eta.size()); }
  int letters() const { return static_cast<int>(basis_.cols()); }
  const Matrix& basis() const { return basis_; }
  const Matrix& basis_inverse() const { return inverse_; }
  bool is_standard() const { return standard_; }

  /// omega(b_i, b_j)
  const Matrix& form() const { return form_; }
  /// Matrix of g on the letters: g(b_j) = sum_k action(g)(k, j) b_k.
  const Matrix& action(int g) const;

  struct ReflectionTerm {
    int element;
    EtaPolynomial eta;
    Matrix form;  // omega_R(b_i, b_j)
  };
  const std::vector<ReflectionTerm>& reflection_terms() const { return reflections_; }

  /// [x, y] for vectors in letter coordinates: t omega(x,y) + sum_R eta_R omega_R(x,y) R.
  Terms bracket(const Vector& x, const Vector& y) const;
  /// The reflection part of the bracket only.
  Terms reflection_bracket(const Vector& x, const Vector& y) const;

  /// b_i * b^e in normal form.
  const Terms& gen_times_monomial(int i, const Monomial& e) const;
  /// g(b^e): the automorphism g applied to b^e, in normal form.
  const Terms& image(int g, const Monomial& e) const;

  Terms left_multiply(int i, const Terms& x) const;
  Terms left_multiply(const Vector& v, const Terms& x) const;
  Terms multiply(const Terms& f, const Terms& h) const;

  Monomial unit(int i) const;
  Monomial one() const { return Monomial(letters(), 0); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<int, Monomial>& k) const;
  };
  using Memo = std::unordered_map<std::pair<int, Monomial>, Terms, KeyHash>;

  std::shared_ptr<const Group> group_;
  AlgebraParams params_;
  Matrix basis_, inverse_, form_;
  bool standard_ = false;
  std::vector<ReflectionTerm> reflections_;

  mutable std::mutex mutex_;
  mutable Memo products_, images_;
  mutable std::vector<std::unique_ptr<Matrix>> actions_;
};

enum class Parity { Even, Odd, Mixed };

class Element {
 public:
  explicit Element(std::shared_ptr<const Frame> frame);
  Element(std::shared_ptr<const Frame> frame, Terms terms);

  static Element scalar(std::shared_ptr<const Frame> frame, const EtaPolynomial& c);
  static Element letter(std::shared_ptr<const Frame> frame, int i);
  static Element vector(std::shared_ptr<const Frame> frame, const Vector& v);
  static Element group_element(std::shared_ptr<const Frame> frame, int g);

  const Frame& frame() const { return *frame_; }
  const std::shared_ptr<const Frame>& frame_ptr() const { return frame_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int max_degree() const;

  Parity parity() const;
  /// The single group term P g of this element (zero when absent).
  Element restrict_to(int g) const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const EtaPolynomial& c);
  Element operator-() const;

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(Element a, const EtaPolynomial& c) { return a *= c; }
  friend Element operator*(const EtaPolynomial& c, Element a) { return a *= c; }
  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

 private:
  void check_frame(const Element& o) const;

  std::shared_ptr<const Frame> frame_;
  Terms terms_;
};

class ParityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// [f, h]_kappa = f h - kappa^{pi(f) pi(h)} h f; throws ParityError for
/// elements of mixed parity.
Element kappa_commutator(const Element& f, const Element& h, int kappa);

/// Rewrites f in the letters of another frame over the same group.
Element change_frame(const Element& f, std::shared_ptr<const Frame> target);

/// Eigenbasis chart of one group element: letters are the concatenated
/// eigenbases in ascending eigenvalue exponent.
struct Chart {
  std::shared_ptr<const Frame> frame;
  std::vector<int> exponents;        // lambda_I = zeta_m^{exponents[I]}
  std::vector<Cyclotomic> lambdas;
};

/// The algebra H_{t,eta}(G): owns the standard frame and memoized charts.
class Algebra {
 public:
  Algebra(std::shared_ptr<const Group> group, AlgebraParams params);
  explicit Algebra(std::shared_ptr<const Group> group);

  const Group& group() const { return *group_; }
  const std::shared_ptr<const Group>& group_ptr() const { return group_; }
  const AlgebraParams& params() const { return standard_->params(); }
  const std::shared_ptr<const Frame>& standard() const { return standard_; }

  const Chart& chart(int g) const;

  Element zero() const { return Element(standard_); }
  Element scalar(const EtaPolynomial& c) const { return Element::scalar(standard_, c); }
  Element generator(int i) const { return Element::letter(standard_, i); }
  Element element(int g) const { return Element::group_element(standard_, g); }
  Element vector(const Vector& v) const { return Element::vector(standard_, v); }
  EtaPolynomial eta(int k) const { return params().eta.at(k); }

  /// The term of f at g rewritten in the eigenbasis chart of g.
  Element to_eigenbasis(const Element& f, int g) const;
  Element from_eigenbasis(const Element& f) const { return change_frame(f, standard_); }

 private:
  std::shared_ptr<const Group> group_;
  std::shared_ptr<const Frame> standard_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<int, std::unique_ptr<Chart>> charts_;
};

}  // namespace sra
