#include "sra/traces.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace sra {

// ---------------------------------------------------------------------------
// TraceValue

TraceValue TraceValue::parameter(int params, int i, int arity) {
  TraceValue v(params);
  v.coeffs_.at(i) = EtaPolynomial(arity, Cyclotomic(1));
  return v;
}

bool TraceValue::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const EtaPolynomial& c) { return c.is_zero(); });
}

EtaPolynomial TraceValue::at(const std::vector<Cyclotomic>& assignment) const {
  if (assignment.size() != coeffs_.size()) throw std::invalid_argument("one value per free parameter is required");
  EtaPolynomial out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!assignment[i].is_zero()) out += coeffs_[i] * assignment[i];
  return out;
}

TraceValue TraceValue::substitute(int var, const Cyclotomic& value) const {
  TraceValue out = *this;
  for (auto& c : out.coeffs_)
    if (!c.is_constant()) c = c.substitute(var, value);
  return out;
}

TraceValue& TraceValue::operator+=(const TraceValue& o) {
  if (coeffs_.empty()) coeffs_.resize(o.coeffs_.size());
  if (o.coeffs_.empty()) return *this;
  if (o.coeffs_.size() != coeffs_.size()) throw std::invalid_argument("trace values over different parameters");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TraceValue& TraceValue::operator-=(const TraceValue& o) {
  TraceValue neg = o;
  neg *= EtaPolynomial(-1);
  return *this += neg;
}

TraceValue& TraceValue::operator*=(const EtaPolynomial& c) {
  for (auto& x : coeffs_) x = x * c;
  return *this;
}

bool operator==(const TraceValue& a, const TraceValue& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.coeffs_ == b.coeffs_;
}

// ---------------------------------------------------------------------------
// Ground level conditions

namespace {

std::vector<Vector> darboux_or_throw(const Group& G, int g, int kappa) {
  try {
    return darboux_basis(G.e_grading(g, kappa).eigenspace, G.omega());
  } catch (const DegenerateRestriction& e) {
    throw DegenerateRestriction(std::string(e.what()) + " (group " + G.name() + ", element " + std::to_string(g) +
                                ", kappa " + std::to_string(kappa) + ")");
  }
}

Cyclotomic kappa_scalar(int kappa) { return Cyclotomic(kappa); }

void check_kappa(int kappa) {
  if (kappa != 1 && kappa != -1) throw std::invalid_argument("kappa must be +1 or -1");
}

}  // namespace

TraceFunctional zero_functional(const Algebra& algebra, int kappa) {
  check_kappa(kappa);
  const Group& G = algebra.group();
  TraceFunctional f;
  f.kappa = kappa;
  f.arity = G.eta_count();
  for (std::size_t c = 0; c < G.classes().size(); ++c)
    if (G.e_grading(G.classes()[c].representative, kappa).E == 0) f.free_classes.push_back(static_cast<int>(c));
  f.table.assign(G.classes().size(), TraceValue(f.params()));
  return f;
}

TraceFunctional solve_glc(const Algebra& algebra, int kappa) {
  TraceFunctional f = zero_functional(algebra, kappa);
  const Group& G = algebra.group();
  const Frame& frame = *algebra.standard();
  const Cyclotomic t = algebra.params().t;
  if (t.is_zero()) throw std::domain_error("the ground level conditions need t != 0");
  const int nclasses = static_cast<int>(G.classes().size());

  std::vector<bool> known(nclasses, false);
  for (int i = 0; i < f.params(); ++i) {
    f.table[f.free_classes[i]] = TraceValue::parameter(f.params(), i, f.arity);
    known[f.free_classes[i]] = true;
  }

  std::vector<int> order(nclasses);
  std::iota(order.begin(), order.end(), 0);
  auto grade = [&](int c) { return G.e_grading(G.classes()[c].representative, kappa).E; };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return grade(a) < grade(b); });

  // sum_R eta_R omega_R(x, y) sp(R g)
  auto reflection_part = [&](const Vector& x, const Vector& y, int g) {
    TraceValue acc(f.params());
    for (const auto& [r, poly] : frame.reflection_bracket(x, y)) {
      int c = G.class_of(G.multiply(r, g));
      if (!known[c]) throw std::logic_error("ground level recursion reached an unsolved class");
      acc += f.table[c] * poly.begin()->second;
    }
    return acc;
  };

  for (int c : order) {
    if (known[c]) continue;
    int g = G.classes()[c].representative;
    auto basis = darboux_or_throw(G, g, kappa);
    const Vector &c1 = basis[0], &c2 = basis[1];
    Cyclotomic w = bilinear(c1, G.omega(), c2);
    f.table[c] = reflection_part(c1, c2, g) * EtaPolynomial(-(t * w).inverse());
    known[c] = true;
  }

  for (int g = 0; g < G.size(); ++g) {
    if (G.e_grading(g, kappa).E == 0) continue;
    auto basis = darboux_or_throw(G, g, kappa);
    const TraceValue& own = f.table[G.class_of(g)];
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        Cyclotomic w = t * bilinear(basis[i], G.omega(), basis[j]);
        TraceValue residual = reflection_part(basis[i], basis[j], g);
        if (!w.is_zero()) residual += own * EtaPolynomial(w);
        if (!residual.is_zero())
          throw GlcInconsistent("ground level condition (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") fails at element " + std::to_string(g) + " of " + G.name());
      }
  }
  return f;
}

// ---------------------------------------------------------------------------
// Evaluator

struct TraceEvaluator::Spectral {
  struct Part {
    Matrix projector;
    Cyclotomic factor;  // kappa lambda / (1 - kappa lambda)
  };
  std::vector<Part> regular;
  std::optional<Matrix> kappa_projector;
  std::vector<Vector> darboux;
};

TraceEvaluator::TraceEvaluator(const Algebra& algebra, TraceFunctional functional, Strategy strategy)
    : algebra_(algebra), functional_(std::move(functional)), strategy_(strategy) {
  check_kappa(functional_.kappa);
  if (functional_.table.size() != algebra_.group().classes().size())
    throw std::invalid_argument("functional does not match the group");
}

TraceEvaluator::~TraceEvaluator() = default;

const TraceEvaluator::Spectral& TraceEvaluator::spectral(int g) const {
  {
    std::lock_guard lock(mutex_);
    auto it = spectral_.find(g);
    if (it != spectral_.end()) return *it->second;
  }
  const Group& G = algebra_.group();
  const Chart& chart = algebra_.chart(g);
  const Matrix& basis = chart.frame->basis();
  const Matrix& inverse = chart.frame->basis_inverse();
  const Index n = basis.rows();
  auto s = std::make_unique<Spectral>();
  const Cyclotomic kappa_value = kappa_scalar(kappa());
  for (const auto& e : G.eigenspaces(g)) {
    Matrix select = Matrix::Constant(n, n, Cyclotomic());
    for (Index k = 0; k < n; ++k)
      if (chart.lambdas[k] == e.lambda) select(k, k) = Cyclotomic(1);
    Matrix projector = multiply(multiply(basis, select), inverse);
    if (e.lambda == kappa_value) {
      s->kappa_projector = std::move(projector);
    } else {
      Cyclotomic kl = kappa_value * e.lambda;
      s->regular.push_back({std::move(projector), kl * (Cyclotomic(1) - kl).inverse()});
    }
  }
  if (G.e_grading(g, kappa()).E > 0) s->darboux = darboux_or_throw(G, g, kappa());
  std::lock_guard lock(mutex_);
  auto [it, inserted] = spectral_.emplace(g, std::move(s));
  return *it->second;
}

namespace {

// left * middle * right * g as a normal-form element of the standard frame.
Terms word_element(const Frame& frame, const std::vector<Vector>& left, const Terms& middle,
                   const std::vector<Vector>& right, int g) {
  Terms x;
  add_term(x, g, frame.one(), EtaPolynomial(frame.arity(), Cyclotomic(1)));
  for (auto it = right.rbegin(); it != right.rend(); ++it) x = frame.left_multiply(*it, x);
  x = frame.multiply(middle, x);
  for (auto it = left.rbegin(); it != left.rend(); ++it) x = frame.left_multiply(*it, x);
  return x;
}

std::vector<Vector> slice(const std::vector<Vector>& w, std::size_t from, std::size_t to) {
  return std::vector<Vector>(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to));
}

std::vector<Vector> concat(std::vector<Vector> a, const std::vector<Vector>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

TraceValue TraceEvaluator::evaluate(const Element& f) const {
  if (f.frame_ptr() != algebra_.standard()) throw std::invalid_argument("element is not in this algebra's standard frame");
  return evaluate_terms(f.terms());
}

TraceValue TraceEvaluator::evaluate_terms(const Terms& t) const {
  TraceValue acc(functional_.params());
  for (const auto& [g, poly] : t)
    for (const auto& [m, c] : poly)
      if (degree(m) % 2 == 0) acc += monomial(m, g) * c;
  return acc;
}

TraceValue TraceEvaluator::monomial(const Monomial& e, int g) const {
  const int d = degree(e);
  if (d % 2 != 0) return TraceValue(functional_.params());
  if (d == 0) return functional_.table.at(algebra_.group().class_of(g));
  auto key = std::make_pair(g, e);
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  TraceValue v = reduce(e, g);
  std::lock_guard lock(mutex_);
  return memo_.emplace(std::move(key), std::move(v)).first->second;
}

TraceValue TraceEvaluator::reduce(const Monomial& e, int g) const {
  const Frame& frame = *algebra_.standard();
  const Index n = frame.letters();
  std::vector<Vector> word;
  for (Index i = 0; i < n; ++i)
    for (int k = 0; k < e[i]; ++k) {
      Vector v = Vector::Constant(n, Cyclotomic());
      v(i) = Cyclotomic(1);
      word.push_back(std::move(v));
    }
  const std::size_t len = word.size();
  const Spectral& sp = spectral(g);
  Terms out;
  for (std::size_t step = 0; step < len; ++step) {
    std::size_t s = strategy_.letter == Strategy::Letter::First ? step : len - 1 - step;
    const Vector x = word[s];
    // regular part: sp(W g) = sum_t (c + [t < s]) sp(X_<t [X_t, b] X_>t g), X = W without letter s
    for (const auto& part : sp.regular) {
      Vector b = apply(part.projector, x);
      if (is_zero(b)) continue;
      std::vector<Vector> rest = word;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(s));
      for (std::size_t t = 0; t < rest.size(); ++t) {
        Cyclotomic coeff = part.factor + Cyclotomic(t < s ? 1 : 0);
        if (coeff.is_zero()) continue;
        Terms corr = word_element(frame, slice(rest, 0, t), frame.bracket(rest[t], b), slice(rest, t + 1, rest.size()), g);
        add_scaled(out, corr, EtaPolynomial(frame.arity(), coeff));
      }
    }
    if (!sp.kappa_projector) return evaluate_terms(out);
    word[s] = apply(*sp.kappa_projector, x);
    if (is_zero(word[s])) return evaluate_terms(out);
  }
  special(std::move(word), g, out);
  return evaluate_terms(out);
}

void TraceEvaluator::special(std::vector<Vector> word, int g, Terms& out) const {
  const Spectral& sp = spectral(g);
  const Matrix& omega = algebra_.group().omega();
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i + 1 < sp.darboux.size(); i += 2) {
    bool touched = std::any_of(word.begin(), word.end(), [&](const Vector& x) {
      return !bilinear(x, omega, sp.darboux[i]).is_zero() || !bilinear(x, omega, sp.darboux[i + 1]).is_zero();
    });
    if (touched) candidates.push_back(i);
  }
  if (candidates.empty()) return;  // every letter vanishes
  std::size_t i = strategy_.pair == Strategy::Pair::First ? candidates.front() : candidates.back();
  sorted(0, std::move(word), 0, EtaPolynomial(algebra_.group().eta_count(), Cyclotomic(1)), sp.darboux[i],
         sp.darboux[i + 1], g, out);
}

// sp(c_I^p rest g) with letters of rest before `scan` free of c_I. Each
// letter x = alpha c_I + x' with alpha = omega(x, c_J) is split and its c_I
// part moved to the front; once no letter has a c_I part, the pairing with
// c_J expresses the value through elements of lower E.
void TraceEvaluator::sorted(int p, std::vector<Vector> rest, std::size_t scan, const EtaPolynomial& weight,
                            const Vector& ci, const Vector& cj, int g, Terms& out) const {
  const Frame& frame = *algebra_.standard();
  const Matrix& omega = algebra_.group().omega();
  std::size_t s = scan;
  Cyclotomic alpha;
  for (; s < rest.size(); ++s) {
    alpha = bilinear(rest[s], omega, cj);
    if (!alpha.is_zero()) break;
  }
  const std::vector<Vector> prefix(p, ci);
  if (s == rest.size()) {
    // t (p+1) sp(c_I^p rest g) = -sum_pos sp(Z_<pos f(Z_pos, c_J) Z_>pos g), Z = c_I^{p+1} rest
    std::vector<Vector> z = concat(std::vector<Vector>(p + 1, ci), rest);
    EtaPolynomial coeff = weight * EtaPolynomial(-(algebra_.params().t * Cyclotomic(p + 1)).inverse());
    for (std::size_t pos = 0; pos < z.size(); ++pos) {
      Terms f = frame.reflection_bracket(z[pos], cj);
      if (f.empty()) continue;
      add_scaled(out, word_element(frame, slice(z, 0, pos), f, slice(z, pos + 1, z.size()), g), coeff);
    }
    return;
  }
  EtaPolynomial alpha_weight = weight * EtaPolynomial(alpha);
  // c_I part: u c_I v = c_I u v + sum_{t<s} u_<t [u_t, c_I] u_>t v
  std::vector<Vector> u = slice(rest, 0, s), v = slice(rest, s + 1, rest.size());
  for (std::size_t t = 0; t < s; ++t) {
    Terms corr = word_element(frame, concat(prefix, slice(u, 0, t)), frame.bracket(u[t], ci),
                              concat(slice(u, t + 1, u.size()), v), g);
    add_scaled(out, corr, alpha_weight);
  }
  sorted(p + 1, concat(u, v), s, alpha_weight, ci, cj, g, out);
  // remainder x' = x - alpha c_I
  Vector x = rest[s];
  for (Index k = 0; k < x.size(); ++k) x(k) -= alpha * ci(k);
  if (is_zero(x)) return;
  rest[s] = std::move(x);
  sorted(p, std::move(rest), s + 1, weight, ci, cj, g, out);
}

// ---------------------------------------------------------------------------
// eta = 0

Matrix eta0_form(const Group& G, int g, int kappa) {
  check_kappa(kappa);
  if (G.e_grading(g, kappa).E != 0)
    throw KappaEigenvaluePresent("element " + std::to_string(g) + " has eigenvalue " + std::to_string(kappa));
  const Index n = G.dim();
  Matrix plus = G.matrix(g), minus = -G.matrix(g);
  for (Index i = 0; i < n; ++i) {
    plus(i, i) += Cyclotomic(kappa);
    minus(i, i) += Cyclotomic(kappa);
  }
  auto inv = inverse(minus);
  if (!inv) throw std::logic_error("kappa - g is singular although E = 0");
  return multiply(Matrix(G.omega().transpose()), multiply(plus, *inv));
}

namespace {

using Series = std::map<Monomial, Cyclotomic>;

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Rational factorial(int n) {
  Integer f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return Rational(f);
}

}  // namespace

Cyclotomic eta0_trace(const Group& G, const Monomial& e, int g, int kappa) {
  check_kappa(kappa);
  const int d = degree(e);
  if (d % 2 != 0 || G.e_grading(g, kappa).E != 0) return Cyclotomic();
  const int n = G.dim();
  if (d == 0) return Cyclotomic(1);
  Matrix w = eta0_form(G, g, kappa);
  // quadratic form -1/4 mu^T w mu, truncated to monomials dividing e
  Series quad;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (w(i, j).is_zero()) continue;
      Monomial m(n, 0);
      ++m[i];
      ++m[j];
      if (!divides(m, e)) continue;
      quad[m] += w(i, j) * Cyclotomic(Rational(-1, 4));
    }
  Series power{{Monomial(n, 0), Cyclotomic(1)}};
  for (int k = 0; k < d / 2; ++k) {
    Series next;
    for (const auto& [a, ca] : power)
      for (const auto& [b, cb] : quad) {
        Monomial m(n);
        for (int i = 0; i < n; ++i) m[i] = a[i] + b[i];
        if (divides(m, e)) next[m] += ca * cb;
      }
    power = std::move(next);
  }
  auto it = power.find(e);
  if (it == power.end()) return Cyclotomic();
  Rational scale = 1 / factorial(d / 2);
  for (int x : e) scale *= factorial(x);
  return it->second * Cyclotomic(scale);
}

Element symmetrized(const Algebra& algebra, const Monomial& e) {
  // W(e) = sum_i a_i W(e - delta_i) is the sum over all distinct orderings
  std::map<Monomial, Element> words;
  const int n = static_cast<int>(e.size());
  std::function<Element(const Monomial&)> w = [&](const Monomial& m) -> Element {
    auto it = words.find(m);
    if (it != words.end()) return it->second;
    Element acc = degree(m) == 0 ? algebra.scalar(EtaPolynomial(1)) : algebra.zero();
    for (int i = 0; i < n; ++i) {
      if (m[i] == 0) continue;
      Monomial r = m;
      --r[i];
      acc += algebra.generator(i) * w(r);
    }
    return words.emplace(m, std::move(acc)).first->second;
  };
  Rational scale = 1 / factorial(degree(e));
  for (int x : e) scale *= factorial(x);
  return w(e) * EtaPolynomial(Cyclotomic(scale));
}

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  Monomial m(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      m[i] = left;
      out.push_back(m);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      m[i] = k;
      rec(i + 1, left - k);
    }
  };
  if (n == 0) return d == 0 ? std::vector<Monomial>{Monomial{}} : out;
  rec(0, d);
  std::sort(out.begin(), out.end(), GrLex());
  return out;
}

// ---------------------------------------------------------------------------
// Gram matrices

EtaPolynomial univariate_determinant(const PolyMatrix& m) {
  const std::size_t size = m.size();
  if (size == 0) return EtaPolynomial(1);
  int arity = 0;
  for (const auto& row : m)
    for (const auto& x : row) arity = std::max(arity, x.arity());
  if (arity > 1) throw std::invalid_argument("determinant needs at most one eta variable");
  int bound = 0;
  for (const auto& row : m) {
    int d = 0;
    for (const auto& x : row) d = std::max(d, x.is_zero() ? 0 : (x.arity() == 0 ? 0 : x.degree_in(0)));
    bound += d;
  }
  std::vector<Cyclotomic> xs, ys;
  for (int k = 0; k <= bound; ++k) {
    Cyclotomic x(k);
    Matrix numeric(size, size);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) {
        const EtaPolynomial& p = m[i][j];
        numeric(i, j) = p.arity() == 0 ? p.constant_term() : p.evaluate(std::span<const Cyclotomic>(&x, 1));
      }
    xs.push_back(x);
    ys.push_back(determinant(numeric));
  }
  // Newton divided differences
  std::vector<Cyclotomic> coef = ys;
  for (std::size_t level = 1; level < coef.size(); ++level)
    for (std::size_t i = coef.size() - 1; i >= level; --i)
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level]);
  const int a = std::max(arity, 1);
  EtaPolynomial eta = EtaPolynomial::variable(a, 0);
  EtaPolynomial result(a, Cyclotomic());
  for (std::size_t i = coef.size(); i-- > 0;) {
    result = result * (eta - EtaPolynomial(a, xs[i])) + EtaPolynomial(a, coef[i]);
  }
  return arity == 0 ? EtaPolynomial(result.constant_term()) : result;
}

GramReport gram(const TraceEvaluator& evaluator, int cutoff, std::vector<Cyclotomic> assignment) {
  if (cutoff < 0) throw std::invalid_argument("degree cutoff must be nonnegative");
  const Algebra& algebra = evaluator.algebra();
  const Group& G = algebra.group();
  const TraceFunctional& f = evaluator.functional();
  GramReport r;
  r.kappa = f.kappa;
  r.cutoff = cutoff;
  if (assignment.empty()) {
    assignment.assign(f.params(), Cyclotomic());
    if (!assignment.empty()) assignment[0] = Cyclotomic(1);
  }
  if (static_cast<int>(assignment.size()) != f.params())
    throw std::invalid_argument("assignment needs one value per free parameter");
  r.assignment = assignment;

  std::vector<Element> elements;
  for (int d = 0; d <= cutoff; d += 2)
    for (const auto& m : monomials_of_degree(G.dim(), d))
      for (const auto& cls : G.classes()) {
        r.basis.emplace_back(m, cls.representative);
        Element mono = algebra.scalar(EtaPolynomial(1));
        for (int i = G.dim(); i-- > 0;)
          for (int k = 0; k < m[i]; ++k) mono = algebra.generator(i) * mono;
        elements.push_back(mono * algebra.element(cls.representative));
      }
  const std::size_t size = elements.size();
  r.entries.assign(size, std::vector<TraceValue>(size));
  r.matrix.assign(size, std::vector<EtaPolynomial>(size));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      r.entries[i][j] = evaluator.evaluate(elements[i] * elements[j]);
      r.matrix[i][j] = r.entries[i][j].at(assignment);
    }
  if (G.eta_count() <= 1) {
    r.determinant = univariate_determinant(r.matrix);
    if (G.eta_count() == 1 && !r.determinant->is_zero()) {
      bool rational = std::all_of(r.determinant->terms().begin(), r.determinant->terms().end(),
                                  [](const auto& t) { return t.second.is_rational(); });
      if (rational && !r.determinant->is_constant()) r.rational_roots = r.determinant->rational_roots();
    }
  }
  return r;
}

}  // namespace sra
