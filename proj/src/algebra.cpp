#include "sra/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace sra {

bool GrLex::operator()(const Monomial& a, const Monomial& b) const {
  int da = degree(a), db = degree(b);
  if (da != db) return da < db;
  return a < b;
}

int degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

void add_term(Terms& out, int g, const Monomial& m, const EtaPolynomial& c) {
  if (c.is_zero()) return;
  auto& poly = out[g];
  auto [it, inserted] = poly.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) poly.erase(it);
  }
  if (poly.empty()) out.erase(g);
}

void add_scaled(Terms& out, const Terms& in, const EtaPolynomial& c) {
  if (c.is_zero()) return;
  for (const auto& [g, poly] : in)
    for (const auto& [m, x] : poly) add_term(out, g, m, x * c);
}

AlgebraParams symbolic_params(const Group& group) {
  AlgebraParams p;
  for (int k = 0; k < group.eta_count(); ++k) p.eta.push_back(EtaPolynomial::variable(group.eta_count(), k));
  return p;
}

// ---------------------------------------------------------------------------
// Frame

Frame::Frame(std::shared_ptr<const Group> group, AlgebraParams params, Matrix basis)
    : group_(std::move(group)), params_(std::move(params)), basis_(std::move(basis)) {
  const Group& G = *group_;
  if (basis_.rows() != G.dim() || basis_.cols() != G.dim())
    throw std::invalid_argument("frame basis has the wrong shape");
  if (static_cast<int>(params_.eta.size()) != G.eta_count())
    throw std::invalid_argument("one eta value per reflection class is required");
  auto inv = sra::inverse(basis_);
  if (!inv) throw std::invalid_argument("frame basis is singular");
  inverse_ = std::move(*inv);
  standard_ = basis_ == Matrix(Matrix::Identity(G.dim(), G.dim()));
  Matrix bt = basis_.transpose();
  form_ = sra::multiply(sra::multiply(bt, G.omega()), basis_);
  for (int r : G.reflections()) {
    const EtaPolynomial& eta = params_.eta.at(G.eta_index_of(r));
    if (eta.is_zero()) continue;
    reflections_.push_back({r, eta, sra::multiply(sra::multiply(bt, G.reflection(r).form), basis_)});
  }
  actions_.resize(G.size());
}

std::size_t Frame::KeyHash::operator()(const std::pair<int, Monomial>& k) const {
  std::size_t h = std::hash<int>()(k.first);
  for (int e : k.second) h = h * 1000003u ^ std::hash<int>()(e);
  return h;
}

const Matrix& Frame::action(int g) const {
  if (standard_) return group_->matrix(g);
  std::lock_guard lock(mutex_);
  auto& slot = actions_.at(g);
  if (!slot) slot = std::make_unique<Matrix>(sra::multiply(sra::multiply(inverse_, group_->matrix(g)), basis_));
  return *slot;
}

Monomial Frame::unit(int i) const {
  Monomial m(letters(), 0);
  m.at(i) = 1;
  return m;
}

Terms Frame::reflection_bracket(const Vector& x, const Vector& y) const {
  Terms out;
  for (const auto& r : reflections_) {
    Cyclotomic c = bilinear(x, r.form, y);
    if (!c.is_zero()) add_term(out, r.element, one(), r.eta * c);
  }
  return out;
}

Terms Frame::bracket(const Vector& x, const Vector& y) const {
  Terms out = reflection_bracket(x, y);
  Cyclotomic w = params_.t * bilinear(x, form_, y);
  add_term(out, group_->identity(), one(), EtaPolynomial(arity(), w));
  return out;
}

const Terms& Frame::gen_times_monomial(int i, const Monomial& e) const {
  auto key = std::make_pair(i, e);
  {
    std::lock_guard lock(mutex_);
    auto it = products_.find(key);
    if (it != products_.end()) return it->second;
  }
  const int n = letters();
  int j = 0;
  while (j < n && e[j] == 0) ++j;
  Terms out;
  if (i <= j) {
    Monomial m = e;
    ++m[i];
    add_term(out, group_->identity(), m, EtaPolynomial(arity(), Cyclotomic(1)));
    std::lock_guard lock(mutex_);
    return products_.emplace(std::move(key), std::move(out)).first->second;
  }
  // b_i b_j rest = b_j (b_i rest) + [b_i, b_j] rest
  Monomial rest = e;
  --rest[j];
  out = left_multiply(j, gen_times_monomial(i, rest));
  Cyclotomic w = params_.t * form_(i, j);
  if (!w.is_zero()) add_term(out, group_->identity(), rest, EtaPolynomial(arity(), w));
  for (const auto& r : reflections_) {
    const Cyclotomic& c = r.form(i, j);
    if (c.is_zero()) continue;
    EtaPolynomial coeff = r.eta * c;
    // R rest = R(rest) R
    for (const auto& [h, poly] : image(r.element, rest)) {
      int hr = group_->multiply(h, r.element);
      for (const auto& [m, x] : poly) add_term(out, hr, m, x * coeff);
    }
  }
  std::lock_guard lock(mutex_);
  return products_.emplace(std::move(key), std::move(out)).first->second;
}

const Terms& Frame::image(int g, const Monomial& e) const {
  auto key = std::make_pair(g, e);
  {
    std::lock_guard lock(mutex_);
    auto it = images_.find(key);
    if (it != images_.end()) return it->second;
  }
  Terms out;
  if (g == group_->identity() || degree(e) == 0) {
    add_term(out, group_->identity(), e, EtaPolynomial(arity(), Cyclotomic(1)));
  } else {
    int j = 0;
    while (e[j] == 0) ++j;
    Monomial rest = e;
    --rest[j];
    Vector column = action(g).col(j);
    out = left_multiply(column, image(g, rest));
  }
  std::lock_guard lock(mutex_);
  return images_.emplace(std::move(key), std::move(out)).first->second;
}

Terms Frame::left_multiply(int i, const Terms& x) const {
  Terms out;
  for (const auto& [h, poly] : x)
    for (const auto& [m, c] : poly)
      for (const auto& [h2, q] : gen_times_monomial(i, m)) {
        int g = group_->multiply(h2, h);
        for (const auto& [m2, c2] : q) add_term(out, g, m2, c2 * c);
      }
  return out;
}

Terms Frame::left_multiply(const Vector& v, const Terms& x) const {
  Terms out;
  for (Index k = 0; k < v.size(); ++k) {
    if (v(k).is_zero()) continue;
    add_scaled(out, left_multiply(static_cast<int>(k), x), EtaPolynomial(arity(), v(k)));
  }
  return out;
}

Terms Frame::multiply(const Terms& f, const Terms& h) const {
  Terms out;
  for (const auto& [g1, p1] : f) {
    // g1 * (Q g2) = g1(Q) g1 g2
    Terms moved;
    for (const auto& [g2, p2] : h) {
      int g12 = group_->multiply(g1, g2);
      for (const auto& [m, c] : p2)
        for (const auto& [h2, q] : image(g1, m)) {
          int g = group_->multiply(h2, g12);
          for (const auto& [m2, c2] : q) add_term(moved, g, m2, c2 * c);
        }
    }
    for (const auto& [m1, c1] : p1) {
      Terms x = moved;
      for (int i = letters(); i-- > 0;)
        for (int k = 0; k < m1[i]; ++k) x = left_multiply(i, x);
      add_scaled(out, x, c1);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Element

Element::Element(std::shared_ptr<const Frame> frame) : frame_(std::move(frame)) {}

Element::Element(std::shared_ptr<const Frame> frame, Terms terms)
    : frame_(std::move(frame)), terms_(std::move(terms)) {}

Element Element::scalar(std::shared_ptr<const Frame> frame, const EtaPolynomial& c) {
  Terms t;
  add_term(t, frame->group().identity(), frame->one(), c.with_arity(c.is_constant() ? frame->arity() : c.arity()));
  return Element(std::move(frame), std::move(t));
}

Element Element::letter(std::shared_ptr<const Frame> frame, int i) {
  if (i < 0 || i >= frame->letters()) throw std::out_of_range("generator index out of range");
  Terms t;
  add_term(t, frame->group().identity(), frame->unit(i), EtaPolynomial(frame->arity(), Cyclotomic(1)));
  return Element(std::move(frame), std::move(t));
}

Element Element::vector(std::shared_ptr<const Frame> frame, const Vector& v) {
  Terms t;
  for (Index k = 0; k < v.size(); ++k)
    add_term(t, frame->group().identity(), frame->unit(static_cast<int>(k)), EtaPolynomial(frame->arity(), v(k)));
  return Element(std::move(frame), std::move(t));
}

Element Element::group_element(std::shared_ptr<const Frame> frame, int g) {
  if (g < 0 || g >= frame->group().size()) throw std::out_of_range("group element out of range");
  Terms t;
  add_term(t, g, frame->one(), EtaPolynomial(frame->arity(), Cyclotomic(1)));
  return Element(std::move(frame), std::move(t));
}

int Element::max_degree() const {
  int d = -1;
  for (const auto& [g, poly] : terms_)
    if (!poly.empty()) d = std::max(d, degree(poly.rbegin()->first));
  return d;
}

Parity Element::parity() const {
  int seen = -1;
  for (const auto& [g, poly] : terms_)
    for (const auto& [m, c] : poly) {
      int p = degree(m) % 2;
      if (seen >= 0 && seen != p) return Parity::Mixed;
      seen = p;
    }
  return seen == 1 ? Parity::Odd : Parity::Even;
}

Element Element::restrict_to(int g) const {
  Terms t;
  auto it = terms_.find(g);
  if (it != terms_.end()) t.emplace(g, it->second);
  return Element(frame_, std::move(t));
}

void Element::check_frame(const Element& o) const {
  if (frame_ != o.frame_) throw std::invalid_argument("elements belong to different frames or algebras");
}

Element& Element::operator+=(const Element& o) {
  check_frame(o);
  for (const auto& [g, poly] : o.terms_)
    for (const auto& [m, c] : poly) add_term(terms_, g, m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) { return *this += -o; }

Element& Element::operator*=(const EtaPolynomial& c) {
  Terms t;
  add_scaled(t, terms_, c);
  terms_ = std::move(t);
  return *this;
}

Element Element::operator-() const {
  Element out = *this;
  for (auto& [g, poly] : out.terms_)
    for (auto& [m, c] : poly) c = -c;
  return out;
}

Element operator*(const Element& a, const Element& b) {
  a.check_frame(b);
  return Element(a.frame_, a.frame_->multiply(a.terms_, b.terms_));
}

bool operator==(const Element& a, const Element& b) {
  if (a.frame_ != b.frame_) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second.size() != ib->second.size()) return false;
    for (auto pa = ia->second.begin(), pb = ib->second.begin(); pa != ia->second.end(); ++pa, ++pb)
      if (pa->first != pb->first || pa->second != pb->second) return false;
  }
  return true;
}

Element kappa_commutator(const Element& f, const Element& h, int kappa) {
  Parity pf = f.parity(), ph = h.parity();
  if (pf == Parity::Mixed || ph == Parity::Mixed)
    throw ParityError("kappa-commutator needs elements of definite parity");
  int sign = (kappa == -1 && pf == Parity::Odd && ph == Parity::Odd) ? -1 : 1;
  return f * h - EtaPolynomial(Cyclotomic(sign)) * (h * f);
}

Element change_frame(const Element& f, std::shared_ptr<const Frame> target) {
  const Frame& src = f.frame();
  if (&src.group() != &target->group()) throw std::invalid_argument("frames over different groups");
  if (f.frame_ptr() == target) return f;
  // letter i of the source frame in target coordinates
  Matrix to_target = multiply(target->basis_inverse(), src.basis());
  Terms out;
  for (const auto& [g, poly] : f.terms()) {
    Terms start;
    add_term(start, g, target->one(), EtaPolynomial(target->arity(), Cyclotomic(1)));
    for (const auto& [m, c] : poly) {
      Terms x = start;
      for (int i = src.letters(); i-- > 0;)
        for (int k = 0; k < m[i]; ++k) x = target->left_multiply(Vector(to_target.col(i)), x);
      add_scaled(out, x, c);
    }
  }
  return Element(std::move(target), std::move(out));
}

// ---------------------------------------------------------------------------
// Algebra

Algebra::Algebra(std::shared_ptr<const Group> group, AlgebraParams params) : group_(std::move(group)) {
  standard_ = std::make_shared<const Frame>(group_, std::move(params),
                                            Matrix(Matrix::Identity(group_->dim(), group_->dim())));
}

Algebra::Algebra(std::shared_ptr<const Group> group) : Algebra(group, symbolic_params(*group)) {}

const Chart& Algebra::chart(int g) const {
  {
    std::lock_guard lock(mutex_);
    auto it = charts_.find(g);
    if (it != charts_.end()) return *it->second;
  }
  auto chart = std::make_unique<Chart>();
  Matrix basis(group_->dim(), group_->dim());
  Index col = 0;
  for (const auto& e : group_->eigenspaces(g))
    for (Index k = 0; k < e.space.dim(); ++k) {
      basis.col(col++) = e.space.basis.col(k);
      chart->exponents.push_back(e.exponent);
      chart->lambdas.push_back(e.lambda);
    }
  chart->frame = std::make_shared<const Frame>(group_, params(), std::move(basis));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = charts_.emplace(g, std::move(chart));
  return *it->second;
}

Element Algebra::to_eigenbasis(const Element& f, int g) const {
  return change_frame(f.restrict_to(g), chart(g).frame);
}

}  // namespace sra
