#include "sra/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace sra {

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  std::size_t digits = 0;
  for (std::size_t k = i; k < t.size(); ++k) {
    if (t[k] == '/') {
      if (seen_slash || digits == 0) throw std::invalid_argument("malformed rational: " + text);
      seen_slash = true;
      digits = 0;
    } else if (std::isdigit(static_cast<unsigned char>(t[k]))) {
      ++digits;
    } else {
      throw std::invalid_argument("malformed rational: " + text);
    }
  }
  if (digits == 0) throw std::invalid_argument("malformed rational: " + text);
  if (t[0] == '+') t.erase(0, 1);
  Rational r;
  if (r.set_str(t, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

int euler_phi(int m) {
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

long lcm_of(long a, long b) { return a / std::gcd(a, b) * b; }

namespace {

using Poly = std::vector<Rational>;  // low to high

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a by b (b nonzero, trimmed).
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  Poly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (a[k] == 0) continue;
    Rational f = a[k] / lead;
    std::size_t shift = k - (b.size() - 1);
    q[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

std::unique_ptr<CyclotomicField> build_field(int m) {
  auto f = std::make_unique<CyclotomicField>();
  f->order = m;
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
  Poly p(m + 1, Rational(0));
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    p = divmod(p, cyclotomic_field(d).phi).first;
  }
  f->phi = p;
  f->degree = static_cast<int>(p.size()) - 1;
  const int n = f->degree;
  f->power.reserve(m);
  Poly cur(n, Rational(0));
  cur[0] = 1;
  if (n == 0) cur.clear();
  for (int k = 0; k < m; ++k) {
    f->power.push_back(cur);
    // multiply by x and reduce
    Poly next(n, Rational(0));
    for (int i = 0; i + 1 < n; ++i) next[i + 1] = cur[i];
    if (n > 0) {
      Rational top = cur[n - 1];
      if (top != 0)
        for (int i = 0; i < n; ++i) next[i] -= top * f->phi[i];
    }
    cur = std::move(next);
  }
  return f;
}

}  // namespace

const CyclotomicField& cyclotomic_field(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicField>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;
  }
  auto field = build_field(m);  // may recurse into smaller orders
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(m, std::move(field));
  return *it->second;
}

// ---------------------------------------------------------------------------
// Cyclotomic

Cyclotomic::Cyclotomic(const Rational& r) {
  if (r != 0) {
    c_.push_back(r);
    c_.back().canonicalize();
  }
}

Cyclotomic Cyclotomic::zeta(int m, long k) {
  long r = ((k % m) + m) % m;
  std::vector<Rational> dense(r + 1, Rational(0));
  dense[r] = 1;
  return from_power_sum(m, dense);
}

Cyclotomic Cyclotomic::from_power_sum(int m, std::span<const Rational> coeffs) {
  const auto& f = cyclotomic_field(m);
  std::vector<Rational> acc(f.degree, Rational(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    const auto& pw = f.power[k % m];
    for (int i = 0; i < f.degree; ++i)
      if (pw[i] != 0) acc[i] += coeffs[k] * pw[i];
  }
  Cyclotomic out;
  out.order_ = m;
  out.c_ = std::move(acc);
  out.normalize();
  return out;
}

Cyclotomic Cyclotomic::from_basis(int m, std::vector<Rational> coeffs) {
  const auto& f = cyclotomic_field(m);
  if (static_cast<int>(coeffs.size()) != f.degree)
    throw std::invalid_argument("coefficient count does not match deg Phi_m");
  Cyclotomic out;
  out.order_ = m;
  out.c_ = std::move(coeffs);
  out.normalize();
  return out;
}

void Cyclotomic::normalize() {
  for (auto& x : c_) x.canonicalize();
  bool rational = true;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) {
      rational = false;
      break;
    }
  if (rational) {
    Rational r = c_.empty() ? Rational(0) : c_[0];
    order_ = 1;
    c_.clear();
    if (r != 0) c_.push_back(r);
  }
}

bool Cyclotomic::is_one() const { return order_ == 1 && c_.size() == 1 && c_[0] == 1; }

Rational Cyclotomic::rational() const {
  if (order_ != 1) throw std::domain_error("cyclotomic value is not rational");
  return c_.empty() ? Rational(0) : c_[0];
}

std::vector<Rational> Cyclotomic::coefficients(int m) const {
  const auto& f = cyclotomic_field(m);
  if (m % order_ != 0) throw std::invalid_argument("order does not divide target field order");
  std::vector<Rational> out(f.degree, Rational(0));
  if (c_.empty()) return out;
  if (order_ == 1) {
    out[0] = c_[0];
    return out;
  }
  if (order_ == m) return c_;
  const int step = m / order_;
  std::vector<Rational> dense(static_cast<std::size_t>(step) * (c_.size() - 1) + 1, Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) dense[k * step] = c_[k];
  return from_power_sum(m, dense).coefficients(m);
}

Cyclotomic Cyclotomic::embed(int m) const {
  if (order_ == 1 || order_ == m) return *this;
  if (m % order_ != 0) throw std::invalid_argument("order does not divide target field order");
  Cyclotomic out;
  out.order_ = m;
  out.c_ = coefficients(m);
  return out;
}

void Cyclotomic::align(Cyclotomic& a, Cyclotomic& b) {
  if (a.order_ == b.order_ || a.order_ == 1 || b.order_ == 1) return;
  int m = static_cast<int>(lcm_of(a.order_, b.order_));
  a = a.embed(m);
  b = b.embed(m);
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (o.order_ == 1) {
    c_[0] += o.c_[0];
    normalize();
    return *this;
  }
  if (order_ == 1) {
    Rational r = c_[0];
    *this = o;
    c_[0] += r;
    normalize();
    return *this;
  }
  Cyclotomic rhs = o;
  align(*this, rhs);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  normalize();
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) {
    order_ = 1;
    c_.clear();
    return *this;
  }
  if (o.order_ == 1) {
    for (auto& x : c_) x *= o.c_[0];
    return *this;
  }
  if (order_ == 1) {
    Rational r = c_[0];
    *this = o;
    for (auto& x : c_) x *= r;
    return *this;
  }
  Cyclotomic rhs = o;
  align(*this, rhs);
  const int m = order_;
  const std::size_t n = c_.size();
  std::vector<Rational> prod(2 * n - 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (rhs.c_[j] != 0) prod[i + j] += c_[i] * rhs.c_[j];
  }
  *this = from_power_sum(m, prod);
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.c_ == b.c_;
  if (a.order_ == 1 || b.order_ == 1) return false;  // demoted rationals are canonical
  Cyclotomic x = a, y = b;
  Cyclotomic::align(x, y);
  return x.c_ == y.c_;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(zeta_m)");
  if (order_ == 1) return Cyclotomic(Rational(1) / c_[0]);
  const auto& f = cyclotomic_field(order_);
  // Extended Euclid in Q[x]: s * a + t * Phi = gcd (a nonzero constant).
  Poly r0 = f.phi, r1 = c_;
  trim(r1);
  Poly s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw std::logic_error("cyclotomic inverse: non-unit gcd");
  Rational scale = Rational(1) / r0[0];
  for (auto& x : s0) x *= scale;
  return from_power_sum(order_, s0);
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string Cyclotomic::key() const {
  std::string out = std::to_string(order_);
  out.push_back(':');
  for (const auto& x : c_) {
    out += x.get_str();
    out.push_back(',');
  }
  return out;
}

std::string Cyclotomic::to_literal(int m) const {
  if (is_zero()) return "0";
  auto coeffs = coefficients(m);
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Rational& c = coeffs[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty())
      out += (c < 0 ? "-" : "");
    else
      out += (c < 0 ? " - " : " + ");
    if (k == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += "z^" + std::to_string(k);
    }
  }
  return out;
}

std::string Cyclotomic::to_string() const { return to_literal(order_); }

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

Cyclotomic parse_cyclotomic(const std::string& text, int m) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("cyclotomic literal '" + text + "' at offset " +
                                std::to_string(i) + ": " + what);
  };
  auto read_uint = [&]() -> std::string {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) fail("expected digits");
    return text.substr(start, i - start);
  };
  std::vector<Rational> acc(1, Rational(0));
  bool first = true;
  skip();
  if (i == text.size()) fail("empty literal");
  while (true) {
    skip();
    int sign = 1;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Rational coeff(1);
    bool have_coeff = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::string num = read_uint();
      if (i < text.size() && text[i] == '/') {
        ++i;
        num += "/" + read_uint();
      }
      coeff = parse_rational(num);
      have_coeff = true;
      skip();
    }
    long power = 0;
    bool need_z = !have_coeff;
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip();
      need_z = true;
    }
    if (need_z) {
      if (i >= text.size() || text[i] != 'z') fail("expected 'z'");
      ++i;
      power = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        power = std::stol(read_uint());
      }
    }
    if (static_cast<long>(acc.size()) <= power) acc.resize(power + 1, Rational(0));
    acc[power] += sign * coeff;
    skip();
    if (i == text.size()) break;
  }
  return Cyclotomic::from_power_sum(m, acc);
}

// ---------------------------------------------------------------------------
// EtaPolynomial

EtaPolynomial::EtaPolynomial(const Cyclotomic& c) : EtaPolynomial(0, c) {}

EtaPolynomial::EtaPolynomial(int arity, const Cyclotomic& c) : arity_(arity) {
  if (!c.is_zero()) terms_.emplace(Exponents(arity, 0), c);
}

EtaPolynomial EtaPolynomial::variable(int arity, int index) {
  if (index < 0 || index >= arity) throw std::out_of_range("eta variable index out of range");
  EtaPolynomial p;
  p.arity_ = arity;
  Exponents e(arity, 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Cyclotomic(1));
  return p;
}

bool EtaPolynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Cyclotomic EtaPolynomial::constant_term() const {
  return coefficient(Exponents(arity_, 0));
}

Cyclotomic EtaPolynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Cyclotomic() : it->second;
}

int EtaPolynomial::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return terms_.empty() ? -1 : d;
}

int EtaPolynomial::degree_in(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

EtaPolynomial EtaPolynomial::with_arity(int arity) const {
  if (arity == arity_) return *this;
  if (!is_constant()) throw std::invalid_argument("eta polynomial arity mismatch");
  return EtaPolynomial(arity, terms_.empty() ? Cyclotomic() : terms_.begin()->second);
}

void EtaPolynomial::unify(const EtaPolynomial& o) {
  if (arity_ == o.arity_) return;
  if (arity_ < o.arity_ && is_constant()) {
    Cyclotomic c = terms_.empty() ? Cyclotomic() : terms_.begin()->second;
    *this = EtaPolynomial(o.arity_, c);
    return;
  }
  if (o.is_constant() && o.arity_ < arity_) return;
  throw std::invalid_argument("eta polynomial arity mismatch");
}

void EtaPolynomial::add_term(const Exponents& e, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

EtaPolynomial& EtaPolynomial::operator+=(const EtaPolynomial& o) {
  unify(o);
  if (o.arity_ == arity_) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
  } else {
    for (const auto& [e, c] : o.terms_) add_term(Exponents(arity_, 0), c);
  }
  return *this;
}

EtaPolynomial EtaPolynomial::operator-() const {
  EtaPolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

EtaPolynomial& EtaPolynomial::operator-=(const EtaPolynomial& o) { return *this += -o; }

EtaPolynomial& EtaPolynomial::operator*=(const Cyclotomic& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

EtaPolynomial operator*(const EtaPolynomial& a, const EtaPolynomial& b) {
  if (a.is_zero() || b.is_zero()) {
    EtaPolynomial z;
    z.arity_ = std::max(a.arity_, b.arity_);
    return z;
  }
  if (a.is_constant()) {
    EtaPolynomial out = b;
    if (a.arity_ > b.arity_) out.unify(a);
    return out *= a.terms_.begin()->second;
  }
  if (b.is_constant()) {
    EtaPolynomial out = a;
    if (b.arity_ > a.arity_) out.unify(b);
    return out *= b.terms_.begin()->second;
  }
  if (a.arity_ != b.arity_) throw std::invalid_argument("eta polynomial arity mismatch");
  EtaPolynomial out;
  out.arity_ = a.arity_;
  EtaPolynomial::Exponents e(a.arity_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

EtaPolynomial& EtaPolynomial::operator*=(const EtaPolynomial& o) { return *this = *this * o; }

bool operator==(const EtaPolynomial& a, const EtaPolynomial& b) {
  if (a.arity_ == b.arity_) return a.terms_ == b.terms_;
  if (a.is_constant() && b.is_constant()) {
    Cyclotomic ca = a.terms_.empty() ? Cyclotomic() : a.terms_.begin()->second;
    Cyclotomic cb = b.terms_.empty() ? Cyclotomic() : b.terms_.begin()->second;
    return ca == cb;
  }
  return false;
}

Cyclotomic EtaPolynomial::evaluate(std::span<const Cyclotomic> point) const {
  if (!is_constant() && static_cast<int>(point.size()) != arity_)
    throw std::invalid_argument("evaluation point arity mismatch");
  Cyclotomic acc;
  for (const auto& [e, c] : terms_) {
    Cyclotomic t = c;
    for (int i = 0; i < arity_; ++i)
      if (e[i] != 0) t *= point[i].pow(e[i]);
    acc += t;
  }
  return acc;
}

EtaPolynomial EtaPolynomial::substitute(int var, const Cyclotomic& value) const {
  if (var < 0 || var >= arity_) throw std::out_of_range("eta variable index out of range");
  EtaPolynomial out;
  out.arity_ = arity_;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[var] = 0;
    out.add_term(f, c * value.pow(e[var]));
  }
  return out;
}

namespace {

void factor_into(Integer n, std::vector<Integer>& primes);

Integer pollard_rho(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto f = [&](const Integer& v) {
      Integer r = v * v + c;
      r %= n;
      return r;
    };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      Integer diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(Integer n, std::vector<Integer>& primes) {
  if (n <= 1) return;
  for (unsigned long p = 2; p < 1000 && p * p <= n; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      primes.emplace_back(p);
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    primes.push_back(n);
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> primes;
  factor_into(abs(n), primes);
  std::sort(primes.begin(), primes.end());
  std::vector<Integer> divs{1};
  for (std::size_t i = 0; i < primes.size();) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    std::size_t count = j - i, base = divs.size();
    Integer pk = 1;
    for (std::size_t k = 0; k < count; ++k) {
      pk *= primes[i];
      for (std::size_t b = 0; b < base; ++b) divs.push_back(divs[b] * pk);
    }
    i = j;
  }
  return divs;
}

}  // namespace

std::vector<Rational> EtaPolynomial::rational_roots() const {
  if (arity_ != 1) throw std::invalid_argument("rational_roots requires a univariate polynomial");
  if (is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  int deg = degree_in(0);
  std::vector<Rational> coeffs(deg + 1, Rational(0));
  for (const auto& [e, c] : terms_) {
    if (!c.is_rational()) throw std::invalid_argument("rational_roots requires rational coefficients");
    coeffs[e[0]] = c.rational();
  }
  // primitive integer form
  Integer den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  for (const auto& c : coeffs) ints.emplace_back(Rational(c * den).get_num());
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (ints[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  if (static_cast<int>(low) < deg) {
    auto ps = divisors(ints[low]);
    auto qs = divisors(ints.back());
    for (const auto& p : ps)
      for (const auto& q : qs)
        for (int sign : {1, -1}) {
          Rational r(sign * p, q);
          r.canonicalize();
          Rational acc = 0;
          for (std::size_t k = ints.size(); k-- > 0;) acc = acc * r + ints[k];
          if (acc == 0) roots.push_back(r);
        }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::string EtaPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (int i = 0; i < arity_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "eta" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    bool negative = c.is_rational() && c.rational() < 0;
    Cyclotomic mag = negative ? -c : c;
    std::string coef;
    if (mag.is_rational()) {
      coef = mag.rational().get_str();
    } else {
      coef = "(" + mag.to_string() + ")";
    }
    std::string term;
    if (mono.empty())
      term = coef;
    else if (mag.is_one())
      term = mono;
    else
      term = coef + "*" + mono;
    if (out.empty())
      out += (negative ? "-" : "") + term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const EtaPolynomial& p) { return os << p.to_string(); }

}  // namespace sra
