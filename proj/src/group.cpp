#include "sra/group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

namespace sra {

struct Group::EigenCache {
  std::mutex mutex;
  std::vector<std::optional<std::vector<Eigenspace>>> entries;
};

std::string matrix_key(const Matrix& m) {
  std::string out;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      out += m(i, j).key();
      out.push_back(';');
    }
  return out;
}

Matrix standard_omega(int half_dim) {
  const int n = 2 * half_dim;
  Matrix w = Matrix::Constant(n, n, Cyclotomic());
  for (int i = 0; i < half_dim; ++i) {
    w(i, half_dim + i) = Cyclotomic(1);
    w(half_dim + i, i) = Cyclotomic(-1);
  }
  return w;
}

bool is_symplectic(const Matrix& g, const Matrix& omega) {
  Matrix lhs = multiply(multiply(Matrix(g.transpose()), omega), g);
  return lhs == omega;
}

namespace {

Matrix embed_matrix(const Matrix& m, int order) {
  Matrix out = m;
  for (Index i = 0; i < out.size(); ++i) out.data()[i] = out.data()[i].embed(order);
  return out;
}

Matrix identity_matrix(Index n) {
  Matrix out = Matrix::Constant(n, n, Cyclotomic());
  for (Index i = 0; i < n; ++i) out(i, i) = Cyclotomic(1);
  return out;
}

Matrix shifted(const Matrix& g, const Cyclotomic& lambda) {
  Matrix out = g;
  for (Index i = 0; i < out.rows(); ++i) out(i, i) -= lambda;
  return out;
}

constexpr int kStoredTableLimit = 2048;

}  // namespace

Group Group::close(const std::vector<Matrix>& generators, const Matrix& omega,
                   const GroupOptions& options) {
  const Index n = omega.rows();
  if (n == 0 || n % 2 != 0 || omega.cols() != n)
    throw GroupError(GroupError::Kind::BadInput, "omega must be a nonempty even-dimensional square matrix");
  if (Matrix(omega.transpose()) != Matrix(-omega))
    throw GroupError(GroupError::Kind::BadInput, "omega is not antisymmetric");
  if (determinant(omega).is_zero())
    throw GroupError(GroupError::Kind::BadInput, "omega is degenerate");

  int m0 = std::max(1, options.cyclotomic_order);
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n)
      throw GroupError(GroupError::Kind::BadInput, "generator dimension does not match omega");
    for (Index i = 0; i < g.size(); ++i) m0 = static_cast<int>(lcm_of(m0, g.data()[i].order()));
  }
  for (Index i = 0; i < omega.size(); ++i) m0 = static_cast<int>(lcm_of(m0, omega.data()[i].order()));

  Group G;
  G.name_ = options.name;
  G.half_dim_ = static_cast<int>(n / 2);
  G.omega_ = embed_matrix(omega, m0);

  std::vector<Matrix> gens;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    Matrix g = embed_matrix(generators[k], m0);
    if (!is_symplectic(g, G.omega_))
      throw GroupError(GroupError::Kind::NotSymplectic,
                       "generator " + std::to_string(k) + " does not preserve omega");
    if (!options.allow_non_reflections && rank(shifted(g, Cyclotomic(1))) != 2)
      throw GroupError(GroupError::Kind::NotAReflection,
                       "generator " + std::to_string(k) + " is not a symplectic reflection");
    gens.push_back(std::move(g));
  }

  // breadth-first closure under right multiplication by generators
  G.elements_.push_back(identity_matrix(n));
  G.words_.push_back({});
  G.keys_.push_back(matrix_key(G.elements_[0]));
  G.index_.emplace(G.keys_[0], 0);
  std::vector<std::vector<int>> right_gen;  // element x generator -> element
  for (std::size_t head = 0; head < G.elements_.size(); ++head) {
    std::vector<int> row;
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Matrix y = sra::multiply(G.elements_[head], gens[s]);
      std::string key = matrix_key(y);
      auto it = G.index_.find(key);
      if (it != G.index_.end()) {
        row.push_back(it->second);
        continue;
      }
      if (G.elements_.size() >= options.cap)
        throw GroupError(GroupError::Kind::CapExceeded,
                         "group closure exceeded the cap of " + std::to_string(options.cap) + " elements");
      int id = static_cast<int>(G.elements_.size());
      auto w = G.words_[head];
      w.push_back(static_cast<int>(s));
      G.elements_.push_back(std::move(y));
      G.words_.push_back(std::move(w));
      G.keys_.push_back(key);
      G.index_.emplace(std::move(key), id);
      row.push_back(id);
    }
    right_gen.push_back(std::move(row));
  }
  for (std::size_t s = 0; s < gens.size(); ++s) G.generator_ids_.push_back(right_gen[0][s]);

  G.build_tables();

  G.field_order_ = static_cast<int>(lcm_of(m0, G.exponent_));
  if (G.field_order_ != m0) {
    G.omega_ = embed_matrix(G.omega_, G.field_order_);
    G.index_.clear();
    for (std::size_t i = 0; i < G.elements_.size(); ++i) {
      G.elements_[i] = embed_matrix(G.elements_[i], G.field_order_);
      G.keys_[i] = matrix_key(G.elements_[i]);
      G.index_.emplace(G.keys_[i], static_cast<int>(i));
    }
  }

  G.build_classes();
  G.build_reflections();
  G.eigen_cache_ = std::make_shared<EigenCache>();
  G.eigen_cache_->entries.resize(G.elements_.size());
  return G;
}

void Group::build_tables() {
  const int sz = size();
  identity_ = 0;
  if (sz <= kStoredTableLimit) {
    table_.assign(static_cast<std::size_t>(sz) * sz, -1);
    for (int a = 0; a < sz; ++a)
      for (int b = 0; b < sz; ++b) {
        auto it = index_.find(matrix_key(sra::multiply(elements_[a], elements_[b])));
        if (it == index_.end()) throw std::logic_error("group closure is not closed");
        table_[static_cast<std::size_t>(a) * sz + b] = it->second;
      }
  }
  orders_.assign(sz, 1);
  inverses_.assign(sz, identity_);
  exponent_ = 1;
  for (int a = 0; a < sz; ++a) {
    // walk a, a^2, ...; the power just before the identity is the inverse
    int p = a, prev = identity_, k = 1;
    while (p != identity_) {
      prev = p;
      p = multiply(p, a);
      ++k;
    }
    orders_[a] = k;
    inverses_[a] = prev;
    exponent_ = static_cast<int>(lcm_of(exponent_, orders_[a]));
  }
}

int Group::multiply(int a, int b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * size() + b];
  auto it = index_.find(matrix_key(sra::multiply(elements_.at(a), elements_.at(b))));
  if (it == index_.end()) throw std::logic_error("product left the group");
  return it->second;
}

std::optional<int> Group::find(const Matrix& m) const {
  if (m.rows() != dim() || m.cols() != dim()) return std::nullopt;
  auto it = index_.find(matrix_key(embed_matrix(m, field_order_)));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void Group::build_classes() {
  const int sz = size();
  std::vector<int> assigned(sz, -1);
  std::vector<ConjugacyClass> found;
  for (int start = 0; start < sz; ++start) {
    if (assigned[start] >= 0) continue;
    ConjugacyClass cls;
    std::deque<int> queue{start};
    assigned[start] = static_cast<int>(found.size());
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      cls.members.push_back(x);
      for (int s : generator_ids_) {
        int y = multiply(multiply(s, x), inverses_[s]);
        if (assigned[y] < 0) {
          assigned[y] = static_cast<int>(found.size());
          queue.push_back(y);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.representative = *std::min_element(cls.members.begin(), cls.members.end(),
                                           [&](int a, int b) { return keys_[a] < keys_[b]; });
    found.push_back(std::move(cls));
  }
  std::sort(found.begin(), found.end(), [&](const ConjugacyClass& a, const ConjugacyClass& b) {
    return keys_[a.representative] < keys_[b.representative];
  });
  classes_ = std::move(found);
  class_of_.assign(sz, -1);
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (int x : classes_[c].members) class_of_[x] = static_cast<int>(c);
}

void Group::build_reflections() {
  const int sz = size();
  for (int kappa : {1, -1}) {
    auto& grading = grading_[kappa_index(kappa)];
    grading.reserve(sz);
    for (int g = 0; g < sz; ++g) {
      Subspace space = kernel(shifted(elements_[g], Cyclotomic(kappa)));
      if (space.dim() % 2 != 0)
        throw std::logic_error("odd-dimensional kappa-eigenspace; the group is not symplectic");
      grading.push_back({static_cast<int>(space.dim() / 2), std::move(space)});
    }
  }
  const Index n = dim();
  eta_of_class_.assign(classes_.size(), -1);
  for (int g = 0; g < sz; ++g) {
    if (grading_[0][g].E != half_dim_ - 1) continue;  // rk(g - 1) = 2
    reflections_.push_back(g);
    ReflectionData data;
    data.element = g;
    Matrix moved = shifted(elements_[g], Cyclotomic(1));
    data.image = image(moved);
    data.fixed = grading_[0][g].eigenspace;
    Matrix frame(n, n);
    frame.leftCols(2) = data.image.basis;
    frame.rightCols(n - 2) = data.fixed.basis;
    auto inv = sra::inverse(frame);
    if (!inv) throw std::logic_error("V_R and Z_R do not span the space");
    Matrix select = Matrix::Constant(n, n, Cyclotomic());
    select(0, 0) = Cyclotomic(1);
    select(1, 1) = Cyclotomic(1);
    data.projector = sra::multiply(sra::multiply(frame, select), *inv);
    data.form = sra::multiply(sra::multiply(Matrix(data.projector.transpose()), omega_), data.projector);
    reflection_data_.emplace(g, std::move(data));
  }
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    int rep = classes_[c].representative;
    if (reflection_data_.count(rep)) {
      eta_of_class_[c] = static_cast<int>(reflection_classes_.size());
      reflection_classes_.push_back(static_cast<int>(c));
    }
  }
}

int Group::eta_index_of(int element) const {
  int e = eta_of_class_.at(class_of(element));
  if (e < 0) throw std::invalid_argument("element is not a symplectic reflection");
  return e;
}

const EGrading& Group::e_grading(int g, int kappa) const {
  if (kappa != 1 && kappa != -1) throw std::invalid_argument("kappa must be +1 or -1");
  return grading_[kappa_index(kappa)].at(g);
}

const std::vector<Eigenspace>& Group::eigenspaces(int g) const {
  auto& cache = *eigen_cache_;
  {
    std::lock_guard lock(cache.mutex);
    if (cache.entries.at(g)) return *cache.entries[g];
  }
  const int ord = element_order(g);
  auto spaces = eigen_decompose(elements_.at(g), ord);
  const int step = field_order_ / ord;
  for (auto& s : spaces) {
    s.exponent *= step;
    s.lambda = s.lambda.embed(field_order_);
    s.space.basis = embed_matrix(s.space.basis, field_order_);
  }
  std::lock_guard lock(cache.mutex);
  if (!cache.entries[g]) cache.entries[g] = std::move(spaces);
  return *cache.entries[g];
}

std::optional<int> Group::klein() const {
  Matrix minus = identity_matrix(dim());
  for (Index i = 0; i < minus.rows(); ++i) minus(i, i) = Cyclotomic(-1);
  return find(minus);
}

Group::Counts Group::kappa_counts() const {
  Counts c;
  for (const auto& cls : classes_) {
    if (grading_[0][cls.representative].E == 0) ++c.traces;
    if (grading_[1][cls.representative].E == 0) ++c.supertraces;
  }
  return c;
}

}  // namespace sra
