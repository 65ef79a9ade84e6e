#include <algorithm>
#include <cctype>

#include "sra/group.hpp"

namespace sra {

namespace {

Matrix zeros(Index n) { return Matrix::Constant(n, n, Cyclotomic()); }

Matrix eye(Index n) {
  Matrix out = zeros(n);
  for (Index i = 0; i < n; ++i) out(i, i) = Cyclotomic(1);
  return out;
}

// Simple reflections of a Cartan matrix on the root basis,
// s_i(alpha_j) = alpha_j - A_ij alpha_i, doubled as g + g^{-T}.
Group from_cartan(const Matrix& cartan, int order, const std::string& name) {
  const Index r = cartan.rows();
  std::vector<Matrix> gens;
  for (Index i = 0; i < r; ++i) {
    Matrix s = eye(r);
    for (Index j = 0; j < r; ++j) s(i, j) -= cartan(i, j);
    Matrix doubled = zeros(2 * r);
    doubled.topLeftCorner(r, r) = s;
    doubled.bottomRightCorner(r, r) = s.transpose();  // s is an involution
    gens.push_back(std::move(doubled));
  }
  GroupOptions opts;
  opts.name = name;
  opts.cyclotomic_order = order;
  return Group::close(gens, standard_omega(static_cast<int>(r)), opts);
}

Matrix chain_cartan(int rank) {
  Matrix a = zeros(rank);
  for (int i = 0; i < rank; ++i) {
    a(i, i) = Cyclotomic(2);
    if (i + 1 < rank) {
      a(i, i + 1) = Cyclotomic(-1);
      a(i + 1, i) = Cyclotomic(-1);
    }
  }
  return a;
}

int parse_positive(const std::string& text, const std::string& spec) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw GroupError(GroupError::Kind::UnknownBuiltin, "bad parameter in group spec '" + spec + "'");
  int v = std::stoi(text);
  if (v < 1) throw GroupError(GroupError::Kind::UnknownBuiltin, "parameter must be positive in '" + spec + "'");
  return v;
}

}  // namespace

Group cyclic_sp2(int n) {
  if (n < 1) throw GroupError(GroupError::Kind::BadInput, "cyclic order must be positive");
  GroupOptions opts;
  opts.name = "cyclic:" + std::to_string(n);
  opts.cyclotomic_order = n;
  if (n == 1) return Group::close({}, standard_omega(1), opts);
  Matrix g = zeros(2);
  g(0, 0) = Cyclotomic::zeta(n, 1);
  g(1, 1) = Cyclotomic::zeta(n, n - 1);
  return Group::close({g}, standard_omega(1), opts);
}

Group doubled_a(int rank) {
  if (rank < 1) throw GroupError(GroupError::Kind::BadInput, "rank must be positive");
  return from_cartan(chain_cartan(rank), 1, "doubled-A:" + std::to_string(rank));
}

Group doubled_b(int rank) {
  if (rank < 1) throw GroupError(GroupError::Kind::BadInput, "rank must be positive");
  Matrix a = chain_cartan(rank);
  if (rank >= 2) a(rank - 1, rank - 2) = Cyclotomic(-2);  // last simple root is short
  return from_cartan(a, 1, "doubled-B:" + std::to_string(rank));
}

Group dihedral(int n) {
  if (n < 2) throw GroupError(GroupError::Kind::BadInput, "dihedral parameter must be at least 2");
  // -2 cos(pi/n) = -(zeta_2n + zeta_2n^{-1})
  Cyclotomic c = -(Cyclotomic::zeta(2 * n, 1) + Cyclotomic::zeta(2 * n, 2 * n - 1));
  Matrix a = zeros(2);
  a(0, 0) = Cyclotomic(2);
  a(1, 1) = Cyclotomic(2);
  a(0, 1) = c;
  a(1, 0) = c;
  return from_cartan(a, 2 * n, "dihedral:" + std::to_string(n));
}

Group direct_product(const Group& a, const Group& b) {
  const Index na = a.dim(), nb = b.dim();
  Matrix omega = zeros(na + nb);
  omega.topLeftCorner(na, na) = a.omega();
  omega.bottomRightCorner(nb, nb) = b.omega();
  std::vector<Matrix> gens;
  for (int g : a.generators()) {
    Matrix m = eye(na + nb);
    m.topLeftCorner(na, na) = a.matrix(g);
    gens.push_back(std::move(m));
  }
  for (int g : b.generators()) {
    Matrix m = eye(na + nb);
    m.bottomRightCorner(nb, nb) = b.matrix(g);
    gens.push_back(std::move(m));
  }
  GroupOptions opts;
  opts.name = "product(" + a.name() + "," + b.name() + ")";
  opts.cyclotomic_order = static_cast<int>(lcm_of(a.field_order(), b.field_order()));
  return Group::close(gens, omega, opts);
}

Group builtin(const std::string& spec) {
  auto unknown = [&] { return GroupError(GroupError::Kind::UnknownBuiltin, "unknown group spec '" + spec + "'"); };
  const std::string prod = "product(";
  if (spec.rfind(prod, 0) == 0) {
    if (spec.back() != ')') throw unknown();
    std::string inner = spec.substr(prod.size(), spec.size() - prod.size() - 1);
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0)
        return direct_product(builtin(inner.substr(0, i)), builtin(inner.substr(i + 1)));
    }
    throw unknown();
  }
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw unknown();
  std::string family = spec.substr(0, colon);
  int n = parse_positive(spec.substr(colon + 1), spec);
  if (family == "cyclic") return cyclic_sp2(n);
  if (family == "doubled-A") return doubled_a(n);
  if (family == "doubled-B") return doubled_b(n);
  if (family == "dihedral") return dihedral(n);
  throw unknown();
}

}  // namespace sra
