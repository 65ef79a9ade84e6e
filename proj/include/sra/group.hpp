#pragma once

// Finite symplectic reflection groups G in Sp(2N) over Q(zeta_m): closure
// from generators, conjugacy classes, the reflection set and the
// E-grading E(g) = dim Ker(g - kappa) / 2.

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "sra/linalg.hpp"

namespace sra {

class GroupError : public std::runtime_error {
 public:
  enum class Kind { NotSymplectic, NotAReflection, CapExceeded, BadInput, UnknownBuiltin };
  GroupError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct GroupOptions {
  std::string name = "G";
  std::size_t cap = 100000;
  bool allow_non_reflections = false;
  /// Order of the field the generator entries live in; the group's field
  /// order is lcm(this, exponent of G).
  int cyclotomic_order = 1;
};

struct ConjugacyClass {
  int representative = 0;  // member with the smallest canonical key
  std::vector<int> members;
};

struct EGrading {
  int E = 0;
  Subspace eigenspace;  // Ker(g - kappa)
};

/// Data attached to one symplectic reflection R.
struct ReflectionData {
  int element = 0;
  Subspace image;       // V_R = Im(R - 1), dimension 2
  Subspace fixed;       // Z_R = Ker(R - 1)
  Matrix projector;     // onto V_R along Z_R
  Matrix form;          // omega_R(a_i, a_j)
};

inline int kappa_index(int kappa) { return kappa == 1 ? 0 : 1; }

class Group {
 public:
  static Group close(const std::vector<Matrix>& generators, const Matrix& omega,
                     const GroupOptions& options = {});

  const std::string& name() const { return name_; }
  int half_dim() const { return half_dim_; }
  int dim() const { return 2 * half_dim_; }
  const Matrix& omega() const { return omega_; }
  /// Cyclotomic order m: every scalar of the group lives in Q(zeta_m).
  int field_order() const { return field_order_; }
  /// lcm of the element orders.
  int exponent() const { return exponent_; }
  int size() const { return static_cast<int>(elements_.size()); }
  int identity() const { return identity_; }

  const Matrix& matrix(int g) const { return elements_.at(g); }
  const std::string& key(int g) const { return keys_.at(g); }
  std::optional<int> find(const Matrix& m) const;
  int multiply(int a, int b) const;
  int inverse(int g) const { return inverses_.at(g); }
  int element_order(int g) const { return orders_.at(g); }
  /// A shortest word in the generators producing g, as generator indices.
  const std::vector<int>& word(int g) const { return words_.at(g); }
  const std::vector<int>& generators() const { return generator_ids_; }

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  int class_of(int g) const { return class_of_.at(g); }

  const std::vector<int>& reflections() const { return reflections_; }
  const ReflectionData& reflection(int r) const { return reflection_data_.at(r); }
  /// Class ids containing reflections, in ascending class id; the k-th one
  /// carries the deformation parameter eta_k.
  const std::vector<int>& reflection_classes() const { return reflection_classes_; }
  int eta_count() const { return static_cast<int>(reflection_classes_.size()); }
  /// eta variable index of the class of reflection element R.
  int eta_index_of(int element) const;

  const EGrading& e_grading(int g, int kappa) const;
  /// Eigenspaces with eigenvalues embedded in Q(zeta_m); cached.
  const std::vector<Eigenspace>& eigenspaces(int g) const;

  /// The element -1, when it belongs to G.
  std::optional<int> klein() const;

  struct Counts {
    int traces = 0;       // T_G
    int supertraces = 0;  // S_G
  };
  Counts kappa_counts() const;

 private:
  Group() = default;
  void build_tables();
  void build_classes();
  void build_reflections();

  std::string name_;
  int half_dim_ = 0;
  Matrix omega_;
  int field_order_ = 1;
  int exponent_ = 1;
  int identity_ = 0;
  std::vector<Matrix> elements_;
  std::vector<std::string> keys_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> table_;  // size^2, row-major, when stored
  std::vector<int> inverses_;
  std::vector<int> orders_;
  std::vector<std::vector<int>> words_;
  std::vector<int> generator_ids_;
  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_of_;
  std::vector<int> reflections_;
  std::unordered_map<int, ReflectionData> reflection_data_;
  std::vector<int> reflection_classes_;
  std::vector<int> eta_of_class_;
  std::vector<EGrading> grading_[2];

  struct EigenCache;
  std::shared_ptr<EigenCache> eigen_cache_;
};

std::string matrix_key(const Matrix& m);
Matrix standard_omega(int half_dim);
bool is_symplectic(const Matrix& g, const Matrix& omega);

// ---------------------------------------------------------------------------
// Built-in groups

/// <diag(zeta_n, zeta_n^{-1})> in Sp(2); n = 1 gives the trivial group.
Group cyclic_sp2(int n);
/// Weyl group of A_rank acting on its reflection representation, doubled
/// as g + g^{-T} on coordinates and momenta.
Group doubled_a(int rank);
Group doubled_b(int rank);
/// Dihedral group I_2(n) of order 2n, doubled.
Group dihedral(int n);
/// G1 x G2 acting block-diagonally on the direct sum of the two spaces.
Group direct_product(const Group& a, const Group& b);
/// Builds from a compact spec: "cyclic:4", "doubled-A:2", "doubled-B:2",
/// "dihedral:5", "product(cyclic:2,cyclic:3)".
Group builtin(const std::string& spec);

}  // namespace sra
