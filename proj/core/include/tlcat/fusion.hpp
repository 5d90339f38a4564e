#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tlcat/linalg.hpp"
#include "tlcat/morphism.hpp"
#include "tlcat/report.hpp"
#include "tlcat/specialize.hpp"

namespace tlcat {

// Coefficient field used for a concrete computation: its unit and the map
// from symbolic scalars into it.
template <class T>
struct FieldContext {
  T one;
  std::function<T(const Scalar&)> from;
  std::string label;
};

FieldContext<mpq_class> rational_context(const mpq_class& s0);
FieldContext<Cyclotomic> cyclotomic_context(const Specialization& sp);
FieldContext<Scalar> symbolic_context();

// A module over TL_n that the fusion code knows how to act on: a standard
// module S_{n,k} or the left regular module End(n) on its diagram basis.
struct ModuleSpec {
  enum class Kind { Standard, Regular };
  Kind kind = Kind::Standard;
  int n = 0;
  int k = 0;

  static ModuleSpec standard(int n, int k) { return {Kind::Standard, n, k}; }
  static ModuleSpec regular(int n) { return {Kind::Regular, n, n}; }
  int dim() const;
  // Matrix of f ∈ End(n) on the module.
  Matrix<Scalar> action(const Morphism& f) const;
  std::string str() const;
};

// TL_{m+n} ⊗_{TL_m ⊗ TL_n} (M ⊗ N) over the field T.
//
// The raw space has basis d ⊗ x ⊗ y with d an (m+n, m+n)-diagram.  It is cut
// down by the relations (d∘g) ⊗ v = d ⊗ (g·v) for g = e_i ⊗ 1 and 1 ⊗ e_j;
// generators suffice because every element of the subalgebra is a product
// of them.  The quotient basis is the set of raw columns that are not pivots.
template <class T>
class FusedModule {
 public:
  FusedModule(const ModuleSpec& left, const ModuleSpec& right, FieldContext<T> ctx);

  int m() const { return left_.n; }
  int n() const { return right_.n; }
  int dim() const { return int(basis_.size()); }
  const FieldContext<T>& context() const { return ctx_; }

  // f ∘ (d ⊗ v) for f ∈ End(m+n).
  Matrix<T> left_action(const Morphism& f) const;
  // (d ∘ g) ⊗ v for g ∈ End(m+n); well defined only when g commutes with the
  // subalgebra, which is the case for η_{n,m}∘η_{m,n}.
  Matrix<T> right_action(const Morphism& g) const;
  // d ⊗ (A v) for a matrix A on M ⊗ N.
  Matrix<T> module_action(const Matrix<T>& a) const;

  // Monodromy as d ↦ d∘η_{n,m}∘η_{m,n}, and as the twist ratio
  // c_{m+n} · (c_m⁻¹ ⊗ c_n⁻¹) with the inverses acting on the factors.
  Matrix<T> monodromy() const;
  Matrix<T> monodromy_from_twists() const;

  // Matrices for e_1 .. e_{m+n-1}.
  std::vector<Matrix<T>> generator_matrices() const;

 private:
  using Sparse = std::vector<std::pair<int, T>>;

  int column(int diagram, int v) const { return diagram * mn_ + v; }
  std::vector<T> normal_form(std::vector<T> dense) const;
  void add_relation(std::vector<T>& acc);
  Matrix<T> factor_matrix(const ModuleSpec& spec, const Morphism& f) const;
  Matrix<T> from_raw_images(const std::function<void(int col, std::vector<T>& acc)>& image) const;

  ModuleSpec left_, right_;
  FieldContext<T> ctx_;
  T beta_;
  int mn_ = 0;  // dim M · dim N
  std::vector<Diagram> diagrams_;
  std::unordered_map<Diagram, int> diagram_index_;
  std::vector<Sparse> pivot_rows_;  // indexed by column; empty when not a pivot
  std::vector<int> basis_;          // raw columns that survive
  std::vector<int> basis_index_;    // raw column -> position in basis_, or -1
};

extern template class FusedModule<mpq_class>;
extern template class FusedModule<Cyclotomic>;
extern template class FusedModule<Scalar>;

struct FusionSummand {
  int k = 0;
  int multiplicity = 0;
  Scalar mu;
};

struct JordanType {
  std::string eigenvalue;
  std::vector<int> blocks;
  bool sole_eigenvalue = false;  // the generalised eigenspace is everything
};

// Block sizes of λ in m; EigenvalueMismatch if m - λ is invertible.
template <class T>
JordanType jordan_type(const Matrix<T>& m, const T& lambda, const T& one) {
  const auto nul = nullity_sequence(m, lambda, one);
  if (nul.size() < 2) throw EigenvalueMismatch(to_text(lambda) + " is not an eigenvalue");
  JordanType j;
  j.eigenvalue = to_text(lambda);
  j.blocks = partition_from_nullities(nul);
  j.sole_eigenvalue = nul.back() == m.rows();
  return j;
}

// μ_{k1,k2,k} = q^{k(k/2+1) - k1(k1/2+1) - k2(k2/2+1)}.
Scalar monodromy_eigenvalue(int k1, int k2, int k);

// A rational point s₀ ≠ 0, ±1 drawn from the seed.
mpq_class generic_point(uint64_t seed);

// Multiplicities of S_{n1+n2,k} in S_{n1,k1} ×_f S_{n2,k2}, read off from the
// eigenspaces of c_{n1+n2} at a generic rational point.
std::vector<FusionSummand> fusion_decomposition_generic(int n1, int k1, int n2, int k2, uint64_t seed = 1);

// All standard pairs with n1 + n2 ≤ max_total: dimension, c-spectrum, monodromy
// spectrum, route agreement, naturality and TL relations of the induced action.
Report verify_fusion_generic(int max_total, const RunOptions& opt = {});
// The smallest instances over Q(s) itself.
Report verify_fusion_symbolic(const RunOptions& opt = {});
// Unit law, S_{k,k} ×_f S_{2,0} ≅ S_{k+2,k}, and the generic TL₂ ×_f TL₂ spectrum.
Report verify_fusion_laws(const RunOptions& opt = {});
// The two worked examples at q = e^{2πi/3} and q = i, exact in Q(ζ).
Report verify_fusion_root_of_unity(const RunOptions& opt = {});

// Every standard pair with n1 + n2 ≤ max_total over the field of sp (cyclotomic
// or rational): TL relations of the induced action, agreement of the two
// monodromy routes, and that the expected μ exhaust the monodromy spectrum.
Report verify_fusion_specialized(const Specialization& sp, int max_total, const RunOptions& opt = {});

// The fusion-table record for one product as a JSON document.
std::string fusion_table_json(const ModuleSpec& left, const ModuleSpec& right, const Specialization& sp,
                              uint64_t seed = 1);

}  // namespace tlcat
