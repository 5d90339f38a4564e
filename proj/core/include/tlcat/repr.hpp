#pragma once

#include <unordered_map>
#include <vector>

#include "tlcat/diagram.hpp"
#include "tlcat/linalg.hpp"
#include "tlcat/morphism.hpp"
#include "tlcat/report.hpp"

namespace tlcat {

// C(n, (n-k)/2) - C(n, (n-k)/2 - 1); zero when the parities differ or k > n.
long long standard_dimension(int n, int k);

// S_{n,k}: span of the (n,k)-diagrams with k through lines.  A morphism acts by
// composition, and results with fewer than k through lines are set to zero.
class StandardModule {
 public:
  StandardModule(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  int dim() const { return int(basis_.size()); }
  const std::vector<Diagram>& basis() const { return basis_; }
  // -1 if d is not a basis diagram.
  int index(const Diagram& d) const;

 private:
  int n_, k_;
  std::vector<Diagram> basis_;
  std::unordered_map<Diagram, int> index_;
};

// Matrix of f ∈ Hom(n, m) from S_{n,k} to S_{m,k} (rows: target basis).
Matrix<Scalar> act(const Morphism& f, const StandardModule& from, const StandardModule& to);
inline Matrix<Scalar> act(const Morphism& f, const StandardModule& m) { return act(f, m, m); }

// Wenzl-Jones projector.  wj₀ = 1₀, wj₁ = 1₁ and
// wj_{m+1} = X - μ_m X e_m X with X = wj_m ⊗ 1₁, μ_m fixed by e_m wj_{m+1} = 0.
Morphism wenzl_jones(int m);
// The coefficients μ₁, μ₂, ... found while building wj_m.
Scalar wenzl_jones_mu(int m);

// Checks that the matrix is λ·1 and returns λ; NotScalarAction otherwise.
Scalar eigenvalue_on_standard(const Morphism& central, const StandardModule& m);

// Zig-zag identities with nested cups/caps, m ≤ max_m, and the projector
// decorated version for m ≤ max_decorated.
Report verify_rigidity(int max_m, int max_decorated, const RunOptions& opt = {});
// Idempotence, annihilation by every e_i, transpose symmetry, and a
// one-dimensional annihilated subspace (kernel computed at a rational point).
Report verify_wenzl_jones(int max_m, const RunOptions& opt = {});
// act(f∘g) = act(f)act(g): exhaustive over diagram pairs with all sides ≤ max_exhaustive,
// plus `random_pairs` random combinations with sides up to random_max.
Report verify_homomorphism(int max_exhaustive, int random_pairs, int random_max, const RunOptions& opt = {});
// c_n acts on S_{n,k} as q^{k(k+2)/2}.
Report verify_twist_eigenvalues(int max_n, const RunOptions& opt = {});
// det(t₁ on S_{n,k}) = q^{dim S_{n,k}/2} (-q^{-2})^{dim S_{n-2,k}}.
Report verify_det_t1(int max_n, const RunOptions& opt = {});
// Standard dimensions against enumeration, and dim End(n) = Catalan(n).
Report verify_dimensions(int max_n);

Scalar expected_gamma(int k);
Scalar expected_det_t1(int n, int k);

}  // namespace tlcat
