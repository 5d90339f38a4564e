#pragma once

#include "tlcat/morphism.hpp"
#include "tlcat/report.hpp"

namespace tlcat {

// ρ_n = t₁t₂…t_{n-1} and λ_n = t_{n-1}…t₂t₁ (identity for n ≤ 1).
Morphism rho(int n);
Morphism rho_inv(int n);
Morphism lambda(int n);
Morphism lambda_inv(int n);
// The cyclic generators e_n = ρ_n e_{n-1} ρ_n⁻¹ and e₀ = λ_n e₁ λ_n⁻¹, n ≥ 2.
Morphism en(int n);
Morphism e0(int n);

enum class TwistForm { Rho, Lambda };

struct TwistElement {
  int n = 0;
  Morphism value;
};

// c_n = q^{3n/2} ρ_n^n (Rho) or q^{3n/2} λ_n^n (Lambda).  With prefactor = false
// the bare power is returned, which is the normalisation used by Chow and Martin.
TwistElement twist_element(int n, TwistForm form = TwistForm::Rho, bool prefactor = true);
Morphism twist_inverse(int n);

// c_n e_i = e_i c_n for every i and c_n c_n⁻¹ = 1, for n ≤ max_n.
Report verify_centrality(int max_n, const RunOptions& opt = {});
// Rho and Lambda forms agree, c₀ = 1, c₁ = q^{3/2}, c₂ = q³t₁².
Report verify_twist_forms(int max_n, const RunOptions& opt = {});
// c_{r+s} = η_{s,r}η_{r,s}(c_r ⊗ c_s) for r+s ≤ max_total, the two one-strand
// recursions, and the commutor shift identities used to prove them.
Report verify_twist_axiom(int max_total, const RunOptions& opt = {});
// Conjugation by ρ_n and λ_n shifts the e_i cyclically, 3 ≤ n ≤ max_n.
Report verify_cyclic_lemma(int max_n, const RunOptions& opt = {});
// c_dst ∘ f = f ∘ c_src.
Report twist_naturality_check(const Morphism& f);
// The same over every diagram with src, dst ≤ max_side.
Report verify_twist_naturality(int max_side, const RunOptions& opt = {});
// c_{2p} ∘ z^{⊗p} = z^{⊗p}.
Report verify_twist_fixes_cups(int max_p);

}  // namespace tlcat
