#pragma once

#include <vector>

#include "tlcat/morphism.hpp"
#include "tlcat/report.hpp"

namespace tlcat {

// The two closed forms of the commutor as words in t_i.
//   LeftNested:  η_{r,s} = Π_{i=s..1} (t_i t_{i+1} ... t_{i+r-1}),  e.g. η₂₃ = (t3t4)(t2t3)(t1t2)
//   RightNested: η_{r,s} = Π_{i=1..r} (t_{i+s-1} ... t_{i+1} t_i),  e.g. η₂₃ = (t3t2t1)(t4t3t2)
enum class CommutorForm { LeftNested, RightNested };

// Indices of the t's, read left to right as a composition.
std::vector<int> commutor_word(int r, int s, CommutorForm form);

// Product t_{w[0]} ∘ t_{w[1]} ∘ ... on n strands (inverses if requested).
Morphism crossing_word(const std::vector<int>& word, int n, bool inverse = false, bool dilute = false);

// η_{r,s} in End(r+s), cached.
Morphism commutor(int r, int s, CommutorForm form = CommutorForm::LeftNested, bool dilute = false);
// Reverse word of t_inv.
Morphism commutor_inverse(int r, int s, bool dilute = false);

// Both hexagons and the agreement of the two closed forms for r+s <= max_total,
// and η∘η^{-1} = 1.
Report verify_hexagons(int max_total, bool dilute = false, const RunOptions& opt = {});
// η_{r,s}(c⊗d) = (d⊗c)η_{n,m}, exhaustively for r+s, n+m <= max_total, plus
// `random_pairs` random cases with r+s and n+m up to random_max_total.
Report verify_naturality(int max_total, int random_pairs, int random_max_total, bool dilute = false,
                         const RunOptions& opt = {});
// Lemma-level identities on n strands: t/e braiding relations, braid and
// far-commutation relations, palindromes, e-transport and the bubble lemma.
Report verify_braid_relations(int n, const RunOptions& opt = {});

// η₂₁η₁₂e₁ - e₁η₂₁η₁₂ on three strands.
Morphism monodromy_noncentral_witness();
// q^{-2}(q - q^{-1})(e₁e₂ - e₂e₁).
Morphism expected_noncentral_witness();
Report verify_noncentral_witness();

// The TL defining relations e_i² = βe_i, e_ie_{i±1}e_i = e_i, far commutation.
Report verify_tl_relations(int max_n, const RunOptions& opt = {});

}  // namespace tlcat
