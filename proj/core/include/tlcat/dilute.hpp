#pragma once

#include "tlcat/morphism.hpp"
#include "tlcat/report.hpp"

namespace tlcat {

// η₁₁ = q^{1/2}·(both strands) + q^{-1/2}·(cup-cap) + (two single crossings of
// the empty square) + (all vacant), and its inverse with q^{±1/2} swapped.
struct DiluteCommutor {
  Morphism value;
  Morphism inverse;
};
DiluteCommutor dilute_elementary_commutor();

// The general five-coefficient crossing a₁·both + a₂·(bottom-left to top-right)
// + a₃·(top-left to bottom-right) + a₄·vacant + a₅·cup-cap.
Morphism dilute_crossing_ansatz(const Scalar& a1, const Scalar& a2, const Scalar& a3, const Scalar& a4,
                                const Scalar& a5);

// η_{r,s} in the dilute category, from the same word in t_i as the ordinary one.
Morphism dilute_commutor(int r, int s);
Morphism dilute_commutor_inverse(int r, int s);

// The example diagrams drawn when the dilute category is introduced: two in
// Hom(2,4) and one in Hom(4,5).
std::vector<Diagram> dilute_example_diagrams();

// η₁₁ against its five-term form, the inverse, hexagons for r+s ≤ max_total,
// sampled naturality, the occupation-swap and coefficient constraints, the
// sign freedom a₁ = ±q^{±1/2}, and the braid relation for the dilute t_i.
Report verify_dilute_braiding(int max_total = 4, const RunOptions& opt = {});

}  // namespace tlcat
