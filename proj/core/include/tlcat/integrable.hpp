#pragma once

#include <string>
#include <vector>

#include "tlcat/morphism.hpp"
#include "tlcat/report.hpp"

namespace tlcat {

// Ordinary:    X(u) = (q^{1/2}/u) t − (u/q^{1/2}) t⁻¹ with the ordinary crossing.
// DiluteBraid: the same formula with the dilute five-term crossing.
// DiluteIK:    the Izergin–Korepin/Nienhuis face u⁻²y₊ + u⁻¹w₊ + z + u w₋ + u²y₋.
enum class FaceFamily { Ordinary, DiluteBraid, DiluteIK };

const char* family_name(FaceFamily f);
FaceFamily parse_family(const std::string& name);
inline bool is_dilute(FaceFamily f) { return f != FaceFamily::Ordinary; }

struct FaceOperator {
  int i = 0;
  int n = 0;
  FaceFamily family = FaceFamily::Ordinary;
  Morphism value;
};

// The two-strand face at spectral argument u (any Laurent monomial in u, v).
Morphism local_face(FaceFamily family, const Scalar& u);
// X_i on n strands; 1 ≤ i ≤ n−1.
FaceOperator face(int i, int n, FaceFamily family, const Scalar& u = Scalar::var(kU));

// The Izergin–Korepin pieces, exposed for tests.
struct IKWeights {
  Morphism y_plus, y_minus, w_plus, w_minus, z;
};
IKWeights ik_weights();

// Boundaries for the boundary relation and the transfer matrix: one arc
// z ∈ Hom(0,2) per pair of strands, both nodes vacant, or their sum.
enum class Boundary { Arc, Vacant, DashedArc };
const char* boundary_name(Boundary b);
Morphism boundary_pair(Boundary b, bool dilute);

// Face products are applied in the order in which they are drawn: the faces
// touching the boundary arc act first.  The double row is
//   D_n(u) = (1_n ⊗ z^t) ∘ X_n(u)⋯X_1(u) ∘ X_1(u')⋯X_n(u') ∘ (1_n ⊗ z)
// on n+2 strands, with u' = u for the braid families and u' = u⁻¹ for the
// Izergin–Korepin face (whose rows commute only in that pairing).
struct TransferMatrix {
  int n = 0;
  Morphism value;
};
TransferMatrix transfer_matrix(int n, FaceFamily family = FaceFamily::Ordinary, const Scalar& u = Scalar::var(kU),
                               Boundary boundary = Boundary::Arc);

// X_i(u)X_{i+1}(v)X_i(v/u) = X_{i+1}(v/u)X_i(v)X_{i+1}(u) on n strands.
Report verify_ybe(FaceFamily family, int n = 3, const RunOptions& opt = {});

struct InversionResult {
  Report report;
  Morphism residual;  // X(u)X(u⁻¹) on two strands
};
InversionResult verify_inversion(FaceFamily family);
// ρ̂(u) = ((q+q⁻¹) − (u²+u⁻²))((q^{3/2}+q^{-3/2}) − (u²+u⁻²)) / ((q^{1/2}−q^{-1/2})(q^{3/4}−q^{-3/4}))².
Scalar ik_inversion_factor();

// X_3(v)X_2(u)(b⊗b) = X_1(v)X_2(u)(b⊗b) on four strands.  Returns the
// difference, which is zero exactly when the boundary is compatible.
Morphism boundary_defect(FaceFamily family, const Morphism& bb);
Report verify_boundary_ybe(FaceFamily family, const RunOptions& opt = {});

// [D_n(u), D_n(v)] symbolically for n ≤ max_symbolic; for n = pit_n by exact
// evaluation on a grid in (u, v) whose side exceeds the Laurent degree span.
Report verify_transfer_commute(int max_symbolic = 3, int pit_n = 4, const RunOptions& opt = {});
// The Izergin–Korepin double row per boundary, n = 2 symbolically.
Report verify_ik_transfer_commute(const RunOptions& opt = {});

// The six conjugation identities, the identity t_i⁻¹t_{i+1}t_i⁻¹ − t_{i+1}⁻¹t_it_{i+1}⁻¹ =
// q(t_it_{i+1}⁻¹t_i − t_{i+1}t_i⁻¹t_{i+1}) and the four surviving terms of the
// triple product of Y_i(u) = u⁻¹t_i − u t_i⁻¹.
Report verify_crossing_identities(bool dilute, const RunOptions& opt = {});

// Everything above for the given maximal transfer-matrix size.
Report verify_integrable(int max_symbolic = 3, int pit_n = 4, const RunOptions& opt = {});

}  // namespace tlcat
