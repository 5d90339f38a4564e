#include "doctest.h"
#include "tlcat/integrable.hpp"
#include "tlcat/specialize.hpp"

using namespace tlcat;

namespace {

const Scalar U = Scalar::var(kU);
const Scalar V = Scalar::var(kV);

}  // namespace

TEST_CASE("Yang-Baxter on three strands") {
  for (FaceFamily f : {FaceFamily::Ordinary, FaceFamily::DiluteBraid, FaceFamily::DiluteIK}) {
    CAPTURE(family_name(f));
    CHECK(verify_ybe(f).ok());
  }
  // Directly, for the ordinary face.
  auto X = [](int i, const Scalar& a) { return face(i, 3, FaceFamily::Ordinary, a).value; };
  CHECK(X(1, U) * X(2, V) * X(1, V * U.inv()) == X(2, V * U.inv()) * X(1, V) * X(2, U));
}

TEST_CASE("inversion residuals") {
  const Scalar x = U.pow(2) + U.pow(-2);
  CHECK(local_face(FaceFamily::Ordinary, U) * local_face(FaceFamily::Ordinary, U.inv()) ==
        ((q_pow(2) + q_pow(-2)) - x) * identity(2));
  const Morphism both(Diagram::identity(2, true));
  CHECK(verify_inversion(FaceFamily::DiluteBraid).residual ==
        ((q_pow(1) + q_pow(-1)) - x) * identity(2, true) + (q_pow(2) - q_pow(1) - q_pow(-1) + q_pow(-2)) * both);
  for (FaceFamily f : {FaceFamily::Ordinary, FaceFamily::DiluteBraid, FaceFamily::DiluteIK})
    CHECK(verify_inversion(f).report.ok());
}

TEST_CASE("Izergin-Korepin inversion factor") {
  // Closed form evaluated with exact rationals at a few points (s, u).
  for (auto [s0, u0] : {std::pair<mpq_class, mpq_class>{mpq_class(3, 2), mpq_class(5, 7)}, {mpq_class(2), mpq_class(4, 3)}}) {
    const mpq_class q = s0 * s0 * s0 * s0, r = s0 * s0, t = s0 * s0 * s0;  // q, q^{1/2}, q^{3/4}
    const mpq_class x = u0 * u0 + 1 / (u0 * u0);
    const mpq_class d = (r - 1 / r) * (t - 1 / t);
    const mpq_class want = ((q + 1 / q) - x) * ((q * r + 1 / (q * r)) - x) / (d * d);
    RationalPoint pt;
    pt.value[kS] = s0;
    pt.value[kU] = u0;
    CHECK(eval_rational(ik_inversion_factor(), pt) == want);
  }
  CHECK(local_face(FaceFamily::DiluteIK, Scalar(1)) == identity(2, true));
  CHECK(identity(2, true).size() == 4);
}

TEST_CASE("boundaries") {
  CHECK(boundary_defect(FaceFamily::Ordinary, tensor(boundary_pair(Boundary::Arc, false), boundary_pair(Boundary::Arc, false))).is_zero());
  for (Boundary b : {Boundary::Arc, Boundary::Vacant, Boundary::DashedArc}) {
    const Morphism z = boundary_pair(b, true);
    CAPTURE(boundary_name(b));
    CHECK(boundary_defect(FaceFamily::DiluteBraid, tensor(z, z)).is_zero());
  }
  // A mixed boundary is rejected.
  CHECK_FALSE(boundary_defect(FaceFamily::DiluteBraid, tensor(boundary_pair(Boundary::Arc, true),
                                                              boundary_pair(Boundary::Vacant, true)))
                  .is_zero());
  for (FaceFamily f : {FaceFamily::Ordinary, FaceFamily::DiluteBraid, FaceFamily::DiluteIK})
    CHECK(verify_boundary_ybe(f).ok());
}

TEST_CASE("double-row transfer matrices commute") {
  const Morphism a = transfer_matrix(2, FaceFamily::Ordinary, U).value;
  const Morphism b = transfer_matrix(2, FaceFamily::Ordinary, V).value;
  CHECK(a.dst() == 2);
  CHECK(a.src() == 2);
  CHECK(a * b == b * a);
  CHECK(verify_ik_transfer_commute().ok());
}

TEST_CASE("crossing identities") {
  CHECK(verify_crossing_identities(false).ok());
  CHECK(verify_crossing_identities(true).ok());
  CHECK(parse_family("dilute-ik") == FaceFamily::DiluteIK);
  CHECK(std::string(family_name(parse_family(family_name(FaceFamily::DiluteBraid)))) == family_name(FaceFamily::DiluteBraid));
}
