#include "tlcat/dilute.hpp"

#include "tlcat/braid.hpp"
#include "tlcat/integrable.hpp"

namespace tlcat {

namespace {

// Two-strand diagrams in text form; nodes 1 top-left, 2 bottom-left,
// 3 bottom-right, 4 top-right.
const char* const kBoth = "d2x2:[(1,4),(2,3)]";
const char* const kCupCap = "d2x2:[(1,2),(3,4)]";
const char* const kUp = "d2x2:[(1),(2,4),(3)]";    // bottom-left to top-right
const char* const kDown = "d2x2:[(1,3),(2),(4)]";  // top-left to bottom-right
const char* const kEmpty = "d2x2:[(1),(2),(3),(4)]";

Morphism diag(const char* text) { return Morphism(Diagram::parse(text)); }

// The single occupied strand and the vacant node in End(1).
Morphism solid() { return diag("d1x1:[(1,2)]"); }
Morphism hole() { return diag("d1x1:[(1),(2)]"); }

CaseRecord natural(const Morphism& c, const Morphism& d, std::string id, Params p) {
  return check_equal(std::move(id), std::move(p), dilute_commutor(c.dst(), d.dst()) * tensor(c, d),
                     tensor(d, c) * dilute_commutor(c.src(), d.src()));
}

// η₁₂(a⊗b) = (b⊗a)η₁₂ and η₂₁(b⊗a) = (a⊗b)η₂₁ for a = 1₁ and the three
// one-sided pieces of End(2), with η₁₂ = t₂t₁, η₂₁ = t₁t₂ built from `x`.
bool satisfies_three_strand_conditions(const Morphism& x) {
  const Morphism t1 = embed(x, 1, 3), t2 = embed(x, 2, 3);
  const Morphism e12 = t2 * t1, e21 = t1 * t2;
  const Morphism a = identity(1, true);
  for (const char* b : {kCupCap, "d2x2:[(1,2),(3),(4)]", "d2x2:[(1),(2),(3,4)]"}) {
    const Morphism bm = diag(b);
    if (!(e12 * tensor(a, bm) == tensor(bm, a) * e12)) return false;
    if (!(e21 * tensor(bm, a) == tensor(a, bm) * e21)) return false;
  }
  // η₁₁(1₁ ⊗ p) = p ⊗ 1₁ for the vacant point p ∈ Hom(0,1), and symmetrically.
  const Morphism point(Diagram::vacant(1, 0));
  if (!(x * tensor(a, point) == tensor(point, a))) return false;
  if (!(x * tensor(point, a) == tensor(a, point))) return false;
  return true;
}

}  // namespace

DiluteCommutor dilute_elementary_commutor() {
  return {elementary_crossing(true, false), elementary_crossing(true, true)};
}

Morphism dilute_crossing_ansatz(const Scalar& a1, const Scalar& a2, const Scalar& a3, const Scalar& a4,
                                const Scalar& a5) {
  return a1 * diag(kBoth) + a2 * diag(kUp) + a3 * diag(kDown) + a4 * diag(kEmpty) + a5 * diag(kCupCap);
}

Morphism dilute_commutor(int r, int s) { return commutor(r, s, CommutorForm::LeftNested, true); }
Morphism dilute_commutor_inverse(int r, int s) { return commutor_inverse(r, s, true); }

std::vector<Diagram> dilute_example_diagrams() {
  return {Diagram::parse("d4x2:[(1,6),(2,3),(4,5)]"), Diagram::parse("d4x2:[(1),(2,3),(4,5),(6)]"),
          Diagram::parse("d5x4:[(1,9),(2,4),(3),(5,7),(6),(8)]")};
}

Report verify_dilute_braiding(int max_total, const RunOptions& opt) {
  Report rep("dilute");
  const DiluteCommutor eta = dilute_elementary_commutor();
  const Scalar h = q_pow(1, 2), hi = q_pow(-1, 2);

  const Morphism five = Morphism::parse(std::string("d2<-2 : (s^2)*") + kBoth + " + (s^-2)*" + kCupCap + " + (1)*" + kUp +
                                        " + (1)*" + kDown + " + (1)*" + kEmpty);
  rep.add(check_equal("eta_11 = five-term form", {}, eta.value, five));
  rep.add(check_equal("eta_11^-1 = five-term form with q^{1/2} <-> q^{-1/2}", {}, eta.inverse,
                      dilute_crossing_ansatz(hi, 1, 1, 1, h)));
  const Morphism one2 = diag(kBoth) + diag("d2x2:[(1,4),(2),(3)]") + diag("d2x2:[(1),(2,3),(4)]") + diag(kEmpty);
  rep.add(check_equal("1_2 = sum of the four occupation patterns", {}, identity(2, true), one2));
  rep.add(check_equal("eta_11 eta_11^-1 = 1_2", {}, eta.value * eta.inverse, one2));
  rep.add(check_equal("eta_11^-1 eta_11 = 1_2", {}, eta.inverse * eta.value, one2));
  rep.add(check_equal("eta_10 = 1_1", {}, dilute_commutor(1, 0), identity(1, true)));
  rep.add(check_equal("eta_01 = 1_1", {}, dilute_commutor(0, 1), identity(1, true)));
  rep.add(check_equal("eta_11 = t_1 in End(2)", {}, dilute_commutor(1, 1), t(1, 2, true)));

  // Occupation swaps: an occupied or vacant strand changes level through η₁₁.
  const Morphism one = identity(1, true);
  for (const auto& [name, a] : {std::pair<const char*, Morphism>{"occupied", solid()}, {"vacant", hole()}}) {
    const Params p{{"strand", std::string(name)}};
    rep.add(check_equal("eta_11 (a x 1) = (1 x a) eta_11", p, eta.value * tensor(a, one), tensor(one, a) * eta.value));
    rep.add(check_equal("eta_11 (1 x a) = (a x 1) eta_11", p, eta.value * tensor(one, a), tensor(a, one) * eta.value));
  }

  // Coefficient constraints read off the chosen η₁₁.
  {
    const Scalar a1 = eta.value.coeff(Diagram::parse(kBoth)), a2 = eta.value.coeff(Diagram::parse(kUp));
    const Scalar a3 = eta.value.coeff(Diagram::parse(kDown)), a4 = eta.value.coeff(Diagram::parse(kEmpty));
    const Scalar a5 = eta.value.coeff(Diagram::parse(kCupCap));
    rep.add(check_equal("a1^2 + a1 a5 beta + a5^2 = 0", {}, a1 * a1 + a1 * a5 * beta() + a5 * a5, Scalar(0)));
    for (const auto& [name, a] : {std::pair<const char*, Scalar>{"a2", a2}, {"a3", a3}, {"a4", a4}}) {
      rep.add(check_equal("a_k^2 = a1 a5", {{"k", std::string(name)}}, a * a, a1 * a5));
      rep.add(check_equal("a_k = 1", {{"k", std::string(name)}}, a, Scalar(1)));
    }
    rep.add(check_equal("a1^2 + beta + a1^-2 = 0", {}, a1 * a1 + beta() + a1.pow(-2), Scalar(0)));
    rep.add(check_equal("upper signs: a1 = q^{1/2}", {}, a1, h));
  }

  // The four sign choices a₁ = ±q^{±1/2}, a₅ = a₁⁻¹ all satisfy the defining
  // conditions; a₅ = a₁ does not.
  for (int outer : {1, -1})
    for (int inner : {1, -1}) {
      const Scalar a1 = Scalar(outer) * q_pow(inner, 2);
      const Params p{{"a1", a1.str()}};
      rep.add(check_true("sign choice satisfies the crossing conditions", p,
                         satisfies_three_strand_conditions(dilute_crossing_ansatz(a1, 1, 1, 1, a1.inv()))));
    }
  rep.add(check_true("a5 = a1 violates the crossing conditions", {},
                     !satisfies_three_strand_conditions(dilute_crossing_ansatz(h, 1, 1, 1, h))));
  rep.add(check_true("a2 = -1 violates the crossing conditions", {},
                     !satisfies_three_strand_conditions(dilute_crossing_ansatz(h, -1, 1, 1, hi))));

  rep.append(verify_hexagons(max_total, true, opt));
  rep.append(verify_naturality(2, 40, max_total, true, opt));

  // Naturality against the example diagrams, paired with every small dilute diagram.
  {
    std::vector<CaseTask> tasks;
    for (const Diagram& c : dilute_example_diagrams())
      tasks.push_back([c] {
        std::vector<CaseRecord> out;
        for (int r = 0; r <= 1; ++r)
          for (int s = 0; s <= 1; ++s)
            for (const Diagram& d : enumerate(r, s, true))
              out.push_back(natural(Morphism(c), Morphism(d), "eta (c x d) = (d x c) eta", {{"c", c.str()}, {"d", d.str()}}));
        out.push_back(natural(Morphism(c), identity(1, true), "eta (c x 1_1) = (1_1 x c) eta", {{"c", c.str()}}));
        out.push_back(natural(identity(1, true), Morphism(c), "eta (1_1 x c) = (c x 1_1) eta", {{"c", c.str()}}));
        return out;
      });
    run_into(rep, tasks, opt.jobs);
  }

  rep.append(verify_crossing_identities(true, opt));
  {
    // The ordinary relation t_2 t_1 e_2 = e_1 e_2 does not survive: the
    // zigzag only straightens to the occupied strand, not to 1_1.
    const Morphism t1 = t(1, 3, true), t2 = t(2, 3, true), e1 = e(1, 3, true), e2 = e(2, 3, true);
    const Morphism cup = diag("d2x0:[(1,2)]");
    rep.add(check_equal("e_1 t_1 = -q^{-3/2} e_1", {}, e1 * t1, -q_pow(-3, 2) * e1));
    rep.add(check_true("t_2 t_1 e_2 differs from e_1 e_2", {}, !(t2 * t1 * e2 == e1 * e2)));
    rep.add(check_equal("t_2 t_1 (1_1 x cup) = cup x 1_1", {}, t2 * t1 * tensor(identity(1, true), cup),
                        tensor(cup, identity(1, true))));
  }
  return rep;
}

}  // namespace tlcat
