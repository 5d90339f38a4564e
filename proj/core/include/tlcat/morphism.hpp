#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tlcat/diagram.hpp"
#include "tlcat/scalar.hpp"

namespace tlcat {

// A Scalar-linear combination of diagrams in Hom(src, dst).  Terms are kept
// sorted by diagram with no zero coefficients.
class Morphism {
 public:
  using Term = std::pair<Diagram, Scalar>;

  Morphism() = default;
  Morphism(int dst, int src, bool dilute = false) : dst_(dst), src_(src), dilute_(dilute) {}
  Morphism(const Diagram& d, Scalar c = Scalar(1));  // NOLINT(google-explicit-constructor)

  int dst() const { return dst_; }
  int src() const { return src_; }
  bool dilute() const { return dilute_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  // Zero when the diagram does not occur.
  Scalar coeff(const Diagram& d) const;

  void add_term(const Diagram& d, const Scalar& c);

  Morphism& operator+=(const Morphism& o);
  Morphism& operator-=(const Morphism& o);
  Morphism& operator*=(const Scalar& c);
  friend Morphism operator+(Morphism a, const Morphism& b) { return a += b; }
  friend Morphism operator-(Morphism a, const Morphism& b) { return a -= b; }
  friend Morphism operator*(const Scalar& c, Morphism f) { return f *= c; }
  Morphism operator-() const;

  bool operator==(const Morphism& o) const;

  // Applies a coefficient-wise map (substitution, specialization to Q(s), ...).
  template <class F>
  Morphism map_coeffs(F&& f) const {
    Morphism r(dst_, src_, dilute_);
    for (const auto& [d, c] : terms_) r.add_term(d, f(c));
    return r;
  }

  // `dst<-src : (coeff)*diagram + ...`
  std::string str() const;
  static Morphism parse(std::string_view text);

  // Builds from unsorted, possibly repeated terms.
  static Morphism from_terms(int dst, int src, bool dilute, std::vector<Term> terms);

 private:
  int dst_ = 0;
  int src_ = 0;
  bool dilute_ = false;
  std::vector<Term> terms_;
};

Morphism compose(const Morphism& f, const Morphism& g);
Morphism tensor(const Morphism& f, const Morphism& g);
Morphism transpose(const Morphism& f);
inline Morphism operator*(const Morphism& f, const Morphism& g) { return compose(f, g); }
// Composes a list left to right: chain({a, b, c}) = a ∘ b ∘ c.
Morphism chain(const std::vector<Morphism>& factors);

// 1_{i-1} ⊗ f ⊗ 1_{n-i-1} for f ∈ End(2), in f's family.
Morphism embed(const Morphism& f, int i, int n);

// Named generators.  In the dilute category identity(n) is the sum of the 2^n
// occupation patterns, and e/t/t_inv are tensored with that identity.
Morphism identity(int n, bool dilute = false);
Morphism e(int i, int n, bool dilute = false);
Morphism t(int i, int n, bool dilute = false);
Morphism t_inv(int i, int n, bool dilute = false);
Morphism cup(bool dilute = false);
Morphism cap(bool dilute = false);
Morphism big_cup(int m);
Morphism big_cap(int m);
// z^{⊗p} in Hom(0, 2p) and its transpose.
Morphism cups(int p);
Morphism caps(int p);

// The elementary crossing on two strands: η₁₁ = q^{1/2} 1 + q^{-1/2} e in the
// ordinary category, the five-term combination in the dilute one.
Morphism elementary_crossing(bool dilute, bool inverse = false);

}  // namespace tlcat
