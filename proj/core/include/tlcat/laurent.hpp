#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tlcat {

// s is the base variable q^{1/4}; u, v, w are spectral parameters.
enum Var : int { kS = 0, kU = 1, kV = 2, kW = 3 };
inline constexpr int kNumVars = 4;

const char* var_name(Var x);

// Exponent vector packed in four biased 16-bit fields.  s sits in the low
// field, so sorting by key groups terms with equal spectral part together.
class Monomial {
 public:
  constexpr Monomial() = default;

  static Monomial of(Var x, int e = 1) {
    Monomial m;
    m.key_ += uint64_t(int64_t(e)) << shift(x);
    return m;
  }

  int exp(Var x) const { return int((key_ >> shift(x)) & 0xffffu) - 0x8000; }
  Monomial operator*(Monomial o) const { return Monomial(key_ + o.key_ - kBias); }
  Monomial inverse() const { return Monomial(2 * kBias - key_); }
  Monomial pow(int k) const;

  Monomial spectral_part() const { return Monomial((key_ & ~uint64_t(0xffff)) | 0x8000u); }
  bool is_one() const { return key_ == kBias; }
  bool s_only() const { return (key_ >> 16) == (kBias >> 16); }
  uint64_t key() const { return key_; }

  auto operator<=>(const Monomial&) const = default;

 private:
  static constexpr uint64_t kBias = 0x8000800080008000ULL;
  static constexpr int shift(Var x) { return x == kS ? 0 : 16 * (4 - int(x)); }
  explicit constexpr Monomial(uint64_t k) : key_(k) {}
  uint64_t key_ = kBias;
};

// Sparse Laurent polynomial over Q.  Terms are sorted by monomial and carry no
// zero coefficients, so structural equality is mathematical equality.
class Laurent {
 public:
  using Term = std::pair<Monomial, mpq_class>;

  Laurent() = default;
  Laurent(long c);  // NOLINT(google-explicit-constructor)
  Laurent(const mpq_class& c);  // NOLINT(google-explicit-constructor)
  Laurent(Monomial m, mpq_class c);

  static Laurent var(Var x, int e = 1) { return Laurent(Monomial::of(x, e), 1); }

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }
  bool is_one() const;
  bool s_only() const;
  bool is_monomial() const { return t_.size() == 1; }
  int min_exp(Var x) const;
  int max_exp(Var x) const;
  const mpq_class& leading() const { return t_.back().second; }

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  Laurent& operator*=(const mpq_class& c);
  Laurent& operator*=(Monomial m);

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent operator-() const;

  bool operator==(const Laurent& o) const { return t_ == o.t_; }

  // Pieces of the polynomial sharing one spectral monomial, each stored with
  // that monomial stripped (so every piece is s-only).
  std::vector<std::pair<Monomial, Laurent>> spectral_groups() const;

  std::string str() const;

  // Build from unsorted terms; merges duplicates and drops zeros.
  static Laurent from_terms(std::vector<Term> terms);

 private:
  std::vector<Term> t_;
};

// Dense univariate polynomials over Q used for gcds in s.
namespace upoly {
using Poly = std::vector<mpq_class>;  // index is the degree; trimmed

void trim(Poly& p);
int degree(const Poly& p);
Poly from_laurent(const Laurent& p, int* shift);  // s-only input
Laurent to_laurent(const Poly& p, int shift);
Poly mul(const Poly& a, const Poly& b);
void divmod(const Poly& a, const Poly& b, Poly* quot, Poly* rem);
Poly gcd(Poly a, Poly b);  // monic, gcd(0,0) = 0
// Solves a*x = 1 mod m; a must be coprime to m.
Poly inverse_mod(const Poly& a, const Poly& m);
}  // namespace upoly

}  // namespace tlcat
