#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "tlcat/laurent.hpp"

namespace tlcat {

// Element of Q(s)[u^±, v^±, w^±]: a Laurent numerator over a polynomial
// denominator in s alone.  The pair is kept reduced, with a monic denominator
// whose constant term is nonzero, so == compares canonical forms.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(Laurent num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)

  // Reduces num/den; den must be a nonzero polynomial in s.
  static Scalar fraction(Laurent num, Laurent den);
  static Scalar var(Var x, int e = 1) { return Scalar(Laurent::var(x, e)); }

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool has_spectral() const { return !num_.s_only(); }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inv() const;
  Scalar pow(int k) const;

  bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }

  // Text form: a sum of terms like `-3/2*s^-2*u`, or `(num)/(den)`.
  std::string str() const;
  static Scalar parse(std::string_view text);

 private:
  Laurent num_;
  Laurent den_;
};

inline bool is_zero(const Scalar& x) { return x.is_zero(); }
inline Scalar inverse(const Scalar& x) { return x.inv(); }

// q^{a/b} as a power of s; 4a/b must be an integer.
Scalar q_pow(int a, int b = 1);
// Loop weight β = -q - q^{-1}.
const Scalar& beta();
Scalar beta_pow(int k);
// Balanced quantum integer [n] = (q^n - q^-n)/(q - q^-1).
Scalar quantum_int(int n);

}  // namespace tlcat
