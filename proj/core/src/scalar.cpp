#include "tlcat/scalar.hpp"

#include <cctype>
#include <vector>

#include "tlcat/errors.hpp"

namespace tlcat {

namespace {

bool is_unit_den(const Laurent& d) { return d.is_one(); }

}  // namespace

Scalar Scalar::fraction(Laurent num, Laurent den) {
  if (den.is_zero()) throw DivisionByZero();
  if (!den.s_only()) throw NotInvertibleInRing("denominator involves a spectral variable");
  Scalar r;
  if (num.is_zero()) return r;

  // Pull out the monomial s^a and the leading coefficient of the denominator.
  const int lo = den.min_exp(kS);
  const Monomial shift = Monomial::of(kS, -lo);
  num *= shift;
  den *= shift;
  const mpq_class lc_inv = 1 / den.leading();
  num *= lc_inv;
  den *= lc_inv;
  if (den.is_one()) {
    r.num_ = std::move(num);
    return r;
  }

  int dshift = 0;
  upoly::Poly d = upoly::from_laurent(den, &dshift);
  auto groups = num.spectral_groups();
  upoly::Poly g = d;
  for (const auto& grp : groups) {
    g = upoly::gcd(g, upoly::from_laurent(grp.second, nullptr));
    if (upoly::degree(g) == 0) break;
  }
  if (upoly::degree(g) > 0) {
    upoly::Poly q;
    upoly::divmod(d, g, &q, nullptr);
    den = upoly::to_laurent(q, 0);
    Laurent rebuilt;
    for (const auto& grp : groups) {
      int sh = 0;
      upoly::Poly p = upoly::from_laurent(grp.second, &sh);
      upoly::Poly pq;
      upoly::divmod(p, g, &pq, nullptr);
      Laurent piece = upoly::to_laurent(pq, sh);
      piece *= grp.first;
      rebuilt += piece;
    }
    num = std::move(rebuilt);
  }
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (is_unit_den(den_) && is_unit_den(o.den_)) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    Laurent n = num_ + o.num_;
    return *this = fraction(std::move(n), den_);
  }
  int sh = 0;
  upoly::Poly a = upoly::from_laurent(den_, &sh);
  upoly::Poly b = upoly::from_laurent(o.den_, &sh);
  upoly::Poly g = upoly::gcd(a, b);
  upoly::Poly a1, b1;
  upoly::divmod(a, g, &a1, nullptr);
  upoly::divmod(b, g, &b1, nullptr);
  Laurent n = num_ * upoly::to_laurent(b1, 0) + o.num_ * upoly::to_laurent(a1, 0);
  Laurent d = den_ * upoly::to_laurent(b1, 0);
  return *this = fraction(std::move(n), std::move(d));
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero() || o.is_zero()) return *this = Scalar();
  if (is_unit_den(den_) && is_unit_den(o.den_)) {
    num_ *= o.num_;
    return *this;
  }
  return *this = fraction(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  auto groups = num_.spectral_groups();
  if (groups.size() != 1)
    throw NotInvertibleInRing("inverse of a non-monomial in the spectral variables: " + str());
  Laurent n = den_;
  n *= groups[0].first.inverse();
  return fraction(std::move(n), groups[0].second);
}

Scalar Scalar::pow(int k) const {
  if (k < 0) return inv().pow(-k);
  Scalar r(1), b = *this;
  while (k > 0) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k > 0) b *= b;
  }
  return r;
}

std::string Scalar::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {

// Recursive-descent reader for sums/products/powers of rationals and the
// variables s, u, v, w (plus q = s^4 as an input convenience).
class Reader {
 public:
  explicit Reader(std::string_view t) : t_(t) {}

  Scalar parse_all() {
    Scalar r = expr();
    skip();
    if (i_ != t_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("scalar: " + why + " at offset " + std::to_string(i_) + " in '" +
                     std::string(t_) + "'");
  }

  void skip() {
    while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
  }

  bool eat(char c) {
    skip();
    if (i_ < t_.size() && t_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    skip();
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Scalar r = term();
    if (neg) r = -r;
    for (;;) {
      if (eat('+')) r += term();
      else if (eat('-')) r -= term();
      else return r;
    }
  }

  Scalar term() {
    Scalar r = factor();
    for (;;) {
      if (eat('*')) r *= factor();
      else if (eat('/')) r /= factor();
      else return r;
    }
  }

  Scalar factor() {
    Scalar a = atom();
    if (eat('^')) {
      skip();
      bool neg = false;
      if (eat('-')) neg = true;
      const bool paren = eat('(');
      if (paren && eat('-')) neg = !neg;
      skip();
      const std::size_t start = i_;
      while (i_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[i_]))) ++i_;
      if (start == i_) fail("exponent expected");
      const int e = std::stoi(std::string(t_.substr(start, i_ - start)));
      if (paren && !eat(')')) fail("')' expected");
      a = a.pow(neg ? -e : e);
    }
    return a;
  }

  Scalar atom() {
    skip();
    if (i_ >= t_.size()) fail("unexpected end");
    const char c = t_[i_];
    if (c == '(') {
      ++i_;
      Scalar r = expr();
      if (!eat(')')) fail("')' expected");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i_;
      while (i_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[i_]))) ++i_;
      return Scalar(mpq_class(mpz_class(std::string(t_.substr(start, i_ - start)))));
    }
    ++i_;
    switch (c) {
      case 's': return Scalar::var(kS);
      case 'u': return Scalar::var(kU);
      case 'v': return Scalar::var(kV);
      case 'w': return Scalar::var(kW);
      case 'q': return Scalar::var(kS, 4);
      default: --i_; fail(std::string("unexpected character '") + c + "'");
    }
  }

  std::string_view t_;
  std::size_t i_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return Reader(text).parse_all(); }

Scalar q_pow(int a, int b) {
  if (b <= 0 || (4 * a) % b != 0) throw Error("q power not in the s lattice");
  return Scalar::var(kS, 4 * a / b);
}

const Scalar& beta() {
  static const Scalar b = -Scalar::var(kS, 4) - Scalar::var(kS, -4);
  return b;
}

Scalar beta_pow(int k) {
  static const std::vector<Scalar> table = [] {
    std::vector<Scalar> t{Scalar(1)};
    for (int i = 1; i <= 24; ++i) t.push_back(t.back() * beta());
    return t;
  }();
  if (k < int(table.size())) return table[std::size_t(k)];
  return beta().pow(k);
}

Scalar quantum_int(int n) {
  // Sum of q^{n-1-2j}, j = 0..n-1, which is the reduced quotient.
  if (n == 0) return Scalar();
  if (n < 0) return -quantum_int(-n);
  Laurent r;
  for (int j = 0; j < n; ++j) r += Laurent::var(kS, 4 * (n - 1 - 2 * j));
  return Scalar(r);
}

}  // namespace tlcat
