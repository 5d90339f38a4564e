#include "tlcat/specialize.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "tlcat/errors.hpp"

namespace tlcat {

namespace {

mpq_class qpow(const mpq_class& x, int e) {
  if (e == 0) return 1;
  if (sgn(x) == 0) {
    if (e < 0) throw DivisionByZero();
    return 0;
  }
  mpq_class b = e < 0 ? mpq_class(1 / x) : x;
  unsigned k = unsigned(e < 0 ? -e : e);
  mpq_class r = 1;
  while (k != 0) {
    if (k & 1u) r *= b;
    k >>= 1;
    if (k != 0) b *= b;
  }
  return r;
}

mpq_class eval_laurent(const Laurent& p, const RationalPoint& pt) {
  mpq_class acc = 0;
  for (const auto& [m, c] : p.terms()) {
    mpq_class t = c;
    for (int x = 0; x < kNumVars; ++x) {
      const int e = m.exp(Var(x));
      if (e == 0) continue;
      if (sgn(pt.value[std::size_t(x)]) == 0)
        throw Error(std::string("variable ") + var_name(Var(x)) + " has no value");
      t *= qpow(pt.value[std::size_t(x)], e);
    }
    acc += t;
  }
  return acc;
}

}  // namespace

Specialization Specialization::cyclotomic(int n, long a) {
  if (n <= 0) throw Error("cyclotomic order must be positive");
  long r = a % n;
  if (r < 0) r += n;
  const long g = std::gcd(long(n), r);
  Specialization sp;
  sp.kind = Kind::Cyclotomic;
  sp.order = int(n / (g == 0 ? n : g));
  sp.exponent = g == 0 ? 0 : r / g;
  if (r == 0) {
    sp.order = 1;
    sp.exponent = 0;
  }
  return sp;
}

Specialization Specialization::root_of_unity(int ell) {
  if (ell < 1) throw Error("root:L needs L >= 1");
  return cyclotomic(8 * ell, ell - 1);
}

Specialization Specialization::rational(const mpq_class& s0) {
  if (sgn(s0) == 0) throw Error("rational specialization needs s0 != 0");
  Specialization sp;
  sp.kind = Kind::Rational;
  sp.s0 = s0;
  sp.s0.canonicalize();
  return sp;
}

Specialization Specialization::complex(std::complex<double> z0) {
  Specialization sp;
  sp.kind = Kind::Complex;
  sp.z0 = z0;
  return sp;
}

Specialization Specialization::parse(const std::string& text) {
  try {
    if (text == "generic") return generic();
    if (text.rfind("root:", 0) == 0) return root_of_unity(std::stoi(text.substr(5)));
    if (text.rfind("rational:", 0) == 0) {
      mpq_class v(text.substr(9));
      v.canonicalize();
      return rational(v);
    }
    if (text.rfind("cyclo:", 0) == 0) {
      const auto colon = text.find(':', 6);
      if (colon == std::string::npos) throw ParseError("cyclo:N:A expected");
      return cyclotomic(std::stoi(text.substr(6, colon - 6)), std::stol(text.substr(colon + 1)));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError("bad specialization '" + text + "': " + e.what());
  }
  throw ParseError("unknown specialization '" + text + "'");
}

std::string Specialization::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Generic: os << "generic"; break;
    case Kind::Cyclotomic: os << "cyclo:" << order << ':' << exponent; break;
    case Kind::Rational: os << "rational:" << s0.get_str(); break;
    case Kind::Complex: os << "complex:" << z0.real() << (z0.imag() < 0 ? "" : "+") << z0.imag() << 'i'; break;
  }
  return os.str();
}

mpq_class eval_rational(const Scalar& a, const mpq_class& s0) {
  RationalPoint p;
  p.value[kS] = s0;
  return eval_rational(a, p);
}

mpq_class eval_rational(const Scalar& a, const RationalPoint& p) {
  const mpq_class d = eval_laurent(a.den(), p);
  if (sgn(d) == 0) throw PoleAtSpecialization("denominator " + a.den().str() + " vanishes");
  return eval_laurent(a.num(), p) / d;
}

Cyclotomic eval_cyclotomic(const Scalar& a, const Specialization& sp) {
  if (sp.kind != Specialization::Kind::Cyclotomic) throw Error("not a cyclotomic specialization");
  if (a.has_spectral()) throw Error("cyclotomic specialization of a spectral scalar");
  const CyclotomicField& f = sp.field();
  auto eval = [&](const Laurent& p) {
    upoly::Poly acc;
    for (const auto& [m, c] : p.terms()) {
      const upoly::Poly& z = f.power(long(m.exp(kS)) * sp.exponent);
      if (acc.size() < z.size()) acc.resize(z.size());
      for (std::size_t i = 0; i < z.size(); ++i) acc[i] += c * z[i];
    }
    return Cyclotomic(f, std::move(acc));
  };
  Cyclotomic d = eval(a.den());
  if (d.is_zero()) throw PoleAtSpecialization("denominator " + a.den().str() + " vanishes at " + sp.str());
  Cyclotomic n = eval(a.num());
  if (a.den().is_one()) return n;
  return n / d;
}

std::complex<double> eval_complex(const Scalar& a, std::complex<double> s0) {
  if (a.has_spectral()) throw Error("complex specialization of a spectral scalar");
  auto eval = [&](const Laurent& p) {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [m, c] : p.terms()) acc += c.get_d() * std::pow(s0, m.exp(kS));
    return acc;
  };
  const std::complex<double> d = eval(a.den());
  if (std::abs(d) == 0.0) throw PoleAtSpecialization("denominator vanishes");
  return eval(a.num()) / d;
}

SpecializedValue specialize(const Scalar& a, const Specialization& sp) {
  switch (sp.kind) {
    case Specialization::Kind::Generic: return a;
    case Specialization::Kind::Cyclotomic: return eval_cyclotomic(a, sp);
    case Specialization::Kind::Rational: return eval_rational(a, sp.s0);
    case Specialization::Kind::Complex: return eval_complex(a, sp.z0);
  }
  return a;
}

std::string to_string(const SpecializedValue& v) {
  struct Visitor {
    std::string operator()(const Scalar& x) const { return x.str(); }
    std::string operator()(const Cyclotomic& x) const { return x.str(); }
    std::string operator()(const mpq_class& x) const { return x.get_str(); }
    std::string operator()(const std::complex<double>& x) const {
      std::ostringstream os;
      os.precision(12);
      os << x.real() << (x.imag() < 0 ? " - " : " + ") << std::abs(x.imag()) << "i";
      return os.str();
    }
  };
  return std::visit(Visitor{}, v);
}

Scalar substitute(const Scalar& a, Var x, const mpq_class& value) {
  if (x == kS) throw Error("substitute only handles spectral variables");
  std::vector<Laurent::Term> terms;
  for (const auto& [m, c] : a.num().terms()) {
    const int e = m.exp(x);
    terms.emplace_back(m * Monomial::of(x, -e), c * qpow(value, e));
  }
  return Scalar::fraction(Laurent::from_terms(std::move(terms)), a.den());
}

}  // namespace tlcat
