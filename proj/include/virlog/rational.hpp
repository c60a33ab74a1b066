#pragma once

// Arbitrary-precision rationals on top of GMP's mpq_class.
//
// Values are always canonical: lowest terms, positive denominator, zero is 0/1.
// Text form is "p/q", or "p" when q == 1.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace virlog {

class Rational {
public:
  Rational() = default;
  Rational(long v) : v_(v) {}                       // NOLINT(implicit)
  Rational(int v) : v_(static_cast<long>(v)) {}     // NOLINT(implicit)
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rational(const mpz_class& z) : v_(z) {}

  /// Parses "p/q" or an integer literal. Decimal points and exponents are rejected.
  static Rational parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto valid_int = [](std::string_view part) {
      std::size_t i = 0;
      if (!part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
      if (i == part.size()) return false;
      for (; i < part.size(); ++i)
        if (part[i] < '0' || part[i] > '9') return false;
      return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
      throw std::invalid_argument("not an exact rational literal: '" + s + "'");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
  }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  /// Fits-in-long check; callers use this for exponents and indices.
  bool fits_long() const { return is_integer() && v_.get_num().fits_slong_p(); }
  long to_long() const {
    if (!fits_long()) throw std::range_error("rational is not a machine integer: " + str());
    return v_.get_num().get_si();
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  mpq_class v_{0};
};

inline Rational pow(const Rational& base, unsigned long e) {
  Rational out(1);
  for (unsigned long i = 0; i < e; ++i) out *= base;
  return out;
}

inline Rational factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

inline Rational binomial(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace virlog
