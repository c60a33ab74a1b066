#pragma once

// Dense univariate polynomials. Coefficients are stored low degree first and the
// leading coefficient is never zero; the zero polynomial has no coefficients.

#include "virlog/multipoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace virlog {

template <class R>
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(Symbol var) : var_(var) {}
  UniPoly(Symbol var, std::vector<R> coeffs) : var_(var), coeffs_(std::move(coeffs)) { trim(); }

  /// The monomial x.
  static UniPoly identity(Symbol var) { return UniPoly(var, {R(0), R(1)}); }
  static UniPoly constant(Symbol var, R c) { return UniPoly(var, {std::move(c)}); }
  /// x - root.
  static UniPoly linear_factor(Symbol var, const R& root) { return UniPoly(var, {-root, R(1)}); }

  Symbol variable() const { return var_; }
  const std::vector<R>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  R coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : R(0); }
  const R& leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  UniPoly operator-() const {
    UniPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }
  UniPoly& operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) { return *this += -o; }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.var_);
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(a.var_, std::move(out));
  }
  friend UniPoly operator*(const R& k, UniPoly p) {
    for (auto& c : p.coeffs_) c = k * c;
    p.trim();
    return p;
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }

  UniPoly derivative() const {
    if (coeffs_.size() <= 1) return UniPoly(var_);
    std::vector<R> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(Rational(static_cast<long>(i)) * coeffs_[i]);
    return UniPoly(var_, std::move(out));
  }

  R evaluate(const R& at) const {
    R acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  /// p(var + shift).
  UniPoly shifted(const R& shift) const {
    UniPoly out(var_), xs = UniPoly(var_, {shift, R(1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * xs + constant(var_, *it);
    return out;
  }

  /// Same coefficients, renamed variable.
  UniPoly renamed(Symbol var) const { return UniPoly(var, coeffs_); }

  MultiPoly to_multipoly() const {
    MultiPoly out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out += MultiPoly(coeffs_[i]) * MultiPoly::var(var_, static_cast<unsigned>(i));
    return out;
  }

  std::string str() const {
    std::vector<std::pair<Rational, std::string>> ts;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      if (is_zero_coeff(coeffs_[k])) continue;
      std::string mono = k == 0 ? "" : std::string(symbol_name(var_)) + (k > 1 ? "^" + std::to_string(k) : "");
      if constexpr (std::is_same_v<R, Rational>) {
        ts.emplace_back(coeffs_[k], mono);
      } else {
        // Polynomial coefficients are parenthesised unless they are rational constants.
        if (auto c = coeffs_[k].constant_value()) {
          ts.emplace_back(*c, mono);
        } else {
          std::string body = "(" + coeffs_[k].str() + ")" + (mono.empty() ? "" : mono);
          ts.emplace_back(Rational(1), body);
        }
      }
    }
    return join_terms(ts);
  }

private:
  static bool is_zero_coeff(const R& c) { return virlog::is_zero(c); }
  void trim() {
    while (!coeffs_.empty() && is_zero_coeff(coeffs_.back())) coeffs_.pop_back();
  }

  Symbol var_ = Symbol::x;
  std::vector<R> coeffs_;
};

using RatPoly = UniPoly<Rational>;

/// Euclidean division over Q.
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) return {RatPoly(a.variable()), a};
  std::vector<Rational> quot(static_cast<std::size_t>(dq) + 1, Rational(0));
  for (int k = dq; k >= 0; --k) {
    Rational f = rem[static_cast<std::size_t>(k + db)] / b.leading();
    quot[static_cast<std::size_t>(k)] = f;
    if (f.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= f * b.coeff(static_cast<std::size_t>(j));
  }
  return {RatPoly(a.variable(), std::move(quot)), RatPoly(a.variable(), std::move(rem))};
}

inline RatPoly monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  return (Rational(1) / p.leading()) * p;
}

inline RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// p / gcd(p, p'), made monic.
inline RatPoly squarefree_part(const RatPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree part of the zero polynomial");
  return monic(divmod(p, gcd(p, p.derivative())).first);
}

struct RootReport {
  std::vector<std::pair<Rational, unsigned>> roots;  // ascending by root
  RatPoly residual;                                  // monic factor with no rational roots
};

namespace detail {

inline std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace detail

/// All rational roots with exact multiplicities, plus the residual factor.
inline RootReport rational_roots(const RatPoly& p) {
  if (p.is_zero()) throw std::domain_error("rational roots of the zero polynomial");
  RootReport out;
  RatPoly rest = monic(p);
  Symbol var = p.variable();

  unsigned zero_mult = 0;
  while (rest.degree() > 0 && rest.coeff(0).is_zero()) {
    rest = divmod(rest, RatPoly::identity(var)).first;
    ++zero_mult;
  }
  if (zero_mult) out.roots.emplace_back(Rational(0), zero_mult);

  if (rest.degree() > 0) {
    // Clear denominators to get an integer polynomial with the same roots.
    mpz_class lcm_den = 1;
    for (const auto& c : rest.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
    mpz_class lead = (rest.leading() * Rational(lcm_den)).num();
    mpz_class trail = (rest.coeff(0) * Rational(lcm_den)).num();
    std::vector<Rational> candidates;
    for (const auto& num : detail::positive_divisors(trail))
      for (const auto& den : detail::positive_divisors(lead)) {
        Rational r(mpq_class(num, den));
        candidates.push_back(r);
        candidates.push_back(-r);
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      unsigned mult = 0;
      while (rest.degree() > 0 && rest.evaluate(r).is_zero()) {
        rest = divmod(rest, RatPoly::linear_factor(var, r)).first;
        ++mult;
      }
      if (mult) out.roots.emplace_back(r, mult);
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.residual = monic(rest);
  return out;
}

}  // namespace virlog
