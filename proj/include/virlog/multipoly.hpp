#pragma once

// Sparse multivariate polynomials over Q in a fixed symbol registry.
//
// Terms are kept in graded-lex order, leading term first. Lex ties are broken
// by registry order, so `c` outranks `h`, which outranks `h1`, and so on.

#include "virlog/rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace virlog {

enum class Symbol : std::uint8_t { c, h, h1, h2, h3, t, b, lambda, mu, beta, s, x };

inline constexpr std::size_t kSymbolCount = 12;

inline constexpr std::array<std::string_view, kSymbolCount> kSymbolNames = {
    "c", "h", "h1", "h2", "h3", "t", "b", "lambda", "mu", "beta", "s", "x"};

inline std::string_view symbol_name(Symbol s) { return kSymbolNames[static_cast<std::size_t>(s)]; }

inline std::optional<Symbol> find_symbol(std::string_view name) {
  for (std::size_t i = 0; i < kSymbolCount; ++i)
    if (kSymbolNames[i] == name) return static_cast<Symbol>(i);
  return std::nullopt;
}

inline Symbol symbol_from_name(std::string_view name) {
  if (auto s = find_symbol(name)) return *s;
  throw std::invalid_argument("unknown symbol '" + std::string(name) + "'");
}

using Exponents = std::array<std::uint16_t, kSymbolCount>;

inline unsigned total_degree(const Exponents& e) {
  unsigned d = 0;
  for (auto v : e) d += v;
  return d;
}

/// Strict "a comes before b" in graded-lex, i.e. a is the larger monomial.
struct GrlexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

class MultiPoly {
public:
  using TermMap = std::map<Exponents, Rational, GrlexDescending>;

  MultiPoly() = default;
  MultiPoly(const Rational& c) {  // NOLINT(implicit)
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
  }
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT(implicit)
  MultiPoly(int c) : MultiPoly(Rational(c)) {}   // NOLINT(implicit)

  static MultiPoly var(Symbol s, unsigned power = 1) {
    Exponents e{};
    e[static_cast<std::size_t>(s)] = static_cast<std::uint16_t>(power);
    return monomial(e, Rational(1));
  }
  static MultiPoly monomial(const Exponents& e, const Rational& coeff) {
    MultiPoly p;
    if (!coeff.is_zero()) p.terms_.emplace(e, coeff);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && virlog::total_degree(terms_.begin()->first) == 0);
  }
  std::optional<Rational> constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) return std::nullopt;
    return terms_.begin()->second;
  }
  Rational constant_term() const {
    auto it = terms_.find(Exponents{});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const Exponents& leading_exponents() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  /// Symbols with a nonzero exponent somewhere, in registry order.
  std::vector<Symbol> variables() const {
    Exponents used{};
    for (const auto& [e, _] : terms_)
      for (std::size_t i = 0; i < kSymbolCount; ++i) used[i] = std::max(used[i], e[i]);
    std::vector<Symbol> out;
    for (std::size_t i = 0; i < kSymbolCount; ++i)
      if (used[i]) out.push_back(static_cast<Symbol>(i));
    return out;
  }

  unsigned degree_in(Symbol s) const {
    unsigned d = 0;
    for (const auto& [e, _] : terms_) d = std::max<unsigned>(d, e[static_cast<std::size_t>(s)]);
    return d;
  }

  unsigned total_degree() const {
    return terms_.empty() ? 0 : virlog::total_degree(terms_.begin()->first);
  }

  void add_term(const Exponents& e, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MultiPoly operator-() const {
    MultiPoly out = *this;
    for (auto& [_, c] : out.terms_) c = -c;
    return out;
  }
  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e;
        for (std::size_t i = 0; i < kSymbolCount; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
        out.add_term(e, ca * cb);
      }
    return out;
  }
  friend MultiPoly operator*(const Rational& k, MultiPoly p) {
    if (k.is_zero()) return {};
    for (auto& [_, c] : p.terms_) c *= k;
    return p;
  }
  friend MultiPoly operator/(MultiPoly p, const Rational& k) {
    if (k.is_zero()) throw std::domain_error("division of polynomial by zero");
    for (auto& [_, c] : p.terms_) c /= k;
    return p;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  /// Formal partial derivative.
  MultiPoly derivative(Symbol s) const {
    MultiPoly out;
    std::size_t k = static_cast<std::size_t>(s);
    for (const auto& [e, c] : terms_) {
      if (e[k] == 0) continue;
      Exponents d = e;
      --d[k];
      out.add_term(d, c * Rational(static_cast<long>(e[k])));
    }
    return out;
  }

  /// Substitutes a rational value for one symbol.
  MultiPoly substitute(Symbol s, const Rational& value) const {
    MultiPoly out;
    std::size_t k = static_cast<std::size_t>(s);
    for (const auto& [e, c] : terms_) {
      Exponents d = e;
      d[k] = 0;
      out.add_term(d, c * pow(value, e[k]));
    }
    return out;
  }

  /// Substitutes a polynomial for one symbol.
  MultiPoly substitute(Symbol s, const MultiPoly& value) const {
    MultiPoly out;
    std::size_t k = static_cast<std::size_t>(s);
    std::vector<MultiPoly> powers{MultiPoly(1)};
    for (const auto& [e, c] : terms_) {
      while (powers.size() <= e[k]) powers.push_back(powers.back() * value);
      Exponents d = e;
      d[k] = 0;
      out += monomial(d, c) * powers[e[k]];
    }
    return out;
  }

  /// Exact quotient a / b; throws if b does not divide a.
  friend MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (auto k = b.constant_value()) return a / *k;
    MultiPoly q, r = a;
    const Exponents& lb = b.leading_exponents();
    const Rational& cb = b.leading_coefficient();
    while (!r.is_zero()) {
      const Exponents& lr = r.leading_exponents();
      Exponents e;
      for (std::size_t i = 0; i < kSymbolCount; ++i) {
        if (lr[i] < lb[i]) throw std::domain_error("polynomial division is not exact");
        e[i] = static_cast<std::uint16_t>(lr[i] - lb[i]);
      }
      MultiPoly t = monomial(e, r.leading_coefficient() / cb);
      q += t;
      r -= t * b;
    }
    return q;
  }

  std::string str() const;

private:
  TermMap terms_;
};

inline MultiPoly pow(const MultiPoly& base, unsigned long e) {
  MultiPoly out(1);
  for (unsigned long i = 0; i < e; ++i) out *= base;
  return out;
}

inline std::string monomial_str(const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < kSymbolCount; ++i) {
    if (!e[i]) continue;
    if (!out.empty()) out += '*';
    out += kSymbolNames[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

/// Renders one signed term body (no leading sign) given |coeff| and its monomial.
inline std::string term_body(const Rational& magnitude, const std::string& mono) {
  if (mono.empty()) return magnitude.str();
  if (magnitude.is_one()) return mono;
  if (magnitude.is_integer()) return magnitude.str() + mono;
  return "(" + magnitude.str() + ")" + mono;
}

/// Joins (coefficient, monomial-text) pairs as "a - b + c".
inline std::string join_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, mono] : terms) {
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    out += term_body(abs(c), mono);
    first = false;
  }
  return out;
}

inline std::string MultiPoly::str() const {
  std::vector<std::pair<Rational, std::string>> ts;
  ts.reserve(terms_.size());
  for (const auto& [e, c] : terms_) ts.emplace_back(c, monomial_str(e));
  return join_terms(ts);
}

inline std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

// Ring helpers shared by the templates over {Rational, MultiPoly}.

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
inline Rational divide_exact(const Rational& a, const Rational& b) { return a / b; }
inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const MultiPoly& p) { return p.str(); }

template <class R>
R from_rational(const Rational& r) {
  return R(r);
}

}  // namespace virlog
