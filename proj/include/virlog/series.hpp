#pragma once

// Power series in one variable truncated at a fixed order N (exponents 0..N-1).

#include "virlog/unipoly.hpp"

#include <stdexcept>
#include <vector>

namespace virlog {

class TruncatedSeries {
public:
  TruncatedSeries(Symbol var, std::size_t order) : var_(var), coeffs_(order, Rational(0)) {
    if (order == 0) throw std::invalid_argument("truncation order must be at least 1");
  }
  TruncatedSeries(Symbol var, std::size_t order, const std::vector<Rational>& coeffs)
      : TruncatedSeries(var, order) {
    for (std::size_t i = 0; i < coeffs.size() && i < order; ++i) coeffs_[i] = coeffs[i];
  }

  Symbol variable() const { return var_; }
  std::size_t order() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  Rational& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check(o);
    for (std::size_t i = 0; i < order(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator*(const Rational& k, TruncatedSeries a) {
    for (auto& c : a.coeffs_) c *= k;
    return a;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check(b);
    TruncatedSeries out(a.var_, a.order());
    for (std::size_t i = 0; i < a.order(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < a.order(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }

  std::string str() const {
    std::vector<std::pair<Rational, std::string>> ts;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k].is_zero()) continue;
      std::string mono = k == 0 ? "" : std::string(symbol_name(var_)) + (k > 1 ? "^" + std::to_string(k) : "");
      ts.emplace_back(coeffs_[k], mono);
    }
    return join_terms(ts) + " + O(" + std::string(symbol_name(var_)) + "^" + std::to_string(order()) + ")";
  }

private:
  void check(const TruncatedSeries& o) const {
    if (o.var_ != var_ || o.order() != order()) throw std::invalid_argument("series shape mismatch");
  }

  Symbol var_;
  std::vector<Rational> coeffs_;
};

/// log(1 + a) = sum_{n>0} (-1)^{n-1} a^n / n, for a with zero constant term.
inline TruncatedSeries log_series(const TruncatedSeries& a) {
  if (!a[0].is_zero()) throw std::domain_error("log series needs a zero constant term");
  TruncatedSeries out(a.variable(), a.order());
  TruncatedSeries power = a;
  // a^n vanishes below x^n, so n < order suffices.
  for (std::size_t n = 1; n < a.order(); ++n) {
    Rational k(n % 2 == 1 ? 1L : -1L, static_cast<long>(n));
    out += k * power;
    power = power * a;
  }
  return out;
}

}  // namespace virlog
