#pragma once

// Generators and small oracles shared by the test suites.

#include "virlog/matrix.hpp"
#include "virlog/multipoly.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace testsupport {

using virlog::ExactMatrix;
using virlog::MultiPoly;
using virlog::Rational;
using virlog::Symbol;

class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long span = 9, long max_den = 7) { return Rational(integer(-span, span), integer(1, max_den)); }
  Rational nonzero(long span = 9, long max_den = 7) {
    for (;;)
      if (Rational r = rational(span, max_den); !r.is_zero()) return r;
  }

  /// Up to `terms` monomials in the given symbols with exponents <= max_exp.
  MultiPoly poly(const std::vector<Symbol>& vars, int terms = 3, int max_exp = 2, long span = 5) {
    MultiPoly p;
    for (int t = 0; t < terms; ++t) {
      MultiPoly m(Rational(integer(-span, span)));
      for (Symbol s : vars) m *= MultiPoly::var(s, static_cast<unsigned>(integer(0, max_exp)));
      p += m;
    }
    return p;
  }

  ExactMatrix<Rational> rational_matrix(std::size_t rows, std::size_t cols, long span = 3) {
    ExactMatrix<Rational> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = integer(0, 2) == 0 ? Rational(0) : Rational(integer(-span, span));
    return m;
  }

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

/// Laplace expansion along the first row; exponential, for small matrices only.
template <class R>
R cofactor_determinant(const ExactMatrix<R>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return R(1);
  if (n == 1) return m(0, 0);
  R det(0);
  for (std::size_t col = 0; col < n; ++col) {
    ExactMatrix<R> minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != col) minor(i - 1, k++) = m(i, j);
    R term = m(0, col) * cofactor_determinant(minor);
    if (col % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

inline MultiPoly C() { return MultiPoly::var(Symbol::c); }
inline MultiPoly H() { return MultiPoly::var(Symbol::h); }
inline MultiPoly B() { return MultiPoly::var(Symbol::b); }

}  // namespace testsupport
