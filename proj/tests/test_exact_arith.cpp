#include "support.hpp"

#include "virlog/matrix.hpp"
#include "virlog/multipoly.hpp"
#include "virlog/series.hpp"
#include "virlog/unipoly.hpp"

#include <gtest/gtest.h>

using namespace virlog;
using namespace testsupport;

TEST(Rational, LowestTermsAndText) {
  EXPECT_EQ(Rational(4, -6).str(), "-2/3");
  EXPECT_EQ(Rational(10, 5).str(), "2");
  EXPECT_EQ(Rational(0, 7).str(), "0");
  EXPECT_EQ(Rational(0, 7).den(), 1);
  EXPECT_EQ(Rational::parse("-15/16"), Rational(-15, 16));
  EXPECT_EQ(Rational::parse("+3"), Rational(3));
}

TEST(Rational, RejectsInexactLiterals) {
  for (const char* bad : {"0.5", "1e3", "", "1/0", "a", "1/-2", "1/2/3"})
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
}

TEST(MultiPoly, GradedLexText) {
  MultiPoly p = MultiPoly(2) * C() * H() + H() * H() * H() - MultiPoly(Rational(3, 2)) * C() + MultiPoly(7);
  EXPECT_EQ(p.str(), "h^3 + 2c*h - (3/2)c + 7");
  EXPECT_EQ(MultiPoly().str(), "0");
}

TEST(MultiPoly, DerivativeExamples) {
  MultiPoly h = H(), c = C(), one(1);
  MultiPoly entry = MultiPoly(24) * h * (h + one) * (one + MultiPoly(2) * h);
  EXPECT_EQ(entry.derivative(Symbol::h), MultiPoly(144) * h * h + MultiPoly(144) * h + MultiPoly(24));
  EXPECT_TRUE(MultiPoly(5).derivative(Symbol::h).is_zero());
  EXPECT_EQ((MultiPoly(16) * h + MultiPoly(2) * c).derivative(Symbol::h), MultiPoly(16));
  EXPECT_THROW(symbol_from_name("q"), std::invalid_argument);
}

TEST(MultiPoly, DerivativeLinearAndLeibniz) {
  Gen g(101);
  std::vector<Symbol> vars{Symbol::c, Symbol::h, Symbol::b};
  for (int k = 0; k < 200; ++k) {
    MultiPoly p = g.poly(vars), q = g.poly(vars);
    Rational a = g.rational();
    for (Symbol s : vars) {
      EXPECT_EQ((a * p + q).derivative(s), a * p.derivative(s) + q.derivative(s));
      EXPECT_EQ((p * q).derivative(s), p.derivative(s) * q + p * q.derivative(s));
    }
  }
}

TEST(MultiPoly, ExactDivision) {
  Gen g(102);
  std::vector<Symbol> vars{Symbol::c, Symbol::h};
  for (int k = 0; k < 100; ++k) {
    MultiPoly p = g.poly(vars), q = g.poly(vars);
    if (q.is_zero()) continue;
    EXPECT_EQ(divide_exact(p * q, q), p);
  }
  EXPECT_THROW(divide_exact(H() + MultiPoly(1), C()), std::domain_error);
}

TEST(Bareiss, Examples) {
  EXPECT_EQ(bareiss_determinant(ExactMatrix<Rational>::identity(3)), Rational(1));
  ExactMatrix<MultiPoly> m{{MultiPoly(2) * H(), MultiPoly(2)}, {MultiPoly(0), MultiPoly(2) * H()}};
  EXPECT_EQ(bareiss_determinant(m), MultiPoly(4) * H() * H());
  EXPECT_THROW(bareiss_determinant(ExactMatrix<Rational>(2, 3)), std::invalid_argument);
}

TEST(Bareiss, AgreesWithCofactorExpansion) {
  Gen g(103);
  std::vector<Symbol> vars{Symbol::c, Symbol::h};
  for (std::size_t n = 1; n <= 4; ++n)
    for (int k = 0; k < 25; ++k) {
      ExactMatrix<MultiPoly> m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = g.coin() ? g.poly(vars, 2, 1, 3) : MultiPoly();
      EXPECT_EQ(bareiss_determinant(m), cofactor_determinant(m));
    }
}

TEST(NullSpace, Examples) {
  EXPECT_EQ(null_space(ExactMatrix<Rational>(2, 2)).size(), 2u);
  auto k = null_space(ExactMatrix<Rational>{{0, 2}, {0, 0}});
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (std::vector<Rational>{1, 0}));
  EXPECT_TRUE(null_space(ExactMatrix<Rational>{{1, 2}, {3, 4}}).empty());
}

TEST(NullSpace, KernelVectorsAreAnnihilated) {
  Gen g(104);
  for (int k = 0; k < 200; ++k) {
    auto m = g.rational_matrix(static_cast<std::size_t>(g.integer(1, 5)), static_cast<std::size_t>(g.integer(1, 6)));
    auto basis = null_space(m);
    EXPECT_EQ(basis.size() + rank(m), m.cols());
    for (const auto& v : basis)
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational s;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
        EXPECT_TRUE(s.is_zero());
      }
  }
}

TEST(RationalRoots, Examples) {
  RatPoly x = RatPoly::identity(Symbol::x);
  auto r = rational_roots(x * (x - RatPoly::constant(Symbol::x, 2)));
  EXPECT_EQ(r.roots, (std::vector<std::pair<Rational, unsigned>>{{0, 1}, {2, 1}}));
  EXPECT_EQ(rational_roots(x * x).roots, (std::vector<std::pair<Rational, unsigned>>{{0, 2}}));
  RatPoly irr = x * x + RatPoly::constant(Symbol::x, 1);
  auto r2 = rational_roots(irr);
  EXPECT_TRUE(r2.roots.empty());
  EXPECT_EQ(r2.residual, irr);
  EXPECT_THROW(rational_roots(RatPoly(Symbol::x)), std::domain_error);
}

TEST(RationalRoots, MultiplicitiesAreExact) {
  Gen g(105);
  for (int k = 0; k < 100; ++k) {
    RatPoly p = RatPoly::constant(Symbol::x, g.nonzero());
    int factors = static_cast<int>(g.integer(1, 4));
    for (int f = 0; f < factors; ++f) p = p * RatPoly::linear_factor(Symbol::x, g.rational(4, 3));
    if (g.coin()) p = p * RatPoly(Symbol::x, {Rational(2), Rational(0), Rational(1)});
    auto rep = rational_roots(p);
    int total = 0;
    for (const auto& [root, mult] : rep.roots) {
      RatPoly f = RatPoly::constant(Symbol::x, 1);
      for (unsigned i = 0; i < mult; ++i) f = f * RatPoly::linear_factor(Symbol::x, root);
      EXPECT_TRUE(divmod(p, f).second.is_zero());
      EXPECT_FALSE(divmod(p, f * RatPoly::linear_factor(Symbol::x, root)).second.is_zero());
      total += static_cast<int>(mult);
    }
    EXPECT_EQ(total, factors);
  }
}

TEST(SquarefreePart, Examples) {
  RatPoly x = RatPoly::identity(Symbol::x), one = RatPoly::constant(Symbol::x, 1);
  EXPECT_EQ(squarefree_part((x - one) * (x - one)), x - one);
  RatPoly x2 = x * (x - RatPoly::constant(Symbol::x, 2));
  EXPECT_EQ(squarefree_part(x2), x2);
  RatPoly quartic(Symbol::x, {0, 0, 1, 2, 1});
  EXPECT_EQ(squarefree_part(quartic), x * (x + one));
  EXPECT_THROW(squarefree_part(RatPoly(Symbol::x)), std::domain_error);
}

TEST(LogSeries, Examples) {
  auto l = log_series(TruncatedSeries(Symbol::x, 4, {0, 1}));
  EXPECT_EQ(l.coefficients(), (std::vector<Rational>{0, 1, Rational(-1, 2), Rational(1, 3)}));
  EXPECT_EQ(log_series(TruncatedSeries(Symbol::x, 4)), TruncatedSeries(Symbol::x, 4));
  auto l2 = log_series(TruncatedSeries(Symbol::x, 5, {0, 0, 1}));
  EXPECT_EQ(l2.coefficients(), (std::vector<Rational>{0, 0, 1, 0, Rational(-1, 2)}));
  EXPECT_THROW(log_series(TruncatedSeries(Symbol::x, 3, {1, 1})), std::domain_error);
}

// exp(l) = sum l^k / k!, an oracle written independently of log_series.
static TruncatedSeries exp_series(const TruncatedSeries& l) {
  TruncatedSeries out(l.variable(), l.order(), {1});
  TruncatedSeries power(l.variable(), l.order(), {1});
  for (std::size_t k = 1; k < l.order(); ++k) {
    power = power * l;
    out += (Rational(1) / factorial(k)) * power;
  }
  return out;
}

TEST(LogSeries, ExpInvertsLog) {
  Gen g(106);
  for (int k = 0; k < 50; ++k) {
    std::size_t n = static_cast<std::size_t>(g.integer(1, 8));
    TruncatedSeries a(Symbol::x, n);
    for (std::size_t i = 1; i < n; ++i) a[i] = g.rational(4, 5);
    TruncatedSeries one_plus_a = a;
    one_plus_a[0] = Rational(1);
    EXPECT_EQ(exp_series(log_series(a)), one_plus_a);
  }
}
