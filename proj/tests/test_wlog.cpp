#include "support.hpp"

#include "virlog/wlog.hpp"

#include <gtest/gtest.h>

#include <set>

namespace virlog::wlog {
void PrintTo(const Element& e, std::ostream* os) { *os << e.str(); }
}  // namespace virlog::wlog

using namespace virlog;
using namespace virlog::wlog;
using testsupport::B;
using testsupport::Gen;

namespace {

Element G(int i, int m, MultiPoly k = MultiPoly(1)) { return Element::generator({i, m}, k); }
Element Z(const Rational& k) { return Element::central_element(MultiPoly(k)); }

Generator random_generator(Gen& g, int range) {
  return {static_cast<int>(g.integer(-range, range)), static_cast<int>(g.integer(-range, range))};
}

WordSum random_word(Gen& g, int max_len, int i_lo, int i_hi, int range) {
  Word w;
  int len = static_cast<int>(g.integer(0, max_len));
  for (int k = 0; k < len; ++k)
    w.push_back({static_cast<int>(g.integer(i_lo, i_hi)), static_cast<int>(g.integer(-range, range))});
  return WordSum::word(w, MultiPoly(g.nonzero()));
}

}  // namespace

TEST(WlogBracket, Examples) {
  EXPECT_EQ(wlog_bracket({-1, 2}, {1, -2}, Cocycle::closed), G(0, 0, MultiPoly(4)) + G(-1, 0, MultiPoly(2)) + Z(1));
  EXPECT_EQ(wlog_bracket({-1, 2}, {1, -2}, Cocycle::residue), G(0, 0, MultiPoly(4)) + G(-1, 0, MultiPoly(2)) + Z(-1));
  EXPECT_EQ(wlog_bracket({0, 3}, {0, -1}, Cocycle::none), G(0, 2, MultiPoly(4)));
  EXPECT_TRUE(wlog_bracket({2, 5}, {2, 5}, Cocycle::residue).is_zero());
}

TEST(WlogCocycle, Examples) {
  EXPECT_EQ(cocycle_closed_form({-1, 2}, {0, -2}), Rational(2, 3));
  EXPECT_EQ(cocycle_residue({3, 0}, {-1, 0}), Rational(1, 2));
  for (int m = -5; m <= 5; ++m)
    EXPECT_EQ(cocycle_residue({m + 1, 0}, {1 - m, 0}), Rational(static_cast<long>(m) * m * m - m, 12));
}

TEST(WlogCocycle, ClosedFormDomain) {
  EXPECT_THROW(cocycle_closed_form({2, 0}, {0, 0}), OutsideClosedDomain);
  EXPECT_THROW(wlog_bracket({0, 1}, {3, 1}, Cocycle::closed), OutsideClosedDomain);
  EXPECT_NO_THROW(cocycle_closed_form({1, 4}, {-7, -3}));
  EXPECT_THROW(parse_cocycle("both"), std::invalid_argument);
}

TEST(WlogCocycle, HorizontalSubalgebraIsCenterless) {
  for (int m = -6; m <= 6; ++m)
    for (int n = -6; n <= 6; ++n) EXPECT_TRUE(cocycle_residue({0, m}, {0, n}).is_zero());
}

TEST(WlogBracket, Antisymmetry) {
  for (Cocycle mode : {Cocycle::none, Cocycle::residue, Cocycle::closed})
    for (const auto& a : generator_box(4))
      for (const auto& b : generator_box(4)) {
        if (mode == Cocycle::closed && !in_closed_domain(a, b)) continue;
        EXPECT_EQ(wlog_bracket(a, b, mode), MultiPoly(-1) * wlog_bracket(b, a, mode)) << a.str() << " " << b.str();
      }
}

TEST(WlogBracket, JacobiAndCocycleIdentity) {
  EXPECT_TRUE(check_jacobi(2, Cocycle::none).passed());
  auto rep = check_jacobi(2, Cocycle::residue);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.skipped, 0u);
  EXPECT_THROW(check_jacobi(0, Cocycle::none), std::invalid_argument);
}

TEST(WlogBracket, JacobiOnRandomElements) {
  Gen g(501);
  auto rnd = [&g] {
    Element e;
    for (int k = 0; k < 3; ++k) e.add(random_generator(g, 5), MultiPoly(g.rational()));
    return e;
  };
  for (int k = 0; k < 40; ++k) {
    Element x = rnd(), y = rnd(), z = rnd();
    auto nested = [](const Element& a, const Element& b, const Element& c) {
      return wlog_bracket(wlog_bracket(a, b, Cocycle::none), c, Cocycle::residue);
    };
    EXPECT_TRUE((nested(x, y, z) + nested(y, z, x) + nested(z, x, y)).is_zero());
  }
}

TEST(WlogInvolution, AntiAutomorphismAndInvolution) {
  for (const auto& a : generator_box(4))
    for (const auto& b : generator_box(4)) {
      Element ea = Element::generator(a), eb = Element::generator(b);
      EXPECT_EQ(antiinvolution(wlog_bracket(a, b, Cocycle::none)),
                wlog_bracket(antiinvolution(eb), antiinvolution(ea), Cocycle::none))
          << a.str() << " " << b.str();
    }
  Gen g(502);
  for (int k = 0; k < 50; ++k) {
    WordSum w = random_word(g, 4, -3, 3, 3);
    EXPECT_EQ(antiinvolution(antiinvolution(w)), w);
    Element e = G(static_cast<int>(g.integer(-3, 3)), static_cast<int>(g.integer(-3, 3)), MultiPoly(g.rational())) + Z(g.rational());
    EXPECT_EQ(antiinvolution(antiinvolution(e)), e);
  }
}

// Substituting t -> -t in the residue shows the central term changes sign under theta.
TEST(WlogInvolution, ResidueCentralTermIsOdd) {
  for (const auto& a : generator_box(4))
    for (const auto& b : generator_box(4)) {
      Element ea = Element::generator(a), eb = Element::generator(b);
      Element lhs = antiinvolution(wlog_bracket(a, b, Cocycle::residue));
      Element rhs = wlog_bracket(antiinvolution(eb), antiinvolution(ea), Cocycle::residue);
      EXPECT_EQ(lhs.terms(), rhs.terms());
      EXPECT_EQ(lhs.central(), MultiPoly(-1) * rhs.central()) << a.str() << " " << b.str();
    }
}

// Brackets of t^(-1), t^(0), t^(1) reach every t^(i)(m), |i| <= 4, |m| <= 4:
// each new generator appears with a nonzero coefficient next to known ones.
TEST(WlogGeneration, LowDegreesGenerate) {
  std::set<Generator> known;
  for (int m = -8; m <= 8; ++m)
    for (int i = -1; i <= 1; ++i) known.insert({i, m});
  for (int step = 2; step <= 4; ++step)
    for (int sign : {1, -1}) {
      const int i = sign * step;
      for (int m = -4; m <= 4; ++m) {
        // Raising uses t^(1), whose bracket needs distinct modes; lowering uses t^(0).
        int a = m + 1, b = -1;
        if (sign > 0 && a == b) a = m - 1, b = 1;
        Generator x{i - sign, a}, y{sign > 0 ? 1 : 0, b};
        Element br = wlog_bracket(x, y, Cocycle::residue);
        ASSERT_TRUE(known.count(x));
        bool hit = false;
        for (const auto& [gen, c] : br.terms()) {
          if (gen == Generator{i, m}) hit = !c.is_zero();
          else EXPECT_TRUE(known.count(gen)) << gen.str();
        }
        EXPECT_TRUE(hit) << i << " " << m;
        for (int mm = m - 4; mm <= m + 4; ++mm) known.insert({i, mm});
      }
    }
}

TEST(WlogVacuum, Examples) {
  EXPECT_EQ(pairing({-1, -2}, {0, -2}, Cocycle::closed), Rational(-2, 3) * B());
  EXPECT_EQ(pairing({-1, -2}, {1, -2}, Cocycle::closed), Rational(-1) * B());
  EXPECT_EQ(pairing({0, -1}, {0, -1}, Cocycle::residue), MultiPoly());
  EXPECT_EQ(vacuum_expectation(WordSum::word({}), Cocycle::none), MultiPoly(1));
  EXPECT_EQ(vacuum_expectation(WordSum::word({{0, 1}, {0, -1}}), Cocycle::none), MultiPoly());
}

TEST(WlogVacuum, ClosedAndResidueAgreeUpToSign) {
  for (const auto& a : generator_box(2))
    for (const auto& b : generator_box(2)) {
      if (!in_closed_domain({a.i, -a.m}, b)) continue;
      MultiPoly cl = pairing(a, b, Cocycle::closed), re = pairing(a, b, Cocycle::residue);
      EXPECT_TRUE(cl == re || cl == MultiPoly(-1) * re) << a.str() << " " << b.str();
    }
}

TEST(WlogVacuum, AnnihilatorSuffixes) {
  Gen g(503);
  for (int k = 0; k < 80; ++k) {
    WordSum a = random_word(g, 3, -2, 2, 2);
    Generator p1{static_cast<int>(g.integer(1, 2)), static_cast<int>(g.integer(-2, 2))};
    Generator p2{static_cast<int>(g.integer(1, 2)), static_cast<int>(g.integer(-2, 2))};
    auto lhs = vacuum_expectation(a * WordSum::word({p1, p2}), Cocycle::residue, Polarization::log_degree);
    auto rhs = vacuum_expectation(a * WordSum::word({p2, p1}), Cocycle::residue, Polarization::log_degree);
    EXPECT_EQ(lhs, rhs);
    EXPECT_TRUE(lhs.is_zero());
    Generator q{static_cast<int>(g.integer(0, 2)), static_cast<int>(g.integer(-2, 2))};
    EXPECT_TRUE(vacuum_expectation(a * WordSum::word({q}), Cocycle::residue, Polarization::log_degree).is_zero());
  }
}

TEST(WlogVacuum, NormalOrderIsLinearAndStable) {
  Gen g(504);
  for (int k = 0; k < 40; ++k) {
    WordSum x = random_word(g, 3, -2, 2, 2), y = random_word(g, 3, -2, 2, 2);
    WordSum nx = normal_order(x, Cocycle::residue, Polarization::mode);
    EXPECT_EQ(normal_order(nx, Cocycle::residue, Polarization::mode), nx);
    WordSum sum = x;
    for (const auto& [w, c] : y.terms()) sum.add(w, c);
    EXPECT_EQ(vacuum_expectation(sum, Cocycle::residue),
              vacuum_expectation(x, Cocycle::residue) + vacuum_expectation(y, Cocycle::residue));
  }
}

TEST(WlogDeviations, EveryDeviationIsASignFlip) {
  auto devs = cocycle_deviations(3);
  EXPECT_EQ(devs.size(), 828u);
  for (const auto& d : devs) EXPECT_EQ(d.closed, -d.residue) << d.a.str() << " " << d.b.str();
}
