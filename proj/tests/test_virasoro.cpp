#include "support.hpp"

#include "virlog/virasoro.hpp"

#include <gtest/gtest.h>

using namespace virlog;
using namespace virlog::vir;
using testsupport::Gen;

namespace {

UEAElement W(std::vector<int> modes, MultiPoly k = MultiPoly(1), unsigned central = 0) {
  return UEAElement::word(std::move(modes), std::move(k), central);
}

UEAElement random_element(Gen& g, int max_len, int max_mode) {
  UEAElement e;
  int terms = static_cast<int>(g.integer(1, 3));
  for (int t = 0; t < terms; ++t) {
    std::vector<int> modes;
    int len = static_cast<int>(g.integer(0, max_len));
    for (int i = 0; i < len; ++i) modes.push_back(static_cast<int>(g.integer(-max_mode, max_mode)));
    e += W(modes, MultiPoly(g.nonzero()), static_cast<unsigned>(g.integer(0, 1)));
  }
  return e;
}

bool canonical(const UEAElement& e) {
  for (const auto& [w, _] : e.terms())
    if (!w.is_canonical()) return false;
  return true;
}

}  // namespace

TEST(Bracket, Examples) {
  EXPECT_EQ(bracket(VirMode::L(1), VirMode::L(-1)), W({0}, MultiPoly(2)));
  EXPECT_EQ(bracket(VirMode::L(2), VirMode::L(-2)), W({0}, MultiPoly(4)) + W({}, MultiPoly(Rational(1, 2)), 1));
  EXPECT_TRUE(bracket(VirMode::C(), VirMode::L(5)).is_zero());
}

TEST(Bracket, AntisymmetryAndJacobi) {
  auto lin = [](const UEAElement& x, int n) {
    // [x, L(n)] for x a combination of single modes and C.
    UEAElement out;
    for (const auto& [w, k] : x.terms())
      if (w.modes.size() == 1) out += k * bracket(VirMode::L(w.modes[0]), VirMode::L(n));
    return out;
  };
  for (int m = -6; m <= 6; ++m)
    for (int n = -6; n <= 6; ++n) {
      EXPECT_EQ(bracket(VirMode::L(m), VirMode::L(n)), MultiPoly(-1) * bracket(VirMode::L(n), VirMode::L(m)));
      for (int p = -6; p <= 6; ++p) {
        UEAElement j = lin(bracket(VirMode::L(m), VirMode::L(n)), p) + lin(bracket(VirMode::L(n), VirMode::L(p)), m) +
                       lin(bracket(VirMode::L(p), VirMode::L(m)), n);
        EXPECT_TRUE(j.is_zero()) << m << " " << n << " " << p;
      }
    }
}

TEST(NormalOrder, Examples) {
  EXPECT_EQ(normal_order(W({1, -1})), W({-1, 1}) + W({0}, MultiPoly(2)));
  EXPECT_EQ(normal_order(W({2, -2})), W({-2, 2}) + W({0}, MultiPoly(4)) + W({}, MultiPoly(Rational(1, 2)), 1));
  EXPECT_EQ(normal_order(W({1, -1, -1})), W({-1, -1, 1}) + W({-1, 0}, MultiPoly(4)) + W({-1}, MultiPoly(2)));
}

TEST(NormalOrder, TextForm) {
  EXPECT_EQ(W({-2, -1, -1}, MultiPoly(1), 2).str(), "C^2L(-2)L(-1)^2");
}

TEST(NormalOrder, CanonicalIdempotentLinearAssociative) {
  Gen g(201);
  for (int k = 0; k < 60; ++k) {
    UEAElement a = random_element(g, 3, 3), b = random_element(g, 3, 3);
    UEAElement na = normal_order(a);
    EXPECT_TRUE(canonical(na));
    EXPECT_EQ(normal_order(na), na);
    EXPECT_EQ(normal_order(a + MultiPoly(Rational(-2, 3)) * b), na + MultiPoly(Rational(-2, 3)) * normal_order(b));
    EXPECT_EQ(normal_order(a * b), normal_order(a * normal_order(b)));
  }
}

TEST(NormalOrder, PreservesDegree) {
  Gen g(202);
  for (int k = 0; k < 60; ++k) {
    std::vector<int> modes;
    int len = static_cast<int>(g.integer(1, 4));
    for (int i = 0; i < len; ++i) modes.push_back(static_cast<int>(g.integer(-3, 3)));
    PBWWord src{modes, 0};
    UEAElement n = normal_order(W(modes));
    for (const auto& [w, _] : n.terms()) EXPECT_EQ(w.degree(), src.degree());
  }
}

TEST(Transpose, Examples) {
  EXPECT_EQ(transpose(W({-1, -2})), normal_order(W({2, 1})));
  EXPECT_EQ(transpose(W({})), W({}));
}

TEST(Transpose, InvolutiveAntiAutomorphism) {
  Gen g(203);
  for (int k = 0; k < 60; ++k) {
    UEAElement x = random_element(g, 3, 3), y = random_element(g, 3, 3);
    EXPECT_EQ(transpose(transpose(x)), normal_order(x));
    EXPECT_EQ(transpose(x * y), multiply(transpose(y), transpose(x)));
  }
}

TEST(Specialize, CentralToScalar) {
  UEAElement e = normal_order(W({2, -2}));
  EXPECT_EQ(specialize_central(e, testsupport::C()),
            W({-2, 2}) + W({0}, MultiPoly(4)) + W({}, MultiPoly(Rational(1, 2)) * testsupport::C()));
}
