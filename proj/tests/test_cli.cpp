#include "support.hpp"

#include "virlog/serialize.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

using namespace virlog;
using namespace virlog::io;
using testsupport::Gen;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(VIRLOG_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Serialize, RationalAndPolynomialRoundTrip) {
  Gen g(601);
  std::vector<Symbol> vars{Symbol::c, Symbol::h, Symbol::b, Symbol::x};
  for (int k = 0; k < 200; ++k) {
    Rational r = g.rational(1000, 999);
    EXPECT_EQ(parse_rational(Json::parse(to_json(r).dump())), r);
    MultiPoly p = MultiPoly(g.rational()) * g.poly(vars, 4, 3);
    EXPECT_EQ(parse_multipoly(Json::parse(to_json(p).dump())), p);
  }
  EXPECT_THROW(parse_rational(Json(0.5)), std::invalid_argument);
  EXPECT_THROW(parse_rational(Json("0.5")), std::invalid_argument);
}

TEST(Serialize, StructuredRoundTrip) {
  Gen g(602);
  for (int k = 0; k < 50; ++k) {
    auto m = g.rational_matrix(3, 4);
    EXPECT_EQ(parse_matrix<Rational>(Json::parse(to_json(m).dump())), m);

    NumericModule mod(g.rational(), g.rational(), static_cast<unsigned>(g.integer(1, 2)));
    int level = static_cast<int>(g.integer(0, 4));
    ModuleVector<Rational> v(mod, level);
    for (const auto& l : level_basis(mod, level))
      if (g.coin()) v.add(l, g.nonzero());
    EXPECT_EQ(parse_module_vector<Rational>(Json::parse(to_json(v).dump())), v);

    EulerOperator<Rational> op;
    for (int t = 0; t < 3; ++t) op.add(static_cast<int>(g.integer(-2, 3)), static_cast<unsigned>(g.integer(0, 3)), g.rational());
    EXPECT_EQ(parse_euler<Rational>(Json::parse(to_json(op).dump())), op);

    LogSeries<MultiPoly> s;
    for (int t = 0; t < 3; ++t)
      s.add(g.rational(5, 4), static_cast<unsigned>(g.integer(0, 2)), g.poly({Symbol::b}));
    EXPECT_EQ(parse_log_series<MultiPoly>(Json::parse(to_json(s).dump())), s);

    wlog::Element e;
    for (int t = 0; t < 3; ++t)
      e.add({static_cast<int>(g.integer(-3, 3)), static_cast<int>(g.integer(-3, 3))}, MultiPoly(g.rational()));
    e.add_central(MultiPoly(g.rational()));
    EXPECT_EQ(parse_element(Json::parse(to_json(e).dump())), e);
  }
}

TEST(Serialize, WordListsPartsLargestFirst) {
  NumericModule mod(Rational(0), Rational(5, 8), 1);
  ModuleVector<Rational> v(mod, 3);
  v.add(BasisLabel{{1, 2}, 1}, Rational(3));
  Json j = to_json(v);
  EXPECT_EQ(j["terms"][0]["word"], Json::array({2, 1}));
}

TEST(Serialize, IndicialRoundTrip) {
  auto d = fusion_data(Rational(-2), Rational(-1, 8), Rational(-1, 8));
  auto back = parse_indicial(Json::parse(to_json(d).dump()));
  EXPECT_EQ(back.level, d.level);
  EXPECT_EQ(back.indicial, d.indicial);
  EXPECT_EQ(back.fusion, d.fusion);
  EXPECT_EQ(back.roots.roots, d.roots.roots);
  EXPECT_EQ(back.logarithmic, d.logarithmic);
}

TEST(Cli, OutputIsDeterministic) {
  for (const char* args : {"fusion --c 0 --h1 5/8 --h2 5/8 --json", "det --level 2 --jordan 2 --symbolic --json",
                           "wlog cocycle --deviations --range 2 --json"}) {
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_FALSE(a.out.empty()) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Cli, FusionJson) {
  auto r = run("fusion --c -2 --h1 -1/8 --h2 -1/8 --json");
  ASSERT_EQ(r.code, 0);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["level"], 2);
  EXPECT_EQ(j["logarithmic"], true);
  EXPECT_EQ(j["roots"], Json::parse(R"([["0", 2]])"));
}

TEST(Cli, ValuesMatchLibrary) {
  auto r = run("ope-coeff --c 1/2 --h 1/16 --json");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1/4"), std::string::npos);
  auto b = run("determine-b --h 5/8");
  ASSERT_EQ(b.code, 0);
  EXPECT_NE(b.out.find("5/2"), std::string::npos);
}

TEST(Cli, ErrorExitCodes) {
  EXPECT_EQ(run("ope-coeff --c 0 --h 1").code, 1);
  EXPECT_EQ(run("fusion --c 0.5 --h1 0 --h2 0").code, 1);
  EXPECT_EQ(run("no-such-command").code, 1);
  EXPECT_EQ(run("fixture --case c0 --p 3").code, 1);
  EXPECT_EQ(run("wlog cocycle --a 2,0 --b 0,0 --cocycle closed").code, 1);
  EXPECT_EQ(run("shapovalov --c 1 --level 2 --symbolic").code, 1);
}
