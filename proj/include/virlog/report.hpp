#pragma once

// Reproduction fixtures run by `virlog report`. Each fixture compares a computed
// value against a literal expected value and carries a provenance tag:
//   PRINTED  the value is stated in the source text
//   DERIVED  the value was worked out independently by hand
//   TRIVIAL  the value follows directly from a definition

#include "virlog/density.hpp"
#include "virlog/fusion.hpp"
#include "virlog/verma.hpp"
#include "virlog/virasoro.hpp"
#include "virlog/wlog.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <tuple>
#include <string>
#include <vector>

namespace virlog::report {

enum class Status { pass, fail, known_deviation };

inline std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::known_deviation: return "known-deviation";
  }
  return "fail";
}

struct FixtureResult {
  std::string id;
  int criterion = 0;
  std::string provenance;
  std::string expected;
  std::string computed;
  Status status = Status::fail;
};

/// Fixtures whose printed value disagrees with the computation for reasons
/// recorded in the deviations ledger; a mismatch there is not a failure.
inline const std::set<std::string>& known_deviation_ids() {
  static const std::set<std::string> ids{"wlog.closed-vs-residue", "wlog.second-pairing", "wlog.vertical-central-charge"};
  return ids;
}

inline FixtureResult make(std::string id, int criterion, std::string tag, std::string expected, std::string computed,
                          bool ok) {
  Status st = ok ? Status::pass : Status::fail;
  if (!ok && known_deviation_ids().count(id)) st = Status::known_deviation;
  return {std::move(id), criterion, std::move(tag), std::move(expected), std::move(computed), st};
}

// ---------------------------------------------------------------------------
// Literal expected values.

inline MultiPoly sym_c() { return MultiPoly::var(Symbol::c); }
inline MultiPoly sym_h() { return MultiPoly::var(Symbol::h); }

/// The level-3 Gram matrix of M_2(c,h) as printed, blocks [[A, dA/dh], [0, A]].
inline ExactMatrix<MultiPoly> level3_matrix() {
  const MultiPoly c = sym_c(), h = sym_h(), one(1);
  ExactMatrix<MultiPoly> a{{MultiPoly(24) * h * (h + one) * (one + MultiPoly(2) * h), MultiPoly(36) * h * (h + one), MultiPoly(24) * h},
                           {MultiPoly(36) * h * (h + one), (h + MultiPoly(2)) * (MultiPoly(8) * h + c) + MultiPoly(18) * h,
                            MultiPoly(16) * h + MultiPoly(2) * c},
                           {MultiPoly(24) * h, MultiPoly(16) * h + MultiPoly(2) * c, MultiPoly(6) * h + MultiPoly(2) * c}};
  ExactMatrix<MultiPoly> b{{MultiPoly(144) * h * h + MultiPoly(144) * h + MultiPoly(24), MultiPoly(72) * h + MultiPoly(36), MultiPoly(24)},
                           {MultiPoly(72) * h + MultiPoly(36), MultiPoly(16) * h + MultiPoly(34) + c, MultiPoly(16)},
                           {MultiPoly(24), MultiPoly(16), MultiPoly(6)}};
  ExactMatrix<MultiPoly> out(6, 6);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      out(i, j) = a(i, j);
      out(i, j + 3) = b(i, j);
      out(i + 3, j + 3) = a(i, j);
    }
  return out;
}

inline MultiPoly level3_determinant() {
  const MultiPoly c = sym_c(), h = sym_h();
  MultiPoly f1 = MultiPoly(16) * h * h + MultiPoly(2) * h * c - MultiPoly(10) * h + c;
  MultiPoly f2 = MultiPoly(3) * h * h + h * c - MultiPoly(7) * h + MultiPoly(2) + c;
  return MultiPoly(48 * 48) * pow(h, 4) * f1 * f1 * f2 * f2;
}

/// Module vector from (parts, top, coeff) triples; parts in operator order L(-p_1)...L(-p_k).
inline ModuleVector<Rational> module_vector(const NumericModule& mod, int level,
                                            const std::vector<std::tuple<std::vector<int>, unsigned, Rational>>& ts) {
  ModuleVector<Rational> v(mod, level);
  for (const auto& [parts, top, coeff] : ts) v.add(BasisLabel{parts, top}, coeff);
  return v;
}

inline ModuleVector<Rational> printed_singular_1(const NumericModule& m) {
  return module_vector(m, 3, {{{1, 1, 1}, 1, 1}, {{1, 2}, 1, -4}, {{3}, 1, 6}});
}

inline ModuleVector<Rational> printed_singular_2(const NumericModule& m) {
  return module_vector(m, 3, {{{1, 2}, 1, -2}, {{3}, 1, 5}, {{1, 1, 1}, 2, 1}, {{1, 2}, 2, -4}, {{3}, 2, 6}});
}

/// d^2 + (3/2) x^-1 d - (15/16) x^-2.
inline EulerOperator<Rational> c0_level2_operator() {
  EulerOperator<Rational> op = EulerOperator<Rational>::term(0, 2, Rational(1));
  op.add(1, 1, Rational(3, 2));
  op.add(2, 0, Rational(-15, 16));
  return op;
}

// ---------------------------------------------------------------------------
// Random inputs for the property fixtures (fixed seed, deterministic).

class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  Rational rational(long span = 20, long max_den = 12) { return Rational(integer(-span, span), integer(1, max_den)); }
  Rational nonzero_rational(long span = 20, long max_den = 12) {
    for (;;)
      if (Rational r = rational(span, max_den); !r.is_zero()) return r;
  }
  template <class R>
  ModuleVector<R> module_vector(const JordanVermaModule<R>& mod, int level) {
    ModuleVector<R> v(mod, level);
    for (const auto& l : level_basis(mod, level))
      if (integer(0, 2) != 0) v.add(l, R(rational(5, 3)));
    return v;
  }

private:
  std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// Criteria.

inline std::vector<FixtureResult> criterion1() {
  auto computed = shapovalov_matrix(symbolic_module(2), 3);
  auto expected = level3_matrix();
  std::string where = "equal";
  for (std::size_t i = 0; i < 6 && where == "equal"; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      if (!(computed(i, j) == expected(i, j))) {
        where = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " + computed(i, j).str();
        break;
      }
  return {make("gram.level3-matrix", 1, "PRINTED", "6x6 level-3 matrix of M_2(c,h)", where, where == "equal")};
}

inline std::vector<FixtureResult> criterion2() {
  MultiPoly det = shapovalov_determinant(symbolic_module(2), 3);
  MultiPoly expected = level3_determinant();
  return {make("gram.level3-determinant", 2, "PRINTED", "48^2 h^4 (16h^2+2hc-10h+c)^2 (3h^2+hc-7h+2+c)^2",
               det == expected ? "equal" : det.str(), det == expected)};
}

inline std::vector<FixtureResult> criterion3(int max_level = 5) {
  std::vector<FixtureResult> out;
  for (int n = 1; n <= max_level; ++n) {
    auto s1 = shapovalov_matrix(symbolic_module(1), n);
    auto s2 = shapovalov_matrix(symbolic_module(2), n);
    const std::size_t p = s1.rows();
    bool blocks = true;
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j) {
        blocks = blocks && s2(i, j) == s1(i, j) && s2(i + p, j + p) == s1(i, j);
        blocks = blocks && s2(i + p, j).is_zero() && s2(i, j + p) == s1(i, j).derivative(Symbol::h);
      }
    out.push_back(make("square.blocks-level-" + std::to_string(n), 3, "PRINTED", "[[S, dS/dh], [0, S]]",
                       blocks ? "holds" : "violated", blocks));
    MultiPoly d1 = bareiss_determinant(s1), d2 = bareiss_determinant(s2);
    bool sq = d2 == d1 * d1;
    out.push_back(make("square.det-level-" + std::to_string(n), 3, "PRINTED", "det S_2 = (det S)^2",
                       sq ? "holds" : "violated", sq));
  }
  return out;
}

inline std::vector<FixtureResult> criterion4() {
  std::vector<FixtureResult> out;
  NumericModule m11(Rational(1), Rational(1), 2);
  auto sv = singular_vectors(m11, 3);
  auto p1 = printed_singular_1(m11), p2 = printed_singular_2(m11);
  bool ok = sv.size() == 2 && in_span(sv, p1) && in_span(sv, p2);
  out.push_back(make("singular.c1-h1-level3", 4, "PRINTED", "dim 2, contains both printed vectors",
                     "dim " + std::to_string(sv.size()) + (ok ? ", contains both" : ", membership fails"), ok));
  auto cert = check_hom_pair(m11, p1, p2, 3);
  out.push_back(make("hom.M2(1,4)-to-M2(1,1)", 4, "PRINTED", "valid", cert.valid() ? "valid" : "invalid", cert.valid()));
  NumericModule m00(Rational(0), Rational(0), 2);
  auto s00 = singular_vectors(m00, 1);
  auto l1 = module_vector(m00, 1, {{{1}, 1, 1}});
  bool ok00 = s00.size() == 1 && s00.front() == l1;
  std::string got;
  for (const auto& v : s00) got += (got.empty() ? "" : ", ") + v.str();
  out.push_back(make("singular.c0-h0-level1", 4, "PRINTED", "span{L(-1)v}", "span{" + got + "}", ok00));
  return out;
}

inline std::string roots_str(const RootReport& r) {
  std::string s = "{";
  for (std::size_t i = 0; i < r.roots.size(); ++i)
    s += (i ? ", " : "") + r.roots[i].first.str() + (r.roots[i].second > 1 ? " (x" + std::to_string(r.roots[i].second) + ")" : "");
  return s + "}";
}

inline std::vector<FixtureResult> criterion5() {
  std::vector<FixtureResult> out;
  const Rational h58(5, 8);
  NumericModule m0(Rational(0), h58, 1);
  auto sv = singular_vectors(m0, 2);
  auto op = descent_operator(sv.at(0), h58);
  out.push_back(make("fusion.c0-operator", 5, "PRINTED", c0_level2_operator().str(), op.str(), op == c0_level2_operator()));
  auto d0 = indicial_polynomial(op, h58, h58);
  bool ok0 = d0.roots.roots == std::vector<std::pair<Rational, unsigned>>{{0, 1}, {2, 1}} && !d0.logarithmic;
  out.push_back(make("fusion.c0-roots", 5, "PRINTED", "{0, 2} simple", roots_str(d0.roots), ok0));

  auto d2 = fusion_data(Rational(-2), Rational(-1, 8), Rational(-1, 8));
  bool ok2 = d2.roots.roots == std::vector<std::pair<Rational, unsigned>>{{0, 2}} && d2.logarithmic;
  out.push_back(make("fusion.cm2-roots", 5, "PRINTED", "{0 (x2)}, logarithmic",
                     roots_str(d2.roots) + (d2.logarithmic ? ", logarithmic" : ""), ok2));

  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 1}}) {
    auto d = fusion_data(Rational(1), Rational(m * m, 4), Rational(n * n, 4));
    std::set<Rational> got, want;
    for (const auto& [r, _] : d.roots.roots) got.insert(r);
    for (int i : j_multiset(m, n)) want.insert(Rational(i * i, 4));
    bool ok = got == want && d.roots.residual.degree() == 0;
    std::string ws = "{";
    for (const auto& w : want) ws += (ws.size() > 1 ? ", " : "") + w.str();
    out.push_back(make("fusion.c1-m" + std::to_string(m) + "-n" + std::to_string(n), 5, "PRINTED", ws + "}",
                       roots_str(d.roots), ok));
  }

  FixtureCase c0;
  c0.kind = FixtureCase::Kind::c0;
  c0.p = 2;
  auto f = fixture_polynomial(c0);
  out.push_back(make("fixture.c0-p2", 5, "PRINTED", "x^2 - 2x", f.str(), f.str() == "x^2 - 2x"));
  bool agree = f.renamed(Symbol::h3) == d0.fusion;
  out.push_back(make("fixture.c0-p2-vs-indicial", 5, "DERIVED", "equal", agree ? "equal" : d0.fusion.str(), agree));
  return out;
}

inline std::vector<FixtureResult> criterion6() {
  std::vector<FixtureResult> out;
  MultiPoly b = MultiPoly::var(Symbol::b);
  auto sol = solve_euler(c0_level2_operator(), Rational(-5, 4), 0, Rational(2, 3) * b);
  auto expected = LogSeries<MultiPoly>::term(Rational(3, 4), 1, Rational(1, 3) * b);
  out.push_back(make("euler.resonance", 6, "PRINTED", expected.str(), sol.particular.str(), sol.particular == expected));
  auto bd = determine_b(Rational(5, 8));
  out.push_back(make("euler.mu", 6, "DERIVED", "1/2", bd.mu.str(), bd.mu == Rational(1, 2)));
  out.push_back(make("determine-b.h5/8", 6, "PRINTED", "5/2", bd.b.str(), bd.b == Rational(5, 2)));
  return out;
}

inline std::vector<FixtureResult> criterion7() {
  std::vector<FixtureResult> out;
  Sampler s(7);
  int good = 0;
  for (int k = 0; k < 20; ++k) {
    Rational c = s.nonzero_rational(), h = s.rational();
    if (ope_level2_coefficient(c, h) == Rational(2) * h / c) ++good;
  }
  out.push_back(make("ope.random-20", 7, "PRINTED", "a = 2h/c on 20 pairs", std::to_string(good) + "/20 agree", good == 20));
  std::string msg = "no error";
  try {
    ope_level2_coefficient(Rational(0), Rational(5, 8));
  } catch (const std::domain_error& e) {
    msg = e.what();
  }
  bool err = msg.rfind("central term degenerate", 0) == 0;
  out.push_back(make("ope.c0-error", 7, "PRINTED", "error: central term degenerate", err ? "error: central term degenerate" : msg, err));
  return out;
}

/// [[a,b],c] + cyclic = 0 in U(Vir), brackets taken as normal-ordered commutators.
inline bool virasoro_jacobi(int range) {
  using namespace vir;
  auto comm = [](const UEAElement& x, const UEAElement& y) { return multiply(x, y) - multiply(y, x); };
  for (int a = -range; a <= range; ++a)
    for (int b = a; b <= range; ++b)
      for (int c = b; c <= range; ++c) {
        UEAElement la = UEAElement::mode(VirMode::L(a)), lb = UEAElement::mode(VirMode::L(b)),
                   lc = UEAElement::mode(VirMode::L(c));
        UEAElement j = comm(comm(la, lb), lc) + comm(comm(lb, lc), la) + comm(comm(lc, la), lb);
        if (!normal_order(j).is_zero()) return false;
      }
  return true;
}

/// L(m)L(n)u - L(n)L(m)u = (m-n)L(m+n)u + delta (m^3-m)/12 c u on random vectors.
inline std::size_t module_commutator_failures(int samples, std::uint64_t seed) {
  Sampler s(seed);
  std::size_t bad = 0;
  for (int k = 0; k < samples; ++k) {
    NumericModule mod(s.rational(), s.rational(), static_cast<unsigned>(s.integer(1, 2)));
    int level = static_cast<int>(s.integer(0, 4));
    auto u = s.module_vector(mod, level);
    int m = static_cast<int>(s.integer(-3, 3)), n = static_cast<int>(s.integer(-3, 3));
    auto lhs = apply_mode(mod, m, apply_mode(mod, n, u));
    auto rhs = apply_mode(mod, n, apply_mode(mod, m, u));
    auto expected = Rational(m - n) * apply_mode(mod, m + n, u);
    if (m + n == 0) expected += (Rational(static_cast<long>(m) * m * m - m, 12) * mod.c) * u;
    lhs += Rational(-1) * rhs;
    if (!(lhs == expected)) ++bad;
  }
  return bad;
}

/// [L_m, L_n] = (m-n) L_{m+n} on F_{lambda,mu,n,beta}, symbolic, on labels with |r| <= 3, i <= 2.
inline bool density_bracket(int range) {
  auto mod = symbolic_density_module(2);
  for (int m = -range; m <= range; ++m)
    for (int n = -range; n <= range; ++n)
      for (long r = -3; r <= 3; ++r)
        for (unsigned i = 0; i <= 2; ++i) {
          DensityVector<MultiPoly> u{{{r, i}, MultiPoly(1)}};
          auto a = density_action(mod, m, density_action(mod, n, u));
          auto b = density_action(mod, n, density_action(mod, m, u));
          DensityVector<MultiPoly> diff = a;
          for (const auto& [l, c] : b) {
            diff[l] -= c;
            if (diff[l].is_zero()) diff.erase(l);
          }
          DensityVector<MultiPoly> want;
          for (const auto& [l, c] : density_action(mod, m + n, u)) want[l] = MultiPoly(m - n) * c;
          if (m == n) want.clear();
          if (diff != want) return false;
        }
  return true;
}

/// Kac-table weight h_{r,s} at c = 13 - 6(t + 1/t).
inline std::pair<Rational, Rational> kac_point(const Rational& t, long r, long s) {
  Rational c = Rational(13) - Rational(6) * (t + Rational(1) / t);
  Rational h = (Rational(r * r - 1) * t + Rational(s * s - 1) / t) / Rational(4) - Rational(r * s - 1, 2);
  return {c, h};
}

/// Largest singular-space dimension in M_2(c,h) over levels <= 4; half the samples are Kac points.
inline std::size_t max_singular_count(int samples, std::uint64_t seed) {
  Sampler s(seed);
  std::size_t worst = 0;
  for (int k = 0; k < samples; ++k) {
    Rational c, h;
    if (k % 2 == 0) {
      c = s.rational();
      h = s.rational();
    } else {
      long r = s.integer(1, 4), q = s.integer(1, 4 / r);
      std::tie(c, h) = kac_point(s.nonzero_rational(6, 4), r, q);
    }
    NumericModule mod(c, h, 2);
    for (int level = 1; level <= 4; ++level) worst = std::max(worst, singular_vectors(mod, level).size());
  }
  return worst;
}

inline std::vector<FixtureResult> criterion8() {
  std::vector<FixtureResult> out;
  bool jac = virasoro_jacobi(6);
  out.push_back(make("props.virasoro-jacobi", 8, "TRIVIAL", "Jacobi holds for |m| <= 6", jac ? "holds" : "violated", jac));
  auto bad = module_commutator_failures(100, 11);
  out.push_back(make("props.module-commutator", 8, "TRIVIAL", "100/100 samples consistent",
                     std::to_string(100 - bad) + "/100 samples consistent", bad == 0));
  bool dens = density_bracket(4);
  out.push_back(make("props.density-bracket", 8, "PRINTED", "[L_m, L_n] = (m-n)L_{m+n}, |m|,|n| <= 4", dens ? "holds" : "violated", dens));
  auto worst = max_singular_count(200, 13);
  out.push_back(make("props.singular-bound", 8, "PRINTED", "<= 2 singular vectors per level", "max " + std::to_string(worst), worst <= 2));
  return out;
}

inline std::vector<FixtureResult> criterion9() {
  using namespace wlog;
  std::vector<FixtureResult> out;
  auto jn = check_jacobi(3, Cocycle::none);
  out.push_back(make("wlog.jacobi", 9, "PRINTED", "Jacobi holds, |i|,|m| <= 3",
                     std::to_string(jn.violations.size()) + " violations in " + std::to_string(jn.checked) + " triples", jn.passed()));
  auto jr = check_jacobi(3, Cocycle::residue);
  out.push_back(make("wlog.residue-cocycle", 9, "DERIVED", "2-cocycle identity, |i|,|m| <= 3",
                     std::to_string(jr.violations.size()) + " violations in " + std::to_string(jr.checked) + " triples", jr.passed()));
  bool horiz = true;
  for (int m = -6; m <= 6; ++m)
    for (int n = -6; n <= 6; ++n) horiz = horiz && cocycle_residue({0, m}, {0, n}).is_zero();
  out.push_back(make("wlog.horizontal-centerless", 9, "PRINTED", "0 for |m|,|n| <= 6", horiz ? "0" : "nonzero", horiz));

  MultiPoly b = MultiPoly::var(Symbol::b);
  MultiPoly vev = pairing({-1, -2}, {0, -2}, Cocycle::closed);
  bool mag = vev == Rational(2, 3) * b || vev == Rational(-2, 3) * b;
  out.push_back(make("wlog.vev-magnitude", 9, "PRINTED", "|vev| = (2/3)b", vev.str(), mag));

  MultiPoly second = pairing({-1, -2}, {1, -2}, Cocycle::closed);
  out.push_back(make("wlog.second-pairing", 9, "PRINTED", "0", second.str(), second.is_zero()));
  Rational vert = cocycle_residue({3, 0}, {-1, 0});
  out.push_back(make("wlog.vertical-central-charge", 9, "PRINTED", "0", "c(t^(3)(0), t^(-1)(0)) = " + vert.str(), vert.is_zero()));
  auto devs = cocycle_deviations(3);
  out.push_back(make("wlog.closed-vs-residue", 9, "DERIVED", "closed form agrees with residue",
                     std::to_string(devs.size()) + " deviating pairs", devs.empty()));
  std::size_t flips = 0;
  for (const auto& d : devs) flips += d.closed == -d.residue;
  out.push_back(make("wlog.closed-is-minus-residue", 9, "DERIVED", "every deviation is a sign flip",
                     std::to_string(flips) + "/" + std::to_string(devs.size()) + " sign flips", flips == devs.size()));
  return out;
}

/// Criteria in order; `max_square_level` trims criterion 3 for quick runs.
inline std::vector<FixtureResult> run_all(int max_square_level = 5) {
  std::vector<FixtureResult> all;
  auto append = [&all](std::vector<FixtureResult> part) { all.insert(all.end(), part.begin(), part.end()); };
  append(criterion1());
  append(criterion2());
  append(criterion3(max_square_level));
  append(criterion4());
  append(criterion5());
  append(criterion6());
  append(criterion7());
  append(criterion8());
  append(criterion9());
  return all;
}

inline bool any_failure(const std::vector<FixtureResult>& rs) {
  for (const auto& r : rs)
    if (r.status == Status::fail) return true;
  return false;
}

inline std::string table(const std::vector<FixtureResult>& rs) {
  std::size_t w = 2;
  for (const auto& r : rs) w = std::max(w, r.id.size());
  std::string out;
  auto pad = [](std::string s, std::size_t n) {
    s.resize(std::max(s.size(), n), ' ');
    return s;
  };
  out += pad("C", 3) + pad("fixture", w + 2) + pad("tag", 9) + pad("status", 17) + "expected | computed\n";
  for (const auto& r : rs)
    out += pad(std::to_string(r.criterion), 3) + pad(r.id, w + 2) + pad(r.provenance, 9) +
           pad(std::string(status_name(r.status)), 17) + r.expected + " | " + r.computed + "\n";
  return out;
}

}  // namespace virlog::report
