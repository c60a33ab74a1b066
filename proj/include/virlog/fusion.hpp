#pragma once

// From singular vectors to Euler differential equations.
//
// For a primary field of weight h1 and a lowest-weight dual vector w3',
//
//   <w3', Y(w1,x) L(-n) u> = -(x^{1-n} d/dx + (1-n) h1 x^{-n}) <w3', Y(w1,x) u>,
//
// so a singular vector sum_s a_s L(-i_1)...L(-i_k) v of level N becomes an Euler
// operator of weight N acting on the matrix coefficient x^{h3-h1-h2}. Its indicial
// polynomial q(s), with op x^s = q(s) x^{s-N}, decides fusion; a repeated root
// signals a logarithmic solution.

#include "virlog/matrix.hpp"
#include "virlog/unipoly.hpp"
#include "virlog/verma.hpp"
#include "virlog/virasoro.hpp"
#include "virlog/wlog.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace virlog {

/// sum a x^{-k} (d/dx)^j.
template <class R>
class EulerOperator {
public:
  struct Key {
    int k = 0;       // x-power shift: the term carries x^{-k}
    unsigned j = 0;  // derivative order
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  EulerOperator() = default;
  static EulerOperator term(int k, unsigned j, const R& coeff) {
    EulerOperator op;
    op.add(k, j, coeff);
    return op;
  }
  static EulerOperator identity() { return term(0, 0, R(1)); }

  const std::map<Key, R>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  R coefficient(int k, unsigned j) const {
    auto it = terms_.find({k, j});
    return it == terms_.end() ? R(0) : it->second;
  }

  void add(int k, unsigned j, const R& c) {
    if (is_zero_r(c)) return;
    auto [it, inserted] = terms_.try_emplace(Key{k, j}, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_r(it->second)) terms_.erase(it);
    }
  }

  EulerOperator& operator+=(const EulerOperator& o) {
    for (const auto& [key, c] : o.terms_) add(key.k, key.j, c);
    return *this;
  }
  friend EulerOperator operator+(EulerOperator a, const EulerOperator& b) { return a += b; }
  friend EulerOperator operator*(const R& s, const EulerOperator& op) {
    EulerOperator out;
    for (const auto& [key, c] : op.terms_) out.add(key.k, key.j, R(s * c));
    return out;
  }
  /// Composition a ∘ b, using D^j x^p = sum_l C(j,l) p^(l falling) x^{p-l} D^{j-l}.
  friend EulerOperator operator*(const EulerOperator& a, const EulerOperator& b) {
    EulerOperator out;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        const long p = -kb.k;
        Rational fall(1);
        for (unsigned l = 0; l <= ka.j; ++l) {
          if (l > 0) fall *= Rational(p - static_cast<long>(l) + 1);
          if (fall.is_zero()) break;
          Rational scalar = binomial(ka.j, l) * fall;
          out.add(ka.k + kb.k + static_cast<int>(l), ka.j - l + kb.j, R(scalar * R(ca * cb)));
        }
      }
    return out;
  }
  friend bool operator==(const EulerOperator&, const EulerOperator&) = default;

  /// Common value of k + j, if every term shares it.
  std::optional<int> weight() const {
    std::optional<int> w;
    for (const auto& [key, _] : terms_) {
      int v = key.k + static_cast<int>(key.j);
      if (w && *w != v) return std::nullopt;
      w = v;
    }
    return w.value_or(0);
  }

  /// q(s) with op x^s = q(s) x^{s-N}.
  UniPoly<R> indicial() const {
    if (!weight()) throw std::domain_error("indicial polynomial of an inhomogeneous operator");
    UniPoly<R> q(Symbol::s);
    for (const auto& [key, c] : terms_) {
      UniPoly<R> fall = UniPoly<R>::constant(Symbol::s, R(1));
      for (unsigned l = 0; l < key.j; ++l) fall = fall * UniPoly<R>(Symbol::s, {R(-static_cast<long>(l)), R(1)});
      q += c * fall;
    }
    return q;
  }

  std::string str() const {
    std::vector<std::pair<Rational, std::string>> ts;
    // Highest derivative first.
    std::vector<std::pair<Key, R>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
      if (a.first.j != b.first.j) return a.first.j > b.first.j;
      return a.first.k < b.first.k;
    });
    for (const auto& [key, c] : ordered) {
      std::string mono;
      if (key.k != 0) mono += "x^" + std::to_string(-key.k);
      if (key.j > 0) mono += std::string(mono.empty() ? "" : "*") + "D" + (key.j > 1 ? "^" + std::to_string(key.j) : "");
      if constexpr (std::is_same_v<R, Rational>) {
        ts.emplace_back(c, mono);
      } else if (auto v = c.constant_value()) {
        ts.emplace_back(*v, mono);
      } else {
        ts.emplace_back(Rational(1), "(" + c.str() + ")" + (mono.empty() ? "" : "*" + mono));
      }
    }
    return join_terms(ts);
  }

private:
  static bool is_zero_r(const R& c) { return virlog::is_zero(c); }
  std::map<Key, R> terms_;
};

/// [L(m), Y(w1,x)] = x^m (x d/dx + (m+1) h1) Y(w1,x) for a primary w1 of weight h1.
template <class R>
EulerOperator<R> commutator_operator(int m, const R& h1) {
  EulerOperator<R> op = EulerOperator<R>::term(-(m + 1), 1, R(1));
  op.add(-m, 0, R(Rational(m + 1) * h1));
  return op;
}

/// Finite sum of a x^s log^p(x), s rational.
template <class R>
class LogSeries {
public:
  struct Key {
    Rational exponent;
    unsigned log_power = 0;
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  LogSeries() = default;
  static LogSeries term(const Rational& exponent, unsigned log_power, const R& coeff) {
    LogSeries s;
    s.add(exponent, log_power, coeff);
    return s;
  }

  const std::map<Key, R>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  R coefficient(const Rational& exponent, unsigned log_power) const {
    auto it = terms_.find(Key{exponent, log_power});
    return it == terms_.end() ? R(0) : it->second;
  }
  unsigned max_log_power() const {
    unsigned p = 0;
    for (const auto& [k, _] : terms_) p = std::max(p, k.log_power);
    return p;
  }

  void add(const Rational& exponent, unsigned log_power, const R& c) {
    if (virlog::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(Key{exponent, log_power}, c);
    if (!inserted) {
      it->second += c;
      if (virlog::is_zero(it->second)) terms_.erase(it);
    }
  }
  LogSeries& operator+=(const LogSeries& o) {
    for (const auto& [k, c] : o.terms_) add(k.exponent, k.log_power, c);
    return *this;
  }
  friend LogSeries operator+(LogSeries a, const LogSeries& b) { return a += b; }
  friend LogSeries operator*(const R& s, const LogSeries& a) {
    LogSeries out;
    for (const auto& [k, c] : a.terms_) out.add(k.exponent, k.log_power, R(s * c));
    return out;
  }
  friend bool operator==(const LogSeries&, const LogSeries&) = default;

  /// d/dx, with d/dx log(x) = 1/x.
  LogSeries derivative() const {
    LogSeries out;
    for (const auto& [k, c] : terms_) {
      out.add(k.exponent - Rational(1), k.log_power, R(k.exponent * c));
      if (k.log_power > 0)
        out.add(k.exponent - Rational(1), k.log_power - 1, R(Rational(static_cast<long>(k.log_power)) * c));
    }
    return out;
  }
  LogSeries shifted(int power) const {
    LogSeries out;
    for (const auto& [k, c] : terms_) out.add(k.exponent + Rational(power), k.log_power, c);
    return out;
  }

  std::string str() const {
    std::vector<std::pair<Rational, std::string>> ts;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [k, c] = *it;
      std::string mono;
      if (!k.exponent.is_zero()) mono = "x^" + (k.exponent.is_integer() ? k.exponent.str() : "(" + k.exponent.str() + ")");
      if (k.log_power > 0)
        mono += std::string(mono.empty() ? "" : "*") + "log(x)" + (k.log_power > 1 ? "^" + std::to_string(k.log_power) : "");
      if constexpr (std::is_same_v<R, Rational>) {
        ts.emplace_back(c, mono);
      } else if (auto v = c.constant_value()) {
        ts.emplace_back(*v, mono);
      } else {
        ts.emplace_back(Rational(1), "(" + c.str() + ")" + (mono.empty() ? "" : "*" + mono));
      }
    }
    return join_terms(ts);
  }

private:
  std::map<Key, R> terms_;
};

/// Direct application by repeated differentiation (independent of the indicial shortcut).
template <class R, class S>
LogSeries<S> apply_operator(const EulerOperator<R>& op, const LogSeries<S>& f) {
  LogSeries<S> out;
  for (const auto& [key, c] : op.terms()) {
    LogSeries<S> g = f;
    for (unsigned d = 0; d < key.j; ++d) g = g.derivative();
    out += S(c) * g.shifted(-key.k);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Singular vector -> operator.

/// Each L(-n) contributes -(x^{1-n} d/dx + (1-n) h1 x^{-n}); factors compose in word order.
template <class R>
EulerOperator<R> descent_operator(const vir::UEAElement& sing, const R& h1) {
  EulerOperator<R> out;
  for (const auto& [w, coeff] : sing.terms()) {
    if (w.central_power) throw std::invalid_argument("descent operator: central element in word");
    EulerOperator<R> op = EulerOperator<R>::identity();
    for (int mode : w.modes) {
      if (mode >= 0) throw std::invalid_argument("descent operator: non-negative mode L(" + std::to_string(mode) + ")");
      op = op * (R(-1) * commutator_operator<R>(mode, h1));
    }
    out += coerce<R>(coeff) * op;
  }
  return out;
}

template <class R>
vir::UEAElement as_uea(const ModuleVector<R>& v) {
  vir::UEAElement e;
  for (const auto& [l, c] : v.terms) {
    std::vector<int> modes;
    for (int p : l.parts) modes.push_back(-p);
    if constexpr (std::is_same_v<R, Rational>) e.add(vir::PBWWord{modes, 0}, MultiPoly(c));
    else e.add(vir::PBWWord{modes, 0}, c);
  }
  return e;
}

template <class R>
EulerOperator<R> descent_operator(const ModuleVector<R>& sing, const R& h1) {
  if (sing.module.jordan != 1) throw std::invalid_argument("descent operator expects a vector of M(c,h2)");
  return descent_operator<R>(as_uea(sing), h1);
}

struct IndicialData {
  int level = 0;
  RatPoly indicial;  // in s = h3 - h1 - h2
  RatPoly fusion;    // monic, in h3
  RootReport roots;  // roots of `fusion`
  bool logarithmic = false;
};

inline IndicialData indicial_polynomial(const EulerOperator<Rational>& op, const Rational& h1, const Rational& h2) {
  auto w = op.weight();
  if (!w) throw std::domain_error("operator is not Euler-homogeneous");
  IndicialData d;
  d.level = *w;
  d.indicial = op.indicial();
  if (d.indicial.is_zero()) throw std::domain_error("indicial polynomial vanishes identically");
  d.fusion = monic(d.indicial.shifted(-(h1 + h2)).renamed(Symbol::h3));
  d.roots = rational_roots(d.fusion);
  for (const auto& [r, mult] : d.roots.roots) d.logarithmic = d.logarithmic || mult >= 2;
  // A repeated irrational root would also be logarithmic.
  if (d.roots.residual.degree() > 0 && squarefree_part(d.roots.residual).degree() < d.roots.residual.degree())
    d.logarithmic = true;
  return d;
}

/// Lowest level >= 1 with a singular vector in M(c,h), and that space's first basis vector.
inline std::optional<ModuleVector<Rational>> lowest_singular_vector(const NumericModule& mod, int max_level) {
  for (int n = 1; n <= max_level; ++n) {
    auto sv = singular_vectors(mod, n);
    if (!sv.empty()) return sv.front();
  }
  return std::nullopt;
}

/// The fusion data for primaries of weights h1, h2 at central charge c, from the
/// lowest singular vector of M(c,h2).
inline IndicialData fusion_data(const Rational& c, const Rational& h1, const Rational& h2, int max_level = 8) {
  NumericModule m(c, h2, 1);
  auto sing = lowest_singular_vector(m, max_level);
  if (!sing) throw std::domain_error("M(c,h2) has no singular vector up to level " + std::to_string(max_level));
  return indicial_polynomial(descent_operator(*sing, h1), h1, h2);
}

// ---------------------------------------------------------------------------
// Solving op y = A x^{s0} log^p(x).

struct EulerSolution {
  std::vector<LogSeries<MultiPoly>> homogeneous;  // x^r log^j, r a rational root of multiplicity > j
  LogSeries<MultiPoly> particular;
  RatPoly unresolved;  // factor of q with no rational roots; its solutions are not listed
};

namespace detail {
inline RatPoly nth_derivative(RatPoly p, unsigned n) {
  for (unsigned i = 0; i < n; ++i) p = p.derivative();
  return p;
}
}  // namespace detail

/// Uses op (x^s log^k) = sum_j C(k,j) q^(j)(s) x^{s-N} log^{k-j}. The particular
/// solution is x^{s0+N} Q(log x) with deg Q = p + (multiplicity of s0+N in q), and
/// carries no log powers below that multiplicity.
inline EulerSolution solve_euler(const EulerOperator<Rational>& op, const Rational& exponent, unsigned log_power,
                                 const MultiPoly& coeff) {
  auto w = op.weight();
  if (!w) throw std::domain_error("operator is not Euler-homogeneous");
  RatPoly q = op.indicial();
  if (q.is_zero()) throw std::domain_error("operator annihilates every power of x");
  EulerSolution sol;
  auto report = rational_roots(q);
  for (const auto& [r, mult] : report.roots)
    for (unsigned j = 0; j < mult; ++j) sol.homogeneous.push_back(LogSeries<MultiPoly>::term(r, j, MultiPoly(1)));
  sol.unresolved = report.residual;
  if (coeff.is_zero()) return sol;

  const Rational s = exponent + Rational(*w);
  unsigned mu = 0;
  for (const auto& [r, mult] : report.roots)
    if (r == s) mu = mult;
  std::vector<Rational> qd;  // q^(j)(s), j = 0..mu+p
  for (unsigned j = 0; j <= mu + log_power; ++j) qd.push_back(detail::nth_derivative(q, j).evaluate(s));
  const Rational lead = qd[mu];  // nonzero by definition of mu

  std::vector<MultiPoly> a(mu + log_power + 1);  // a[k], k = mu..mu+p
  for (long l = log_power; l >= 0; --l) {
    const unsigned ul = static_cast<unsigned>(l);
    MultiPoly rhs = ul == log_power ? coeff : MultiPoly();
    for (unsigned k = ul + mu + 1; k <= mu + log_power; ++k) rhs -= (binomial(k, k - ul) * qd[k - ul]) * a[k];
    a[ul + mu] = rhs / (binomial(ul + mu, mu) * lead);
  }
  for (unsigned k = mu; k <= mu + log_power; ++k) sol.particular.add(s, k, a[k]);
  return sol;
}

// ---------------------------------------------------------------------------
// OPE data.

/// a in Y(w1,x)w1 = x^{-2h} 1 + a x^{2-2h} L(-2)1 + ..., from
/// <L(-2)1', Y w1> = [L(2), Y] x^{-2h} and (L(-2)1, L(-2)1).
inline Rational ope_level2_coefficient(const Rational& c, const Rational& h) {
  NumericModule vacuum(c, Rational(0), 1);
  auto basis = level_basis(vacuum, 2);
  auto gram = shapovalov_matrix(vacuum, 2);
  std::size_t idx = 0;
  while (basis[idx].parts != std::vector<int>{2}) ++idx;
  const Rational norm = gram(idx, idx);
  if (norm.is_zero()) throw std::domain_error("central term degenerate: (L(-2)1, L(-2)1) = c/2 vanishes");
  auto lhs = apply_operator(commutator_operator<Rational>(2, h), LogSeries<Rational>::term(Rational(-2) * h, 0, Rational(1)));
  return lhs.coefficient(Rational(2) - Rational(2) * h, 0) / norm;
}

// ---------------------------------------------------------------------------
// Fixture polynomials for the Zhu-bimodule results.

struct FixtureCase {
  enum class Kind { c1, cminus2, c0 } kind = Kind::c1;
  int m = 0, n = 0;  // c1
  int p = 0;         // c0
};

/// J_{m,n} = {m+n, m+n-2, ..., m-n}.
inline std::vector<int> j_multiset(int m, int n) {
  std::vector<int> out;
  for (int i = m + n; i >= m - n; i -= 2) out.push_back(i);
  return out;
}

/// Monic fusion polynomial in x.
inline RatPoly fixture_polynomial(const FixtureCase& fc) {
  const auto x = RatPoly::identity(Symbol::x);
  RatPoly out = RatPoly::constant(Symbol::x, Rational(1));
  switch (fc.kind) {
    case FixtureCase::Kind::c1:
      if (fc.m < 1 || fc.n < 1) throw std::invalid_argument("c1 fixture needs m, n >= 1");
      for (int i : j_multiset(fc.m, fc.n))
        out = out * RatPoly::linear_factor(Symbol::x, Rational(static_cast<long>(i) * i, 4));
      return out;
    case FixtureCase::Kind::cminus2:
      return x * x;
    case FixtureCase::Kind::c0: {
      if (fc.p < 2 || fc.p % 2 != 0) throw std::invalid_argument("c0 fixture needs even p >= 2");
      // n runs over half-integers 1/2, 3/2, ..., (p-1)/2; with n2 = 2n the factors are
      // ((3p-1-3 n2)(3p-3-3 n2)/24 - x) and ((3p-1+3 n2)(3p-3+3 n2)/24 - x).
      const long p = fc.p;
      for (long n2 = 1; n2 <= p - 1; n2 += 2) {
        Rational lo((3 * p - 1 - 3 * n2) * (3 * p - 3 - 3 * n2), 24);
        Rational hi((3 * p - 1 + 3 * n2) * (3 * p - 3 + 3 * n2), 24);
        out = out * RatPoly::linear_factor(Symbol::x, lo) * RatPoly::linear_factor(Symbol::x, hi);
      }
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// The c = 0 normalization constant b.

struct BDetermination {
  Rational b;
  Rational mu;                  // log coefficient relative to the pairing
  MultiPoly pairing;            // <t^(-1)(-2)v_b', t^(0)(-2)v_b>
  MultiPoly second_pairing;     // <t^(-1)(-2)v_b', t^(1)(-2)v_b>
  EulerOperator<Rational> op;   // level-2 singular operator
  LogSeries<MultiPoly> particular;
};

/// Solves the level-2 singular-vector equation with right-hand side
/// <t^(-1)(-2)v_b', t^(0)(-2)v_b> x^{-2h}, reads mu from the log coefficient and
/// returns b = 2h / mu.
inline BDetermination determine_b(const Rational& h, wlog::Cocycle mode = wlog::Cocycle::closed) {
  NumericModule mod(Rational(0), h, 1);
  if (!singular_vectors(mod, 1).empty())
    throw std::domain_error("case outside implemented family: M(0,h) is degenerate at level 1");
  auto sv = singular_vectors(mod, 2);
  if (sv.size() != 1) throw std::domain_error("case outside implemented family: no level-2 singular vector in M(0,h)");

  BDetermination out;
  out.op = descent_operator(sv.front(), h);
  out.pairing = wlog::pairing({-1, -2}, {0, -2}, mode);
  out.second_pairing = wlog::pairing({-1, -2}, {1, -2}, mode);
  if (out.pairing.is_zero()) throw std::domain_error("vanishing vacuum pairing; b cannot be read off");

  const Rational exponent = Rational(-2) * h;
  auto sol = solve_euler(out.op, exponent, 0, out.pairing);
  out.particular = sol.particular;
  MultiPoly log_coeff = sol.particular.coefficient(exponent + Rational(2), 1);
  if (log_coeff.is_zero()) throw std::domain_error("no resonance: the solution carries no logarithm");
  auto mu = divide_exact(log_coeff, out.pairing).constant_value();
  if (!mu || mu->is_zero()) throw std::domain_error("log coefficient is not a multiple of the pairing");
  out.mu = *mu;
  out.b = Rational(2) * h / out.mu;
  return out;
}

}  // namespace virlog
