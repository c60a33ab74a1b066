#pragma once

// The logarithmic Witt algebra W_log with generators t^(i)(m):
//
//   [t^(i)(m), t^(j)(n)] = (m - n) t^(i+j)(m+n) + (j - i) t^(i+j-1)(m+n),
//
// realized by the vector fields t^i e^{-m t} d/dt, and its central extension by a
// 2-cocycle with central element b. Two cocycles are available:
//
//   residue: (1/12) Res_t(f''' g) on the vector-field realization (Gelfand-Fuchs);
//   closed:  the printed finite-sum formula, defined when both translated log
//            indices 1 - i are non-negative.

#include "virlog/multipoly.hpp"

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace virlog::wlog {

struct Generator {
  int i = 0;  // log index
  int m = 0;  // mode
  friend auto operator<=>(const Generator&, const Generator&) = default;
  std::string str() const { return "t^(" + std::to_string(i) + ")(" + std::to_string(m) + ")"; }
};

enum class Cocycle { none, closed, residue };

inline std::string_view cocycle_name(Cocycle c) {
  switch (c) {
    case Cocycle::none: return "none";
    case Cocycle::closed: return "closed";
    case Cocycle::residue: return "residue";
  }
  return "?";
}

inline Cocycle parse_cocycle(std::string_view s) {
  if (s == "none") return Cocycle::none;
  if (s == "closed") return Cocycle::closed;
  if (s == "residue") return Cocycle::residue;
  throw std::invalid_argument("unknown cocycle mode '" + std::string(s) + "'");
}

class OutsideClosedDomain : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

inline bool in_closed_domain(const Generator& a, const Generator& b) { return a.i <= 1 && b.i <= 1; }

/// Printed finite-sum cocycle, with c(t^(1-i)(-m), t^(1-j)(-n)) summed over r = 0..i+j.
inline Rational cocycle_closed_form(const Generator& a, const Generator& b) {
  if (!in_closed_domain(a, b))
    throw OutsideClosedDomain("closed-form cocycle undefined for " + a.str() + ", " + b.str() + "; use residue cocycle");
  const long i = 1 - a.i, j = 1 - b.i;
  const Rational m(-static_cast<long>(a.m)), n(-static_cast<long>(b.m));
  Rational sum;
  for (long r = 0; r <= i + j; ++r) {
    const long d = i - r;
    Rational kernel(d * d * d - d);
    if (kernel.is_zero()) continue;
    Rational term = pow(m, static_cast<unsigned long>(r)) * pow(n, static_cast<unsigned long>(i + j - r)) * kernel;
    sum += term / (Rational(12) * factorial(static_cast<unsigned long>(i + j - r)) * factorial(static_cast<unsigned long>(r)));
  }
  return sum;
}

namespace detail {

/// Res_t of t^p e^{-M t}: the coefficient of t^{-1-p} in the exponential.
inline Rational residue_monomial_exp(long p, long M) {
  const long e = -1 - p;
  if (e < 0) return Rational(0);
  return pow(Rational(-M), static_cast<unsigned long>(e)) / factorial(static_cast<unsigned long>(e));
}

/// i (i-1) ... (i-k+1)
inline Rational falling(long i, unsigned k) {
  Rational out(1);
  for (unsigned q = 0; q < k; ++q) out *= Rational(i - static_cast<long>(q));
  return out;
}

}  // namespace detail

/// (1/12) Res_t(f''' g) for f = t^{a.i} e^{-a.m t}, g = t^{b.i} e^{-b.m t}; always a finite sum.
inline Rational cocycle_residue(const Generator& a, const Generator& b) {
  Rational sum;
  for (unsigned k = 0; k <= 3; ++k) {
    Rational coeff = binomial(3, k) * detail::falling(a.i, k) * pow(Rational(-static_cast<long>(a.m)), 3 - k);
    if (coeff.is_zero()) continue;
    sum += coeff * detail::residue_monomial_exp(static_cast<long>(a.i) + b.i - static_cast<long>(k),
                                                 static_cast<long>(a.m) + b.m);
  }
  return sum / Rational(12);
}

inline Rational cocycle_value(Cocycle mode, const Generator& a, const Generator& b) {
  switch (mode) {
    case Cocycle::none: return Rational(0);
    case Cocycle::closed: return cocycle_closed_form(a, b);
    case Cocycle::residue: return cocycle_residue(a, b);
  }
  return Rational(0);
}

/// Element of W_log (+) C b with polynomial coefficients.
class Element {
public:
  Element() = default;
  static Element generator(const Generator& g, const MultiPoly& coeff = MultiPoly(1)) {
    Element e;
    e.add(g, coeff);
    return e;
  }
  static Element central_element(const MultiPoly& coeff = MultiPoly(1)) {
    Element e;
    e.central_ = coeff;
    return e;
  }

  const std::map<Generator, MultiPoly>& terms() const { return terms_; }
  const MultiPoly& central() const { return central_; }
  bool is_zero() const { return terms_.empty() && central_.is_zero(); }

  void add(const Generator& g, const MultiPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add_central(const MultiPoly& c) { central_ += c; }

  Element& operator+=(const Element& o) {
    for (const auto& [g, c] : o.terms_) add(g, c);
    central_ += o.central_;
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator*(const MultiPoly& k, const Element& e) {
    Element out;
    for (const auto& [g, c] : e.terms_) out.add(g, k * c);
    out.central_ = k * e.central_;
    return out;
  }
  friend Element operator-(const Element& a, const Element& b) { return a + MultiPoly(-1) * b; }
  friend bool operator==(const Element&, const Element&) = default;

  std::string str() const {
    std::vector<std::pair<Rational, std::string>> ts;
    auto push = [&ts](const MultiPoly& c, const std::string& mono) {
      if (auto k = c.constant_value()) ts.emplace_back(*k, mono);
      else ts.emplace_back(Rational(1), "(" + c.str() + ")" + mono);
    };
    for (const auto& [g, c] : terms_) push(c, g.str());
    if (!central_.is_zero()) push(central_, "b");
    return join_terms(ts);
  }

private:
  std::map<Generator, MultiPoly> terms_;
  MultiPoly central_;
};

inline Element wlog_bracket(const Generator& a, const Generator& b, Cocycle mode) {
  Element out;
  out.add({a.i + b.i, a.m + b.m}, MultiPoly(a.m - b.m));
  out.add({a.i + b.i - 1, a.m + b.m}, MultiPoly(b.i - a.i));
  out.add_central(MultiPoly(cocycle_value(mode, a, b)));
  return out;
}

/// Bilinear extension; the central element brackets to zero.
inline Element wlog_bracket(const Element& x, const Element& y, Cocycle mode) {
  Element out;
  for (const auto& [g, c] : x.terms())
    for (const auto& [h, d] : y.terms()) out += (c * d) * wlog_bracket(g, h, mode);
  return out;
}

/// t^(i)(m) -> (-1)^i t^(i)(-m), b -> b.
inline Element antiinvolution(const Element& e) {
  Element out;
  for (const auto& [g, c] : e.terms()) out.add({g.i, -g.m}, (g.i % 2 == 0) ? c : -c);
  out.add_central(e.central());
  return out;
}

// ---------------------------------------------------------------------------
// Enveloping-algebra words and vacuum expectations in V(b,0).

using Word = std::vector<Generator>;

/// Combination of words; the central element is absorbed into coefficients as the symbol b.
class WordSum {
public:
  WordSum() = default;
  static WordSum word(Word w, const MultiPoly& coeff = MultiPoly(1)) {
    WordSum s;
    s.add(std::move(w), coeff);
    return s;
  }
  /// Embeds an algebra element as a sum of one-letter words.
  static WordSum from_element(const Element& e) {
    WordSum s;
    for (const auto& [g, c] : e.terms()) s.add({g}, c);
    s.add({}, e.central() * MultiPoly::var(Symbol::b));
    return s;
  }

  const std::map<Word, MultiPoly>& terms() const { return terms_; }
  void add(Word w, const MultiPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  friend WordSum operator*(const WordSum& a, const WordSum& b) {
    WordSum out;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        out.add(std::move(w), ca * cb);
      }
    return out;
  }
  friend bool operator==(const WordSum&, const WordSum&) = default;

private:
  std::map<Word, MultiPoly> terms_;
};

/// Anti-involution on words: reverse the factors and map each generator.
inline WordSum antiinvolution(const WordSum& s) {
  WordSum out;
  for (const auto& [w, c] : s.terms()) {
    Word r;
    MultiPoly k = c;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      r.push_back({it->i, -it->m});
      if (it->i % 2 != 0) k = -k;
    }
    out.add(std::move(r), k);
  }
  return out;
}

/// Which generators annihilate the vacuum v_b and how words are ordered.
///   mode:       W^- = {m < 0}, W^0 = {m = 0}, W^+ = {m > 0}
///   log_degree: W^- = {i < 0}, W^0 = {i = 0}, W^+ = {i > 0}
/// The anti-involution swaps W^+ and W^- only under the mode polarization.
enum class Polarization { mode, log_degree };

inline int polarity_class(const Generator& g, Polarization p) {
  int key = p == Polarization::mode ? g.m : g.i;
  return key < 0 ? 0 : (key == 0 ? 1 : 2);
}

inline bool word_less_key(const Generator& a, const Generator& b, Polarization p) {
  int ca = polarity_class(a, p), cb = polarity_class(b, p);
  if (ca != cb) return ca < cb;
  return a < b;
}

/// Reorders every word as W^- factors, then W^0, then W^+, each block sorted by (i, m).
/// Swaps contribute brackets, with central terms turned into the symbol b.
inline WordSum normal_order(const WordSum& s, Cocycle mode, Polarization pol) {
  WordSum done;
  auto by_length = [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  };
  std::map<Word, MultiPoly, decltype(by_length)> pending(by_length);
  for (const auto& [w, c] : s.terms()) pending[w] += c;
  const MultiPoly b_sym = MultiPoly::var(Symbol::b);
  while (!pending.empty()) {
    auto it = std::prev(pending.end());
    Word w = it->first;
    MultiPoly c = it->second;
    pending.erase(it);
    if (c.is_zero()) continue;
    std::size_t k = 0;
    while (k + 1 < w.size() && !word_less_key(w[k + 1], w[k], pol)) ++k;
    if (k + 1 >= w.size()) {
      done.add(std::move(w), c);
      continue;
    }
    const Generator x = w[k], y = w[k + 1];
    Word swapped = w;
    std::swap(swapped[k], swapped[k + 1]);
    pending[swapped] += c;
    Element br = wlog_bracket(x, y, mode);
    for (const auto& [g, d] : br.terms()) {
      Word merged = w;
      merged.erase(merged.begin() + static_cast<long>(k) + 1);
      merged[k] = g;
      pending[merged] += c * d;
    }
    if (!br.central().is_zero()) {
      Word shorter = w;
      shorter.erase(shorter.begin() + static_cast<long>(k), shorter.begin() + static_cast<long>(k) + 2);
      pending[shorter] += c * br.central() * b_sym;
    }
  }
  return done;
}

/// <v_b', s v_b> in V(b,0): after normal ordering only the empty word survives,
/// since W^0 and W^+ kill v_b and W^- words are orthogonal to it.
inline MultiPoly vacuum_expectation(const WordSum& s, Cocycle mode, Polarization pol = Polarization::mode) {
  WordSum n = normal_order(s, mode, pol);
  auto it = n.terms().find(Word{});
  return it == n.terms().end() ? MultiPoly() : it->second;
}

/// <A v_b', B v_b> := <v_b', theta(A) B v_b>.
inline MultiPoly pairing(const Generator& a, const Generator& b, Cocycle mode, Polarization pol = Polarization::mode) {
  return vacuum_expectation(antiinvolution(WordSum::word({a})) * WordSum::word({b}), mode, pol);
}

// ---------------------------------------------------------------------------
// Exhaustive checks.

inline std::vector<Generator> generator_box(int range) {
  std::vector<Generator> out;
  for (int i = -range; i <= range; ++i)
    for (int m = -range; m <= range; ++m) out.push_back({i, m});
  return out;
}

struct JacobiReport {
  Cocycle mode = Cocycle::none;
  int range = 0;
  std::size_t checked = 0;
  std::size_t skipped = 0;  // closed mode: some needed cocycle value outside its domain
  std::vector<std::array<Generator, 3>> violations;
  bool passed() const { return violations.empty(); }
};

/// [[a,b],c] + [[b,c],a] + [[c,a],b] = 0 over all unordered triples with |i|,|m| <= range.
inline JacobiReport check_jacobi(int range, Cocycle mode) {
  if (range < 1) throw std::invalid_argument("range bound must be at least 1");
  JacobiReport rep;
  rep.mode = mode;
  rep.range = range;
  auto gens = generator_box(range);
  auto nested = [mode](const Generator& x, const Generator& y, const Generator& z) {
    Element inner = wlog_bracket(x, y, Cocycle::none);
    return wlog_bracket(inner, Element::generator(z), mode);
  };
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a; b < gens.size(); ++b)
      for (std::size_t c = b; c < gens.size(); ++c) {
        const auto &x = gens[a], &y = gens[b], &z = gens[c];
        try {
          Element sum = nested(x, y, z) + nested(y, z, x) + nested(z, x, y);
          ++rep.checked;
          if (!sum.is_zero()) rep.violations.push_back({x, y, z});
        } catch (const OutsideClosedDomain&) {
          ++rep.skipped;
        }
      }
  return rep;
}

struct Deviation {
  Generator a, b;
  Rational closed, residue;
};

/// Pairs in the closed form's domain, |i|,|m| <= range, where the two cocycles differ.
inline std::vector<Deviation> cocycle_deviations(int range) {
  std::vector<Deviation> out;
  auto gens = generator_box(range);
  for (const auto& a : gens)
    for (const auto& b : gens) {
      if (!in_closed_domain(a, b)) continue;
      Rational cl = cocycle_closed_form(a, b), re = cocycle_residue(a, b);
      if (cl != re) out.push_back({a, b, cl, re});
    }
  return out;
}

}  // namespace virlog::wlog
