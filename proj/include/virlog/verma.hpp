#pragma once

// Generalized Verma modules M_n(c,h) for the Virasoro algebra.
//
// The top level is spanned by v_1..v_n with L(0) v_i = h v_i + v_{i-1} (v_0 = 0)
// and L(k) v_i = 0 for k > 0. Level-m basis vectors are
//
//   L(-i_1) L(-i_2) ... L(-i_k) v_t,   i_1 <= i_2 <= ... <= i_k,  sum i_j = m,
//
// so L(-1) powers are written leftmost, matching the usual hand-written form
// L(-1)^3 v, L(-1)L(-2) v, L(-3) v. The coefficient ring R is Rational for
// numeric (c,h) and MultiPoly for symbolic ones; the two never mix.

#include "virlog/matrix.hpp"
#include "virlog/multipoly.hpp"
#include "virlog/virasoro.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

namespace virlog {

template <class R>
struct JordanVermaModule {
  R c;
  R h;
  unsigned jordan = 1;

  JordanVermaModule(R c_, R h_, unsigned n = 1) : c(std::move(c_)), h(std::move(h_)), jordan(n) {
    if (n < 1) throw std::invalid_argument("jordan block size must be at least 1");
  }
  friend bool operator==(const JordanVermaModule&, const JordanVermaModule&) = default;
};

using NumericModule = JordanVermaModule<Rational>;
using SymbolicModule = JordanVermaModule<MultiPoly>;

/// M_n(c,h) with c and h kept as the symbols c and h.
inline SymbolicModule symbolic_module(unsigned jordan) {
  return SymbolicModule(MultiPoly::var(Symbol::c), MultiPoly::var(Symbol::h), jordan);
}

struct BasisLabel {
  std::vector<int> parts;  // i_1 <= i_2 <= ..., operator order left to right
  unsigned top = 1;        // 1..n

  int level() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
  }
  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
  friend auto operator<=>(const BasisLabel& a, const BasisLabel& b) {
    if (auto c = a.top <=> b.top; c != 0) return c;
    return a.parts <=> b.parts;
  }

  std::string str(unsigned jordan) const {
    std::string out;
    for (std::size_t i = 0; i < parts.size();) {
      std::size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      out += "L(-" + std::to_string(parts[i]) + ")";
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
    if (jordan == 2) return out + (top == 1 ? "v" : "w");
    return out + (jordan == 1 ? "v" : "v" + std::to_string(top));
  }
};

/// Partitions of m as ascending part lists, in lexicographic order:
/// [1,1,1] < [1,2] < [3].
inline std::vector<std::vector<int>> partitions_ascending(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int min_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = min_part; p <= remaining; ++p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, m, 1);
  std::sort(out.begin(), out.end());
  return out;
}

/// n * p(m) labels: all partitions with top index 1, then top index 2, ...
template <class R>
std::vector<BasisLabel> level_basis(const JordanVermaModule<R>& mod, int level) {
  if (level < 0) return {};
  std::vector<BasisLabel> out;
  auto parts = partitions_ascending(level);
  for (unsigned t = 1; t <= mod.jordan; ++t)
    for (const auto& p : parts) out.push_back({p, t});
  return out;
}

template <class R>
using LabelTerms = std::map<BasisLabel, R>;

template <class R>
void add_into(LabelTerms<R>& acc, const BasisLabel& l, const R& coeff) {
  if (is_zero(coeff)) return;
  auto [it, inserted] = acc.try_emplace(l, coeff);
  if (!inserted) {
    it->second += coeff;
    if (is_zero(it->second)) acc.erase(it);
  }
}

template <class R>
struct ModuleVector {
  JordanVermaModule<R> module;
  int level = 0;
  LabelTerms<R> terms;

  ModuleVector(JordanVermaModule<R> m, int lvl) : module(std::move(m)), level(lvl) {}

  void add(const BasisLabel& l, const R& coeff) {
    if (l.level() != level) throw std::invalid_argument("basis label at the wrong level");
    if (l.top < 1 || l.top > module.jordan) throw std::invalid_argument("top index out of range");
    add_into(terms, l, coeff);
  }
  bool is_zero() const { return terms.empty(); }
  R coefficient(const BasisLabel& l) const {
    auto it = terms.find(l);
    return it == terms.end() ? R(0) : it->second;
  }
  /// Coordinates in level_basis order.
  std::vector<R> coordinates() const {
    std::vector<R> out;
    for (const auto& l : level_basis(module, level)) out.push_back(coefficient(l));
    return out;
  }
  static ModuleVector from_coordinates(const JordanVermaModule<R>& m, int lvl, const std::vector<R>& coords) {
    ModuleVector v(m, lvl);
    auto basis = level_basis(m, lvl);
    if (coords.size() != basis.size()) throw std::invalid_argument("coordinate count does not match the level");
    for (std::size_t i = 0; i < basis.size(); ++i) v.add(basis[i], coords[i]);
    return v;
  }

  ModuleVector& operator+=(const ModuleVector& o) {
    if (o.level != level) throw std::invalid_argument("adding vectors at different levels");
    for (const auto& [l, c] : o.terms) add_into(terms, l, c);
    return *this;
  }
  friend ModuleVector operator*(const R& k, ModuleVector v) {
    LabelTerms<R> t;
    for (const auto& [l, c] : v.terms) add_into(t, l, R(k * c));
    v.terms = std::move(t);
    return v;
  }
  friend bool operator==(const ModuleVector& a, const ModuleVector& b) {
    return a.module == b.module && a.level == b.level && a.terms == b.terms;
  }

  std::string str() const {
    std::vector<std::pair<Rational, std::string>> ts;
    for (const auto& l : level_basis(module, level)) {
      auto it = terms.find(l);
      if (it == terms.end()) continue;
      if constexpr (std::is_same_v<R, Rational>) {
        ts.emplace_back(it->second, l.str(module.jordan));
      } else if (auto k = it->second.constant_value()) {
        ts.emplace_back(*k, l.str(module.jordan));
      } else {
        ts.emplace_back(Rational(1), "(" + it->second.str() + ")" + l.str(module.jordan));
      }
    }
    return join_terms(ts);
  }
};

/// Memoized action of single modes on basis labels. One engine per computation;
/// it is not shared across threads.
template <class R>
class ModeAction {
public:
  explicit ModeAction(const JordanVermaModule<R>& mod) : mod_(mod) {}

  const LabelTerms<R>& apply(int k, const BasisLabel& l) {
    auto key = std::make_tuple(k, l.parts, l.top);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    LabelTerms<R> out = compute(k, l);
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

  LabelTerms<R> apply(int k, const LabelTerms<R>& v) {
    LabelTerms<R> out;
    for (const auto& [l, c] : v) {
      // std::map references stay valid while the memo grows.
      for (const auto& [l2, c2] : apply(k, l)) add_into(out, l2, R(c * c2));
    }
    return out;
  }

private:
  LabelTerms<R> compute(int k, const BasisLabel& l) {
    LabelTerms<R> out;
    if (l.parts.empty()) {
      if (k > 0) return out;
      if (k < 0) {
        add_into(out, BasisLabel{{-k}, l.top}, R(1));
        return out;
      }
      add_into(out, l, mod_.h);
      if (l.top > 1) add_into(out, BasisLabel{{}, l.top - 1}, R(1));
      return out;
    }
    const int a = l.parts.front();
    BasisLabel rest{std::vector<int>(l.parts.begin() + 1, l.parts.end()), l.top};

    if (k < 0) {
      const int d = -k;
      if (d <= a) {
        BasisLabel nl = l;
        nl.parts.insert(nl.parts.begin(), d);
        add_into(out, nl, R(1));
        return out;
      }
      // L(-d) L(-a) rest = L(-a) (L(-d) rest) + (a - d) L(-d-a) rest
      for (const auto& [l2, c2] : apply(k, rest)) {
        BasisLabel nl = l2;
        nl.parts.insert(nl.parts.begin(), a);
        add_into(out, nl, c2);
      }
      for (const auto& [l2, c2] : apply(-(d + a), rest)) add_into(out, l2, R(Rational(a - d) * c2));
      return out;
    }

    // L(k) L(-a) rest = L(-a) L(k) rest + (k + a) L(k - a) rest + delta_{k,a} (k^3-k)/12 c rest
    LabelTerms<R> lowered = apply(k, rest);
    for (const auto& [l2, c2] : apply(-a, lowered)) add_into(out, l2, c2);
    for (const auto& [l2, c2] : apply(k - a, rest)) add_into(out, l2, R(Rational(k + a) * c2));
    if (k == a) {
      Rational central(static_cast<long>(k) * k * k - k, 12);
      if (!central.is_zero()) add_into(out, rest, R(central * mod_.c));
    }
    return out;
  }

  JordanVermaModule<R> mod_;
  std::map<std::tuple<int, std::vector<int>, unsigned>, LabelTerms<R>> memo_;
};

template <class R>
ModuleVector<R> apply_mode(const JordanVermaModule<R>& mod, int k, const ModuleVector<R>& vec) {
  if (!(vec.module == mod)) throw std::invalid_argument("vector belongs to a different module");
  ModeAction<R> action(mod);
  ModuleVector<R> out(mod, vec.level - k);
  if (out.level < 0) return out;
  out.terms = action.apply(k, vec.terms);
  return out;
}

/// Applies a UEA element (already written as words of modes) to a vector,
/// rightmost mode first. C acts by the module's central charge.
template <class R>
R coerce(const MultiPoly& p) {
  if constexpr (std::is_same_v<R, MultiPoly>) {
    return p;
  } else {
    auto k = p.constant_value();
    if (!k) throw std::invalid_argument("symbolic coefficient in a numeric computation: " + p.str());
    return *k;
  }
}

template <class R>
ModuleVector<R> apply_element(const JordanVermaModule<R>& mod, const vir::UEAElement& e, const ModuleVector<R>& vec) {
  ModeAction<R> action(mod);
  LabelTerms<R> acc;
  int level = vec.level;
  bool first = true;
  for (const auto& [w, coeff] : e.terms()) {
    int lvl = vec.level + w.degree();
    if (first) level = lvl, first = false;
    else if (lvl != level) throw std::invalid_argument("element is not homogeneous");
    LabelTerms<R> cur = vec.terms;
    for (auto it = w.modes.rbegin(); it != w.modes.rend(); ++it) cur = action.apply(*it, cur);
    R scale = coerce<R>(coeff) * pow(mod.c, w.central_power);
    for (const auto& [l, c] : cur) add_into(acc, l, R(scale * c));
  }
  ModuleVector<R> out(mod, level);
  out.terms = std::move(acc);
  return out;
}

/// Gram matrix of (s_a u_a, s_b u_b) = (u_a, s_a^T s_b u_b) on level_basis, with
/// (v_i, v_j) = delta_ij on the top level. Bilinear; not symmetric for n > 1.
template <class R>
ExactMatrix<R> shapovalov_matrix(const JordanVermaModule<R>& mod, int level) {
  auto basis = level_basis(mod, level);
  auto parts = partitions_ascending(level);
  const std::size_t p = parts.size();
  ExactMatrix<R> out(basis.size(), basis.size());
  ModeAction<R> action(mod);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    for (std::size_t pi = 0; pi < p; ++pi) {
      // s^T = L(i_k)...L(i_1): L(i_1) acts first.
      LabelTerms<R> cur{{basis[col], R(1)}};
      for (int part : parts[pi]) cur = action.apply(part, cur);
      for (unsigned t = 1; t <= mod.jordan; ++t) {
        auto it = cur.find(BasisLabel{{}, t});
        if (it != cur.end()) out((t - 1) * p + pi, col) = it->second;
      }
    }
  }
  return out;
}

template <class R>
R shapovalov_determinant(const JordanVermaModule<R>& mod, int level) {
  return bareiss_determinant(shapovalov_matrix(mod, level));
}

/// Rows of the combined L(1), L(2) action from `level` down to level-1 and level-2.
inline ExactMatrix<Rational> annihilator_matrix(const NumericModule& mod, int level) {
  auto basis = level_basis(mod, level);
  auto b1 = level_basis(mod, level - 1);
  auto b2 = level_basis(mod, level - 2);
  ExactMatrix<Rational> m(b1.size() + b2.size(), basis.size());
  ModeAction<Rational> action(mod);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto& t1 = action.apply(1, basis[col]);
    for (std::size_t r = 0; r < b1.size(); ++r)
      if (auto it = t1.find(b1[r]); it != t1.end()) m(r, col) = it->second;
    const auto& t2 = action.apply(2, basis[col]);
    for (std::size_t r = 0; r < b2.size(); ++r)
      if (auto it = t2.find(b2[r]); it != t2.end()) m(b1.size() + r, col) = it->second;
  }
  return m;
}

/// Basis of vectors at `level` killed by L(1) and L(2), in reduced echelon form:
/// each vector's first nonzero coefficient (in basis order) is 1.
inline std::vector<ModuleVector<Rational>> singular_vectors(const NumericModule& mod, int level) {
  if (level < 1) throw std::invalid_argument("singular vectors are sought at level >= 1");
  auto kernel = null_space(annihilator_matrix(mod, level));
  if (kernel.empty()) return {};
  ExactMatrix<Rational> rows(kernel.size(), kernel.front().size());
  for (std::size_t i = 0; i < kernel.size(); ++i)
    for (std::size_t j = 0; j < kernel[i].size(); ++j) rows(i, j) = kernel[i][j];
  auto pivots = rref(rows);
  std::vector<ModuleVector<Rational>> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    std::vector<Rational> coords(rows.cols());
    for (std::size_t j = 0; j < rows.cols(); ++j) coords[j] = rows(i, j);
    out.push_back(ModuleVector<Rational>::from_coordinates(mod, level, coords));
  }
  return out;
}

/// Whether `v` is in the span of `basis` (all at the same level).
inline bool in_span(const std::vector<ModuleVector<Rational>>& basis, const ModuleVector<Rational>& v) {
  std::vector<std::vector<Rational>> cols;
  for (const auto& b : basis) {
    if (b.level != v.level) throw std::invalid_argument("span test across levels");
    cols.push_back(b.coordinates());
  }
  return in_span(cols, v.coordinates());
}

/// Dimension of the right radical of the form at `level`.
inline std::size_t radical_dimension(const NumericModule& mod, int level) {
  auto s = shapovalov_matrix(mod, level);
  return s.cols() - rank(s);
}

struct HomCertificate {
  bool annihilated = false;  // L(1), L(2) kill both vectors
  bool eigen_s1 = false;     // L(0) s1 = (h+N) s1
  bool jordan_s2 = false;    // L(0) s2 = (h+N) s2 + s1
  bool nonzero = false;
  bool valid() const { return annihilated && eigen_s1 && jordan_s2 && nonzero; }
};

/// Certifies that v' -> s1, w' -> s2 extends to a homomorphism M_2(c, h+N) -> M_2(c, h).
inline HomCertificate check_hom_pair(const NumericModule& mod, const ModuleVector<Rational>& s1,
                                     const ModuleVector<Rational>& s2, int level) {
  if (mod.jordan != 2) throw std::invalid_argument("hom-pair check needs a jordan_size 2 module");
  if (s1.level != level || s2.level != level) throw std::invalid_argument("vectors at mismatched levels");
  HomCertificate cert;
  auto killed = [&](const ModuleVector<Rational>& s) {
    return apply_mode(mod, 1, s).is_zero() && apply_mode(mod, 2, s).is_zero();
  };
  cert.annihilated = killed(s1) && killed(s2);
  Rational weight = mod.h + Rational(level);
  ModuleVector<Rational> l0s1 = apply_mode(mod, 0, s1);
  cert.eigen_s1 = l0s1 == weight * s1;
  ModuleVector<Rational> expected = weight * s2;
  expected += s1;
  cert.jordan_s2 = apply_mode(mod, 0, s2) == expected;
  cert.nonzero = !s1.is_zero();
  return cert;
}

}  // namespace virlog
