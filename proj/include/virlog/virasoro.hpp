#pragma once

// Enveloping algebra of the Virasoro algebra:
//
//   [L(m), L(n)] = (m - n) L(m + n) + delta_{m+n,0} (m^3 - m)/12 C,   C central.
//
// A PBW word is canonical when its mode indices are ascending, so creation
// operators L(-n) sit on the left. The central element is tracked as a power of C.

#include "virlog/multipoly.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace virlog::vir {

struct VirMode {
  bool central = false;
  int index = 0;

  static VirMode L(int n) { return {false, n}; }
  static VirMode C() { return {true, 0}; }
  friend bool operator==(const VirMode&, const VirMode&) = default;
};

struct PBWWord {
  std::vector<int> modes;
  unsigned central_power = 0;

  bool is_identity() const { return modes.empty() && central_power == 0; }
  bool is_canonical() const {
    for (std::size_t i = 0; i + 1 < modes.size(); ++i)
      if (modes[i] > modes[i + 1]) return false;
    return true;
  }
  int degree() const {
    int d = 0;
    for (int m : modes) d -= m;
    return d;
  }

  friend bool operator==(const PBWWord&, const PBWWord&) = default;
  friend std::strong_ordering operator<=>(const PBWWord& a, const PBWWord& b) {
    if (a.modes.size() != b.modes.size()) return a.modes.size() <=> b.modes.size();
    if (auto c = a.modes <=> b.modes; c != 0) return c;
    return a.central_power <=> b.central_power;
  }

  std::string str() const {
    std::string out;
    if (central_power) out += "C" + (central_power > 1 ? "^" + std::to_string(central_power) : std::string());
    for (std::size_t i = 0; i < modes.size();) {
      std::size_t j = i;
      while (j < modes.size() && modes[j] == modes[i]) ++j;
      out += "L(" + std::to_string(modes[i]) + ")";
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
    return out;
  }
};

/// Finite combination of PBW words with polynomial coefficients. Words need not
/// be canonical until passed through normal_order.
class UEAElement {
public:
  using TermMap = std::map<PBWWord, MultiPoly>;

  UEAElement() = default;
  static UEAElement word(std::vector<int> modes, MultiPoly coeff = MultiPoly(1), unsigned central_power = 0) {
    UEAElement e;
    e.add(PBWWord{std::move(modes), central_power}, coeff);
    return e;
  }
  static UEAElement scalar(const MultiPoly& coeff) { return word({}, coeff); }
  static UEAElement mode(const VirMode& m) {
    return m.central ? word({}, MultiPoly(1), 1) : word({m.index});
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const PBWWord& w, const MultiPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  UEAElement& operator+=(const UEAElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  UEAElement& operator-=(const UEAElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
  friend UEAElement operator*(const MultiPoly& k, const UEAElement& e) {
    UEAElement out;
    for (const auto& [w, c] : e.terms_) out.add(w, k * c);
    return out;
  }
  /// Concatenation product; the result is generally not canonical.
  friend UEAElement operator*(const UEAElement& a, const UEAElement& b) {
    UEAElement out;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) {
        PBWWord w{wa.modes, wa.central_power + wb.central_power};
        w.modes.insert(w.modes.end(), wb.modes.begin(), wb.modes.end());
        out.add(w, ca * cb);
      }
    return out;
  }
  friend bool operator==(const UEAElement&, const UEAElement&) = default;

  std::string str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Rational, std::string>> ts;
    // Longest words first, reading like the usual written form.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [w, c] = *it;
      std::string mono = w.is_identity() ? "" : w.str();
      if (auto k = c.constant_value()) {
        ts.emplace_back(*k, mono.empty() ? "" : mono);
      } else {
        ts.emplace_back(Rational(1), "(" + c.str() + ")" + mono);
      }
    }
    return join_terms(ts);
  }

private:
  TermMap terms_;
};

/// Generator-level commutator.
inline UEAElement bracket(const VirMode& a, const VirMode& b) {
  if (a.central || b.central) return {};
  const int m = a.index, n = b.index;
  UEAElement out;
  out.add(PBWWord{{m + n}, 0}, MultiPoly(m - n));
  if (m + n == 0) out.add(PBWWord{{}, 1}, MultiPoly(Rational(static_cast<long>(m) * m * m - m, 12)));
  return out;
}

/// Rewrites every word into ascending-mode order using the commutation relations.
/// Each swap either keeps the length and removes an inversion, or shortens the
/// word, so the rewriting terminates.
inline UEAElement normal_order(const UEAElement& e) {
  UEAElement done;
  std::map<PBWWord, MultiPoly> pending(e.terms().begin(), e.terms().end());
  while (!pending.empty()) {
    // Process longest words first so shorter bracket terms get merged before expansion.
    auto it = std::prev(pending.end());
    PBWWord w = it->first;
    MultiPoly c = it->second;
    pending.erase(it);
    if (c.is_zero()) continue;

    std::size_t i = 0;
    while (i + 1 < w.modes.size() && w.modes[i] <= w.modes[i + 1]) ++i;
    if (i + 1 >= w.modes.size()) {
      done.add(w, c);
      continue;
    }
    const int a = w.modes[i], b = w.modes[i + 1];
    auto push = [&pending](PBWWord word, const MultiPoly& k) {
      if (k.is_zero()) return;
      auto [pit, ins] = pending.try_emplace(std::move(word), k);
      if (!ins) pit->second += k;
    };
    PBWWord swapped = w;
    std::swap(swapped.modes[i], swapped.modes[i + 1]);
    push(swapped, c);

    PBWWord merged = w;
    merged.modes.erase(merged.modes.begin() + static_cast<long>(i) + 1);
    merged.modes[i] = a + b;
    push(merged, Rational(a - b) * c);

    if (a + b == 0) {
      PBWWord central = w;
      central.modes.erase(central.modes.begin() + static_cast<long>(i), central.modes.begin() + static_cast<long>(i) + 2);
      ++central.central_power;
      push(central, Rational(static_cast<long>(a) * a * a - a, 12) * c);
    }
  }
  return done;
}

/// Anti-automorphism L(n) -> L(-n), C -> C, with word reversal; result normal-ordered.
inline UEAElement transpose(const UEAElement& e) {
  UEAElement out;
  for (const auto& [w, c] : e.terms()) {
    PBWWord t{{}, w.central_power};
    for (auto it = w.modes.rbegin(); it != w.modes.rend(); ++it) t.modes.push_back(-*it);
    out.add(t, c);
  }
  return normal_order(out);
}

/// normal_order(a * b).
inline UEAElement multiply(const UEAElement& a, const UEAElement& b) { return normal_order(a * b); }

/// Replaces C by a scalar (a rational or the symbol c).
inline UEAElement specialize_central(const UEAElement& e, const MultiPoly& c) {
  UEAElement out;
  for (const auto& [w, k] : e.terms()) out.add(PBWWord{w.modes, 0}, k * pow(c, w.central_power));
  return out;
}

}  // namespace virlog::vir
