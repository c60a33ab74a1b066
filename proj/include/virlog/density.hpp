#pragma once

// Generalized density modules with log-depth n:
//
//   L_m u_r^(i) = (mu + r + lambda (m+1)) u_{r-m}^(i) + beta i u_{r-m}^(i-1),   0 <= i <= n.

#include "virlog/multipoly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace virlog {

template <class R>
struct DensityModule {
  R lambda;
  R mu;
  R beta;
  unsigned depth = 0;
};

inline DensityModule<MultiPoly> symbolic_density_module(unsigned depth) {
  return {MultiPoly::var(Symbol::lambda), MultiPoly::var(Symbol::mu), MultiPoly::var(Symbol::beta), depth};
}

struct DensityLabel {
  long r = 0;
  unsigned i = 0;
  friend auto operator<=>(const DensityLabel&, const DensityLabel&) = default;
};

template <class R>
using DensityVector = std::map<DensityLabel, R>;

template <class R>
DensityVector<R> density_action(const DensityModule<R>& mod, long m, const DensityLabel& label) {
  if (label.i > mod.depth) throw std::out_of_range("log index exceeds the module's depth");
  DensityVector<R> out;
  auto add = [&out](const DensityLabel& l, R c) {
    if (is_zero(c)) return;
    auto [it, inserted] = out.try_emplace(l, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) out.erase(it);
    }
  };
  R scale = mod.mu + R(Rational(label.r)) + R(Rational(m + 1)) * mod.lambda;
  add({label.r - m, label.i}, scale);
  if (label.i > 0) add({label.r - m, label.i - 1}, R(Rational(static_cast<long>(label.i))) * mod.beta);
  return out;
}

template <class R>
DensityVector<R> density_action(const DensityModule<R>& mod, long m, const DensityVector<R>& v) {
  DensityVector<R> out;
  for (const auto& [l, c] : v)
    for (const auto& [l2, c2] : density_action(mod, m, l)) {
      R term = c * c2;
      auto [it, inserted] = out.try_emplace(l2, term);
      if (!inserted) {
        it->second += term;
        if (is_zero(it->second)) out.erase(it);
      }
    }
  return out;
}

}  // namespace virlog
