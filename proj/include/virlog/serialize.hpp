#pragma once

// JSON encodings of the public result types, with matching parsers.
// Rationals are strings "p/q"; polynomials are {"vars":[...],"terms":[{"coeff","exps"}]}
// with terms in graded-lex order and exps aligned with vars.

#include "virlog/fusion.hpp"
#include "virlog/matrix.hpp"
#include "virlog/multipoly.hpp"
#include "virlog/unipoly.hpp"
#include "virlog/verma.hpp"
#include "virlog/virasoro.hpp"
#include "virlog/wlog.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace virlog::io {

using Json = nlohmann::ordered_json;

// --- scalars and polynomials ------------------------------------------------

inline Json to_json(const Rational& r) { return r.str(); }

inline Rational parse_rational(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational must be a \"p/q\" string");
  return Rational::parse(j.get<std::string>());
}

inline Json to_json(const MultiPoly& p) {
  auto vars = p.variables();
  Json names = Json::array();
  for (Symbol s : vars) names.push_back(std::string(symbol_name(s)));
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json exps = Json::array();
    for (Symbol s : vars) exps.push_back(e[static_cast<std::size_t>(s)]);
    terms.push_back(Json{{"coeff", c.str()}, {"exps", exps}});
  }
  return Json{{"vars", names}, {"terms", terms}};
}

inline MultiPoly parse_multipoly(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms")) throw std::invalid_argument("malformed polynomial");
  std::vector<Symbol> vars;
  for (const auto& v : j.at("vars")) vars.push_back(symbol_from_name(v.get<std::string>()));
  MultiPoly out;
  for (const auto& t : j.at("terms")) {
    const auto& exps = t.at("exps");
    if (exps.size() != vars.size()) throw std::invalid_argument("exponent list does not match vars");
    Exponents e{};
    for (std::size_t i = 0; i < vars.size(); ++i) e[static_cast<std::size_t>(vars[i])] = exps[i].get<std::uint16_t>();
    out.add_term(e, parse_rational(t.at("coeff")));
  }
  return out;
}

/// Coefficients in either ring: Rational as a string, MultiPoly as an object.
template <class R>
R parse_coeff(const Json& j) {
  if constexpr (std::is_same_v<R, Rational>) return parse_rational(j);
  else return parse_multipoly(j);
}

inline Json to_json(const RatPoly& p) { return to_json(p.to_multipoly()); }

inline RatPoly parse_ratpoly(const Json& j, Symbol fallback) {
  MultiPoly m = parse_multipoly(j);
  auto vars = m.variables();
  if (vars.size() > 1) throw std::invalid_argument("expected a univariate polynomial");
  Symbol var = vars.empty() ? fallback : vars.front();
  std::vector<Rational> coeffs(m.degree_in(var) + 1);
  for (const auto& [e, c] : m.terms()) coeffs[e[static_cast<std::size_t>(var)]] = c;
  return RatPoly(var, coeffs);
}

template <class R>
Json to_json(const ExactMatrix<R>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

template <class R>
ExactMatrix<R> parse_matrix(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  const std::size_t rows = j.size(), cols = rows ? j[0].size() : 0;
  ExactMatrix<R> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols) throw std::invalid_argument("ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = parse_coeff<R>(j[i][k]);
  }
  return m;
}

// --- Virasoro ----------------------------------------------------------------

inline Json to_json(const vir::UEAElement& e) {
  Json out = Json::array();
  for (const auto& [w, c] : e.terms())
    out.push_back(Json{{"modes", w.modes}, {"central", w.central_power}, {"coeff", to_json(c)}});
  return out;
}

inline vir::UEAElement parse_uea(const Json& j) {
  vir::UEAElement e;
  for (const auto& t : j)
    e.add(vir::PBWWord{t.at("modes").get<std::vector<int>>(), t.at("central").get<unsigned>()},
          parse_multipoly(t.at("coeff")));
  return e;
}

// --- modules -----------------------------------------------------------------

/// "word" lists partition parts largest first; [2,1,1] is L(-1)L(-1)L(-2) applied to the top vector.
template <class R>
Json to_json(const ModuleVector<R>& v) {
  Json terms = Json::array();
  for (const auto& l : level_basis(v.module, v.level)) {
    auto it = v.terms.find(l);
    if (it == v.terms.end()) continue;
    std::vector<int> word(l.parts.rbegin(), l.parts.rend());
    terms.push_back(Json{{"word", word}, {"top", l.top}, {"coeff", to_json(it->second)}});
  }
  Json mod{{"c", to_json(v.module.c)}, {"h", to_json(v.module.h)}, {"jordan", v.module.jordan}};
  return Json{{"module", mod}, {"level", v.level}, {"terms", terms}};
}

template <class R>
ModuleVector<R> parse_module_vector(const Json& j) {
  const auto& m = j.at("module");
  JordanVermaModule<R> mod(parse_coeff<R>(m.at("c")), parse_coeff<R>(m.at("h")), m.at("jordan").get<unsigned>());
  ModuleVector<R> v(mod, j.at("level").get<int>());
  for (const auto& t : j.at("terms")) {
    auto parts = t.at("word").get<std::vector<int>>();
    std::sort(parts.begin(), parts.end());
    v.add(BasisLabel{parts, t.at("top").get<unsigned>()}, parse_coeff<R>(t.at("coeff")));
  }
  return v;
}

inline Json to_json(const HomCertificate& h) {
  return Json{{"valid", h.valid()},
              {"annihilated", h.annihilated},
              {"eigen_s1", h.eigen_s1},
              {"jordan_s2", h.jordan_s2},
              {"nonzero", h.nonzero}};
}

// --- fusion ------------------------------------------------------------------

inline Json to_json(const RootReport& r) {
  Json out = Json::array();
  for (const auto& [root, mult] : r.roots) out.push_back(Json::array({root.str(), mult}));
  return out;
}

inline Json to_json(const IndicialData& d) {
  return Json{{"level", d.level},
              {"indicial", to_json(d.indicial)},
              {"fusion_h3", to_json(d.fusion)},
              {"roots", to_json(d.roots)},
              {"logarithmic", d.logarithmic}};
}

inline IndicialData parse_indicial(const Json& j) {
  IndicialData d;
  d.level = j.at("level").get<int>();
  d.indicial = parse_ratpoly(j.at("indicial"), Symbol::s);
  d.fusion = parse_ratpoly(j.at("fusion_h3"), Symbol::h3);
  for (const auto& r : j.at("roots")) d.roots.roots.emplace_back(parse_rational(r.at(0)), r.at(1).get<unsigned>());
  // The residual factor is not serialized; recover it from the fusion polynomial.
  d.roots.residual = rational_roots(d.fusion).residual;
  d.logarithmic = j.at("logarithmic").get<bool>();
  return d;
}

template <class R>
Json to_json(const EulerOperator<R>& op) {
  Json out = Json::array();
  for (const auto& [key, c] : op.terms()) out.push_back(Json{{"k", key.k}, {"j", key.j}, {"coeff", to_json(c)}});
  return out;
}

template <class R>
EulerOperator<R> parse_euler(const Json& j) {
  EulerOperator<R> op;
  for (const auto& t : j) op.add(t.at("k").get<int>(), t.at("j").get<unsigned>(), parse_coeff<R>(t.at("coeff")));
  return op;
}

template <class R>
Json to_json(const LogSeries<R>& s) {
  Json out = Json::array();
  for (const auto& [key, c] : s.terms())
    out.push_back(Json{{"exponent", key.exponent.str()}, {"log", key.log_power}, {"coeff", to_json(c)}});
  return out;
}

template <class R>
LogSeries<R> parse_log_series(const Json& j) {
  LogSeries<R> s;
  for (const auto& t : j)
    s.add(parse_rational(t.at("exponent")), t.at("log").get<unsigned>(), parse_coeff<R>(t.at("coeff")));
  return s;
}

inline Json to_json(const EulerSolution& s) {
  Json hom = Json::array();
  for (const auto& h : s.homogeneous) hom.push_back(to_json(h));
  return Json{{"homogeneous", hom}, {"particular", to_json(s.particular)}, {"unresolved", to_json(s.unresolved)}};
}

// --- W_log -------------------------------------------------------------------

inline Json to_json(const wlog::Generator& g) { return Json::array({g.i, g.m}); }

inline wlog::Generator parse_generator(const Json& j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }

inline Json to_json(const wlog::Element& e) {
  Json terms = Json::array();
  for (const auto& [g, c] : e.terms()) terms.push_back(Json{{"gen", to_json(g)}, {"coeff", to_json(c)}});
  return Json{{"terms", terms}, {"central", to_json(e.central())}};
}

inline wlog::Element parse_element(const Json& j) {
  wlog::Element e;
  for (const auto& t : j.at("terms")) e.add(parse_generator(t.at("gen")), parse_multipoly(t.at("coeff")));
  e.add_central(parse_multipoly(j.at("central")));
  return e;
}

inline Json to_json(const std::vector<wlog::Deviation>& devs) {
  Json out = Json::array();
  for (const auto& d : devs)
    out.push_back(Json{{"pair", Json::array({to_json(d.a), to_json(d.b)})}, {"closed", d.closed.str()}, {"residue", d.residue.str()}});
  return out;
}

inline std::vector<wlog::Deviation> parse_deviations(const Json& j) {
  std::vector<wlog::Deviation> out;
  for (const auto& t : j)
    out.push_back({parse_generator(t.at("pair").at(0)), parse_generator(t.at("pair").at(1)), parse_rational(t.at("closed")),
                   parse_rational(t.at("residue"))});
  return out;
}

inline Json to_json(const wlog::JacobiReport& r) {
  Json bad = Json::array();
  for (const auto& t : r.violations) bad.push_back(Json::array({to_json(t[0]), to_json(t[1]), to_json(t[2])}));
  return Json{{"cocycle", std::string(wlog::cocycle_name(r.mode))},
              {"range", r.range},
              {"checked", r.checked},
              {"skipped", r.skipped},
              {"passed", r.passed()},
              {"violations", bad}};
}

}  // namespace virlog::io
