// virlog: command-line front end for the virlog library.
//
// Exit codes: 0 success, 1 invalid input or computational error, 2 a report fixture failed.

#include "virlog/fusion.hpp"
#include "virlog/report.hpp"
#include "virlog/serialize.hpp"
#include "virlog/verma.hpp"
#include "virlog/wlog.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace virlog;
using io::Json;

namespace {

struct Options {
  std::optional<std::string> c, h, h1, h2;
  int level = 1;
  unsigned jordan = 1;
  bool symbolic = false;
  bool json = false;
  std::string cocycle = "closed";
  std::string polarization = "mode";
  std::string out;
  // verb-specific
  std::string s1, s2;
  std::string exponent = "0";
  unsigned log_power = 0;
  std::string coeff = "1";
  bool times_b = false;
  int max_level = 8;
  std::string fixture_case;
  int m = 1, n = 1, p = 2;
  std::string gen_a, gen_b, word, theta;
  int range = 2;
  bool deviations = false;
  int square_level = 5;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Rational need(const std::optional<std::string>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return Rational::parse(*v);
}

wlog::Generator parse_gen(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("generator must be written i,m: '" + text + "'");
  auto i = Rational::parse(text.substr(0, comma)), m = Rational::parse(text.substr(comma + 1));
  if (!i.is_integer() || !m.is_integer()) throw UsageError("generator indices must be integers: '" + text + "'");
  return {static_cast<int>(i.to_long()), static_cast<int>(m.to_long())};
}

wlog::Word parse_word(const std::string& text) {
  wlog::Word w;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';'))
    if (!part.empty()) w.push_back(parse_gen(part));
  return w;
}

wlog::Polarization parse_polarization(const std::string& s) {
  if (s == "mode") return wlog::Polarization::mode;
  if (s == "log_degree" || s == "log-degree") return wlog::Polarization::log_degree;
  throw UsageError("unknown polarization '" + s + "'");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

template <class R>
std::string matrix_text(const ExactMatrix<R>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + to_string(m(i, j));
    out += "]\n";
  }
  return out;
}

void check_module_flags(const Options& o) {
  if (o.symbolic && (o.c || o.h)) throw UsageError("--symbolic cannot be combined with --c or --h");
  if (!o.symbolic && (!o.c || !o.h)) throw UsageError("give --c and --h, or --symbolic");
  if (o.jordan < 1) throw UsageError("--jordan must be at least 1");
  if (o.level < 0) throw UsageError("--level must be non-negative");
}

NumericModule numeric_module(const Options& o) {
  if (o.symbolic) throw UsageError("this verb needs numeric --c and --h");
  return NumericModule(need(o.c, "--c"), need(o.h, "--h"), o.jordan);
}

std::string cmd_shapovalov(const Options& o) {
  check_module_flags(o);
  if (o.symbolic) {
    auto m = shapovalov_matrix(symbolic_module(o.jordan), o.level);
    return o.json ? dump(io::to_json(m)) : matrix_text(m);
  }
  auto m = shapovalov_matrix(numeric_module(o), o.level);
  return o.json ? dump(io::to_json(m)) : matrix_text(m);
}

std::string cmd_det(const Options& o) {
  check_module_flags(o);
  if (o.symbolic) {
    auto d = shapovalov_determinant(symbolic_module(o.jordan), o.level);
    return o.json ? dump(io::to_json(d)) : d.str() + "\n";
  }
  auto d = shapovalov_determinant(numeric_module(o), o.level);
  return o.json ? dump(io::to_json(d)) : d.str() + "\n";
}

std::string cmd_singular(const Options& o) {
  check_module_flags(o);
  auto vs = singular_vectors(numeric_module(o), o.level);
  if (o.json) {
    Json arr = Json::array();
    for (const auto& v : vs) arr.push_back(io::to_json(v));
    return dump(arr);
  }
  std::string out = "dimension " + std::to_string(vs.size()) + "\n";
  for (const auto& v : vs) out += v.str() + "\n";
  return out;
}

std::string cmd_radical(const Options& o) {
  check_module_flags(o);
  auto d = radical_dimension(numeric_module(o), o.level);
  return o.json ? dump(Json{{"radical_dimension", d}}) : std::to_string(d) + "\n";
}

/// With --s1/--s2 (ModuleVector JSON) the given pair is certified; otherwise the
/// singular space is searched for s2 with s1 = (L(0) - h - N) s2 nonzero.
std::string cmd_hom_check(const Options& o) {
  check_module_flags(o);
  NumericModule mod = numeric_module(o);
  if (mod.jordan != 2) throw UsageError("hom-check needs --jordan 2");
  std::optional<ModuleVector<Rational>> s1, s2;
  if (!o.s1.empty() || !o.s2.empty()) {
    if (o.s1.empty() || o.s2.empty()) throw UsageError("give both --s1 and --s2");
    s1 = io::parse_module_vector<Rational>(Json::parse(o.s1));
    s2 = io::parse_module_vector<Rational>(Json::parse(o.s2));
    if (!(s1->module == mod) || !(s2->module == mod)) throw UsageError("vectors belong to a different module");
  } else {
    const Rational weight = mod.h + Rational(o.level);
    for (const auto& cand : singular_vectors(mod, o.level)) {
      auto l0 = apply_mode(mod, 0, cand);
      l0 += (-weight) * cand;
      if (!l0.is_zero()) {
        s1 = l0;
        s2 = cand;
        break;
      }
    }
  }
  HomCertificate cert;
  if (s1 && s2) cert = check_hom_pair(mod, *s1, *s2, o.level);
  if (o.json) {
    Json j = io::to_json(cert);
    if (s1) j["s1"] = io::to_json(*s1), j["s2"] = io::to_json(*s2);
    return dump(j);
  }
  if (!s1) return "no pair found\n";
  return std::string(cert.valid() ? "valid" : "invalid") + "\ns1 = " + s1->str() + "\ns2 = " + s2->str() + "\n";
}

std::string indicial_text(const IndicialData& d) {
  std::string out = "level " + std::to_string(d.level) + "\nindicial " + d.indicial.str() + "\nfusion " +
                    d.fusion.str() + "\nroots " + report::roots_str(d.roots) + "\n";
  if (d.roots.residual.degree() > 0) out += "irrational factor " + d.roots.residual.str() + "\n";
  return out + "logarithmic " + (d.logarithmic ? "true" : "false") + "\n";
}

std::string cmd_fusion(const Options& o) {
  auto d = fusion_data(need(o.c, "--c"), need(o.h1, "--h1"), need(o.h2, "--h2"), o.max_level);
  return o.json ? dump(io::to_json(d)) : indicial_text(d);
}

/// Operator from the lowest singular vector of M(c,h2) with h1; rhs coeff * x^exponent * log^p.
std::string cmd_euler_solve(const Options& o) {
  const Rational c = need(o.c, "--c"), h1 = need(o.h1, "--h1"), h2 = need(o.h2, "--h2");
  auto sing = lowest_singular_vector(NumericModule(c, h2, 1), o.max_level);
  if (!sing) throw std::domain_error("M(c,h2) has no singular vector up to level " + std::to_string(o.max_level));
  auto op = descent_operator(*sing, h1);
  MultiPoly coeff(Rational::parse(o.coeff));
  if (o.times_b) coeff = coeff * MultiPoly::var(Symbol::b);
  auto sol = solve_euler(op, Rational::parse(o.exponent), o.log_power, coeff);
  if (o.json) {
    Json j = io::to_json(sol);
    j["operator"] = io::to_json(op);
    return dump(j);
  }
  std::string out = "operator " + op.str() + "\nhomogeneous";
  for (const auto& hsol : sol.homogeneous) out += " {" + hsol.str() + "}";
  if (sol.unresolved.degree() > 0) out += " (plus roots of " + sol.unresolved.str() + ")";
  return out + "\nparticular " + sol.particular.str() + "\n";
}

std::string cmd_ope(const Options& o) {
  Rational a = ope_level2_coefficient(need(o.c, "--c"), need(o.h, "--h"));
  return o.json ? dump(io::to_json(a)) : a.str() + "\n";
}

std::string cmd_fixture(const Options& o) {
  FixtureCase fc;
  if (o.fixture_case == "c1") fc.kind = FixtureCase::Kind::c1;
  else if (o.fixture_case == "cminus2") fc.kind = FixtureCase::Kind::cminus2;
  else if (o.fixture_case == "c0") fc.kind = FixtureCase::Kind::c0;
  else throw UsageError("--case must be c1, cminus2 or c0");
  fc.m = o.m;
  fc.n = o.n;
  fc.p = o.p;
  auto poly = fixture_polynomial(fc);
  return o.json ? dump(io::to_json(poly)) : poly.str() + "\n";
}

std::string cmd_determine_b(const Options& o) {
  auto bd = determine_b(need(o.h, "--h"), wlog::parse_cocycle(o.cocycle));
  if (o.json)
    return dump(Json{{"b", bd.b.str()},
                     {"mu", bd.mu.str()},
                     {"pairing", io::to_json(bd.pairing)},
                     {"second_pairing", io::to_json(bd.second_pairing)},
                     {"operator", io::to_json(bd.op)},
                     {"particular", io::to_json(bd.particular)}});
  return "b " + bd.b.str() + "\nmu " + bd.mu.str() + "\npairing " + bd.pairing.str() + "\noperator " + bd.op.str() +
         "\nparticular " + bd.particular.str() + "\n";
}

std::string cmd_wlog_bracket(const Options& o) {
  auto e = wlog::wlog_bracket(parse_gen(o.gen_a), parse_gen(o.gen_b), wlog::parse_cocycle(o.cocycle));
  return o.json ? dump(io::to_json(e)) : e.str() + "\n";
}

std::string cmd_wlog_cocycle(const Options& o) {
  if (o.deviations) {
    if (o.range < 1) throw UsageError("--range must be at least 1");
    auto devs = wlog::cocycle_deviations(o.range);
    if (o.json) return dump(io::to_json(devs));
    std::string out;
    for (const auto& d : devs)
      out += d.a.str() + " " + d.b.str() + " closed " + d.closed.str() + " residue " + d.residue.str() + "\n";
    return out + std::to_string(devs.size()) + " deviating pairs\n";
  }
  auto mode = wlog::parse_cocycle(o.cocycle);
  if (mode == wlog::Cocycle::none) throw UsageError("--cocycle must be closed or residue");
  Rational v = wlog::cocycle_value(mode, parse_gen(o.gen_a), parse_gen(o.gen_b));
  return o.json ? dump(io::to_json(v)) : v.str() + "\n";
}

/// vev(theta(g) * word) with --theta g, or vev(word).
std::string cmd_wlog_vev(const Options& o) {
  wlog::WordSum s = wlog::WordSum::word(parse_word(o.word));
  if (!o.theta.empty()) s = wlog::antiinvolution(wlog::WordSum::word({parse_gen(o.theta)})) * s;
  auto v = wlog::vacuum_expectation(s, wlog::parse_cocycle(o.cocycle), parse_polarization(o.polarization));
  return o.json ? dump(io::to_json(v)) : v.str() + "\n";
}

std::string cmd_wlog_jacobi(const Options& o) {
  auto r = wlog::check_jacobi(o.range, wlog::parse_cocycle(o.cocycle));
  if (o.json) return dump(io::to_json(r));
  std::string out = std::string(r.passed() ? "pass" : "fail") + ": " + std::to_string(r.checked) + " triples checked, " +
                    std::to_string(r.skipped) + " skipped, " + std::to_string(r.violations.size()) + " violations\n";
  for (const auto& t : r.violations) out += t[0].str() + " " + t[1].str() + " " + t[2].str() + "\n";
  return out;
}

std::string cmd_report(const Options& o, int& exit_code) {
  auto rs = report::run_all(o.square_level);
  exit_code = report::any_failure(rs) ? 2 : 0;
  if (!o.json) return report::table(rs);
  Json arr = Json::array();
  for (const auto& r : rs)
    arr.push_back(Json{{"id", r.id},
                       {"criterion", r.criterion},
                       {"provenance", r.provenance},
                       {"expected", r.expected},
                       {"computed", r.computed},
                       {"status", std::string(report::status_name(r.status))}});
  return dump(Json{{"fixtures", arr}, {"deviations", io::to_json(wlog::cocycle_deviations(3))}});
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact computations for Virasoro modules, fusion and the logarithmic Witt algebra", "virlog"};
  app.set_help_flag("--help", "print usage");
  app.require_subcommand(1);

  auto common = [&o](CLI::App* s) {
    s->add_flag("--json", o.json, "emit JSON");
    s->add_option("--out", o.out, "write output to FILE");
  };
  auto module_flags = [&o](CLI::App* s) {
    s->add_option("--c", o.c, "central charge p/q");
    s->add_option("--h", o.h, "lowest weight p/q");
    s->add_option("--level", o.level, "level");
    s->add_option("--jordan", o.jordan, "Jordan block size");
    s->add_flag("--symbolic", o.symbolic, "keep c and h symbolic");
  };

  auto* shap = app.add_subcommand("shapovalov", "Shapovalov matrix of M_n(c,h) at a level");
  auto* det = app.add_subcommand("det", "Shapovalov determinant");
  auto* sing = app.add_subcommand("singular", "basis of singular vectors at a level");
  auto* rad = app.add_subcommand("radical", "dimension of the radical at a level");
  auto* hom = app.add_subcommand("hom-check", "certify a homomorphism M_2(c,h+N) -> M_2(c,h)");
  for (auto* s : {shap, det, sing, rad, hom}) module_flags(s), common(s);
  hom->add_option("--s1", o.s1, "image of v as ModuleVector JSON");
  hom->add_option("--s2", o.s2, "image of w as ModuleVector JSON");

  auto* fus = app.add_subcommand("fusion", "fusion polynomial from the lowest singular vector of M(c,h2)");
  auto* eul = app.add_subcommand("euler-solve", "solve the singular-vector equation with a single-term right side");
  for (auto* s : {fus, eul}) {
    s->add_option("--c", o.c, "central charge");
    s->add_option("--h1", o.h1, "weight of the inserted primary");
    s->add_option("--h2", o.h2, "weight of the module with the singular vector");
    s->add_option("--max-level", o.max_level, "search bound for the singular vector");
    common(s);
  }
  eul->add_option("--exponent", o.exponent, "exponent s0 of the right side");
  eul->add_option("--log", o.log_power, "log power of the right side");
  eul->add_option("--coeff", o.coeff, "rational coefficient of the right side");
  eul->add_flag("--times-b", o.times_b, "multiply the coefficient by the symbol b");

  auto* ope = app.add_subcommand("ope-coeff", "level-2 vacuum coefficient a = 2h/c");
  ope->add_option("--c", o.c, "central charge");
  ope->add_option("--h", o.h, "weight");
  common(ope);

  auto* fix = app.add_subcommand("fixture", "tabulated fusion polynomials");
  fix->add_option("--case", o.fixture_case, "c1, cminus2 or c0")->required();
  fix->add_option("--m", o.m, "c1: m");
  fix->add_option("--n", o.n, "c1: n");
  fix->add_option("--p", o.p, "c0: even p");
  common(fix);

  auto* db = app.add_subcommand("determine-b", "the constant b for M(0,h)");
  db->add_option("--h", o.h, "weight");
  db->add_option("--cocycle", o.cocycle, "closed or residue");
  common(db);

  auto* wl = app.add_subcommand("wlog", "logarithmic Witt algebra");
  wl->require_subcommand(1);
  auto* wb = wl->add_subcommand("bracket", "[a, b]");
  auto* wc = wl->add_subcommand("cocycle", "cocycle value or deviations report");
  auto* wv = wl->add_subcommand("vev", "vacuum expectation of a word");
  auto* wj = wl->add_subcommand("jacobi", "Jacobi identity over a box of generators");
  for (auto* s : {wb, wc}) {
    s->add_option("--a", o.gen_a, "generator i,m");
    s->add_option("--b", o.gen_b, "generator j,n");
  }
  wc->add_flag("--deviations", o.deviations, "list pairs where closed form and residue differ");
  wc->add_option("--range", o.range, "bound on |i|, |m|");
  wv->add_option("--word", o.word, "generators i,m separated by ';'");
  wv->add_option("--theta", o.theta, "prepend theta(g)");
  wv->add_option("--polarization", o.polarization, "mode or log_degree");
  wj->add_option("--range", o.range, "bound on |i|, |m|");
  for (auto* s : {wb, wc, wv, wj}) {
    s->add_option("--cocycle", o.cocycle, "none, closed or residue");
    common(s);
  }

  auto* rep = app.add_subcommand("report", "run every reproduction fixture");
  rep->add_option("--square-level", o.square_level, "top level for the square-law fixtures");
  common(rep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 1;
  }

  int code = 0;
  std::string output;
  try {
    if (*shap) output = cmd_shapovalov(o);
    else if (*det) output = cmd_det(o);
    else if (*sing) output = cmd_singular(o);
    else if (*rad) output = cmd_radical(o);
    else if (*hom) output = cmd_hom_check(o);
    else if (*fus) output = cmd_fusion(o);
    else if (*eul) output = cmd_euler_solve(o);
    else if (*ope) output = cmd_ope(o);
    else if (*fix) output = cmd_fixture(o);
    else if (*db) output = cmd_determine_b(o);
    else if (*wb) output = cmd_wlog_bracket(o);
    else if (*wc) output = cmd_wlog_cocycle(o);
    else if (*wv) output = cmd_wlog_vev(o);
    else if (*wj) output = cmd_wlog_jacobi(o);
    else if (*rep) output = cmd_report(o, code);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (o.out.empty()) {
    std::cout << output;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return 1;
    }
    f << output;
  }
  return code;
}
