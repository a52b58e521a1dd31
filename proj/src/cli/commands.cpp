#include "qhyper/cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qhyper/cli/config.hpp"
#include "qhyper/cli/serialize.hpp"
#include "qhyper/error.hpp"
#include "qhyper/families.hpp"
#include "qhyper/hyper.hpp"
#include "qhyper/products.hpp"
#include "qhyper/qpoch.hpp"
#include "qhyper/verify/catalog.hpp"

namespace qhyper::cli {

namespace {

// Named scalar options shared by eval and expand.
constexpr const char* kScalars[] = {"x", "y", "z", "q", "a", "b", "c", "d", "e"};

struct FamilyArgs {
  std::map<std::string, std::string> scalars;
  std::optional<long> n, r, s;
  std::optional<std::string> upper, lower;

  void attach(CLI::App& app) {
    for (const char* k : kScalars) {
      app.add_option_function<std::string>(std::string("--") + k,
                                           [this, k](const std::string& v) { scalars[k] = v; },
                                           std::string("value of ") + k + " (integer, p/q or decimal)");
    }
    app.add_option("--r", r, "number of upper parameters");
    app.add_option("--s", s, "number of lower parameters");
    app.add_option("--upper", upper, "comma-separated upper parameters");
    app.add_option("--lower", lower, "comma-separated lower parameters");
  }

  bool has(const std::string& k) const { return scalars.count(k) != 0; }

  Rational get(const std::string& k) const {
    const auto it = scalars.find(k);
    if (it == scalars.end()) throw ArgumentError("missing --" + k);
    try {
      return Rational::parse(it->second);
    } catch (const Error&) {
      throw ArgumentError("--" + k + ": not a rational number: '" + it->second + "'");
    }
  }

  Rational get_or(const std::string& k, const Rational& fallback) const { return has(k) ? get(k) : fallback; }

  long degree() const {
    if (!n) throw ArgumentError("missing --n");
    if (*n < 0) throw ArgumentError("--n must be non-negative");
    return *n;
  }

  static std::vector<Rational> parse_list(const std::optional<std::string>& text, const char* name) {
    std::vector<Rational> out;
    if (!text || text->empty()) return out;
    std::stringstream ss(*text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        out.push_back(Rational::parse(item));
      } catch (const Error&) {
        throw ArgumentError(std::string("--") + name + ": not a rational number: '" + item + "'");
      }
    }
    return out;
  }

  ParamVector params() const {
    ParamVector pv{parse_list(upper, "upper"), parse_list(lower, "lower")};
    if (r && *r != pv.r()) {
      throw ArgumentError("--r " + std::to_string(*r) + " does not match " + std::to_string(pv.r()) + " upper parameters");
    }
    if (s && *s != pv.s()) {
      throw ArgumentError("--s " + std::to_string(*s) + " does not match " + std::to_string(pv.s()) + " lower parameters");
    }
    return pv;
  }

  // Rejects options the chosen family does not take.
  void only(const std::vector<const char*>& allowed, bool takes_params) const {
    for (const auto& [k, v] : scalars) {
      bool ok = false;
      for (const char* a : allowed) ok = ok || k == a;
      if (!ok) throw ArgumentError("--" + k + " is not a parameter of this family");
    }
    if (!takes_params && (upper || lower || r || s)) {
      throw ArgumentError("this family takes no --upper/--lower/--r/--s");
    }
  }
};

Rational eval_family(const std::string& family, const FamilyArgs& f) {
  using Eval = std::function<Rational(const FamilyArgs&)>;
  struct Entry {
    std::vector<const char*> scalars;
    bool takes_params;
    Eval eval;
  };
  static const std::map<std::string, Entry> table = {
      {"P", {{"x", "y", "q"}, false, [](const FamilyArgs& a) {
         return cauchy_P(a.degree(), a.get("x"), a.get("y"), a.get("q"));
       }}},
      {"phi_asc", {{"a", "x", "q"}, false, [](const FamilyArgs& a) {
         return asc_phi(a.degree(), a.get("a"), a.get("x"), a.get("q"));
       }}},
      {"psi_asc", {{"a", "x", "q"}, false, [](const FamilyArgs& a) {
         return asc_psi(a.degree(), a.get("a"), a.get("x"), a.get("q"));
       }}},
      {"cao_phi3", {{"a", "b", "c", "x", "y", "q"}, false, [](const FamilyArgs& a) {
         return cao_phi3(a.degree(), a.get("a"), a.get("b"), a.get("c"), a.get("x"), a.get("y"), a.get("q"));
       }}},
      {"cao_psi3", {{"a", "b", "c", "x", "y", "q"}, false, [](const FamilyArgs& a) {
         return cao_psi3(a.degree(), a.get("a"), a.get("b"), a.get("c"), a.get("x"), a.get("y"), a.get("q"));
       }}},
      {"ext_phi5", {{"a", "b", "c", "d", "e", "x", "y", "q"}, false, [](const FamilyArgs& a) {
         return ext_phi5(a.degree(), a.get("a"), a.get("b"), a.get("c"), a.get("d"), a.get("e"), a.get("x"),
                         a.get("y"), a.get("q"));
       }}},
      {"ext_psi5", {{"a", "b", "c", "d", "e", "x", "y", "q"}, false, [](const FamilyArgs& a) {
         return ext_psi5(a.degree(), a.get("a"), a.get("b"), a.get("c"), a.get("d"), a.get("e"), a.get("x"),
                         a.get("y"), a.get("q"));
       }}},
      {"sa_phi", {{"x", "y", "q"}, true, [](const FamilyArgs& a) {
         return sa_phi(a.degree(), a.params(), a.get("x"), a.get("y"), a.get("q"));
       }}},
      {"sa_psi", {{"x", "y", "q"}, true, [](const FamilyArgs& a) {
         return sa_psi(a.degree(), a.params(), a.get("x"), a.get("y"), a.get("q"));
       }}},
      {"V", {{"x", "y", "z", "q"}, true, [](const FamilyArgs& a) {
         return v_poly(a.degree(), a.params(), a.get("x"), a.get("y"), a.get("z"), a.get("q"));
       }}},
      {"Psi", {{"x", "y", "z", "q"}, true, [](const FamilyArgs& a) {
         return psi_general(a.degree(), a.params(), a.get("x"), a.get("y"), a.get("z"), a.get("q"));
       }}},
  };
  const auto it = table.find(family);
  if (it == table.end()) {
    std::string names;
    for (const auto& [k, v] : table) names += (names.empty() ? "" : ", ") + k;
    throw ArgumentError("unknown family '" + family + "' (expected one of " + names + ")");
  }
  f.only(it->second.scalars, it->second.takes_params);
  return it->second.eval(f);
}

RSeries expand_target(const std::string& target, const FamilyArgs& f, int order) {
  // q only matters when some parameter is nonzero; 1/2 is the documented default.
  const Rational q = f.get_or("q", Rational(1, 2));
  if (target == "euler") {
    f.only({"c", "q"}, false);
    return euler_product_series(f.get("c"), q, order);
  }
  if (target == "euler-inv") {
    f.only({"c", "q"}, false);
    return euler_inverse_series(f.get("c"), q, order);
  }
  if (target == "cauchy-ratio") {
    f.only({"x", "y", "q"}, false);
    return cauchy_ratio_series(f.get("x"), f.get("y"), q, order);
  }
  if (target == "rphis-t") {
    f.only({"z", "q"}, true);
    return rphis_series_in_t(f.params(), q, f.get("z"), order);
  }
  if (target == "gf-psi-lhs") {
    f.only({"x", "y", "z", "q"}, true);
    const ParamVector pv = f.params();
    RSeries s(order);
    for (int n = 0; n <= order; ++n) {
      s[n] = psi_general(n, pv, f.get("x"), f.get("y"), f.get("z"), q) * bracket_power(n, 1, q) / qfactorial(q, n);
    }
    return s;
  }
  if (target == "gf-psi-rhs") {
    f.only({"x", "y", "z", "q"}, true);
    return euler_product_series(f.get("x"), q, order) * euler_inverse_series(f.get("y"), q, order) *
           rphis_series_in_t(f.params(), q, f.get("z"), order);
  }
  throw ArgumentError("unknown target '" + target +
                      "' (expected cauchy-ratio, euler, euler-inv, rphis-t, gf-psi-lhs or gf-psi-rhs)");
}

std::string suite_list() {
  std::string s;
  for (const auto& name : verify::suite_names()) s += "  " + name + "\n";
  return s;
}

int cmd_check(const RunOverrides& flags, std::ostream& out, std::ostream& err) {
  RunConfig cfg = resolve_config(flags, std::getenv("QHYPER_SEED"));
  validate(cfg);
  if (verify::resolve_suite(cfg.suite).empty()) {
    err << "error: unknown suite '" << cfg.suite << "'. Available suites:\n" << suite_list();
    return 2;
  }
  const auto reports = verify::run_suite(cfg.suite, to_verify_config(cfg));
  const std::string text = render(cfg, reports);
  if (cfg.report_path.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.report_path, std::ios::binary);
    if (!file) throw ArgumentError("cannot write report to '" + cfg.report_path + "'");
    file << text;
    std::size_t passed = 0;
    for (const auto& r : reports) passed += r.pass ? 1 : 0;
    out << passed << '/' << reports.size() << " passed; report written to " << cfg.report_path << '\n';
  }
  return verify::all_pass(reports) ? 0 : 1;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-hypergeometric polynomial evaluation and identity verification"};
  app.name("qhyper");
  app.require_subcommand(1);

  RunOverrides check_flags;
  auto* check = app.add_subcommand("check", "run an identity suite and write a report");
  check->add_option("--suite", check_flags.suite, "suite name, group or identity id (default all)");
  check->add_option("--trials", check_flags.trials, "trials per identity (default 10)");
  check->add_option("--order", check_flags.order, "truncation order N, at most 64 (default 12)");
  check->add_option("--epsilon-bits", check_flags.epsilon_bits, "numeric tolerance 2^-bits (default 80)");
  check->add_option("--seed", check_flags.seed, "master seed (default 42, or QHYPER_SEED)");
  check->add_option("--report", check_flags.report_path, "write the report to this file");
  check->add_option("--format", check_flags.format, "json, tsv or human (default json)");
  check->add_option("--config", check_flags.config_path, "JSON file with RunConfig fields");
  bool list_suites = false;
  check->add_flag("--list-suites", list_suites, "print the available suites and exit");

  FamilyArgs eval_args;
  std::string family;
  auto* eval = app.add_subcommand("eval", "evaluate a polynomial family exactly");
  eval->add_option("family", family, "P, phi_asc, psi_asc, cao_phi3, cao_psi3, ext_phi5, ext_psi5, sa_phi, sa_psi, V, Psi")
      ->required();
  eval->add_option("--n", eval_args.n, "degree");
  eval_args.attach(*eval);
  int digits = 20;
  eval->add_option("--digits", digits, "fractional digits of the decimal line (default 20)");

  FamilyArgs expand_args;
  std::string target;
  int expand_order = 12;
  auto* expand = app.add_subcommand("expand", "print t^0..t^N coefficients of a generating series");
  expand->add_option("target", target, "cauchy-ratio, euler, euler-inv, rphis-t, gf-psi-lhs, gf-psi-rhs")->required();
  expand->add_option("--order", expand_order, "last power of t (default 12, at most 64)");
  expand_args.attach(*expand);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (check->parsed()) {
      if (list_suites) {
        out << suite_list();
        return 0;
      }
      return cmd_check(check_flags, out, err);
    }
    if (eval->parsed()) {
      const Rational v = eval_family(family, eval_args);
      out << v.to_string() << '\n' << v.to_decimal(digits) << '\n';
      return 0;
    }
    if (expand->parsed()) {
      if (expand_order < 0 || expand_order > 64) throw ArgumentError("--order must be in 0..64");
      const RSeries s = expand_target(target, expand_args, expand_order);
      for (int k = 0; k <= s.order(); ++k) out << k << '\t' << s[k].to_string() << '\n';
      return 0;
    }
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace qhyper::cli
