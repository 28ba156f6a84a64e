#include "jackbetti_cli/commands.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "jackbetti/clustering.hpp"
#include "jackbetti/errors.hpp"

#ifndef JACKBETTI_VERSION
#define JACKBETTI_VERSION "0.0.0"
#endif

namespace jb::cli {

using combinat::Composition;
using combinat::Partition;
using exactnum::Rational;

const char* version() { return JACKBETTI_VERSION; }

json CommandResult::to_json() const {
  json checks_json = json::array();
  for (const auto& c : checks) checks_json.push_back(cli::to_json(c));
  return {{"command", command}, {"params", params}, {"result", result}, {"checks", checks_json}, {"version", version()}};
}

std::string CommandResult::output() const { return json_output ? to_json().dump(2) + "\n" : text; }

namespace {

std::string check_lines(const std::vector<Check>& checks) {
  if (checks.empty()) return {};
  std::ostringstream out;
  bool all = true;
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << ": required " << c.required << ", observed " << c.observed
        << "\n";
    all = all && c.pass;
  }
  out << (all ? "PASS" : "FAIL") << " overall\n";
  return out.str();
}

void add_check(CommandResult& r, std::string name, std::string required, std::string observed, bool ok) {
  r.checks.push_back({std::move(name), std::move(required), std::move(observed), ok});
}

Partition parse_partition(const std::string& text) { return Partition(combinat::parse_list(text)); }

// Shorter lists are padded with zeros to n entries.
Composition parse_composition(const std::string& text, int n) {
  Composition mu = combinat::parse_list(text);
  if (static_cast<int>(mu.size()) > n) throw SizeMismatch("composition has more than n entries");
  mu.resize(n, 0);
  return mu;
}

Partition parse_partition_in(const std::string& text, int n) {
  Partition p = parse_partition(text);
  if (p.length() > n) throw SizeMismatch("partition has more than n parts");
  return p;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw InvalidInput("range must look like A..B");
  try {
    std::size_t used = 0;
    int a = std::stoi(text.substr(0, dots), &used);
    if (used != dots) throw InvalidInput("bad range start");
    std::string rest = text.substr(dots + 2);
    int b = std::stoi(rest, &used);
    if (used != rest.size()) throw InvalidInput("bad range end");
    if (a < 0 || b < a) throw InvalidInput("range must satisfy 0 <= A <= B");
    return {a, b};
  } catch (const std::logic_error&) {
    throw InvalidInput("range must look like A..B");
  }
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

// Options that were supplied, in declaration order.
json echo_params(const CLI::App* app) {
  json p = json::object();
  for (const CLI::Option* opt : app->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help" || opt->get_name() == "--json") continue;
    std::string name = opt->get_name();
    name.erase(0, name.find_first_not_of('-'));
    p[name] = opt->get_expected_min() == 0 ? std::string("true") : join(opt->results(), ",");
  }
  return p;
}

struct Params {
  std::optional<int> n, m, k, r, s, d, d_prime, ell, degree_bound, window, i, beads;
  std::optional<std::string> lambda, mu, c, range, regime;
  std::uint64_t characteristic = 0;
  bool generic = false;
};

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw InvalidInput(std::string(flag) + " is required here");
  return *v;
}

const std::string& need(const std::optional<std::string>& v, const char* flag) {
  if (!v) throw InvalidInput(std::string(flag) + " is required here");
  return *v;
}

Rational parameter_c(const Params& p) {
  if (p.generic == p.c.has_value()) throw InvalidInput("give exactly one of --c and --generic");
  return p.generic ? Rational(0) : exactnum::parse_rational(*p.c);
}

json strings(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(exactnum::to_string(x));
  return a;
}

json strings(const std::vector<exactnum::RatFunc>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

// ------------------------------------------------------------------ jack

template <class K>
void jack_checks(CommandResult& out, const poly::SparsePoly<K>& f, const Composition& lead, bool symmetric) {
  const K lc = f.coeff(lead);
  add_check(out, "coefficient of x^(" + combinat::format_list(lead) + ")", "1", exactnum::to_string(lc), lc == K(1));
  if (symmetric) {
    bool sym = true;
    for (int i = 1; i < f.nvars(); ++i) sym = sym && f.swapped(i, i + 1) == f;
    add_check(out, "fixed by adjacent transpositions", "true", bool_text(sym), sym);
  }
}

void cmd_jack_nonsym(const Params& p, CommandResult& out) {
  const int n = need(p.n, "--n");
  const Composition mu = parse_composition(need(p.mu, "--mu"), n);
  const Rational c0 = parameter_c(p);
  std::ostringstream text;
  if (p.generic) {
    auto r = jack::nonsym_jack_generic(mu);
    out.result = {{"index", mu}, {"c", "generic"}, {"well_defined", true}, {"poly", to_json(r.poly)},
                  {"text", r.poly.to_string()}, {"eigenvalues", strings(r.eigenvalues)}};
    const bool eig = jack::eigencheck(r);
    add_check(out, "eigencheck", "z_i f = eigenvalue_i f", eig ? "verified" : "mismatch", eig);
    jack_checks(out, r.poly, mu, false);
    text << "f_(" << combinat::format_list(mu) << ") generic c\n" << r.poly.to_string() << "\n";
    text << "eigenvalues: " << join(out.result["eigenvalues"].get<std::vector<std::string>>(), ", ") << "\n";
  } else {
    auto r = jack::nonsym_jack(mu, c0);
    out.result = {{"index", mu}, {"c", exactnum::to_string(c0)}, {"well_defined", true}, {"poly", to_json(r.poly)},
                  {"text", r.poly.to_string()}, {"eigenvalues", strings(r.eigenvalues)}};
    const bool eig = jack::eigencheck(r);
    add_check(out, "eigencheck", "z_i f = eigenvalue_i f", eig ? "verified" : "mismatch", eig);
    jack_checks(out, r.poly, mu, false);
    text << "f_(" << combinat::format_list(mu) << ") at c = " << exactnum::to_string(c0) << "\n"
         << r.poly.to_string() << "\n";
    text << "eigenvalues: " << join(out.result["eigenvalues"].get<std::vector<std::string>>(), ", ") << "\n";
  }
  out.text = text.str();
}

void cmd_jack_sym(const Params& p, CommandResult& out) {
  const int n = need(p.n, "--n");
  const Partition lambda = parse_partition_in(need(p.lambda, "--lambda"), n);
  const Rational c0 = parameter_c(p);
  std::ostringstream text;
  if (p.generic) {
    auto f = jack::sym_jack_generic(lambda, n);
    out.result = {{"lambda", lambda.padded(n)}, {"c", "generic"}, {"well_defined", true}, {"poly", to_json(f)},
                  {"text", f.to_string()}};
    jack_checks(out, f, lambda.padded(n), true);
    text << "p_(" << combinat::format_list(lambda.padded(n)) << ") generic c\n" << f.to_string() << "\n";
  } else {
    auto f = jack::sym_jack(lambda, n, c0);
    out.result = {{"lambda", lambda.padded(n)}, {"c", exactnum::to_string(c0)}, {"well_defined", true},
                  {"poly", to_json(f)}, {"text", f.to_string()}};
    jack_checks(out, f, lambda.padded(n), true);
    text << "p_(" << combinat::format_list(lambda.padded(n)) << ") at c = " << exactnum::to_string(c0)
         << ": well-defined\n"
         << f.to_string() << "\n";
  }
  out.text = text.str();
}

// ------------------------------------------------------------------ admissibility

jack::AdmissibilityReport admissibility(const Params& p) {
  const std::string& regime = need(p.regime, "--regime");
  const std::string& lam = need(p.lambda, "--lambda");
  if (regime == "t11") {
    const int n = need(p.n, "--n");
    return jack::admissible_t11(parse_partition_in(lam, n), n, need(p.k, "--k"), need(p.r, "--r"), need(p.s, "--s"));
  }
  if (regime == "t34") {
    const int n = need(p.n, "--n");
    return jack::admissible_t34(parse_composition(lam, n), need(p.ell, "--ell"), need(p.m, "--m"), need(p.s, "--s"),
                                n);
  }
  if (regime == "t36") {
    const int n = need(p.n, "--n");
    return jack::admissible_t36(parse_partition_in(lam, n), need(p.ell, "--ell"), need(p.m, "--m"),
                                need(p.s, "--s"), n);
  }
  throw InvalidInput("unknown regime " + regime);
}

void cmd_admissible(const Params& p, CommandResult& out) {
  auto rep = admissibility(p);
  out.result = to_json(rep);
  std::ostringstream text;
  for (const auto& c : rep.conditions) add_check(out, c.name, "holds", c.pass ? "holds" : c.detail, c.pass);
  text << "admissible: " << bool_text(rep.admissible) << "\n";
  out.text = text.str();
}

void cmd_minimal(const Params& p, CommandResult& out) {
  const std::string& regime = need(p.regime, "--regime");
  jack::MinimalAdmissible ma;
  jack::AdmissibilityReport adm;
  int n = 0;
  if (regime == "t11") {
    n = need(p.n, "--n");
    const int k = need(p.k, "--k"), r = need(p.r, "--r"), s = need(p.s, "--s");
    ma = jack::minimal_admissible_t11(n, k, r, s);
    adm = jack::admissible_t11(ma.greedy, n, k, r, s);
  } else if (regime == "t36") {
    n = need(p.n, "--n");
    const int ell = need(p.ell, "--ell"), m = need(p.m, "--m"), s = need(p.s, "--s");
    ma = jack::minimal_admissible_t36(ell, m, s, n);
    adm = jack::admissible_t36(ma.greedy, ell, m, s, n);
  } else {
    throw InvalidInput("minimal-lambda supports regimes t11 and t36");
  }
  out.result = {{"regime", regime},
                {"minimal", ma.greedy.padded(n)},
                {"closed_formula", ma.closed_formula.padded(n)},
                {"closed_formula_agrees", ma.agree}};
  add_check(out, "minimal partition is admissible", "true", bool_text(adm.admissible), adm.admissible);
  std::ostringstream text;
  text << "minimal: (" << combinat::format_list(ma.greedy.padded(n)) << ")\n"
       << "closed formula: (" << combinat::format_list(ma.closed_formula.padded(n)) << ")"
       << (ma.agree ? "" : " [disagrees with the inequalities]") << "\n";
  out.text = text.str();
}

// ------------------------------------------------------------------ verify

void report_result(const VerificationReport& rep, CommandResult& out) {
  out.result = to_json(rep);
  out.checks = rep.checks;
  out.text = rep.to_text();
}

void cmd_verify(const std::string& which, const Params& p, CommandResult& out) {
  if (which == "t11") {
    const int n = need(p.n, "--n");
    report_result(clustering::verify_T11(n, need(p.k, "--k"), need(p.r, "--r"), need(p.s, "--s"), p.d.value_or(1),
                                         parse_partition_in(need(p.lambda, "--lambda"), n)),
                  out);
  } else if (which == "t34") {
    const int n = need(p.n, "--n");
    const std::string& mu = p.mu ? *p.mu : need(p.lambda, "--mu");
    report_result(clustering::verify_T34(parse_composition(mu, n), need(p.ell, "--ell"), need(p.m, "--m"),
                                         need(p.s, "--s"), n),
                  out);
  } else if (which == "t36") {
    const int n = need(p.n, "--n");
    report_result(clustering::verify_T36(need(p.ell, "--ell"), need(p.m, "--m"), need(p.s, "--s"), n,
                                         parse_partition_in(need(p.lambda, "--lambda"), n)),
                  out);
  } else if (which == "t38") {
    report_result(clustering::verify_T38(need(p.ell, "--ell"), need(p.m, "--m"), need(p.d, "--d"),
                                         need(p.d_prime, "--dprime"), need(p.n, "--n"), p.degree_bound),
                  out);
  } else {
    const int n = need(p.n, "--n");
    report_result(clustering::verify_C12(n, need(p.s, "--s"), need(p.m, "--m"), p.degree_bound.value_or(n)), out);
  }
}

// ------------------------------------------------------------------ abacus

void cmd_abacus(const Params& p, CommandResult& out) {
  const Partition lambda = parse_partition(need(p.lambda, "--lambda"));
  const int m = need(p.m, "--m");
  if (m < 1) throw ParameterOutOfRange("need m >= 1");
  auto d = p.beads ? abacus::abacus_of(lambda, m, *p.beads) : abacus::abacus_of(lambda, m);
  const Partition core = abacus::m_core(lambda, m);
  const int hd = abacus::homological_degree(d);
  out.result = {{"lambda", to_json(lambda)}, {"runners", m},          {"positions", d.positions()},
                {"hd", hd},                  {"core", to_json(core)}, {"diagram", d.render()}};
  std::ostringstream text;
  text << d.render() << "hd = " << hd << "\ncore = " << core.to_string() << "\n";
  out.text = text.str();
}

void cmd_pm(const Params& p, CommandResult& out) {
  const Partition lambda = parse_partition(need(p.lambda, "--lambda"));
  const int m = need(p.m, "--m"), n = need(p.n, "--n");
  if (lambda.size() != n) throw SizeMismatch("lambda must be a partition of n");
  const Rational c = p.c ? exactnum::parse_rational(*p.c) : exactnum::frac(1, m);
  auto rows = abacus::pm_table(lambda, m);
  json entries = json::array();
  std::ostringstream text;
  text << "P_" << m << lambda.to_string() << " at c = " << exactnum::to_string(c) << "\n";
  for (auto& e : rows) {
    e.c = abacus::c_stat(e.mu, n, c);
    entries.push_back(to_json(e));
    text << "hd " << e.hd << "  c " << exactnum::to_string(e.c) << "  " << e.mu.to_string() << "\n";
  }
  out.result = {{"lambda", to_json(lambda)}, {"m", m}, {"c", exactnum::to_string(c)}, {"entries", entries}};
  out.text = text.str();
}

// ------------------------------------------------------------------ betti

void cmd_betti(const std::string& which, const Params& p, CommandResult& out) {
  const int n = need(p.n, "--n"), m = need(p.m, "--m");
  betti::BettiTable t;
  if (which == "conjecture") {
    t = betti::quotient_table(betti::conjectural_resolution(n, m));
  } else if (which == "pure") {
    t = betti::pure_resolution_spec(n, m);
  } else {
    if (p.characteristic != 0 && !exactnum::is_prime_u64(p.characteristic))
      throw InvalidInput("--char must be 0 or a prime");
    t = betti::koszul_betti(n, m, p.characteristic, p.window.value_or(-1));
  }
  json totals = json::array();
  for (int i = 0; i <= t.length(); ++i) totals.push_back(t.total(i).get_str());
  const bool pure = betti::is_pure(t);
  out.result = {{"table", to_json(t)}, {"totals", totals}, {"pure", pure}, {"regularity", betti::regularity(t)}};
  if (pure) out.result["degrees"] = betti::pure_degrees(t);
  out.result["grid"] = betti::render(t);
  if (t.has_labels())
    add_check(out, "labels consistent", "true", bool_text(t.labels_consistent()), t.labels_consistent());
  out.text = betti::render(t);
}

// ------------------------------------------------------------------ hilbert

void cmd_hilbert(const Params& p, CommandResult& out) {
  const int n = need(p.n, "--n"), m = need(p.m, "--m"), s = p.s.value_or(1);
  auto [a, b] = p.range ? parse_range(*p.range) : std::pair<int, int>{0, n};
  auto h = p.ell ? ideals::hilbert_function_ell(s, *p.ell, m, n, a, b) : ideals::hilbert_function(s, m, n, a, b);
  out.result = to_json(h);
  std::ostringstream text;
  text << "d  dim(A/I)_d  dim I_d\n";
  for (int d = a; d <= b; ++d)
    text << d << "  " << h.quotient[d - a].get_str() << "  " << h.ideal[d - a].get_str() << "\n";
  std::vector<std::string> num;
  for (const auto& x : h.numerator) num.push_back(x.get_str());
  text << "numerator of H(t)(1-t)^" << h.krull_dim << ": " << join(num, " ") << "\n";
  text << "numerator at 1: " << h.numerator_at_one.get_str() << "\n";
  out.text = text.str();
}

// ------------------------------------------------------------------ symfunc

void cmd_lemma54(const Params& p, CommandResult& out) {
  const int n = need(p.n, "--n");
  if (n < 1) throw ParameterOutOfRange("need n >= 1");
  std::vector<Partition> lambdas;
  if (p.lambda) {
    Partition l = parse_partition(*p.lambda);
    if (l.size() != n) throw SizeMismatch("lambda must be a partition of n");
    lambdas.push_back(l);
  } else {
    lambdas = combinat::partitions_of(n);
  }
  std::vector<int> is = p.i ? std::vector<int>{*p.i} : std::vector<int>{1, 2, 3};
  json cases = json::array();
  for (const auto& l : lambdas) {
    for (int i : is) {
      if (i > n) continue;
      auto sides = symfunc::lemma54_sides(l, i);
      const bool eq = sides.lhs == sides.rhs;
      cases.push_back({{"lambda", to_json(l)}, {"i", i}, {"lhs", to_json(sides.lhs)}, {"rhs", to_json(sides.rhs)}});
      add_check(out, "i=" + std::to_string(i) + " lambda=" + l.to_string(), sides.rhs.to_string(),
                sides.lhs.to_string(), eq);
    }
  }
  out.result = {{"n", n}, {"cases", cases}};
  std::size_t passed = std::count_if(out.checks.begin(), out.checks.end(), [](const Check& c) { return c.pass; });
  out.text = std::to_string(passed) + "/" + std::to_string(out.checks.size()) + " identities hold\n";
}

bool has_flag(const std::vector<std::string>& args, const std::string& flag) {
  return std::find(args.begin(), args.end(), flag) != args.end();
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CommandResult out;
  out.json_output = has_flag(args, "--json");
  Params p;
  bool as_json = false;

  CLI::App app{"Exact Jack polynomials, clustering checks and Betti tables", "jackbetti"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", as_json, "Emit the JSON payload instead of text");
  app.set_version_flag("--version", version());

  std::vector<std::pair<CLI::App*, std::function<void()>>> actions;
  auto leaf = [&](CLI::App* sub, std::function<void()> fn) { actions.emplace_back(sub, std::move(fn)); };

  auto add_int = [&](CLI::App* sub, const std::string& name, std::optional<int>& target, const std::string& help) {
    return sub->add_option(name, target, help);
  };
  auto add_str = [&](CLI::App* sub, const std::string& name, std::optional<std::string>& target,
                     const std::string& help) { return sub->add_option(name, target, help); };

  // jack
  auto* jack_cmd = app.add_subcommand("jack", "Non-symmetric and symmetric Jack polynomials");
  jack_cmd->require_subcommand(1);
  auto* nonsym = jack_cmd->add_subcommand("nonsym", "f_mu by the Knop-Sahi recursion");
  add_int(nonsym, "--n", p.n, "Number of variables")->required();
  add_str(nonsym, "--mu", p.mu, "Composition, e.g. 3,2,1,0")->required();
  auto* c1 = add_str(nonsym, "--c", p.c, "Parameter P/Q");
  nonsym->add_flag("--generic", p.generic, "Coefficients as rational functions of c")->excludes(c1);
  leaf(nonsym, [&] { cmd_jack_nonsym(p, out); });
  auto* sym = jack_cmd->add_subcommand("sym", "p_lambda by symmetrization");
  add_int(sym, "--n", p.n, "Number of variables")->required();
  add_str(sym, "--lambda", p.lambda, "Partition, e.g. 7,0,0,0 or 4^2,3")->required();
  auto* c2 = add_str(sym, "--c", p.c, "Parameter P/Q");
  sym->add_flag("--generic", p.generic, "Coefficients as rational functions of c")->excludes(c2);
  leaf(sym, [&] { cmd_jack_sym(p, out); });

  // admissible, minimal-lambda
  auto regime_opts = [&](CLI::App* sub) {
    add_int(sub, "--n", p.n, "Number of variables");
    add_int(sub, "--k", p.k, "k (t11)");
    add_int(sub, "--r", p.r, "r (t11)");
    add_int(sub, "--s", p.s, "Number of clusters");
    add_int(sub, "--ell,--l", p.ell, "l in c = l/m");
    add_int(sub, "--m", p.m, "Cluster size");
  };
  auto* adm = app.add_subcommand("admissible", "Check the admissibility inequalities of a regime");
  add_str(adm, "--regime", p.regime, "t11, t34 or t36")->required()->check(CLI::IsMember({"t11", "t34", "t36"}));
  add_str(adm, "--lambda,--mu", p.lambda, "Partition (t11, t36) or composition (t34)")->required();
  regime_opts(adm);
  leaf(adm, [&] { cmd_admissible(p, out); });
  auto* minl = app.add_subcommand("minimal-lambda", "Minimal admissible partition");
  add_str(minl, "--regime", p.regime, "t11 or t36")->required()->check(CLI::IsMember({"t11", "t36"}));
  regime_opts(minl);
  leaf(minl, [&] { cmd_minimal(p, out); });

  // verify
  auto* verify = app.add_subcommand("verify", "Exact verification of the clustering theorems");
  verify->require_subcommand(1);
  for (const char* which : {"t11", "t34", "t36", "t38", "c12"}) {
    auto* v = verify->add_subcommand(which, std::string("Verify ") + which);
    add_int(v, "--n", p.n, "Number of variables")->required();
    add_int(v, "--s", p.s, "Number of clusters");
    add_int(v, "--m", p.m, "Cluster size");
    add_int(v, "--ell,--l", p.ell, "l in c = l/m");
    add_int(v, "--k", p.k, "k in c = (r-1)/(k+1)");
    add_int(v, "--r", p.r, "r in c = (r-1)/(k+1)");
    add_int(v, "--d", p.d, "Cluster multiplier d");
    add_int(v, "--dprime,--d-prime", p.d_prime, "d' (t38)");
    add_str(v, "--lambda", p.lambda, "Partition");
    add_str(v, "--mu", p.mu, "Composition (t34)");
    add_int(v, "--degree-bound", p.degree_bound, "Largest degree examined (t38, c12)");
    const std::string w = which;
    leaf(v, [&, w] { cmd_verify(w, p, out); });
  }

  // abacus, pm
  auto* ab = app.add_subcommand("abacus", "m-abacus of a partition");
  add_str(ab, "--lambda", p.lambda, "Partition")->required();
  add_int(ab, "--m", p.m, "Number of runners")->required();
  add_int(ab, "--beads", p.beads, "Bead count (default: the length of lambda)");
  leaf(ab, [&] { cmd_abacus(p, out); });
  auto* pm = app.add_subcommand("pm", "P_m(lambda) with homological degrees and c-statistics");
  add_str(pm, "--lambda", p.lambda, "Partition of n")->required();
  add_int(pm, "--m", p.m, "Number of runners")->required();
  add_int(pm, "--n", p.n, "Size of lambda")->required();
  add_str(pm, "--c", p.c, "Parameter P/Q (default 1/m)");
  leaf(pm, [&] { cmd_pm(p, out); });

  // betti
  auto* betti_cmd = app.add_subcommand("betti", "Betti tables of the m-equals arrangement");
  betti_cmd->require_subcommand(1);
  for (const char* which : {"conjecture", "oracle", "pure"}) {
    auto* b = betti_cmd->add_subcommand(which, std::string("Betti table: ") + which);
    add_int(b, "--n", p.n, "Number of variables")->required();
    add_int(b, "--m", p.m, "Cluster size")->required();
    if (std::string(which) == "oracle") {
      b->add_option("--char", p.characteristic, "0 or a prime");
      add_int(b, "--window", p.window, "Largest internal degree (default n + k)");
    }
    const std::string w = which;
    leaf(b, [&, w] { cmd_betti(w, p, out); });
  }

  // hilbert
  auto* hil = app.add_subcommand("hilbert", "Hilbert function of A/I(X_{s,m}) or A/I_{s,l,m}");
  add_int(hil, "--n", p.n, "Number of variables")->required();
  add_int(hil, "--m", p.m, "Cluster size")->required();
  add_int(hil, "--s", p.s, "Number of clusters (default 1)");
  add_int(hil, "--ell,--l", p.ell, "Use I_{s,l,m}");
  add_str(hil, "--range", p.range, "Degrees A..B (default 0..n)");
  leaf(hil, [&] { cmd_hilbert(p, out); });

  // symfunc
  auto* sf = app.add_subcommand("symfunc", "Symmetric-function identities");
  sf->require_subcommand(1);
  auto* l54 = sf->add_subcommand("lemma54", "ch(Y^i) * s_lambda identities");
  add_int(l54, "--n", p.n, "Size of lambda")->required();
  add_int(l54, "--i", p.i, "Degree 1, 2 or 3")->check(CLI::Range(1, 3));
  add_str(l54, "--lambda", p.lambda, "Single partition of n");
  leaf(l54, [&] { cmd_lemma54(p, out); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    out.json_output = as_json;
    for (auto& [sub, fn] : actions) {
      if (!sub->parsed()) continue;
      std::string name = sub->get_name();
      for (auto* par = sub->get_parent(); par && par->get_parent(); par = par->get_parent())
        name = par->get_name() + " " + name;
      out.command = name;
      for (auto* a = sub; a && a->get_parent(); a = a->get_parent()) {
        json e = echo_params(a);
        for (auto it = e.begin(); it != e.end(); ++it) out.params[it.key()] = it.value();
      }
      fn();
      if (sub->get_parent()->get_name() != "verify") out.text += check_lines(out.checks);
      break;
    }
    out.exit_code = std::all_of(out.checks.begin(), out.checks.end(), [](const Check& c) { return c.pass; })
                        ? kExitPass
                        : kExitFail;
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, err;
    const int code = app.exit(e, o, err);
    out.exit_code = code == 0 ? kExitPass : kExitInvalid;
    out.json_output = out.json_output && code != 0;
    out.result = {{"error", e.what()}};
    out.text = o.str() + err.str();
  } catch (const NotWellDefined& e) {
    out.exit_code = kExitNotWellDefined;
    out.result = {{"well_defined", false}, {"reason", e.what()}};
    out.text = std::string("not well-defined: ") + e.what() + "\n";
  } catch (const PoleError& e) {
    out.exit_code = kExitNotWellDefined;
    out.result = {{"well_defined", false}, {"reason", e.what()}};
    out.text = std::string("not well-defined: ") + e.what() + "\n";
  } catch (const InvalidInput& e) {
    out.exit_code = kExitInvalid;
    out.result = {{"error", e.what()}};
    out.text = std::string("invalid input: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    out.exit_code = kExitFail;
    out.result = {{"error", e.what()}};
    out.text = std::string("error: ") + e.what() + "\n";
  }
  return out;
}

}  // namespace jb::cli
