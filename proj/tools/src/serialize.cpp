#include "jackbetti_cli/serialize.hpp"

#include "jackbetti/errors.hpp"

namespace jb::cli {

namespace {

template <class K, class Enc>
json poly_to_json(const poly::SparsePoly<K>& f, Enc enc) {
  json terms = json::array();
  for (const auto& [m, k] : f.terms()) terms.push_back(json::array({enc(k), m.to_composition(f.nvars())}));
  return {{"nvars", f.nvars()}, {"terms", terms}};
}

template <class K, class Dec>
poly::SparsePoly<K> poly_from_json(const json& j, Dec dec) {
  const int n = j.at("nvars").get<int>();
  poly::SparsePoly<K> f(n);
  for (const auto& t : j.at("terms")) {
    auto exps = t.at(1).get<std::vector<int>>();
    if (static_cast<int>(exps.size()) != n) throw SizeMismatch("exponent vector length differs from nvars");
    f.add_term(poly::Monomial(exps), dec(t.at(0)));
  }
  return f;
}

json upoly_to_json(const exactnum::UPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(exactnum::to_string(c));
  return a;
}

exactnum::UPoly upoly_from_json(const json& j) {
  std::vector<exactnum::Rational> c;
  for (const auto& v : j) c.push_back(rational_from_json(v));
  return exactnum::UPoly(std::move(c));
}

const char* regime_name(jack::Regime r) {
  switch (r) {
    case jack::Regime::T11: return "t11";
    case jack::Regime::T34: return "t34";
    case jack::Regime::T36: return "t36";
  }
  return "";
}

jack::Regime regime_from(const std::string& s) {
  if (s == "t11") return jack::Regime::T11;
  if (s == "t34") return jack::Regime::T34;
  if (s == "t36") return jack::Regime::T36;
  throw InvalidInput("unknown regime " + s);
}

}  // namespace

json to_json(const exactnum::Rational& q) { return exactnum::to_string(q); }

exactnum::Rational rational_from_json(const json& j) { return exactnum::parse_rational(j.get<std::string>()); }

// Coefficient lists of numerator and monic denominator, constant term first.
json to_json(const exactnum::RatFunc& f) { return {{"num", upoly_to_json(f.num())}, {"den", upoly_to_json(f.den())}}; }

exactnum::RatFunc ratfunc_from_json(const json& j) {
  return exactnum::RatFunc::normalize(upoly_from_json(j.at("num")), upoly_from_json(j.at("den")));
}

json to_json(const combinat::Partition& p) { return p.parts(); }

combinat::Partition partition_from_json(const json& j) { return combinat::Partition(j.get<std::vector<int>>()); }

json to_json(const poly::QPoly& f) {
  return poly_to_json(f, [](const exactnum::Rational& q) { return to_json(q); });
}

poly::QPoly qpoly_from_json(const json& j) { return poly_from_json<exactnum::Rational>(j, rational_from_json); }

json to_json(const poly::CPoly& f) {
  return poly_to_json(f, [](const exactnum::RatFunc& q) { return to_json(q); });
}

poly::CPoly cpoly_from_json(const json& j) { return poly_from_json<exactnum::RatFunc>(j, ratfunc_from_json); }

json to_json(const ideals::GradedPiece& g) {
  json basis = json::array();
  for (const auto& f : g.basis) basis.push_back(to_json(f));
  return {{"n", g.n}, {"degree", g.degree}, {"characteristic", g.characteristic}, {"basis", basis}};
}

ideals::GradedPiece graded_piece_from_json(const json& j) {
  ideals::GradedPiece g;
  g.n = j.at("n").get<int>();
  g.degree = j.at("degree").get<int>();
  g.characteristic = j.at("characteristic").get<std::uint64_t>();
  for (const auto& f : j.at("basis")) g.basis.push_back(qpoly_from_json(f));
  return g;
}

json to_json(const betti::BettiTable& t) {
  json entries = json::array(), labels = json::array();
  for (const auto& [cell, v] : t.entries) entries.push_back(json::array({cell.first, cell.second, v.get_str()}));
  for (const auto& [cell, ls] : t.labels) {
    json l = json::array();
    for (const auto& p : ls) l.push_back(to_json(p));
    labels.push_back(json::array({cell.first, cell.second, l}));
  }
  return {{"n", t.n}, {"field", t.field}, {"ideal", t.ideal}, {"entries", entries}, {"labels", labels}};
}

betti::BettiTable betti_from_json(const json& j) {
  betti::BettiTable t;
  t.n = j.at("n").get<int>();
  t.field = j.at("field").get<std::string>();
  t.ideal = j.at("ideal").get<bool>();
  for (const auto& e : j.at("entries"))
    t.entries[{e.at(0).get<int>(), e.at(1).get<int>()}] = exactnum::Integer(e.at(2).get<std::string>());
  for (const auto& e : j.at("labels")) {
    auto& ls = t.labels[{e.at(0).get<int>(), e.at(1).get<int>()}];
    for (const auto& p : e.at(2)) ls.push_back(partition_from_json(p));
  }
  return t;
}

namespace {

json integers(const std::vector<exactnum::Integer>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

std::vector<exactnum::Integer> integers_from(const json& j) {
  std::vector<exactnum::Integer> v;
  for (const auto& x : j) v.emplace_back(x.get<std::string>());
  return v;
}

}  // namespace

json to_json(const ideals::HilbertData& h) {
  return {{"s", h.s},
          {"ell", h.ell},
          {"m", h.m},
          {"n", h.n},
          {"krull_dim", h.krull_dim},
          {"d_min", h.d_min},
          {"d_max", h.d_max},
          {"quotient", integers(h.quotient)},
          {"ideal", integers(h.ideal)},
          {"numerator", integers(h.numerator)},
          {"numerator_at_one", h.numerator_at_one.get_str()}};
}

ideals::HilbertData hilbert_from_json(const json& j) {
  ideals::HilbertData h;
  h.s = j.at("s").get<int>();
  h.ell = j.at("ell").get<int>();
  h.m = j.at("m").get<int>();
  h.n = j.at("n").get<int>();
  h.krull_dim = j.at("krull_dim").get<int>();
  h.d_min = j.at("d_min").get<int>();
  h.d_max = j.at("d_max").get<int>();
  h.quotient = integers_from(j.at("quotient"));
  h.ideal = integers_from(j.at("ideal"));
  h.numerator = integers_from(j.at("numerator"));
  h.numerator_at_one = exactnum::Integer(j.at("numerator_at_one").get<std::string>());
  return h;
}

json to_json(const symfunc::SymFunc& f) {
  json terms = json::array();
  for (const auto& [lam, c] : f.coeffs) terms.push_back(json::array({to_json(lam), to_json(c)}));
  return {{"n", f.n}, {"schur", terms}};
}

symfunc::SymFunc symfunc_from_json(const json& j) {
  symfunc::SymFunc f{j.at("n").get<int>(), {}};
  for (const auto& t : j.at("schur")) {
    auto lam = partition_from_json(t.at(0));
    if (lam.size() != f.n) throw SizeMismatch("Schur index of the wrong size");
    f.coeffs[lam] = rational_from_json(t.at(1));
  }
  return f;
}

json to_json(const abacus::PmEntry& e) {
  return {{"mu", to_json(e.mu)},
          {"runners", e.diagram.runners()},
          {"positions", e.diagram.positions()},
          {"hd", e.hd},
          {"c", to_json(e.c)}};
}

abacus::PmEntry pm_entry_from_json(const json& j) {
  return {partition_from_json(j.at("mu")),
          abacus::AbacusDiagram(j.at("runners").get<int>(), j.at("positions").get<std::vector<int>>()),
          j.at("hd").get<int>(), rational_from_json(j.at("c"))};
}

json to_json(const jack::AdmissibilityReport& r) {
  json conds = json::array();
  for (const auto& c : r.conditions) conds.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"regime", regime_name(r.regime)}, {"admissible", r.admissible}, {"conditions", conds}};
}

jack::AdmissibilityReport admissibility_from_json(const json& j) {
  jack::AdmissibilityReport r;
  r.regime = regime_from(j.at("regime").get<std::string>());
  r.admissible = j.at("admissible").get<bool>();
  for (const auto& c : j.at("conditions"))
    r.conditions.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(), c.at("detail").get<std::string>()});
  return r;
}

json to_json(const Check& c) {
  return {{"name", c.name}, {"required", c.required}, {"observed", c.observed}, {"pass", c.pass}};
}

Check check_from_json(const json& j) {
  return {j.at("name").get<std::string>(), j.at("required").get<std::string>(), j.at("observed").get<std::string>(),
          j.at("pass").get<bool>()};
}

json to_json(const VerificationReport& r) { return json::parse(r.to_json()); }

VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  r.claim = j.at("claim").get<std::string>();
  for (const auto& [k, v] : j.at("params").items()) r.params.emplace_back(k, v.get<std::string>());
  for (const auto& c : j.at("checks")) r.checks.push_back(check_from_json(c));
  for (const auto& [k, v] : j.at("notes").items()) r.notes.emplace_back(k, v.get<std::string>());
  return r;
}

}  // namespace jb::cli
