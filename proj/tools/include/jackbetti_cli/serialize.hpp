#pragma once

#include "json.hpp"

#include "jackbetti/abacus.hpp"
#include "jackbetti/betti.hpp"
#include "jackbetti/ideals.hpp"
#include "jackbetti/jack.hpp"
#include "jackbetti/report.hpp"
#include "jackbetti/symfunc.hpp"

namespace jb::cli {

using json = nlohmann::ordered_json;

json to_json(const exactnum::Rational& q);
exactnum::Rational rational_from_json(const json& j);

json to_json(const exactnum::RatFunc& f);
exactnum::RatFunc ratfunc_from_json(const json& j);

json to_json(const combinat::Partition& p);
combinat::Partition partition_from_json(const json& j);

// {"nvars": n, "terms": [[coefficient, exponent-vector], ...]} in canonical (grevlex descending) order.
json to_json(const poly::QPoly& f);
poly::QPoly qpoly_from_json(const json& j);
json to_json(const poly::CPoly& f);
poly::CPoly cpoly_from_json(const json& j);

json to_json(const ideals::GradedPiece& g);
ideals::GradedPiece graded_piece_from_json(const json& j);

json to_json(const betti::BettiTable& t);
betti::BettiTable betti_from_json(const json& j);

json to_json(const ideals::HilbertData& h);
ideals::HilbertData hilbert_from_json(const json& j);

json to_json(const symfunc::SymFunc& f);
symfunc::SymFunc symfunc_from_json(const json& j);

json to_json(const abacus::PmEntry& e);
abacus::PmEntry pm_entry_from_json(const json& j);

json to_json(const jack::AdmissibilityReport& r);
jack::AdmissibilityReport admissibility_from_json(const json& j);

json to_json(const Check& c);
Check check_from_json(const json& j);

json to_json(const VerificationReport& r);
VerificationReport report_from_json(const json& j);

}  // namespace jb::cli
