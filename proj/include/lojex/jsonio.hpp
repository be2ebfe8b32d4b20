#ifndef LOJEX_JSONIO_HPP
#define LOJEX_JSONIO_HPP

#include <json.hpp>

#include <cstdint>
#include <string>

#include "lojex/bounds.hpp"
#include "lojex/estimator.hpp"
#include "lojex/lifting.hpp"
#include "lojex/polynomial.hpp"
#include "lojex/projection.hpp"
#include "lojex/semiset.hpp"

namespace lojex {

using json = nlohmann::json;

// Polynomial encoding: {"vars": N, "terms": [[coef, [e1,...,eN]], ...]}
// with terms in canonical order, so serialization is bit-stable.
json to_json(const Polynomial& p);
Polynomial poly_from_json(const json& j);

// {"vars": N, "components": [poly, ...]}
json to_json(const PolyMap& F);
PolyMap map_from_json(const json& j);

// {"vars": N, "pieces": [{"ineqs": [poly...], "eqs": [poly...]}, ...]}
json to_json(const SemialgebraicSet& S);
SemialgebraicSet set_from_json(const json& j);

json to_json(const BoundReport& r);
BoundReport bound_report_from_json(const json& j);

json to_json(const ShellRecord& s);
json to_json(const ExponentEstimate& e);
ExponentEstimate estimate_from_json(const json& j);

json to_json(const VerifyReport& v);

json to_json(const AlgebraicLift& L);
json to_json(const TransferReport& t);

json to_json(const TrialRecord& t);
json to_json(const ReductionReport& r);

json to_json(const GlobalSeparationReport& g);

/// RFC-4180 CSV of the shell records (header row, CRLF line ends).
std::string shells_to_csv(const ExponentEstimate& e);

/// FNV-1a 64-bit digest, as a 16-digit hex string.
std::string fnv1a64_hex(const std::string& bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace lojex

#endif
