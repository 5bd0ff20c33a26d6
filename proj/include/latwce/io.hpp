// include/latwce/io.hpp — weight-spec parsing and the JSON/CSV emitters used
// by the command-line front end. Exact rationals travel through JSON as
// strings "p/q"; doubles are emitted as JSON numbers (shortest round-trip
// form), so identical inputs always serialize to identical bytes.

#pragma once

#include "latwce/bounds.hpp"
#include "latwce/lattice.hpp"
#include "latwce/search.hpp"
#include "latwce/suite.hpp"
#include "latwce/tn.hpp"
#include "latwce/wce.hpp"
#include "latwce/weights.hpp"

#include <json.hpp>

#include <optional>
#include <span>
#include <string>

namespace latwce::io {

using json = nlohmann::ordered_json;

/// Accepted weight-spec forms:
///   - shorthand  product:[1,1/4]  or  order:[1,0.5]   (rational literals)
///   - inline JSON, e.g. {"type":"product","gammas":["1","1/4"]}
///     types: "product" (gammas = gamma_j), "order" (gammas = Gamma_m),
///     "explicit" (d + entries [{"u":[1,2],"gamma":"1/2"}, ...])
///   - @PATH, a file holding either of the above
/// JSON strings parse as exact rationals ("0.1" -> 1/10); bare JSON numbers
/// are taken at their binary double value.
Weights parse_weight_spec(const std::string& spec);

/// A rational from a JSON string/integer/double, with the conversions above.
Rational rational_from_json(const json& v, const char* who);

/// FLOAT -> JSON number, EXACT -> "p/q" string.
json scalar_to_json(const Scalar& s);

json wce_result_to_json(const WceResult& r);
json tn_value_to_json(long long n, long long kappa, const Scalar& value);
/// {"n","mean","mean_closed_form","max","lemma":{...},"falsification":{...}};
/// falsification is null when n < 7.
json tn_stats_to_json(const TnTable& table);
json bound_report_to_json(const BoundReport& r);
json bound_reports_to_json(std::span<const BoundReport> reports);
json search_result_to_json(const SearchResult& r);
json integrate_result_to_json(long long n, const std::vector<long long>& z, const std::string& integrand,
                              const Scalar& value, const Rational& integral);
/// Canonical suite report; per-check "ms" fields appear only when `ms` is
/// non-null (they make the bytes run-dependent).
json suite_report_to_json(const SuiteReport& report, const std::vector<double>* ms = nullptr);

/// Header "i,x1,...,xd"; fractions "p/q" or shortest-round-trip decimals.
std::string points_csv(const LatticePointSet& pts, bool fractions);
/// Header "kappa,Tn"; exact tables emit "p/q".
std::string tn_csv(const TnTable& table);

/// j.dump(2) plus trailing newline: the one serialization used everywhere.
std::string dump(const json& j);

} // namespace latwce::io
