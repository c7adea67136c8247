#pragma once
// JSON views of the library's result types. Rationals are written as
// {"num": n, "den": d}; components too large for 64 bits become decimal strings.

#include "steiner/constructions.hpp"
#include "steiner/independence.hpp"
#include "steiner/metrics.hpp"
#include "steiner/search.hpp"
#include "steiner/storage.hpp"

#include <json.hpp>

#include <string>

namespace steiner {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);
/// Accepts {"num","den"}, an integer, a decimal number, or a string "a" / "a/b".
Rational rational_from_json(const Json& j);

void to_json(Json& j, const Design& d);
void to_json(Json& j, const Labeling& l);
void to_json(Json& j, const PackingStatus& s);
void to_json(Json& j, const MetricReport& r);
void to_json(Json& j, const BoundSheet& b);
void to_json(Json& j, const IndependentPair& p);
void to_json(Json& j, const IndependenceBounds& b);
void to_json(Json& j, const PairLabelingBounds& b);
void to_json(Json& j, const FactorSplit& f);
void to_json(Json& j, const SearchResult& r);
void to_json(Json& j, const AccessProfile& p);
void to_json(Json& j, const LoadReport& r);
void to_json(Json& j, const RecoveryReport& r);

/// Profile file contents {kind, exponent?, weights?}; `v` sizes the built-in kinds.
AccessProfile profile_from_json(const Json& j, int v);

/// One row per block: index, load as "num/den", and load as a decimal.
std::string load_report_csv(const LoadReport& r);

}  // namespace steiner
