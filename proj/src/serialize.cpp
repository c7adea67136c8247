#include "steiner/serialize.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace steiner {

namespace {

// Base-10 integer with optional sign; leading zeros are not an octal prefix.
BigInt decimal_int(const std::string& s) {
  std::size_t i = 0;
  const bool neg = !s.empty() && (s[0] == '-' || s[0] == '+') ? (++i, s[0] == '-') : false;
  if (i == s.size()) throw std::invalid_argument("expected digits, got '" + s + "'");
  BigInt x = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("expected digits, got '" + s + "'");
    x = x * 10 + (s[i] - '0');
  }
  return neg ? BigInt(-x) : x;
}

// "12", "-0.25", "1e-05", "2.5E3" as an exact rational.
Rational decimal_rational(const std::string& s) {
  const auto e = s.find_first_of("eE");
  const std::string mant = s.substr(0, e);
  long long exp10 = 0;
  if (e != std::string::npos) exp10 = std::stoll(s.substr(e + 1));
  const auto dot = mant.find('.');
  std::string digits = mant;
  if (dot != std::string::npos) {
    digits = mant.substr(0, dot) + mant.substr(dot + 1);
    exp10 -= static_cast<long long>(mant.size() - dot - 1);
  }
  if (digits.empty() || digits == "-" || digits == "+") digits += "0";
  Rational r(decimal_int(digits));
  BigInt scale = 1;
  for (long long i = 0; i < (exp10 < 0 ? -exp10 : exp10); ++i) scale *= 10;
  return exp10 < 0 ? r / Rational(scale) : r * Rational(scale);
}

Json big_json(const BigInt& x) {
  if (x >= BigInt(INT64_MIN) && x <= BigInt(INT64_MAX)) return x.convert_to<std::int64_t>();
  return x.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return decimal_int(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

}  // namespace

Json rational_json(const Rational& r) {
  return Json{{"num", big_json(boost::multiprecision::numerator(r))},
              {"den", big_json(boost::multiprecision::denominator(r))}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_object()) {
    const BigInt den = big_from_json(j.at("den"));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(big_from_json(j.at("num")), den);
  }
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_float()) {
    // Shortest round-trip decimal form, read back exactly.
    return rational_from_json(Json(j.dump()));
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
      const BigInt den = decimal_int(s.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
      return Rational(decimal_int(s.substr(0, slash)), den);
    }
    return decimal_rational(s);
  }
  throw std::invalid_argument("expected a rational, got " + j.dump());
}

void to_json(Json& j, const Design& d) {
  j = Json{{"v", d.v()}, {"t", d.t()}, {"k", d.k()}, {"b", d.block_count()}, {"blocks", d.blocks()}};
}

void to_json(Json& j, const Labeling& l) { j = l.ranks(); }

void to_json(Json& j, const PackingStatus& s) {
  j = Json{{"is_packing", s.is_packing},
           {"is_steiner", s.is_steiner},
           {"uncovered_t_subsets", s.uncovered_t_subsets},
           {"replication", s.replication},
           {"block_count", s.block_count}};
  j["repeated_t_subset"] = s.repeated_t_subset ? Json(*s.repeated_t_subset) : Json(nullptr);
  j["conflicting_blocks"] =
      s.conflicting_blocks ? Json::array({s.conflicting_blocks->first, s.conflicting_blocks->second}) : Json(nullptr);
}

void to_json(Json& j, const MetricReport& r) {
  j = Json{{"min_sum", r.min_sum},
           {"max_sum", r.max_sum},
           {"diff_sum", r.diff_sum},
           {"ratio_sum", r.ratio_sum ? rational_json(*r.ratio_sum) : Json(nullptr)},
           {"argmin_block", r.argmin_block},
           {"argmax_block", r.argmax_block}};
}

void to_json(Json& j, const BoundSheet& b) {
  j = Json{{"t", b.t},
           {"k", b.k},
           {"v", b.v},
           {"minsum_upper", b.minsum_upper},
           {"maxsum_lower", b.maxsum_lower},
           {"diffsum_lower", b.diffsum_lower},
           {"ratiosum_lower", rational_json(b.ratiosum_lower)}};
  if (b.sts_refined)
    j["sts_refined"] = Json{{"diffsum_lower", b.sts_refined->diffsum_lower},
                            {"ratiosum_lower", rational_json(b.sts_refined->ratiosum_lower)}};
  else
    j["sts_refined"] = nullptr;
}

void to_json(Json& j, const IndependentPair& p) {
  j = Json{{"set_a", p.set_a},
           {"set_b", p.set_b},
           {"gamma", p.gamma},
           {"delta", p.delta},
           {"clip", rational_json(p.clip)},
           {"gamma_clip", rational_json(p.gamma_clip)},
           {"delta_clip", rational_json(p.delta_clip)},
           {"exact", p.exact}};
}

void to_json(Json& j, const IndependenceBounds& b) {
  j = Json{{"alpha", b.alpha},
           {"minsum_upper", b.minsum_upper},
           {"maxsum_lower", b.maxsum_lower},
           {"diffsum_lower", b.diffsum_lower},
           {"pair_diffsum_lower", b.pair_diffsum_lower ? rational_json(*b.pair_diffsum_lower) : Json(nullptr)},
           {"single_set_threshold", rational_json(b.single_set_threshold)},
           {"single_set_met", b.single_set_met},
           {"pair_threshold", rational_json(b.pair_threshold)},
           {"pair_met", b.pair_met ? Json(*b.pair_met) : Json(nullptr)}};
}

void to_json(Json& j, const PairLabelingBounds& b) {
  j = Json{{"minsum_lower", b.minsum_lower}, {"maxsum_upper", b.maxsum_upper}, {"diffsum_upper", b.diffsum_upper}};
}

void to_json(Json& j, const FactorSplit& f) {
  Json factors = Json::array();
  for (const auto& factor : f.factors) {
    Json edges = Json::array();
    for (const auto& [a, b] : factor) edges.push_back({a, b});
    factors.push_back(std::move(edges));
  }
  Json graph = Json::array();
  for (const auto& [a, b] : f.source_graph) graph.push_back({a, b});
  j = Json{{"factors", std::move(factors)}, {"source_graph", std::move(graph)}};
}

void to_json(Json& j, const SearchResult& r) {
  j = Json{{"labeling", r.labeling},
           {"report", r.report},
           {"objective", objective_name(r.objective)},
           {"optimality", optimality_name(r.optimality)},
           {"certificate", r.certificate ? rational_json(*r.certificate) : Json(nullptr)},
           {"method", r.method},
           {"rng_seed", r.rng_seed},
           {"iterations", r.iterations}};
}

void to_json(Json& j, const AccessProfile& p) {
  Json w = Json::array();
  for (const auto& x : p.weights) w.push_back(rational_json(x));
  j = Json{{"kind", profile_kind_name(p.kind)},
           {"exponent", p.exponent ? Json(*p.exponent) : Json(nullptr)},
           {"weights", std::move(w)}};
}

void to_json(Json& j, const LoadReport& r) {
  Json loads = Json::array();
  for (const auto& x : r.per_node_load) loads.push_back(rational_json(x));
  j = Json{{"per_node_load", std::move(loads)},
           {"max", rational_json(r.max)},
           {"min", rational_json(r.min)},
           {"spread", rational_json(r.spread)},
           {"mean", rational_json(r.mean)},
           {"variance", rational_json(r.variance)},
           {"coefficient_of_variation", r.coefficient_of_variation}};
}

void to_json(Json& j, const RecoveryReport& r) {
  j = Json{{"stripes", r.stripes}, {"uniform", r.uniform}, {"c", r.c ? Json(*r.c) : Json(nullptr)}};
}

AccessProfile profile_from_json(const Json& j, int v) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "uniform") return AccessProfile::uniform(v);
  if (kind == "linear") return AccessProfile::linear(v);
  if (kind == "zipf") return AccessProfile::zipf(v, j.at("exponent").get<double>());
  if (kind == "custom") {
    std::vector<Rational> w;
    for (const auto& x : j.at("weights")) w.push_back(rational_from_json(x));
    if (w.size() != static_cast<std::size_t>(v))
      throw std::invalid_argument("profile lists " + std::to_string(w.size()) + " weights for v=" + std::to_string(v));
    return AccessProfile::custom(std::move(w));
  }
  throw std::invalid_argument("unknown profile kind '" + kind + "'");
}

std::string load_report_csv(const LoadReport& r) {
  std::ostringstream out;
  out << "block,load,load_decimal\n";
  for (std::size_t i = 0; i < r.per_node_load.size(); ++i) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", to_double(r.per_node_load[i]));
    out << i << ',' << to_string(r.per_node_load[i]) << ',' << buf << '\n';
  }
  return out.str();
}

}  // namespace steiner
