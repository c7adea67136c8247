// steiner-balance: command-line driver for the steiner_balance library.
//
// Data goes to stdout (JSON, CSV or design/labeling text); errors go to
// stderr as one line of JSON. Exit codes: 0 success, 1 a requested check
// failed, 2 bad input or usage.

#include "manifest.hpp"

#include "steiner/constructions.hpp"
#include "steiner/independence.hpp"
#include "steiner/metrics.hpp"
#include "steiner/search.hpp"
#include "steiner/serialize.hpp"
#include "steiner/storage.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using namespace steiner;
using steiner::cli::RunManifest;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << contents;
}

void emit(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

// "sw-general v=19" -> ("sw-general", {v: 19}).
struct Provenance {
  std::string name;
  std::map<std::string, std::string> params;
};

std::optional<Provenance> parse_provenance(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  std::istringstream in(*text);
  Provenance p;
  if (!(in >> p.name)) return std::nullopt;
  std::string kv;
  while (in >> kv) {
    const auto eq = kv.find('=');
    if (eq != std::string::npos) p.params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return p;
}

struct LoadedDesign {
  Design design;
  std::optional<std::string> construction;
};

LoadedDesign load_design(const std::string& path, RunManifest& manifest) {
  const auto text = read_file(path);
  manifest.add_input(path, text);
  auto file = read_design_file(text);
  return {std::move(file.design), std::move(file.construction)};
}

Labeling load_labeling(const std::optional<std::string>& path, const Design& design, RunManifest& manifest) {
  if (!path) return Labeling::identity(design.v());
  const auto text = read_file(*path);
  manifest.add_input(*path, text);
  auto l = read_labeling(text);
  if (l.size() != design.v())
    throw UsageError("labeling has " + std::to_string(l.size()) + " ranks for a design on " +
                     std::to_string(design.v()) + " points");
  return l;
}

Json with_manifest(const RunManifest& m, Json body) {
  Json doc = Json::object();
  doc["manifest"] = m.to_json();
  for (auto it = body.begin(); it != body.end(); ++it) doc[it.key()] = it.value();
  return doc;
}

// ---------------------------------------------------------------------------
// construct

struct ConstructArgs {
  std::string name;
  int v = 0;
  int t = 2;
  int sigma = 0;
  std::string entry;
  std::string out;
  bool json = false;
};

int run_construct(const ConstructArgs& a, RunManifest& manifest) {
  std::string name = a.name;
  std::string entry = a.entry;
  if (name == "STS7" || name == "STS9" || name == "S348") {
    entry = name;
    name = "catalog";
  }
  Design design;
  std::string provenance;
  Json extra = Json::object();
  auto need_v = [&] {
    if (a.v <= 0) throw UsageError("construction '" + name + "' needs --v");
  };
  if (name == "sum-class") {
    need_v();
    design = sum_class_packing({a.t, a.v, a.sigma});
    provenance = "sum-class t=" + std::to_string(a.t) + " v=" + std::to_string(a.v) + " sigma=" + std::to_string(a.sigma);
  } else if (name == "fourpack") {
    need_v();
    design = fourpack(a.v);
    provenance = "fourpack v=" + std::to_string(a.v);
  } else if (name == "sw-special" || name == "sw-general") {
    need_v();
    const auto c = name == "sw-special" ? sw_complete_special(a.v) : sw_complete_general(a.v);
    design = c.design;
    provenance = name + " v=" + std::to_string(a.v);
    Json typed = Json::array();
    for (const auto& tb : c.typed_blocks) typed.push_back({{"points", tb.points}, {"type", tb.type}});
    extra["typed_blocks"] = std::move(typed);
    extra["factors"] = c.factors;
  } else if (name == "bose" || name == "skolem") {
    need_v();
    const auto s = name == "bose" ? bose(a.v) : skolem(a.v);
    design = s.design;
    provenance = name + " v=" + std::to_string(a.v);
    extra["independent_a"] = s.independent_a;
    extra["independent_b"] = s.independent_b;
  } else if (name == "catalog") {
    if (entry.empty()) throw UsageError("catalog needs --entry STS7|STS9|S348");
    design = catalog(entry).design;
    provenance = "catalog entry=" + entry;
  } else {
    throw UsageError("unknown construction '" + name +
                     "' (known: sum-class, fourpack, sw-special, sw-general, bose, skolem, catalog, STS7, STS9, S348)");
  }

  const auto text = write_design(design, provenance);
  if (!a.out.empty()) {
    write_file(a.out, text);
    manifest.add_output(a.out, text);
  }
  if (a.json) {
    Json body{{"construction", provenance}, {"design", design}, {"status", validate(design)}};
    for (auto it = extra.begin(); it != extra.end(); ++it) body[it.key()] = it.value();
    emit(with_manifest(manifest, std::move(body)));
  } else if (a.out.empty()) {
    std::cout << text;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// metrics, bounds

int run_metrics(const std::string& design_path, const std::optional<std::string>& labeling_path,
                RunManifest& manifest) {
  const auto d = load_design(design_path, manifest);
  const auto l = load_labeling(labeling_path, d.design, manifest);
  emit(with_manifest(manifest, Json{{"report", metric_report(d.design, l)}}));
  return 0;
}

int run_bounds(int t, int k, int v, RunManifest& manifest) {
  emit(with_manifest(manifest, Json{{"bounds", basic_bounds(t, k, v)}}));
  return 0;
}

// ---------------------------------------------------------------------------
// independence

int run_independence(const std::string& design_path, const std::string& mode, std::uint64_t seed,
                     RunManifest& manifest) {
  const auto d = load_design(design_path, manifest);
  const auto& design = d.design;
  Json body = Json::object();
  body["mode"] = mode;
  std::optional<int> alpha;
  if (mode == "exact") {
    const auto set = max_independent_set(design);
    alpha = static_cast<int>(set.size());
    body["independent_set"] = set;
    body["alpha"] = *alpha;
  } else if (mode == "greedy") {
    manifest.add_seed("seed", seed);
    const auto set = greedy_independent_set(design, seed);
    body["independent_set"] = set;
    body["size"] = set.size();
  } else {
    manifest.add_seed("seed", seed);
    const auto pair = independent_pair(design, seed);
    body["pair"] = pair;
    if (design.v() <= kExactIndependentSetCap) alpha = static_cast<int>(max_independent_set(design).size());
    if (alpha) body["alpha"] = *alpha;
    body["pair_labeling_bounds"] = pair_labeling_bounds(design.k(), design.v(), pair.gamma, pair.delta);
    if (alpha) body["bounds"] = indep_bounds(design, *alpha, &pair);
  }
  if (alpha && mode == "exact") body["bounds"] = indep_bounds(design, *alpha);
  emit(with_manifest(manifest, std::move(body)));
  return 0;
}

// ---------------------------------------------------------------------------
// label

struct LabelArgs {
  std::string design;
  bool from_pair = false;
  std::string objective = "min-diffsum";
  bool exact = false;
  bool anneal = false;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1'000'000;
  std::string out;
};

int run_label(const LabelArgs& a, RunManifest& manifest) {
  const auto d = load_design(a.design, manifest);
  const auto& design = d.design;
  const auto objective = parse_objective(a.objective);
  if (!objective) throw UsageError("unknown objective '" + a.objective + "' (max-minsum, min-diffsum, min-ratiosum)");
  manifest.add_seed("seed", a.seed);

  Json body = Json::object();
  SearchResult result;
  if (a.from_pair) {
    const auto pair = independent_pair(design, a.seed);
    const auto labeling = labeling_from_pair(design, pair.set_a, pair.set_b);
    result.report = metric_report(design, labeling);
    result.labeling = labeling;
    result.objective = *objective;
    result.method = "from-pair";
    result.rng_seed = a.seed;
    body["pair"] = pair;
    body["pair_labeling_bounds"] = pair_labeling_bounds(design.k(), design.v(), pair.gamma, pair.delta);
  } else if (a.exact) {
    result = design.v() <= kExhaustiveCap ? exhaustive_labeling(design, *objective) : bb_labeling(design, *objective);
  } else {
    AnnealOptions opt;
    opt.seed = a.seed;
    opt.budget = a.budget;
    result = anneal_labeling(design, *objective, opt);
    body["schedule"] = {{"start_temperature", static_cast<double>(design.k()) * design.v()},
                        {"cooling", opt.cooling},
                        {"equal_cost_acceptance", 0.5},
                        {"budget", opt.budget}};
  }
  const auto text = write_labeling(result.labeling);
  if (!a.out.empty()) {
    write_file(a.out, text);
    manifest.add_output(a.out, text);
  }
  body["result"] = result;
  emit(with_manifest(manifest, std::move(body)));
  return 0;
}

// ---------------------------------------------------------------------------
// table

struct TableArgs {
  std::string v_range = "7..27";
  std::uint64_t budget = 10'000'000;
  std::uint64_t seed = 0;
  std::string designs_dir;
  std::string manifest_path;
};

int run_table(const TableArgs& a, RunManifest& manifest) {
  int lo = 0, hi = 0;
  {
    const auto dots = a.v_range.find("..");
    try {
      if (dots == std::string::npos) {
        lo = hi = std::stoi(a.v_range);
      } else {
        lo = std::stoi(a.v_range.substr(0, dots));
        hi = std::stoi(a.v_range.substr(dots + 2));
      }
    } catch (const std::exception&) {
      throw UsageError("bad --v-range '" + a.v_range + "' (expected a..b)");
    }
  }
  manifest.add_seed("seed", a.seed);
  if (!a.designs_dir.empty()) std::filesystem::create_directories(a.designs_dir);

  std::cout << "v,min_sum,max_sum,diff_sum,ratio_sum,status,steps\n";
  for (const auto& row : table_rows()) {
    if (row.v < lo || row.v > hi) continue;
    std::string status;
    std::uint64_t steps = 0;
    if (table_row_infeasible(row)) {
      status = "miss";
    } else {
      const auto hit = table_search(row.v, row.min_sum, row.max_sum, a.seed, a.budget, &steps);
      status = hit ? "hit" : "timeout";
      if (hit && !a.designs_dir.empty()) {
        const auto path = (std::filesystem::path(a.designs_dir) / ("sts" + std::to_string(row.v) + "_" +
                                                                    std::to_string(row.min_sum) + "_" +
                                                                    std::to_string(row.max_sum) + ".txt"))
                              .string();
        const auto text = write_design(hit->design, "table-search v=" + std::to_string(row.v) +
                                                        " min=" + std::to_string(row.min_sum) +
                                                        " max=" + std::to_string(row.max_sum) +
                                                        " seed=" + std::to_string(a.seed));
        write_file(path, text);
        manifest.add_output(path, text);
      }
    }
    std::cout << row.v << ',' << row.min_sum << ',' << row.max_sum << ',' << row.max_sum - row.min_sum << ','
              << to_string(make_rational(row.max_sum, row.min_sum)) << ',' << status << ',' << steps << '\n';
  }
  if (!a.manifest_path.empty()) write_file(a.manifest_path, manifest.to_json().dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------------------
// simulate

int run_simulate(const std::string& design_path, const std::string& labeling_path, const std::string& profile,
                 std::optional<int> frc_k, bool csv, RunManifest& manifest) {
  const auto d = load_design(design_path, manifest);
  const auto l = load_labeling(labeling_path, d.design, manifest);
  AccessProfile p;
  if (profile == "uniform" || profile == "linear" || profile.rfind("zipf:", 0) == 0) {
    p = parse_profile_spec(profile, d.design.v());
  } else {
    const auto text = read_file(profile);
    manifest.add_input(profile, text);
    p = profile_from_json(Json::parse(text), d.design.v());
  }
  const auto load = access_load(d.design, l, p);
  if (csv) {
    std::cout << load_report_csv(load);
    return 0;
  }
  Json body{{"profile", p}, {"load", load}, {"recovery", recovery_uniformity(d.design)}};
  if (frc_k) body["frc_rate"] = {{"read_k", *frc_k}, {"rate", frc_rate(d.design, *frc_k)}};
  emit(with_manifest(manifest, std::move(body)));
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<Check> verify_checks(const Design& design, const Labeling& labeling, const std::optional<Provenance>& prov) {
  std::vector<Check> checks;
  auto add = [&](std::string name, bool pass, std::string detail) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  };
  const int v = design.v(), t = design.t(), k = design.k();
  const auto status = validate(design);
  {
    std::string detail = std::to_string(status.block_count) + " blocks";
    if (status.repeated_t_subset) {
      detail = "subset {";
      for (std::size_t i = 0; i < status.repeated_t_subset->size(); ++i)
        detail += (i ? "," : "") + std::to_string((*status.repeated_t_subset)[i]);
      detail += "} lies in blocks " + std::to_string(status.conflicting_blocks->first) + " and " +
                std::to_string(status.conflicting_blocks->second);
    }
    add("packing", status.is_packing, detail);
  }

  static const std::map<std::string, bool> kSteinerConstructions{
      {"sw-special", true}, {"sw-general", true}, {"bose", true}, {"skolem", true}, {"table-search", true}};
  const bool claims_steiner =
      (prov && (kSteinerConstructions.count(prov->name) || (prov->name == "catalog"))) ||
      (steiner_block_count(v, t, k) && *steiner_block_count(v, t, k) == design.block_count());
  if (claims_steiner) {
    const std::string label =
        t == 2 && k == 3 ? "valid STS" : "valid S(" + std::to_string(t) + "," + std::to_string(k) + "," + std::to_string(v) + ")";
    add(label, status.is_steiner, std::to_string(status.uncovered_t_subsets) + " uncovered t-subsets");
  }
  if (design.empty()) return checks;

  const auto r = metric_report(design, labeling);
  const std::string got = "MinSum " + std::to_string(r.min_sum) + ", MaxSum " + std::to_string(r.max_sum) +
                          ", DiffSum " + std::to_string(r.diff_sum);
  auto bound = [&](const std::string& name, bool pass) { add(name, pass, got); };

  if (status.is_steiner && 0 < t && t < k && k <= v) {
    const auto b = basic_bounds(t, k, v);
    bound("MinSum <= " + std::to_string(b.minsum_upper), r.min_sum <= b.minsum_upper);
    bound("MaxSum >= " + std::to_string(b.maxsum_lower), r.max_sum >= b.maxsum_lower);
    bound("DiffSum >= " + std::to_string(b.diffsum_lower), r.diff_sum >= b.diffsum_lower);
    if (r.ratio_sum) bound("RatioSum >= " + to_string(b.ratiosum_lower), *r.ratio_sum >= b.ratiosum_lower);
    if (b.sts_refined && is_sts_order(v)) {
      const auto d = sts_diffsum_lower(v);
      bound("DiffSum >= " + std::to_string(d) + " (triple systems)", r.diff_sum >= d);
      if (r.ratio_sum)
        bound("RatioSum >= " + to_string(b.sts_refined->ratiosum_lower) + " (triple systems)",
              *r.ratio_sum >= b.sts_refined->ratiosum_lower);
    }
  }
  if (status.is_packing && v <= kExactIndependentSetCap) {
    const int alpha = static_cast<int>(max_independent_set(design).size());
    const auto ib = indep_bounds(design, alpha);
    const std::string a = " (alpha " + std::to_string(alpha) + ")";
    bound("MinSum <= " + std::to_string(ib.minsum_upper) + a, r.min_sum <= ib.minsum_upper);
    bound("MaxSum >= " + std::to_string(ib.maxsum_lower) + a, r.max_sum >= ib.maxsum_lower);
    bound("DiffSum >= " + std::to_string(ib.diffsum_lower) + a, r.diff_sum >= ib.diffsum_lower);
  }

  if (!prov) return checks;
  auto param = [&](const char* key) -> std::optional<long long> {
    const auto it = prov->params.find(key);
    if (it == prov->params.end()) return std::nullopt;
    try {
      return std::stoll(it->second);
    } catch (const std::exception&) {
      throw UsageError("construction parameter " + it->first + "=" + it->second + " is not an integer");
    }
  };
  const auto pv = param("v");
  if (pv && *pv != v) add("construction order", false, "comment says v=" + std::to_string(*pv));
  const long long lv = v;
  if (prov->name == "sum-class") {
    const long long pt = param("t").value_or(t), sigma = param("sigma").value_or(0);
    const auto expected = binomial(lv, pt + 1) / lv;
    add("block count C(v,t+1)/v = " + expected.str(), BigInt(design.block_count()) == expected,
        std::to_string(design.block_count()) + " blocks");
    if (sigma < static_cast<long long>(binomial_u64(pt + 1, 2))) {
      bound("MinSum = v+sigma = " + std::to_string(lv + sigma), r.min_sum == lv + sigma);
      bound("MaxSum = tv+sigma = " + std::to_string(pt * lv + sigma), r.max_sum == pt * lv + sigma);
    }
  } else if (prov->name == "fourpack") {
    const auto expected = binomial(lv, 3) * (lv - 4) / ((lv - 1) * 4);
    add("block count (v-4)/(v-1) C(v,3)/4 = " + expected.str(), BigInt(design.block_count()) == expected,
        std::to_string(design.block_count()) + " blocks");
    bound("MinSum = v+2", r.min_sum == lv + 2);
    bound("MaxSum = 3v-6", r.max_sum == 3 * lv - 6);
  } else if (prov->name == "sw-special") {
    bound("MinSum >= v-2", r.min_sum >= lv - 2);
    bound("MaxSum <= 2v+2", r.max_sum <= 2 * lv + 2);
  } else if (prov->name == "sw-general") {
    bound("MinSum >= v-5", r.min_sum >= lv - 5);
    bound("MaxSum <= 2v+2", r.max_sum <= 2 * lv + 2);
    bound("DiffSum <= v+7", r.diff_sum <= lv + 7);
  } else if (prov->name == "table-search") {
    if (const auto mn = param("min")) bound("MinSum = " + std::to_string(*mn), r.min_sum == *mn);
    if (const auto mx = param("max")) bound("MaxSum = " + std::to_string(*mx), r.max_sum == *mx);
  }
  return checks;
}

int run_verify(const std::string& design_path, const std::optional<std::string>& labeling_path,
               const std::optional<std::string>& construction, RunManifest& manifest) {
  const auto text = read_file(design_path);
  manifest.add_input(design_path, text);
  const auto file = read_design_file(text);
  const auto l = load_labeling(labeling_path, file.design, manifest);
  const auto prov = parse_provenance(construction ? construction : file.construction);
  const auto checks = verify_checks(file.design, l, prov);
  bool all = true;
  Json rows = Json::array();
  for (const auto& c : checks) {
    all = all && c.pass;
    rows.push_back({{"check", c.name}, {"status", c.pass ? "PASS" : "FAIL"}, {"detail", c.detail}});
  }
  Json body{{"construction", prov ? Json(prov->name) : Json(nullptr)}, {"checks", std::move(rows)},
            {"result", all ? "PASS" : "FAIL"}};
  emit(with_manifest(manifest, std::move(body)));
  return all ? 0 : 1;
}

void report_error(const std::string& kind, const std::string& message, std::optional<std::size_t> line = {}) {
  Json e{{"error", kind}, {"message", message}};
  if (line) e["line"] = *line;
  std::cerr << e.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Labeled Steiner systems for balanced storage access"};
  app.require_subcommand(1);
  RunManifest manifest(argc, argv);

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Build a design and write it as a design file");
  c->add_option("name", construct.name, "sum-class, fourpack, sw-special, sw-general, bose, skolem, catalog, STS7, STS9, S348")
      ->required();
  c->add_option("--v", construct.v, "Number of points");
  c->add_option("--t", construct.t, "Strength for sum-class");
  c->add_option("--sigma", construct.sigma, "Sum class (negative values count back from v)");
  c->add_option("--entry", construct.entry, "Catalog entry");
  c->add_option("-o,--out", construct.out, "Write the design file here");
  c->add_flag("--json", construct.json, "Print a JSON document with the design and construction data");

  std::string design_path;
  std::optional<std::string> labeling_path;
  auto* m = app.add_subcommand("metrics", "Block-sum metrics of a labeled design");
  m->add_option("design", design_path)->required();
  m->add_option("--labeling", labeling_path, "Labeling file (identity when omitted)");

  int bt = 0, bk = 0, bv = 0;
  auto* b = app.add_subcommand("bounds", "Closed-form bounds for S(t,k,v)");
  b->add_option("t", bt)->required();
  b->add_option("k", bk)->required();
  b->add_option("v", bv)->required();

  std::uint64_t seed = 0;
  bool ind_exact = false, ind_greedy = false, ind_pair = false;
  auto* ind = app.add_subcommand("independence", "Independent sets and the bounds they imply");
  ind->add_option("design", design_path)->required();
  auto* f_exact = ind->add_flag("--exact", ind_exact, "Maximum independent set (default)");
  auto* f_greedy = ind->add_flag("--greedy", ind_greedy, "Seeded greedy independent set");
  auto* f_pair = ind->add_flag("--pair", ind_pair, "Best disjoint independent pair");
  f_exact->excludes(f_greedy)->excludes(f_pair);
  f_greedy->excludes(f_pair);
  ind->add_option("--seed", seed, "Random seed");

  LabelArgs label;
  auto* lab = app.add_subcommand("label", "Find a labeling for a design");
  lab->add_option("design", label.design)->required();
  auto* f_from = lab->add_flag("--from-pair", label.from_pair, "Label from the best independent pair");
  auto* f_obj = lab->add_option("--objective", label.objective, "max-minsum, min-diffsum or min-ratiosum");
  auto* f_lexact = lab->add_flag("--exact", label.exact, "Exhaustive (v <= 9) or branch and bound");
  auto* f_anneal = lab->add_flag("--anneal", label.anneal, "Simulated annealing (default)");
  f_from->excludes(f_lexact)->excludes(f_anneal);
  f_lexact->excludes(f_anneal);
  (void)f_obj;
  lab->add_option("--seed", label.seed, "Random seed");
  lab->add_option("--budget", label.budget, "Annealing steps");
  lab->add_option("-o,--out", label.out, "Write the labeling file here");

  TableArgs table;
  auto* tab = app.add_subcommand("table", "Search for triple systems matching the published MinSum/MaxSum rows");
  tab->add_option("--v-range", table.v_range, "Orders to attempt, as a..b");
  tab->add_option("--budget", table.budget, "Steps per row");
  tab->add_option("--seed", table.seed, "Random seed");
  tab->add_option("--designs-dir", table.designs_dir, "Write each hit as a design file into this directory");
  tab->add_option("--manifest", table.manifest_path, "Write the run manifest JSON here");

  std::string sim_labeling, profile = "uniform";
  std::optional<int> frc_k;
  bool csv = false;
  auto* sim = app.add_subcommand("simulate", "Per-node access load under a popularity profile");
  sim->add_option("design", design_path)->required();
  sim->add_option("labeling", sim_labeling)->required();
  sim->add_option("--profile", profile, "zipf:<s>, uniform, linear, or a JSON profile file");
  sim->add_option("--frc-rate", frc_k, "Also report the FRC rate for this many read blocks");
  sim->add_flag("--csv", csv, "Print per-node loads as CSV");

  std::optional<std::string> construction;
  auto* ver = app.add_subcommand("verify", "Check a design against every applicable bound");
  ver->add_option("design", design_path)->required();
  ver->add_option("--labeling", labeling_path, "Labeling file (identity when omitted)");
  ver->add_option("--construction", construction, "Provenance such as \"sw-general v=19\" (overrides the file comment)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("usage", e.what());
    return 2;
  }

  try {
    if (*c) return run_construct(construct, manifest);
    if (*m) return run_metrics(design_path, labeling_path, manifest);
    if (*b) return run_bounds(bt, bk, bv, manifest);
    if (*ind) return run_independence(design_path, ind_greedy ? "greedy" : ind_pair ? "pair" : "exact", seed, manifest);
    if (*lab) return run_label(label, manifest);
    if (*tab) return run_table(table, manifest);
    if (*sim) return run_simulate(design_path, sim_labeling, profile, frc_k, csv, manifest);
    if (*ver) return run_verify(design_path, labeling_path, construction, manifest);
  } catch (const ParseError& e) {
    report_error("parse", e.what(), e.line());
  } catch (const ConstructionError& e) {
    report_error("construction", e.what());
  } catch (const FactorizationError& e) {
    report_error("factorization", e.what());
  } catch (const DesignError& e) {
    report_error("design", e.what());
  } catch (const Json::exception& e) {
    report_error("json", e.what());
  } catch (const std::invalid_argument& e) {
    report_error("invalid-argument", e.what());
  } catch (const std::exception& e) {
    report_error("internal", e.what());
  }
  return 2;
}
