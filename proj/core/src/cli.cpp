#include "fairfan/cli.hpp"

#include <json.hpp>

#include "fairfan/adversarial.hpp"
#include "fairfan/arrangement.hpp"
#include "fairfan/fan.hpp"
#include "fairfan/instances.hpp"
#include "fairfan/json_io.hpp"
#include "fairfan/pipelines.hpp"
#include "fairfan/svg.hpp"

namespace fairfan {

using nlohmann::json;

namespace {

json params_json(const RunConfig& cfg) {
  json p;
  p["d"] = cfg.d;
  p["n"] = cfg.n;
  p["c"] = cfg.c;
  if (cfg.m >= 0) p["m"] = cfg.m;
  if (!cfg.alpha.empty()) p["alpha"] = cfg.alpha;
  p["seed"] = cfg.seed;
  return p;
}

RunOutcome finish(int code, json report) {
  return RunOutcome{code, report.dump(2) + "\n"};
}

MeasureFamily load_family(const RunConfig& cfg) {
  if (cfg.in_path.empty()) throw ParamError("this command needs --in <family.json>");
  return family_from_json(read_file(cfg.in_path));
}

void maybe_svg(const RunConfig& cfg, const MeasureFamily& fam, const ConvexPartition* part,
               json& report) {
  if (cfg.svg_path.empty()) return;
  write_file(cfg.svg_path, render_svg(fam, part));
  report["svg"] = cfg.svg_path;
}

void maybe_partition(const RunConfig& cfg, const ConvexPartition& part, json& report) {
  if (cfg.out_path.empty()) return;
  write_file(cfg.out_path, partition_to_json(part));
  report["partition"] = cfg.out_path;
}

json rat_list(const std::vector<Rat>& xs) {
  json arr = json::array();
  for (const Rat& x : xs) arr.push_back(rat_to_string(x));
  return arr;
}

RunOutcome run_fan(const RunConfig& cfg) {
  MeasureFamily fam = load_family(cfg);
  FanPartition fan = build_fan(fam, cfg.n, cfg.c);
  auto counts = coverage_counts(fam, fan.partition, Rat(0));
  bool ok = true;
  for (int cnt : counts)
    if (cnt < cfg.c) ok = false;
  json report;
  report["command"] = "run fan";
  report["params"] = params_json(cfg);
  report["params"]["m"] = fam.size();
  report["coverage"] = counts;
  report["anchor_counts"] = fan.anchor_counts;
  report["apex_anchors"] = fan.ridge_indices;
  report["w_anchor"] = fan.w_anchor;
  report["ok"] = ok;
  maybe_partition(cfg, fan.partition, report);
  if (fam.dim == 2) maybe_svg(cfg, fam, &fan.partition, report);
  return finish(ok ? kExitOk : kExitViolated, report);
}

RunOutcome run_t5(const RunConfig& cfg) {
  MeasureFamily fam = load_family(cfg);
  Theorem5Proof proof =
      (cfg.mode == "point") ? Theorem5Proof::point_measure : Theorem5Proof::nu_measure;
  Theorem5Result res = theorem5_pipeline(fam, cfg.n, cfg.c, proof);
  json report;
  report["command"] = "run t5";
  report["params"] = params_json(cfg);
  report["params"]["m"] = fam.size();
  report["proof"] = (proof == Theorem5Proof::point_measure) ? "point" : "nu";
  json regions = json::array();
  for (const auto& rc : res.report.regions)
    regions.push_back({{"coverage", rc.coverage},
                       {"mu1_mass", rat_to_string(rc.mu1_mass)},
                       {"aux_mass", rat_to_string(rc.aux_mass)},
                       {"touched_sources", rc.touched_sources}});
  report["regions"] = regions;
  report["corollary_applicable"] = res.report.corollary_applicable;
  report["corollary_holds"] = res.report.corollary_holds;
  report["ok"] = res.report.all_covered;
  maybe_partition(cfg, res.partition, report);
  maybe_svg(cfg, fam, &res.partition, report);
  return finish(res.report.all_covered ? kExitOk : kExitViolated, report);
}

RunOutcome run_fraction(const RunConfig& cfg, bool alpha_mode) {
  MeasureFamily fam = load_family(cfg);
  GroupPlan plan;
  FractionTarget target;
  json report;
  report["command"] = alpha_mode ? "run t8" : "run t7";
  report["params"] = params_json(cfg);
  report["params"]["m"] = fam.size();
  if (alpha_mode) {
    if (cfg.alpha.empty()) throw ParamError("t8 needs --alpha p/q");
    Rat alpha = rat_from_string(cfg.alpha);
    AlphaPlan aplan = plan_alpha_groups(cfg.n, cfg.c, 2, alpha);
    plan = aplan.plan;
    target.use_alpha = true;
    target.alpha = alpha;
    report["ratio"] = rat_to_string(aplan.ratio);
    report["integer_ratio"] = aplan.integer_ratio;
    report["required_m"] = aplan.required_m.get_str();
    report["sufficient_m"] = aplan.sufficient_m.get_str();
    int needed = 0;
    for (int s : plan.sizes) needed += s;
    if (fam.size() < needed)
      throw ParamError("family too small for the alpha plan: need " + std::to_string(needed));
  } else {
    plan = plan_epsilon_groups(fam.size(), cfg.n, cfg.c, 2);
    EpsilonBound eb = epsilon_bound(cfg.n, cfg.c, 2);
    report["epsilon"] = rat_to_string(eb.epsilon);
    report["floor_bound"] = rat_to_string(eb.floor_bound);
  }
  report["plan"] = {{"quotas", plan.quotas}, {"sizes", plan.sizes}};
  FractionResult res = fraction_pipeline(fam, cfg.n, cfg.c, plan, target);
  json regions = json::array();
  for (const auto& rc : res.report.regions)
    regions.push_back({{"hypothesis", rat_list(rc.group_hypothesis)},
                       {"certified", rc.certified},
                       {"fractions", rat_list(rc.fractions)}});
  report["regions"] = regions;
  report["threshold"] = rat_to_string(res.report.threshold);
  report["ok"] = res.report.all_certified;
  maybe_partition(cfg, res.partition, report);
  maybe_svg(cfg, fam, &res.partition, report);
  return finish(res.report.all_certified ? kExitOk : kExitViolated, report);
}

RunOutcome run_optimal(const RunConfig& cfg) {
  MeasureFamily fam =
      cfg.in_path.empty() ? gen_adversarial(cfg.d, cfg.n, cfg.c) : load_family(cfg);
  json report;
  report["command"] = "run optimal";
  report["params"] = params_json(cfg);
  report["params"]["m"] = fam.size();

  bool formula_ok = true;
  if (cfg.d == 1) {
    // DP vs closed form on a small grid around the requested parameters.
    for (int n = 2; n <= std::max(4, cfg.n); ++n)
      for (int c = 2; c <= std::max(4, cfg.c); ++c)
        for (int m = 1; m <= n * (c - 1) + 2; ++m)
          if (oracle_1d(m, n, c) != (m >= n * (c - 1) + 1)) formula_ok = false;
  } else if (cfg.c > cfg.d) {
    // Along the line the pieces trace consecutive intervals, each needing
    // c-(d-1) of the m-(d-1) line bumps: infeasible at m = n(c-d)+d-1.
    const int m = fam.size();
    if (oracle_1d(m - (cfg.d - 1), cfg.n, cfg.c - (cfg.d - 1))) formula_ok = false;
    if (!oracle_1d(m + 1 - (cfg.d - 1), cfg.n, cfg.c - (cfg.d - 1))) formula_ok = false;
  }
  report["oracle_matches_closed_form"] = formula_ok;

  Rng rng(cfg.seed);
  std::vector<ConvexPartition> candidates;
  for (int i = 0; i < cfg.candidates; ++i) {
    if (cfg.d == 1)
      candidates.push_back(random_interval_partition(fam, cfg.n, rng));
    else if (cfg.d == 2 && is_power_of_two(cfg.n))
      candidates.push_back(random_equiparting_partition(fam, cfg.n, rng));
    else
      throw ScopeLimitError("optimal falsification: candidates exist for d=1 or d=2, n=2^k");
  }
  AdversarialReport rep = verify_adversarial(fam, candidates, cfg.c);
  report["candidates"] = static_cast<int>(candidates.size());
  report["candidates_in_quantifier"] = rep.candidates_checked;
  report["counterexample_free"] = rep.counterexample_free;
  json witnesses = json::array();
  for (const auto& e : rep.entries) {
    if (!e.equiparts) {
      witnesses.push_back({{"rejected", "does not equipart the simplex measures"}});
    } else {
      witnesses.push_back(
          {{"witness_region", e.witness_region}, {"coverage", e.witness_coverage}});
    }
  }
  report["witnesses"] = witnesses;
  bool ok = rep.counterexample_free && formula_ok;
  report["ok"] = ok;
  return finish(ok ? kExitOk : kExitViolated, report);
}

RunOutcome run_poset(const RunConfig& cfg) {
  if (cfg.m < 0) throw ParamError("poset runs need --m");
  ArrangementVariant variant = (cfg.mode == "sum") ? ArrangementVariant::sum_of_measures
                                                   : ArrangementVariant::one_measure;
  ArrangementStats stats = arrangement_stats(cfg.m, cfg.n, cfg.c, variant);
  json report;
  report["command"] = "run poset";
  report["params"] = {{"m", cfg.m}, {"n", cfg.n}, {"c", cfg.c}};
  report["variant"] = (variant == ArrangementVariant::one_measure) ? "one" : "sum";
  report["element_count"] = stats.element_count;
  report["fiber_count"] = stats.fiber_count;
  report["fiber_nonempty"] = stats.fiber_nonempty;
  report["fiber_dim"] = stats.fiber_dim;
  report["poset_dim"] = stats.poset_dim;
  report["q_prime_dim"] = stats.q_prime_dim;
  report["has_top"] = stats.has_top;
  report["has_top_formula"] = stats.has_top_formula;
  report["fiber_scan_only"] = stats.fiber_scan_only;
  if (!stats.fiber_nonempty)
    report["note"] = "full-support fiber is empty for these parameters";
  bool ok = stats.fiber_scan_only || stats.has_top == stats.has_top_formula;
  report["ok"] = ok;
  if (!cfg.out_path.empty()) {
    IntersectionPoset poset = build_poset(cfg.m, cfg.n, cfg.c, variant);
    if (cfg.out_path.size() > 5 && cfg.out_path.substr(cfg.out_path.size() - 5) == ".json") {
      json elements = json::array();
      for (const auto& e : poset.elements) {
        json cols = json::array();
        for (int k = 0; k < e.cols; ++k) {
          json rows = json::array();
          for (int r = 0; r < e.rows; ++r)
            if ((e.colmask[k] >> r) & 1) rows.push_back(r + 1);
          cols.push_back(rows);
        }
        elements.push_back({{"zero_rows_per_column", cols}, {"zeros", e.zeros()}});
      }
      json edges = json::array();
      for (const auto& [lo, hi] : poset.hasse_edges) edges.push_back({lo, hi});
      write_file(cfg.out_path,
                 json{{"elements", elements}, {"hasse_edges", edges}}.dump(2) + "\n");
      report["elements_json"] = cfg.out_path;
    } else {
      write_file(cfg.out_path, poset_to_dot(poset));
      report["dot"] = cfg.out_path;
    }
  }
  return finish(ok ? kExitOk : kExitViolated, report);
}

}  // namespace

RunOutcome cmd_gen(const RunConfig& cfg) {
  try {
    MeasureFamily fam;
    if (cfg.kind == "adversarial") {
      fam = gen_adversarial(cfg.d, cfg.n, cfg.c);
    } else if (cfg.kind == "random") {
      int m = cfg.m >= 0 ? cfg.m : cfg.n * (cfg.c - cfg.d) + cfg.d;
      if (m < cfg.c)
        throw ParamError("hypothesis violated: need m >= c measures");
      fam = gen_random_family(cfg.d, m, cfg.seed);
    } else {
      throw ParamError("gen kind must be 'random' or 'adversarial'");
    }
    json report;
    report["command"] = "gen " + cfg.kind;
    report["params"] = params_json(cfg);
    report["m"] = fam.size();
    if (!cfg.out_path.empty()) {
      write_file(cfg.out_path, family_to_json(fam));
      report["family"] = cfg.out_path;
    } else {
      report["family_json"] = json::parse(family_to_json(fam));
    }
    if (!cfg.svg_path.empty() && cfg.d == 2) {
      write_file(cfg.svg_path, render_svg(fam, nullptr));
      report["svg"] = cfg.svg_path;
    }
    return finish(kExitOk, report);
  } catch (const GuaranteeError& e) {
    return finish(kExitViolated, json{{"error", e.what()}});
  } catch (const std::exception& e) {
    return finish(kExitParam, json{{"error", e.what()}});
  }
}

RunOutcome cmd_run(const RunConfig& cfg) {
  try {
    if (cfg.theorem == "fan") return run_fan(cfg);
    if (cfg.theorem == "t5") return run_t5(cfg);
    if (cfg.theorem == "t7") return run_fraction(cfg, false);
    if (cfg.theorem == "t8") return run_fraction(cfg, true);
    if (cfg.theorem == "optimal") return run_optimal(cfg);
    if (cfg.theorem == "poset") return run_poset(cfg);
    throw ParamError("theorem must be one of fan|t5|t7|t8|optimal|poset");
  } catch (const GuaranteeError& e) {
    return finish(kExitViolated, json{{"error", e.what()}});
  } catch (const std::exception& e) {
    return finish(kExitParam, json{{"error", e.what()}});
  }
}

}  // namespace fairfan
