#include <doctest.h>

#include <cstdio>

#include "fairfan/cli.hpp"
#include "fairfan/hamsandwich.hpp"
#include "fairfan/instances.hpp"
#include "fairfan/json_io.hpp"
#include "fairfan/svg.hpp"

using namespace fairfan;

namespace {

struct TempPath {
  std::string path;
  explicit TempPath(const std::string& name) : path("/tmp/fairfan_test_" + name) {}
  ~TempPath() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("family JSON round-trips byte-identically") {
  for (uint64_t seed : {3u, 4u}) {
    MeasureFamily fam = gen_random_family(2, 5, seed);
    std::string once = family_to_json(fam);
    std::string twice = family_to_json(family_from_json(once));
    CHECK(once == twice);
  }
  // Non-canonical rational spellings canonicalize on the first pass.
  MeasureFamily fam = family_from_json(R"({
    "dimension": 1,
    "measures": [
      {"label": "a", "bump_radius": "2/16",
       "atoms": [{"point": ["4/2"], "weight": "3"}]}
    ]
  })");
  CHECK(fam.measures[0].bump_radius == rat(1, 8));
  CHECK(fam.measures[0].atoms[0].pos[0] == Rat(2));
  std::string canon = family_to_json(fam);
  CHECK(canon == family_to_json(family_from_json(canon)));
}

TEST_CASE("partition JSON round-trips for both provenance kinds") {
  MeasureFamily fam = gen_random_family(2, 2, 5, 8);
  auto part = equipartition_2pow(fam.measures[0], fam.measures[1], 2);
  std::string once = partition_to_json(part);
  ConvexPartition back = partition_from_json(once);
  CHECK(partition_to_json(back) == once);
  REQUIRE(back.cut_tree);
  // The replayed tree reproduces the same exact masses.
  auto m0 = region_masses_for(part, tag_measure(fam.measures[0], 0));
  auto m0b = region_masses_for(back, tag_measure(fam.measures[0], 0));
  CHECK(m0 == m0b);
}

TEST_CASE("gen is deterministic in the seed and checks hypotheses") {
  RunConfig cfg;
  cfg.command = "gen";
  cfg.kind = "random";
  cfg.d = 2;
  cfg.n = 5;
  cfg.c = 4;
  cfg.seed = 7;
  auto a = cmd_gen(cfg);
  auto b = cmd_gen(cfg);
  CHECK(a.exit_code == kExitOk);
  CHECK(a.report_json == b.report_json);
  CHECK(a.report_json.find("\"m\": 12") != std::string::npos);  // m defaults to n(c-d)+d

  RunConfig bad = cfg;
  bad.m = 3;  // below c
  CHECK(cmd_gen(bad).exit_code == kExitParam);

  RunConfig adv = cfg;
  adv.kind = "adversarial";
  adv.d = 1;
  adv.n = 2;
  adv.c = 2;
  auto g = cmd_gen(adv);
  CHECK(g.exit_code == kExitOk);
  CHECK(g.report_json.find("\"m\": 2") != std::string::npos);
}

TEST_CASE("run dispatches with the exit-code contract") {
  TempPath fam_path("fam.json");
  {
    RunConfig cfg;
    cfg.command = "gen";
    cfg.kind = "random";
    cfg.d = 2;
    cfg.n = 2;
    cfg.c = 3;
    cfg.seed = 11;
    cfg.out_path = fam_path.path;
    REQUIRE(cmd_gen(cfg).exit_code == kExitOk);
  }
  RunConfig run;
  run.command = "run";
  run.theorem = "fan";
  run.n = 2;
  run.c = 3;
  run.in_path = fam_path.path;
  auto fan_once = cmd_run(run);
  CHECK(fan_once.exit_code == kExitOk);
  CHECK(fan_once.report_json == cmd_run(run).report_json);

  run.theorem = "t5";
  CHECK(cmd_run(run).exit_code == kExitOk);
  run.n = 3;  // power-of-two scope limit
  CHECK(cmd_run(run).exit_code == kExitParam);

  RunConfig poset;
  poset.command = "run";
  poset.theorem = "poset";
  poset.m = 4;
  poset.n = 2;
  poset.c = 3;
  auto p = cmd_run(poset);
  CHECK(p.exit_code == kExitOk);
  CHECK(p.report_json.find("fiber is empty") != std::string::npos);

  RunConfig nonsense;
  nonsense.command = "run";
  nonsense.theorem = "nope";
  CHECK(cmd_run(nonsense).exit_code == kExitParam);
}

TEST_CASE("t7 certifies the quarter fraction at n=2, c=4") {
  TempPath fam_path("t7fam.json");
  {
    RunConfig cfg;
    cfg.command = "gen";
    cfg.kind = "random";
    cfg.d = 2;
    cfg.n = 2;
    cfg.c = 4;
    cfg.seed = 9;
    cfg.out_path = fam_path.path;
    REQUIRE(cmd_gen(cfg).exit_code == kExitOk);
  }
  RunConfig run;
  run.command = "run";
  run.theorem = "t7";
  run.n = 2;
  run.c = 4;
  run.in_path = fam_path.path;
  auto out = cmd_run(run);
  CHECK(out.exit_code == kExitOk);
  CHECK(out.report_json.find("\"epsilon\": \"1/4\"") != std::string::npos);
}

TEST_CASE("svg output is deterministic and well-formed") {
  MeasureFamily fam = gen_random_family(2, 3, 13);
  auto part = equipartition_2pow(fam.measures[0], fam.measures[1], 1);
  std::string svg = render_svg(fam, &part);
  CHECK(svg == render_svg(fam, &part));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("<circle") != std::string::npos);
  CHECK(svg.find("<line") != std::string::npos);
  CHECK_THROWS_AS(render_svg(gen_random_family(3, 3, 1), nullptr), ParamError);
}
