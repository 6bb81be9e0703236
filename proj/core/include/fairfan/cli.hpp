#pragma once

#include <cstdint>
#include <string>

namespace fairfan {

// Exit-code contract: 0 = every certified guarantee holds, 1 = a guarantee
// failed (potential bug or falsified claim), 2 = parameter or scope error.
constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitParam = 2;

struct RunConfig {
  std::string command;  // "gen" or "run"
  std::string kind;     // gen: "random" | "adversarial"
  std::string theorem;  // run: fan | t5 | t7 | t8 | optimal | poset
  int d = 2;
  int n = 2;
  int c = 2;
  int m = -1;  // -1 = default for the command
  std::string alpha;  // rational, e.g. "1/5"
  uint64_t seed = 0;
  int candidates = 500;  // falsification budget for `run optimal`
  std::string mode;      // t5: point|nu ; poset: one|sum
  std::string in_path, out_path, svg_path;
};

struct RunOutcome {
  int exit_code = kExitOk;
  std::string report_json;
};

RunOutcome cmd_gen(const RunConfig& cfg);
RunOutcome cmd_run(const RunConfig& cfg);

}  // namespace fairfan
