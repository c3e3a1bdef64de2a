#pragma once

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "pg/cli/hash.hpp"
#include "pg/exactalg/json_io.hpp"

namespace pg {

/// Outcome of one CLI command. `results` is deterministic for given inputs;
/// timings live outside it.
struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  std::string status = "pass";  // pass, fail or partial
  std::vector<std::string> witness;
  json timings = json::object();
  double wall_time = 0;

  std::string inputs_digest() const { return sha256_hex(command + "\n" + inputs.dump()); }
  int exit_code() const { return status == "fail" ? 1 : 0; }
};

inline std::string seconds_str(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", s);
  return buf;
}

inline json to_json(const Report& r) {
  json j{{"command", r.command},
         {"inputs", r.inputs},
         {"inputs_digest", r.inputs_digest()},
         {"results", r.results},
         {"status", r.status},
         {"wall_time", seconds_str(r.wall_time)}};
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (!r.timings.empty()) j["timings"] = r.timings;
  return j;
}

/// Runs `body` on a fresh report and records the wall time.
template <typename Fn>
Report timed_report(std::string command, json inputs, Fn body) {
  Report r;
  r.command = std::move(command);
  r.inputs = std::move(inputs);
  auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.status == "fail" && r.witness.empty()) r.witness.push_back("verification failed");
  return r;
}

}  // namespace pg
