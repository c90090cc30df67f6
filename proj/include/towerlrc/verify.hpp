// SPDX-License-Identifier: Apache-2.0

#ifndef TOWERLRC_VERIFY_HPP
#define TOWERLRC_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "towerlrc/lrc.hpp"

namespace towerlrc {

enum class Suite { Smoke, Partitions, Lemma, Corollary, Props, Recovery, Bounds, Genus, All };

/// Throws UsageError for an unknown name.
Suite parse_suite(std::string_view name);
const char* to_string(Suite suite);

/// Outcome of one checkable claim. `claim` names the statement a failure
/// contradicts; `detail` carries the measured values.
struct CheckResult {
  std::string name;
  std::string claim;
  bool ok = false;
  bool skipped = false;
  nlohmann::ordered_json detail = nlohmann::ordered_json::object();

  nlohmann::ordered_json to_json() const;
};

CheckResult check_smoke(int threads = 1);
CheckResult check_partitions(int q);
CheckResult check_zero_count_lemma(int q, int max_level = 3);
CheckResult check_common_zero(int q, int low, int high);
CheckResult check_pole_q_distance(int q, int threads = 1);
CheckResult check_half_pole_distance(int q, int threads = 1);
CheckResult check_recovery(const CodeSpec& spec, int trials, std::uint64_t seed);
CheckResult check_margins(int q);
CheckResult check_half_pole_point(int q);
CheckResult check_lines(int q);
CheckResult check_gv_curve(int q, int r);
CheckResult check_figures();
CheckResult check_genus(int q, int max_level = 6);

struct VerifyOptions {
  int q = 5;
  Suite suite = Suite::All;
  std::uint64_t seed = 42;
  int threads = 1;
  int recovery_trials = 1000;
};

struct VerifyReport {
  int q = 0;
  Suite suite = Suite::All;
  std::vector<CheckResult> checks;
  /// Name and claim of the first failing check, if any. Checks after it
  /// are not run.
  std::optional<std::string> first_failure;

  bool ok() const { return !first_failure; }
  nlohmann::ordered_json to_json() const;
};

VerifyReport run_verify(const VerifyOptions& options);

}  // namespace towerlrc

#endif  // TOWERLRC_VERIFY_HPP
