// SPDX-License-Identifier: Apache-2.0
//
// One PASS/FAIL line per acceptance criterion. Time limits are wall-clock
// seconds for the work of that criterion alone.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "towerlrc/bounds.hpp"
#include "towerlrc/lrc.hpp"
#include "towerlrc/verify.hpp"
#include "towerlrc/witness.hpp"

using namespace towerlrc;

namespace {

int failures = 0;

void criterion(const std::string& id, const std::string& what, double limit_s,
               const std::function<std::string()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string problem;
  try {
    problem = body();
  } catch (const std::exception& e) {
    problem = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (problem.empty() && secs >= limit_s) problem = "took longer than the limit";
  const bool ok = problem.empty();
  failures += !ok;
  std::printf("%s [%s] %s (%.2fs, limit %.0fs)%s%s\n", ok ? "PASS" : "FAIL", id.c_str(), what.c_str(), secs, limit_s,
              ok ? "" : ": ", problem.c_str());
  std::fflush(stdout);
}

std::string failed(const CheckResult& c) {
  if (c.ok && !c.skipped) return "";
  if (c.skipped) return c.name + " skipped";
  return c.name + ": " + c.detail.value("first_violation", c.claim);
}

std::string witness_values(const CheckResult& c, std::uint64_t n, std::uint64_t k, std::uint64_t d) {
  if (auto f = failed(c); !f.empty()) return f;
  const auto& p = c.detail["params"];
  if (p["n"] != n) return "n = " + p["n"].dump();
  if (p["k_rank"] != k) return "k_rank = " + p["k_rank"].dump();
  if (p["d_designed"] != d || p["d_witness"] != d || p["d_exact"] != d)
    return "distance values " + p.dump();
  return "";
}

}  // namespace

int main() {
  criterion("1", "smoke code q=3 i=1 l=1: n=18, k=4, d_designed=12, exhaustive d >= 12 over 6560 words", 1.0, [] {
    const CheckResult c = check_smoke();
    if (auto f = failed(c); !f.empty()) return f;
    const auto& p = c.detail["params"];
    if (p["k_rank"] != 4 || p["n"] != 18 || p["d_designed"] != 12) return "params " + p.dump();
    if (c.detail["codewords_searched"] != 6560) return std::string("wrong number of codewords");
    return std::string();
  });
  criterion("2a", "pole order q, q=5: n=500, k=120, witness weight = designed = 200", 10.0,
            [] { return witness_values(check_pole_q_distance(5), 500, 120, 200); });
  criterion("2b", "pole order q, q=7: n=2058, k=336, witness weight = designed = 1176", 60.0,
            [] { return witness_values(check_pole_q_distance(7), 2058, 336, 1176); });
  criterion("3", "half pole order, q=7, l=14: k=630, witness weight = designed = 833", 60.0,
            [] { return witness_values(check_half_pole_distance(7), 2058, 630, 833); });
  criterion("4", "coordinate zero counts at q=5, levels <= 3: q^j on S_0, 0 elsewhere", 30.0,
            [] { return failed(check_zero_count_lemma(5, 3)); });
  criterion("5", "common zeros at q=5, i=0, j=3: all 400 pairs over 2500 places", 10.0, [] {
    const CheckResult c = check_common_zero(5, 0, 3);
    if (auto f = failed(c); !f.empty()) return f + " (" + c.detail.dump() + ")";
    if (c.detail["places"] != 2500 || c.detail["pairs"] != 400) return "sizes " + c.detail.dump();
    return std::string();
  });
  criterion("6", "partition structure at q=5 and q=7", 30.0, [] {
    for (int q : {5, 7})
      if (auto f = failed(check_partitions(q)); !f.empty()) return f;
    return std::string();
  });
  criterion("7", "1000 seeded erase/repair trials at q=5 i=2 l=5, each reading 4 symbols", 10.0, [] {
    const CheckResult c = check_recovery(CodeSpec{5, 2, 5}, 1000, 42);
    if (auto f = failed(c); !f.empty()) return f;
    if (c.detail["recovered"] != 1000 || c.detail["locality"] != 4) return "detail " + c.detail.dump();
    return std::string();
  });
  criterion("8", "exact margins, half-pole point margin 2/q^2 and line ordering at q = 5, 7, 11", 30.0, [] {
    for (int q : {5, 7, 11}) {
      if (auto f = failed(check_margins(q)); !f.empty()) return f;
      const CheckResult h = check_half_pole_point(q);
      if (auto f = failed(h); !f.empty()) return f;
      if (half_pole_point(q).line_margin != Rational(2, q * q)) return std::string("margin is not 2/q^2");
      if (auto f = failed(check_lines(q)); !f.empty()) return f;
    }
    return std::string();
  });
  criterion("9", "GV-type curve at q=17 r=16 and figure datasets", 30.0, [] {
    if (auto f = failed(check_gv_curve(17, 16)); !f.empty()) return f;
    if (auto f = failed(check_figures()); !f.empty()) return f;
    return std::string();
  });
  criterion("10", "verify --suite all --q 5 is reproducible byte for byte", 60.0, [] {
    VerifyOptions opt;
    opt.q = 5;
    const VerifyReport a = run_verify(opt);
    const VerifyReport b = run_verify(opt);
    if (!a.ok()) return "verify failed: " + *a.first_failure;
    if (a.to_json().dump() != b.to_json().dump()) return std::string("outputs differ");
    return std::string();
  });
  criterion("genus", "genus closed form for j <= 6 and split counts at q = 3, 5, 7", 30.0, [] {
    for (int q : {3, 5, 7})
      if (auto f = failed(check_genus(q, 6)); !f.empty()) return f;
    return std::string();
  });

  std::printf("%s: %d failing\n", failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED", failures);
  return failures == 0 ? 0 : 1;
}
