#pragma once

#include <string>
#include <vector>

#include "p2sd/json_io.hpp"
#include "p2sd/symfunc.hpp"

namespace p2sd {

enum class CheckStatus { pass, fail, boundary, skipped };

std::string to_string(CheckStatus s);
CheckStatus parse_check_status(const std::string& s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::fail;
  json witness = json::object();
  double elapsed_ms = 0;
};

struct VerificationReport {
  int m = 0;
  std::vector<CheckResult> checks;

  /// True when every check that ran passed.
  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
};

struct ReportOptions {
  int kronecker_cap = 14;  // largest symmetric group S_N used for Kronecker checks
  unsigned slope_search_depth = kDefaultSlopeDepth;
  int parallelism = 1;
};

/// det(X) times S^{m,m}(W) X^v - S^{m,m-1}(W) X over X = C^3, W = S^2 X:
/// s_{m,m}[s2] s_{1,1} - s_{m,m-1}[s2] s_{2,1,1} in three variables.
SchurVector kernel_character(int m);

/// The subtracted product s_{m,m-1}[s2] s_{2,1,1}.
SchurVector kernel_subtrahend(int m);

/// (3m-2k+1, m+2k+1) for 0 <= k <= m/2.
std::vector<Partition> claimed_partitions(int m);

CheckResult verify_orthogonality_and_resolution(int m, const ReportOptions& opts = {});
CheckResult verify_theorem_sec(int m);
CheckResult verify_summand(int m);
CheckResult verify_sln_inv(int m, const ReportOptions& opts = {});
CheckResult verify_dag(int m, const ReportOptions& opts = {});

VerificationReport verify_one(int m, const ReportOptions& opts = {});

/// Reports for m_from..m_to in increasing m, independent of scheduling.
std::vector<VerificationReport> full_report(int m_from, int m_to, const ReportOptions& opts = {});

json report_to_json(const VerificationReport& r, bool include_timing = true);
VerificationReport report_from_json(const json& j);

}  // namespace p2sd
