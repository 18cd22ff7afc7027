#include "p2sd/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <stdexcept>
#include <thread>

#include "p2sd/chern.hpp"
#include "p2sd/exceptional.hpp"
#include "p2sd/hilbtheta.hpp"

namespace p2sd {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::boundary: return "boundary";
    case CheckStatus::skipped: return "skipped";
  }
  return "fail";
}

CheckStatus parse_check_status(const std::string& s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  if (s == "boundary") return CheckStatus::boundary;
  if (s == "skipped") return CheckStatus::skipped;
  throw std::invalid_argument("unknown check status '" + s + "'");
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckStatus::pass || c.status == CheckStatus::skipped;
  });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

SchurVector kernel_subtrahend(int m) {
  return lr_product(schur_plethysm_s2(Partition{m, m - 1}, 3), SchurVector::single(Partition{2, 1, 1}, 3));
}

SchurVector kernel_character(int m) {
  if (m < 1) throw std::invalid_argument("kernel_character needs m >= 1");
  SchurVector plus = lr_product(schur_plethysm_s2(Partition{m, m}, 3), SchurVector::single(Partition{1, 1}, 3));
  return plus - kernel_subtrahend(m);
}

std::vector<Partition> claimed_partitions(int m) {
  std::vector<Partition> out;
  for (int k = 0; 2 * k <= m; ++k) out.push_back(Partition{3 * m - 2 * k + 1, m + 2 * k + 1});
  return out;
}

namespace {

CheckResult make(std::string name, bool ok, json witness) {
  return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(witness), 0};
}

CheckResult failure(std::string name, const std::exception& err) {
  CheckStatus status = dynamic_cast<const BoundaryError*>(&err) ? CheckStatus::boundary : CheckStatus::fail;
  return {std::move(name), status, json{{"error", err.what()}}, 0};
}

json nonzero_entries(const std::vector<std::pair<Partition, BigInt>>& entries) {
  json out = json::array();
  for (const auto& [nu, g] : entries)
    if (g != 0) out.push_back({{"nu", nu}, {"g", bigint_to_json(g)}});
  return out;
}

}  // namespace

CheckResult verify_orthogonality_and_resolution(int m, const ReportOptions& opts) {
  const std::string name = "orthogonality_and_resolution";
  try {
    ChernCharacter e = e_class(m);
    Rational pairing = euler_pairing(e, f_class());
    ResolutionData res = resolution_exponents(e, opts.slope_search_depth);
    Rational chi_gamma = chi(multiply(e, eps(DyadicRational(-1, 1)).chern));
    bool ok = pairing == 0 && res.certificate.gamma.slope == Rational(-1, 2) && res.m1 == m &&
              res.m2 == 2 * m - 1 && res.m3 == 1 &&
              res.bundles == std::array<std::string, 3>{"O(-2)", "O", "T(-1)"} && chi_gamma == 1;
    return make(name, ok,
                {{"e", e},
                 {"pairing", format_rational(pairing)},
                 {"certificate", certificate_to_json(res.certificate)},
                 {"resolution", resolution_to_json(res)},
                 {"chi_e_E_gamma", format_rational(chi_gamma)}});
  } catch (const DomainError& err) {
    return failure(name, err);
  }
}

CheckResult verify_theorem_sec(int m) {
  const std::string name = "theorem_sec";
  try {
    ThetaSections theta = hilb2_theta_sections(e_class(m));
    SchurVector expected = theta_closed_form(m);
    bool part_a = theta.sections == expected;

    SchurVector kernel = kernel_character(m);
    SchurVector subtrahend = kernel_subtrahend(m);
    std::vector<Partition> claimed = claimed_partitions(m);
    bool part_b = true;
    json coefficients = json::array();
    for (const Partition& p : claimed) {
      BigInt c = kernel.coeff(p);
      part_b = part_b && c >= 1;
      coefficients.push_back({{"partition", p}, {"coeff", bigint_to_json(c)}});
    }
    bool no_two_row = std::all_of(subtrahend.terms().begin(), subtrahend.terms().end(),
                                  [](const auto& t) { return t.first.length() > 2; });

    std::set<Partition> side_a, side_b(claimed.begin(), claimed.end());
    for (const auto& [p, c] : theta.sections.terms()) side_a.insert(p);
    bool lists_match = side_a == side_b;

    SchurVector positive(3);
    for (const auto& [p, c] : kernel.terms())
      if (c > 0) positive.add_term(p, c);

    return make(name, part_a && part_b && no_two_row && lists_match,
                {{"a_sections", schur_to_json(theta.sections)},
                 {"a_dimension", bigint_to_json(theta.dimension)},
                 {"a_matches_closed_form", part_a},
                 {"b_coefficients", coefficients},
                 {"b_contained", part_b},
                 {"subtrahend_has_no_two_row_terms", no_two_row},
                 {"a_b_lists_match", lists_match},
                 {"conjectural_section_space", schur_to_json(positive)}});
  } catch (const DomainError& err) {
    return failure(name, err);
  }
}

CheckResult verify_summand(int m) {
  SchurVector plethysm = schur_plethysm_s2(Partition{m, m}, 3);
  bool ok = true;
  json coefficients = json::array();
  for (int k = 0; 2 * k <= m; ++k) {
    Partition p{3 * m - 2 * k, m + 2 * k};
    BigInt c = plethysm.coeff(p);
    ok = ok && c == 1;
    coefficients.push_back({{"k", k}, {"partition", p}, {"coeff", bigint_to_json(c)}});
  }
  return make("summand", ok, {{"coefficients", coefficients}});
}

CheckResult verify_sln_inv(int m, const ReportOptions& opts) {
  const std::string name = "sln_inv";
  if (m < 2) return {name, CheckStatus::skipped, {{"reason", "needs m >= 2"}}, 0};
  if (2 * m > opts.kronecker_cap)
    return {name, CheckStatus::skipped,
            {{"reason", "S_" + std::to_string(2 * m) + " exceeds the Kronecker cap " +
                            std::to_string(opts.kronecker_cap)}},
            0};
  const int n = 2 * m - 1;
  const bool cross_check = m <= 3;
  bool consistent = true;

  // (a): g_{(1^n), nu, (2^{m-1},1)} computed as g_{(n), nu', (2^{m-1},1)}
  std::vector<int> parts_a(m - 1, 2);
  parts_a.push_back(1);
  Partition lambda_a(parts_a);
  std::vector<std::pair<Partition, BigInt>> table_a;
  bool part_a = true;
  for (const Partition& nu : partitions_of(n, 6)) {
    BigInt g = kronecker(Partition{n}, conjugate(nu), lambda_a);
    if (cross_check) consistent = consistent && g == kronecker(rectangle(1, n), nu, lambda_a);
    part_a = part_a && g == (nu == Partition{m, m - 1} ? 1 : 0);
    table_a.emplace_back(nu, g);
  }

  // (b): g_{(2,1^{n-1}), nu, (2^m)} computed as g_{(n,1), nu', (2^m)}
  Partition lambda_b = rectangle(2, m);
  std::vector<int> hook_parts(n, 1);
  hook_parts[0] = 2;
  Partition hook(hook_parts);  // (2,1^{n-1})
  std::vector<std::pair<Partition, BigInt>> table_b;
  bool part_b = true;
  for (const Partition& nu : partitions_of(2 * m, 6)) {
    BigInt g = kronecker(Partition{n, 1}, conjugate(nu), lambda_b);
    if (cross_check) consistent = consistent && g == kronecker(hook, nu, lambda_b);
    bool expected = nu == Partition{m + 1, m - 1} || nu == Partition{m, m - 1, 1};
    part_b = part_b && g == (expected ? 1 : 0);
    table_b.emplace_back(nu, g);
  }

  return make(name, part_a && part_b && consistent,
              {{"a_nonzero", nonzero_entries(table_a)},
               {"b_nonzero", nonzero_entries(table_b)},
               {"a_pass", part_a},
               {"b_pass", part_b},
               {"unconjugated_crosscheck", cross_check ? json(consistent) : json("not run")}});
}

CheckResult verify_dag(int m, const ReportOptions& opts) {
  const std::string name = "dag";
  ChernCharacter v = v_class(m);
  ChernCharacter g = dual(v);
  json witness{{"v", v}, {"v_dual", g}};
  SlopeCertificate cert;
  try {
    cert = corresponding_slope(g, opts.slope_search_depth);
  } catch (const NoCorrespondingSlope& err) {
    witness["gamma"] = nullptr;
    witness["error"] = err.what();
    // no exceptional interval contains mu0, so certainly gamma != 0
    return make(name, m >= 6, witness);
  } catch (const DomainError& err) {
    CheckResult r = failure(name, err);
    r.witness.update(witness);
    return r;
  }
  witness["certificate"] = certificate_to_json(cert);
  const bool gamma_zero = cert.gamma.slope == 0;
  if (m >= 6) return make(name, !gamma_zero, witness);
  try {
    ResolutionData res = resolution_exponents(g, opts.slope_search_depth);
    witness["resolution"] = resolution_to_json(res);
    bool ok = gamma_zero && res.m1 == m + 2 && res.m2 == 3 && res.m3 == 2 * m + 1 &&
              res.bundles == std::array<std::string, 3>{"O(-2)", "O(-1)", "O"};
    return make(name, ok, witness);
  } catch (const DomainError& err) {
    CheckResult r = failure(name, err);
    r.witness.update(witness);
    return r;
  }
}

namespace {

template <class Fn>
CheckResult timed(Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  CheckResult r = fn();
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

VerificationReport verify_one(int m, const ReportOptions& opts) {
  if (m < 1) throw std::invalid_argument("verification needs m >= 1");
  VerificationReport report;
  report.m = m;
  report.checks.push_back(timed([&] { return verify_orthogonality_and_resolution(m, opts); }));
  report.checks.push_back(timed([&] { return verify_theorem_sec(m); }));
  report.checks.push_back(timed([&] { return verify_summand(m); }));
  report.checks.push_back(timed([&] { return verify_sln_inv(m, opts); }));
  report.checks.push_back(timed([&] { return verify_dag(m, opts); }));
  return report;
}

std::vector<VerificationReport> full_report(int m_from, int m_to, const ReportOptions& opts) {
  if (m_from < 1 || m_to < m_from) throw std::invalid_argument("full_report needs 1 <= m_from <= m_to");
  const int count = m_to - m_from + 1;
  std::vector<VerificationReport> reports(static_cast<std::size_t>(count));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) reports[i] = verify_one(m_from + i, opts);
  };
  int threads = std::clamp(opts.parallelism, 1, count);
  std::vector<std::jthread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return reports;
}

json report_to_json(const VerificationReport& r, bool include_timing) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json entry{{"name", c.name}, {"status", to_string(c.status)}, {"witness", c.witness}};
    if (include_timing) entry["elapsed_ms"] = c.elapsed_ms;
    checks.push_back(std::move(entry));
  }
  return {{"m", r.m}, {"checks", checks}, {"all_passed", r.all_passed()}};
}

VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  r.m = j.at("m").get<int>();
  for (const auto& c : j.at("checks")) {
    CheckResult check;
    check.name = c.at("name").get<std::string>();
    check.status = parse_check_status(c.at("status").get<std::string>());
    check.witness = c.at("witness");
    check.elapsed_ms = c.value("elapsed_ms", 0.0);
    r.checks.push_back(std::move(check));
  }
  return r;
}

}  // namespace p2sd
