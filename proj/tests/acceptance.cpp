// Acceptance run: one PASS/FAIL line per criterion, each with its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "oracles.hpp"
#include "p2sd/report.hpp"

using namespace p2sd;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int number, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && elapsed >= limit_s) {
    out.ok = false;
    out.detail = "time limit " + std::to_string(limit_s) + " s exceeded";
  }
  if (!out.ok) ++failures;
  std::printf("%s %d. %s (%.3f s, limit %.0f s)%s%s\n", out.ok ? "PASS" : "FAIL", number, title.c_str(), elapsed,
              limit_s, out.detail.empty() ? "" : ": ", out.detail.c_str());
  std::fflush(stdout);
}

Rational half(long p) { return Rational(p, 2); }

BigInt table_entry(const KroneckerTable& t, const Partition& mu, const Partition& nu) {
  auto it = t.find({mu, nu});
  return it == t.end() ? BigInt(0) : it->second;
}

}  // namespace

int main() {
  criterion(1, "orthogonality chi(e(m)*f) = 0 for m = 1..100", 1, [](Outcome& o) {
    for (long m = 1; m <= 100; ++m)
      o.require(euler_pairing(e_class(m), f_class()) == 0, "nonzero pairing at m = " + std::to_string(m));
  });

  criterion(2, "corresponding slope of e(m) is -1/2 with a strict certificate, m = 1..100", 5, [](Outcome& o) {
    for (long m = 1; m <= 100; ++m) {
      SlopeCertificate c = corresponding_slope(e_class(m));
      std::string at = " at m = " + std::to_string(m);
      o.require(c.gamma.slope == half(-1), "gamma = " + format_rational(c.gamma.slope) + at);
      Surd x = interval_radius(c.gamma);
      o.require(c.lower == -x + c.gamma.slope && c.upper == x + c.gamma.slope, "certificate bounds" + at);
      o.require(c.mu0 == mu_zero(e_class(m)), "certificate mu0" + at);
      o.require(compare(c.lower, c.mu0) < 0 && compare(c.mu0, c.upper) < 0, "non-strict certificate" + at);
    }
  });

  criterion(3, "resolution of e(m) is (m, 2m-1, 1) over (O(-2), O, T(-1)), m = 1..100", 5, [](Outcome& o) {
    for (long m = 1; m <= 100; ++m) {
      ResolutionData r = resolution_exponents(e_class(m));
      std::string at = " at m = " + std::to_string(m);
      o.require(r.m1 == m && r.m2 == 2 * m - 1 && r.m3 == 1, "exponents" + at);
      o.require(r.bundles == std::array<std::string, 3>{"O(-2)", "O", "T(-1)"}, "bundles" + at);
    }
  });

  criterion(4, "dual (dagger) resolution: gamma = 0 and (m+2, 3, 2m+1) for m = 1..5, gamma != 0 at m = 6", 5,
            [](Outcome& o) {
              for (int m = 1; m <= 5; ++m) {
                CheckResult c = verify_dag(m);
                o.require(c.status == CheckStatus::pass, "verify_dag failed at m = " + std::to_string(m));
                ResolutionData r = resolution_exponents(dual(v_class(m)));
                o.require(r.certificate.gamma.slope == 0 && r.m1 == m + 2 && r.m2 == 3 && r.m3 == 2 * m + 1,
                          "exponents at m = " + std::to_string(m));
              }
              CheckResult six = verify_dag(6);
              o.require(six.status == CheckStatus::pass, "verify_dag at m = 6");
              o.require(corresponding_slope(dual(v_class(6))).gamma.slope != 0, "gamma = 0 at m = 6");
            });

  criterion(5, "theta sections on the Hilbert scheme of 2 points match the closed form, m = 1..20", 5,
            [](Outcome& o) {
              for (int m = 1; m <= 20; ++m)
                o.require(hilb2_theta_sections(e_class(m)).sections == theta_closed_form(m),
                          "sections at m = " + std::to_string(m));
              auto ssyt_dim = [](const SchurVector& v) {
                BigInt total = 0;
                for (const auto& [p, c] : v.terms()) total += c * oracle::ssyt_count(p, 3);
                return total;
              };
              ThetaSections m1 = hilb2_theta_sections(e_class(1)), m2 = hilb2_theta_sections(e_class(2));
              o.require(m1.dimension == 27 && ssyt_dim(m1.sections) == 27, "dimension at m = 1");
              o.require(m2.dimension == 111 && ssyt_dim(m2.sections) == 111, "dimension at m = 2");
            });

  criterion(6, "summand coefficients in s_(m,m)[s_2] are exactly 1, m = 1..10", 60, [](Outcome& o) {
    for (int m = 1; m <= 10; ++m)
      o.require(verify_summand(m).status == CheckStatus::pass, "m = " + std::to_string(m));
  });

  criterion(7, "Kronecker identities (a) and (b) for m = 2..5, substitution cross-check at m = 2", 600, [](Outcome& o) {
    for (int m = 2; m <= 5; ++m)
      o.require(verify_sln_inv(m).status == CheckStatus::pass, "m = " + std::to_string(m));
    KroneckerTable a = kronecker_via_substitution({2, 1}, 3, 3);
    for (const Partition& nu : partitions_of(3))
      o.require(table_entry(a, {1, 1, 1}, nu) == (nu == Partition{2, 1} ? 1 : 0),
                "substitution (a) at nu = " + nu.to_string());
    KroneckerTable b = kronecker_via_substitution({2, 2}, 3, 4);
    for (const Partition& nu : partitions_of(4)) {
      bool expected = nu == Partition{3, 1} || nu == Partition{2, 1, 1};
      o.require(table_entry(b, {2, 1, 1}, nu) == (expected ? 1 : 0), "substitution (b) at nu = " + nu.to_string());
    }
  });

  criterion(8, "kernel character contains every claimed summand, subtrahend has no two-row terms, m = 1..8", 300,
            [](Outcome& o) {
              for (int m = 1; m <= 8; ++m) {
                SchurVector d = kernel_character(m);
                for (const Partition& p : claimed_partitions(m))
                  o.require(d.coeff(p) >= 1, "coefficient of " + p.to_string() + " at m = " + std::to_string(m));
                for (auto v = kernel_subtrahend(m); const auto& [p, c] : v.terms())
                  o.require(p.length() == 3, "two-row subtrahend term at m = " + std::to_string(m));
              }
            });

  criterion(9, "property suites", 600, [](Outcome& o) {
    for (int n = 0; n <= 16; ++n)
      for (const Partition& nu : partitions_of(n, 2))
        for (int a = 0; a <= n; ++a)
          for (const Partition& mu : partitions_of(a, 2))
            for (const Partition& lambda : partitions_of(n - a, 3))
              o.require(lr_two_row(nu, mu, lambda) == lr_coefficient(nu, mu, lambda),
                        "two-row LR at " + nu.to_string() + "/" + mu.to_string() + ", " + lambda.to_string());

    for (int n = 1; n <= 8; ++n) {
      auto parts = partitions_of(n);
      for (const Partition& lambda : parts)
        for (const Partition& mu : parts) {
          BigInt sum = 0;
          for (const Partition& cls : parts) sum += class_size(cls) * mn_character(lambda, cls) * mn_character(mu, cls);
          o.require(sum == (lambda == mu ? factorial(n) : BigInt(0)), "orthogonality at N = " + std::to_string(n));
        }
    }

    for (int size = 0; size <= 6; ++size)
      for (const Partition& lambda : partitions_of(size))
        for (int n = 1; n <= 3; ++n)
          for (int k = 1; k <= 3; ++k) {
            BigInt total = 0;
            for (const Partition& mu : partitions_of(size, n))
              for (const Partition& nu : partitions_of(size, k))
                total += kronecker(mu, nu, lambda) * gl_dimension(mu, n) * gl_dimension(nu, k);
            o.require(total == gl_dimension(lambda, n * k), "Kronecker dimension identity at " + lambda.to_string());
          }

    for (int n = 0; n <= 8; ++n)
      for (const Partition& lambda : partitions_of(n))
        o.require(total_dimension(schur_plethysm_s2(lambda, 3), 3) == gl_dimension(lambda, 6),
                  "plethysm dimension at " + lambda.to_string());

    std::vector<ExceptionalSlope> slopes;
    for (long p = -2 * 32; p <= 2 * 32; ++p) slopes.push_back(eps(DyadicRational(p, 5)));
    for (std::size_t i = 0; i < slopes.size(); ++i) {
      const ExceptionalSlope& e = slopes[i];
      o.require(euler_pairing(dual(e.chern), e.chern) == 1, "rigidity at " + format_rational(e.slope));
      for (std::size_t j = i + 1; j < slopes.size(); ++j) {
        const ExceptionalSlope& f = slopes[j];
        o.require(e.slope < f.slope, "order at " + format_rational(e.slope));
        o.require(compare(interval_radius(e) + e.slope, -interval_radius(f) + f.slope) <= 0,
                  "overlapping intervals " + format_rational(e.slope) + ", " + format_rational(f.slope));
      }
    }

    for (int d = 0; d <= 10; ++d) {
      SchurVector case_1a(3), case_1c(3);
      for (const Partition& lambda : partitions_of(d, 2)) {
        case_1a.add_term(doubled(lambda), 1);
        case_1c.add_term(doubled(lambda) + rectangle(2 * d - 2 * d, 2), 1);
      }
      o.require(case_1a == case_1c && gsec_sections(d, 2 * d) == case_1a, "Gsec at d = " + std::to_string(d));
    }
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
