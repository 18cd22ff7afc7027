#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "p2sd/report.hpp"

namespace p2sd::cli {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_positive(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || v <= 0) throw std::invalid_argument(key + ": expected a positive integer, got '" + value + "'");
  return v;
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "text") return OutputFormat::text;
  throw std::invalid_argument("output_format: expected json or text, got '" + s + "'");
}

// Re-raises a parse failure with the offending option named.
template <class Fn>
auto named(const std::string& option, Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(option + ": " + e.what());
  }
}

std::pair<int, int> parse_m_range(const std::string& text) {
  auto dots = text.find("..");
  std::string lo = dots == std::string::npos ? text : text.substr(0, dots);
  std::string hi = dots == std::string::npos ? text : text.substr(dots + 2);
  int a = parse_positive("--m", trim(lo));
  int b = parse_positive("--m", trim(hi));
  if (b < a) throw std::invalid_argument("--m: empty range '" + text + "'");
  return {a, b};
}

// Either a partition ("4,2", "[4,2]") or a JSON Schur vector.
SchurVector parse_schur_arg(const std::string& option, const std::string& text, std::optional<int> bound) {
  return named(option, [&] {
    json j = json::parse(text, nullptr, false);
    if (!j.is_discarded() && j.is_array() && !j.empty() && j.front().is_object())
      return schur_from_json(j, bound);
    return SchurVector::single(parse_partition(text), bound);
  });
}

std::string schur_text(const SchurVector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : v.terms()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    BigInt a = abs(c);
    if (a != 1) os << a.get_str() << "*";
    os << "s" << p.to_string();
  }
  return os.str();
}

struct Emitter {
  OutputFormat format;
  std::ostream& out;
  void operator()(const json& j, const std::string& text) const {
    if (format == OutputFormat::json) out << j.dump(2) << "\n";
    else out << text << "\n";
  }
};

std::string report_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "m = " << r.m << (r.all_passed() ? "  all passed" : "  FAILED") << "\n";
  for (const auto& c : r.checks) os << "  " << c.name << ": " << to_string(c.status) << "\n";
  return os.str();
}

}  // namespace

CliConfig default_config() {
  CliConfig cfg;
  cfg.parallelism = std::max(1u, std::thread::hardware_concurrency());
  return cfg;
}

void apply_config_text(CliConfig& cfg, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config: expected key=value, got '" + line + "'");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "output_format") cfg.output_format = parse_format(value);
    else if (key == "kronecker_cap") cfg.kronecker_cap = parse_positive(key, value);
    else if (key == "slope_search_depth") cfg.slope_search_depth = parse_positive(key, value);
    else if (key == "parallelism") cfg.parallelism = parse_positive(key, value);
    else throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for theta sections and exceptional bundles on the projective plane", "p2sd"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_flag, config_path;
  std::optional<int> cap_flag, depth_flag, par_flag;
  app.add_option("--format", format_flag, "Output format: json or text");
  app.add_option("--config", config_path, "key=value config file (default: $P2SD_CONFIG)");
  app.add_option("--kronecker-cap", cap_flag, "Largest N for Kronecker checks");
  app.add_option("--depth", depth_flag, "Dyadic search depth for exceptional slopes");
  app.add_option("--parallelism", par_flag, "Worker threads for verify");

  std::string ch_a, ch_b, ch_text, mu_text, nu_text, lambda_text, a_text, b_text, m_range;
  std::optional<int> m_value, n_vars;
  std::string kron_method = "character";
  bool no_timing = false;

  auto* euler = app.add_subcommand("euler", "Euler pairing chi(a*b) of two Chern characters");
  euler->add_option("a", ch_a, "r,c1,ch2")->required();
  euler->add_option("b", ch_b, "r,c1,ch2")->required();

  auto* slope = app.add_subcommand("slope", "Corresponding exceptional slope of a character");
  auto* resolve = app.add_subcommand("resolve", "Resolution exponents of a character");
  auto* theta = app.add_subcommand("theta-hilb", "Theta class and sections on the Hilbert scheme of 2 points");
  for (auto* sub : {slope, resolve, theta}) {
    auto* ch = sub->add_option("--ch", ch_text, "Chern character r,c1,ch2");
    auto* m = sub->add_option("--m", m_value, "Use e(m) = (m+1, 2m+1, -2m-1/2)");
    ch->excludes(m);
    m->excludes(ch);
    sub->require_option(1);
  }

  auto* kron = app.add_subcommand("kron", "One Kronecker coefficient g(mu,nu,lambda)");
  kron->add_option("mu", mu_text)->required();
  kron->add_option("nu", nu_text)->required();
  kron->add_option("lambda", lambda_text)->required();
  kron->add_option("--method", kron_method, "character or substitution")
      ->check(CLI::IsMember({"character", "substitution"}));

  auto* pleth = app.add_subcommand("plethysm", "s_lambda[s_2] in n variables");
  pleth->add_option("lambda", lambda_text)->required();
  pleth->add_option("--n", n_vars, "Number of variables");

  auto* lr = app.add_subcommand("lr", "Product of two Schur vectors");
  lr->add_option("a", a_text, "Partition or JSON Schur vector")->required();
  lr->add_option("b", b_text, "Partition or JSON Schur vector")->required();
  lr->add_option("--n", n_vars, "Number of variables");

  auto* verify = app.add_subcommand("verify", "Verification reports over a range of m");
  verify->add_option("--m", m_range, "a..b or a single m")->required();
  verify->add_flag("--no-timing", no_timing, "Omit elapsed times");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    CliConfig cfg = default_config();
    if (config_path.empty())
      if (const char* env = std::getenv("P2SD_CONFIG")) config_path = env;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::invalid_argument("--config: cannot read '" + config_path + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      apply_config_text(cfg, buf.str());
    }
    if (!format_flag.empty()) cfg.output_format = named("--format", [&] { return parse_format(format_flag); });
    if (cap_flag) cfg.kronecker_cap = parse_positive("--kronecker-cap", std::to_string(*cap_flag));
    if (depth_flag) cfg.slope_search_depth = parse_positive("--depth", std::to_string(*depth_flag));
    if (par_flag) cfg.parallelism = parse_positive("--parallelism", std::to_string(*par_flag));

    Emitter emit{cfg.output_format, out};
    auto character = [&] {
      if (m_value) {
        if (*m_value < 1) throw std::invalid_argument("--m: expected m >= 1");
        return e_class(*m_value);
      }
      return named("--ch", [&] { return parse_chern(ch_text); });
    };

    if (*euler) {
      ChernCharacter a = named("a", [&] { return parse_chern(ch_a); });
      ChernCharacter b = named("b", [&] { return parse_chern(ch_b); });
      Rational p = euler_pairing(a, b);
      emit({{"a", a}, {"b", b}, {"pairing", format_rational(p)}}, format_rational(p));
    } else if (*slope) {
      SlopeCertificate cert = corresponding_slope(character(), cfg.slope_search_depth);
      emit(certificate_to_json(cert), "gamma = " + format_rational(cert.gamma.slope) + " (" +
                                          cert.gamma.bundle_name() + ")\n" + cert.lower.to_string() +
                                          " < mu0 = " + cert.mu0.to_string() + " < " + cert.upper.to_string());
    } else if (*resolve) {
      ResolutionData res = resolution_exponents(character(), cfg.slope_search_depth);
      std::string text = "0 -> " + res.bundles[0] + "^" + res.m1.get_str() + " -> " + res.bundles[1] + "^" +
                         res.m2.get_str() + " + " + res.bundles[2] + "^" + res.m3.get_str() + " -> G -> 0";
      emit(resolution_to_json(res), text);
    } else if (*theta) {
      ThetaSections t = hilb2_theta_sections(character());
      emit(theta_sections_to_json(t), "sections: " + schur_text(t.sections) + "\ndimension: " + t.dimension.get_str());
    } else if (*kron) {
      Partition mu = named("mu", [&] { return parse_partition(mu_text); });
      Partition nu = named("nu", [&] { return parse_partition(nu_text); });
      Partition lambda = named("lambda", [&] { return parse_partition(lambda_text); });
      if (mu.size() != nu.size() || nu.size() != lambda.size())
        throw std::invalid_argument("kron: partitions must have equal size");
      if (mu.size() > cfg.kronecker_cap)
        throw CapExceeded("|mu| = " + std::to_string(mu.size()) + " exceeds the Kronecker cap " +
                          std::to_string(cfg.kronecker_cap));
      BigInt g;
      if (kron_method == "character") {
        g = kronecker(mu, nu, lambda);
      } else {
        KroneckerTable table = kronecker_via_substitution(lambda, mu.length(), nu.length());
        auto it = table.find({mu, nu});
        g = it == table.end() ? BigInt(0) : it->second;
      }
      emit({{"mu", mu}, {"nu", nu}, {"lambda", lambda}, {"g", bigint_to_json(g)}}, g.get_str());
    } else if (*pleth) {
      Partition lambda = named("lambda", [&] { return parse_partition(lambda_text); });
      if (n_vars && *n_vars < 0) throw std::invalid_argument("--n: expected n >= 0");
      SchurVector v = schur_plethysm_s2(lambda, n_vars);
      emit(schur_to_json(v), schur_text(v));
    } else if (*lr) {
      SchurVector a = parse_schur_arg("a", a_text, n_vars);
      SchurVector b = parse_schur_arg("b", b_text, n_vars);
      SchurVector v = lr_product(a, b);
      emit(schur_to_json(v), schur_text(v));
    } else if (*verify) {
      auto [lo, hi] = parse_m_range(m_range);
      ReportOptions opts{cfg.kronecker_cap, cfg.slope_search_depth, cfg.parallelism};
      std::vector<VerificationReport> reports = full_report(lo, hi, opts);
      json j = json::array();
      std::string text;
      bool ok = true;
      for (const auto& r : reports) {
        j.push_back(report_to_json(r, !no_timing));
        text += report_text(r);
        ok = ok && r.all_passed();
      }
      if (!text.empty()) text.pop_back();
      emit(j, text);
      return ok ? 0 : 1;
    }
    return 0;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace p2sd::cli
