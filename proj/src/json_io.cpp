#include "p2sd/json_io.hpp"

#include <stdexcept>

namespace p2sd {

void to_json(json& j, const Partition& p) { j = p.vec(); }

void from_json(const json& j, Partition& p) { p = Partition(j.get<std::vector<int>>()); }

json bigint_to_json(const BigInt& n) {
  if (n.fits_slong_p()) return static_cast<long long>(n.get_si());
  return n.get_str();
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()));
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

json schur_to_json(const SchurVector& v) {
  json out = json::array();
  for (const auto& [p, c] : v.terms()) out.push_back({{"partition", p}, {"coeff", bigint_to_json(c)}});
  return out;
}

SchurVector schur_from_json(const json& j, std::optional<int> var_bound) {
  if (!j.is_array()) throw std::invalid_argument("Schur vector must be a JSON array");
  SchurVector out(var_bound);
  for (const auto& term : j) out.add_term(term.at("partition").get<Partition>(), bigint_from_json(term.at("coeff")));
  return out;
}

void to_json(json& j, const ChernCharacter& ch) {
  j = {{"r", format_rational(ch.r)}, {"c1", format_rational(ch.c1)}, {"ch2", format_rational(ch.ch2)}};
}

void from_json(const json& j, ChernCharacter& ch) {
  ch = ChernCharacter(parse_rational(j.at("r").get<std::string>()), parse_rational(j.at("c1").get<std::string>()),
                      parse_rational(j.at("ch2").get<std::string>()));
}

json certificate_to_json(const SlopeCertificate& cert) {
  return {{"gamma", format_rational(cert.gamma.slope)},
          {"address", cert.gamma.address.to_string()},
          {"rank", bigint_to_json(cert.gamma.rank)},
          {"depth", cert.depth},
          {"mu0", cert.mu0.to_string()},
          {"mu0_approx", cert.mu0.approx()},
          {"lower", cert.lower.to_string()},
          {"upper", cert.upper.to_string()}};
}

json resolution_to_json(const ResolutionData& res) {
  return {{"gamma", format_rational(res.certificate.gamma.slope)},
          {"alpha", format_rational(res.decomposition.alpha.slope)},
          {"beta", format_rational(res.decomposition.beta.slope)},
          {"m1", bigint_to_json(res.m1)},
          {"m2", bigint_to_json(res.m2)},
          {"m3", bigint_to_json(res.m3)},
          {"bundles", res.bundles},
          {"integer_extended", res.decomposition.integer_extended}};
}

ResolutionSummary summarize(const ResolutionData& res) {
  return {res.certificate.gamma.slope, res.decomposition.alpha.slope, res.decomposition.beta.slope, res.m1,
          res.m2, res.m3, res.bundles, res.decomposition.integer_extended};
}

ResolutionSummary resolution_from_json(const json& j) {
  ResolutionSummary s;
  s.gamma = parse_rational(j.at("gamma").get<std::string>());
  s.alpha = parse_rational(j.at("alpha").get<std::string>());
  s.beta = parse_rational(j.at("beta").get<std::string>());
  s.m1 = bigint_from_json(j.at("m1"));
  s.m2 = bigint_from_json(j.at("m2"));
  s.m3 = bigint_from_json(j.at("m3"));
  s.bundles = j.at("bundles").get<std::array<std::string, 3>>();
  s.integer_extended = j.at("integer_extended").get<bool>();
  return s;
}

json theta_sections_to_json(const ThetaSections& t) {
  return {{"theta", {{"H", bigint_to_json(t.theta.coeff_H)}, {"halfB", bigint_to_json(t.theta.coeff_halfB)}}},
          {"pg", {{"d", bigint_to_json(t.pg.d)}, {"f", bigint_to_json(t.pg.f)}}},
          {"sections", schur_to_json(t.sections)},
          {"dimension", bigint_to_json(t.dimension)}};
}

ThetaSections theta_sections_from_json(const json& j) {
  ThetaSections t;
  t.theta = {bigint_from_json(j.at("theta").at("H")), bigint_from_json(j.at("theta").at("halfB"))};
  t.pg = {bigint_from_json(j.at("pg").at("d")), bigint_from_json(j.at("pg").at("f"))};
  t.sections = schur_from_json(j.at("sections"), 3);
  t.dimension = bigint_from_json(j.at("dimension"));
  return t;
}

}  // namespace p2sd
