#pragma once

#include <json.hpp>

#include "p2sd/chern.hpp"
#include "p2sd/exceptional.hpp"
#include "p2sd/hilbtheta.hpp"
#include "p2sd/partition.hpp"
#include "p2sd/symfunc.hpp"

namespace p2sd {

using json = nlohmann::json;

// Partitions are integer arrays: [4,2].
void to_json(json& j, const Partition& p);
void from_json(const json& j, Partition& p);

// Schur vectors are [{"partition":[...],"coeff":c},...] in decreasing lex
// order. Coefficients are JSON integers when they fit in 64 bits and
// decimal strings otherwise.
json schur_to_json(const SchurVector& v);
SchurVector schur_from_json(const json& j, std::optional<int> var_bound = std::nullopt);

json bigint_to_json(const BigInt& n);
BigInt bigint_from_json(const json& j);

// Chern characters: {"r":"p/q","c1":"p/q","ch2":"p/q"}.
void to_json(json& j, const ChernCharacter& ch);
void from_json(const json& j, ChernCharacter& ch);

json certificate_to_json(const SlopeCertificate& cert);

/// {"gamma","alpha","beta","m1","m2","m3","bundles","integer_extended"}.
json resolution_to_json(const ResolutionData& res);

struct ResolutionSummary {
  Rational gamma, alpha, beta;
  BigInt m1, m2, m3;
  std::array<std::string, 3> bundles;
  bool integer_extended = false;
  friend bool operator==(const ResolutionSummary&, const ResolutionSummary&) = default;
};
ResolutionSummary summarize(const ResolutionData& res);
ResolutionSummary resolution_from_json(const json& j);

/// {"theta":{"H":..,"halfB":..},"pg":{"d":..,"f":..},"sections":[...],"dimension":..}.
json theta_sections_to_json(const ThetaSections& t);
ThetaSections theta_sections_from_json(const json& j);

}  // namespace p2sd
