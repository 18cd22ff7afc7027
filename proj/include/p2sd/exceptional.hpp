#pragma once

#include <array>
#include <string>

#include "p2sd/chern.hpp"
#include "p2sd/numeric.hpp"
#include "p2sd/surd.hpp"

namespace p2sd {

/// p / 2^q in lowest terms (p odd or q == 0).
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(BigInt p, unsigned q = 0);

  const BigInt& numerator() const { return p_; }
  unsigned exponent() const { return q_; }
  Rational value() const;
  bool is_integer() const { return q_ == 0; }
  std::string to_string() const;

  /// Midpoint of two dyadic rationals.
  static DyadicRational midpoint(const DyadicRational& x, const DyadicRational& y);

  friend bool operator==(const DyadicRational&, const DyadicRational&) = default;
  friend bool operator<(const DyadicRational& x, const DyadicRational& y) { return x.value() < y.value(); }

 private:
  BigInt p_ = 0;
  unsigned q_ = 0;
};

/// Parses "p/2^q"-style text such as "3/4" or "-1"; the denominator must be a power of two.
DyadicRational parse_dyadic(const std::string& text);

struct ExceptionalSlope {
  DyadicRational address;
  Rational slope;
  BigInt rank;             // denominator of the slope
  Rational discriminant;   // (1 - 1/rank^2) / 2
  ChernCharacter chern;    // (rank, rank*slope, rank*(slope^2/2 - discriminant))

  /// Name of the exceptional bundle: O(d), T(d) for half-integer slopes, else E(slope).
  std::string bundle_name() const;
};

/// Fills in rank, discriminant and Chern character from the slope.
ExceptionalSlope make_exceptional(const DyadicRational& address, const Rational& slope);

/// Dyadic parametrisation of the exceptional slopes; memoised.
ExceptionalSlope eps(const DyadicRational& address);

/// alpha.beta = (alpha+beta)/2 + (Delta_beta - Delta_alpha)/(3 + alpha - beta).
/// The address of the result is the midpoint of the two addresses.
/// Throws DomainError when 3 + alpha - beta == 0.
ExceptionalSlope dot(const ExceptionalSlope& alpha, const ExceptionalSlope& beta);

/// x_gamma = 3/2 - sqrt(9/4 - 1/r^2), the half-width of the interval of gamma.
Surd interval_radius(const ExceptionalSlope& gamma);

/// mu_0 = -3/2 - mu + sqrt(5/4 + mu^2 - 2 ch2 / r). Throws DomainError if r <= 0
/// or the radicand is negative.
Surd mu_zero(const ChernCharacter& g);

class BoundaryError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NoCorrespondingSlope : public DomainError {
 public:
  using DomainError::DomainError;
};

struct SlopeCertificate {
  ExceptionalSlope gamma;
  Surd mu0;
  Surd lower;  // gamma - x_gamma < mu0
  Surd upper;  // mu0 < gamma + x_gamma
  unsigned depth = 0;
};

inline constexpr unsigned kDefaultSlopeDepth = 12;

/// The exceptional slope gamma with |mu0(g) - gamma| < x_gamma. Intervals are
/// pairwise disjoint and ordered like their centres, so the search descends
/// the dyadic tree between consecutive integers.
/// Throws BoundaryError if mu0 sits exactly on an interval endpoint and
/// NoCorrespondingSlope if no interval within max_depth contains mu0.
SlopeCertificate corresponding_slope(const ChernCharacter& g, unsigned max_depth = kDefaultSlopeDepth);

struct StandardDecomposition {
  ExceptionalSlope alpha, beta;
  bool integer_extended = false;  // gamma integral: (gamma-1, gamma+1)
};

/// Throws std::logic_error if dot(alpha, beta) does not reproduce gamma.
StandardDecomposition standard_decomposition(const ExceptionalSlope& gamma);

class ResolutionError : public DomainError {
 public:
  ResolutionError(std::string quantity, Rational value, const std::string& why)
      : DomainError(quantity + " = " + format_rational(value) + ": " + why),
        quantity_(std::move(quantity)), value_(std::move(value)) {}
  const std::string& quantity() const { return quantity_; }
  const Rational& value() const { return value_; }

 private:
  std::string quantity_;
  Rational value_;
};

struct ResolutionData {
  SlopeCertificate certificate;
  StandardDecomposition decomposition;
  ExceptionalSlope alpha_dot_gamma;
  BigInt m1, m2, m3;
  std::array<std::string, 3> bundles;  // E_{-alpha-3}, E_{-beta}, E_{-gamma}
};

/// Exponents of 0 -> E_{-alpha-3}^m1 -> E_{-beta}^m2 + E_{-gamma}^m3 -> G -> 0.
/// Throws ResolutionError if chi(g * E_gamma) < 0 or an exponent is negative
/// or non-integral.
ResolutionData resolution_exponents(const ChernCharacter& g, unsigned max_depth = kDefaultSlopeDepth);

}  // namespace p2sd
