#include "p2sd/exceptional.hpp"

#include <cmath>
#include <stdexcept>

#include "p2sd/memo.hpp"

namespace p2sd {

DyadicRational::DyadicRational(BigInt p, unsigned q) : p_(std::move(p)), q_(q) {
  while (q_ > 0 && mpz_even_p(p_.get_mpz_t())) {
    p_ /= 2;
    --q_;
  }
}

Rational DyadicRational::value() const {
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, q_);
  Rational v(p_, den);
  v.canonicalize();
  return v;
}

std::string DyadicRational::to_string() const { return format_rational(value()); }

DyadicRational DyadicRational::midpoint(const DyadicRational& x, const DyadicRational& y) {
  unsigned q = std::max(x.q_, y.q_);
  BigInt px = x.p_, py = y.p_;
  mpz_mul_2exp(px.get_mpz_t(), px.get_mpz_t(), q - x.q_);
  mpz_mul_2exp(py.get_mpz_t(), py.get_mpz_t(), q - y.q_);
  return DyadicRational(px + py, q + 1);
}

DyadicRational parse_dyadic(const std::string& text) {
  Rational v = parse_rational(text);
  const BigInt& den = v.get_den();
  if (mpz_popcount(den.get_mpz_t()) != 1)
    throw std::invalid_argument("not a dyadic rational: '" + text + "'");
  return DyadicRational(v.get_num(), static_cast<unsigned>(mpz_sizeinbase(den.get_mpz_t(), 2) - 1));
}

namespace {

std::string name_for_slope(const Rational& s) {
  if (s.get_den() == 1) {
    BigInt d = s.get_num();
    return d == 0 ? "O" : "O(" + d.get_str() + ")";
  }
  if (s.get_den() == 2) {
    // E_{k+1/2} = T(k-1)
    BigInt k;
    mpz_fdiv_q(k.get_mpz_t(), s.get_num().get_mpz_t(), s.get_den().get_mpz_t());
    BigInt twist = k - 1;
    return twist == 0 ? "T" : "T(" + twist.get_str() + ")";
  }
  return "E(" + format_rational(s) + ")";
}

ConcurrentMemo<std::pair<BigInt, unsigned>, ExceptionalSlope>& eps_cache() {
  static ConcurrentMemo<std::pair<BigInt, unsigned>, ExceptionalSlope> cache;
  return cache;
}

}  // namespace

std::string ExceptionalSlope::bundle_name() const { return name_for_slope(slope); }

ExceptionalSlope make_exceptional(const DyadicRational& address, const Rational& slope) {
  ExceptionalSlope e;
  e.address = address;
  e.slope = slope;
  e.slope.canonicalize();
  e.rank = e.slope.get_den();
  Rational r(e.rank);
  e.discriminant = (1 - 1 / (r * r)) / 2;
  e.chern = ChernCharacter(r, r * e.slope, r * (e.slope * e.slope / 2 - e.discriminant));
  return e;
}

ExceptionalSlope eps(const DyadicRational& address) {
  return eps_cache().get_or_compute({address.numerator(), address.exponent()}, [&] {
    if (address.is_integer()) return make_exceptional(address, Rational(address.numerator()));
    // address = (2p+1) / 2^(q+1)
    BigInt p = (address.numerator() - 1) / 2;
    unsigned q = address.exponent() - 1;
    return dot(eps(DyadicRational(p, q)), eps(DyadicRational(p + 1, q)));
  });
}

ExceptionalSlope dot(const ExceptionalSlope& alpha, const ExceptionalSlope& beta) {
  Rational denom = 3 + alpha.slope - beta.slope;
  if (denom == 0) throw DomainError("dot: 3 + alpha - beta vanishes");
  Rational slope = (alpha.slope + beta.slope) / 2 + (beta.discriminant - alpha.discriminant) / denom;
  return make_exceptional(DyadicRational::midpoint(alpha.address, beta.address), slope);
}

Surd interval_radius(const ExceptionalSlope& gamma) {
  Rational r(gamma.rank);
  return Surd(Rational(3, 2), -1, Rational(9, 4) - 1 / (r * r));
}

Surd mu_zero(const ChernCharacter& g) {
  if (g.r <= 0) throw DomainError("mu_zero needs positive rank, got " + g.to_string());
  Rational mu = g.c1 / g.r;
  Rational radicand = Rational(5, 4) + mu * mu - 2 * g.ch2 / g.r;
  if (radicand < 0) throw DomainError("mu_zero: negative radicand for " + g.to_string());
  return Surd(Rational(-3, 2) - mu, 1, radicand);
}

namespace {

enum class Side { left, inside, right };

Side locate(const Surd& mu0, const ExceptionalSlope& gamma, Surd& lower, Surd& upper) {
  Surd x = interval_radius(gamma);
  lower = (-x) + gamma.slope;
  upper = x + gamma.slope;
  auto lo = compare(mu0, lower);
  auto hi = compare(mu0, upper);
  if (lo == std::strong_ordering::equal || hi == std::strong_ordering::equal)
    throw BoundaryError("mu0 = " + mu0.to_string() + " lies on the boundary of the interval of " +
                        format_rational(gamma.slope));
  if (lo == std::strong_ordering::less) return Side::left;
  if (hi == std::strong_ordering::greater) return Side::right;
  return Side::inside;
}

}  // namespace

SlopeCertificate corresponding_slope(const ChernCharacter& g, unsigned max_depth) {
  SlopeCertificate cert;
  cert.mu0 = mu_zero(g);
  long n0 = static_cast<long>(std::floor(cert.mu0.approx()));

  for (long n = n0 - 1; n <= n0 + 2; ++n) {
    ExceptionalSlope gamma = eps(DyadicRational(n));
    if (locate(cert.mu0, gamma, cert.lower, cert.upper) == Side::inside) {
      cert.gamma = gamma;
      cert.depth = 0;
      return cert;
    }
  }

  long floor_n = n0 - 2;
  for (long n = n0 - 1; n <= n0 + 1; ++n)
    if (compare(cert.mu0, Surd(Rational(n))) > 0 && compare(cert.mu0, Surd(Rational(n + 1))) < 0)
      floor_n = n;
  if (floor_n == n0 - 2) throw std::logic_error("corresponding_slope: could not bracket mu0");

  DyadicRational lo(floor_n), hi(floor_n + 1);
  for (unsigned depth = 1; depth <= max_depth; ++depth) {
    DyadicRational mid = DyadicRational::midpoint(lo, hi);
    ExceptionalSlope gamma = eps(mid);
    switch (locate(cert.mu0, gamma, cert.lower, cert.upper)) {
      case Side::inside:
        cert.gamma = gamma;
        cert.depth = depth;
        return cert;
      case Side::left:
        hi = mid;
        break;
      case Side::right:
        lo = mid;
        break;
    }
  }
  throw NoCorrespondingSlope("mu0 = " + cert.mu0.to_string() + " is not in any exceptional interval up to depth " +
                             std::to_string(max_depth));
}

StandardDecomposition standard_decomposition(const ExceptionalSlope& gamma) {
  StandardDecomposition out;
  const DyadicRational& a = gamma.address;
  if (a.is_integer()) {
    out.alpha = eps(DyadicRational(a.numerator() - 1));
    out.beta = eps(DyadicRational(a.numerator() + 1));
    out.integer_extended = true;
  } else {
    BigInt p = (a.numerator() - 1) / 2;
    unsigned q = a.exponent() - 1;
    out.alpha = eps(DyadicRational(p, q));
    out.beta = eps(DyadicRational(p + 1, q));
  }
  if (dot(out.alpha, out.beta).slope != gamma.slope)
    throw std::logic_error("standard decomposition does not reproduce " + format_rational(gamma.slope));
  return out;
}

namespace {

BigInt checked_exponent(const std::string& name, const Rational& value) {
  if (!is_integer(value)) throw ResolutionError(name, value, "exponent is not an integer");
  if (value < 0) throw ResolutionError(name, value, "exponent is negative");
  return value.get_num();
}

}  // namespace

ResolutionData resolution_exponents(const ChernCharacter& g, unsigned max_depth) {
  ResolutionData out;
  out.certificate = corresponding_slope(g, max_depth);
  const ExceptionalSlope& gamma = out.certificate.gamma;
  out.decomposition = standard_decomposition(gamma);
  out.alpha_dot_gamma = dot(out.decomposition.alpha, gamma);

  Rational chi_gamma = chi(multiply(g, gamma.chern));
  if (chi_gamma < 0) throw ResolutionError("chi(g*E_gamma)", chi_gamma, "hypothesis chi >= 0 fails");
  out.m1 = checked_exponent("m1", -chi(multiply(g, out.decomposition.alpha.chern)));
  out.m2 = checked_exponent("m2", -chi(multiply(g, out.alpha_dot_gamma.chern)));
  out.m3 = checked_exponent("m3", chi_gamma);
  out.bundles = {name_for_slope(-out.decomposition.alpha.slope - 3),
                 name_for_slope(-out.decomposition.beta.slope), name_for_slope(-gamma.slope)};
  return out;
}

}  // namespace p2sd
