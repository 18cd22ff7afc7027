#pragma once

#include "p2sd/chern.hpp"
#include "p2sd/symfunc.hpp"

namespace p2sd {

/// coeff_H * H_n - coeff_halfB * (B/2) on the Hilbert scheme of n points.
struct HilbThetaClass {
  BigInt coeff_H, coeff_halfB;
  friend bool operator==(const HilbThetaClass&, const HilbThetaClass&) = default;
};

/// O_{P(S^2 L^v)}(d) (x) pi^* O_{P(X^v)}(f).
struct PGBundleClass {
  BigInt d, f;
  friend bool operator==(const PGBundleClass&, const PGBundleClass&) = default;
};

/// Theta divisor c H_n - r B/2 of e = (r, c, s). Requires chi(e * (1,0,-n)) == 0
/// and integral r, c; throws DomainError otherwise.
HilbThetaClass theta_class_hilb(const ChernCharacter& e, int n);

/// Basis change (c, r) -> (c - r, 2c - r).
PGBundleClass to_pg_basis(const HilbThetaClass& theta);

/// Sections of O(d) (x) pi^*O(f) on P(S^2 L^v) as Schur functors of X^v,
/// in 3 variables. Throws std::invalid_argument for d < 0.
SchurVector gsec_sections(long d, long f);

struct ThetaSections {
  HilbThetaClass theta;
  PGBundleClass pg;
  SchurVector sections{3};  // labels are functors of X^v
  BigInt dimension;
};

ThetaSections hilb2_theta_sections(const ChernCharacter& e);

/// sum_{k=0}^{floor(m/2)} s_{(3m-2k+1, m+2k+1)}.
SchurVector theta_closed_form(int m);

}  // namespace p2sd
