#include "p2sd/hilbtheta.hpp"

#include <limits>
#include <stdexcept>

namespace p2sd {

HilbThetaClass theta_class_hilb(const ChernCharacter& e, int n) {
  Rational pairing = euler_pairing(e, ChernCharacter(1, 0, -n));
  if (pairing != 0)
    throw DomainError("theta_class_hilb: chi(e * (1,0,-" + std::to_string(n) + ")) = " +
                      format_rational(pairing) + ", expected 0");
  if (!is_integer(e.r) || !is_integer(e.c1))
    throw DomainError("theta_class_hilb: rank and c1 must be integers in " + e.to_string());
  return {e.c1.get_num(), e.r.get_num()};
}

PGBundleClass to_pg_basis(const HilbThetaClass& theta) {
  return {theta.coeff_H - theta.coeff_halfB, 2 * theta.coeff_H - theta.coeff_halfB};
}

namespace {

int as_int(long v) {
  if (v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min())
    throw DomainError("gsec_sections: degree out of range");
  return static_cast<int>(v);
}

SchurVector even_case(long d, long f) {
  SchurVector out(3);
  for (const Partition& lambda : partitions_of(as_int(f - d), 2)) out.add_term(doubled(lambda), 1);
  return out;
}

SchurVector odd_case(long d, long f) {
  SchurVector out(3);
  if (f - d - 1 < 0) return out;
  for (const Partition& lambda : partitions_of(as_int(f - d - 1), 2))
    out.add_term(doubled(lambda) + Partition{1, 1}, 1);
  return out;
}

SchurVector large_f_case(long d, long f) {
  SchurVector out(3);
  int shift = as_int(f - 2 * d);
  for (const Partition& lambda : partitions_of(as_int(d), 2))
    out.add_term(doubled(lambda) + Partition{shift, shift}, 1);
  return out;
}

}  // namespace

SchurVector gsec_sections(long d, long f) {
  if (d < 0) throw std::invalid_argument("gsec_sections needs d >= 0");
  if (f < d) return SchurVector(3);
  if (f >= 2 * d) {
    SchurVector out = large_f_case(d, f);
    if (f == 2 * d && !(out == even_case(d, f)))
      throw std::logic_error("gsec_sections: cases disagree at f = 2d");
    return out;
  }
  // d <= f < 2d; f == d odd gives no partitions of f - d - 1 = -1
  return f % 2 == 0 ? even_case(d, f) : odd_case(d, f);
}

ThetaSections hilb2_theta_sections(const ChernCharacter& e) {
  ThetaSections out;
  out.theta = theta_class_hilb(e, 2);
  out.pg = to_pg_basis(out.theta);
  if (!out.pg.d.fits_slong_p() || !out.pg.f.fits_slong_p())
    throw DomainError("hilb2_theta_sections: bundle degrees out of range");
  if (out.pg.d < 0) throw DomainError("hilb2_theta_sections: negative fibre degree " + out.pg.d.get_str());
  out.sections = gsec_sections(out.pg.d.get_si(), out.pg.f.get_si());
  out.dimension = total_dimension(out.sections, 3);
  return out;
}

SchurVector theta_closed_form(int m) {
  SchurVector out(3);
  for (int k = 0; k <= m / 2; ++k) out.add_term(Partition{3 * m - 2 * k + 1, m + 2 * k + 1}, 1);
  return out;
}

}  // namespace p2sd
