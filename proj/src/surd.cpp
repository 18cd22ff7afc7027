#include "p2sd/surd.hpp"

#include <cmath>

namespace p2sd {

namespace {

int sgn(const Rational& q) { return ::sgn(q); }

bool rational_sqrt(const Rational& c, Rational& root) {
  const BigInt& num = c.get_num();
  const BigInt& den = c.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  BigInt rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

// sign(u + v*sqrt(d)) for a single radical.
int sign_single(const Rational& u, const Rational& v, const Rational& d) {
  int su = sgn(u), sv = (d == 0) ? 0 : sgn(v);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  Rational lhs = u * u, rhs = v * v * d;
  if (lhs > rhs) return su;
  if (lhs < rhs) return sv;
  return 0;
}

}  // namespace

Surd::Surd(Rational a, Rational b, Rational c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (sgn(c_) < 0) throw DomainError("negative radicand " + format_rational(c_));
  Rational root;
  if (b_ != 0 && rational_sqrt(c_, root)) {
    a_ += b_ * root;
    b_ = 0;
  }
  if (b_ == 0) {
    c_ = 0;
    return;
  }
  // integer radicand with small square factors pulled out
  BigInt n = c_.get_num() * c_.get_den();
  b_ /= c_.get_den();
  for (unsigned long f = 2; f <= 1000 && f * f <= n; ++f) {
    const unsigned long sq = f * f;
    while (mpz_divisible_ui_p(n.get_mpz_t(), sq)) {
      n /= sq;
      b_ *= f;
    }
  }
  c_ = n;
}

int Surd::sign() const { return sign_single(a_, b_, c_); }

double Surd::approx() const { return a_.get_d() + b_.get_d() * std::sqrt(c_.get_d()); }

std::string Surd::to_string() const {
  if (b_ == 0) return format_rational(a_);
  std::string root = "sqrt(" + format_rational(c_) + ")";
  Rational mag = abs(b_);
  std::string term = mag == 1 ? root : format_rational(mag) + "*" + root;
  if (a_ == 0) return (b_ < 0 ? "-" : "") + term;
  return format_rational(a_) + (b_ < 0 ? " - " : " + ") + term;
}

std::strong_ordering compare(const Surd& s, const Surd& t) {
  // s - t = L - R with L = (a1 - a2) + b1 sqrt(c1), R = b2 sqrt(c2)
  Rational p = s.a() - t.a();
  int sign_l = sign_single(p, s.b(), s.c());
  int sign_r = sgn(t.b());
  int result;
  if (sign_l != sign_r) {
    result = sign_l > sign_r ? 1 : -1;
  } else if (sign_l == 0) {
    result = 0;
  } else {
    // same sign: compare squares, L^2 = p^2 + b1^2 c1 + 2 p b1 sqrt(c1)
    Rational u = p * p + s.b() * s.b() * s.c() - t.b() * t.b() * t.c();
    Rational v = 2 * p * s.b();
    int diff = sign_single(u, v, s.c());
    result = sign_l > 0 ? diff : -diff;
  }
  if (result < 0) return std::strong_ordering::less;
  if (result > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace p2sd
