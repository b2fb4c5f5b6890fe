#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

namespace caylap {

/// Exact rational scalar. GMP keeps numerators/denominators unbounded;
/// Sylvester determinants blow past any fixed width.
using Rational = mpq_class;

/// Canonicalized rational from a num/den pair (mpq_class does not reduce
/// fractions supplied directly).
Rational make_rational(long num, long den = 1);

int totient(int m);
std::vector<int> divisors(int m);

/// Phi_m(x), the m-th cyclotomic polynomial, coefficients lowest degree
/// first (integer entries, monic). Computed by dividing x^m - 1 by Phi_d
/// over all proper divisors d | m.
std::vector<Rational> cyclotomic_polynomial(int m);

/// An element of the cyclotomic field Q(zeta_m), zeta_m = exp(2*pi*i/m),
/// stored as rational coordinates in the power basis
/// {1, z, ..., z^{phi(m)-1}} of Q[x]/Phi_m(x).
///
/// Values keep the conductor they were computed at; mixed-conductor
/// arithmetic promotes both operands to lcm(m1, m2). Equality compares in
/// the common field, so representation differences never leak.
class Cyc {
 public:
  /// Zero (conductor 1).
  Cyc();
  /// A rational, embedded at conductor 1.
  explicit Cyc(const Rational& r);
  /// Raw construction; coords.size() must equal phi(conductor).
  Cyc(int conductor, std::vector<Rational> coords);

  static Cyc integer(long v);
  static Cyc rational(long num, long den);
  /// zeta_m^k (k may be negative; exponents reduce mod m).
  static Cyc zeta(int m, long k = 1);

  int conductor() const { return m_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  /// True when the value lies in Q (all basis coordinates beyond 1 vanish).
  bool is_rational() const;
  /// The rational value; throws std::domain_error unless is_rational().
  Rational rational_value() const;

  Cyc operator-() const;
  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator*(const Cyc& o) const;
  /// Field division; throws std::domain_error when dividing by zero.
  Cyc operator/(const Cyc& o) const;
  Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
  Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  /// Complex conjugate (the Galois map z -> z^{-1}).
  Cyc conj() const;
  /// Multiplicative inverse; throws std::domain_error on zero.
  Cyc inverse() const;

  /// Re-express at conductor m (m must be a multiple of conductor()).
  Cyc promoted(int m) const;

  /// Floating embedding z -> exp(2*pi*i/m). Confined to the oracle and to
  /// display; never used for verdicts.
  std::complex<double> to_complex() const;

  std::string to_string() const;

 private:
  int m_;                   // conductor, >= 1
  std::vector<Rational> c_; // phi(m_) coordinates
};

inline Cyc operator*(const Rational& r, const Cyc& x) { return Cyc(r) * x; }

}  // namespace caylap
