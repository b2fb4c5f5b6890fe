#pragma once

#include <string>
#include <vector>

#include "caylap/cyclotomic.hpp"

namespace caylap {

/// Univariate polynomial over a cyclotomic field. Coefficients are stored
/// lowest degree first and kept canonical: no trailing zero coefficients,
/// so the zero polynomial is the empty vector and degree() == -1 for it.
class CycPoly {
 public:
  CycPoly() = default;
  explicit CycPoly(std::vector<Cyc> coeffs);
  static CycPoly constant(const Cyc& c);
  /// x^k with unit coefficient.
  static CycPoly monomial(int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Cyc>& coeffs() const { return c_; }
  /// Coefficient of x^k (zero beyond the stored range).
  Cyc coeff(int k) const;
  Cyc leading() const;

  CycPoly operator+(const CycPoly& o) const;
  CycPoly operator-(const CycPoly& o) const;
  CycPoly operator*(const CycPoly& o) const;
  CycPoly scaled(const Cyc& c) const;

  bool operator==(const CycPoly& o) const;
  bool operator!=(const CycPoly& o) const { return !(*this == o); }

  CycPoly derivative() const;
  Cyc eval(const Cyc& x) const;

  /// Euclidean division; returns {quotient, remainder}. Divisor must be
  /// nonzero (field coefficients make this exact).
  std::pair<CycPoly, CycPoly> divmod(const CycPoly& d) const;

  std::string to_string() const;

 private:
  std::vector<Cyc> c_;
};

/// Monic gcd via the Euclidean algorithm (gcd(0,0) = 0). Used only as an
/// independent cross-check on resultant vanishing.
CycPoly poly_gcd(CycPoly a, CycPoly b);

/// Resultant of p and q as the determinant of the Sylvester matrix whose
/// first deg(q) rows carry the coefficients of p. Conventions:
///  - both nonzero constants -> 1
///  - p constant c, q nonconstant -> c^{deg q};   symmetrically q constant
///  - either argument the zero polynomial -> std::domain_error
/// With these, res(p, q) = 0 iff p and q share a root, and the sign matches
/// the classical definition: res(x - 1, x - 2) = -1.
Cyc resultant(const CycPoly& p, const CycPoly& q);

}  // namespace caylap
