#pragma once

#include <vector>

#include "caylap/cyclotomic.hpp"
#include "caylap/polynomial.hpp"

namespace caylap {

/// Dense square-or-rectangular matrix over a cyclotomic field. A plain
/// row-major vector-of-rows; the criteria pipeline only needs a handful of
/// exact operations, so this stays a small value type.
class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(int rows, int cols);  // zero-filled
  explicit CycMatrix(std::vector<std::vector<Cyc>> rows);
  static CycMatrix identity(int n);

  int rows() const { return static_cast<int>(a_.size()); }
  int cols() const { return a_.empty() ? 0 : static_cast<int>(a_[0].size()); }

  Cyc& at(int i, int j) { return a_[i][j]; }
  const Cyc& at(int i, int j) const { return a_[i][j]; }

  CycMatrix operator+(const CycMatrix& o) const;
  CycMatrix operator-(const CycMatrix& o) const;
  CycMatrix operator*(const CycMatrix& o) const;
  CycMatrix scaled(const Cyc& c) const;
  bool operator==(const CycMatrix& o) const;
  bool operator!=(const CycMatrix& o) const { return !(*this == o); }

  Cyc trace() const;
  bool is_zero() const;

 private:
  std::vector<std::vector<Cyc>> a_;
};

/// Characteristic polynomial det(xI - M), monic, by the Faddeev-LeVerrier
/// recurrence (division-free apart from exact integer divisions of traces).
CycPoly char_poly(const CycMatrix& m);

/// Basis of the right kernel {v : Mv = 0} by exact Gaussian elimination.
/// Each basis vector is returned as a column (length cols()).
std::vector<std::vector<Cyc>> kernel_basis(const CycMatrix& m);

/// Solve A x = b exactly. Returns the solution when the system is
/// consistent and the solution unique on the span of A's columns with
/// full column rank; throws std::domain_error otherwise.
std::vector<Cyc> solve(const CycMatrix& a, const std::vector<Cyc>& b);

}  // namespace caylap
