#include "caylap/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "caylap/matrix.hpp"

namespace caylap {

namespace {
void trim(std::vector<Cyc>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}
}  // namespace

CycPoly::CycPoly(std::vector<Cyc> coeffs) : c_(std::move(coeffs)) { trim(c_); }

CycPoly CycPoly::constant(const Cyc& c) { return CycPoly({c}); }

CycPoly CycPoly::monomial(int k) {
  std::vector<Cyc> c(static_cast<std::size_t>(k) + 1);
  c.back() = Cyc::integer(1);
  return CycPoly(std::move(c));
}

Cyc CycPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Cyc();
  return c_[static_cast<std::size_t>(k)];
}

Cyc CycPoly::leading() const {
  if (c_.empty()) throw std::domain_error("CycPoly: zero polynomial has no leading coefficient");
  return c_.back();
}

CycPoly CycPoly::operator+(const CycPoly& o) const {
  std::vector<Cyc> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < c_.size()) r[i] += c_[i];
    if (i < o.c_.size()) r[i] += o.c_[i];
  }
  return CycPoly(std::move(r));
}

CycPoly CycPoly::operator-(const CycPoly& o) const {
  std::vector<Cyc> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < c_.size()) r[i] += c_[i];
    if (i < o.c_.size()) r[i] -= o.c_[i];
  }
  return CycPoly(std::move(r));
}

CycPoly CycPoly::operator*(const CycPoly& o) const {
  if (c_.empty() || o.c_.empty()) return CycPoly();
  std::vector<Cyc> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return CycPoly(std::move(r));
}

CycPoly CycPoly::scaled(const Cyc& c) const {
  std::vector<Cyc> r = c_;
  for (auto& x : r) x *= c;
  return CycPoly(std::move(r));
}

bool CycPoly::operator==(const CycPoly& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

CycPoly CycPoly::derivative() const {
  if (c_.size() <= 1) return CycPoly();
  std::vector<Cyc> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r[i - 1] = Cyc::integer(static_cast<long>(i)) * c_[i];
  return CycPoly(std::move(r));
}

Cyc CycPoly::eval(const Cyc& x) const {
  Cyc acc;  // Horner, highest degree first
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

std::pair<CycPoly, CycPoly> CycPoly::divmod(const CycPoly& d) const {
  if (d.is_zero()) throw std::domain_error("CycPoly: division by zero polynomial");
  std::vector<Cyc> rem = c_;
  trim(rem);
  std::vector<Cyc> quo;
  if (rem.size() >= d.c_.size()) quo.assign(rem.size() - d.c_.size() + 1, Cyc());
  Cyc lead_inv = d.c_.back().inverse();
  while (rem.size() >= d.c_.size()) {
    Cyc f = rem.back() * lead_inv;
    std::size_t shift = rem.size() - d.c_.size();
    quo[shift] = f;
    for (std::size_t i = 0; i < d.c_.size(); ++i) rem[shift + i] -= f * d.c_[i];
    trim(rem);
  }
  return {CycPoly(std::move(quo)), CycPoly(std::move(rem))};
}

std::string CycPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[i].to_string() << ")";
    if (i > 0) {
      os << "*x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

CycPoly poly_gcd(CycPoly a, CycPoly b) {
  while (!b.is_zero()) {
    CycPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a = a.scaled(a.leading().inverse());  // monic normalization
  return a;
}

Cyc resultant(const CycPoly& p, const CycPoly& q) {
  if (p.is_zero() || q.is_zero())
    throw std::domain_error("resultant: arguments must be nonzero polynomials");
  const int dp = p.degree(), dq = q.degree();
  if (dp == 0 && dq == 0) return Cyc::integer(1);
  if (dp == 0) {
    // res(c, q) = c^{deg q}
    Cyc r = Cyc::integer(1);
    for (int i = 0; i < dq; ++i) r *= p.coeff(0);
    return r;
  }
  if (dq == 0) {
    Cyc r = Cyc::integer(1);
    for (int i = 0; i < dp; ++i) r *= q.coeff(0);
    return r;
  }

  // Sylvester matrix: dq rows of p's coefficients, then dp rows of q's,
  // each row shifted one column right from the previous.
  const int n = dp + dq;
  CycMatrix s(n, n);
  for (int r = 0; r < dq; ++r)
    for (int k = 0; k <= dp; ++k) s.at(r, r + (dp - k)) = p.coeff(k);
  for (int r = 0; r < dp; ++r)
    for (int k = 0; k <= dq; ++k) s.at(dq + r, r + (dq - k)) = q.coeff(k);

  // Exact fraction-free-ish elimination: plain Gaussian elimination over the
  // field with a running determinant factor. GMP rationals keep it exact.
  Cyc det = Cyc::integer(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!s.at(r, col).is_zero()) { pivot = r; break; }
    if (pivot < 0) return Cyc();  // singular: resultant is zero
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(s.at(pivot, j), s.at(col, j));
      det = -det;
    }
    det *= s.at(col, col);
    Cyc inv = s.at(col, col).inverse();
    for (int r = col + 1; r < n; ++r) {
      if (s.at(r, col).is_zero()) continue;
      Cyc f = s.at(r, col) * inv;
      for (int j = col; j < n; ++j) s.at(r, j) -= f * s.at(col, j);
    }
  }
  return det;
}

// ---- CycMatrix ----

CycMatrix::CycMatrix(int rows, int cols)
    : a_(static_cast<std::size_t>(rows),
         std::vector<Cyc>(static_cast<std::size_t>(cols))) {}

CycMatrix::CycMatrix(std::vector<std::vector<Cyc>> rows) : a_(std::move(rows)) {
  for (const auto& r : a_)
    if (r.size() != a_[0].size())
      throw std::invalid_argument("CycMatrix: ragged rows");
}

CycMatrix CycMatrix::identity(int n) {
  CycMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Cyc::integer(1);
  return m;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
  CycMatrix r = *this;
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) r.at(i, j) += o.at(i, j);
  return r;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const {
  CycMatrix r = *this;
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) r.at(i, j) -= o.at(i, j);
  return r;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
  if (cols() != o.rows()) throw std::invalid_argument("CycMatrix: shape mismatch");
  CycMatrix r(rows(), o.cols());
  for (int i = 0; i < rows(); ++i)
    for (int k = 0; k < cols(); ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols(); ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

CycMatrix CycMatrix::scaled(const Cyc& c) const {
  CycMatrix r = *this;
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) r.at(i, j) *= c;
  return r;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
  if (rows() != o.rows() || cols() != o.cols()) return false;
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j)
      if (at(i, j) != o.at(i, j)) return false;
  return true;
}

Cyc CycMatrix::trace() const {
  Cyc t;
  for (int i = 0; i < rows(); ++i) t += at(i, i);
  return t;
}

bool CycMatrix::is_zero() const {
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j)
      if (!at(i, j).is_zero()) return false;
  return true;
}

CycPoly char_poly(const CycMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: matrix not square");
  const int n = m.rows();
  // Faddeev-LeVerrier: M_1 = M, c_k = -tr(M_k)/k, M_{k+1} = M (M_k + c_k I).
  // Coefficients come out as det(xI - M) = x^n + c_1 x^{n-1} + ... + c_n.
  std::vector<Cyc> coeffs(static_cast<std::size_t>(n) + 1);
  coeffs[static_cast<std::size_t>(n)] = Cyc::integer(1);
  CycMatrix mk = m;
  for (int k = 1; k <= n; ++k) {
    Cyc ck = -(mk.trace() / Cyc::integer(k));
    coeffs[static_cast<std::size_t>(n - k)] = ck;
    if (k < n) {
      CycMatrix shifted = mk;
      for (int i = 0; i < n; ++i) shifted.at(i, i) += ck;
      mk = m * shifted;
    }
  }
  return CycPoly(std::move(coeffs));
}

std::vector<std::vector<Cyc>> kernel_basis(const CycMatrix& m) {
  const int nr = m.rows(), nc = m.cols();
  CycMatrix a = m;
  std::vector<int> pivot_col;  // pivot column of each eliminated row
  int row = 0;
  for (int col = 0; col < nc && row < nr; ++col) {
    int pr = -1;
    for (int r = row; r < nr; ++r)
      if (!a.at(r, col).is_zero()) { pr = r; break; }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = 0; j < nc; ++j) std::swap(a.at(pr, j), a.at(row, j));
    Cyc inv = a.at(row, col).inverse();
    for (int j = 0; j < nc; ++j) a.at(row, j) *= inv;
    for (int r = 0; r < nr; ++r) {
      if (r == row || a.at(r, col).is_zero()) continue;
      Cyc f = a.at(r, col);
      for (int j = 0; j < nc; ++j) a.at(r, j) -= f * a.at(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(nc), false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<Cyc>> basis;
  for (int free = 0; free < nc; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<Cyc> v(static_cast<std::size_t>(nc));
    v[static_cast<std::size_t>(free)] = Cyc::integer(1);
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      v[static_cast<std::size_t>(pivot_col[r])] = -a.at(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Cyc> solve(const CycMatrix& a, const std::vector<Cyc>& b) {
  const int nr = a.rows(), nc = a.cols();
  if (static_cast<int>(b.size()) != nr)
    throw std::invalid_argument("solve: rhs length mismatch");
  // Eliminate on the augmented matrix.
  CycMatrix aug(nr, nc + 1);
  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j < nc; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, nc) = b[static_cast<std::size_t>(i)];
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < nc && row < nr; ++col) {
    int pr = -1;
    for (int r = row; r < nr; ++r)
      if (!aug.at(r, col).is_zero()) { pr = r; break; }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = 0; j <= nc; ++j) std::swap(aug.at(pr, j), aug.at(row, j));
    Cyc inv = aug.at(row, col).inverse();
    for (int j = 0; j <= nc; ++j) aug.at(row, j) *= inv;
    for (int r = 0; r < nr; ++r) {
      if (r == row || aug.at(r, col).is_zero()) continue;
      Cyc f = aug.at(r, col);
      for (int j = 0; j <= nc; ++j) aug.at(r, j) -= f * aug.at(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }
  // Inconsistency: a zero row with nonzero rhs.
  for (int r = row; r < nr; ++r)
    if (!aug.at(r, nc).is_zero())
      throw std::domain_error("solve: inconsistent system");
  if (static_cast<int>(pivot_col.size()) != nc)
    throw std::domain_error("solve: solution not unique");
  std::vector<Cyc> x(static_cast<std::size_t>(nc));
  for (std::size_t r = 0; r < pivot_col.size(); ++r)
    x[static_cast<std::size_t>(pivot_col[r])] = aug.at(static_cast<int>(r), nc);
  return x;
}

}  // namespace caylap
