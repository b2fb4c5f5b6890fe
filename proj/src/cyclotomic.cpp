#include "caylap/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace caylap {

namespace {

// ---- small helpers over dense rational polynomials (ascending coeffs) ----

void trim(std::vector<Rational>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division p / q (remainder must vanish); used for Phi_m construction.
std::vector<Rational> poly_div_exact(std::vector<Rational> p,
                                     const std::vector<Rational>& q) {
  trim(p);
  std::vector<Rational> quo(p.size() >= q.size() ? p.size() - q.size() + 1 : 0,
                            Rational(0));
  const Rational& lead = q.back();
  while (p.size() >= q.size()) {
    Rational f = p.back() / lead;
    std::size_t shift = p.size() - q.size();
    quo[shift] = f;
    for (std::size_t i = 0; i < q.size(); ++i) p[shift + i] -= f * q[i];
    trim(p);
  }
  if (!p.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
  return quo;
}

// Remainder of p mod q over Q.
std::vector<Rational> poly_mod(std::vector<Rational> p,
                               const std::vector<Rational>& q) {
  trim(p);
  const Rational& lead = q.back();
  while (p.size() >= q.size()) {
    Rational f = p.back() / lead;
    std::size_t shift = p.size() - q.size();
    for (std::size_t i = 0; i < q.size(); ++i) p[shift + i] -= f * q[i];
    trim(p);
  }
  return p;
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                               const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Per-conductor data: Phi_m and the reduction table z^k mod Phi_m for
// 0 <= k < m. The table doubles as the conjugation and promotion map.
struct FieldCtx {
  int m = 1;
  int phi = 1;
  std::vector<Rational> phi_poly;            // Phi_m, ascending, monic
  std::vector<std::vector<Rational>> zpow;   // zpow[k] = coords of z^k
};

const FieldCtx& ctx(int m) {
  static std::map<int, FieldCtx> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  FieldCtx c;
  c.m = m;
  c.phi = totient(m);
  c.phi_poly = cyclotomic_polynomial(m);

  c.zpow.assign(m, std::vector<Rational>(c.phi, Rational(0)));
  for (int k = 0; k < m && k < c.phi; ++k) c.zpow[k][k] = 1;
  for (int k = c.phi; k < m; ++k) {
    // z^k = z * z^{k-1}: shift up one degree, then fold the overflow term
    // z^phi = -(Phi_m - x^phi) back into the basis.
    const std::vector<Rational>& prev = c.zpow[k - 1];
    std::vector<Rational> cur(c.phi, Rational(0));
    for (int i = 0; i + 1 < c.phi; ++i) cur[i + 1] = prev[i];
    const Rational& top = prev[c.phi - 1];
    if (top != 0)
      for (int i = 0; i < c.phi; ++i) cur[i] -= top * c.phi_poly[i];
    c.zpow[k] = std::move(cur);
  }
  return cache.emplace(m, std::move(c)).first->second;
}

// Extended Euclid over Q[x]: returns u with u*a + v*q = gcd (gcd scaled to 1);
// only u is needed for inversion mod the irreducible Phi_m.
std::vector<Rational> inverse_mod(const std::vector<Rational>& a,
                                  const std::vector<Rational>& q) {
  std::vector<Rational> r0 = q, r1 = a;
  std::vector<Rational> u0, u1{Rational(1)};  // u0 = 0, u1 = 1
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    // r0 = quo * r1 + rem
    std::vector<Rational> rem = r0, quo(r0.size(), Rational(0));
    const Rational& lead = r1.back();
    while (rem.size() >= r1.size()) {
      Rational f = rem.back() / lead;
      std::size_t shift = rem.size() - r1.size();
      quo[shift] += f;
      for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= f * r1[i];
      trim(rem);
    }
    trim(quo);
    // (u0, u1) <- (u1, u0 - quo*u1)
    std::vector<Rational> u2 = u0;
    std::vector<Rational> qu = poly_mul(quo, u1);
    if (u2.size() < qu.size()) u2.resize(qu.size(), Rational(0));
    for (std::size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
    trim(u2);
    u0 = std::move(u1);
    u1 = std::move(u2);
    r0 = std::move(r1);
    r1 = std::move(rem);
  }
  // r0 = gcd (a nonzero unit multiple); scale u0 so gcd becomes 1.
  if (r0.size() != 1)
    throw std::logic_error("inverse_mod: inputs not coprime");
  for (auto& x : u0) x /= r0[0];
  return poly_mod(std::move(u0), q);
}

}  // namespace

Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

int totient(int m) {
  int result = m, n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<int> divisors(int m) {
  std::vector<int> d;
  for (int k = 1; k <= m; ++k)
    if (m % k == 0) d.push_back(k);
  return d;
}

std::vector<Rational> cyclotomic_polynomial(int m) {
  static std::map<int, std::vector<Rational>> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be >= 1");

  // x^m - 1 divided by Phi_d for every proper divisor d of m.
  std::vector<Rational> p(m + 1, Rational(0));
  p[0] = -1;
  p[m] = 1;
  for (int d : divisors(m))
    if (d < m) p = poly_div_exact(std::move(p), cyclotomic_polynomial(d));
  cache[m] = p;
  return p;
}

Cyc::Cyc() : m_(1), c_{Rational(0)} {}

Cyc::Cyc(const Rational& r) : m_(1), c_{r} {}

Cyc::Cyc(int conductor, std::vector<Rational> coords)
    : m_(conductor), c_(std::move(coords)) {
  if (m_ < 1) throw std::invalid_argument("Cyc: conductor must be >= 1");
  if (static_cast<int>(c_.size()) != totient(m_))
    throw std::invalid_argument("Cyc: coords must have length phi(conductor)");
}

Cyc Cyc::integer(long v) { return Cyc(Rational(v)); }

Cyc Cyc::rational(long num, long den) { return Cyc(make_rational(num, den)); }

Cyc Cyc::zeta(int m, long k) {
  const FieldCtx& f = ctx(m);
  long r = k % m;
  if (r < 0) r += m;
  return Cyc(m, f.zpow[static_cast<std::size_t>(r)]);
}

bool Cyc::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational Cyc::rational_value() const {
  if (!is_rational()) throw std::domain_error("Cyc: value is not rational");
  return c_[0];
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyc Cyc::promoted(int m) const {
  if (m == m_) return *this;
  if (m % m_ != 0)
    throw std::invalid_argument("Cyc::promoted: target conductor not a multiple");
  const FieldCtx& f = ctx(m);
  const int step = m / m_;  // zeta_{m_} = zeta_m^step
  std::vector<Rational> out(f.phi, Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const std::vector<Rational>& row =
        f.zpow[(k * static_cast<std::size_t>(step)) % static_cast<std::size_t>(m)];
    for (int i = 0; i < f.phi; ++i) out[i] += c_[k] * row[i];
  }
  return Cyc(m, std::move(out));
}

Cyc Cyc::operator+(const Cyc& o) const {
  int m = std::lcm(m_, o.m_);
  Cyc a = promoted(m), b = o.promoted(m);
  for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

Cyc Cyc::operator-(const Cyc& o) const { return *this + (-o); }

Cyc Cyc::operator*(const Cyc& o) const {
  int m = std::lcm(m_, o.m_);
  Cyc a = promoted(m), b = o.promoted(m);
  const FieldCtx& f = ctx(m);
  std::vector<Rational> out(f.phi, Rational(0));
  // Convolution, folding z^k with k >= phi through the reduction table.
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      Rational prod = a.c_[i] * b.c_[j];
      std::size_t k = i + j;
      if (k < static_cast<std::size_t>(f.phi)) {
        out[k] += prod;
      } else {
        const std::vector<Rational>& row = f.zpow[k % static_cast<std::size_t>(m)];
        for (int t = 0; t < f.phi; ++t) out[t] += prod * row[t];
      }
    }
  }
  return Cyc(m, std::move(out));
}

Cyc Cyc::operator/(const Cyc& o) const { return *this * o.inverse(); }

bool Cyc::operator==(const Cyc& o) const {
  int m = std::lcm(m_, o.m_);
  Cyc a = promoted(m), b = o.promoted(m);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

Cyc Cyc::conj() const {
  // z^k -> z^{m-k}: real for m <= 2, a genuine Galois map otherwise.
  const FieldCtx& f = ctx(m_);
  std::vector<Rational> out(f.phi, Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const std::vector<Rational>& row =
        f.zpow[(static_cast<std::size_t>(m_) - k) % static_cast<std::size_t>(m_)];
    for (int i = 0; i < f.phi; ++i) out[i] += c_[k] * row[i];
  }
  return Cyc(m_, std::move(out));
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw std::domain_error("Cyc: inversion of zero");
  const FieldCtx& f = ctx(m_);
  std::vector<Rational> a(c_.begin(), c_.end());
  trim(a);
  std::vector<Rational> u = inverse_mod(a, f.phi_poly);
  u.resize(f.phi, Rational(0));
  return Cyc(m_, std::move(u));
}

std::complex<double> Cyc::to_complex() const {
  std::complex<double> acc(0.0, 0.0);
  const double tau = 6.283185307179586476925286766559;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    double angle = tau * static_cast<double>(k) / static_cast<double>(m_);
    acc += c_[k].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

std::string Cyc::to_string() const {
  if (is_rational()) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Rational v = c_[k];
    if (first) {
      if (v < 0) { os << "-"; v = -v; }
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    bool unit = (v == 1) && k > 0;
    if (!unit) os << v.get_str();
    if (k > 0) {
      if (!unit) os << "*";
      os << "z" << m_;
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace caylap
