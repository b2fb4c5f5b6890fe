#include "caylap/repr.hpp"

#include <cmath>
#include <stdexcept>

namespace caylap {

const char* fs_type_name(FsType t) {
  switch (t) {
    case FsType::real_type: return "real";
    case FsType::complex_type: return "complex";
    case FsType::quaternionic_type: return "quaternionic";
  }
  return "?";
}

CycMatrix kronecker(const CycMatrix& a, const CycMatrix& b) {
  CycMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return r;
}

namespace {

CycMatrix mat1(const Cyc& v) {
  CycMatrix m(1, 1);
  m.at(0, 0) = v;
  return m;
}

CycMatrix mat_from(std::vector<std::vector<long>> rows) {
  CycMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = Cyc::integer(rows[i][j]);
  return m;
}

/// Fill an irrep's element matrices from generator images by breadth-first
/// right multiplication (rho(g s) = rho(g) rho(s)); any word yielding the
/// same element gives the same matrix once the homomorphism property holds,
/// which verify_irrep re-checks exhaustively.
Irrep from_generators(const Group& g, std::string name,
                      const std::vector<int>& gen_elems,
                      const std::vector<CycMatrix>& gen_mats) {
  const int n = g.order();
  const int d = gen_mats[0].rows();
  Irrep w;
  w.name = std::move(name);
  w.degree = d;
  w.matrices.assign(static_cast<std::size_t>(n), CycMatrix());
  std::vector<bool> have(static_cast<std::size_t>(n), false);
  w.matrices[0] = CycMatrix::identity(d);
  have[0] = true;
  std::vector<int> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int cur = queue[head];
    for (std::size_t i = 0; i < gen_elems.size(); ++i) {
      int next = g.mul(cur, gen_elems[i]);
      if (have[static_cast<std::size_t>(next)]) continue;
      have[static_cast<std::size_t>(next)] =
          true;
      w.matrices[static_cast<std::size_t>(next)] =
          w.matrices[static_cast<std::size_t>(cur)] * gen_mats[i];
      queue.push_back(next);
    }
  }
  if (static_cast<int>(queue.size()) != n)
    throw std::logic_error("irrep construction: generator images do not cover the group");
  return w;
}

std::vector<Irrep> cyclic_irreps(const Group& g) {
  const int n = g.order();
  std::vector<Irrep> out;
  for (int j = 0; j < n; ++j) {
    Irrep w;
    w.name = "rho" + std::to_string(j);
    w.degree = 1;
    for (int k = 0; k < n; ++k)
      w.matrices.push_back(mat1(Cyc::zeta(n, static_cast<long>(j) * k)));
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Irrep> klein_irreps() {
  // Sign table on (e, a, b, ab).
  const long table[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
  std::vector<Irrep> out;
  for (int j = 0; j < 4; ++j) {
    Irrep w;
    w.name = "rho" + std::to_string(j);
    w.degree = 1;
    for (int k = 0; k < 4; ++k) w.matrices.push_back(mat1(Cyc::integer(table[j][k])));
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Irrep> dihedral_irreps(const Group& g) {
  const int n = g.spec().n;
  std::vector<Irrep> out;
  // Degree-1 family rho_{k,j}: r -> k, s -> j; (k,j) ranges over (1,1),(1,-1)
  // for odd n and additionally (-1,1),(-1,-1) for even n.
  std::vector<std::pair<long, long>> signs{{1, 1}, {1, -1}};
  if (n % 2 == 0) {
    signs.push_back({-1, 1});
    signs.push_back({-1, -1});
  }
  for (std::size_t t = 0; t < signs.size(); ++t) {
    auto [k, j] = signs[t];
    Irrep w;
    w.name = "W1" + std::to_string(t + 1);
    w.degree = 1;
    w.matrices.resize(static_cast<std::size_t>(2 * n));
    for (int p = 0; p < n; ++p) {
      long rk = p % 2 == 0 ? 1 : k;  // k^p with k in {1,-1}
      w.matrices[static_cast<std::size_t>(p)] = mat1(Cyc::integer(rk));
      w.matrices[static_cast<std::size_t>(n + p)] = mat1(Cyc::integer(j * rk));
    }
    out.push_back(std::move(w));
  }
  // Degree-2 family, 0 < m < n/2:
  //   rho_m(r^k)   = diag(a^{mk}, a^{-mk})
  //   rho_m(s r^k) = [[0, a^{-mk}], [a^{mk}, 0]],  a = zeta_n.
  for (int m = 1; 2 * m < n; ++m) {
    Irrep w;
    w.name = "W" + std::to_string(m);
    w.degree = 2;
    w.matrices.resize(static_cast<std::size_t>(2 * n));
    for (int k = 0; k < n; ++k) {
      CycMatrix rot(2, 2), ref(2, 2);
      rot.at(0, 0) = Cyc::zeta(n, static_cast<long>(m) * k);
      rot.at(1, 1) = Cyc::zeta(n, -static_cast<long>(m) * k);
      ref.at(0, 1) = Cyc::zeta(n, -static_cast<long>(m) * k);
      ref.at(1, 0) = Cyc::zeta(n, static_cast<long>(m) * k);
      w.matrices[static_cast<std::size_t>(k)] = std::move(rot);
      w.matrices[static_cast<std::size_t>(n + k)] = std::move(ref);
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Irrep> a4_irreps(const Group& g) {
  const int t = g.element_by_name("t"), x = g.element_by_name("x");
  std::vector<Irrep> out;
  const Cyc omega = Cyc::zeta(3, 1);
  out.push_back(from_generators(g, "rho0", {t, x},
                                {mat1(Cyc::integer(1)), mat1(Cyc::integer(1))}));
  out.push_back(from_generators(g, "rho1", {t, x}, {mat1(omega), mat1(Cyc::integer(1))}));
  out.push_back(from_generators(g, "rho2", {t, x},
                                {mat1(omega * omega), mat1(Cyc::integer(1))}));
  CycMatrix rt = mat_from({{1, 0, 0}, {0, 0, 1}, {-1, -1, -1}});
  CycMatrix rx = mat_from({{0, 1, 0}, {1, 0, 0}, {-1, -1, -1}});
  out.push_back(from_generators(g, "rho3", {t, x}, {rt, rx}));
  return out;
}

std::vector<Irrep> s4_irreps(const Group& g) {
  const int tau = g.element_by_name("tau"), sigma = g.element_by_name("sigma");
  std::vector<Irrep> out;
  out.push_back(from_generators(g, "W11", {tau, sigma},
                                {mat1(Cyc::integer(1)), mat1(Cyc::integer(1))}));
  // sigma = (234) is even, so the sign character sends it to +1.
  out.push_back(from_generators(g, "W12", {tau, sigma},
                                {mat1(Cyc::integer(-1)), mat1(Cyc::integer(1))}));
  // Degree 2: pull back the reflection representation of S3 through the
  // quotient by the Klein normal subgroup; tau maps to a transposition and
  // sigma to a 3-cycle of the three coordinate pairings.
  out.push_back(from_generators(g, "W21", {tau, sigma},
                                {mat_from({{1, 0}, {-1, -1}}), mat_from({{0, 1}, {-1, -1}})}));
  // Degree 3: the reflection representation on the sum-zero subspace in the
  // basis u_i = e_i - e_4 (so tau = (12) swaps u_1, u_2 and sigma = (234)
  // sends u_1 -> u_1 - u_2, u_2 -> u_3 - u_2, u_3 -> -u_2), and its twist
  // by the sign character.
  const CycMatrix std_tau = mat_from({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  const CycMatrix std_sigma = mat_from({{1, 0, 0}, {-1, -1, -1}, {0, 1, 0}});
  out.push_back(from_generators(
      g, "W31", {tau, sigma},
      {mat_from({{0, -1, 0}, {-1, 0, 0}, {0, 0, -1}}), std_sigma}));
  out.push_back(from_generators(g, "W32", {tau, sigma}, {std_tau, std_sigma}));
  return out;
}

std::vector<Irrep> q8_irreps(const Group& g) {
  const int i = g.element_by_name("i"), j = g.element_by_name("j");
  std::vector<Irrep> out;
  auto one = mat1(Cyc::integer(1)), neg = mat1(Cyc::integer(-1));
  out.push_back(from_generators(g, "triv", {i, j}, {one, one}));
  out.push_back(from_generators(g, "sgn_i", {i, j}, {one, neg}));
  out.push_back(from_generators(g, "sgn_j", {i, j}, {neg, one}));
  out.push_back(from_generators(g, "sgn_k", {i, j}, {neg, neg}));
  CycMatrix hi(2, 2), hj(2, 2);
  hi.at(0, 0) = Cyc::zeta(4, 1);
  hi.at(1, 1) = -Cyc::zeta(4, 1);
  hj.at(0, 1) = Cyc::integer(1);
  hj.at(1, 0) = Cyc::integer(-1);
  out.push_back(from_generators(g, "H", {i, j}, {hi, hj}));
  return out;
}

std::vector<Irrep> product_irreps(const Group& g) {
  const GroupSpec& spec = g.spec();
  for (const GroupSpec& f : spec.factors)
    if (f.kind == "explicit")
      throw std::invalid_argument(
          "irreducible representations are only available for built-in groups "
          "and their products, not explicit tables");
  Group g1 = parse_group(spec.factors[0].to_string());
  Group g2 = parse_group(spec.factors[1].to_string());
  std::vector<Irrep> irr1 = irreps(g1), irr2 = irreps(g2);
  const int n2 = g2.order();
  std::vector<Irrep> out;
  for (const Irrep& w1 : irr1)
    for (const Irrep& w2 : irr2) {
      Irrep w;
      w.name = w1.name + "*" + w2.name;
      w.degree = w1.degree * w2.degree;
      for (int e1 = 0; e1 < g1.order(); ++e1)
        for (int e2 = 0; e2 < n2; ++e2)
          w.matrices.push_back(kronecker(w1.matrices[static_cast<std::size_t>(e1)],
                                         w2.matrices[static_cast<std::size_t>(e2)]));
      out.push_back(std::move(w));
    }
  return out;
}

}  // namespace

int fs_indicator(const Group& g, const Irrep& w) {
  Cyc sum;
  for (int x = 0; x < g.order(); ++x) sum += w.character(g.mul(x, x));
  Cyc val = sum / Cyc::integer(g.order());
  if (!val.is_rational())
    throw std::logic_error("fs_indicator: non-rational value");
  Rational r = val.rational_value();
  if (r != 1 && r != 0 && r != -1)
    throw std::logic_error("fs_indicator: value outside {1,0,-1}");
  return static_cast<int>(r.get_num().get_si());
}

Cyc character_inner_product(const Group& g, const Irrep& a, const Irrep& b) {
  Cyc sum;
  for (int x = 0; x < g.order(); ++x) sum += a.character(x) * b.character(x).conj();
  return sum / Cyc::integer(g.order());
}

std::vector<Irrep> irreps(const Group& g) {
  const std::string& kind = g.spec().kind;
  std::vector<Irrep> out;
  if (kind == "cyclic") out = cyclic_irreps(g);
  else if (kind == "klein") out = klein_irreps();
  else if (kind == "dihedral") out = dihedral_irreps(g);
  else if (kind == "a4") out = a4_irreps(g);
  else if (kind == "s4") out = s4_irreps(g);
  else if (kind == "q8") out = q8_irreps(g);
  else if (kind == "product") out = product_irreps(g);
  else
    throw std::invalid_argument(
        "irreducible representations are only available for built-in groups "
        "and their products, not explicit tables");

  // Completeness: sum of squared degrees must exhaust the group.
  long sum_sq = 0;
  for (const Irrep& w : out) sum_sq += static_cast<long>(w.degree) * w.degree;
  if (sum_sq != g.order())
    throw std::logic_error("irreps: degrees do not satisfy sum d^2 = |G|");

  // Frobenius-Schur types and dual pairing from the characters.
  for (Irrep& w : out) {
    int fs = fs_indicator(g, w);
    w.fs_type = fs == 1 ? FsType::real_type
                        : (fs == 0 ? FsType::complex_type : FsType::quaternionic_type);
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].dual_index = -1;
    for (std::size_t j = 0; j < out.size(); ++j) {
      bool match = true;
      for (int x = 0; x < g.order() && match; ++x)
        if (out[i].character(x).conj() != out[j].character(x)) match = false;
      if (match) {
        out[i].dual_index = static_cast<int>(j);
        break;
      }
    }
    if (out[i].dual_index < 0)
      throw std::logic_error("irreps: dual representation missing from the list");
  }
  return out;
}

void verify_irrep(const Group& g, const Irrep& w) {
  const int n = g.order();
  if (static_cast<int>(w.matrices.size()) != n)
    throw std::logic_error("irrep '" + w.name + "': wrong matrix count");
  if (w.matrices[0] != CycMatrix::identity(w.degree))
    throw std::logic_error("irrep '" + w.name + "': identity image is not I");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (w.matrices[static_cast<std::size_t>(a)] * w.matrices[static_cast<std::size_t>(b)] !=
          w.matrices[static_cast<std::size_t>(g.mul(a, b))])
        throw std::logic_error("irrep '" + w.name + "': homomorphism fails at (" +
                               g.name(a) + ", " + g.name(b) + ")");
  if (character_inner_product(g, w, w) != Cyc::integer(1))
    throw std::logic_error("irrep '" + w.name + "': <chi,chi> != 1 (not irreducible)");
}

CharacterTable character_table(const Group& g, const std::vector<Irrep>& irr) {
  CharacterTable t;
  for (const auto& cls : g.conjugacy_classes()) {
    t.class_rep.push_back(cls.front());
    t.class_size.push_back(static_cast<int>(cls.size()));
  }
  for (const Irrep& w : irr) {
    t.irrep_names.push_back(w.name);
    std::vector<Cyc> row;
    for (int rep : t.class_rep) row.push_back(w.character(rep));
    t.chi.push_back(std::move(row));
  }
  return t;
}

std::vector<int> isotypic_multiplicities(const Group& g,
                                         const std::vector<Irrep>& irr,
                                         const std::vector<Cyc>& char_by_class) {
  const auto& classes = g.conjugacy_classes();
  if (char_by_class.size() != classes.size())
    throw std::invalid_argument("isotypic_multiplicities: class count mismatch");
  std::vector<int> m;
  for (const Irrep& w : irr) {
    Cyc sum;
    for (std::size_t c = 0; c < classes.size(); ++c)
      sum += Cyc::integer(static_cast<long>(classes[c].size())) * char_by_class[c] *
             w.character(classes[c].front()).conj();
    Cyc val = sum / Cyc::integer(g.order());
    if (!val.is_rational())
      throw std::domain_error("isotypic multiplicity is not rational");
    Rational r = val.rational_value();
    if (r.get_den() != 1 || r < 0)
      throw std::domain_error("isotypic multiplicity is not a nonnegative integer");
    m.push_back(static_cast<int>(r.get_num().get_si()));
  }
  return m;
}

std::vector<int> isotypic_multiplicities_approx(
    const Group& g, const std::vector<Irrep>& irr,
    const std::vector<std::complex<double>>& char_by_class, double tol) {
  const auto& classes = g.conjugacy_classes();
  if (char_by_class.size() != classes.size())
    throw std::invalid_argument("isotypic_multiplicities_approx: class count mismatch");
  std::vector<int> m;
  for (const Irrep& w : irr) {
    std::complex<double> sum(0.0, 0.0);
    for (std::size_t c = 0; c < classes.size(); ++c)
      sum += static_cast<double>(classes[c].size()) * char_by_class[c] *
             std::conj(w.character(classes[c].front()).to_complex());
    sum /= static_cast<double>(g.order());
    double rounded = std::round(sum.real());
    if (std::abs(sum.real() - rounded) > tol || std::abs(sum.imag()) > tol || rounded < -0.5)
      throw std::domain_error("isotypic multiplicity " + std::to_string(sum.real()) +
                              "+" + std::to_string(sum.imag()) +
                              "i is not within tolerance of a nonnegative integer");
    m.push_back(static_cast<int>(rounded));
  }
  return m;
}

}  // namespace caylap
