#include "caylap/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace caylap {

namespace {

constexpr double kClusterScale = 1e-8;   // eigenvalue clustering, relative
constexpr double kInvarianceTol = 1e-8;  // subspace invariance residual
constexpr double kMultTol = 1e-6;        // character inner-product rounding

Eigen::MatrixXd to_double_matrix(const DenseOperator& op) {
  Eigen::MatrixXd a(op.n, op.n);
  for (int i = 0; i < op.n; ++i)
    for (int j = 0; j < op.n; ++j)
      a(i, j) = op.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get_d();
  return a;
}

// Orthonormal basis of the (near-)nullspace of a real matrix, via SVD:
// right singular vectors whose singular values fall below the tolerance.
Eigen::MatrixXd null_space(const Eigen::MatrixXd& m, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int n = static_cast<int>(m.cols());
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > tol) ++rank;
  Eigen::MatrixXd v = svd.matrixV();
  return v.rightCols(n - rank);
}

int complex_nullity(const Eigen::MatrixXcd& m, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  int nullity = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) <= tol) ++nullity;
  nullity += static_cast<int>(m.cols()) - static_cast<int>(sv.size());
  return nullity;
}

// Apply the left-translation permutation L(y): (L(y) q)(x) = q(y^{-1} x),
// columnwise on a basis matrix.
Eigen::MatrixXd left_translate(const Group& g, int y, const Eigen::MatrixXd& q) {
  Eigen::MatrixXd out(q.rows(), q.cols());
  int yi = g.inv(y);
  for (int x = 0; x < q.rows(); ++x) out.row(x) = q.row(g.mul(yi, x));
  return out;
}

std::string complex_str(std::complex<double> z) {
  std::ostringstream os;
  os << z.real();
  if (z.imag() >= 0)
    os << "+" << z.imag() << "i";
  else
    os << z.imag() << "i";
  return os.str();
}

std::string weight_str(const WeightVector& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.values.size(); ++i) {
    if (i) out += ", ";
    out += w.values[i].get_str();
  }
  return out + ")";
}

// Classify one record's multiplicity vector; fills irreducible and
// type_pattern. Real-eigenvalue records: a single real-type W, or one
// quaternionic W with multiplicity 2 (quaternionic structure pairs the
// eigenvectors). Conjugate-pair records: the complex eigenspace E(lambda)
// must itself be irreducible, which shows up in the pair space as either
// W + W* for a complex-type dual pair, or 2W for a self-dual W (real or
// quaternionic type, e.g. a 2-dim real-type block whose discriminant went
// negative). Everything else is reducible.
void classify(EigenspaceRecord& rec, const std::vector<Irrep>& irr) {
  std::vector<int> nz;
  for (std::size_t i = 0; i < rec.multiplicities.size(); ++i)
    if (rec.multiplicities[i] != 0) nz.push_back(static_cast<int>(i));

  rec.irreducible = false;
  rec.type_pattern = "reducible";
  if (!rec.conjugate_pair) {
    if (nz.size() == 1) {
      const Irrep& w = irr[static_cast<std::size_t>(nz[0])];
      int m = rec.multiplicities[static_cast<std::size_t>(nz[0])];
      if (m == 1 && w.fs_type == FsType::real_type) {
        rec.irreducible = true;
        rec.type_pattern = "single real-type W";
      } else if (m == 2 && w.fs_type == FsType::quaternionic_type) {
        rec.irreducible = true;
        rec.type_pattern = "2W quaternionic";
      }
    }
    return;
  }
  if (nz.size() == 2) {
    const Irrep& w1 = irr[static_cast<std::size_t>(nz[0])];
    int m1 = rec.multiplicities[static_cast<std::size_t>(nz[0])];
    int m2 = rec.multiplicities[static_cast<std::size_t>(nz[1])];
    if (m1 == 1 && m2 == 1 && w1.dual_index == nz[1] && nz[1] != nz[0] &&
        w1.fs_type == FsType::complex_type) {
      rec.irreducible = true;
      rec.type_pattern = "W + W* complex-type";
    }
  } else if (nz.size() == 1) {
    const Irrep& w = irr[static_cast<std::size_t>(nz[0])];
    int m = rec.multiplicities[static_cast<std::size_t>(nz[0])];
    if (m == 2 && w.dual_index == nz[0] &&
        (w.fs_type == FsType::real_type || w.fs_type == FsType::quaternionic_type)) {
      rec.irreducible = true;
      rec.type_pattern = "2W conjugate pair";
    }
  }
}

}  // namespace

DenseOperator assemble(const Group& g, const GeneratorSet& s, const WeightVector& w,
                       OperatorKind kind) {
  check_weight_vector(s, w);
  if (!weight_domain_positive(w.domain))
    throw std::invalid_argument("operator assembly needs strictly positive weights");

  DenseOperator op;
  op.n = g.order();
  op.kind = kind;
  op.weight = w;
  op.a.assign(static_cast<std::size_t>(op.n),
              std::vector<Rational>(static_cast<std::size_t>(op.n), Rational(0)));
  for (int x = 0; x < op.n; ++x) {
    auto& row = op.a[static_cast<std::size_t>(x)];
    for (int i = 0; i < s.size(); ++i) {
      const Rational& ws = w.values[static_cast<std::size_t>(i)];
      int si = s.elements[static_cast<std::size_t>(i)];
      int xs = g.mul(x, si);
      if (kind == OperatorKind::laplacian) {
        row[static_cast<std::size_t>(xs)] += ws;
        row[static_cast<std::size_t>(x)] -= ws;
      } else {
        int xs2 = g.mul(xs, si);
        row[static_cast<std::size_t>(xs2)] -= ws;
        row[static_cast<std::size_t>(xs)] += 2 * ws;
        row[static_cast<std::size_t>(x)] -= ws;
      }
    }
  }
  return op;
}

bool commutes_with_left_translations(const Group& g, const DenseOperator& op) {
  // (A P_y)[x][z] = A[x][y z] and (P_y A)[x][z] = A[y^{-1} x][z].
  for (int y = 0; y < g.order(); ++y)
    for (int x = 0; x < g.order(); ++x)
      for (int z = 0; z < g.order(); ++z)
        if (op.a[static_cast<std::size_t>(x)][static_cast<std::size_t>(g.mul(y, z))] !=
            op.a[static_cast<std::size_t>(g.mul(g.inv(y), x))][static_cast<std::size_t>(z)])
          return false;
  return true;
}

OracleReport real_invariant_decomposition(const Group& g, const GeneratorSet& s,
                                          const DenseOperator& op,
                                          const std::vector<Irrep>& irr) {
  (void)s;
  OracleReport report;
  report.weight = op.weight;
  report.kind = op.kind;
  report.mode = weight_domain_symmetric(op.weight.domain) ? CertifyMode::undirected
                                                          : CertifyMode::directed;

  const int n = op.n;
  Eigen::MatrixXd a = to_double_matrix(op);
  Eigen::MatrixXcd ac = a.cast<std::complex<double>>();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(ac, false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed to converge");
  std::vector<std::complex<double>> lam(es.eigenvalues().data(),
                                        es.eigenvalues().data() + n);

  double radius = 0;
  for (auto z : lam) radius = std::max(radius, std::abs(z));
  const double tol = kClusterScale * (1.0 + radius);

  // Cluster eigenvalues by transitive closeness (union-find on pairs).
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  std::function<int(int)> find = [&](int i) {
    while (parent[static_cast<std::size_t>(i)] != i) {
      parent[static_cast<std::size_t>(i)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])];
      i = parent[static_cast<std::size_t>(i)];
    }
    return i;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(lam[static_cast<std::size_t>(i)] - lam[static_cast<std::size_t>(j)]) <= tol)
        parent[static_cast<std::size_t>(find(i))] = find(j);

  struct Cluster {
    std::complex<double> centroid;
    int count = 0;
    bool used = false;
  };
  std::vector<Cluster> clusters;
  std::vector<int> cluster_of(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (cluster_of[static_cast<std::size_t>(r)] < 0) {
      cluster_of[static_cast<std::size_t>(r)] = static_cast<int>(clusters.size());
      clusters.push_back({});
    }
    Cluster& c = clusters[static_cast<std::size_t>(cluster_of[static_cast<std::size_t>(r)])];
    c.centroid += lam[static_cast<std::size_t>(i)];
    c.count += 1;
  }
  for (auto& c : clusters) c.centroid /= c.count;

  auto class_reps = [&]() {
    std::vector<int> reps;
    for (const auto& cls : g.conjugacy_classes()) reps.push_back(cls[0]);
    return reps;
  }();

  auto finish_record = [&](EigenspaceRecord& rec, const Eigen::MatrixXd& q) {
    rec.real_dimension = static_cast<int>(q.cols());
    // Invariance under the left regular action, then character/multiplicities.
    for (int y = 0; y < g.order(); ++y) {
      Eigen::MatrixXd ly = left_translate(g, y, q);
      double residual = (ly - q * (q.transpose() * ly)).cwiseAbs().maxCoeff();
      if (residual > kInvarianceTol)
        throw std::runtime_error(
            "invariant-subspace extraction failed: residual " + std::to_string(residual) +
            " for eigenvalue " + complex_str(rec.eigenvalue));
    }
    for (int y : class_reps) {
      Eigen::MatrixXd ly = left_translate(g, y, q);
      rec.character.push_back((q.transpose() * ly).trace());
    }
    rec.multiplicities = isotypic_multiplicities_approx(g, irr, rec.character, kMultTol);
    if (rec.defective) {
      rec.irreducible = false;
      rec.type_pattern = "defective";
      report.has_defective = true;
    } else {
      classify(rec, irr);
    }
    report.records.push_back(std::move(rec));
  };

  for (std::size_t ci = 0; ci < clusters.size(); ++ci) {
    Cluster& c = clusters[ci];
    if (c.used) continue;
    c.used = true;
    if (std::abs(c.centroid.imag()) <= tol) {
      // Real eigenvalue: real eigenspace of A.
      double lr = c.centroid.real();
      Eigen::MatrixXd m = a - lr * Eigen::MatrixXd::Identity(n, n);
      Eigen::JacobiSVD<Eigen::MatrixXd> svd_probe(m);
      double scale = svd_probe.singularValues().size()
                         ? svd_probe.singularValues()(0)
                         : 0.0;
      Eigen::MatrixXd q = null_space(m, kClusterScale * (1.0 + scale));
      EigenspaceRecord rec;
      rec.eigenvalue = {lr, 0.0};
      rec.conjugate_pair = false;
      rec.defective = static_cast<int>(q.cols()) < c.count;
      finish_record(rec, q);
    } else {
      // Conjugate pair: locate the partner cluster and take the real
      // kernel of (A - lambda)(A - conj(lambda)).
      std::complex<double> lz = c.centroid;
      int partner = -1;
      for (std::size_t cj = 0; cj < clusters.size(); ++cj) {
        if (cj == ci || clusters[cj].used) continue;
        if (std::abs(std::conj(lz) - clusters[cj].centroid) <= 2 * tol) {
          partner = static_cast<int>(cj);
          break;
        }
      }
      if (partner < 0)
        throw std::runtime_error("conjugate partner not found for eigenvalue " +
                                 complex_str(lz));
      clusters[static_cast<std::size_t>(partner)].used = true;
      if (lz.imag() < 0) lz = std::conj(lz);

      Eigen::MatrixXd b = a * a - 2 * lz.real() * a +
                          std::norm(lz) * Eigen::MatrixXd::Identity(n, n);
      Eigen::JacobiSVD<Eigen::MatrixXd> svd_probe(b);
      double scale = svd_probe.singularValues().size()
                         ? svd_probe.singularValues()(0)
                         : 0.0;
      Eigen::MatrixXd q = null_space(b, kClusterScale * (1.0 + scale));
      int geo = complex_nullity(
          ac - lz * Eigen::MatrixXcd::Identity(n, n), tol * 10);
      EigenspaceRecord rec;
      rec.eigenvalue = lz;
      rec.conjugate_pair = true;
      rec.defective = geo < c.count;
      finish_record(rec, q);
    }
  }

  std::sort(report.records.begin(), report.records.end(),
            [](const EigenspaceRecord& x, const EigenspaceRecord& y) {
              if (x.eigenvalue.real() != y.eigenvalue.real())
                return x.eigenvalue.real() < y.eigenvalue.real();
              return x.eigenvalue.imag() < y.eigenvalue.imag();
            });

  report.g_simple = true;
  for (const auto& rec : report.records)
    if (!rec.defective && !rec.irreducible) report.g_simple = false;
  return report;
}

WeightVector random_weight(const GeneratorSet& s, CertifyMode mode, DetRng& rng) {
  auto draw = [&rng]() {
    long num = rng.next_int(1, 100);
    long den = rng.next_int(1, 10);
    return make_rational(num, den);
  };
  if (mode == CertifyMode::directed) {
    WeightVector w;
    w.domain = WeightDomain::g_plus;
    for (int i = 0; i < s.size(); ++i) w.values.push_back(draw());
    return w;
  }
  auto classes = sprime_classes(s);
  std::vector<Rational> per_class;
  per_class.reserve(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) per_class.push_back(draw());
  return symmetrize(s, per_class, WeightDomain::g_prime_plus);
}

CrossCheckResult cross_check(const Group& g, const GeneratorSet& s, OperatorKind kind,
                             CertifyMode mode, const CriterionReport& criterion,
                             int trials, std::uint64_t seed) {
  if (mode == CertifyMode::undirected && !s.symmetric)
    throw std::invalid_argument("undirected mode requires a symmetric generator set");
  std::vector<Irrep> irr = irreps(g);

  bool any_zero = false;
  for (const auto& c : criterion.conditions)
    if (c.status == "certified_identically_zero") any_zero = true;

  CrossCheckResult out;
  out.trials = trials;
  for (int t = 0; t < trials; ++t) {
    DetRng rng(seed ^ fnv1a("trial:" + std::to_string(t)));
    WeightVector w = random_weight(s, mode, rng);
    DenseOperator op = assemble(g, s, w, kind);
    OracleReport rep = real_invariant_decomposition(g, s, op, irr);
    if (rep.has_defective) {
      ++out.skipped_defective;
      out.diagnostics.push_back("trial " + std::to_string(t) + ": weight " +
                                weight_str(w) +
                                " produced a defective block; excluded from the comparison");
      out.reports.push_back(std::move(rep));
      continue;
    }
    if (criterion.overall == "generic_simple" && !rep.g_simple) {
      out.agreed = false;
      std::string detail = "trial " + std::to_string(t) + ": weight " + weight_str(w) +
                           " is not G-simple despite a generic_simple certificate;";
      for (const auto& rec : rep.records)
        if (!rec.irreducible)
          detail += " reducible eigenvalue " + complex_str(rec.eigenvalue) +
                    " (real dim " + std::to_string(rec.real_dimension) + ")";
      out.diagnostics.push_back(detail);
    }
    if (any_zero && rep.g_simple) {
      out.agreed = false;
      out.diagnostics.push_back(
          "trial " + std::to_string(t) + ": weight " + weight_str(w) +
          " is G-simple despite an identically-zero certified condition");
    }
    out.reports.push_back(std::move(rep));
  }
  return out;
}

std::vector<std::complex<double>> global_spectrum(const DenseOperator& op) {
  Eigen::MatrixXcd ac = to_double_matrix(op).cast<std::complex<double>>();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(ac, false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed to converge");
  std::vector<std::complex<double>> lam(es.eigenvalues().data(),
                                        es.eigenvalues().data() + op.n);
  std::sort(lam.begin(), lam.end(), [](std::complex<double> x, std::complex<double> y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return lam;
}

std::vector<std::complex<double>> block_spectrum(const Group& g, const Irrep& w,
                                                 const GeneratorSet& s,
                                                 const std::vector<Rational>& alpha,
                                                 OperatorKind op) {
  CycMatrix block = operator_block(g, w, s, alpha, op);
  Eigen::MatrixXcd m(w.degree, w.degree);
  for (int i = 0; i < w.degree; ++i)
    for (int j = 0; j < w.degree; ++j) m(i, j) = block.at(i, j).to_complex();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed to converge");
  std::vector<std::complex<double>> lam(es.eigenvalues().data(),
                                        es.eigenvalues().data() + w.degree);
  std::sort(lam.begin(), lam.end(), [](std::complex<double> x, std::complex<double> y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return lam;
}

double spectral_identity_error(const Group& g, const GeneratorSet& s,
                               const WeightVector& w, OperatorKind kind) {
  DenseOperator op = assemble(g, s, w, kind);
  auto global = global_spectrum(op);

  std::vector<std::complex<double>> blocks;
  for (const Irrep& rep : irreps(g)) {
    auto lam = block_spectrum(g, rep, s, w.values, kind);
    for (int copy = 0; copy < rep.degree; ++copy)
      blocks.insert(blocks.end(), lam.begin(), lam.end());
  }
  if (blocks.size() != global.size())
    throw std::logic_error("block spectra do not add up to the group order");

  // Greedy nearest matching; with both multisets equal up to numerical
  // error the maximum matched distance is the identity's defect.
  std::vector<bool> used(blocks.size(), false);
  double worst = 0;
  for (auto z : global) {
    int best = -1;
    double bd = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (used[i]) continue;
      double d = std::abs(z - blocks[i]);
      if (best < 0 || d < bd) {
        best = static_cast<int>(i);
        bd = d;
      }
    }
    used[static_cast<std::size_t>(best)] = true;
    worst = std::max(worst, bd);
  }
  return worst;
}

}  // namespace caylap
