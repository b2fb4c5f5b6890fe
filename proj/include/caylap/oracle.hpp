#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "caylap/criteria.hpp"
#include "caylap/util.hpp"

namespace caylap {

/// The assembled |G| x |G| operator, exact.
struct DenseOperator {
  int n = 0;
  OperatorKind kind = OperatorKind::laplacian;
  WeightVector weight;
  std::vector<std::vector<Rational>> a;  // a[x][z], row x = equation at vertex x
};

/// Assemble the operator from right-translation tables; entries are exact
/// rationals. Requires strictly positive weights of matching length.
DenseOperator assemble(const Group& g, const GeneratorSet& s, const WeightVector& w,
                       OperatorKind kind);

/// Exact check that the operator commutes with every left-translation
/// permutation (the defining invariance).
bool commutes_with_left_translations(const Group& g, const DenseOperator& op);

/// One invariant subspace found by the floating-point decomposition:
/// either a real eigenvalue's real eigenspace or, for a conjugate pair,
/// the real span of real/imaginary parts of the two complex eigenspaces.
struct EigenspaceRecord {
  std::complex<double> eigenvalue;  // pair records store the member with im > 0
  bool conjugate_pair = false;
  int real_dimension = 0;
  std::vector<std::complex<double>> character;  // per conjugacy class
  std::vector<int> multiplicities;              // per irrep, of the complexification
  bool defective = false;  // geometric < algebraic multiplicity
  bool irreducible = false;  // meaningful only when !defective
  /// "single real-type W" | "2W quaternionic" | "W + W* complex-type" |
  /// "2W conjugate pair" | "reducible" | "defective"
  std::string type_pattern;
};

struct OracleReport {
  WeightVector weight;
  OperatorKind kind = OperatorKind::laplacian;
  CertifyMode mode = CertifyMode::directed;
  std::vector<EigenspaceRecord> records;
  bool g_simple = false;  // every non-defective record irreducible
  bool has_defective = false;
};

/// Complex eigendecomposition, eigenvalue clustering at absolute tolerance
/// 1e-8 * (1 + spectral radius), real invariant subspaces by SVD nullspaces,
/// left-translation invariance verified to 1e-8, characters by tr(Q^T L(y) Q),
/// multiplicities by rounded character inner products (tolerance 1e-6).
/// Records are sorted by eigenvalue (re, im) for determinism.
OracleReport real_invariant_decomposition(const Group& g, const GeneratorSet& s,
                                          const DenseOperator& op,
                                          const std::vector<Irrep>& irr);

/// Random positive weight: numerators in [1, 100], denominators in [1, 10];
/// sampled per S'-class and mirrored in undirected mode.
WeightVector random_weight(const GeneratorSet& s, CertifyMode mode, DetRng& rng);

struct CrossCheckResult {
  int trials = 0;
  int skipped_defective = 0;
  bool agreed = true;
  std::vector<std::string> diagnostics;
  std::vector<OracleReport> reports;
};

/// Sample `trials` random positive weights and compare the oracle verdict
/// against the certified one: overall generic_simple demands g_simple at
/// every sampled weight, any certified_identically_zero condition demands
/// g_simple false at every sampled weight. Weights with defective blocks
/// are excluded from the comparison and reported. Disagreements set
/// agreed = false with full diagnostics.
CrossCheckResult cross_check(const Group& g, const GeneratorSet& s, OperatorKind kind,
                             CertifyMode mode, const CriterionReport& criterion,
                             int trials, std::uint64_t seed);

/// Eigenvalues of the assembled operator, sorted by (re, im).
std::vector<std::complex<double>> global_spectrum(const DenseOperator& op);

/// Eigenvalues of one per-irrep block at a rational weight, sorted by (re, im).
std::vector<std::complex<double>> block_spectrum(const Group& g, const Irrep& w,
                                                 const GeneratorSet& s,
                                                 const std::vector<Rational>& alpha,
                                                 OperatorKind op);

/// Maximum distance achieved when greedily matching the global spectrum
/// against the union over irreps W of dim(W) copies of the block spectrum.
/// Near zero exactly when the block decomposition identity holds.
double spectral_identity_error(const Group& g, const GeneratorSet& s,
                               const WeightVector& w, OperatorKind kind);

}  // namespace caylap
