#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "caylap/cayley.hpp"
#include "caylap/matrix.hpp"
#include "caylap/polynomial.hpp"
#include "caylap/repr.hpp"
#include "caylap/weights.hpp"

namespace caylap {

enum class OperatorKind { laplacian, lw };
const char* operator_kind_name(OperatorKind k);
OperatorKind operator_kind_from_name(const std::string& name);

enum class CertifyMode { directed, undirected };
const char* certify_mode_name(CertifyMode m);
CertifyMode certify_mode_from_name(const std::string& name);

/// Per-irrep first-order block D_W(alpha) = sum_s alpha_s (rho(s) - id).
/// (Some sources write the negated operator; all zero/nonzero verdicts are
/// invariant under the global sign, and this sign reproduces the worked
/// eigenvalues, e.g. the S4 degree-1 eigenvalue 4.)
CycMatrix d_matrix(const Group& g, const Irrep& w, const GeneratorSet& s,
                   const std::vector<Rational>& alpha);

/// Second-order block -sum_s alpha_s (rho(s^2) - 2 rho(s) + rho(e)),
/// equal to -sum_s alpha_s (rho(s) - id)^2.
CycMatrix dtilde_matrix(const Group& g, const Irrep& w, const GeneratorSet& s,
                        const std::vector<Rational>& alpha);

/// The block for the chosen operator.
CycMatrix operator_block(const Group& g, const Irrep& w, const GeneratorSet& s,
                         const std::vector<Rational>& alpha, OperatorKind op);

/// Resultant conditions:
///   'a' : res(P_{W1}, P_{W2})   (W2 required)
///   'b' : res(P_W, P_W')
///   'c' : res(P_W, P_W'')       (throws std::domain_error when deg P < 2,
///                                where P'' vanishes identically)
Cyc abc_eval(char kind, const Group& g, const Irrep& w1, const Irrep* w2,
             const GeneratorSet& s, const std::vector<Rational>& alpha,
             OperatorKind op);

/// Outcome of the exact zero-decision procedure for one condition.
struct ZeroDecision {
  std::string result;  // "identically_zero" | "nonzero" | "undecided"
  std::string method;  // "linear_form_comparison" | "grid_evaluation" | ""
  std::vector<Rational> witness;  // free-coordinate point when result == "nonzero"
};

/// Decide exactly whether a condition vanishes identically on the chosen
/// weight space (full coordinates when mode is directed, mirrored S'-class
/// coordinates when undirected). See the implementation notes: degree-1
/// pairs compare linear forms; low-dimensional cases use a grid whose size
/// exceeds the condition's homogeneity degree; otherwise undecided.
ZeroDecision decide_identically_zero(char kind, const Group& g, const Irrep& w1,
                                     const Irrep* w2, const GeneratorSet& s,
                                     CertifyMode mode, OperatorKind op);

/// One certified condition in a report.
struct Condition {
  std::string kind;                 // "a" | "b" | "c"
  std::vector<std::string> irreps;  // names involved (two for "a", one else)
  std::string status;  // certified_nonzero | certified_identically_zero | no_witness_found
  std::optional<WeightVector> witness;  // full generator coordinates
  std::optional<Cyc> witness_value;
  int trials_used = 0;
  long degree_bound = 0;   // homogeneity degree of the condition in alpha
  std::string zero_proof;  // method when status = certified_identically_zero
};

struct CriterionReport {
  std::string group;                     // descriptor of the group
  std::vector<std::string> generators;   // element names of S in order
  OperatorKind op = OperatorKind::laplacian;
  CertifyMode mode = CertifyMode::directed;
  bool restricted = false;
  std::uint64_t seed = 0;
  int budget = 0;
  std::vector<Condition> conditions;
  std::string overall;  // generic_simple | not_generic_simple | inconclusive
  long trial_budget_used = 0;
};

/// Certify generic real G-simplicity of the chosen operator via the
/// resultant conditions: 'a' over all unordered pairs of distinct irreps,
/// 'b' over real/complex-type irreps, 'c' over quaternionic ones —
/// evaluated on full coordinates (directed) or mirrored coordinates
/// (undirected; requires symmetric S). Witness search: canonical basis
/// vectors, fixed small-integer patterns, then seeded random integer
/// points in [-10, 10]; every evaluation is exact, so one nonzero value
/// proves the condition, and exhausted budgets fall back to
/// decide_identically_zero. With restricted = true (undirected only), the
/// conditions run over the nonzero restrictions to the subspaces
/// A_S^rho = intersection over s of ker(rho(s) - rho(s^{-1})) with the
/// collapsed generator set S'.
CriterionReport certify(const Group& g, const GeneratorSet& s, OperatorKind op,
                        CertifyMode mode, int budget, std::uint64_t seed,
                        bool restricted = false);

/// The subspace A_S^rho (exact kernel intersection), its per-element
/// restricted matrices (computed by solving rho(g) * basis = basis * m;
/// throws std::domain_error if the subspace fails to be invariant under
/// some rho(g)), and classification data when nonzero.
struct RestrictedIrrep {
  int source = -1;  // index into the group's irrep list
  std::string name;
  int dim = 0;
  std::vector<std::vector<Cyc>> basis;  // column vectors spanning A_S^rho
  std::vector<CycMatrix> matrices;      // per group element, dim x dim
  FsType fs_type = FsType::real_type;
  int dual_index = -1;  // within the restricted family
};

/// A_S^rho data for a single irrep (dim may be 0; matrices empty then).
RestrictedIrrep restricted_subspace(const Group& g, const Irrep& w, int source_index,
                                    const GeneratorSet& s);

/// All nonzero restrictions, deduplicated by character, with
/// Frobenius-Schur types and dual pairing computed on the restrictions.
std::vector<RestrictedIrrep> restricted_family(const Group& g,
                                               const std::vector<Irrep>& irr,
                                               const GeneratorSet& s);

}  // namespace caylap
