#pragma once

#include <complex>
#include <string>
#include <vector>

#include "caylap/group.hpp"
#include "caylap/matrix.hpp"

namespace caylap {

/// Frobenius-Schur type of a complex irreducible representation.
enum class FsType { real_type, complex_type, quaternionic_type };
const char* fs_type_name(FsType t);  // "real" | "complex" | "quaternionic"

/// A complex irreducible representation with one exact matrix per group
/// element (group orders in scope are tiny, so the full table is cheap).
struct Irrep {
  std::string name;
  int degree = 0;
  std::vector<CycMatrix> matrices;  // indexed by group element
  FsType fs_type = FsType::real_type;
  int dual_index = -1;  // position of the dual W* in the group's irrep list

  Cyc character(int g) const { return matrices[static_cast<std::size_t>(g)].trace(); }
};

/// The complete irreducible-representation list of a built-in group (or a
/// product of built-ins), in the documented stable order, with fs_type and
/// dual_index filled in. Throws std::invalid_argument for explicit-table
/// groups, which carry no representation data.
std::vector<Irrep> irreps(const Group& g);

/// Frobenius-Schur indicator (1/|G|) sum_g chi(g^2), always 1, 0 or -1.
int fs_indicator(const Group& g, const Irrep& w);

/// <chi_a, chi_b> = (1/|G|) sum_g chi_a(g) conj(chi_b(g)), exact.
Cyc character_inner_product(const Group& g, const Irrep& a, const Irrep& b);

/// Exhaustive invariant check: homomorphism over all pairs, identity at e,
/// <chi, chi> = 1. Throws std::logic_error on violation.
void verify_irrep(const Group& g, const Irrep& w);

/// Character table over conjugacy classes (classes ordered as in
/// Group::conjugacy_classes; representatives are the smallest members).
struct CharacterTable {
  std::vector<int> class_rep;
  std::vector<int> class_size;
  std::vector<std::string> irrep_names;
  std::vector<std::vector<Cyc>> chi;  // chi[irrep][class]
};
CharacterTable character_table(const Group& g, const std::vector<Irrep>& irr);

/// Multiplicities m_W = <char, chi_W> of a class function given exactly per
/// conjugacy class. Throws std::domain_error if any inner product fails to
/// be a nonnegative integer.
std::vector<int> isotypic_multiplicities(const Group& g,
                                         const std::vector<Irrep>& irr,
                                         const std::vector<Cyc>& char_by_class);

/// Float variant for the oracle: each inner product must land within tol of
/// an integer, else std::domain_error (a numerically broken eigenspace).
std::vector<int> isotypic_multiplicities_approx(
    const Group& g, const std::vector<Irrep>& irr,
    const std::vector<std::complex<double>>& char_by_class, double tol = 1e-6);

/// Kronecker product, used for product-group irreps.
CycMatrix kronecker(const CycMatrix& a, const CycMatrix& b);

}  // namespace caylap
