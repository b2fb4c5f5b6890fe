#pragma once

#include <map>
#include <string>
#include <vector>

namespace caylap {

/// How a group was built. Irrep construction dispatches on this tree: the
/// built-in kinds carry their classical character data, products tensor the
/// factors', and explicit tables get no irreps (certification needs them).
struct GroupSpec {
  std::string kind;  // cyclic | dihedral | klein | a4 | s4 | q8 | product | explicit
  int n = 0;         // parameter for cyclic/dihedral
  std::vector<GroupSpec> factors;  // for product

  std::string to_string() const;
};

/// A finite group as a dense multiplication table. Element 0 is always the
/// identity; names are the canonical element labels used everywhere (CLI,
/// reports, DOT export).
class Group {
 public:
  static Group cyclic(int n);
  static Group dihedral(int n);  // order 2n, indices 0..n-1 = r^k, n+k = s*r^k
  static Group klein();
  static Group a4();
  static Group s4();
  static Group q8();
  static Group product(const Group& g1, const Group& g2);
  /// Explicit table; checks the group axioms (throws std::invalid_argument).
  static Group from_table(std::vector<std::vector<int>> mul,
                          std::vector<std::string> names, GroupSpec spec);
  static Group from_table(std::vector<std::vector<int>> mul,
                          std::vector<std::string> names, GroupSpec spec,
                          std::map<std::string, int> aliases);

  int order() const { return static_cast<int>(mul_.size()); }
  /// Smallest m with every built-in irrep entry of this group inside
  /// Q(zeta_m); 1 for explicit tables (which carry no irreps).
  int cyclotomic_order() const { return cyclotomic_order_; }
  int identity() const { return 0; }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  const std::string& name(int g) const { return names_[g]; }
  const GroupSpec& spec() const { return spec_; }

  bool is_abelian() const;
  int element_order(int g) const;

  /// Resolve an element label: canonical name first, then the documented
  /// aliases (a4: t, x; s4: tau, sigma), then a bare numeric index.
  /// Throws std::invalid_argument for unknown labels.
  int element_by_name(const std::string& label) const;

  /// Conjugacy classes; the identity's class comes first, the rest are
  /// ordered by their smallest element index. Classes are sorted internally.
  const std::vector<std::vector<int>>& conjugacy_classes() const;
  int class_of(int g) const;

  /// Full axiom check (closure/associativity/identity/inverses); throws
  /// std::invalid_argument with a description on failure.
  void validate() const;

 private:
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  std::vector<std::string> names_;
  std::map<std::string, int> aliases_;
  GroupSpec spec_;
  int cyclotomic_order_ = 1;

  mutable std::vector<std::vector<int>> classes_;  // lazily computed
  mutable std::vector<int> class_index_;

  Group() = default;
  void finish();  // compute inverses, sanity-check identity row/column
};

/// Parse a group descriptor:
///   cyclic:N  dihedral:N  klein  a4  s4  q8
///   product(D1,D2)            (nesting allowed)
///   cyclic(N) / dihedral(N)   (paren form also accepted)
///   @file.json                explicit table {"order":n,"mul":[[...]],"names":[...]}
///   {...}                     the same JSON inline
Group parse_group(const std::string& descriptor);

/// Permutation helpers shared by the a4/s4 builders and tests.
/// Composition convention: (p*q)(i) = p(q(i)).
std::vector<int> perm_mul(const std::vector<int>& p, const std::vector<int>& q);
/// Cycle-notation name, 1-based, min-first cycles sorted by first entry,
/// fixed points omitted; the identity prints as "e".
std::string perm_name(const std::vector<int>& p);

}  // namespace caylap
