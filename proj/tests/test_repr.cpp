#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "caylap/repr.hpp"

using namespace caylap;

namespace {

std::vector<Group> builtin_groups() {
  return {Group::cyclic(3), Group::cyclic(4), Group::cyclic(6), Group::klein(),
          Group::dihedral(3), Group::dihedral(4), Group::dihedral(5),
          Group::q8(), Group::a4(), Group::s4(),
          Group::product(Group::cyclic(2), Group::cyclic(3))};
}

}  // namespace

TEST_CASE("every builtin irrep passes the exhaustive verifier") {
  for (const Group& g : builtin_groups()) {
    auto irr = irreps(g);
    long sum_sq = 0;
    for (const Irrep& w : irr) {
      verify_irrep(g, w);
      sum_sq += static_cast<long>(w.degree) * w.degree;
      // Identity maps to the identity matrix.
      CHECK(w.matrices[static_cast<std::size_t>(g.identity())] ==
            CycMatrix::identity(w.degree));
    }
    CHECK(sum_sq == g.order());
  }
}

TEST_CASE("character orthogonality") {
  for (const Group& g : builtin_groups()) {
    auto irr = irreps(g);
    for (std::size_t i = 0; i < irr.size(); ++i)
      for (std::size_t j = 0; j < irr.size(); ++j) {
        Cyc ip = character_inner_product(g, irr[i], irr[j]);
        if (i == j)
          CHECK(ip == Cyc::integer(1));
        else
          CHECK(ip.is_zero());
      }
  }
}

TEST_CASE("frobenius-schur indicators") {
  // All S4 irreps are real-type.
  for (const Irrep& w : irreps(Group::s4())) {
    CHECK(fs_indicator(Group::s4(), w) == 1);
    CHECK(w.fs_type == FsType::real_type);
  }
  // Klein: all four characters real.
  for (const Irrep& w : irreps(Group::klein()))
    CHECK(fs_indicator(Group::klein(), w) == 1);
  // Dihedral 2-dim irreps are real-type.
  for (int n : {3, 4, 5, 6})
    for (const Irrep& w : irreps(Group::dihedral(n)))
      if (w.degree == 2) CHECK(fs_indicator(Group::dihedral(n), w) == 1);
  // Cyclic rho_j is complex-type unless 2j = 0 mod n.
  for (int n : {3, 4, 5, 6, 8}) {
    Group g = Group::cyclic(n);
    auto irr = irreps(g);
    for (int j = 0; j < n; ++j) {
      int expect = (2 * j) % n == 0 ? 1 : 0;
      CHECK(fs_indicator(g, irr[static_cast<std::size_t>(j)]) == expect);
    }
  }
  // Q8: four 1-dim real-type irreps and one quaternionic 2-dim.
  {
    Group g = Group::q8();
    auto irr = irreps(g);
    int quaternionic = 0;
    for (const Irrep& w : irr) {
      if (w.degree == 2) {
        CHECK(fs_indicator(g, w) == -1);
        CHECK(w.fs_type == FsType::quaternionic_type);
        ++quaternionic;
      } else {
        CHECK(fs_indicator(g, w) == 1);
      }
    }
    CHECK(quaternionic == 1);
  }
  // fs_type always matches the computed indicator.
  for (const Group& g : builtin_groups())
    for (const Irrep& w : irreps(g)) {
      int ind = fs_indicator(g, w);
      FsType t = ind == 1 ? FsType::real_type
                          : ind == 0 ? FsType::complex_type
                                     : FsType::quaternionic_type;
      CHECK(w.fs_type == t);
    }
}

TEST_CASE("duality is an involution matching conjugate characters") {
  for (const Group& g : builtin_groups()) {
    auto irr = irreps(g);
    for (std::size_t i = 0; i < irr.size(); ++i) {
      int d = irr[i].dual_index;
      REQUIRE(d >= 0);
      REQUIRE(d < static_cast<int>(irr.size()));
      CHECK(irr[static_cast<std::size_t>(d)].dual_index == static_cast<int>(i));
      for (int x = 0; x < g.order(); ++x)
        CHECK(irr[static_cast<std::size_t>(d)].character(x) ==
              irr[i].character(x).conj());
      // Self-dual iff not complex-type.
      CHECK((d == static_cast<int>(i)) ==
            (irr[i].fs_type != FsType::complex_type));
    }
  }
}

TEST_CASE("regular character identity") {
  for (const Group& g : {Group::dihedral(4), Group::q8(), Group::a4()}) {
    auto irr = irreps(g);
    for (int x = 0; x < g.order(); ++x) {
      Cyc total = Cyc::integer(0);
      for (const Irrep& w : irr)
        total = total + Cyc::integer(w.degree) * w.character(x);
      CHECK(total == (x == g.identity() ? Cyc::integer(g.order())
                                        : Cyc::integer(0)));
    }
  }
}

TEST_CASE("character table layout") {
  Group g = Group::s4();
  auto irr = irreps(g);
  CharacterTable t = character_table(g, irr);
  REQUIRE(t.class_rep.size() == 5);
  CHECK(t.class_rep[0] == g.identity());
  int total = 0;
  for (int s : t.class_size) total += s;
  CHECK(total == g.order());
  REQUIRE(t.irrep_names.size() == irr.size());
  for (std::size_t i = 0; i < irr.size(); ++i) {
    CHECK(t.irrep_names[i] == irr[i].name);
    CHECK(t.chi[i][0] == Cyc::integer(irr[i].degree));
    for (std::size_t c = 0; c < t.class_rep.size(); ++c)
      CHECK(t.chi[i][c] == irr[i].character(t.class_rep[c]));
  }
}

TEST_CASE("isotypic multiplicities") {
  for (const Group& g : {Group::klein(), Group::a4(), Group::q8()}) {
    auto irr = irreps(g);
    auto classes = g.conjugacy_classes();
    // Regular representation: multiplicity = degree for every irrep.
    std::vector<Cyc> reg;
    for (const auto& c : classes)
      reg.push_back(c.front() == g.identity() ? Cyc::integer(g.order())
                                              : Cyc::integer(0));
    auto mult = isotypic_multiplicities(g, irr, reg);
    REQUIRE(mult.size() == irr.size());
    for (std::size_t i = 0; i < irr.size(); ++i)
      CHECK(mult[i] == irr[i].degree);
    // Single-irrep characters decompose to a unit vector.
    for (std::size_t i = 0; i < irr.size(); ++i) {
      std::vector<Cyc> chi;
      for (const auto& c : classes) chi.push_back(irr[i].character(c.front()));
      auto m = isotypic_multiplicities(g, irr, chi);
      for (std::size_t j = 0; j < irr.size(); ++j)
        CHECK(m[j] == (i == j ? 1 : 0));
    }
    // A non-character class function is rejected.
    std::vector<Cyc> junk(classes.size(), Cyc::rational(1, 3));
    CHECK_THROWS_AS(isotypic_multiplicities(g, irr, junk), std::domain_error);
  }
}

TEST_CASE("approximate multiplicities tolerate float noise") {
  Group g = Group::a4();
  auto irr = irreps(g);
  auto classes = g.conjugacy_classes();
  std::vector<std::complex<double>> chi;
  for (const auto& c : classes) {
    std::complex<double> v = irr[3].character(c.front()).to_complex();
    chi.push_back(v + std::complex<double>(3e-8, -2e-8));
  }
  auto m = isotypic_multiplicities_approx(g, irr, chi, 1e-6);
  for (std::size_t j = 0; j < irr.size(); ++j)
    CHECK(m[j] == (j == 3 ? 1 : 0));
  // Garbage outside tolerance throws.
  chi[0] += std::complex<double>(0.3, 0.0);
  CHECK_THROWS_AS(isotypic_multiplicities_approx(g, irr, chi, 1e-6),
                  std::domain_error);
}

TEST_CASE("kronecker products") {
  CycMatrix a = CycMatrix::identity(2);
  CycMatrix b(3, 3);
  for (int i = 0; i < 3; ++i) b.at(i, i) = Cyc::integer(i + 1);
  CycMatrix k = kronecker(a, b);
  REQUIRE(k.rows() == 6);
  CHECK(k.at(0, 0) == Cyc::integer(1));
  CHECK(k.at(5, 5) == Cyc::integer(3));
  CHECK(k.at(0, 3).is_zero());
  // Product-group irreps are kroneckers of the factors'.
  Group p = Group::product(Group::cyclic(2), Group::cyclic(2));
  auto irr = irreps(p);
  CHECK(irr.size() == 4);
  long sum_sq = 0;
  for (const Irrep& w : irr) sum_sq += static_cast<long>(w.degree) * w.degree;
  CHECK(sum_sq == 4);
}

TEST_CASE("irreps are refused for explicit tables") {
  std::vector<std::vector<int>> z2 = {{0, 1}, {1, 0}};
  GroupSpec spec;
  spec.kind = "explicit";
  Group g = Group::from_table(z2, {"e", "x"}, spec);
  CHECK_THROWS_AS(irreps(g), std::invalid_argument);
}
