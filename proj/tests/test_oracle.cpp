#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "caylap/oracle.hpp"

using namespace caylap;

namespace {

WeightVector plain_weights(const GeneratorSet& s, std::vector<Rational> v,
                           bool symmetric_domain = false) {
  WeightVector w;
  w.domain = symmetric_domain ? WeightDomain::g_prime_plus : WeightDomain::g_plus;
  w.values = std::move(v);
  return w;
}

}  // namespace

TEST_CASE("assembly of the dense operators") {
  Group g = Group::cyclic(3);
  auto s = validate_generators(g, {1});
  WeightVector w = plain_weights(s, {Rational(1)});

  DenseOperator lap = assemble(g, s, w, OperatorKind::laplacian);
  REQUIRE(lap.n == 3);
  for (int x = 0; x < 3; ++x) {
    CHECK(lap.a[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)] ==
          Rational(-1));
    CHECK(lap.a[static_cast<std::size_t>(x)][static_cast<std::size_t>(g.mul(x, 1))] ==
          Rational(1));
    Rational row_sum(0);
    for (const auto& v : lap.a[static_cast<std::size_t>(x)]) row_sum += v;
    CHECK(row_sum == 0);
  }

  DenseOperator lw = assemble(g, s, w, OperatorKind::lw);
  // L_w delta-action: rows sum to zero as well.
  for (int x = 0; x < 3; ++x) {
    Rational row_sum(0);
    for (const auto& v : lw.a[static_cast<std::size_t>(x)]) row_sum += v;
    CHECK(row_sum == 0);
  }
  // Matches the closed form: column at delta_e reproduces (-1, -1, 2) as
  // the values of L_w(delta_e) at (e, a, a^2).
  CHECK(lw.a[0][0] == Rational(-1));
  CHECK(lw.a[1][0] == Rational(-1));
  CHECK(lw.a[2][0] == Rational(2));
}

TEST_CASE("assembled operators commute with left translations") {
  for (const char* desc : {"dihedral:3", "q8", "a4"}) {
    Group g = parse_group(desc);
    std::vector<int> gens;
    if (g.spec().kind == "dihedral")
      gens = {g.element_by_name("r"), g.element_by_name("s")};
    else if (g.spec().kind == "q8")
      gens = {g.element_by_name("i"), g.element_by_name("j")};
    else
      gens = {g.element_by_name("t"), g.element_by_name("x")};
    auto s = validate_generators(g, gens);
    WeightVector w = plain_weights(s, {make_rational(3, 2), Rational(2)});
    for (OperatorKind op : {OperatorKind::laplacian, OperatorKind::lw}) {
      DenseOperator dense = assemble(g, s, w, op);
      CHECK(commutes_with_left_translations(g, dense));
      DenseOperator broken = dense;
      broken.a[0][1] += Rational(1, 1);
      CHECK(!commutes_with_left_translations(g, broken));
    }
  }
}

TEST_CASE("decomposition of the unweighted directed 3-cycle") {
  Group g = Group::cyclic(3);
  auto s = validate_generators(g, {1});
  auto irr = irreps(g);
  WeightVector w = plain_weights(s, {Rational(1)});
  DenseOperator dense = assemble(g, s, w, OperatorKind::laplacian);
  OracleReport rep = real_invariant_decomposition(g, s, dense, irr);
  CHECK(rep.g_simple);
  CHECK(!rep.has_defective);
  REQUIRE(rep.records.size() == 2);
  // Sorted by (re, im): the conjugate pair at zeta_3 - 1 = (-3/2, ±√3/2)
  // precedes the simple eigenvalue 0.
  const EigenspaceRecord& pair = rep.records[0];
  CHECK(pair.conjugate_pair);
  CHECK(pair.real_dimension == 2);
  CHECK(std::abs(pair.eigenvalue.real() + 1.5) < 1e-9);
  CHECK(std::abs(pair.eigenvalue.imag() - std::sqrt(3.0) / 2) < 1e-9);
  CHECK(pair.irreducible);
  CHECK(pair.type_pattern == "W + W* complex-type");
  CHECK(pair.multiplicities == std::vector<int>{0, 1, 1});
  const EigenspaceRecord& zero = rep.records[1];
  CHECK(!zero.conjugate_pair);
  CHECK(zero.real_dimension == 1);
  CHECK(std::abs(zero.eigenvalue.real()) < 1e-9);
  CHECK(zero.type_pattern == "single real-type W");
  CHECK(zero.multiplicities == std::vector<int>{1, 0, 0});
}

TEST_CASE("real dimensions always sum to the group order") {
  struct Case {
    const char* desc;
    std::vector<const char*> gens;
  };
  for (const Case& c : {Case{"s4", {"tau", "sigma"}}, Case{"a4", {"t", "x"}},
                        Case{"q8", {"i", "j"}}, Case{"dihedral:4", {"r", "s"}}}) {
    Group g = parse_group(c.desc);
    std::vector<int> gens;
    for (const char* n : c.gens) gens.push_back(g.element_by_name(n));
    auto s = validate_generators(g, gens);
    auto irr = irreps(g);
    DetRng rng(99);
    for (int trial = 0; trial < 3; ++trial) {
      WeightVector w = random_weight(s, CertifyMode::directed, rng);
      for (OperatorKind op : {OperatorKind::laplacian, OperatorKind::lw}) {
        OracleReport rep =
            real_invariant_decomposition(g, s, assemble(g, s, w, op), irr);
        int total = 0;
        for (const auto& r : rep.records) total += r.real_dimension;
        CHECK(total == g.order());
        // The record character accounts for its whole real subspace, so the
        // isotypic content matches the real dimension exactly.
        int weighted = 0;
        for (const auto& r : rep.records) {
          if (r.defective) continue;
          int dims = 0;
          for (std::size_t i = 0; i < irr.size(); ++i)
            dims += r.multiplicities[i] * irr[i].degree;
          CHECK(dims == r.real_dimension);
          weighted += dims;
        }
        if (!rep.has_defective) CHECK(weighted == g.order());
      }
    }
  }
}

TEST_CASE("undirected symmetric weights give real spectra") {
  Group g = Group::a4();
  int t = g.element_by_name("t");
  auto s = validate_generators(g, {t, g.mul(t, t), g.element_by_name("x")}, true);
  auto irr = irreps(g);
  DetRng rng(7);
  WeightVector w = random_weight(s, CertifyMode::undirected, rng);
  DenseOperator dense = assemble(g, s, w, OperatorKind::laplacian);
  OracleReport rep = real_invariant_decomposition(g, s, dense, irr);
  for (const auto& r : rep.records) {
    CHECK(!r.conjugate_pair);
    CHECK(std::abs(r.eigenvalue.imag()) < 1e-10);
  }
}

TEST_CASE("quaternionic blocks on directed q8 pair up irreducibly") {
  Group g = Group::q8();
  auto s = validate_generators(g, {g.element_by_name("i"), g.element_by_name("j")});
  auto irr = irreps(g);
  DetRng rng(11);
  WeightVector w = random_weight(s, CertifyMode::directed, rng);
  DenseOperator dense = assemble(g, s, w, OperatorKind::laplacian);
  OracleReport rep = real_invariant_decomposition(g, s, dense, irr);
  bool saw_quaternionic_pair = false;
  for (const auto& r : rep.records)
    if (r.conjugate_pair && r.type_pattern == "2W conjugate pair") {
      // The whole 4-dim quaternionic isotypic block pairs up: the record
      // character is 2 chi_H, real dimension 4.
      saw_quaternionic_pair = true;
      CHECK(r.real_dimension == 4);
      CHECK(r.irreducible);
    }
  CHECK(saw_quaternionic_pair);
}

TEST_CASE("spectral identity between global and block spectra") {
  struct Case {
    const char* desc;
    std::vector<const char*> gens;
  };
  for (const Case& c : {Case{"s4", {"tau", "sigma"}}, Case{"q8", {"i", "j"}},
                        Case{"dihedral:4", {"r", "s"}}}) {
    Group g = parse_group(c.desc);
    std::vector<int> gens;
    for (const char* n : c.gens) gens.push_back(g.element_by_name(n));
    auto s = validate_generators(g, gens);
    DetRng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
      WeightVector w = random_weight(s, CertifyMode::directed, rng);
      for (OperatorKind op : {OperatorKind::laplacian, OperatorKind::lw})
        CHECK(spectral_identity_error(g, s, w, op) <= 1e-8);
    }
  }
}

TEST_CASE("cross-check agrees on settled verdicts") {
  {
    Group g = Group::klein();
    auto s = validate_generators(
        g, {g.element_by_name("a"), g.element_by_name("b")});
    CriterionReport cr = certify(g, s, OperatorKind::laplacian,
                                 CertifyMode::directed, 64, 0);
    REQUIRE(cr.overall == "generic_simple");
    CrossCheckResult res =
        cross_check(g, s, OperatorKind::laplacian, CertifyMode::directed, cr, 5, 0);
    CHECK(res.agreed);
    CHECK(res.trials == 5);
    CHECK(res.reports.size() == 5);
    for (const auto& rep : res.reports) CHECK(rep.g_simple);
  }
  {
    Group g = Group::cyclic(4);
    auto s = validate_generators(g, {1, 3}, true);
    CriterionReport cr = certify(g, s, OperatorKind::laplacian,
                                 CertifyMode::undirected, 64, 0);
    REQUIRE(cr.overall == "not_generic_simple");
    CrossCheckResult res = cross_check(g, s, OperatorKind::laplacian,
                                       CertifyMode::undirected, cr, 5, 0);
    CHECK(res.agreed);
    for (const auto& rep : res.reports) {
      CHECK(!rep.g_simple);
      // The predicted coincidence: rho1 and rho3 meet in one eigenspace.
      bool found = false;
      for (const auto& r : rep.records)
        if (!r.defective && r.multiplicities[1] >= 1 && r.multiplicities[3] >= 1 &&
            !r.irreducible)
          found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("random weights honor domain and positivity") {
  Group g = Group::dihedral(4);
  auto s = validate_generators(
      g, {g.element_by_name("r"), g.element_by_name("r3"), g.element_by_name("s")},
      true);
  DetRng rng(3);
  for (int i = 0; i < 10; ++i) {
    WeightVector wd = random_weight(s, CertifyMode::directed, rng);
    CHECK(wd.domain == WeightDomain::g_plus);
    for (const auto& v : wd.values) CHECK(v > 0);
    WeightVector wu = random_weight(s, CertifyMode::undirected, rng);
    CHECK(wu.domain == WeightDomain::g_prime_plus);
    CHECK_NOTHROW(check_weight_vector(s, wu));
    // Mirror consistency: positions 0 (r) and 1 (r^3) share a value.
    CHECK(wu.values[0] == wu.values[1]);
  }
}

TEST_CASE("global and block spectra are consistently sorted") {
  Group g = Group::cyclic(4);
  auto s = validate_generators(g, {1});
  WeightVector w = plain_weights(s, {Rational(1)});
  DenseOperator dense = assemble(g, s, w, OperatorKind::laplacian);
  auto spec = global_spectrum(dense);
  REQUIRE(spec.size() == 4);
  for (std::size_t i = 1; i < spec.size(); ++i) {
    bool ordered = spec[i - 1].real() < spec[i].real() + 1e-12 ||
                   (std::abs(spec[i - 1].real() - spec[i].real()) < 1e-12 &&
                    spec[i - 1].imag() <= spec[i].imag() + 1e-12);
    CHECK(ordered);
  }
  // Eigenvalues of the directed 4-cycle: i^k - 1.
  int hits = 0;
  for (auto z : spec)
    for (auto want : {std::complex<double>(0, 0), std::complex<double>(-1, 1),
                      std::complex<double>(-2, 0), std::complex<double>(-1, -1)})
      if (std::abs(z - want) < 1e-9) ++hits;
  CHECK(hits == 4);
}
