// Acceptance gate: one line per criterion, PASS only if every check in the
// criterion held. Exits nonzero if any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "caylap/calculus.hpp"
#include "caylap/criteria.hpp"
#include "caylap/oracle.hpp"

using namespace caylap;

namespace {

int section_failures = 0;

#define GATE_CHECK(cond)                                                     \
  do {                                                                       \
    if (!(cond)) {                                                           \
      std::cout << "  [FAIL] " << __FILE__ << ":" << __LINE__ << "  " #cond  \
                << "\n";                                                     \
      ++section_failures;                                                    \
    }                                                                        \
  } while (0)

CycPoly int_poly(std::vector<long> ascending) {
  std::vector<Cyc> c;
  for (long v : ascending) c.push_back(Cyc::integer(v));
  return CycPoly(std::move(c));
}

GeneratorSet gens_by_name(const Group& g, const std::vector<std::string>& names,
                          bool symmetric = false) {
  std::vector<int> elems;
  for (const auto& n : names) elems.push_back(g.element_by_name(n));
  return validate_generators(g, elems, symmetric);
}

// ---------------------------------------------------------------- criterion 1

void criterion_exact_charpolys() {
  {
    Group g = Group::a4();
    auto s = gens_by_name(g, {"t", "x"});
    auto irr = irreps(g);
    GATE_CHECK(char_poly(d_matrix(g, irr[3], s, {Rational(1), Rational(1)})) ==
               int_poly({8, 15, 7, 1}));
  }
  {
    Group g = Group::s4();
    auto s = gens_by_name(g, {"tau", "sigma"});
    auto irr = irreps(g);
    std::vector<Rational> alpha = {Rational(-2), Rational(1)};
    auto block = [&](const std::string& name) {
      for (const Irrep& w : irr)
        if (w.name == name) return char_poly(d_matrix(g, w, s, alpha));
      return CycPoly();
    };
    GATE_CHECK(block("W21") == int_poly({-3, -1, 1}));
    GATE_CHECK(block("W31") == int_poly({4, 5, -5, 1}));
    GATE_CHECK(block("W32") == int_poly({-8, -7, -1, 1}));
    GATE_CHECK(block("W11") == int_poly({0, 1}));
    GATE_CHECK(block("W12") == int_poly({-4, 1}));
  }
  for (int n : {3, 4, 5, 6}) {
    Group g = Group::dihedral(n);
    auto s = gens_by_name(g, {"r", "s"});
    for (const Irrep& w : irreps(g)) {
      if (w.degree != 2) continue;
      int m = std::stoi(w.name.substr(1));
      Cyc lam1 = Cyc::zeta(n, m) - Cyc::integer(1);
      Cyc lam2 = Cyc::zeta(n, (n - m) % n) - Cyc::integer(1);
      CycPoly expect =
          CycPoly({-lam1, Cyc::integer(1)}) * CycPoly({-lam2, Cyc::integer(1)});
      GATE_CHECK(char_poly(d_matrix(g, w, s, {Rational(1), Rational(0)})) == expect);
    }
  }
}

// ---------------------------------------------------------------- criterion 2

std::vector<std::vector<int>> symmetric_generating_subsets(int n) {
  // Subsets of {1..n-1} closed under negation mod n that generate Z_n.
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> s;
    bool symmetric = true;
    int gcd_all = n;
    for (int k = 1; k < n; ++k)
      if (mask & (1u << (k - 1))) {
        s.push_back(k);
        gcd_all = std::gcd(gcd_all, k);
        if (!(mask & (1u << ((n - k) % n - 1)))) symmetric = false;
      }
    if (symmetric && gcd_all == 1) out.push_back(std::move(s));
  }
  return out;
}

void criterion_verdicts() {
  // Directed n-cycles on a full-order generator are generically simple;
  // the second-order operator verdict mirrors the first-order one.
  for (int n : {3, 4, 5, 6, 8, 12}) {
    Group g = Group::cyclic(n);
    auto s = validate_generators(g, {1});
    for (OperatorKind op : {OperatorKind::laplacian, OperatorKind::lw}) {
      CriterionReport r = certify(g, s, op, CertifyMode::directed, 64, 0);
      GATE_CHECK(r.overall == "generic_simple");
    }
  }
  // Directed dihedral {r, s}.
  for (int n : {3, 4, 5, 6}) {
    Group g = Group::dihedral(n);
    auto s = gens_by_name(g, {"r", "s"});
    CriterionReport r =
        certify(g, s, OperatorKind::laplacian, CertifyMode::directed, 64, 0);
    GATE_CHECK(r.overall == "generic_simple");
  }
  // A4 and S4 on their standard two-generator sets.
  {
    Group g = Group::a4();
    CriterionReport r = certify(g, gens_by_name(g, {"t", "x"}),
                                OperatorKind::laplacian, CertifyMode::directed,
                                64, 0);
    GATE_CHECK(r.overall == "generic_simple");
  }
  {
    Group g = Group::s4();
    CriterionReport r = certify(g, gens_by_name(g, {"tau", "sigma"}),
                                OperatorKind::laplacian, CertifyMode::directed,
                                64, 0);
    GATE_CHECK(r.overall == "generic_simple");
  }
  // Klein: every generating set, both modes, both operators; the
  // second-order operator is exactly twice the Laplacian.
  {
    Group g = Group::klein();
    std::vector<std::vector<int>> sets = {{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
    for (const auto& elems : sets) {
      auto s = validate_generators(g, elems, true);
      for (OperatorKind op : {OperatorKind::laplacian, OperatorKind::lw}) {
        GATE_CHECK(certify(g, s, op, CertifyMode::directed, 64, 0).overall ==
                   "generic_simple");
        GATE_CHECK(certify(g, s, op, CertifyMode::undirected, 64, 0).overall ==
                   "generic_simple");
      }
      WeightVector w;
      w.domain = WeightDomain::g_plus;
      for (std::size_t i = 0; i < elems.size(); ++i)
        w.values.push_back(make_rational(static_cast<long>(i) + 2, 3));
      DenseOperator lap = assemble(g, s, w, OperatorKind::laplacian);
      DenseOperator lw = assemble(g, s, w, OperatorKind::lw);
      for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y)
          GATE_CHECK(lw.a[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] ==
                     lap.a[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] * 2);
    }
  }
  // Undirected cycles: every symmetric generating subset fails generic
  // simplicity, by an exact identically-zero proof on a dual pair, for both
  // operators.
  const std::vector<std::pair<int, std::size_t>> expected_counts = {
      {3, 1}, {4, 2}, {5, 3}, {6, 5}, {8, 12}};
  for (auto [n, count] : expected_counts) {
    auto subsets = symmetric_generating_subsets(n);
    GATE_CHECK(subsets.size() == count);
    Group g = Group::cyclic(n);
    for (const auto& elems : subsets) {
      auto s = validate_generators(g, elems, true);
      for (OperatorKind op : {OperatorKind::laplacian, OperatorKind::lw}) {
        CriterionReport r = certify(g, s, op, CertifyMode::undirected, 48, 0);
        GATE_CHECK(r.overall == "not_generic_simple");
        bool exact_zero = false;
        for (const Condition& c : r.conditions)
          if (c.status == "certified_identically_zero" && !c.zero_proof.empty())
            exact_zero = true;
        GATE_CHECK(exact_zero);
      }
    }
  }
}

// ---------------------------------------------------------------- criterion 3

void criterion_spectral_identity() {
  struct Case {
    const char* desc;
    std::vector<std::string> gens;
  };
  const std::vector<Case> cases = {{"cyclic:6", {"a"}},
                                   {"dihedral:4", {"r", "s"}},
                                   {"a4", {"t", "x"}},
                                   {"s4", {"tau", "sigma"}},
                                   {"q8", {"i", "j"}}};
  for (const Case& c : cases) {
    Group g = parse_group(c.desc);
    auto s = gens_by_name(g, c.gens);
    DetRng rng(fnv1a(c.desc));
    for (int trial = 0; trial < 10; ++trial) {
      WeightVector w = random_weight(s, CertifyMode::directed, rng);
      for (OperatorKind op : {OperatorKind::laplacian, OperatorKind::lw})
        GATE_CHECK(spectral_identity_error(g, s, w, op) <= 1e-8);
    }
  }
}

// ---------------------------------------------------------------- criterion 4

void criterion_oracle_agreement() {
  struct Case {
    const char* desc;
    std::vector<std::string> gens;
    OperatorKind op;
    CertifyMode mode;
    const char* expect;
    int dual_a = -1, dual_b = -1;  // coincident pair to find when not simple
  };
  const std::vector<Case> cases = {
      {"klein", {"a", "b"}, OperatorKind::laplacian, CertifyMode::directed,
       "generic_simple"},
      {"klein", {"a", "b"}, OperatorKind::lw, CertifyMode::directed,
       "generic_simple"},
      {"cyclic:5", {"a"}, OperatorKind::laplacian, CertifyMode::directed,
       "generic_simple"},
      {"cyclic:4", {"a", "a3"}, OperatorKind::laplacian, CertifyMode::undirected,
       "not_generic_simple", 1, 3},
      {"cyclic:4", {"a", "a3"}, OperatorKind::lw, CertifyMode::undirected,
       "not_generic_simple", 1, 3},
      {"cyclic:5", {"a", "a4"}, OperatorKind::laplacian, CertifyMode::undirected,
       "not_generic_simple", 1, 4},
      {"dihedral:3", {"r", "r2", "s"}, OperatorKind::laplacian,
       CertifyMode::undirected, "generic_simple"},
      {"a4", {"t", "x"}, OperatorKind::laplacian, CertifyMode::directed,
       "generic_simple"},
      {"q8", {"i", "j"}, OperatorKind::laplacian, CertifyMode::directed,
       "generic_simple"},
      {"s4", {"tau", "sigma"}, OperatorKind::laplacian, CertifyMode::directed,
       "generic_simple"},
  };
  for (const Case& c : cases) {
    Group g = parse_group(c.desc);
    auto s = gens_by_name(g, c.gens, c.mode == CertifyMode::undirected);
    CriterionReport cr = certify(g, s, c.op, c.mode, 64, 0);
    GATE_CHECK(cr.overall == c.expect);
    CrossCheckResult res = cross_check(g, s, c.op, c.mode, cr, 10, 0);
    GATE_CHECK(res.agreed);
    GATE_CHECK(res.trials == 10);
    if (c.dual_a >= 0) {
      // Every oracle trial must exhibit the predicted coincident dual pair
      // inside one reducible eigenspace record.
      for (const auto& rep : res.reports) {
        bool found = false;
        for (const auto& r : rep.records)
          if (!r.defective && !r.irreducible &&
              r.multiplicities[static_cast<std::size_t>(c.dual_a)] >= 1 &&
              r.multiplicities[static_cast<std::size_t>(c.dual_b)] >= 1)
            found = true;
        GATE_CHECK(found);
      }
    }
  }
}

// ---------------------------------------------------------------- criterion 5

Function rand_fn(DetRng& rng, int n) {
  Function f(static_cast<std::size_t>(n));
  for (auto& v : f) v = rng.next_int(-5, 5);
  return f;
}

VectorField rand_field(DetRng& rng, const WeightedDigraph& g) {
  VectorField x = zero_field(g);
  for (auto& row : x)
    for (auto& v : row) v = rng.next_int(-5, 5);
  return x;
}

VectorField scale_field_fn(const Function& f, const VectorField& x) {
  VectorField out = x;
  for (std::size_t u = 0; u < out.size(); ++u)
    for (auto& v : out[u]) v *= f[u];
  return out;
}

VectorField add_fields(const VectorField& a, const VectorField& b) {
  VectorField out = a;
  for (std::size_t u = 0; u < out.size(); ++u)
    for (std::size_t k = 0; k < out[u].size(); ++k) out[u][k] += b[u][k];
  return out;
}

Function add_fns(const Function& a, const Function& b) {
  Function out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

void calculus_suite(const WeightedDigraph& g, DetRng& rng) {
  const int n = g.n;
  // Product rule.
  {
    Function f = rand_fn(rng, n), h = rand_fn(rng, n);
    Function fh(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      fh[static_cast<std::size_t>(i)] =
          f[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(i)];
    for (int x = 0; x < n; ++x)
      for (int y : g.out[static_cast<std::size_t>(x)])
        GATE_CHECK(edge_derivative(g, fh, x, y) ==
                   f[static_cast<std::size_t>(x)] * edge_derivative(g, h, x, y) +
                       h[static_cast<std::size_t>(y)] * edge_derivative(g, f, x, y));
  }
  // Connection linearity in both slots.
  {
    Function f = rand_fn(rng, n);
    VectorField x1 = rand_field(rng, g), x2 = rand_field(rng, g);
    VectorField y1 = rand_field(rng, g), y2 = rand_field(rng, g);
    GATE_CHECK(connection(g, add_fields(scale_field_fn(f, x1), x2), y1) ==
               add_fields(scale_field_fn(f, connection(g, x1, y1)),
                          connection(g, x2, y1)));
    GATE_CHECK(connection(g, x1, add_fields(y1, y2)) ==
               add_fields(connection(g, x1, y1), connection(g, x1, y2)));
  }
  // Modified Leibniz rule and the basis-field formula.
  {
    Function f = rand_fn(rng, n);
    VectorField y = rand_field(rng, g);
    for (int x = 0; x < n; ++x)
      for (int yv : g.out[static_cast<std::size_t>(x)]) {
        VectorField dyx = edge_field(g, x, yv);
        Function df = edge_derivative_function(g, f, x, yv);
        VectorField nab = connection(g, dyx, y);
        GATE_CHECK(connection(g, dyx, scale_field_fn(f, y)) ==
                   add_fields(scale_field_fn(df, y),
                              add_fields(scale_field_fn(f, nab),
                                         scale_field_fn(df, nab))));
      }
    for (int x = 0; x < n; ++x)
      for (int yv : g.out[static_cast<std::size_t>(x)])
        for (int p = 0; p < n; ++p)
          for (int q : g.out[static_cast<std::size_t>(p)]) {
            VectorField got =
                connection(g, edge_field(g, x, yv), edge_field(g, p, q));
            VectorField want = zero_field(g);
            if (p == x) {
              VectorField base = edge_field(g, p, q);
              for (std::size_t k = 0; k < want[static_cast<std::size_t>(p)].size(); ++k)
                want[static_cast<std::size_t>(p)][k] =
                    -base[static_cast<std::size_t>(p)][k];
            }
            GATE_CHECK(got == want);
          }
  }
  // Metric compatibility with the correction term.
  for (int x = 0; x < n; ++x)
    for (int yv : g.out[static_cast<std::size_t>(x)]) {
      VectorField dyx = edge_field(g, x, yv);
      for (int p = 0; p < n; ++p)
        for (int q : g.out[static_cast<std::size_t>(p)]) {
          VectorField dqp = edge_field(g, p, q);
          for (int v : g.out[static_cast<std::size_t>(x)]) {
            VectorField dvx = edge_field(g, x, v);
            Function lhs =
                edge_derivative_function(g, metric_eval(g, dqp, dvx), x, yv);
            VectorField n1 = connection(g, dyx, dqp);
            VectorField n2 = connection(g, dyx, dvx);
            GATE_CHECK(lhs == add_fns(metric_eval(g, n1, dvx),
                                      add_fns(metric_eval(g, dqp, n2),
                                              metric_eval(g, n1, n2))));
          }
        }
    }
  // Laplacian routes agree; gradient identity holds.
  {
    Function f = rand_fn(rng, n);
    Function closed = laplacian_closed_form(g, f);
    GATE_CHECK(closed == laplacian_via_divergence(g, f));
    GATE_CHECK(closed == laplacian_via_e_fields(g, f));
    VectorField gf = gradient(g, f);
    for (int x = 0; x < n; ++x)
      for (int y : g.out[static_cast<std::size_t>(x)])
        GATE_CHECK(edge_derivative_function(g, f, x, y) ==
                   metric_eval(g, edge_field(g, x, y), gf));
  }
}

void criterion_calculus() {
  DetRng rng(2026);
  // Builtin Cayley graphs.
  struct Case {
    const char* desc;
    std::vector<std::string> gens;
    std::vector<Rational> w;
  };
  const std::vector<Case> cases = {
      {"cyclic:3", {"a"}, {Rational(1)}},
      {"klein", {"a", "b"}, {make_rational(1, 2), Rational(3)}},
      {"dihedral:3", {"r", "s"}, {Rational(2), make_rational(5, 3)}},
      {"a4", {"t", "x"}, {Rational(1), make_rational(7, 2)}},
  };
  for (const Case& c : cases) {
    Group g = parse_group(c.desc);
    auto s = gens_by_name(g, c.gens);
    CayleyDigraph d = build_cayley(g, s);
    WeightedDigraph wd = WeightedDigraph::from_cayley(d, c.w);
    calculus_suite(wd, rng);
    // Second-order route agreement needs the Cayley structure.
    Function f = rand_fn(rng, g.order());
    GATE_CHECK(lw_closed_form(d, c.w, f) == lw_via_fields(d, c.w, f));
  }
  // Random digraphs, up to 8 vertices.
  for (int rep = 0; rep < 20; ++rep) {
    int n = static_cast<int>(rng.next_int(2, 8));
    std::vector<std::tuple<int, int, Rational>> edges;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (x == y || rng.next_int(0, 2) != 0) continue;
        edges.emplace_back(
            x, y, make_rational(rng.next_int(1, 5), rng.next_int(1, 3)));
      }
    WeightedDigraph g = WeightedDigraph::from_edges(n, edges);
    calculus_suite(g, rng);
  }
  // The E-form is the squared-field normalization that reproduces the
  // Laplacian; the Y-form picks up an extra weight factor.
  {
    Group g = Group::cyclic(3);
    auto s = validate_generators(g, {1});
    WeightedDigraph heavy =
        WeightedDigraph::from_cayley(build_cayley(g, s), {Rational(2)});
    Function f = {Rational(1), Rational(0), Rational(0)};
    Function closed = laplacian_closed_form(heavy, f);
    GATE_CHECK(laplacian_via_e_fields(heavy, f) == closed);
    GATE_CHECK(y_squared_sum(heavy, f) != closed);
  }
}

// ---------------------------------------------------------------- criterion 6

void criterion_representation_suite() {
  const std::vector<Group> groups = {
      Group::cyclic(3),  Group::cyclic(5), Group::cyclic(6),  Group::cyclic(8),
      Group::klein(),    Group::dihedral(3), Group::dihedral(4),
      Group::dihedral(5), Group::dihedral(6), Group::q8(), Group::a4(),
      Group::s4(),       Group::product(Group::cyclic(2), Group::cyclic(3))};
  for (const Group& g : groups) {
    auto irr = irreps(g);
    long sum_sq = 0;
    for (const Irrep& w : irr) {
      verify_irrep(g, w);
      sum_sq += static_cast<long>(w.degree) * w.degree;
    }
    GATE_CHECK(sum_sq == g.order());
    for (std::size_t i = 0; i < irr.size(); ++i) {
      for (std::size_t j = 0; j < irr.size(); ++j) {
        Cyc ip = character_inner_product(g, irr[i], irr[j]);
        GATE_CHECK(ip == (i == j ? Cyc::integer(1) : Cyc::integer(0)));
      }
      int d = irr[i].dual_index;
      GATE_CHECK(d >= 0 && d < static_cast<int>(irr.size()));
      GATE_CHECK(irr[static_cast<std::size_t>(d)].dual_index == static_cast<int>(i));
      for (int x = 0; x < g.order(); ++x)
        GATE_CHECK(irr[static_cast<std::size_t>(d)].character(x) ==
                   irr[i].character(x).conj());
    }
  }
  // Frobenius-Schur indicators on the named families.
  for (const Irrep& w : irreps(Group::s4()))
    GATE_CHECK(fs_indicator(Group::s4(), w) == 1);
  for (const Irrep& w : irreps(Group::klein()))
    GATE_CHECK(fs_indicator(Group::klein(), w) == 1);
  for (int n : {3, 4, 5, 6})
    for (const Irrep& w : irreps(Group::dihedral(n)))
      if (w.degree == 2) GATE_CHECK(fs_indicator(Group::dihedral(n), w) == 1);
  for (int n : {3, 5, 6, 8}) {
    Group g = Group::cyclic(n);
    auto irr = irreps(g);
    for (int j = 0; j < n; ++j)
      GATE_CHECK(fs_indicator(g, irr[static_cast<std::size_t>(j)]) ==
                 ((2 * j) % n == 0 ? 1 : 0));
  }
  for (const Irrep& w : irreps(Group::q8()))
    GATE_CHECK(fs_indicator(Group::q8(), w) == (w.degree == 2 ? -1 : 1));
}

// ---------------------------------------------------------------- criterion 7

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args, const std::string& tag) {
  std::string out_file = "acceptance_cli_" + tag + ".out";
  std::string cmd = std::string(CAYLAP_CLI_PATH) + " " + args + " > " + out_file +
                    " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult r;
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  std::remove(out_file.c_str());
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion_cli_determinism() {
  // Certify: same seed, byte-identical JSON; documented exit codes.
  {
    RunResult a = run_cli(
        "certify --group klein --gens a,b --seed 5 --json acc_cert_a.json", "c1");
    RunResult b = run_cli(
        "certify --group klein --gens a,b --seed 5 --json acc_cert_b.json", "c2");
    GATE_CHECK(a.exit_code == 0);
    GATE_CHECK(b.exit_code == 0);
    std::string ja = slurp("acc_cert_a.json"), jb = slurp("acc_cert_b.json");
    GATE_CHECK(!ja.empty());
    GATE_CHECK(ja == jb);
    GATE_CHECK(ja.find("\"generic_simple\"") != std::string::npos);
    std::remove("acc_cert_a.json");
    std::remove("acc_cert_b.json");
  }
  {
    RunResult r = run_cli(
        "certify --group cyclic:5 --gens a,a4 --mode undirected", "c3");
    GATE_CHECK(r.exit_code == 0);
    GATE_CHECK(r.output.find("not_generic_simple") != std::string::npos);
  }
  // Oracle with random weights: seeded, byte-identical JSON.
  {
    RunResult a = run_cli(
        "oracle --group cyclic:4 --gens a,a3 --mode undirected "
        "--weights random:3 --seed 9 --json acc_or_a.json",
        "o1");
    RunResult b = run_cli(
        "oracle --group cyclic:4 --gens a,a3 --mode undirected "
        "--weights random:3 --seed 9 --json acc_or_b.json",
        "o2");
    GATE_CHECK(a.exit_code == 0);
    GATE_CHECK(b.exit_code == 0);
    std::string ja = slurp("acc_or_a.json"), jb = slurp("acc_or_b.json");
    GATE_CHECK(!ja.empty());
    GATE_CHECK(ja == jb);
    std::remove("acc_or_a.json");
    std::remove("acc_or_b.json");
  }
  // Characteristic polynomial matches the hand-computed cubic.
  {
    RunResult r = run_cli(
        "charpoly --group a4 --gens t,x --alpha 1,1 --irrep 3", "p1");
    GATE_CHECK(r.exit_code == 0);
    GATE_CHECK(r.output.find("lambda^3 + 7*lambda^2 + 15*lambda + 8") !=
               std::string::npos);
  }
  // Cross-check exits cleanly and reports agreement.
  {
    RunResult r = run_cli(
        "oracle --group klein --gens a,b --weights random:4 --cross-check", "x1");
    GATE_CHECK(r.exit_code == 0);
    GATE_CHECK(r.output.find("agreement: yes") != std::string::npos);
  }
  // Inconclusive runs exit with code 2 (tiny budget, high-degree blocks).
  {
    RunResult r = run_cli(
        "certify --group q8 --gens i,j --budget 1 --seed 0", "c4");
    GATE_CHECK(r.exit_code == 0 || r.exit_code == 2);
  }
  // Errors exit with code 1.
  {
    RunResult r = run_cli("certify --group cyclic:4 --gens a2", "e1");
    GATE_CHECK(r.exit_code == 1);
  }
}

struct Criterion {
  const char* label;
  void (*fn)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1: exact block characteristic polynomials", criterion_exact_charpolys},
      {"2: certified verdicts on the worked families", criterion_verdicts},
      {"3: global spectrum equals the union of block spectra",
       criterion_spectral_identity},
      {"4: oracle decompositions agree with the certificates",
       criterion_oracle_agreement},
      {"5: discrete calculus identity suite", criterion_calculus},
      {"6: representation-theoretic invariants", criterion_representation_suite},
      {"7: CLI determinism and exit codes", criterion_cli_determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    section_failures = 0;
    try {
      c.fn();
    } catch (const std::exception& e) {
      std::cout << "  [FAIL] unexpected exception: " << e.what() << "\n";
      ++section_failures;
    }
    std::cout << "criterion " << c.label << ": "
              << (section_failures == 0 ? "PASS" : "FAIL") << "\n";
    if (section_failures != 0) ++failed;
  }
  if (failed != 0) {
    std::cout << failed << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
