#include "CLI11.hpp"

#include <cctype>
#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>

#include "caylap/calculus.hpp"
#include "caylap/json_io.hpp"

using namespace caylap;

namespace {

Rational parse_rational(const std::string& tok) {
  try {
    mpq_class q(tok, 10);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("cannot parse rational '" + tok + "'");
  }
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : csv) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  out.push_back(cur);
  for (const auto& t : out)
    if (t.empty()) throw std::invalid_argument("empty entry in list '" + csv + "'");
  return out;
}

std::vector<Rational> parse_rationals(const std::string& csv) {
  std::vector<Rational> out;
  for (const auto& t : split_csv(csv)) out.push_back(parse_rational(t));
  return out;
}

GeneratorSet resolve_gens(const Group& g, const std::string& csv,
                          bool symmetric_required = false) {
  std::vector<int> elems;
  for (const auto& t : split_csv(csv)) elems.push_back(g.element_by_name(t));
  return validate_generators(g, elems, symmetric_required);
}

std::string format_complex(std::complex<double> z) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(6);
  os << z.real();
  if (z.imag() >= 0)
    os << " + " << z.imag() << "i";
  else
    os << " - " << -z.imag() << "i";
  return os.str();
}

std::string pretty_rational(const Rational& r) { return r.get_str(); }

// Human form of a characteristic polynomial: lambda^3 + 7*lambda^2 + ...
std::string pretty_poly(const CycPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Cyc c = p.coeff(k);
    if (c.is_zero()) continue;
    std::string body;
    bool negative = false;
    if (c.is_rational()) {
      Rational r = c.rational_value();
      if (r < 0) {
        negative = true;
        r = -r;
      }
      bool unit = (r == 1);
      if (!unit || k == 0) body += pretty_rational(r);
      if (k > 0) {
        if (!body.empty()) body += "*";
        body += var;
        if (k > 1) body += "^" + std::to_string(k);
      }
    } else {
      body = "(" + c.to_string() + ")";
      if (k > 0) {
        body += "*" + var;
        if (k > 1) body += "^" + std::to_string(k);
      }
    }
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    os << body;
  }
  return os.str();
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << j.dump(2) << "\n";
}

void print_condition(const Condition& c) {
  std::cout << "  " << c.kind << "(";
  for (std::size_t i = 0; i < c.irreps.size(); ++i) {
    if (i) std::cout << ", ";
    std::cout << c.irreps[i];
  }
  std::cout << "): " << c.status;
  if (c.witness) {
    std::cout << "  witness (";
    for (std::size_t i = 0; i < c.witness->values.size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << pretty_rational(c.witness->values[i]);
    }
    std::cout << ")";
  }
  if (!c.zero_proof.empty()) std::cout << "  via " << c.zero_proof;
  std::cout << "  [trials " << c.trials_used << ", degree " << c.degree_bound << "]\n";
}

// Field helpers for the calculus suite (coefficients parallel to out-lists).
VectorField scale_field(const Rational& c, const VectorField& x) {
  VectorField out = x;
  for (auto& row : out)
    for (auto& v : row) v *= c;
  return out;
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

int run_calculus_check(const Group& g, const GeneratorSet& s,
                       const std::vector<Rational>& ws, std::uint64_t seed) {
  CayleyDigraph d = build_cayley(g, s);
  WeightedDigraph wd = WeightedDigraph::from_cayley(d, ws);
  DetRng rng(seed);
  int n = wd.n;
  auto rand_fn = [&]() {
    Function f(static_cast<std::size_t>(n));
    for (auto& v : f) v = rng.next_int(-5, 5);
    return f;
  };
  auto rand_field = [&]() {
    VectorField x = zero_field(wd);
    for (auto& row : x)
      for (auto& v : row) v = rng.next_int(-5, 5);
    return x;
  };
  int failures = 0;
  auto report = [&](const std::string& label, bool ok) {
    std::cout << (ok ? "ok:   " : "FAIL: ") << label << "\n";
    if (!ok) ++failures;
  };

  // Product rule (P): d_yx(fg) = f(x) d_yx(g) + g(y) d_yx(f).
  {
    bool ok = true;
    for (int rep = 0; rep < 3 && ok; ++rep) {
      Function f = rand_fn(), h = rand_fn();
      Function fh(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        fh[static_cast<std::size_t>(i)] =
            f[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(i)];
      for (int x = 0; x < n && ok; ++x)
        for (int y : wd.out[static_cast<std::size_t>(x)]) {
          Rational lhs = edge_derivative(wd, fh, x, y);
          Rational rhs = f[static_cast<std::size_t>(x)] * edge_derivative(wd, h, x, y) +
                         h[static_cast<std::size_t>(y)] * edge_derivative(wd, f, x, y);
          if (lhs != rhs) {
            ok = false;
            break;
          }
        }
    }
    report("product rule d_yx(fg) = f(x) d_yx(g) + g(y) d_yx(f)", ok);
  }

  // Connection axioms (3)/(4): linearity in both slots.
  {
    Function f = rand_fn();
    VectorField x1 = rand_field(), x2 = rand_field();
    VectorField y1 = rand_field(), y2 = rand_field();
    bool ok =
        connection(wd, add_fields(scale_field_fn(f, x1), x2), y1) ==
            add_fields(scale_field_fn(f, connection(wd, x1, y1)), connection(wd, x2, y1)) &&
        connection(wd, x1, add_fields(y1, y2)) ==
            add_fields(connection(wd, x1, y1), connection(wd, x1, y2));
    report("connection linearity in both arguments", ok);
  }

  // Modified Leibniz (5): nabla_X(fY) = X(f) Y + f nabla_X Y + X(f) nabla_X Y
  // instantiated on basis directions X = d_yx, where X(f) = d_yx(f).
  {
    bool ok = true;
    Function f = rand_fn();
    VectorField y = rand_field();
    for (int x = 0; x < n && ok; ++x)
      for (int yv : wd.out[static_cast<std::size_t>(x)]) {
        VectorField dyx = edge_field(wd, x, yv);
        Function df = edge_derivative_function(wd, f, x, yv);
        VectorField lhs = connection(wd, dyx, scale_field_fn(f, y));
        VectorField nab = connection(wd, dyx, y);
        VectorField rhs = add_fields(scale_field_fn(df, y),
                                     add_fields(scale_field_fn(f, nab),
                                                scale_field_fn(df, nab)));
        if (!(lhs == rhs)) {
          ok = false;
          break;
        }
      }
    report("modified Leibniz rule for the connection", ok);
  }

  // Compatibility (6) on basis fields d_qp and d_vx anchored at x.
  {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int yv : wd.out[static_cast<std::size_t>(x)]) {
        VectorField dyx = edge_field(wd, x, yv);
        for (int p = 0; p < n && ok; ++p)
          for (int q : wd.out[static_cast<std::size_t>(p)]) {
            VectorField dqp = edge_field(wd, p, q);
            for (int v : wd.out[static_cast<std::size_t>(x)]) {
              VectorField dvx = edge_field(wd, x, v);
              Function lhs =
                  edge_derivative_function(wd, metric_eval(wd, dqp, dvx), x, yv);
              VectorField n1 = connection(wd, dyx, dqp);
              VectorField n2 = connection(wd, dyx, dvx);
              Function rhs = add_fns(metric_eval(wd, n1, dvx),
                                     add_fns(metric_eval(wd, dqp, n2),
                                             metric_eval(wd, n1, n2)));
              if (lhs != rhs) {
                ok = false;
                break;
              }
            }
          }
      }
    report("metric compatibility of the connection", ok);
  }

  // Prop 2.2 shape: nabla_{d_yx} d_qp = -delta_x(p) d_qp.
  {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int yv : wd.out[static_cast<std::size_t>(x)])
        for (int p = 0; p < n && ok; ++p)
          for (int q : wd.out[static_cast<std::size_t>(p)]) {
            VectorField got =
                connection(wd, edge_field(wd, x, yv), edge_field(wd, p, q));
            VectorField want = zero_field(wd);
            if (p == x) want = scale_field(Rational(-1), edge_field(wd, p, q));
            if (!(got == want)) {
              ok = false;
              break;
            }
          }
    report("connection on basis fields equals -delta_x d_qp", ok);
  }

  // Gradient defining identity and the three Laplacian routes.
  {
    Function f = rand_fn();
    bool ok = true;
    VectorField gf = gradient(wd, f);
    for (int x = 0; x < n && ok; ++x)
      for (int yv : wd.out[static_cast<std::size_t>(x)]) {
        Function lhs = edge_derivative_function(wd, f, x, yv);
        Function rhs = metric_eval(wd, edge_field(wd, x, yv), gf);
        // metric_eval yields the value only at x for a basis field there.
        if (lhs != rhs) {
          ok = false;
          break;
        }
      }
    report("gradient defining identity X(f) = g^w(X, grad f)", ok);
    Function a = laplacian_closed_form(wd, f);
    report("laplacian closed form = -div grad",
           a == laplacian_via_divergence(wd, f));
    report("laplacian closed form = squared-field sum",
           a == laplacian_via_e_fields(wd, f));
    Function b = lw_closed_form(d, ws, f);
    report("second-order operator closed form = squared-field route",
           b == lw_via_fields(d, ws, f));
  }

  // Left invariance of constant-coefficient fields.
  {
    std::vector<Rational> coeffs(static_cast<std::size_t>(s.size()));
    for (auto& c : coeffs) c = rng.next_int(-5, 5);
    VectorField inv = invariant_field(d, coeffs);
    bool ok = is_left_invariant(d, inv) && has_constant_coefficients(d, inv);
    VectorField bent = inv;
    if (g.order() > 1 && !bent[1].empty()) {
      bent[1][0] += 1;
      ok = ok && !is_left_invariant(d, bent);
    }
    report("constant-coefficient fields are exactly the left-invariant ones", ok);
  }

  std::cout << (failures ? "FAILED" : "all checks passed") << "\n";
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact certification of generic real G-simplicity for invariant operators "
      "on Cayley graphs, with a floating-point spectral oracle"};
  app.require_subcommand(1);

  std::string group_desc, gens_csv, alpha_csv, weights_spec, irrep_sel;
  std::string json_path, out_path;
  std::string op_name = "laplacian", mode_name = "directed";
  std::uint64_t seed = 0;
  int budget = 64;
  bool restricted = false, undirected_dot = false, do_cross = false;

  auto add_group = [&](CLI::App* c) {
    c->add_option("--group", group_desc, "Group descriptor (cyclic:N, dihedral:N, klein, a4, s4, q8, product(...), @file.json)")
        ->required();
  };
  auto add_gens = [&](CLI::App* c) {
    c->add_option("--gens", gens_csv, "Comma-separated generator names (or indices)")->required();
  };

  CLI::App* c_group = app.add_subcommand("group", "Group summary: order, classes, element orders");
  add_group(c_group);

  CLI::App* c_irreps = app.add_subcommand("irreps", "Irreducible representations and character table");
  add_group(c_irreps);
  c_irreps->add_option("--json", json_path, "Write the character table as JSON");

  CLI::App* c_graph = app.add_subcommand("graph", "Cayley digraph summary");
  add_group(c_graph);
  add_gens(c_graph);

  CLI::App* c_dot = app.add_subcommand("dot", "Graphviz export");
  add_group(c_dot);
  add_gens(c_dot);
  c_dot->add_option("--weights", weights_spec, "Comma-separated positive weights (one per generator)");
  c_dot->add_flag("--undirected", undirected_dot, "Merge inverse edge pairs (requires symmetric S)");
  c_dot->add_option("--out", out_path, "Output path (default stdout)");

  CLI::App* c_charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of one irrep block");
  add_group(c_charpoly);
  add_gens(c_charpoly);
  c_charpoly->add_option("--alpha", alpha_csv, "Comma-separated coordinates (one per generator)")->required();
  c_charpoly->add_option("--irrep", irrep_sel, "Irrep name or index")->required();
  c_charpoly->add_option("--operator", op_name, "laplacian | lw");

  CLI::App* c_certify = app.add_subcommand("certify", "Certify generic real G-simplicity");
  add_group(c_certify);
  add_gens(c_certify);
  c_certify->add_option("--operator", op_name, "laplacian | lw");
  c_certify->add_option("--mode", mode_name, "directed | undirected");
  c_certify->add_option("--budget", budget, "Witness trials per condition");
  c_certify->add_option("--seed", seed, "Random seed");
  c_certify->add_flag("--restricted", restricted, "Certify on the restricted subspaces A_S^rho (undirected only)");
  c_certify->add_option("--json", json_path, "Write the full report as JSON");

  CLI::App* c_oracle = app.add_subcommand("oracle", "Brute-force spectral decomposition");
  add_group(c_oracle);
  add_gens(c_oracle);
  c_oracle->add_option("--weights", weights_spec, "Comma-separated weights, or random:K")->required();
  c_oracle->add_option("--operator,--kind", op_name, "laplacian | lw");
  c_oracle->add_option("--mode", mode_name, "directed | undirected");
  c_oracle->add_option("--seed", seed, "Random seed");
  c_oracle->add_flag("--cross-check", do_cross, "Certify first, then compare verdicts (weights must be random:K)");
  c_oracle->add_option("--budget", budget, "Witness trials per condition (cross-check)");
  c_oracle->add_option("--json", json_path, "Write the reports as JSON");

  CLI::App* c_spectrum = app.add_subcommand("spectrum", "Global spectrum next to the per-irrep block spectra");
  add_group(c_spectrum);
  add_gens(c_spectrum);
  c_spectrum->add_option("--weights", weights_spec, "Comma-separated positive weights")->required();
  c_spectrum->add_option("--operator,--kind", op_name, "laplacian | lw");
  c_spectrum->add_option("--mode", mode_name, "directed | undirected");

  CLI::App* c_calc = app.add_subcommand("calculus-check", "Exact discrete-calculus identity suite");
  add_group(c_calc);
  add_gens(c_calc);
  c_calc->add_option("--weights", weights_spec, "Comma-separated positive weights (default all ones)");
  c_calc->add_option("--seed", seed, "Random seed for test functions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (app.got_subcommand(c_group)) {
      Group g = parse_group(group_desc);
      std::cout << "group: " << g.spec().to_string() << "\n";
      std::cout << "order: " << g.order() << (g.is_abelian() ? " (abelian)" : "") << "\n";
      std::cout << "elements:";
      for (int i = 0; i < g.order(); ++i) std::cout << " " << g.name(i);
      std::cout << "\nconjugacy classes:\n";
      for (const auto& cls : g.conjugacy_classes()) {
        std::cout << "  {";
        for (std::size_t i = 0; i < cls.size(); ++i) {
          if (i) std::cout << ", ";
          std::cout << g.name(cls[i]);
        }
        std::cout << "}\n";
      }
      return 0;
    }

    if (app.got_subcommand(c_irreps)) {
      Group g = parse_group(group_desc);
      auto irr = irreps(g);
      std::cout << "irreps of " << g.spec().to_string() << ":\n";
      for (std::size_t i = 0; i < irr.size(); ++i)
        std::cout << "  " << irr[i].name << "  degree " << irr[i].degree << "  "
                  << fs_type_name(irr[i].fs_type) << "  dual "
                  << irr[static_cast<std::size_t>(irr[i].dual_index)].name << "\n";
      CharacterTable t = character_table(g, irr);
      std::cout << "character table (columns are class representatives):\n    ";
      for (int rep : t.class_rep) std::cout << "\t" << g.name(rep);
      std::cout << "\n";
      for (std::size_t i = 0; i < t.irrep_names.size(); ++i) {
        std::cout << "  " << t.irrep_names[i];
        for (const Cyc& v : t.chi[i]) std::cout << "\t" << v.to_string();
        std::cout << "\n";
      }
      if (!json_path.empty()) write_json(json_path, character_table_json(g, t));
      return 0;
    }

    if (app.got_subcommand(c_graph)) {
      Group g = parse_group(group_desc);
      GeneratorSet s = resolve_gens(g, gens_csv);
      CayleyDigraph d = build_cayley(g, s);
      std::cout << "Cayley digraph of " << g.spec().to_string() << " with S = {";
      for (int i = 0; i < s.size(); ++i)
        std::cout << (i ? ", " : "") << g.name(s.elements[static_cast<std::size_t>(i)]);
      std::cout << "}\n";
      std::cout << "vertices: " << g.order() << "  edges: " << d.edges.size()
                << "  symmetric: " << (s.symmetric ? "yes" : "no") << "\n";
      if (s.symmetric) {
        std::cout << "S'-classes:";
        for (const auto& cls : sprime_classes(s)) {
          std::cout << " {";
          for (std::size_t i = 0; i < cls.size(); ++i)
            std::cout << (i ? ", " : "")
                      << g.name(s.elements[static_cast<std::size_t>(cls[i])]);
          std::cout << "}";
        }
        std::cout << "\n";
      }
      for (const auto& e : d.edges)
        std::cout << "  " << g.name(e.from) << " -> " << g.name(e.to) << "  ["
                  << g.name(s.elements[static_cast<std::size_t>(e.gen)]) << "]\n";
      return 0;
    }

    if (app.got_subcommand(c_dot)) {
      Group g = parse_group(group_desc);
      GeneratorSet s = resolve_gens(g, gens_csv, undirected_dot);
      CayleyDigraph d = build_cayley(g, s);
      WeightVector wv;
      bool have_w = !weights_spec.empty();
      if (have_w) {
        wv.values = parse_rationals(weights_spec);
        wv.domain = undirected_dot ? WeightDomain::g_prime_plus : WeightDomain::g_plus;
        check_weight_vector(s, wv);
      }
      std::string dot = to_dot(d, have_w ? &wv : nullptr, undirected_dot);
      if (out_path.empty()) {
        std::cout << dot;
      } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open '" + out_path + "'");
        out << dot;
      }
      return 0;
    }

    if (app.got_subcommand(c_charpoly)) {
      Group g = parse_group(group_desc);
      GeneratorSet s = resolve_gens(g, gens_csv);
      auto irr = irreps(g);
      OperatorKind op = operator_kind_from_name(op_name);
      std::vector<Rational> alpha = parse_rationals(alpha_csv);
      int idx = -1;
      for (std::size_t i = 0; i < irr.size(); ++i)
        if (irr[i].name == irrep_sel) idx = static_cast<int>(i);
      if (idx < 0) {
        try {
          std::size_t pos = 0;
          int v = std::stoi(irrep_sel, &pos);
          if (pos == irrep_sel.size() && v >= 0 && v < static_cast<int>(irr.size()))
            idx = v;
        } catch (...) {
        }
      }
      if (idx < 0)
        throw std::invalid_argument("unknown irrep '" + irrep_sel + "'");
      CycPoly p = char_poly(operator_block(g, irr[static_cast<std::size_t>(idx)], s, alpha, op));
      std::cout << pretty_poly(p, "lambda") << "\n";
      return 0;
    }

    if (app.got_subcommand(c_certify)) {
      Group g = parse_group(group_desc);
      CertifyMode mode = certify_mode_from_name(mode_name);
      OperatorKind op = operator_kind_from_name(op_name);
      GeneratorSet s = resolve_gens(g, gens_csv, mode == CertifyMode::undirected);
      CriterionReport report = certify(g, s, op, mode, budget, seed, restricted);
      std::cout << "group " << report.group << ", operator "
                << operator_kind_name(report.op) << ", mode "
                << certify_mode_name(report.mode)
                << (report.restricted ? " (restricted)" : "") << "\n";
      for (const Condition& c : report.conditions) print_condition(c);
      std::cout << "overall: " << report.overall << "\n";
      if (!json_path.empty()) write_json(json_path, criterion_report_json(report));
      return report.overall == "inconclusive" ? 2 : 0;
    }

    if (app.got_subcommand(c_oracle)) {
      Group g = parse_group(group_desc);
      CertifyMode mode = certify_mode_from_name(mode_name);
      OperatorKind op = operator_kind_from_name(op_name);
      GeneratorSet s = resolve_gens(g, gens_csv, mode == CertifyMode::undirected);
      auto irr = irreps(g);

      int random_k = -1;
      if (weights_spec.rfind("random:", 0) == 0)
        random_k = std::stoi(weights_spec.substr(7));

      if (do_cross) {
        if (random_k <= 0)
          throw std::invalid_argument("--cross-check needs --weights random:K");
        CriterionReport criterion = certify(g, s, op, mode, budget, seed);
        CrossCheckResult res = cross_check(g, s, op, mode, criterion, random_k, seed);
        std::cout << "criterion overall: " << criterion.overall << "\n";
        std::cout << "oracle trials: " << res.trials << "  skipped (defective): "
                  << res.skipped_defective << "\n";
        for (const auto& dgn : res.diagnostics) std::cout << "  " << dgn << "\n";
        std::cout << "agreement: " << (res.agreed ? "yes" : "NO") << "\n";
        if (!json_path.empty()) {
          Json j;
          j["group"] = g.spec().to_string();
          j["criterion"] = criterion_report_json(criterion);
          j["cross_check"] = cross_check_json(res, g, irr);
          write_json(json_path, j);
        }
        if (!res.agreed) return 1;
        return criterion.overall == "inconclusive" ? 2 : 0;
      }

      std::vector<WeightVector> weights;
      if (random_k > 0) {
        for (int t = 0; t < random_k; ++t) {
          DetRng rng(seed ^ fnv1a("trial:" + std::to_string(t)));
          weights.push_back(random_weight(s, mode, rng));
        }
      } else {
        WeightVector wv;
        wv.values = parse_rationals(weights_spec);
        wv.domain = mode == CertifyMode::undirected ? WeightDomain::g_prime_plus
                                                    : WeightDomain::g_plus;
        check_weight_vector(s, wv);
        weights.push_back(wv);
      }

      Json jreports = Json::array();
      bool all_simple = true;
      for (const WeightVector& wv : weights) {
        DenseOperator dense = assemble(g, s, wv, op);
        OracleReport rep = real_invariant_decomposition(g, s, dense, irr);
        std::cout << "weight (";
        for (std::size_t i = 0; i < wv.values.size(); ++i)
          std::cout << (i ? ", " : "") << pretty_rational(wv.values[i]);
        std::cout << "): " << (rep.g_simple ? "G-simple" : "NOT G-simple")
                  << (rep.has_defective ? " (defective blocks present)" : "") << "\n";
        for (const auto& rec : rep.records)
          std::cout << "  eigenvalue " << format_complex(rec.eigenvalue)
                    << "  real dim " << rec.real_dimension << "  "
                    << rec.type_pattern << "\n";
        all_simple = all_simple && rep.g_simple;
        jreports.push_back(oracle_report_json(rep, g, irr));
      }
      if (!json_path.empty()) {
        Json j;
        j["group"] = g.spec().to_string();
        Json jg = Json::array();
        for (int e : s.elements) jg.push_back(g.name(e));
        j["generators"] = std::move(jg);
        j["kind"] = operator_kind_name(op);
        j["mode"] = certify_mode_name(mode);
        j["seed"] = seed;
        j["reports"] = std::move(jreports);
        write_json(json_path, j);
      }
      return 0;
    }

    if (app.got_subcommand(c_spectrum)) {
      Group g = parse_group(group_desc);
      CertifyMode mode = certify_mode_from_name(mode_name);
      OperatorKind op = operator_kind_from_name(op_name);
      GeneratorSet s = resolve_gens(g, gens_csv, mode == CertifyMode::undirected);
      WeightVector wv;
      wv.values = parse_rationals(weights_spec);
      wv.domain = mode == CertifyMode::undirected ? WeightDomain::g_prime_plus
                                                  : WeightDomain::g_plus;
      check_weight_vector(s, wv);
      DenseOperator dense = assemble(g, s, wv, op);
      auto global = global_spectrum(dense);
      std::cout << "global spectrum (" << global.size() << " eigenvalues):\n";
      for (auto z : global) std::cout << "  " << format_complex(z) << "\n";
      std::cout << "per-irrep blocks (each contributing dim W copies):\n";
      for (const Irrep& w : irreps(g)) {
        auto lam = block_spectrum(g, w, s, wv.values, op);
        std::cout << "  " << w.name << " (dim " << w.degree << "):";
        for (auto z : lam) std::cout << "  " << format_complex(z);
        std::cout << "\n";
      }
      std::cout << "max matching error: "
                << spectral_identity_error(g, s, wv, op) << "\n";
      return 0;
    }

    if (app.got_subcommand(c_calc)) {
      Group g = parse_group(group_desc);
      GeneratorSet s = resolve_gens(g, gens_csv);
      std::vector<Rational> ws;
      if (weights_spec.empty())
        ws.assign(static_cast<std::size_t>(s.size()), Rational(1));
      else
        ws = parse_rationals(weights_spec);
      if (static_cast<int>(ws.size()) != s.size())
        throw std::invalid_argument("need one weight per generator");
      for (const auto& v : ws)
        if (v <= 0) throw std::invalid_argument("weights must be positive");
      return run_calculus_check(g, s, ws, seed);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
