#include "caylap/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace caylap {

namespace {

Json complex_json(std::complex<double> z) {
  return Json{{"re", z.real()}, {"im", z.imag()}};
}

const char* kSignConventionNote =
    "D_W(alpha) = sum_s alpha_s (rho(s) - id) and "
    "Dtilde_W(alpha) = -sum_s alpha_s (rho(s^2) - 2 rho(s) + id); "
    "all zero/nonzero verdicts are invariant under the overall sign";

std::string quote_dot(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

Json rational_json(const Rational& r) {
  return Json::array({r.get_num().get_str(), r.get_den().get_str()});
}

Json cyc_json(const Cyc& c) {
  Json coeffs = Json::array();
  for (const Rational& r : c.coords()) coeffs.push_back(rational_json(r));
  return Json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

Json weight_vector_json(const WeightVector& w) {
  Json values = Json::array();
  for (const Rational& r : w.values) values.push_back(rational_json(r));
  return Json{{"domain", weight_domain_name(w.domain)}, {"values", values}};
}

Json criterion_report_json(const CriterionReport& r) {
  Json conds = Json::array();
  for (const Condition& c : r.conditions) {
    Json jc;
    jc["kind"] = c.kind;
    jc["irreps"] = c.irreps;
    jc["status"] = c.status;
    jc["witness"] = c.witness ? weight_vector_json(*c.witness) : Json(nullptr);
    jc["witness_value"] = c.witness_value ? cyc_json(*c.witness_value) : Json(nullptr);
    jc["trials_used"] = c.trials_used;
    jc["degree_bound"] = c.degree_bound;
    jc["sz_failure_bound_per_trial"] =
        rational_json(make_rational(c.degree_bound, 21));
    jc["zero_proof"] = c.zero_proof.empty() ? Json(nullptr) : Json(c.zero_proof);
    conds.push_back(std::move(jc));
  }
  Json j;
  j["group"] = r.group;
  j["generators"] = r.generators;
  j["operator"] = operator_kind_name(r.op);
  j["mode"] = certify_mode_name(r.mode);
  j["restricted"] = r.restricted;
  j["sign_convention"] = kSignConventionNote;
  j["seed"] = r.seed;
  j["budget"] = r.budget;
  j["conditions"] = std::move(conds);
  j["overall"] = r.overall;
  j["trial_budget_used"] = r.trial_budget_used;
  return j;
}

Json oracle_report_json(const OracleReport& r, const Group& g,
                        const std::vector<Irrep>& irr) {
  Json class_reps = Json::array();
  for (const auto& cls : g.conjugacy_classes()) class_reps.push_back(g.name(cls[0]));

  Json records = Json::array();
  for (const EigenspaceRecord& rec : r.records) {
    Json jr;
    jr["eigenvalue"] = complex_json(rec.eigenvalue);
    jr["conjugate_pair"] = rec.conjugate_pair;
    jr["real_dimension"] = rec.real_dimension;
    Json chr = Json::array();
    for (auto z : rec.character) chr.push_back(complex_json(z));
    jr["character"] = std::move(chr);
    Json mult;
    for (std::size_t i = 0; i < irr.size(); ++i)
      mult[irr[i].name] = rec.multiplicities[i];
    jr["multiplicities"] = std::move(mult);
    jr["irreducible_over_R"] = rec.defective ? Json(nullptr) : Json(rec.irreducible);
    jr["type_pattern"] = rec.type_pattern;
    jr["defective"] = rec.defective;
    records.push_back(std::move(jr));
  }

  Json j;
  j["weight"] = weight_vector_json(r.weight);
  j["kind"] = operator_kind_name(r.kind);
  j["mode"] = certify_mode_name(r.mode);
  j["class_reps"] = std::move(class_reps);
  j["records"] = std::move(records);
  j["g_simple"] = r.g_simple;
  j["has_defective"] = r.has_defective;
  return j;
}

Json cross_check_json(const CrossCheckResult& r, const Group& g,
                      const std::vector<Irrep>& irr) {
  Json reports = Json::array();
  for (const OracleReport& rep : r.reports)
    reports.push_back(oracle_report_json(rep, g, irr));
  Json j;
  j["trials"] = r.trials;
  j["skipped_defective"] = r.skipped_defective;
  j["agreed"] = r.agreed;
  j["diagnostics"] = r.diagnostics;
  j["reports"] = std::move(reports);
  return j;
}

Json character_table_json(const Group& g, const CharacterTable& t) {
  Json reps = Json::array();
  for (int rep : t.class_rep) reps.push_back(g.name(rep));
  Json rows;
  for (std::size_t i = 0; i < t.irrep_names.size(); ++i) {
    Json row = Json::array();
    for (const Cyc& v : t.chi[i]) row.push_back(cyc_json(v));
    rows[t.irrep_names[i]] = std::move(row);
  }
  Json j;
  j["class_reps"] = std::move(reps);
  j["class_sizes"] = t.class_size;
  j["characters"] = std::move(rows);
  return j;
}

std::string to_dot(const CayleyDigraph& d, const WeightVector* w, bool undirected) {
  const Group& g = *d.group;
  if (undirected && !d.gens.symmetric)
    throw std::invalid_argument("undirected DOT export requires a symmetric generator set");
  std::ostringstream os;
  os << (undirected ? "graph" : "digraph") << " cayley {\n";
  for (int x = 0; x < g.order(); ++x)
    os << "  " << quote_dot(g.name(x)) << ";\n";
  for (const auto& e : d.edges) {
    if (undirected) {
      // Keep one representative of {x -> xs, xs -> x}; self-pairs (order-2
      // generators) appear once because from < to exactly once per pair.
      if (e.from > e.to) continue;
      int i = e.gen;
      int j = d.gens.pairing[static_cast<std::size_t>(i)];
      int rep = std::min(i, j);
      os << "  " << quote_dot(g.name(e.from)) << " -- " << quote_dot(g.name(e.to))
         << " [label=" << quote_dot(
                w ? g.name(d.gens.elements[static_cast<std::size_t>(rep)]) + ": " +
                        w->values[static_cast<std::size_t>(rep)].get_str()
                  : g.name(d.gens.elements[static_cast<std::size_t>(rep)]))
         << "];\n";
    } else {
      os << "  " << quote_dot(g.name(e.from)) << " -> " << quote_dot(g.name(e.to))
         << " [label=" << quote_dot(
                w ? g.name(d.gens.elements[static_cast<std::size_t>(e.gen)]) + ": " +
                        w->values[static_cast<std::size_t>(e.gen)].get_str()
                  : g.name(d.gens.elements[static_cast<std::size_t>(e.gen)]))
         << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace caylap
