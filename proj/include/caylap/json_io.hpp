#pragma once

#include <string>

#include "json.hpp"

#include "caylap/oracle.hpp"

namespace caylap {

using Json = nlohmann::ordered_json;

/// ["num", "den"] as decimal strings (values routinely exceed 2^53).
Json rational_json(const Rational& r);

/// {"conductor": m, "coeffs": [rational, ...]} — coordinates in the power
/// basis of the m-th root of unity.
Json cyc_json(const Cyc& c);

/// {"domain": "g"|"g_plus"|"g_prime"|"g_prime_plus", "values": [...]}.
Json weight_vector_json(const WeightVector& w);

Json criterion_report_json(const CriterionReport& r);

/// Irrep names label the multiplicities; conjugacy-class representative
/// names label the character entries.
Json oracle_report_json(const OracleReport& r, const Group& g,
                        const std::vector<Irrep>& irr);

Json cross_check_json(const CrossCheckResult& r, const Group& g,
                      const std::vector<Irrep>& irr);

Json character_table_json(const Group& g, const CharacterTable& t);

/// Graphviz export. Directed: one edge per (x, s) with the generator (and
/// weight, when given) as label. Undirected (requires symmetric S): the
/// edge pair {x -> xs, xs -> x} collapses to one undirected edge.
std::string to_dot(const CayleyDigraph& d, const WeightVector* w, bool undirected);

}  // namespace caylap
