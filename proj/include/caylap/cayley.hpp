#pragma once

#include <vector>

#include "caylap/group.hpp"

namespace caylap {

/// An ordered, validated generating set S of a group (identity excluded,
/// elements distinct, closure reaches the whole group).
struct GeneratorSet {
  std::vector<int> elements;  // the enumeration s_1, ..., s_N
  bool symmetric = false;     // S closed under inversion
  /// For symmetric sets: pairing[i] = position of elements[i]^{-1} in the
  /// list (an involution; fixed points are the order-2 generators).
  /// Empty when symmetric is false.
  std::vector<int> pairing;

  int size() const { return static_cast<int>(elements.size()); }
  /// Position of element index s in the list, or -1.
  int position_of(int s) const;
};

/// Check that elems generate the group, contain no identity and no
/// duplicates; computes the symmetric flag and pairing. With
/// symmetric_required, a non-inversion-closed set is an error.
/// Throws std::invalid_argument describing the failure (including the size
/// of the generated proper subgroup when closure falls short).
GeneratorSet validate_generators(const Group& g, const std::vector<int>& elems,
                                 bool symmetric_required = false);

/// The Cayley digraph: one edge (x, xs, s) per vertex x and generator s,
/// ordered by vertex index then generator position.
struct CayleyDigraph {
  struct Edge {
    int from;  // x
    int to;    // xs
    int gen;   // position in gens.elements
  };
  const Group* group = nullptr;
  GeneratorSet gens;
  std::vector<Edge> edges;

  /// Out-edges of vertex x occupy a contiguous block of size |S|.
  const Edge& edge(int x, int gen_pos) const {
    return edges[static_cast<std::size_t>(x) * static_cast<std::size_t>(gens.size()) +
                 static_cast<std::size_t>(gen_pos)];
  }
};

CayleyDigraph build_cayley(const Group& g, const GeneratorSet& s);

}  // namespace caylap
