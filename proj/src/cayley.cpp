#include "caylap/cayley.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace caylap {

int GeneratorSet::position_of(int s) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == s) return static_cast<int>(i);
  return -1;
}

GeneratorSet validate_generators(const Group& g, const std::vector<int>& elems,
                                 bool symmetric_required) {
  if (elems.empty()) throw std::invalid_argument("generator set is empty");
  std::set<int> distinct;
  for (int s : elems) {
    if (s == g.identity())
      throw std::invalid_argument("generator set must not contain the identity");
    if (s < 0 || s >= g.order())
      throw std::invalid_argument("generator index out of range");
    if (!distinct.insert(s).second)
      throw std::invalid_argument("generator listed twice: '" + g.name(s) + "'");
  }

  // Closure under multiplication, breadth-first from the identity.
  std::vector<bool> reached(static_cast<std::size_t>(g.order()), false);
  std::vector<int> queue{g.identity()};
  reached[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (int s : elems) {
      int next = g.mul(queue[head], s);
      if (!reached[static_cast<std::size_t>(next)]) {
        reached[static_cast<std::size_t>(next)] = true;
        queue.push_back(next);
      }
    }
  if (static_cast<int>(queue.size()) != g.order())
    throw std::invalid_argument(
        "generators span only a proper subgroup of size " + std::to_string(queue.size()) +
        " of " + std::to_string(g.order()));

  GeneratorSet out;
  out.elements = elems;
  out.symmetric = true;
  for (int s : elems)
    if (!distinct.count(g.inv(s))) {
      out.symmetric = false;
      break;
    }
  if (symmetric_required && !out.symmetric)
    throw std::invalid_argument("generator set is not closed under inversion");
  if (out.symmetric) {
    out.pairing.resize(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i)
      out.pairing[i] = out.position_of(g.inv(elems[i]));
  }
  return out;
}

CayleyDigraph build_cayley(const Group& g, const GeneratorSet& s) {
  CayleyDigraph d;
  d.group = &g;
  d.gens = s;
  d.edges.reserve(static_cast<std::size_t>(g.order()) * s.elements.size());
  for (int x = 0; x < g.order(); ++x)
    for (std::size_t i = 0; i < s.elements.size(); ++i)
      d.edges.push_back({x, g.mul(x, s.elements[i]), static_cast<int>(i)});
  return d;
}

}  // namespace caylap
