#include "caylap/calculus.hpp"

#include <stdexcept>

namespace caylap {

int WeightedDigraph::edge_pos(int x, int y) const {
  const auto& row = out[static_cast<std::size_t>(x)];
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i] == y) return static_cast<int>(i);
  return -1;
}

Rational WeightedDigraph::weight(int x, int y) const {
  int p = edge_pos(x, y);
  if (p < 0) throw std::invalid_argument("no edge between the given vertices");
  return w[static_cast<std::size_t>(x)][static_cast<std::size_t>(p)];
}

WeightedDigraph WeightedDigraph::from_edges(
    int n, const std::vector<std::tuple<int, int, Rational>>& edges) {
  WeightedDigraph g;
  g.n = n;
  g.out.assign(static_cast<std::size_t>(n), {});
  g.w.assign(static_cast<std::size_t>(n), {});
  for (const auto& [x, y, wt] : edges) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (x == y) throw std::invalid_argument("self-loops are not allowed");
    if (wt <= 0) throw std::invalid_argument("edge weights must be positive");
    if (g.has_edge(x, y)) throw std::invalid_argument("duplicate edge");
    g.out[static_cast<std::size_t>(x)].push_back(y);
    g.w[static_cast<std::size_t>(x)].push_back(wt);
  }
  return g;
}

WeightedDigraph WeightedDigraph::from_cayley(const CayleyDigraph& d,
                                             const std::vector<Rational>& ws) {
  if (static_cast<int>(ws.size()) != d.gens.size())
    throw std::invalid_argument("one weight per generator required");
  for (const Rational& v : ws)
    if (v <= 0) throw std::invalid_argument("edge weights must be positive");
  WeightedDigraph g;
  g.n = d.group->order();
  g.out.assign(static_cast<std::size_t>(g.n), {});
  g.w.assign(static_cast<std::size_t>(g.n), {});
  for (const auto& e : d.edges) {
    g.out[static_cast<std::size_t>(e.from)].push_back(e.to);
    g.w[static_cast<std::size_t>(e.from)].push_back(ws[static_cast<std::size_t>(e.gen)]);
  }
  return g;
}

Function delta(int n, int at) {
  Function f(static_cast<std::size_t>(n), Rational(0));
  f[static_cast<std::size_t>(at)] = 1;
  return f;
}

VectorField zero_field(const WeightedDigraph& g) {
  VectorField x(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v)
    x[static_cast<std::size_t>(v)].assign(g.out[static_cast<std::size_t>(v)].size(), Rational(0));
  return x;
}

VectorField edge_field(const WeightedDigraph& g, int x, int y) {
  int p = g.edge_pos(x, y);
  if (p < 0) throw std::invalid_argument("no edge between the given vertices");
  VectorField f = zero_field(g);
  f[static_cast<std::size_t>(x)][static_cast<std::size_t>(p)] = 1;
  return f;
}

Rational edge_derivative(const WeightedDigraph& g, const Function& f, int x, int y) {
  if (!g.has_edge(x, y)) throw std::invalid_argument("no edge between the given vertices");
  return f[static_cast<std::size_t>(y)] - f[static_cast<std::size_t>(x)];
}

Function edge_derivative_function(const WeightedDigraph& g, const Function& f, int x, int y) {
  Function r(static_cast<std::size_t>(g.n), Rational(0));
  r[static_cast<std::size_t>(x)] = edge_derivative(g, f, x, y);
  return r;
}

Function apply_field(const WeightedDigraph& g, const VectorField& x, const Function& f) {
  Function r(static_cast<std::size_t>(g.n), Rational(0));
  for (int v = 0; v < g.n; ++v) {
    const auto& row = g.out[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < row.size(); ++i)
      r[static_cast<std::size_t>(v)] +=
          x[static_cast<std::size_t>(v)][i] *
          (f[static_cast<std::size_t>(row[i])] - f[static_cast<std::size_t>(v)]);
  }
  return r;
}

Function metric_eval(const WeightedDigraph& g, const VectorField& x, const VectorField& y) {
  Function r(static_cast<std::size_t>(g.n), Rational(0));
  for (int v = 0; v < g.n; ++v)
    for (std::size_t i = 0; i < g.out[static_cast<std::size_t>(v)].size(); ++i)
      r[static_cast<std::size_t>(v)] += x[static_cast<std::size_t>(v)][i] *
                                        y[static_cast<std::size_t>(v)][i] /
                                        g.w[static_cast<std::size_t>(v)][i];
  return r;
}

VectorField gradient(const WeightedDigraph& g, const Function& f) {
  VectorField x = zero_field(g);
  for (int v = 0; v < g.n; ++v) {
    const auto& row = g.out[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < row.size(); ++i)
      x[static_cast<std::size_t>(v)][i] =
          g.w[static_cast<std::size_t>(v)][i] *
          (f[static_cast<std::size_t>(row[i])] - f[static_cast<std::size_t>(v)]);
  }
  return x;
}

VectorField connection(const WeightedDigraph& g, const VectorField& x, const VectorField& y) {
  VectorField r = zero_field(g);
  for (int v = 0; v < g.n; ++v) {
    Rational total(0);
    for (const Rational& c : x[static_cast<std::size_t>(v)]) total += c;
    if (total == 0) continue;
    for (std::size_t i = 0; i < r[static_cast<std::size_t>(v)].size(); ++i)
      r[static_cast<std::size_t>(v)][i] = -total * y[static_cast<std::size_t>(v)][i];
  }
  return r;
}

Function divergence(const WeightedDigraph& g, const VectorField& x) {
  Function r(static_cast<std::size_t>(g.n), Rational(0));
  for (int v = 0; v < g.n; ++v)
    for (const Rational& c : x[static_cast<std::size_t>(v)])
      r[static_cast<std::size_t>(v)] -= c;
  return r;
}

Function laplacian_closed_form(const WeightedDigraph& g, const Function& f) {
  Function r(static_cast<std::size_t>(g.n), Rational(0));
  for (int v = 0; v < g.n; ++v) {
    const auto& row = g.out[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < row.size(); ++i)
      r[static_cast<std::size_t>(v)] +=
          g.w[static_cast<std::size_t>(v)][i] *
          (f[static_cast<std::size_t>(row[i])] - f[static_cast<std::size_t>(v)]);
  }
  return r;
}

Function laplacian_via_divergence(const WeightedDigraph& g, const Function& f) {
  Function d = divergence(g, gradient(g, f));
  for (Rational& v : d) v = -v;
  return d;
}

Function laplacian_via_e_fields(const WeightedDigraph& g, const Function& f) {
  Function r(static_cast<std::size_t>(g.n), Rational(0));
  for (int v = 0; v < g.n; ++v)
    for (int y : g.out[static_cast<std::size_t>(v)]) {
      // E_{yx}^2 = w(x,y) * (d_yx o d_yx); compose the derivative twice.
      Function first = edge_derivative_function(g, f, v, y);
      Function second = edge_derivative_function(g, first, v, y);
      r[static_cast<std::size_t>(v)] -= g.weight(v, y) * second[static_cast<std::size_t>(v)];
    }
  return r;
}

Function y_squared_sum(const WeightedDigraph& g, const Function& f) {
  Function r(static_cast<std::size_t>(g.n), Rational(0));
  for (int v = 0; v < g.n; ++v)
    for (int y : g.out[static_cast<std::size_t>(v)]) {
      Function first = edge_derivative_function(g, f, v, y);
      Function second = edge_derivative_function(g, first, v, y);
      Rational wv = g.weight(v, y);
      r[static_cast<std::size_t>(v)] -= wv * wv * second[static_cast<std::size_t>(v)];
    }
  return r;
}

Function lw_closed_form(const CayleyDigraph& d, const std::vector<Rational>& ws,
                        const Function& f) {
  const Group& g = *d.group;
  Function r(static_cast<std::size_t>(g.order()), Rational(0));
  for (int x = 0; x < g.order(); ++x)
    for (int i = 0; i < d.gens.size(); ++i) {
      int s = d.gens.elements[static_cast<std::size_t>(i)];
      int xs = g.mul(x, s), xss = g.mul(xs, s);
      r[static_cast<std::size_t>(x)] -=
          ws[static_cast<std::size_t>(i)] *
          (f[static_cast<std::size_t>(xss)] - 2 * f[static_cast<std::size_t>(xs)] +
           f[static_cast<std::size_t>(x)]);
    }
  return r;
}

Function lw_via_fields(const CayleyDigraph& d, const std::vector<Rational>& ws,
                       const Function& f) {
  const Group& g = *d.group;
  const int n = g.order();
  Function r(static_cast<std::size_t>(n), Rational(0));
  for (int i = 0; i < d.gens.size(); ++i) {
    int s = d.gens.elements[static_cast<std::size_t>(i)];
    // d_s f (x) = f(xs) - f(x), applied twice.
    Function first(static_cast<std::size_t>(n)), second(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
      first[static_cast<std::size_t>(x)] =
          f[static_cast<std::size_t>(g.mul(x, s))] - f[static_cast<std::size_t>(x)];
    for (int x = 0; x < n; ++x)
      second[static_cast<std::size_t>(x)] =
          first[static_cast<std::size_t>(g.mul(x, s))] - first[static_cast<std::size_t>(x)];
    for (int x = 0; x < n; ++x)
      r[static_cast<std::size_t>(x)] -= ws[static_cast<std::size_t>(i)] * second[static_cast<std::size_t>(x)];
  }
  return r;
}

VectorField invariant_field(const CayleyDigraph& d, const std::vector<Rational>& coeffs) {
  if (static_cast<int>(coeffs.size()) != d.gens.size())
    throw std::invalid_argument("one coefficient per generator required");
  VectorField x(static_cast<std::size_t>(d.group->order()));
  for (auto& row : x) row = coeffs;
  return x;
}

bool is_left_invariant(const CayleyDigraph& d, const VectorField& f) {
  const Group& g = *d.group;
  // X(xy)^{(xy)s} = X(y)^{ys} for all x, y, s: coefficients are carried to
  // coefficients because left translation maps edge (y, ys) to (xy, (xy)s).
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y) {
      int xy = g.mul(x, y);
      for (int i = 0; i < d.gens.size(); ++i)
        if (f[static_cast<std::size_t>(xy)][static_cast<std::size_t>(i)] !=
            f[static_cast<std::size_t>(y)][static_cast<std::size_t>(i)])
          return false;
    }
  return true;
}

bool has_constant_coefficients(const CayleyDigraph& d, const VectorField& f) {
  const Group& g = *d.group;
  for (int x = 1; x < g.order(); ++x)
    for (int i = 0; i < d.gens.size(); ++i)
      if (f[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)] !=
          f[0][static_cast<std::size_t>(i)])
        return false;
  return true;
}

}  // namespace caylap
