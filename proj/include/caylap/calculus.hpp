#pragma once

#include <optional>
#include <vector>

#include "caylap/cayley.hpp"
#include "caylap/cyclotomic.hpp"

namespace caylap {

/// A finite digraph with strictly positive rational edge weights. Cayley
/// graphs with invariant weights are the main instance, but the calculus
/// works on arbitrary digraphs (used for property-testing breadth).
struct WeightedDigraph {
  int n = 0;                              // vertices 0..n-1
  std::vector<std::vector<int>> out;      // out-neighbor lists
  std::vector<std::vector<Rational>> w;   // weights parallel to out

  /// Position of y in out[x], or -1 when the edge is absent.
  int edge_pos(int x, int y) const;
  bool has_edge(int x, int y) const { return edge_pos(x, y) >= 0; }
  Rational weight(int x, int y) const;  // throws std::invalid_argument if absent

  /// General digraph from an edge list (x, y, weight); all weights must be
  /// positive, self-loops rejected.
  static WeightedDigraph from_edges(int n, const std::vector<std::tuple<int, int, Rational>>& edges);
  /// Cayley digraph with invariant weights w_s (one per generator position);
  /// out-list position i corresponds to generator position i at every vertex.
  static WeightedDigraph from_cayley(const CayleyDigraph& d, const std::vector<Rational>& ws);
};

/// Scalar function on vertices.
using Function = std::vector<Rational>;

/// Vector field: coefficient X(x)^y on every edge, stored parallel to the
/// out-lists (coefficients only on actual edges).
using VectorField = std::vector<std::vector<Rational>>;

Function delta(int n, int at);
VectorField zero_field(const WeightedDigraph& g);
/// The basis field on a single edge (x, y) (coefficient 1 there, 0 elsewhere).
VectorField edge_field(const WeightedDigraph& g, int x, int y);

/// Derivative along an edge: f(y) - f(x). Throws on a missing edge.
Rational edge_derivative(const WeightedDigraph& g, const Function& f, int x, int y);
/// The same derivative as the function (f(y) - f(x)) * delta_x.
Function edge_derivative_function(const WeightedDigraph& g, const Function& f, int x, int y);

/// X acting on f: X(f)(x) = sum_y X(x)^y (f(y) - f(x)).
Function apply_field(const WeightedDigraph& g, const VectorField& x, const Function& f);

/// Pointwise inner product g^w(X, Y)(x) = sum_y X(x)^y Y(x)^y / w(x,y)
/// (the basis {w(x,y)^{1/2} d_yx} is orthonormal; only 1/w survives in
/// basis-coefficient form, so everything stays rational).
Function metric_eval(const WeightedDigraph& g, const VectorField& x, const VectorField& y);

/// grad f: coefficient w(x,y) (f(y) - f(x)) on edge (x,y); satisfies
/// X(f) = g^w(X, grad f) for every field X.
VectorField gradient(const WeightedDigraph& g, const Function& f);

/// Covariant derivative nabla_X Y: the field supported where X is, with
/// value -(sum_y X(x)^y) * Y(x) at vertex x. For basis fields this is the
/// rule nabla_{d_yx} d_qp = -delta_x d_qp.
VectorField connection(const WeightedDigraph& g, const VectorField& x, const VectorField& y);

/// (div X)(x) = -sum_y X(x)^y (trace of z -> nabla_z X at x in the edge basis).
Function divergence(const WeightedDigraph& g, const VectorField& x);

/// Closed form: (Delta_w f)(x) = sum_y w(x,y) (f(y) - f(x)).
Function laplacian_closed_form(const WeightedDigraph& g, const Function& f);
/// Delta_w as -div(grad f) — the defining composition, kept separate so the
/// two paths can be compared exactly.
Function laplacian_via_divergence(const WeightedDigraph& g, const Function& f);
/// Delta_w as -sum over edges of E_{yx}^2 f, with E^2 = w * (d_yx o d_yx)
/// computed by composing edge derivatives (squared fields are rational even
/// though E itself carries w^{1/2}).
Function laplacian_via_e_fields(const WeightedDigraph& g, const Function& f);
/// The same sum built from Y_{yx} = -w(x,y) d_yx instead; carries an extra
/// factor w(x,y) relative to the Laplacian. Kept to document which squared
/// field reproduces the closed form (the E-form does).
Function y_squared_sum(const WeightedDigraph& g, const Function& f);

/// Closed form: (L_w f)(x) = -sum_s w_s (f(xs^2) - 2 f(xs) + f(x)).
/// Requires the Cayley structure (generator squares).
Function lw_closed_form(const CayleyDigraph& d, const std::vector<Rational>& ws, const Function& f);
/// L_w as -sum_s w_s (d_s o d_s) f via two applications of the invariant
/// field d_s — the squared-field route, kept separate from the closed form.
Function lw_via_fields(const CayleyDigraph& d, const std::vector<Rational>& ws, const Function& f);

/// The invariant field a_s d_s with coefficient pattern X(x)^{xs} = a_s.
VectorField invariant_field(const CayleyDigraph& d, const std::vector<Rational>& coeffs);

/// Left-invariance of a field on a Cayley graph, by the definitional test
/// X(xy)^{(xy)s} = X(y)^{ys} for all x, y, s.
bool is_left_invariant(const CayleyDigraph& d, const VectorField& x);
/// The coefficient-constancy characterization (per generator position).
bool has_constant_coefficients(const CayleyDigraph& d, const VectorField& x);

}  // namespace caylap
