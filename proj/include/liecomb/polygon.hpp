#ifndef LIECOMB_POLYGON_HPP
#define LIECOMB_POLYGON_HPP

// Tensor polygons in the (nu1, nu2) plane.  The outermost polygon is
// Wesslen's octogon: starting at the highest highest weight H = lambda+mu,
// eight oriented edges with piecewise-min/max integer lengths walk its
// boundary clockwise (degenerate edges drop out, so the octogon may reduce
// to a heptagon, ..., or a single point).  Deeper multiplicity layers are
// the same polygon for rho-shifted inputs, shifted back:
//     P^(m+1)(lambda, mu) = P^(1)(lambda - m rho, mu - m rho) + m rho.
//
// Constructions assume the largest Dynkin label sits at lambda_1; inputs
// are normalized internally (swap lambda/mu and/or conjugate both) and the
// result is mapped back to the caller's frame.

#include <array>
#include <string>
#include <vector>

#include "liecomb/multiplicity.hpp"
#include "liecomb/weights.hpp"

namespace liecomb::polygon {

using Point = std::array<int, 2>;

// One multiplicity layer: closed convex lattice polygon, vertices in
// clockwise order with zero-length edges merged.
struct TensorPolygon {
  int layer = 1;
  Weight lambda, mu;  // caller-frame source pair
  std::vector<Point> vertices;

  bool contains(const Point& p) const;  // inside or on boundary
  // Boundary points of the product's weight lattice Q + lambda + mu.
  std::vector<Point> boundary_lattice_points() const;
  long long doubled_area() const;
};

struct LayerDiagram {
  Weight lambda, mu;
  std::vector<TensorPolygon> layers;  // m = 1 .. mult_max
};

// H = lambda + mu; always multiplicity 1.
Weight hhw(const Weight& lambda, const Weight& mu);

// The lowest highest weight h (three-case formula).
Weight lhw(const Weight& lambda, const Weight& mu);

TensorPolygon outer_polygon(const Weight& lambda, const Weight& mu);

LayerDiagram layers(const Weight& lambda, const Weight& mu);

// Deterministic SVG of a layer diagram: lattice of occurring weights
// colored by multiplicity, layer outlines, axes.
struct SvgOptions {
  bool overlay_conjugate = false;  // also draw lambda (x) conj(mu)
  bool oblique_axes = false;       // draw in 120-degree root-system axes
  int cell = 14;                   // pixels per lattice step
};

std::string render_svg(const LayerDiagram& d, const SvgOptions& options = {});

}  // namespace liecomb::polygon

#endif
