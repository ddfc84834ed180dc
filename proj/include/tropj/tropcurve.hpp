#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tropj/rational.hpp"
#include "tropj/subdivision.hpp"

namespace tropj {

// Dual graph of a height vector: one vertex per cell (the negated slopes of
// the cell's supporting plane), bounded edges across interior facets, and
// rays for facets on the triangle's boundary.
struct CurveVertex {
  std::array<Rational, 2> pos;
  MarkedCell cell;
};

struct CurveEdge {
  size_t a = 0, b = 0;       // vertex indices, a < b
  LatticePoint fa, fb;       // dual facet endpoints
  LatticePoint dir;          // (fb.y - fa.y, fa.x - fb.x), orthogonal to the facet
};

struct CurveRay {
  size_t vertex = 0;
  LatticePoint dir;          // primitive direction into the plane
  int64_t weight = 0;        // lattice length of the boundary facet
  LatticePoint fa, fb;       // dual boundary facet
};

struct TropicalCurve {
  std::vector<CurveVertex> vertices;
  std::vector<CurveEdge> edges;
  std::vector<CurveRay> rays;
};

TropicalCurve dual_curve(const HeightVector& u);

// Exact |e| / |v| for a rational vector e parallel to an integer vector v.
Rational parallel_ratio(const std::array<Rational, 2>& e, LatticePoint v);

// The bounded cycle around the interior point, measured geometrically.  When
// the interior point sits inside a shared facet instead of being a vertex,
// the report carries the limit value (four times the normalized length of
// the one dual edge) and flags it as generalized.
struct CycleReport {
  bool has_cycle = false;
  bool generalized = false;
  Rational length;
  std::vector<size_t> cycle_edges;     // indices into dual_curve(u).edges
  std::vector<Rational> edge_lengths;  // aligned with cycle_edges
};

CycleReport cycle_report(const HeightVector& u);

// Lattice points adjacent to (1,1) in cells having it as a vertex, ordered
// clockwise starting from east.
std::vector<LatticePoint> interior_neighbors_cw(const MarkedSubdivision& s);

// Linear form coefficients K_j with cycle length = sum_j (u11 - u_j) K_j,
// built from the determinants D of consecutive neighbor offsets.
std::vector<Rational> cycle_coefficients(const std::vector<LatticePoint>& neighbors_cw);

struct ClosedFormCycle {
  std::vector<LatticePoint> neighbors;
  std::vector<Rational> lambdas;  // per-neighbor edge lengths
  Rational total;
};

// Closed-form cycle length; requires (1,1) to be a subdivision vertex.
// Counterclockwise enumeration negates every term.
ClosedFormCycle cycle_length_terms(const HeightVector& u, bool clockwise = true);
Rational cycle_length_closed_form(const HeightVector& u);

// Four times the normalized length of the dual edge whose facet contains
// (1,1) in its relative interior; errors when a cycle exists or the point
// is buried inside a cell.
Rational generalized_cycle_length(const HeightVector& u);

struct RenderOptions {
  long xmin = -6, ymin = -6, xmax = 6, ymax = 6;
  long scale = 20;  // pixels per unit in the SVG output
};

std::string render_svg(const TropicalCurve& c, const RenderOptions& opt = {});
std::string render_ascii(const TropicalCurve& c, const RenderOptions& opt = {});

}  // namespace tropj
