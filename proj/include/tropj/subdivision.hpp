#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropj/rational.hpp"

namespace tropj {

struct LatticePoint {
  int32_t x = 0, y = 0;
  auto operator<=>(const LatticePoint&) const = default;
};

int64_t cross(LatticePoint a, LatticePoint b);
int64_t cross(LatticePoint o, LatticePoint a, LatticePoint b);
int64_t lattice_length(LatticePoint a, LatticePoint b);
LatticePoint primitive(LatticePoint v);
int64_t twice_area(const std::vector<LatticePoint>& poly);  // shoelace, ccw positive

// Convex hull vertices, counterclockwise, starting at the lex-min point.
// Collinear configurations collapse to their two endpoints.
std::vector<LatticePoint> hull_ccw(std::vector<LatticePoint> pts);
bool in_hull(const std::vector<LatticePoint>& hull, LatticePoint p);

// Strict order sweeping directions clockwise starting from east (1,0).
bool cw_less_from_east(LatticePoint a, LatticePoint b);

// The ten monomial positions of a plane cubic, in the fixed order used for
// height vectors and coefficient variables throughout.
inline constexpr std::array<LatticePoint, 10> kCubicPoints = {
    {{1, 1}, {3, 0}, {2, 0}, {1, 0}, {0, 0}, {2, 1}, {0, 1}, {1, 2}, {0, 2}, {0, 3}}};
extern const std::array<std::string, 10> kCubicNames;  // "a11", "a30", ...
size_t cubic_index(LatticePoint p);                    // throws on non-members
bool is_corner(LatticePoint p);

// Heights per cubic point; nullopt = +infinity (absent monomial).
using HeightVector = std::array<ExtRational, 10>;

struct MarkedCell {
  std::vector<LatticePoint> vertices;  // hull, ccw from lex-min
  std::vector<LatticePoint> marked;    // sorted; superset of vertices
  auto operator<=>(const MarkedCell&) const = default;
  bool contains(LatticePoint p) const { return in_hull(vertices, p); }
  bool is_marked(LatticePoint p) const;
  bool has_vertex(LatticePoint p) const;
};

// Cell with the given marked points; their hull must be 2-dimensional.
MarkedCell make_cell(std::vector<LatticePoint> marked);

struct MarkedSubdivision {
  std::vector<MarkedCell> cells;  // sorted
  auto operator<=>(const MarkedSubdivision&) const = default;
  bool is_triangulation() const;  // every cell a triangle marked only at its corners
  std::string str() const;
};

// Lift each point to its height, project the lower hull.  Cells are the
// 2-dimensional touch sets of supporting planes; marked points are the ones
// on the plane.  Infinite heights take no part; corners must be finite.
MarkedSubdivision regular_subdivision(const HeightVector& u);

// Coefficients (alpha, beta, gamma) of the plane alpha*x + beta*y + gamma
// matching the heights on every marked point of the cell.
std::array<Rational, 3> cell_plane(const HeightVector& u, const MarkedCell& cell);

// Endpoints of the common facet of two distinct cells, if they share one.
std::optional<std::pair<LatticePoint, LatticePoint>> shared_facet(const MarkedCell& a,
                                                                  const MarkedCell& b);

// True iff p (a strictly interior point of the triangle) is a polygon
// vertex of some cell.
bool interior_point_is_vertex(const MarkedSubdivision& s, LatticePoint p = {1, 1});

struct VisibilityInequality {
  std::vector<std::pair<size_t, int>> lhs;  // (height index, coefficient)
  int rhs_coef;                             // times u at (1,1)
};
const std::vector<VisibilityInequality>& visibility_inequalities();

// The open cone of heights keeping (1,1) visible as a subdivision vertex:
// all strict inequalities hold.  Infinite u11 fails; an infinite height on
// the left-hand side satisfies its inequality.
bool in_visibility_cone(const HeightVector& u);

// True iff inside every cell of `coarse` the cells of `fine` contained in it
// tile it exactly and mark only points the coarse cell marks.
bool is_refinement(const MarkedSubdivision& fine, const MarkedSubdivision& coarse);

// Heights inducing exactly the given cells: marked points on a per-cell
// plane, every other point at least 1 above it.  nullopt if unrealizable.
std::optional<HeightVector> realize_heights(const std::vector<MarkedCell>& cells);

// Coordinate permutations of the homogeneous cubic act on (i,j) through the
// barycentric coordinates (i, j, 3-i-j); slot k of a point moves to p[k].
using Perm3 = std::array<int, 3>;
inline constexpr std::array<Perm3, 6> kS3 = {
    {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
LatticePoint s3_apply(const Perm3& p, LatticePoint q);
HeightVector s3_apply(const Perm3& p, const HeightVector& u);
MarkedCell s3_apply(const Perm3& p, const MarkedCell& c);
MarkedSubdivision s3_apply(const Perm3& p, const MarkedSubdivision& s);

// The three one-bend patterns that can appear as rays of the secondary fan,
// plus a rejection tag.  data holds the defining points: the lifted point,
// the chord endpoints (sorted), or the pinwheel triple (ccw from lex-min).
enum class RayType { Lift, Fold, Pinwheel, NotARay };
const char* ray_type_name(RayType t);

struct RayClass {
  RayType type = RayType::NotARay;
  std::vector<LatticePoint> data;
  bool operator==(const RayClass&) const = default;
};

// Decide which pattern a subdivision realizes: one cell with a single
// unmarked non-corner point (lift); two fully marked cells along a chord
// (fold); three fully marked cells with walls meeting at (1,1) (pinwheel).
// Anything else bends in more than one independent way and is no ray.
RayClass classify_ray(const MarkedSubdivision& s);

// Witness heights on the ray (unit bend, no affine part).
HeightVector lift_heights(LatticePoint nu);
HeightVector fold_heights(LatticePoint a, LatticePoint b);
HeightVector pinwheel_heights(LatticePoint p1, LatticePoint p2, LatticePoint p3);  // ccw

struct RayInfo {
  RayClass ray;
  std::string label;
  HeightVector heights;
  MarkedSubdivision subdivision;
  int orbit_size = 0;
};

// All lifts, folds and pinwheels, one representative per symmetry orbit
// (lex-min defining data), each witness checked to classify back and to
// induce the constructed subdivision.
std::vector<RayInfo> enumerate_rays();

}  // namespace tropj
