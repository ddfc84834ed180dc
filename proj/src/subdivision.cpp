#include "tropj/subdivision.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tropj/linprog.hpp"

namespace tropj {

int64_t cross(LatticePoint a, LatticePoint b) {
  return int64_t(a.x) * b.y - int64_t(a.y) * b.x;
}

int64_t cross(LatticePoint o, LatticePoint a, LatticePoint b) {
  return cross({a.x - o.x, a.y - o.y}, {b.x - o.x, b.y - o.y});
}

int64_t lattice_length(LatticePoint a, LatticePoint b) {
  return std::gcd(int64_t(std::abs(a.x - b.x)), int64_t(std::abs(a.y - b.y)));
}

LatticePoint primitive(LatticePoint v) {
  int64_t g = std::gcd(int64_t(std::abs(v.x)), int64_t(std::abs(v.y)));
  if (g == 0) throw std::invalid_argument("primitive: zero vector");
  return {int32_t(v.x / g), int32_t(v.y / g)};
}

int64_t twice_area(const std::vector<LatticePoint>& poly) {
  int64_t s = 0;
  for (size_t i = 0; i < poly.size(); ++i) s += cross(poly[i], poly[(i + 1) % poly.size()]);
  return s;
}

std::vector<LatticePoint> hull_ccw(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<LatticePoint> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {  // upper chain
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);  // last point repeats the first
  return h;
}

bool in_hull(const std::vector<LatticePoint>& hull, LatticePoint p) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return p == hull[0];
  if (hull.size() == 2) {
    LatticePoint a = hull[0], b = hull[1];
    if (cross(a, b, p) != 0) return false;
    int64_t d = int64_t(p.x - a.x) * (b.x - a.x) + int64_t(p.y - a.y) * (b.y - a.y);
    int64_t l = int64_t(b.x - a.x) * (b.x - a.x) + int64_t(b.y - a.y) * (b.y - a.y);
    return d >= 0 && d <= l;
  }
  for (size_t i = 0; i < hull.size(); ++i)
    if (cross(hull[i], hull[(i + 1) % hull.size()], p) < 0) return false;
  return true;
}

bool cw_less_from_east(LatticePoint a, LatticePoint b) {
  auto half = [](LatticePoint v) { return (v.y < 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) < 0;
}

const std::array<std::string, 10> kCubicNames = {"a11", "a30", "a20", "a10", "a00",
                                                 "a21", "a01", "a12", "a02", "a03"};

size_t cubic_index(LatticePoint p) {
  for (size_t i = 0; i < kCubicPoints.size(); ++i)
    if (kCubicPoints[i] == p) return i;
  throw std::invalid_argument("cubic_index: point outside the cubic's support");
}

bool is_corner(LatticePoint p) {
  return p == LatticePoint{0, 0} || p == LatticePoint{3, 0} || p == LatticePoint{0, 3};
}

bool MarkedCell::is_marked(LatticePoint p) const {
  return std::binary_search(marked.begin(), marked.end(), p);
}

bool MarkedCell::has_vertex(LatticePoint p) const {
  return std::find(vertices.begin(), vertices.end(), p) != vertices.end();
}

MarkedCell make_cell(std::vector<LatticePoint> marked) {
  MarkedCell c;
  std::sort(marked.begin(), marked.end());
  marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
  c.vertices = hull_ccw(marked);
  if (c.vertices.size() < 3) throw std::invalid_argument("make_cell: cell is not 2-dimensional");
  c.marked = std::move(marked);
  return c;
}

bool MarkedSubdivision::is_triangulation() const {
  for (auto& c : cells)
    if (c.vertices.size() != 3 || c.marked.size() != 3) return false;
  return true;
}

static std::string point_str(LatticePoint p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

static std::string points_str(const std::vector<LatticePoint>& pts) {
  std::string s;
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ",";
    s += point_str(pts[i]);
  }
  return s;
}

std::string MarkedSubdivision::str() const {
  std::string s;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) s += "; ";
    s += "{" + points_str(cells[i].vertices) + " | marked " + points_str(cells[i].marked) + "}";
  }
  return s;
}

// Plane alpha*x + beta*y + gamma through three lifted points, by Cramer.
static std::array<Rational, 3> plane_through(LatticePoint p1, const Rational& h1, LatticePoint p2,
                                             const Rational& h2, LatticePoint p3,
                                             const Rational& h3) {
  int64_t d = cross(p1, p2, p3);
  if (d == 0) throw std::invalid_argument("plane_through: collinear points");
  Rational dd{d};
  Rational alpha = (h1 * Rational(p2.y - p3.y) + h2 * Rational(p3.y - p1.y) +
                    h3 * Rational(p1.y - p2.y)) /
                   dd;
  Rational beta = (h1 * Rational(p3.x - p2.x) + h2 * Rational(p1.x - p3.x) +
                   h3 * Rational(p2.x - p1.x)) /
                  dd;
  Rational gamma = (h1 * Rational(cross(p2, p3)) + h2 * Rational(cross(p3, p1)) +
                    h3 * Rational(cross(p1, p2))) /
                   dd;
  return {alpha, beta, gamma};
}

MarkedSubdivision regular_subdivision(const HeightVector& u) {
  for (size_t i = 0; i < kCubicPoints.size(); ++i)
    if (is_corner(kCubicPoints[i]) && !u[i].has_value())
      throw std::invalid_argument("regular_subdivision: corner heights must be finite");
  std::vector<size_t> fin;
  for (size_t i = 0; i < u.size(); ++i)
    if (u[i].has_value()) fin.push_back(i);
  std::set<MarkedCell> cells;
  for (size_t a = 0; a < fin.size(); ++a)
    for (size_t b = a + 1; b < fin.size(); ++b)
      for (size_t c = b + 1; c < fin.size(); ++c) {
        LatticePoint pa = kCubicPoints[fin[a]], pb = kCubicPoints[fin[b]],
                     pc = kCubicPoints[fin[c]];
        if (cross(pa, pb, pc) == 0) continue;
        auto pl = plane_through(pa, *u[fin[a]], pb, *u[fin[b]], pc, *u[fin[c]]);
        std::vector<LatticePoint> touch;
        bool supporting = true;
        for (size_t i : fin) {
          LatticePoint q = kCubicPoints[i];
          Rational lift = pl[0] * Rational(q.x) + pl[1] * Rational(q.y) + pl[2];
          if (*u[i] < lift) {
            supporting = false;
            break;
          }
          if (*u[i] == lift) touch.push_back(q);
        }
        if (!supporting) continue;
        if (hull_ccw(touch).size() < 3) continue;
        cells.insert(make_cell(touch));
      }
  MarkedSubdivision s;
  s.cells.assign(cells.begin(), cells.end());
  int64_t area = 0;
  for (auto& c : s.cells) area += twice_area(c.vertices);
  if (area != 9) throw std::logic_error("regular_subdivision: cells fail to tile the triangle");
  return s;
}

std::array<Rational, 3> cell_plane(const HeightVector& u, const MarkedCell& cell) {
  auto h = [&](LatticePoint p) -> const Rational& {
    const ExtRational& e = u[cubic_index(p)];
    if (!e.has_value()) throw std::logic_error("cell_plane: marked point with infinite height");
    return *e;
  };
  auto pl = plane_through(cell.vertices[0], h(cell.vertices[0]), cell.vertices[1],
                          h(cell.vertices[1]), cell.vertices[2], h(cell.vertices[2]));
  for (LatticePoint p : cell.marked) {
    Rational lift = pl[0] * Rational(p.x) + pl[1] * Rational(p.y) + pl[2];
    if (h(p) != lift) throw std::logic_error("cell_plane: marked points are not coplanar");
  }
  return pl;
}

std::optional<std::pair<LatticePoint, LatticePoint>> shared_facet(const MarkedCell& a,
                                                                  const MarkedCell& b) {
  size_t n = a.vertices.size(), m = b.vertices.size();
  for (size_t i = 0; i < n; ++i) {
    LatticePoint p = a.vertices[i], q = a.vertices[(i + 1) % n];
    for (size_t j = 0; j < m; ++j)
      if (b.vertices[j] == q && b.vertices[(j + 1) % m] == p) return std::make_pair(p, q);
  }
  return std::nullopt;
}

bool interior_point_is_vertex(const MarkedSubdivision& s, LatticePoint p) {
  if (!(p.x > 0 && p.y > 0 && p.x + p.y < 3))
    throw std::invalid_argument("interior_point_is_vertex: point is not interior");
  for (auto& c : s.cells)
    if (c.has_vertex(p)) return true;
  return false;
}

const std::vector<VisibilityInequality>& visibility_inequalities() {
  static const std::vector<VisibilityInequality> table = {
      {{{6, 3}, {1, 2}, {9, 1}}, 6},          {{{3, 3}, {9, 2}, {1, 1}}, 6},
      {{{7, 3}, {1, 1}, {4, 2}}, 6},          {{{5, 3}, {9, 1}, {4, 2}}, 6},
      {{{1, 2}, {8, 3}, {4, 1}}, 6},          {{{9, 2}, {2, 3}, {4, 1}}, 6},
      {{{7, 1}, {1, 1}, {4, 1}, {8, 1}}, 4},  {{{5, 1}, {9, 1}, {4, 1}, {2, 1}}, 4},
      {{{6, 1}, {3, 1}, {9, 1}, {1, 1}}, 4},  {{{6, 2}, {7, 1}, {1, 1}}, 4},
      {{{3, 2}, {5, 1}, {9, 1}}, 4},          {{{7, 2}, {2, 1}, {4, 1}}, 4},
      {{{5, 2}, {8, 1}, {4, 1}}, 4},          {{{8, 2}, {3, 1}, {1, 1}}, 4},
      {{{2, 2}, {6, 1}, {9, 1}}, 4},          {{{2, 1}, {6, 1}, {7, 1}}, 3},
      {{{8, 1}, {3, 1}, {5, 1}}, 3},          {{{1, 1}, {8, 1}, {6, 1}}, 3},
      {{{9, 1}, {3, 1}, {2, 1}}, 3},          {{{4, 1}, {7, 1}, {5, 1}}, 3},
      {{{4, 1}, {1, 1}, {9, 1}}, 3},          {{{5, 1}, {6, 1}}, 2},
      {{{3, 1}, {7, 1}}, 2},                  {{{2, 1}, {8, 1}}, 2},
  };
  return table;
}

bool in_visibility_cone(const HeightVector& u) {
  if (!u[0].has_value()) return false;
  for (const auto& ineq : visibility_inequalities()) {
    Rational lhs{0};
    bool infinite = false;
    for (auto [idx, coef] : ineq.lhs) {
      if (!u[idx].has_value()) {
        infinite = true;
        break;
      }
      lhs += Rational(coef) * *u[idx];
    }
    if (infinite) continue;
    if (!(Rational(ineq.rhs_coef) * *u[0] < lhs)) return false;
  }
  return true;
}

bool is_refinement(const MarkedSubdivision& fine, const MarkedSubdivision& coarse) {
  int64_t fine_area = 0, coarse_area = 0;
  for (auto& c : fine.cells) fine_area += twice_area(c.vertices);
  for (auto& c : coarse.cells) coarse_area += twice_area(c.vertices);
  if (fine_area != coarse_area) return false;
  for (auto& big : coarse.cells) {
    int64_t covered = 0;
    for (auto& small : fine.cells) {
      bool inside = true;
      for (LatticePoint v : small.vertices)
        if (!big.contains(v)) {
          inside = false;
          break;
        }
      if (!inside) continue;
      covered += twice_area(small.vertices);
      for (LatticePoint p : small.marked)
        if (!big.is_marked(p)) return false;
    }
    if (covered != twice_area(big.vertices)) return false;
  }
  return true;
}

std::optional<HeightVector> realize_heights(const std::vector<MarkedCell>& cells) {
  size_t nv = 10 + 3 * cells.size();
  std::vector<LinearConstraint> cons;
  for (size_t c = 0; c < cells.size(); ++c) {
    for (size_t i = 0; i < kCubicPoints.size(); ++i) {
      LatticePoint p = kCubicPoints[i];
      LinearConstraint lc;
      lc.a.assign(nv, Rational(0));
      lc.a[i] = Rational(1);
      lc.a[10 + 3 * c] = Rational(-p.x);
      lc.a[10 + 3 * c + 1] = Rational(-p.y);
      lc.a[10 + 3 * c + 2] = Rational(-1);
      if (cells[c].is_marked(p)) {
        lc.rhs = Rational(0);
        lc.equality = true;
      } else {
        lc.rhs = Rational(1);
        lc.equality = false;
      }
      cons.push_back(std::move(lc));
    }
  }
  auto sol = solve_constraints(cons, nv);
  if (!sol) return std::nullopt;
  HeightVector u;
  for (size_t i = 0; i < 10; ++i) u[i] = (*sol)[i];
  return u;
}

LatticePoint s3_apply(const Perm3& p, LatticePoint q) {
  std::array<int32_t, 3> c = {q.x, q.y, int32_t(3 - q.x - q.y)};
  std::array<int32_t, 3> r{};
  for (int k = 0; k < 3; ++k) r[p[k]] = c[k];
  return {r[0], r[1]};
}

HeightVector s3_apply(const Perm3& p, const HeightVector& u) {
  HeightVector out;
  for (size_t i = 0; i < kCubicPoints.size(); ++i)
    out[cubic_index(s3_apply(p, kCubicPoints[i]))] = u[i];
  return out;
}

MarkedCell s3_apply(const Perm3& p, const MarkedCell& c) {
  std::vector<LatticePoint> m;
  for (LatticePoint q : c.marked) m.push_back(s3_apply(p, q));
  return make_cell(std::move(m));
}

MarkedSubdivision s3_apply(const Perm3& p, const MarkedSubdivision& s) {
  MarkedSubdivision out;
  for (auto& c : s.cells) out.cells.push_back(s3_apply(p, c));
  std::sort(out.cells.begin(), out.cells.end());
  return out;
}

const char* ray_type_name(RayType t) {
  switch (t) {
    case RayType::Lift: return "lift";
    case RayType::Fold: return "fold";
    case RayType::Pinwheel: return "pinwheel";
    default: return "not-a-ray";
  }
}

static bool fully_marked(const MarkedCell& c) {
  for (LatticePoint p : kCubicPoints)
    if (c.contains(p) && !c.is_marked(p)) return false;
  return true;
}

// Order a triple counterclockwise starting at its lex-min member.
static std::vector<LatticePoint> canonical_triple(std::vector<LatticePoint> t) {
  std::sort(t.begin(), t.end());
  if (cross(t[0], t[1], t[2]) < 0) std::swap(t[1], t[2]);
  return t;
}

RayClass classify_ray(const MarkedSubdivision& s) {
  RayClass none;
  if (s.cells.size() == 1) {
    std::vector<LatticePoint> unmarked;
    for (LatticePoint p : kCubicPoints)
      if (!s.cells[0].is_marked(p)) unmarked.push_back(p);
    if (unmarked.size() == 1 && !is_corner(unmarked[0]))
      return {RayType::Lift, {unmarked[0]}};
    return none;
  }
  if (s.cells.size() == 2) {
    if (!fully_marked(s.cells[0]) || !fully_marked(s.cells[1])) return none;
    auto e = shared_facet(s.cells[0], s.cells[1]);
    if (!e) return none;
    std::vector<LatticePoint> data = {e->first, e->second};
    std::sort(data.begin(), data.end());
    return {RayType::Fold, data};
  }
  if (s.cells.size() == 3) {
    for (auto& c : s.cells)
      if (!fully_marked(c)) return none;
    LatticePoint hub = {1, 1};
    std::vector<LatticePoint> spokes;
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = i + 1; j < 3; ++j) {
        auto e = shared_facet(s.cells[i], s.cells[j]);
        if (!e) return none;
        if (e->first == hub)
          spokes.push_back(e->second);
        else if (e->second == hub)
          spokes.push_back(e->first);
        else
          return none;
      }
    if (spokes.size() != 3) return none;
    std::sort(spokes.begin(), spokes.end());
    if (std::unique(spokes.begin(), spokes.end()) != spokes.end()) return none;
    return {RayType::Pinwheel, canonical_triple(spokes)};
  }
  return none;
}

static bool on_boundary(LatticePoint p) {
  return p.x == 0 || p.y == 0 || p.x + p.y == 3;
}

HeightVector lift_heights(LatticePoint nu) {
  size_t idx = cubic_index(nu);
  if (is_corner(nu)) throw std::invalid_argument("lift_heights: corner cannot be lifted");
  HeightVector u;
  u.fill(Rational(0));
  u[idx] = Rational(1);
  return u;
}

HeightVector fold_heights(LatticePoint a, LatticePoint b) {
  cubic_index(a);
  cubic_index(b);
  if (a == b || !on_boundary(a) || !on_boundary(b))
    throw std::invalid_argument("fold_heights: need two distinct boundary points");
  if ((a.y == 0 && b.y == 0) || (a.x == 0 && b.x == 0) ||
      (a.x + a.y == 3 && b.x + b.y == 3))
    throw std::invalid_argument("fold_heights: chord lies on the boundary");
  LatticePoint d = primitive({b.x - a.x, b.y - a.y});
  LatticePoint w = {-d.y, d.x};
  if (w.x < 0 || (w.x == 0 && w.y < 0)) w = {-w.x, -w.y};
  int64_t c = int64_t(w.x) * a.x + int64_t(w.y) * a.y;
  HeightVector u;
  for (size_t i = 0; i < kCubicPoints.size(); ++i) {
    int64_t v = int64_t(w.x) * kCubicPoints[i].x + int64_t(w.y) * kCubicPoints[i].y - c;
    u[i] = Rational(v > 0 ? v : 0);
  }
  return u;
}

HeightVector pinwheel_heights(LatticePoint p1, LatticePoint p2, LatticePoint p3) {
  LatticePoint hub = {1, 1};
  std::array<LatticePoint, 3> pts = {p1, p2, p3};
  std::array<LatticePoint, 3> v;
  for (int i = 0; i < 3; ++i) {
    cubic_index(pts[i]);
    if (!on_boundary(pts[i]))
      throw std::invalid_argument("pinwheel_heights: walls must end on the boundary");
    v[i] = {pts[i].x - hub.x, pts[i].y - hub.y};
  }
  if (!(cross(v[0], v[1]) > 0 && cross(v[1], v[2]) > 0 && cross(v[2], v[0]) > 0))
    throw std::invalid_argument(
        "pinwheel_heights: triple must wind counterclockwise around the center");
  HeightVector u;
  for (size_t i = 0; i < kCubicPoints.size(); ++i) {
    LatticePoint q = {kCubicPoints[i].x - hub.x, kCubicPoints[i].y - hub.y};
    if (cross(v[0], q) >= 0 && cross(q, v[1]) >= 0) {
      u[i] = Rational(0);  // base sector
    } else if (cross(v[1], q) >= 0 && cross(q, v[2]) >= 0) {
      u[i] = Rational(cross(v[1], q)) / Rational(cross(v[1], v[2]));
    } else {
      if (!(cross(v[2], q) >= 0 && cross(q, v[0]) >= 0))
        throw std::logic_error("pinwheel_heights: point escapes all sectors");
      u[i] = Rational(cross(q, v[0])) / Rational(cross(v[2], v[0]));
    }
  }
  return u;
}

std::vector<RayInfo> enumerate_rays() {
  LatticePoint hub = {1, 1};
  std::vector<LatticePoint> boundary;
  for (LatticePoint p : kCubicPoints)
    if (p != hub) boundary.push_back(p);
  std::sort(boundary.begin(), boundary.end());

  struct Candidate {
    RayClass ray;
    HeightVector heights;
    std::vector<MarkedCell> expected;
  };
  std::vector<Candidate> cands;

  for (LatticePoint p : kCubicPoints) {  // lifts of non-corner points
    if (is_corner(p)) continue;
    std::vector<LatticePoint> rest;
    for (LatticePoint q : kCubicPoints)
      if (q != p) rest.push_back(q);
    cands.push_back({{RayType::Lift, {p}}, lift_heights(p), {make_cell(rest)}});
  }

  for (size_t i = 0; i < boundary.size(); ++i)  // folds along interior chords
    for (size_t j = i + 1; j < boundary.size(); ++j) {
      LatticePoint a = boundary[i], b = boundary[j];
      if ((a.y == 0 && b.y == 0) || (a.x == 0 && b.x == 0) ||
          (a.x + a.y == 3 && b.x + b.y == 3))
        continue;
      LatticePoint d = primitive({b.x - a.x, b.y - a.y});
      LatticePoint w = {-d.y, d.x};
      if (w.x < 0 || (w.x == 0 && w.y < 0)) w = {-w.x, -w.y};
      int64_t c = int64_t(w.x) * a.x + int64_t(w.y) * a.y;
      std::vector<LatticePoint> lo, hi;
      for (LatticePoint q : kCubicPoints) {
        int64_t s = int64_t(w.x) * q.x + int64_t(w.y) * q.y - c;
        if (s <= 0) lo.push_back(q);
        if (s >= 0) hi.push_back(q);
      }
      cands.push_back(
          {{RayType::Fold, {a, b}}, fold_heights(a, b), {make_cell(lo), make_cell(hi)}});
    }

  for (size_t i = 0; i < boundary.size(); ++i)  // pinwheels around the center
    for (size_t j = i + 1; j < boundary.size(); ++j)
      for (size_t k = j + 1; k < boundary.size(); ++k) {
        std::vector<LatticePoint> t = {boundary[i], boundary[j], boundary[k]};
        if (cross(t[0], t[1], t[2]) == 0) continue;
        t = canonical_triple(t);
        std::array<LatticePoint, 3> v;
        for (int m = 0; m < 3; ++m) v[m] = {t[m].x - hub.x, t[m].y - hub.y};
        if (!(cross(v[0], v[1]) > 0 && cross(v[1], v[2]) > 0 && cross(v[2], v[0]) > 0))
          continue;  // center not strictly inside
        std::vector<MarkedCell> sectors;
        for (int m = 0; m < 3; ++m) {
          LatticePoint va = v[m], vb = v[(m + 1) % 3];
          std::vector<LatticePoint> sec;
          for (LatticePoint q : kCubicPoints) {
            LatticePoint d = {q.x - hub.x, q.y - hub.y};
            if (cross(va, d) >= 0 && cross(d, vb) >= 0) sec.push_back(q);
          }
          sectors.push_back(make_cell(sec));
        }
        cands.push_back(
            {{RayType::Pinwheel, t}, pinwheel_heights(t[0], t[1], t[2]), sectors});
      }

  std::vector<RayInfo> out;
  for (auto& cand : cands) {
    MarkedSubdivision sub = regular_subdivision(cand.heights);
    MarkedSubdivision expect;
    expect.cells = cand.expected;
    std::sort(expect.cells.begin(), expect.cells.end());
    if (sub != expect) throw std::logic_error("enumerate_rays: witness induces the wrong cells");
    RayClass cls = classify_ray(sub);
    if (cls != cand.ray) throw std::logic_error("enumerate_rays: witness fails to classify back");

    std::set<std::vector<LatticePoint>> orbit;
    for (const Perm3& p : kS3) {
      std::vector<LatticePoint> img;
      for (LatticePoint q : cand.ray.data) img.push_back(s3_apply(p, q));
      std::sort(img.begin(), img.end());
      orbit.insert(img);
    }
    std::vector<LatticePoint> mine = cand.ray.data;
    std::sort(mine.begin(), mine.end());
    if (mine != *orbit.begin()) continue;  // keep the lex-min representative

    RayInfo info;
    info.ray = cand.ray;
    info.label = std::string(ray_type_name(cand.ray.type)) + "(" + points_str(cand.ray.data) + ")";
    info.heights = cand.heights;
    info.subdivision = sub;
    info.orbit_size = int(orbit.size());
    out.push_back(std::move(info));
  }
  std::sort(out.begin(), out.end(), [](const RayInfo& a, const RayInfo& b) {
    if (a.ray.type != b.ray.type) return a.ray.type < b.ray.type;
    return a.ray.data < b.ray.data;
  });
  return out;
}

}  // namespace tropj
