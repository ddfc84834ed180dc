#include "tropj/tropcurve.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace tropj {

namespace {

const LatticePoint kHub = {1, 1};

// Which boundary line of the big triangle carries both points, if any.
std::optional<LatticePoint> boundary_ray_direction(LatticePoint p, LatticePoint q) {
  if (p.y == 0 && q.y == 0) return LatticePoint{0, 1};
  if (p.x == 0 && q.x == 0) return LatticePoint{1, 0};
  if (p.x + p.y == 3 && q.x + q.y == 3) return LatticePoint{-1, -1};
  return std::nullopt;
}

bool edge_matches_facet(const CurveEdge& e, LatticePoint p, LatticePoint q) {
  return (e.fa == p && e.fb == q) || (e.fa == q && e.fb == p);
}

}  // namespace

TropicalCurve dual_curve(const HeightVector& u) {
  MarkedSubdivision s = regular_subdivision(u);
  TropicalCurve c;
  for (const auto& cell : s.cells) {
    auto pl = cell_plane(u, cell);
    c.vertices.push_back({{-pl[0], -pl[1]}, cell});
  }
  for (size_t i = 0; i < s.cells.size(); ++i)
    for (size_t j = i + 1; j < s.cells.size(); ++j)
      if (auto e = shared_facet(s.cells[i], s.cells[j])) {
        LatticePoint fa = e->first, fb = e->second;
        c.edges.push_back({i, j, fa, fb, {fb.y - fa.y, fa.x - fb.x}});
      }
  for (size_t i = 0; i < s.cells.size(); ++i) {
    const auto& v = s.cells[i].vertices;
    for (size_t k = 0; k < v.size(); ++k) {
      LatticePoint p = v[k], q = v[(k + 1) % v.size()];
      if (auto dir = boundary_ray_direction(p, q))
        c.rays.push_back({i, *dir, lattice_length(p, q), p, q});
    }
  }
  return c;
}

Rational parallel_ratio(const std::array<Rational, 2>& e, LatticePoint v) {
  if (v.x == 0 && v.y == 0) throw std::logic_error("parallel_ratio: zero direction");
  if (e[0] * Rational(v.y) != e[1] * Rational(v.x))
    throw std::logic_error("parallel_ratio: vectors are not parallel");
  Rational r = v.x != 0 ? e[0] / Rational(v.x) : e[1] / Rational(v.y);
  return r.abs();
}

std::vector<LatticePoint> interior_neighbors_cw(const MarkedSubdivision& s) {
  std::set<LatticePoint> nb;
  bool found = false;
  for (const auto& c : s.cells) {
    const auto& v = c.vertices;
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] == kHub) {
        found = true;
        nb.insert(v[(i + 1) % v.size()]);
        nb.insert(v[(i + v.size() - 1) % v.size()]);
      }
  }
  if (!found) throw std::invalid_argument("interior_neighbors_cw: (1,1) is not a vertex");
  std::vector<LatticePoint> out(nb.begin(), nb.end());
  std::sort(out.begin(), out.end(), [](LatticePoint a, LatticePoint b) {
    return cw_less_from_east({a.x - kHub.x, a.y - kHub.y}, {b.x - kHub.x, b.y - kHub.y});
  });
  return out;
}

std::vector<Rational> cycle_coefficients(const std::vector<LatticePoint>& neighbors_cw) {
  size_t k = neighbors_cw.size();
  if (k < 3) throw std::invalid_argument("cycle_coefficients: need at least three neighbors");
  std::vector<LatticePoint> w;
  for (LatticePoint p : neighbors_cw) w.push_back({p.x - kHub.x, p.y - kHub.y});
  auto D = [&](size_t i, size_t j) { return Rational(cross(w[i % k], w[j % k])); };
  std::vector<Rational> K;
  for (size_t j = 0; j < k; ++j) {
    Rational dm = D(j + k - 1, j), dp = D(j, j + 1);
    if (dm.is_zero() || dp.is_zero())
      throw std::logic_error("cycle_coefficients: consecutive neighbors are collinear");
    K.push_back((dm + dp + D(j + 1, j + k - 1)) / (dm * dp));
  }
  return K;
}

ClosedFormCycle cycle_length_terms(const HeightVector& u, bool clockwise) {
  MarkedSubdivision s = regular_subdivision(u);
  if (!interior_point_is_vertex(s))
    throw std::invalid_argument("cycle_length_terms: (1,1) is not a vertex");
  ClosedFormCycle out;
  out.neighbors = interior_neighbors_cw(s);
  if (!clockwise) std::reverse(out.neighbors.begin(), out.neighbors.end());
  size_t k = out.neighbors.size();
  std::vector<LatticePoint> w;
  std::vector<Rational> h;
  for (LatticePoint p : out.neighbors) {
    w.push_back({p.x - kHub.x, p.y - kHub.y});
    h.push_back(*u[cubic_index(p)]);
  }
  Rational hu = *u[0];
  auto D = [&](size_t i, size_t j) { return Rational(cross(w[i % k], w[j % k])); };
  out.total = Rational(0);
  for (size_t j = 0; j < k; ++j) {
    size_t jm = (j + k - 1) % k, jp = (j + 1) % k;
    Rational lam = (hu - h[jm]) / D(jm, j) + (hu - h[jp]) / D(j, jp) +
                   (hu - h[j]) * D(jp, jm) / (D(jm, j) * D(j, jp));
    out.lambdas.push_back(lam);
    out.total += lam;
  }
  return out;
}

Rational cycle_length_closed_form(const HeightVector& u) { return cycle_length_terms(u).total; }

CycleReport cycle_report(const HeightVector& u) {
  MarkedSubdivision s = regular_subdivision(u);
  TropicalCurve curve = dual_curve(u);
  CycleReport rep;
  rep.length = Rational(0);
  if (interior_point_is_vertex(s)) {
    rep.has_cycle = true;
    for (LatticePoint nb : interior_neighbors_cw(s)) {
      size_t idx = curve.edges.size();
      for (size_t i = 0; i < curve.edges.size(); ++i)
        if (edge_matches_facet(curve.edges[i], kHub, nb)) idx = i;
      if (idx == curve.edges.size())
        throw std::logic_error("cycle_report: missing dual edge for a spoke");
      const CurveEdge& e = curve.edges[idx];
      std::array<Rational, 2> vec = {curve.vertices[e.b].pos[0] - curve.vertices[e.a].pos[0],
                                     curve.vertices[e.b].pos[1] - curve.vertices[e.a].pos[1]};
      Rational lam = parallel_ratio(vec, e.dir);
      rep.cycle_edges.push_back(idx);
      rep.edge_lengths.push_back(lam);
      rep.length += lam;
    }
    return rep;
  }
  for (size_t i = 0; i < curve.edges.size(); ++i) {
    const CurveEdge& e = curve.edges[i];
    if (cross(e.fa, e.fb, kHub) != 0) continue;
    int64_t d = int64_t(kHub.x - e.fa.x) * (e.fb.x - e.fa.x) +
                int64_t(kHub.y - e.fa.y) * (e.fb.y - e.fa.y);
    int64_t l = int64_t(e.fb.x - e.fa.x) * (e.fb.x - e.fa.x) +
                int64_t(e.fb.y - e.fa.y) * (e.fb.y - e.fa.y);
    if (d <= 0 || d >= l) continue;  // strictly inside the facet
    std::array<Rational, 2> vec = {curve.vertices[e.b].pos[0] - curve.vertices[e.a].pos[0],
                                   curve.vertices[e.b].pos[1] - curve.vertices[e.a].pos[1]};
    Rational lam = parallel_ratio(vec, e.dir);
    rep.generalized = true;
    rep.cycle_edges.push_back(i);
    rep.edge_lengths.push_back(lam);
    rep.length = Rational(4) * lam;
    return rep;
  }
  return rep;
}

Rational generalized_cycle_length(const HeightVector& u) {
  CycleReport rep = cycle_report(u);
  if (rep.has_cycle)
    throw std::invalid_argument("generalized_cycle_length: the curve has a real cycle");
  if (!rep.generalized)
    throw std::invalid_argument("generalized_cycle_length: (1,1) does not lie on a facet");
  return rep.length;
}

namespace {

// Fixed-point pixel coordinate with three decimals, exact arithmetic.
std::string fmt_px(const Rational& v) {
  Rational r = (v * Rational(1000) + Rational(1, 2)).floor();
  mpz_class n = r.num();
  bool neg = n < 0;
  if (neg) n = -n;
  mpz_class ip = n / 1000, fp = n % 1000;
  std::string frac = fp.get_str();
  frac.insert(0, 3 - frac.size(), '0');
  return (neg ? "-" : "") + ip.get_str() + "." + frac;
}

struct Frame {
  const RenderOptions& opt;
  Rational px(const Rational& x) const { return (x - Rational(opt.xmin)) * Rational(opt.scale); }
  Rational py(const Rational& y) const { return (Rational(opt.ymax) - y) * Rational(opt.scale); }
};

// Portion of the ray from p in direction d that stays inside the box.
std::optional<Rational> clip_ray(const std::array<Rational, 2>& p, LatticePoint d,
                                 const RenderOptions& opt) {
  std::optional<Rational> t;
  auto upd = [&](const Rational& cand) {
    if (!t || cand < *t) t = cand;
  };
  if (d.x > 0) upd((Rational(opt.xmax) - p[0]) / Rational(d.x));
  if (d.x < 0) upd((Rational(opt.xmin) - p[0]) / Rational(d.x));
  if (d.y > 0) upd((Rational(opt.ymax) - p[1]) / Rational(d.y));
  if (d.y < 0) upd((Rational(opt.ymin) - p[1]) / Rational(d.y));
  if (t && *t < Rational(0)) t = Rational(0);
  return t;
}

}  // namespace

std::string render_svg(const TropicalCurve& c, const RenderOptions& opt) {
  Frame fr{opt};
  long w = (opt.xmax - opt.xmin) * opt.scale, h = (opt.ymax - opt.ymin) * opt.scale;
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) +
         "\" height=\"" + std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) + " " +
         std::to_string(h) + "\">\n";
  svg += "<rect width=\"" + std::to_string(w) + "\" height=\"" + std::to_string(h) +
         "\" fill=\"white\"/>\n";
  svg += "<g stroke=\"black\" stroke-linecap=\"round\" fill=\"none\">\n";
  auto line = [&](const std::array<Rational, 2>& a, const std::array<Rational, 2>& b,
                  int64_t width) {
    svg += "<line x1=\"" + fmt_px(fr.px(a[0])) + "\" y1=\"" + fmt_px(fr.py(a[1])) + "\" x2=\"" +
           fmt_px(fr.px(b[0])) + "\" y2=\"" + fmt_px(fr.py(b[1])) + "\" stroke-width=\"" +
           std::to_string(width) + "\"/>\n";
  };
  for (const auto& e : c.edges) line(c.vertices[e.a].pos, c.vertices[e.b].pos, 1);
  for (const auto& r : c.rays) {
    const auto& p = c.vertices[r.vertex].pos;
    auto t = clip_ray(p, r.dir, opt);
    if (!t || t->is_zero()) continue;
    std::array<Rational, 2> q = {p[0] + *t * Rational(r.dir.x), p[1] + *t * Rational(r.dir.y)};
    line(p, q, r.weight);
  }
  svg += "</g>\n";
  for (const auto& v : c.vertices)
    svg += "<circle cx=\"" + fmt_px(fr.px(v.pos[0])) + "\" cy=\"" + fmt_px(fr.py(v.pos[1])) +
           "\" r=\"3\" fill=\"black\"/>\n";
  svg += "</svg>\n";
  return svg;
}

std::string render_ascii(const TropicalCurve& c, const RenderOptions& opt) {
  long cols = (opt.xmax - opt.xmin) * 2 + 1, rows = opt.ymax - opt.ymin + 1;
  std::vector<std::string> grid(rows, std::string(cols, ' '));
  auto plot = [&](const Rational& x, const Rational& y, char ch) {
    Rational col = ((x - Rational(opt.xmin)) * Rational(2) + Rational(1, 2)).floor();
    Rational row = (Rational(opt.ymax) - y + Rational(1, 2)).floor();
    if (!col.num().fits_slong_p() || !row.num().fits_slong_p()) return;
    long ci = col.num().get_si(), ri = row.num().get_si();
    if (ci < 0 || ci >= cols || ri < 0 || ri >= rows) return;
    grid[ri][ci] = ch;
  };
  auto segment = [&](const std::array<Rational, 2>& a, const std::array<Rational, 2>& b) {
    for (int k = 0; k <= 64; ++k) {
      Rational t(k, 64);
      plot(a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]), '*');
    }
  };
  for (const auto& e : c.edges) segment(c.vertices[e.a].pos, c.vertices[e.b].pos);
  for (const auto& r : c.rays) {
    const auto& p = c.vertices[r.vertex].pos;
    auto t = clip_ray(p, r.dir, opt);
    if (!t || t->is_zero()) continue;
    segment(p, {p[0] + *t * Rational(r.dir.x), p[1] + *t * Rational(r.dir.y)});
  }
  for (const auto& v : c.vertices) plot(v.pos[0], v.pos[1], 'o');
  std::string out;
  for (const auto& row : grid) {
    out += row;
    out += '\n';
  }
  return out;
}

}  // namespace tropj
