#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "testutil.hpp"
#include "tropj/tropcurve.hpp"

using namespace tropj;
using tropj::testutil::Rng;
using LP = LatticePoint;

namespace {

HeightVector hv(const std::vector<std::string>& vals) {
  REQUIRE(vals.size() == 10);
  HeightVector u;
  for (size_t i = 0; i < 10; ++i) {
    if (vals[i] == "inf")
      u[i] = std::nullopt;
    else
      u[i] = Rational::parse(vals[i]);
  }
  return u;
}

HeightVector example_heights() {
  return hv({"0", "1", "100", "100", "1", "100", "1", "1", "3", "7"});
}

HeightVector zero_heights() {
  HeightVector u;
  u.fill(Rational(0));
  return u;
}

HeightVector random_heights(Rng& rng) {
  HeightVector u;
  for (size_t i = 0; i < 10; ++i) u[i] = Rational(rng.int_in(0, 8));
  return u;
}

HeightVector random_visible(Rng& rng) {
  for (;;) {
    HeightVector u = random_heights(rng);
    u[0] = Rational(rng.int_in(-2, 2));
    if (in_visibility_cone(u)) return u;
  }
}

std::array<Rational, 2> vertex_at(const TropicalCurve& c, long x, long y) {
  for (const auto& v : c.vertices)
    if (v.pos[0] == Rational(x) && v.pos[1] == Rational(y)) return v.pos;
  REQUIRE(false);
  return {};
}

}  // namespace

TEST_CASE("dual curve of the trivial subdivision") {
  auto c = dual_curve(zero_heights());
  REQUIRE(c.vertices.size() == 1);
  CHECK(c.vertices[0].pos == std::array<Rational, 2>{Rational(0), Rational(0)});
  CHECK(c.edges.empty());
  REQUIRE(c.rays.size() == 3);
  std::map<LP, int64_t> by_dir;
  for (const auto& r : c.rays) {
    CHECK(r.vertex == 0);
    by_dir[r.dir] = r.weight;
  }
  CHECK(by_dir[LP{0, 1}] == 3);
  CHECK(by_dir[LP{1, 0}] == 3);
  CHECK(by_dir[LP{-1, -1}] == 3);
}

TEST_CASE("dual curve of the worked example") {
  auto c = dual_curve(example_heights());
  REQUIRE(c.vertices.size() == 6);
  std::set<std::pair<long, long>> pos;
  for (const auto& v : c.vertices)
    pos.insert({v.pos[0].num().get_si(), v.pos[1].num().get_si()});
  std::set<std::pair<long, long>> want = {{0, 1}, {-1, -1}, {1, 0}, {1, -1}, {2, -2}, {2, -4}};
  CHECK(pos == want);
  CHECK(c.edges.size() == 6);
  CHECK(c.rays.size() == 6);
  int64_t total_weight = 0;
  for (const auto& r : c.rays) total_weight += r.weight;
  CHECK(total_weight == 9);  // three ends in each of the three directions

  // Vertices carry their dual cells; positions are the negated plane slopes.
  auto u = example_heights();
  for (const auto& v : c.vertices) {
    auto pl = cell_plane(u, v.cell);
    CHECK(v.pos[0] == -pl[0]);
    CHECK(v.pos[1] == -pl[1]);
  }
}

TEST_CASE("dual curve of a fold has two vertices") {
  auto c = dual_curve(hv({"0", "2", "1", "0", "0", "1", "0", "0", "0", "0"}));
  REQUIRE(c.vertices.size() == 2);
  vertex_at(c, 0, 0);
  vertex_at(c, -1, 0);
  REQUIRE(c.edges.size() == 1);
  CHECK(c.edges[0].dir == LP{2, 0});  // facet (1,0)-(1,2) rotated
}

TEST_CASE("duality invariants on random curves") {
  Rng rng(601);
  for (int trial = 0; trial < 100; ++trial) {
    HeightVector u = random_heights(rng);
    auto c = dual_curve(u);
    for (const auto& e : c.edges) {
      // facet and edge direction are orthogonal, and the geometric edge is
      // parallel to the rotated facet
      int64_t dot = int64_t(e.dir.x) * (e.fb.x - e.fa.x) + int64_t(e.dir.y) * (e.fb.y - e.fa.y);
      CHECK(dot == 0);
      std::array<Rational, 2> vec = {c.vertices[e.b].pos[0] - c.vertices[e.a].pos[0],
                                     c.vertices[e.b].pos[1] - c.vertices[e.a].pos[1]};
      CHECK_NOTHROW(parallel_ratio(vec, e.dir));
      // interior facets never lie on the triangle's boundary
      bool on_boundary = (e.fa.y == 0 && e.fb.y == 0) || (e.fa.x == 0 && e.fb.x == 0) ||
                         (e.fa.x + e.fa.y == 3 && e.fb.x + e.fb.y == 3);
      CHECK(!on_boundary);
    }
    std::map<LP, int64_t> weight;
    for (const auto& r : c.rays) weight[r.dir] += r.weight;
    CHECK(weight[LP{0, 1}] == 3);
    CHECK(weight[LP{1, 0}] == 3);
    CHECK(weight[LP{-1, -1}] == 3);
  }
}

TEST_CASE("neighbors and linear form coefficients of the worked example") {
  auto s = regular_subdivision(example_heights());
  auto nb = interior_neighbors_cw(s);
  CHECK(nb == std::vector<LP>{{3, 0}, {0, 0}, {0, 1}, {1, 2}});
  auto K = cycle_coefficients(nb);
  CHECK(K == std::vector<Rational>{Rational(-1), Rational(-1), Rational(-1), Rational(-2)});
  // cl = sum (u11 - u_j) K_j
  auto u = example_heights();
  Rational cl(0);
  for (size_t j = 0; j < nb.size(); ++j) cl += (*u[0] - *u[cubic_index(nb[j])]) * K[j];
  CHECK(cl == Rational(5));

  HeightVector zero = zero_heights();
  CHECK_THROWS_AS(interior_neighbors_cw(regular_subdivision(zero)), std::invalid_argument);
}

TEST_CASE("cycle report of the worked example") {
  auto rep = cycle_report(example_heights());
  CHECK(rep.has_cycle);
  CHECK(!rep.generalized);
  CHECK(rep.length == Rational(5));
  REQUIRE(rep.cycle_edges.size() == 4);
  CHECK(rep.edge_lengths == std::vector<Rational>{Rational(1), Rational(1), Rational(1),
                                                  Rational(2)});
  // the four cycle edges are distinct
  std::set<size_t> uniq(rep.cycle_edges.begin(), rep.cycle_edges.end());
  CHECK(uniq.size() == 4);
}

TEST_CASE("cycle report without a cycle") {
  auto rep = cycle_report(zero_heights());
  CHECK(!rep.has_cycle);
  CHECK(!rep.generalized);
  CHECK(rep.length == Rational(0));
  CHECK(rep.cycle_edges.empty());
}

TEST_CASE("closed form matches the worked example and scales") {
  CHECK(cycle_length_closed_form(example_heights()) == Rational(5));
  HeightVector doubled = example_heights();
  for (auto& x : doubled) *x *= Rational(2);
  CHECK(cycle_length_closed_form(doubled) == Rational(10));
  CHECK_THROWS_AS(cycle_length_closed_form(zero_heights()), std::invalid_argument);

  auto terms = cycle_length_terms(example_heights());
  CHECK(terms.lambdas == std::vector<Rational>{Rational(1), Rational(1), Rational(1),
                                               Rational(2)});
}

TEST_CASE("closed form equals the geometric length") {
  Rng rng(602);
  for (int trial = 0; trial < 1000; ++trial) {
    HeightVector u = random_visible(rng);
    auto rep = cycle_report(u);
    REQUIRE(rep.has_cycle);
    auto terms = cycle_length_terms(u);
    CHECK(rep.length == terms.total);
    REQUIRE(rep.edge_lengths.size() == terms.lambdas.size());
    for (size_t j = 0; j < terms.lambdas.size(); ++j) {
      CHECK(rep.edge_lengths[j] == terms.lambdas[j]);
      CHECK(terms.lambdas[j] > Rational(0));
    }
  }
}

TEST_CASE("reversing the cycle orientation negates every term") {
  Rng rng(603);
  for (int trial = 0; trial < 50; ++trial) {
    HeightVector u = random_visible(rng);
    auto cw = cycle_length_terms(u, true);
    auto ccw = cycle_length_terms(u, false);
    CHECK(ccw.total == -cw.total);
    REQUIRE(ccw.lambdas.size() == cw.lambdas.size());
    size_t k = cw.lambdas.size();
    // reversed enumeration visits the same neighbors backwards
    for (size_t j = 0; j < k; ++j) {
      CHECK(ccw.neighbors[j] == cw.neighbors[k - 1 - j]);
      CHECK(ccw.lambdas[j] == -cw.lambdas[k - 1 - j]);
    }
  }
}

TEST_CASE("affine shifts translate the curve and keep lengths") {
  Rng rng(604);
  for (int trial = 0; trial < 50; ++trial) {
    HeightVector u = random_visible(rng);
    Rational a = rng.rational(), b = rng.rational(), g = rng.rational();
    HeightVector v = u;
    for (size_t i = 0; i < 10; ++i)
      *v[i] += a * Rational(kCubicPoints[i].x) + b * Rational(kCubicPoints[i].y) + g;
    auto cu = dual_curve(u), cv = dual_curve(v);
    REQUIRE(cu.vertices.size() == cv.vertices.size());
    for (size_t i = 0; i < cu.vertices.size(); ++i) {
      CHECK(cv.vertices[i].pos[0] == cu.vertices[i].pos[0] - a);
      CHECK(cv.vertices[i].pos[1] == cu.vertices[i].pos[1] - b);
    }
    CHECK(cycle_length_closed_form(v) == cycle_length_closed_form(u));
  }
}

TEST_CASE("positive homogeneity of the cycle length") {
  Rng rng(605);
  for (int trial = 0; trial < 50; ++trial) {
    HeightVector u = random_visible(rng);
    HeightVector v = u;
    Rational lam(3, 2);
    for (auto& x : v) *x *= lam;
    CHECK(cycle_length_closed_form(v) == lam * cycle_length_closed_form(u));
  }
}

TEST_CASE("cycle length is invariant under the six symmetries") {
  Rng rng(606);
  for (int trial = 0; trial < 100; ++trial) {
    HeightVector u = random_visible(rng);
    const Perm3& p = kS3[rng.below(6)];
    CHECK(cycle_length_closed_form(s3_apply(p, u)) == cycle_length_closed_form(u));
  }
}

TEST_CASE("generalized cycle length of folds") {
  auto fold = hv({"0", "2", "1", "0", "0", "1", "0", "0", "0", "0"});
  auto rep = cycle_report(fold);
  CHECK(!rep.has_cycle);
  CHECK(rep.generalized);
  CHECK(rep.length == Rational(2));
  REQUIRE(rep.edge_lengths.size() == 1);
  CHECK(rep.edge_lengths[0] == Rational(1, 2));
  CHECK(generalized_cycle_length(fold) == Rational(2));

  HeightVector tripled = fold;
  for (auto& x : tripled) *x *= Rational(3);
  CHECK(generalized_cycle_length(tripled) == Rational(6));

  // diagonal fold through the interior point
  auto diag = hv({"0", "1", "0", "0", "0", "1", "0", "1", "0", "1"});
  CHECK(generalized_cycle_length(diag) == Rational(4) * Rational(1, 2));

  CHECK_THROWS_AS(generalized_cycle_length(example_heights()), std::invalid_argument);
  CHECK_THROWS_AS(generalized_cycle_length(zero_heights()), std::invalid_argument);
}

TEST_CASE("cycle length tends to the generalized value at the cone wall") {
  auto at = [&](const Rational& eps) {
    auto u = hv({"0", "2", "1", "0", "0", "1", "0", "0", "0", "0"});
    u[0] = -eps;  // push the interior point onto the lower hull
    return cycle_length_closed_form(u);
  };
  Rational c1 = at(Rational(1, 8)), c2 = at(Rational(1, 16)), c3 = at(Rational(1, 32));
  // the three samples lie on one line in epsilon
  Rational slope = (c1 - c2) / (Rational(1, 8) - Rational(1, 16));
  Rational intercept = c2 - slope * Rational(1, 16);
  CHECK(c3 == intercept + slope * Rational(1, 32));
  CHECK(intercept == Rational(2));  // the generalized cycle length of the fold
}

TEST_CASE("ascii rendering is stable") {
  const std::string kZeroAscii =
      "            *            \n"
      "            *            \n"
      "            *            \n"
      "            *            \n"
      "            *            \n"
      "            *            \n"
      "           *o************\n"
      "         ***             \n"
      "       ***               \n"
      "     ***                 \n"
      "   ***                   \n"
      " ***                     \n"
      "**                       \n";
  CHECK(render_ascii(dual_curve(zero_heights())) == kZeroAscii);

  const std::string kExampleAscii =
      "            *            \n"
      "            *            \n"
      "            *            \n"
      "            *            \n"
      "            *            \n"
      "            o*           \n"
      "           ***o**********\n"
      "         *o***o*         \n"
      "       ***     *o********\n"
      "     ***        *        \n"
      "   ***         *o********\n"
      " ***         ***         \n"
      "**          **           \n";
  CHECK(render_ascii(dual_curve(example_heights())) == kExampleAscii);
}

TEST_CASE("svg rendering is stable and well formed") {
  const std::string kZeroSvg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"240\" height=\"240\" viewBox=\"0 0 240 "
      "240\">\n"
      "<rect width=\"240\" height=\"240\" fill=\"white\"/>\n"
      "<g stroke=\"black\" stroke-linecap=\"round\" fill=\"none\">\n"
      "<line x1=\"120.000\" y1=\"120.000\" x2=\"120.000\" y2=\"0.000\" stroke-width=\"3\"/>\n"
      "<line x1=\"120.000\" y1=\"120.000\" x2=\"0.000\" y2=\"240.000\" stroke-width=\"3\"/>\n"
      "<line x1=\"120.000\" y1=\"120.000\" x2=\"240.000\" y2=\"120.000\" stroke-width=\"3\"/>\n"
      "</g>\n"
      "<circle cx=\"120.000\" cy=\"120.000\" r=\"3\" fill=\"black\"/>\n"
      "</svg>\n";
  CHECK(render_svg(dual_curve(zero_heights())) == kZeroSvg);

  std::string ex = render_svg(dual_curve(example_heights()));
  CHECK(ex.rfind("<svg ", 0) == 0);
  CHECK(ex.find("</svg>\n") == ex.size() - 7);
  size_t lines = 0, circles = 0, pos = 0;
  while ((pos = ex.find("<line ", pos)) != std::string::npos) ++lines, ++pos;
  pos = 0;
  while ((pos = ex.find("<circle ", pos)) != std::string::npos) ++circles, ++pos;
  CHECK(lines == 12);  // six bounded edges and six rays
  CHECK(circles == 6);
}
