#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"
#include "tropj/puiseux.hpp"

using namespace tropj;

namespace {

Rational R(const std::string& s) { return Rational::parse(s); }

PuiseuxSeries S(std::initializer_list<std::pair<const char*, const char*>> ts,
                const char* trunc = nullptr) {
  std::vector<PuiseuxTerm> v;
  for (auto& [e, c] : ts) v.push_back({R(e), R(c)});
  return PuiseuxSeries(std::move(v), trunc ? std::optional<Rational>(R(trunc)) : std::nullopt);
}

PuiseuxSeries random_series(testutil::Rng& rng) {
  for (;;) {
    std::vector<PuiseuxTerm> ts;
    size_t n = rng.below(3) + 1;
    for (size_t i = 0; i < n; ++i)
      ts.push_back({Rational(rng.int_in(-2, 6), 2), rng.nonzero_rational(9, 3)});
    PuiseuxSeries s(std::move(ts));
    if (!s.is_exactly_zero()) return s;
  }
}

SparsePolynomial<PuiseuxSeries> random_series_poly(const VarsPtr& vars, testutil::Rng& rng) {
  for (;;) {
    SparsePolynomial<PuiseuxSeries> f(vars);
    for (int32_t i = 0; i <= 2; ++i)
      for (int32_t j = 0; j <= 2; ++j)
        if (rng.below(2)) f.add_term(ExponentVector{{i, j}}, random_series(rng));
    if (!f.is_zero()) return f;
  }
}

}  // namespace

TEST_CASE("normalization and basic queries") {
  PuiseuxSeries z;
  CHECK(z.is_exactly_zero());
  CHECK(z.is_exact());
  CHECK(z.str() == "0");
  auto vi = z.valuation_info();
  CHECK(!vi.valuation.has_value());
  CHECK(vi.leading.is_zero());

  // Unsorted input, duplicate exponents cancel.
  auto a = S({{"1", "2"}, {"0", "5"}, {"1", "-2"}});
  CHECK(a.terms().size() == 1);
  CHECK(a.terms().front().exp == R("0"));
  CHECK(a.terms().front().coef == R("5"));
  CHECK(a.is_exact());

  // Terms at or above the truncation order are dropped.
  auto b = S({{"5", "1"}, {"2", "7"}, {"3", "4"}}, "3");
  CHECK(b.terms().size() == 1);
  CHECK(b.terms().front().coef == R("7"));
  CHECK(*b.trunc() == R("3"));

  CHECK(PuiseuxSeries::term(R("2"), R("0")).is_exactly_zero());
  CHECK(PuiseuxSeries(R("-7/3")).str() == "-7/3");
  CHECK(S({{"0", "1"}, {"1/2", "-1"}, {"2", "3"}}, "40").str() == "1 - t^(1/2) + 3*t^2 + O(t^40)");
  CHECK(S({}, "5").str() == "O(t^5)");
  CHECK(S({{"-1", "1"}, {"1", "1"}}).str() == "t^(-1) + t");
}

TEST_CASE("valuation and leading coefficient") {
  auto a = S({{"-1", "4"}, {"0", "1"}});
  auto vi = a.valuation_info();
  CHECK(*vi.valuation == R("-1"));
  CHECK(vi.leading == R("4"));

  auto b = S({{"1/3", "2"}}, "10");
  vi = b.valuation_info();
  CHECK(*vi.valuation == R("1/3"));
  CHECK(vi.leading == R("2"));

  CHECK_THROWS_AS(S({}, "5").valuation_info(), IndeterminateValuation);
}

TEST_CASE("addition and cancellation") {
  auto a = S({{"1", "1"}, {"2", "1"}});
  auto b = S({{"1", "-1"}});
  auto c = a + b;
  CHECK(c == S({{"2", "1"}}));
  CHECK(c.is_exact());

  // Truncations combine by min.
  auto d = S({{"0", "1"}, {"1", "1"}}, "2") + S({{"0", "3"}}, "5");
  CHECK(d == S({{"0", "4"}, {"1", "1"}}, "2"));

  // Cancelling the only visible term leaves an indeterminate remainder.
  auto e = S({{"0", "1"}}, "2") + S({{"0", "-1"}});
  CHECK(e.terms().empty());
  CHECK(*e.trunc() == R("2"));
  CHECK_THROWS_AS(e.valuation_info(), IndeterminateValuation);

  CHECK(a - a == PuiseuxSeries());
}

TEST_CASE("multiplication and truncation propagation") {
  auto one_plus_t = S({{"0", "1"}, {"1", "1"}});
  auto one_minus_t = S({{"0", "1"}, {"1", "-1"}});
  CHECK(one_plus_t * one_minus_t == S({{"0", "1"}, {"2", "-1"}}));

  // Exact zero annihilates even truncated series.
  CHECK((PuiseuxSeries() * S({{"0", "1"}}, "3")).is_exactly_zero());

  // Product order: min over factors of (trunc of one) + (valuation bound of other).
  auto p = S({{"2", "1"}}, "5") * S({{"3", "4"}}, "7");
  CHECK(p == S({{"5", "4"}}, "8"));

  auto q = S({}, "4") * S({{"1", "2"}});
  CHECK(q.terms().empty());
  CHECK(*q.trunc() == R("5"));

  // (1 - t) * (sum of t^k below 40) = 1 + O(t^40).
  std::vector<PuiseuxTerm> geo;
  for (long k = 0; k < 40; ++k) geo.push_back({Rational(k), Rational(1)});
  PuiseuxSeries g(std::move(geo), R("40"));
  CHECK(one_minus_t * g == S({{"0", "1"}}, "40"));
}

TEST_CASE("powers") {
  auto p = S({{"0", "1"}, {"1", "1"}}).pow(5);
  CHECK(p == S({{"0", "1"}, {"1", "5"}, {"2", "10"}, {"3", "10"}, {"4", "5"}, {"5", "1"}}));
  CHECK(PuiseuxSeries::term(R("1/2"), R("1")).pow(2) == PuiseuxSeries::term(R("1"), R("1")));
  CHECK(S({{"3", "2"}}).pow(0) == PuiseuxSeries(R("1")));
  CHECK_THROWS_AS(PuiseuxSeries().pow(0), std::invalid_argument);
  CHECK(S({{"0", "1"}}, "3").pow(2) == S({{"0", "1"}}, "3"));
}

TEST_CASE("division by an exact monomial") {
  auto a = S({{"2", "4"}, {"3", "8"}});
  CHECK(a / PuiseuxSeries::term(R("2"), R("4")) == S({{"0", "1"}, {"1", "2"}}));

  auto b = S({{"2", "4"}}, "6") / PuiseuxSeries::term(R("1"), R("2"));
  CHECK(b == S({{"1", "2"}}, "5"));

  CHECK_THROWS_AS(a / S({{"0", "1"}, {"1", "1"}}), std::invalid_argument);
  CHECK_THROWS_AS(a / S({{"0", "1"}}, "9"), std::invalid_argument);
  CHECK_THROWS_AS(a / PuiseuxSeries(), std::invalid_argument);
}

TEST_CASE("weight and initial form over series coefficients") {
  auto vars = make_vars({"x", "y"});
  SparsePolynomial<PuiseuxSeries> f(vars);
  f.add_term(ExponentVector{{1, 0}}, S({{"2", "1"}}));
  f.add_term(ExponentVector{{0, 1}}, S({{"2", "1"}, {"4", "3"}}));
  f.add_term(ExponentVector{{1, 1}}, S({{"5", "2"}}));

  CHECK(weight(f, {R("0"), R("0")}) == R("2"));
  auto ini = initial_form(f, {R("0"), R("0")});
  CHECK(ini.term_count() == 2);
  CHECK(*ini.coefficient(ExponentVector{{1, 0}}) == R("1"));
  CHECK(*ini.coefficient(ExponentVector{{0, 1}}) == R("1"));

  CHECK(weight(f, {R("3"), R("0")}) == R("2"));
  ini = initial_form(f, {R("3"), R("0")});
  CHECK(ini.term_count() == 1);
  CHECK(*ini.coefficient(ExponentVector{{0, 1}}) == R("1"));

  // A coefficient of unknown valuation blocks the weight only when its
  // bound does not clear the known minimum.
  SparsePolynomial<PuiseuxSeries> g(vars);
  g.add_term(ExponentVector{{1, 0}}, S({}, "2"));
  g.add_term(ExponentVector{{0, 1}}, S({{"2", "1"}}));
  CHECK_THROWS_AS(weight(g, {R("0"), R("0")}), TruncationInsufficient);
  CHECK(weight(g, {R("5"), R("0")}) == R("2"));

  CHECK_THROWS_AS(weight(SparsePolynomial<PuiseuxSeries>(vars), {R("0"), R("0")}),
                  std::invalid_argument);
}

TEST_CASE("weight with heights on variables") {
  auto vars = make_vars({"x", "y", "z"});
  SparsePolynomial<Rational> f(vars);
  f.add_term(ExponentVector{{2, 0, 0}}, R("1"));
  f.add_term(ExponentVector{{0, 1, 0}}, R("5"));
  f.add_term(ExponentVector{{0, 0, 1}}, R("1"));

  std::vector<ExtRational> v = {R("1"), R("3"), std::nullopt};
  CHECK(*weight(f, v) == R("2"));
  auto ini = initial_form(f, v);
  CHECK(ini.term_count() == 1);
  CHECK(*ini.coefficient(ExponentVector{{2, 0, 0}}) == R("1"));

  // Every term infinite: weight is +infinity, initial form empty.
  SparsePolynomial<Rational> g(vars);
  g.add_term(ExponentVector{{0, 0, 2}}, R("1"));
  CHECK(!weight(g, v).has_value());
  CHECK(initial_form(g, v).is_zero());

  // Brute-force comparison on random data.
  testutil::Rng rng(401);
  for (int trial = 0; trial < 100; ++trial) {
    SparsePolynomial<Rational> h(vars);
    for (int i = 0; i < 6; ++i)
      h.add_term(ExponentVector{{static_cast<int32_t>(rng.below(3)),
                                 static_cast<int32_t>(rng.below(3)),
                                 static_cast<int32_t>(rng.below(3))}},
                 rng.rational());
    std::vector<ExtRational> u(3);
    for (auto& ui : u)
      if (rng.below(4) == 0)
        ui = std::nullopt;
      else
        ui = rng.rational(5, 3);
    ExtRational expect;
    for (auto& [ev, c] : h.terms()) {
      Rational s(0);
      bool inf = false;
      for (size_t i = 0; i < 3; ++i) {
        if (ev.e[i] == 0) continue;
        if (!u[i]) inf = true;
        else s += Rational(ev.e[i]) * *u[i];
      }
      if (!inf && (!expect || s < *expect)) expect = s;
    }
    CHECK(weight(h, u) == expect);
  }
}

TEST_CASE("initial form is multiplicative") {
  auto vars = make_vars({"x", "y"});
  testutil::Rng rng(402);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_series_poly(vars, rng);
    auto g = random_series_poly(vars, rng);
    std::vector<Rational> v = {rng.rational(6, 3), rng.rational(6, 3)};
    auto fg = poly_mul(f, g);
    REQUIRE(!fg.is_zero());
    CHECK(weight(fg, v) == weight(f, v) + weight(g, v));
    CHECK(initial_form(fg, v) == poly_mul(initial_form(f, v), initial_form(g, v)));
  }
}

TEST_CASE("evaluating rational polynomials at series points") {
  auto vars = make_vars({"x"});
  SparsePolynomial<Rational> p(vars);
  p.add_term(ExponentVector{{2}}, R("1"));
  p.add_term(ExponentVector{{0}}, R("-1"));
  auto at = poly_eval(p, std::vector<PuiseuxSeries>{S({{"0", "1"}, {"1", "1"}})});
  CHECK(at == S({{"1", "2"}, {"2", "1"}}));

  SparsePolynomial<Rational> l(vars, true);
  l.add_term(ExponentVector{{-1}}, R("3"));
  CHECK(poly_eval(l, std::vector<PuiseuxSeries>{PuiseuxSeries::term(R("2"), R("1"))}) ==
        PuiseuxSeries::term(R("-2"), R("3")));
}

TEST_CASE("shift substitution") {
  auto vars = make_vars({"x", "y"});
  // Rational check: (x+2)^2 y - 3(x+2).
  SparsePolynomial<Rational> f(vars);
  f.add_term(ExponentVector{{2, 1}}, R("1"));
  f.add_term(ExponentVector{{1, 0}}, R("-3"));
  auto sh = substitute_shift(f, 0, R("2"));
  SparsePolynomial<Rational> expect(vars);
  expect.add_term(ExponentVector{{2, 1}}, R("1"));
  expect.add_term(ExponentVector{{1, 1}}, R("4"));
  expect.add_term(ExponentVector{{0, 1}}, R("4"));
  expect.add_term(ExponentVector{{1, 0}}, R("-3"));
  expect.add_term(ExponentVector{{0, 0}}, R("-6"));
  CHECK(sh == expect);

  // Series check by evaluation: f(x+s, y) at (p, q) equals f(p+s, q).
  testutil::Rng rng(403);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = random_series_poly(vars, rng);
    auto s = random_series(rng);
    auto p = random_series(rng);
    auto q = random_series(rng);
    auto lhs = poly_eval(substitute_shift(g, 0, s), std::vector<PuiseuxSeries>{p, q});
    auto rhs = poly_eval(g, std::vector<PuiseuxSeries>{p + s, q});
    CHECK(lhs == rhs);
  }

  // Truncation flows through the binomial expansion.
  SparsePolynomial<PuiseuxSeries> h(vars);
  h.add_term(ExponentVector{{2, 0}}, PuiseuxSeries(R("1")));
  auto sh2 = substitute_shift(h, 0, S({{"1", "1"}}, "3"));
  CHECK(*sh2.coefficient(ExponentVector{{1, 0}}) == S({{"1", "2"}}, "3"));
  CHECK(*sh2.coefficient(ExponentVector{{0, 0}}) == S({{"2", "1"}}, "4"));
}
