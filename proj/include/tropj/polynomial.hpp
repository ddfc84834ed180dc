#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "tropj/rational.hpp"

namespace tropj {

// Ordered set of variable names shared by the polynomials built over it.
struct VariableSet {
  std::vector<std::string> names;
  size_t size() const { return names.size(); }
  int index_of(const std::string& n) const;
  bool operator==(const VariableSet& o) const { return names == o.names; }
};

using VarsPtr = std::shared_ptr<const VariableSet>;

inline VarsPtr make_vars(std::vector<std::string> names) {
  return std::make_shared<const VariableSet>(VariableSet{std::move(names)});
}

// One exponent per variable of the owning set.
struct ExponentVector {
  std::vector<int32_t> e;
  int64_t total_degree() const {
    int64_t d = 0;
    for (int32_t x : e) d += x;
    return d;
  }
  bool operator==(const ExponentVector& o) const { return e == o.e; }
};

struct EvHash {
  size_t operator()(const ExponentVector& v) const {
    uint64_t h = 1469598103934665603ull;
    for (int32_t x : v.e) {
      h ^= static_cast<uint64_t>(static_cast<uint32_t>(x));
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

// Graded lexicographic: lower total degree first, ties broken by the
// exponent sequence.
inline bool grlex_less(const ExponentVector& a, const ExponentVector& b) {
  int64_t da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return a.e < b.e;
}

inline bool coeff_is_zero(const Rational& r) { return r.is_zero(); }
inline Rational embed_coefficient(const Rational& c, const Rational*) { return c; }

// Sparse multivariate polynomial; C is Rational or PuiseuxSeries.
// No zero coefficients are stored.  Negative exponents are rejected unless
// the Laurent flag is set.
template <class C>
class SparsePolynomial {
 public:
  using TermMap = std::unordered_map<ExponentVector, C, EvHash>;

  explicit SparsePolynomial(VarsPtr vars, bool laurent = false)
      : vars_(std::move(vars)), laurent_(laurent) {}

  const VarsPtr& vars() const { return vars_; }
  bool laurent() const { return laurent_; }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const ExponentVector& ev, const C& c) {
    if (ev.e.size() != vars_->size()) throw std::invalid_argument("exponent arity mismatch");
    if (!laurent_)
      for (int32_t x : ev.e)
        if (x < 0) throw std::invalid_argument("negative exponent without Laurent flag");
    if (coeff_is_zero(c)) return;
    auto it = terms_.find(ev);
    if (it == terms_.end()) {
      terms_.emplace(ev, c);
    } else {
      it->second = it->second + c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  const C* coefficient(const ExponentVector& ev) const {
    auto it = terms_.find(ev);
    return it == terms_.end() ? nullptr : &it->second;
  }

  int64_t total_degree() const {
    int64_t d = 0;
    for (auto& [ev, c] : terms_) d = std::max(d, ev.total_degree());
    return d;
  }

  bool operator==(const SparsePolynomial& o) const {
    return *vars_ == *o.vars_ && terms_ == o.terms_;
  }

 private:
  VarsPtr vars_;
  bool laurent_;
  TermMap terms_;
};

template <class C>
void check_same_vars(const SparsePolynomial<C>& a, const SparsePolynomial<C>& b) {
  if (!(*a.vars() == *b.vars())) throw std::invalid_argument("variable set mismatch");
}

template <class C>
SparsePolynomial<C> poly_zero(const VarsPtr& vars, bool laurent = false) {
  return SparsePolynomial<C>(vars, laurent);
}

template <class C>
SparsePolynomial<C> poly_constant(const VarsPtr& vars, const C& c) {
  SparsePolynomial<C> p(vars);
  p.add_term(ExponentVector{std::vector<int32_t>(vars->size(), 0)}, c);
  return p;
}

template <class C>
SparsePolynomial<C> poly_monomial(const VarsPtr& vars, const ExponentVector& ev, const C& c,
                                  bool laurent = false) {
  SparsePolynomial<C> p(vars, laurent);
  p.add_term(ev, c);
  return p;
}

template <class C>
SparsePolynomial<C> poly_variable(const VarsPtr& vars, int i, const C& one) {
  ExponentVector ev{std::vector<int32_t>(vars->size(), 0)};
  ev.e[i] = 1;
  return poly_monomial(vars, ev, one);
}

template <class C>
SparsePolynomial<C> poly_add(const SparsePolynomial<C>& a, const SparsePolynomial<C>& b) {
  check_same_vars(a, b);
  SparsePolynomial<C> r(a.vars(), a.laurent() || b.laurent());
  for (auto& [ev, c] : a.terms()) r.add_term(ev, c);
  for (auto& [ev, c] : b.terms()) r.add_term(ev, c);
  return r;
}

template <class C>
SparsePolynomial<C> poly_neg(const SparsePolynomial<C>& a) {
  SparsePolynomial<C> r(a.vars(), a.laurent());
  for (auto& [ev, c] : a.terms()) r.add_term(ev, -c);
  return r;
}

template <class C>
SparsePolynomial<C> poly_sub(const SparsePolynomial<C>& a, const SparsePolynomial<C>& b) {
  return poly_add(a, poly_neg(b));
}

template <class C>
SparsePolynomial<C> poly_scale(const C& c, const SparsePolynomial<C>& a) {
  SparsePolynomial<C> r(a.vars(), a.laurent());
  if (coeff_is_zero(c)) return r;
  for (auto& [ev, k] : a.terms()) r.add_term(ev, c * k);
  return r;
}

template <class C>
SparsePolynomial<C> poly_mul(const SparsePolynomial<C>& a, const SparsePolynomial<C>& b) {
  check_same_vars(a, b);
  SparsePolynomial<C> r(a.vars(), a.laurent() || b.laurent());
  ExponentVector ev{std::vector<int32_t>(a.vars()->size(), 0)};
  for (auto& [ea, ca] : a.terms())
    for (auto& [eb, cb] : b.terms()) {
      for (size_t i = 0; i < ev.e.size(); ++i) ev.e[i] = ea.e[i] + eb.e[i];
      r.add_term(ev, ca * cb);
    }
  return r;
}

template <class C>
SparsePolynomial<C> operator+(const SparsePolynomial<C>& a, const SparsePolynomial<C>& b) {
  return poly_add(a, b);
}
template <class C>
SparsePolynomial<C> operator-(const SparsePolynomial<C>& a, const SparsePolynomial<C>& b) {
  return poly_sub(a, b);
}
template <class C>
SparsePolynomial<C> operator-(const SparsePolynomial<C>& a) {
  return poly_neg(a);
}
template <class C>
SparsePolynomial<C> operator*(const SparsePolynomial<C>& a, const SparsePolynomial<C>& b) {
  return poly_mul(a, b);
}

template <class C>
SparsePolynomial<C> poly_pow(const SparsePolynomial<C>& a, uint64_t n) {
  if (n == 0) {
    if (a.is_zero()) throw std::invalid_argument("0^0");
    C one = embed_coefficient(Rational(1), static_cast<const C*>(nullptr));
    return poly_constant(a.vars(), one);
  }
  SparsePolynomial<C> base = a, acc = a;
  n -= 1;
  while (n > 0) {
    if (n & 1) acc = poly_mul(acc, base);
    n >>= 1;
    if (n > 0) base = poly_mul(base, base);
  }
  return acc;
}

template <class C>
SparsePolynomial<C> derivative(const SparsePolynomial<C>& a, int var) {
  SparsePolynomial<C> r(a.vars(), a.laurent());
  for (auto& [ev, c] : a.terms()) {
    if (ev.e[var] == 0) continue;
    ExponentVector d = ev;
    d.e[var] -= 1;
    r.add_term(d, c * C(ev.e[var]));
  }
  return r;
}

// Support sorted in descending graded lexicographic order (leading term first).
template <class C>
std::vector<ExponentVector> support(const SparsePolynomial<C>& p) {
  std::vector<ExponentVector> s;
  s.reserve(p.term_count());
  for (auto& [ev, c] : p.terms()) s.push_back(ev);
  std::sort(s.begin(), s.end(), [](const ExponentVector& a, const ExponentVector& b) {
    return grlex_less(b, a);
  });
  return s;
}

// Evaluation into a ring V (Rational or PuiseuxSeries): assignment gives one
// V per variable.  Negative exponents require division in V.
template <class V, class C>
V poly_eval(const SparsePolynomial<C>& p, const std::vector<V>& assignment) {
  if (assignment.size() != p.vars()->size())
    throw std::invalid_argument("assignment arity mismatch");
  // Power tables, filled on demand.
  std::vector<std::vector<V>> pw(assignment.size());
  auto power = [&](size_t i, int32_t e) -> const V& {
    auto& t = pw[i];
    if (t.empty()) t.push_back(assignment[i]);
    while (static_cast<int32_t>(t.size()) < e) t.push_back(t.back() * assignment[i]);
    return t[e - 1];
  };
  bool have = false;
  V acc = V();
  for (auto& [ev, c] : p.terms()) {
    V m = embed_coefficient(c, static_cast<const V*>(nullptr));
    for (size_t i = 0; i < ev.e.size(); ++i) {
      if (ev.e[i] > 0)
        m = m * power(i, ev.e[i]);
      else if (ev.e[i] < 0)
        m = m / power(i, -ev.e[i]);
    }
    if (have)
      acc = acc + m;
    else {
      acc = m;
      have = true;
    }
  }
  if (!have) return embed_coefficient(Rational(0), static_cast<const V*>(nullptr));
  return acc;
}

// Substitute x_var -> x_var + s for a scalar s, expanding binomially.
template <class C>
SparsePolynomial<C> substitute_shift(const SparsePolynomial<C>& f, size_t var, const C& s) {
  if (var >= f.vars()->size()) throw std::invalid_argument("substitute_shift: variable out of range");
  SparsePolynomial<C> r(f.vars(), f.laurent());
  std::vector<C> spow{embed_coefficient(Rational(1), static_cast<const C*>(nullptr))};
  auto sp = [&](int32_t k) -> const C& {
    while (static_cast<int32_t>(spow.size()) <= k) spow.push_back(spow.back() * s);
    return spow[k];
  };
  for (auto& [ev, c] : f.terms()) {
    int32_t n = ev.e[var];
    if (n < 0) throw std::invalid_argument("substitute_shift: negative exponent");
    ExponentVector e2 = ev;
    Rational binom(1);  // C(n, k), updated as k descends from n
    for (int32_t k = n; k >= 0; --k) {
      e2.e[var] = k;
      r.add_term(e2, c * sp(n - k) * embed_coefficient(binom, static_cast<const C*>(nullptr)));
      if (k > 0) binom = binom * Rational(k) / Rational(n - k + 1);
    }
  }
  return r;
}

// Vertices of the convex hull of a point set in Z^d, sorted grlex ascending.
std::vector<ExponentVector> hull_vertices(const std::vector<ExponentVector>& pts);

template <class C>
std::vector<ExponentVector> newton_vertices(const SparsePolynomial<C>& p) {
  std::vector<ExponentVector> s;
  s.reserve(p.term_count());
  for (auto& [ev, c] : p.terms()) s.push_back(ev);
  return hull_vertices(s);
}

// Determinant by memoized Laplace expansion over column subsets.  Division
// free, so it works over any of the coefficient rings used here.
template <class R>
R det_fraction_free(const std::vector<std::vector<R>>& m) {
  size_t n = m.size();
  if (n == 0 || n > 25) throw std::invalid_argument("bad matrix size");
  for (auto& row : m)
    if (row.size() != n) throw std::invalid_argument("matrix not square");
  R zero = m[0][0] - m[0][0];
  std::unordered_map<uint32_t, R> cur;
  for (size_t j = 0; j < n; ++j)
    if (!(m[0][j] == zero)) cur.emplace(1u << j, m[0][j]);
  for (size_t k = 1; k < n; ++k) {
    std::unordered_map<uint32_t, R> next;
    for (auto& [mask, minor] : cur) {
      for (size_t j = 0; j < n; ++j) {
        uint32_t bit = 1u << j;
        if (mask & bit) continue;
        if (m[k][j] == zero) continue;
        R contrib = m[k][j] * minor;
        // Parity of inversions added: previously chosen columns above j.
        bool negate = __builtin_popcount(mask & ~(bit | (bit - 1))) & 1;
        if (negate) contrib = zero - contrib;
        auto [it, fresh] = next.emplace(mask | bit, contrib);
        if (!fresh) {
          it->second = it->second + contrib;
          if (it->second == zero) next.erase(it);
        }
      }
    }
    cur = std::move(next);
  }
  uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  auto it = cur.find(full);
  return it == cur.end() ? zero : it->second;
}

// Canonical text form, leading term first; used for display and hashing.
std::string to_string(const SparsePolynomial<Rational>& p);

}  // namespace tropj
