#include "tropj/puiseux.hpp"

#include <algorithm>
#include <utility>

namespace tropj {

PuiseuxSeries::PuiseuxSeries(const Rational& c) {
  if (!c.is_zero()) terms_.push_back({Rational(0), c});
}

PuiseuxSeries::PuiseuxSeries(std::vector<PuiseuxTerm> terms, std::optional<Rational> trunc)
    : terms_(std::move(terms)), trunc_(std::move(trunc)) {
  normalize();
}

PuiseuxSeries PuiseuxSeries::term(const Rational& exp, const Rational& coef) {
  PuiseuxSeries s;
  if (!coef.is_zero()) s.terms_.push_back({exp, coef});
  return s;
}

void PuiseuxSeries::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const PuiseuxTerm& a, const PuiseuxTerm& b) { return a.exp < b.exp; });
  std::vector<PuiseuxTerm> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (trunc_ && !(t.exp < *trunc_)) break;  // sorted, so the rest are cut too
    if (!out.empty() && out.back().exp == t.exp)
      out.back().coef += t.coef;
    else
      out.push_back(t);
  }
  std::erase_if(out, [](const PuiseuxTerm& t) { return t.coef.is_zero(); });
  terms_ = std::move(out);
}

ValuedScalar PuiseuxSeries::valuation_info() const {
  if (!terms_.empty()) return {terms_.front().exp, terms_.front().coef};
  if (trunc_) throw IndeterminateValuation();
  return {std::nullopt, Rational(0)};
}

Rational PuiseuxSeries::val_lower_bound() const {
  if (!terms_.empty()) return terms_.front().exp;
  return *trunc_;
}

PuiseuxSeries PuiseuxSeries::truncated_to(const Rational& order) const {
  PuiseuxSeries r = *this;
  r.trunc_ = trunc_ ? std::min(*trunc_, order) : order;
  r.normalize();
  return r;
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  PuiseuxSeries r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

PuiseuxSeries PuiseuxSeries::operator+(const PuiseuxSeries& o) const {
  PuiseuxSeries r;
  r.terms_ = terms_;
  r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
  if (trunc_ && o.trunc_)
    r.trunc_ = std::min(*trunc_, *o.trunc_);
  else
    r.trunc_ = trunc_ ? trunc_ : o.trunc_;
  r.normalize();
  return r;
}

PuiseuxSeries PuiseuxSeries::operator-(const PuiseuxSeries& o) const { return *this + (-o); }

PuiseuxSeries PuiseuxSeries::operator*(const PuiseuxSeries& o) const {
  if (is_exactly_zero() || o.is_exactly_zero()) return PuiseuxSeries();
  PuiseuxSeries r;
  // Unknown tail of one factor times the lowest part of the other bounds
  // what the product can be trusted to.
  if (trunc_) r.trunc_ = *trunc_ + o.val_lower_bound();
  if (o.trunc_) {
    Rational cand = *o.trunc_ + val_lower_bound();
    r.trunc_ = r.trunc_ ? std::min(*r.trunc_, cand) : cand;
  }
  r.terms_.reserve(terms_.size() * o.terms_.size());
  for (auto& a : terms_)
    for (auto& b : o.terms_) r.terms_.push_back({a.exp + b.exp, a.coef * b.coef});
  r.normalize();
  return r;
}

PuiseuxSeries PuiseuxSeries::operator/(const PuiseuxSeries& o) const {
  if (!o.is_exact() || o.terms_.size() != 1)
    throw std::invalid_argument("series division requires an exact single-term divisor");
  const PuiseuxTerm& d = o.terms_.front();
  PuiseuxSeries r;
  if (trunc_) r.trunc_ = *trunc_ - d.exp;
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) r.terms_.push_back({t.exp - d.exp, t.coef / d.coef});
  return r;  // shift keeps order, nonzeroness and the truncation invariant
}

PuiseuxSeries PuiseuxSeries::pow(uint64_t n) const {
  if (n == 0) {
    if (is_exactly_zero()) throw std::invalid_argument("0^0");
    return PuiseuxSeries(Rational(1));
  }
  PuiseuxSeries base = *this, acc = *this;
  n -= 1;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return acc;
}

std::string PuiseuxSeries::str() const {
  auto wrap = [](const Rational& q) {
    std::string s = q.str();
    return (q.is_integer() && q.sign() >= 0) ? s : "(" + s + ")";
  };
  std::string s;
  for (auto& t : terms_) {
    Rational c = t.coef;
    if (s.empty()) {
      if (c.sign() < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    }
    if (t.exp.is_zero()) {
      s += c.str();
      continue;
    }
    if (!(c == Rational(1))) {
      s += c.str();
      s += "*";
    }
    s += "t";
    if (!(t.exp == Rational(1))) s += "^" + wrap(t.exp);
  }
  if (trunc_) {
    if (!s.empty()) s += " + ";
    s += "O(t^" + wrap(*trunc_) + ")";
  }
  return s.empty() ? "0" : s;
}

namespace {

Rational dot(const ExponentVector& ev, const std::vector<Rational>& v) {
  Rational s(0);
  for (size_t i = 0; i < v.size(); ++i)
    if (ev.e[i] != 0) s += Rational(ev.e[i]) * v[i];
  return s;
}

}  // namespace

Rational weight(const SparsePolynomial<PuiseuxSeries>& f, const std::vector<Rational>& v) {
  if (v.size() != f.vars()->size()) throw std::invalid_argument("weight: arity mismatch");
  if (f.is_zero()) throw std::invalid_argument("weight of the zero polynomial");
  std::optional<Rational> best;
  std::vector<Rational> bounds;  // lower bounds from coefficients of unknown valuation
  for (auto& [ev, c] : f.terms()) {
    Rational base = dot(ev, v);
    if (!c.terms().empty()) {
      Rational w = c.terms().front().exp + base;
      if (!best || w < *best) best = w;
    } else {
      bounds.push_back(*c.trunc() + base);
    }
  }
  for (auto& b : bounds)
    if (!best || !(b > *best))
      throw TruncationInsufficient("weight: a truncated coefficient may attain the minimum");
  return *best;
}

SparsePolynomial<Rational> initial_form(const SparsePolynomial<PuiseuxSeries>& f,
                                        const std::vector<Rational>& v) {
  Rational w = weight(f, v);
  SparsePolynomial<Rational> r(f.vars(), f.laurent());
  for (auto& [ev, c] : f.terms()) {
    if (c.terms().empty()) continue;  // weight() certified these stay above w
    if (c.terms().front().exp + dot(ev, v) == w) r.add_term(ev, c.terms().front().coef);
  }
  return r;
}

ExtRational weight(const SparsePolynomial<Rational>& f, const std::vector<ExtRational>& v) {
  if (v.size() != f.vars()->size()) throw std::invalid_argument("weight: arity mismatch");
  ExtRational best;
  for (auto& [ev, c] : f.terms()) {
    Rational s(0);
    bool inf = false;
    for (size_t i = 0; i < v.size() && !inf; ++i) {
      if (ev.e[i] == 0) continue;
      if (!v[i]) {
        if (ev.e[i] < 0) throw std::invalid_argument("weight: negative exponent at infinite height");
        inf = true;
      } else {
        s += Rational(ev.e[i]) * *v[i];
      }
    }
    if (inf) continue;
    if (!best || s < *best) best = s;
  }
  return best;
}

SparsePolynomial<Rational> initial_form(const SparsePolynomial<Rational>& f,
                                        const std::vector<ExtRational>& v) {
  ExtRational w = weight(f, v);
  SparsePolynomial<Rational> r(f.vars(), f.laurent());
  if (!w) return r;
  for (auto& [ev, c] : f.terms()) {
    Rational s(0);
    bool inf = false;
    for (size_t i = 0; i < v.size() && !inf; ++i) {
      if (ev.e[i] == 0) continue;
      if (!v[i])
        inf = true;
      else
        s += Rational(ev.e[i]) * *v[i];
    }
    if (!inf && s == *w) r.add_term(ev, c);
  }
  return r;
}

}  // namespace tropj
