#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropj/polynomial.hpp"
#include "tropj/rational.hpp"

namespace tropj {

// One term coef * t^exp of a series in the uniformizer t.
struct PuiseuxTerm {
  Rational exp;
  Rational coef;
  bool operator==(const PuiseuxTerm&) const = default;
};

// A truncated series with no visible terms: even the valuation is unknown.
struct IndeterminateValuation : std::runtime_error {
  IndeterminateValuation()
      : std::runtime_error("valuation indeterminate: no terms below the truncation order") {}
};

// A consumer needed more terms than a truncated series carries.
struct TruncationInsufficient : std::runtime_error {
  explicit TruncationInsufficient(const std::string& what) : std::runtime_error(what) {}
};

// Valuation and leading coefficient of a scalar; valuation nullopt encodes
// +infinity (the zero series, leading coefficient 0).
struct ValuedScalar {
  std::optional<Rational> valuation;
  Rational leading;
};

// Puiseux series with rational exponents, stored as its finitely many known
// terms plus an optional truncation order.  trunc == nullopt means the series
// is exactly the stored sum; otherwise terms of exponent >= *trunc are
// unknown.  Invariant: terms sorted by exponent, coefficients nonzero,
// exponents strictly below any truncation order.
class PuiseuxSeries {
 public:
  PuiseuxSeries() = default;  // exact zero
  explicit PuiseuxSeries(const Rational& c);
  PuiseuxSeries(std::vector<PuiseuxTerm> terms, std::optional<Rational> trunc = std::nullopt);

  static PuiseuxSeries term(const Rational& exp, const Rational& coef);

  const std::vector<PuiseuxTerm>& terms() const { return terms_; }
  const std::optional<Rational>& trunc() const { return trunc_; }
  bool is_exact() const { return !trunc_.has_value(); }
  bool is_exactly_zero() const { return terms_.empty() && !trunc_.has_value(); }

  // Throws IndeterminateValuation if no term is visible below a finite
  // truncation order.
  ValuedScalar valuation_info() const;

  PuiseuxSeries truncated_to(const Rational& order) const;

  PuiseuxSeries operator-() const;
  PuiseuxSeries operator+(const PuiseuxSeries& o) const;
  PuiseuxSeries operator-(const PuiseuxSeries& o) const;
  PuiseuxSeries operator*(const PuiseuxSeries& o) const;
  // Only exact single-term divisors are supported.
  PuiseuxSeries operator/(const PuiseuxSeries& o) const;
  bool operator==(const PuiseuxSeries& o) const = default;

  PuiseuxSeries pow(uint64_t n) const;

  std::string str() const;

 private:
  std::vector<PuiseuxTerm> terms_;
  std::optional<Rational> trunc_;

  void normalize();
  // Lower bound on the valuation; series must not be exactly zero.
  Rational val_lower_bound() const;
};

inline bool coeff_is_zero(const PuiseuxSeries& s) { return s.is_exactly_zero(); }
inline PuiseuxSeries embed_coefficient(const Rational& c, const PuiseuxSeries*) {
  return PuiseuxSeries(c);
}
inline const PuiseuxSeries& embed_coefficient(const PuiseuxSeries& c, const PuiseuxSeries*) {
  return c;
}

// Minimum of val(coeff) + v.omega over the support.  Throws
// TruncationInsufficient if a coefficient with unknown valuation could attain
// the minimum, invalid_argument on the zero polynomial.
Rational weight(const SparsePolynomial<PuiseuxSeries>& f, const std::vector<Rational>& v);

// Sum of lc(coeff) * x^omega over the terms attaining weight(f, v).
SparsePolynomial<Rational> initial_form(const SparsePolynomial<PuiseuxSeries>& f,
                                        const std::vector<Rational>& v);

// Same for a rational polynomial with a height per variable: minimum of
// sum v_i * e_i over the support.  Terms meeting an infinite height are
// skipped; nullopt (= +infinity) when nothing remains.
ExtRational weight(const SparsePolynomial<Rational>& f, const std::vector<ExtRational>& v);
SparsePolynomial<Rational> initial_form(const SparsePolynomial<Rational>& f,
                                        const std::vector<ExtRational>& v);

}  // namespace tropj
