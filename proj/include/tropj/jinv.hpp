#pragma once

#include <array>
#include <optional>
#include <string>

#include "tropj/polynomial.hpp"
#include "tropj/puiseux.hpp"
#include "tropj/subdivision.hpp"

namespace tropj {

using QPoly = SparsePolynomial<Rational>;

// Cubic with Puiseux series coefficients, one per entry of kCubicPoints.
using PuiseuxCubic = std::array<PuiseuxSeries, 10>;

// Shared variable set a11,a30,...,a03 in the canonical point order.
VarsPtr cubic_coefficient_vars();

// The invariants of the generic plane cubic sum a_ij x^i y^j z^(3-i-j).
// Gauge: on the family y^2 z + a xyz = x^3 + b x^2 z + z^3 the three
// polynomials specialize to (a^2+4b)^2, (a^2+4b)^6 and -(a^2+4b)^3-432.
struct CubicInvariants {
  QPoly S;      // Aronhold quartic invariant
  QPoly A;      // numerator of j, equals S^3
  QPoly Delta;  // discriminant, denominator of j
  std::string witness;  // record of the gauge checks this build passed
};

// Built once per process (a few seconds) and shared read-only afterwards.
// Persisted as JSON next to the executable (override the location with the
// TROPJ_CACHE environment variable); a loaded cache is re-verified against
// the gauge identities and rebuilt from scratch if anything fails.
const CubicInvariants& cubic_invariants();

QPoly aronhold_invariant();
QPoly j_numerator();
QPoly cubic_discriminant();

// min over the support of sum u_ij * e_ij.  Terms meeting an infinite height
// are skipped; throws invalid_argument on the zero polynomial, domain_error
// when every term is skipped.
Rational generic_valuation(const QPoly& p, const HeightVector& u);

// generic valuation of j = A/Delta: val_u(A) - val_u(Delta).
Rational generic_jval(const HeightVector& u);

// Valuation and leading coefficient of j(f) = A(f)/Delta(f).  Throws
// domain_error when Delta(f) is exactly zero (singular cubic) and
// IndeterminateValuation when the inputs' truncation hides the answer.
// A zero numerator yields valuation nullopt (j = 0 exactly).
ValuedScalar evaluate_j(const PuiseuxCubic& f);

// A linear form in the ten heights, one coefficient per point of A3.
using ConeForm = std::array<Rational, 10>;

// Exponent vector of the unique lowest-order monomial of Delta on the
// secondary cone of a triangulation, from the counting rules: a corner p
// gets 1 - l1 - l2 + sum of cell volumes at p (l1, l2 the lattice lengths
// of the two incident boundary edges), a boundary cell-vertex gets
// -l1 - l2 + sum of volumes, other boundary points get 0, and the interior
// point gets the sum of volumes of its cells.  Volumes are twice the
// Euclidean area.  Requires a triangulation covering the whole triangle.
ConeForm initial_discriminant_exponent(const MarkedSubdivision& T);

// Coefficients of the cycle length as a linear form on the same cone:
// -K_j at the j-th clockwise neighbor of (1,1) and sum K_j at (1,1).
// Requires (1,1) to be a cell vertex.
ConeForm cycle_length_form(const MarkedSubdivision& T);

struct ConeFormReport {
  ConeForm eta;  // discriminant exponent form
  ConeForm c;    // cycle length form
  bool pass;     // c == eta everywhere except c(1,1) = eta(1,1) - 12
};
ConeFormReport compare_cone_forms(const MarkedSubdivision& T);

// Checks -val_u(j) against the (generalized) cycle length.  Not applicable
// when (1,1) is neither a cell vertex nor interior to a shared facet; pass
// is vacuously true in that case.
struct JvalCycleReport {
  bool applicable = false;
  bool generalized = false;
  Rational jval;   // generic valuation of j at u
  Rational cycle;  // cycle length or generalized cycle length
  bool pass = false;
};
JvalCycleReport check_jval_matches_cycle(const HeightVector& u);

// True iff the minimum of u.omega over the support of A is attained at the
// pure power of a11.  Requires u inside the visibility cone.
bool check_numerator_argmin(const HeightVector& u);

// Substitutes x -> x + t^b into a fixed cubic whose coefficients are single
// Puiseux terms with the worked-example valuations, then reports how the
// tropicalization and both valuations of j respond.
struct ShiftReport {
  Rational b;
  PuiseuxCubic cubic;            // coefficients after the substitution
  HeightVector heights;          // their valuations
  MarkedSubdivision subdivision;
  bool has_cycle = false;
  bool generalized = false;
  Rational cycle_length;         // zero when neither case applies
  Rational jval_generic;
  ValuedScalar j_value;
  // initial form of Delta at the new heights
  QPoly delta_initial = QPoly(cubic_coefficient_vars());
  Rational delta_initial_value;  // that form evaluated at the leading coefficients
  Rational cancellation_factor;  // a01*a12 - a11*a02 on leading coefficients
};
ShiftReport shift_experiment(const Rational& b);

}  // namespace tropj
