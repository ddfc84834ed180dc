#pragma once

#include <string>

#include "tropj/jinv.hpp"
#include "tropj/subdivision.hpp"
#include "tropj/tropcurve.hpp"

namespace tropj {

// Heights file: JSON object keyed "u11".."u03" (exactly the ten keys) or a
// ten-element array in the canonical point order; entries are rational
// strings "p/q" or "inf".  Infinite heights are rejected on the three
// corners.  Throws parse_error on malformed input.
HeightVector parse_heights_json(const std::string& text);
std::string heights_to_json(const HeightVector& u);

// Cubic file: JSON object mapping coefficient names "a11".."a03" to series
// literals.  A literal is a list of {"exp": "p/q", "coef": "p/q"} terms for
// an exact series, or {"terms": [...], "trunc": "p/q"} when only an initial
// segment is known.  Missing names are exact zeros; at least one coefficient
// must be nonzero.
PuiseuxCubic parse_cubic_json(const std::string& text);
std::string cubic_to_json(const PuiseuxCubic& f);

std::string subdivision_to_json(const MarkedSubdivision& s);
std::string curve_to_json(const TropicalCurve& c);

}  // namespace tropj
