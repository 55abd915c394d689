#pragma once
/* Canonical JSON and plain-text forms for integer polynomials. */

#include <string>

#include "gammaflow/poly.hpp"

namespace gammaflow {

/* {"n":<order>,"terms":[{"partition":[...],"coeff":"<decimal>"},...]}
 * Terms in canonical order, compact separators; byte stable across runs. */
std::string poly_to_json(const Poly& p, int order);

struct ParsedPoly {
    int order;
    Poly poly;
};

/* Strict parser: exactly the keys above, weakly decreasing partitions,
 * nonzero strict-decimal coefficients, no duplicate partitions. Term order
 * inside the array is not required to be canonical. Throws
 * std::invalid_argument on any violation. */
ParsedPoly poly_from_json(const std::string& text);

/* "-20*T2*T4^2 - 30*T3^2*T4 + ..." in canonical term order; variables inside
 * a monomial ascend; a unit coefficient drops the leading "1*". Zero prints
 * as "0". */
std::string poly_to_text(const Poly& p);

/* Inverse of poly_to_text, tolerant of extra spaces. */
Poly poly_from_text(const std::string& text);

}
