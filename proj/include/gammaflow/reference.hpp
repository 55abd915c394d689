#pragma once
/* Frozen reference data for the verification suites: hand-checked expansions
 * of small flow polynomials and the expected term counts. */

#include <map>
#include <string>

namespace gammaflow {

/* Text-form expansions (poly_from_text parseable) for selected orders. */
const std::map<int, std::string>& reference_expansions();

/* Expected term_count values for selected orders. */
const std::map<int, int>& reference_term_counts();

}
