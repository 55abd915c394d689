#pragma once
/* JSON forms for cumulant, moment, and error-derivative sequences, plus the
 * atom-list file accepted by the discrete symmetric generator. */

#include <string>
#include <utility>
#include <vector>

#include "gammaflow/cumulants.hpp"
#include "gammaflow/mmse.hpp"

namespace gammaflow {

/* {"kind":"cumulants","max_order":N,"values":{"2":"...","3":"...",...}}
 * Every order up to N is present, zeros included; values are exact rational
 * strings. Moments and derivatives use kinds "moments" and "mmse-derivs"
 * and start at order 1. */
std::string cumulants_to_json(const CumulantSeq& k);
std::string moments_to_json(const MomentSeq& m);
std::string derivs_to_json(const DerivSeq& d);

/* Strict parsers for the shapes above: exactly the three keys, a contiguous
 * value table, nothing extra. Throw std::invalid_argument on any violation.
 * A loaded cumulant sequence carries provenance "from-file" and makes no
 * symmetry claim. */
CumulantSeq cumulants_from_json(const std::string& text);
MomentSeq moments_from_json(const std::string& text);
DerivSeq derivs_from_json(const std::string& text);

/* {"points":[{"x":"3/2","p":"1/4"},...]} as consumed by
 * cumulants_discrete_symmetric. */
std::vector<std::pair<Rational, Rational>> atoms_from_json(const std::string& text);

}
