#pragma once
/* Bernoulli numbers, first-kind convention: B_1 = -1/2. */

#include "gammaflow/numeric.hpp"

namespace gammaflow {

/* B_n for n >= 0. Memoized; safe to call from several threads. */
Rational bernoulli(int n);

}
