#pragma once
/* Termwise operators driving the flow recursion. All act linearly; the
 * monomial rules are documented at the definitions. */

#include "gammaflow/poly.hpp"

namespace gammaflow {

/* Sum over positions of the monomial with that one part incremented by 1. */
Poly op_D1(const Poly& p);

/* Sum over positions with that one part incremented by 2. */
Poly op_D2(const Poly& p);

/* Pair rule: sum over unordered position pairs {i, j}, both parts up by 1.
 * Equals (D1^2 - D2) / 2. */
Poly op_L(const Poly& p);

/* Splitting rule: one part a >= 2 is replaced by the pair (1+l, 1+a-l),
 * weighted -binomial(a, l)/2 and summed over l in [1, a-1]; l and a-l give
 * the same pair, so all output coefficients stay integral. Throws
 * std::invalid_argument when a part equals 1. */
Poly op_H(const Poly& p);

/* Source term of order n >= 2:
 * -sum_{k=1}^{n-1} binomial(n, k) T_{1+k} T_{1+n-k} T_n. */
Poly source_An(int n);

}
