#pragma once
/* Diagnostics on even-order cumulant sequences: nonvanishing of the evaluated
 * quadratic form a_{2m}, strict sign alternation, the damped-linear-term sign
 * rule, and plain even-order positivity. */

#include <string>
#include <vector>

#include "gammaflow/cumulants.hpp"
#include "gammaflow/rn_table.hpp"

namespace gammaflow {

/* a_n evaluated at the sequence via the closed pair map. When a table is
 * supplied, the value is instead extracted from the computed R_{n+1} and the
 * closed map is asserted equal. Requires n >= 4 and k populated through
 * order n - 1. */
Rational evaluate_an(const CumulantSeq& k, int n, RnTable* table = nullptr);

struct ConditionCheck {
    int index;       /* m for quadratic_nonzero / damped_linear, n for the others */
    Rational value;  /* the quantity whose sign or nonvanishing is judged */
    bool ok;
};

struct ConditionReport {
    int up_to = 0;
    /* a_{2m}(K_2..K_{2m-1}) != 0 for 3 <= m, 2m <= up_to */
    std::vector<ConditionCheck> quadratic_nonzero;
    bool quadratic_nonzero_holds = true;
    /* K_{2n} K_{2n+2} < 0 for 2n+2 <= up_to */
    std::vector<ConditionCheck> alternating_signs;
    bool alternating_signs_holds = true;
    /* K_{2m} a_{2m}(K_2..K_{2m-1}) < 0 for 3 <= m, 2m <= up_to */
    std::vector<ConditionCheck> damped_linear_term;
    bool damped_linear_term_holds = true;
    /* K_{2n} > 0 for 2n <= up_to */
    std::vector<ConditionCheck> even_positive;
    bool even_positive_holds = true;

    std::string to_json() const;
};

ConditionReport check_conditions(const CumulantSeq& k, int up_to, RnTable* table = nullptr);

}
