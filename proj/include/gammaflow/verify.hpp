#pragma once
/* Self-check battery over the computed polynomial family: golden expansions,
 * term counts, structural laws, the closed-form coefficient cross-check, and
 * the Gaussian error-derivative consistency identity. */

#include <string>
#include <vector>

#include "gammaflow/rn_table.hpp"

namespace gammaflow {

struct VerifyReport {
    int n_max = 0;
    int checks = 0;                  /* individual assertions evaluated */
    std::vector<std::string> failures;
    bool ok = true;

    std::string to_json() const;
    std::string summary() const;     /* "ok (NNN checks)" or a failure digest */
};

/* Runs every check available for polynomials up to R_{n_max}. Requires
 * n_max >= 3. Never throws on a mismatch; everything lands in the report. */
VerifyReport run_verification(int n_max, RnTable& table);

}
