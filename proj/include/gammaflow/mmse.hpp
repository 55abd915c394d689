#pragma once
/* Derivatives of the minimal estimation error at zero signal strength,
 * evaluated from a cumulant sequence, and the inverse problem: exact
 * recovery of the cumulants from those derivatives.
 *
 * The governing identity at order n is
 *
 *   -d_n = K_{n+1}^2 + R_{n+1}(K_2, ..., K_n),
 *
 * so equation (j) determines K_j^2 once K_2..K_{j-1} are known, and the
 * decomposition R_{j+1} = -j(j+1) T_2 T_j^2 + a_j T_j + b_j makes equation
 * (j+1) linear in K_j, which resolves the sign. */

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gammaflow/cumulants.hpp"
#include "gammaflow/rn_table.hpp"

namespace gammaflow {

/* d_n for 1 <= n <= max_order, populated contiguously. */
class DerivSeq {
public:
    explicit DerivSeq(int max_order);

    int max_order() const { return max_order_; }
    const Rational& at(int order) const;
    void set(int order, const Rational& value);

private:
    int max_order_;
    std::vector<Rational> values_;  /* index 0 holds order 1 */
};

/* d_n = -K_{n+1}^2 - R_{n+1}(K_2..K_n) for 1 <= n <= n_max.
 * Requires k populated through n_max + 1. */
DerivSeq evaluate_derivs(const CumulantSeq& k, int n_max, RnTable& table);

/* Time change between the two error-curve standardizations: s > 0 maps to
 * 1/(2s). Metadata helper only. */
Rational mmse_to_MMSE_order_map(const Rational& s);

enum class RecoveryMode { SymmetricStar, Positive, Alternating };

/* Accepts "symmetric-star", "positive", "alternating". */
RecoveryMode recovery_mode_from_string(const std::string& text);
const char* to_string(RecoveryMode mode);

struct TraceEntry {
    int order = 0;
    std::string equation_used;          /* e.g. "eq4", "eq6,eq7" */
    Rational abs_value;                 /* |K_order| */
    std::string sign_rule;              /* decision rule, plus any caveat */
    std::optional<Rational> a_tilde;    /* evaluated linear-term coefficient */
};

std::string trace_to_json(const std::vector<TraceEntry>& trace);

enum class RecoveryFailure { Ambiguous, Inconsistent, Irrational };

class RecoveryError : public std::runtime_error {
public:
    RecoveryError(RecoveryFailure kind, int order, const std::string& what,
                  std::vector<TraceEntry> trace);
    RecoveryFailure kind;
    int order;
    std::vector<TraceEntry> trace;  /* progress before the failure */
};

/* Solver state: the mode's sign rules, the cumulants pinned so far, the next
 * order to resolve, and the decision log. */
struct RecoveryState {
    RecoveryMode mode;
    CumulantSeq known;
    int order_cursor;
    std::vector<TraceEntry> trace;
};

struct RecoveryResult {
    CumulantSeq cumulants;
    std::vector<TraceEntry> trace;
};

/* Rebuilds K_2..K_n_max from d_1..d_n_max under the mode's sign rules.
 * Throws RecoveryError with kind Ambiguous when the data admits more than
 * one sequence under the mode, Inconsistent when no sequence fits, and
 * Irrational when a needed square root leaves the rationals. */
RecoveryResult recover_cumulants(const DerivSeq& d, RecoveryMode mode, int n_max,
                                 RnTable& table);

}
