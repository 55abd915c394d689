#include "gammaflow/mmse.hpp"

#include <json.hpp>

#include <map>

#include "gammaflow/closed_forms.hpp"
#include "gammaflow/poly.hpp"

namespace gammaflow {

DerivSeq::DerivSeq(int max_order) : max_order_(max_order) {
    if (max_order < 1) throw std::invalid_argument("derivative sequence needs max_order >= 1");
    values_.assign(static_cast<std::size_t>(max_order), Rational(0));
}

const Rational& DerivSeq::at(int order) const {
    if (order < 1 || order > max_order_) {
        throw std::out_of_range("derivative order " + std::to_string(order) + " out of range");
    }
    return values_[static_cast<std::size_t>(order - 1)];
}

void DerivSeq::set(int order, const Rational& value) {
    if (order < 1 || order > max_order_) {
        throw std::out_of_range("derivative order " + std::to_string(order) + " out of range");
    }
    values_[static_cast<std::size_t>(order - 1)] = value;
}

namespace {

std::map<int, Rational> assignment(const CumulantSeq& k, int top) {
    std::map<int, Rational> out;
    for (int v = 2; v <= top; ++v) out[v] = k.get(v);
    return out;
}

Rational eval_at(const Poly& p, const CumulantSeq& k, int top) {
    return constant_value(partial_eval(p, assignment(k, top)));
}

}

DerivSeq evaluate_derivs(const CumulantSeq& k, int n_max, RnTable& table) {
    if (n_max < 1) throw std::invalid_argument("need n_max >= 1");
    if (k.max_order() < n_max + 1) {
        throw std::invalid_argument("cumulants must reach order n_max + 1 = " +
                                    std::to_string(n_max + 1));
    }
    DerivSeq out(n_max);
    for (int n = 1; n <= n_max; ++n) {
        Rational top = k.get(n + 1);
        Rational value = -(top * top) - eval_at(table.compute_Rn(n + 1), k, n);
        out.set(n, value);
    }
    return out;
}

Rational mmse_to_MMSE_order_map(const Rational& s) {
    if (sgn(s) <= 0) throw std::invalid_argument("time change defined for s > 0");
    return Rational(1) / (Rational(2) * s);
}

RecoveryMode recovery_mode_from_string(const std::string& text) {
    if (text == "symmetric-star") return RecoveryMode::SymmetricStar;
    if (text == "positive") return RecoveryMode::Positive;
    if (text == "alternating") return RecoveryMode::Alternating;
    throw std::invalid_argument("unknown recovery mode \"" + text + "\"");
}

const char* to_string(RecoveryMode mode) {
    switch (mode) {
        case RecoveryMode::SymmetricStar: return "symmetric-star";
        case RecoveryMode::Positive: return "positive";
        case RecoveryMode::Alternating: return "alternating";
    }
    return "?";
}

RecoveryError::RecoveryError(RecoveryFailure kind_, int order_, const std::string& what_,
                             std::vector<TraceEntry> trace_)
    : std::runtime_error(what_), kind(kind_), order(order_), trace(std::move(trace_)) {}

std::string trace_to_json(const std::vector<TraceEntry>& trace) {
    nlohmann::ordered_json root = nlohmann::ordered_json::array();
    for (const auto& e : trace) {
        nlohmann::ordered_json je;
        je["order"] = e.order;
        je["equation_used"] = e.equation_used;
        je["abs_value"] = rational_to_string(e.abs_value);
        je["sign_rule"] = e.sign_rule;
        if (e.a_tilde) {
            je["a_tilde"] = rational_to_string(*e.a_tilde);
        } else {
            je["a_tilde"] = nullptr;
        }
        root.push_back(std::move(je));
    }
    return root.dump();
}

namespace {

/* Equation (j+1) specialized to the known cumulants below an even order j:
 * -d_j = K_{j+1}^2 + A s_j + a_tilde K_j + b_tilde, with A = -j(j+1) K_2. */
struct LinearStep {
    Rational A;
    Rational a_tilde;
    Rational b_tilde;
};

class Solver {
public:
    Solver(const DerivSeq& d, RecoveryMode mode, int n_max, RnTable& table)
        : d_(d), table_(table),
          state_{mode, CumulantSeq(n_max, "recovered", true), 2, {}},
          n_max_(n_max) {}

    RecoveryResult run() {
        solve_order2();
        if (!point_mass_) {
            for (int j = 3; j <= n_max_; ++j) {
                state_.order_cursor = j;
                if (j % 2 == 1) {
                    solve_odd(j);
                } else {
                    solve_even(j);
                }
            }
            check_trailing_equation();
        }
        return {state_.known, state_.trace};
    }

private:
    [[noreturn]] void fail(RecoveryFailure kind, int order, const std::string& message) {
        throw RecoveryError(kind, order, message, state_.trace);
    }

    void record(int order, std::string equation, Rational abs_value, std::string rule,
                std::optional<Rational> a_tilde) {
        state_.trace.push_back({order, std::move(equation), std::move(abs_value),
                                std::move(rule), std::move(a_tilde)});
    }

    /* s_j = -d_{j-1} - R_j(K_2..K_{j-1}): the square of K_j. */
    Rational square_value(int j) {
        return -d_.at(j - 1) - eval_at(table_.compute_Rn(j), state_.known, j - 1);
    }

    Rational checked_root(int j, const Rational& s) {
        if (sgn(s) < 0) {
            fail(RecoveryFailure::Inconsistent, j,
                 "equation " + std::to_string(j) + " forces a negative square");
        }
        auto root = exact_sqrt(s);
        if (!root) {
            fail(RecoveryFailure::Irrational, j,
                 "equation " + std::to_string(j) + " needs an irrational square root");
        }
        return *root;
    }

    LinearStep linear_data(int j, const CumulantSeq& known) {
        TnDecomposition split = decompose_top(table_.compute_Rn(j + 1), j);
        return {eval_at(split.head, known, j - 1),
                eval_at(split.linear, known, j - 1),
                eval_at(split.rest, known, j - 1)};
    }

    void solve_order2() {
        Rational s = -d_.at(1);
        Rational root = checked_root(2, s);
        if (s == 0) {
            point_mass_ = true;
            for (int m = 2; m <= n_max_; ++m) {
                if (d_.at(m) != 0) {
                    fail(RecoveryFailure::Inconsistent, m + 1,
                         "derivative data nonzero beyond a point mass");
                }
            }
            record(2, "eq2", Rational(0), "point-mass", std::nullopt);
            return;
        }
        state_.known.set(2, root);
        record(2, "eq2", root, "variance-positive", std::nullopt);
    }

    /* Equation n_max + 1 involves only recovered cumulants plus the square
     * of the first order beyond the range, so it still constrains the data:
     * the square must vanish at an odd order and be a rational square at an
     * even one. */
    void check_trailing_equation() {
        int j = n_max_ + 1;
        Rational s = square_value(j);
        if (j % 2 == 1) {
            if (s != 0) {
                fail(RecoveryFailure::Inconsistent, j,
                     "odd-order square must vanish for a centred symmetric recovery");
            }
            return;
        }
        checked_root(j, s);
    }

    void solve_odd(int j) {
        Rational s = square_value(j);
        if (s != 0) {
            fail(RecoveryFailure::Inconsistent, j,
                 "odd-order square must vanish for a centred symmetric recovery");
        }
        record(j, "eq" + std::to_string(j), Rational(0), "odd-zero", std::nullopt);
    }

    void solve_even(int j) {
        Rational s = square_value(j);
        if (pending_k6_ && j == 6) {
            /* committed during the order-4 pair filter */
            Rational k6 = *pending_k6_;
            if (k6 * k6 != s) {
                fail(RecoveryFailure::Inconsistent, 6,
                     "order-6 square disagrees with the pair filter");
            }
            state_.known.set(6, k6);
            Rational a6 = Rational(-140) * state_.known.get(4) * state_.known.get(4);
            record(6, "eq6,eq7", abs(k6), "base-pair-filter", a6);
            return;
        }
        Rational kabs = checked_root(j, s);
        switch (state_.mode) {
            case RecoveryMode::SymmetricStar:
                if (j == 4) {
                    solve_base4(s, kabs);
                } else if (j == 6 && state_.known.get(4) == 0) {
                    solve_base6_zero4(s, kabs);
                } else {
                    solve_generic_symmetric(j, s, kabs);
                }
                return;
            case RecoveryMode::Positive:
                solve_positive(j, s, kabs);
                return;
            case RecoveryMode::Alternating:
                solve_alternating(j, s, kabs);
                return;
        }
    }

    /* rhs of the linear sign equation: a_tilde * K_j = -d_j - A s_j - b_tilde
     * under K_{j+1} = 0. */
    Rational sign_rhs(int j, const Rational& s, const LinearStep& lin) {
        return -d_.at(j) - lin.A * s - lin.b_tilde;
    }

    void require_next_square_zero(int j, const Rational& residual) {
        if (residual != 0) {
            fail(RecoveryFailure::Inconsistent, j + 1,
                 "odd-order square must vanish for a centred symmetric recovery");
        }
    }

    void solve_generic_symmetric(int j, const Rational& s, const Rational& kabs) {
        LinearStep lin = linear_data(j, state_.known);
        if (lin.a_tilde == 0) {
            fail(RecoveryFailure::Ambiguous, j,
                 "evaluated quadratic form vanishes at order " + std::to_string(j) +
                 "; both signs remain admissible");
        }
        Rational rhs = sign_rhs(j, s, lin);
        Rational k = rhs / lin.a_tilde;
        if (k * k != s) {
            fail(RecoveryFailure::Inconsistent, j,
                 "sign equation is incompatible with the square at order " + std::to_string(j));
        }
        (void)kabs;
        state_.known.set(j, k);
        record(j, "eq" + std::to_string(j) + ",eq" + std::to_string(j + 1), abs(k),
               "linear-term", lin.a_tilde);
    }

    void solve_base4(const Rational& s, const Rational& kabs) {
        if (s == 0) {
            LinearStep lin = linear_data(4, state_.known);
            require_next_square_zero(4, sign_rhs(4, s, lin));
            record(4, "eq4", Rational(0), "zero-square", lin.a_tilde);
            return;
        }
        if (n_max_ < 5) {
            /* equation 5 is sign-free (its linear coefficient is -30 K_3^2 = 0),
             * so it can still refute the data before the sign stalls */
            LinearStep lin = linear_data(4, state_.known);
            require_next_square_zero(4, sign_rhs(4, s, lin));
            fail(RecoveryFailure::Ambiguous, 4,
                 "both signs of the order-4 cumulant fit the available data");
        }
        struct Candidate {
            Rational k4;
            Rational s6;
            std::optional<Rational> k6;
            bool viable = true;
        };
        std::vector<Candidate> viable;
        for (int e : {+1, -1}) {
            Candidate c;
            c.k4 = Rational(e) * kabs;
            CumulantSeq trial = state_.known;
            trial.set(4, c.k4);
            c.s6 = -d_.at(5) - eval_at(table_.compute_Rn(6), trial, 5);
            if (sgn(c.s6) < 0 || !exact_sqrt(c.s6)) continue;
            if (n_max_ >= 6) {
                LinearStep lin = linear_data6(trial);
                if (lin.a_tilde == 0) {
                    fail(RecoveryFailure::Ambiguous, 4,
                         "order-6 linear coefficient vanished during the pair filter");
                }
                Rational rhs = -d_.at(6) - lin.A * c.s6 - lin.b_tilde;
                Rational k6 = rhs / lin.a_tilde;
                if (k6 * k6 != c.s6) continue;
                c.k6 = k6;
            }
            viable.push_back(std::move(c));
        }
        if (viable.empty()) {
            fail(RecoveryFailure::Inconsistent, 6,
                 "no sign of the order-4 cumulant satisfies the next equations");
        }
        if (viable.size() > 1) {
            fail(RecoveryFailure::Ambiguous, 4,
                 "both signs of the order-4 cumulant fit the available data");
        }
        state_.known.set(4, viable[0].k4);
        pending_k6_ = viable[0].k6;
        record(4, n_max_ >= 6 ? "eq4,eq6,eq7" : "eq4,eq6", kabs, "base-pair-filter",
               std::nullopt);
    }

    /* linear_data for order 6 evaluated on a trial sequence */
    LinearStep linear_data6(const CumulantSeq& trial) {
        TnDecomposition split = decompose_top(table_.compute_Rn(7), 6);
        return {eval_at(split.head, trial, 5),
                eval_at(split.linear, trial, 5),
                eval_at(split.rest, trial, 5)};
    }

    void solve_base6_zero4(const Rational& s, const Rational& kabs) {
        if (s == 0) {
            LinearStep lin = linear_data(6, state_.known);
            require_next_square_zero(6, sign_rhs(6, s, lin));
            record(6, "eq6", Rational(0), "zero-square", lin.a_tilde);
            return;
        }
        if (n_max_ < 8) {
            /* with K_4 = 0 equation 7 is sign-free; refute before stalling */
            LinearStep lin = linear_data(6, state_.known);
            require_next_square_zero(6, sign_rhs(6, s, lin));
            fail(RecoveryFailure::Ambiguous, 6,
                 "order-6 sign cannot be fixed within the data range");
        }
        struct Candidate {
            Rational k6;
        };
        std::vector<Candidate> viable;
        for (int e : {+1, -1}) {
            Rational k6 = Rational(e) * kabs;
            CumulantSeq trial = state_.known;
            trial.set(6, k6);
            Rational s8 = -d_.at(7) - eval_at(table_.compute_Rn(8), trial, 7);
            if (sgn(s8) < 0 || !exact_sqrt(s8)) continue;
            /* equation 9 is sign-free in K_8 here: the linear coefficient is a
             * multiple of K_4 = 0, and the square term only needs s8 */
            TnDecomposition split = decompose_top(table_.compute_Rn(9), 8);
            Rational A = eval_at(split.head, trial, 7);
            Rational a8 = eval_at(split.linear, trial, 7);
            if (a8 != 0) {
                throw std::logic_error("order-8 linear coefficient must vanish when K_4 = 0");
            }
            Rational b8 = eval_at(split.rest, trial, 7);
            Rational residual = -d_.at(8) - A * s8 - b8;
            if (residual != 0) continue;
            viable.push_back({k6});
        }
        if (viable.empty()) {
            fail(RecoveryFailure::Inconsistent, 8,
                 "no sign of the order-6 cumulant satisfies the following equations");
        }
        if (viable.size() > 1) {
            fail(RecoveryFailure::Ambiguous, 6,
                 "both signs of the order-6 cumulant fit the available data");
        }
        state_.known.set(6, viable[0].k6);
        record(6, "eq6,eq8,eq9", kabs, "cube-equation", Rational(0));
    }

    void solve_positive(int j, const Rational& s, const Rational& kabs) {
        LinearStep lin = linear_data(j, state_.known);
        Rational rhs = sign_rhs(j, s, lin);
        if (s == 0) {
            if (lin.a_tilde == 0) {
                require_next_square_zero(j, rhs);
                fail(RecoveryFailure::Ambiguous, j,
                     "zero even cumulant with vanishing linear coefficient; uniqueness "
                     "is not certified under the positivity rule");
            }
            if (rhs != 0) {
                fail(RecoveryFailure::Inconsistent, j,
                     "sign equation is incompatible with a zero square at order " +
                     std::to_string(j));
            }
            record(j, "eq" + std::to_string(j) + ",eq" + std::to_string(j + 1), Rational(0),
                   "positive-root (hypothesis violation: zero even cumulant)", lin.a_tilde);
            return;
        }
        state_.known.set(j, kabs);
        require_next_square_zero(j, rhs - lin.a_tilde * kabs);
        /* what the rejected sign -|K_j| would do to the next square */
        Rational flip_square = rhs + lin.a_tilde * kabs;
        std::string rule = "positive-root";
        if (sgn(flip_square) < 0) {
            rule += " (flip forces a negative square)";
        } else if (flip_square != 0) {
            rule += " (flip breaks the odd-order vanishing)";
        } else {
            rule += " (linear term vanished; sign fixed by hypothesis)";
        }
        record(j, "eq" + std::to_string(j) + ",eq" + std::to_string(j + 1), kabs, rule,
               lin.a_tilde);
    }

    void solve_alternating(int j, const Rational& s, const Rational& kabs) {
        LinearStep lin = linear_data(j, state_.known);
        Rational rhs = sign_rhs(j, s, lin);
        int m = j / 2;
        Rational k = (m % 2 == 1) ? kabs : Rational(-kabs);
        state_.known.set(j, k);
        require_next_square_zero(j, rhs - lin.a_tilde * k);
        std::string rule = (m % 2 == 1) ? "alternation (positive slot)"
                                        : "alternation (negative slot)";
        if (s == 0) {
            rule += " (zero even cumulant)";
        } else if (j >= 6 && sgn(lin.a_tilde * k) >= 0) {
            rule += " (damping certificate violated)";
        }
        record(j, "eq" + std::to_string(j) + ",eq" + std::to_string(j + 1), kabs, rule,
               lin.a_tilde);
    }

    const DerivSeq& d_;
    RnTable& table_;
    RecoveryState state_;
    int n_max_;
    bool point_mass_ = false;
    std::optional<Rational> pending_k6_;
};

}

RecoveryResult recover_cumulants(const DerivSeq& d, RecoveryMode mode, int n_max,
                                 RnTable& table) {
    if (n_max < 2) throw std::invalid_argument("recovery needs n_max >= 2");
    if (d.max_order() < n_max) {
        throw std::invalid_argument("derivative data must reach order " + std::to_string(n_max));
    }
    Solver solver(d, mode, n_max, table);
    return solver.run();
}

}
