/* Acceptance harness: runs the end-to-end contract checks and prints one
 * [PASS]/[FAIL] line per criterion. Exits nonzero when anything fails. */

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gammaflow/bernoulli.hpp"
#include "gammaflow/closed_forms.hpp"
#include "gammaflow/conditions.hpp"
#include "gammaflow/cumulants.hpp"
#include "gammaflow/mmse.hpp"
#include "gammaflow/operators.hpp"
#include "gammaflow/poly_io.hpp"
#include "gammaflow/reference.hpp"
#include "gammaflow/rn_table.hpp"

using namespace gammaflow;

namespace {

std::string g_note;

#define NEED(cond)                                                        \
    do {                                                                  \
        if (!(cond)) {                                                    \
            if (g_note.empty())                                           \
                g_note = std::string(#cond) + " failed at line " +        \
                         std::to_string(__LINE__);                        \
            return false;                                                 \
        }                                                                 \
    } while (0)

RnTable& table() {
    static RnTable t(std::nullopt, std::max(1u, std::thread::hardware_concurrency()));
    return t;
}

bool golden_expansions() {
    for (const auto& [n, text] : reference_expansions()) {
        NEED(table().compute_Rn(n) == poly_from_text(text));
    }
    return true;
}

bool term_count_ladder() {
    const std::map<int, int> expected = {{3, 1},  {4, 2},   {5, 4},   {6, 8},
                                         {7, 14}, {8, 24},  {9, 42},  {10, 69},
                                         {15, 665}, {20, 4555}};
    for (const auto& [n, count] : expected) {
        NEED(table().term_count(n) == count);
    }
    return true;
}

bool closed_coefficient_cross_check() {
    CrossValidationReport report = cross_validate(19, table());
    NEED(report.ok());
    NEED(report.checks > 0);
    /* the square-head rule reaches down to the first order with a head */
    NEED(table().compute_Rn(4).coeff_of(Partition({3, 3, 2})) == -12);
    struct Spot {
        int n, i, j;
        long value;
    };
    const std::vector<Spot> spots = {{4, 3, 3, -30},  {5, 4, 3, -120},
                                     {6, 4, 4, -140}, {6, 5, 3, -210},
                                     {7, 5, 4, -560}, {7, 6, 3, -336}};
    for (const Spot& s : spots) {
        LeadingForm form = leading_form(s.n);
        NEED(form.head_coeff == -s.n * (s.n + 1));
        NEED(form.an_terms.at({s.i, s.j}) == s.value);
    }
    return true;
}

bool structural_laws() {
    for (int n = 3; n <= 20; ++n) {
        const Poly& r = table().compute_Rn(n);
        NEED(!r.is_zero());
        for (const auto& [key, coeff] : r.terms()) {
            NEED(key.weight() == 2 * n);
            NEED(key.min_part() >= 2);
            NEED(key.max_part() <= n - 1);
            NEED(key.length() >= 3);
            NEED(key.length() <= n);
            NEED(key.length() <= 3 + (n - key.max_part()));
            NEED(sgn(coeff) == (key.length() % 2 == 0 ? 1 : -1));
        }
        BigInt tail = r.coeff_of(Partition(std::vector<int>(static_cast<std::size_t>(n), 2)));
        BigInt expected = factorial(static_cast<unsigned long>(n - 1));
        if (n % 2 == 1) expected = -expected;
        NEED(tail == expected);
    }
    /* the linear coefficient of T_{m-k} in R_{m+1} has degree exactly 2 + k */
    for (int n = 4; n <= 20; ++n) {
        const Poly& r = table().compute_Rn(n);
        int m = n - 1;
        for (int k = 0; k <= m - 2; ++k) {
            NEED(extract_ank(r, m, k).max_length() == 2 + k);
        }
    }
    return true;
}

bool gaussian_derivative_ladder() {
    for (const Rational& v : {Rational(1), Rational(2), Rational(1, 3)}) {
        CumulantSeq k = cumulants_gaussian(v, 20);
        DerivSeq d = evaluate_derivs(k, 19, table());
        Rational power = v * v;
        for (int n = 1; n <= 19; ++n) {
            Rational expected = Rational(factorial(static_cast<unsigned long>(n))) * power;
            if (n % 2 == 1) expected = -expected;
            NEED(d.at(n) == expected);
            power *= v;
        }
    }
    return true;
}

/* Independent oracle for the Bernoulli table (B_1 convention differs). */
Rational bernoulli_oracle(int n) {
    std::vector<Rational> row(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        row[static_cast<std::size_t>(m)] = Rational(1, m + 1);
        for (int j = m; j >= 1; --j) {
            row[static_cast<std::size_t>(j - 1)] =
                Rational(j) * (row[static_cast<std::size_t>(j - 1)] -
                               row[static_cast<std::size_t>(j)]);
        }
    }
    return row[0];
}

bool cumulant_toolkit() {
    for (int n = 0; n <= 30; ++n) {
        if (n == 1) continue;
        NEED(bernoulli(n) == bernoulli_oracle(n));
    }
    NEED(bernoulli(12) == Rational(-691, 2730));
    NEED(bernoulli(30) == make_rational(BigInt("8615841276005"), BigInt(14322)));

    CumulantSeq u = cumulants_uniform(10);
    NEED(u.at(2) == Rational(1, 3));
    NEED(u.at(4) == Rational(-2, 15));
    NEED(u.at(6) == Rational(16, 63));
    CumulantSeq r = cumulants_rademacher(10);
    NEED(r.at(2) == 1);
    NEED(r.at(4) == -2);
    NEED(r.at(6) == 16);
    NEED(r.at(8) == -272);
    NEED(r.at(10) == 7936);
    CumulantSeq l = cumulants_laplace(Rational(1), 10);
    NEED(l.at(2) == 2);
    NEED(l.at(4) == 12);
    NEED(l.at(6) == 240);

    std::mt19937 rng(77123u);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    for (int trial = 0; trial < 100; ++trial) {
        CumulantSeq k(12, "random", false);
        for (int o = 2; o <= 12; ++o) {
            k.set(o, make_rational(BigInt(num(rng)), BigInt(den(rng))));
        }
        CumulantSeq back = moments_to_cumulants(cumulants_to_moments(k));
        NEED(back.same_values(k));
    }

    CumulantSeq m = cumulants_discrete_symmetric({{Rational(2), Rational(1, 4)}}, 8);
    NEED(m.at(2) == 1);
    NEED(m.at(4) == 1);
    NEED(m.at(6) == -14);
    NEED(m.at(8) == 106);
    NEED(m.at(4) / factorial(4) == Rational(1, 24));
    NEED(m.at(6) / factorial(6) == Rational(-7, 360));
    NEED(m.at(8) / factorial(8) == Rational(53, 20160));
    return true;
}

bool sign_conditions() {
    ConditionReport u = check_conditions(cumulants_uniform(40), 40);
    NEED(u.alternating_signs_holds);
    NEED(u.quadratic_nonzero_holds);
    ConditionReport r = check_conditions(cumulants_rademacher(40), 40);
    NEED(r.alternating_signs_holds);
    NEED(r.quadratic_nonzero_holds);
    ConditionReport l = check_conditions(cumulants_laplace(Rational(1), 40), 40);
    NEED(l.even_positive_holds);
    ConditionReport m = check_conditions(
        cumulants_discrete_symmetric({{Rational(2), Rational(1, 4)}}, 40), 40);
    NEED(!m.alternating_signs_holds);
    return true;
}

bool roundtrip_at_20(const CumulantSeq& k, RecoveryMode mode) {
    DerivSeq d = evaluate_derivs(k, 20, table());
    RecoveryResult got = recover_cumulants(d, mode, 20, table());
    for (int o = 2; o <= 20; ++o) NEED(got.cumulants.at(o) == k.at(o));
    DerivSeq again = evaluate_derivs(got.cumulants, 19, table());
    for (int n = 1; n <= 19; ++n) NEED(again.at(n) == d.at(n));
    return true;
}

bool recovery_at_20() {
    NEED(roundtrip_at_20(cumulants_rademacher(21), RecoveryMode::Alternating));
    NEED(roundtrip_at_20(cumulants_uniform(21), RecoveryMode::Alternating));
    NEED(roundtrip_at_20(cumulants_laplace(Rational(1), 21), RecoveryMode::Positive));

    /* random three-atom laws; a draw whose data underdetermines a sign is
     * rerolled */
    std::mt19937 rng(5150u);
    std::uniform_int_distribution<int> xnum(1, 5);
    std::uniform_int_distribution<int> xden(1, 2);
    std::uniform_int_distribution<int> mass(1, 5);
    for (int attempt = 1; attempt <= 20; ++attempt) {
        std::vector<std::pair<Rational, Rational>> atoms;
        for (int j = 0; j < 3; ++j) {
            atoms.emplace_back(make_rational(BigInt(xnum(rng)), BigInt(xden(rng))),
                               make_rational(BigInt(mass(rng)), BigInt(16)));
        }
        CumulantSeq k = cumulants_discrete_symmetric(atoms, 21);
        try {
            return roundtrip_at_20(k, RecoveryMode::SymmetricStar);
        } catch (const RecoveryError& e) {
            if (e.kind != RecoveryFailure::Ambiguous) {
                g_note = "unexpected recovery failure at order " + std::to_string(e.order);
                return false;
            }
        }
    }
    g_note = "every random atom draw was ambiguous";
    return false;
}

bool pair_matrix_nondegeneracy() {
    for (int n = 5; n <= 20; ++n) {
        AnMatrix m = an_matrix(n);
        NEED(m.nondegenerate);
        NEED(!m.antidiagonal.empty());
        for (const Rational& u : m.antidiagonal) NEED(sgn(u) < 0);
    }
    return true;
}

struct MonomialGen {
    std::mt19937 rng{482193u};
    std::uniform_int_distribution<int> length{1, 6};
    std::uniform_int_distribution<int> part{2, 9};
    std::uniform_int_distribution<int> coeff{-9, 9};

    Partition next_key() {
        std::vector<int> parts(static_cast<std::size_t>(length(rng)));
        for (int& a : parts) a = part(rng);
        return Partition(parts);
    }

    Poly next() {
        Poly p;
        int c = coeff(rng);
        if (c == 0) c = 1;
        p.add_term(next_key(), BigInt(c));
        return p;
    }
};

bool operator_properties() {
    MonomialGen gen;
    for (int trial = 0; trial < 500; ++trial) {
        Poly p = gen.next();
        NEED(op_L(p) + op_L(p) == op_D1(op_D1(p)) - op_D2(p));
    }
    for (int trial = 0; trial < 500; ++trial) {
        Poly p = gen.next();
        int m = gen.part(gen.rng);
        NEED(op_L(p.times_var(m)) ==
             op_L(p).times_var(m) + op_D1(p).times_var(m + 1));
    }
    for (int trial = 0; trial < 500; ++trial) {
        Partition key = gen.next_key();
        Poly p;
        p.add_term(key, BigInt(1));
        Poly lp = op_L(p);
        for (const auto& [out, c] : lp.terms()) {
            NEED(out.weight() == key.weight() + 2);
            NEED(out.length() == key.length());
            NEED(out.max_part() >= key.max_part());
        }
        Poly hp = op_H(p);
        for (const auto& [out, c] : hp.terms()) {
            NEED(out.weight() == key.weight() + 2);
            NEED(out.length() == key.length() + 1);
            NEED(out.max_part() <= key.max_part());
        }
    }
    return true;
}

struct Criterion {
    const char* name;
    bool (*run)();
    double limit_seconds;  /* 0 means unbounded */
};

}

int main() {
    const std::vector<Criterion> criteria = {
        {"golden expansions through order 9", golden_expansions, 1.0},
        {"term count ladder through order 20", term_count_ladder, 60.0},
        {"closed coefficient cross-check through order 19",
         closed_coefficient_cross_check, 0.0},
        {"structural laws through order 20", structural_laws, 0.0},
        {"gaussian derivative ladder through order 19",
         gaussian_derivative_ladder, 0.0},
        {"cumulant toolkit", cumulant_toolkit, 0.0},
        {"sign conditions at order 40", sign_conditions, 0.0},
        {"cumulant recovery at order 20", recovery_at_20, 30.0},
        {"pair matrix nondegeneracy through order 20",
         pair_matrix_nondegeneracy, 0.0},
        {"operator property suite", operator_properties, 0.0},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        g_note.clear();
        bool ok = false;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            g_note = std::string("exception: ") + e.what();
        }
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        if (ok && c.limit_seconds > 0 && elapsed.count() > c.limit_seconds) {
            g_note = "exceeded " + std::to_string(c.limit_seconds) + "s budget";
            ok = false;
        }
        if (!ok) ++failures;
        std::printf("[%s] %zu. %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                    c.name, elapsed.count(), g_note.empty() ? "" : ": ",
                    g_note.c_str());
    }
    return failures == 0 ? 0 : 1;
}
