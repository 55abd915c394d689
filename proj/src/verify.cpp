#include "gammaflow/verify.hpp"

#include <json.hpp>

#include <sstream>

#include "gammaflow/closed_forms.hpp"
#include "gammaflow/mmse.hpp"
#include "gammaflow/poly_io.hpp"
#include "gammaflow/reference.hpp"

namespace gammaflow {

namespace {

void check(VerifyReport& report, bool pass, const std::string& what) {
    ++report.checks;
    if (!pass) {
        report.failures.push_back(what);
        report.ok = false;
    }
}

void check_structure(VerifyReport& report, const Poly& r, int n) {
    const std::string tag = "R" + std::to_string(n) + ": ";
    bool weights = true, ranges = true, lengths = true, signs = true, bounds = true;
    for (const auto& [key, coeff] : r.terms()) {
        if (key.weight() != 2 * n) weights = false;
        const auto& parts = key.parts();
        if (parts.front() > n - 1 || parts.back() < 2) ranges = false;
        int len = key.length();
        if (len < 3 || len > n) lengths = false;
        bool negative = sgn(coeff) < 0;
        if (negative != (len % 2 == 1)) signs = false;
        if (len > 3 + (n - parts.front())) bounds = false;
    }
    check(report, weights, tag + "every term must have weight " + std::to_string(2 * n));
    check(report, ranges, tag + "parts must lie in [2, n-1]");
    check(report, lengths, tag + "term lengths must lie in [3, n]");
    check(report, signs, tag + "coefficient sign must follow length parity");
    check(report, bounds, tag + "largest part n-k forces length <= 3+k");

    Partition tail(std::vector<int>(static_cast<std::size_t>(n), 2));
    BigInt expected = factorial(n - 1);
    if (n % 2 == 1) expected = -expected;
    check(report, r.coeff_of(tail) == expected,
          tag + "all-twos coefficient must be " + bigint_to_string(expected));
}

void check_gaussian(VerifyReport& report, const Rational& variance,
                    const std::string& label, int n_max, RnTable& table) {
    CumulantSeq k = cumulants_gaussian(variance, n_max);
    DerivSeq d = evaluate_derivs(k, n_max - 1, table);
    Rational power = variance * variance;  /* sigma^{2(n+1)} at n = 1 */
    bool match = true;
    for (int n = 1; n <= n_max - 1; ++n) {
        Rational expected = Rational(factorial(n)) * power;
        if (n % 2 == 1) expected = -expected;
        if (d.at(n) != expected) match = false;
        power *= variance;
    }
    check(report, match,
          "gaussian variance " + label + ": derivatives must equal (-1)^n n! sigma^(2n+2)");
}

}

std::string VerifyReport::to_json() const {
    nlohmann::ordered_json root;
    root["n_max"] = n_max;
    root["checks"] = checks;
    root["ok"] = ok;
    root["failures"] = failures;
    return root.dump();
}

std::string VerifyReport::summary() const {
    std::ostringstream out;
    if (ok) {
        out << "ok (" << checks << " checks, n <= " << n_max << ")";
    } else {
        out << failures.size() << " of " << checks << " checks failed; first: "
            << failures.front();
    }
    return out.str();
}

VerifyReport run_verification(int n_max, RnTable& table) {
    if (n_max < 3) throw std::invalid_argument("verification needs n_max >= 3");
    VerifyReport report;
    report.n_max = n_max;

    for (const auto& [n, text] : reference_expansions()) {
        if (n > n_max) continue;
        check(report, table.compute_Rn(n) == poly_from_text(text),
              "R" + std::to_string(n) + ": expansion must match the frozen reference");
    }
    for (const auto& [n, count] : reference_term_counts()) {
        if (n > n_max) continue;
        check(report, table.compute_Rn(n).term_count() == count,
              "R" + std::to_string(n) + ": term count must be " + std::to_string(count));
    }
    for (int n = 3; n <= n_max; ++n) {
        check_structure(report, table.compute_Rn(n), n);
    }
    if (n_max >= 5) {
        CrossValidationReport cross = cross_validate(n_max - 1, table);
        report.checks += static_cast<int>(cross.checks);
        for (const auto& m : cross.mismatches) {
            report.ok = false;
            report.failures.push_back("closed form n=" + std::to_string(m.n) + " " +
                                      m.check + " " + m.subject + ": expected " +
                                      m.expected + ", found " + m.found);
        }
    }
    check_gaussian(report, Rational(1), "1", n_max, table);
    check_gaussian(report, Rational(2), "2", n_max, table);
    check_gaussian(report, Rational(1, 3), "1/3", n_max, table);
    return report;
}

}
