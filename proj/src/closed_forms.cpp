#include "gammaflow/closed_forms.hpp"

#include <json.hpp>

#include <stdexcept>

namespace gammaflow {

namespace {

[[noreturn]] void range_fail(const std::string& what) {
    throw std::invalid_argument(what);
}

/* Unordered pair {i, j} with i + j = n + 2 and 3 <= j <= i <= n - 1.
 * The generic coefficient is -2(n+1) binomial(n, j-1); an equal pair
 * appears once in the square expansion, so it carries half of that. */
BigInt pair_coeff(int n, int i, int j) {
    BigInt generic = BigInt(-2) * (n + 1) *
                     binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j - 1));
    if (i == j) return generic / 2;
    return generic;
}

}

LeadingForm leading_form(int n) {
    if (n < 4) range_fail("leading form defined for n >= 4");
    LeadingForm out;
    out.n = n;
    out.head_coeff = BigInt(-n) * (n + 1);
    for (int j = 3; 2 * j <= n + 2; ++j) {
        int i = n + 2 - j;
        if (i > n - 1 || i < j) continue;
        BigInt c = pair_coeff(n, i, j);
        if (c >= 0) throw std::logic_error("pair coefficient must be strictly negative");
        out.an_terms[{i, j}] = c;
    }
    return out;
}

ClosedCoeff closed_coeff(const Partition& alpha, int n) {
    ClosedCoeff out;
    if (n < 2) return out;
    /* pure T_2 tail of R_n */
    if (alpha.length() == n && alpha.max_part() == 2 && alpha.min_part() == 2) {
        out.covered = true;
        out.value = factorial(static_cast<unsigned long>(n - 1));
        if (n % 2 == 1) out.value = -out.value;
        out.rule = "pure-quadratic-tail";
        return out;
    }
    if (alpha.length() != 3) return out;
    const int f = n - 1;  /* R_n carries the form of order f */
    const auto& parts = alpha.parts();
    const int a1 = parts[0], a2 = parts[1], a3 = parts[2];
    if (a1 != f) return out;
    if (a2 == f && a3 == 2) {
        if (f < 3) return out;
        out.covered = true;
        out.value = BigInt(-f) * (f + 1);
        out.rule = "square-head";
        return out;
    }
    if (a2 + a3 != f + 2 || a3 < 3 || a2 > f - 1) return out;
    /* central pairs, valid from m = 4 on */
    if (f % 2 == 0 && a2 == f / 2 + 1 && a3 == f / 2 + 1 && f >= 8) {
        int m = f / 2;  /* pair {m+1, m+1} */
        out.covered = true;
        out.value = BigInt(-(2 * m + 1)) *
                    binomial(static_cast<unsigned long>(2 * m), static_cast<unsigned long>(m));
        out.rule = "central-pair-even-form";
        return out;
    }
    if (f % 2 == 1 && a2 == (f + 3) / 2 && a3 == (f + 1) / 2 && f >= 7) {
        int m = (f + 1) / 2;  /* pair {m+1, m} */
        out.covered = true;
        out.value = BigInt(-2 * m) *
                    binomial(static_cast<unsigned long>(2 * m), static_cast<unsigned long>(m));
        out.rule = "central-pair-odd-form";
        return out;
    }
    if (a3 == 3 && a2 == f - 1 && f >= 5) {
        out.covered = true;
        out.value = BigInt(-(f - 1)) * f * (f + 1);
        out.rule = "adjacent-pair";
        return out;
    }
    {
        int k = a3 - 1; /* pair {f+1-k, k+1} */
        if (f >= 8 && k >= 2 && k <= f / 2 - 1 && a2 == f + 1 - k) {
            out.covered = true;
            out.value = BigInt(-2) * (f + 1) *
                        binomial(static_cast<unsigned long>(f), static_cast<unsigned long>(k));
            out.rule = "binomial-pair";
            return out;
        }
    }
    return out;
}

Poly extract_ank(const Poly& r_next, int n, int k) {
    if (n < 2 || k < 0 || k > n - 2) range_fail("a_{n,k} defined for 0 <= k <= n-2");
    const int top = n - k;
    Poly out;
    for (const auto& [key, coeff] : r_next.terms()) {
        if (key.max_part() != top) continue;
        out.add_term(key.without_part(top), coeff);
    }
    return out;
}

std::map<std::pair<int, int>, BigInt> extract_an(const Poly& r_next, int n) {
    std::map<std::pair<int, int>, BigInt> out;
    for (const auto& [key, coeff] : r_next.terms()) {
        if (key.max_part() != n) continue;
        const auto& parts = key.parts();
        if (parts.size() == 3 && parts[0] == n && parts[1] == n && parts[2] == 2) continue;
        if (parts.size() != 3 || parts[1] > n - 1) {
            throw std::invalid_argument("unexpected top term " + key.to_string());
        }
        out[{parts[1], parts[2]}] = coeff;
    }
    return out;
}

TnDecomposition decompose_top(const Poly& r_next, int n) {
    TnDecomposition out;
    for (const auto& [key, coeff] : r_next.terms()) {
        int mult = 0;
        for (int p : key.parts()) {
            if (p == n) ++mult;
        }
        switch (mult) {
            case 0:
                out.rest.add_term(key, coeff);
                break;
            case 1:
                out.linear.add_term(key.without_part(n), coeff);
                break;
            case 2:
                out.head.add_term(key.without_part(n).without_part(n), coeff);
                break;
            default:
                throw std::invalid_argument("part multiplicity above 2 at the top order");
        }
    }
    return out;
}

AnMatrix an_matrix(int n) {
    if (n < 4) range_fail("quadratic form matrix defined for n >= 4");
    LeadingForm form = leading_form(n);
    const int d = n - 3;
    AnMatrix out;
    out.n = n;
    out.entries.assign(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d), Rational(0)));
    for (const auto& [pair, coeff] : form.an_terms) {
        const auto [i, j] = pair;
        std::size_t row = static_cast<std::size_t>(i - 3);
        std::size_t col = static_cast<std::size_t>(j - 3);
        if (row == col) {
            out.entries[row][col] = Rational(coeff);
        } else {
            Rational half = make_rational(coeff, BigInt(2));
            out.entries[row][col] = half;
            out.entries[col][row] = half;
        }
    }
    out.antidiagonal.reserve(static_cast<std::size_t>(d));
    out.nondegenerate = true;
    for (int i = 0; i < d; ++i) {
        const Rational& u = out.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(d - 1 - i)];
        out.antidiagonal.push_back(u);
        if (u == 0) out.nondegenerate = false;
    }
    return out;
}

namespace {

void expect_int(CrossValidationReport& report, int n, const std::string& check,
                const std::string& subject, const BigInt& expected, const BigInt& found) {
    ++report.checks;
    if (expected != found) {
        report.mismatches.push_back({n, check, subject,
                                     bigint_to_string(expected), bigint_to_string(found)});
    }
}

void expect_true(CrossValidationReport& report, int n, const std::string& check,
                 const std::string& subject, bool condition,
                 const std::string& expected, const std::string& found) {
    ++report.checks;
    if (!condition) {
        report.mismatches.push_back({n, check, subject, expected, found});
    }
}

}

CrossValidationReport cross_validate(int n_max, RnTable& table) {
    if (n_max < 4) range_fail("cross validation starts at n_max = 4");
    CrossValidationReport report;
    report.n_max = n_max;
    for (int n = 4; n <= n_max; ++n) {
        const Poly& r = table.compute_Rn(n + 1);
        Partition head(std::vector<int>{n, n, 2});
        expect_int(report, n, "head", head.to_string(), BigInt(-n) * (n + 1), r.coeff_of(head));

        LeadingForm form = leading_form(n);
        for (const auto& [pair, coeff] : form.an_terms) {
            Partition key(std::vector<int>{n, pair.first, pair.second});
            expect_int(report, n, "pair", key.to_string(), coeff, r.coeff_of(key));
        }
        try {
            auto found_pairs = extract_an(r, n);
            expect_true(report, n, "pair-count", "a_n support",
                        found_pairs.size() == form.an_terms.size(),
                        std::to_string(form.an_terms.size()) + " pairs",
                        std::to_string(found_pairs.size()) + " pairs");
        } catch (const std::invalid_argument& e) {
            expect_true(report, n, "pair-count", "a_n support", false, "length-3 pairs", e.what());
        }

        for (const auto& [key, coeff] : r.terms()) {
            ClosedCoeff cc = closed_coeff(key, n + 1);
            if (cc.covered) {
                expect_int(report, n, "covered:" + cc.rule, key.to_string(), cc.value, coeff);
            }
        }
        /* covered partitions with no term in R_{n+1} would be silent above */
        {
            Partition tail(std::vector<int>(static_cast<std::size_t>(n + 1), 2));
            ClosedCoeff cc = closed_coeff(tail, n + 1);
            expect_true(report, n, "tail-covered", tail.to_string(), cc.covered, "covered", "not covered");
            if (cc.covered) expect_int(report, n, "tail", tail.to_string(), cc.value, r.coeff_of(tail));
        }

        for (int k = 0; k <= n - 2; ++k) {
            Poly ank = extract_ank(r, n, k);
            expect_true(report, n, "ank-degree", "a_{" + std::to_string(n) + "," + std::to_string(k) + "}",
                        !ank.is_zero() && ank.max_length() == 2 + k,
                        "degree " + std::to_string(2 + k),
                        ank.is_zero() ? "zero" : ("degree " + std::to_string(ank.max_length())));
        }
        for (const auto& [key, coeff] : r.terms()) {
            (void)coeff;
            int k = n - key.max_part();
            expect_true(report, n, "length-bound", key.to_string(),
                        key.length() <= 3 + k,
                        "length <= " + std::to_string(3 + k),
                        "length " + std::to_string(key.length()));
        }
    }
    return report;
}

std::string CrossValidationReport::to_json() const {
    nlohmann::ordered_json root;
    root["n_max"] = n_max;
    root["checks"] = checks;
    root["ok"] = ok();
    root["mismatches"] = nlohmann::ordered_json::array();
    for (const auto& m : mismatches) {
        nlohmann::ordered_json jm;
        jm["n"] = m.n;
        jm["check"] = m.check;
        jm["subject"] = m.subject;
        jm["expected"] = m.expected;
        jm["found"] = m.found;
        root["mismatches"].push_back(std::move(jm));
    }
    return root.dump();
}

}
