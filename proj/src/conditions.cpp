#include "gammaflow/conditions.hpp"

#include <json.hpp>

#include <stdexcept>

#include "gammaflow/closed_forms.hpp"

namespace gammaflow {

Rational evaluate_an(const CumulantSeq& k, int n, RnTable* table) {
    if (n < 4) throw std::invalid_argument("quadratic form starts at n = 4");
    if (k.max_order() < n - 1) throw std::out_of_range("need cumulants through order n - 1");
    Rational closed(0);
    for (const auto& [pair, coeff] : leading_form(n).an_terms) {
        closed += Rational(coeff) * k.get(pair.first) * k.get(pair.second);
    }
    if (table == nullptr) return closed;
    std::map<int, Rational> assign;
    for (int v = 2; v <= n - 1; ++v) assign[v] = k.get(v);
    TnDecomposition split = decompose_top(table->compute_Rn(n + 1), n);
    Rational extracted = constant_value(partial_eval(split.linear, assign));
    if (extracted != closed) {
        throw std::logic_error("closed pair map disagrees with extraction at n = " + std::to_string(n));
    }
    return extracted;
}

ConditionReport check_conditions(const CumulantSeq& k, int up_to, RnTable* table) {
    if (up_to < 2 || k.max_order() < up_to) {
        throw std::out_of_range("sequence not populated through the requested order");
    }
    ConditionReport report;
    report.up_to = up_to;
    for (int m = 3; 2 * m <= up_to; ++m) {
        Rational a = evaluate_an(k, 2 * m, table);
        bool ok = a != 0;
        report.quadratic_nonzero.push_back({m, a, ok});
        if (!ok) report.quadratic_nonzero_holds = false;

        Rational damped = k.get(2 * m) * a;
        bool damped_ok = sgn(damped) < 0;
        report.damped_linear_term.push_back({m, damped, damped_ok});
        if (!damped_ok) report.damped_linear_term_holds = false;
    }
    for (int n = 1; 2 * n + 2 <= up_to; ++n) {
        Rational product = k.get(2 * n) * k.get(2 * n + 2);
        bool ok = sgn(product) < 0;
        report.alternating_signs.push_back({n, product, ok});
        if (!ok) report.alternating_signs_holds = false;
    }
    for (int n = 1; 2 * n <= up_to; ++n) {
        Rational value = k.get(2 * n);
        bool ok = sgn(value) > 0;
        report.even_positive.push_back({n, value, ok});
        if (!ok) report.even_positive_holds = false;
    }
    return report;
}

namespace {

nlohmann::ordered_json checks_json(const std::vector<ConditionCheck>& checks, bool holds) {
    nlohmann::ordered_json block;
    block["holds"] = holds;
    block["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json jc;
        jc["index"] = c.index;
        jc["value"] = rational_to_string(c.value);
        jc["ok"] = c.ok;
        block["checks"].push_back(std::move(jc));
    }
    return block;
}

}

std::string ConditionReport::to_json() const {
    nlohmann::ordered_json root;
    root["up_to"] = up_to;
    root["quadratic_nonzero"] = checks_json(quadratic_nonzero, quadratic_nonzero_holds);
    root["alternating_signs"] = checks_json(alternating_signs, alternating_signs_holds);
    root["damped_linear_term"] = checks_json(damped_linear_term, damped_linear_term_holds);
    root["even_positive"] = checks_json(even_positive, even_positive_holds);
    return root.dump();
}

}
