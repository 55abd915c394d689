#include "gammaflow/poly.hpp"

namespace gammaflow {

namespace {

template <typename Coeff>
RatPoly eval_impl(const BasicPoly<Coeff>& p, const std::map<int, Rational>& assign) {
    for (const auto& [var, value] : assign) {
        (void)value;
        if (var < 2) throw std::invalid_argument("assignment keys must be >= 2");
    }
    RatPoly out;
    for (const auto& [key, coeff] : p.terms()) {
        Rational c(coeff);
        std::vector<int> remaining;
        for (int part : key.parts()) {
            auto it = assign.find(part);
            if (it == assign.end()) {
                remaining.push_back(part);
            } else {
                c *= it->second;
            }
        }
        if (c != 0) out.add_term(Partition(std::move(remaining)), c);
    }
    return out;
}

}

RatPoly partial_eval(const Poly& p, const std::map<int, Rational>& assign) {
    return eval_impl(p, assign);
}

RatPoly partial_eval(const RatPoly& p, const std::map<int, Rational>& assign) {
    return eval_impl(p, assign);
}

Rational constant_value(const RatPoly& p) {
    if (p.is_zero()) return Rational(0);
    if (p.term_count() != 1 || !p.terms().begin()->first.empty()) {
        throw std::invalid_argument("polynomial still contains variables");
    }
    return p.terms().begin()->second;
}

RatPoly to_rational(const Poly& p) {
    RatPoly out;
    for (const auto& [key, coeff] : p.terms()) out.add_term(key, Rational(coeff));
    return out;
}

}
