#include "gammaflow/operators.hpp"

#include <stdexcept>

namespace gammaflow {

namespace {

/* Distinct part values of `key` with multiplicities, descending. */
std::vector<std::pair<int, int>> value_counts(const Partition& key) {
    std::vector<std::pair<int, int>> out;
    for (int p : key.parts()) {
        if (!out.empty() && out.back().first == p) {
            ++out.back().second;
        } else {
            out.emplace_back(p, 1);
        }
    }
    return out;
}

void shift_one(const Partition& key, const BigInt& coeff, int delta, Poly& out) {
    for (const auto& [value, count] : value_counts(key)) {
        Partition shifted = key.without_part(value).with_part(value + delta);
        out.add_term(shifted, coeff * count);
    }
}

}

Poly op_D1(const Poly& p) {
    Poly out;
    for (const auto& [key, coeff] : p.terms()) shift_one(key, coeff, 1, out);
    return out;
}

Poly op_D2(const Poly& p) {
    Poly out;
    for (const auto& [key, coeff] : p.terms()) shift_one(key, coeff, 2, out);
    return out;
}

Poly op_L(const Poly& p) {
    Poly out;
    for (const auto& [key, coeff] : p.terms()) {
        auto groups = value_counts(key);
        for (std::size_t a = 0; a < groups.size(); ++a) {
            const auto [va, ma] = groups[a];
            /* both increments inside one value group */
            if (ma >= 2) {
                BigInt pairs = BigInt(ma) * (ma - 1) / 2;
                Partition moved = key.without_part(va).without_part(va).with_part(va + 1).with_part(va + 1);
                out.add_term(moved, coeff * pairs);
            }
            for (std::size_t b = a + 1; b < groups.size(); ++b) {
                const auto [vb, mb] = groups[b];
                Partition moved = key.without_part(va).without_part(vb).with_part(va + 1).with_part(vb + 1);
                out.add_term(moved, coeff * (BigInt(ma) * mb));
            }
        }
    }
    return out;
}

Poly op_H(const Poly& p) {
    Poly out;
    for (const auto& [key, coeff] : p.terms()) {
        for (const auto& [value, count] : value_counts(key)) {
            if (value == 1) {
                throw std::invalid_argument("splitting rule undefined on a part equal to 1");
            }
            Partition rest = key.without_part(value);
            BigInt scaled = coeff * count;
            for (int l = 1; 2 * l <= value; ++l) {
                BigInt weight = binomial(static_cast<unsigned long>(value),
                                         static_cast<unsigned long>(l));
                if (2 * l == value) {
                    /* central split appears once; binomial(2k, k) is even */
                    if (mpz_odd_p(weight.get_mpz_t())) {
                        throw std::logic_error("central binomial expected even");
                    }
                    weight /= 2;
                }
                Partition split = rest.with_part(1 + l).with_part(1 + value - l);
                out.add_term(split, -scaled * weight);
            }
        }
    }
    return out;
}

Poly source_An(int n) {
    if (n < 2) throw std::invalid_argument("source term defined for n >= 2");
    Poly out;
    for (int k = 1; k <= n - 1; ++k) {
        Partition key = Partition::singleton(n).with_part(1 + k).with_part(1 + n - k);
        out.add_term(key, -binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
    }
    return out;
}

}
