#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "gammaflow/operators.hpp"
#include "gammaflow/partition.hpp"
#include "gammaflow/poly.hpp"

using namespace gammaflow;

namespace {

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

}

TEST_CASE("pair rule halves the iterated increment") {
    MonomialGen gen;
    for (int trial = 0; trial < 600; ++trial) {
        Poly p = gen.next();
        Poly twice = op_L(p) + op_L(p);
        CHECK(twice == op_D1(op_D1(p)) - op_D2(p));
    }
}

TEST_CASE("pair rule product expansion") {
    /* L(P T_m) = L(P) T_m + D1(P) T_{m+1}: the extra pairs couple one
     * position of P with the appended part. */
    MonomialGen gen;
    for (int trial = 0; trial < 600; ++trial) {
        Poly p = gen.next();
        int m = gen.part(gen.rng);
        Poly lhs = op_L(p.times_var(m));
        Poly rhs = op_L(p).times_var(m) + op_D1(p).times_var(m + 1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("weight and length bookkeeping") {
    MonomialGen gen;
    for (int trial = 0; trial < 600; ++trial) {
        Partition key = gen.next_key();
        Poly p;
        p.add_term(key, BigInt(1));

        Poly lp = op_L(p);
        for (const auto& [out, c] : lp.terms()) {
            CHECK(out.weight() == key.weight() + 2);
            CHECK(out.length() == key.length());
        }
        Poly hp = op_H(p);
        for (const auto& [out, c] : hp.terms()) {
            CHECK(out.weight() == key.weight() + 2);
            CHECK(out.length() == key.length() + 1);
        }
    }
}

TEST_CASE("largest part moves the right way") {
    MonomialGen gen;
    for (int trial = 0; trial < 600; ++trial) {
        Partition key = gen.next_key();
        Poly p;
        p.add_term(key, BigInt(1));

        /* splitting only breaks parts, so the maximum cannot grow */
        Poly hp = op_H(p);
        for (const auto& [out, c] : hp.terms()) {
            CHECK(out.max_part() <= key.max_part());
        }
        /* the pair rule never removes the largest part */
        Poly lp = op_L(p);
        for (const auto& [out, c] : lp.terms()) {
            CHECK(out.max_part() >= key.max_part());
        }
    }
}
