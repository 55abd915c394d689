#pragma once
/* Sparse polynomials in the variables T_2, T_3, ... over an exact scalar ring.
 * A monomial T_{a_1}...T_{a_r} is keyed by the partition (a_1 >= ... >= a_r);
 * the empty partition keys the constant term. Zero coefficients are never
 * stored, so term_count is the number of genuinely present monomials and
 * map iteration runs in the canonical output order. */

#include <map>
#include <stdexcept>
#include <utility>

#include "gammaflow/numeric.hpp"
#include "gammaflow/partition.hpp"

namespace gammaflow {

template <typename Coeff>
class BasicPoly {
public:
    using TermMap = std::map<Partition, Coeff, CanonicalTermOrder>;

    BasicPoly() = default;

    static BasicPoly monomial(Partition key, Coeff coeff) {
        BasicPoly out;
        out.add_term(key, coeff);
        return out;
    }

    static BasicPoly constant(Coeff value) {
        return monomial(Partition(), std::move(value));
    }

    /* Accumulates onto the existing coefficient and drops the term when the
     * sum cancels to zero. */
    void add_term(const Partition& key, const Coeff& coeff) {
        if (coeff == 0) return;
        auto [it, fresh] = terms_.emplace(key, coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Coeff coeff_of(const Partition& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    int term_count() const { return static_cast<int>(terms_.size()); }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    int max_length() const {
        int best = 0;
        for (const auto& [key, coeff] : terms_) {
            if (key.length() > best) best = key.length();
        }
        return best;
    }

    BasicPoly& operator+=(const BasicPoly& rhs) {
        for (const auto& [key, coeff] : rhs.terms_) add_term(key, coeff);
        return *this;
    }

    BasicPoly& operator-=(const BasicPoly& rhs) {
        for (const auto& [key, coeff] : rhs.terms_) add_term(key, Coeff(-coeff));
        return *this;
    }

    BasicPoly& operator*=(const Coeff& scalar) {
        if (scalar == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [key, coeff] : terms_) coeff *= scalar;
        return *this;
    }

    friend BasicPoly operator+(BasicPoly lhs, const BasicPoly& rhs) { return lhs += rhs; }
    friend BasicPoly operator-(BasicPoly lhs, const BasicPoly& rhs) { return lhs -= rhs; }
    friend BasicPoly operator*(BasicPoly lhs, const Coeff& scalar) { return lhs *= scalar; }
    friend BasicPoly operator*(const Coeff& scalar, BasicPoly rhs) { return rhs *= scalar; }

    friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
        BasicPoly out;
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                Partition merged = ka;
                for (int p : kb.parts()) merged = merged.with_part(p);
                out.add_term(merged, Coeff(ca * cb));
            }
        }
        return out;
    }

    /* Multiplication by the single variable T_var. */
    BasicPoly times_var(int var) const {
        if (var < 1) throw std::invalid_argument("variable index must be >= 1");
        BasicPoly out;
        for (const auto& [key, coeff] : terms_) {
            out.terms_.emplace(key.with_part(var), coeff);
        }
        return out;
    }

    bool operator==(const BasicPoly&) const = default;

private:
    TermMap terms_;
};

using Poly = BasicPoly<BigInt>;
using RatPoly = BasicPoly<Rational>;

/* Substitutes exact values for a subset of the variables; unassigned variables
 * stay symbolic. Every key of `assign` must be >= 2. */
RatPoly partial_eval(const Poly& p, const std::map<int, Rational>& assign);
RatPoly partial_eval(const RatPoly& p, const std::map<int, Rational>& assign);

/* The value of a fully evaluated polynomial; throws when variables remain. */
Rational constant_value(const RatPoly& p);

/* Widens integer coefficients to rationals. */
RatPoly to_rational(const Poly& p);

}
