#pragma once
/* Exact cumulant and moment sequences of centred laws, named generators,
 * the triangular moment/cumulant conversion, and a convolution/scaling
 * combinator. All values are exact rationals. */

#include <string>
#include <utility>
#include <vector>

#include "gammaflow/numeric.hpp"

namespace gammaflow {

/* K_n for 2 <= n <= max_order; the order-1 cumulant is fixed to 0 because
 * every source here is centred. */
class CumulantSeq {
public:
    CumulantSeq(int max_order, std::string provenance, bool symmetric);

    int max_order() const { return max_order_; }
    const std::string& provenance() const { return provenance_; }
    bool symmetric() const { return symmetric_; }

    const Rational& at(int order) const;     /* 2 <= order <= max_order */
    Rational get(int order) const;           /* order 1 maps to 0 */
    void set(int order, const Rational& value);
    void set_symmetric(bool symmetric) { symmetric_ = symmetric; }
    void set_provenance(std::string provenance) { provenance_ = std::move(provenance); }

    /* Value-wise equality; provenance is not compared. */
    bool same_values(const CumulantSeq& other) const;

private:
    int max_order_;
    std::string provenance_;
    bool symmetric_;
    std::vector<Rational> values_;  /* index 0 holds order 2 */
};

/* E[X^n] for 1 <= n <= max_order. */
class MomentSeq {
public:
    explicit MomentSeq(int max_order);

    int max_order() const { return max_order_; }
    const Rational& at(int order) const;
    void set(int order, const Rational& value);

private:
    int max_order_;
    std::vector<Rational> values_;  /* index 0 holds order 1 */
};

/* K_2 = variance, every higher cumulant 0. */
CumulantSeq cumulants_gaussian(const Rational& variance, int max_order);

/* Uniform law on [-1, 1]: K_n = 2^n B_n / n. */
CumulantSeq cumulants_uniform(int max_order);

/* Symmetric two-point law on {-1, +1}: K_n = 2^n (2^n - 1) B_n / n. */
CumulantSeq cumulants_rademacher(int max_order);

/* Two-sided exponential with scale b > 0: K_{2n} = (2n)! b^{2n} / n. */
CumulantSeq cumulants_laplace(const Rational& scale, int max_order);

/* Atoms (x_j, p_j): mass p_j/2 at each of +-x_j, remainder 1 - sum p_j at 0.
 * Requires x_j != 0, p_j > 0 and sum p_j <= 1. */
CumulantSeq cumulants_discrete_symmetric(
    const std::vector<std::pair<Rational, Rational>>& points, int max_order);

/* Triangular recursion K_n = m_n - sum_{j<n} binomial(n-1, j-1) K_j m_{n-j};
 * requires a centred input (m_1 = 0). The symmetric flag of the result is
 * set when every populated odd cumulant is zero. */
CumulantSeq moments_to_cumulants(const MomentSeq& m);

/* Inverse of moments_to_cumulants. */
MomentSeq cumulants_to_moments(const CumulantSeq& k);

/* Cumulants of a + lambda*b for independent summands, K_n(a) + lambda^n K_n(b);
 * without b, cumulants of lambda*a. The shift touches nothing at order >= 2
 * and is accepted only for interface completeness. */
CumulantSeq seq_shift_scale_convolve(const CumulantSeq& a, const Rational& lambda,
                                     const Rational& shift, const CumulantSeq* b);

}
