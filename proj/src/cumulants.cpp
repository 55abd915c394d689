#include "gammaflow/cumulants.hpp"

#include <stdexcept>

#include "gammaflow/bernoulli.hpp"

namespace gammaflow {

namespace {

void check_order(int order, int lo, int max_order, const char* what) {
    if (order < lo || order > max_order) {
        throw std::out_of_range(std::string(what) + " order " + std::to_string(order) +
                                " outside [" + std::to_string(lo) + ", " +
                                std::to_string(max_order) + "]");
    }
}

Rational pow_rational(const Rational& base, int exp) {
    Rational out(1);
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

}

CumulantSeq::CumulantSeq(int max_order, std::string provenance, bool symmetric)
    : max_order_(max_order), provenance_(std::move(provenance)), symmetric_(symmetric) {
    if (max_order < 2) throw std::invalid_argument("cumulant sequence needs max_order >= 2");
    values_.assign(static_cast<std::size_t>(max_order - 1), Rational(0));
}

const Rational& CumulantSeq::at(int order) const {
    check_order(order, 2, max_order_, "cumulant");
    return values_[static_cast<std::size_t>(order - 2)];
}

Rational CumulantSeq::get(int order) const {
    if (order == 1) return Rational(0);
    check_order(order, 2, max_order_, "cumulant");
    return values_[static_cast<std::size_t>(order - 2)];
}

void CumulantSeq::set(int order, const Rational& value) {
    check_order(order, 2, max_order_, "cumulant");
    values_[static_cast<std::size_t>(order - 2)] = value;
}

bool CumulantSeq::same_values(const CumulantSeq& other) const {
    if (max_order_ != other.max_order_) return false;
    for (int n = 2; n <= max_order_; ++n) {
        if (at(n) != other.at(n)) return false;
    }
    return true;
}

MomentSeq::MomentSeq(int max_order) : max_order_(max_order) {
    if (max_order < 1) throw std::invalid_argument("moment sequence needs max_order >= 1");
    values_.assign(static_cast<std::size_t>(max_order), Rational(0));
}

const Rational& MomentSeq::at(int order) const {
    check_order(order, 1, max_order_, "moment");
    return values_[static_cast<std::size_t>(order - 1)];
}

void MomentSeq::set(int order, const Rational& value) {
    check_order(order, 1, max_order_, "moment");
    values_[static_cast<std::size_t>(order - 1)] = value;
}

CumulantSeq cumulants_gaussian(const Rational& variance, int max_order) {
    if (sgn(variance) < 0) throw std::invalid_argument("variance must be >= 0");
    CumulantSeq out(max_order, "gaussian", true);
    out.set(2, variance);
    return out;
}

CumulantSeq cumulants_uniform(int max_order) {
    CumulantSeq out(max_order, "uniform", true);
    for (int n = 2; n <= max_order; n += 2) {
        Rational value = Rational(BigInt(1) << n) * bernoulli(n) / Rational(n);
        out.set(n, value);
    }
    return out;
}

CumulantSeq cumulants_rademacher(int max_order) {
    CumulantSeq out(max_order, "rademacher", true);
    for (int n = 2; n <= max_order; n += 2) {
        BigInt two_n = BigInt(1) << n;
        Rational value = Rational(two_n * (two_n - 1)) * bernoulli(n) / Rational(n);
        out.set(n, value);
    }
    return out;
}

CumulantSeq cumulants_laplace(const Rational& scale, int max_order) {
    if (sgn(scale) <= 0) throw std::invalid_argument("scale must be > 0");
    CumulantSeq out(max_order, "laplace", true);
    Rational scale_sq = scale * scale;
    Rational power(1);
    for (int m = 1; 2 * m <= max_order; ++m) {
        power *= scale_sq;
        Rational value = Rational(factorial(static_cast<unsigned long>(2 * m))) * power / Rational(m);
        out.set(2 * m, value);
    }
    return out;
}

CumulantSeq cumulants_discrete_symmetric(
    const std::vector<std::pair<Rational, Rational>>& points, int max_order) {
    Rational total(0);
    for (const auto& [x, p] : points) {
        if (x == 0) throw std::invalid_argument("atom location must be nonzero");
        if (sgn(p) <= 0) throw std::invalid_argument("atom mass must be > 0");
        total += p;
    }
    if (total > 1) throw std::invalid_argument("atom masses exceed total mass 1");
    MomentSeq moments(max_order);
    for (int n = 2; n <= max_order; n += 2) {
        Rational m(0);
        for (const auto& [x, p] : points) m += p * pow_rational(x, n);
        moments.set(n, m);
    }
    CumulantSeq out = moments_to_cumulants(moments);
    out.set_provenance("discrete-symmetric");
    return out;
}

CumulantSeq moments_to_cumulants(const MomentSeq& m) {
    if (m.at(1) != 0) throw std::invalid_argument("moment sequence must be centred (m_1 = 0)");
    int top = m.max_order();
    if (top < 2) throw std::invalid_argument("need moments through order 2");
    CumulantSeq out(top, "from-moments", false);
    bool symmetric = true;
    for (int n = 2; n <= top; ++n) {
        Rational value = m.at(n);
        for (int j = 2; j <= n - 1; ++j) {
            value -= Rational(binomial(static_cast<unsigned long>(n - 1),
                                       static_cast<unsigned long>(j - 1))) *
                     out.at(j) * m.at(n - j);
        }
        out.set(n, value);
        if (n % 2 == 1 && value != 0) symmetric = false;
    }
    out.set_symmetric(symmetric);
    return out;
}

MomentSeq cumulants_to_moments(const CumulantSeq& k) {
    MomentSeq out(k.max_order());
    out.set(1, Rational(0));
    for (int n = 2; n <= k.max_order(); ++n) {
        Rational value = k.at(n);
        for (int j = 2; j <= n - 1; ++j) {
            value += Rational(binomial(static_cast<unsigned long>(n - 1),
                                       static_cast<unsigned long>(j - 1))) *
                     k.at(j) * out.at(n - j);
        }
        out.set(n, value);
    }
    return out;
}

CumulantSeq seq_shift_scale_convolve(const CumulantSeq& a, const Rational& lambda,
                                     const Rational& shift, const CumulantSeq* b) {
    (void)shift;
    int top = b ? std::min(a.max_order(), b->max_order()) : a.max_order();
    CumulantSeq out(top, "combined", false);
    Rational power = lambda;  /* lambda^1 */
    bool symmetric = true;
    for (int n = 2; n <= top; ++n) {
        power *= lambda;
        Rational value = b ? Rational(a.at(n) + power * b->at(n)) : Rational(power * a.at(n));
        out.set(n, value);
        if (n % 2 == 1 && value != 0) symmetric = false;
    }
    out.set_symmetric(symmetric);
    return out;
}

}
