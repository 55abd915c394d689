#include "gammaflow/numeric.hpp"

#include <stdexcept>

namespace gammaflow {

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt out;
    if (k > n) return out;  /* 0 */
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

BigInt factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

std::string bigint_to_string(const BigInt& v) {
    return v.get_str(10);
}

BigInt bigint_from_string(const std::string& text) {
    const auto fail = [&]() -> void {
        throw std::invalid_argument("bad integer literal: \"" + text + "\"");
    };
    std::size_t i = 0;
    if (i < text.size() && text[i] == '-') ++i;
    if (i == text.size()) fail();
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] < '0' || text[j] > '9') fail();
    }
    if (text[i] == '0' && text.size() - i > 1) fail();  /* leading zero */
    if (text[i] == '0' && i > 0) fail();                /* "-0" */
    return BigInt(text, 10);
}

std::string rational_to_string(const Rational& v) {
    Rational c(v);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str(10);
    return c.get_num().get_str(10) + "/" + c.get_den().get_str(10);
}

Rational rational_from_string(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(bigint_from_string(text));
    }
    BigInt num = bigint_from_string(text.substr(0, slash));
    std::string den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text[0] == '-') {
        throw std::invalid_argument("denominator must be positive: \"" + text + "\"");
    }
    BigInt den = bigint_from_string(den_text);
    return make_rational(num, den);
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational out(num, den);
    out.canonicalize();
    return out;
}

int sign(const Rational& v) {
    return sgn(v);
}

std::optional<Rational> exact_sqrt(const Rational& v) {
    if (sgn(v) < 0) return std::nullopt;
    Rational c(v);
    c.canonicalize();
    BigInt num_root, den_root;
    if (mpz_perfect_square_p(c.get_num().get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(c.get_den().get_mpz_t()) == 0) return std::nullopt;
    mpz_sqrt(num_root.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_sqrt(den_root.get_mpz_t(), c.get_den().get_mpz_t());
    return make_rational(num_root, den_root);
}

}
