#include "gammaflow/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace gammaflow {

/* Defining recurrence: B_n = -1/(n+1) * sum_{k=0}^{n-1} binomial(n+1, k) B_k. */
Rational bernoulli(int n) {
    if (n < 0) throw std::invalid_argument("Bernoulli numbers start at n = 0");
    static std::mutex mutex;
    static std::vector<Rational> memo{Rational(1)};
    std::lock_guard<std::mutex> lock(mutex);
    while (static_cast<int>(memo.size()) <= n) {
        int m = static_cast<int>(memo.size());
        Rational sum(0);
        for (int k = 0; k < m; ++k) {
            sum += Rational(binomial(static_cast<unsigned long>(m + 1),
                                     static_cast<unsigned long>(k))) * memo[static_cast<std::size_t>(k)];
        }
        Rational value = -sum / Rational(m + 1);
        value.canonicalize();
        memo.push_back(value);
    }
    return memo[static_cast<std::size_t>(n)];
}

}
