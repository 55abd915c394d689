#pragma once
/* Closed-form coefficient formulas for the top of R_{n+1}, the quadratic
 * form a_n, and a cross-validation suite pitting the formulas against the
 * recursion. Throughout, R_{n+1} decomposes as
 *
 *   R_{n+1} = -n(n+1) T_2 T_n^2 + a_n T_n + b_n
 *
 * with a_n = sum of c_{i,j} T_i T_j over unordered pairs {i, j} subject to
 * i + j = n + 2 and 3 <= j <= i <= n - 1. */

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gammaflow/poly.hpp"
#include "gammaflow/rn_table.hpp"

namespace gammaflow {

struct LeadingForm {
    int n = 0;
    BigInt head_coeff;                               /* on T_2 T_n^2 */
    std::map<std::pair<int, int>, BigInt> an_terms;  /* key (i, j), i >= j */
};

/* The closed form of the top of R_{n+1} for n >= 4. All pair coefficients
 * are strictly negative; violation of that invariant throws. */
LeadingForm leading_form(int n);

struct ClosedCoeff {
    bool covered = false;
    BigInt value;      /* meaningful when covered */
    std::string rule;  /* which formula family produced the value */
};

/* Coefficient of the monomial alpha in R_n when a formula family covers it;
 * never a guess outside the families' validity ranges. */
ClosedCoeff closed_coeff(const Partition& alpha, int n);

/* a_{n,k}: terms of R_{n+1} whose largest part is n-k, with one factor
 * T_{n-k} stripped. Requires 0 <= k <= n-2. */
Poly extract_ank(const Poly& r_next, int n, int k);

/* The quadratic form a_n of R_{n+1} as a pair-coefficient map. Throws when a
 * term with largest part n is neither the head nor a length-3 pair term. */
std::map<std::pair<int, int>, BigInt> extract_an(const Poly& r_next, int n);

/* Split of R_{n+1} by the multiplicity of T_n: head carries the T_n^2
 * coefficient, linear the T_n^1 coefficient, rest the remainder. */
struct TnDecomposition {
    Poly head;
    Poly linear;
    Poly rest;
};
TnDecomposition decompose_top(const Poly& r_next, int n);

/* Symmetric matrix of the quadratic form a_n over T_3..T_{n-1}; entry (i, j)
 * pairs T_{3+i} with T_{3+j}. Off-diagonal pair coefficients split evenly
 * across the two symmetric positions. */
struct AnMatrix {
    int n = 0;
    std::vector<std::vector<Rational>> entries;
    /* entries[i][d-1-i] for i = 0..d-1, i.e. u_{n,k} for k = 3..n-1 */
    std::vector<Rational> antidiagonal;
    bool nondegenerate = false;
};
AnMatrix an_matrix(int n);

struct CrossValidationMismatch {
    int n = 0;
    std::string check;
    std::string subject;
    std::string expected;
    std::string found;
};

struct CrossValidationReport {
    int n_max = 0;
    long checks = 0;
    std::vector<CrossValidationMismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
    std::string to_json() const;
};

/* For every 4 <= n <= n_max, checks against compute_Rn(n+1): the head
 * coefficient, every leading_form pair (including that no unexpected pair
 * appears), every covered closed_coeff value, the a_{n,k} degrees 2+k, and
 * the length bound (largest part n-k implies length <= 3+k). */
CrossValidationReport cross_validate(int n_max, RnTable& table);

}
