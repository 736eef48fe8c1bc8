#pragma once

#include <gmpxx.h>

#include <vector>

#include "gkzlift/qseries.hpp"

namespace gkzlift::classical {

// B_k, exact. B_1 = -1/2.
Rat bernoulli(long k);

mpz_class sigma(long n, long k);
int moebius(long n);

// full Kronecker symbol (a/n), including the sign and 2-adic rules
int kronecker(long a, long n);
bool is_fundamental_discriminant(long D);

// Dirichlet character chi_D = (D/.) attached to a fundamental discriminant
struct Character {
    long D;
    explicit Character(long D);
    int operator()(long n) const { return kronecker(D, n); }
};

// generalized Bernoulli number B_{2,chi_D} via the finite sum
Rat bernoulli2_chi(long D);
// L(-1, chi_D) = -B_{2,chi_D}/2
Rat l_minus_one(long D);

// decompose n = D f^2 with D the fundamental discriminant of Q(sqrt n)
// (n > 0, n = 0,1 mod 4); returns {D, f}
std::pair<long, long> fundamental_decomposition(long n);

// Cohen's H(2, n): 0 for n = 2,3 mod 4; 1/120 at n = 0
Rat cohen_h2(long n);

QExpansion eisenstein(long k, long prec);
QExpansion discriminant_form(long prec);
QExpansion jacobi_theta(long prec);
QExpansion cohen_eisenstein_5_2(long prec);
QExpansion j_invariant(long prec);

// -2k/B_k, the coefficient multiplying sigma_{k-1}(n) in E_k
Rat eisenstein_coefficient_factor(long k);

// integer coefficients of 120 sum H(2,n) q^n computed by a sieve; fast
// enough for the n <= 40000 range the worked example needs
std::vector<mpz_class> cohen_eisenstein_5_2_integer(long prec);

} // namespace gkzlift::classical
