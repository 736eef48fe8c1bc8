#pragma once

#include <gmpxx.h>

#include <vector>

#include "gkzlift/qseries.hpp"

namespace gkzlift {

// Dense power series over Z, coefficient of q^n at index n. Workhorse for
// integer-coefficient series where the sparse map representation is too slow
// (theta powers, Delta(4 tau) division at large precision).
using ZSeries = std::vector<mpz_class>;

ZSeries z_mul(const ZSeries& a, const ZSeries& b, long prec);
ZSeries z_pow(const ZSeries& a, long e, long prec);
ZSeries z_add(const ZSeries& a, const ZSeries& b);
ZSeries z_scale(const ZSeries& a, const mpz_class& c);
// q -> q^k substitution
ZSeries z_rescale(const ZSeries& a, long k, long prec);

// exact division by a series with constant term 1 (num / den), prec terms
ZSeries z_div_unit(const ZSeries& num, const ZSeries& den, long prec);

// theta(tau) = sum q^{n^2}
ZSeries z_theta(long prec);
// weight-2 generator on Gamma0(4): sum_{n odd} sigma_1(n) q^n
ZSeries z_f2(long prec);
// Delta = q prod (1-q^n)^24 via the eta product, exact
ZSeries z_delta(long prec);
// normalized Eisenstein series scaled to integer coefficients:
// returns (series, common denominator) with series/denominator = E_k
std::pair<ZSeries, mpz_class> z_eisenstein(long k, long prec);

QExpansion zseries_to_q(const ZSeries& a, long first_exponent, long prec,
                        const mpz_class& denom = 1);

} // namespace gkzlift
