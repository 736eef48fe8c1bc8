#include "gkzlift/zseries.hpp"

#include <stdexcept>

#include "gkzlift/classical.hpp"
#include "gkzlift/errors.hpp"

namespace gkzlift {

ZSeries z_mul(const ZSeries& a, const ZSeries& b, long prec) {
    ZSeries r(static_cast<size_t>(prec));
    long na = std::min<long>(a.size(), prec);
    for (long i = 0; i < na; ++i) {
        if (sgn(a[i]) == 0) continue;
        long jmax = std::min<long>(b.size(), prec - i);
        for (long j = 0; j < jmax; ++j) {
            if (sgn(b[j]) == 0) continue;
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return r;
}

ZSeries z_pow(const ZSeries& a, long e, long prec) {
    ZSeries r(static_cast<size_t>(prec));
    r[0] = 1;
    ZSeries base = a;
    base.resize(static_cast<size_t>(prec));
    while (e > 0) {
        if (e & 1) r = z_mul(r, base, prec);
        e >>= 1;
        if (e) base = z_mul(base, base, prec);
    }
    return r;
}

ZSeries z_add(const ZSeries& a, const ZSeries& b) {
    ZSeries r = a;
    if (b.size() > r.size()) r.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

ZSeries z_scale(const ZSeries& a, const mpz_class& c) {
    ZSeries r = a;
    for (auto& x : r) x *= c;
    return r;
}

ZSeries z_rescale(const ZSeries& a, long k, long prec) {
    ZSeries r(static_cast<size_t>(prec));
    for (size_t i = 0; i < a.size() && static_cast<long>(i) * k < prec; ++i) r[i * k] = a[i];
    return r;
}

ZSeries z_div_unit(const ZSeries& num, const ZSeries& den, long prec) {
    if (den.empty() || den[0] != 1)
        throw std::invalid_argument("z_div_unit: denominator must start with 1");
    ZSeries r(static_cast<size_t>(prec));
    long nd = static_cast<long>(den.size());
    for (long n = 0; n < prec; ++n) {
        mpz_class acc = n < static_cast<long>(num.size()) ? num[n] : mpz_class(0);
        long jmax = std::min<long>(nd - 1, n);
        for (long j = 1; j <= jmax; ++j) {
            if (sgn(den[j]) == 0) continue;
            mpz_submul(acc.get_mpz_t(), den[j].get_mpz_t(), r[n - j].get_mpz_t());
        }
        r[n] = acc;
    }
    return r;
}

ZSeries z_theta(long prec) {
    ZSeries r(static_cast<size_t>(prec));
    r[0] = 1;
    for (long n = 1; n * n < prec; ++n) r[n * n] = 2;
    return r;
}

ZSeries z_f2(long prec) {
    ZSeries r(static_cast<size_t>(prec));
    for (long n = 1; n < prec; n += 2) {
        long s = 0;
        for (long d = 1; d * d <= n; ++d) {
            if (n % d == 0) {
                s += d;
                if (d != n / d) s += n / d;
            }
        }
        r[n] = s;
    }
    return r;
}

ZSeries z_delta(long prec) {
    // eta(tau)^24 = q prod (1-q^n)^24; use Euler's pentagonal series for
    // prod(1-q^n) and raise to the 24th power
    ZSeries euler(static_cast<size_t>(prec));
    euler[0] = 1;
    for (long k = 1;; ++k) {
        long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
        if (g1 >= prec && g2 >= prec) break;
        long s = (k % 2 == 0) ? 1 : -1;
        if (g1 < prec) euler[g1] += s;
        if (g2 < prec) euler[g2] += s;
    }
    ZSeries e24 = z_pow(euler, 24, prec);
    ZSeries r(static_cast<size_t>(prec));
    for (long n = 1; n < prec; ++n) r[n] = e24[n - 1];
    return r;
}

std::pair<ZSeries, mpz_class> z_eisenstein(long k, long prec) {
    Rat c = classical::eisenstein_coefficient_factor(k);
    mpz_class denom = c.den();
    ZSeries r(static_cast<size_t>(prec));
    r[0] = denom;
    for (long n = 1; n < prec; ++n) r[n] = c.num() * classical::sigma(n, k - 1);
    return {std::move(r), denom};
}

QExpansion zseries_to_q(const ZSeries& a, long first_exponent, long prec, const mpz_class& denom) {
    QExpansion r(1, prec);
    for (size_t i = 0; i < a.size(); ++i) {
        long e = first_exponent + static_cast<long>(i);
        if (e >= prec) break;
        if (sgn(a[i]) != 0) r.set(e, Rat(a[i], denom));
    }
    return r;
}

} // namespace gkzlift
