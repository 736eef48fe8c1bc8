#pragma once

#include <map>

#include "gkzlift/weil.hpp"

namespace gkzlift::ah {

// Almost-holomorphic series in (q, w) with w = 1/(4 pi y). A term of
// component d at key {e, k} is the rational coefficient of q^{e/den} w^k;
// the (4 pi)^k from q^n/y^k = (4 pi)^k q^n w^k is absorbed so every stored
// coefficient stays rational.
struct AHSeries {
    struct Key {
        long e;
        long k;
        bool operator<(const Key& o) const { return e != o.e ? e < o.e : k < o.k; }
        bool operator==(const Key& o) const = default;
    };
    long N = 1;
    long weight2 = 0;
    weil::Rep rep = weil::Rep::rho;
    long den = 1;
    long prec = kInfPrec;
    std::map<long, std::map<Key, Rat>> comps;

    long depth() const;
    Rat coeff(long d, long e, long k) const;
    void set(long d, long e, long k, const Rat& c);
    bool operator==(const AHSeries& o) const;
    AHSeries operator*(const Rat& c) const;
    AHSeries operator-(const AHSeries& o) const;

    // w-degree-0 slice as a VVForm (drops higher depth)
    weil::VVForm depth_zero() const;
    static AHSeries from_vvform(const weil::VVForm& f);
};

// delta_l: q^n w^k -> n q^n w^k + (k - l) q^n w^{k+1}; weight l -> l + 2.
// l2 = 2l keeps half-integral weights exact.
AHSeries delta_op(long l2, const AHSeries& F);

// normalized lowering L~ = -4 pi L: q^n w^k -> k q^n w^{k-1}; weight -> -2
AHSeries lower_op(const AHSeries& F);

// weight-k Laplacian Delta_k = delta_{k-2} o L~; requires F of weight k
AHSeries laplacian(long k2, const AHSeries& F);

// closed form of delta^m f for holomorphic f of weight 1 - b_-/2 - m:
// coefficient at w-degree k is binom(m,k) n^{m-k} prod_{r<k}(r + b_-/2) c_{gamma,n}
AHSeries delta_power_closed(long m, const weil::VVForm& f, long bminus);

// sum_{j=0}^{C} (-1)^j binom(C,j) p(j) for an integer-coefficient polynomial
// p given by its coefficient vector (p[i] multiplies x^i)
Rat alt_binomial_sum(const std::vector<Rat>& p, long C);

} // namespace gkzlift::ah
