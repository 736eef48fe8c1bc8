#pragma once

#include <optional>
#include <vector>

#include "gkzlift/weil.hpp"

namespace gkzlift::lift {

// integral binary quadratic form a x^2 + b x y + c y^2 of negative
// discriminant, a > 0; for level N the first coefficient is N*A
struct BQF {
    long a, b, c;
    long disc() const { return b * b - 4 * a * c; }
    long content() const;
    bool operator==(const BQF& o) const = default;
    bool operator<(const BQF& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

BQF apply_sl2(const BQF& f, long p, long q, long r, long s);
// classical SL2(Z) reduction
BQF reduce_sl2(const BQF& f);
// Gamma0(N)-canonical representative by bounded orbit search (N = 1 uses
// the classical reduction)
BQF reduce_gamma0(const BQF& f, long N);
bool gamma0_equivalent(const BQF& f, const BQF& g, long N);

// CM point of discriminant -4Nn attached to the form (NA, B, C):
// sigma = (B + i sqrt(4NAC - B^2)) / (2NA)
struct HeegnerPoint {
    long N = 1;
    Rat n;            // positive, 4Nn integral
    long A = 1, B = 0, C = 1;
    long gamma = 0;   // class B mod 2N carrying the matching coefficient
    Rat matched_c;    // c_{gamma, -n}

    long Dq() const { return 4 * A * C * N - B * B; } // = 4Nn
    Rat x() const { return Rat(B, 2 * N * A); }
    Rat ysq() const { return Rat(Dq(), 4 * N * N * A * A); }
};

// exact value rat * i^{i_power} * sqrt(radicand) * pi^{pi_power}
struct ExactReal {
    Rat rat;
    long radicand = 1;
    long pi_power = 0;
    int i_power = 0; // 0 or 1 after normalization
    double to_double() const;
};

struct PoleData {
    HeegnerPoint point;
    long order = 1; // m + 1
    ExactReal lead; // lim (tau-sigma)^{m+1}(tau-sigmabar)^{m+1} G(tau)
    std::vector<std::pair<long, Rat>> contributions; // ladder (k, c_{kB, -k^2 n})
};

struct LiftResult {
    long m = 0;
    long N = 1;
    QExpansion positive_part; // weight 2m+2
    std::vector<PoleData> poles;
    bool constant_unknown = false; // m = 0 carries an undetermined constant
};

// Fourier expansion of the lift: coefficient of q^r is
// (r^m / N^m) sum_{d | r} d^{m+1} c_{d mod 2N, d^2/4N}, 1 <= r <= R
QExpansion lift_positive_part(const weil::VVForm& f, long m, long N, long R);

// one Heegner point per Gamma0(N)-class of forms (NA, B, C) of discriminant
// -4Nn whose class B mod 2N matches a nonzero coefficient c_{B, -n}
std::vector<HeegnerPoint> enumerate_poles(const weil::VVForm& f, const Rat& n, long N);

// exact principal-part data at a point, ladder folded in
PoleData principal_part(const weil::VVForm& f, long m, long N, const HeegnerPoint& point);

LiftResult lift(const weil::VVForm& f, long m, long N, long R);

// level-one modular form machinery used by the certificate
std::vector<std::pair<long, long>> monomial_exponents(long weight); // (a,b): 4a+6b=w
long dim_modular_forms_level1(long weight);
long dim_cusp_forms_level1(long weight);
// echelonized (Victor Miller) basis of M_w to precision prec
std::vector<QExpansion> echelon_basis_level1(long weight, long prec);

struct Certificate {
    long weight = 0;       // weight of G * E4^a E6^b
    long e4_power = 0;
    long e6_power = 0;
    std::vector<Rat> coords; // over the echelon basis of M_weight
    long verified_to = 0;    // scaled exponent bound of verified equality
    QExpansion product;      // G * E4^a E6^b as computed
};

// multiplies G by the minimal E4^a E6^b clearing the catalogued poles
// (disc -3 at j = 0, disc -4 at j = 1728) and certifies membership of the
// product in M_{2m+2+4a+6b}(SL2(Z)) against the echelon basis
Certificate clear_poles_certificate(const QExpansion& G, long weight,
                                    const std::vector<PoleData>& poles, long prec);

} // namespace gkzlift::lift
