#pragma once

#include <complex>
#include <map>
#include <vector>

#include "gkzlift/qseries.hpp"

namespace gkzlift::weil {

using cplx = std::complex<double>;

// dense square matrix, row-major, for the finite Weil representation
struct CMatrix {
    long n = 0;
    std::vector<cplx> a;
    explicit CMatrix(long n_) : n(n_), a(static_cast<size_t>(n_ * n_)) {}
    cplx& at(long i, long j) { return a[static_cast<size_t>(i * n + j)]; }
    const cplx& at(long i, long j) const { return a[static_cast<size_t>(i * n + j)]; }
    static CMatrix identity(long n);
    CMatrix operator*(const CMatrix& o) const;
    CMatrix adjoint() const;
    double max_abs_diff(const CMatrix& o) const;
};

// discriminant module Z/2N of the rank-1 lattice K of norm 2N, with the
// Q/Z-valued quadratic form d -> d^2/4N
struct DiscModule {
    long N;
    explicit DiscModule(long N_);
    long order() const { return 2 * N; }
    long reduce(long d) const { return ((d % (2 * N)) + 2 * N) % (2 * N); }
    // d^2/4N mod 1
    Rat qform(long d) const {
        long r = reduce(d);
        return Rat((r * r) % (4 * N), 4 * N);
    }
};

// rho(T) = diag e(d^2/4N)
CMatrix rho_T(long N);
// rho(S) = zeta_8^{-1}/sqrt(2N) [e(-d d'/2N)]  (signature (2,1))
CMatrix rho_S(long N);
// rho(Z) with Z = S^2: e_d -> i^{b_- - b_+} e_{-d}
CMatrix rho_Z(long N);

enum class Rep { rho, rho_dual };

// vector-valued modular form for rho_K: component d carries a QExpansion
// whose exponents lie in Z + d^2/4N (rho) or Z - d^2/4N (rho_dual)
struct VVForm {
    long N = 1;
    long weight2 = 0; // 2 * weight
    Rep rep = Rep::rho;
    std::map<long, QExpansion> comps;

    VVForm() = default;
    VVForm(long N, long weight2, Rep rep);

    // checks exponent residues and, for weight 1/2 - m, the symmetry
    // c_{-d,n} = (-1)^m c_{d,n}
    void validate() const;
    const QExpansion* component(long d) const;
    // coefficient c_{d, e/den}
    Rat coeff(long d, long e, long den) const;
};

// scalar avatar in the Kohnen plus space: exponents integral, supported on
// n = 0,1 mod 4 for even m
struct PlusForm {
    long weight2 = 0; // 2 * weight = 1 - 2m
    long m = 0;
    QExpansion series;

    PlusForm() = default;
    PlusForm(long m, QExpansion s);
    void validate() const;
};

// N=1 dictionary: component d = n mod 2 receives c(n) at exponent n/4
VVForm plus_to_vv(const PlusForm& g);
PlusForm vv_to_plus(const VVForm& f);

} // namespace gkzlift::weil
