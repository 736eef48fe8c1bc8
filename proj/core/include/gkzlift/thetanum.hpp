#pragma once

#include <complex>
#include <vector>

#include "gkzlift/lift.hpp"

namespace gkzlift::thetanum {

using cplx = std::complex<double>;

// lattice L = span{z, zeta, kappa} in traceless 2x2 matrices, coordinates
// (x1, x2, x3) with pairing x1 y2 + x2 y1 + 2N x3 y3; L* has x3 in (1/2N)Z
struct LorentzModel {
    long N = 1;
    explicit LorentzModel(long N_) : N(N_) {}
    double pair(const double* u, const double* v) const {
        return u[0] * v[1] + u[1] * v[0] + 2.0 * N * u[2] * v[2];
    }
};

// Grassmannian coordinate tau_G = x + iy; Z_{v,V} = beta M_tau has lattice
// coordinates (-N tau^2, 1, tau) and Y^2 = 2 N y^2
struct GrassmannPoint {
    long N = 1;
    cplx tauG;
    GrassmannPoint(long N_, cplx t) : N(N_), tauG(t) {}
    double x() const { return tauG.real(); }
    double y() const { return tauG.imag(); }
    double Ysq() const { return 2.0 * N * y() * y(); }
    void zv(cplx out[3]) const {
        out[0] = -static_cast<double>(N) * tauG * tauG;
        out[1] = 1.0;
        out[2] = tauG;
    }
    void jv(double out[3]) const; // coordinates of J_{tauG}, norm -2
};

// P_{r,s,t}(Z, lambda) = (lambda, Z)^r (lambda, Zbar)^t / (Y^2)^s
cplx poly_prst(const LorentzModel& L, const double lam[3], const GrassmannPoint& v,
               long r, long s, long t);

// e^{-Delta_v/8 pi y}(P_{r,s,t}) evaluated at lambda; the identity when rt = 0
cplx gaussian_correction(const LorentzModel& L, const double lam[3], const GrassmannPoint& v,
                         double y, long r, long s, long t);

struct ThetaParams {
    long r = 0, s = 0, t = 0;
    double cutoff = 0;   // majorant radius^2; 0 = adaptive
    long threads = 1;
    bool compensated = false;
};

// truncated Siegel theta vector over Z/2N; deterministic summation order
std::vector<cplx> theta(const LorentzModel& L, cplx tau, const GrassmannPoint& v,
                        const ThetaParams& p);

// residuals of rho(M) Theta(tau) = j^{-1-(r+t)} jbar^{-1/2} Theta(M tau),
// M in {T, S}
struct ModularityResidual {
    double t_resid = 0;
    double s_resid = 0;
    double max() const { return t_resid > s_resid ? t_resid : s_resid; }
};
ModularityResidual verify_modularity(const LorentzModel& L, cplx tau, const GrassmannPoint& v,
                                     const ThetaParams& p);

// finite-difference residual of
//   4 Delta_{k,tau} y^{1/2} Theta = [Delta_{2(s-r),2(s-t),tauG} + 2r(1-2t)] y^{1/2} Theta
// with k = 1/2 + r + t, both Laplacians as 5-point central stencils
double verify_deltatauZ(const LorentzModel& L, cplx tau, const GrassmannPoint& v,
                        const ThetaParams& p, double h);

// equation (modOVTheta) spot check for g in Gamma_0(N) acting on tau_G
double verify_tauG_automorphy(const LorentzModel& L, cplx tau, const GrassmannPoint& v,
                              const ThetaParams& p, long a, long b, long c, long d);

// relative residual of (tau-sigma)^{m+1}(tau-sigmabar)^{m+1} G(tau) against
// the expected lead, Richardson-extrapolated over eps in {1e-2, 1e-3};
// G = 384 E6 Delta / E4^3 evaluated from convergent E-series
double verify_example_pole(cplx sigma, double expected_lead, double approach_angle);

// the same limit extraction, returned instead of compared
cplx extract_example_pole_lead(cplx sigma, double approach_angle);

} // namespace gkzlift::thetanum
