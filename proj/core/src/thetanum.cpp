#include "gkzlift/thetanum.hpp"

#include <cmath>
#include <numbers>
#include <thread>

#include "gkzlift/classical.hpp"
#include "gkzlift/errors.hpp"
#include "gkzlift/weil.hpp"

namespace gkzlift::thetanum {

namespace {
constexpr double kPi = std::numbers::pi;

cplx e_of(cplx z) { return std::exp(cplx(0.0, 2.0 * kPi) * z); }

long fact_ratio(long n, long j) { // n!/(n-j)!
    long r = 1;
    for (long i = 0; i < j; ++i) r *= (n - i);
    return r;
}
} // namespace

void GrassmannPoint::jv(double out[3]) const {
    double sq = std::sqrt(static_cast<double>(N));
    out[0] = -sq * (x() * x() + y() * y()) / y();
    out[1] = 1.0 / (y() * sq);
    out[2] = x() / (y() * sq);
}

cplx poly_prst(const LorentzModel& L, const double lam[3], const GrassmannPoint& v,
               long r, long s, long t) {
    cplx Z[3];
    v.zv(Z);
    cplx lZ = lam[0] * Z[1] + lam[1] * Z[0] + 2.0 * L.N * lam[2] * Z[2];
    cplx lZb = lam[0] * std::conj(Z[1]) + lam[1] * std::conj(Z[0]) + 2.0 * L.N * lam[2] * std::conj(Z[2]);
    return std::pow(lZ, static_cast<double>(r)) * std::pow(lZb, static_cast<double>(t)) /
           std::pow(v.Ysq(), static_cast<double>(s));
}

cplx gaussian_correction(const LorentzModel& L, const double lam[3], const GrassmannPoint& v,
                         double y, long r, long s, long t) {
    cplx Z[3];
    v.zv(Z);
    cplx lZ = lam[0] * Z[1] + lam[1] * Z[0] + 2.0 * L.N * lam[2] * Z[2];
    cplx lZb = lam[0] * std::conj(Z[1]) + lam[1] * std::conj(Z[0]) + 2.0 * L.N * lam[2] * std::conj(Z[2]);
    double Y2 = v.Ysq();
    cplx acc = 0;
    long jmax = std::min(r, t);
    double fj = 1.0;
    for (long j = 0; j <= jmax; ++j) {
        if (j > 0) fj *= -4.0 / (8.0 * kPi * y) / static_cast<double>(j);
        double coef = fj * fact_ratio(r, j) * fact_ratio(t, j);
        acc += coef * std::pow(lZ, static_cast<double>(r - j)) *
               std::pow(lZb, static_cast<double>(t - j)) / std::pow(Y2, static_cast<double>(s - j));
    }
    return acc;
}

namespace {

struct SumSetup {
    double J[3];
    cplx Z[3];
    double Y2;
    long bound1, bound2, bound3;
    double R2;
};

// adaptive truncation: the summand is bounded by poly growth times
// exp(-pi y majorant); pick R^2 with exp tail below 1e-13 relative
double choose_R2(double y, long deg) {
    double target = std::log(1e-14);
    double r2 = 16.0;
    while (-kPi * y * r2 + (deg + 4) * std::log(2.0 + r2) > target) r2 *= 1.3;
    return r2;
}

SumSetup make_setup(const LorentzModel& L, cplx tau, const GrassmannPoint& v,
                    const ThetaParams& p) {
    SumSetup st;
    v.jv(st.J);
    v.zv(st.Z);
    st.Y2 = v.Ysq();
    double y = tau.imag();
    st.R2 = p.cutoff > 0 ? p.cutoff : choose_R2(y, p.r + p.t);
    if (p.cutoff > 0) {
        double needed = choose_R2(y, p.r + p.t);
        if (p.cutoff < needed)
            throw CutoffTooSmall("theta: cutoff below the tail bound for the requested tolerance");
    }
    // majorant Q(l) = l^2 + (l, J)^2 is positive definite; per-axis bounds
    // from the inverse Gram diagonal
    double GJ[3] = {st.J[1], st.J[0], 2.0 * L.N * st.J[2]};
    double Q[3][3] = {{GJ[0] * GJ[0], 1.0 + GJ[0] * GJ[1], GJ[0] * GJ[2]},
                      {1.0 + GJ[0] * GJ[1], GJ[1] * GJ[1], GJ[1] * GJ[2]},
                      {GJ[0] * GJ[2], GJ[1] * GJ[2], 2.0 * L.N + GJ[2] * GJ[2]}};
    // inverse via adjugate
    double det = Q[0][0] * (Q[1][1] * Q[2][2] - Q[1][2] * Q[2][1]) -
                 Q[0][1] * (Q[1][0] * Q[2][2] - Q[1][2] * Q[2][0]) +
                 Q[0][2] * (Q[1][0] * Q[2][1] - Q[1][1] * Q[2][0]);
    double inv00 = (Q[1][1] * Q[2][2] - Q[1][2] * Q[2][1]) / det;
    double inv11 = (Q[0][0] * Q[2][2] - Q[0][2] * Q[2][0]) / det;
    double inv22 = (Q[0][0] * Q[1][1] - Q[0][1] * Q[1][0]) / det;
    st.bound1 = static_cast<long>(std::floor(std::sqrt(st.R2 * inv00))) + 2;
    st.bound2 = static_cast<long>(std::floor(std::sqrt(st.R2 * inv11))) + 2;
    st.bound3 = static_cast<long>(std::floor(std::sqrt(st.R2 * inv22))) + 2;
    return st;
}

cplx component_sum(const LorentzModel& L, cplx tau, const GrassmannPoint& v,
                   const ThetaParams& p, const SumSetup& st, long d, long x1_lo, long x1_hi) {
    double y = tau.imag();
    cplx acc = 0;
    cplx comp = 0; // Kahan compensation
    for (long a1 = x1_lo; a1 <= x1_hi; ++a1)
        for (long a2 = -st.bound2; a2 <= st.bound2; ++a2)
            for (long k3 = -st.bound3 - 1; k3 <= st.bound3 + 1; ++k3) {
                double lam[3] = {static_cast<double>(a1), static_cast<double>(a2),
                                 static_cast<double>(d) / (2.0 * L.N) + k3};
                double lam2 = 2.0 * lam[0] * lam[1] + 2.0 * L.N * lam[2] * lam[2];
                double lJ = L.pair(lam, st.J);
                double lam_m2 = -lJ * lJ / 2.0;
                double lam_p2 = lam2 - lam_m2;
                if (lam_p2 - lam_m2 > st.R2) continue;
                cplx val = gaussian_correction(L, lam, v, y, p.r, p.s, p.t);
                val *= e_of(tau * (lam_p2 / 2.0) + std::conj(tau) * (lam_m2 / 2.0));
                if (p.compensated) {
                    cplx yk = val - comp;
                    cplx tk = acc + yk;
                    comp = (tk - acc) - yk;
                    acc = tk;
                } else {
                    acc += val;
                }
            }
    return acc;
}

} // namespace

std::vector<cplx> theta(const LorentzModel& L, cplx tau, const GrassmannPoint& v,
                        const ThetaParams& p) {
    SumSetup st = make_setup(L, tau, v, p);
    long n = 2 * L.N;
    std::vector<cplx> out(static_cast<size_t>(n));
    long threads = std::max<long>(1, p.threads);
    for (long d = 0; d < n; ++d) {
        if (threads == 1) {
            out[static_cast<size_t>(d)] = component_sum(L, tau, v, p, st, d, -st.bound1, st.bound1);
            continue;
        }
        // stripe the x1 range; partial sums joined in stripe order
        long total = 2 * st.bound1 + 1;
        long chunk = (total + threads - 1) / threads;
        std::vector<cplx> partial(static_cast<size_t>(threads));
        std::vector<std::thread> pool;
        for (long w = 0; w < threads; ++w) {
            long lo = -st.bound1 + w * chunk;
            long hi = std::min(st.bound1, lo + chunk - 1);
            pool.emplace_back([&, w, lo, hi] {
                if (lo <= hi) partial[static_cast<size_t>(w)] = component_sum(L, tau, v, p, st, d, lo, hi);
            });
        }
        for (auto& th : pool) th.join();
        cplx acc = 0;
        for (const auto& x : partial) acc += x;
        out[static_cast<size_t>(d)] = acc;
    }
    return out;
}

ModularityResidual verify_modularity(const LorentzModel& L, cplx tau, const GrassmannPoint& v,
                                     const ThetaParams& p) {
    long n = 2 * L.N;
    auto th0 = theta(L, tau, v, p);
    auto thT = theta(L, tau + 1.0, v, p);
    auto thS = theta(L, -1.0 / tau, v, p);
    weil::CMatrix mT = weil::rho_T(L.N), mS = weil::rho_S(L.N);
    ModularityResidual res;
    // j(T,.) = 1
    for (long i = 0; i < n; ++i) {
        cplx lhs = 0;
        for (long j = 0; j < n; ++j) lhs += mT.at(i, j) * th0[static_cast<size_t>(j)];
        res.t_resid = std::max(res.t_resid, std::abs(lhs - thT[static_cast<size_t>(i)]));
    }
    // j(S,tau) = tau, metaplectic sqrt in H
    cplx sq = std::sqrt(tau);
    if (sq.imag() < 0) sq = -sq;
    cplx fac = std::pow(tau, static_cast<double>(-1 - (p.r + p.t))) * std::pow(std::conj(sq), -1.0);
    for (long i = 0; i < n; ++i) {
        cplx lhs = 0;
        for (long j = 0; j < n; ++j) lhs += mS.at(i, j) * th0[static_cast<size_t>(j)];
        res.s_resid = std::max(res.s_resid, std::abs(lhs - fac * thS[static_cast<size_t>(i)]));
    }
    return res;
}

namespace {

std::vector<cplx> sqrt_y_theta(const LorentzModel& L, cplx tau, cplx tauG, const ThetaParams& p) {
    GrassmannPoint v(L.N, tauG);
    auto th = theta(L, tau, v, p);
    double sy = std::sqrt(tau.imag());
    for (auto& x : th) x *= sy;
    return th;
}

} // namespace

double verify_deltatauZ(const LorentzModel& L, cplx tau, const GrassmannPoint& v,
                        const ThetaParams& p, double h) {
    long n = 2 * L.N;
    double k = 0.5 + p.r + p.t;
    cplx tg = v.tauG;
    auto f0 = sqrt_y_theta(L, tau, tg, p);
    auto fxp = sqrt_y_theta(L, tau + h, tg, p);
    auto fxm = sqrt_y_theta(L, tau - h, tg, p);
    auto fyp = sqrt_y_theta(L, tau + cplx(0, h), tg, p);
    auto fym = sqrt_y_theta(L, tau - cplx(0, h), tg, p);
    auto gxp = sqrt_y_theta(L, tau, tg + h, p);
    auto gxm = sqrt_y_theta(L, tau, tg - h, p);
    auto gyp = sqrt_y_theta(L, tau, tg + cplx(0, h), p);
    auto gym = sqrt_y_theta(L, tau, tg - cplx(0, h), p);
    double y = tau.imag(), yg = tg.imag();
    long rp = 2 * (p.s - p.r), sp = 2 * (p.s - p.t);
    double max_resid = 0;
    for (long i = 0; i < n; ++i) {
        size_t ui = static_cast<size_t>(i);
        cplx dxx = (fxp[ui] - 2.0 * f0[ui] + fxm[ui]) / (h * h);
        cplx dyy = (fyp[ui] - 2.0 * f0[ui] + fym[ui]) / (h * h);
        cplx dx = (fxp[ui] - fxm[ui]) / (2.0 * h);
        cplx dy = (fyp[ui] - fym[ui]) / (2.0 * h);
        cplx lhs = 4.0 * (y * y * (dxx + dyy) - cplx(0, 1) * y * k * dx + y * k * dy);
        cplx gxx = (gxp[ui] - 2.0 * f0[ui] + gxm[ui]) / (h * h);
        cplx gyy = (gyp[ui] - 2.0 * f0[ui] + gym[ui]) / (h * h);
        cplx gx = (gxp[ui] - gxm[ui]) / (2.0 * h);
        cplx gy = (gyp[ui] - gym[ui]) / (2.0 * h);
        cplx rhs = yg * yg * (gxx + gyy) - cplx(0, 1) * yg * static_cast<double>(rp - sp) * gx +
                   yg * static_cast<double>(rp + sp) * gy +
                   static_cast<double>((rp - 1) * sp) * f0[ui] +
                   static_cast<double>(2 * p.r * (1 - 2 * p.t)) * f0[ui];
        max_resid = std::max(max_resid, std::abs(lhs - rhs));
    }
    return max_resid;
}

double verify_tauG_automorphy(const LorentzModel& L, cplx tau, const GrassmannPoint& v,
                              const ThetaParams& p, long a, long b, long c, long d) {
    if (c % L.N != 0 || a * d - b * c != 1)
        throw std::invalid_argument("verify_tauG_automorphy: matrix must lie in Gamma_0(N)");
    cplx tg = v.tauG;
    cplx jg = static_cast<double>(c) * tg + static_cast<double>(d);
    cplx jZ = jg * jg; // orthogonal automorphy factor doubles the weight
    GrassmannPoint vg(L.N, (static_cast<double>(a) * tg + static_cast<double>(b)) / jg);
    auto lhs = theta(L, tau, vg, p);
    auto rhs = theta(L, tau, v, p);
    cplx fac = std::pow(jZ, static_cast<double>(p.s - p.r)) *
               std::pow(std::conj(jZ), static_cast<double>(p.s - p.t));
    double m = 0;
    for (size_t i = 0; i < lhs.size(); ++i) m = std::max(m, std::abs(lhs[i] - fac * rhs[i]));
    return m;
}

namespace {

cplx eval_level1(const QExpansion& f, cplx tau) {
    cplx q = e_of(tau);
    cplx acc = 0;
    // Horner over the dense range
    long lo = f.lead();
    long hi = f.prec();
    for (long e = hi - 1; e >= lo; --e) {
        acc = acc * q;
        Rat c = f.coeff(e, 1);
        if (!c.is_zero()) acc += c.to_double();
    }
    return acc * std::pow(q, static_cast<double>(lo));
}

cplx eval_G_closed(cplx tau) {
    static const long prec = 80;
    static const QExpansion e4 = classical::eisenstein(4, prec);
    static const QExpansion e6 = classical::eisenstein(6, prec);
    static const QExpansion dl = classical::discriminant_form(prec);
    cplx v4 = eval_level1(e4, tau), v6 = eval_level1(e6, tau), vd = eval_level1(dl, tau);
    return 384.0 * v6 * vd / (v4 * v4 * v4);
}

} // namespace

cplx extract_example_pole_lead(cplx sigma, double th) {
    auto probe = [&](double eps) {
        cplx tau = sigma + std::polar(eps, th);
        cplx a = tau - sigma, b = tau - std::conj(sigma);
        return a * a * a * b * b * b * eval_G_closed(tau);
    };
    cplx p1 = probe(1e-2), p2 = probe(1e-3);
    return (10.0 * p2 - p1) / 9.0;
}

double verify_example_pole(cplx sigma, double expected_lead, double approach_angle) {
    cplx lead = extract_example_pole_lead(sigma, approach_angle);
    return std::abs(lead - expected_lead) / std::abs(expected_lead);
}

} // namespace gkzlift::thetanum
