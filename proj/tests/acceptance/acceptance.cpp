// Acceptance suite: one line per criterion, exact tolerances pinned in code.
//
// Criterion 5 pins the catalogued lead constant 18 sqrt(3)/(4 pi)^3 for the
// m = 2 worked-example pole. The measured limit of the closed form
// 384 E6 Delta / E4^3 at sigma is 144 sqrt(3)/(4 pi)^3 (the exact
// principal-part formula agrees; see criterion 5b), so criterion 5 is
// expected to stay red. Everything else must be green.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "gkzlift/ahseries.hpp"
#include "gkzlift/cmcycles.hpp"
#include "gkzlift/classical.hpp"
#include "gkzlift/lift.hpp"
#include "gkzlift/relations.hpp"
#include "gkzlift/thetanum.hpp"
#include "gkzlift/weil.hpp"

using namespace gkzlift;
using cplx = std::complex<double>;

namespace {

int failures = 0;
std::mt19937 rng(20260809);

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int crit, const char* label, bool pass, double secs, double budget,
            const std::string& detail = "") {
    bool ok = pass && (budget <= 0 || secs < budget);
    if (!ok) ++failures;
    std::printf("[%s] criterion %2d: %s (%.2f s%s)%s%s\n", ok ? "PASS" : "FAIL", crit, label, secs,
                budget > 0 ? (" / budget " + std::to_string(static_cast<int>(budget)) + " s").c_str()
                           : "",
                detail.empty() ? "" : " -- ", detail.c_str());
}

weil::VVForm random_vv_input(long m, long bminus) {
    weil::VVForm f(1, 2 - bminus - 2 * m, weil::Rep::rho);
    std::uniform_int_distribution<long> coef(-6, 6);
    QExpansion c0(4, 20), c1(4, 20);
    for (long e = -12; e < 20; e += 4) c0.set(e, Rat(coef(rng)));
    for (long e = -11; e < 20; e += 4) c1.set(e, Rat(coef(rng)));
    f.comps[0] = c0;
    f.comps[1] = c1;
    return f;
}

void criterion_1() {
    Timer t;
    weil::PlusForm g = gkz::basis_form(2, 3, 12);
    const std::vector<std::pair<long, long>> expected = {
        {-3, 1}, {0, -56}, {1, 384}, {4, -15024}, {5, 39933}, {8, -523584}, {9, 1129856}};
    bool ok = true;
    for (long e = -4; e < 12; ++e) {
        Rat want(0);
        for (auto [ee, c] : expected)
            if (ee == e) want = Rat(c);
        ok = ok && g.series.coeff(e, 1) == want;
    }
    report(1, "worked-example basis form q^{-3}-56+384q-...", ok, t.secs(), 5);
}

void criterion_2() {
    Timer t;
    weil::VVForm f = weil::plus_to_vv(gkz::paper_example_g(32));
    QExpansion L = lift::lift_positive_part(f, 2, 1, 5);
    bool ok = L.coeff(1, 1) == Rat(384) && L.coeff(2, 1) == Rat(-479232) &&
              L.coeff(3, 1) == Rat(274558464) &&
              L.coeff(4, 1) == Rat::parse("-118219210752") &&
              L.coeff(5, 1) == Rat::parse("43867326009600");
    report(2, "lift expansion 384q - 479232q^2 + ... (exact)", ok, t.secs(), 1);
}

void criterion_3() {
    Timer t;
    long R = 200;
    weil::VVForm f = weil::plus_to_vv(gkz::paper_example_g(R * R + 9));
    QExpansion L = lift::lift_positive_part(f, 2, 1, R);
    long prec = R + 4;
    QExpansion e4 = classical::eisenstein(4, prec);
    QExpansion closed = classical::eisenstein(6, prec) * classical::discriminant_form(prec) *
                        invert(e4 * e4 * e4, prec) * Rat(384);
    bool ok = true;
    for (long r = 1; r <= R; ++r) ok = ok && L.coeff(r, 1) == closed.coeff(r, 1);
    report(3, "lift equals 384 E6 Delta/E4^3 through q^200 (exact)", ok, t.secs(), 30);
}

void criterion_4() {
    Timer t;
    long R = 24;
    weil::VVForm f = weil::plus_to_vv(gkz::paper_example_g(R * R + 9));
    lift::LiftResult lr = lift::lift(f, 2, 1, R);
    bool ok = false;
    std::string detail;
    try {
        lift::Certificate cert = lift::clear_poles_certificate(lr.positive_part, 6, lr.poles, R);
        QExpansion target =
            classical::eisenstein(6, R) * classical::discriminant_form(R) * Rat(384);
        ok = cert.e4_power == 3 && cert.e6_power == 0 && cert.weight == 18 &&
             agree_to_common_prec(cert.product, target);
        detail = "G E4^3 in M_18, coords recover 384 E6 Delta";
    } catch (const std::exception& e) {
        detail = e.what();
    }
    report(4, "pole-clearing certificate in M_18", ok, t.secs(), 5, detail);
}

void criterion_5() {
    Timer t;
    cplx sigma(0.5, std::sqrt(3.0) / 2.0);
    double pinned = 18.0 * std::sqrt(3.0) / std::pow(4.0 * std::numbers::pi, 3);
    double resid = thetanum::verify_example_pole(sigma, pinned, 0.3);
    char buf[160];
    std::snprintf(buf, sizeof buf, "pinned 18sqrt3/(4pi)^3 = %.6g, residual %.3g", pinned, resid);
    report(5, "principal part lead matches the pinned constant", resid < 1e-6, t.secs(), 5, buf);

    // supplementary: the measured limit against the exact principal-part
    // formula (= 144 sqrt(3)/(4 pi)^3)
    Timer t2;
    weil::VVForm f = weil::plus_to_vv(gkz::paper_example_g(16));
    lift::LiftResult lr = lift::lift(f, 2, 1, 4);
    bool have = !lr.poles.empty();
    double resid2 = 1;
    double exact = 0;
    if (have) {
        exact = lr.poles[0].lead.to_double();
        resid2 = thetanum::verify_example_pole(sigma, exact, 0.3);
    }
    std::snprintf(buf, sizeof buf, "exact lead %s*sqrt(%ld)*pi^%ld = %.6g, residual %.3g",
                  have ? lr.poles[0].lead.rat.str().c_str() : "?",
                  have ? lr.poles[0].lead.radicand : 0, have ? lr.poles[0].lead.pi_power : 0, exact,
                  resid2);
    report(5, "(5b) measured lead matches the exact principal part", have && resid2 < 1e-6,
           t2.secs(), 5, buf);
}

void criterion_6() {
    Timer t;
    bool ok = true;
    int inputs = 0;
    for (long bminus = 1; bminus <= 3 && ok; ++bminus)
        for (long m = 0; m <= 6 && ok; ++m)
            for (int trial = 0; trial < 5 && ok; ++trial) {
                weil::VVForm f = random_vv_input(m, bminus);
                ++inputs;
                ah::AHSeries closed = ah::delta_power_closed(m, f, bminus);
                ah::AHSeries iter = ah::AHSeries::from_vvform(f);
                long l2 = f.weight2;
                for (long i = 0; i < m; ++i) {
                    iter = ah::delta_op(l2, iter);
                    l2 += 4;
                }
                ok = ok && closed == iter;
                if (m <= 4) {
                    // eigenvalue -m b/2 in the negated-eigenvalue convention:
                    // (Delta_k - m b/2) annihilates delta^m f
                    ah::AHSeries lap = ah::laplacian(2 - bminus + 2 * m, closed);
                    ok = ok && lap == closed * Rat(m * bminus, 2);
                }
            }
    report(6, "delta^m closed form = iteration; eigenvalue -m b/2 (exact)", ok && inputs >= 100,
           t.secs(), 0, "inputs: " + std::to_string(inputs));
}

void criterion_7() {
    Timer t;
    bool ok = true;
    std::uniform_int_distribution<long> cdist(1, 30), coef(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        long C = cdist(rng);
        std::uniform_int_distribution<long> ddist(0, C - 1);
        std::vector<Rat> p(static_cast<size_t>(ddist(rng)) + 1);
        for (auto& x : p) x = Rat(coef(rng));
        ok = ok && ah::alt_binomial_sum(p, C) == Rat(0);
    }
    report(7, "alternating binomial sums vanish for deg p < C <= 30 (exact)", ok, t.secs(), 0);
}

void criterion_8() {
    Timer t;
    double worst = 0;
    for (long N = 1; N <= 25; ++N) {
        weil::CMatrix s = weil::rho_S(N), tt = weil::rho_T(N);
        weil::CMatrix st = s * tt;
        worst = std::max(worst, (st * st * st).max_abs_diff(s * s));
        weil::CMatrix z = s * s;
        worst = std::max(worst, (z * z * z * z).max_abs_diff(weil::CMatrix::identity(2 * N)));
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max residual %.3g", worst);
    report(8, "Weil relations S^2=(ST)^3, Z^4=1 for N <= 25", worst < 1e-12, t.secs(), 0, buf);
}

void criterion_9() {
    Timer t;
    const std::array<std::array<long, 3>, 4> rst = {
        {{0, 0, 0}, {1, 1, 0}, {2, 2, 0}, {1, 1, 1}}};
    const std::array<std::pair<cplx, cplx>, 5> samples = {{{{0.1, 1.0}, {0.0, 2.0}},
                                                           {{0.17, 0.9}, {0.31, 1.2}},
                                                           {{-0.2, 1.3}, {0.11, 0.85}},
                                                           {{0.33, 0.8}, {-0.21, 1.05}},
                                                           {{0.0, 1.15}, {0.4, 1.4}}}};
    thetanum::LorentzModel L(1);
    bool ok = true;
    double worst = 0;
    bool scaling_ok = true;
    for (const auto& [tau, tg] : samples)
        for (const auto& idx : rst) {
            thetanum::ThetaParams p;
            p.r = idx[0];
            p.s = idx[1];
            p.t = idx[2];
            thetanum::GrassmannPoint v(1, tg);
            double r3 = thetanum::verify_deltatauZ(L, tau, v, p, 1e-3);
            worst = std::max(worst, r3);
            ok = ok && r3 < 1e-4;
            if (r3 > 1e-9) {
                double r2 = thetanum::verify_deltatauZ(L, tau, v, p, 1e-2);
                scaling_ok = scaling_ok && r2 > 10.0 * r3;
            }
        }
    char buf[96];
    std::snprintf(buf, sizeof buf, "max residual %.3g, O(h^2) scaling %s", worst,
                  scaling_ok ? "holds" : "violated");
    report(9, "theta PDE residual < 1e-4 at h = 1e-3 (4 index triples, 5 points)",
           ok && scaling_ok, t.secs(), 0, buf);
}

void criterion_10() {
    Timer t;
    thetanum::LorentzModel L(1);
    thetanum::GrassmannPoint v(1, {0.21, 0.93});
    thetanum::ThetaParams p0;
    auto r0 = thetanum::verify_modularity(L, {0.13, 1.1}, v, p0);
    thetanum::ThetaParams p22;
    p22.r = 2;
    p22.s = 2;
    p22.t = 0;
    auto r22 = thetanum::verify_modularity(L, {0.13, 1.1}, v, p22);
    char buf[96];
    std::snprintf(buf, sizeof buf, "(0,0,0): %.3g, (2,2,0): %.3g", r0.max(), r22.max());
    report(10, "theta modularity residuals (T and S)", r0.max() < 1e-8 && r22.max() < 1e-6,
           t.secs(), 0, buf);
}

void criterion_11() {
    Timer t;
    bool ok = true;
    int cases = 0;
    cm::CMPoint tau{Rat(1, 3), Rat(2, 3), 3};
    for (long N : {1L, 2L, 3L})
        for (long k : {1L, 2L}) {
            long M = k * N;
            auto fc = cm::cycle_phi(M, tau, N);
            cm::WedgeForm expect = cm::iota(cm::Traceless{
                cm::QuadElem(Rat(M, N)), cm::QuadElem(Rat(-1, N)), cm::QuadElem(Rat(M * M, N))});
            ok = ok && fc.form == expect;
            ++cases;
        }
    for (long N : {1L, 2L, 3L})
        for (long Ls : {1L, 2L}) {
            auto fc = cm::cycle_psi(Ls, tau, N);
            cm::WedgeForm expect = cm::iota(cm::Traceless{
                cm::QuadElem(Rat(Ls)), cm::QuadElem(Rat(-Ls * Ls)), cm::QuadElem(Rat(1))});
            ok = ok && fc.form == expect;
            ++cases;
        }
    for (long N : {1L, 2L})
        for (long D : {1L, 2L, 3L, 5L}) {
            auto fc = cm::cycle_cm_sqrtD(D, N);
            cm::Traceless sqrtDJ{cm::QuadElem(Rat(0)), cm::QuadElem(Rat(-D)),
                                 cm::QuadElem(Rat(1))};
            cm::WedgeForm expect = cm::iota(sqrtDJ) + cm::itilde(sqrtDJ);
            ok = ok && fc.form == expect && fc.scale == cm::QuadElem(Rat(0), Rat(1), D);
            ++cases;
        }
    report(11, "fundamental classes match the three tables (exact)", ok && cases >= 20, t.secs(),
           0, std::to_string(cases) + " grid cases");
}

void criterion_12() {
    Timer t;
    auto rl2 = gkz::relation_lattice(2, 20);
    auto rl8 = gkz::relation_lattice(8, 40);
    bool ok = rl2.quotient_rank == 0 && rl8.quotient_rank == 1 &&
              rl8.dim_cusp_forms == lift::dim_cusp_forms_level1(18) && rl8.dim_cusp_forms == 1 &&
              rl2.generators.size() == 10 && rl8.generators.size() == 20;
    char buf[96];
    std::snprintf(buf, sizeof buf, "m=2: quotient %ld; m=8: quotient %ld = dim S_18",
                  rl2.quotient_rank, rl8.quotient_rank);
    report(12, "Heegner relation ranks at m = 2 and m = 8", ok, t.secs(), 60, buf);
}

void criterion_13() {
    Timer t;
    QExpansion h = classical::cohen_eisenstein_5_2(201);
    bool ok = h.coeff(0, 1) == Rat(1);
    for (const auto& [e, c] : h.terms()) ok = ok && c.is_integer();
    ok = ok && h.coeff(1, 1) == Rat(-10) && h.coeff(4, 1) == Rat(-70) && h.coeff(5, 1) == Rat(-48);
    // cross-check the sieve path
    auto z = classical::cohen_eisenstein_5_2_integer(201);
    for (long n = 0; n < 201; ++n) ok = ok && Rat(z[static_cast<size_t>(n)]) == h.coeff(n, 1);
    report(13, "Cohen 5/2 series integral with the pinned spot values (exact)", ok, t.secs(), 0);
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    if (failures) {
        std::printf("%d criterion line(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
