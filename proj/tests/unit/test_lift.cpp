#include <doctest.h>

#include <random>
#include <set>

#include "gkzlift/classical.hpp"
#include "gkzlift/errors.hpp"
#include "gkzlift/lift.hpp"
#include "gkzlift/relations.hpp"

using namespace gkzlift;
using lift::BQF;

TEST_SUITE_BEGIN("lift");

namespace {

weil::VVForm vv_single_pole(long n_plus, long prec_plus = 30) {
    QExpansion s(1, prec_plus);
    s.set(-n_plus, Rat(1));
    return weil::plus_to_vv(weil::PlusForm(2, s));
}

} // namespace

TEST_CASE("sl2 reduction matches the classical class counts") {
    auto class_number = [](long disc) {
        std::set<BQF> reduced;
        for (long a = 1; a * a <= -disc / 3 + 1; ++a)
            for (long b = -a; b <= a; ++b) {
                long num = b * b - disc;
                if (num % (4 * a) != 0) continue;
                long c = num / (4 * a);
                if (c < a) continue;
                reduced.insert(lift::reduce_sl2(BQF{a, b, c}));
            }
        return static_cast<long>(reduced.size());
    };
    CHECK(class_number(-3) == 1);
    CHECK(class_number(-4) == 1);
    CHECK(class_number(-23) == 3);
    CHECK(class_number(-47) == 5);
    // reduction is constant on random SL2 orbits
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> small(-4, 4);
    for (int trial = 0; trial < 50; ++trial) {
        BQF f{1, 1, 6}; // disc -23
        BQF g = f;
        for (int step = 0; step < 6; ++step) {
            long k = small(rng);
            g = lift::apply_sl2(g, 1, k, 0, 1);
            g = lift::apply_sl2(g, 0, -1, 1, 0);
        }
        CHECK(lift::reduce_sl2(g) == lift::reduce_sl2(f));
        CHECK(g.disc() == -23);
    }
}

TEST_CASE("lift positive part of the worked example") {
    weil::VVForm f = weil::plus_to_vv(gkz::paper_example_g(40));
    QExpansion L = lift::lift_positive_part(f, 2, 1, 5);
    CHECK(L.coeff(1, 1) == Rat(384));
    CHECK(L.coeff(2, 1) == Rat(-479232));
    CHECK(L.coeff(3, 1) == Rat(274558464));
    CHECK(L.coeff(4, 1) == Rat::parse("-118219210752"));
    CHECK(L.coeff(5, 1) == Rat::parse("43867326009600"));
    CHECK_THROWS_AS(lift::lift_positive_part(f, 3, 1, 5), WeightMismatch);
    weil::VVForm dual = f;
    dual.rep = weil::Rep::rho_dual;
    CHECK_THROWS_AS(lift::lift_positive_part(dual, 2, 1, 5), RepMismatch);
    // zero input lifts to zero
    weil::VVForm z(1, -3, weil::Rep::rho);
    CHECK(lift::lift_positive_part(z, 2, 1, 8).is_zero_to_prec());
}

TEST_CASE("lift coefficients match a brute-force divisor loop for r <= 50") {
    long R = 50;
    weil::PlusForm g = gkz::paper_example_g(R * R + 4);
    weil::VVForm f = weil::plus_to_vv(g);
    QExpansion L = lift::lift_positive_part(f, 2, 1, R);
    for (long r = 1; r <= R; ++r) {
        Rat s(0);
        for (long d = 1; d <= r; ++d)
            if (r % d == 0) s += Rat(d) * Rat(d) * Rat(d) * g.series.coeff(d * d, 1);
        CHECK(L.coeff(r, 1) == Rat(r) * Rat(r) * s);
    }
}

TEST_CASE("single-pole inputs scale as r^m times the single-divisor term") {
    weil::VVForm f = vv_single_pole(3, 40);
    QExpansion L = lift::lift_positive_part(f, 2, 1, 30);
    // squares d^2 never hit the (only) negative coefficient, so every
    // coefficient is recomputable from the positive part of f directly
    weil::PlusForm g = weil::vv_to_plus(f);
    for (long r = 1; r <= 7; ++r) {
        if (r == 1) continue;
        Rat direct(0);
        for (long d = 1; d <= r; ++d)
            if (r % d == 0) direct += Rat(d).pow(3) * g.series.coeff(d * d, 1);
        CHECK(L.coeff(r, 1) == Rat(r).pow(2) * direct);
    }
}

TEST_CASE("enumerate_poles finds the catalogued classes") {
    // disc -3 from the q^{-3} form: single class (1,1,1)
    weil::VVForm f = vv_single_pole(3);
    auto pts = lift::enumerate_poles(f, Rat(3, 4), 1);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].A == 1);
    CHECK(std::abs(pts[0].B) == 1);
    CHECK(pts[0].C == 1);
    CHECK(pts[0].matched_c == Rat(1));
    CHECK(pts[0].x() == Rat(pts[0].B, 2));
    CHECK(pts[0].ysq() == Rat(3, 4));
    // no matching coefficient: empty
    auto empty = lift::enumerate_poles(f, Rat(1), 1);
    CHECK(empty.empty());
    // disc -16 classes: (1,0,4) and the imprimitive (2,0,2)
    weil::VVForm f16 = vv_single_pole(16);
    auto pts16 = lift::enumerate_poles(f16, Rat(4), 1);
    REQUIRE(pts16.size() == 2);
    CHECK(pts16[0].A == 1);
    CHECK(pts16[0].B == 0);
    CHECK(pts16[0].C == 4);
    CHECK(pts16[1].A == 2);
    CHECK(pts16[1].B == 0);
    CHECK(pts16[1].C == 2);
}

TEST_CASE("enumerate_poles agrees with exhaustive reduction for n <= 10, N <= 3") {
    // independent orbit search over T, T^{-1}, V_N, V_N^{-1}, memoized
    std::map<std::pair<long, BQF>, std::set<BQF>> memo;
    auto orbit = [&](const BQF& f, long N) -> const std::set<BQF>& {
        auto key = std::make_pair(N, f);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::set<BQF> seen{f};
        std::vector<BQF> work{f};
        long bound = 40 * (std::abs(f.disc()) + 8);
        while (!work.empty() && seen.size() < 3000) {
            BQF g = work.back();
            work.pop_back();
            const long mats[4][4] = {{1, 1, 0, 1}, {1, -1, 0, 1}, {1, 0, N, 1}, {1, 0, -N, 1}};
            for (const auto& mt : mats) {
                BQF h = lift::apply_sl2(g, mt[0], mt[1], mt[2], mt[3]);
                if (std::abs(h.a) > bound || std::abs(h.b) > bound || std::abs(h.c) > bound) continue;
                if (seen.insert(h).second) work.push_back(h);
            }
        }
        return memo.emplace(key, std::move(seen)).first->second;
    };
    auto equivalent = [&](const BQF& f, const BQF& g, long N) {
        if (f.disc() != g.disc()) return false;
        const auto& of = orbit(f, N);
        if (of.count(g)) return true;
        const auto& og = orbit(g, N);
        for (const auto& h : of)
            if (og.count(h)) return true;
        return false;
    };
    for (long N = 1; N <= 3; ++N) {
        long n_cap = (N == 1) ? 10 : 4; // higher levels trimmed to keep the orbit searches fast
        for (long fourNn = 3; fourNn <= 4 * N * n_cap; ++fourNn) {
            long Dq = fourNn;
            if (Dq % 4 == 1 || Dq % 4 == 2) continue; // no forms of that discriminant
            Rat n(fourNn, 4 * N);
            // synthetic input matching every class: 1 on all components at -n
            weil::VVForm f(N, 1 - 2 * 2, weil::Rep::rho);
            for (long d = 0; d < 2 * N; ++d) {
                QExpansion s(4 * N, 1);
                s.set(-fourNn, Rat(1));
                f.comps[d] = s;
            }
            auto pts = lift::enumerate_poles(f, n, N);
            for (long B = -2 * Dq; B <= 2 * Dq; ++B)
                for (long A = 1; A <= 2 * Dq; ++A) {
                    if ((B * B + Dq) % (4 * N * A) != 0) continue;
                    long C = (B * B + Dq) / (4 * N * A);
                    BQF form{N * A, -B, C};
                    bool matched = false;
                    for (const auto& pt : pts)
                        if (equivalent(form, BQF{N * pt.A, -pt.B, pt.C}, N)) {
                            matched = true;
                            break;
                        }
                    CHECK(matched);
                }
            for (size_t i = 0; i < pts.size(); ++i)
                for (size_t j = i + 1; j < pts.size(); ++j)
                    CHECK(!equivalent(BQF{N * pts[i].A, -pts[i].B, pts[i].C},
                                      BQF{N * pts[j].A, -pts[j].B, pts[j].C}, N));
        }
    }
}

TEST_CASE("principal part of the worked example") {
    weil::VVForm f = weil::plus_to_vv(gkz::paper_example_g(24));
    auto pts = lift::enumerate_poles(f, Rat(3, 4), 1);
    REQUIRE(pts.size() == 1);
    lift::PoleData pd = lift::principal_part(f, 2, 1, pts[0]);
    CHECK(pd.order == 3);
    REQUIRE(pd.contributions.size() == 1);
    CHECK(pd.contributions[0].first == 1);
    CHECK(pd.contributions[0].second == Rat(1));
    // measured lead of 384 E6 Delta/E4^3: (9/4) sqrt(3) / pi^3
    CHECK(pd.lead.rat == Rat(9, 4));
    CHECK(pd.lead.radicand == 3);
    CHECK(pd.lead.pi_power == -3);
    CHECK(pd.lead.i_power == 0);
    // doubling the input doubles the lead
    weil::VVForm f2 = f;
    for (auto& [d, s] : f2.comps) s = s * Rat(2);
    lift::PoleData pd2 = lift::principal_part(f2, 2, 1, lift::enumerate_poles(f2, Rat(3, 4), 1)[0]);
    CHECK(pd2.lead.rat == pd.lead.rat * Rat(2));
    // positive for even m with positive coefficient
    CHECK(pd.lead.rat.sign() > 0);
}

TEST_CASE("principal part lead transports correctly across equivalent forms") {
    weil::VVForm f = vv_single_pole(16);
    lift::HeegnerPoint p1;
    p1.N = 1;
    p1.n = Rat(4);
    p1.A = 1;
    p1.B = 0;
    p1.C = 4;
    lift::HeegnerPoint p2 = p1;
    p2.A = 4;
    p2.C = 1;
    auto d1 = lift::principal_part(f, 2, 1, p1);
    auto d2 = lift::principal_part(f, 2, 1, p2);
    // (1,0,4) and (4,0,1) are SL2-equivalent; lead scales by (A1/A2)^{m+1}
    CHECK(d2.lead.rat * Rat(4).pow(3) == d1.lead.rat * Rat(1));
    CHECK(d1.lead.radicand == d2.lead.radicand);
    // same-A equivalent pair (1,1,1) vs (1,-1,1) has identical leads
    weil::VVForm g = vv_single_pole(3);
    lift::HeegnerPoint q1;
    q1.N = 1;
    q1.n = Rat(3, 4);
    q1.A = 1;
    q1.B = 1;
    q1.C = 1;
    lift::HeegnerPoint q2 = q1;
    q2.B = -1;
    auto e1 = lift::principal_part(g, 2, 1, q1);
    auto e2 = lift::principal_part(g, 2, 1, q2);
    CHECK(e1.lead.rat == e2.lead.rat);
    CHECK(e1.lead.radicand == e2.lead.radicand);
}

TEST_CASE("principal part throws when every ladder coefficient vanishes") {
    weil::VVForm f = vv_single_pole(3);
    lift::HeegnerPoint pt;
    pt.N = 1;
    pt.n = Rat(1); // disc -4: no coefficient there
    pt.A = 1;
    pt.B = 0;
    pt.C = 1;
    CHECK_THROWS_AS(lift::principal_part(f, 2, 1, pt), NotAPole);
}

TEST_CASE("full lift folds ladders onto primitive points") {
    // a form with poles q^{-4} and q^{-16}: the disc -16 ladder lands on
    // the disc -4 point i with rungs k = 1 and k = 2
    QExpansion s(1, 25);
    s.set(-4, Rat(1));
    s.set(-16, Rat(5));
    // fill to a consistent plus form by clearing the obstruction-free tail
    weil::VVForm f = weil::plus_to_vv(weil::PlusForm(2, s));
    lift::LiftResult r = lift::lift(f, 2, 1, 6);
    // points: disc -4 (i) and disc -64's primitive classes
    bool found_i = false;
    for (const auto& pd : r.poles) {
        if (pd.point.A == 1 && pd.point.B == 0 && pd.point.C == 1) {
            found_i = true;
            REQUIRE(pd.contributions.size() == 2);
            CHECK(pd.contributions[0].first == 1);
            CHECK(pd.contributions[0].second == Rat(1));
            CHECK(pd.contributions[1].first == 2);
            CHECK(pd.contributions[1].second == Rat(5));
        }
    }
    CHECK(found_i);
    CHECK(!r.constant_unknown);
    // m = 0 marks the undetermined constant
    QExpansion s0(1, 2);
    s0.set(-4, Rat(1));
    weil::VVForm f0 = weil::plus_to_vv(weil::PlusForm(0, s0));
    CHECK(lift::lift(f0, 0, 1, 3).constant_unknown);
}

TEST_CASE("echelon basis of level-one modular forms") {
    CHECK(lift::dim_modular_forms_level1(0) == 1);
    CHECK(lift::dim_modular_forms_level1(2) == 0);
    CHECK(lift::dim_modular_forms_level1(12) == 2);
    CHECK(lift::dim_cusp_forms_level1(6) == 0);
    CHECK(lift::dim_cusp_forms_level1(12) == 1);
    CHECK(lift::dim_cusp_forms_level1(18) == 1);
    CHECK(lift::dim_cusp_forms_level1(24) == 2);
    auto b12 = lift::echelon_basis_level1(12, 10);
    REQUIRE(b12.size() == 2);
    CHECK(b12[0].coeff(0, 1) == Rat(1));
    CHECK(b12[0].coeff(1, 1) == Rat(0));
    CHECK(b12[1].coeff(0, 1) == Rat(0));
    CHECK(b12[1].coeff(1, 1) == Rat(1));
    CHECK(b12[1].coeff(2, 1) == Rat(-24)); // the echelonized cusp form is Delta
}

TEST_CASE("certificate for E6 with no poles") {
    long prec = 12;
    QExpansion e6 = classical::eisenstein(6, prec);
    auto cert = lift::clear_poles_certificate(e6, 6, {}, prec);
    CHECK(cert.weight == 6);
    CHECK(cert.e4_power == 0);
    CHECK(cert.e6_power == 0);
    REQUIRE(cert.coords.size() == 1);
    CHECK(cert.coords[0] == Rat(1));
}

TEST_CASE("certificate rejects non-modular input") {
    QExpansion junk(1, 12);
    junk.set(1, Rat(1));
    junk.set(2, Rat(17));
    junk.set(3, Rat(-5));
    CHECK_THROWS_AS(lift::clear_poles_certificate(junk, 12, {}, 12), NotModular);
}

TEST_CASE("certificate for the lift of q^{-4}: product with E6^3 in M_24") {
    weil::PlusForm g = gkz::basis_form(2, 4, 40);
    long R = 26;
    weil::PlusForm gput = gkz::basis_form(2, 4, R * R + 4);
    weil::VVForm f = weil::plus_to_vv(gput);
    lift::LiftResult r = lift::lift(f, 2, 1, R);
    auto cert = lift::clear_poles_certificate(r.positive_part, 6, r.poles, R);
    CHECK(cert.e6_power == 3);
    CHECK(cert.e4_power == 0);
    CHECK(cert.weight == 24);
    (void)g;
}

TEST_SUITE_END();
