#include "gkzlift/lift.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <queue>
#include <set>

#include "gkzlift/classical.hpp"
#include "gkzlift/errors.hpp"

namespace gkzlift::lift {

long BQF::content() const { return std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c)); }

BQF apply_sl2(const BQF& f, long p, long q, long r, long s) {
    // (Q o g)(x,y) = Q(px+qy, rx+sy)
    long a2 = f.a * p * p + f.b * p * r + f.c * r * r;
    long b2 = 2 * f.a * p * q + f.b * (p * s + q * r) + 2 * f.c * r * s;
    long c2 = f.a * q * q + f.b * q * s + f.c * s * s;
    return {a2, b2, c2};
}

BQF reduce_sl2(const BQF& f0) {
    BQF f = f0;
    for (;;) {
        if (f.b > f.a || f.b <= -f.a) {
            long k = 0;
            long twoa = 2 * f.a;
            k = -(f.b / twoa);
            while (f.b + twoa * k > f.a) --k;
            while (f.b + twoa * k <= -f.a) ++k;
            f = apply_sl2(f, 1, k, 0, 1);
        }
        if (f.a > f.c) {
            f = apply_sl2(f, 0, -1, 1, 0); // (a,b,c) -> (c,-b,a)
            continue;
        }
        break;
    }
    if (f.a == f.c && f.b < 0) f.b = -f.b;
    return f;
}

namespace {

// T-translations normalize b into (-a, a]; interleave V_N descents that
// shrink the coefficients so equivalent forms funnel into the same region
BQF gamma0_normalize(BQF f, long N) {
    auto weight = [](const BQF& g) { return std::abs(g.a) + std::abs(g.b) + std::abs(g.c); };
    for (int guard = 0; guard < 256; ++guard) {
        if (f.b > f.a || f.b <= -f.a) {
            long twoa = 2 * f.a;
            long k = -(f.b / twoa);
            while (f.b + twoa * k > f.a) --k;
            while (f.b + twoa * k <= -f.a) ++k;
            f = apply_sl2(f, 1, k, 0, 1);
        }
        BQF best = f;
        const long mats[2][4] = {{1, 0, N, 1}, {1, 0, -N, 1}};
        for (const auto& mt : mats) {
            BQF h = apply_sl2(f, mt[0], mt[1], mt[2], mt[3]);
            if (weight(h) < weight(best)) best = h;
        }
        if (best == f) break;
        f = best;
    }
    return f;
}

// bounded BFS over T, T^{-1}, V_N, V_N^{-1} from the normalized seed; the
// box depends only on (disc, N) so equivalent seeds explore the same region
std::set<BQF> gamma0_orbit_slice(const BQF& f0, long N, size_t cap) {
    BQF f = gamma0_normalize(f0, N);
    std::set<BQF> seen;
    std::queue<BQF> work;
    long bound = 64 * (std::abs(f.disc()) + 4) * std::max<long>(N, 1);
    seen.insert(f);
    work.push(f);
    while (!work.empty() && seen.size() < cap) {
        BQF g = work.front();
        work.pop();
        const long mats[4][4] = {{1, 1, 0, 1}, {1, -1, 0, 1}, {1, 0, N, 1}, {1, 0, -N, 1}};
        for (const auto& mt : mats) {
            BQF h = apply_sl2(g, mt[0], mt[1], mt[2], mt[3]);
            if (std::abs(h.a) > bound || std::abs(h.b) > bound || std::abs(h.c) > bound) continue;
            if (seen.insert(h).second) work.push(h);
        }
    }
    return seen;
}

} // namespace

BQF reduce_gamma0(const BQF& f, long N) {
    if (N == 1) return reduce_sl2(f);
    auto orbit = gamma0_orbit_slice(f, N, 20000);
    return *orbit.begin();
}

bool gamma0_equivalent(const BQF& f, const BQF& g, long N) {
    if (f.disc() != g.disc()) return false;
    if (N == 1) return reduce_sl2(f) == reduce_sl2(g);
    auto of = gamma0_orbit_slice(f, N, 20000);
    if (of.count(gamma0_normalize(g, N))) return true;
    auto og = gamma0_orbit_slice(g, N, 20000);
    for (const auto& h : of)
        if (og.count(h)) return true;
    return false;
}

QExpansion lift_positive_part(const weil::VVForm& f, long m, long N, long R) {
    if (f.weight2 != 1 - 2 * m) throw WeightMismatch("lift: input must have weight 1/2 - m");
    if (f.rep != weil::Rep::rho) throw RepMismatch("lift: input must transform under rho");
    if (f.N != N) throw LevelMismatch("lift: level mismatch");
    QExpansion out(1, R + 1);
    for (long r = 1; r <= R; ++r) {
        Rat s(0);
        for (long d = 1; d <= r; ++d) {
            if (r % d != 0) continue;
            Rat c = f.coeff(d, d * d, 4 * N);
            if (c.is_zero()) continue;
            s += Rat(mpz_class(d)).pow(m + 1) * c;
        }
        if (!s.is_zero()) out.set(r, s * Rat(r).pow(m) / Rat(N).pow(m));
    }
    return out;
}

std::vector<HeegnerPoint> enumerate_poles(const weil::VVForm& f, const Rat& n, long N) {
    Rat dq = n * Rat(4 * N);
    if (!dq.is_integer() || dq.sign() <= 0)
        throw std::invalid_argument("enumerate_poles: 4Nn must be a positive integer");
    long Dq = static_cast<long>(dq.num().get_si());
    std::vector<HeegnerPoint> out;
    std::set<BQF> reps;
    // every class has a T-normalized representative with |B| <= NA; the
    // A window is generous for desk-scale discriminants
    long acap = std::max<long>(2 * Dq, 4);
    for (long A = 1; N * A <= acap; ++A) {
        for (long B = -N * A + 1; B <= N * A; ++B) {
            long t = B * B + Dq; // = 4NAC
            if (t % (4 * N * A) != 0) continue;
            long C = t / (4 * N * A);
            BQF red = reduce_gamma0(BQF{N * A, -B, C}, N); // root (B + i sqrt(Dq)) / (2NA)
            if (!reps.insert(red).second) continue;
            if (red.a % N != 0) continue; // orbit slice must stay in the level-N family
            HeegnerPoint pt;
            pt.N = N;
            pt.n = n;
            pt.A = red.a / N;
            pt.B = -red.b;
            pt.C = red.c;
            pt.gamma = ((pt.B % (2 * N)) + 2 * N) % (2 * N);
            pt.matched_c = f.coeff(pt.gamma, -Dq, 4 * N);
            if (pt.matched_c.is_zero()) continue;
            out.push_back(pt);
        }
    }
    std::sort(out.begin(), out.end(), [](const HeegnerPoint& p, const HeegnerPoint& q) {
        if (p.A != q.A) return p.A < q.A;
        if (p.B != q.B) return p.B < q.B;
        return p.C < q.C;
    });
    return out;
}

double ExactReal::to_double() const {
    double v = rat.to_double() * std::sqrt(static_cast<double>(radicand));
    v *= std::pow(std::numbers::pi, static_cast<double>(pi_power));
    return v; // i_power handled by the caller when nonzero
}

PoleData principal_part(const weil::VVForm& f, long m, long N, const HeegnerPoint& point) {
    PoleData pd;
    pd.point = point;
    pd.order = m + 1;
    long Dq = point.Dq();
    // ladder bound: need c_{kB, -k^2 n} with k^2 Dq within f's known support
    long max_neg = 0;
    for (const auto& [d, s] : f.comps) {
        if (s.terms().empty()) continue;
        long lead = s.terms().begin()->first; // scaled by s.den()
        if (lead < 0) max_neg = std::max(max_neg, ((-lead) * (4 * N) + s.den() - 1) / s.den());
    }
    long kmax = 1;
    while (kmax * kmax * Dq <= max_neg) ++kmax;
    Rat sum_km(0);
    for (long k = 1; k <= kmax; ++k) {
        Rat c = f.coeff(k * point.B, -k * k * Dq, 4 * N);
        if (c.is_zero()) continue;
        pd.contributions.emplace_back(k, c);
        sum_km += c * Rat(k).pow(m);
    }
    if (pd.contributions.empty()) throw NotAPole("principal_part: all ladder contributions vanish");

    // lead = i^{m+2} m! (2t)^{m+1} * 2 * 4^m * sum_k c_k k^m (n/N)^{m/2} / (4 pi)^{m+1}
    // with t = sqrt(Dq)/(2NA); the sqrt(Dq) powers combine to Dq^m sqrt(Dq).
    Rat fact(1);
    for (long i = 2; i <= m; ++i) fact *= Rat(i);
    Rat rat = fact * Rat(2).pow(m + 2) * Rat(4).pow(m) * Rat(Dq).pow(m) * sum_km;
    rat /= Rat(2 * N * point.A).pow(m + 1) * Rat(4).pow(m + 1) * Rat(2 * N).pow(m);
    // split sqrt(Dq) = s sqrt(r), r squarefree
    long r = Dq, s = 1;
    for (long p = 2; p * p <= r; ++p) {
        while (r % (p * p) == 0) {
            r /= p * p;
            s *= p;
        }
    }
    rat *= Rat(s);
    int ip = static_cast<int>((m + 2) % 4);
    if (ip >= 2) {
        rat = -rat;
        ip -= 2;
    }
    pd.lead = ExactReal{rat, r, -(m + 1), ip};
    return pd;
}

LiftResult lift(const weil::VVForm& f, long m, long N, long R) {
    LiftResult res;
    res.m = m;
    res.N = N;
    res.positive_part = lift_positive_part(f, m, N, R);
    res.constant_unknown = (m == 0);
    // collect pole points from every negative exponent, deduping ladder
    // images onto their primitive class
    std::set<Rat> neg_n;
    for (const auto& [d, s] : f.comps)
        for (const auto& [e, c] : s.terms()) {
            if (e >= 0) break;
            neg_n.insert(Rat(-e, s.den()));
        }
    std::set<BQF> prim_seen;
    for (const Rat& n : neg_n) {
        for (const auto& pt : enumerate_poles(f, n, N)) {
            BQF form{N * pt.A, -pt.B, pt.C};
            long g = form.content();
            BQF key = reduce_gamma0(BQF{form.a / g, form.b / g, form.c / g}, N);
            if (!prim_seen.insert(key).second) continue;
            if (key.a % N != 0) continue;
            // the primitive point carries the whole ladder
            HeegnerPoint base;
            base.N = N;
            base.A = key.a / N;
            base.B = -key.b;
            base.C = key.c;
            base.n = n / Rat(g * g);
            base.gamma = ((base.B % (2 * N)) + 2 * N) % (2 * N);
            base.matched_c = f.coeff(base.gamma, -base.Dq(), 4 * N);
            res.poles.push_back(principal_part(f, m, N, base));
        }
    }
    std::sort(res.poles.begin(), res.poles.end(), [](const PoleData& p, const PoleData& q) {
        if (p.point.A != q.point.A) return p.point.A < q.point.A;
        if (p.point.B != q.point.B) return p.point.B < q.point.B;
        return p.point.C < q.point.C;
    });
    return res;
}

std::vector<std::pair<long, long>> monomial_exponents(long weight) {
    std::vector<std::pair<long, long>> out;
    for (long b = 0; 6 * b <= weight; ++b) {
        long rem = weight - 6 * b;
        if (rem % 4 == 0) out.emplace_back(rem / 4, b);
    }
    return out;
}

long dim_modular_forms_level1(long weight) {
    if (weight < 0 || weight % 2 != 0) return 0;
    return static_cast<long>(monomial_exponents(weight).size());
}

long dim_cusp_forms_level1(long weight) {
    long d = dim_modular_forms_level1(weight);
    return weight >= 4 ? std::max<long>(0, d - 1) : 0;
}

std::vector<QExpansion> echelon_basis_level1(long weight, long prec) {
    auto mons = monomial_exponents(weight);
    std::vector<QExpansion> rows;
    QExpansion e4 = classical::eisenstein(4, prec);
    QExpansion e6 = classical::eisenstein(6, prec);
    for (auto [a, b] : mons) {
        QExpansion v = QExpansion::one().truncated(prec);
        for (long i = 0; i < a; ++i) v = v * e4;
        for (long i = 0; i < b; ++i) v = v * e6;
        rows.push_back(v);
    }
    // Gaussian elimination to leading exponents 0, 1, 2, ...
    std::vector<QExpansion> basis;
    for (long pivot = 0; pivot < static_cast<long>(mons.size()); ++pivot) {
        long idx = -1;
        for (size_t i = 0; i < rows.size(); ++i)
            if (!rows[i].coeff(pivot).is_zero()) {
                idx = static_cast<long>(i);
                break;
            }
        if (idx < 0) continue;
        QExpansion piv = rows[static_cast<size_t>(idx)] * rows[static_cast<size_t>(idx)].coeff(pivot).inverse();
        rows.erase(rows.begin() + idx);
        for (auto& r : rows) {
            Rat c = r.coeff(pivot);
            if (!c.is_zero()) r = r - piv * c;
        }
        for (auto& b : basis) {
            Rat c = b.coeff(pivot);
            if (!c.is_zero()) b = b - piv * c;
        }
        basis.push_back(piv);
    }
    return basis;
}

Certificate clear_poles_certificate(const QExpansion& G, long weight,
                                    const std::vector<PoleData>& poles, long prec) {
    long a = 0, b = 0;
    for (const auto& pd : poles) {
        BQF form{pd.point.N * pd.point.A, -pd.point.B, pd.point.C};
        long g = form.content();
        long disc = form.disc() / (g * g); // discriminant of the underlying point
        if (disc == -3)
            a = std::max(a, pd.order);
        else if (disc == -4)
            b = std::max(b, pd.order);
        else
            throw IrrationalJ("clear_poles_certificate: pole discriminant outside {-3,-4}");
    }
    Certificate cert;
    cert.weight = weight + 4 * a + 6 * b;
    cert.e4_power = a;
    cert.e6_power = b;
    QExpansion prod = G;
    QExpansion e4 = classical::eisenstein(4, prec);
    QExpansion e6 = classical::eisenstein(6, prec);
    for (long i = 0; i < a; ++i) prod = prod * e4;
    for (long i = 0; i < b; ++i) prod = prod * e6;
    cert.product = prod;
    auto basis = echelon_basis_level1(cert.weight, prec);
    long dim = static_cast<long>(basis.size());
    long sturm = cert.weight / 12 + 2;
    if (prod.prec() < std::min(prec, dim + sturm))
        throw std::invalid_argument("clear_poles_certificate: not enough coefficients");
    QExpansion rem = prod;
    for (long i = 0; i < dim; ++i) {
        Rat c = rem.coeff(i);
        cert.coords.push_back(c);
        if (!c.is_zero()) rem = rem - basis[static_cast<size_t>(i)] * c;
    }
    // every remaining known coefficient must vanish
    long verified = std::min(rem.prec(), prec);
    for (const auto& [e, c] : rem.terms()) {
        if (e >= verified) break;
        if (!c.is_zero()) throw NotModular("clear_poles_certificate: product is not modular", e);
    }
    cert.verified_to = verified;
    return cert;
}

} // namespace gkzlift::lift
