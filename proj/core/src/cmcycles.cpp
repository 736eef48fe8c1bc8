#include "gkzlift/cmcycles.hpp"

#include <numeric>

#include "gkzlift/errors.hpp"

namespace gkzlift::cm {

namespace {

void require_same_field(long d1, long d2) {
    if (d1 != d2) throw NoSolution("quadratic elements live in different fields");
}

// squarefree core s and cofactor f with n = s f^2
std::pair<long, long> core(long n) {
    long m = n < 0 ? -n : n, s = 1, f = 1;
    for (long p = 2; p * p <= m; ++p) {
        while (m % (p * p) == 0) {
            m /= p * p;
            f *= p;
        }
        if (m % p == 0) {
            s *= p;
            m /= p;
        }
    }
    s *= m;
    if (n < 0) s = -s;
    return {s, f};
}

CMPoint normalized(const CMPoint& t) {
    auto [s, f] = core(t.D);
    return CMPoint{t.x, t.yc * Rat(f), s};
}

} // namespace

QuadElem operator+(const QuadElem& a, const QuadElem& b) {
    if (a.is_rational()) return {a.u + b.u, b.v, b.d};
    if (b.is_rational()) return {a.u + b.u, a.v, a.d};
    require_same_field(a.d, b.d);
    return {a.u + b.u, a.v + b.v, a.d};
}

QuadElem operator-(const QuadElem& a, const QuadElem& b) { return a + (b * Rat(-1)); }

QuadElem operator*(const QuadElem& a, const QuadElem& b) {
    if (a.is_rational()) return {a.u * b.u, a.u * b.v, b.d};
    if (b.is_rational()) return {a.u * b.u, a.v * b.u, a.d};
    require_same_field(a.d, b.d);
    return {a.u * b.u + a.v * b.v * Rat(a.d), a.u * b.v + a.v * b.u, a.d};
}

bool operator==(const QuadElem& a, const QuadElem& b) {
    if (a.u != b.u) return false;
    if (a.v.is_zero() && b.v.is_zero()) return true;
    return a.d == b.d && a.v == b.v;
}

QuadElem QuadElem::inverse() const {
    Rat nrm = u * u - v * v * Rat(d);
    if (nrm.is_zero()) throw LeadingZero("QuadElem: not invertible");
    Rat inv = nrm.inverse();
    return {u * inv, -v * inv, d};
}

std::string QuadElem::str() const {
    if (v.is_zero()) return u.str();
    std::string s = v.str() + "*sqrt(" + std::to_string(d) + ")";
    if (u.is_zero()) return s;
    return u.str() + (v.sign() >= 0 ? "+" : "") + s;
}

Slope Slope::of_rational(const Rat& L) {
    Slope s;
    s.kind = Kind::real;
    s.real = QuadElem(L);
    return s;
}

Slope Slope::of_real_quadratic(const QuadElem& v) {
    Slope s;
    s.kind = Kind::real;
    s.real = v;
    return s;
}

Slope Slope::of_point(const CMPoint& p) {
    Slope s;
    s.kind = Kind::complex_quad;
    s.point = p;
    return s;
}

WedgeForm operator+(const WedgeForm& a, const WedgeForm& b) {
    WedgeForm r;
    for (int i = 0; i < 6; ++i) r.w[i] = a.w[i] + b.w[i];
    return r;
}

WedgeForm operator-(const WedgeForm& a, const WedgeForm& b) {
    WedgeForm r;
    for (int i = 0; i < 6; ++i) r.w[i] = a.w[i] - b.w[i];
    return r;
}

WedgeForm WedgeForm::operator*(const QuadElem& c) const {
    WedgeForm r;
    for (int i = 0; i < 6; ++i) r.w[i] = w[i] * c;
    return r;
}

bool operator==(const WedgeForm& a, const WedgeForm& b) {
    for (int i = 0; i < 6; ++i)
        if (!(a.w[i] == b.w[i])) return false;
    return true;
}

// generator table in the ordered basis (ab, ac, ad, bc, bd, cd):
//   iota(0,-1;0,0) = d^c,  iota(1,0;0,-1) = a^d - b^c,  iota(0,0;1,0) = b^a
//   itld(0,-1;0,0) = c^a,  itld(1,0;0,-1) = d^a + c^b,  itld(0,0;1,0) = d^b
WedgeForm iota(const Traceless& b) {
    WedgeForm r;
    r.w[0] = b.r * Rat(-1); // ab
    r.w[2] = b.p;           // ad
    r.w[3] = b.p * Rat(-1); // bc
    r.w[5] = b.q;           // cd
    return r;
}

WedgeForm itilde(const Traceless& b) {
    WedgeForm r;
    r.w[1] = b.q;           // ac
    r.w[2] = b.p * Rat(-1); // ad
    r.w[3] = b.p * Rat(-1); // bc
    r.w[4] = b.r * Rat(-1); // bd
    return r;
}

WedgeForm iota_checked(const QuadElem& m11, const QuadElem& m12, const QuadElem& m21,
                       const QuadElem& m22, bool tilde) {
    if (!(m11 + m22).is_zero()) throw NotTraceless("iota: argument must be traceless");
    Traceless t{m11, m12, m21};
    return tilde ? itilde(t) : iota(t);
}

QuadElem cup(const WedgeForm& w1, const WedgeForm& w2, const Rat& discI) {
    // ab^cd = +, ac^bd = -, ad^bc = + (both orders)
    QuadElem c = w1.w[0] * w2.w[5] + w1.w[5] * w2.w[0];
    c = c - (w1.w[1] * w2.w[4] + w1.w[4] * w2.w[1]);
    c = c + (w1.w[2] * w2.w[3] + w1.w[3] * w2.w[2]);
    return c * discI;
}

CMPoint moebius(const Mat2& g, const CMPoint& tau) {
    Rat cx_d = Rat(g.c) * tau.x + Rat(g.d);
    Rat denom = cx_d * cx_d + Rat(g.c * g.c) * tau.ysq();
    if (denom.is_zero()) throw DegenerateGamma("moebius: denominator vanishes");
    Rat ax_b = Rat(g.a) * tau.x + Rat(g.b);
    Rat nx = (ax_b * cx_d + Rat(g.a * g.c) * tau.ysq()) / denom;
    Rat nyc = tau.yc * Rat(g.det()) / denom;
    return {nx, nyc, tau.D};
}

bool is_cm_point(const CMPoint& tau, const AlgebraDescriptor& alg) {
    if (!alg.split) throw UnsupportedAlgebra("is_cm_point: only the split algebra is implemented");
    return !tau.yc.is_zero();
}

SlopeKind classify_slope(const Slope& tau0, const CMPoint& tau, const AlgebraDescriptor& alg) {
    if (!alg.split) throw UnsupportedAlgebra("classify_slope: only the split algebra is implemented");
    switch (tau0.kind) {
        case Slope::Kind::infinite:
            return SlopeKind::generic;
        case Slope::Kind::real:
            return tau0.real.is_rational() ? SlopeKind::generic : SlopeKind::none;
        case Slope::Kind::complex_quad: {
            if (tau.yc.is_zero()) return SlopeKind::none;
            CMPoint a = normalized(tau0.point), b = normalized(tau);
            return a.D == b.D ? SlopeKind::cm : SlopeKind::none;
        }
    }
    return SlopeKind::none;
}

Mat2 find_gamma(const CMPoint& tau_in, const CMPoint& tau0_in) {
    CMPoint tau = normalized(tau_in), tau0 = normalized(tau0_in);
    if (tau.D != tau0.D || tau.yc.is_zero() || tau0.yc.is_zero())
        throw NoSolution("find_gamma: points must lie in the same imaginary quadratic field");
    // the (c,d) = (0,1) solution of a tau + b = tau0 (c tau + d)
    Rat a = tau0.yc / tau.yc;
    Rat b = tau0.x - a * tau.x;
    mpz_class den = lcm(a.den(), b.den());
    mpz_class A = a.num() * (den / a.den());
    mpz_class B = b.num() * (den / b.den());
    mpz_class g = gcd(gcd(A, B), den);
    A /= g;
    B /= g;
    den /= g;
    return Mat2{static_cast<long>(A.get_si()), static_cast<long>(B.get_si()), 0,
                static_cast<long>(den.get_si())};
}

FundamentalClass fundamental_class(const CMPoint& tau0_in, const CMPoint& tau_in, const Mat2& gamma,
                                   const CMPoint& ttilde_in, const Rat& discI) {
    if (gamma.a == 0 && gamma.b == 0 && gamma.c == 0 && gamma.d == 0)
        throw DegenerateGamma("fundamental_class: gamma is zero");
    if (gamma.det() == 0) throw DegenerateGamma("fundamental_class: gamma has determinant zero");
    CMPoint tau0 = normalized(tau0_in), tau = normalized(tau_in), ttilde = normalized(ttilde_in);
    if (tau0.yc.is_zero()) throw SlopeMismatch("fundamental_class: tau0 is real; use the generic routine");
    if (tau0.D != tau.D || ttilde.D != tau.D) throw SlopeMismatch("fundamental_class: field mismatch");
    CMPoint image = moebius(gamma, tau);
    if (!(image.x == tau0.x) || !(image.yc == tau0.yc))
        throw SlopeMismatch("fundamental_class: gamma tau != tau0");
    long D = tau.D;

    // relations (a b) = (c d) S with S = x0 I + y0 J_tau, rational
    Rat ratio = tau0.yc / tau.yc; // y0 / y
    Rat s11 = tau0.x + ratio * tau.x;
    Rat s12 = -(ratio * tau.norm());
    Rat s21 = ratio;
    Rat s22 = tau0.x - ratio * tau.x;
    Rat detS = tau0.norm();

    // base integral of d^c over the cycle: v = det gamma Im(ttilde)/y0
    Rat v = Rat(gamma.det()) * ttilde.yc / tau0.yc;
    Rat vd = v / discI;

    FundamentalClass fc;
    fc.form.w[0] = QuadElem(-vd);        // ab   from b^a
    fc.form.w[5] = QuadElem(-detS * vd); // cd   from detS d^c
    fc.form.w[1] = QuadElem(s12 * vd);   // ac   from -s12 c^a
    fc.form.w[4] = QuadElem(-s21 * vd);  // bd   from +s21 d^b
    fc.form.w[2] = QuadElem(s22 * vd);   // ad   from -s22 d^a
    fc.form.w[3] = QuadElem(-s11 * vd);  // bc   from +s11 c^b

    // scale (iota(J_tau0) + itilde(J_tau)) presentation; scale = beta sqrt(D)
    fc.scale = QuadElem(Rat(0), Rat(gamma.det()) * ttilde.yc / (tau0.yc * discI), D);
    auto jmat = [D](const CMPoint& t) {
        // J_t = (1/y)(x, -|t|^2; 1, -x); 1/y = sqrt(D)/(yc D)
        Rat inv_ycD = (t.yc * Rat(D)).inverse();
        return Traceless{QuadElem(Rat(0), t.x * inv_ycD, D),
                         QuadElem(Rat(0), -t.norm() * inv_ycD, D),
                         QuadElem(Rat(0), inv_ycD, D)};
    };
    fc.iota_arg = jmat(tau0);
    fc.itilde_arg = jmat(tau);
    fc.has_itilde = true;
    WedgeForm check = (iota(fc.iota_arg) + itilde(fc.itilde_arg)) * fc.scale;
    if (!(check == fc.form)) throw std::logic_error("fundamental_class: presentations disagree");
    return fc;
}

FundamentalClass fundamental_class_generic(const std::optional<Rat>& slope, const Rat& base_integral,
                                           const Rat& discI) {
    FundamentalClass fc;
    fc.has_itilde = false;
    fc.itilde_arg = Traceless{};
    Rat vd = base_integral / discI;
    if (slope) {
        const Rat& L = *slope;
        fc.iota_arg = Traceless{QuadElem(L), QuadElem(-(L * L)), QuadElem(Rat(1))};
    } else {
        // infinite slope: the |tau0|^2-normalized limit leaves only d^c
        fc.iota_arg = Traceless{QuadElem(Rat(0)), QuadElem(Rat(-1)), QuadElem(Rat(0))};
    }
    fc.scale = QuadElem(vd);
    fc.form = iota(fc.iota_arg) * fc.scale;
    return fc;
}

CMPoint split_ttilde(const CMPoint& tau0_in, const CMPoint& tau_in, const Mat2& gamma, long N) {
    CMPoint tau = normalized(tau_in), tau0 = normalized(tau0_in);
    if (tau.D != tau0.D || tau.yc.is_zero() || tau0.yc.is_zero())
        throw NoSolution("split_ttilde: points must lie in the same imaginary quadratic field");
    long D = tau.D;
    // delta(c,d) = (a(c,d), b(c,d); c, d) maps (tau;1) into C (tau0;1):
    //   a = (y0c (c x + d) + x0 c yc)/yc
    //   b = x0 (c x + d) + y0c yc D c - a x      [Re of tau0 (c tau + d) - a tau]
    auto acoef = [&](const Rat& c, const Rat& d) {
        return (tau0.yc * (c * tau.x + d) + tau0.x * c * tau.yc) / tau.yc;
    };
    auto bcoef = [&](const Rat& c, const Rat& d, const Rat& a) {
        return tau0.x * (c * tau.x + d) - tau0.yc * tau.yc * Rat(D) * c - a * tau.x;
    };
    auto in_lattice = [&](long c, long d) {
        if (c % N != 0) return false;
        Rat a = acoef(Rat(c), Rat(d));
        if (!a.is_integer()) return false;
        return bcoef(Rat(c), Rat(d), a).is_integer();
    };
    Rat a10 = acoef(Rat(1), Rat(0)), a01 = acoef(Rat(0), Rat(1));
    Rat b10 = bcoef(Rat(1), Rat(0), a10), b01 = bcoef(Rat(0), Rat(1), a01);
    mpz_class Q = lcm(lcm(a10.den(), a01.den()), lcm(b10.den(), b01.den()));
    long q = static_cast<long>(Q.get_si());
    // HNF basis {(c1, d1), (0, d2)} of the (c, d) lattice
    long d2 = 0;
    for (long d = 1; d <= q && d2 == 0; ++d)
        if (in_lattice(0, d)) d2 = d;
    long c1 = 0, d1 = 0;
    for (long c = N; c <= q * N && c1 == 0; c += N)
        for (long d = 0; d < d2; ++d)
            if (in_lattice(c, d)) {
                c1 = c;
                d1 = d;
                break;
            }
    if (d2 == 0 || c1 == 0) throw NoSolution("split_ttilde: lattice search failed");
    if (!in_lattice(gamma.c, gamma.d))
        throw NoSolution("split_ttilde: gamma is not a lattice element");
    // gamma's period in HNF coordinates: (c,d) = m (c1,d1) + n (0,d2)
    if (gamma.c % c1 != 0) throw NoSolution("split_ttilde: gamma period is not primitive");
    long mco = gamma.c / c1;
    long rest = gamma.d - mco * d1;
    if (rest % d2 != 0) throw NoSolution("split_ttilde: gamma period outside the lattice");
    long nco = rest / d2;
    if (std::gcd(std::labs(mco), std::labs(nco)) != 1)
        throw NoSolution("split_ttilde: gamma period is imprimitive in the cycle lattice");
    // complement (u, t) with mco t - nco u = 1, by extended Euclid
    long x0 = 1, y0 = 0, x1 = 0, y1 = 1, aa = mco, bb = nco;
    while (bb != 0) {
        long qq = aa / bb;
        std::tie(aa, bb) = std::make_pair(bb, aa - qq * bb);
        std::tie(x0, x1) = std::make_pair(x1, x0 - qq * x1);
        std::tie(y0, y1) = std::make_pair(y1, y0 - qq * y1);
    }
    if (aa < 0) {
        aa = -aa;
        x0 = -x0;
        y0 = -y0;
    }
    long t = x0, u = -y0; // mco x0 + nco y0 = 1
    long wc = u * c1, wd = u * d1 + t * d2;
    // ttilde = omega2 / omega1 in Q(sqrt(-D)), oriented to the upper plane
    QuadElem om1(Rat(gamma.c) * tau.x + Rat(gamma.d), Rat(gamma.c) * tau.yc, -D);
    QuadElem om2(Rat(wc) * tau.x + Rat(wd), Rat(wc) * tau.yc, -D);
    if (om1.is_zero()) throw DegenerateGamma("split_ttilde: j(gamma, tau) = 0");
    QuadElem ratio = om2 * om1.inverse();
    CMPoint tt{ratio.u, ratio.v, D};
    if (tt.yc.sign() < 0) tt = CMPoint{-tt.x, -tt.yc, tt.D};
    return tt;
}

FundamentalClass cycle_psi(long L, const CMPoint& tau, long N) {
    // gamma = (0, L; 0, 1): j = 1, ttilde = N tau, so the base integral is N
    (void)tau;
    return fundamental_class_generic(Rat(L), Rat(N), Rat(N));
}

FundamentalClass cycle_phi(long M, const CMPoint& tau, long N) {
    (void)tau;
    if (M == 0) {
        // axis E_tau x {0}: infinite slope, ttilde = tau
        return fundamental_class_generic(std::nullopt, Rat(1), Rat(N));
    }
    // gamma = (0, 1; 0, M): j = M, ttilde = tau
    Rat base = Rat(M * M);
    return fundamental_class_generic(Rat(1, M), base, Rat(N));
}

FundamentalClass cycle_cm_sqrtD(long D, long N) {
    CMPoint t{Rat(0), Rat(1), D};
    Mat2 id{1, 0, 0, 1};
    CMPoint tt = split_ttilde(t, t, id, N);
    return fundamental_class(t, t, id, tt, Rat(N));
}

} // namespace gkzlift::cm
