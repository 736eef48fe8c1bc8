#include "gkzlift/weil.hpp"

#include <cmath>
#include <numbers>

#include "gkzlift/errors.hpp"

namespace gkzlift::weil {

namespace {
cplx e_of(double x) {
    double a = 2.0 * std::numbers::pi * x;
    return {std::cos(a), std::sin(a)};
}
} // namespace

CMatrix CMatrix::identity(long n) {
    CMatrix m(n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
    CMatrix r(n);
    for (long i = 0; i < n; ++i)
        for (long k = 0; k < n; ++k) {
            cplx v = at(i, k);
            if (v == cplx{}) continue;
            for (long j = 0; j < n; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

CMatrix CMatrix::adjoint() const {
    CMatrix r(n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) r.at(i, j) = std::conj(at(j, i));
    return r;
}

double CMatrix::max_abs_diff(const CMatrix& o) const {
    double m = 0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - o.a[i]));
    return m;
}

DiscModule::DiscModule(long N_) : N(N_) {
    if (N < 1) throw BadLevel("DiscModule: N must be positive");
}

CMatrix rho_T(long N) {
    long n = 2 * N;
    CMatrix m(n);
    for (long d = 0; d < n; ++d) m.at(d, d) = e_of(static_cast<double>(d * d) / (4.0 * N));
    return m;
}

CMatrix rho_S(long N) {
    long n = 2 * N;
    CMatrix m(n);
    cplx pref = e_of(-1.0 / 8.0) / std::sqrt(static_cast<double>(n));
    for (long d = 0; d < n; ++d)
        for (long dp = 0; dp < n; ++dp)
            m.at(d, dp) = pref * e_of(-static_cast<double>(d * dp) / (2.0 * N));
    return m;
}

CMatrix rho_Z(long N) {
    long n = 2 * N;
    CMatrix m(n);
    cplx fac(0.0, -1.0); // i^{b_- - b_+} = i^{-1}
    for (long d = 0; d < n; ++d) m.at(d, (n - d) % n) = fac;
    return m;
}

VVForm::VVForm(long N_, long w2, Rep r) : N(N_), weight2(w2), rep(r) {
    if (N < 1) throw BadLevel("VVForm: N must be positive");
}

const QExpansion* VVForm::component(long d) const {
    DiscModule dm(N);
    auto it = comps.find(dm.reduce(d));
    return it == comps.end() ? nullptr : &it->second;
}

Rat VVForm::coeff(long d, long e, long den) const {
    const QExpansion* c = component(d);
    return c ? c->coeff(e, den) : Rat(0);
}

void VVForm::validate() const {
    DiscModule dm(N);
    for (const auto& [d, s] : comps) {
        if (d != dm.reduce(d)) throw std::invalid_argument("VVForm: component index out of range");
        Rat q = dm.qform(d);
        if (rep == Rep::rho_dual) q = -q;
        for (const auto& [e, c] : s.terms()) {
            // e/den - q must be integral
            Rat res = Rat(e, s.den()) - q;
            if (!res.is_integer()) throw SupportViolation("VVForm: exponent residue violates the discriminant form");
        }
    }
    // symmetry for weight 1/2 - m
    if (rep == Rep::rho && (weight2 % 2 != 0)) {
        long m = (1 - weight2) / 2;
        int sign = (m % 2 == 0) ? 1 : -1;
        for (const auto& [d, s] : comps) {
            long dneg = dm.reduce(-d);
            for (const auto& [e, c] : s.terms()) {
                Rat other = coeff(dneg, e, s.den());
                if (other != Rat(sign) * c)
                    throw SupportViolation("VVForm: c_{-d,n} = (-1)^m c_{d,n} symmetry violated");
            }
        }
    }
}

PlusForm::PlusForm(long m_, QExpansion s) : weight2(1 - 2 * m_), m(m_), series(std::move(s)) {
    validate();
}

void PlusForm::validate() const {
    if (m % 2 != 0) throw BadWeight("PlusForm: m must be even");
    if (series.den() != 1) throw SupportViolation("PlusForm: exponents must be integral");
    for (const auto& [e, c] : series.terms()) {
        long r = ((e % 4) + 4) % 4;
        if (r == 2 || r == 3) throw SupportViolation("PlusForm: coefficient at n = 2,3 mod 4");
    }
}

VVForm plus_to_vv(const PlusForm& g) {
    VVForm f(1, g.weight2, Rep::rho);
    QExpansion c0(4, g.series.prec()), c1(4, g.series.prec());
    for (const auto& [e, c] : g.series.terms()) {
        long r = ((e % 4) + 4) % 4;
        if (r == 2 || r == 3) throw SupportViolation("plus_to_vv: support condition violated");
        if (r == 0)
            c0.set(e, c); // den 4: scaled exponent e means e/4
        else
            c1.set(e, c);
    }
    f.comps[0] = c0.reduced();
    f.comps[1] = c1;
    return f;
}

PlusForm vv_to_plus(const VVForm& f) {
    if (f.N != 1) throw BadLevel("vv_to_plus: only N = 1 has a plus-space dictionary");
    long m = (1 - f.weight2) / 2;
    long prec = kInfPrec;
    QExpansion s(1, kInfPrec);
    for (const auto& [d, comp] : f.comps) {
        if (4 % comp.den() != 0) throw SupportViolation("vv_to_plus: component denominator does not divide 4");
        QExpansion a = comp.with_den(4); // exponent n/4 becomes the plus exponent n
        if (a.prec() != kInfPrec) prec = std::min(prec, a.prec());
        for (const auto& [e, c] : a.terms()) {
            long r = ((e % 4) + 4) % 4;
            long want = (d % 2 == 0) ? 0 : 1;
            if (r != want) throw SupportViolation("vv_to_plus: exponent residue mismatch");
            s.set(e, s.coeff(e, 1) + c);
        }
    }
    s.set_prec(prec);
    return PlusForm(m, s);
}

} // namespace gkzlift::weil
