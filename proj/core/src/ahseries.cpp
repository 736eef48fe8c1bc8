#include "gkzlift/ahseries.hpp"

#include <numeric>

#include "gkzlift/errors.hpp"

namespace gkzlift::ah {

long AHSeries::depth() const {
    long d = 0;
    for (const auto& [c, terms] : comps)
        for (const auto& [key, v] : terms) d = std::max(d, key.k);
    return d;
}

Rat AHSeries::coeff(long d, long e, long k) const {
    auto it = comps.find(d);
    if (it == comps.end()) return Rat(0);
    auto jt = it->second.find({e, k});
    return jt == it->second.end() ? Rat(0) : jt->second;
}

void AHSeries::set(long d, long e, long k, const Rat& c) {
    if (c.is_zero())
        comps[d].erase({e, k});
    else
        comps[d][{e, k}] = c;
    if (comps[d].empty()) comps.erase(d);
}

bool AHSeries::operator==(const AHSeries& o) const {
    return N == o.N && weight2 == o.weight2 && den == o.den && comps == o.comps;
}

AHSeries AHSeries::operator*(const Rat& c) const {
    AHSeries r = *this;
    if (c.is_zero()) {
        r.comps.clear();
        return r;
    }
    for (auto& [d, terms] : r.comps)
        for (auto& [key, v] : terms) v = v * c;
    return r;
}

AHSeries AHSeries::operator-(const AHSeries& o) const {
    AHSeries r = *this;
    for (const auto& [d, terms] : o.comps)
        for (const auto& [key, v] : terms) r.set(d, key.e, key.k, r.coeff(d, key.e, key.k) - v);
    return r;
}

weil::VVForm AHSeries::depth_zero() const {
    weil::VVForm f(N, weight2, rep);
    for (const auto& [d, terms] : comps) {
        QExpansion s(den, prec);
        for (const auto& [key, v] : terms)
            if (key.k == 0) s.set(key.e, v);
        f.comps[d] = s;
    }
    return f;
}

AHSeries AHSeries::from_vvform(const weil::VVForm& f) {
    AHSeries F;
    F.N = f.N;
    F.weight2 = f.weight2;
    F.rep = f.rep;
    long den = 1;
    long prec = kInfPrec;
    for (const auto& [d, s] : f.comps) den = std::lcm(den, s.den());
    for (const auto& [d, s] : f.comps) {
        QExpansion a = s.with_den(den);
        prec = std::min(prec, a.prec());
        for (const auto& [e, c] : a.terms()) F.set(d, e, 0, c);
    }
    F.den = den;
    F.prec = prec;
    return F;
}

AHSeries delta_op(long l2, const AHSeries& F) {
    AHSeries r;
    r.N = F.N;
    r.weight2 = F.weight2 + 4;
    r.rep = F.rep;
    r.den = F.den;
    r.prec = F.prec;
    for (const auto& [d, terms] : F.comps)
        for (const auto& [key, v] : terms) {
            Rat n(key.e, F.den);
            Rat a = r.coeff(d, key.e, key.k) + n * v;
            r.set(d, key.e, key.k, a);
            Rat b = r.coeff(d, key.e, key.k + 1) + (Rat(key.k) - Rat(l2, 2)) * v;
            r.set(d, key.e, key.k + 1, b);
        }
    return r;
}

AHSeries lower_op(const AHSeries& F) {
    AHSeries r;
    r.N = F.N;
    r.weight2 = F.weight2 - 4;
    r.rep = F.rep;
    r.den = F.den;
    r.prec = F.prec;
    for (const auto& [d, terms] : F.comps)
        for (const auto& [key, v] : terms) {
            if (key.k == 0) continue;
            r.set(d, key.e, key.k - 1, r.coeff(d, key.e, key.k - 1) + Rat(key.k) * v);
        }
    return r;
}

AHSeries laplacian(long k2, const AHSeries& F) {
    if (F.weight2 != k2) throw WeightMismatch("laplacian: series weight does not match operator weight");
    return delta_op(k2 - 4, lower_op(F));
}

AHSeries delta_power_closed(long m, const weil::VVForm& f, long bminus) {
    if (m < 0) throw std::invalid_argument("delta_power_closed: m must be >= 0");
    long expect2 = 2 - bminus - 2 * m; // 2 * (1 - b_-/2 - m)
    if (f.weight2 != expect2) throw WeightMismatch("delta_power_closed: input weight must be 1 - b_-/2 - m");
    AHSeries F = AHSeries::from_vvform(f);
    F.weight2 = expect2 + 4 * m;
    if (m == 0) return F;
    AHSeries r;
    r.N = F.N;
    r.weight2 = F.weight2;
    r.rep = F.rep;
    r.den = F.den;
    r.prec = F.prec;
    // prod_{r=0}^{k-1} (r + b_-/2), cumulative
    std::vector<Rat> prods(static_cast<size_t>(m + 1));
    prods[0] = Rat(1);
    for (long k = 1; k <= m; ++k) prods[static_cast<size_t>(k)] = prods[static_cast<size_t>(k - 1)] * (Rat(k - 1) + Rat(bminus, 2));
    for (const auto& [d, terms] : F.comps)
        for (const auto& [key, v] : terms) {
            Rat n(key.e, F.den);
            for (long k = 0; k <= m; ++k) {
                Rat c = rat_binomial(m, k) * n.pow(m - k) * prods[static_cast<size_t>(k)] * v;
                if (!c.is_zero()) r.set(d, key.e, k, c);
            }
        }
    return r;
}

Rat alt_binomial_sum(const std::vector<Rat>& p, long C) {
    auto eval = [&](long x) {
        Rat v(0);
        for (size_t i = p.size(); i-- > 0;) v = v * Rat(x) + p[i];
        return v;
    };
    Rat s(0);
    for (long j = 0; j <= C; ++j) {
        Rat term = rat_binomial(C, j) * eval(j);
        s += (j % 2 == 0) ? term : -term;
    }
    return s;
}

} // namespace gkzlift::ah
