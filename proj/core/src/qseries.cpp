#include "gkzlift/qseries.hpp"

#include <numeric>
#include <vector>

#include "gkzlift/errors.hpp"

namespace gkzlift {

namespace {

long sat_add(long a, long b) {
    if (a >= kInfPrec || b >= kInfPrec) return kInfPrec;
    long s = a + b;
    return s >= kInfPrec ? kInfPrec : s;
}

long lcm_den(long a, long b) { return std::lcm(a, b); }

} // namespace

QExpansion QExpansion::monomial(const Rat& c, long e, long den, long prec) {
    QExpansion r(den, prec);
    if (!c.is_zero() && e < prec) r.terms_[e] = c;
    return r;
}

Rat QExpansion::coeff(long e, long d) const {
    // exponent e/d in terms of den_: e*den_/d must be integral
    long num = e * den_;
    if (num % d != 0) return Rat(0);
    auto it = terms_.find(num / d);
    return it == terms_.end() ? Rat(0) : it->second;
}

bool QExpansion::known(long e, long d) const {
    if (prec_ == kInfPrec) return true;
    return e * den_ < prec_ * d;
}

void QExpansion::set(long e, const Rat& c) {
    if (e >= prec_) return;
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

void QExpansion::set_prec(long p) {
    prec_ = p;
    terms_.erase(terms_.lower_bound(p), terms_.end());
}

QExpansion QExpansion::truncated(long e, long d) const {
    QExpansion r = *this;
    long aligned = lcm_den(den_, d);
    r = r.with_den(aligned);
    r.set_prec(std::min(r.prec_, e * (aligned / d)));
    return r;
}

QExpansion QExpansion::with_den(long d) const {
    if (d == den_) return *this;
    long f = d / den_;
    QExpansion r(d, prec_ == kInfPrec ? kInfPrec : prec_ * f);
    for (const auto& [e, c] : terms_) r.terms_[e * f] = c;
    return r;
}

QExpansion QExpansion::reduced() const {
    long g = den_;
    for (const auto& [e, c] : terms_) {
        g = std::gcd(g, e < 0 ? -e : e);
        if (g == 1) break;
    }
    if (g <= 1 || den_ % g != 0) return *this;
    long p = kInfPrec;
    if (prec_ != kInfPrec) {
        p = prec_ / g;
        if (p * g < prec_) ++p; // ceil: e' is known iff e'*g < prec_
    }
    QExpansion r(den_ / g, p);
    for (const auto& [e, c] : terms_) {
        if (e / g < r.prec_) r.terms_[e / g] = c;
    }
    return r;
}

QExpansion operator+(const QExpansion& a, const QExpansion& b) {
    long d = lcm_den(a.den_, b.den_);
    QExpansion x = a.with_den(d), y = b.with_den(d);
    QExpansion r(d, std::min(x.prec_, y.prec_));
    r.terms_ = std::move(x.terms_);
    r.terms_.erase(r.terms_.lower_bound(r.prec_), r.terms_.end());
    for (const auto& [e, c] : y.terms_) {
        if (e >= r.prec_) break;
        auto [it, fresh] = r.terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

QExpansion operator-(const QExpansion& a) {
    QExpansion r = a;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

QExpansion operator-(const QExpansion& a, const QExpansion& b) { return a + (-b); }

QExpansion QExpansion::operator*(const Rat& c) const {
    QExpansion r(den_, prec_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

QExpansion operator*(const QExpansion& a, const QExpansion& b) {
    long d = lcm_den(a.den_, b.den_);
    QExpansion x = a.with_den(d), y = b.with_den(d);
    // every reported coefficient must be certain: unknown tails of one factor
    // meet the other factor's leading term first
    long prec = std::min(sat_add(x.prec_, y.lead()), sat_add(y.prec_, x.lead()));
    QExpansion r(d, prec);
    if (x.terms_.empty() || y.terms_.empty()) return r;

    long xl = x.lead(), xh = x.terms_.rbegin()->first;
    long yl = y.lead(), yh = y.terms_.rbegin()->first;
    long span_x = xh - xl + 1, span_y = yh - yl + 1;
    bool dense = x.terms_.size() * 2 > static_cast<size_t>(span_x) &&
                 y.terms_.size() * 2 > static_cast<size_t>(span_y);
    if (dense && prec != kInfPrec) {
        long out_lo = xl + yl;
        long len = prec - out_lo;
        if (len <= 0) return r;
        std::vector<Rat> xv(span_x), yv(span_y), out(len);
        for (const auto& [e, c] : x.terms_) xv[e - xl] = c;
        for (const auto& [e, c] : y.terms_) yv[e - yl] = c;
        for (long i = 0; i < span_x; ++i) {
            if (xv[i].is_zero()) continue;
            long jmax = std::min(span_y, len - i);
            for (long j = 0; j < jmax; ++j) {
                if (yv[j].is_zero()) continue;
                out[i + j] += xv[i] * yv[j];
            }
        }
        for (long k = 0; k < len; ++k)
            if (!out[k].is_zero()) r.terms_[out_lo + k] = out[k];
        return r;
    }
    for (const auto& [ex, cx] : x.terms_) {
        if (ex + yl >= prec) break;
        for (const auto& [ey, cy] : y.terms_) {
            long e = ex + ey;
            if (e >= prec) break;
            auto [it, fresh] = r.terms_.try_emplace(e, cx * cy);
            if (!fresh) it->second += cx * cy;
        }
    }
    for (auto it = r.terms_.begin(); it != r.terms_.end();) {
        if (it->second.is_zero())
            it = r.terms_.erase(it);
        else
            ++it;
    }
    return r;
}

bool operator==(const QExpansion& a, const QExpansion& b) {
    long d = lcm_den(a.den_, b.den_);
    QExpansion x = a.with_den(d), y = b.with_den(d);
    return x.prec_ == y.prec_ && x.terms_ == y.terms_;
}

bool agree_to_common_prec(const QExpansion& a, const QExpansion& b) {
    long d = lcm_den(a.den_, b.den_);
    QExpansion x = a.with_den(d), y = b.with_den(d);
    long p = std::min(x.prec_, y.prec_);
    x.set_prec(p);
    y.set_prec(p);
    return x.terms_ == y.terms_;
}

QExpansion invert(const QExpansion& a, long target_prec) {
    if (a.is_zero_to_prec()) throw LeadingZero("invert: series is zero to its precision");
    long lead = a.lead();
    const Rat& c0 = a.coeff(lead, a.den());
    long nterms; // number of certain output coefficients past the lead
    if (target_prec >= 0) {
        nterms = target_prec - (-lead);
    } else if (!a.exact()) {
        nterms = a.prec() - lead; // output prec: -lead + (a.prec - lead)
    } else {
        nterms = 64 * a.den(); // exact polynomial input: document a default window
    }
    if (nterms < 0) nterms = 0;
    QExpansion r(a.den(), -lead + nterms);
    // long division: b = 1/a with b[k] coefficients of q^{(k-lead)/den}
    std::vector<Rat> av(static_cast<size_t>(nterms)), bv(static_cast<size_t>(nterms));
    for (const auto& [e, c] : a.terms()) {
        long k = e - lead;
        if (k >= 0 && k < nterms) av[static_cast<size_t>(k)] = c;
    }
    Rat inv0 = c0.inverse();
    for (long k = 0; k < nterms; ++k) {
        Rat acc = (k == 0) ? Rat(1) : Rat(0);
        for (long j = 1; j <= k; ++j) {
            if (av[static_cast<size_t>(j)].is_zero()) continue;
            acc -= av[static_cast<size_t>(j)] * bv[static_cast<size_t>(k - j)];
        }
        bv[static_cast<size_t>(k)] = acc * inv0;
        r.set(-lead + k, bv[static_cast<size_t>(k)]);
    }
    return r;
}

QExpansion q_derivative(const QExpansion& a) {
    QExpansion r(a.den(), a.prec());
    for (const auto& [e, c] : a.terms()) {
        Rat v = c * Rat(e, a.den());
        if (!v.is_zero()) r.set(e, v);
    }
    return r;
}

QExpansion rescale(const QExpansion& a, long k) {
    QExpansion r(a.den(), a.prec() == kInfPrec ? kInfPrec : a.prec() * k);
    for (const auto& [e, c] : a.terms()) r.set(e * k, c);
    return r;
}

} // namespace gkzlift
