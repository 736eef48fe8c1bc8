#pragma once

#include <limits>
#include <map>

#include "gkzlift/rat.hpp"

namespace gkzlift {

// Unknown-coefficient sentinel: a series with prec == kInfPrec is exact
// (a Laurent polynomial), otherwise coefficients at scaled exponents
// e >= prec are unknown.
inline constexpr long kInfPrec = std::numeric_limits<long>::max() / 4;

// Exact Laurent q-series: terms live in powers of q^{1/den}. The key of
// `terms` is the scaled exponent e, representing q^{e/den}. Invariants:
// no stored zero coefficients, all keys < prec, den > 0.
class QExpansion {
public:
    QExpansion() = default;
    QExpansion(long den, long prec) : den_(den), prec_(prec) {}

    static QExpansion zero(long den = 1, long prec = kInfPrec) { return QExpansion(den, prec); }
    static QExpansion one() { return monomial(Rat(1), 0, 1); }
    // c * q^{e/den}
    static QExpansion monomial(const Rat& c, long e, long den = 1, long prec = kInfPrec);

    long den() const { return den_; }
    long prec() const { return prec_; }
    bool exact() const { return prec_ == kInfPrec; }
    const std::map<long, Rat>& terms() const { return terms_; }

    bool is_zero_to_prec() const { return terms_.empty(); }
    // scaled exponent of the first nonzero term; prec() when none are known
    long lead() const { return terms_.empty() ? prec_ : terms_.begin()->first; }

    // coefficient of q^{e/d}; exact zero when absent and below precision
    Rat coeff(long e, long d = 1) const;
    bool known(long e, long d = 1) const;

    void set(long e, const Rat& c);
    void set_prec(long p);
    QExpansion truncated(long e, long d = 1) const;

    // rewrite over a denominator d (must be a multiple of den)
    QExpansion with_den(long d) const;
    // normalize den to the minimal value supporting all exponents and prec
    QExpansion reduced() const;

    friend QExpansion operator+(const QExpansion& a, const QExpansion& b);
    friend QExpansion operator-(const QExpansion& a, const QExpansion& b);
    friend QExpansion operator-(const QExpansion& a);
    friend QExpansion operator*(const QExpansion& a, const QExpansion& b);
    QExpansion operator*(const Rat& c) const;

    // equality of all coefficients both sides know
    friend bool agree_to_common_prec(const QExpansion& a, const QExpansion& b);
    friend bool operator==(const QExpansion& a, const QExpansion& b);

private:
    long den_ = 1;
    long prec_ = kInfPrec;
    std::map<long, Rat> terms_;
};

// Laurent inverse of a to precision target_prec (scaled in a's final
// denominator; -1 means inherit a.prec()). Throws LeadingZero when a is 0
// to its precision.
QExpansion invert(const QExpansion& a, long target_prec = -1);

// q d/dq: multiplies the coefficient at q^{e/den} by e/den
QExpansion q_derivative(const QExpansion& a);

// q -> q^k substitution, realizing f(k tau)
QExpansion rescale(const QExpansion& a, long k);

} // namespace gkzlift
