#pragma once

#include <array>
#include <optional>
#include <string>

#include "gkzlift/rat.hpp"

namespace gkzlift::cm {

// element u + v sqrt(d); d any nonzero squarefree integer (negative d gives
// the imaginary quadratic fields carrying CM points)
struct QuadElem {
    Rat u, v;
    long d = 1;
    QuadElem() = default;
    QuadElem(Rat u_, Rat v_, long d_) : u(std::move(u_)), v(std::move(v_)), d(d_) {}
    explicit QuadElem(Rat r) : u(std::move(r)), v(0), d(1) {}
    bool is_rational() const { return v.is_zero(); }
    bool is_zero() const { return u.is_zero() && v.is_zero(); }
    friend QuadElem operator+(const QuadElem& a, const QuadElem& b);
    friend QuadElem operator-(const QuadElem& a, const QuadElem& b);
    friend QuadElem operator*(const QuadElem& a, const QuadElem& b);
    friend bool operator==(const QuadElem& a, const QuadElem& b);
    QuadElem operator*(const Rat& c) const { return {u * c, v * c, d}; }
    QuadElem inverse() const;
    std::string str() const;
};

// tau = x + yc sqrt(D) i with D > 0; yc > 0 on the upper half-plane, < 0 on
// the conjugate one, 0 on the real line
struct CMPoint {
    Rat x;
    Rat yc;
    long D = 1;
    Rat ysq() const { return yc * yc * Rat(D); }
    Rat norm() const { return x * x + ysq(); }
    bool in_upper() const { return yc.sign() > 0; }
    bool is_real() const { return yc.is_zero(); }
};

// slope of a line in C^2: infinity, a real quadratic value, or a point of
// an imaginary quadratic field
struct Slope {
    enum class Kind { infinite, real, complex_quad } kind = Kind::infinite;
    QuadElem real;  // valid for kind == real (d > 0)
    CMPoint point;  // valid for kind == complex_quad
    static Slope infinity() { return {}; }
    static Slope of_rational(const Rat& L);
    static Slope of_real_quadratic(const QuadElem& v);
    static Slope of_point(const CMPoint& p);
};

// degree-2 cohomology in the ordered wedge basis (ab, ac, ad, bc, bd, cd)
struct WedgeForm {
    std::array<QuadElem, 6> w;
    friend WedgeForm operator+(const WedgeForm& a, const WedgeForm& b);
    friend WedgeForm operator-(const WedgeForm& a, const WedgeForm& b);
    WedgeForm operator*(const QuadElem& c) const;
    friend bool operator==(const WedgeForm& a, const WedgeForm& b);
};

// traceless 2x2 over the quadratic field: ((p, q), (r, -p))
struct Traceless {
    QuadElem p, q, r;
    bool is_zero() const { return p.is_zero() && q.is_zero() && r.is_zero(); }
};

WedgeForm iota(const Traceless& b);
WedgeForm itilde(const Traceless& b);
// checked linear extension: throws NotTraceless on a nonzero trace input
WedgeForm iota_checked(const QuadElem& m11, const QuadElem& m12, const QuadElem& m21,
                       const QuadElem& m22, bool tilde);

// cup product: disc(I) times the a^b^c^d coefficient of w1 ^ w2
QuadElem cup(const WedgeForm& w1, const WedgeForm& w2, const Rat& discI);

struct Mat2 {
    long a, b, c, d;
    long det() const { return a * d - b * c; }
};

struct FundamentalClass {
    Traceless iota_arg;
    Traceless itilde_arg;  // zero in the degenerate real-slope case
    QuadElem scale;        // beta sqrt(D) in the CM case, rational otherwise
    WedgeForm form;        // equals scale (iota(iota_arg) + itilde(itilde_arg))
    bool has_itilde = true;
};

enum class SlopeKind { generic, cm, none };

struct AlgebraDescriptor {
    bool split = true;
    long level = 1; // Eichler level N in the split case
};

// split criterion: x rational and y^2 rational with y != 0 (the exact
// representation already enforces rationality, so this checks y != 0 and
// rejects real-quadratic data)
bool is_cm_point(const CMPoint& tau, const AlgebraDescriptor& alg);
SlopeKind classify_slope(const Slope& tau0, const CMPoint& tau, const AlgebraDescriptor& alg);

// primitive integral gamma with gamma tau = tau0; det > 0 iff tau0 is in
// the upper half-plane
Mat2 find_gamma(const CMPoint& tau, const CMPoint& tau0);

// fundamental class of the CM cycle of slope tau0 in A_tau, from the
// supplied (gamma, ttilde, discI) data
FundamentalClass fundamental_class(const CMPoint& tau0, const CMPoint& tau, const Mat2& gamma,
                                   const CMPoint& ttilde, const Rat& discI);

// real-slope degeneration; slope = nullopt means infinity. base_integral is
// |j(gamma,tau)|^2 Im(ttilde) / y, the d^c period of the cycle
FundamentalClass fundamental_class_generic(const std::optional<Rat>& slope, const Rat& base_integral,
                                           const Rat& discI);

// split-case cycle data for the Eichler order of level N: the period
// lattice of I(tau;1) on the line of slope tau0, expressed against gamma
CMPoint split_ttilde(const CMPoint& tau0, const CMPoint& tau, const Mat2& gamma, long N);

// the three catalogued split cycles
FundamentalClass cycle_phi(long M, const CMPoint& tau, long N); // graph of phi_M, slope 1/M
FundamentalClass cycle_psi(long L, const CMPoint& tau, long N); // graph of psi_L, slope L
FundamentalClass cycle_cm_sqrtD(long D, long N);                // sqrt(-D) isogeny at tau = sqrt(-D)

CMPoint moebius(const Mat2& g, const CMPoint& tau);

} // namespace gkzlift::cm
