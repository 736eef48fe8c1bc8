#pragma once

#include <stdexcept>
#include <string>

namespace gkzlift {

struct LeadingZero : std::domain_error {
    using std::domain_error::domain_error;
};
struct BadWeight : std::domain_error {
    using std::domain_error::domain_error;
};
struct WeightMismatch : std::domain_error {
    using std::domain_error::domain_error;
};
struct RepMismatch : std::domain_error {
    using std::domain_error::domain_error;
};
struct SupportViolation : std::domain_error {
    using std::domain_error::domain_error;
};
struct BadLevel : std::domain_error {
    using std::domain_error::domain_error;
};
struct LevelMismatch : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotAPole : std::domain_error {
    using std::domain_error::domain_error;
};
struct IrrationalJ : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotModular : std::domain_error {
    long first_bad_exponent;
    explicit NotModular(const std::string& msg, long e)
        : std::domain_error(msg), first_bad_exponent(e) {}
};
struct Obstructed : std::domain_error {
    long pole;
    explicit Obstructed(const std::string& msg, long n)
        : std::domain_error(msg), pole(n) {}
};
struct NotTraceless : std::domain_error {
    using std::domain_error::domain_error;
};
struct SlopeMismatch : std::domain_error {
    using std::domain_error::domain_error;
};
struct DegenerateGamma : std::domain_error {
    using std::domain_error::domain_error;
};
struct UnsupportedAlgebra : std::domain_error {
    using std::domain_error::domain_error;
};
struct NoSolution : std::domain_error {
    using std::domain_error::domain_error;
};
struct CutoffTooSmall : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace gkzlift
