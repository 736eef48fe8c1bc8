#include "gkzlift/rat.hpp"

#include "gkzlift/errors.hpp"

namespace gkzlift {

Rat Rat::parse(const std::string& s) {
    mpq_class q(s);
    q.canonicalize();
    return Rat(q);
}

std::string Rat::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat Rat::inverse() const {
    if (is_zero()) throw LeadingZero("Rat: division by zero");
    return Rat(den(), num());
}

Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rat(n, d);
}

mpz_class int_binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rat rat_binomial(long n, long k) { return Rat(int_binomial(n, k)); }

mpz_class int_pow(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

} // namespace gkzlift
