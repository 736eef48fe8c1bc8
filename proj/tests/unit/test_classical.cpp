#include <doctest.h>

#include "gkzlift/classical.hpp"
#include "gkzlift/errors.hpp"
#include "gkzlift/zseries.hpp"

using namespace gkzlift;
namespace cl = gkzlift::classical;

TEST_SUITE_BEGIN("classical");

TEST_CASE("bernoulli numbers") {
    CHECK(cl::bernoulli(0) == Rat(1));
    CHECK(cl::bernoulli(1) == Rat(-1, 2));
    CHECK(cl::bernoulli(2) == Rat(1, 6));
    CHECK(cl::bernoulli(4) == Rat(-1, 30));
    CHECK(cl::bernoulli(8) == Rat(-1, 30));
    CHECK(cl::bernoulli(10) == Rat(5, 66));
    CHECK(cl::bernoulli(12) == Rat(-691, 2730));
}

TEST_CASE("eisenstein series heads") {
    QExpansion e4 = cl::eisenstein(4, 4);
    CHECK(e4.coeff(0, 1) == Rat(1));
    CHECK(e4.coeff(1, 1) == Rat(240));
    CHECK(e4.coeff(2, 1) == Rat(2160));
    QExpansion e6 = cl::eisenstein(6, 3);
    CHECK(e6.coeff(1, 1) == Rat(-504));
    CHECK(e6.coeff(2, 1) == Rat(-16632));
    QExpansion e10 = cl::eisenstein(10, 3);
    CHECK(e10.coeff(1, 1) == Rat(-264));
    CHECK_THROWS_AS(cl::eisenstein(5, 3), BadWeight);
    CHECK_THROWS_AS(cl::eisenstein(2, 3), BadWeight);
}

TEST_CASE("discriminant form") {
    QExpansion d = cl::discriminant_form(5);
    CHECK(d.coeff(0, 1) == Rat(0));
    CHECK(d.coeff(1, 1) == Rat(1));
    CHECK(d.coeff(2, 1) == Rat(-24));
    CHECK(d.coeff(3, 1) == Rat(252));
    CHECK(d.coeff(4, 1) == Rat(-1472));
}

TEST_CASE("E4^3 - E6^2 = 1728 Delta to the working precision") {
    long prec = 40;
    QExpansion e4 = cl::eisenstein(4, prec), e6 = cl::eisenstein(6, prec);
    QExpansion lhs = e4 * e4 * e4 - e6 * e6;
    CHECK(agree_to_common_prec(lhs, cl::discriminant_form(prec) * Rat(1728)));
}

TEST_CASE("jacobi theta") {
    QExpansion t = cl::jacobi_theta(20);
    CHECK(t.coeff(0, 1) == Rat(1));
    CHECK(t.coeff(1, 1) == Rat(2));
    CHECK(t.coeff(2, 1) == Rat(0));
    CHECK(t.coeff(16, 1) == Rat(2));
}

TEST_CASE("theta^4 counts four-square representations") {
    long prec = 101;
    QExpansion t = cl::jacobi_theta(prec);
    QExpansion t4 = t * t * t * t;
    for (long n = 1; n <= 100; ++n) {
        mpz_class s = 0;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0 && d % 4 != 0) s += d;
        CHECK(t4.coeff(n, 1) == Rat(mpz_class(8 * s)));
    }
}

TEST_CASE("kronecker symbol") {
    CHECK(cl::kronecker(5, 2) == -1);
    CHECK(cl::kronecker(1, 1) == 1);
    CHECK(cl::kronecker(-4, 7) == -1);
    CHECK(cl::kronecker(-4, 5) == 1);
    CHECK(cl::kronecker(12, 3) == 0);
    CHECK(cl::kronecker(-3, 2) == -1); // -3 = 5 mod 8
    // multiplicativity in the bottom argument
    for (long a : {-7L, -3L, 5L, 12L})
        for (long m = 1; m < 20; ++m)
            for (long n = 1; n < 20; ++n)
                CHECK(cl::kronecker(a, m * n) == cl::kronecker(a, m) * cl::kronecker(a, n));
}

TEST_CASE("fundamental discriminants") {
    CHECK(cl::is_fundamental_discriminant(1));
    CHECK(cl::is_fundamental_discriminant(5));
    CHECK(cl::is_fundamental_discriminant(-3));
    CHECK(cl::is_fundamental_discriminant(-4));
    CHECK(cl::is_fundamental_discriminant(8));
    CHECK(!cl::is_fundamental_discriminant(4));
    CHECK(!cl::is_fundamental_discriminant(9));
    CHECK(!cl::is_fundamental_discriminant(-9));
}

TEST_CASE("cohen H(2,n) values") {
    CHECK(cl::cohen_h2(0) == Rat(1, 120));
    CHECK(cl::cohen_h2(1) == Rat(-1, 12));
    CHECK(cl::cohen_h2(4) == Rat(-7, 12));
    CHECK(cl::cohen_h2(5) == Rat(-2, 5));
    CHECK(cl::bernoulli2_chi(5) == Rat(4, 5));
    for (long n = 0; n <= 500; ++n)
        if (n % 4 == 2 || n % 4 == 3) CHECK(cl::cohen_h2(n) == Rat(0));
}

TEST_CASE("cohen eisenstein series has integer coefficients, constant term 1") {
    QExpansion h = cl::cohen_eisenstein_5_2(60);
    CHECK(h.coeff(0, 1) == Rat(1));
    CHECK(h.coeff(1, 1) == Rat(-10));
    CHECK(h.coeff(4, 1) == Rat(-70));
    CHECK(h.coeff(5, 1) == Rat(-48));
    CHECK(h.coeff(8, 1) == Rat(-120));
    CHECK(h.coeff(9, 1) == Rat(-250));
    for (const auto& [e, c] : h.terms()) CHECK(c.is_integer());
}

TEST_CASE("sieved cohen coefficients match the per-n formula") {
    auto z = cl::cohen_eisenstein_5_2_integer(400);
    for (long n = 0; n < 400; ++n) {
        Rat direct = cl::cohen_h2(n) * Rat(120);
        CHECK(Rat(z[static_cast<size_t>(n)]) == direct);
    }
}

TEST_CASE("j invariant") {
    QExpansion j = cl::j_invariant(3);
    CHECK(j.coeff(-1, 1) == Rat(1));
    CHECK(j.coeff(0, 1) == Rat(744));
    CHECK(j.coeff(1, 1) == Rat(196884));
}

TEST_CASE("dense integer series agree with the sparse path") {
    long prec = 50;
    ZSeries th = z_theta(prec);
    QExpansion tq = cl::jacobi_theta(prec);
    for (long n = 0; n < prec; ++n) CHECK(Rat(th[static_cast<size_t>(n)]) == tq.coeff(n, 1));
    ZSeries dl = z_delta(prec);
    QExpansion dq = cl::discriminant_form(prec);
    for (long n = 0; n < prec; ++n) CHECK(Rat(dl[static_cast<size_t>(n)]) == dq.coeff(n, 1));
}

TEST_SUITE_END();
