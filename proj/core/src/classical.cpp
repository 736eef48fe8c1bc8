#include "gkzlift/classical.hpp"

#include <mutex>
#include <numeric>

#include "gkzlift/errors.hpp"

namespace gkzlift::classical {

namespace {

std::mutex cache_mutex;

} // namespace

Rat bernoulli(long k) {
    static std::vector<Rat> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (static_cast<long>(cache.size()) > k) return cache[static_cast<size_t>(k)];
    // Akiyama-Tanigawa style triangle in exact rationals
    long upto = k;
    cache.clear();
    std::vector<Rat> row;
    for (long m = 0; m <= upto; ++m) {
        row.push_back(Rat(1, m + 1));
        for (long j = m; j >= 1; --j) row[static_cast<size_t>(j - 1)] = (row[static_cast<size_t>(j - 1)] - row[static_cast<size_t>(j)]) * Rat(j);
        cache.push_back(row[0]);
    }
    // the triangle produces B_1 = +1/2; flip to the modular-forms convention
    if (upto >= 1) cache[1] = Rat(-1, 2);
    return cache[static_cast<size_t>(k)];
}

mpz_class sigma(long n, long k) {
    mpz_class s = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        s += int_pow(mpz_class(d), static_cast<unsigned long>(k));
        long e = n / d;
        if (e != d) s += int_pow(mpz_class(e), static_cast<unsigned long>(k));
    }
    return s;
}

int moebius(long n) {
    int r = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            r = -r;
        }
    }
    if (n > 1) r = -r;
    return r;
}

int kronecker(long a, long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a % 2 == 0) && (n % 2 == 0)) return 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    // pull out the even part of n; (a/2) depends on a mod 8
    while (n % 2 == 0) {
        n /= 2;
        long am = ((a % 8) + 8) % 8;
        if (am == 3 || am == 5) result = -result;
    }
    a %= n;
    if (a < 0) a += n;
    // now n odd positive, 0 <= a < n: Jacobi with reciprocity
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long nm = n % 8;
            if (nm == 3 || nm == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

bool is_fundamental_discriminant(long D) {
    if (D == 1) return true;
    auto squarefree = [](long m) {
        for (long p = 2; p * p <= m; ++p)
            if (m % (p * p) == 0) return false;
        return true;
    };
    long r = ((D % 4) + 4) % 4;
    if (r == 1) return squarefree(D < 0 ? -D : D);
    if (r == 0) {
        long m = D / 4;
        long mr = ((m % 4) + 4) % 4;
        return (mr == 2 || mr == 3) && squarefree(m < 0 ? -m : m);
    }
    return false;
}

Character::Character(long D_) : D(D_) {
    if (!is_fundamental_discriminant(D)) throw std::invalid_argument("Character: D is not a fundamental discriminant");
}

Rat bernoulli2_chi(long D) {
    // B_{2,chi} = |D| sum_{a=1}^{|D|} chi(a) B_2(a/|D|), B_2(x) = x^2 - x + 1/6
    long aD = D < 0 ? -D : D;
    Rat acc(0);
    for (long a = 1; a <= aD; ++a) {
        int ch = kronecker(D, a);
        if (ch == 0) continue;
        Rat x(a, aD);
        Rat b2 = x * x - x + Rat(1, 6);
        acc += Rat(ch) * b2;
    }
    return acc * Rat(aD);
}

Rat l_minus_one(long D) { return -bernoulli2_chi(D) / Rat(2); }

std::pair<long, long> fundamental_decomposition(long n) {
    long s = 1, m = n;
    for (long p = 2; p * p <= m; ++p) {
        while (m % (p * p) == 0) m /= p * p;
        if (m % p == 0) {
            s *= p;
            m /= p;
        }
    }
    s *= m; // squarefree part of n
    long D, f2;
    if (((s % 4) + 4) % 4 == 1) {
        D = s;
        f2 = n / s;
    } else {
        D = 4 * s;
        f2 = n / D;
    }
    long f = 1;
    while (f * f < f2) ++f;
    return {D, f};
}

Rat cohen_h2(long n) {
    if (n < 0) throw std::invalid_argument("cohen_h2: n must be >= 0");
    if (n == 0) return Rat(1, 120); // zeta(-3)
    long r = n % 4;
    if (r == 2 || r == 3) return Rat(0);
    auto [D, f] = fundamental_decomposition(n);
    Rat L = (D == 1) ? Rat(-1, 12) : l_minus_one(D);
    Rat s(0);
    for (long d = 1; d <= f; ++d) {
        if (f % d != 0) continue;
        int mu = moebius(d);
        if (mu == 0) continue;
        s += Rat(mu * kronecker(D, d)) * Rat(d) * Rat(sigma(f / d, 3));
    }
    return L * s;
}

Rat eisenstein_coefficient_factor(long k) {
    if (k < 4 || k % 2 != 0) throw BadWeight("eisenstein: weight must be even and >= 4");
    return Rat(-2 * k) / bernoulli(k);
}

QExpansion eisenstein(long k, long prec) {
    Rat c = eisenstein_coefficient_factor(k);
    QExpansion r(1, prec);
    r.set(0, Rat(1));
    for (long n = 1; n < prec; ++n) r.set(n, c * Rat(sigma(n, k - 1)));
    return r;
}

QExpansion discriminant_form(long prec) {
    QExpansion e4 = eisenstein(4, prec), e6 = eisenstein(6, prec);
    return (e4 * e4 * e4 - e6 * e6) * Rat(1, 1728);
}

QExpansion jacobi_theta(long prec) {
    QExpansion r(1, prec);
    r.set(0, Rat(1));
    for (long n = 1; n * n < prec; ++n) r.set(n * n, Rat(2));
    return r;
}

QExpansion cohen_eisenstein_5_2(long prec) {
    QExpansion r(1, prec);
    for (long n = 0; n < prec; ++n) {
        Rat v = cohen_h2(n) * Rat(120);
        if (!v.is_zero()) r.set(n, v);
    }
    return r;
}

QExpansion j_invariant(long prec) {
    // j = E_4^3 / Delta = q^{-1} + 744 + ...
    long p = prec + 2;
    QExpansion e4 = eisenstein(4, p);
    QExpansion num = e4 * e4 * e4;
    return num * invert(discriminant_form(p), prec);
}

std::vector<mpz_class> cohen_eisenstein_5_2_integer(long prec) {
    std::vector<mpz_class> out(static_cast<size_t>(prec));
    if (prec > 0) out[0] = 1; // 120 * H(2,0)
    if (prec <= 1) return out;
    long nmax = prec - 1;
    // least prime factor sieve for fast chi_D sieving and factorizations
    std::vector<int32_t> lpf(static_cast<size_t>(nmax + 1), 0);
    for (long i = 2; i <= nmax; ++i) {
        if (lpf[static_cast<size_t>(i)] == 0)
            for (long j = i; j <= nmax; j += i)
                if (lpf[static_cast<size_t>(j)] == 0) lpf[static_cast<size_t>(j)] = static_cast<int32_t>(i);
    }
    // squarefree part via lpf
    std::vector<int64_t> sqfree(static_cast<size_t>(nmax + 1), 1);
    for (long n = 2; n <= nmax; ++n) {
        long m = n;
        int64_t s = 1;
        while (m > 1) {
            long p = lpf[static_cast<size_t>(m)];
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            if (e % 2) s *= p;
        }
        sqfree[static_cast<size_t>(n)] = s;
    }
    std::vector<int8_t> chi; // reused per-D character table
    for (long n = 1; n <= nmax; ++n) {
        long r = n % 4;
        if (r == 2 || r == 3) continue;
        long s = sqfree[static_cast<size_t>(n)];
        long D = (s % 4 == 1) ? s : 4 * s;
        long f2 = n / D;
        long f = 1;
        while (f * f < f2) ++f;
        Rat L;
        if (D == 1) {
            L = Rat(-1, 12);
        } else {
            // B_{2,chi_D} = (1/D) sum chi(a) a^2  (chi even, nonprincipal:
            // the B_2 linear and constant pieces cancel)
            chi.assign(static_cast<size_t>(D) + 1, 0);
            chi[1] = 1;
            int64_t acc = 1;
            for (long a = 2; a <= D; ++a) {
                long p = lpf[static_cast<size_t>(a)]; // D = s or 4s divides n, so D <= nmax
                int8_t c = (a == p) ? static_cast<int8_t>(kronecker(D, p))
                                    : static_cast<int8_t>(chi[static_cast<size_t>(a / p)] * chi[static_cast<size_t>(p)]);
                chi[static_cast<size_t>(a)] = c;
                acc += static_cast<int64_t>(c) * a * a;
            }
            L = -Rat(acc, 2 * D);
        }
        Rat sum(0);
        for (long d = 1; d <= f; ++d) {
            if (f % d != 0) continue;
            int mu = moebius(d);
            if (mu == 0) continue;
            sum += Rat(mu * kronecker(D, d)) * Rat(d) * Rat(sigma(f / d, 3));
        }
        Rat h = L * sum * Rat(120);
        if (!h.is_integer()) throw std::logic_error("cohen sieve produced a non-integer coefficient");
        out[static_cast<size_t>(n)] = h.num();
    }
    return out;
}

} // namespace gkzlift::classical
