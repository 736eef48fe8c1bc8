#include "gkzlift/relations.hpp"

#include <algorithm>
#include <set>
#include <numeric>

#include "gkzlift/classical.hpp"
#include "gkzlift/errors.hpp"
#include "gkzlift/lift.hpp"
#include "gkzlift/zseries.hpp"

namespace gkzlift::gkz {

namespace {

// Laurent expansion with integer coefficients, offset = exponent of index 0
struct ILaurent {
    long offset = 0;
    ZSeries c;
    const mpz_class& at(long e) const {
        static const mpz_class zero = 0;
        long i = e - offset;
        if (i < 0 || i >= static_cast<long>(c.size())) return zero;
        return c[static_cast<size_t>(i)];
    }
};

// kernel of an (rows x cols) rational matrix
std::vector<std::vector<Rat>> kernel(std::vector<std::vector<Rat>> M, long cols) {
    long rows = static_cast<long>(M.size());
    std::vector<long> pivot_of_col(static_cast<size_t>(cols), -1);
    long r = 0;
    for (long c = 0; c < cols && r < rows; ++c) {
        long pr = -1;
        for (long i = r; i < rows; ++i)
            if (!M[static_cast<size_t>(i)][static_cast<size_t>(c)].is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(M[static_cast<size_t>(r)], M[static_cast<size_t>(pr)]);
        Rat inv = M[static_cast<size_t>(r)][static_cast<size_t>(c)].inverse();
        for (auto& x : M[static_cast<size_t>(r)]) x *= inv;
        for (long i = 0; i < rows; ++i) {
            if (i == r) continue;
            Rat f = M[static_cast<size_t>(i)][static_cast<size_t>(c)];
            if (f.is_zero()) continue;
            for (long j = 0; j < cols; ++j)
                M[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f * M[static_cast<size_t>(r)][static_cast<size_t>(j)];
        }
        pivot_of_col[static_cast<size_t>(c)] = r;
        ++r;
    }
    std::vector<std::vector<Rat>> ker;
    for (long c = 0; c < cols; ++c) {
        if (pivot_of_col[static_cast<size_t>(c)] >= 0) continue;
        std::vector<Rat> v(static_cast<size_t>(cols));
        v[static_cast<size_t>(c)] = Rat(1);
        for (long c2 = 0; c2 < cols; ++c2) {
            long p = pivot_of_col[static_cast<size_t>(c2)];
            if (p >= 0) v[static_cast<size_t>(c2)] = -M[static_cast<size_t>(p)][static_cast<size_t>(c)];
        }
        ker.push_back(std::move(v));
    }
    return ker;
}

struct SparseForm {
    std::map<long, Rat> coeff; // exponent -> value
    long prec = 0;
};

SparseForm combine(const std::vector<ILaurent>& ls, const std::vector<Rat>& v, long lo, long hi) {
    SparseForm f;
    f.prec = hi;
    for (long e = lo; e < hi; ++e) {
        Rat acc(0);
        for (size_t j = 0; j < ls.size(); ++j) {
            if (v[j].is_zero()) continue;
            const mpz_class& z = ls[j].at(e);
            if (sgn(z) != 0) acc += v[j] * Rat(z);
        }
        if (!acc.is_zero()) f.coeff[e] = acc;
    }
    return f;
}

void sub_mult(SparseForm& f, const SparseForm& g, const Rat& c) {
    for (const auto& [e, v] : g.coeff) {
        auto it = f.coeff.find(e);
        Rat nv = (it == f.coeff.end() ? Rat(0) : it->second) - c * v;
        if (nv.is_zero()) {
            if (it != f.coeff.end()) f.coeff.erase(it);
        } else {
            f.coeff[e] = nv;
        }
    }
}

// reduce the collection to Gauss-Jordan form on strictly negative exponents:
// each surviving form is q^{-n} + O(1) with leading coefficient 1
std::vector<SparseForm> echelon_on_poles(std::vector<SparseForm> forms) {
    std::vector<SparseForm> basis;
    for (auto& f : forms) {
        for (const auto& b : basis) {
            long e0 = b.coeff.begin()->first;
            auto it = f.coeff.find(e0);
            if (it == f.coeff.end()) continue;
            Rat c = it->second; // copy: sub_mult rewrites f.coeff under us
            sub_mult(f, b, c);
        }
        if (f.coeff.empty() || f.coeff.begin()->first >= 0) continue; // no new pole direction
        Rat inv = f.coeff.begin()->second.inverse();
        for (auto& [e, v] : f.coeff) v *= inv;
        basis.push_back(std::move(f));
    }
    std::sort(basis.begin(), basis.end(),
              [](const SparseForm& x, const SparseForm& y) { return x.coeff.begin()->first < y.coeff.begin()->first; });
    // back-substitution, deepest pivot first: a subtraction only introduces
    // exponents above the pivot being cleared, so one pass suffices
    for (size_t j = 0; j < basis.size(); ++j) {
        long e0 = basis[j].coeff.begin()->first;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (i == j) continue;
            auto it = basis[i].coeff.find(e0);
            if (it == basis[i].coeff.end()) continue;
            Rat c = it->second;
            sub_mult(basis[i], basis[j], c);
        }
    }
    // rows may keep tails at obstructed exponents (non-pivot columns); a
    // pure q^{-n} row exists exactly when the Serre pairings at n vanish
    return basis;
}

// monomial numerators theta^{a-4j} F^j as integer series
std::vector<ZSeries> monomials_half_integral(long a, long prec) {
    ZSeries th = z_theta(prec), f2 = z_f2(prec);
    std::vector<ZSeries> out;
    for (long j = 0; 4 * j <= a; ++j) {
        ZSeries m = z_mul(z_pow(th, a - 4 * j, prec), z_pow(f2, j, prec), prec);
        out.push_back(std::move(m));
    }
    return out;
}

// weakly holomorphic weight 1/2 - m plus forms with poles <= 4*ell, as
// echelonized sparse Laurent data over exponents [-4 ell, pos_prec)
std::vector<SparseForm> plus_space_echelon(long m, long ell, long pos_prec) {
    long a = 24 * ell - 2 * m + 1;
    if (a < 1) throw BadWeight("basis: pole bound too small for this weight");
    long lo = -4 * ell;
    long nmons = a / 4 + 1;
    // conditions must reach past the Sturm range so the kernel is exact
    long cond_hi = std::max(pos_prec, 2 * nmons + 16);
    long series_prec = cond_hi - lo;
    auto mons = monomials_half_integral(a, series_prec);
    ZSeries d4 = z_rescale(z_delta((series_prec + 4 * ell) / 4 + 2), 4, series_prec + 4 * ell);
    // unit part of Delta(4 tau)^ell
    ZSeries dl = z_pow(d4, ell, series_prec + 4 * ell);
    ZSeries unit(dl.begin() + 4 * ell, dl.end());
    std::vector<ILaurent> ls;
    for (auto& mn : mons) ls.push_back({lo, z_div_unit(mn, unit, series_prec)});
    // plus condition: coefficients at e = 2,3 mod 4 vanish
    std::vector<std::vector<Rat>> M;
    for (long e = lo; e < cond_hi; ++e) {
        long r = ((e % 4) + 4) % 4;
        if (r != 2 && r != 3) continue;
        std::vector<Rat> row;
        row.reserve(ls.size());
        for (const auto& l : ls) row.push_back(Rat(l.at(e)));
        M.push_back(std::move(row));
    }
    auto ker = kernel(std::move(M), static_cast<long>(ls.size()));
    std::vector<SparseForm> forms;
    for (const auto& v : ker) forms.push_back(combine(ls, v, lo, pos_prec));
    return echelon_on_poles(std::move(forms));
}

QExpansion sparse_to_q(const SparseForm& f) {
    QExpansion s(1, f.prec);
    for (const auto& [e, c] : f.coeff) s.set(e, c);
    return s;
}

} // namespace

void PrincipalPartSpec::add(long gamma, long n_scaled, const Rat& mult) {
    if (mult.is_zero()) return;
    long g = ((gamma % (2 * N)) + 2 * N) % (2 * N);
    // pole exponents satisfy -n = gamma^2/4N mod 1
    long res = ((-n_scaled % (4 * N)) + 4 * N) % (4 * N);
    if (res != (g * g) % (4 * N)) throw SupportViolation("PrincipalPartSpec: n incompatible with gamma");
    auto key = std::make_pair(g, n_scaled);
    auto it = entries.find(key);
    if (it == entries.end())
        entries[key] = mult;
    else {
        it->second += mult;
        if (it->second.is_zero()) entries.erase(it);
    }
}

PrincipalPartSpec PrincipalPartSpec::from_plus(long n_plus, const Rat& mult) {
    PrincipalPartSpec a;
    a.N = 1;
    long r = ((n_plus % 4) + 4) % 4;
    if (r == 1 || r == 2) throw SupportViolation("PrincipalPartSpec: pole index must be 0,3 mod 4");
    a.add(r == 0 ? 0 : 1, n_plus, mult);
    return a;
}

PrincipalPartSpec PrincipalPartSpec::of_plus_form(const weil::PlusForm& g) {
    PrincipalPartSpec a;
    a.N = 1;
    for (const auto& [e, c] : g.series.terms()) {
        if (e >= 0) break;
        long r = ((e % 4) + 4) % 4;
        a.add(r == 0 ? 0 : 1, -e, c);
    }
    return a;
}

ObstructionSpace obstruction_space(long m, long prec) {
    if (m % 2 != 0) throw BadWeight("obstruction_space: m must be even");
    ObstructionSpace os;
    os.m = m;
    os.prec = prec;
    long a = 3 + 2 * m; // weight 3/2 + m = a/2
    auto mons = monomials_half_integral(a, prec);
    std::vector<ILaurent> ls;
    for (auto& mn : mons) ls.push_back({0, std::move(mn)});
    // plus space in this weight: support on n = 0,3 mod 4; cusp: a(0) = 0
    std::vector<std::vector<Rat>> M;
    for (long e = 0; e < prec; ++e) {
        long r = e % 4;
        bool kill = (r == 1 || r == 2) || (e == 0);
        if (!kill) continue;
        std::vector<Rat> row;
        row.reserve(ls.size());
        for (const auto& l : ls) row.push_back(Rat(l.at(e)));
        M.push_back(std::move(row));
    }
    auto ker = kernel(std::move(M), static_cast<long>(ls.size()));
    std::vector<SparseForm> forms;
    for (const auto& v : ker) forms.push_back(combine(ls, v, 0, prec));
    // echelonize on leading exponents
    std::vector<SparseForm> basis;
    for (auto& f : forms) {
        for (const auto& b : basis) {
            long e0 = b.coeff.begin()->first;
            auto it = f.coeff.find(e0);
            if (it != f.coeff.end()) {
                Rat c = it->second;
                for (const auto& [e, v] : b.coeff) {
                    Rat nv = f.coeff.count(e) ? f.coeff[e] - c * v : -c * v;
                    if (nv.is_zero())
                        f.coeff.erase(e);
                    else
                        f.coeff[e] = nv;
                }
            }
        }
        if (f.coeff.empty()) continue;
        Rat inv = f.coeff.begin()->second.inverse();
        for (auto& [e, v] : f.coeff) v *= inv;
        basis.push_back(std::move(f));
        std::sort(basis.begin(), basis.end(),
                  [](const SparseForm& x, const SparseForm& y) { return x.coeff.begin()->first < y.coeff.begin()->first; });
    }
    for (const auto& b : basis) os.basis.push_back(sparse_to_q(b));
    long expect = lift::dim_cusp_forms_level1(2 * m + 2);
    if (static_cast<long>(os.basis.size()) != expect)
        throw std::logic_error("obstruction_space: dimension disagrees with the monomial count");
    return os;
}

Rat serre_pairing(const PrincipalPartSpec& a, const QExpansion& b_plus) {
    if (a.N != 1) throw LevelMismatch("serre_pairing: plus-space pairing needs N = 1");
    Rat s(0);
    for (const auto& [key, mult] : a.entries) s += mult * b_plus.coeff(key.second, 1);
    return s;
}

ObstructionResult obstruction_test(const PrincipalPartSpec& a, long m) {
    long need = 1;
    for (const auto& [key, mult] : a.entries) need = std::max(need, key.second + 8);
    ObstructionSpace os = obstruction_space(m, need + 8);
    ObstructionResult res;
    for (size_t i = 0; i < os.basis.size(); ++i) {
        Rat p = serre_pairing(a, os.basis[i]);
        res.pairings.push_back(p);
        if (!p.is_zero() && res.passes) {
            res.passes = false;
            res.witness_index = static_cast<long>(i);
        }
    }
    return res;
}

WeaklyHolomorphicBasis basis_weakly_holomorphic(long m, long max_pole, long pos_prec) {
    if (m % 2 != 0 || m < 0) throw BadWeight("basis_weakly_holomorphic: m must be even and >= 0");
    WeaklyHolomorphicBasis out;
    out.m = m;
    out.max_pole = max_pole;
    long ell = (max_pole + 3) / 4;
    if (ell < 1) ell = 1;
    auto forms = plus_space_echelon(m, ell, pos_prec);
    for (auto& f : forms) {
        long n = -f.coeff.begin()->first;
        if (n <= max_pole) out.forms.push_back(weil::PlusForm(m, sparse_to_q(f)));
    }
    // obstructed = admissible n whose delta principal part pairs nontrivially
    // with some cusp form of weight 3/2 + m
    ObstructionSpace os = obstruction_space(m, 4 * ell + 10);
    for (long n = 1; n <= max_pole; ++n) {
        long r = n % 4;
        if (r == 1 || r == 2) continue;
        for (const auto& b : os.basis)
            if (!b.coeff(n, 1).is_zero()) {
                out.obstructed.push_back(n);
                break;
            }
    }
    // duality audit: the echelon misses exactly one lead per binding cusp row
    long adm = 0;
    for (long n = 1; n <= 4 * ell; ++n)
        if (n % 4 == 0 || n % 4 == 3) ++adm;
    long binding = 0;
    for (const auto& b : os.basis)
        if (b.lead() <= 4 * ell) ++binding;
    if (static_cast<long>(forms.size()) + binding != adm)
        throw std::logic_error("basis: realizable count disagrees with Serre duality");
    std::sort(out.forms.begin(), out.forms.end(), [](const weil::PlusForm& x, const weil::PlusForm& y) {
        return x.series.lead() < y.series.lead();
    });
    return out;
}

weil::PlusForm basis_form(long m, long n, long pos_prec) {
    auto res = obstruction_test(PrincipalPartSpec::from_plus(n), m);
    if (!res.passes) {
        std::string msg =
            "basis_form: principal part q^{-" + std::to_string(n) + "} is obstructed; pairings:";
        for (const auto& p : res.pairings) msg += " " + p.str();
        throw Obstructed(msg, n);
    }
    auto basis = basis_weakly_holomorphic(m, n, pos_prec);
    for (const auto& f : basis.forms)
        if (f.series.lead() == -n) {
            // a zero-pairing pole comes out pure in the Jordan basis
            for (const auto& [e, c] : f.series.terms()) {
                if (e >= 0) break;
                if (e != -n) throw std::logic_error("basis_form: expected a pure principal part");
            }
            return f;
        }
    throw std::logic_error("basis_form: unobstructed pole missing from the echelon basis");
}

std::vector<long> heegner_generators(long n_max) {
    std::vector<long> g;
    for (long n = 1; n <= n_max; ++n)
        if (n % 4 == 0 || n % 4 == 3) g.push_back(n);
    return g;
}

RelationLattice relation_lattice(long m, long n_max) {
    RelationLattice rl;
    rl.m = m;
    rl.generators = heegner_generators(n_max);
    rl.dim_cusp_forms = lift::dim_cusp_forms_level1(2 * m + 2);
    auto basis = basis_weakly_holomorphic(m, n_max, 24);
    std::map<long, size_t> index;
    for (size_t i = 0; i < rl.generators.size(); ++i) index[rl.generators[static_cast<size_t>(i)]] = i;
    for (const auto& f : basis.forms) {
        std::vector<Rat> row(rl.generators.size());
        bool in_range = true;
        for (const auto& [e, c] : f.series.terms()) {
            if (e >= 0) break;
            auto it = index.find(-e);
            if (it == index.end()) {
                in_range = false;
                break;
            }
            row[it->second] = c;
        }
        if (in_range) rl.rows.push_back(std::move(row));
    }
    // rank by elimination
    auto rows = rl.rows;
    long rank = 0;
    for (size_t c = 0; c < rl.generators.size() && rank < static_cast<long>(rows.size()); ++c) {
        long pr = -1;
        for (size_t i = static_cast<size_t>(rank); i < rows.size(); ++i)
            if (!rows[i][c].is_zero()) {
                pr = static_cast<long>(i);
                break;
            }
        if (pr < 0) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(pr)]);
        Rat inv = rows[static_cast<size_t>(rank)][c].inverse();
        for (auto& x : rows[static_cast<size_t>(rank)]) x *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<long>(i) == rank) continue;
            Rat fcoef = rows[i][c];
            if (fcoef.is_zero()) continue;
            for (size_t j = 0; j < rl.generators.size(); ++j) rows[i][j] -= fcoef * rows[static_cast<size_t>(rank)][j];
        }
        ++rank;
    }
    rl.rank = rank;
    rl.quotient_rank = static_cast<long>(rl.generators.size()) - rank;
    return rl;
}

weil::PlusForm paper_example_g(long prec) {
    long hol_prec = prec + 4;
    ZSeries th = z_theta(hol_prec);
    auto h52z = classical::cohen_eisenstein_5_2_integer(hol_prec);
    auto [e10, d10] = z_eisenstein(10, hol_prec / 4 + 2);
    auto [e8, d8] = z_eisenstein(8, hol_prec / 4 + 2);
    if (d10 != 1 || d8 != 1) throw std::logic_error("E8/E10 should have integer coefficients");
    ZSeries a = z_mul(z_rescale(e10, 4, hol_prec), th, hol_prec);
    ZSeries b = z_mul(z_rescale(e8, 4, hol_prec), h52z, hol_prec);
    ZSeries num(static_cast<size_t>(hol_prec));
    for (long i = 0; i < hol_prec; ++i) num[static_cast<size_t>(i)] = a[static_cast<size_t>(i)] - b[static_cast<size_t>(i)];
    ZSeries d4 = z_rescale(z_delta(hol_prec / 4 + 2), 4, hol_prec + 4);
    ZSeries unit(d4.begin() + 4, d4.end());
    ZSeries g = z_div_unit(num, unit, hol_prec);
    // normalize the leading coefficient to 1 (the displayed combination
    // evaluates to 12 times the echelon-normalized form)
    Rat lead(0);
    for (const auto& z : g)
        if (sgn(z) != 0) {
            lead = Rat(z);
            break;
        }
    if (lead.is_zero()) throw std::logic_error("paper_example_g: zero numerator");
    QExpansion s(1, prec);
    for (long i = 0; i < hol_prec && i - 4 < prec; ++i)
        if (sgn(g[static_cast<size_t>(i)]) != 0)
            s.set(i - 4, Rat(g[static_cast<size_t>(i)]) / lead);
    return weil::PlusForm(2, s);
}

} // namespace gkzlift::gkz
