#pragma once

#include <optional>
#include <vector>

#include "gkzlift/weil.hpp"

namespace gkzlift::gkz {

// prescribed singular part: multiplicity at the pole q^{-n} of component
// gamma; keyed by the plus-space exponent n (so n = 0,3 mod 4 at N = 1)
struct PrincipalPartSpec {
    long N = 1;
    std::map<std::pair<long, long>, Rat> entries; // (gamma, n_scaled/4N) -> multiplicity
    void add(long gamma, long n_scaled, const Rat& mult);
    static PrincipalPartSpec from_plus(long n_plus, const Rat& mult = Rat(1));
    static PrincipalPartSpec of_plus_form(const weil::PlusForm& g);
};

// echelonized basis of cusp forms of weight 3/2 + m in the plus space at
// N = 1 (support n = 0,3 mod 4)
struct ObstructionSpace {
    long m = 0;
    long prec = 0;
    std::vector<QExpansion> basis; // strictly increasing leading exponents
};

ObstructionSpace obstruction_space(long m, long prec);

// Serre-duality pairing sum a_{gamma,n} b_{gamma,n}; b given as a scalar
// plus-space q-series at N = 1
Rat serre_pairing(const PrincipalPartSpec& a, const QExpansion& b_plus);

struct ObstructionResult {
    bool passes = true;
    long witness_index = -1; // failing basis element
    std::vector<Rat> pairings;
};
ObstructionResult obstruction_test(const PrincipalPartSpec& a, long m);

// weakly holomorphic weight 1/2 - m plus forms with echelonized principal
// parts q^{-n} + O(1), one for each realizable pole n <= max_pole
struct WeaklyHolomorphicBasis {
    long m = 0;
    long max_pole = 0;
    std::vector<weil::PlusForm> forms;      // sorted by pole order, descending exponent
    std::vector<long> obstructed;           // admissible n <= max_pole with no form
};

WeaklyHolomorphicBasis basis_weakly_holomorphic(long m, long max_pole, long pos_prec = 40);
// single form with principal part q^{-n}; throws Obstructed when none exists
weil::PlusForm basis_form(long m, long n, long pos_prec = 40);

// admissible Heegner divisor indices 0 < n <= n_max (plus convention)
std::vector<long> heegner_generators(long n_max);

struct RelationLattice {
    long m = 0;
    std::vector<long> generators;            // divisor indices n
    std::vector<std::vector<Rat>> rows;      // principal parts over the generators
    long rank = 0;
    long quotient_rank = 0;
    long dim_cusp_forms = 0;                 // dim S_{2m+2}(SL2(Z)) by monomial count
};

RelationLattice relation_lattice(long m, long n_max);

// the worked-example form (E10(4t) theta - E8(4t) H_{5/2}) / Delta(4t),
// computed by the dense integer fast path; exact to the given precision
weil::PlusForm paper_example_g(long prec);

} // namespace gkzlift::gkz
