#pragma once

// Character-theoretic computation of the same branching decomposition,
// independent of the deg / B-tilde machinery: the joint spectrum of the
// commuting Cartan generators b_1, b_3, ..., b_{2m-1} on V(lambda) equals
// the joint spectrum of h_1, h_3, ..., h_{2m-1} (each b_{2i-1} = e + f
// inside its own sl_2 triple, and the odd-node triples pairwise commute, so
// the conjugations e + f ~ h can be performed simultaneously).  The
// resulting X_k-character is decomposed by greedy triangular subtraction of
// Weyl-character-formula characters of so_n (type B_m for n odd, D_m for n
// even).
//
// Exponent vectors are stored doubled so the half-integral rho of type B
// stays in Z.

#include <gmpxx.h>

#include <map>
#include <vector>

#include "qcrystal/branching.hpp"
#include "qcrystal/crystal.hpp"

namespace qcrystal {

enum class SoType { B, D };

inline SoType so_type_for(int n) { return n % 2 == 1 ? SoType::B : SoType::D; }

struct CharacterPoly {
    int m = 1;
    // doubled exponent vector -> nonzero coefficient; lex-ordered keys
    std::map<std::vector<long>, mpz_class> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const std::vector<long>& key, const mpz_class& c);
    mpz_class coefficient_sum() const;
    bool operator==(const CharacterPoly& o) const { return m == o.m && terms == o.terms; }
};

// xi <= nu in the dominance order generated by {e_i +- e_{i+1}} (and e_m for
// type B); doubled coordinates.
bool dominance_leq(const std::vector<long>& xi, const std::vector<long>& nu, SoType type);
bool doubled_dominant(const std::vector<long>& xi, SoType type);

// Sum over B(lambda) of e^{(wt_1, wt_3, ..., wt_{2m-1})}, doubled.
CharacterPoly xk_character(const CrystalGraph& g);

// Weyl character formula for the irreducible so-character of highest weight
// nu.  Type D requires m >= 2.  The denominator division must be exact.
CharacterPoly so_irreducible_character(const KWeight& nu, SoType type);

// Greedy triangular subtraction of irreducible so-characters from
// xk_character.  Throws InternalInconsistency on any negative multiplicity,
// non-dominant maximal term, or nonzero final residual.
BranchTable decompose(const CrystalGraph& g);

mpz_class dim_so(const KWeight& nu, SoType type);
mpz_class dim_so(const KWeight& nu, int n); // dispatches on n; 1 for n = 2
mpz_class dim_sl(const DominantWeight& lambda);

} // namespace qcrystal
