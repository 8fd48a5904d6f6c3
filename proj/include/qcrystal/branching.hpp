#pragma once

// The combinatorial branching formula [lambda : nu]: counts of crystal
// vertices cut out by the deg / B-tilde predicate, halved in the n even,
// nu_m != 0 case.

#include <map>
#include <string>
#include <vector>

#include "qcrystal/crystal.hpp"

namespace qcrystal {

// Integer so_n weight in epsilon coordinates (nu_1, nu_3, ..., nu_{2m-1}).
struct KWeight {
    std::vector<long> coords; // m entries

    KWeight() = default;
    explicit KWeight(std::vector<long> c) : coords(std::move(c)) {}
    std::size_t m() const { return coords.size(); }
    bool operator==(const KWeight& o) const { return coords == o.coords; }
    std::string str() const;
};

// n even:  nu_1 >= ... >= nu_{m-1} >= |nu_m|  (every weight dominant for m = 1)
// n odd:   nu_1 >= ... >= nu_m >= 0
bool kweight_dominant(const KWeight& nu, int n);

// Lexicographically descending order, the output order everywhere.
struct KWeightLexDesc {
    bool operator()(const KWeight& a, const KWeight& b) const { return a.coords > b.coords; }
};

struct BranchTable {
    DominantWeight lambda;
    std::map<KWeight, long, KWeightLexDesc> entries; // nonzero multiplicities only
};

// The three-clause membership test for b in the counted set:
//  (a) deg_{2i-1}(b) = |nu_i| for i in [1,m]
//  (b) deg_{2i}(b) = 0 for every even node 2i <= n-1
//  (c) for i in [1,m-1], (B-tilde_{2i} B-tilde_{2i-1})^{|nu_{i+1}|} b exists
//      and has deg_{2i+1} = 0
bool branch_predicate(const CrystalGraph& g, int v, const KWeight& nu);

// Multiplicity [lambda : nu]; nu must be dominant.  In the n even,
// nu_m != 0 case the raw predicate count must be even (theorem), otherwise
// InternalInconsistency is thrown.
long branch_multiplicity(const CrystalGraph& g, const KWeight& nu);

// Full decomposition table; candidate nu are read off the deg profiles
// occurring in B(lambda), with both signs of nu_m for n even.
// n = 2 uses the sl_2-string closed form directly.
BranchTable branch_table(const CrystalGraph& g);

std::string to_tsv(const BranchTable& table);
// JSON mirror with per-entry so_n dimensions.
std::string to_json(const BranchTable& table);

} // namespace qcrystal
