#pragma once

// Type-A crystals.  Vertices are words of letters in [1,n]; the operators
// come from the natural crystal letter rule together with the tensor product
// rule, applied letter by letter.  Position 1 of a word is the left tensor
// factor b_1.  B(lambda) is enumerated as the BFS closure of the highest
// word under all F-tilde_i; correctness of the convention is enforced by the
// invariant suite (partial inverse, string identity, dimension count) rather
// than by a tableau signature rule.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qcrystal/errors.hpp"

namespace qcrystal {

struct DominantWeight {
    int n = 2;                 // sl_n
    std::vector<int> coords;   // n-1 entries, all >= 0

    DominantWeight() = default;
    DominantWeight(int n_, std::vector<int> coords_);
    void validate() const; // throws std::invalid_argument
};

using Word = std::vector<int>;

// rank of so_n
inline int rank_m(int n) { return n / 2; }

// Natural-crystal letter statistics for node i.
inline int letter_phi(int i, int letter) { return letter == i ? 1 : 0; }
inline int letter_eps(int i, int letter) { return letter == i + 1 ? 1 : 0; }

struct TensorStats {
    bool f_on_right; // F-tilde acts on the right factor
    bool e_on_right; // E-tilde acts on the right factor
    int phi;
    int eps;
};

// Tensor product rule statistics and operator placement for b_1 (x) b_2.
TensorStats tensor_stats(int phi1, int eps1, int phi2, int eps2);

int word_phi(const Word& w, int i);
int word_eps(const Word& w, int i);
std::optional<Word> word_f_tilde(const Word& w, int i);
std::optional<Word> word_e_tilde(const Word& w, int i);
// (<h_1, wt>, ..., <h_{n-1}, wt>); entry i-1 is (#letters i) - (#letters i+1).
std::vector<int> word_weight(const Word& w, int n);

// Partition row lengths: row_i = sum_{j >= i} lambda_j, trailing zeros dropped.
std::vector<long> shape_of(const DominantWeight& lambda);

// Word of the tableau whose row r is filled with letter r.  E-tilde_i of the
// result is absent for all i (asserted by build_crystal).
Word highest_word(const DominantWeight& lambda);

struct CrystalGraph {
    DominantWeight lambda;
    std::vector<Word> words;
    // per vertex, per node i (index i-1)
    std::vector<std::vector<int>> phi;
    std::vector<std::vector<int>> eps;
    std::vector<std::vector<int>> wt;
    // f_edge[i-1][v] = target vertex of F-tilde_i, or -1; e_edge is its inverse
    std::vector<std::vector<int>> f_edge;
    std::vector<std::vector<int>> e_edge;

    int n() const { return lambda.n; }
    std::size_t size() const { return words.size(); }
    int vertex_of(const Word& w) const; // -1 if not present

private:
    friend CrystalGraph build_crystal(const DominantWeight&, std::size_t);
    struct WordHash {
        std::size_t operator()(const Word& w) const {
            std::size_t h = 1469598103934665603ull;
            for (int c : w) {
                h ^= static_cast<std::size_t>(c) + 0x9e3779b9ull + (h << 6) + (h >> 2);
            }
            return h;
        }
    };
    std::unordered_map<Word, int, WordHash> index_;
};

// Vertex budget: CRYSTAL_BRANCH_BUDGET env var, else 200000.
std::size_t default_budget();

// BFS closure of highest_word(lambda) under all F-tilde_i.
// Throws BudgetExceeded if the vertex count would exceed the budget.
CrystalGraph build_crystal(const DominantWeight& lambda, std::size_t budget = default_budget());

// DOT export: node label = word string, edge label = i.
std::string export_dot(const CrystalGraph& g);
// JSON export per the published schema; optionally with per-node "deg" and
// "btilde" annotations.
std::string export_json(const CrystalGraph& g, bool iota_annotations = false);

std::string word_str(const Word& w);

} // namespace qcrystal
