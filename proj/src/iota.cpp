#include "qcrystal/iota.hpp"

namespace qcrystal {

int deg(const CrystalGraph& g, int i, int v) {
    const int phi = g.phi[v][i - 1];
    const int eps = g.eps[v][i - 1];
    return phi % 2 == 0 ? eps : eps + 1;
}

int b_tilde(const CrystalGraph& g, int i, int v) {
    return g.phi[v][i - 1] % 2 == 0 ? g.e_edge[i - 1][v] : g.f_edge[i - 1][v];
}

int b_tilde_power(const CrystalGraph& g, int j, int k, int t, int v) {
    for (int r = 0; r < t; ++r) {
        v = b_tilde(g, k, v);
        if (v < 0) return -1;
        v = b_tilde(g, j, v);
        if (v < 0) return -1;
    }
    return v;
}

int word_deg(const Word& w, int i) {
    const int phi = word_phi(w, i);
    const int eps = word_eps(w, i);
    return phi % 2 == 0 ? eps : eps + 1;
}

std::optional<Word> word_b_tilde(const Word& w, int i) {
    return word_phi(w, i) % 2 == 0 ? word_e_tilde(w, i) : word_f_tilde(w, i);
}

} // namespace qcrystal
