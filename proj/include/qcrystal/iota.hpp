#pragma once

// The deg_i / B-tilde_i operators on crystal vertices: deg_i(b) is eps_i(b)
// when phi_i(b) is even and eps_i(b)+1 when odd; B-tilde_i is E-tilde_i or
// F-tilde_i by the same parity.  B-tilde_i(b) is absent exactly when
// deg_i(b) = 0, and is an involution on its domain.

#include <optional>

#include "qcrystal/crystal.hpp"

namespace qcrystal {

int deg(const CrystalGraph& g, int i, int v);

// Target vertex, or -1 when absent.
int b_tilde(const CrystalGraph& g, int i, int v);

// (B-tilde_j B-tilde_k)^t applied to v, applying B-tilde_k first in each of
// the t rounds; -1 as soon as any intermediate application is absent.
int b_tilde_power(const CrystalGraph& g, int j, int k, int t, int v);

// Word-level versions, defined on arbitrary words (used for the n = 2 tensor
// law on b (x) u with u a free word over {1, 2}).
int word_deg(const Word& w, int i);
std::optional<Word> word_b_tilde(const Word& w, int i);

} // namespace qcrystal
