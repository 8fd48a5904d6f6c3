#include "qcrystal/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace qcrystal {

void CharacterPoly::add(const std::vector<long>& key, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

mpz_class CharacterPoly::coefficient_sum() const {
    mpz_class s = 0;
    for (const auto& [k, c] : terms) s += c;
    return s;
}

bool dominance_leq(const std::vector<long>& xi, const std::vector<long>& nu, SoType type) {
    const std::size_t m = xi.size();
    std::vector<long> prefix(m);
    long acc = 0;
    for (std::size_t k = 0; k < m; ++k) {
        acc += nu[k] - xi[k];
        prefix[k] = acc;
    }
    if (type == SoType::B) {
        for (long p : prefix)
            if (p < 0) return false;
        return true;
    }
    // D_m: coefficients on the simple roots e_i - e_{i+1} (i < m) and
    // e_{m-1} + e_m must be nonnegative integers.
    for (std::size_t k = 0; k + 2 < m; ++k)
        if (prefix[k] < 0) return false;
    const long pm = prefix[m - 1];
    if (pm < 0 || pm % 4 != 0) return false;
    if (m >= 2 && prefix[m - 2] - pm / 2 < 0) return false;
    if (m == 1) return pm == 0;
    return true;
}

bool doubled_dominant(const std::vector<long>& xi, SoType type) {
    const std::size_t m = xi.size();
    if (type == SoType::B) {
        for (std::size_t i = 0; i + 1 < m; ++i)
            if (xi[i] < xi[i + 1]) return false;
        return xi[m - 1] >= 0;
    }
    for (std::size_t i = 0; i + 2 < m; ++i)
        if (xi[i] < xi[i + 1]) return false;
    if (m >= 2 && xi[m - 2] < std::labs(xi[m - 1])) return false;
    return true;
}

CharacterPoly xk_character(const CrystalGraph& g) {
    const int m = rank_m(g.n());
    CharacterPoly ch;
    ch.m = m;
    for (std::size_t v = 0; v < g.size(); ++v) {
        std::vector<long> key(m);
        for (int i = 1; i <= m; ++i) key[i - 1] = 2L * g.wt[v][2 * i - 2];
        ch.add(key, 1);
    }
    return ch;
}

namespace {

struct WeylElement {
    std::vector<int> perm; // image positions
    std::vector<int> sign; // +-1 per coordinate
    int det;
};

std::vector<WeylElement> weyl_group(int m, SoType type) {
    std::vector<int> base(m);
    std::iota(base.begin(), base.end(), 0);
    std::vector<WeylElement> group;
    std::vector<int> perm = base;
    do {
        int psign = 1;
        { // permutation parity by counting inversions
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    if (perm[i] > perm[j]) psign = -psign;
        }
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            int flips = __builtin_popcount(mask);
            if (type == SoType::D && flips % 2 != 0) continue;
            WeylElement w;
            w.perm = perm;
            w.sign.assign(m, 1);
            for (int i = 0; i < m; ++i)
                if (mask & (1u << i)) w.sign[i] = -1;
            w.det = psign * (flips % 2 == 0 ? 1 : -1);
            group.push_back(std::move(w));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return group;
}

std::vector<long> apply_weyl(const WeylElement& w, const std::vector<long>& x) {
    std::vector<long> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = w.sign[i] * x[w.perm[i]];
    return y;
}

// Alternating orbit sum A_mu = sum_w det(w) e^{w(mu)}.
CharacterPoly alternating_sum(const std::vector<long>& mu, const std::vector<WeylElement>& group) {
    CharacterPoly a;
    a.m = static_cast<int>(mu.size());
    for (const auto& w : group) a.add(apply_weyl(w, mu), w.det);
    return a;
}

// Exact division of multivariate Laurent polynomials under the lex term
// order; throws if the division does not terminate with zero remainder.
CharacterPoly exact_divide(CharacterPoly num, const CharacterPoly& den, std::size_t step_limit) {
    if (den.is_zero()) throw InternalInconsistency("character division by zero");
    const auto& lead = *den.terms.rbegin();
    CharacterPoly quo;
    quo.m = num.m;
    std::size_t steps = 0;
    while (!num.is_zero()) {
        if (++steps > step_limit)
            throw InternalInconsistency("Weyl character division does not terminate");
        const auto& top = *num.terms.rbegin();
        if (!mpz_divisible_p(top.second.get_mpz_t(), lead.second.get_mpz_t()))
            throw InternalInconsistency("Weyl character division: nonintegral step");
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), top.second.get_mpz_t(), lead.second.get_mpz_t());
        std::vector<long> shift(top.first.size());
        for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = top.first[i] - lead.first[i];
        quo.add(shift, c);
        for (const auto& [e, a] : den.terms) {
            std::vector<long> key(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) key[i] = e[i] + shift[i];
            num.add(key, -c * a);
        }
    }
    return quo;
}

std::vector<long> doubled_rho(int m, SoType type) {
    std::vector<long> rho(m);
    for (int i = 0; i < m; ++i) rho[i] = type == SoType::B ? 2L * (m - i) - 1 : 2L * (m - 1 - i);
    return rho;
}

} // namespace

CharacterPoly so_irreducible_character(const KWeight& nu, SoType type) {
    const int m = static_cast<int>(nu.m());
    if (m < 1) throw std::invalid_argument("so_irreducible_character: m must be >= 1");
    if (type == SoType::D && m < 2)
        throw std::invalid_argument("so_irreducible_character: type D_1 is not allowed");
    const int n_equiv = type == SoType::B ? 2 * m + 1 : 2 * m;
    if (!kweight_dominant(nu, n_equiv))
        throw std::invalid_argument("so_irreducible_character: nu is not dominant");

    const auto group = weyl_group(m, type);
    const std::vector<long> rho = doubled_rho(m, type);
    std::vector<long> top(m);
    for (int i = 0; i < m; ++i) top[i] = 2 * nu.coords[i] + rho[i];

    CharacterPoly numerator = alternating_sum(top, group);
    CharacterPoly denominator = alternating_sum(rho, group);
    const std::size_t limit = mpz_class(4 * dim_so(nu, type) + 1024).get_ui();
    return exact_divide(std::move(numerator), denominator, limit);
}

BranchTable decompose(const CrystalGraph& g) {
    const int n = g.n();
    BranchTable table;
    table.lambda = g.lambda;
    CharacterPoly residual = xk_character(g);

    if (n == 2) {
        // so_2 is a torus: every integer weight is its own one-dimensional
        // character.
        for (const auto& [key, c] : residual.terms) {
            if (c <= 0) throw InternalInconsistency("decompose: nonpositive weight multiplicity");
            table.entries[KWeight({key[0] / 2})] = c.get_si();
        }
        return table;
    }

    const SoType type = so_type_for(n);
    std::map<std::vector<long>, CharacterPoly> char_cache;
    while (!residual.is_zero()) {
        // The lex-largest nonzero term of a Weyl-invariant character is
        // dominance-maximal and dominant.
        const std::vector<long> key = residual.terms.rbegin()->first;
        const mpz_class coeff = residual.terms.rbegin()->second;
        if (!doubled_dominant(key, type))
            throw InternalInconsistency("decompose: maximal term is not dominant");
        if (coeff <= 0) throw InternalInconsistency("decompose: negative multiplicity");

        std::vector<long> halved(key.size());
        for (std::size_t i = 0; i < key.size(); ++i) halved[i] = key[i] / 2;
        KWeight nu(halved);

        auto it = char_cache.find(key);
        if (it == char_cache.end()) {
            CharacterPoly chi = so_irreducible_character(nu, type);
            for (const auto& [e, c] : chi.terms)
                if (!dominance_leq(e, key, type))
                    throw InternalInconsistency("decompose: character support exceeds its weight");
            it = char_cache.emplace(key, std::move(chi)).first;
        }

        const mpz_class mult = coeff;
        for (const auto& [e, c] : it->second.terms) residual.add(e, -mult * c);
        table.entries[nu] = mult.get_si();
    }
    return table;
}

mpz_class dim_so(const KWeight& nu, SoType type) {
    const int m = static_cast<int>(nu.m());
    const std::vector<long> rho = doubled_rho(m, type);
    std::vector<long> x(m);
    for (int i = 0; i < m; ++i) x[i] = 2 * nu.coords[i] + rho[i];
    mpz_class num = 1, den = 1;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            num *= mpz_class(x[i] - x[j]) * mpz_class(x[i] + x[j]);
            den *= mpz_class(rho[i] - rho[j]) * mpz_class(rho[i] + rho[j]);
        }
        if (type == SoType::B) {
            num *= x[i];
            den *= rho[i];
        }
    }
    mpz_class d;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw InternalInconsistency("dim_so: nonintegral Weyl dimension");
    mpz_divexact(d.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return d;
}

mpz_class dim_so(const KWeight& nu, int n) {
    if (n == 2) return 1;
    return dim_so(nu, so_type_for(n));
}

mpz_class dim_sl(const DominantWeight& lambda) {
    lambda.validate();
    const int n = lambda.n;
    mpz_class num = 1, den = 1;
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            long s = j - i;
            for (int t = i; t < j; ++t) s += lambda.coords[t - 1];
            num *= s;
            den *= j - i;
        }
    }
    mpz_class d;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw InternalInconsistency("dim_sl: nonintegral Weyl dimension");
    mpz_divexact(d.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return d;
}

} // namespace qcrystal
