#include "qcrystal/branching.hpp"

#include <cstdlib>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qcrystal/iota.hpp"
#include "qcrystal/oracle.hpp"

namespace qcrystal {

std::string KWeight::str() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out << ",";
        out << coords[i];
    }
    out << ")";
    return out.str();
}

bool kweight_dominant(const KWeight& nu, int n) {
    const std::size_t m = nu.m();
    if (m != static_cast<std::size_t>(rank_m(n))) return false;
    if (n % 2 == 0) {
        for (std::size_t i = 0; i + 2 < m; ++i)
            if (nu.coords[i] < nu.coords[i + 1]) return false;
        if (m >= 2 && nu.coords[m - 2] < std::labs(nu.coords[m - 1])) return false;
        return true;
    }
    for (std::size_t i = 0; i + 1 < m; ++i)
        if (nu.coords[i] < nu.coords[i + 1]) return false;
    return nu.coords[m - 1] >= 0;
}

bool branch_predicate(const CrystalGraph& g, int v, const KWeight& nu) {
    const int n = g.n();
    const int m = rank_m(n);
    if (nu.m() != static_cast<std::size_t>(m))
        throw std::invalid_argument("branch_predicate: nu has wrong rank");
    for (int i = 1; i <= m; ++i)
        if (deg(g, 2 * i - 1, v) != std::labs(nu.coords[i - 1])) return false;
    for (int i = 1; 2 * i <= n - 1; ++i)
        if (deg(g, 2 * i, v) != 0) return false;
    for (int i = 1; i <= m - 1; ++i) {
        const int t = static_cast<int>(std::labs(nu.coords[i]));
        const int c = b_tilde_power(g, 2 * i, 2 * i - 1, t, v);
        if (c < 0 || deg(g, 2 * i + 1, c) != 0) return false;
    }
    return true;
}

long branch_multiplicity(const CrystalGraph& g, const KWeight& nu) {
    const int n = g.n();
    if (!kweight_dominant(nu, n))
        throw std::invalid_argument("branch_multiplicity: nu is not dominant");
    long count = 0;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (branch_predicate(g, static_cast<int>(v), nu)) ++count;
    if (n % 2 == 0 && nu.coords.back() != 0) {
        if (count % 2 != 0)
            throw InternalInconsistency("odd raw count in the halving case for nu=" + nu.str());
        return count / 2;
    }
    return count;
}

BranchTable branch_table(const CrystalGraph& g) {
    BranchTable table;
    table.lambda = g.lambda;
    const int n = g.n();
    const int m = rank_m(n);

    if (n == 2) {
        // sl_2 string: one copy of each so_2 weight nu with |nu| <= lambda,
        // nu = lambda (mod 2).
        const long l = g.lambda.coords[0];
        for (long nu = -l; nu <= l; nu += 2) table.entries[KWeight({nu})] = 1;
        return table;
    }

    std::set<std::vector<long>> profiles;
    for (std::size_t v = 0; v < g.size(); ++v) {
        std::vector<long> p(m);
        for (int i = 1; i <= m; ++i) p[i - 1] = deg(g, 2 * i - 1, static_cast<int>(v));
        profiles.insert(std::move(p));
    }

    std::set<std::vector<long>> candidates;
    for (const auto& p : profiles) {
        candidates.insert(p);
        if (n % 2 == 0 && p.back() != 0) {
            std::vector<long> q = p;
            q.back() = -q.back();
            candidates.insert(std::move(q));
        }
    }

    for (const auto& c : candidates) {
        KWeight nu(c);
        if (!kweight_dominant(nu, n)) continue;
        const long mult = branch_multiplicity(g, nu);
        if (mult > 0) table.entries[nu] = mult;
    }
    return table;
}

std::string to_tsv(const BranchTable& table) {
    std::ostringstream out;
    for (const auto& [nu, mult] : table.entries) {
        for (long c : nu.coords) out << c << "\t";
        out << mult << "\n";
    }
    return out.str();
}

std::string to_json(const BranchTable& table) {
    nlohmann::ordered_json j;
    j["n"] = table.lambda.n;
    j["lambda"] = table.lambda.coords;
    auto& entries = j["entries"] = nlohmann::ordered_json::array();
    for (const auto& [nu, mult] : table.entries) {
        nlohmann::ordered_json rec;
        rec["nu"] = nu.coords;
        rec["multiplicity"] = mult;
        rec["dim"] = dim_so(nu, table.lambda.n).get_str();
        entries.push_back(std::move(rec));
    }
    return j.dump(2) + "\n";
}

} // namespace qcrystal
