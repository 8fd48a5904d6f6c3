#include "qcrystal/crystal.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "qcrystal/iota.hpp"
#include "json.hpp"

namespace qcrystal {

DominantWeight::DominantWeight(int n_, std::vector<int> coords_) : n(n_), coords(std::move(coords_)) {
    validate();
}

void DominantWeight::validate() const {
    if (n < 2) throw std::invalid_argument("DominantWeight: n must be >= 2");
    if (coords.size() != static_cast<std::size_t>(n - 1))
        throw std::invalid_argument("DominantWeight: lambda must have n-1 entries");
    for (int c : coords)
        if (c < 0) throw std::invalid_argument("DominantWeight: lambda entries must be >= 0");
}

TensorStats tensor_stats(int phi1, int eps1, int phi2, int eps2) {
    TensorStats s;
    s.f_on_right = eps1 < phi2;
    s.e_on_right = eps1 <= phi2;
    s.phi = phi1 + std::max(0, phi2 - eps1);
    s.eps = eps2 + std::max(0, eps1 - phi2);
    return s;
}

namespace {

// (phi_i, eps_i) of every prefix of w; entry t is the length-t prefix.
void prefix_stats(const Word& w, int i, std::vector<int>& phi, std::vector<int>& eps) {
    phi.assign(w.size() + 1, 0);
    eps.assign(w.size() + 1, 0);
    for (std::size_t t = 0; t < w.size(); ++t) {
        TensorStats s = tensor_stats(phi[t], eps[t], letter_phi(i, w[t]), letter_eps(i, w[t]));
        phi[t + 1] = s.phi;
        eps[t + 1] = s.eps;
    }
}

} // namespace

int word_phi(const Word& w, int i) {
    int phi = 0, eps = 0;
    for (int c : w) {
        TensorStats s = tensor_stats(phi, eps, letter_phi(i, c), letter_eps(i, c));
        phi = s.phi;
        eps = s.eps;
    }
    return phi;
}

int word_eps(const Word& w, int i) {
    int phi = 0, eps = 0;
    for (int c : w) {
        TensorStats s = tensor_stats(phi, eps, letter_phi(i, c), letter_eps(i, c));
        phi = s.phi;
        eps = s.eps;
    }
    return eps;
}

std::optional<Word> word_f_tilde(const Word& w, int i) {
    std::vector<int> phi, eps;
    prefix_stats(w, i, phi, eps);
    if (phi[w.size()] == 0) return std::nullopt;
    // F(prefix (x) last) acts on the last letter iff eps(prefix) < phi(last),
    // else recurses into the prefix.
    for (std::size_t t = w.size(); t >= 1; --t) {
        if (t == 1 || eps[t - 1] < letter_phi(i, w[t - 1])) {
            if (w[t - 1] != i)
                throw InternalInconsistency("word_f_tilde landed on a non-i letter");
            Word r = w;
            r[t - 1] = i + 1;
            return r;
        }
    }
    return std::nullopt; // unreachable
}

std::optional<Word> word_e_tilde(const Word& w, int i) {
    std::vector<int> phi, eps;
    prefix_stats(w, i, phi, eps);
    if (eps[w.size()] == 0) return std::nullopt;
    // E(prefix (x) last) acts on the last letter iff eps(prefix) <= phi(last).
    for (std::size_t t = w.size(); t >= 1; --t) {
        if (t == 1 || eps[t - 1] <= letter_phi(i, w[t - 1])) {
            if (w[t - 1] != i + 1)
                throw InternalInconsistency("word_e_tilde landed on a non-(i+1) letter");
            Word r = w;
            r[t - 1] = i;
            return r;
        }
    }
    return std::nullopt; // unreachable
}

std::vector<int> word_weight(const Word& w, int n) {
    std::vector<int> count(n + 2, 0);
    for (int c : w) ++count[c];
    std::vector<int> wt(n - 1);
    for (int i = 1; i <= n - 1; ++i) wt[i - 1] = count[i] - count[i + 1];
    return wt;
}

std::vector<long> shape_of(const DominantWeight& lambda) {
    lambda.validate();
    std::vector<long> rows;
    long acc = 0;
    for (int i = lambda.n - 2; i >= 0; --i) {
        acc += lambda.coords[i];
        rows.push_back(acc);
    }
    std::reverse(rows.begin(), rows.end());
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    return rows;
}

Word highest_word(const DominantWeight& lambda) {
    // Reversed row reading: bottom row first.  Under this tensor rule this,
    // and not the top-first reading, is the word all E-tilde_i kill.
    std::vector<long> rows = shape_of(lambda);
    Word w;
    for (int r = static_cast<int>(rows.size()); r >= 1; --r)
        w.insert(w.end(), static_cast<std::size_t>(rows[r - 1]), r);
    return w;
}

int CrystalGraph::vertex_of(const Word& w) const {
    auto it = index_.find(w);
    return it == index_.end() ? -1 : it->second;
}

std::size_t default_budget() {
    if (const char* env = std::getenv("CRYSTAL_BRANCH_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 200000;
}

CrystalGraph build_crystal(const DominantWeight& lambda, std::size_t budget) {
    lambda.validate();
    CrystalGraph g;
    g.lambda = lambda;
    const int n = lambda.n;

    Word h = highest_word(lambda);
    for (int i = 1; i <= n - 1; ++i)
        if (word_e_tilde(h, i))
            throw InternalInconsistency("highest word is not E-tilde-highest");

    auto add_vertex = [&](const Word& w) -> int {
        auto [it, inserted] = g.index_.emplace(w, static_cast<int>(g.words.size()));
        if (inserted) {
            if (g.words.size() >= budget)
                throw BudgetExceeded("crystal enumeration budget of " + std::to_string(budget) +
                                     " vertices exceeded");
            g.words.push_back(w);
            std::vector<int> phi(n - 1), eps(n - 1);
            for (int i = 1; i <= n - 1; ++i) {
                phi[i - 1] = word_phi(w, i);
                eps[i - 1] = word_eps(w, i);
            }
            g.phi.push_back(std::move(phi));
            g.eps.push_back(std::move(eps));
            g.wt.push_back(word_weight(w, n));
        }
        return it->second;
    };

    add_vertex(h);
    struct Edge {
        int i, from, to;
    };
    std::vector<Edge> found;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int i = 1; i <= n - 1; ++i) {
            Word w = g.words[v];
            auto fw = word_f_tilde(w, i);
            if (!fw) continue;
            const std::size_t before = g.words.size();
            const int target = add_vertex(*fw);
            found.push_back({i, v, target});
            if (g.words.size() != before) queue.push_back(target);
        }
    }
    g.f_edge.assign(n - 1, std::vector<int>(g.words.size(), -1));
    for (const Edge& e : found) g.f_edge[e.i - 1][e.from] = e.to;

    // E-tilde is the partial inverse of F-tilde.
    g.e_edge.assign(n - 1, std::vector<int>(g.words.size(), -1));
    for (int i = 0; i < n - 1; ++i)
        for (std::size_t v = 0; v < g.words.size(); ++v)
            if (g.f_edge[i][v] >= 0) g.e_edge[i][g.f_edge[i][v]] = static_cast<int>(v);

    return g;
}

std::string word_str(const Word& w) {
    std::ostringstream out;
    bool commas = std::any_of(w.begin(), w.end(), [](int c) { return c > 9; });
    for (std::size_t t = 0; t < w.size(); ++t) {
        if (commas && t > 0) out << ",";
        out << w[t];
    }
    return out.str();
}

std::string export_dot(const CrystalGraph& g) {
    std::ostringstream out;
    out << "digraph crystal {\n";
    for (std::size_t v = 0; v < g.size(); ++v)
        out << "  v" << v << " [label=\"" << word_str(g.words[v]) << "\"];\n";
    for (int i = 1; i <= g.n() - 1; ++i)
        for (std::size_t v = 0; v < g.size(); ++v)
            if (g.f_edge[i - 1][v] >= 0)
                out << "  v" << v << " -> v" << g.f_edge[i - 1][v] << " [label=\"" << i << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string export_json(const CrystalGraph& g, bool iota_annotations) {
    nlohmann::ordered_json j;
    j["n"] = g.n();
    j["lambda"] = g.lambda.coords;
    auto& vertices = j["vertices"] = nlohmann::ordered_json::array();
    for (std::size_t v = 0; v < g.size(); ++v) {
        nlohmann::ordered_json rec;
        rec["id"] = v;
        rec["word"] = g.words[v];
        rec["wt"] = g.wt[v];
        rec["phi"] = g.phi[v];
        rec["eps"] = g.eps[v];
        if (iota_annotations) {
            std::vector<int> degs;
            nlohmann::ordered_json bt;
            for (int i = 1; i <= g.n() - 1; ++i) {
                degs.push_back(deg(g, i, static_cast<int>(v)));
                int target = b_tilde(g, i, static_cast<int>(v));
                if (target < 0)
                    bt[std::to_string(i)] = nullptr;
                else
                    bt[std::to_string(i)] = target;
            }
            rec["deg"] = degs;
            rec["btilde"] = bt;
        }
        vertices.push_back(std::move(rec));
    }
    auto& edges = j["edges"] = nlohmann::ordered_json::array();
    for (int i = 1; i <= g.n() - 1; ++i)
        for (std::size_t v = 0; v < g.size(); ++v)
            if (g.f_edge[i - 1][v] >= 0)
                edges.push_back({{"i", i}, {"from", v}, {"to", g.f_edge[i - 1][v]}});
    return j.dump(2) + "\n";
}

} // namespace qcrystal
