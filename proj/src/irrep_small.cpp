#include "qcrystal/irrep_small.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace qcrystal {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RatFunc(1);
    return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    RatMatrix r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    RatMatrix r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    RatMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const RatFunc& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += aik * o.at(k, j);
            }
        }
    return r;
}

RatMatrix RatMatrix::scaled(const RatFunc& c) const {
    RatMatrix r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

std::vector<RatFunc> RatMatrix::apply(const std::vector<RatFunc>& v) const {
    std::vector<RatFunc> r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            if (at(i, j).is_zero() || v[j].is_zero()) continue;
            r[i] += at(i, j) * v[j];
        }
    return r;
}

bool RatMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const RatFunc& c) { return c.is_zero(); });
}

RatMatrix RatMatrix::bar() const {
    RatMatrix r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].bar();
    return r;
}

std::optional<RatMatrix> RatMatrix::inverse() const {
    RatMatrix work = *this;
    RatMatrix inv = identity(n_);
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t pivot = col;
        while (pivot < n_ && work.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n_) return std::nullopt;
        if (pivot != col)
            for (std::size_t j = 0; j < n_; ++j) {
                std::swap(work.at(pivot, j), work.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        const RatFunc scale = work.at(col, col).inv();
        for (std::size_t j = 0; j < n_; ++j) {
            work.at(col, j) *= scale;
            inv.at(col, j) *= scale;
        }
        for (std::size_t r = 0; r < n_; ++r) {
            if (r == col || work.at(r, col).is_zero()) continue;
            const RatFunc f = work.at(r, col);
            for (std::size_t j = 0; j < n_; ++j) {
                work.at(r, j) -= f * work.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::vector<long> idivided_factor_shifts(long k, Parity p) {
    std::vector<long> f;
    if (k <= 0) return f;
    const long a = k / 2;
    if (p == Parity::even) {
        if (k % 2 == 0) {
            f.push_back(0);
            for (long b = -a + 1; b <= a - 1; ++b) f.push_back(2 * b);
        } else {
            for (long b = -a; b <= a; ++b) f.push_back(2 * b);
        }
    } else {
        if (k % 2 == 0) {
            for (long b = -a + 1; b <= a; ++b) f.push_back(2 * b - 1);
        } else {
            f.push_back(0);
            for (long b = -a + 1; b <= a; ++b) f.push_back(2 * b - 1);
        }
    }
    return f;
}

RatMatrix idivided_power(const RatMatrix& b, long k, Parity p) {
    RatMatrix r = RatMatrix::identity(b.size());
    for (long shift : idivided_factor_shifts(k, p)) {
        RatMatrix factor = b;
        const RatFunc qa(q_int(shift));
        for (std::size_t i = 0; i < b.size(); ++i) factor.at(i, i) -= qa;
        r = r * factor;
    }
    return r.scaled(RatFunc(LaurentInt(1), q_factorial(k)));
}

std::vector<RatMatrix> idivided_family(const RatMatrix& b, long k_max, Parity p) {
    std::vector<RatMatrix> fam;
    fam.push_back(RatMatrix::identity(b.size()));
    if (k_max >= 1) fam.push_back(b);
    if (k_max >= 2) {
        const RatMatrix bsq = b * b;
        for (long k = 0; k + 2 <= k_max; ++k) {
            // factors(k+2, p) = factors(k, p) with the pair +-[s] appended
            const long s = parity_of(k) == p ? k : k + 1;
            RatMatrix next = bsq * fam[static_cast<std::size_t>(k)];
            const RatFunc shift2(q_int(s) * q_int(s));
            if (!shift2.is_zero())
                next = next - fam[static_cast<std::size_t>(k)].scaled(shift2);
            next = next.scaled(RatFunc(LaurentInt(1), q_int(k + 1) * q_int(k + 2)));
            fam.push_back(std::move(next));
        }
    }
    return fam;
}

std::vector<RatMatrix> idivided_family_recursive(const RatMatrix& b, long k_max, Parity p) {
    std::vector<RatMatrix> fam;
    fam.push_back(RatMatrix::identity(b.size()));
    for (long k = 0; k < k_max; ++k) {
        RatMatrix next = b * fam[static_cast<std::size_t>(k)];
        if (k >= 1 && parity_of(k) == p)
            next = next - fam[static_cast<std::size_t>(k - 1)].scaled(RatFunc(q_int(k)));
        next = next.scaled(RatFunc(LaurentInt(1), q_int(k + 1)));
        fam.push_back(std::move(next));
    }
    return fam;
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

QPoly qpoly_scaled(const QPoly& a, const RatFunc& c) {
    QPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

QPoly qpoly_add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

bool qpoly_equal(const QPoly& a, const QPoly& b) {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const RatFunc ai = i < a.size() ? a[i] : RatFunc();
        const RatFunc bi = i < b.size() ? b[i] : RatFunc();
        if (ai != bi) return false;
    }
    return true;
}

QPoly idivided_poly(long k, Parity p) {
    QPoly r{RatFunc(1)};
    for (long shift : idivided_factor_shifts(k, p))
        r = qpoly_mul(r, QPoly{RatFunc(-q_int(shift)), RatFunc(1)});
    return qpoly_scaled(r, RatFunc(LaurentInt(1), q_factorial(k)));
}

RankTwoModule::RankTwoModule(long nu) : nu_(nu) {
    if (nu < 0) throw std::invalid_argument("RankTwoModule: nu must be >= 0");
    const std::size_t d = dim();
    l_ = RatMatrix(d);
    b1_ = RatMatrix(d);
    x_ = RatMatrix(d);
    y_ = RatMatrix(d);
    for (long k = 0; k <= 2 * nu_; ++k) {
        l_.at(k, k) = RatFunc(LaurentInt::q(nu_ - k));
        b1_.at(k, k) = RatFunc(q_int(nu_ - k));
        if (k >= 1) x_.at(k - 1, k) = RatFunc(q_int(2 * nu_ - k + 1));
        if (k + 1 <= 2 * nu_) y_.at(k + 1, k) = RatFunc(q_int(k + 1));
    }
    // B_2 = (X + Y) {l;0}^{-1}: column k of X + Y scaled by 1/{nu-k}.
    b2_ = RatMatrix(d);
    for (long k = 0; k <= 2 * nu_; ++k) {
        const RatFunc scale(LaurentInt(1), q_brace(nu_ - k));
        for (long r = 0; r <= 2 * nu_; ++r) {
            RatFunc s = x_.at(r, k) + y_.at(r, k);
            if (!s.is_zero()) b2_.at(r, k) = s * scale;
        }
    }
    sign_poly_ = build_sign_polynomial();
}

RatMatrix RankTwoModule::idivided_b2_recursive(long k, Parity p) const {
    RatMatrix prev2;                               // B^{(k-1)}
    RatMatrix prev = RatMatrix::identity(dim());   // B^{(0)}
    if (k == 0) return prev;
    for (long j = 0; j < k; ++j) {
        RatMatrix next = b2_ * prev;
        if (j >= 1 && parity_of(j) == p) next = next - prev2.scaled(RatFunc(q_int(j)));
        next = next.scaled(RatFunc(LaurentInt(1), q_int(j + 1)));
        prev2 = prev;
        prev = next;
    }
    return prev;
}

RatFunc RankTwoModule::gram(long k1, long k2) const {
    if (k1 < 0 || k1 > 2 * nu_ || k2 < 0 || k2 > 2 * nu_)
        throw std::invalid_argument("gram: index out of range");
    if (k1 != k2) return RatFunc();
    return RatFunc(q_binomial(2 * nu_, k1) * q_brace(nu_), q_brace(nu_ - k1));
}

long RankTwoModule::degree_of_basis(long k) const {
    if (k < 0 || k > 2 * nu_) throw std::invalid_argument("degree_of_basis: index out of range");
    return ((2 * nu_ - k) * k + nu_ - std::labs(nu_ - k)) / 2;
}

RatFunc RankTwoModule::inner(const std::vector<RatFunc>& u, const std::vector<RatFunc>& v) const {
    RatFunc s;
    for (long k = 0; k <= 2 * nu_; ++k) {
        if (u[k].is_zero() || v[k].is_zero()) continue;
        s += u[k] * v[k] * gram(k, k);
    }
    return s;
}

std::vector<RatFunc> RankTwoModule::bar_vector(const std::vector<RatFunc>& v) const {
    std::vector<RatFunc> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].bar();
    return r;
}

Sqrt2Scalar RankTwoModule::inv_normalizer(long k) const {
    RatFunc prod(1);
    const long factors = std::min(k, 2 * nu_ - k);
    for (long j = 0; j < factors; ++j) prod *= RatFunc(q_brace(nu_ - j));
    if (k == nu_ && nu_ > 0) {
        // 1/sqrt2 = sqrt2/2
        return Sqrt2Scalar(RatFunc(0), prod * RatFunc(mpq_class(1, 2)));
    }
    return Sqrt2Scalar(prod);
}

std::vector<Sqrt2Rat> RankTwoModule::ev_infinity_vector(const std::vector<RatFunc>& v) const {
    std::vector<Sqrt2Rat> r(dim());
    for (long k = 0; k <= 2 * nu_; ++k) {
        Sqrt2Scalar normalized = Sqrt2Scalar(v[k]) * inv_normalizer(k);
        if (!normalized.in_k_infinity())
            throw NotInLattice("ev_infinity_vector: component " + std::to_string(k) +
                               " has positive degree");
        r[k] = normalized.ev_infinity();
    }
    return r;
}

std::vector<RatFunc> RankTwoModule::candidate_plus(long k) const {
    std::vector<RatFunc> v(dim());
    v[0] = RatFunc(1);
    v[2 * nu_] += RatFunc(1); // at nu = 0 this doubles the single coordinate
    return idivided_power(b2_, k, parity_of(nu_)).apply(v);
}

std::vector<RatFunc> RankTwoModule::candidate_minus(long k) const {
    std::vector<RatFunc> v(dim());
    v[0] = RatFunc(1);
    v[2 * nu_] -= RatFunc(1);
    return idivided_power(b2_, k, opposite(parity_of(nu_))).apply(v);
}

std::vector<RatFunc> RankTwoModule::apply_btilde1(const std::vector<RatFunc>& v) const {
    std::vector<RatFunc> r(dim());
    for (long k = 0; k <= 2 * nu_; ++k) {
        if (nu_ - k > 0)
            r[k] = v[k];
        else if (nu_ - k < 0)
            r[k] = -v[k];
    }
    return r;
}

QPoly RankTwoModule::build_sign_polynomial() const {
    // Interpolate sign(a) on the points [a], a in [-nu, nu].
    std::vector<RatFunc> points;
    for (long a = -nu_; a <= nu_; ++a) points.push_back(RatFunc(q_int(a)));
    QPoly full{RatFunc(1)};
    for (const RatFunc& p : points) full = qpoly_mul(full, QPoly{-p, RatFunc(1)});
    QPoly g(points.size());
    for (long a = -nu_; a <= nu_; ++a) {
        if (a == 0) continue;
        const RatFunc& xa = points[a + nu_];
        // synthetic division of full by (x - xa)
        QPoly la(points.size());
        RatFunc carry = full.back();
        for (long i = static_cast<long>(points.size()) - 1; i >= 0; --i) {
            la[i] = carry;
            carry = full[i] + carry * xa;
        }
        RatFunc denom;
        RatFunc xpow(1);
        for (std::size_t i = 0; i < la.size(); ++i) {
            denom += la[i] * xpow;
            xpow *= xa;
        }
        const RatFunc coeff = RatFunc(a > 0 ? 1 : -1) / denom;
        for (std::size_t i = 0; i < la.size(); ++i) g[i] += la[i] * coeff;
    }
    return g;
}

std::vector<RatFunc> RankTwoModule::apply_btilde2(const std::vector<RatFunc>& v) const {
    const QPoly& g = sign_poly_;
    std::vector<RatFunc> acc(dim());
    for (long i = static_cast<long>(g.size()) - 1; i >= 0; --i) {
        acc = b2_.apply(acc);
        for (std::size_t j = 0; j < acc.size(); ++j)
            if (!v[j].is_zero() && !g[i].is_zero()) acc[j] += g[i] * v[j];
    }
    return acc;
}

void CheckReport::add(std::string name, std::optional<long> k, bool pass) {
    items.push_back({std::move(name), k, pass});
}

bool CheckReport::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.pass; });
}

std::string CheckReport::to_json() const {
    nlohmann::ordered_json j;
    j[parameter_name] = parameter;
    auto& checks = j["checks"] = nlohmann::ordered_json::array();
    for (const auto& item : items) {
        nlohmann::ordered_json rec;
        rec["name"] = item.name;
        if (item.k)
            rec["k"] = *item.k;
        else
            rec["k"] = nullptr;
        rec["pass"] = item.pass;
        checks.push_back(std::move(rec));
    }
    return j.dump(2) + "\n";
}

namespace {

using EvVec = std::vector<Sqrt2Rat>;

EvVec zero_ev(long nu) { return EvVec(static_cast<std::size_t>(2 * nu + 1)); }

EvVec expected_plus(long nu, long k) {
    EvVec e = zero_ev(nu);
    if (k < nu) {
        e[k] = Sqrt2Rat(1);
        e[2 * nu - k] = Sqrt2Rat(1);
    } else { // k == nu
        e[nu] = nu > 0 ? Sqrt2Rat::sqrt2() : Sqrt2Rat(2);
    }
    return e;
}

EvVec expected_minus(long nu, long k) {
    EvVec e = zero_ev(nu);
    e[k] = Sqrt2Rat(1);
    e[2 * nu - k] = e[2 * nu - k] - Sqrt2Rat(1); // k < nu always here
    return e;
}

Sqrt2Rat ev_dot(const EvVec& a, const EvVec& b) {
    Sqrt2Rat s;
    for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
    return s;
}

// value - expected must lie in q^{-1} K_infinity.
bool almost_equal(const RatFunc& value, const Sqrt2Rat& expected) {
    Sqrt2Scalar diff = Sqrt2Scalar(value) - Sqrt2Scalar(RatFunc(expected.a), RatFunc(expected.b));
    auto d = diff.deg();
    return !d || *d <= -1;
}

} // namespace

CheckReport verify_based_structure(long nu) {
    CheckReport report;
    report.parameter_name = "nu";
    report.parameter = nu;
    RankTwoModule m(nu);

    // idivided recursion vs closed form, both parities, k <= 2nu+2.
    const long k_top = 2 * nu + 2;
    const Parity p_plus = parity_of(nu);
    std::vector<RatMatrix> fam_plus, fam_minus;
    for (Parity p : {Parity::even, Parity::odd}) {
        auto closed = idivided_family(m.op_b2(), k_top, p);
        auto recursive = idivided_family_recursive(m.op_b2(), k_top, p);
        report.add(p == Parity::even ? "idivided_recursion_even" : "idivided_recursion_odd",
                   std::nullopt, closed == recursive);
        (p == p_plus ? fam_plus : fam_minus) = std::move(closed);
    }

    std::vector<RatFunc> seed_plus(m.dim()), seed_minus(m.dim());
    seed_plus[0] = RatFunc(1);
    seed_plus[2 * nu] += RatFunc(1);
    seed_minus[0] = RatFunc(1);
    seed_minus[2 * nu] -= RatFunc(1);
    auto plus_of = [&](long k) { return fam_plus[static_cast<std::size_t>(k)].apply(seed_plus); };
    auto minus_of = [&](long k) {
        return fam_minus[static_cast<std::size_t>(k)].apply(seed_minus);
    };

    // (i) vanishing above the admissible range.
    for (long k = nu + 1; k <= k_top; ++k) {
        auto w = plus_of(k);
        report.add("vanish_plus", k,
                   std::all_of(w.begin(), w.end(), [](const RatFunc& c) { return c.is_zero(); }));
    }
    for (long k = nu; k <= k_top; ++k) {
        auto w = minus_of(k);
        report.add("vanish_minus", k,
                   std::all_of(w.begin(), w.end(), [](const RatFunc& c) { return c.is_zero(); }));
    }

    std::vector<std::vector<RatFunc>> cand;
    std::vector<EvVec> expected;
    std::vector<EvVec> expected_b1; // image under B-tilde_1
    std::vector<EvVec> expected_b2; // image under B-tilde_2
    std::vector<long> cand_k;
    std::vector<bool> cand_is_plus;
    for (long k = 0; k <= nu; ++k) {
        cand.push_back(plus_of(k));
        expected.push_back(expected_plus(nu, k));
        expected_b1.push_back(k < nu ? expected_minus(nu, k) : zero_ev(nu));
        if ((nu - k) % 2 == 0)
            expected_b2.push_back(k >= 1 ? expected_plus(nu, k - 1) : zero_ev(nu));
        else
            expected_b2.push_back(expected_plus(nu, k + 1));
        cand_k.push_back(k);
        cand_is_plus.push_back(true);
    }
    for (long k = 0; k <= nu - 1; ++k) {
        cand.push_back(minus_of(k));
        expected.push_back(expected_minus(nu, k));
        expected_b1.push_back(expected_plus(nu, k));
        if ((nu - k) % 2 == 0)
            expected_b2.push_back(expected_minus(nu, k + 1));
        else
            expected_b2.push_back(k >= 1 ? expected_minus(nu, k - 1) : zero_ev(nu));
        cand_k.push_back(k);
        cand_is_plus.push_back(false);
    }

    // (ii) bar invariance of every candidate.
    for (std::size_t c = 0; c < cand.size(); ++c)
        report.add(cand_is_plus[c] ? "bar_invariant_plus" : "bar_invariant_minus", cand_k[c],
                   m.bar_vector(cand[c]) == cand[c]);

    // (iii) ev_infinity identities Ytil^k b +- Ytil^{2nu-k} b.
    for (std::size_t c = 0; c < cand.size(); ++c) {
        bool ok = false;
        try {
            ok = m.ev_infinity_vector(cand[c]) == expected[c];
        } catch (const NotInLattice&) {
        }
        report.add(cand_is_plus[c] ? "ev_identity_plus" : "ev_identity_minus", cand_k[c], ok);
    }

    // (iv) almost orthonormality against the q = infinity Gram matrix of the
    // expected images.
    for (std::size_t i = 0; i < cand.size(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < cand.size(); ++j)
            ok = ok && almost_equal(m.inner(cand[i], cand[j]), ev_dot(expected[i], expected[j]));
        report.add(cand_is_plus[i] ? "almost_orthonormal_plus" : "almost_orthonormal_minus",
                   cand_k[i], ok);
    }

    // B-tilde_1 / B-tilde_2 edges, computed from the exact operators.
    for (std::size_t c = 0; c < cand.size(); ++c) {
        bool ok1 = false, ok2 = false;
        try {
            ok1 = m.ev_infinity_vector(m.apply_btilde1(cand[c])) == expected_b1[c];
        } catch (const NotInLattice&) {
        }
        try {
            ok2 = m.ev_infinity_vector(m.apply_btilde2(cand[c])) == expected_b2[c];
        } catch (const NotInLattice&) {
        }
        report.add(cand_is_plus[c] ? "btilde1_edge_plus" : "btilde1_edge_minus", cand_k[c], ok1);
        report.add(cand_is_plus[c] ? "btilde2_edge_plus" : "btilde2_edge_minus", cand_k[c], ok2);
    }

    return report;
}

CheckReport check_defining_relations(long nu) {
    CheckReport report;
    report.parameter_name = "nu";
    report.parameter = nu;
    RankTwoModule m(nu);
    const RatFunc q(LaurentInt::q(1)), qinv(LaurentInt::q(-1));
    const RatMatrix& b1 = m.op_b1();
    const RatMatrix& b2 = m.op_b2();

    // [x,y]_s = xy - s yx
    auto qcomm = [](const RatMatrix& x, const RatMatrix& y, const RatFunc& s) {
        return x * y - (y * x).scaled(s);
    };
    report.add("serre_b1_b1_b2", std::nullopt, qcomm(b1, qcomm(b1, b2, q), qinv) == b2);
    report.add("serre_b2_b2_b1", std::nullopt, qcomm(b2, qcomm(b2, b1, q), qinv) == b1);
    report.add("b1_matrix_bar_invariant", std::nullopt, b1.bar() == b1);
    report.add("b2_matrix_bar_invariant", std::nullopt, b2.bar() == b2);
    return report;
}

CheckReport rank1_module_checks(long l) {
    CheckReport report;
    report.parameter_name = "l";
    report.parameter = l;
    if (l < 0) throw std::invalid_argument("rank1_module_checks: l must be >= 0");
    const std::size_t d = static_cast<std::size_t>(l + 1);
    const Parity pl = parity_of(l);

    // Basis {B^{(k)}_{1,p(l)} v}; the action is the idivided recursion with
    // B^{(l+1)} v = 0 imposed.
    RatMatrix b(d);
    for (long k = 0; k <= l; ++k) {
        if (k + 1 <= l) b.at(k + 1, k) = RatFunc(q_int(k + 1));
        if (k >= 1 && parity_of(k) == pl) b.at(k - 1, k) = RatFunc(q_int(k));
    }

    report.add("annihilation", l + 1, idivided_power(b, l + 1, pl).is_zero());

    RatMatrix spect = RatMatrix::identity(d);
    for (long a = -l; a <= l; ++a) {
        if (parity_of(a) != pl) continue;
        RatMatrix factor = b;
        for (std::size_t i = 0; i < d; ++i) factor.at(i, i) -= RatFunc(q_int(a));
        spect = spect * factor;
    }
    report.add("spectrum_annihilates", std::nullopt, spect.is_zero());
    for (long a = -l; a <= l; ++a) {
        if (parity_of(a) != pl) continue;
        RatMatrix prod = RatMatrix::identity(d);
        for (long a2 = -l; a2 <= l; ++a2) {
            if (parity_of(a2) != pl || a2 == a) continue;
            RatMatrix factor = b;
            for (std::size_t i = 0; i < d; ++i) factor.at(i, i) -= RatFunc(q_int(a2));
            prod = prod * factor;
        }
        report.add("spectrum_attained", a, !prod.is_zero());
    }

    // Cross-check against the F + q^{-1} E K^{-1} realization on the
    // divided-power basis {F^{(k)} v}.
    RatMatrix bq(d);
    for (long k = 0; k <= l; ++k) {
        if (k + 1 <= l) bq.at(k + 1, k) = RatFunc(q_int(k + 1));
        if (k >= 1) bq.at(k - 1, k) = RatFunc(q_int(l - k + 1) * LaurentInt::q(2 * k - l - 1));
    }
    RatMatrix w(d);
    for (long k = 0; k <= l; ++k) {
        std::vector<RatFunc> e0(d);
        e0[0] = RatFunc(1);
        auto col = idivided_power(bq, k, pl).apply(e0);
        for (std::size_t r = 0; r < d; ++r) w.at(r, k) = col[r];
    }
    {
        std::vector<RatFunc> e0(d);
        e0[0] = RatFunc(1);
        auto top = idivided_power(bq, l + 1, pl).apply(e0);
        report.add("sl2_annihilation", l + 1,
                   std::all_of(top.begin(), top.end(),
                               [](const RatFunc& c) { return c.is_zero(); }));
    }
    auto winv = w.inverse();
    report.add("sl2_basis", std::nullopt, winv.has_value());
    report.add("sl2_recursion_match", std::nullopt, winv && (*winv * bq * w) == b);

    return report;
}

CheckReport qcheck_identities(long max_k) {
    CheckReport report;
    report.parameter_name = "max_k";
    report.parameter = max_k;
    if (max_k < 1) throw std::invalid_argument("qcheck_identities: max_k must be >= 1");

    // Recursion B B^{(k)} = [k+1] B^{(k+1)} + delta_{p,p(k)} [k] B^{(k-1)}
    // as polynomial identities in a commuting variable.
    for (Parity p : {Parity::even, Parity::odd}) {
        bool ok = true;
        for (long k = 0; k <= max_k; ++k) {
            QPoly lhs = qpoly_mul(QPoly{RatFunc(), RatFunc(1)}, idivided_poly(k, p));
            QPoly rhs = qpoly_scaled(idivided_poly(k + 1, p), RatFunc(q_int(k + 1)));
            if (k >= 1 && parity_of(k) == p)
                rhs = qpoly_add(rhs, qpoly_scaled(idivided_poly(k - 1, p), RatFunc(q_int(k))));
            ok = ok && qpoly_equal(lhs, rhs);
        }
        report.add(p == Parity::even ? "idivided_recursion_even" : "idivided_recursion_odd",
                   std::nullopt, ok);
    }

    for (long m = 0; m <= max_k; ++m) {
        bool bar_ok = true, pos_ok = true;
        for (long k = 0; k <= m; ++k) {
            LaurentInt binom = q_binomial(m, k);
            bar_ok = bar_ok && binom.bar() == binom;
            for (const auto& [e, c] : binom.terms()) pos_ok = pos_ok && c > 0;
        }
        report.add("binomial_bar_invariant", m, bar_ok);
        report.add("binomial_nonneg_integral", m, pos_ok);
    }

    for (long m = 0; m <= std::min<long>(max_k, 10); ++m) {
        bool ok = true;
        for (long k = 1; k <= m; ++k) {
            LaurentInt lhs = q_binomial(m + 1, k);
            LaurentInt rhs = q_binomial(m, k).shifted(k) + q_binomial(m, k - 1).shifted(k - m - 1);
            ok = ok && lhs == rhs;
        }
        report.add("pascal", m, ok);
    }

    return report;
}

} // namespace qcrystal
