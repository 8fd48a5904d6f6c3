#include "qcrystal/qlaurent.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace qcrystal {

namespace {

// Dense polynomial in Z[q] used for gcd canonicalization: coeffs[i] is the
// coefficient of q^i, no trailing zeros.
using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class content(const ZPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g; // 0 for the zero polynomial
}

ZPoly scaled_down(const ZPoly& p, const mpz_class& d) {
    ZPoly r(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        mpz_divexact(r[i].get_mpz_t(), p[i].get_mpz_t(), d.get_mpz_t());
    }
    return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// Pseudo remainder of a by b (b nonzero).
ZPoly prem(ZPoly a, const ZPoly& b) {
    trim(a);
    const long db = static_cast<long>(b.size()) - 1;
    while (static_cast<long>(a.size()) - 1 >= db) {
        const long da = static_cast<long>(a.size()) - 1;
        const mpz_class lead = a.back();
        for (auto& c : a) c *= b.back();
        for (long i = 0; i <= db; ++i) a[da - db + i] -= lead * b[i];
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

ZPoly primitive(ZPoly p) {
    trim(p);
    if (p.empty()) return p;
    mpz_class c = content(p);
    if (p.back() < 0) c = -c;
    return scaled_down(p, c);
}

// Primitive gcd with positive leading coefficient (primitive PRS).
ZPoly poly_gcd(ZPoly a, ZPoly b) {
    a = primitive(std::move(a));
    b = primitive(std::move(b));
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = primitive(prem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Exact division in Z[q]; the caller guarantees divisibility.
ZPoly exact_div_z(const ZPoly& a, const ZPoly& b) {
    if (a.empty()) return {};
    if (b.empty()) throw InternalInconsistency("polynomial division by zero");
    if (a.size() < b.size()) throw InternalInconsistency("non-exact polynomial division");
    ZPoly r = a;
    ZPoly quo(a.size() - b.size() + 1, mpz_class(0));
    for (long i = static_cast<long>(quo.size()) - 1; i >= 0; --i) {
        const mpz_class& top = r[i + b.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t()))
            throw InternalInconsistency("non-exact polynomial division");
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), b.back().get_mpz_t());
        quo[i] = c;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] -= c * b[j];
    }
    for (const auto& c : r)
        if (c != 0) throw InternalInconsistency("non-exact polynomial division");
    trim(quo);
    return quo;
}

// gcd in Z[q] including the integer content part; positive leading
// coefficient.  Returns {1} when the arguments are coprime.
ZPoly full_gcd(const ZPoly& a, const ZPoly& b) {
    mpz_class ca = content(a), cb = content(b), cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    ZPoly g;
    if (a.size() == 1 || b.size() == 1) {
        g = {mpz_class(1)};
    } else {
        g = poly_gcd(scaled_down(a, ca), scaled_down(b, cb));
    }
    for (auto& c : g) c *= cg;
    return g;
}

bool is_one_poly(const ZPoly& p) { return p.size() == 1 && p[0] == 1; }

// Laurent -> (shift, dense) with dense[0] != 0 for nonzero input.
std::pair<long, ZPoly> to_dense(const LaurentInt& p) {
    if (p.is_zero()) return {0, {}};
    const long lo = p.min_exp();
    ZPoly d(static_cast<size_t>(p.max_exp() - lo + 1), mpz_class(0));
    for (const auto& [e, c] : p.terms()) d[static_cast<size_t>(e - lo)] = c;
    return {lo, d};
}

LaurentInt from_dense(long shift, const ZPoly& d) {
    LaurentInt p;
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) p += LaurentInt::monomial(d[i], shift + static_cast<long>(i));
    return p;
}

} // namespace

bool LaurentInt::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

long LaurentInt::min_exp() const {
    if (is_zero()) throw InternalInconsistency("min_exp of zero");
    return coeffs_.begin()->first;
}

long LaurentInt::max_exp() const {
    if (is_zero()) throw InternalInconsistency("max_exp of zero");
    return coeffs_.rbegin()->first;
}

mpz_class LaurentInt::coeff(long e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? mpz_class(0) : it->second;
}

const mpz_class& LaurentInt::lead_coeff() const {
    if (is_zero()) throw InternalInconsistency("lead_coeff of zero");
    return coeffs_.rbegin()->second;
}

void LaurentInt::add(long e, const mpz_class& c) {
    if (c == 0) return;
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
        coeffs_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

LaurentInt& LaurentInt::operator+=(const LaurentInt& o) {
    for (const auto& [e, c] : o.coeffs_) add(e, c);
    return *this;
}

LaurentInt& LaurentInt::operator-=(const LaurentInt& o) {
    for (const auto& [e, c] : o.coeffs_) add(e, -c);
    return *this;
}

LaurentInt LaurentInt::operator+(const LaurentInt& o) const {
    LaurentInt r = *this;
    r += o;
    return r;
}

LaurentInt LaurentInt::operator-(const LaurentInt& o) const {
    LaurentInt r = *this;
    r -= o;
    return r;
}

LaurentInt LaurentInt::operator-() const {
    LaurentInt r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
    return r;
}

LaurentInt LaurentInt::operator*(const LaurentInt& o) const {
    LaurentInt r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) r.add(e1 + e2, c1 * c2);
    return r;
}

LaurentInt& LaurentInt::operator*=(const LaurentInt& o) { return *this = *this * o; }

LaurentInt LaurentInt::bar() const {
    LaurentInt r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(-e, c);
    return r;
}

LaurentInt LaurentInt::shifted(long s) const {
    LaurentInt r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e + s, c);
    return r;
}

mpz_class LaurentInt::eval_at_one() const {
    mpz_class s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
}

std::string LaurentInt::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class abs_c = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (abs_c != 1 || e == 0) out << abs_c.get_str();
        if (e != 0) {
            if (abs_c != 1) out << "*";
            out << "q";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

LaurentInt q_int(long k, long a) {
    if (a < 1) throw std::invalid_argument("q_int: a must be >= 1");
    if (k < 0) return -q_int(-k, a);
    LaurentInt r;
    for (long j = 0; j < k; ++j) r += LaurentInt::q(a * (k - 1 - 2 * j));
    return r;
}

LaurentInt q_factorial(long k, long a) {
    if (k < 0) throw std::invalid_argument("q_factorial: k must be >= 0");
    LaurentInt r(1);
    for (long j = 2; j <= k; ++j) r *= q_int(j, a);
    return r;
}

LaurentInt q_binomial(long m, long k, long a) {
    if (k < 0 || k > m) throw std::invalid_argument("q_binomial: need 0 <= k <= m");
    // [m brack k] = prod_{j=1}^{k} [m-k+j]/[j]; every partial quotient is exact.
    LaurentInt r(1);
    for (long j = 1; j <= k; ++j) r = exact_div(r * q_int(m - k + j, a), q_int(j, a));
    return r;
}

LaurentInt q_brace(long a) { return LaurentInt::q(a) + LaurentInt::q(-a); }

LaurentInt exact_div(const LaurentInt& num, const LaurentInt& den) {
    if (den.is_zero()) throw InternalInconsistency("exact_div by zero");
    if (num.is_zero()) return {};
    auto [sn, dn] = to_dense(num);
    auto [sd, dd] = to_dense(den);
    ZPoly quo = exact_div_z(dn, dd);
    return from_dense(sn - sd, quo);
}

RatFunc::RatFunc(const mpq_class& c)
    : num_(LaurentInt(mpz_class(c.get_num()))), den_(LaurentInt(mpz_class(c.get_den()))) {
    normalize();
}

RatFunc::RatFunc(LaurentInt num, LaurentInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentInt(1);
        return;
    }
    if (den_.is_one()) return;
    auto [sn, n] = to_dense(num_);
    auto [sd, d] = to_dense(den_);
    mpz_class cn = content(n), cd = content(d);
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    ZPoly np = scaled_down(n, cn), dp = scaled_down(d, cd);
    ZPoly g = poly_gcd(np, dp);
    if (!(g.size() == 1 && g[0] == 1)) {
        np = exact_div_z(np, g);
        dp = exact_div_z(dp, g);
    }
    mpz_class kn = cn / cg, kd = cd / cg;
    for (auto& c : np) c *= kn;
    for (auto& c : dp) c *= kd;
    if (dp.back() < 0) {
        for (auto& c : np) c = -c;
        for (auto& c : dp) c = -c;
    }
    num_ = from_dense(sn - sd, np);
    den_ = from_dense(0, dp);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_.is_one() && o.den_.is_one()) {
        return RatFunc(num_ + o.num_, LaurentInt(1), reduced_tag{});
    }
    // Henrici: split off g = gcd(den, o.den); the sum's numerator can share
    // factors only with g.
    auto [s1, d1] = to_dense(den_);
    auto [s2, d2] = to_dense(o.den_);
    (void)s1;
    (void)s2;
    ZPoly g = full_gcd(d1, d2);
    ZPoly d1r = is_one_poly(g) ? d1 : exact_div_z(d1, g);
    ZPoly d2r = is_one_poly(g) ? d2 : exact_div_z(d2, g);
    LaurentInt numerator = num_ * from_dense(0, d2r) + o.num_ * from_dense(0, d1r);
    if (numerator.is_zero()) return RatFunc();
    auto [sn, n] = to_dense(numerator);
    ZPoly g2 = full_gcd(n, g);
    if (!is_one_poly(g2)) {
        n = exact_div_z(n, g2);
        g = exact_div_z(g, g2);
    }
    ZPoly den = mul(mul(d1r, d2r), g);
    if (den.back() < 0) {
        for (auto& c : n) c = -c;
        for (auto& c : den) c = -c;
    }
    return RatFunc(from_dense(sn, n), from_dense(0, den), reduced_tag{});
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc();
    if (den_.is_one() && o.den_.is_one()) {
        return RatFunc(num_ * o.num_, LaurentInt(1), reduced_tag{});
    }
    // Cross-reduce before multiplying; the factors are pairwise coprime
    // afterwards, so no final gcd is needed.
    auto [s1, n1] = to_dense(num_);
    auto [z1, d1] = to_dense(den_);
    auto [s2, n2] = to_dense(o.num_);
    auto [z2, d2] = to_dense(o.den_);
    (void)z1;
    (void)z2;
    ZPoly g1 = full_gcd(n1, d2);
    if (!is_one_poly(g1)) {
        n1 = exact_div_z(n1, g1);
        d2 = exact_div_z(d2, g1);
    }
    ZPoly g2 = full_gcd(n2, d1);
    if (!is_one_poly(g2)) {
        n2 = exact_div_z(n2, g2);
        d1 = exact_div_z(d1, g2);
    }
    ZPoly n = mul(n1, n2);
    ZPoly den = mul(d1, d2);
    if (den.back() < 0) {
        for (auto& c : n) c = -c;
        for (auto& c : den) c = -c;
    }
    return RatFunc(from_dense(s1 + s2, n), from_dense(0, den), reduced_tag{});
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::invalid_argument("RatFunc: division by zero");
    return *this * o.inv();
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw std::invalid_argument("RatFunc: inverse of zero");
    // the pair is already coprime; only the shift and sign move
    const long s = num_.min_exp();
    LaurentInt den = num_.shifted(-s);
    LaurentInt num = den_.shifted(-s);
    if (den.lead_coeff() < 0) {
        num = -num;
        den = -den;
    }
    return RatFunc(std::move(num), std::move(den), reduced_tag{});
}

RatFunc RatFunc::bar() const {
    if (is_zero()) return {};
    // bar is a field automorphism up to monomial units, so the reduced form
    // stays reduced after shifting the reversed denominator back into Z[q].
    const long d = den_.max_exp();
    LaurentInt n = num_.bar().shifted(d);
    LaurentInt den = den_.bar().shifted(d);
    if (den.lead_coeff() < 0) {
        n = -n;
        den = -den;
    }
    return RatFunc(std::move(n), std::move(den), reduced_tag{});
}

std::optional<long> RatFunc::deg() const {
    if (is_zero()) return std::nullopt;
    return num_.max_exp() - den_.max_exp();
}

mpq_class RatFunc::lc() const {
    if (is_zero()) return 0;
    mpq_class r(num_.lead_coeff(), den_.lead_coeff());
    r.canonicalize();
    return r;
}

std::pair<mpq_class, long> RatFunc::lt() const {
    if (is_zero()) return {0, 0};
    return {lc(), *deg()};
}

bool RatFunc::in_k_infinity() const {
    auto d = deg();
    return !d || *d <= 0;
}

mpq_class RatFunc::ev_infinity() const {
    auto d = deg();
    if (!d) return 0;
    if (*d > 0) throw NotInLattice("ev_infinity: degree " + std::to_string(*d) + " > 0");
    return *d == 0 ? lc() : mpq_class(0);
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Sqrt2Scalar Sqrt2Scalar::inv() const {
    if (is_zero()) throw std::invalid_argument("Sqrt2Scalar: inverse of zero");
    RatFunc d = a_ * a_ - RatFunc(2) * b_ * b_;
    return {a_ / d, -b_ / d};
}

std::optional<long> Sqrt2Scalar::deg() const {
    auto da = a_.deg(), db = b_.deg();
    if (!da) return db;
    if (!db) return da;
    return std::max(*da, *db);
}

bool Sqrt2Scalar::in_k_infinity() const {
    auto d = deg();
    return !d || *d <= 0;
}

Sqrt2Rat Sqrt2Scalar::ev_infinity() const { return {a_.ev_infinity(), b_.ev_infinity()}; }

std::string Sqrt2Scalar::str() const {
    if (b_.is_zero()) return a_.str();
    std::string s = "(" + b_.str() + ")*sqrt2";
    if (a_.is_zero()) return s;
    return a_.str() + " + " + s;
}

std::string Sqrt2Rat::str() const {
    if (b == 0) return a.get_str();
    std::string s = b.get_str() + "*sqrt2";
    if (a == 0) return s;
    return a.get_str() + " + " + s;
}

} // namespace qcrystal
