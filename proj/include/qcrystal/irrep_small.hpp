#pragma once

// Symbolic realizations used for the rank-1 and rank-2 verifications:
//  - V(l) for U_q(sl_2) with the idivided-power basis, annihilation and
//    spectrum checks;
//  - the n = 3 irreducible V(nu) on the basis {Y^{(k)} v_nu | k in [0,2nu]}
//    with B_1, B_2, X, Y, idivided powers of B_2, the diagonal Gram form,
//    bar involution, ev_infinity readout, and the exact B-tilde_1/B-tilde_2
//    operators obtained from spectral sign interpolation.
//
// All matrices live over RatFunc; sqrt2 enters only through the fixed
// normalizers c_{k,nu} at readout time.

#include <optional>
#include <string>
#include <vector>

#include "qcrystal/qlaurent.hpp"

namespace qcrystal {

enum class Parity { even, odd };

inline Parity parity_of(long a) { return ((a % 2) + 2) % 2 == 0 ? Parity::even : Parity::odd; }
inline Parity opposite(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }

// Dense square matrix over RatFunc.
class RatMatrix {
public:
    RatMatrix() = default;
    explicit RatMatrix(std::size_t n) : n_(n), a_(n * n) {}
    static RatMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    RatFunc& at(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
    const RatFunc& at(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix scaled(const RatFunc& c) const;
    std::vector<RatFunc> apply(const std::vector<RatFunc>& v) const;
    bool operator==(const RatMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const RatMatrix& o) const { return !(*this == o); }
    bool is_zero() const;
    RatMatrix bar() const;
    // Gauss-Jordan inverse; nullopt when singular.
    std::optional<RatMatrix> inverse() const;

private:
    std::size_t n_ = 0;
    std::vector<RatFunc> a_;
};

// Univariate polynomial over RatFunc, coeffs[i] the coefficient of x^i.
using QPoly = std::vector<RatFunc>;

// Shifts a_1, ..., a_k with B^{(k)}_{i,p} = (1/[k]!) prod_j (B - [a_j]);
// empty list for k = 0.
std::vector<long> idivided_factor_shifts(long k, Parity p);
// Closed-form idivided power of an arbitrary matrix.
RatMatrix idivided_power(const RatMatrix& b, long k, Parity p);
// All closed-form idivided powers B^{(0)}, ..., B^{(k_max)} at once; the
// factor lists nest two at a time along each chain of constant k-parity, so
// this costs O(k_max) matrix products.
std::vector<RatMatrix> idivided_family(const RatMatrix& b, long k_max, Parity p);
// The same family built from the three-term recursion instead.
std::vector<RatMatrix> idivided_family_recursive(const RatMatrix& b, long k_max, Parity p);
// Same as a polynomial in a commuting variable.
QPoly idivided_poly(long k, Parity p);

QPoly qpoly_mul(const QPoly& a, const QPoly& b);
QPoly qpoly_scaled(const QPoly& a, const RatFunc& c);
QPoly qpoly_add(const QPoly& a, const QPoly& b);
bool qpoly_equal(const QPoly& a, const QPoly& b);

// The n = 3 irreducible module V(nu).
class RankTwoModule {
public:
    explicit RankTwoModule(long nu);

    long nu() const { return nu_; }
    std::size_t dim() const { return static_cast<std::size_t>(2 * nu_ + 1); }

    const RatMatrix& op_l() const { return l_; }    // diag q^{nu-k}
    const RatMatrix& op_b1() const { return b1_; }  // diag [nu-k]
    const RatMatrix& op_x() const { return x_; }    // X Y^{(k)} = [2nu-k+1] Y^{(k-1)}
    const RatMatrix& op_y() const { return y_; }    // Y Y^{(k)} = [k+1] Y^{(k+1)}
    const RatMatrix& op_b2() const { return b2_; }  // (X + Y) {l;0}^{-1}

    RatMatrix idivided_b2(long k, Parity p) const { return idivided_power(b2_, k, p); }
    RatMatrix idivided_b2_recursive(long k, Parity p) const;

    // Diagonal Gram form: (Y^{(k)}v, Y^{(k)}v) = [2nu brack k] {nu}/{nu-k}.
    RatFunc gram(long k1, long k2) const;
    long degree_of_basis(long k) const;

    RatFunc inner(const std::vector<RatFunc>& u, const std::vector<RatFunc>& v) const;
    std::vector<RatFunc> bar_vector(const std::vector<RatFunc>& v) const;

    // 1/c_{k,nu}: the inverse of the almost-normalizing scalar.
    Sqrt2Scalar inv_normalizer(long k) const;
    // Coefficients over the Ytil^k b_nu basis at q = infinity; throws
    // NotInLattice if any normalized coefficient has positive degree.
    std::vector<Sqrt2Rat> ev_infinity_vector(const std::vector<RatFunc>& v) const;

    // B^{(k)}_{2,p(nu)} (v + Y^{(2nu)} v), defined for every k >= 0.
    std::vector<RatFunc> candidate_plus(long k) const;
    // B^{(k)}_{2,q(nu)} (v - Y^{(2nu)} v).
    std::vector<RatFunc> candidate_minus(long k) const;

    // Exact modified actions: sign of the X_k-weight per B_1 (diagonal) and
    // per B_2 (sign polynomial over the spectrum [a], a in [-nu,nu]).
    std::vector<RatFunc> apply_btilde1(const std::vector<RatFunc>& v) const;
    std::vector<RatFunc> apply_btilde2(const std::vector<RatFunc>& v) const;

private:
    long nu_;
    RatMatrix l_, b1_, x_, y_, b2_;
    QPoly sign_poly_;

    QPoly build_sign_polynomial() const;
};

struct CheckItem {
    std::string name;
    std::optional<long> k;
    bool pass;
};

struct CheckReport {
    std::string parameter_name; // "nu", "l", or "max_k"
    long parameter = 0;
    std::vector<CheckItem> items;

    void add(std::string name, std::optional<long> k, bool pass);
    bool all_pass() const;
    std::string to_json() const;
};

// Theorem-level verification of the based-module structure of V(nu):
// vanishing ranges, bar invariance, ev_infinity identities, almost
// orthonormality, and the B-tilde_1/B-tilde_2 graph.
CheckReport verify_based_structure(long nu);

// Exact matrix identities [B_1,[B_1,B_2]_q]_{q^{-1}} = B_2 and
// [B_2,[B_2,B_1]_q]_{q^{-1}} = B_1 on V(nu).
CheckReport check_defining_relations(long nu);

// The (l+1)-dimensional rank-1 module on the basis {B^{(k)}_{1,p(l)} v}:
// annihilation by B^{(l+1)}_{1,p(l)}, spectrum {[a] : a in [-l,l]_{p(l)}},
// and a cross-check against the F + q^{-1} E K^{-1} realization.
CheckReport rank1_module_checks(long l);

// q-identity suite: idivided recursion vs closed form as polynomials,
// Gaussian binomial bar-invariance/integrality, Pascal identity.
CheckReport qcheck_identities(long max_k);

} // namespace qcrystal
