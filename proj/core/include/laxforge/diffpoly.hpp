#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "laxforge/scalar.hpp"

namespace laxforge {

class DiffPoly;

/**
 * Indeterminates of the differential ring: the field variables q_k, r_k
 * and the hierarchy coefficient symbols A_k^(m), B_k^(m), C_k^(m), each
 * carrying an x-derivative order.  The coefficient symbols exist so that
 * component equations and recursion steps can be manipulated before the
 * tables are resolved.
 */
enum class VarKind : int { Q = 0, R = 1, CoefA = 2, CoefB = 3, CoefC = 4 };

struct Indet {
    VarKind kind = VarKind::Q;
    int comp = 1;  // component / slot label, 1-based
    int ord = 0;   // table order superscript; 0 for q/r
    int xord = 0;  // number of x-derivatives

    Indet() = default;
    Indet(VarKind k, int c, int o = 0, int x = 0) : kind(k), comp(c), ord(o), xord(x) {}

    Indet raised(int dx = 1) const { return Indet(kind, comp, ord, xord + dx); }

    friend auto operator<=>(const Indet&, const Indet&) = default;
};

inline Indet qvar(int comp, int xord = 0) { return Indet(VarKind::Q, comp, 0, xord); }
inline Indet rvar(int comp, int xord = 0) { return Indet(VarKind::R, comp, 0, xord); }

// One formal antiderivative factor Dinv(integrand).  Integrands are stored
// canonically; nesting is allowed.  Dinv(1) is the formal antiderivative of
// the constant; it only ever appears transiently inside variational
// computations and cancels from every verified identity.
struct Nonlocal {
    std::shared_ptr<const DiffPoly> integrand;

    const DiffPoly& poly() const { return *integrand; }
};

int compare(const Nonlocal& a, const Nonlocal& b);
int compare(const DiffPoly& a, const DiffPoly& b);

struct Monomial {
    Scalar coef;
    int lam = 0;                   // power of the spectral symbol
    std::vector<Indet> vars;       // sorted, with repetitions
    std::vector<Nonlocal> dinvs;   // sorted by recursive comparison

    bool same_key(const Monomial& o) const;
    int compare_key(const Monomial& o) const;
};

/**
 * DiffPoly: canonical differential polynomial.  The term list is sorted
 * under a fixed total order and never stores zero coefficients, so
 * structural equality is semantic equality.
 */
class DiffPoly {
public:
    DiffPoly() = default;
    explicit DiffPoly(Scalar s);
    explicit DiffPoly(const Indet& v);

    static DiffPoly zero() { return DiffPoly(); }
    static DiffPoly one() { return DiffPoly(Scalar(1)); }
    static DiffPoly constant(Scalar s) { return DiffPoly(std::move(s)); }
    static DiffPoly var(const Indet& v) { return DiffPoly(v); }
    static DiffPoly lambda_power(int k);
    static DiffPoly from_terms(std::vector<Monomial> terms);  // canonicalizes

    const std::vector<Monomial>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    bool operator==(const DiffPoly& o) const;
    bool operator!=(const DiffPoly& o) const { return !(*this == o); }

    DiffPoly operator-() const;
    DiffPoly operator+(const DiffPoly& o) const;
    DiffPoly operator-(const DiffPoly& o) const;
    DiffPoly operator*(const DiffPoly& o) const;
    DiffPoly& operator+=(const DiffPoly& o) { return *this = *this + o; }
    DiffPoly& operator-=(const DiffPoly& o) { return *this = *this - o; }

    DiffPoly scaled(const Scalar& s) const;
    DiffPoly shifted_lambda(int dk) const;

    // Extracts the coefficient polynomials per lambda power.
    std::map<int, DiffPoly> collect_lambda() const;
    DiffPoly lambda_coefficient(int k) const;

    // True if any monomial (recursively) contains a variable of this kind.
    bool contains_kind(VarKind k) const;
    bool contains_symbols() const;  // any CoefA/B/C indeterminate

    // Substitutes the coefficient symbols (kind, comp, ord) -> value, with
    // x-derivatives applied as needed; descends into Dinv integrands and
    // re-normalizes them.
    using SymbolMap = std::map<std::tuple<VarKind, int, int>, DiffPoly>;
    DiffPoly substitute(const SymbolMap& map) const;

    // Sets every q_k / r_k with comp >= min_comp to zero.
    DiffPoly zero_components_from(int min_comp) const;

    friend int compare(const DiffPoly& a, const DiffPoly& b);

private:
    std::vector<Monomial> terms_;
};

// Leibniz total x-derivative; the derivative of a Dinv factor is its
// integrand.
DiffPoly ddx(const DiffPoly& f);
DiffPoly ddx_n(const DiffPoly& f, int n);

/**
 * Formal antiderivative with zero integration constant.  A conservative
 * exact-integration pass collapses recognized total-derivative parts:
 *   (a)  c * (v^(d))^k * v^(d+1)        ->  c/(k+1) * (v^(d))^(k+1)
 *   (b)  c*u^(a+1)*v^(b) + c*u^(a)*v^(b+1)  ->  c * u^(a)*v^(b)
 * restricted to local q/r monomials; everything else stays wrapped in a
 * Nonlocal factor, one monic monomial per factor.
 */
DiffPoly dinv(const DiffPoly& f);

// X_mu * Dinv(Y_nu * f) with X, Y in {q, r}.
DiffPoly theta(VarKind x, VarKind y, int mu, int nu, const DiffPoly& f);

// Euler variational derivative with respect to q_comp or r_comp (xord 0),
// extended to Dinv factors by the skew rule: the antiderivative moves to
// the partner factor with a sign flip.
DiffPoly euler_derivative(const DiffPoly& h, VarKind kind, int comp);

}  // namespace laxforge
