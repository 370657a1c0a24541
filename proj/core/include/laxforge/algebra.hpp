#pragma once

#include <compare>
#include <map>
#include <string>

#include "laxforge/diffpoly.hpp"
#include "laxforge/matrix.hpp"

namespace laxforge {

enum class GenKind : int { Alpha = 0, Beta1 = 1, Beta2 = 2 };

std::string gen_name(GenKind k);

/**
 * Generator of the graded loop algebra: alpha(n), beta1(n), beta2(n) with
 *   [alpha(m), beta1(n)] =  beta1(m+n)
 *   [alpha(m), beta2(n)] = -beta2(m+n)
 *   [beta1(m), beta2(n)] = 2 alpha(m+n)
 * and all like-kind brackets zero.  The alpha-alpha bracket is the abelian
 * assumption realized by the 2x2 representation below; every derivation
 * report records it.
 */
struct Generator {
    GenKind kind = GenKind::Alpha;
    int grade = 0;

    Generator() = default;
    Generator(GenKind k, int g) : kind(k), grade(g) {}

    friend auto operator<=>(const Generator&, const Generator&) = default;
};

/**
 * AlgebraElement: finite sum of generators with DiffPoly coefficients.
 * Zero coefficients are never stored.
 */
class AlgebraElement {
public:
    AlgebraElement() = default;

    static AlgebraElement term(Generator g, DiffPoly coef);

    const std::map<Generator, DiffPoly>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    DiffPoly coefficient(const Generator& g) const;

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator-() const;
    AlgebraElement& operator+=(const AlgebraElement& o) { return *this = *this + o; }

    AlgebraElement scaled(const DiffPoly& f) const;
    AlgebraElement scaled(const Scalar& s) const;

    // Coefficient-wise total x-derivative.
    AlgebraElement ddx() const;

    // Formal d/d(lambda): grade n goes to n * (grade n-1).  Coefficients
    // must be free of the spectral symbol.
    AlgebraElement dlambda() const;

    AlgebraElement substitute(const DiffPoly::SymbolMap& map) const;

    bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }

    std::string str() const;  // canonical "coef*a(n) + ..." text

private:
    std::map<Generator, DiffPoly> terms_;
};

// Bilinear bracket extension of the generator relations.
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

// Faithful representation: alpha(n) -> (1/2) diag(1,-1) L^n,
// beta1(n) -> E12 L^n, beta2(n) -> E21 L^n.
Matrix<DiffPoly> represent(const AlgebraElement& x);

}  // namespace laxforge
