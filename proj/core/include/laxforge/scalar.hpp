#pragma once

#include <complex>
#include <iosfwd>
#include <string>

#include "laxforge/rational.hpp"

namespace laxforge {

/**
 * Scalar: exact element a + b*i + c*sqrt(7) + d*i*sqrt(7) of the number
 * field Q(i, sqrt(7)).  Every matrix entry and every coefficient in the
 * derivations lives here: Hadamard entries are +-1, the nilpotent family
 * uses 0/1, and the k-idempotent generator needs -1/2 +- i*sqrt(7)/2
 * together with +-i.
 */
class Scalar {
public:
    Scalar() = default;
    Scalar(int n) : a_(n) {}
    Scalar(Rational a) : a_(std::move(a)) {}
    Scalar(Rational a, Rational b, Rational c, Rational d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    static Scalar i() { return Scalar(0, 1, 0, 0); }
    static Scalar sqrt7() { return Scalar(0, 0, 1, 0); }
    static Scalar rat(long long n, long long d) { return Scalar(Rational(BigInt(n), BigInt(d))); }

    const Rational& a() const noexcept { return a_; }
    const Rational& b() const noexcept { return b_; }
    const Rational& c() const noexcept { return c_; }
    const Rational& d() const noexcept { return d_; }

    bool is_zero() const noexcept {
        return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero();
    }
    bool is_one() const noexcept {
        return a_.is_one() && b_.is_zero() && c_.is_zero() && d_.is_zero();
    }
    bool is_rational() const noexcept {
        return b_.is_zero() && c_.is_zero() && d_.is_zero();
    }

    Scalar operator-() const { return Scalar(-a_, -b_, -c_, -d_); }
    Scalar operator+(const Scalar& o) const {
        return Scalar(a_ + o.a_, b_ + o.b_, c_ + o.c_, d_ + o.d_);
    }
    Scalar operator-(const Scalar& o) const {
        return Scalar(a_ - o.a_, b_ - o.b_, c_ - o.c_, d_ - o.d_);
    }
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    // Exact multiplicative inverse; throws std::domain_error on zero.
    Scalar inverse() const;

    // Field automorphism sqrt(7) -> -sqrt(7).
    Scalar conj_sqrt7() const { return Scalar(a_, b_, -c_, -d_); }
    // Complex conjugation i -> -i.
    Scalar conj_i() const { return Scalar(a_, -b_, c_, -d_); }

    bool operator==(const Scalar& o) const noexcept {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    }
    bool operator!=(const Scalar& o) const noexcept { return !(*this == o); }
    bool operator<(const Scalar& o) const;  // total order for canonical sorting

    // Floating-point embedding (a + c*sqrt7) + (b + d*sqrt7) i.
    std::complex<double> to_complex() const;

    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
    Rational a_, b_, c_, d_;
};

inline Scalar operator*(const Rational& r, const Scalar& s) { return Scalar(r) * s; }

}  // namespace laxforge
