#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <string>

namespace laxforge {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Rational: arbitrary-precision rational number, always stored with
 * gcd(|num|, den) = 1 and den > 0.
 */
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt num, BigInt den);

    // Parses "p", "p/q" or "-p/q" with decimal integers.
    static Rational parse(const std::string& text);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_one() const noexcept { return num_ == 1 && den_ == 1; }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;  // throws on o == 0

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational inverse() const;  // throws on zero

    bool operator==(const Rational& o) const noexcept {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Rational& o) const noexcept { return !(*this == o); }
    bool operator<(const Rational& o) const;

    double to_double() const;
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    void normalize();

    BigInt num_;
    BigInt den_;
};

}  // namespace laxforge
