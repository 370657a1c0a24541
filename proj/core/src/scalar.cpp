#include "laxforge/scalar.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace laxforge {

Scalar Scalar::operator*(const Scalar& o) const {
    // Basis products: i*i = -1, s*s = 7, (i*s)*(i*s) = -7 with s = sqrt(7).
    const Rational &a1 = a_, &b1 = b_, &c1 = c_, &d1 = d_;
    const Rational &a2 = o.a_, &b2 = o.b_, &c2 = o.c_, &d2 = o.d_;
    Rational seven(7);
    Rational ra = a1 * a2 - b1 * b2 + seven * (c1 * c2 - d1 * d2);
    Rational rb = a1 * b2 + b1 * a2 + seven * (c1 * d2 + d1 * c2);
    Rational rc = a1 * c2 + c1 * a2 - (b1 * d2 + d1 * b2);
    Rational rd = a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2;
    return Scalar(std::move(ra), std::move(rb), std::move(rc), std::move(rd));
}

Scalar Scalar::inverse() const {
    if (is_zero()) {
        throw std::domain_error("Scalar: inverse of zero");
    }
    // Write x = u + v*s over Q(i) with s = sqrt(7).  Then
    // x * (u - v*s) = u^2 - 7 v^2 in Q(i), which is inverted by complex
    // conjugation.  Both steps are exact.
    Scalar conj7 = conj_sqrt7();
    Scalar w = *this * conj7;  // lies in Q(i): c = d = 0
    if (!w.c_.is_zero() || !w.d_.is_zero()) {
        throw std::logic_error("Scalar: norm form left the base field");
    }
    Rational n = w.a_ * w.a_ + w.b_ * w.b_;
    if (n.is_zero()) {
        throw std::logic_error("Scalar: vanishing norm for nonzero element");
    }
    Scalar winv(w.a_ / n, -(w.b_ / n), Rational(0), Rational(0));
    return conj7 * winv;
}

bool Scalar::operator<(const Scalar& o) const {
    if (a_ != o.a_) return a_ < o.a_;
    if (b_ != o.b_) return b_ < o.b_;
    if (c_ != o.c_) return c_ < o.c_;
    return d_ < o.d_;
}

std::complex<double> Scalar::to_complex() const {
    static const double s7 = std::sqrt(7.0);
    return {a_.to_double() + c_.to_double() * s7, b_.to_double() + d_.to_double() * s7};
}

std::string Scalar::str() const {
    struct Part {
        const Rational* r;
        const char* unit;
    };
    const Part parts[4] = {{&a_, ""}, {&b_, "i"}, {&c_, "s7"}, {&d_, "i*s7"}};
    std::string out;
    int emitted = 0;
    for (const auto& p : parts) {
        if (p.r->is_zero()) continue;
        std::string piece;
        Rational abs = p.r->sign() < 0 ? -*p.r : *p.r;
        if (p.unit[0] == '\0') {
            piece = abs.str();
        } else if (abs.is_one()) {
            piece = p.unit;
        } else {
            piece = abs.str() + "*" + p.unit;
        }
        if (emitted == 0) {
            out = (p.r->sign() < 0 ? "-" : "") + piece;
        } else {
            out += (p.r->sign() < 0 ? "-" : "+") + piece;
        }
        ++emitted;
    }
    if (emitted == 0) return "0";
    if (emitted > 1) return "(" + out + ")";
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace laxforge
