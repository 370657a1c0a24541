#include "laxforge/grammar.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace laxforge {

namespace {

char kind_letter(VarKind k) {
    switch (k) {
        case VarKind::Q: return 'q';
        case VarKind::R: return 'r';
        case VarKind::CoefA: return 'A';
        case VarKind::CoefB: return 'B';
        case VarKind::CoefC: return 'C';
    }
    return '?';
}

bool scalar_prints_negative(const Scalar& s) {
    if (!s.a().is_zero()) return s.a().sign() < 0;
    if (!s.b().is_zero()) return s.b().sign() < 0;
    if (!s.c().is_zero()) return s.c().sign() < 0;
    return s.d().sign() < 0;
}

}  // namespace

std::string indet_to_text(const Indet& v) {
    std::ostringstream os;
    os << kind_letter(v.kind) << v.comp;
    if (v.kind != VarKind::Q && v.kind != VarKind::R) os << "_" << v.ord;
    if (v.xord == 1)
        os << "x";
    else if (v.xord > 1)
        os << "x" << v.xord;
    return os.str();
}

std::string scalar_to_text(const Scalar& s) { return s.str(); }

namespace {

void append_monomial_body(std::ostringstream& os, const Monomial& m, const Scalar& mag) {
    bool emitted = false;
    if (!mag.is_one() || (m.vars.empty() && m.dinvs.empty() && m.lam == 0)) {
        os << mag.str();
        emitted = true;
    }
    if (m.lam != 0) {
        if (emitted) os << "*";
        os << "L";
        if (m.lam != 1) os << "^" << m.lam;
        emitted = true;
    }
    for (std::size_t i = 0; i < m.vars.size();) {
        std::size_t run = 1;
        while (i + run < m.vars.size() && m.vars[i + run] == m.vars[i]) ++run;
        if (emitted) os << "*";
        os << indet_to_text(m.vars[i]);
        if (run > 1) os << "^" << run;
        emitted = true;
        i += run;
    }
    for (const auto& d : m.dinvs) {
        if (emitted) os << "*";
        os << "Dinv(" << to_text(d.poly()) << ")";
        emitted = true;
    }
}

}  // namespace

std::string to_text(const DiffPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& m : p.terms()) {
        bool neg = scalar_prints_negative(m.coef);
        Scalar mag = neg ? -m.coef : m.coef;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        append_monomial_body(os, m, mag);
    }
    return os.str();
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    DiffPoly parse() {
        DiffPoly p = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << "parse error at position " << pos_ << ": " << what;
        throw std::invalid_argument(os.str());
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool literal(const char* word) {
        skip_ws();
        std::size_t n = 0;
        while (word[n] != '\0') ++n;
        if (s_.compare(pos_, n, word) == 0) {
            pos_ += n;
            return true;
        }
        return false;
    }

    long long parse_uint() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected digits");
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    long long parse_int() {
        bool neg = eat('-');
        long long v = parse_uint();
        return neg ? -v : v;
    }

    DiffPoly parse_expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        DiffPoly acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc += parse_term();
            } else if (c == '-') {
                ++pos_;
                acc -= parse_term();
            } else {
                break;
            }
        }
        return acc;
    }

    DiffPoly parse_term() {
        DiffPoly acc = parse_factor();
        while (eat('*')) acc = acc * parse_factor();
        return acc;
    }

    DiffPoly parse_factor() {
        DiffPoly base = parse_atom();
        if (eat('^')) {
            long long e = parse_int();
            if (base == DiffPoly::lambda_power(1)) return DiffPoly::lambda_power(static_cast<int>(e));
            if (e < 0) fail("negative power on a non-spectral factor");
            DiffPoly acc = DiffPoly::one();
            for (long long k = 0; k < e; ++k) acc = acc * base;
            return acc;
        }
        return base;
    }

    DiffPoly parse_atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long num = parse_uint();
            if (eat('/')) {
                long long den = parse_uint();
                return DiffPoly::constant(Scalar(Rational(BigInt(num), BigInt(den))));
            }
            return DiffPoly::constant(Scalar(Rational(BigInt(num))));
        }
        if (c == '(') {
            ++pos_;
            DiffPoly inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (literal("Dinv(")) {
            DiffPoly inner = parse_expr();
            if (!eat(')')) fail("expected ')' after Dinv");
            return dinv(inner);
        }
        if (literal("Dx(")) {
            DiffPoly inner = parse_expr();
            if (!eat(')')) fail("expected ')' after Dx");
            return ddx(inner);
        }
        if (c == 'i' && !next_is_alnum(1)) {
            ++pos_;
            return DiffPoly::constant(Scalar::i());
        }
        if (c == 's' && s_.compare(pos_, 2, "s7") == 0 && !next_is_alnum(2)) {
            pos_ += 2;
            return DiffPoly::constant(Scalar::sqrt7());
        }
        if (c == 'L' && !next_is_alnum(1)) {
            ++pos_;
            return DiffPoly::lambda_power(1);
        }
        if (c == 'q' || c == 'r' || c == 'A' || c == 'B' || c == 'C') return parse_var();
        fail("unexpected character");
    }

    bool next_is_alnum(std::size_t offset) const {
        return pos_ + offset < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_ + offset])) ||
                s_[pos_ + offset] == '_');
    }

    DiffPoly parse_var() {
        char c = s_[pos_++];
        VarKind kind;
        switch (c) {
            case 'q': kind = VarKind::Q; break;
            case 'r': kind = VarKind::R; break;
            case 'A': kind = VarKind::CoefA; break;
            case 'B': kind = VarKind::CoefB; break;
            case 'C': kind = VarKind::CoefC; break;
            default: fail("bad variable letter");
        }
        long long comp = parse_uint();
        long long ord = 0;
        if (kind != VarKind::Q && kind != VarKind::R) {
            if (!eat('_')) fail("coefficient symbol needs an _order suffix");
            ord = parse_uint();
        }
        long long xord = 0;
        if (pos_ < s_.size() && s_[pos_] == 'x') {
            ++pos_;
            xord = 1;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                xord = parse_uint();
        }
        return DiffPoly::var(Indet(kind, static_cast<int>(comp), static_cast<int>(ord),
                                   static_cast<int>(xord)));
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

DiffPoly parse_poly(const std::string& text) { return Parser(text).parse(); }

namespace {

std::string scalar_to_latex(const Scalar& s) {
    // Single-component coefficients render as \frac{..}{..}; mixed sums
    // keep the plain bracketed form.
    int nonzero = (!s.a().is_zero()) + (!s.b().is_zero()) + (!s.c().is_zero()) +
                  (!s.d().is_zero());
    if (nonzero != 1) return s.str();
    const Rational* r = nullptr;
    std::string unit;
    if (!s.a().is_zero()) {
        r = &s.a();
    } else if (!s.b().is_zero()) {
        r = &s.b();
        unit = "i";
    } else if (!s.c().is_zero()) {
        r = &s.c();
        unit = "\\sqrt{7}";
    } else {
        r = &s.d();
        unit = "i\\sqrt{7}";
    }
    Rational mag = r->sign() < 0 ? -*r : *r;
    std::string num = mag.num().str();
    if (mag.num() == 1 && !unit.empty()) num.clear();
    std::string body = num + unit;
    std::string out;
    if (mag.is_integer()) {
        out = body.empty() ? "1" : body;
    } else {
        out = "\\frac{" + (body.empty() ? "1" : body) + "}{" + mag.den().str() + "}";
    }
    return (r->sign() < 0 ? "-" : "") + out;
}

std::string indet_to_latex(const Indet& v) {
    std::ostringstream os;
    os << kind_letter(v.kind);
    std::string sub = std::to_string(v.comp);
    if (v.xord > 0 && v.xord <= 3)
        sub += std::string(static_cast<std::size_t>(v.xord), 'x');
    os << "_{" << sub << "}";
    if (v.xord > 3) os << "^{(" << v.xord << "x)}";
    if (v.kind != VarKind::Q && v.kind != VarKind::R) os << "^{(" << v.ord << ")}";
    return os.str();
}

}  // namespace

std::string to_latex(const DiffPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& m : p.terms()) {
        bool neg = scalar_prints_negative(m.coef);
        Scalar mag = neg ? -m.coef : m.coef;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? "-" : "+");
        }
        bool emitted = false;
        if (!mag.is_one() || (m.vars.empty() && m.dinvs.empty() && m.lam == 0)) {
            os << scalar_to_latex(mag);
            emitted = true;
        }
        if (m.lam != 0) {
            os << "\\lambda";
            if (m.lam != 1) os << "^{" << m.lam << "}";
            emitted = true;
        }
        for (std::size_t i = 0; i < m.vars.size();) {
            std::size_t run = 1;
            while (i + run < m.vars.size() && m.vars[i + run] == m.vars[i]) ++run;
            if (emitted) os << " ";
            os << indet_to_latex(m.vars[i]);
            if (run > 1) os << "^{" << run << "}";
            emitted = true;
            i += run;
        }
        for (const auto& d : m.dinvs) {
            if (emitted) os << "\\,";
            os << "\\partial^{-1}\\!\\left(" << to_latex(d.poly()) << "\\right)";
            emitted = true;
        }
    }
    return os.str();
}

}  // namespace laxforge
