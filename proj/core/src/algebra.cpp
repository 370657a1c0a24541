#include "laxforge/algebra.hpp"

#include <sstream>
#include <stdexcept>

#include "laxforge/grammar.hpp"

namespace laxforge {

std::string gen_name(GenKind k) {
    switch (k) {
        case GenKind::Alpha: return "a";
        case GenKind::Beta1: return "b1";
        case GenKind::Beta2: return "b2";
    }
    return "?";
}

AlgebraElement AlgebraElement::term(Generator g, DiffPoly coef) {
    AlgebraElement e;
    if (!coef.is_zero()) e.terms_.emplace(g, std::move(coef));
    return e;
}

DiffPoly AlgebraElement::coefficient(const Generator& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? DiffPoly() : it->second;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    for (const auto& [g, c] : o.terms_) {
        auto it = r.terms_.find(g);
        if (it == r.terms_.end()) {
            r.terms_.emplace(g, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r;
    for (const auto& [g, c] : terms_) r.terms_.emplace(g, -c);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const { return *this + (-o); }

AlgebraElement AlgebraElement::scaled(const DiffPoly& f) const {
    AlgebraElement r;
    if (f.is_zero()) return r;
    for (const auto& [g, c] : terms_) {
        DiffPoly p = c * f;
        if (!p.is_zero()) r.terms_.emplace(g, std::move(p));
    }
    return r;
}

AlgebraElement AlgebraElement::scaled(const Scalar& s) const {
    return scaled(DiffPoly::constant(s));
}

AlgebraElement AlgebraElement::ddx() const {
    AlgebraElement r;
    for (const auto& [g, c] : terms_) {
        DiffPoly p = laxforge::ddx(c);
        if (!p.is_zero()) r.terms_.emplace(g, std::move(p));
    }
    return r;
}

AlgebraElement AlgebraElement::dlambda() const {
    AlgebraElement r;
    for (const auto& [g, c] : terms_) {
        for (const auto& m : c.terms())
            if (m.lam != 0)
                throw std::logic_error("dlambda: coefficient carries the spectral symbol");
        if (g.grade == 0) continue;
        DiffPoly p = c.scaled(Scalar(g.grade));
        if (!p.is_zero()) r.terms_.emplace(Generator(g.kind, g.grade - 1), std::move(p));
    }
    return r;
}

AlgebraElement AlgebraElement::substitute(const DiffPoly::SymbolMap& map) const {
    AlgebraElement r;
    for (const auto& [g, c] : terms_) {
        DiffPoly p = c.substitute(map);
        if (!p.is_zero()) r.terms_.emplace(g, std::move(p));
    }
    return r;
}

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_text(c) << ")*" << gen_name(g.kind) << "(" << g.grade << ")";
    }
    return os.str();
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement out;
    for (const auto& [gx, cx] : x.terms()) {
        for (const auto& [gy, cy] : y.terms()) {
            DiffPoly c = cx * cy;
            if (c.is_zero()) continue;
            int grade = gx.grade + gy.grade;
            if (gx.kind == gy.kind) continue;  // like-kind brackets vanish
            if (gx.kind == GenKind::Alpha && gy.kind == GenKind::Beta1) {
                out += AlgebraElement::term(Generator(GenKind::Beta1, grade), c);
            } else if (gx.kind == GenKind::Beta1 && gy.kind == GenKind::Alpha) {
                out += AlgebraElement::term(Generator(GenKind::Beta1, grade), -c);
            } else if (gx.kind == GenKind::Alpha && gy.kind == GenKind::Beta2) {
                out += AlgebraElement::term(Generator(GenKind::Beta2, grade), -c);
            } else if (gx.kind == GenKind::Beta2 && gy.kind == GenKind::Alpha) {
                out += AlgebraElement::term(Generator(GenKind::Beta2, grade), c);
            } else if (gx.kind == GenKind::Beta1 && gy.kind == GenKind::Beta2) {
                out += AlgebraElement::term(Generator(GenKind::Alpha, grade),
                                            c.scaled(Scalar(2)));
            } else if (gx.kind == GenKind::Beta2 && gy.kind == GenKind::Beta1) {
                out += AlgebraElement::term(Generator(GenKind::Alpha, grade),
                                            c.scaled(Scalar(-2)));
            }
        }
    }
    return out;
}

Matrix<DiffPoly> represent(const AlgebraElement& x) {
    Matrix<DiffPoly> m(2, 2);
    for (const auto& [g, c] : x.terms()) {
        DiffPoly cl = c.shifted_lambda(g.grade);
        switch (g.kind) {
            case GenKind::Alpha: {
                DiffPoly half = cl.scaled(Scalar::rat(1, 2));
                m.at(0, 0) += half;
                m.at(1, 1) -= half;
                break;
            }
            case GenKind::Beta1: m.at(0, 1) += cl; break;
            case GenKind::Beta2: m.at(1, 0) += cl; break;
        }
    }
    return m;
}

}  // namespace laxforge
