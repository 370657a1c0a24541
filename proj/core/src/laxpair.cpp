#include "laxforge/laxpair.hpp"

#include <sstream>
#include <stdexcept>

namespace laxforge {

int LaxTemplate::alpha_order(int grade) const {
    int diff = a_base - grade;
    if (diff < 0 || diff % stride != 0) return -1;
    return diff / stride;
}

int LaxTemplate::beta_order(int grade) const {
    int diff = b_base - grade;
    if (diff < 0 || diff % stride != 0) return -1;
    return diff / stride;
}

namespace {

LaxTemplate template_for(const CouplingFamily& family) {
    LaxTemplate t;
    switch (family.kind) {
        case FamilyKind::Nilpotent:
            t.spec_coef = Scalar(-2) * Scalar::i();
            t.spec_grade = 2;
            t.field_grade = 1;
            t.spec_label = 1;
            t.stride = 2;
            t.a_base = 0;
            t.b_base = -1;
            break;
        case FamilyKind::Hadamard:
        case FamilyKind::KIdempotent:
            t.spec_coef = Scalar(-2);
            t.spec_grade = 1;
            t.field_grade = 0;
            t.spec_label = 1;
            t.stride = 1;
            break;
        case FamilyKind::Idempotent:
            t.spec_coef = Scalar(-2);
            t.spec_grade = 1;
            t.field_grade = 0;
            t.spec_label = family.param;  // delta_{ln}: the last component
            t.stride = 1;
            break;
    }
    return t;
}

}  // namespace

LaxPair assemble(const CouplingFamily& family, int max_order, SignVariant variant) {
    if (variant == SignVariant::Alternating && family.kind != FamilyKind::Nilpotent)
        throw std::invalid_argument("assemble: alternating variant is nilpotent-only");
    LaxPair lp;
    lp.family = family;
    lp.table = closure_table(family);
    lp.tmpl = template_for(family);
    lp.variant = variant;
    lp.max_order = max_order;

    std::size_t n = family.size();
    for (std::size_t idx = 0; idx < n; ++idx) {
        int label = static_cast<int>(idx) + 1;
        AlgebraElement u;
        if (label == lp.tmpl.spec_label) {
            u += AlgebraElement::term(Generator(GenKind::Alpha, lp.tmpl.spec_grade),
                                      DiffPoly::constant(lp.tmpl.spec_coef));
        }
        u += AlgebraElement::term(Generator(GenKind::Beta1, lp.tmpl.field_grade),
                                  DiffPoly::var(qvar(label)));
        u += AlgebraElement::term(Generator(GenKind::Beta2, lp.tmpl.field_grade),
                                  DiffPoly::var(rvar(label)));
        lp.u_parts.push_back(std::move(u));

        AlgebraElement v;
        for (int j = 0; j <= max_order; ++j) {
            v += AlgebraElement::term(Generator(GenKind::Alpha, lp.tmpl.alpha_grade(j)),
                                      DiffPoly::var(Indet(VarKind::CoefA, label, j)));
            v += AlgebraElement::term(Generator(GenKind::Beta1, lp.tmpl.beta_grade(j)),
                                      DiffPoly::var(Indet(VarKind::CoefB, label, j)));
            v += AlgebraElement::term(Generator(GenKind::Beta2, lp.tmpl.beta_grade(j)),
                                      DiffPoly::var(Indet(VarKind::CoefC, label, j)));
        }
        lp.v_parts.push_back(std::move(v));
    }

    lp.slot_signs.assign(n, Scalar(1));
    if (variant == SignVariant::Alternating) {
        for (std::size_t s = 1; s < n; s += 2) lp.slot_signs[s] = Scalar(-1);
    }
    return lp;
}

std::vector<ComponentEquation> zero_curvature_components(const LaxPair& lp) {
    std::size_t n = lp.family.size();
    std::vector<ComponentEquation> out(n);
    for (std::size_t s = 0; s < n; ++s) {
        out[s].slot = static_cast<int>(s);
        out[s].label = lp.family.label_of_slot(s);
        out[s].stationary = -lp.v_parts[static_cast<std::size_t>(out[s].label - 1)].ddx();
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            Scalar pair_sign = lp.slot_signs[a] * lp.slot_signs[b];
            int jl = lp.family.label_of_slot(a);
            int ml = lp.family.label_of_slot(b);
            for (std::size_t s = 0; s < n; ++s) {
                Scalar w = pair_sign * lp.table.at(a, b, s);
                if (w.is_zero()) continue;
                out[s].brackets.push_back(BracketTerm{w, jl, ml});
                out[s].stationary +=
                    bracket(lp.u_parts[static_cast<std::size_t>(jl - 1)],
                            lp.v_parts[static_cast<std::size_t>(ml - 1)])
                        .scaled(w);
            }
        }
    }
    // Deterministic bracket listing per slot, ordered by U then V label.
    for (auto& ce : out) {
        std::sort(ce.brackets.begin(), ce.brackets.end(),
                  [](const BracketTerm& x, const BracketTerm& y) {
                      return std::pair(x.j_label, x.m_label) < std::pair(y.j_label, y.m_label);
                  });
    }
    return out;
}

std::string ComponentEquation::bracket_text() const {
    std::ostringstream os;
    os << "Ut" << label << " - Vx" << label;
    for (const auto& b : brackets) {
        Scalar w = b.weight;
        bool neg = false;
        if (!w.a().is_zero() && w.a().sign() < 0) {
            neg = true;
            w = -w;
        }
        os << (neg ? " - " : " + ");
        if (!w.is_one()) os << w.str() << "*";
        os << "[U" << b.j_label << ",V" << b.m_label << "]";
    }
    os << " = 0";
    return os.str();
}

std::map<ChannelKey, DiffPoly> project_generators(const ComponentEquation& ce) {
    std::map<ChannelKey, DiffPoly> out;
    for (const auto& [g, c] : ce.stationary.terms()) {
        if (c.is_zero()) continue;
        out[{g.kind, g.grade}] = c;
    }
    return out;
}

std::vector<AlgebraElement> du_dlambda(const LaxPair& lp) {
    std::vector<AlgebraElement> out;
    out.reserve(lp.size());
    for (const auto& u : lp.u_parts) out.push_back(u.dlambda());
    return out;
}

std::vector<AlgebraElement> du_dfield(const LaxPair& lp, VarKind kind, int comp) {
    if (kind != VarKind::Q && kind != VarKind::R)
        throw std::invalid_argument("du_dfield: variable must be q or r");
    if (comp < 1 || static_cast<std::size_t>(comp) > lp.size())
        throw std::out_of_range("du_dfield: component out of range");
    std::vector<AlgebraElement> out(lp.size());
    GenKind gk = (kind == VarKind::Q) ? GenKind::Beta1 : GenKind::Beta2;
    out[static_cast<std::size_t>(comp - 1)] =
        AlgebraElement::term(Generator(gk, lp.tmpl.field_grade), DiffPoly::one());
    return out;
}

KroneckerCheck kronecker_consistency(const LaxPair& lp) {
    std::size_t n = lp.family.size();
    std::size_t dim = lp.family.matrix_dim();

    auto lift = [&](const ExactMatrix& m) {
        Matrix<DiffPoly> r(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                r.at(i, j) = DiffPoly::constant(m.at(i, j));
        return r;
    };

    Matrix<DiffPoly> ufull(dim * 2, dim * 2), vfull(dim * 2, dim * 2), vxfull(dim * 2, dim * 2);
    for (std::size_t s = 0; s < n; ++s) {
        int label = lp.family.label_of_slot(s);
        Matrix<DiffPoly> coupling = lift(lp.family.basis[s].scaled(lp.slot_signs[s]));
        const AlgebraElement& u = lp.u_parts[static_cast<std::size_t>(label - 1)];
        const AlgebraElement& v = lp.v_parts[static_cast<std::size_t>(label - 1)];
        ufull = ufull + kron(coupling, represent(u));
        vfull = vfull + kron(coupling, represent(v));
        vxfull = vxfull + kron(coupling, represent(v.ddx()));
    }
    KroneckerCheck chk{Matrix<DiffPoly>(dim * 2, dim * 2), Matrix<DiffPoly>(dim * 2, dim * 2),
                       false};
    chk.direct = ufull * vfull - vfull * ufull - vxfull;

    // The slot equations follow the published convention where the
    // alternating sign sits on the bracket sums only, so the V_x part
    // re-acquires its slot sign when the residual is rebuilt.
    auto components = zero_curvature_components(lp);
    for (const auto& ce : components) {
        const AlgebraElement& vpart = lp.v_parts[static_cast<std::size_t>(ce.label - 1)];
        AlgebraElement vx = vpart.ddx();
        AlgebraElement brackets = ce.stationary + vx;
        Matrix<DiffPoly> coupling = lift(lp.family.basis[static_cast<std::size_t>(ce.slot)]);
        Matrix<DiffPoly> signed_coupling =
            lift(lp.family.basis[static_cast<std::size_t>(ce.slot)].scaled(
                lp.slot_signs[static_cast<std::size_t>(ce.slot)]));
        chk.reassembled = chk.reassembled + kron(coupling, represent(brackets)) -
                          kron(signed_coupling, represent(vx));
    }
    chk.equal = chk.reassembled == chk.direct;
    return chk;
}

}  // namespace laxforge
