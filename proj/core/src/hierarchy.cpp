#include "laxforge/hierarchy.hpp"

#include <sstream>
#include <stdexcept>

#include "laxforge/grammar.hpp"

namespace laxforge {

HierarchySeeds default_seeds(const LaxPair& lp) {
    HierarchySeeds s;
    std::size_t n = lp.size();
    for (std::size_t idx = 0; idx < n; ++idx) {
        int label = static_cast<int>(idx) + 1;
        if (lp.family.kind == FamilyKind::Nilpotent) {
            Scalar w = (label == 1) ? Scalar(1) : Scalar(-1);  // 2*delta_{1k} - 1
            s.b0.push_back(DiffPoly::var(rvar(label)).scaled(w));
            s.c0.push_back(DiffPoly::var(qvar(label)).scaled(w));
        } else {
            s.b0.push_back(DiffPoly::var(qvar(label)));
            s.c0.push_back(DiffPoly::var(rvar(label)));
        }
    }
    return s;
}

DiffPoly::SymbolMap HierarchyTable::symbol_map() const {
    DiffPoly::SymbolMap map;
    for (int j = 0; j <= max_order; ++j) {
        for (int l = 1; l <= ncomp; ++l) {
            map[{VarKind::CoefA, l, j}] = a[j][l - 1];
            map[{VarKind::CoefB, l, j}] = b[j][l - 1];
            map[{VarKind::CoefC, l, j}] = c[j][l - 1];
        }
    }
    return map;
}

std::vector<DiffPoly> HierarchyTable::stack_at(int order) const {
    std::vector<DiffPoly> out;
    for (int l = 1; l <= ncomp; ++l) {
        out.push_back(B(l, order));
        out.push_back(C(l, order));
    }
    return out;
}

namespace {

struct SlotChannels {
    int label;
    std::map<ChannelKey, DiffPoly> channels;
};

std::vector<SlotChannels> all_channels(const LaxPair& lp) {
    std::vector<SlotChannels> out;
    for (const auto& ce : zero_curvature_components(lp)) {
        out.push_back(SlotChannels{ce.label, project_generators(ce)});
    }
    return out;
}

const DiffPoly* find_channel(const std::vector<SlotChannels>& chans, int label, GenKind gen,
                             int grade) {
    for (const auto& sc : chans) {
        if (sc.label != label) continue;
        auto it = sc.channels.find({gen, grade});
        return it == sc.channels.end() ? nullptr : &it->second;
    }
    return nullptr;
}

// Splits R = coef * X + rest where X occurs only as a bare monomial with a
// Scalar coefficient; throws if X shows up anywhere else.
struct LinearSplit {
    Scalar coef;
    DiffPoly rest;
};

bool monomial_contains(const Monomial& m, const Indet& x) {
    for (const auto& v : m.vars)
        if (v == x) return true;
    for (const auto& d : m.dinvs)
        for (const auto& mm : d.poly().terms())
            if (monomial_contains(mm, x)) return true;
    return false;
}

LinearSplit split_linear_scalar(const DiffPoly& r, const Indet& x) {
    LinearSplit out;
    std::vector<Monomial> rest;
    for (const auto& m : r.terms()) {
        if (m.vars.size() == 1 && m.dinvs.empty() && m.lam == 0 && m.vars[0] == x) {
            out.coef += m.coef;
        } else {
            if (monomial_contains(m, x)) {
                throw std::logic_error("split_linear_scalar: non-scalar occurrence of " +
                                       indet_to_text(x));
            }
            rest.push_back(m);
        }
    }
    if (out.coef.is_zero())
        throw std::logic_error("split_linear_scalar: unknown " + indet_to_text(x) +
                               " absent from the relation");
    out.rest = DiffPoly::from_terms(std::move(rest));
    return out;
}

bool contains_symbol_of_order(const DiffPoly& p, VarKind kind, int ord) {
    for (const auto& m : p.terms()) {
        for (const auto& v : m.vars)
            if (v.kind == kind && v.ord == ord) return true;
        for (const auto& d : m.dinvs)
            if (contains_symbol_of_order(d.poly(), kind, ord)) return true;
    }
    return false;
}

// One solver step: from fully-known orders <= j (map `known`) produce the
// order j+1 entries.  Called with j = -1 to bootstrap A^(0) from the seeds.
struct StepResult {
    std::vector<DiffPoly> a, b, c;  // per label-1; b/c empty for j = -1
};

StepResult solve_step(const LaxPair& lp, const std::vector<SlotChannels>& chans,
                      const DiffPoly::SymbolMap& known, int j) {
    std::size_t n = lp.size();
    StepResult res;
    DiffPoly::SymbolMap formal_bc;

    if (j >= 0) {
        res.b.resize(n);
        res.c.resize(n);
        for (std::size_t idx = 0; idx < n; ++idx) {
            int l = static_cast<int>(idx) + 1;
            const DiffPoly* rb = find_channel(chans, l, GenKind::Beta1, lp.tmpl.beta_grade(j));
            const DiffPoly* rc = find_channel(chans, l, GenKind::Beta2, lp.tmpl.beta_grade(j));
            if (!rb || !rc) throw std::logic_error("solve_step: missing beta channel");
            auto sb = split_linear_scalar(rb->substitute(known), Indet(VarKind::CoefB, l, j + 1));
            auto sc = split_linear_scalar(rc->substitute(known), Indet(VarKind::CoefC, l, j + 1));
            res.b[idx] = sb.rest.scaled(-(sb.coef.inverse()));
            res.c[idx] = sc.rest.scaled(-(sc.coef.inverse()));
            formal_bc[{VarKind::CoefB, l, j + 1}] = res.b[idx];
            formal_bc[{VarKind::CoefC, l, j + 1}] = res.c[idx];
        }
    }

    // alpha channel at order j+1 defines A^(j+1) (or A^(0) when j = -1).
    res.a.resize(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        int l = static_cast<int>(idx) + 1;
        const DiffPoly* ra = find_channel(chans, l, GenKind::Alpha, lp.tmpl.alpha_grade(j + 1));
        if (!ra) throw std::logic_error("solve_step: missing alpha channel");
        DiffPoly r = ra->substitute(known).substitute(formal_bc);
        auto sa = split_linear_scalar(r, Indet(VarKind::CoefA, l, j + 1, 1));
        if (contains_symbol_of_order(sa.rest, VarKind::CoefA, j + 1)) {
            throw std::logic_error(
                "solve_step: next-order alpha symbols failed to cancel in the alpha channel");
        }
        res.a[idx] = dinv(sa.rest.scaled(-(sa.coef.inverse())));
    }

    // Resolve any formal A^(j+1) references left inside B/C^(j+1).
    if (j >= 0) {
        DiffPoly::SymbolMap amap;
        for (std::size_t idx = 0; idx < n; ++idx)
            amap[{VarKind::CoefA, static_cast<int>(idx) + 1, j + 1}] = res.a[idx];
        for (std::size_t idx = 0; idx < n; ++idx) {
            res.b[idx] = res.b[idx].substitute(amap);
            res.c[idx] = res.c[idx].substitute(amap);
        }
    }
    return res;
}

}  // namespace

HierarchyTable solve_hierarchy(const LaxPair& lp, const HierarchySeeds& seeds, int max_order) {
    if (lp.max_order < max_order + 1)
        throw std::invalid_argument("solve_hierarchy: assemble the pair with at least order+1 symbols");
    std::size_t n = lp.size();
    if (seeds.b0.size() != n || seeds.c0.size() != n)
        throw std::invalid_argument("solve_hierarchy: seed count mismatch");

    auto chans = all_channels(lp);
    HierarchyTable ht;
    ht.ncomp = static_cast<int>(n);
    ht.max_order = max_order;
    ht.a.assign(max_order + 1, std::vector<DiffPoly>(n));
    ht.b.assign(max_order + 1, std::vector<DiffPoly>(n));
    ht.c.assign(max_order + 1, std::vector<DiffPoly>(n));

    DiffPoly::SymbolMap known;
    for (std::size_t idx = 0; idx < n; ++idx) {
        int l = static_cast<int>(idx) + 1;
        ht.b[0][idx] = seeds.b0[idx];
        ht.c[0][idx] = seeds.c0[idx];
        known[{VarKind::CoefB, l, 0}] = seeds.b0[idx];
        known[{VarKind::CoefC, l, 0}] = seeds.c0[idx];
    }
    auto boot = solve_step(lp, chans, known, -1);
    for (std::size_t idx = 0; idx < n; ++idx) {
        ht.a[0][idx] = boot.a[idx];
        known[{VarKind::CoefA, static_cast<int>(idx) + 1, 0}] = boot.a[idx];
    }

    for (int j = 0; j < max_order; ++j) {
        auto step = solve_step(lp, chans, known, j);
        for (std::size_t idx = 0; idx < n; ++idx) {
            int l = static_cast<int>(idx) + 1;
            if (step.a[idx].contains_symbols() || step.b[idx].contains_symbols() ||
                step.c[idx].contains_symbols())
                throw std::logic_error("solve_hierarchy: unresolved symbols at order " +
                                       std::to_string(j + 1));
            ht.a[j + 1][idx] = step.a[idx];
            ht.b[j + 1][idx] = step.b[idx];
            ht.c[j + 1][idx] = step.c[idx];
            known[{VarKind::CoefA, l, j + 1}] = step.a[idx];
            known[{VarKind::CoefB, l, j + 1}] = step.b[idx];
            known[{VarKind::CoefC, l, j + 1}] = step.c[idx];
        }
    }
    return ht;
}

BackSubstitutionReport verify_back_substitution(const LaxPair& lp, const HierarchyTable& ht) {
    BackSubstitutionReport rep;
    auto map = ht.symbol_map();
    for (const auto& ce : zero_curvature_components(lp)) {
        for (const auto& [key, relation] : project_generators(ce)) {
            // Stationary relations live on the V-expansion grade lattice;
            // the off-lattice channels are the flow boundaries.
            int ord = key.first == GenKind::Alpha ? lp.tmpl.alpha_order(key.second)
                                                  : lp.tmpl.beta_order(key.second);
            if (ord < 0) continue;
            DiffPoly res = relation.substitute(map);
            if (res.contains_symbols()) {
                ++rep.channels_skipped;  // involves orders beyond the table
                continue;
            }
            ++rep.channels_checked;
            if (!res.is_zero()) {
                rep.failures.push_back(
                    ResidualFailure{ce.slot, key.first, key.second, to_text(res)});
            }
        }
    }
    return rep;
}

RecursionOperator extract_recursion_operator(const LaxPair& lp) {
    // Formal one-step pass: order-1 symbols stay opaque, order-2 entries
    // come out linear in them.  A^(1) is pre-solved in terms of the formal
    // stack because the lambda-graded beta channels reference it.
    const int jin = 1;
    auto chans = all_channels(lp);
    DiffPoly::SymbolMap formal_a;
    for (std::size_t idx = 0; idx < lp.size(); ++idx) {
        int l = static_cast<int>(idx) + 1;
        const DiffPoly* ra = find_channel(chans, l, GenKind::Alpha, lp.tmpl.alpha_grade(jin));
        if (!ra) throw std::logic_error("extract_recursion_operator: missing alpha channel");
        auto sa = split_linear_scalar(*ra, Indet(VarKind::CoefA, l, jin, 1));
        formal_a[{VarKind::CoefA, l, jin}] = dinv(sa.rest.scaled(-(sa.coef.inverse())));
    }
    auto step = solve_step(lp, chans, formal_a, jin);

    std::size_t n = lp.size();
    RecursionOperator op;
    for (std::size_t idx = 0; idx < n; ++idx) {
        int l = static_cast<int>(idx) + 1;
        op.stack.push_back(StackSlot{VarKind::CoefB, l});
        op.stack.push_back(StackSlot{VarKind::CoefC, l});
    }
    op.entries.assign(op.stack.size() * op.stack.size(), OpEntry{});

    auto column_of = [&](VarKind kind, int comp) -> std::size_t {
        for (std::size_t cidx = 0; cidx < op.stack.size(); ++cidx)
            if (op.stack[cidx].kind == kind && op.stack[cidx].comp == comp) return cidx;
        throw std::logic_error("extract_recursion_operator: unknown stack slot");
    };

    auto is_formal = [&](const Indet& v) {
        return (v.kind == VarKind::CoefB || v.kind == VarKind::CoefC) && v.ord == jin;
    };

    auto extract_row = [&](const DiffPoly& expr, std::size_t row) {
        for (const auto& m : expr.terms()) {
            if (m.lam != 0)
                throw std::logic_error("extract_recursion_operator: unexpected spectral power");
            if (m.dinvs.empty() && m.vars.size() == 1 && is_formal(m.vars[0])) {
                OpTerm t;
                t.coef = m.coef;
                t.dpow = m.vars[0].xord;
                std::size_t col = column_of(m.vars[0].kind, m.vars[0].comp);
                op.at(row, col).push_back(t);
                continue;
            }
            if (m.dinvs.size() == 1 && m.vars.size() == 1 &&
                (m.vars[0].kind == VarKind::Q || m.vars[0].kind == VarKind::R) &&
                m.vars[0].xord == 0) {
                const DiffPoly& inner = m.dinvs[0].poly();
                if (inner.term_count() != 1)
                    throw std::logic_error("extract_recursion_operator: non-atomic Dinv");
                const Monomial& im = inner.terms()[0];
                if (im.vars.size() == 2 && im.dinvs.empty()) {
                    const Indet *field = nullptr, *sym = nullptr;
                    for (const auto& v : im.vars) {
                        if (is_formal(v))
                            sym = &v;
                        else if ((v.kind == VarKind::Q || v.kind == VarKind::R) && v.xord == 0)
                            field = &v;
                    }
                    if (field && sym) {
                        OpTerm t;
                        t.coef = m.coef * im.coef;
                        t.dpow = sym->xord;
                        t.theta = ThetaOp{m.vars[0].kind, field->kind, m.vars[0].comp,
                                          field->comp};
                        std::size_t col = column_of(sym->kind, sym->comp);
                        op.at(row, col).push_back(t);
                        continue;
                    }
                }
            }
            throw std::logic_error(
                "extract_recursion_operator: term outside the D/Theta operator algebra: " +
                to_text(DiffPoly::from_terms({m})));
        }
    };

    for (std::size_t idx = 0; idx < n; ++idx) {
        extract_row(step.b[idx], 2 * idx);
        extract_row(step.c[idx], 2 * idx + 1);
    }
    for (auto& e : op.entries) e = canonical_entry(std::move(e));
    return op;
}

std::string PDEEquation::lhs_name() const {
    return std::string(kind == VarKind::Q ? "q" : "r") + std::to_string(comp) + "_t";
}

PDESystem emit_pde_system(const LaxPair& lp, const HierarchyTable& ht, int flow_order) {
    PDESystem sys;
    sys.family = lp.family.kind;
    sys.param = lp.family.param;
    sys.variant = lp.variant;
    sys.order = flow_order;
    sys.assumptions = {"Dinv-zero-constant", "alpha-abelian"};
    if (lp.variant == SignVariant::Alternating) sys.assumptions.push_back("alternating-signs");

    std::size_t n = lp.size();
    if (lp.family.kind == FamilyKind::Nilpotent) {
        if (flow_order < 1 || flow_order - 1 > ht.max_order)
            throw std::invalid_argument("emit_pde_system: flow order outside solved range");
        sys.assumptions.push_back("truncation-drops-top-alpha");
        for (std::size_t idx = 0; idx < n; ++idx) {
            int l = static_cast<int>(idx) + 1;
            sys.equations.push_back(PDEEquation{VarKind::Q, l, ddx(ht.B(l, flow_order - 1))});
            sys.equations.push_back(PDEEquation{VarKind::R, l, ddx(ht.C(l, flow_order - 1))});
        }
    } else {
        if (flow_order < 0 || flow_order + 1 > ht.max_order)
            throw std::invalid_argument("emit_pde_system: flow order outside solved range");
        for (std::size_t idx = 0; idx < n; ++idx) {
            int l = static_cast<int>(idx) + 1;
            sys.equations.push_back(
                PDEEquation{VarKind::Q, l, ht.B(l, flow_order + 1).scaled(Scalar(-2))});
            sys.equations.push_back(
                PDEEquation{VarKind::R, l, ht.C(l, flow_order + 1).scaled(Scalar(2))});
        }
    }
    return sys;
}

}  // namespace laxforge
