#include "laxforge/hamilton.hpp"

#include <sstream>
#include <stdexcept>

#include "laxforge/grammar.hpp"

namespace laxforge {

PairingConvention default_pairing(FamilyKind kind) {
    return kind == FamilyKind::Nilpotent ? PairingConvention::Transposed
                                         : PairingConvention::Plain;
}

namespace {

// Normalized algebra trace form 2 tr(rep(x) rep(y)).
DiffPoly algebra_pairing(const AlgebraElement& x, const AlgebraElement& y) {
    Matrix<DiffPoly> prod = represent(x) * represent(y);
    return prod.trace().scaled(Scalar(2));
}

}  // namespace

DiffPoly inner_product(const EnlargedElement& p, const EnlargedElement& q,
                       PairingConvention conv) {
    DiffPoly out;
    for (const auto& [mp, xp] : p) {
        for (const auto& [mq, xq] : q) {
            ExactMatrix lhs = conv == PairingConvention::Transposed ? mp.transposed() : mp;
            Scalar weight = (lhs * mq).trace();
            if (weight.is_zero()) continue;
            out += algebra_pairing(xp, xq).scaled(weight);
        }
    }
    return out;
}

DiffPoly inner_product_bruteforce(const EnlargedElement& p, const EnlargedElement& q,
                                  PairingConvention conv) {
    if (p.empty() || q.empty()) return DiffPoly();
    std::size_t dim = p.front().first.rows();
    auto lift = [&](const ExactMatrix& m) {
        Matrix<DiffPoly> r(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                r.at(i, j) = DiffPoly::constant(m.at(i, j));
        return r;
    };
    Matrix<DiffPoly> f1(dim * 2, dim * 2), f2(dim * 2, dim * 2);
    for (const auto& [m, x] : p) {
        ExactMatrix mm = conv == PairingConvention::Transposed ? m.transposed() : m;
        f1 = f1 + kron(lift(mm), represent(x));
    }
    for (const auto& [m, x] : q) f2 = f2 + kron(lift(m), represent(x));
    return (f1 * f2).trace().scaled(Scalar(2));
}

EnlargedElement enlarged_v(const LaxPair& lp) {
    EnlargedElement out;
    for (std::size_t s = 0; s < lp.family.size(); ++s) {
        int label = lp.family.label_of_slot(s);
        out.emplace_back(lp.family.basis[s].scaled(lp.slot_signs[s]),
                         lp.v_parts[static_cast<std::size_t>(label - 1)]);
    }
    return out;
}

EnlargedElement enlarged_du_dlambda(const LaxPair& lp) {
    EnlargedElement out;
    for (std::size_t s = 0; s < lp.family.size(); ++s) {
        int label = lp.family.label_of_slot(s);
        AlgebraElement d = lp.u_parts[static_cast<std::size_t>(label - 1)].dlambda();
        if (d.is_zero()) continue;
        out.emplace_back(lp.family.basis[s].scaled(lp.slot_signs[s]), d);
    }
    return out;
}

EnlargedElement enlarged_du_dfield(const LaxPair& lp, VarKind kind, int comp) {
    auto parts = du_dfield(lp, kind, comp);
    EnlargedElement out;
    for (std::size_t s = 0; s < lp.family.size(); ++s) {
        int label = lp.family.label_of_slot(s);
        const AlgebraElement& d = parts[static_cast<std::size_t>(label - 1)];
        if (d.is_zero()) continue;
        out.emplace_back(lp.family.basis[s].scaled(lp.slot_signs[s]), d);
    }
    return out;
}

DiffPoly pairing_v_ulambda(const LaxPair& lp, PairingConvention conv) {
    return inner_product(enlarged_v(lp), enlarged_du_dlambda(lp), conv);
}

DiffPoly pairing_v_ufield(const LaxPair& lp, VarKind kind, int comp, PairingConvention conv) {
    return inner_product(enlarged_v(lp), enlarged_du_dfield(lp, kind, comp), conv);
}

std::vector<std::vector<Rational>> omega_weights(int p) {
    std::vector<std::vector<Rational>> w(p, std::vector<Rational>(p));
    for (int j = 1; j <= p; ++j) {
        for (int k = 1; k <= p; ++k) {
            int m = std::max(j, k);
            w[j - 1][k - 1] = Rational(BigInt((p - m + 1) * (p - m + 2)), BigInt(2));
        }
    }
    return w;
}

std::vector<std::vector<Rational>> omega_traces(int p) {
    auto fam = build_family(FamilyKind::Nilpotent, p);
    std::vector<std::vector<Rational>> w(p, std::vector<Rational>(p));
    for (int j = 1; j <= p; ++j) {
        for (int k = 1; k <= p; ++k) {
            Scalar t = (fam.basis[j].transposed() * fam.basis[k]).trace();
            if (!t.is_rational()) throw std::logic_error("omega_traces: non-rational trace");
            w[j - 1][k - 1] = t.a();
        }
    }
    return w;
}

namespace {

struct IdentityOrder {
    VarKind kind;
    int comp;
    int s;  // lambda order of the <V,U_field> side
    DiffPoly lhs;   // d/d(field) of T at lambda^(s-1), resolved
    DiffPoly rhs;   // <V,U_field> at lambda^s, resolved
};

// Invokes `sink(row)` per resolvable identity row; stops when the sink
// returns false.  Laziness matters: Euler derivatives of the deeper
// pairing slices are the expensive part.
template <typename Sink>
void for_each_identity_order(const LaxPair& lp, const HierarchyTable& ht,
                             PairingConvention conv, Sink&& sink) {
    auto map = ht.symbol_map();
    DiffPoly t = pairing_v_ulambda(lp, conv);
    auto t_orders = t.collect_lambda();
    for (std::size_t idx = 0; idx < lp.size(); ++idx) {
        int comp = static_cast<int>(idx) + 1;
        for (VarKind kind : {VarKind::Q, VarKind::R}) {
            DiffPoly g = pairing_v_ufield(lp, kind, comp, conv);
            for (const auto& [s, gs] : g.collect_lambda()) {
                auto it = t_orders.find(s - 1);
                if (it == t_orders.end()) continue;
                DiffPoly lhs_raw = it->second.substitute(map);
                DiffPoly rhs = gs.substitute(map);
                if (lhs_raw.contains_symbols() || rhs.contains_symbols()) continue;
                IdentityOrder row{kind, comp, s, euler_derivative(lhs_raw, kind, comp),
                                  std::move(rhs)};
                if (!sink(row)) return;
            }
        }
    }
}

}  // namespace

GammaResult solve_gamma(const LaxPair& lp, const HierarchyTable& ht, PairingConvention conv) {
    GammaResult res;
    std::optional<Rational> gamma;
    std::set<int> orders;
    for_each_identity_order(lp, ht, conv, [&](const IdentityOrder& row) {
        if (row.rhs.is_zero()) {
            if (!row.lhs.is_zero()) {
                res.failure = "identity row with zero pairing but nonzero gradient";
                return false;
            }
            return true;
        }
        orders.insert(row.s);
        // lhs - s*rhs must equal gamma*rhs exactly.
        DiffPoly delta = row.lhs - row.rhs.scaled(Scalar(row.s));
        const Monomial& probe = row.rhs.terms().front();
        Scalar num;
        for (const auto& m : delta.terms()) {
            if (m.compare_key(probe) == 0) {
                num = m.coef;
                break;
            }
        }
        Scalar cand_s = num * probe.coef.inverse();
        if (!cand_s.is_rational()) {
            res.failure = "non-rational gamma candidate";
            return false;
        }
        Rational cand = cand_s.a();
        if (!(delta == row.rhs.scaled(Scalar(cand)))) {
            res.failure = "gradient is not proportional to the pairing at order " +
                          std::to_string(row.s);
            return false;
        }
        if (gamma && !(*gamma == cand)) {
            res.failure = "inconsistent gamma across orders";
            return false;
        }
        gamma = cand;
        ++res.equations_used;
        return true;
    });
    if (!res.failure.empty()) return res;
    res.orders_seen = static_cast<int>(orders.size());
    if (!gamma) {
        res.failure = "no usable identity rows";
        return res;
    }
    if (res.orders_seen < 2) {
        res.failure = "under-determined: fewer than two lambda orders available";
        return res;
    }
    res.solved = true;
    res.gamma = *gamma;
    return res;
}

TraceIdentityReport verify_trace_identity(const LaxPair& lp, const HierarchyTable& ht,
                                          const Rational& gamma, PairingConvention conv) {
    TraceIdentityReport rep;
    for_each_identity_order(lp, ht, conv, [&](const IdentityOrder& row) {
        ++rep.checked;
        Scalar factor = Scalar(gamma + Rational(row.s));
        if (!(row.lhs == row.rhs.scaled(factor))) {
            std::ostringstream os;
            os << (row.kind == VarKind::Q ? "q" : "r") << row.comp << " at order " << row.s
               << ": lhs != (gamma+s) rhs";
            rep.failures.push_back(os.str());
        }
        return true;
    });
    return rep;
}

HamiltonianRecord hamiltonian(const LaxPair& lp, const HierarchyTable& ht, const Rational& gamma,
                              int m, PairingConvention conv) {
    HamiltonianRecord rec;
    rec.gamma = gamma;
    rec.m = m;
    int s = -lp.tmpl.stride * m;
    Rational denom = gamma + Rational(s);
    if (denom.is_zero()) throw std::invalid_argument("hamiltonian: gamma + s vanishes");
    DiffPoly t = pairing_v_ulambda(lp, conv);
    rec.density_symbols = t.lambda_coefficient(s - 1).scaled(Scalar(denom.inverse()));
    rec.density = rec.density_symbols.substitute(ht.symbol_map());
    if (rec.density.contains_symbols())
        throw std::invalid_argument("hamiltonian: table not solved deep enough for this order");
    return rec;
}

namespace {

// Exact solve of (rows x cols) A x = b; returns nullopt when inconsistent.
std::optional<std::vector<Scalar>> solve_exact(std::vector<std::vector<Scalar>> a,
                                               std::vector<Scalar> b) {
    std::size_t rows = a.size();
    std::size_t cols = rows == 0 ? 0 : a.front().size();
    std::vector<int> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[rank], a[piv]);
        std::swap(b[rank], b[piv]);
        Scalar inv = a[rank][col].inverse();
        for (auto& x : a[rank]) x = x * inv;
        b[rank] = b[rank] * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col].is_zero()) continue;
            Scalar f = a[r][col];
            for (std::size_t cc = 0; cc < cols; ++cc) a[r][cc] = a[r][cc] - f * a[rank][cc];
            b[r] = b[r] - f * b[rank];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (!b[r].is_zero()) return std::nullopt;
    std::vector<Scalar> x(cols);
    for (std::size_t r = 0; r < rank; ++r) x[static_cast<std::size_t>(pivot_col[r])] = b[r];
    return x;
}

bool exact_invertible(const ExactMatrix& m) {
    // Gaussian elimination rank check.
    std::size_t n = m.rows();
    std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return false;
        std::swap(a[col], a[piv]);
        Scalar inv = a[col][col].inverse();
        for (auto& x : a[col]) x = x * inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Scalar f = a[r][col];
            for (std::size_t cc = 0; cc < n; ++cc) a[r][cc] = a[r][cc] - f * a[col][cc];
        }
    }
    return true;
}

std::optional<ExactMatrix> fit_w(const std::vector<DiffPoly>& flows,
                                 const std::vector<DiffPoly>& target) {
    std::size_t n = flows.size();
    // Union of monomial keys over all flows and targets.
    std::vector<Monomial> keys;
    auto add_keys = [&](const DiffPoly& p) {
        for (const auto& m : p.terms()) {
            bool seen = false;
            for (const auto& k : keys)
                if (k.compare_key(m) == 0) {
                    seen = true;
                    break;
                }
            if (!seen) {
                Monomial key = m;
                key.coef = Scalar(1);
                keys.push_back(std::move(key));
            }
        }
    };
    for (const auto& f : flows) add_keys(f);
    for (const auto& t : target) add_keys(t);

    auto coef_at = [&](const DiffPoly& p, const Monomial& key) {
        for (const auto& m : p.terms())
            if (m.compare_key(key) == 0) return m.coef;
        return Scalar();
    };

    ExactMatrix w(n, n);
    for (std::size_t row = 0; row < n; ++row) {
        std::vector<std::vector<Scalar>> a;
        std::vector<Scalar> b;
        for (const auto& key : keys) {
            std::vector<Scalar> line(n);
            for (std::size_t col = 0; col < n; ++col) line[col] = coef_at(flows[col], key);
            a.push_back(std::move(line));
            b.push_back(coef_at(target[row], key));
        }
        auto x = solve_exact(std::move(a), std::move(b));
        if (!x) return std::nullopt;
        for (std::size_t col = 0; col < n; ++col) w.at(row, col) = (*x)[col];
    }
    // Symbolic re-verification.
    for (std::size_t row = 0; row < n; ++row) {
        DiffPoly acc;
        for (std::size_t col = 0; col < n; ++col) acc += flows[col].scaled(w.at(row, col));
        if (!(acc == target[row])) return std::nullopt;
    }
    return w;
}

}  // namespace

std::vector<SymplecticFit> fit_symplectic(const PDESystem& pde, const HamiltonianRecord& h) {
    std::vector<DiffPoly> flows, grads;
    for (const auto& eq : pde.equations) flows.push_back(eq.rhs);
    for (const auto& eq : pde.equations)
        grads.push_back(euler_derivative(h.density, eq.kind, eq.comp));

    std::vector<SymplecticFit> out;
    bool all_zero = true;
    for (const auto& f : flows)
        if (!f.is_zero()) all_zero = false;
    for (const auto& g : grads)
        if (!g.is_zero()) all_zero = false;
    if (all_zero) {
        SymplecticFit fit;
        fit.degenerate = true;
        fit.note = "zero flow and zero gradient: any W verifies, no canonical fit";
        out.push_back(fit);
        return out;
    }

    auto attempt = [&](SymplecticConvention conv) {
        std::vector<DiffPoly> target = grads;
        if (conv == SymplecticConvention::WInverseDx)
            for (auto& t : target) t = ddx(t);
        if (auto w = fit_w(flows, target)) {
            SymplecticFit fit;
            fit.ok = true;
            fit.convention = conv;
            fit.w = *w;
            fit.invertible = exact_invertible(*w);
            fit.antisymmetric = (w->transposed() + *w).is_zero();
            out.push_back(std::move(fit));
        }
    };
    // Family-preferred convention first.
    if (pde.family == FamilyKind::Nilpotent) {
        attempt(SymplecticConvention::WInverseDx);
        attempt(SymplecticConvention::WInverse);
    } else {
        attempt(SymplecticConvention::WInverse);
        attempt(SymplecticConvention::WInverseDx);
    }
    if (out.empty()) {
        SymplecticFit fit;
        fit.note = "no constant W satisfies either convention";
        out.push_back(fit);
    }
    return out;
}

}  // namespace laxforge
