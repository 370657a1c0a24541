#pragma once

#include <string>
#include <vector>

#include "laxforge/laxpair.hpp"
#include "laxforge/opmatrix.hpp"

namespace laxforge {

struct HierarchySeeds {
    std::vector<DiffPoly> b0, c0;  // indexed by label-1
};

// Family defaults: B_l^(0) = q_l, C_l^(0) = r_l for the lambda-graded
// families; B_k^(0) = (2 delta_{1k} - 1) r_k, C_k^(0) = (2 delta_{1k} - 1) q_k
// for the nilpotent one.
HierarchySeeds default_seeds(const LaxPair& lp);

/**
 * Order-indexed coefficient tables.  Every stored entry satisfies the
 * projected stationary relations exactly; verify_back_substitution
 * re-checks that from scratch.
 */
class HierarchyTable {
public:
    int ncomp = 0;
    int max_order = 0;
    std::vector<std::vector<DiffPoly>> a, b, c;  // [order][label-1]

    const DiffPoly& A(int label, int order) const { return a[order][label - 1]; }
    const DiffPoly& B(int label, int order) const { return b[order][label - 1]; }
    const DiffPoly& C(int label, int order) const { return c[order][label - 1]; }

    // Substitution map resolving every stored coefficient symbol.
    DiffPoly::SymbolMap symbol_map() const;

    // Stacked (B_1, C_1, B_2, C_2, ...) values at one order.
    std::vector<DiffPoly> stack_at(int order) const;
};

// Solves orders 0..max_order.  Requires lp.max_order >= max_order + 1 so
// that every channel used carries its full symbol content.
HierarchyTable solve_hierarchy(const LaxPair& lp, const HierarchySeeds& seeds, int max_order);

struct ResidualFailure {
    int slot;
    GenKind gen;
    int grade;
    std::string residual_text;
};

struct BackSubstitutionReport {
    int channels_checked = 0;
    int channels_skipped = 0;  // those still referencing unsolved orders
    std::vector<ResidualFailure> failures;
    bool all_zero() const { return failures.empty(); }
};

BackSubstitutionReport verify_back_substitution(const LaxPair& lp, const HierarchyTable& ht);

// Reads the one-step linear relations off a formal solver pass; entries are
// sums of c*D^k and c*Theta o D^k terms.
RecursionOperator extract_recursion_operator(const LaxPair& lp);

struct PDEEquation {
    VarKind kind = VarKind::Q;
    int comp = 1;
    DiffPoly rhs;
    std::string lhs_name() const;
};

struct PDESystem {
    FamilyKind family = FamilyKind::Nilpotent;
    int param = 0;
    SignVariant variant = SignVariant::Plain;
    int order = 0;
    std::vector<PDEEquation> equations;
    std::vector<std::string> assumptions;
};

/**
 * Evolution equations of the flow at `flow_order`.
 *
 * Nilpotent family, flow n:  q_{k,t} = d/dx B_k^(n-1), r_{k,t} = d/dx C_k^(n-1)
 * (lambda^(2n) truncation with the top alpha term dropped); the other
 * families use q_{l,t} = -2 B_l^(m+1), r_{l,t} = 2 C_l^(m+1).
 */
PDESystem emit_pde_system(const LaxPair& lp, const HierarchyTable& ht, int flow_order);

}  // namespace laxforge
