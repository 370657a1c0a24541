#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laxforge/diffpoly.hpp"

namespace laxforge {

// Theta^{xy}_{mu,nu} = x_mu Dinv(y_nu * .), the nonlocal building block of
// every recursion operator here.
struct ThetaOp {
    VarKind x = VarKind::Q;
    VarKind y = VarKind::Q;
    int mu = 1;
    int nu = 1;

    friend auto operator<=>(const ThetaOp&, const ThetaOp&) = default;
};

// One operator term: c * D^dpow, or c * Theta o D^dpow when theta is set.
struct OpTerm {
    Scalar coef;
    int dpow = 0;
    std::optional<ThetaOp> theta;
};

using OpEntry = std::vector<OpTerm>;  // canonical: sorted, merged, no zeros

OpEntry canonical_entry(OpEntry terms);
DiffPoly apply_entry(const OpEntry& entry, const DiffPoly& f);
std::string entry_to_text(const OpEntry& entry);
std::string entry_to_latex(const OpEntry& entry);
OpEntry parse_op_entry(const std::string& text);
bool entries_equal(const OpEntry& a, const OpEntry& b);

// Stack labels alternate (B_1, C_1, B_2, C_2, ...).
struct StackSlot {
    VarKind kind = VarKind::CoefB;  // CoefB or CoefC
    int comp = 1;
    std::string name() const;
};

/**
 * RecursionOperator: square matrix of operator entries mapping the stacked
 * coefficient vector at order m to order m+1.
 */
struct RecursionOperator {
    std::vector<StackSlot> stack;
    std::vector<OpEntry> entries;  // row-major, stack.size()^2

    std::size_t size() const { return stack.size(); }
    const OpEntry& at(std::size_t row, std::size_t col) const {
        return entries[row * stack.size() + col];
    }
    OpEntry& at(std::size_t row, std::size_t col) { return entries[row * stack.size() + col]; }

    std::vector<DiffPoly> apply(const std::vector<DiffPoly>& stack_values) const;
    std::string to_text() const;
};

}  // namespace laxforge
