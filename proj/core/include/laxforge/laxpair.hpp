#pragma once

#include <map>
#include <utility>
#include <vector>

#include "laxforge/algebra.hpp"
#include "laxforge/family.hpp"

namespace laxforge {

enum class SignVariant { Plain, Alternating };

/**
 * Grade bookkeeping for the two template shapes.  The space part is
 *   U_k = spec_coef * alpha(spec_grade) * delta_{k, spec_label}
 *         + q_k beta1(field_grade) + r_k beta2(field_grade)
 * and the time part expands with coefficient symbols
 *   V_k = sum_j [ A_k^(j) alpha(a_base - stride*j)
 *               + B_k^(j) beta1(b_base - stride*j)
 *               + C_k^(j) beta2(b_base - stride*j) ].
 *
 * The nilpotent family uses the lambda^2 grading (spec_grade 2, fields at
 * grade 1, stride 2); the other families use the lambda grading with
 * fields at grade 0.
 */
struct LaxTemplate {
    Scalar spec_coef;
    int spec_grade = 1;
    int field_grade = 0;
    int spec_label = 1;
    int stride = 1;
    int a_base = 0;
    int b_base = 0;

    int alpha_grade(int order) const { return a_base - stride * order; }
    int beta_grade(int order) const { return b_base - stride * order; }
    // Inverse maps; -1 when the grade is not on the lattice.
    int alpha_order(int grade) const;
    int beta_order(int grade) const;
};

struct LaxPair {
    CouplingFamily family;
    ClosureTable table;
    LaxTemplate tmpl;
    SignVariant variant = SignVariant::Plain;
    int max_order = 0;
    // Indexed by U-label - 1 (labels are 1-based); the family maps labels
    // onto basis slots.
    std::vector<AlgebraElement> u_parts;
    std::vector<AlgebraElement> v_parts;
    // Per-slot sign of the coupling matrix ((-1)^j for the alternating
    // nilpotent variant, +1 otherwise).
    std::vector<Scalar> slot_signs;

    std::size_t size() const { return u_parts.size(); }
};

struct BracketTerm {
    Scalar weight;
    int j_label = 0;  // U index
    int m_label = 0;  // V index
};

/**
 * One basis slot of the zero-curvature residual:
 *   U_{label,t} - V_{label,x} + sum w [U_j, V_m] = 0.
 * `stationary` holds the -V_x + brackets part; the time-derivative channel
 * is implicit in the slot label.
 */
struct ComponentEquation {
    int slot = 0;   // basis index
    int label = 0;  // 1-based U label
    std::vector<BracketTerm> brackets;
    AlgebraElement stationary;

    std::string bracket_text() const;  // "Ut1 - Vx1 + [U1,V1] + 2*[U2,V3] ..."
};

// Builds the enlarged pair with symbols up to max_order.  The sign variant
// is only meaningful for the nilpotent family.
LaxPair assemble(const CouplingFamily& family, int max_order,
                 SignVariant variant = SignVariant::Plain);

std::vector<ComponentEquation> zero_curvature_components(const LaxPair& lp);

using ChannelKey = std::pair<GenKind, int>;  // (generator kind, grade)

// Coefficients of each generator/grade channel of the stationary residual.
std::map<ChannelKey, DiffPoly> project_generators(const ComponentEquation& ce);

// d/d(lambda) of U, per label.
std::vector<AlgebraElement> du_dlambda(const LaxPair& lp);
// dU/d(q_comp) or dU/d(r_comp), per label.  Throws when comp is out of range.
std::vector<AlgebraElement> du_dfield(const LaxPair& lp, VarKind kind, int comp);

// Brute-force expansion in the full Kronecker representation: returns
// sum_slots sign_s basis_s (x) represent(stationary_s) and the directly
// expanded -V_x + [U, V]; equality of the two is the module's principal
// consistency oracle.
struct KroneckerCheck {
    Matrix<DiffPoly> reassembled;
    Matrix<DiffPoly> direct;
    bool equal = false;
};
KroneckerCheck kronecker_consistency(const LaxPair& lp);

}  // namespace laxforge
