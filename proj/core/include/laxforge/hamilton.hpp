#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laxforge/hierarchy.hpp"

namespace laxforge {

/**
 * Pairing of enlarged operators sum_i M_i (x) x_i.  The matrix part uses
 * tr(M^T A) for the nilpotent family (the transpose is what keeps the
 * upper-triangular couplings from annihilating every pairing) and tr(M A)
 * for the other families, matching their displayed Hamiltonians.  The
 * algebra part is the normalized trace form 2 tr(rep(x) rep(y)).
 */
enum class PairingConvention { Transposed, Plain };

PairingConvention default_pairing(FamilyKind kind);

using EnlargedElement = std::vector<std::pair<ExactMatrix, AlgebraElement>>;

DiffPoly inner_product(const EnlargedElement& p, const EnlargedElement& q,
                       PairingConvention conv);

// Brute-force oracle: expand both operands as full Kronecker matrices and
// take twice the trace of their product.
DiffPoly inner_product_bruteforce(const EnlargedElement& p, const EnlargedElement& q,
                                  PairingConvention conv);

EnlargedElement enlarged_v(const LaxPair& lp);
EnlargedElement enlarged_du_dlambda(const LaxPair& lp);
EnlargedElement enlarged_du_dfield(const LaxPair& lp, VarKind kind, int comp);

DiffPoly pairing_v_ulambda(const LaxPair& lp, PairingConvention conv);
DiffPoly pairing_v_ufield(const LaxPair& lp, VarKind kind, int comp, PairingConvention conv);

// omega_{jk} = (p - max(j,k) + 1)(p - max(j,k) + 2) / 2, the closed-form
// weight table of the nilpotent pairings (1-based indices, j,k = 1..p).
std::vector<std::vector<Rational>> omega_weights(int p);
// Exact traces tr((N^j)^T N^k) computed from the matrices themselves.
std::vector<std::vector<Rational>> omega_traces(int p);

struct GammaResult {
    bool solved = false;
    Rational gamma;
    int equations_used = 0;   // (field, order) pairs that pinned gamma
    int orders_seen = 0;      // distinct lambda orders with nonzero pairings
    std::string failure;      // set when !solved
};

// Solves the trace-identity exponent by matching the variational
// derivative of <V,U_lambda> against lambda-weighted <V,U_u>, order by
// order, with everything resolved through the hierarchy table.
GammaResult solve_gamma(const LaxPair& lp, const HierarchyTable& ht, PairingConvention conv);

struct TraceIdentityReport {
    int checked = 0;
    std::vector<std::string> failures;
    bool all_passed() const { return failures.empty(); }
};

TraceIdentityReport verify_trace_identity(const LaxPair& lp, const HierarchyTable& ht,
                                          const Rational& gamma, PairingConvention conv);

struct HamiltonianRecord {
    Rational gamma;
    int m = 0;
    DiffPoly density_symbols;  // in terms of A/B/C coefficient symbols
    DiffPoly density;          // resolved through the table
};

// H_m = <V,U_lambda> at lambda^(-stride*m - 1), divided by (gamma - stride*m).
HamiltonianRecord hamiltonian(const LaxPair& lp, const HierarchyTable& ht, const Rational& gamma,
                              int m, PairingConvention conv);

enum class SymplecticConvention { WInverse, WInverseDx };

struct SymplecticFit {
    bool ok = false;
    SymplecticConvention convention = SymplecticConvention::WInverse;
    ExactMatrix w;
    bool antisymmetric = false;
    bool invertible = false;
    bool degenerate = false;  // zero flows and zero gradients
    std::string note;
};

/**
 * Solves W * flows = gradient (J = W^-1) or W * flows = d/dx gradient
 * (J = W^-1 d/dx) for a constant exact matrix W, then re-verifies the
 * identity symbolically.  Both conventions are tried; every verifying fit
 * is returned, family-preferred first.
 */
std::vector<SymplecticFit> fit_symplectic(const PDESystem& pde, const HamiltonianRecord& h);

}  // namespace laxforge
