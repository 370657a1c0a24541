#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laxforge/matrix.hpp"

namespace laxforge {

enum class FamilyKind { Nilpotent, Hadamard, Idempotent, KIdempotent };

std::string family_name(FamilyKind kind);
std::optional<FamilyKind> family_from_name(const std::string& name);

/**
 * CouplingFamily: the ordered matrix basis that multiplies U_1..U_k in the
 * enlarged operators, together with everything needed to turn matrix
 * products back into basis slots.
 *
 *   nilpotent(p):   (1, N, N^2, ..., N^p), N the all-ones strictly upper
 *                   triangular matrix of order p+1
 *   hadamard:       (1, G, G^T, (G - G^T)/2) with G = [[1,-1],[1,1]]
 *   idempotent(n):  (P_1, ..., P_n), P_j with ones on the first j diagonal
 *                   entries
 *   k-idempotent:   (P, P^2, P^3) with P = -1/2 + (i*sqrt(7)/2) s3 + s2 and
 *                   companion permutation K = s1
 *
 * slot_of_label maps the 1-based U_k label onto the basis index it
 * multiplies; for the k-idempotent family U_k rides P^(4-k), elsewhere the
 * order is direct.
 */
struct CouplingFamily {
    FamilyKind kind;
    int param = 0;  // p for nilpotent, n for idempotent, 0 for fixed-size kinds
    std::vector<ExactMatrix> basis;
    std::optional<ExactMatrix> permutation;  // K, k-idempotent only

    std::size_t size() const { return basis.size(); }
    std::size_t matrix_dim() const { return basis.empty() ? 0 : basis.front().rows(); }

    // 0-based basis slot carrying U_{label} (label is 1-based).
    std::size_t slot_of_label(int label) const;
    int label_of_slot(std::size_t slot) const;

    bool basis_linearly_independent() const;
};

CouplingFamily build_family(FamilyKind kind, int size_param = 0);

/**
 * ClosureTable: structure constants c[i][j][k] with
 * basis_i * basis_j = sum_k c[i][j][k] basis_k, each identity exact.
 * For every shipped family each pairwise product is a scalar multiple of a
 * single basis element, which keeps the table canonical even when the basis
 * is linearly dependent (hadamard, k-idempotent).
 */
struct ClosureTable {
    std::size_t n = 0;
    std::vector<Scalar> c;  // n*n*n, index (i*n + j)*n + k

    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
        return c[(i * n + j) * n + k];
    }
    Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return c[(i * n + j) * n + k]; }
};

struct ClosureError {
    std::size_t i = 0, j = 0;
    std::string message;
};

// Throws std::runtime_error carrying the offending product if the family
// span is not multiplicatively closed.
ClosureTable closure_table(const CouplingFamily& f);

// One axiom check outcome.
struct AxiomResult {
    std::string name;
    bool passed = false;
    std::string note;
};

struct FamilyReport {
    std::vector<AxiomResult> axioms;
    // Informational: false for the hadamard and k-idempotent bases, whose
    // slots are formal (products are still rewritten exactly through the
    // closure table).
    bool basis_independent = true;
    bool all_passed() const {
        for (const auto& a : axioms)
            if (!a.passed) return false;
        return true;
    }
};

FamilyReport verify_family_axioms(const CouplingFamily& f);

// Canonical decomposition of m over the family span; empty optional when m
// is outside the span.  Single-basis multiples are preferred; otherwise an
// exact Gaussian solve with free coefficients pinned to zero in basis order.
std::optional<std::vector<Scalar>> decompose_over_basis(const CouplingFamily& f,
                                                        const ExactMatrix& m);

// Closure-table layout printed in the product-table style, rows/columns
// labelled by the basis elements.
std::string closure_table_text(const CouplingFamily& f, const ClosureTable& t);

}  // namespace laxforge
