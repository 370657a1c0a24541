#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laxforge/family.hpp"
#include "laxforge/hamilton.hpp"
#include "laxforge/numlab.hpp"
#include "laxforge/refdiff.hpp"

namespace laxforge {

struct PipelineConfig {
    FamilyKind family = FamilyKind::Nilpotent;
    int param = 0;           // p or n
    int order = 2;           // flow order
    SignVariant variant = SignVariant::Plain;
    std::optional<std::string> seed_file;  // JSON overrides for B^(0)/C^(0)
    int hamiltonian_orders = 2;            // H_m for m <= this
};

struct SymplecticSummary {
    bool ok = false;
    bool degenerate = false;
    std::string convention;  // "W^-1" or "W^-1*Dx"
    bool antisymmetric = false;
    bool invertible = false;
    std::vector<std::vector<std::string>> w;  // scalar text, row-major
    std::string note;
};

struct HamiltonianSummary {
    int m = 0;
    std::string symbols;   // density over A/B/C symbols
    std::string resolved;  // density over fields
    std::string note;
};

/**
 * The single deliverable of a derivation run: every artifact plus the
 * published-form comparisons, reproducible byte-for-byte for a fixed
 * configuration and version.
 */
struct DerivationReport {
    PipelineConfig config;
    std::vector<std::string> assumptions;

    std::vector<AxiomResult> family_axioms;
    bool family_basis_independent = true;
    std::string closure_table_text;

    std::vector<std::string> component_equations;
    std::string recursion_operator_text;
    PDESystem pde;

    bool self_consistent = false;       // back-substitution + operator check
    std::string self_consistency_note;

    bool gamma_solved = false;
    std::string gamma;
    std::string gamma_note;
    int trace_identity_checked = 0;
    int trace_identity_failures = 0;

    std::vector<HamiltonianSummary> hamiltonians;
    std::vector<SymplecticSummary> symplectic;

    std::vector<DiffSection> diffs;

    int paper_mismatches() const {
        int n = 0;
        for (const auto& d : diffs) n += d.mismatches();
        return n;
    }
};

DerivationReport run_pipeline(const PipelineConfig& config);

std::string report_to_text(const DerivationReport& rep);
std::string report_to_json(const DerivationReport& rep);
// Inverse of report_to_json over the emitted schema;
// report_to_json(report_from_json(s)) == s for any emitted report.
DerivationReport report_from_json(const std::string& text);

// Scalar wire format: {"a":"p/q","b":"p/q","c":"p/q","d":"p/q"} with
// decimal-string rationals; matrices are row-major arrays of scalars.
std::string scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const std::string& text);
std::string matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const std::string& text);

std::string pde_to_json(const PDESystem& sys);
PDESystem pde_from_json(const std::string& text);
std::string pde_to_text(const PDESystem& sys);
std::string pde_to_latex(const PDESystem& sys);

// Exit-code policy shared by the CLI: 0 clean, 1 derivation inconsistency,
// 2 usage error, 3 published-form mismatches with clean self-consistency.
int report_exit_code(const DerivationReport& rep);

}  // namespace laxforge
