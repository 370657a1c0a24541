#include "laxforge/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "laxforge/grammar.hpp"

namespace laxforge {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string family_file_tag(const PipelineConfig& cfg) {
    std::string tag = family_name(cfg.family);
    if (cfg.family == FamilyKind::Nilpotent) tag += "_p" + std::to_string(cfg.param);
    if (cfg.family == FamilyKind::Idempotent) tag += "_n" + std::to_string(cfg.param);
    if (cfg.variant == SignVariant::Alternating) tag += "_alt";
    return tag;
}

bool reference_exists(const std::string& filename) {
    return std::filesystem::exists(reference_dir() + "/" + filename);
}

HierarchySeeds seeds_from_file(const LaxPair& lp, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open seed file " + path);
    ordered_json j = ordered_json::parse(in);
    HierarchySeeds seeds;
    for (const auto& s : j.at("b0")) seeds.b0.push_back(parse_poly(s.get<std::string>()));
    for (const auto& s : j.at("c0")) seeds.c0.push_back(parse_poly(s.get<std::string>()));
    if (seeds.b0.size() != lp.size() || seeds.c0.size() != lp.size())
        throw std::runtime_error("seed file component count mismatch");
    return seeds;
}

ExactMatrix load_wdisplay(const std::string& filename, std::size_t expect) {
    std::ifstream in(reference_dir() + "/" + filename);
    if (!in) throw std::runtime_error("cannot open " + filename);
    std::vector<std::vector<Scalar>> rows;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream is(line);
        std::vector<Scalar> row;
        std::string cell;
        while (is >> cell) {
            DiffPoly p = parse_poly(cell);
            Scalar v;
            if (!p.is_zero()) {
                if (p.term_count() != 1 || !p.terms()[0].vars.empty() ||
                    !p.terms()[0].dinvs.empty())
                    throw std::runtime_error("non-constant W display cell: " + cell);
                v = p.terms()[0].coef;
            }
            row.push_back(v);
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.size() != expect) throw std::runtime_error("W display row count mismatch");
    ExactMatrix m(expect, expect);
    for (std::size_t i = 0; i < expect; ++i) {
        if (rows[i].size() != expect) throw std::runtime_error("W display column count mismatch");
        for (std::size_t j = 0; j < expect; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

EntryDiff diff_matrix(const std::string& id, const ExactMatrix& derived,
                      const ExactMatrix& printed) {
    EntryDiff d;
    d.id = id;
    if (derived == printed) {
        d.match = true;
        return d;
    }
    // Best global scale: majority ratio over the nonzero cell pairs.
    std::vector<Scalar> ratios;
    for (std::size_t i = 0; i < derived.rows(); ++i) {
        for (std::size_t j = 0; j < derived.cols(); ++j) {
            const Scalar &a = derived.at(i, j), &b = printed.at(i, j);
            if (!a.is_zero() && !b.is_zero()) ratios.push_back(a * b.inverse());
        }
    }
    Scalar best;
    int best_count = 0;
    for (const auto& r : ratios) {
        int c = 0;
        for (const auto& x : ratios) c += (x == r) ? 1 : 0;
        if (c > best_count) {
            best_count = c;
            best = r;
        }
    }
    if (best_count > 0) {
        ExactMatrix scaled = printed.scaled(best);
        std::ostringstream cells;
        int deviating = 0;
        for (std::size_t i = 0; i < derived.rows(); ++i)
            for (std::size_t j = 0; j < derived.cols(); ++j)
                if (!(derived.at(i, j) == scaled.at(i, j))) {
                    ++deviating;
                    if (deviating <= 6) cells << "(" << i + 1 << "," << j + 1 << ") ";
                }
        if (deviating == 0) {
            d.classification = "scale";
            d.detail = "fitted = " + best.str() + " * printed";
            return d;
        }
        if (deviating * 4 <= static_cast<int>(derived.rows() * derived.cols())) {
            d.classification = "scale-with-exceptions";
            d.detail = "fitted = " + best.str() + " * printed except " +
                       std::to_string(deviating) + " cell(s): " + cells.str();
            return d;
        }
    }
    int cells = 0;
    for (std::size_t i = 0; i < derived.rows(); ++i)
        for (std::size_t j = 0; j < derived.cols(); ++j)
            if (!(derived.at(i, j) == printed.at(i, j))) ++cells;
    d.classification = "entry-mismatch";
    d.detail = std::to_string(cells) + " cell(s) differ";
    return d;
}

}  // namespace

DerivationReport run_pipeline(const PipelineConfig& cfg) {
    DerivationReport rep;
    rep.config = cfg;

    auto fam = build_family(cfg.family, cfg.param);
    auto axioms = verify_family_axioms(fam);
    rep.family_axioms = axioms.axioms;
    rep.family_basis_independent = axioms.basis_independent;
    rep.closure_table_text = closure_table_text(fam, closure_table(fam));

    int table_order =
        std::max(3, cfg.family == FamilyKind::Nilpotent ? cfg.order : cfg.order + 2);
    auto lp = assemble(fam, table_order + 2, cfg.variant);
    auto seeds = cfg.seed_file ? seeds_from_file(lp, *cfg.seed_file) : default_seeds(lp);
    auto ht = solve_hierarchy(lp, seeds, table_order);

    rep.assumptions = {"Dinv-zero-constant", "alpha-abelian",
                       std::string("pairing-convention-") +
                           (default_pairing(cfg.family) == PairingConvention::Transposed
                                ? "transposed"
                                : "plain")};
    if (cfg.variant == SignVariant::Alternating) rep.assumptions.push_back("alternating-signs");
    if (cfg.family == FamilyKind::Nilpotent)
        rep.assumptions.push_back("truncation-drops-top-alpha");

    auto components = zero_curvature_components(lp);
    for (const auto& ce : components) rep.component_equations.push_back(ce.bracket_text());

    auto backsub = verify_back_substitution(lp, ht);
    auto kron_ok = kronecker_consistency(lp).equal;
    auto op = extract_recursion_operator(lp);
    bool op_ok = true;
    for (int m = 0; m + 1 <= ht.max_order && m < 3; ++m) {
        auto nxt = op.apply(ht.stack_at(m));
        auto want = ht.stack_at(m + 1);
        for (std::size_t i = 0; i < nxt.size(); ++i)
            if (!(nxt[i] == want[i])) op_ok = false;
    }
    rep.recursion_operator_text = op.to_text();
    rep.self_consistent = backsub.all_zero() && kron_ok && op_ok;
    {
        std::ostringstream os;
        os << "back-substitution: " << backsub.channels_checked << " channels zero ("
           << backsub.failures.size() << " failures); kronecker reassembly "
           << (kron_ok ? "exact" : "FAILED") << "; recursion-operator application "
           << (op_ok ? "exact" : "FAILED");
        rep.self_consistency_note = os.str();
    }

    rep.pde = emit_pde_system(lp, ht, cfg.order);

    auto conv = default_pairing(cfg.family);
    auto g = solve_gamma(lp, ht, conv);
    rep.gamma_solved = g.solved;
    if (g.solved) {
        rep.gamma = g.gamma.str();
        auto ti = verify_trace_identity(lp, ht, g.gamma, conv);
        rep.trace_identity_checked = ti.checked;
        rep.trace_identity_failures = static_cast<int>(ti.failures.size());
        rep.gamma_note =
            "consistent across " + std::to_string(g.orders_seen) +
            " spectral orders; published value -2 reproduced only by the leading order of "
            "the inconsistently normalized published pairings (see ledger of conventions)";
    } else {
        rep.gamma_note = g.failure +
                         " (the transposed pairing required by this family is not "
                         "ad-invariant, so no exponent closes the identity)";
    }

    // Hamiltonians H_m, m <= hamiltonian_orders.
    for (int m = 1; m <= cfg.hamiltonian_orders; ++m) {
        HamiltonianSummary hs;
        hs.m = m;
        try {
            HamiltonianRecord rec;
            if (g.solved) {
                rec = hamiltonian(lp, ht, g.gamma, m, conv);
            } else {
                // Published normalization fallback: T-slice scaled by
                // -1/(stride*m + 2) so the record exists for comparison.
                rec.gamma = Rational(-2);
                rec.m = m;
                int s = -lp.tmpl.stride * m;
                DiffPoly t = pairing_v_ulambda(lp, conv);
                rec.density_symbols = t.lambda_coefficient(s - 1).scaled(
                    Scalar(Rational(BigInt(-1), BigInt(lp.tmpl.stride * m + 2))));
                rec.density = rec.density_symbols.substitute(ht.symbol_map());
                hs.note = "no consistent gamma; published normalization used for display only";
            }
            hs.symbols = to_text(rec.density_symbols);
            hs.resolved = to_text(rec.density);
            if (m == cfg.order + (cfg.family == FamilyKind::Nilpotent ? -1 : 1)) {
                // The flow's own Hamiltonian: attach the symplectic fits.
                auto fits = fit_symplectic(rep.pde, rec);
                for (const auto& f : fits) {
                    SymplecticSummary ss;
                    ss.ok = f.ok;
                    ss.degenerate = f.degenerate;
                    ss.antisymmetric = f.antisymmetric;
                    ss.invertible = f.invertible;
                    ss.note = f.note;
                    ss.convention =
                        f.convention == SymplecticConvention::WInverse ? "W^-1" : "W^-1*Dx";
                    if (f.ok) {
                        for (std::size_t i = 0; i < f.w.rows(); ++i) {
                            std::vector<std::string> row;
                            for (std::size_t j = 0; j < f.w.cols(); ++j)
                                row.push_back(f.w.at(i, j).str());
                            ss.w.push_back(std::move(row));
                        }
                    }
                    rep.symplectic.push_back(std::move(ss));
                }
            }
        } catch (const std::exception& e) {
            hs.note = std::string("unavailable: ") + e.what();
        }
        rep.hamiltonians.push_back(std::move(hs));
    }

    // Published-form comparisons, where reference data ships.
    std::string tag = family_file_tag(cfg);
    if (std::string f = "components_" + tag + ".txt"; reference_exists(f)) {
        rep.diffs.push_back(
            diff_components(components, load_reference_components(f), "component equations vs published group"));
    }
    if (std::string f = "operator_" + tag + ".txt"; reference_exists(f)) {
        rep.diffs.push_back(
            diff_operator(op, load_reference_operator(f), "recursion operator vs published table"));
    }
    if (std::string f = "flows_" + tag + "_order" + std::to_string(cfg.order) + ".txt";
        reference_exists(f)) {
        rep.diffs.push_back(
            diff_flows(rep.pde, load_reference_flows(f), "flow equations vs published system"));
    }
    if (std::string f = "hdisplay_" + tag + ".txt"; reference_exists(f)) {
        DiffSection sec;
        sec.title = "Hamiltonian densities vs published closed forms";
        for (const auto& [lhs, poly] : load_reference_flows(f)) {
            // lines "H1 = ...": match against the corresponding record
            int m = std::stoi(lhs.substr(1));
            for (const auto& hs : rep.hamiltonians) {
                if (hs.m != m || hs.symbols.empty()) continue;
                sec.entries.push_back(
                    classify_poly_diff("H" + std::to_string(m), parse_poly(hs.symbols), poly));
            }
        }
        rep.diffs.push_back(std::move(sec));
    }
    if (std::string f = "wdisplay_" + tag + ".txt"; reference_exists(f)) {
        DiffSection sec;
        sec.title = "fitted symplectic W vs published display";
        bool compared = false;
        for (const auto& ss : rep.symplectic) {
            if (!ss.ok) continue;
            ExactMatrix fitted(ss.w.size(), ss.w.size());
            for (std::size_t i = 0; i < ss.w.size(); ++i)
                for (std::size_t j = 0; j < ss.w.size(); ++j) {
                    DiffPoly p = parse_poly(ss.w[i][j]);
                    fitted.at(i, j) = p.is_zero() ? Scalar() : p.terms()[0].coef;
                }
            auto printed = load_wdisplay(f, fitted.rows());
            sec.entries.push_back(diff_matrix("W(" + ss.convention + ")", fitted, printed));
            compared = true;
            break;
        }
        if (!compared) {
            EntryDiff d;
            d.id = "W";
            d.classification = "no-fit";
            d.detail = "no verifying constant W (see symplectic section)";
            sec.entries.push_back(d);
        }
        rep.diffs.push_back(std::move(sec));
    }

    return rep;
}

int report_exit_code(const DerivationReport& rep) {
    if (!rep.self_consistent) return 1;
    if (rep.paper_mismatches() > 0) return 3;
    return 0;
}

std::string scalar_to_json(const Scalar& s) {
    ordered_json j;
    j["a"] = s.a().str();
    j["b"] = s.b().str();
    j["c"] = s.c().str();
    j["d"] = s.d().str();
    return j.dump();
}

Scalar scalar_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    return Scalar(Rational::parse(j.at("a").get<std::string>()),
                  Rational::parse(j.at("b").get<std::string>()),
                  Rational::parse(j.at("c").get<std::string>()),
                  Rational::parse(j.at("d").get<std::string>()));
}

std::string matrix_to_json(const ExactMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(ordered_json::parse(scalar_to_json(m.at(i, j))));
        rows.push_back(std::move(row));
    }
    return rows.dump();
}

ExactMatrix matrix_from_json(const std::string& text) {
    ordered_json rows = ordered_json::parse(text);
    std::size_t r = rows.size();
    std::size_t c = r ? rows.at(0).size() : 0;
    ExactMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = scalar_from_json(rows.at(i).at(j).dump());
    return m;
}

std::string pde_to_json(const PDESystem& sys) {
    ordered_json j;
    j["family"] = family_name(sys.family);
    j["params"] = sys.param;
    j["order"] = sys.order;
    if (sys.variant == SignVariant::Alternating) j["variant"] = "alternating";
    j["equations"] = ordered_json::array();
    for (const auto& eq : sys.equations) {
        ordered_json e;
        e["lhs"] = eq.lhs_name();
        e["rhs"] = to_text(eq.rhs);
        j["equations"].push_back(std::move(e));
    }
    j["assumptions"] = sys.assumptions;
    return j.dump(2) + "\n";
}

PDESystem pde_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    PDESystem sys;
    auto fam = family_from_name(j.at("family").get<std::string>());
    if (!fam) throw std::runtime_error("pde_from_json: unknown family");
    sys.family = *fam;
    sys.param = j.at("params").get<int>();
    sys.order = j.at("order").get<int>();
    if (j.contains("variant") && j["variant"] == "alternating")
        sys.variant = SignVariant::Alternating;
    for (const auto& e : j.at("equations")) {
        PDEEquation eq;
        std::string lhs = e.at("lhs").get<std::string>();
        eq.kind = lhs[0] == 'q' ? VarKind::Q : VarKind::R;
        eq.comp = std::stoi(lhs.substr(1, lhs.find('_') - 1));
        eq.rhs = parse_poly(e.at("rhs").get<std::string>());
        sys.equations.push_back(std::move(eq));
    }
    for (const auto& a : j.at("assumptions")) sys.assumptions.push_back(a.get<std::string>());
    return sys;
}

std::string pde_to_text(const PDESystem& sys) {
    std::ostringstream os;
    for (const auto& eq : sys.equations) os << eq.lhs_name() << " = " << to_text(eq.rhs) << "\n";
    return os.str();
}

std::string pde_to_latex(const PDESystem& sys) {
    std::ostringstream os;
    for (const auto& eq : sys.equations) {
        os << (eq.kind == VarKind::Q ? "q" : "r") << "_{" << eq.comp << "t} &=& "
           << to_latex(eq.rhs) << "\\\\\n";
    }
    return os.str();
}

std::string report_to_text(const DerivationReport& rep) {
    std::ostringstream os;
    os << "== derivation report: " << family_name(rep.config.family);
    if (rep.config.param) os << "(" << rep.config.param << ")";
    os << ", flow order " << rep.config.order
       << (rep.config.variant == SignVariant::Alternating ? ", alternating" : "") << " ==\n\n";
    os << "assumptions:";
    for (const auto& a : rep.assumptions) os << " " << a;
    os << "\n\nfamily axioms:\n";
    for (const auto& a : rep.family_axioms)
        os << "  [" << (a.passed ? "ok" : "FAIL") << "] " << a.name
           << (a.note.empty() ? "" : "  (" + a.note + ")") << "\n";
    os << "  basis linearly independent: " << (rep.family_basis_independent ? "yes" : "no")
       << " (dependent bases use formal slot semantics)\n";
    os << "\nclosure table:\n" << rep.closure_table_text << "\n";
    os << "component equations:\n";
    for (const auto& c : rep.component_equations) os << "  " << c << "\n";
    os << "\nself-consistency: " << (rep.self_consistent ? "CLEAN" : "FAILED") << " — "
       << rep.self_consistency_note << "\n";
    os << "\nrecursion operator:\n" << rep.recursion_operator_text;
    os << "\nflow equations:\n" << pde_to_text(rep.pde);
    os << "\ntrace identity: ";
    if (rep.gamma_solved)
        os << "gamma = " << rep.gamma << " (" << rep.trace_identity_checked << " rows checked, "
           << rep.trace_identity_failures << " failures); " << rep.gamma_note << "\n";
    else
        os << "unsolved — " << rep.gamma_note << "\n";
    for (const auto& h : rep.hamiltonians) {
        os << "\nH_" << h.m << (h.note.empty() ? "" : " [" + h.note + "]") << ":\n";
        if (!h.symbols.empty()) os << "  symbols:  " << h.symbols << "\n";
        if (!h.resolved.empty()) os << "  resolved: " << h.resolved << "\n";
    }
    os << "\nsymplectic fits:\n";
    if (rep.symplectic.empty()) os << "  (none attempted at this order)\n";
    for (const auto& s : rep.symplectic) {
        if (!s.ok) {
            os << "  [no fit] " << (s.note.empty() ? "no constant W verifies" : s.note) << "\n";
            continue;
        }
        os << "  [ok] J = " << s.convention << ", antisymmetric=" << (s.antisymmetric ? "yes" : "no")
           << ", invertible=" << (s.invertible ? "yes" : "no") << ", W:\n";
        for (const auto& row : s.w) {
            os << "    ";
            for (const auto& cell : row) os << cell << " ";
            os << "\n";
        }
    }
    for (const auto& d : rep.diffs) {
        os << "\n" << d.title << ": " << d.matches() << "/" << d.entries.size() << " match\n";
        for (const auto& e : d.entries) {
            if (e.match) continue;
            os << "  [" << e.classification << "] " << e.id
               << (e.detail.empty() ? "" : " — " + e.detail) << "\n";
        }
    }
    os << "\npublished-form mismatches: " << rep.paper_mismatches() << "\n";
    return os.str();
}

std::string report_to_json(const DerivationReport& rep) {
    ordered_json j;
    j["family"] = family_name(rep.config.family);
    j["params"] = rep.config.param;
    j["order"] = rep.config.order;
    j["variant"] = rep.config.variant == SignVariant::Alternating ? "alternating" : "plain";
    j["assumptions"] = rep.assumptions;
    j["familyAxioms"] = ordered_json::array();
    for (const auto& a : rep.family_axioms) {
        ordered_json e;
        e["name"] = a.name;
        e["passed"] = a.passed;
        if (!a.note.empty()) e["note"] = a.note;
        j["familyAxioms"].push_back(std::move(e));
    }
    j["basisIndependent"] = rep.family_basis_independent;
    j["componentEquations"] = rep.component_equations;
    j["selfConsistent"] = rep.self_consistent;
    j["selfConsistencyNote"] = rep.self_consistency_note;
    j["recursionOperator"] = rep.recursion_operator_text;
    j["pde"] = ordered_json::parse(pde_to_json(rep.pde));
    j["gammaSolved"] = rep.gamma_solved;
    j["gamma"] = rep.gamma;
    j["gammaNote"] = rep.gamma_note;
    j["traceIdentityChecked"] = rep.trace_identity_checked;
    j["traceIdentityFailures"] = rep.trace_identity_failures;
    j["hamiltonians"] = ordered_json::array();
    for (const auto& h : rep.hamiltonians) {
        ordered_json e;
        e["m"] = h.m;
        e["symbols"] = h.symbols;
        e["resolved"] = h.resolved;
        if (!h.note.empty()) e["note"] = h.note;
        j["hamiltonians"].push_back(std::move(e));
    }
    j["symplectic"] = ordered_json::array();
    for (const auto& s : rep.symplectic) {
        ordered_json e;
        e["ok"] = s.ok;
        e["convention"] = s.convention;
        e["antisymmetric"] = s.antisymmetric;
        e["invertible"] = s.invertible;
        e["degenerate"] = s.degenerate;
        if (!s.note.empty()) e["note"] = s.note;
        if (!s.w.empty()) e["w"] = s.w;
        j["symplectic"].push_back(std::move(e));
    }
    j["diffs"] = ordered_json::array();
    for (const auto& d : rep.diffs) {
        ordered_json sec;
        sec["title"] = d.title;
        sec["matches"] = d.matches();
        sec["total"] = d.entries.size();
        sec["entries"] = ordered_json::array();
        for (const auto& e : d.entries) {
            ordered_json x;
            x["id"] = e.id;
            x["match"] = e.match;
            if (!e.match) {
                x["classification"] = e.classification;
                x["detail"] = e.detail;
            }
            sec["entries"].push_back(std::move(x));
        }
        j["diffs"].push_back(std::move(sec));
    }
    j["paperMismatches"] = rep.paper_mismatches();
    return j.dump(2) + "\n";
}

DerivationReport report_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    DerivationReport rep;
    rep.config.family = *family_from_name(j.at("family").get<std::string>());
    rep.config.param = j.at("params").get<int>();
    rep.config.order = j.at("order").get<int>();
    rep.config.variant = j.at("variant") == "alternating" ? SignVariant::Alternating
                                                          : SignVariant::Plain;
    for (const auto& a : j.at("assumptions")) rep.assumptions.push_back(a.get<std::string>());
    for (const auto& a : j.at("familyAxioms")) {
        AxiomResult ax;
        ax.name = a.at("name").get<std::string>();
        ax.passed = a.at("passed").get<bool>();
        if (a.contains("note")) ax.note = a.at("note").get<std::string>();
        rep.family_axioms.push_back(std::move(ax));
    }
    rep.family_basis_independent = j.at("basisIndependent").get<bool>();
    for (const auto& c : j.at("componentEquations"))
        rep.component_equations.push_back(c.get<std::string>());
    rep.self_consistent = j.at("selfConsistent").get<bool>();
    rep.self_consistency_note = j.at("selfConsistencyNote").get<std::string>();
    rep.recursion_operator_text = j.at("recursionOperator").get<std::string>();
    rep.pde = pde_from_json(j.at("pde").dump());
    rep.gamma_solved = j.at("gammaSolved").get<bool>();
    rep.gamma = j.at("gamma").get<std::string>();
    rep.gamma_note = j.at("gammaNote").get<std::string>();
    rep.trace_identity_checked = j.at("traceIdentityChecked").get<int>();
    rep.trace_identity_failures = j.at("traceIdentityFailures").get<int>();
    for (const auto& h : j.at("hamiltonians")) {
        HamiltonianSummary hs;
        hs.m = h.at("m").get<int>();
        hs.symbols = h.at("symbols").get<std::string>();
        hs.resolved = h.at("resolved").get<std::string>();
        if (h.contains("note")) hs.note = h.at("note").get<std::string>();
        rep.hamiltonians.push_back(std::move(hs));
    }
    for (const auto& s : j.at("symplectic")) {
        SymplecticSummary ss;
        ss.ok = s.at("ok").get<bool>();
        ss.convention = s.at("convention").get<std::string>();
        ss.antisymmetric = s.at("antisymmetric").get<bool>();
        ss.invertible = s.at("invertible").get<bool>();
        ss.degenerate = s.at("degenerate").get<bool>();
        if (s.contains("note")) ss.note = s.at("note").get<std::string>();
        if (s.contains("w"))
            for (const auto& row : s.at("w"))
                ss.w.push_back(row.get<std::vector<std::string>>());
        rep.symplectic.push_back(std::move(ss));
    }
    for (const auto& d : j.at("diffs")) {
        DiffSection sec;
        sec.title = d.at("title").get<std::string>();
        for (const auto& e : d.at("entries")) {
            EntryDiff ed;
            ed.id = e.at("id").get<std::string>();
            ed.match = e.at("match").get<bool>();
            if (!ed.match) {
                ed.classification = e.at("classification").get<std::string>();
                ed.detail = e.at("detail").get<std::string>();
            }
            sec.entries.push_back(std::move(ed));
        }
        rep.diffs.push_back(std::move(sec));
    }
    return rep;
}

}  // namespace laxforge
