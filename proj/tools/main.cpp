#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "laxforge/grammar.hpp"
#include "laxforge/report.hpp"

using namespace laxforge;

namespace {

FamilyKind parse_family(const std::string& name) {
    auto f = family_from_name(name);
    if (!f) throw CLI::ValidationError("--family", "unknown family '" + name + "'");
    return *f;
}

int family_param(FamilyKind kind, int p, int n) {
    switch (kind) {
        case FamilyKind::Nilpotent: return p;
        case FamilyKind::Idempotent: return n;
        default: return 0;
    }
}

void write_or_print(const std::string& payload, const std::string& out) {
    if (out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(out);
        f << payload;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"laxforge: coupled integrable hierarchies from Kronecker-enlarged Lax pairs"};
    app.require_subcommand(1);

    std::string family_name_arg = "nilpotent";
    int p = 1, n = 2, order = 2, morder = 2;
    bool alternating = false, print_table = false, verify = false;
    std::string format = "text", out, seed_file, system_file, log_file;
    std::size_t nx = 256;
    double dt = 1e-4, tmax = 0.1, length = 2.0 * std::numbers::pi, amplitude = 0.01;
    std::size_t kmax = 0;

    auto add_family_opts = [&](CLI::App* cmd) {
        cmd->add_option("--family", family_name_arg,
                        "nilpotent | hadamard | idempotent | kidempotent");
        cmd->add_option("--p", p, "nilpotency index (nilpotent family)");
        cmd->add_option("--n", n, "number of projectors (idempotent family)");
        cmd->add_flag("--alternating", alternating, "alternating-sign nilpotent variant");
    };

    auto* cmd_family = app.add_subcommand("family", "build a coupling family and verify its axioms");
    cmd_family->add_option("--kind", family_name_arg, "family kind")->required();
    cmd_family->add_option("--p", p, "nilpotency index");
    cmd_family->add_option("--n", n, "projector count");
    cmd_family->add_flag("--print-table", print_table, "print the closure table");

    auto* cmd_components = app.add_subcommand("components", "zero-curvature component equations");
    add_family_opts(cmd_components);
    cmd_components->add_option("--format", format, "text | latex");

    auto* cmd_derive = app.add_subcommand("derive", "solve the hierarchy and emit the flow");
    add_family_opts(cmd_derive);
    cmd_derive->add_option("--order", order, "flow order");
    cmd_derive->add_option("--format", format, "text | latex | json");
    cmd_derive->add_option("--out", out, "output file (default stdout)");
    cmd_derive->add_option("--seed-file", seed_file, "JSON seed override {\"b0\":[...],\"c0\":[...]}");

    auto* cmd_ham = app.add_subcommand("hamiltonian", "trace-identity Hamiltonian and symplectic fit");
    add_family_opts(cmd_ham);
    cmd_ham->add_option("--m", morder, "Hamiltonian order");
    cmd_ham->add_flag("--verify", verify, "print the verification verdicts");

    auto* cmd_sim = app.add_subcommand("simulate", "integrate an emitted system on a periodic grid");
    cmd_sim->add_option("--system", system_file, "PDE system JSON from 'derive --format json'")
        ->required();
    cmd_sim->add_option("--nx", nx, "grid points (power of two)");
    cmd_sim->add_option("--dt", dt, "time step");
    cmd_sim->add_option("--tmax", tmax, "final time");
    cmd_sim->add_option("--length", length, "domain length");
    cmd_sim->add_option("--amplitude", amplitude, "initial data amplitude");
    cmd_sim->add_option("--kmax", kmax, "resolved spectral band (default nx/16)");
    cmd_sim->add_option("--log", log_file, "conservation CSV output");

    auto* cmd_report = app.add_subcommand("report", "full pipeline with published-form diffs");
    add_family_opts(cmd_report);
    cmd_report->add_option("--order", order, "flow order");
    cmd_report->add_option("--format", format, "text | json");
    cmd_report->add_option("--out", out, "output file (default stdout)");
    cmd_report->add_option("--seed-file", seed_file, "JSON seed override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*cmd_family) {
            auto kind = parse_family(family_name_arg);
            auto fam = build_family(kind, family_param(kind, p, n));
            auto repf = verify_family_axioms(fam);
            for (const auto& a : repf.axioms)
                std::cout << "[" << (a.passed ? "ok" : "FAIL") << "] " << a.name
                          << (a.note.empty() ? "" : "  (" + a.note + ")") << "\n";
            std::cout << "basis linearly independent: "
                      << (repf.basis_independent ? "yes" : "no") << "\n";
            if (print_table) {
                std::cout << "\nclosure table:\n"
                          << closure_table_text(fam, closure_table(fam));
            }
            return repf.all_passed() ? 0 : 1;
        }

        if (*cmd_components) {
            auto kind = parse_family(family_name_arg);
            auto fam = build_family(kind, family_param(kind, p, n));
            auto lp = assemble(fam, 2,
                               alternating ? SignVariant::Alternating : SignVariant::Plain);
            for (const auto& ce : zero_curvature_components(lp)) {
                if (format == "latex") {
                    std::ostringstream os;
                    os << "U_{" << ce.label << "t} - V_{" << ce.label << "x}";
                    for (const auto& b : ce.brackets) {
                        Scalar w = b.weight;
                        bool neg = !w.a().is_zero() && w.a().sign() < 0;
                        if (neg) w = -w;
                        os << (neg ? " - " : " + ");
                        if (!w.is_one()) os << w.str() << "\\,";
                        os << "[U_{" << b.j_label << "}, V_{" << b.m_label << "}]";
                    }
                    os << " = 0";
                    std::cout << os.str() << "\\\\\n";
                } else {
                    std::cout << ce.bracket_text() << "\n";
                }
            }
            return 0;
        }

        if (*cmd_derive || *cmd_report) {
            PipelineConfig cfg;
            cfg.family = parse_family(family_name_arg);
            cfg.param = family_param(cfg.family, p, n);
            cfg.order = order;
            cfg.variant = alternating ? SignVariant::Alternating : SignVariant::Plain;
            if (!seed_file.empty()) cfg.seed_file = seed_file;
            auto rep = run_pipeline(cfg);
            if (*cmd_derive) {
                if (format == "json")
                    write_or_print(pde_to_json(rep.pde), out);
                else if (format == "latex")
                    write_or_print(pde_to_latex(rep.pde), out);
                else
                    write_or_print(pde_to_text(rep.pde), out);
                return rep.self_consistent ? 0 : 1;
            }
            write_or_print(format == "json" ? report_to_json(rep) : report_to_text(rep), out);
            return report_exit_code(rep);
        }

        if (*cmd_ham) {
            PipelineConfig cfg;
            cfg.family = parse_family(family_name_arg);
            cfg.param = family_param(cfg.family, p, n);
            cfg.order = cfg.family == FamilyKind::Nilpotent ? morder + 1 : morder - 1;
            cfg.hamiltonian_orders = std::max(2, morder);
            cfg.variant = alternating ? SignVariant::Alternating : SignVariant::Plain;
            auto rep = run_pipeline(cfg);
            std::cout << "gamma: "
                      << (rep.gamma_solved ? rep.gamma : ("unsolved — " + rep.gamma_note))
                      << "\n";
            for (const auto& h : rep.hamiltonians) {
                if (h.m != morder) continue;
                std::cout << "H_" << h.m << " = " << h.symbols << "\n";
                std::cout << "   resolved: " << h.resolved << "\n";
            }
            if (verify) {
                std::cout << "trace identity rows checked: " << rep.trace_identity_checked
                          << ", failures: " << rep.trace_identity_failures << "\n";
                for (const auto& s : rep.symplectic) {
                    if (!s.ok) {
                        std::cout << "symplectic: no fit ("
                                  << (s.note.empty() ? "no constant W" : s.note) << ")\n";
                        continue;
                    }
                    std::cout << "symplectic: J = " << s.convention
                              << ", antisymmetric=" << (s.antisymmetric ? "yes" : "no")
                              << ", invertible=" << (s.invertible ? "yes" : "no") << "\nW:\n";
                    for (const auto& row : s.w) {
                        std::cout << "  ";
                        for (const auto& cell : row) std::cout << cell << " ";
                        std::cout << "\n";
                    }
                }
                for (const auto& d : rep.diffs) {
                    if (d.title.find("Hamiltonian") == std::string::npos &&
                        d.title.find("symplectic") == std::string::npos)
                        continue;
                    std::cout << d.title << ": " << d.matches() << "/" << d.entries.size()
                              << " match\n";
                    for (const auto& e : d.entries)
                        if (!e.match)
                            std::cout << "  [" << e.classification << "] " << e.id << " — "
                                      << e.detail << "\n";
                }
            }
            return report_exit_code(rep);
        }

        if (*cmd_sim) {
            std::ifstream in(system_file);
            if (!in) {
                std::cerr << "cannot open " << system_file << "\n";
                return 2;
            }
            std::stringstream buf;
            buf << in.rdbuf();
            PDESystem sys = pde_from_json(buf.str());
            auto rhs = compile_rhs(sys);

            GridState s0 = make_state(nx, length, rhs.ncomp());
            for (int c = 1; c <= rhs.ncomp(); ++c) {
                Grid& q = s0.field(VarKind::Q, c);
                Grid& r = s0.field(VarKind::R, c);
                for (std::size_t i = 0; i < nx; ++i) {
                    double x = length * static_cast<double>(i) / static_cast<double>(nx);
                    double k = 2.0 * std::numbers::pi / length;
                    q[i] = amplitude * Cx(std::cos(k * x), 0.3 * std::sin(2 * k * x));
                    r[i] = amplitude * Cx(std::sin(k * x), -0.2 * std::cos(2 * k * x));
                }
            }

            IntegrateOptions opt;
            opt.dt = dt;
            opt.tmax = tmax;
            opt.kmax = kmax;
            // Conserved densities: recompute the flow's Hamiltonians.
            PipelineConfig cfg;
            cfg.family = sys.family;
            cfg.param = sys.param;
            cfg.order = sys.order;
            cfg.variant = sys.variant;
            auto rep = run_pipeline(cfg);
            for (const auto& h : rep.hamiltonians) {
                if (h.resolved.empty()) continue;
                opt.densities.emplace_back("H" + std::to_string(h.m), parse_poly(h.resolved));
            }
            auto result = integrate(rhs, std::move(s0), opt);
            if (!log_file.empty()) {
                std::ofstream f(log_file);
                f << result.log.to_csv();
            } else {
                std::cout << result.log.to_csv();
            }
            if (result.blew_up) {
                std::cerr << "blow-up detected at t = " << result.last_good_time << "\n";
                return 1;
            }
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
