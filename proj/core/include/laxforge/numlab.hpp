#pragma once

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "laxforge/hierarchy.hpp"

namespace laxforge {

using Cx = std::complex<double>;
using Grid = std::vector<Cx>;

/**
 * Periodic grid state: one complex array per field component.  The grid
 * size must be a power of two (radix-2 transforms).
 */
struct GridState {
    std::size_t nx = 0;
    double length = 0.0;
    double time = 0.0;
    std::map<std::pair<VarKind, int>, Grid> fields;  // (q/r, comp) -> values

    Grid& field(VarKind k, int comp) { return fields[{k, comp}]; }
    const Grid& field(VarKind k, int comp) const { return fields.at({k, comp}); }
    bool finite() const;
};

GridState make_state(std::size_t nx, double length, int ncomp);

// In-place radix-2 FFT (forward: sign = -1), unnormalized.
void fft(std::vector<Cx>& a, int sign);

// Spectral d^n/dx^n and zero-mean antiderivative on a periodic grid.
Grid spectral_ddx(const Grid& f, double length, int order);
Grid spectral_dinv(const Grid& f, double length);
// Projects onto |k| <= kmax (and removes aliasing garbage above it).
void spectral_filter(Grid& f, std::size_t kmax);

double grid_integral_abs_max(const Grid& f);
Cx grid_mean(const Grid& f);

/**
 * Compiled right-hand-side evaluator for an emitted PDE system.  Spatial
 * derivatives are spectral; Dinv is the zero-mean antiderivative;
 * nonlinear products are pointwise.  compile_rhs enforces single-level
 * Dinv nesting (true for the shipped systems); the free-standing
 * grid_eval handles arbitrary nesting for conserved-density evaluation.
 */
class RhsEvaluator {
public:
    RhsEvaluator(PDESystem sys, std::size_t kmax_hint = 0);

    const PDESystem& system() const { return sys_; }
    int ncomp() const { return ncomp_; }

    // Evaluates all right-hand sides at the given state.
    std::map<std::pair<VarKind, int>, Grid> operator()(const GridState& s) const;

private:
    PDESystem sys_;
    int ncomp_ = 0;
};

RhsEvaluator compile_rhs(const PDESystem& sys);

// Pointwise evaluation of an arbitrary canonical polynomial on the grid.
Grid grid_eval(const DiffPoly& p, const GridState& s);
// Trapezoid-free exact spectral integral of a density over the domain.
Cx grid_integral(const DiffPoly& density, const GridState& s);
Cx grid_integral(const Grid& values, double length);

struct ConservationLog {
    std::vector<double> times;
    std::vector<std::string> columns;           // H labels + pair integrals + maxima
    std::vector<std::vector<double>> values;    // |value| per column per sample

    std::string to_csv() const;
};

struct IntegrationResult {
    GridState state;
    ConservationLog log;
    bool blew_up = false;
    double last_good_time = 0.0;
};

struct IntegrateOptions {
    double dt = 1e-4;
    double tmax = 0.1;
    int log_stride = 10;
    std::size_t kmax = 0;  // 0: nx/16 default resolved band
    std::vector<std::pair<std::string, DiffPoly>> densities;  // conserved densities to log
};

/**
 * Classical fourth-order Runge-Kutta with a fixed step.  Every right-hand
 * side evaluation is followed by a projection onto the resolved band
 * |k| <= kmax; aborts on the first non-finite value.
 */
IntegrationResult integrate(const RhsEvaluator& rhs, GridState initial,
                            const IntegrateOptions& opt);

}  // namespace laxforge
