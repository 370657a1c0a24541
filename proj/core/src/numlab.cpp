#include "laxforge/numlab.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace laxforge {

bool GridState::finite() const {
    for (const auto& [key, g] : fields)
        for (const Cx& v : g)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

GridState make_state(std::size_t nx, double length, int ncomp) {
    if (nx == 0 || (nx & (nx - 1)) != 0)
        throw std::invalid_argument("make_state: grid size must be a power of two");
    GridState s;
    s.nx = nx;
    s.length = length;
    for (int c = 1; c <= ncomp; ++c) {
        s.fields[{VarKind::Q, c}] = Grid(nx, Cx{});
        s.fields[{VarKind::R, c}] = Grid(nx, Cx{});
    }
    return s;
}

void fft(std::vector<Cx>& a, int sign) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft: size must be 2^k");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        Cx wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            Cx w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                Cx u = a[i + k];
                Cx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

namespace {

std::vector<double> wavenumbers(std::size_t n, double length) {
    std::vector<double> k(n);
    double base = 2.0 * std::numbers::pi / length;
    for (std::size_t i = 0; i < n; ++i) {
        long long idx = static_cast<long long>(i);
        if (i > n / 2) idx -= static_cast<long long>(n);
        k[i] = base * static_cast<double>(idx);
    }
    return k;
}

}  // namespace

Grid spectral_ddx(const Grid& f, double length, int order) {
    if (order == 0) return f;
    Grid hat = f;
    fft(hat, -1);
    auto k = wavenumbers(f.size(), length);
    for (std::size_t i = 0; i < hat.size(); ++i) {
        Cx ik(0.0, k[i]);
        Cx factor(1.0, 0.0);
        for (int p = 0; p < order; ++p) factor *= ik;
        hat[i] *= factor;
    }
    // Nyquist mode has no well-defined odd derivative; drop it.
    if (order % 2 == 1) hat[f.size() / 2] = Cx{};
    fft(hat, 1);
    double inv = 1.0 / static_cast<double>(f.size());
    for (auto& v : hat) v *= inv;
    return hat;
}

Grid spectral_dinv(const Grid& f, double length) {
    Grid hat = f;
    fft(hat, -1);
    auto k = wavenumbers(f.size(), length);
    hat[0] = Cx{};  // zero-mean antiderivative
    for (std::size_t i = 1; i < hat.size(); ++i) hat[i] /= Cx(0.0, k[i]);
    hat[f.size() / 2] = Cx{};
    fft(hat, 1);
    double inv = 1.0 / static_cast<double>(f.size());
    for (auto& v : hat) v *= inv;
    return hat;
}

void spectral_filter(Grid& f, std::size_t kmax) {
    Grid hat = f;
    fft(hat, -1);
    std::size_t n = f.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t k = i <= n / 2 ? i : n - i;
        if (k > kmax) hat[i] = Cx{};
    }
    fft(hat, 1);
    double inv = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = hat[i] * inv;
}

double grid_integral_abs_max(const Grid& f) {
    double m = 0.0;
    for (const Cx& v : f) m = std::max(m, std::abs(v));
    return m;
}

Cx grid_mean(const Grid& f) {
    Cx s{};
    for (const Cx& v : f) s += v;
    return s / static_cast<double>(f.size());
}

Grid grid_eval(const DiffPoly& p, const GridState& s) {
    Grid out(s.nx, Cx{});
    for (const auto& m : p.terms()) {
        if (m.lam != 0)
            throw std::invalid_argument("grid_eval: spectral symbol in a numeric expression");
        Grid term(s.nx, m.coef.to_complex());
        for (const auto& v : m.vars) {
            if (v.kind != VarKind::Q && v.kind != VarKind::R)
                throw std::invalid_argument("grid_eval: unresolved coefficient symbol");
            Grid g = spectral_ddx(s.field(v.kind, v.comp), s.length, v.xord);
            for (std::size_t i = 0; i < s.nx; ++i) term[i] *= g[i];
        }
        for (const auto& d : m.dinvs) {
            Grid inner = grid_eval(d.poly(), s);
            Grid anti = spectral_dinv(inner, s.length);
            for (std::size_t i = 0; i < s.nx; ++i) term[i] *= anti[i];
        }
        for (std::size_t i = 0; i < s.nx; ++i) out[i] += term[i];
    }
    return out;
}

Cx grid_integral(const Grid& values, double length) {
    Cx mean = grid_mean(values);
    return mean * length;
}

Cx grid_integral(const DiffPoly& density, const GridState& s) {
    return grid_integral(grid_eval(density, s), s.length);
}

namespace {

int dinv_depth(const DiffPoly& p) {
    int depth = 0;
    for (const auto& m : p.terms())
        for (const auto& d : m.dinvs) depth = std::max(depth, 1 + dinv_depth(d.poly()));
    return depth;
}

}  // namespace

RhsEvaluator::RhsEvaluator(PDESystem sys, std::size_t) : sys_(std::move(sys)) {
    for (const auto& eq : sys_.equations) ncomp_ = std::max(ncomp_, eq.comp);
    for (const auto& eq : sys_.equations) {
        if (dinv_depth(eq.rhs) > 1)
            throw std::invalid_argument("compile_rhs: Dinv nesting deeper than one level");
        if (eq.rhs.contains_symbols())
            throw std::invalid_argument("compile_rhs: unresolved coefficient symbols");
    }
}

RhsEvaluator compile_rhs(const PDESystem& sys) { return RhsEvaluator(sys); }

std::map<std::pair<VarKind, int>, Grid> RhsEvaluator::operator()(const GridState& s) const {
    std::map<std::pair<VarKind, int>, Grid> out;
    for (const auto& eq : sys_.equations) out[{eq.kind, eq.comp}] = grid_eval(eq.rhs, s);
    return out;
}

std::string ConservationLog::to_csv() const {
    std::ostringstream os;
    os << "time";
    for (const auto& c : columns) os << "," << c;
    os << "\n";
    for (std::size_t i = 0; i < times.size(); ++i) {
        os << times[i];
        for (double v : values[i]) os << "," << v;
        os << "\n";
    }
    return os.str();
}

IntegrationResult integrate(const RhsEvaluator& rhs, GridState initial,
                            const IntegrateOptions& opt) {
    if (opt.dt <= 0.0) throw std::invalid_argument("integrate: dt must be positive");
    IntegrationResult result;
    GridState s = std::move(initial);
    std::size_t kmax = opt.kmax ? opt.kmax : std::max<std::size_t>(4, s.nx / 16);

    auto filter_state = [&](GridState& st) {
        for (auto& [key, g] : st.fields) spectral_filter(g, kmax);
    };
    filter_state(s);

    ConservationLog log;
    for (const auto& [name, density] : opt.densities) log.columns.push_back(name);
    for (int c = 1; c <= rhs.ncomp(); ++c)
        log.columns.push_back("int_q" + std::to_string(c) + "r" + std::to_string(c));
    log.columns.push_back("max_q");
    log.columns.push_back("max_r");

    auto sample = [&](const GridState& st) {
        std::vector<double> row;
        for (const auto& [name, density] : opt.densities)
            row.push_back(std::abs(grid_integral(density, st)));
        for (int c = 1; c <= rhs.ncomp(); ++c) {
            Grid prod(st.nx);
            const Grid& q = st.field(VarKind::Q, c);
            const Grid& r = st.field(VarKind::R, c);
            for (std::size_t i = 0; i < st.nx; ++i) prod[i] = q[i] * r[i];
            row.push_back(std::abs(grid_integral(prod, st.length)));
        }
        double mq = 0.0, mr = 0.0;
        for (int c = 1; c <= rhs.ncomp(); ++c) {
            mq = std::max(mq, grid_integral_abs_max(st.field(VarKind::Q, c)));
            mr = std::max(mr, grid_integral_abs_max(st.field(VarKind::R, c)));
        }
        row.push_back(mq);
        row.push_back(mr);
        log.times.push_back(st.time);
        log.values.push_back(std::move(row));
    };

    auto eval = [&](const GridState& st) {
        auto d = rhs(st);
        for (auto& [key, g] : d) spectral_filter(g, kmax);
        return d;
    };
    auto axpy = [&](const GridState& base, double h,
                    const std::map<std::pair<VarKind, int>, Grid>& dir) {
        GridState t = base;
        for (auto& [key, g] : t.fields) {
            auto it = dir.find(key);
            if (it == dir.end()) continue;
            for (std::size_t i = 0; i < g.size(); ++i) g[i] += h * it->second[i];
        }
        return t;
    };

    sample(s);
    long long steps = static_cast<long long>(std::llround(opt.tmax / opt.dt));
    for (long long n = 0; n < steps; ++n) {
        auto k1 = eval(s);
        auto k2 = eval(axpy(s, opt.dt / 2, k1));
        auto k3 = eval(axpy(s, opt.dt / 2, k2));
        GridState s3 = axpy(s, opt.dt, k3);
        s3.time = s.time + opt.dt;
        auto k4 = eval(s3);
        GridState next = s;
        for (auto& [key, g] : next.fields) {
            const Grid& a = k1.at(key);
            const Grid& b = k2.at(key);
            const Grid& c = k3.at(key);
            const Grid& d = k4.at(key);
            for (std::size_t i = 0; i < g.size(); ++i)
                g[i] += opt.dt / 6.0 * (a[i] + 2.0 * b[i] + 2.0 * c[i] + d[i]);
        }
        next.time = s.time + opt.dt;
        if (!next.finite()) {
            result.blew_up = true;
            result.last_good_time = s.time;
            break;
        }
        s = std::move(next);
        if ((n + 1) % opt.log_stride == 0 || n + 1 == steps) sample(s);
    }
    if (!result.blew_up) result.last_good_time = s.time;
    result.state = std::move(s);
    result.log = std::move(log);
    return result;
}

}  // namespace laxforge
