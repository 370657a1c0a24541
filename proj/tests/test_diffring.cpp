#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "laxforge/grammar.hpp"
#include "laxforge/numlab.hpp"

using namespace laxforge;

namespace {

std::mt19937 rng(31337);

// Random local density in q1, r1 up to second derivatives, degree <= 3.
DiffPoly random_local_density(int max_terms = 4) {
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> nfactors(1, 3);
    std::uniform_int_distribution<int> kindpick(0, 1);
    std::uniform_int_distribution<int> xord(0, 2);
    DiffPoly p;
    for (int t = 0; t < max_terms; ++t) {
        int c = coef(rng);
        if (c == 0) continue;
        DiffPoly mono = DiffPoly::constant(Scalar(c));
        int nf = nfactors(rng);
        for (int f = 0; f < nf; ++f) {
            VarKind k = kindpick(rng) ? VarKind::Q : VarKind::R;
            mono = mono * DiffPoly::var(Indet(k, 1, 0, xord(rng)));
        }
        p += mono;
    }
    return p;
}

DiffPoly q1() { return parse_poly("q1"); }

}  // namespace

TEST_CASE("ddx basics") {
    CHECK(ddx(parse_poly("q1*r1")) == parse_poly("q1x*r1 + q1*r1x"));
    CHECK(ddx(dinv(parse_poly("r1*q1x"))) == parse_poly("r1*q1x"));
    CHECK(ddx(parse_poly("q1") * dinv(parse_poly("r1"))) ==
          parse_poly("q1x*Dinv(r1) + q1*r1"));
    CHECK(ddx(parse_poly("q1^3")) == parse_poly("3*q1^2*q1x"));
}

TEST_CASE("ddx is a derivation") {
    for (int trial = 0; trial < 50; ++trial) {
        DiffPoly f = random_local_density(), g = random_local_density();
        CHECK(ddx(f * g) == ddx(f) * g + f * ddx(g));
    }
}

TEST_CASE("dinv exact integration pass") {
    // single-power pattern
    CHECK(dinv(parse_poly("q1*q1x")) == parse_poly("1/2*q1^2"));
    CHECK(dinv(parse_poly("q2^2*q2x")) == parse_poly("1/3*q2^3"));
    CHECK(dinv(parse_poly("r1x")) == parse_poly("r1"));
    // paired two-factor pattern via IBP normalization
    CHECK(dinv(parse_poly("q1*r1x + q1x*r1")) == parse_poly("q1*r1"));
    CHECK(dinv(ddx(parse_poly("q1*q2"))) == parse_poly("q1*q2"));
    // non-integrable stays wrapped, derivative on the first-sorted factor
    DiffPoly nl = dinv(parse_poly("q2*q1x - q1*q2x"));
    CHECK(nl == parse_poly("2*Dinv(q1x*q2) - q1*q2"));
    CHECK(ddx(nl) == parse_poly("q2*q1x - q1*q2x"));
    CHECK_THROWS_AS(dinv(DiffPoly::one()), std::domain_error);
}

TEST_CASE("dinv is linear and a right inverse of ddx") {
    for (int trial = 0; trial < 40; ++trial) {
        DiffPoly f = random_local_density(), g = random_local_density();
        CHECK(dinv(f + g) == dinv(f) + dinv(g));
        CHECK(ddx(dinv(f)) == f);
    }
}

TEST_CASE("theta operator") {
    DiffPoly f = parse_poly("q1x");
    CHECK(theta(VarKind::Q, VarKind::R, 1, 2, parse_poly("r2x")) ==
          parse_poly("q1") * dinv(parse_poly("r2*r2x")));
    CHECK(theta(VarKind::Q, VarKind::Q, 1, 1, f) == parse_poly("1/2*q1^3"));
    CHECK(theta(VarKind::R, VarKind::Q, 3, 3, DiffPoly::zero()).is_zero());
    CHECK_THROWS_AS(theta(VarKind::Q, VarKind::Q, 0, 1, f), std::out_of_range);
}

TEST_CASE("euler derivative examples") {
    CHECK(euler_derivative(parse_poly("q1^2*r1"), VarKind::Q, 1) == parse_poly("2*q1*r1"));
    CHECK(euler_derivative(parse_poly("q1x*r1x"), VarKind::Q, 1) == parse_poly("-r1x2"));
    DiffPoly h = parse_poly("q1") * dinv(parse_poly("r1"));
    CHECK(euler_derivative(h, VarKind::Q, 1) == dinv(parse_poly("r1")));
    CHECK(euler_derivative(h, VarKind::R, 1) == -dinv(parse_poly("q1")));
}

TEST_CASE("euler annihilates total derivatives (1000 random cases)") {
    for (int trial = 0; trial < 1000; ++trial) {
        DiffPoly f = random_local_density();
        DiffPoly total = ddx(f);
        CHECK(euler_derivative(total, VarKind::Q, 1).is_zero());
        CHECK(euler_derivative(total, VarKind::R, 1).is_zero());
    }
}

TEST_CASE("euler handles nonlocal densities consistently") {
    // the two integration-by-parts presentations of the same functional agree
    DiffPoly a = parse_poly("q1*Dinv(r1)");
    DiffPoly b = -(dinv(q1()) * parse_poly("r1"));
    CHECK(euler_derivative(a, VarKind::Q, 1) == euler_derivative(b, VarKind::Q, 1));
    CHECK(euler_derivative(a, VarKind::R, 1) == euler_derivative(b, VarKind::R, 1));
    // bare antiderivative of an exact part: delta/delta q int Dinv(q q_x) = q
    DiffPoly bare;
    {
        Monomial shell;
        shell.coef = Scalar(1);
        auto inner = std::make_shared<DiffPoly>(parse_poly("q1*q1x"));
        shell.dinvs.push_back(Nonlocal{inner});
        bare = DiffPoly::from_terms({shell});
    }
    CHECK(euler_derivative(bare, VarKind::Q, 1) == q1());
}

TEST_CASE("canonicalization is idempotent and total order stable") {
    for (int trial = 0; trial < 50; ++trial) {
        DiffPoly f = random_local_density() * random_local_density() + random_local_density();
        DiffPoly g = DiffPoly::from_terms(std::vector<Monomial>(f.terms()));
        CHECK(f == g);
    }
}

TEST_CASE("ring axioms on random polynomials") {
    for (int trial = 0; trial < 40; ++trial) {
        DiffPoly a = random_local_density(), b = random_local_density(),
                 c = random_local_density();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("grammar round trip") {
    std::vector<std::string> samples = {
        "q1", "-1/2*i*q1x2", "q1^2*r2x + 3*Dinv(q1x*r1)", "L^2*q1 - L^-1*r2",
        "A1_2x - 2*B3_0", "(1/2+1/2*i)*q1*r1", "2*s7*q2"};
    for (const auto& s : samples) {
        DiffPoly p = parse_poly(s);
        CHECK(parse_poly(to_text(p)) == p);
    }
    CHECK_THROWS_AS(parse_poly("q1 +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("A1"), std::invalid_argument);  // missing _order
    CHECK_THROWS_AS(parse_poly("w3"), std::invalid_argument);
}

TEST_CASE("Dx evaluates during parsing") {
    CHECK(parse_poly("Dx(q1*(r1^2+q1^2))") == ddx(parse_poly("q1*r1^2 + q1^3")));
}

TEST_CASE("numerical functional gradient matches the Euler operator") {
    // Discrete check on a periodic grid with real trig data; central
    // differences of the discretized functional against the symbolic
    // gradient evaluated spectrally.
    const std::size_t nx = 64;
    const double L = 2.0 * std::numbers::pi;
    std::uniform_real_distribution<double> amp(-0.8, 0.8);
    for (int trial = 0; trial < 6; ++trial) {
        DiffPoly h = random_local_density();
        GridState s = make_state(nx, L, 1);
        auto& q = s.field(VarKind::Q, 1);
        auto& r = s.field(VarKind::R, 1);
        double a1 = amp(rng), a2 = amp(rng), b1 = amp(rng), b2 = amp(rng);
        for (std::size_t i = 0; i < nx; ++i) {
            double x = L * static_cast<double>(i) / nx;
            q[i] = a1 * std::cos(x) + a2 * std::sin(2 * x);
            r[i] = b1 * std::sin(x) + b2 * std::cos(2 * x);
        }
        DiffPoly grad = euler_derivative(h, VarKind::Q, 1);
        Grid grad_vals = grid_eval(grad, s);

        const double dx = L / nx;
        const double eps = 1e-5;
        for (std::size_t i = 0; i < nx; i += 7) {
            GridState plus = s, minus = s;
            plus.field(VarKind::Q, 1)[i] += eps;
            minus.field(VarKind::Q, 1)[i] -= eps;
            Cx fplus = grid_integral(h, plus);
            Cx fminus = grid_integral(h, minus);
            Cx fd = (fplus - fminus) / (2.0 * eps * dx);
            double scale = std::max(1.0, std::abs(grad_vals[i]));
            CHECK(std::abs(fd - grad_vals[i]) / scale < 1e-6);
        }
    }
}
