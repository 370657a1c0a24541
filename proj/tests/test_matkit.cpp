#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "laxforge/family.hpp"

using namespace laxforge;

namespace {

std::mt19937 rng(77001);

ExactMatrix random_matrix(std::size_t n) {
    std::uniform_int_distribution<int> d(-3, 3);
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = Scalar(Rational(d(rng)), Rational(d(rng)), Rational(0), Rational(0));
    return m;
}

}  // namespace

TEST_CASE("kron definition") {
    CHECK(kron(exact_identity(2), exact_identity(2)) == exact_identity(4));

    ExactMatrix e12(2, 2);
    e12.at(0, 1) = Scalar(1);
    ExactMatrix k = kron(e12, pauli3());
    // blocks: (0, sigma3; 0, 0)
    CHECK(k.at(0, 2) == Scalar(1));
    CHECK(k.at(1, 3) == Scalar(-1));
    CHECK(k.at(0, 0).is_zero());
    CHECK(k.at(2, 2).is_zero());
}

TEST_CASE("kron mixed product and trace factorization on random matrices") {
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 2 + static_cast<std::size_t>(trial % 2);
        ExactMatrix a = random_matrix(n), b = random_matrix(n);
        ExactMatrix c = random_matrix(n), d = random_matrix(n);
        CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
        CHECK(kron(a, b).trace() == a.trace() * b.trace());
    }
}

TEST_CASE("nilpotent family") {
    auto fam = build_family(FamilyKind::Nilpotent, 2);
    ExactMatrix n = fam.basis[1];
    CHECK(n.at(0, 1) == Scalar(1));
    CHECK(n.at(0, 2) == Scalar(1));
    CHECK(n.at(1, 2) == Scalar(1));
    CHECK(n.at(1, 0).is_zero());
    CHECK((exact_pow(n, 3)).is_zero());
    CHECK(!exact_pow(n, 2).is_zero());
    CHECK(fam.basis_linearly_independent());
    CHECK(verify_family_axioms(fam).all_passed());
    CHECK_THROWS(build_family(FamilyKind::Nilpotent, 0));
}

TEST_CASE("hadamard family") {
    auto fam = build_family(FamilyKind::Hadamard, 0);
    // G3 = (G - G^T)/2 = [[0,-1],[1,0]]
    const ExactMatrix& g3 = fam.basis[3];
    CHECK(g3.at(0, 1) == Scalar(-1));
    CHECK(g3.at(1, 0) == Scalar(1));
    CHECK(g3.at(0, 0).is_zero());
    CHECK(verify_family_axioms(fam).all_passed());
    // G1 = 1 + G3 makes the basis dependent.
    CHECK(!fam.basis_linearly_independent());
}

TEST_CASE("k-idempotent family traces and axioms") {
    auto fam = build_family(FamilyKind::KIdempotent, 0);
    CHECK(fam.basis[0].trace() == Scalar(-1));
    CHECK(fam.basis[1].trace() == Scalar(-1));
    CHECK(fam.basis[2].trace() == Scalar(2));
    CHECK(fam.basis[2] == exact_identity(2));
    auto rep = verify_family_axioms(fam);
    CHECK(rep.all_passed());
    const ExactMatrix& p = fam.basis[0];
    const ExactMatrix& k = *fam.permutation;
    CHECK(k * p == fam.basis[1] * k);  // KP = P^2 K
}

TEST_CASE("closure tables") {
    SUBCASE("k-idempotent matches the published product table") {
        auto fam = build_family(FamilyKind::KIdempotent, 0);
        auto t = closure_table(fam);
        // rows/cols: P, P^2, P^3; products P*P = P^2, P*P^2 = P^3, P*P^3 = P,
        // P^2*P^2 = P, P^2*P^3 = P^2, P^3*P^3 = P^3.
        auto expect_single = [&](std::size_t i, std::size_t j, std::size_t k) {
            for (std::size_t s = 0; s < 3; ++s) {
                CHECK(t.at(i, j, s) == (s == k ? Scalar(1) : Scalar()));
            }
        };
        expect_single(0, 0, 1);
        expect_single(0, 1, 2);
        expect_single(0, 2, 0);
        expect_single(1, 1, 0);
        expect_single(1, 2, 1);
        expect_single(2, 2, 2);
        expect_single(1, 0, 2);
        expect_single(2, 0, 0);
        expect_single(2, 1, 1);
    }
    SUBCASE("hadamard products derived by direct multiplication") {
        auto fam = build_family(FamilyKind::Hadamard, 0);
        auto t = closure_table(fam);
        // G1*G2 = 2*1
        CHECK(t.at(1, 2, 0) == Scalar(2));
        CHECK(t.at(1, 2, 3).is_zero());
        // G1*G1 = 2*G3, G3*G3 = -1, G1*G3 = -G2, G3*G2 = G1
        CHECK(t.at(1, 1, 3) == Scalar(2));
        CHECK(t.at(3, 3, 0) == Scalar(-1));
        CHECK(t.at(1, 3, 2) == Scalar(-1));
        CHECK(t.at(3, 2, 1) == Scalar(1));
    }
    SUBCASE("idempotent min rule") {
        auto fam = build_family(FamilyKind::Idempotent, 4);
        auto t = closure_table(fam);
        // P2 * P3 = P2
        CHECK(t.at(1, 2, 1) == Scalar(1));
        CHECK(t.at(1, 2, 2).is_zero());
    }
    SUBCASE("reconstruction identity for every family") {
        for (auto [kind, param] : std::vector<std::pair<FamilyKind, int>>{
                 {FamilyKind::Nilpotent, 3},
                 {FamilyKind::Hadamard, 0},
                 {FamilyKind::Idempotent, 3},
                 {FamilyKind::KIdempotent, 0}}) {
            auto fam = build_family(kind, param);
            auto t = closure_table(fam);
            for (std::size_t i = 0; i < fam.size(); ++i) {
                for (std::size_t j = 0; j < fam.size(); ++j) {
                    ExactMatrix rebuilt(fam.matrix_dim(), fam.matrix_dim());
                    for (std::size_t k = 0; k < fam.size(); ++k)
                        rebuilt = rebuilt + fam.basis[k].scaled(t.at(i, j, k));
                    CHECK(rebuilt == fam.basis[i] * fam.basis[j]);
                }
            }
        }
    }
}

TEST_CASE("decompose_over_basis rejects out-of-span matrices") {
    auto fam = build_family(FamilyKind::Nilpotent, 2);
    ExactMatrix m(3, 3);
    m.at(1, 0) = Scalar(1);  // lower triangular: outside span(1, N, N^2)
    CHECK(!decompose_over_basis(fam, m).has_value());
    CHECK(decompose_over_basis(fam, fam.basis[2].scaled(Scalar(5))).has_value());
}

TEST_CASE("k-idempotent label mapping: U_k rides P^(4-k)") {
    auto fam = build_family(FamilyKind::KIdempotent, 0);
    CHECK(fam.slot_of_label(1) == 2);  // U1 on P^3 (the identity)
    CHECK(fam.slot_of_label(3) == 0);  // U3 on P
    CHECK(fam.label_of_slot(2) == 1);
    auto nil = build_family(FamilyKind::Nilpotent, 2);
    CHECK(nil.slot_of_label(1) == 0);
}
