#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "laxforge/grammar.hpp"
#include "laxforge/laxpair.hpp"

using namespace laxforge;

namespace {

const DiffPoly* channel(const std::map<ChannelKey, DiffPoly>& chans, GenKind g, int grade) {
    auto it = chans.find({g, grade});
    return it == chans.end() ? nullptr : &it->second;
}

}  // namespace

TEST_CASE("assemble places the spectral term") {
    SUBCASE("nilpotent p=1: spectral -2i alpha(2) in U1 only") {
        auto lp = assemble(build_family(FamilyKind::Nilpotent, 1), 2);
        auto c = lp.u_parts[0].coefficient(Generator(GenKind::Alpha, 2));
        CHECK(c == DiffPoly::constant(Scalar(-2) * Scalar::i()));
        CHECK(lp.u_parts[1].coefficient(Generator(GenKind::Alpha, 2)).is_zero());
        CHECK(lp.u_parts[0].coefficient(Generator(GenKind::Beta1, 1)) ==
              DiffPoly::var(qvar(1)));
    }
    SUBCASE("idempotent n=3: spectral -2 alpha(1) in U3") {
        auto lp = assemble(build_family(FamilyKind::Idempotent, 3), 2);
        CHECK(lp.u_parts[2].coefficient(Generator(GenKind::Alpha, 1)) ==
              DiffPoly::constant(Scalar(-2)));
        CHECK(lp.u_parts[0].coefficient(Generator(GenKind::Alpha, 1)).is_zero());
    }
    SUBCASE("k-idempotent: U_k rides P^(4-k), spectral in U1") {
        auto lp = assemble(build_family(FamilyKind::KIdempotent, 0), 2);
        CHECK(lp.u_parts[0].coefficient(Generator(GenKind::Alpha, 1)) ==
              DiffPoly::constant(Scalar(-2)));
        CHECK(lp.family.slot_of_label(1) == 2);
    }
    CHECK_THROWS(assemble(build_family(FamilyKind::Hadamard, 0), 2, SignVariant::Alternating));
}

TEST_CASE("component equations carry the closure weights") {
    SUBCASE("nilpotent convolution structure") {
        auto lp = assemble(build_family(FamilyKind::Nilpotent, 2), 2);
        auto ces = zero_curvature_components(lp);
        CHECK(ces[2].bracket_text() == "Ut3 - Vx3 + [U1,V3] + [U2,V2] + [U3,V1] = 0");
    }
    SUBCASE("hadamard slot 1 weights") {
        auto lp = assemble(build_family(FamilyKind::Hadamard, 0), 2);
        auto ces = zero_curvature_components(lp);
        CHECK(ces[0].bracket_text() ==
              "Ut1 - Vx1 + [U1,V1] + 2*[U2,V3] + 2*[U3,V2] - [U4,V4] = 0");
        // slot 2 derived weight on [U4,V3] is +1 (G3*G2 = G1); the printed
        // group shows -1 there, flagged by the published-form diff.
        CHECK(ces[1].bracket_text() ==
              "Ut2 - Vx2 + [U1,V2] + [U2,V1] + [U3,V4] + [U4,V3] = 0");
    }
    SUBCASE("k-idempotent slots") {
        auto lp = assemble(build_family(FamilyKind::KIdempotent, 0), 2);
        auto ces = zero_curvature_components(lp);
        bool found = false;
        for (const auto& ce : ces) {
            if (ce.label != 3) continue;
            found = true;
            CHECK(ce.bracket_text() == "Ut3 - Vx3 + [U1,V3] + [U2,V2] + [U3,V1] = 0");
        }
        CHECK(found);
    }
    SUBCASE("alternating variant flips odd bracket sums only") {
        auto plain = zero_curvature_components(
            assemble(build_family(FamilyKind::Nilpotent, 2), 2, SignVariant::Plain));
        auto alt = zero_curvature_components(
            assemble(build_family(FamilyKind::Nilpotent, 2), 2, SignVariant::Alternating));
        for (std::size_t s = 0; s < plain.size(); ++s) {
            Scalar sign = (s % 2 == 1) ? Scalar(-1) : Scalar(1);
            REQUIRE(plain[s].brackets.size() == alt[s].brackets.size());
            for (std::size_t b = 0; b < plain[s].brackets.size(); ++b)
                CHECK(alt[s].brackets[b].weight == sign * plain[s].brackets[b].weight);
        }
    }
}

TEST_CASE("projected channels reproduce the published recursion shapes") {
    SUBCASE("k-idempotent alpha channel, slot 1") {
        auto lp = assemble(build_family(FamilyKind::KIdempotent, 0), 1);
        auto ces = zero_curvature_components(lp);
        for (const auto& ce : ces) {
            if (ce.label != 1) continue;
            auto chans = project_generators(ce);
            const DiffPoly* alpha0 = channel(chans, GenKind::Alpha, 0);
            REQUIRE(alpha0 != nullptr);
            // -A1x^(0) + 2 q1 C1 - 2 r1 B1 + 2 q2 C3 - 2 r2 B3 + 2 q3 C2 - 2 r3 B2
            DiffPoly expect =
                -DiffPoly::var(Indet(VarKind::CoefA, 1, 0, 1)) +
                parse_poly("2*q1*C1_0 - 2*r1*B1_0 + 2*q2*C3_0 - 2*r2*B3_0 + 2*q3*C2_0 - 2*r3*B2_0");
            CHECK(*alpha0 == expect);
        }
    }
    SUBCASE("nilpotent beta1 channel couples orders N and N+1") {
        auto lp = assemble(build_family(FamilyKind::Nilpotent, 1), 2);
        auto ces = zero_curvature_components(lp);
        auto chans = project_generators(ces[0]);
        // grade -3 channel: -B1x^(1) - 2i B1^(2) - q1 A1^(2)
        const DiffPoly* b = channel(chans, GenKind::Beta1, -3);
        REQUIRE(b != nullptr);
        DiffPoly expect = -DiffPoly::var(Indet(VarKind::CoefB, 1, 1, 1)) +
                          parse_poly("-2*i*B1_2 - q1*A1_2");
        CHECK(*b == expect);
    }
    SUBCASE("zero V leaves empty stationary channels") {
        auto lp = assemble(build_family(FamilyKind::Nilpotent, 1), 0);
        lp.v_parts.assign(lp.v_parts.size(), AlgebraElement{});
        auto ces = zero_curvature_components(lp);
        for (const auto& ce : ces) CHECK(project_generators(ce).empty());
    }
}

TEST_CASE("differentiation of the enlarged operator") {
    auto lp = assemble(build_family(FamilyKind::Nilpotent, 2), 1);
    SUBCASE("dU/dq_k sits in the matching label with the field grade") {
        auto d = du_dfield(lp, VarKind::Q, 2);
        CHECK(d[0].is_zero());
        CHECK(d[1] == AlgebraElement::term(Generator(GenKind::Beta1, 1), DiffPoly::one()));
        CHECK_THROWS_AS(du_dfield(lp, VarKind::R, 9), std::out_of_range);
    }
    SUBCASE("dU/dlambda differentiates grades") {
        auto d = du_dlambda(lp);
        CHECK(d[0].coefficient(Generator(GenKind::Alpha, 1)) ==
              DiffPoly::constant(Scalar(-4) * Scalar::i()));
        CHECK(d[0].coefficient(Generator(GenKind::Beta1, 0)) == DiffPoly::var(qvar(1)));
        CHECK(d[1].coefficient(Generator(GenKind::Alpha, 1)).is_zero());
    }
}

TEST_CASE("kronecker brute-force equivalence (principal oracle)") {
    for (auto [kind, param, variant] :
         std::vector<std::tuple<FamilyKind, int, SignVariant>>{
             {FamilyKind::Nilpotent, 1, SignVariant::Plain},
             {FamilyKind::Nilpotent, 1, SignVariant::Alternating},
             {FamilyKind::Hadamard, 0, SignVariant::Plain},
             {FamilyKind::Idempotent, 2, SignVariant::Plain},
             {FamilyKind::KIdempotent, 0, SignVariant::Plain}}) {
        auto lp = assemble(build_family(kind, param), 2, variant);
        CHECK(kronecker_consistency(lp).equal);
    }
}
