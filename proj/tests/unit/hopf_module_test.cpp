#include "support.hpp"

namespace xhopf::testing {
namespace {

HopfXiCoalgebra k_xi(FieldSpec f = kQ) { return mk_trivial(f, examples::identity_crossed_module(cyclic(2))); }

std::size_t coinvariant_dim(const HopfXiCoalgebra& a, const HopfXiModule& m) { return coinvariants(a, m).size(); }

TEST(TrivialModule, CoinvariantsAreV) {
    for (std::size_t v : {0u, 1u, 2u, 3u}) {
        const auto a = k_xi();
        const HopfXiModule m = trivial_hopf_module(a, v);
        EXPECT_TRUE(Passes(validate_hopf_xi_module(a, m)));
        EXPECT_EQ(coinvariant_dim(a, m), v);
    }
}

TEST(TrivialModule, ValidWithCoinvariantsProperty) {
    for (FieldSpec f : {kQ, kGF5})
        for (const auto& [name, a] : example_universe(f)) {
            const HopfXiModule m = trivial_hopf_module(a, 2);
            EXPECT_TRUE(Passes(validate_hopf_xi_module(a, m))) << name;
            const auto basis = coinvariants(a, m);
            EXPECT_EQ(basis.size(), 2u) << name;
            for (const auto& c : basis)
                EXPECT_TRUE(is_coinvariant(a, m, c)) << name;
        }
}

TEST(TrivialModule, ZeroedPsiShrinksCoinvariants) {
    const auto a = k_xi();
    HopfXiModule m = trivial_hopf_module(a, 1);
    for (Elem x = 0; x < 2; ++x)
        m.psi[x * 2 + 1] = Matrix(kQ, 1, 1);
    EXPECT_FALSE(validate_hopf_xi_module(a, m).ok());
    EXPECT_LT(coinvariant_dim(a, m), 1u);
}

TEST(TrivialModule, BrokenCoactionHasWitnesses) {
    const auto a = examples::sign_twisted(kQ, examples::identity_crossed_module(cyclic(2)));
    HopfXiModule m = trivial_hopf_module(a, 1);
    m.coaction[1](0, 0) = q(3);
    const Report r = validate_hopf_xi_module(a, m);
    const Check* c = failing(r);
    ASSERT_NE(c, nullptr);
    EXPECT_FALSE(c->witnesses().empty());
    EXPECT_EQ(r.to_text(), validate_hopf_xi_module(a, m, {4}).to_text());
}

TEST(TrivialModule, ShapeMismatchThrows) {
    const auto a = k_xi();
    HopfXiModule m = trivial_hopf_module(a, 1);
    m.psi.pop_back();
    EXPECT_EQ(error_of([&] { (void)validate_hopf_xi_module(a, m); }), ErrorCode::ShapeMismatch);
}

TEST(StructureIso, InverseOnTrivialAndDualModulesProperty) {
    for (FieldSpec f : {kQ, kGF5})
        for (const auto& [name, a] : example_universe(f)) {
            for (const HopfXiModule& m : {trivial_hopf_module(a, 2), dual_hopf_module(a)}) {
                const StructureIso iso = structure_iso(a, m);
                for (Elem x = 0; x < a.H().order(); ++x) {
                    const std::size_t n = a.dim(x) * iso.basis.size();
                    EXPECT_EQ(mat_mul(iso.nu[x], iso.epsilon[x]), Matrix::identity(f, n)) << name;
                    EXPECT_EQ(mat_mul(iso.epsilon[x], iso.nu[x]), Matrix::identity(f, m.dims[x])) << name;
                }
            }
        }
}

TEST(StructureIso, FailsWithoutCoinvariants) {
    const auto a = k_xi();
    HopfXiModule m = trivial_hopf_module(a, 1);
    for (Elem x = 0; x < 2; ++x)
        m.psi[x * 2 + 1] = Matrix(kQ, 1, 1);
    EXPECT_EQ(error_of([&] { (void)structure_iso(a, m); }), ErrorCode::NotInvertible);
}

TEST(DualModule, CoinvariantsAreTheRightIntegralsProperty) {
    for (FieldSpec f : {kQ, kGF5})
        for (const auto& [name, a] : example_universe(f)) {
            const HopfXiModule m = dual_hopf_module(a);
            EXPECT_TRUE(Passes(validate_hopf_xi_module(a, m))) << name;
            EXPECT_EQ(coinvariant_dim(a, m), 1u) << name;
            for (Elem x = 0; x < a.H().order(); ++x)
                EXPECT_EQ(m.dims[x], a.dim(a.H().inverse(x))) << name;
        }
}

TEST(DualModule, ConcurrentBuildMatchesSerial) {
    const auto a = examples::sign_twisted(kGF5, examples::a3_in_s3());
    EXPECT_EQ(dual_hopf_module(a, {4}), dual_hopf_module(a));
}

TEST(Integral, TrivialOverIdentity) {
    const auto a = k_xi();
    const XiIntegral l{Side::right, {{q(1)}, {q(1)}}};
    EXPECT_TRUE(Passes(check_integral(a, l)));
    const auto right = integral_space(a, Side::right);
    ASSERT_EQ(right.size(), 1u);
    EXPECT_EQ(right.front().lambda[0], right.front().lambda[1]);
    EXPECT_FALSE(check_integral(a, {Side::right, {{q(1)}, {q(2)}}}).ok());
}

TEST(Integral, GroupAlgebraPicksTheUnitCoefficient) {
    const auto a = examples::bicharacter_z2(kQ);
    const XiIntegral l{Side::left, {{q(1), q(0)}}};
    EXPECT_TRUE(Passes(check_integral(a, l)));
    EXPECT_FALSE(check_integral(a, {Side::left, {{q(0), q(1)}}}).ok());
}

TEST(Integral, SpacesAreOneDimensionalProperty) {
    for (FieldSpec f : {kQ, kGF5})
        for (const auto& [name, a] : example_universe(f))
            for (Side side : {Side::left, Side::right}) {
                const auto basis = integral_space(a, side);
                ASSERT_EQ(basis.size(), 1u) << name;
                EXPECT_EQ(basis.front().side, side) << name;
                EXPECT_TRUE(Passes(check_integral(a, basis.front()))) << name;
                EXPECT_EQ(integral_space(a, side, {3}), basis) << name;
            }
}

TEST(Integral, AntipodeTransportGivesRightIntegralsProperty) {
    for (FieldSpec f : {kQ, kGF5})
        for (const auto& [name, a] : example_universe(f)) {
            const XiIntegral left = integral_space(a, Side::left).front();
            const XiIntegral right = antipode_transport(a, left);
            EXPECT_EQ(right.side, Side::right) << name;
            EXPECT_TRUE(Passes(check_integral(a, right))) << name;
        }
}

TEST(Integral, AntipodeTransportRejectsNonIntegrals) {
    const auto a = k_xi();
    EXPECT_EQ(error_of([&] { (void)antipode_transport(a, {Side::left, {{q(0)}, {q(0)}}}); }), ErrorCode::NotIntegral);
    EXPECT_EQ(error_of([&] { (void)antipode_transport(a, {Side::right, {{q(1)}, {q(1)}}}); }),
              ErrorCode::NotIntegral);
}

TEST(Distinguished, UnimodularExamplesGiveTheUnit) {
    EXPECT_EQ(distinguished_grouplike(k_xi()), unit_family(k_xi().base()));
    const auto s3 = mk_trivial(kGF5, examples::a3_in_s3());
    EXPECT_EQ(distinguished_grouplike(s3), unit_family(s3.base()));
}

TEST(Distinguished, IsAXiGrouplikeProperty) {
    for (FieldSpec f : {kQ, kGF5})
        for (const auto& [name, a] : example_universe(f)) {
            const GrouplikeFamily g = distinguished_grouplike(a);
            EXPECT_TRUE(is_grouplike(a.base(), g)) << name;
            EXPECT_TRUE(is_xi_grouplike(a, g)) << name;
            EXPECT_EQ(distinguished_grouplike(a, {4}), g) << name;
        }
}

} // namespace
} // namespace xhopf::testing
