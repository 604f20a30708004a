#include "support.hpp"

namespace xhopf::testing {
namespace {

GradedHopfCoalgebra k_h_over_z2(FieldSpec f) { return mk_trivial(f, trivial_over(cyclic(2))).base(); }

GradedHopfCoalgebra group_z2(FieldSpec f) { return examples::group_hopf_algebra(f, cyclic(2)); }

/// k[x]/(x^2) with x primitive, basis {1, x}.
GradedHopfCoalgebra dual_numbers(FieldSpec f) {
    const Scalar o = Scalar::one(f), z = Scalar::zero(f);
    const std::vector<std::vector<Vector>> c{{{o, z}, {z, o}}, {{z, o}, {z, z}}};
    ComponentAlgebra alg = ComponentAlgebra::from_structure_constants(f, c, {o, z});
    const Matrix delta = Matrix::from_ints(f, {{1, 0}, {0, 1}, {0, 1}, {0, 0}});
    return GradedHopfCoalgebra(cyclic(1), {alg}, {delta}, Matrix::from_ints(f, {{1, 0}}));
}

TEST(Algebra, GroupAlgebraAndGround) {
    EXPECT_TRUE(Passes(validate_algebra(ComponentAlgebra::ground(kQ))));
    const ComponentAlgebra s3 = ComponentAlgebra::group_algebra(kGF5, symmetric(3));
    EXPECT_TRUE(Passes(validate_algebra(s3)));
    EXPECT_EQ(s3.dim(), 6u);
    EXPECT_EQ(s3.multiply(basis_vector(kGF5, 6, 1), basis_vector(kGF5, 6, 1)), basis_vector(kGF5, 6, 0));
}

TEST(Algebra, InverseOfUnitsOnly) {
    const ComponentAlgebra d = dual_numbers(kQ).component(0);
    const auto inv = d.inverse(Vector{q(2), q(3)});
    ASSERT_TRUE(inv);
    EXPECT_EQ(d.multiply(Vector{q(2), q(3)}, *inv), (Vector{q(1), q(0)}));
    EXPECT_FALSE(d.inverse(Vector{q(0), q(1)}));
}

TEST(HopfCoalgebra, TrivialOverZ2IsValid) {
    const auto a = k_h_over_z2(kQ);
    EXPECT_TRUE(Passes(validate_h_coalgebra(a)));
    EXPECT_TRUE(Passes(validate_bicoalgebra(a)));
    EXPECT_TRUE(Passes(validate_antipode(a)));
    EXPECT_TRUE(Passes(antipode_properties(a)));
}

TEST(HopfCoalgebra, GroupAlgebraIsValid) {
    const auto a = group_z2(kQ);
    EXPECT_TRUE(Passes(validate_h_coalgebra(a)));
    EXPECT_TRUE(Passes(validate_bicoalgebra(a)));
    EXPECT_TRUE(Passes(validate_antipode(a)));
    EXPECT_TRUE(Passes(antipode_properties(a)));
}

TEST(HopfCoalgebra, PerturbedCoproductBreaksCoassociativity) {
    const auto a = group_z2(kQ);
    std::vector<Matrix> delta = a.coproducts();
    delta[0](1, 0) = q(1);
    const GradedHopfCoalgebra bad(a.H(), a.components(), delta, a.counit());
    const Report r = validate_h_coalgebra(bad);
    ASSERT_NE(r.find("coassociativity"), nullptr);
    EXPECT_EQ(r.find("coassociativity")->status(), CheckStatus::fail);
    EXPECT_FALSE(r.find("coassociativity")->witnesses().empty());
}

TEST(HopfCoalgebra, ScaledCoproductIsNotUnital) {
    const auto a = group_z2(kQ);
    std::vector<Matrix> delta{a.coproducts()[0] * q(2)};
    const GradedHopfCoalgebra bad(a.H(), a.components(), delta, a.counit());
    const Report r = validate_bicoalgebra(bad);
    ASSERT_NE(r.find("coproduct unital"), nullptr);
    EXPECT_EQ(r.find("coproduct unital")->status(), CheckStatus::fail);
}

TEST(HopfCoalgebra, BicharacterExampleIsABicoalgebra) {
    EXPECT_TRUE(Passes(validate_bicoalgebra(examples::bicharacter_z2(kQ).base())));
}

TEST(HopfCoalgebra, ShapeErrors) {
    const auto a = group_z2(kQ);
    EXPECT_EQ(error_of([&] { (void)GradedHopfCoalgebra(a.H(), a.components(), {Matrix(kQ, 3, 2)}, a.counit()); }),
              ErrorCode::ShapeMismatch);
    EXPECT_EQ(error_of([&] { (void)validate_antipode(dual_numbers(kQ)); }), ErrorCode::MissingAntipode);
}

TEST(Antipode, GroupAlgebraInvertsGenerators) {
    const auto sol = compute_antipode(group_z2(kQ).with_antipode(std::nullopt));
    ASSERT_TRUE(sol);
    EXPECT_TRUE(sol->unique);
    EXPECT_EQ(sol->maps.at(0), Matrix::identity(kQ, 2));
    const auto s3 = compute_antipode(examples::group_hopf_algebra(kQ, symmetric(3)));
    ASSERT_TRUE(s3);
    for (Elem g = 0; g < 6; ++g)
        EXPECT_EQ(mat_vec(s3->maps[0], basis_vector(kQ, 6, g)), basis_vector(kQ, 6, symmetric(3).inverse(g)));
}

TEST(Antipode, DualNumbersNegatePrimitive) {
    const auto sol = compute_antipode(dual_numbers(kQ));
    ASSERT_TRUE(sol);
    EXPECT_EQ(sol->maps.at(0), Matrix::from_ints(kQ, {{1, 0}, {0, -1}}));
    EXPECT_TRUE(sol->unique);
}

TEST(Antipode, ComputedAntipodePassesEveryCheckProperty) {
    for (FieldSpec f : {kQ, kGF5})
        for (const auto& [name, a] : example_universe(f)) {
            const auto sol = compute_antipode(a.base().with_antipode(std::nullopt));
            ASSERT_TRUE(sol) << name;
            EXPECT_TRUE(sol->unique) << name;
            const GradedHopfCoalgebra b = a.base().with_antipode(sol->maps);
            EXPECT_TRUE(Passes(validate_antipode(b))) << name;
            EXPECT_TRUE(Passes(antipode_properties(b))) << name;
            EXPECT_EQ(b, a.base()) << name;
        }
}

TEST(Antipode, ConvolutionInverseOfIdentity) {
    const auto a = examples::sign_twisted(kQ, examples::identity_crossed_module(cyclic(2))).base();
    for (Elem x = 0; x < 2; ++x) {
        const Elem xi = a.H().inverse(x);
        const Matrix lhs = convolution_product(a, a.component(x), a.antipode(x), xi, Matrix::identity(kQ, a.dim(x)), x);
        EXPECT_EQ(lhs, mat_mul(a.component(x).unit_map(), a.counit()));
    }
}

TEST(Grouplike, UnitFamilyIsSelfInverse) {
    const auto a = k_h_over_z2(kQ);
    const GrouplikeFamily one = unit_family(a);
    EXPECT_TRUE(is_grouplike(a, one));
    EXPECT_EQ(grouplike_inverse(a, one), one);
}

TEST(Grouplike, SignFamilyOnTrivialCoalgebra) {
    const auto a = k_h_over_z2(kQ);
    const GrouplikeFamily sign{{q(1)}, {q(-1)}};
    EXPECT_TRUE(Passes(grouplike_report(a, sign)));
    EXPECT_EQ(grouplike_inverse(a, sign), sign);
    EXPECT_EQ(grouplike_product(a, sign, sign), unit_family(a));
}

TEST(Grouplike, ZeroComponentIsRejected) {
    const auto a = k_h_over_z2(kQ);
    const GrouplikeFamily bad{{q(1)}, {q(0)}};
    EXPECT_FALSE(is_grouplike(a, bad));
    EXPECT_EQ(error_of([&] { (void)grouplike_inverse(a, bad); }), ErrorCode::NotGrouplike);
}

TEST(Grouplike, EnumeratedFamiliesFormAGroupProperty) {
    for (FieldSpec f : {kQ, kGF5})
        for (const auto& [name, a] : example_universe(f)) {
            const auto all = enumerate_grouplikes(a.base());
            ASSERT_FALSE(all.empty()) << name;
            EXPECT_EQ(all.front(), unit_family(a.base())) << name;
            auto contains = [&](const GrouplikeFamily& g) { return std::find(all.begin(), all.end(), g) != all.end(); };
            for (const auto& g : all) {
                EXPECT_TRUE(is_grouplike(a.base(), g)) << name;
                EXPECT_TRUE(contains(grouplike_inverse(a.base(), g))) << name;
                for (const auto& h : all)
                    EXPECT_TRUE(contains(grouplike_product(a.base(), g, h))) << name;
            }
        }
}

TEST(Pivotal, Examples) {
    EXPECT_TRUE(Passes(is_pivotal_element(k_h_over_z2(kQ), {{q(1)}, {q(1)}})));
    EXPECT_TRUE(Passes(is_pivotal_element(group_z2(kQ), unit_family(group_z2(kQ)))));
    EXPECT_TRUE(Passes(is_pivotal_element(k_h_over_z2(kQ), {{q(1)}, {q(-1)}})));
    EXPECT_EQ(error_of([] { (void)is_pivotal_element(k_h_over_z2(kQ), {{q(1)}, {q(0)}}); }), ErrorCode::NotGrouplike);
}

TEST(DegreeOne, ClassicalHopfAlgebraProperty) {
    for (const auto& [name, a] : example_universe(kQ)) {
        const GradedHopfCoalgebra one = degree_one_part(a.base());
        EXPECT_EQ(one.H().order(), 1u);
        EXPECT_TRUE(Passes(validate_h_coalgebra(one))) << name;
        EXPECT_TRUE(Passes(validate_bicoalgebra(one))) << name;
        EXPECT_TRUE(Passes(validate_antipode(one))) << name;
    }
}

TEST(Validators, ParallelRunsMatchSerial) {
    const auto good = mk_trivial(kGF5, examples::a3_in_s3()).base();
    std::vector<Matrix> delta = good.coproducts();
    delta[7](0, 0) = s(kGF5, 2);
    delta[20](0, 0) = s(kGF5, 3);
    const GradedHopfCoalgebra a(good.H(), good.components(), delta, good.counit());
    ASSERT_FALSE(validate_h_coalgebra(a).ok());
    EXPECT_EQ(validate_h_coalgebra(a).to_text(), validate_h_coalgebra(a, {4}).to_text());
    EXPECT_EQ(validate_bicoalgebra(a).to_text(), validate_bicoalgebra(a, {3}).to_text());
}

} // namespace
} // namespace xhopf::testing
