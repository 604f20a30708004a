#include "support.hpp"

namespace xhopf::testing {
namespace {

using examples::a3_in_s3;
using examples::identity_crossed_module;

TEST(CrossedModule, IdentityOnZ2) {
    const CrossedModule id(cyclic(2), cyclic(2), {0, 1}, {{0, 1}, {0, 1}});
    EXPECT_TRUE(Passes(validate_crossed_module(id)));
    EXPECT_EQ(id, identity_crossed_module(cyclic(2)));
}

TEST(CrossedModule, NormalInclusion) {
    EXPECT_TRUE(Passes(validate_crossed_module(a3_in_s3())));
    EXPECT_TRUE(Passes(validate_crossed_module(inclusion(subgroup_embedding(symmetric(3), {0, 3, 4})))));
}

TEST(CrossedModule, SymmetricThreeToPointViolatesPeiffer) {
    const FiniteGroup s3 = symmetric(3);
    const CrossedModule cm(s3, cyclic(1), std::vector<Elem>(6, 0), {{0, 1, 2, 3, 4, 5}});
    const Report r = validate_crossed_module(cm);
    const Check* peiffer = nullptr;
    for (const auto& c : r.checks())
        if (c.name().rfind("Peiffer", 0) == 0)
            peiffer = &c;
    ASSERT_NE(peiffer, nullptr);
    EXPECT_EQ(peiffer->status(), CheckStatus::fail);
    EXPECT_FALSE(peiffer->witnesses().empty());
}

TEST(CrossedModule, Constructors) {
    const CrossedModule over = trivial_over(cyclic(2));
    EXPECT_EQ(over.E().order(), 1u);
    EXPECT_TRUE(Passes(validate_crossed_module(over)));
    EXPECT_TRUE(Passes(validate_crossed_module(abelian_to_point(cyclic(2)))));
    EXPECT_EQ(error_of([] { (void)abelian_to_point(symmetric(3)); }), ErrorCode::NotAbelian);
    EXPECT_EQ(error_of([] { (void)inclusion(subgroup_embedding(symmetric(3), {0, 1})); }), ErrorCode::NotNormal);
    for (const auto& cm : examples::standard_crossed_modules())
        EXPECT_TRUE(Passes(validate_crossed_module(cm)));
}

TEST(Groupoid, HomSetsOfIdentityOnZ2) {
    const CrossedModule id = identity_crossed_module(cyclic(2));
    const auto to_h = hom_set(id, 0, 1);
    ASSERT_EQ(to_h.size(), 1u);
    EXPECT_EQ(to_h[0], (GroupoidArrow{0, 1, 1}));
    const auto loops = hom_set(id, 0, 0);
    ASSERT_EQ(loops.size(), 1u);
    EXPECT_EQ(loops[0], identity_arrow(id, 0));
}

TEST(Groupoid, AntipodeOfIdentityArrow) {
    const CrossedModule cm = a3_in_s3();
    for (Elem x = 0; x < 6; ++x)
        EXPECT_EQ(arrow_antipode(cm, identity_arrow(cm, x)), identity_arrow(cm, cm.H().inverse(x)));
}

TEST(Groupoid, TensorWithIdentityAtOne) {
    const CrossedModule id = identity_crossed_module(cyclic(2));
    EXPECT_EQ(arrow_tensor(id, {0, 1, 1}, {0, 0, 0}), (GroupoidArrow{0, 1, 1}));
}

TEST(Groupoid, ComposeRejectsMismatchedArrows) {
    const CrossedModule id = identity_crossed_module(cyclic(2));
    EXPECT_EQ(error_of([&] { (void)compose(id, {0, 1, 1}, {0, 1, 1}); }), ErrorCode::NonComposable);
}

std::vector<GroupoidArrow> all_arrows(const CrossedModule& cm) {
    std::vector<GroupoidArrow> out;
    for (Elem x = 0; x < cm.H().order(); ++x)
        for (Elem e = 0; e < cm.E().order(); ++e)
            out.push_back({x, e, cm.shift(e, x)});
    return out;
}

std::vector<CrossedModule> groupoid_universe() {
    auto out = examples::standard_crossed_modules();
    out.push_back(identity_crossed_module(symmetric(3)));
    out.push_back(trivial_over(symmetric(3)));
    out.push_back(abelian_to_point(cyclic(3)));
    return out;
}

TEST(Groupoid, CompositionStaysInHomSetsProperty) {
    for (const auto& cm : groupoid_universe()) {
        for (const auto& e : all_arrows(cm)) {
            ASSERT_TRUE(is_valid_arrow(cm, e));
            for (const auto& f : hom_set(cm, e.target, e.target))
                EXPECT_TRUE(is_valid_arrow(cm, compose(cm, f, e)));
            for (Elem y = 0; y < cm.H().order(); ++y)
                for (const auto& f : hom_set(cm, e.target, y)) {
                    const GroupoidArrow c = compose(cm, f, e);
                    EXPECT_EQ(c.source, e.source);
                    EXPECT_EQ(c.target, y);
                    EXPECT_EQ(c.label, cm.E().mul(f.label, e.label));
                }
        }
    }
}

TEST(Groupoid, AntipodeIsInvolutiveProperty) {
    for (const auto& cm : groupoid_universe())
        for (const auto& a : all_arrows(cm)) {
            const GroupoidArrow s = arrow_antipode(cm, a);
            EXPECT_TRUE(is_valid_arrow(cm, s));
            EXPECT_EQ(arrow_antipode(cm, s), a);
        }
}

TEST(Groupoid, TensorAssociativeAndUnitalProperty) {
    for (const auto& cm : groupoid_universe()) {
        const auto arrows = all_arrows(cm);
        const GroupoidArrow one = identity_arrow(cm, cm.H().identity());
        for (const auto& a : arrows) {
            EXPECT_EQ(arrow_tensor(cm, a, one), a);
            EXPECT_EQ(arrow_tensor(cm, one, a), a);
            for (const auto& b : arrows) {
                EXPECT_TRUE(is_valid_arrow(cm, arrow_tensor(cm, a, b)));
                for (const auto& c : arrows)
                    ASSERT_EQ(arrow_tensor(cm, arrow_tensor(cm, a, b), c), arrow_tensor(cm, a, arrow_tensor(cm, b, c)));
            }
        }
    }
}

TEST(KernelImageCokernel, IdentityHasTrivialKernelAndCokernel) {
    const auto kic = kernel_image_cokernel(identity_crossed_module(cyclic(2)));
    EXPECT_EQ(kic.kernel, std::vector<Elem>{0});
    EXPECT_EQ(kic.cokernel.order(), 1u);
    EXPECT_TRUE(Passes(kic.checks));
}

TEST(KernelImageCokernel, MapToPoint) {
    const auto kic = kernel_image_cokernel(abelian_to_point(cyclic(2)));
    EXPECT_EQ(kic.kernel, (std::vector<Elem>{0, 1}));
    EXPECT_EQ(kic.cokernel.order(), 1u);
}

TEST(KernelImageCokernel, AlternatingQuotientIsZ2) {
    const auto kic = kernel_image_cokernel(a3_in_s3());
    EXPECT_EQ(kic.image, (std::vector<Elem>{0, 3, 4}));
    EXPECT_EQ(kic.cokernel, cyclic(2));
    EXPECT_EQ(kic.projection, (std::vector<Elem>{0, 1, 1, 0, 0, 1}));
    EXPECT_EQ(least_section(kic), (std::vector<Elem>{0, 1}));
    EXPECT_TRUE(Passes(kic.checks));
}

TEST(KernelImageCokernel, InducedActionWellDefinedProperty) {
    for (const auto& cm : groupoid_universe())
        EXPECT_TRUE(Passes(kernel_image_cokernel(cm).checks));
}

} // namespace
} // namespace xhopf::testing
