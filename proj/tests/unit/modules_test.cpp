#include "support.hpp"

namespace xhopf::testing {
namespace {

HopfXiCoalgebra k_xi(FieldSpec f = kQ) { return mk_trivial(f, examples::identity_crossed_module(cyclic(2))); }

AModule k_at(const HopfXiCoalgebra& a, Elem x) { return concentrated(a, x, Matrix::identity(a.field(), 1)); }

/// Modules over `a` used by the property tests: units, regulars and
/// one-dimensional concentrated modules where the component is k.
std::vector<AModule> sample_modules(const HopfXiCoalgebra& a) {
    std::vector<AModule> out{unit_module(a)};
    for (Elem x = 0; x < a.H().order(); ++x) {
        out.push_back(regular_module(a, x));
        if (a.dim(x) == 1)
            out.push_back(k_at(a, x));
    }
    return out;
}

TEST(Module, UnitAndRegularAreValid) {
    for (const auto& [name, a] : example_universe(kQ)) {
        EXPECT_TRUE(Passes(validate_module(a, unit_module(a)))) << name;
        for (Elem x = 0; x < a.H().order(); ++x)
            EXPECT_TRUE(Passes(validate_module(a, regular_module(a, x)))) << name;
        EXPECT_TRUE(Passes(validate_module(a, zero_module(a)))) << name;
    }
}

TEST(Module, ScaledActionIsNotUnital) {
    const auto a = examples::sign_twisted(kQ, examples::identity_crossed_module(cyclic(2)));
    AModule m = regular_module(a, 0);
    m.action[0] = m.action[0] * q(2);
    const Report r = validate_module(a, m);
    EXPECT_FALSE(r.ok());
    const Check* c = failing(r);
    ASSERT_NE(c, nullptr);
    EXPECT_FALSE(c->witnesses().empty());
}

TEST(Module, ShapeMismatchThrows) {
    const auto a = k_xi();
    AModule m = unit_module(a);
    m.action[0] = Matrix::identity(kQ, 2);
    EXPECT_EQ(error_of([&] { (void)validate_module(a, m); }), ErrorCode::ShapeMismatch);
    EXPECT_EQ(error_of([&] { (void)validate_module(a, unit_module(k_xi(kGF5))); }), ErrorCode::MixedFields);
}

TEST(Module, SupportListsNonzeroDegrees) {
    const auto a = k_xi();
    EXPECT_EQ(unit_module(a).support(), (std::vector<Elem>{0}));
    EXPECT_EQ(k_at(a, 1).support(), (std::vector<Elem>{1}));
    EXPECT_TRUE(zero_module(a).support().empty());
    EXPECT_EQ(tensor_modules(a, regular_module(a, 0), k_at(a, 1)).total_dim(), 1u);
}

TEST(Tensor, OneDimensionalModulesMultiplyDegrees) {
    const auto a = k_xi();
    for (Elem x = 0; x < 2; ++x)
        for (Elem y = 0; y < 2; ++y) {
            const AModule t = tensor_modules(a, k_at(a, x), k_at(a, y));
            EXPECT_EQ(t, k_at(a, a.H().mul(x, y)));
        }
}

TEST(Tensor, UnitIsNeutralProperty) {
    for (const auto& [name, a] : example_universe(kGF5))
        for (const auto& m : sample_modules(a)) {
            EXPECT_EQ(tensor_modules(a, unit_module(a), m), m) << name;
            EXPECT_EQ(tensor_modules(a, m, unit_module(a)), m) << name;
        }
}

TEST(Tensor, ProductIsAModuleProperty) {
    for (const auto& [name, a] : example_universe(kQ)) {
        const auto ms = sample_modules(a);
        for (const auto& m : ms)
            for (const auto& n : ms) {
                const AModule t = tensor_modules(a, m, n);
                EXPECT_EQ(t.total_dim(), m.total_dim() * n.total_dim()) << name;
                EXPECT_TRUE(Passes(validate_module(a, t))) << name;
            }
    }
}

TEST(Tensor, BlockOffsetsAscendInFirstDegree) {
    const auto a = mk_trivial(kQ, trivial_over(cyclic(3)));
    const AModule r{{1, 1, 1}, {Matrix::identity(kQ, 1), Matrix::identity(kQ, 1), Matrix::identity(kQ, 1)}};
    EXPECT_EQ(tensor_block_offset(a.H(), r, r, 0, 0), 0u);
    EXPECT_EQ(tensor_block_offset(a.H(), r, r, 0, 1), 1u);
    EXPECT_EQ(tensor_block_offset(a.H(), r, r, 0, 2), 2u);
    EXPECT_EQ(tensor_modules(a, r, r).dims, (std::vector<std::size_t>{3, 3, 3}));
}

TEST(Pullback, IdentityAndCompositionProperty) {
    for (const auto& [name, a] : example_universe(kQ)) {
        const FiniteGroup& e = a.E();
        for (const auto& n : sample_modules(a)) {
            EXPECT_EQ(pullback_phi_e(a, n, 0), n) << name;
            for (Elem f = 0; f < e.order(); ++f) {
                const AModule p = pullback_phi_e(a, n, f);
                EXPECT_TRUE(Passes(validate_module(a, p))) << name;
                for (Elem g = 0; g < e.order(); ++g)
                    EXPECT_EQ(pullback_phi_e(a, p, g), pullback_phi_e(a, n, e.mul(f, g))) << name;
            }
        }
    }
}

TEST(Pullback, ShiftsDegreeByXi) {
    const auto a = k_xi();
    EXPECT_EQ(pullback_phi_e(a, k_at(a, 1), 1), k_at(a, 0));
    EXPECT_EQ(pullback_phi_e(a, unit_module(a), 1), k_at(a, 1));
}

TEST(HomSpace, OneDimensionalModulesOverIdentity) {
    const auto a = k_xi();
    const AModule k1 = unit_module(a), kh = k_at(a, 1);
    EXPECT_EQ(hom_space(a, k1, kh, 1).size(), 1u);
    EXPECT_EQ(hom_space(a, k1, kh, 0).size(), 0u);
    EXPECT_EQ(hom_space(a, k1, k1, 0).size(), 1u);
    const auto f = hom_space(a, k1, kh, 1).front();
    EXPECT_EQ(f.degree, 1u);
    EXPECT_TRUE(Passes(check_graded_hom(a, k1, kh, f)));
}

TEST(HomSpace, RegularModuleEndomorphisms) {
    const auto a = examples::sign_twisted(kQ, examples::identity_crossed_module(cyclic(2)));
    const AModule r = regular_module(a, 0);
    EXPECT_EQ(hom_space(a, r, r, 0).size(), 2u);
    EXPECT_EQ(hom_space(a, r, unit_module(a), 0).size(), 1u);
}

TEST(HomSpace, BasisIsIndependentAndLinearProperty) {
    for (const auto& [name, a] : example_universe(kQ)) {
        const auto ms = sample_modules(a);
        for (const auto& m : ms)
            for (const auto& n : ms) {
                const auto all = hom_spaces(a, m, n);
                ASSERT_EQ(all.size(), a.E().order()) << name;
                for (Elem e = 0; e < all.size(); ++e) {
                    std::vector<Vector> flat;
                    for (const auto& f : all[e]) {
                        EXPECT_EQ(f.degree, e) << name;
                        EXPECT_TRUE(is_graded_hom(a, m, n, f)) << name;
                        Vector v;
                        for (const auto& b : f.blocks)
                            v.insert(v.end(), b.data().begin(), b.data().end());
                        flat.push_back(std::move(v));
                    }
                    if (!flat.empty())
                        EXPECT_EQ(rank(from_columns(a.field(), flat.front().size(), flat)), flat.size()) << name;
                }
            }
    }
}

TEST(HomSpace, ConcurrentSolveMatchesSerial) {
    const auto a = examples::sign_twisted(kGF5, examples::a3_in_s3());
    const AModule m = tensor_modules(a, regular_module(a, 1), regular_module(a, 2));
    const AModule n = regular_module(a, 3);
    const auto serial = hom_spaces(a, m, n);
    EXPECT_EQ(hom_spaces(a, m, n, {4}), serial);
    for (Elem e = 0; e < serial.size(); ++e)
        EXPECT_EQ(hom_space(a, m, n, e), serial[e]);
}

TEST(Compose, IdentityIsNeutralAndDegreesMultiply) {
    const auto a = k_xi();
    const AModule k1 = unit_module(a), kh = k_at(a, 1);
    const GradedHom f = hom_space(a, k1, kh, 1).front();
    const GradedHom g = hom_space(a, kh, k1, 1).front();
    EXPECT_EQ(compose_homs(a, f, identity_hom(a, k1)), f);
    EXPECT_EQ(compose_homs(a, identity_hom(a, kh), f), f);
    const GradedHom gf = compose_homs(a, g, f);
    EXPECT_EQ(gf.degree, 0u);
    EXPECT_TRUE(is_graded_hom(a, k1, k1, gf));
    EXPECT_EQ(error_of([&] { (void)compose_homs(a, f, f); }), ErrorCode::NonComposable);
}

TEST(Compose, AssociativeOnRandomHomsProperty) {
    Gen gen(41);
    const auto a = examples::sign_twisted(kQ, examples::a3_in_s3());
    const auto ms = sample_modules(a);
    auto random_hom = [&](const AModule& m, const AModule& n) -> std::optional<GradedHom> {
        const Elem e = static_cast<Elem>(gen.integer(0, 2));
        const auto basis = hom_space(a, m, n, e);
        if (basis.empty())
            return std::nullopt;
        GradedHom h = basis.front();
        for (auto& b : h.blocks)
            b = b * gen.nonzero(kQ);
        return h;
    };
    for (int trial = 0; trial < 30; ++trial) {
        const auto& m0 = ms[gen.integer(0, ms.size() - 1)];
        const auto& m1 = ms[gen.integer(0, ms.size() - 1)];
        const auto& m2 = ms[gen.integer(0, ms.size() - 1)];
        const auto& m3 = ms[gen.integer(0, ms.size() - 1)];
        const auto f = random_hom(m0, m1), g = random_hom(m1, m2), h = random_hom(m2, m3);
        if (!f || !g || !h)
            continue;
        const GradedHom gf = compose_homs(a, *g, *f);
        EXPECT_EQ(gf.degree, a.E().mul(g->degree, f->degree));
        EXPECT_TRUE(is_graded_hom(a, m0, m2, gf));
        EXPECT_EQ(compose_homs(a, *h, gf), compose_homs(a, compose_homs(a, *h, *g), *f));
    }
}

TEST(TensorHoms, DegreeIsTwistedByTheSourceDegree) {
    const auto a = k_xi();
    const AModule k1 = unit_module(a), kh = k_at(a, 1);
    const GradedHom f = identity_hom(a, kh);
    const GradedHom g = hom_space(a, k1, kh, 1).front();
    const GradedHom t = tensor_homs(a, f, g, kh, k1, kh, kh);
    // |kh| = h acts on degree h by conjugation in Z/2, trivially
    EXPECT_EQ(t.degree, 1u);
    EXPECT_TRUE(Passes(check_graded_hom(a, tensor_modules(a, kh, k1), tensor_modules(a, kh, kh), t)));
}

TEST(TensorHoms, IdentitiesTensorToIdentityProperty) {
    for (const auto& [name, a] : example_universe(kQ)) {
        const auto ms = sample_modules(a);
        for (const auto& m : ms) {
            if (m.support().size() != 1)
                continue;
            for (const auto& n : ms) {
                const GradedHom t = tensor_homs(a, identity_hom(a, m), identity_hom(a, n), m, n, m, n);
                EXPECT_EQ(t, identity_hom(a, tensor_modules(a, m, n))) << name;
            }
        }
    }
}

TEST(TensorHoms, InhomogeneousSourceThrows) {
    const auto a = k_xi();
    const AModule both{{1, 1}, {Matrix::identity(kQ, 1), Matrix::identity(kQ, 1)}};
    EXPECT_EQ(error_of([&] {
                  (void)tensor_homs(a, identity_hom(a, both), identity_hom(a, both), both, both, both, both);
              }),
              ErrorCode::NotHomogeneous);
}

TEST(Dual, ZigZagsHoldForHomogeneousModulesProperty) {
    for (FieldSpec f : {kQ, kGF5})
        for (const auto& [name, a] : example_universe(f)) {
            const GrouplikeFamily one = unit_family(a.base());
            for (const auto& m : sample_modules(a)) {
                if (m.support().size() != 1)
                    continue;
                const DualModule d = dual_module(a, m, one);
                EXPECT_TRUE(Passes(d.checks)) << name;
                EXPECT_TRUE(Passes(validate_module(a, d.dual))) << name;
                EXPECT_EQ(d.dual.support(), (std::vector<Elem>{a.H().inverse(d.degree)})) << name;
            }
        }
}

TEST(Dual, SignPivotalOnTrivialCoalgebra) {
    const auto a = mk_trivial(kQ, trivial_over(cyclic(2)));
    const GrouplikeFamily sign{{q(1)}, {q(-1)}};
    const DualModule d = dual_module(a, k_at(a, 1), sign);
    EXPECT_TRUE(Passes(d.checks));
    EXPECT_EQ(d.rev, (Vector{q(-1)}));
    EXPECT_EQ(d.rcoev, (Vector{q(-1)}));
}

TEST(Dual, RejectsBadInputs) {
    const auto a = k_xi();
    const AModule both{{1, 1}, {Matrix::identity(kQ, 1), Matrix::identity(kQ, 1)}};
    EXPECT_EQ(error_of([&] { (void)dual_module(a, both, unit_family(a.base())); }), ErrorCode::NotHomogeneous);
    EXPECT_EQ(error_of([&] { (void)dual_module(a, k_at(a, 1), {{q(1)}, {q(0)}}); }), ErrorCode::NotPivotal);
}

TEST(DirectSum, EmptyFamilyIsZero) {
    const auto a = k_xi();
    const EDirectSum d = e_direct_sum(a, {}, 1);
    EXPECT_EQ(d.sum, zero_module(a));
    EXPECT_TRUE(d.injections.empty());
    EXPECT_TRUE(d.projections.empty());
}

TEST(DirectSum, DimensionsAndProjectionIdentitiesProperty) {
    for (const auto& [name, a] : example_universe(kQ)) {
        const auto ms = sample_modules(a);
        for (Elem e = 0; e < a.E().order(); ++e) {
            const EDirectSum d = e_direct_sum(a, ms, e);
            EXPECT_TRUE(Passes(validate_module(a, d.sum))) << name;
            const Elem einv = a.E().inverse(e);
            for (Elem x = 0; x < a.H().order(); ++x) {
                std::size_t expect = 0;
                for (const auto& m : ms)
                    expect += m.dims[a.cm().shift(einv, x)];
                EXPECT_EQ(d.sum.dims[x], expect) << name;
            }
            GradedHom total;
            for (std::size_t i = 0; i < ms.size(); ++i) {
                EXPECT_TRUE(is_graded_hom(a, ms[i], d.sum, d.injections[i])) << name;
                EXPECT_TRUE(is_graded_hom(a, d.sum, ms[i], d.projections[i])) << name;
                for (std::size_t j = 0; j < ms.size(); ++j) {
                    const GradedHom pq = compose_homs(a, d.projections[j], d.injections[i]);
                    EXPECT_EQ(pq.degree, 0u);
                    if (i == j)
                        EXPECT_EQ(pq, identity_hom(a, ms[i])) << name;
                    else
                        for (const auto& b : pq.blocks)
                            EXPECT_TRUE(b.is_zero()) << name;
                }
                const GradedHom qp = compose_homs(a, d.injections[i], d.projections[i]);
                if (i == 0) {
                    total = qp;
                } else {
                    for (std::size_t x = 0; x < qp.blocks.size(); ++x)
                        total.blocks[x] = total.blocks[x] + qp.blocks[x];
                }
            }
            EXPECT_EQ(total, identity_hom(a, d.sum)) << name;
        }
    }
}

TEST(DirectSum, HomDimensionsDecomposeProperty) {
    for (const auto& [name, a] : example_universe(kQ)) {
        const FiniteGroup& eg = a.E();
        const auto ms = sample_modules(a);
        const std::vector<AModule> xs(ms.begin(), ms.begin() + std::min<std::size_t>(ms.size(), 2));
        for (Elem e = 0; e < eg.order(); ++e)
            for (Elem g = 0; g < eg.order(); ++g) {
                const AModule src = e_direct_sum(a, xs, e).sum;
                const AModule dst = e_direct_sum(a, ms, g).sum;
                for (Elem d = 0; d < eg.order(); ++d) {
                    const Elem twisted = eg.mul(eg.mul(eg.inverse(g), d), e);
                    std::size_t expect = 0;
                    for (const auto& x : xs)
                        for (const auto& y : ms)
                            expect += hom_space(a, x, y, twisted).size();
                    EXPECT_EQ(hom_space(a, src, dst, d).size(), expect) << name;
                }
            }
    }
}

TEST(DirectSum, UnitAndConcentratedOverIdentity) {
    const auto a = k_xi();
    const EDirectSum d = e_direct_sum(a, {unit_module(a), k_at(a, 1)}, 1);
    EXPECT_EQ(d.sum.dims, (std::vector<std::size_t>{1, 1}));
}

} // namespace
} // namespace xhopf::testing
