#include "xhopf/examples.hpp"

#include "xhopf/error.hpp"

namespace xhopf::examples {

CrossedModule identity_crossed_module(const FiniteGroup& g) { return inclusion(identity_hom(g)); }

CrossedModule a3_in_s3() {
    const FiniteGroup s3 = symmetric(3);
    std::vector<Elem> even;
    for (Elem k = 0; k < s3.order(); ++k) {
        const auto p = permutation(3, k);
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                inversions += p[i] > p[j];
        if (inversions % 2 == 0)
            even.push_back(k);
    }
    return inclusion(subgroup_embedding(s3, even));
}

std::vector<CrossedModule> standard_crossed_modules() {
    const FiniteGroup z2 = cyclic(2);
    return {trivial_over(z2), identity_crossed_module(z2), abelian_to_point(z2), a3_in_s3()};
}

GradedHopfCoalgebra group_hopf_algebra(FieldSpec field, const FiniteGroup& g) {
    const std::size_t n = g.order();
    Matrix delta(field, n * n, n), counit(field, 1, n), s(field, n, n);
    for (Elem x = 0; x < n; ++x) {
        delta(x * n + x, x) = Scalar::one(field);
        counit(0, x) = Scalar::one(field);
        s(g.inverse(x), x) = Scalar::one(field);
    }
    return GradedHopfCoalgebra(FiniteGroup(), {ComponentAlgebra::group_algebra(field, g)}, {delta}, counit,
                               std::vector<Matrix>{s});
}

std::vector<std::vector<Scalar>> sign_bicharacter(FieldSpec field) {
    const Scalar one = Scalar::one(field);
    return {{one, one}, {one, -one}};
}

HopfXiCoalgebra bicharacter_z2(FieldSpec field) {
    return mk_bicharacter_group_algebra(field, cyclic(2), cyclic(2), sign_bicharacter(field));
}

std::vector<int> sign_character(const FiniteGroup& h) {
    std::vector<int> out(h.order(), 1);
    if (h == symmetric(3)) {
        for (Elem k = 0; k < h.order(); ++k) {
            const auto p = permutation(3, k);
            int s = 1;
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = i + 1; j < 3; ++j)
                    if (p[i] > p[j])
                        s = -s;
            out[k] = s;
        }
    } else if (h.order() == 2) {
        out[1] = -1;
    }
    return out;
}

std::vector<Matrix> sign_twist(FieldSpec field, const FiniteGroup& h) {
    std::vector<Matrix> rho;
    for (int s : sign_character(h)) {
        Matrix m = Matrix::identity(field, 2);
        m(1, 1) = Scalar(field, static_cast<long>(s));
        rho.push_back(std::move(m));
    }
    return rho;
}

HopfXiCoalgebra sign_twisted(FieldSpec field, const CrossedModule& cm, const ValidationOptions& opts) {
    return mk_from_h_action(cm, group_hopf_algebra(field, cyclic(2)), sign_twist(field, cm.H()), opts);
}

GradedHopfCoalgebra constant_pi_coalgebra(FieldSpec field, const CrossedModule& cm) {
    const FiniteGroup pi = kernel_image_cokernel(cm).cokernel;
    const GradedHopfCoalgebra base = group_hopf_algebra(field, cyclic(2));
    const std::size_t n = pi.order();
    return GradedHopfCoalgebra(pi, std::vector<ComponentAlgebra>(n, base.component(0)),
                               std::vector<Matrix>(n * n, base.coproduct(0, 0)), base.counit(),
                               std::vector<Matrix>(n, base.antipode(0)));
}

} // namespace xhopf::examples
