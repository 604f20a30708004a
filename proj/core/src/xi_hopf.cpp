#include "xhopf/xi_hopf.hpp"

#include <string>

#include "check_util.hpp"
#include "xhopf/error.hpp"

namespace xhopf {

using detail::compare;
using detail::fan_out;
using detail::label;

namespace {

std::string shape_of(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const std::string& what) {
    if (m.rows() != rows || m.cols() != cols)
        throw Error(ErrorCode::ShapeMismatch, what + " has shape " + shape_of(m) + ", expected " +
                                                  std::to_string(rows) + "x" + std::to_string(cols));
}

std::vector<Vector> columns(const Matrix& m) {
    std::vector<Vector> out;
    for (std::size_t j = 0; j < m.cols(); ++j)
        out.push_back(m.column_vector(j));
    return out;
}

Matrix transpose_of(const Matrix& m) { return m.transpose(); }

} // namespace

HopfXiCoalgebra::HopfXiCoalgebra(CrossedModule cm, GradedHopfCoalgebra base, std::vector<Matrix> phi)
    : cm_(std::move(cm)), base_(std::move(base)), phi_(std::move(phi)) {
    if (!(base_.H() == cm_.H()))
        throw Error(ErrorCode::ShapeMismatch, "coalgebra is graded by a group other than H");
    const std::size_t n = cm_.H().order(), ne = cm_.E().order();
    if (phi_.size() != n * ne)
        throw Error(ErrorCode::ShapeMismatch, "expected one action map per pair (x, e)");
    for (Elem x = 0; x < n; ++x)
        for (Elem e = 0; e < ne; ++e) {
            require_shape(this->phi(x, e), dim(cm_.shift(e, x)), dim(x), "phi " + label({{"x", x}, {"e", e}}));
            if (!(this->phi(x, e).field() == field()))
                throw Error(ErrorCode::MixedFields, "phi " + label({{"x", x}, {"e", e}}));
        }
}

Report validate_xi_action(const HopfXiCoalgebra& a, const ValidationOptions& opts) {
    Report report;
    const FiniteGroup& h = a.H();
    const FiniteGroup& eg = a.E();
    const CrossedModule& cm = a.cm();
    const std::size_t n = h.order(), ne = eg.order();
    const FieldSpec field = a.field();

    Check unit("xi-action: phi_{x,1} = id");
    for (Elem x = 0; x < n; ++x) {
        std::vector<std::string> out;
        compare(out, "x=" + std::to_string(x), a.phi(x, eg.identity()), Matrix::identity(field, a.dim(x)));
        for (auto& w : out)
            unit.fail(std::move(w));
    }
    report.add(std::move(unit));

    Check comp("xi-action: phi_{xi(e)x,f} phi_{x,e} = phi_{x,fe}");
    fan_out(comp, n * ne * ne, opts.jobs, [&](std::size_t t) {
        const Elem x = t / (ne * ne), e = t / ne % ne, f = t % ne;
        std::vector<std::string> out;
        compare(out, label({{"x", x}, {"e", e}, {"f", f}}), mat_mul(a.phi(cm.shift(e, x), f), a.phi(x, e)),
                a.phi(x, eg.mul(f, e)));
        return out;
    });
    report.add(std::move(comp));

    Check coprod("xi-action: (phi_{x,e} (x) phi_{y,f}) Delta_{x,y} = Delta phi_{xy,e.x(f)}");
    fan_out(coprod, n * n * ne * ne, opts.jobs, [&](std::size_t t) {
        const Elem x = t / (n * ne * ne), y = t / (ne * ne) % n, e = t / ne % ne, f = t % ne;
        std::vector<std::string> out;
        const Matrix lhs = compose_kron(a.phi(x, e), a.phi(y, f), a.base().coproduct(x, y));
        const Matrix rhs = mat_mul(a.base().coproduct(cm.shift(e, x), cm.shift(f, y)),
                                   a.phi(h.mul(x, y), eg.mul(e, cm.act(x, f))));
        compare(out, label({{"x", x}, {"y", y}, {"e", e}, {"f", f}}), lhs, rhs);
        return out;
    });
    report.add(std::move(coprod));

    Check alg("xi-action: each phi_{x,e} is an algebra map");
    Check inv("xi-action: phi_{x,e}^-1 = phi_{xi(e)x,e^-1}");
    for (Elem x = 0; x < n; ++x)
        for (Elem e = 0; e < ne; ++e) {
            const Elem y = cm.shift(e, x);
            const Matrix& p = a.phi(x, e);
            const ComponentAlgebra& ax = a.base().component(x);
            const ComponentAlgebra& ay = a.base().component(y);
            const auto cols = columns(p);
            for (std::size_t i = 0; i < ax.dim(); ++i)
                for (std::size_t j = 0; j < ax.dim(); ++j) {
                    const Vector lhs =
                        mat_vec(p, ax.multiply(basis_vector(field, ax.dim(), i), basis_vector(field, ax.dim(), j)));
                    alg.expect(lhs == ay.multiply(cols[i], cols[j]),
                               [&] { return label({{"x", x}, {"e", e}, {"i", i}, {"j", j}}); });
                }
            alg.expect(mat_vec(p, ax.unit()) == ay.unit(),
                       [&] { return label({{"x", x}, {"e", e}}) + ": unit not preserved"; });
            std::vector<std::string> out;
            const Matrix& back = a.phi(y, eg.inverse(e));
            compare(out, label({{"x", x}, {"e", e}}) + " left", mat_mul(back, p), Matrix::identity(field, ax.dim()));
            compare(out, label({{"x", x}, {"e", e}}) + " right", mat_mul(p, back), Matrix::identity(field, ay.dim()));
            for (auto& w : out)
                inv.fail(std::move(w));
        }
    report.add(std::move(alg));
    report.add(std::move(inv));
    return report;
}

Report check_antipode_action_compat(const HopfXiCoalgebra& a) {
    const GradedHopfCoalgebra& b = a.base();
    if (!b.has_antipode())
        throw Error(ErrorCode::MissingAntipode, "antipode compatibility needs an antipode");
    const FiniteGroup& h = a.H();
    const FiniteGroup& eg = a.E();
    const CrossedModule& cm = a.cm();
    Report report;
    Check compat("antipode compatible with action: phi_{x,e} S_x = S_{xi(e)x} phi_{x^-1,x^-1.(e^-1)}");
    for (Elem x = 0; x < h.order(); ++x)
        for (Elem e = 0; e < eg.order(); ++e) {
            const Elem xinv = h.inverse(x);
            const Matrix lhs = mat_mul(a.phi(x, e), b.antipode(x));
            const Matrix rhs = mat_mul(b.antipode(cm.shift(e, x)), a.phi(xinv, cm.act(xinv, eg.inverse(e))));
            std::vector<std::string> out;
            compare(out, label({{"x", x}, {"e", e}}), lhs, rhs);
            for (auto& w : out)
                compat.fail(std::move(w));
        }
    report.add(std::move(compat));
    return report;
}

Report validate_hopf_xi_coalgebra(const HopfXiCoalgebra& a, const ValidationOptions& opts) {
    Report report;
    const Report cm = validate_crossed_module(a.cm());
    report.merge(cm, "crossed module: ");
    if (!cm.ok()) {
        Check rest("structure maps");
        rest.skip("crossed module invalid");
        report.add(std::move(rest));
        return report;
    }
    const GradedHopfCoalgebra& b = a.base();
    report.merge(validate_h_coalgebra(b, opts));
    report.merge(validate_bicoalgebra(b, opts));

    Check present("antipode: present");
    if (!b.has_antipode())
        present.fail("no antipode given");
    report.add(std::move(present));
    if (b.has_antipode()) {
        report.merge(validate_antipode(b));
        report.merge(antipode_properties(b));
    }
    report.merge(validate_xi_action(a, opts));
    if (b.has_antipode())
        report.merge(check_antipode_action_compat(a));
    return report;
}

GrouplikePairing grouplike_pairing(const HopfXiCoalgebra& a, const GrouplikeFamily& g) {
    const GradedHopfCoalgebra& b = a.base();
    if (!is_grouplike(b, g))
        throw Error(ErrorCode::NotGrouplike, "family is not grouplike");
    const FiniteGroup& h = a.H();
    const FiniteGroup& eg = a.E();
    const CrossedModule& cm = a.cm();
    GrouplikePairing out;
    for (Elem e = 0; e < eg.order(); ++e) {
        const Elem x = cm.xi(eg.inverse(e));
        out.values.push_back(mat_vec(b.counit(), mat_vec(a.phi(x, e), g[x]))[0]);
    }
    Check identity("pairing: phi_{x,e}(G_x) = <G,e> G_{xi(e)x}");
    for (Elem x = 0; x < h.order(); ++x)
        for (Elem e = 0; e < eg.order(); ++e) {
            const Vector lhs = mat_vec(a.phi(x, e), g[x]);
            const Vector rhs = scale(g[cm.shift(e, x)], out.values[e]);
            identity.expect(lhs == rhs, [&] {
                return label({{"x", x}, {"e", e}}) + ": " + to_string(lhs) + " != " + to_string(rhs);
            });
        }
    out.checks.add(std::move(identity));
    return out;
}

bool is_xi_grouplike(const HopfXiCoalgebra& a, const GrouplikeFamily& g) {
    const GrouplikePairing p = grouplike_pairing(a, g);
    for (const auto& v : p.values)
        if (!v.is_one())
            return false;
    // The pairing identity makes the values decisive, but check directly too.
    for (Elem x = 0; x < a.H().order(); ++x)
        for (Elem e = 0; e < a.E().order(); ++e)
            if (mat_vec(a.phi(x, e), g[x]) != g[a.cm().shift(e, x)])
                return false;
    return true;
}

std::vector<GrouplikeFamily> enumerate_xi_grouplikes(const HopfXiCoalgebra& a) {
    std::vector<GrouplikeFamily> out;
    for (auto& g : enumerate_grouplikes(a.base()))
        if (is_xi_grouplike(a, g))
            out.push_back(std::move(g));
    return out;
}

Report check_pairing_bicharacter(const HopfXiCoalgebra& a, const std::vector<GrouplikeFamily>& families) {
    const FiniteGroup& eg = a.E();
    std::vector<GrouplikePairing> pairings;
    for (const auto& g : families)
        pairings.push_back(grouplike_pairing(a, g));
    Report report;
    Check ident("pairing: identity on every family");
    for (std::size_t i = 0; i < pairings.size(); ++i)
        for (const auto& c : pairings[i].checks.checks())
            for (const auto& w : c.witnesses())
                ident.fail("family " + std::to_string(i) + ", " + w);
    report.add(std::move(ident));

    Check in_g("pairing: multiplicative in G");
    for (std::size_t i = 0; i < families.size(); ++i)
        for (std::size_t j = 0; j < families.size(); ++j) {
            const GrouplikeFamily prod = grouplike_product(a.base(), families[i], families[j]);
            if (!is_grouplike(a.base(), prod)) {
                in_g.fail("product of families " + std::to_string(i) + " and " + std::to_string(j) +
                          " is not grouplike");
                continue;
            }
            const GrouplikePairing p = grouplike_pairing(a, prod);
            for (Elem e = 0; e < eg.order(); ++e)
                in_g.expect(p.values[e] == pairings[i].values[e] * pairings[j].values[e], [&] {
                    return "families " + std::to_string(i) + ", " + std::to_string(j) + " at e=" + std::to_string(e);
                });
        }
    report.add(std::move(in_g));

    Check in_e("pairing: multiplicative in e");
    for (std::size_t i = 0; i < families.size(); ++i)
        for (Elem e = 0; e < eg.order(); ++e)
            for (Elem f = 0; f < eg.order(); ++f)
                in_e.expect(pairings[i].values[eg.mul(e, f)] == pairings[i].values[e] * pairings[i].values[f],
                            [&] { return "family " + std::to_string(i) + " " + label({{"e", e}, {"f", f}}); });
    report.add(std::move(in_e));
    return report;
}

HopfXiCoalgebra mk_trivial(FieldSpec field, const CrossedModule& cm) {
    const std::size_t n = cm.H().order(), ne = cm.E().order();
    const Matrix one = Matrix::identity(field, 1);
    GradedHopfCoalgebra base(cm.H(), std::vector<ComponentAlgebra>(n, ComponentAlgebra::ground(field)),
                             std::vector<Matrix>(n * n, one), one, std::vector<Matrix>(n, one));
    return HopfXiCoalgebra(cm, std::move(base), std::vector<Matrix>(n * ne, one));
}

HopfXiCoalgebra mk_bicharacter_group_algebra(FieldSpec field, const FiniteGroup& e, const FiniteGroup& g,
                                             const std::vector<std::vector<Scalar>>& omega) {
    const CrossedModule cm = abelian_to_point(e);
    const std::size_t ne = e.order(), ng = g.order();
    if (omega.size() != ne)
        throw Error(ErrorCode::ShapeMismatch, "omega needs one row per element of E");
    for (const auto& row : omega) {
        if (row.size() != ng)
            throw Error(ErrorCode::ShapeMismatch, "omega needs one column per element of G");
        for (const auto& s : row)
            if (!(s.field() == field))
                throw Error(ErrorCode::MixedFields, "omega value over " + s.field().name());
    }
    auto bad = [](const std::string& what) { throw Error(ErrorCode::NotBicharacter, what); };
    for (Elem a = 0; a < ne; ++a)
        for (Elem x = 0; x < ng; ++x)
            if (omega[a][x].is_zero())
                bad("omega" + label({{"e", a}, {"g", x}}) + " is zero");
    for (Elem x = 0; x < ng; ++x)
        if (!omega[e.identity()][x].is_one())
            bad("omega(1, g) != 1 at g=" + std::to_string(x) + ": " + omega[e.identity()][x].to_string());
    for (Elem a = 0; a < ne; ++a)
        if (!omega[a][g.identity()].is_one())
            bad("omega(e, 1) != 1 at e=" + std::to_string(a) + ": " + omega[a][g.identity()].to_string());
    for (Elem a = 0; a < ne; ++a)
        for (Elem b = 0; b < ne; ++b)
            for (Elem x = 0; x < ng; ++x)
                if (omega[e.mul(a, b)][x] != omega[a][x] * omega[b][x])
                    bad("omega(ef, g) != omega(e, g) omega(f, g) at " + label({{"e", a}, {"f", b}, {"g", x}}));
    for (Elem a = 0; a < ne; ++a)
        for (Elem x = 0; x < ng; ++x)
            for (Elem y = 0; y < ng; ++y)
                if (omega[a][g.mul(x, y)] != omega[a][x] * omega[a][y])
                    bad("omega(e, gh) != omega(e, g) omega(e, h) at " + label({{"e", a}, {"g", x}, {"h", y}}));

    Matrix delta(field, ng * ng, ng);
    Matrix counit(field, 1, ng);
    Matrix s(field, ng, ng);
    for (Elem x = 0; x < ng; ++x) {
        delta(x * ng + x, x) = Scalar::one(field);
        counit(0, x) = Scalar::one(field);
        s(g.inverse(x), x) = Scalar::one(field);
    }
    GradedHopfCoalgebra base(FiniteGroup(), {ComponentAlgebra::group_algebra(field, g)}, {delta}, counit,
                             std::vector<Matrix>{s});
    std::vector<Matrix> phi;
    for (Elem a = 0; a < ne; ++a) {
        Matrix p(field, ng, ng);
        for (Elem x = 0; x < ng; ++x)
            p(x, x) = omega[a][x];
        phi.push_back(std::move(p));
    }
    return HopfXiCoalgebra(cm, std::move(base), std::move(phi));
}

HopfXiCoalgebra mk_from_h_action(const CrossedModule& cm, const GradedHopfCoalgebra& a,
                                 const std::vector<Matrix>& rho, const ValidationOptions& opts) {
    if (a.H().order() != 1)
        throw Error(ErrorCode::ShapeMismatch, "the input must be a Hopf algebra graded by the trivial group");
    const FiniteGroup& h = cm.H();
    const std::size_t n = h.order(), ne = cm.E().order();
    const FieldSpec field = a.field();
    const ComponentAlgebra& alg = a.component(0);
    const std::size_t d = alg.dim();
    if (rho.size() != n)
        throw Error(ErrorCode::ShapeMismatch, "rho needs one matrix per element of H");
    for (Elem x = 0; x < n; ++x)
        require_shape(rho[x], d, d, "rho_" + std::to_string(x));

    for (Elem x = 0; x < n; ++x) {
        const auto cols = columns(rho[x]);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const Vector lhs =
                    mat_vec(rho[x], alg.multiply(basis_vector(field, d, i), basis_vector(field, d, j)));
                if (lhs != alg.multiply(cols[i], cols[j]))
                    throw Error(ErrorCode::NotAlgebraAutomorphism,
                                "rho_" + std::to_string(x) + " is not multiplicative on basis pair (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
            }
        if (mat_vec(rho[x], alg.unit()) != alg.unit())
            throw Error(ErrorCode::NotAlgebraAutomorphism, "rho_" + std::to_string(x) + " does not fix the unit");
        if (!inverse(rho[x]))
            throw Error(ErrorCode::NotAlgebraAutomorphism, "rho_" + std::to_string(x) + " is not invertible");
    }
    if (rho[h.identity()] != Matrix::identity(field, d))
        throw Error(ErrorCode::NotHomomorphism, "rho of the identity is not the identity map");
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            if (mat_mul(rho[x], rho[y]) != rho[h.mul(x, y)])
                throw Error(ErrorCode::NotHomomorphism,
                            "rho_x rho_y != rho_xy at " + label({{"x", x}, {"y", y}}));

    Matrix s;
    if (a.has_antipode()) {
        s = a.antipode(0);
    } else {
        const auto sol = compute_antipode(a);
        if (!sol)
            throw Error(ErrorCode::MissingAntipode, "the input bialgebra has no antipode");
        s = sol->maps[0];
    }
    const Matrix& delta = a.coproduct(0, 0);
    std::vector<Matrix> coproduct;
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            coproduct.push_back(compose_kron(rho[x], rho[y], mat_mul(delta, rho[h.inverse(h.mul(x, y))])));
    std::vector<Matrix> antipode;
    for (Elem x = 0; x < n; ++x)
        antipode.push_back(mat_mul(mat_mul(rho[x], s), rho[x]));
    std::vector<Matrix> phi;
    for (Elem x = 0; x < n; ++x)
        for (Elem e = 0; e < ne; ++e)
            phi.push_back(rho[cm.xi(e)]);
    GradedHopfCoalgebra base(h, std::vector<ComponentAlgebra>(n, alg), std::move(coproduct), a.counit(),
                             std::move(antipode));
    HopfXiCoalgebra out(cm, std::move(base), std::move(phi));
    const Report report = validate_hopf_xi_coalgebra(out, opts);
    for (const auto& c : report.checks())
        if (c.status() == CheckStatus::fail)
            throw Error(ErrorCode::AxiomCheckFailed,
                        "constructed family fails '" + c.name() + "'" +
                            (c.witnesses().empty() ? std::string() : ": " + c.witnesses().front()));
    return out;
}

HopfXiCoalgebra mk_from_pi_coalgebra(const CrossedModule& cm, const GradedHopfCoalgebra& b) {
    const KernelImageCokernel kic = kernel_image_cokernel(cm);
    if (!(b.H() == kic.cokernel))
        throw Error(ErrorCode::ShapeMismatch, "the input is not graded by the cokernel of the crossed module");
    const FiniteGroup& h = cm.H();
    const std::size_t n = h.order(), ne = cm.E().order();
    const auto& p = kic.projection;
    std::optional<std::vector<Matrix>> s_b = b.antipodes();
    if (!s_b) {
        const auto sol = compute_antipode(b);
        if (!sol)
            throw Error(ErrorCode::MissingAntipode, "the input coalgebra has no antipode");
        s_b = sol->maps;
    }
    std::vector<ComponentAlgebra> comps;
    std::vector<Matrix> antipode;
    for (Elem x = 0; x < n; ++x) {
        comps.push_back(b.component(p[x]));
        antipode.push_back((*s_b)[p[x]]);
    }
    std::vector<Matrix> coproduct;
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            coproduct.push_back(b.coproduct(p[x], p[y]));
    std::vector<Matrix> phi;
    for (Elem x = 0; x < n; ++x)
        for (Elem e = 0; e < ne; ++e)
            phi.push_back(Matrix::identity(b.field(), b.dim(p[x])));
    GradedHopfCoalgebra base(h, std::move(comps), std::move(coproduct), b.counit(), std::move(antipode));
    return HopfXiCoalgebra(cm, std::move(base), std::move(phi));
}

GradedHopfCoalgebra extract_pi_coalgebra(const HopfXiCoalgebra& a, const std::vector<Elem>& q) {
    const KernelImageCokernel kic = kernel_image_cokernel(a.cm());
    const std::size_t m = kic.cokernel.order();
    if (q.size() != m)
        throw Error(ErrorCode::InvalidArgument, "section needs one element per coset");
    for (Elem c = 0; c < m; ++c)
        if (q[c] >= a.H().order() || kic.projection[q[c]] != c)
            throw Error(ErrorCode::InvalidArgument, "q is not a section of the projection at coset " + std::to_string(c));
    for (Elem x = 0; x < a.H().order(); ++x)
        for (Elem e = 0; e < a.E().order(); ++e)
            if (a.phi(x, e) != Matrix::identity(a.field(), a.dim(x)))
                throw Error(ErrorCode::InvalidArgument, "the action is not trivial at " + label({{"x", x}, {"e", e}}));
    const GradedHopfCoalgebra& base = a.base();
    std::vector<ComponentAlgebra> comps;
    std::vector<Matrix> coproduct;
    std::optional<std::vector<Matrix>> antipode;
    if (base.has_antipode())
        antipode.emplace();
    for (Elem c = 0; c < m; ++c) {
        comps.push_back(base.component(q[c]));
        if (antipode)
            antipode->push_back(base.antipode(q[c]));
    }
    for (Elem c = 0; c < m; ++c)
        for (Elem d = 0; d < m; ++d)
            coproduct.push_back(base.coproduct(q[c], q[d]));
    return GradedHopfCoalgebra(kic.cokernel, std::move(comps), std::move(coproduct), base.counit(),
                               std::move(antipode));
}

GradedHopfCoalgebra extract_pi_coalgebra(const HopfXiCoalgebra& a) {
    return extract_pi_coalgebra(a, least_section(kernel_image_cokernel(a.cm())));
}

HopfXiAlgebra::HopfXiAlgebra(CrossedModule cm, std::vector<Matrix> comul, std::vector<Matrix> counit,
                             std::vector<Matrix> product, Vector unit, std::vector<Matrix> antipode,
                             std::vector<Matrix> phi)
    : cm_(std::move(cm)), comul_(std::move(comul)), counit_(std::move(counit)), product_(std::move(product)),
      unit_(std::move(unit)), antipode_(std::move(antipode)), phi_(std::move(phi)) {
    const FiniteGroup& h = cm_.H();
    const std::size_t n = h.order(), ne = cm_.E().order();
    if (counit_.size() != n || comul_.size() != n || antipode_.size() != n)
        throw Error(ErrorCode::ShapeMismatch, "expected one coalgebra and antipode per element of H");
    for (Elem x = 0; x < n; ++x) {
        require_shape(counit_[x], 1, counit_[x].cols(), "counit");
        if (dim(x) == 0)
            throw Error(ErrorCode::ShapeMismatch, "component " + std::to_string(x) + " is zero");
        require_shape(comul_[x], dim(x) * dim(x), dim(x), "coproduct of component " + std::to_string(x));
        const Elem xinv = h.inverse(x);
        if (xinv >= n)
            throw Error(ErrorCode::ShapeMismatch, "H has no inverse for " + std::to_string(x));
        require_shape(antipode_[x], dim(xinv), dim(x), "antipode of component " + std::to_string(x));
    }
    if (product_.size() != n * n)
        throw Error(ErrorCode::ShapeMismatch, "expected one product per pair of elements of H");
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            require_shape(this->product(x, y), dim(h.mul(x, y)), dim(x) * dim(y),
                          "product " + label({{"x", x}, {"y", y}}));
    if (unit_.size() != dim(h.identity()))
        throw Error(ErrorCode::ShapeMismatch, "unit must lie in the degree-one component");
    if (phi_.size() != n * ne)
        throw Error(ErrorCode::ShapeMismatch, "expected one action map per pair (x, e)");
    for (Elem x = 0; x < n; ++x)
        for (Elem e = 0; e < ne; ++e)
            require_shape(this->phi(x, e), dim(cm_.shift(e, x)), dim(x), "phi " + label({{"x", x}, {"e", e}}));
    const FieldSpec f = field();
    auto same = [&](const std::vector<Matrix>& ms) {
        for (const auto& m : ms)
            if (!(m.field() == f))
                throw Error(ErrorCode::MixedFields, "structure maps over different fields");
    };
    same(comul_);
    same(product_);
    same(antipode_);
    same(phi_);
    for (const auto& s : unit_)
        if (!(s.field() == f))
            throw Error(ErrorCode::MixedFields, "unit over another field");
}

Report validate_hopf_xi_algebra(const HopfXiAlgebra& a, const ValidationOptions& opts) {
    Report report;
    const Report cmr = validate_crossed_module(a.cm());
    report.merge(cmr, "crossed module: ");
    if (!cmr.ok()) {
        Check rest("structure maps");
        rest.skip("crossed module invalid");
        report.add(std::move(rest));
        return report;
    }
    const FiniteGroup& h = a.H();
    const FiniteGroup& eg = a.cm().E();
    const CrossedModule& cm = a.cm();
    const std::size_t n = h.order(), ne = eg.order();
    const FieldSpec field = a.field();
    const Elem one = h.identity();
    auto id = [&](Elem x) { return Matrix::identity(field, a.dim(x)); };

    Check coassoc("coalgebra: coassociativity");
    Check counit("coalgebra: counit");
    for (Elem x = 0; x < n; ++x) {
        std::vector<std::string> c1, c2;
        const Matrix& d = a.comul(x);
        compare(c1, "x=" + std::to_string(x), compose_kron(d, id(x), d), compose_kron(id(x), d, d));
        compare(c2, "left, x=" + std::to_string(x), compose_kron(a.counit(x), id(x), d), id(x));
        compare(c2, "right, x=" + std::to_string(x), compose_kron(id(x), a.counit(x), d), id(x));
        for (auto& w : c1)
            coassoc.fail(std::move(w));
        for (auto& w : c2)
            counit.fail(std::move(w));
    }
    report.add(std::move(coassoc));
    report.add(std::move(counit));

    Check assoc("product: associativity");
    fan_out(assoc, n * n * n, opts.jobs, [&](std::size_t t) {
        const Elem x = t / (n * n), y = t / n % n, z = t % n;
        std::vector<std::string> out;
        const Matrix lhs = mat_mul(a.product(h.mul(x, y), z), kron(a.product(x, y), id(z)));
        const Matrix rhs = mat_mul(a.product(x, h.mul(y, z)), kron(id(x), a.product(y, z)));
        compare(out, label({{"x", x}, {"y", y}, {"z", z}}), lhs, rhs);
        return out;
    });
    report.add(std::move(assoc));

    Check unit("product: unit");
    const Matrix u = Matrix::column(field, a.unit());
    for (Elem x = 0; x < n; ++x) {
        std::vector<std::string> out;
        compare(out, "left, x=" + std::to_string(x), mat_mul(a.product(one, x), kron(u, id(x))), id(x));
        compare(out, "right, x=" + std::to_string(x), mat_mul(a.product(x, one), kron(id(x), u)), id(x));
        for (auto& w : out)
            unit.fail(std::move(w));
    }
    report.add(std::move(unit));

    Check coalg_mult("product is a coalgebra map: Delta mu = (mu (x) mu)(id (x) flip (x) id)(Delta (x) Delta)");
    fan_out(coalg_mult, n * n, opts.jobs, [&](std::size_t t) {
        const Elem x = t / n, y = t % n, xy = h.mul(x, y);
        const std::size_t dx = a.dim(x), dy = a.dim(y);
        const Matrix& mu = a.product(x, y);
        std::vector<std::string> out;
        for (std::size_t i = 0; i < dx; ++i)
            for (std::size_t j = 0; j < dy; ++j) {
                const Vector lhs = mat_vec(a.comul(xy), mu.column_vector(i * dy + j));
                const Vector both = tensor(a.comul(x).column_vector(i), a.comul(y).column_vector(j));
                const Vector rhs = apply_kron(mu, mu, swap_middle(both, dx, dx, dy, dy));
                if (lhs != rhs)
                    out.push_back(label({{"x", x}, {"y", y}, {"i", i}, {"j", j}}));
            }
        return out;
    });
    report.add(std::move(coalg_mult));

    Check coalg_counit("product is a coalgebra map: epsilon mu = epsilon (x) epsilon");
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            std::vector<std::string> out;
            compare(out, label({{"x", x}, {"y", y}}), mat_mul(a.counit(h.mul(x, y)), a.product(x, y)),
                    kron(a.counit(x), a.counit(y)));
            for (auto& w : out)
                coalg_counit.fail(std::move(w));
        }
    report.add(std::move(coalg_counit));

    Check unit_coalg("unit is grouplike: Delta(1) = 1 (x) 1, epsilon(1) = 1");
    unit_coalg.expect(mat_vec(a.comul(one), a.unit()) == tensor(a.unit(), a.unit()), [] { return "Delta(1)"; });
    unit_coalg.expect(mat_vec(a.counit(one), a.unit())[0].is_one(), [] { return "epsilon(1)"; });
    report.add(std::move(unit_coalg));

    Check anti("antipode: mu(S (x) id)Delta = 1 epsilon = mu(id (x) S)Delta");
    Check bij("antipode: bijective");
    for (Elem x = 0; x < n; ++x) {
        const Elem xinv = h.inverse(x);
        std::vector<std::string> out;
        const Matrix target = mat_mul(u, a.counit(x));
        compare(out, "left, x=" + std::to_string(x),
                mat_mul(a.product(xinv, x), compose_kron(a.antipode(x), id(x), a.comul(x))), target);
        compare(out, "right, x=" + std::to_string(x),
                mat_mul(a.product(x, xinv), compose_kron(id(x), a.antipode(x), a.comul(x))), target);
        for (auto& w : out)
            anti.fail(std::move(w));
        bij.expect(inverse(a.antipode(x)).has_value(), [&] { return "x=" + std::to_string(x); });
    }
    report.add(std::move(anti));
    report.add(std::move(bij));

    Check act_unit("xi-action: phi_{x,1} = id");
    Check act_comp("xi-action: phi_{xi(e)x,f} phi_{x,e} = phi_{x,fe}");
    Check act_coalg("xi-action: each phi_{x,e} is a coalgebra map");
    for (Elem x = 0; x < n; ++x) {
        std::vector<std::string> out;
        compare(out, "x=" + std::to_string(x), a.phi(x, eg.identity()), id(x));
        for (auto& w : out)
            act_unit.fail(std::move(w));
        for (Elem e = 0; e < ne; ++e) {
            const Elem y = cm.shift(e, x);
            const Matrix& p = a.phi(x, e);
            std::vector<std::string> c;
            compare(c, label({{"x", x}, {"e", e}}) + " Delta", mat_mul(a.comul(y), p),
                    compose_kron(p, p, a.comul(x)));
            compare(c, label({{"x", x}, {"e", e}}) + " epsilon", mat_mul(a.counit(y), p), a.counit(x));
            for (auto& w : c)
                act_coalg.fail(std::move(w));
            for (Elem f = 0; f < ne; ++f) {
                std::vector<std::string> d;
                compare(d, label({{"x", x}, {"e", e}, {"f", f}}), mat_mul(a.phi(y, f), p), a.phi(x, eg.mul(f, e)));
                for (auto& w : d)
                    act_comp.fail(std::move(w));
            }
        }
    }
    report.add(std::move(act_unit));
    report.add(std::move(act_comp));
    report.add(std::move(act_coalg));

    Check act_mult("xi-action: mu (phi_{x,e} (x) phi_{y,f}) = phi_{xy,e.x(f)} mu");
    fan_out(act_mult, n * n * ne * ne, opts.jobs, [&](std::size_t t) {
        const Elem x = t / (n * ne * ne), y = t / (ne * ne) % n, e = t / ne % ne, f = t % ne;
        std::vector<std::string> out;
        const Matrix lhs = mat_mul(a.product(cm.shift(e, x), cm.shift(f, y)), kron(a.phi(x, e), a.phi(y, f)));
        const Matrix rhs = mat_mul(a.phi(h.mul(x, y), eg.mul(e, cm.act(x, f))), a.product(x, y));
        compare(out, label({{"x", x}, {"y", y}, {"e", e}, {"f", f}}), lhs, rhs);
        return out;
    });
    report.add(std::move(act_mult));
    return report;
}

HopfXiAlgebra dualize(const HopfXiCoalgebra& a) {
    const GradedHopfCoalgebra& b = a.base();
    if (!b.has_antipode())
        throw Error(ErrorCode::MissingAntipode, "dualizing needs an antipode");
    const FiniteGroup& h = a.H();
    const FiniteGroup& eg = a.E();
    const std::size_t n = h.order(), ne = eg.order();
    std::vector<Matrix> comul, counit, product, antipode, phi;
    for (Elem x = 0; x < n; ++x) {
        comul.push_back(transpose_of(b.component(x).mul()));
        counit.push_back(Matrix::row(a.field(), b.component(x).unit()));
        antipode.push_back(transpose_of(b.antipode(x)));
    }
    for (const auto& d : b.coproducts())
        product.push_back(transpose_of(d));
    for (Elem x = 0; x < n; ++x)
        for (Elem e = 0; e < ne; ++e)
            phi.push_back(transpose_of(a.phi(a.cm().shift(e, x), eg.inverse(e))));
    return HopfXiAlgebra(a.cm(), std::move(comul), std::move(counit), std::move(product), b.counit().row_vector(0),
                         std::move(antipode), std::move(phi));
}

HopfXiCoalgebra dualize(const HopfXiAlgebra& a) {
    const FiniteGroup& h = a.H();
    const FiniteGroup& eg = a.cm().E();
    const std::size_t n = h.order(), ne = eg.order();
    std::vector<ComponentAlgebra> comps;
    std::vector<Matrix> coproduct, antipode, phi;
    for (Elem x = 0; x < n; ++x) {
        comps.emplace_back(transpose_of(a.comul(x)), a.counit(x).row_vector(0));
        antipode.push_back(transpose_of(a.antipode(x)));
    }
    for (const auto& m : a.products())
        coproduct.push_back(transpose_of(m));
    for (Elem x = 0; x < n; ++x)
        for (Elem e = 0; e < ne; ++e)
            phi.push_back(transpose_of(a.phi(a.cm().shift(e, x), eg.inverse(e))));
    GradedHopfCoalgebra base(h, std::move(comps), std::move(coproduct), Matrix::row(a.field(), a.unit()),
                             std::move(antipode));
    return HopfXiCoalgebra(a.cm(), std::move(base), std::move(phi));
}

} // namespace xhopf
