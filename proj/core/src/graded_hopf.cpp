#include "xhopf/graded_hopf.hpp"

#include <algorithm>
#include <string>

#include "check_util.hpp"
#include "xhopf/error.hpp"

namespace xhopf {

using detail::compare;
using detail::fan_out;
using detail::label;

ComponentAlgebra::ComponentAlgebra(Matrix mul, Vector unit) : mul_(std::move(mul)), unit_(std::move(unit)) {
    const std::size_t d = unit_.size();
    if (d == 0)
        throw Error(ErrorCode::ShapeMismatch, "algebra of dimension 0");
    if (mul_.rows() != d || mul_.cols() != d * d)
        throw Error(ErrorCode::ShapeMismatch, "product of an algebra of dimension " + std::to_string(d) +
                                                  " must be " + std::to_string(d) + "x" + std::to_string(d * d));
    for (const auto& s : unit_)
        if (!(s.field() == mul_.field()))
            throw Error(ErrorCode::MixedFields, "unit and product over different fields");
}

ComponentAlgebra ComponentAlgebra::from_structure_constants(FieldSpec field, const std::vector<std::vector<Vector>>& c,
                                                            Vector unit) {
    const std::size_t d = unit.size();
    Matrix mul(field, d, d * d);
    if (c.size() != d)
        throw Error(ErrorCode::ShapeMismatch, "structure constants have the wrong first dimension");
    for (std::size_t i = 0; i < d; ++i) {
        if (c[i].size() != d)
            throw Error(ErrorCode::ShapeMismatch, "structure constants have the wrong second dimension");
        for (std::size_t j = 0; j < d; ++j) {
            if (c[i][j].size() != d)
                throw Error(ErrorCode::ShapeMismatch, "structure constants have the wrong third dimension");
            for (std::size_t k = 0; k < d; ++k)
                mul(k, i * d + j) = c[i][j][k];
        }
    }
    return ComponentAlgebra(std::move(mul), std::move(unit));
}

ComponentAlgebra ComponentAlgebra::ground(FieldSpec field) {
    return ComponentAlgebra(Matrix::identity(field, 1), {Scalar::one(field)});
}

ComponentAlgebra ComponentAlgebra::group_algebra(FieldSpec field, const FiniteGroup& g) {
    const std::size_t n = g.order();
    Matrix mul(field, n, n * n);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            mul(g.mul(a, b), a * n + b) = Scalar::one(field);
    return ComponentAlgebra(std::move(mul), basis_vector(field, n, g.identity()));
}

Vector ComponentAlgebra::multiply(const Vector& a, const Vector& b) const { return mat_vec(mul_, tensor(a, b)); }

Matrix ComponentAlgebra::left_mult(const Vector& a) const {
    const std::size_t d = dim();
    if (a.size() != d)
        throw Error(ErrorCode::ShapeMismatch, "element of the wrong dimension");
    Matrix m(field(), d, d);
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                m(k, j).add_product(a[i], mul_(k, i * d + j));
    }
    return m;
}

std::optional<Vector> ComponentAlgebra::inverse(const Vector& a) const {
    const auto sol = solve_linear(left_mult(a), unit_);
    if (!sol || multiply(sol->x, a) != unit_)
        return std::nullopt;
    return sol->x;
}

Report validate_algebra(const ComponentAlgebra& a, const std::string& prefix) {
    Report report;
    const std::size_t d = a.dim();
    const FieldSpec field = a.field();
    const Matrix id = Matrix::identity(field, d);

    Check assoc(prefix + "associativity");
    const Matrix lhs = mat_mul(a.mul(), kron(a.mul(), id));
    const Matrix rhs = mat_mul(a.mul(), kron(id, a.mul()));
    for (std::size_t c = 0; c < d * d * d; ++c)
        for (std::size_t k = 0; k < d; ++k)
            if (lhs(k, c) != rhs(k, c)) {
                assoc.fail("(e" + std::to_string(c / (d * d)) + " e" + std::to_string(c / d % d) + ") e" +
                           std::to_string(c % d) + " differs in coordinate " + std::to_string(k));
                break;
            }
    report.add(std::move(assoc));

    Check unit(prefix + "unit");
    for (std::size_t j = 0; j < d; ++j) {
        const Vector e = basis_vector(field, d, j);
        unit.expect(a.multiply(a.unit(), e) == e, [&] { return "1 e" + std::to_string(j) + " != e" + std::to_string(j); });
        unit.expect(a.multiply(e, a.unit()) == e, [&] { return "e" + std::to_string(j) + " 1 != e" + std::to_string(j); });
    }
    report.add(std::move(unit));
    return report;
}

GradedHopfCoalgebra::GradedHopfCoalgebra(FiniteGroup h, std::vector<ComponentAlgebra> components,
                                         std::vector<Matrix> coproduct, Matrix counit,
                                         std::optional<std::vector<Matrix>> antipode)
    : h_(std::move(h)), components_(std::move(components)), coproduct_(std::move(coproduct)),
      counit_(std::move(counit)), antipode_(std::move(antipode)) {
    const std::size_t n = h_.order();
    if (components_.size() != n)
        throw Error(ErrorCode::ShapeMismatch, "expected one component per element of H");
    for (Elem x = 0; x < n; ++x)
        if (!(components_[x].field() == counit_.field()))
            throw Error(ErrorCode::MixedFields, "component " + std::to_string(x) + " is over another field");
    if (coproduct_.size() != n * n)
        throw Error(ErrorCode::ShapeMismatch, "expected one coproduct per pair of elements of H");
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            const Matrix& d = this->coproduct(x, y);
            if (d.rows() != dim(x) * dim(y) || d.cols() != dim(h_.mul(x, y)))
                throw Error(ErrorCode::ShapeMismatch, "coproduct " + label({{"x", x}, {"y", y}}) + " has shape " +
                                                          std::to_string(d.rows()) + "x" + std::to_string(d.cols()));
            if (!(d.field() == counit_.field()))
                throw Error(ErrorCode::MixedFields, "coproduct " + label({{"x", x}, {"y", y}}));
        }
    if (counit_.rows() != 1 || counit_.cols() != dim(h_.identity()))
        throw Error(ErrorCode::ShapeMismatch, "counit must be a covector on the degree-one component");
    if (antipode_) {
        if (antipode_->size() != n)
            throw Error(ErrorCode::ShapeMismatch, "expected one antipode map per element of H");
        for (Elem x = 0; x < n; ++x) {
            const Elem xinv = h_.inverse(x);
            if (xinv >= n)
                throw Error(ErrorCode::ShapeMismatch, "antipode given but H has no inverse for " + std::to_string(x));
            const Matrix& s = (*antipode_)[x];
            if (s.rows() != dim(x) || s.cols() != dim(xinv))
                throw Error(ErrorCode::ShapeMismatch, "antipode at x=" + std::to_string(x) + " has the wrong shape");
            if (!(s.field() == counit_.field()))
                throw Error(ErrorCode::MixedFields, "antipode at x=" + std::to_string(x));
        }
    }
}

const Matrix& GradedHopfCoalgebra::antipode(Elem x) const {
    if (!antipode_)
        throw Error(ErrorCode::MissingAntipode, "no antipode present");
    return (*antipode_)[x];
}

GradedHopfCoalgebra GradedHopfCoalgebra::with_antipode(std::optional<std::vector<Matrix>> antipode) const {
    return GradedHopfCoalgebra(h_, components_, coproduct_, counit_, std::move(antipode));
}

Report validate_h_coalgebra(const GradedHopfCoalgebra& a, const ValidationOptions& opts) {
    Report report;
    const FiniteGroup& h = a.H();
    const std::size_t n = h.order();
    const FieldSpec field = a.field();

    Check coassoc("coassociativity");
    fan_out(coassoc, n * n * n, opts.jobs, [&](std::size_t t) {
        const Elem x = t / (n * n), y = t / n % n, z = t % n;
        std::vector<std::string> out;
        const Matrix lhs =
            compose_kron(a.coproduct(x, y), Matrix::identity(field, a.dim(z)), a.coproduct(h.mul(x, y), z));
        const Matrix rhs =
            compose_kron(Matrix::identity(field, a.dim(x)), a.coproduct(y, z), a.coproduct(x, h.mul(y, z)));
        compare(out, label({{"x", x}, {"y", y}, {"z", z}}), lhs, rhs);
        return out;
    });
    report.add(std::move(coassoc));

    Check counit("counit");
    const Elem one = h.identity();
    for (Elem x = 0; x < n; ++x) {
        std::vector<std::string> out;
        const Matrix id = Matrix::identity(field, a.dim(x));
        compare(out, "left, x=" + std::to_string(x), compose_kron(a.counit(), id, a.coproduct(one, x)), id);
        compare(out, "right, x=" + std::to_string(x), compose_kron(id, a.counit(), a.coproduct(x, one)), id);
        for (auto& w : out)
            counit.fail(std::move(w));
    }
    report.add(std::move(counit));
    return report;
}

namespace {

/// Product in the algebra A_x (x) A_y of two tensors.
Vector tensor_product_multiply(const ComponentAlgebra& ax, const ComponentAlgebra& ay, const Vector& u,
                               const Vector& v) {
    const std::size_t dx = ax.dim(), dy = ay.dim();
    return apply_kron(ax.mul(), ay.mul(), swap_middle(tensor(u, v), dx, dy, dx, dy));
}

std::vector<Vector> columns(const Matrix& m) {
    std::vector<Vector> out;
    out.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        out.push_back(m.column_vector(j));
    return out;
}

} // namespace

Report validate_bicoalgebra(const GradedHopfCoalgebra& a, const ValidationOptions& opts) {
    Report report;
    const FiniteGroup& h = a.H();
    const std::size_t n = h.order();
    const FieldSpec field = a.field();
    for (Elem x = 0; x < n; ++x)
        report.merge(validate_algebra(a.component(x)), "algebra A_" + std::to_string(x) + ": ");

    Check mult("coproduct multiplicative");
    fan_out(mult, n * n, opts.jobs, [&](std::size_t t) {
        const Elem x = t / n, y = t % n, xy = h.mul(x, y);
        const ComponentAlgebra& axy = a.component(xy);
        const std::size_t d = axy.dim();
        const auto delta = columns(a.coproduct(x, y));
        std::vector<std::string> out;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const Vector lhs = mat_vec(a.coproduct(x, y),
                                         axy.multiply(basis_vector(field, d, i), basis_vector(field, d, j)));
                const Vector rhs = tensor_product_multiply(a.component(x), a.component(y), delta[i], delta[j]);
                if (lhs != rhs)
                    out.push_back(label({{"x", x}, {"y", y}, {"i", i}, {"j", j}}) + ": Delta(e_i e_j) = " +
                                  to_string(lhs) + " but Delta(e_i) Delta(e_j) = " + to_string(rhs));
            }
        return out;
    });
    report.add(std::move(mult));

    Check unital("coproduct unital");
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            const Vector lhs = mat_vec(a.coproduct(x, y), a.component(h.mul(x, y)).unit());
            const Vector rhs = tensor(a.component(x).unit(), a.component(y).unit());
            unital.expect(lhs == rhs, [&] { return label({{"x", x}, {"y", y}}) + ": Delta(1) = " + to_string(lhs); });
        }
    report.add(std::move(unital));

    const ComponentAlgebra& a1 = a.component(h.identity());
    const std::size_t d1 = a1.dim();
    Check eps_mult("counit multiplicative");
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d1; ++j) {
            const Scalar lhs =
                mat_vec(a.counit(), a1.multiply(basis_vector(field, d1, i), basis_vector(field, d1, j)))[0];
            const Scalar rhs = a.counit()(0, i) * a.counit()(0, j);
            eps_mult.expect(lhs == rhs, [&] {
                return label({{"i", i}, {"j", j}}) + ": " + lhs.to_string() + " != " + rhs.to_string();
            });
        }
    report.add(std::move(eps_mult));

    Check eps_unit("counit unital");
    const Scalar e1 = mat_vec(a.counit(), a1.unit())[0];
    eps_unit.expect(e1.is_one(), [&] { return "epsilon(1) = " + e1.to_string(); });
    report.add(std::move(eps_unit));
    return report;
}

namespace {

/// mu_x (S (x) id) Delta_{x^-1,x}, the left antipode composite for a given S_x.
Matrix left_composite(const GradedHopfCoalgebra& a, Elem x, const Matrix& s) {
    const Elem xinv = a.H().inverse(x);
    return mat_mul(a.component(x).mul(),
                   compose_kron(s, Matrix::identity(a.field(), a.dim(x)), a.coproduct(xinv, x)));
}

Matrix right_composite(const GradedHopfCoalgebra& a, Elem x, const Matrix& s) {
    const Elem xinv = a.H().inverse(x);
    return mat_mul(a.component(x).mul(),
                   compose_kron(Matrix::identity(a.field(), a.dim(x)), s, a.coproduct(x, xinv)));
}

Matrix unit_counit(const GradedHopfCoalgebra& a, Elem x) {
    return mat_mul(a.component(x).unit_map(), a.counit());
}

} // namespace

std::optional<AntipodeSolution> compute_antipode(const GradedHopfCoalgebra& a) {
    const FiniteGroup& h = a.H();
    const FieldSpec field = a.field();
    const Elem one = h.identity();
    AntipodeSolution result;
    for (Elem x = 0; x < h.order(); ++x) {
        const Elem xinv = h.inverse(x);
        if (xinv >= h.order())
            return std::nullopt;
        const std::size_t dx = a.dim(x), di = a.dim(xinv), d1 = a.dim(one);
        const Matrix& delta = a.coproduct(xinv, x);
        const Matrix& mul = a.component(x).mul();
        // Unknown s_{p,b} at index p * di + b; equation (c, k) is the e_k
        // coordinate of the composite applied to basis vector c of A_1.
        Matrix sys(field, d1 * dx, dx * di);
        Vector rhs(d1 * dx, Scalar::zero(field));
        for (std::size_t c = 0; c < d1; ++c) {
            for (std::size_t b = 0; b < di; ++b)
                for (std::size_t j = 0; j < dx; ++j) {
                    const Scalar& coef = delta(b * dx + j, c);
                    if (coef.is_zero())
                        continue;
                    for (std::size_t p = 0; p < dx; ++p)
                        for (std::size_t k = 0; k < dx; ++k)
                            if (!mul(k, p * dx + j).is_zero())
                                sys(c * dx + k, p * di + b).add_product(coef, mul(k, p * dx + j));
                }
            for (std::size_t k = 0; k < dx; ++k)
                rhs[c * dx + k] = a.counit()(0, c) * a.component(x).unit()[k];
        }
        const auto sol = solve_linear(sys, rhs);
        if (!sol)
            return std::nullopt;
        Matrix s(field, dx, di);
        for (std::size_t p = 0; p < dx; ++p)
            for (std::size_t b = 0; b < di; ++b)
                s(p, b) = sol->x[p * di + b];
        result.unique = result.unique && sol->unique;
        result.maps.push_back(std::move(s));
    }
    for (Elem x = 0; x < h.order(); ++x) {
        if (right_composite(a, x, result.maps[x]) != unit_counit(a, x))
            return std::nullopt;
        if (!inverse(result.maps[x]))
            return std::nullopt;
    }
    return result;
}

Report validate_antipode(const GradedHopfCoalgebra& a) {
    if (!a.has_antipode())
        throw Error(ErrorCode::MissingAntipode, "no antipode to validate");
    Report report;
    Check left("antipode: left identity mu(S (x) id)Delta = eta epsilon");
    Check right("antipode: right identity mu(id (x) S)Delta = eta epsilon");
    for (Elem x = 0; x < a.H().order(); ++x) {
        std::vector<std::string> l, r;
        const Matrix target = unit_counit(a, x);
        compare(l, "x=" + std::to_string(x), left_composite(a, x, a.antipode(x)), target);
        compare(r, "x=" + std::to_string(x), right_composite(a, x, a.antipode(x)), target);
        for (auto& w : l)
            left.fail(std::move(w));
        for (auto& w : r)
            right.fail(std::move(w));
    }
    report.add(std::move(left));
    report.add(std::move(right));
    return report;
}

Report antipode_properties(const GradedHopfCoalgebra& a) {
    if (!a.has_antipode())
        throw Error(ErrorCode::MissingAntipode, "no antipode to check");
    Report report;
    const FiniteGroup& h = a.H();
    const std::size_t n = h.order();
    const FieldSpec field = a.field();

    Check anti_mult("antipode: anti-multiplicative");
    Check unit("antipode: S(1) = 1");
    for (Elem x = 0; x < n; ++x) {
        const Elem xinv = h.inverse(x);
        const Matrix& s = a.antipode(x);
        const std::size_t di = a.dim(xinv);
        const Matrix lhs = mat_mul(s, a.component(xinv).mul());
        const auto cols = columns(s);
        std::vector<Vector> rhs_cols;
        for (std::size_t i = 0; i < di; ++i)
            for (std::size_t j = 0; j < di; ++j)
                rhs_cols.push_back(a.component(x).multiply(cols[j], cols[i]));
        std::vector<std::string> out;
        compare(out, "x=" + std::to_string(x), lhs, from_columns(field, a.dim(x), rhs_cols));
        for (auto& w : out)
            anti_mult.fail(std::move(w));
        const Vector s1 = mat_vec(s, a.component(xinv).unit());
        unit.expect(s1 == a.component(x).unit(), [&] { return "x=" + std::to_string(x) + ": S(1) = " + to_string(s1); });
    }
    report.add(std::move(anti_mult));
    report.add(std::move(unit));

    Check anti_comult("antipode: anti-comultiplicative");
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            const Elem xinv = h.inverse(x), yinv = h.inverse(y);
            const Matrix lhs = mat_mul(a.coproduct(x, y), a.antipode(h.mul(x, y)));
            const auto delta = columns(a.coproduct(yinv, xinv));
            std::vector<Vector> flipped;
            for (const auto& c : delta)
                flipped.push_back(flip_vector(c, a.dim(yinv), a.dim(xinv)));
            const Matrix rhs = compose_kron(a.antipode(x), a.antipode(y),
                                            from_columns(field, a.dim(xinv) * a.dim(yinv), flipped));
            std::vector<std::string> out;
            compare(out, label({{"x", x}, {"y", y}}), lhs, rhs);
            for (auto& w : out)
                anti_comult.fail(std::move(w));
        }
    report.add(std::move(anti_comult));

    Check counit("antipode: epsilon S = epsilon");
    {
        std::vector<std::string> out;
        compare(out, "degree 1", mat_mul(a.counit(), a.antipode(h.identity())), a.counit());
        for (auto& w : out)
            counit.fail(std::move(w));
    }
    report.add(std::move(counit));

    Check bij("antipode: bijective");
    for (Elem x = 0; x < n; ++x)
        bij.expect(inverse(a.antipode(x)).has_value(), [&] { return "S_x singular at x=" + std::to_string(x); });
    report.add(std::move(bij));
    return report;
}

Matrix convolution_product(const GradedHopfCoalgebra& a, const ComponentAlgebra& b, const Matrix& f, Elem x,
                           const Matrix& g, Elem y) {
    if (f.cols() != a.dim(x) || g.cols() != a.dim(y) || f.rows() != b.dim() || g.rows() != b.dim())
        throw Error(ErrorCode::ShapeMismatch, "convolution factors do not match the components or target");
    return mat_mul(b.mul(), compose_kron(f, g, a.coproduct(x, y)));
}

Report grouplike_report(const GradedHopfCoalgebra& a, const GrouplikeFamily& g) {
    Report report;
    const FiniteGroup& h = a.H();
    Check shape("grouplike: shape");
    shape.expect(g.size() == h.order(), [&] { return "family has " + std::to_string(g.size()) + " components"; });
    for (Elem x = 0; x < g.size() && x < h.order(); ++x)
        shape.expect(g[x].size() == a.dim(x), [&] { return "component " + std::to_string(x) + " has the wrong length"; });
    const bool shape_ok = shape.violations() == 0;
    report.add(std::move(shape));

    Check coproduct("grouplike: Delta(G_xy) = G_x (x) G_y");
    Check counit("grouplike: epsilon(G_1) = 1");
    if (!shape_ok) {
        coproduct.skip("bad shape");
        counit.skip("bad shape");
    } else {
        for (Elem x = 0; x < h.order(); ++x)
            for (Elem y = 0; y < h.order(); ++y)
                coproduct.expect(mat_vec(a.coproduct(x, y), g[h.mul(x, y)]) == tensor(g[x], g[y]),
                                 [&] { return label({{"x", x}, {"y", y}}); });
        const Scalar e = mat_vec(a.counit(), g[h.identity()])[0];
        counit.expect(e.is_one(), [&] { return "epsilon(G_1) = " + e.to_string(); });
    }
    report.add(std::move(coproduct));
    report.add(std::move(counit));
    return report;
}

bool is_grouplike(const GradedHopfCoalgebra& a, const GrouplikeFamily& g) { return grouplike_report(a, g).ok(); }

GrouplikeFamily grouplike_inverse(const GradedHopfCoalgebra& a, const GrouplikeFamily& g) {
    if (!is_grouplike(a, g))
        throw Error(ErrorCode::NotGrouplike, "family is not grouplike");
    const FiniteGroup& h = a.H();
    GrouplikeFamily inv;
    for (Elem x = 0; x < h.order(); ++x) {
        Vector k = mat_vec(a.antipode(x), g[h.inverse(x)]);
        const ComponentAlgebra& ax = a.component(x);
        if (ax.multiply(g[x], k) != ax.unit() || ax.multiply(k, g[x]) != ax.unit())
            throw Error(ErrorCode::NotGrouplike, "S_x(G_{x^-1}) does not invert G_x at x=" + std::to_string(x));
        inv.push_back(std::move(k));
    }
    return inv;
}

GrouplikeFamily grouplike_product(const GradedHopfCoalgebra& a, const GrouplikeFamily& g, const GrouplikeFamily& k) {
    GrouplikeFamily out;
    for (Elem x = 0; x < a.H().order(); ++x)
        out.push_back(a.component(x).multiply(g.at(x), k.at(x)));
    return out;
}

GrouplikeFamily unit_family(const GradedHopfCoalgebra& a) {
    GrouplikeFamily out;
    for (const auto& c : a.components())
        out.push_back(c.unit());
    return out;
}

std::vector<GrouplikeFamily> enumerate_grouplikes(const GradedHopfCoalgebra& a) {
    const FiniteGroup& h = a.H();
    const std::size_t n = h.order();
    const FieldSpec field = a.field();
    const Elem one = h.identity();

    std::vector<std::vector<Vector>> candidates(n);
    for (Elem x = 0; x < n; ++x) {
        auto& list = candidates[x];
        auto push = [&](Vector v) {
            if (std::find(list.begin(), list.end(), v) == list.end())
                list.push_back(std::move(v));
        };
        const Vector& u = a.component(x).unit();
        push(u);
        push(scale(u, Scalar(field, -1L)));
        for (std::size_t i = 0; i < a.dim(x); ++i) {
            push(basis_vector(field, a.dim(x), i));
            push(scale(basis_vector(field, a.dim(x), i), Scalar(field, -1L)));
        }
    }

    // Components are assigned in the order 1, then the others ascending.
    std::vector<Elem> order{one};
    for (Elem x = 0; x < n; ++x)
        if (x != one)
            order.push_back(x);

    std::vector<GrouplikeFamily> found;
    GrouplikeFamily current(n);
    std::vector<bool> assigned(n, false);

    auto consistent = [&](Elem x) {
        for (Elem u = 0; u < n; ++u) {
            if (!assigned[u])
                continue;
            for (Elem v = 0; v < n; ++v) {
                if (!assigned[v] || !assigned[h.mul(u, v)])
                    continue;
                if (u != x && v != x && h.mul(u, v) != x)
                    continue;
                if (mat_vec(a.coproduct(u, v), current[h.mul(u, v)]) != tensor(current[u], current[v]))
                    return false;
            }
        }
        return true;
    };

    auto search = [&](auto&& self, std::size_t depth) -> void {
        if (depth == n) {
            found.push_back(current);
            return;
        }
        const Elem x = order[depth];
        for (const auto& c : candidates[x]) {
            if (x == one && !mat_vec(a.counit(), c)[0].is_one())
                continue;
            current[x] = c;
            assigned[x] = true;
            if (consistent(x))
                self(self, depth + 1);
            assigned[x] = false;
        }
    };
    search(search, 0);

    // Canonical order: lexicographic in x by candidate index.
    auto key = [&](const GrouplikeFamily& g) {
        std::vector<std::size_t> k;
        for (Elem x = 0; x < n; ++x)
            k.push_back(static_cast<std::size_t>(std::find(candidates[x].begin(), candidates[x].end(), g[x]) -
                                                 candidates[x].begin()));
        return k;
    };
    std::sort(found.begin(), found.end(), [&](const auto& l, const auto& r) { return key(l) < key(r); });
    return found;
}

Report is_pivotal_element(const GradedHopfCoalgebra& a, const GrouplikeFamily& g) {
    const GrouplikeFamily ginv = grouplike_inverse(a, g);
    const FiniteGroup& h = a.H();
    const FieldSpec field = a.field();
    Report report;
    Check pivotal("pivotal: S_x S_{x^-1}(a) = G_x a G_x^-1");
    for (Elem x = 0; x < h.order(); ++x) {
        const ComponentAlgebra& ax = a.component(x);
        const Matrix s2 = mat_mul(a.antipode(x), a.antipode(h.inverse(x)));
        for (std::size_t i = 0; i < ax.dim(); ++i) {
            const Vector e = basis_vector(field, ax.dim(), i);
            const Vector rhs = ax.multiply(ax.multiply(g[x], e), ginv[x]);
            pivotal.expect(s2.column_vector(i) == rhs, [&] {
                return label({{"x", x}, {"basis", i}}) + ": S^2 gives " + to_string(s2.column_vector(i)) +
                       ", conjugation gives " + to_string(rhs);
            });
        }
    }
    report.add(std::move(pivotal));
    return report;
}

GradedHopfCoalgebra degree_one_part(const GradedHopfCoalgebra& a) {
    const Elem one = a.H().identity();
    std::optional<std::vector<Matrix>> s;
    if (a.has_antipode())
        s = std::vector<Matrix>{a.antipode(one)};
    return GradedHopfCoalgebra(FiniteGroup(), {a.component(one)}, {a.coproduct(one, one)}, a.counit(), std::move(s));
}

} // namespace xhopf
