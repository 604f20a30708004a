#include "xhopf/hopf_module.hpp"

#include <string>
#include <utility>

#include "check_util.hpp"
#include "parallel.hpp"
#include "xhopf/error.hpp"

namespace xhopf {

using detail::compare;
using detail::fan_out;
using detail::label;

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

Matrix assemble(FieldSpec field, const std::vector<SparseRow>& rows, std::size_t cols) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r])
            m(r, c) = m(r, c) + v;
    return m;
}

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const std::string& what) {
    if (m.rows() != rows || m.cols() != cols)
        throw Error(ErrorCode::ShapeMismatch, what + " has shape " + std::to_string(m.rows()) + "x" +
                                                  std::to_string(m.cols()) + ", expected " + std::to_string(rows) +
                                                  "x" + std::to_string(cols));
}

void require_fits(const HopfXiCoalgebra& a, const HopfXiModule& m) {
    const FiniteGroup& h = a.H();
    const std::size_t n = h.order(), ne = a.E().order();
    if (m.dims.size() != n || m.action.size() != n)
        throw Error(ErrorCode::ShapeMismatch, "module needs one component per element of H");
    if (m.coaction.size() != n * n)
        throw Error(ErrorCode::ShapeMismatch, "module needs one coaction per pair (x, y)");
    if (m.psi.size() != n * ne)
        throw Error(ErrorCode::ShapeMismatch, "module needs one psi per pair (x, e)");
    for (Elem x = 0; x < n; ++x) {
        require_shape(m.action[x], m.dims[x], a.dim(x) * m.dims[x], "action " + std::to_string(x));
        for (Elem y = 0; y < n; ++y)
            require_shape(m.coaction[x * n + y], a.dim(x) * m.dims[y], m.dims[h.mul(x, y)],
                          "coaction " + label({{"x", x}, {"y", y}}));
        for (Elem e = 0; e < ne; ++e)
            require_shape(m.psi[x * ne + e], m.dims[a.cm().shift(e, x)], m.dims[x],
                          "psi " + label({{"x", x}, {"e", e}}));
    }
}

const Matrix& rho(const HopfXiCoalgebra& a, const HopfXiModule& m, Elem x, Elem y) {
    return m.coaction[x * a.H().order() + y];
}

const Matrix& psi(const HopfXiCoalgebra& a, const HopfXiModule& m, Elem x, Elem e) {
    return m.psi[x * a.E().order() + e];
}

void add_check(Report& report, Check check) { report.add(std::move(check)); }

std::string first_failure(const Report& r) {
    for (const auto& c : r.checks())
        if (c.status() == CheckStatus::fail)
            return c.name();
    return {};
}

// Coordinates of the unknown lambda_x start at offset[x].
std::vector<std::size_t> offsets(const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> off(dims.size() + 1, 0);
    for (std::size_t x = 0; x < dims.size(); ++x)
        off[x + 1] = off[x] + dims[x];
    return off;
}

std::vector<std::size_t> component_dims(const HopfXiCoalgebra& a) {
    std::vector<std::size_t> d;
    for (Elem x = 0; x < a.H().order(); ++x)
        d.push_back(a.dim(x));
    return d;
}

} // namespace

Report validate_hopf_xi_module(const HopfXiCoalgebra& a, const HopfXiModule& m, const ValidationOptions& opts) {
    require_fits(a, m);
    const FiniteGroup& h = a.H();
    const FiniteGroup& eg = a.E();
    const CrossedModule& cm = a.cm();
    const std::size_t n = h.order(), ne = eg.order();
    const FieldSpec field = a.field();
    auto id = [&](std::size_t d) { return Matrix::identity(field, d); };

    Report report = validate_module(a, m.underlying());

    Check coassoc("comodule: coassociativity (Delta_{x,y} (x) id) rho_{xy,z} = (id (x) rho_{y,z}) rho_{x,yz}");
    fan_out(coassoc, n * n * n, opts.jobs, [&](std::size_t t) {
        const Elem x = t / (n * n), y = t / n % n, z = t % n;
        std::vector<std::string> out;
        const Matrix lhs = compose_kron(a.base().coproduct(x, y), id(m.dims[z]), rho(a, m, h.mul(x, y), z));
        const Matrix rhs = compose_kron(id(a.dim(x)), rho(a, m, y, z), rho(a, m, x, h.mul(y, z)));
        compare(out, label({{"x", x}, {"y", y}, {"z", z}}), lhs, rhs);
        return out;
    });
    add_check(report, std::move(coassoc));

    Check counit("comodule: counit (epsilon (x) id) rho_{1,x} = id");
    for (Elem x = 0; x < n; ++x) {
        std::vector<std::string> out;
        compare(out, "x=" + std::to_string(x), compose_kron(a.base().counit(), id(m.dims[x]), rho(a, m, h.identity(), x)),
                id(m.dims[x]));
        for (auto& w : out)
            counit.fail(std::move(w));
    }
    add_check(report, std::move(counit));

    Check compat("coaction is linear: rho_{x,y} r_{xy} = (mu_x (x) r_y)(id (x) flip (x) id)(Delta_{x,y} (x) rho_{x,y})");
    fan_out(compat, n * n, opts.jobs, [&](std::size_t t) {
        const Elem x = t / n, y = t % n, xy = h.mul(x, y);
        const std::size_t dx = a.dim(x), dy = a.dim(y), mxy = m.dims[xy];
        const Matrix& r = rho(a, m, x, y);
        const Matrix& delta = a.base().coproduct(x, y);
        std::vector<std::string> out;
        for (std::size_t i = 0; i < a.dim(xy); ++i)
            for (std::size_t k = 0; k < mxy; ++k) {
                const Vector lhs = mat_vec(r, m.action[xy].column_vector(i * mxy + k));
                const Vector both = tensor(delta.column_vector(i), r.column_vector(k));
                const Vector rhs =
                    apply_kron(a.base().component(x).mul(), m.action[y], swap_middle(both, dx, dy, dx, m.dims[y]));
                if (lhs != rhs)
                    out.push_back(label({{"x", x}, {"y", y}, {"a", i}, {"m", k}}));
            }
        return out;
    });
    add_check(report, std::move(compat));

    Check unit("psi: psi_{x,1} = id");
    Check comp("psi: psi_{xi(e)x,f} psi_{x,e} = psi_{x,fe}");
    Check act("psi: psi_{x,e} r_x = r_{xi(e)x}(phi_{x,e} (x) psi_{x,e})");
    for (Elem x = 0; x < n; ++x) {
        std::vector<std::string> u;
        compare(u, "x=" + std::to_string(x), psi(a, m, x, eg.identity()), id(m.dims[x]));
        for (auto& w : u)
            unit.fail(std::move(w));
        for (Elem e = 0; e < ne; ++e) {
            const Elem y = cm.shift(e, x);
            const Matrix& p = psi(a, m, x, e);
            std::vector<std::string> c;
            compare(c, label({{"x", x}, {"e", e}}), mat_mul(p, m.action[x]), mat_mul(m.action[y], kron(a.phi(x, e), p)));
            for (auto& w : c)
                act.fail(std::move(w));
            for (Elem f = 0; f < ne; ++f) {
                std::vector<std::string> d;
                compare(d, label({{"x", x}, {"e", e}, {"f", f}}), mat_mul(psi(a, m, y, f), p),
                        psi(a, m, x, eg.mul(f, e)));
                for (auto& w : d)
                    comp.fail(std::move(w));
            }
        }
    }
    add_check(report, std::move(unit));
    add_check(report, std::move(comp));
    add_check(report, std::move(act));

    Check coact("psi: (phi_{x,e} (x) psi_{y,f}) rho_{x,y} = rho_{xi(e)x,xi(f)y} psi_{xy,e.x(f)}");
    fan_out(coact, n * n * ne * ne, opts.jobs, [&](std::size_t t) {
        const Elem x = t / (n * ne * ne), y = t / (ne * ne) % n, e = t / ne % ne, f = t % ne;
        std::vector<std::string> out;
        const Matrix lhs = compose_kron(a.phi(x, e), psi(a, m, y, f), rho(a, m, x, y));
        const Matrix rhs = mat_mul(rho(a, m, cm.shift(e, x), cm.shift(f, y)),
                                   psi(a, m, h.mul(x, y), eg.mul(e, cm.act(x, f))));
        compare(out, label({{"x", x}, {"y", y}, {"e", e}, {"f", f}}), lhs, rhs);
        return out;
    });
    add_check(report, std::move(coact));
    return report;
}

HopfXiModule trivial_hopf_module(const HopfXiCoalgebra& a, std::size_t v_dim) {
    const FiniteGroup& h = a.H();
    const Matrix iv = Matrix::identity(a.field(), v_dim);
    HopfXiModule m;
    for (Elem x = 0; x < h.order(); ++x) {
        m.dims.push_back(a.dim(x) * v_dim);
        m.action.push_back(kron(a.base().component(x).mul(), iv));
    }
    for (const auto& d : a.base().coproducts())
        m.coaction.push_back(kron(d, iv));
    for (const auto& p : a.phis())
        m.psi.push_back(kron(p, iv));
    return m;
}

namespace {

Matrix coinvariant_system(const HopfXiCoalgebra& a, const HopfXiModule& m) {
    const FiniteGroup& h = a.H();
    const FiniteGroup& eg = a.E();
    const FieldSpec field = a.field();
    const std::size_t n = h.order();
    const auto off = offsets(m.dims);
    std::vector<SparseRow> rows;
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            const Elem xy = h.mul(x, y);
            const Matrix& r = rho(a, m, x, y);
            const Vector& one = a.base().component(x).unit();
            const std::size_t my = m.dims[y];
            for (std::size_t row = 0; row < r.rows(); ++row) {
                SparseRow eq;
                for (std::size_t c = 0; c < r.cols(); ++c)
                    if (!r(row, c).is_zero())
                        eq.emplace_back(off[xy] + c, r(row, c));
                const Scalar& u = one[row / my];
                if (!u.is_zero())
                    eq.emplace_back(off[y] + row % my, -u);
                rows.push_back(std::move(eq));
            }
        }
    for (Elem x = 0; x < n; ++x)
        for (Elem e = 0; e < eg.order(); ++e) {
            const Elem y = a.cm().shift(e, x);
            const Matrix& p = psi(a, m, x, e);
            for (std::size_t row = 0; row < p.rows(); ++row) {
                SparseRow eq;
                for (std::size_t c = 0; c < p.cols(); ++c)
                    if (!p(row, c).is_zero())
                        eq.emplace_back(off[x] + c, p(row, c));
                eq.emplace_back(off[y] + row, -Scalar::one(field));
                rows.push_back(std::move(eq));
            }
        }
    return assemble(field, rows, off.back());
}

std::vector<Vector> split(const Vector& v, const std::vector<std::size_t>& dims) {
    std::vector<Vector> out;
    std::size_t pos = 0;
    for (std::size_t d : dims) {
        out.emplace_back(v.begin() + pos, v.begin() + pos + d);
        pos += d;
    }
    return out;
}

Vector join(const std::vector<Vector>& parts) {
    Vector out;
    for (const auto& p : parts)
        out.insert(out.end(), p.begin(), p.end());
    return out;
}

} // namespace

CoinvariantsBasis coinvariants(const HopfXiCoalgebra& a, const HopfXiModule& m) {
    require_fits(a, m);
    CoinvariantsBasis out;
    for (const Vector& v : kernel_basis(coinvariant_system(a, m)))
        out.push_back(split(v, m.dims));
    return out;
}

bool is_coinvariant(const HopfXiCoalgebra& a, const HopfXiModule& m, const std::vector<Vector>& family) {
    require_fits(a, m);
    if (family.size() != m.dims.size())
        return false;
    for (std::size_t x = 0; x < family.size(); ++x)
        if (family[x].size() != m.dims[x])
            return false;
    return is_zero(mat_vec(coinvariant_system(a, m), join(family)));
}

StructureIso structure_iso(const HopfXiCoalgebra& a, const HopfXiModule& m) {
    require_fits(a, m);
    const FiniteGroup& h = a.H();
    const FieldSpec field = a.field();
    const GradedHopfCoalgebra& b = a.base();
    if (!b.has_antipode())
        throw Error(ErrorCode::MissingAntipode, "the structure theorem needs an antipode");
    const std::size_t n = h.order();
    const Elem one = h.identity();

    StructureIso out;
    out.basis = coinvariants(a, m);
    const std::size_t c = out.basis.size();

    for (Elem x = 0; x < n; ++x) {
        const std::size_t dx = a.dim(x), mx = m.dims[x];
        Matrix eps(field, mx, dx * c);
        for (std::size_t i = 0; i < dx; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                const Vector v = mat_vec(m.action[x], tensor(basis_vector(field, dx, i), out.basis[j][x]));
                for (std::size_t r = 0; r < mx; ++r)
                    eps(r, i * c + j) = v[r];
            }
        out.epsilon.push_back(std::move(eps));
    }

    // pi: M_1 -> M^coA in coordinates of the basis.
    const std::size_t m1 = m.dims[one];
    std::vector<Vector> stacked_basis;
    for (const auto& fam : out.basis)
        stacked_basis.push_back(join(fam));
    std::size_t total = 0;
    for (std::size_t d : m.dims)
        total += d;
    const Matrix basis_matrix = from_columns(field, total, stacked_basis);
    std::vector<Matrix> pi_parts;
    for (Elem z = 0; z < n; ++z)
        pi_parts.push_back(mat_mul(m.action[z], compose_kron(b.antipode(z), Matrix::identity(field, m.dims[z]),
                                                              rho(a, m, h.inverse(z), z))));
    Matrix coords(field, c, m1);
    for (std::size_t k = 0; k < m1; ++k) {
        Vector image;
        for (const auto& part : pi_parts) {
            const Vector col = part.column_vector(k);
            image.insert(image.end(), col.begin(), col.end());
        }
        const auto sol = solve_linear(basis_matrix, image);
        if (!sol)
            throw Error(ErrorCode::NotInvertible,
                        "pi sends basis vector " + std::to_string(k) + " of M_1 outside the coinvariants");
        for (std::size_t j = 0; j < c; ++j)
            coords(j, k) = sol->x[j];
    }

    for (Elem x = 0; x < n; ++x) {
        const std::size_t dx = a.dim(x), mx = m.dims[x];
        Matrix nu = compose_kron(Matrix::identity(field, dx), coords, rho(a, m, x, one));
        std::vector<std::string> diff;
        compare(diff, "epsilon nu", mat_mul(out.epsilon[x], nu), Matrix::identity(field, mx));
        compare(diff, "nu epsilon", mat_mul(nu, out.epsilon[x]), Matrix::identity(field, dx * c));
        if (!diff.empty())
            throw Error(ErrorCode::NotInvertible, "component " + std::to_string(x) + ": " + diff.front());
        out.nu.push_back(std::move(nu));
    }
    return out;
}

Report check_integral(const HopfXiCoalgebra& a, const XiIntegral& l) {
    const FiniteGroup& h = a.H();
    const FiniteGroup& eg = a.E();
    const std::size_t n = h.order();
    if (l.lambda.size() != n)
        throw Error(ErrorCode::ShapeMismatch, "integral needs one covector per element of H");
    for (Elem x = 0; x < n; ++x)
        if (l.lambda[x].size() != a.dim(x))
            throw Error(ErrorCode::ShapeMismatch, "covector " + std::to_string(x) + " has the wrong length");
    const FieldSpec field = a.field();
    Report report;
    const bool left = l.side == Side::left;
    Check cond(left ? "integral: (id (x) lambda_y) Delta_{x,y} = eta_x lambda_{xy}"
                    : "integral: (lambda_x (x) id) Delta_{x,y} = eta_y lambda_{xy}");
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            const Elem xy = h.mul(x, y);
            const Matrix& delta = a.base().coproduct(x, y);
            const Matrix lam_x = Matrix::row(field, l.lambda[x]);
            const Matrix lam_y = Matrix::row(field, l.lambda[y]);
            const Matrix lhs = left ? compose_kron(Matrix::identity(field, a.dim(x)), lam_y, delta)
                                    : compose_kron(lam_x, Matrix::identity(field, a.dim(y)), delta);
            const Matrix rhs = mat_mul(a.base().component(left ? x : y).unit_map(), Matrix::row(field, l.lambda[xy]));
            std::vector<std::string> out;
            compare(out, label({{"x", x}, {"y", y}}), lhs, rhs);
            for (auto& w : out)
                cond.fail(std::move(w));
        }
    report.add(std::move(cond));
    Check inv("integral: lambda_{xi(e)x} phi_{x,e} = lambda_x");
    for (Elem x = 0; x < n; ++x)
        for (Elem e = 0; e < eg.order(); ++e) {
            const Vector lhs = mat_vec(a.phi(x, e).transpose(), l.lambda[a.cm().shift(e, x)]);
            inv.expect(lhs == l.lambda[x], [&] { return label({{"x", x}, {"e", e}}); });
        }
    report.add(std::move(inv));
    return report;
}

std::vector<XiIntegral> integral_space(const HopfXiCoalgebra& a, Side side, const ValidationOptions& opts) {
    const FiniteGroup& h = a.H();
    const FiniteGroup& eg = a.E();
    const FieldSpec field = a.field();
    const std::size_t n = h.order(), ne = eg.order();
    const auto dims = component_dims(a);
    const auto off = offsets(dims);
    const bool left = side == Side::left;

    std::vector<std::vector<SparseRow>> parts(n * n + n * ne);
    detail::parallel_for(n * n, opts.jobs, [&](std::size_t t) {
        const Elem x = t / n, y = t % n, xy = h.mul(x, y);
        const Matrix& delta = a.base().coproduct(x, y);
        const std::size_t dx = dims[x], dy = dims[y];
        // Unknown coordinate of lambda_y (left) or lambda_x (right).
        const Elem v = left ? y : x;
        const Vector& unit = a.base().component(left ? x : y).unit();
        const std::size_t out_dim = left ? dx : dy;
        auto& rows = parts[t];
        for (std::size_t k = 0; k < dims[xy]; ++k)
            for (std::size_t o = 0; o < out_dim; ++o) {
                SparseRow eq;
                const std::size_t other = left ? dy : dx;
                for (std::size_t s = 0; s < other; ++s) {
                    const std::size_t row = left ? o * dy + s : s * dy + o;
                    if (!delta(row, k).is_zero())
                        eq.emplace_back(off[v] + s, delta(row, k));
                }
                if (!unit[o].is_zero())
                    eq.emplace_back(off[xy] + k, -unit[o]);
                if (!eq.empty())
                    rows.push_back(std::move(eq));
            }
    });
    detail::parallel_for(n * ne, opts.jobs, [&](std::size_t t) {
        const Elem x = t / ne, e = t % ne, y = a.cm().shift(e, x);
        const Matrix& p = a.phi(x, e);
        auto& rows = parts[n * n + t];
        for (std::size_t k = 0; k < dims[x]; ++k) {
            SparseRow eq;
            for (std::size_t j = 0; j < dims[y]; ++j)
                if (!p(j, k).is_zero())
                    eq.emplace_back(off[y] + j, p(j, k));
            eq.emplace_back(off[x] + k, -Scalar::one(field));
            rows.push_back(std::move(eq));
        }
    });
    std::vector<SparseRow> rows;
    for (auto& part : parts)
        for (auto& r : part)
            rows.push_back(std::move(r));

    std::vector<XiIntegral> out;
    for (const Vector& v : kernel_basis(assemble(field, rows, off.back())))
        out.push_back({side, split(v, dims)});
    return out;
}

XiIntegral antipode_transport(const HopfXiCoalgebra& a, const XiIntegral& l) {
    const GradedHopfCoalgebra& b = a.base();
    if (!b.has_antipode())
        throw Error(ErrorCode::MissingAntipode, "transport needs an antipode");
    if (l.side != Side::left)
        throw Error(ErrorCode::NotIntegral, "expected a left integral");
    const Report r = check_integral(a, l);
    if (!r.ok())
        throw Error(ErrorCode::NotIntegral, "input fails '" + first_failure(r) + "'");
    bool nonzero = false;
    for (const auto& v : l.lambda)
        nonzero = nonzero || !is_zero(v);
    if (!nonzero)
        throw Error(ErrorCode::NotIntegral, "the zero family");
    const FiniteGroup& h = a.H();
    XiIntegral out{Side::right, {}};
    for (Elem x = 0; x < h.order(); ++x) {
        const Elem xinv = h.inverse(x);
        out.lambda.push_back(mat_vec(b.antipode(xinv).transpose(), l.lambda[xinv]));
    }
    const Report check = check_integral(a, out);
    if (!check.ok())
        throw Error(ErrorCode::AxiomCheckFailed, "transported family is not a right integral");
    return out;
}

GrouplikeFamily distinguished_grouplike(const HopfXiCoalgebra& a, const ValidationOptions& opts) {
    const FiniteGroup& h = a.H();
    const FieldSpec field = a.field();
    const GradedHopfCoalgebra& b = a.base();
    const std::size_t n = h.order();
    const Elem one = h.identity();
    const auto integrals = integral_space(a, Side::right, opts);
    if (integrals.empty())
        throw Error(ErrorCode::DefiningIdentityFailed, "no nonzero right integral");
    const auto& lam = integrals.front().lambda;

    auto from_integral = [&](const GradedHopfCoalgebra& c, const std::vector<Vector>& l, Elem x) {
        std::size_t k = 0;
        while (k < l[x].size() && l[x][k].is_zero())
            ++k;
        if (k == l[x].size())
            throw Error(ErrorCode::DefiningIdentityFailed, "lambda_" + std::to_string(x) + " vanishes");
        const std::size_t dx = c.dim(x), d1 = c.dim(c.H().identity());
        const Matrix& delta = c.coproduct(x, c.H().identity());
        Vector g(dx, Scalar::zero(field));
        for (std::size_t i = 0; i < dx; ++i)
            for (std::size_t j = 0; j < d1; ++j)
                if (!delta(i * d1 + j, k).is_zero())
                    g[i] = g[i] + delta(i * d1 + j, k) * l[c.H().identity()][j];
        return scale(g, l[x][k].inv());
    };

    GrouplikeFamily g;
    for (Elem x = 0; x < n; ++x)
        g.push_back(from_integral(b, lam, x));

    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            const Matrix lhs =
                compose_kron(Matrix::identity(field, a.dim(x)), Matrix::row(field, lam[y]), b.coproduct(x, y));
            const Matrix rhs = mat_mul(Matrix::column(field, g[x]), Matrix::row(field, lam[h.mul(x, y)]));
            if (auto d = first_difference(lhs, rhs))
                throw Error(ErrorCode::DefiningIdentityFailed,
                            "(id (x) lambda_y) Delta_{x,y} != g_x lambda_{xy} at " + label({{"x", x}, {"y", y}}) +
                                ": " + *d);
        }
    if (!is_grouplike(b, g) || !is_xi_grouplike(a, g))
        throw Error(ErrorCode::DefiningIdentityFailed, "g is not a Xi-grouplike family");

    const GradedHopfCoalgebra classical = degree_one_part(b);
    const HopfXiCoalgebra classical_xi(CrossedModule(), classical, {Matrix::identity(field, classical.dim(0))});
    const auto classical_integrals = integral_space(classical_xi, Side::right, opts);
    if (classical_integrals.size() != 1)
        throw Error(ErrorCode::DefiningIdentityFailed, "degree-one part has " +
                                                           std::to_string(classical_integrals.size()) +
                                                           " independent right integrals");
    const Vector g1 = from_integral(classical, classical_integrals.front().lambda, 0);
    if (g1 != g[one])
        throw Error(ErrorCode::DefiningIdentityFailed,
                    "g_1 = " + to_string(g[one]) + " differs from the distinguished grouplike " + to_string(g1) +
                        " of the degree-one Hopf algebra");
    return g;
}

HopfXiModule dual_hopf_module(const HopfXiCoalgebra& a, const ValidationOptions& opts) {
    const FiniteGroup& h = a.H();
    const FiniteGroup& eg = a.E();
    const CrossedModule& cm = a.cm();
    const GradedHopfCoalgebra& b = a.base();
    const FieldSpec field = a.field();
    if (!b.has_antipode())
        throw Error(ErrorCode::MissingAntipode, "the dual Hopf module needs an antipode");
    const std::size_t n = h.order(), ne = eg.order();

    HopfXiModule m;
    for (Elem x = 0; x < n; ++x) {
        const Elem xinv = h.inverse(x);
        const std::size_t dm = a.dim(xinv);
        const ComponentAlgebra& alg = b.component(xinv);
        const Matrix& s = b.antipode(xinv);
        Matrix r(field, dm, a.dim(x) * dm);
        for (std::size_t i = 0; i < a.dim(x); ++i) {
            const Matrix act = alg.left_mult(s.column_vector(i)).transpose();
            for (std::size_t p = 0; p < dm; ++p)
                for (std::size_t q = 0; q < dm; ++q)
                    r(p, i * dm + q) = act(p, q);
        }
        m.dims.push_back(dm);
        m.action.push_back(std::move(r));
    }
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            const Elem xy = h.mul(x, y);
            const Matrix& d = b.coproduct(h.inverse(xy), x);
            const std::size_t dx = a.dim(x), my = m.dims[y], mxy = m.dims[xy];
            Matrix rho(field, dx * my, mxy);
            for (std::size_t k = 0; k < mxy; ++k)
                for (std::size_t i = 0; i < dx; ++i)
                    for (std::size_t j = 0; j < my; ++j)
                        rho(i * my + j, k) = d(k * dx + i, j);
            m.coaction.push_back(std::move(rho));
        }
    for (Elem x = 0; x < n; ++x)
        for (Elem e = 0; e < ne; ++e) {
            const Elem xinv = h.inverse(x);
            m.psi.push_back(a.phi(h.inverse(cm.shift(e, x)), cm.act(xinv, e)).transpose());
        }

    const Report report = validate_hopf_xi_module(a, m, opts);
    for (const auto& c : report.checks())
        if (c.status() == CheckStatus::fail)
            throw Error(ErrorCode::AxiomCheckFailed,
                        "dual Hopf module fails '" + c.name() + "'" +
                            (c.witnesses().empty() ? std::string() : ": " + c.witnesses().front()));
    const auto co = coinvariants(a, m);
    const auto integrals = integral_space(a, Side::right, opts);
    if (co.size() != integrals.size())
        throw Error(ErrorCode::AxiomCheckFailed, "coinvariants have dimension " + std::to_string(co.size()) +
                                                     " but right integrals " + std::to_string(integrals.size()));
    for (const auto& l : integrals) {
        std::vector<Vector> family;
        for (Elem x = 0; x < n; ++x)
            family.push_back(l.lambda[h.inverse(x)]);
        if (!is_coinvariant(a, m, family))
            throw Error(ErrorCode::AxiomCheckFailed, "a right integral does not give a coinvariant");
    }
    return m;
}

} // namespace xhopf
