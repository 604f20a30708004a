#include "xhopf/modules.hpp"

#include <numeric>
#include <string>

#include "check_util.hpp"
#include "parallel.hpp"
#include "xhopf/error.hpp"

namespace xhopf {

using detail::compare;
using detail::label;

namespace {

void require_fits(const HopfXiCoalgebra& a, const AModule& m) {
    const std::size_t n = a.H().order();
    if (m.dims.size() != n || m.action.size() != n)
        throw Error(ErrorCode::ShapeMismatch, "module needs one component per element of H");
    for (Elem x = 0; x < n; ++x) {
        const Matrix& r = m.action[x];
        if (r.rows() != m.dims[x] || r.cols() != a.dim(x) * m.dims[x])
            throw Error(ErrorCode::ShapeMismatch, "action on component " + std::to_string(x) + " has shape " +
                                                      std::to_string(r.rows()) + "x" + std::to_string(r.cols()));
        if (!r.empty() && !(r.field() == a.field()))
            throw Error(ErrorCode::MixedFields, "action on component " + std::to_string(x));
    }
}

// Matrix of m |-> r(e_p (x) m) for the basis vector e_p.
Matrix basis_action(const Matrix& r, std::size_t p, std::size_t dim, FieldSpec field) {
    Matrix out(field, dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = 0; k < dim; ++k)
            out(i, k) = r(i, p * dim + k);
    return out;
}

std::vector<Matrix> basis_actions(const HopfXiCoalgebra& a, const AModule& m, Elem x) {
    std::vector<Matrix> out;
    for (std::size_t p = 0; p < a.dim(x); ++p)
        out.push_back(basis_action(m.action[x], p, m.dims[x], a.field()));
    return out;
}

Matrix combine(const std::vector<Matrix>& basis, const Vector& coeffs, std::size_t dim, FieldSpec field) {
    Matrix out(field, dim, dim);
    for (std::size_t p = 0; p < coeffs.size(); ++p)
        if (!coeffs[p].is_zero())
            out = out + basis[p] * coeffs[p];
    return out;
}

// Writes the matrices of the basis of A_x into an action matrix.
Matrix assemble_action(const std::vector<Matrix>& per_basis, std::size_t dim, FieldSpec field) {
    Matrix r(field, dim, per_basis.size() * dim);
    for (std::size_t p = 0; p < per_basis.size(); ++p)
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t k = 0; k < dim; ++k)
                r(i, p * dim + k) = per_basis[p](i, k);
    return r;
}

void place(Matrix& target, const Matrix& block, std::size_t row, std::size_t col) {
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j)
            target(row + i, col + j) = block(i, j);
}

Elem homogeneous_degree(const AModule& m, const char* what) {
    const auto s = m.support();
    if (s.size() != 1)
        throw Error(ErrorCode::NotHomogeneous,
                    std::string(what) + " has " + std::to_string(s.size()) + " nonzero components, expected one");
    return s.front();
}

GradedHom zero_hom(const HopfXiCoalgebra& a, const AModule& src, const AModule& dst, Elem e) {
    GradedHom f{e, {}};
    for (Elem x = 0; x < a.H().order(); ++x)
        f.blocks.emplace_back(a.field(), dst.dims[a.cm().shift(e, x)], src.dims[x]);
    return f;
}

} // namespace

std::size_t AModule::total_dim() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

std::vector<Elem> AModule::support() const {
    std::vector<Elem> out;
    for (Elem x = 0; x < dims.size(); ++x)
        if (dims[x] != 0)
            out.push_back(x);
    return out;
}

Matrix action_of(const HopfXiCoalgebra& a, const AModule& m, Elem x, const Vector& elem) {
    return combine(basis_actions(a, m, x), elem, m.dims[x], a.field());
}

Report validate_module(const HopfXiCoalgebra& a, const AModule& m) {
    require_fits(a, m);
    const FieldSpec field = a.field();
    Report report;
    Check assoc("module: associativity r(mu (x) id) = r(id (x) r)");
    Check unit("module: unit r(eta (x) id) = id");
    for (Elem x = 0; x < a.H().order(); ++x) {
        if (m.dims[x] == 0)
            continue;
        const ComponentAlgebra& alg = a.base().component(x);
        const auto rs = basis_actions(a, m, x);
        for (std::size_t i = 0; i < alg.dim(); ++i)
            for (std::size_t j = 0; j < alg.dim(); ++j) {
                const Vector prod = alg.multiply(basis_vector(field, alg.dim(), i), basis_vector(field, alg.dim(), j));
                std::vector<std::string> out;
                compare(out, label({{"x", x}, {"i", i}, {"j", j}}), combine(rs, prod, m.dims[x], field),
                        mat_mul(rs[i], rs[j]));
                for (auto& w : out)
                    assoc.fail(std::move(w));
            }
        std::vector<std::string> out;
        compare(out, "x=" + std::to_string(x), combine(rs, alg.unit(), m.dims[x], field),
                Matrix::identity(field, m.dims[x]));
        for (auto& w : out)
            unit.fail(std::move(w));
    }
    report.add(std::move(assoc));
    report.add(std::move(unit));
    return report;
}

AModule zero_module(const HopfXiCoalgebra& a) {
    AModule m;
    for (Elem x = 0; x < a.H().order(); ++x) {
        m.dims.push_back(0);
        m.action.emplace_back(a.field(), 0, 0);
    }
    return m;
}

AModule concentrated(const HopfXiCoalgebra& a, Elem x, Matrix action) {
    AModule m = zero_module(a);
    m.dims[x] = action.rows();
    m.action[x] = std::move(action);
    require_fits(a, m);
    return m;
}

AModule unit_module(const HopfXiCoalgebra& a) { return concentrated(a, a.H().identity(), a.base().counit()); }

AModule regular_module(const HopfXiCoalgebra& a, Elem x) { return concentrated(a, x, a.base().component(x).mul()); }

std::size_t tensor_block_offset(const FiniteGroup& h, const AModule& m, const AModule& n, Elem x, Elem y) {
    std::size_t off = 0;
    for (Elem u = 0; u < y; ++u)
        off += m.dims[u] * n.dims[h.mul(h.inverse(u), x)];
    return off;
}

AModule tensor_modules(const HopfXiCoalgebra& a, const AModule& m, const AModule& n) {
    require_fits(a, m);
    require_fits(a, n);
    const FiniteGroup& h = a.H();
    const FieldSpec field = a.field();
    const std::size_t order = h.order();
    std::vector<std::vector<Matrix>> rm, rn;
    for (Elem x = 0; x < order; ++x) {
        rm.push_back(basis_actions(a, m, x));
        rn.push_back(basis_actions(a, n, x));
    }
    AModule out;
    for (Elem x = 0; x < order; ++x) {
        const std::size_t total = tensor_block_offset(h, m, n, x, order);
        std::vector<Matrix> per_basis(a.dim(x), Matrix(field, total, total));
        for (Elem y = 0; y < order; ++y) {
            const Elem z = h.mul(h.inverse(y), x);
            if (m.dims[y] == 0 || n.dims[z] == 0)
                continue;
            const std::size_t off = tensor_block_offset(h, m, n, x, y);
            const Matrix& delta = a.base().coproduct(y, z);
            const std::size_t dz = a.dim(z);
            for (std::size_t i = 0; i < a.dim(x); ++i) {
                Matrix block(field, m.dims[y] * n.dims[z], m.dims[y] * n.dims[z]);
                for (std::size_t row = 0; row < delta.rows(); ++row)
                    if (!delta(row, i).is_zero())
                        block = block + kron(rm[y][row / dz], rn[z][row % dz]) * delta(row, i);
                place(per_basis[i], block, off, off);
            }
        }
        out.dims.push_back(total);
        out.action.push_back(assemble_action(per_basis, total, field));
    }
    return out;
}

AModule pullback_phi_e(const HopfXiCoalgebra& a, const AModule& n, Elem e) {
    require_fits(a, n);
    const FieldSpec field = a.field();
    AModule out;
    for (Elem x = 0; x < a.H().order(); ++x) {
        const Elem y = a.cm().shift(e, x);
        const auto rs = basis_actions(a, n, y);
        const Matrix& p = a.phi(x, e);
        std::vector<Matrix> per_basis;
        for (std::size_t i = 0; i < a.dim(x); ++i)
            per_basis.push_back(combine(rs, p.column_vector(i), n.dims[y], field));
        out.dims.push_back(n.dims[y]);
        out.action.push_back(assemble_action(per_basis, n.dims[y], field));
    }
    return out;
}

Report check_graded_hom(const HopfXiCoalgebra& a, const AModule& m, const AModule& n, const GradedHom& f) {
    require_fits(a, m);
    require_fits(a, n);
    const CrossedModule& cm = a.cm();
    Report report;
    Check shape("graded hom: block shapes");
    Check linear("graded hom: A-linearity alpha r = r(phi (x) alpha)");
    if (f.degree >= cm.E().order() || f.blocks.size() != a.H().order()) {
        shape.fail("degree or block count out of range");
        linear.skip("bad shape");
        report.add(std::move(shape));
        report.add(std::move(linear));
        return report;
    }
    for (Elem x = 0; x < a.H().order(); ++x) {
        const Elem y = cm.shift(f.degree, x);
        if (f.blocks[x].rows() != n.dims[y] || f.blocks[x].cols() != m.dims[x])
            shape.fail("x=" + std::to_string(x));
    }
    if (shape.status() == CheckStatus::fail) {
        linear.skip("bad shape");
    } else {
        for (Elem x = 0; x < a.H().order(); ++x) {
            const Elem y = cm.shift(f.degree, x);
            if (m.dims[x] == 0 || n.dims[y] == 0)
                continue;
            const auto rm = basis_actions(a, m, x);
            const auto rn = basis_actions(a, n, y);
            const Matrix& alpha = f.blocks[x];
            for (std::size_t k = 0; k < a.dim(x); ++k) {
                std::vector<std::string> out;
                compare(out, label({{"x", x}, {"k", k}}), mat_mul(alpha, rm[k]),
                        mat_mul(combine(rn, a.phi(x, f.degree).column_vector(k), n.dims[y], a.field()), alpha));
                for (auto& w : out)
                    linear.fail(std::move(w));
            }
        }
    }
    report.add(std::move(shape));
    report.add(std::move(linear));
    return report;
}

bool is_graded_hom(const HopfXiCoalgebra& a, const AModule& m, const AModule& n, const GradedHom& f) {
    return check_graded_hom(a, m, n, f).ok();
}

std::vector<GradedHom> hom_space(const HopfXiCoalgebra& a, const AModule& m, const AModule& n, Elem e) {
    require_fits(a, m);
    require_fits(a, n);
    if (e >= a.E().order())
        throw Error(ErrorCode::InvalidArgument, "degree " + std::to_string(e) + " is not an element of E");
    const FieldSpec field = a.field();
    const std::size_t order = a.H().order();
    std::vector<std::size_t> offset(order + 1, 0);
    for (Elem x = 0; x < order; ++x)
        offset[x + 1] = offset[x] + n.dims[a.cm().shift(e, x)] * m.dims[x];
    const std::size_t unknowns = offset[order];

    std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
    for (Elem x = 0; x < order; ++x) {
        const Elem y = a.cm().shift(e, x);
        const std::size_t mx = m.dims[x], ny = n.dims[y];
        if (mx == 0 || ny == 0)
            continue;
        const auto rm = basis_actions(a, m, x);
        const auto rn = basis_actions(a, n, y);
        for (std::size_t k = 0; k < a.dim(x); ++k) {
            const Matrix l = combine(rn, a.phi(x, e).column_vector(k), ny, field);
            // (alpha R_k - L_k alpha)(i, j)
            for (std::size_t i = 0; i < ny; ++i)
                for (std::size_t j = 0; j < mx; ++j) {
                    std::vector<std::pair<std::size_t, Scalar>> row;
                    for (std::size_t t = 0; t < mx; ++t)
                        if (!rm[k](t, j).is_zero())
                            row.emplace_back(offset[x] + i * mx + t, rm[k](t, j));
                    for (std::size_t t = 0; t < ny; ++t)
                        if (!l(i, t).is_zero())
                            row.emplace_back(offset[x] + t * mx + j, -l(i, t));
                    if (!row.empty())
                        rows.push_back(std::move(row));
                }
        }
    }
    Matrix system(field, rows.size(), unknowns);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r])
            system(r, c) = system(r, c) + v;

    std::vector<GradedHom> basis;
    for (const Vector& v : kernel_basis(system)) {
        GradedHom f = zero_hom(a, m, n, e);
        for (Elem x = 0; x < order; ++x) {
            const std::size_t mx = m.dims[x];
            for (std::size_t idx = offset[x]; idx < offset[x + 1]; ++idx)
                f.blocks[x]((idx - offset[x]) / mx, (idx - offset[x]) % mx) = v[idx];
        }
        basis.push_back(std::move(f));
    }
    return basis;
}

std::vector<std::vector<GradedHom>> hom_spaces(const HopfXiCoalgebra& a, const AModule& m, const AModule& n,
                                               const ValidationOptions& opts) {
    std::vector<std::vector<GradedHom>> out(a.E().order());
    detail::parallel_for(out.size(), opts.jobs, [&](std::size_t e) { out[e] = hom_space(a, m, n, e); });
    return out;
}

GradedHom identity_hom(const HopfXiCoalgebra& a, const AModule& m) {
    GradedHom f{a.E().identity(), {}};
    for (Elem x = 0; x < a.H().order(); ++x)
        f.blocks.push_back(Matrix::identity(a.field(), m.dims[x]));
    return f;
}

GradedHom compose_homs(const HopfXiCoalgebra& a, const GradedHom& f, const GradedHom& g) {
    const std::size_t order = a.H().order();
    if (f.blocks.size() != order || g.blocks.size() != order)
        throw Error(ErrorCode::ShapeMismatch, "morphisms need one block per element of H");
    GradedHom out{a.E().mul(f.degree, g.degree), {}};
    for (Elem x = 0; x < order; ++x) {
        const Matrix& first = g.blocks[x];
        const Matrix& second = f.blocks[a.cm().shift(g.degree, x)];
        if (second.cols() != first.rows())
            throw Error(ErrorCode::NonComposable, "at x=" + std::to_string(x) + " the first map lands in dimension " +
                                                      std::to_string(first.rows()) + " but the second starts from " +
                                                      std::to_string(second.cols()));
        out.blocks.push_back(mat_mul(second, first));
    }
    return out;
}

GradedHom tensor_homs(const HopfXiCoalgebra& a, const GradedHom& f, const GradedHom& g, const AModule& m,
                      const AModule& n, const AModule& m2, const AModule& n2) {
    const FiniteGroup& h = a.H();
    const CrossedModule& cm = a.cm();
    const Elem y0 = homogeneous_degree(m, "source of the left factor");
    const Elem degree = a.E().mul(f.degree, cm.act(y0, g.degree));
    const AModule src = tensor_modules(a, m, n);
    const AModule dst = tensor_modules(a, m2, n2);
    GradedHom out = zero_hom(a, src, dst, degree);
    const Elem y1 = cm.shift(f.degree, y0);
    const Matrix& fb = f.blocks.at(y0);
    if (fb.rows() != m2.dims[y1] || fb.cols() != m.dims[y0])
        throw Error(ErrorCode::ShapeMismatch, "left factor does not fit its modules");
    for (Elem x = 0; x < h.order(); ++x) {
        const Elem z = h.mul(h.inverse(y0), x);
        if (n.dims[z] == 0)
            continue;
        const Elem z1 = cm.shift(g.degree, z);
        const Matrix& gb = g.blocks.at(z);
        if (gb.rows() != n2.dims[z1] || gb.cols() != n.dims[z])
            throw Error(ErrorCode::ShapeMismatch, "right factor does not fit its modules at x=" + std::to_string(z));
        const Elem x1 = h.mul(y1, z1);
        place(out.blocks[x], kron(fb, gb), tensor_block_offset(h, m2, n2, x1, y1),
              tensor_block_offset(h, m, n, x, y0));
    }
    return out;
}

DualModule dual_module(const HopfXiCoalgebra& a, const AModule& m, const GrouplikeFamily& g) {
    require_fits(a, m);
    const Elem x0 = homogeneous_degree(m, "module");
    const FiniteGroup& h = a.H();
    const FieldSpec field = a.field();
    const GradedHopfCoalgebra& b = a.base();
    if (!b.has_antipode())
        throw Error(ErrorCode::MissingAntipode, "duals need an antipode");
    try {
        const Report piv = is_pivotal_element(b, g);
        if (!piv.ok())
            throw Error(ErrorCode::NotPivotal, "S_x S_{x^-1} is not conjugation by G");
    } catch (const Error& err) {
        if (err.code() == ErrorCode::NotGrouplike)
            throw Error(ErrorCode::NotPivotal, "G is not grouplike");
        throw;
    }
    const Elem xinv = h.inverse(x0);
    const std::size_t md = m.dims[x0];
    const auto rs = basis_actions(a, m, x0);

    DualModule out;
    out.degree = x0;
    out.dual = zero_module(a);
    std::vector<Matrix> per_basis;
    for (std::size_t i = 0; i < a.dim(xinv); ++i)
        per_basis.push_back(combine(rs, b.antipode(x0).column_vector(i), md, field).transpose());
    out.dual.dims[xinv] = md;
    out.dual.action[xinv] = assemble_action(per_basis, md, field);

    const auto inv = b.component(x0).inverse(g[x0]);
    if (!inv)
        throw Error(ErrorCode::NotPivotal, "G_x is not invertible");
    const Matrix rg = combine(rs, g[x0], md, field);
    const Matrix rginv = combine(rs, *inv, md, field);
    const Scalar one = Scalar::one(field);
    out.lev = zero_vector(field, md * md);
    out.lcoev = zero_vector(field, md * md);
    out.rev = zero_vector(field, md * md);
    out.rcoev = zero_vector(field, md * md);
    for (std::size_t i = 0; i < md; ++i) {
        out.lev[i * md + i] = one;
        out.lcoev[i * md + i] = one;
        for (std::size_t j = 0; j < md; ++j) {
            out.rev[i * md + j] = rg(j, i);
            out.rcoev[j * md + i] = rginv(i, j);
        }
    }

    const Matrix id = Matrix::identity(field, md);
    Matrix z1(field, md, md), z2(field, md, md), z3(field, md, md), z4(field, md, md);
    for (std::size_t p = 0; p < md; ++p)
        for (std::size_t q = 0; q < md; ++q)
            for (std::size_t t = 0; t < md; ++t) {
                z1(p, q) = z1(p, q) + out.lcoev[p * md + t] * out.lev[t * md + q];
                z2(p, q) = z2(p, q) + out.lev[q * md + t] * out.lcoev[t * md + p];
                z3(p, q) = z3(p, q) + out.rev[q * md + t] * out.rcoev[t * md + p];
                z4(p, q) = z4(p, q) + out.rcoev[p * md + t] * out.rev[t * md + q];
            }
    auto zigzag = [&](const char* name, const Matrix& z) {
        Check c(name);
        std::vector<std::string> w;
        compare(w, "composite", z, id);
        for (auto& s : w)
            c.fail(std::move(s));
        out.checks.add(std::move(c));
    };
    zigzag("dual: (id (x) lev)(lcoev (x) id) = id_M", z1);
    zigzag("dual: (lev (x) id)(id (x) lcoev) = id_M*", z2);
    zigzag("dual: (rev (x) id)(id (x) rcoev) = id_M", z3);
    zigzag("dual: (id (x) rev)(rcoev (x) id) = id_M*", z4);

    const AModule unit = unit_module(a);
    const Elem one_h = h.identity();
    auto linear = [&](const char* name, const AModule& src, const AModule& dst, const Vector& v, bool to_unit) {
        GradedHom f = zero_hom(a, src, dst, a.E().identity());
        f.blocks[one_h] = to_unit ? Matrix::row(field, v) : Matrix::column(field, v);
        Check c(name);
        for (const auto& chk : check_graded_hom(a, src, dst, f).checks())
            for (const auto& w : chk.witnesses())
                c.fail(chk.name() + ": " + w);
        out.checks.add(std::move(c));
    };
    linear("dual: lev is A-linear", tensor_modules(a, out.dual, m), unit, out.lev, true);
    linear("dual: lcoev is A-linear", unit, tensor_modules(a, m, out.dual), out.lcoev, false);
    linear("dual: rev is A-linear", tensor_modules(a, m, out.dual), unit, out.rev, true);
    linear("dual: rcoev is A-linear", unit, tensor_modules(a, out.dual, m), out.rcoev, false);
    return out;
}

EDirectSum e_direct_sum(const HopfXiCoalgebra& a, const std::vector<AModule>& modules, Elem e) {
    const FiniteGroup& h = a.H();
    const FieldSpec field = a.field();
    const Elem einv = a.E().inverse(e);
    std::vector<AModule> pulled;
    for (const auto& m : modules)
        pulled.push_back(pullback_phi_e(a, m, einv));

    EDirectSum out;
    out.sum = zero_module(a);
    // offsets[x][i] is where summand i starts inside the sum at degree x.
    std::vector<std::vector<std::size_t>> offsets(h.order());
    for (Elem x = 0; x < h.order(); ++x) {
        std::size_t total = 0;
        for (const auto& p : pulled) {
            offsets[x].push_back(total);
            total += p.dims[x];
        }
        std::vector<Matrix> per_basis(a.dim(x), Matrix(field, total, total));
        for (std::size_t i = 0; i < pulled.size(); ++i) {
            const auto rs = basis_actions(a, pulled[i], x);
            for (std::size_t k = 0; k < a.dim(x); ++k)
                place(per_basis[k], rs[k], offsets[x][i], offsets[x][i]);
        }
        out.sum.dims[x] = total;
        out.sum.action[x] = assemble_action(per_basis, total, field);
    }
    for (std::size_t i = 0; i < modules.size(); ++i) {
        GradedHom q = zero_hom(a, modules[i], out.sum, e);
        GradedHom p = zero_hom(a, out.sum, modules[i], einv);
        for (Elem x = 0; x < h.order(); ++x) {
            place(q.blocks[x], Matrix::identity(field, modules[i].dims[x]), offsets[a.cm().shift(e, x)][i], 0);
            place(p.blocks[x], Matrix::identity(field, pulled[i].dims[x]), 0, offsets[x][i]);
        }
        out.injections.push_back(std::move(q));
        out.projections.push_back(std::move(p));
    }
    return out;
}

} // namespace xhopf
