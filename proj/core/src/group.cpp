#include "xhopf/group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "xhopf/error.hpp"

namespace xhopf {

namespace {

std::string triple(Elem a, Elem b, Elem c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

} // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<Elem>> table) : table_(std::move(table)) {
    const std::size_t n = table_.size();
    if (n == 0)
        throw Error(ErrorCode::ShapeMismatch, "group table is empty");
    for (const auto& row : table_) {
        if (row.size() != n)
            throw Error(ErrorCode::ShapeMismatch, "group table is not square");
        for (Elem v : row)
            if (v >= n)
                throw Error(ErrorCode::ShapeMismatch, "group table entry " + std::to_string(v) + " out of range");
    }
    for (Elem e = 0; e < n && !has_identity_; ++e) {
        bool ok = true;
        for (Elem a = 0; a < n && ok; ++a)
            ok = table_[e][a] == a && table_[a][e] == a;
        if (ok) {
            identity_ = e;
            has_identity_ = true;
        }
    }
    inverses_.assign(n, n);
    if (has_identity_)
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                if (table_[a][b] == identity_ && table_[b][a] == identity_) {
                    inverses_[a] = b;
                    break;
                }
}

bool FiniteGroup::is_abelian() const {
    for (Elem a = 0; a < order(); ++a)
        for (Elem b = a + 1; b < order(); ++b)
            if (mul(a, b) != mul(b, a))
                return false;
    return true;
}

std::size_t FiniteGroup::element_order(Elem a) const {
    Elem p = a;
    for (std::size_t k = 1; k <= order(); ++k) {
        if (p == identity_)
            return k;
        p = mul(p, a);
    }
    return 0;
}

Report validate_group(const FiniteGroup& g) {
    Report report;
    const std::size_t n = g.order();

    Check identity("group: identity");
    if (!g.has_identity())
        identity.fail("no two-sided identity element");
    else if (g.identity() != 0)
        identity.fail("identity is element " + std::to_string(g.identity()) + ", expected 0");
    report.add(std::move(identity));

    Check inverses("group: inverses");
    if (!g.has_identity())
        inverses.skip("no identity");
    else
        for (Elem a = 0; a < n; ++a)
            inverses.expect(g.inverse(a) < n, [&] { return "element " + std::to_string(a) + " has no inverse"; });
    report.add(std::move(inverses));

    Check assoc("group: associativity");
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                assoc.expect(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)), [&] { return triple(a, b, c); });
    report.add(std::move(assoc));
    return report;
}

FiniteGroup cyclic(std::size_t n) {
    if (n == 0)
        throw Error(ErrorCode::InvalidArgument, "cyclic group of order 0");
    std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            t[a][b] = (a + b) % n;
    return FiniteGroup(std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const std::size_t n = g.order() * h.order();
    std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            t[a][b] = g.mul(a / h.order(), b / h.order()) * h.order() + h.mul(a % h.order(), b % h.order());
    return FiniteGroup(std::move(t));
}

namespace {

std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<std::size_t>> out;
    do
        out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

FiniteGroup symmetric(std::size_t n) {
    if (n == 0 || n > 4)
        throw Error(ErrorCode::InvalidArgument, "symmetric(n) requires 1 <= n <= 4");
    const auto perms = all_permutations(n);
    const std::size_t m = perms.size();
    std::vector<std::vector<Elem>> t(m, std::vector<Elem>(m));
    for (Elem a = 0; a < m; ++a)
        for (Elem b = 0; b < m; ++b) {
            std::vector<std::size_t> c(n);
            for (std::size_t i = 0; i < n; ++i)
                c[i] = perms[a][perms[b][i]];
            t[a][b] = static_cast<Elem>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    return FiniteGroup(std::move(t));
}

std::vector<std::size_t> permutation(std::size_t n, Elem k) { return all_permutations(n).at(k); }

Report validate_hom(const GroupHom& f) {
    Report report;
    Check shape("hom: map shape");
    if (f.map.size() != f.source.order())
        shape.fail("map has " + std::to_string(f.map.size()) + " entries, source has order " +
                   std::to_string(f.source.order()));
    for (Elem v : f.map)
        shape.expect(v < f.target.order(), [&] { return "image " + std::to_string(v) + " out of range"; });
    const bool shape_ok = shape.violations() == 0;
    report.add(std::move(shape));

    Check unit("hom: preserves identity");
    Check mult("hom: multiplicative");
    if (!shape_ok) {
        unit.skip("bad shape");
        mult.skip("bad shape");
    } else {
        unit.expect(f(f.source.identity()) == f.target.identity(),
                    [&] { return "identity maps to " + std::to_string(f(f.source.identity())); });
        for (Elem a = 0; a < f.source.order(); ++a)
            for (Elem b = 0; b < f.source.order(); ++b)
                mult.expect(f(f.source.mul(a, b)) == f.target.mul(f(a), f(b)), [&] {
                    return "a=" + std::to_string(a) + " b=" + std::to_string(b);
                });
    }
    report.add(std::move(unit));
    report.add(std::move(mult));
    return report;
}

GroupHom identity_hom(const FiniteGroup& g) {
    std::vector<Elem> map(g.order());
    std::iota(map.begin(), map.end(), 0);
    return {g, g, std::move(map)};
}

Report validate_action(const GroupAction& a) {
    Report report;
    const std::size_t nx = a.actor.order();
    const std::size_t ne = a.space.order();
    Check shape("action: table shape");
    shape.expect(a.table.size() == nx, [&] { return "table has " + std::to_string(a.table.size()) + " rows"; });
    for (const auto& row : a.table) {
        shape.expect(row.size() == ne, [&] { return "row of length " + std::to_string(row.size()); });
        for (Elem v : row)
            shape.expect(v < ne, [&] { return "entry " + std::to_string(v) + " out of range"; });
    }
    const bool shape_ok = shape.violations() == 0;
    report.add(std::move(shape));

    Check unit("action: identity acts trivially");
    Check compat("action: x.(y.e) = (xy).e");
    Check autom("action: by automorphisms");
    if (!shape_ok) {
        unit.skip("bad shape");
        compat.skip("bad shape");
        autom.skip("bad shape");
    } else {
        for (Elem e = 0; e < ne; ++e)
            unit.expect(a(a.actor.identity(), e) == e, [&] { return "e=" + std::to_string(e); });
        for (Elem x = 0; x < nx; ++x)
            for (Elem y = 0; y < nx; ++y)
                for (Elem e = 0; e < ne; ++e)
                    compat.expect(a(x, a(y, e)) == a(a.actor.mul(x, y), e), [&] {
                        return "x=" + std::to_string(x) + " y=" + std::to_string(y) + " e=" + std::to_string(e);
                    });
        for (Elem x = 0; x < nx; ++x) {
            std::vector<bool> hit(ne, false);
            for (Elem e = 0; e < ne; ++e)
                hit[a(x, e)] = true;
            autom.expect(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }),
                         [&] { return "x=" + std::to_string(x) + " is not bijective"; });
            for (Elem e = 0; e < ne; ++e)
                for (Elem f = 0; f < ne; ++f)
                    autom.expect(a(x, a.space.mul(e, f)) == a.space.mul(a(x, e), a(x, f)), [&] {
                        return "x=" + std::to_string(x) + " e=" + std::to_string(e) + " f=" + std::to_string(f);
                    });
        }
    }
    report.add(std::move(unit));
    report.add(std::move(compat));
    report.add(std::move(autom));
    return report;
}

GroupAction trivial_action(const FiniteGroup& actor, const FiniteGroup& space) {
    std::vector<Elem> row(space.order());
    std::iota(row.begin(), row.end(), 0);
    return {actor, space, std::vector<std::vector<Elem>>(actor.order(), row)};
}

GroupAction conjugation_action(const FiniteGroup& h, const GroupHom& embedding) {
    if (!(embedding.target == h) || !validate_hom(embedding).ok())
        throw Error(ErrorCode::InvalidArgument, "embedding is not a homomorphism into the given group");
    const std::size_t ne = embedding.source.order();
    std::vector<Elem> preimage(h.order(), h.order());
    for (Elem e = 0; e < ne; ++e) {
        if (preimage[embedding(e)] != h.order())
            throw Error(ErrorCode::InvalidArgument, "embedding is not injective");
        preimage[embedding(e)] = e;
    }
    std::vector<std::vector<Elem>> table(h.order(), std::vector<Elem>(ne));
    for (Elem x = 0; x < h.order(); ++x)
        for (Elem e = 0; e < ne; ++e) {
            const Elem c = h.mul(h.mul(x, embedding(e)), h.inverse(x));
            if (preimage[c] == h.order())
                throw Error(ErrorCode::NotNormal, "conjugate of image element " + std::to_string(embedding(e)) +
                                                      " by " + std::to_string(x) + " is " + std::to_string(c) +
                                                      ", outside the image");
            table[x][e] = preimage[c];
        }
    return {h, embedding.source, std::move(table)};
}

GroupHom subgroup_embedding(const FiniteGroup& g, std::vector<Elem> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    std::vector<Elem> index(g.order(), g.order());
    for (Elem i = 0; i < elements.size(); ++i) {
        if (elements[i] >= g.order())
            throw Error(ErrorCode::InvalidArgument, "element " + std::to_string(elements[i]) + " out of range");
        index[elements[i]] = i;
    }
    if (elements.empty() || elements.front() != g.identity())
        throw Error(ErrorCode::InvalidArgument, "subgroup must contain the identity");
    const std::size_t m = elements.size();
    std::vector<std::vector<Elem>> t(m, std::vector<Elem>(m));
    for (Elem a = 0; a < m; ++a)
        for (Elem b = 0; b < m; ++b) {
            const Elem p = g.mul(elements[a], elements[b]);
            if (index[p] == g.order())
                throw Error(ErrorCode::InvalidArgument, "elements are not closed under the product");
            t[a][b] = index[p];
        }
    return {FiniteGroup(std::move(t)), g, std::move(elements)};
}

bool is_normal_subset(const FiniteGroup& g, const std::vector<Elem>& elements) {
    std::vector<bool> in(g.order(), false);
    for (Elem e : elements)
        in[e] = true;
    for (Elem x = 0; x < g.order(); ++x)
        for (Elem e : elements)
            if (!in[g.mul(g.mul(x, e), g.inverse(x))])
                return false;
    return true;
}

} // namespace xhopf
