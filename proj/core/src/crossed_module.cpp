#include "xhopf/crossed_module.hpp"

#include <algorithm>
#include <string>

#include "xhopf/error.hpp"

namespace xhopf {

namespace {

std::string pair_str(const char* a, Elem x, const char* b, Elem y) {
    return std::string(a) + "=" + std::to_string(x) + " " + b + "=" + std::to_string(y);
}

} // namespace

CrossedModule::CrossedModule(FiniteGroup e, FiniteGroup h, std::vector<Elem> xi,
                             std::vector<std::vector<Elem>> action)
    : e_(std::move(e)), h_(std::move(h)), xi_(std::move(xi)), action_(std::move(action)) {
    if (xi_.size() != e_.order())
        throw Error(ErrorCode::ShapeMismatch, "xi must have one entry per element of E");
    for (Elem v : xi_)
        if (v >= h_.order())
            throw Error(ErrorCode::ShapeMismatch, "xi maps outside H");
    if (action_.size() != h_.order())
        throw Error(ErrorCode::ShapeMismatch, "action table must have one row per element of H");
    for (const auto& row : action_) {
        if (row.size() != e_.order())
            throw Error(ErrorCode::ShapeMismatch, "action row must have one entry per element of E");
        for (Elem v : row)
            if (v >= e_.order())
                throw Error(ErrorCode::ShapeMismatch, "action maps outside E");
    }
}

Report validate_crossed_module(const CrossedModule& cm) {
    Report report;
    const Report re = validate_group(cm.E());
    const Report rh = validate_group(cm.H());
    const Report rxi = validate_hom(cm.xi_hom());
    const Report ract = validate_action(cm.action());
    report.merge(re, "E/");
    report.merge(rh, "H/");
    report.merge(rxi, "xi/");
    report.merge(ract, "H on E/");

    Check equiv("equivariance xi(x.e) = x xi(e) x^-1");
    Check peiffer("Peiffer xi(e).f = e f e^-1");
    if (!(re.ok() && rh.ok() && rxi.ok() && ract.ok())) {
        equiv.skip("components invalid");
        peiffer.skip("components invalid");
    } else {
        const auto& E = cm.E();
        const auto& H = cm.H();
        for (Elem x = 0; x < H.order(); ++x)
            for (Elem e = 0; e < E.order(); ++e)
                equiv.expect(cm.xi(cm.act(x, e)) == H.mul(H.mul(x, cm.xi(e)), H.inverse(x)),
                             [&] { return pair_str("x", x, "e", e); });
        for (Elem e = 0; e < E.order(); ++e)
            for (Elem f = 0; f < E.order(); ++f)
                peiffer.expect(cm.act(cm.xi(e), f) == E.mul(E.mul(e, f), E.inverse(e)),
                               [&] { return pair_str("e", e, "f", f); });
    }
    report.add(std::move(equiv));
    report.add(std::move(peiffer));
    return report;
}

bool is_valid_arrow(const CrossedModule& cm, const GroupoidArrow& a) {
    return a.source < cm.H().order() && a.label < cm.E().order() && a.target == cm.shift(a.label, a.source);
}

GroupoidArrow identity_arrow(const CrossedModule& cm, Elem x) { return {x, cm.E().identity(), x}; }

std::vector<GroupoidArrow> hom_set(const CrossedModule& cm, Elem x, Elem y) {
    std::vector<GroupoidArrow> out;
    for (Elem e = 0; e < cm.E().order(); ++e)
        if (cm.shift(e, x) == y)
            out.push_back({x, e, y});
    return out;
}

GroupoidArrow compose(const CrossedModule& cm, const GroupoidArrow& f, const GroupoidArrow& e) {
    if (f.source != e.target)
        throw Error(ErrorCode::NonComposable, "arrow ending at " + std::to_string(e.target) +
                                                  " cannot be followed by one starting at " +
                                                  std::to_string(f.source));
    return {e.source, cm.E().mul(f.label, e.label), f.target};
}

GroupoidArrow arrow_tensor(const CrossedModule& cm, const GroupoidArrow& a, const GroupoidArrow& b) {
    const auto& H = cm.H();
    return {H.mul(a.source, b.source), cm.E().mul(a.label, cm.act(a.source, b.label)), H.mul(a.target, b.target)};
}

GroupoidArrow arrow_antipode(const CrossedModule& cm, const GroupoidArrow& a) {
    const auto& H = cm.H();
    const Elem xinv = H.inverse(a.source);
    return {xinv, cm.act(xinv, cm.E().inverse(a.label)), H.inverse(a.target)};
}

KernelImageCokernel kernel_image_cokernel(const CrossedModule& cm) {
    const auto& E = cm.E();
    const auto& H = cm.H();
    KernelImageCokernel out;
    std::vector<bool> in_image(H.order(), false);
    for (Elem e = 0; e < E.order(); ++e) {
        if (cm.xi(e) == H.identity())
            out.kernel.push_back(e);
        in_image[cm.xi(e)] = true;
    }
    for (Elem x = 0; x < H.order(); ++x)
        if (in_image[x])
            out.image.push_back(x);

    Check normal("image normal in H");
    for (Elem x = 0; x < H.order(); ++x)
        for (Elem y : out.image)
            normal.expect(in_image[H.mul(H.mul(x, y), H.inverse(x))],
                          [&] { return pair_str("x", x, "image element", y); });
    out.checks.add(std::move(normal));

    Check central("kernel central in E");
    for (Elem k : out.kernel)
        for (Elem e = 0; e < E.order(); ++e)
            central.expect(E.mul(k, e) == E.mul(e, k), [&] { return pair_str("k", k, "e", e); });
    out.checks.add(std::move(central));

    // Cosets x Im; numbered by smallest representative.
    out.projection.assign(H.order(), H.order());
    std::vector<Elem> reps;
    for (Elem x = 0; x < H.order(); ++x) {
        if (out.projection[x] != H.order())
            continue;
        const Elem idx = reps.size();
        reps.push_back(x);
        for (Elem y : out.image)
            out.projection[H.mul(x, y)] = idx;
    }
    std::vector<std::vector<Elem>> table(reps.size(), std::vector<Elem>(reps.size()));
    Check quotient("cokernel product well defined");
    for (Elem a = 0; a < reps.size(); ++a)
        for (Elem b = 0; b < reps.size(); ++b)
            table[a][b] = out.projection[H.mul(reps[a], reps[b])];
    for (Elem x = 0; x < H.order(); ++x)
        for (Elem y = 0; y < H.order(); ++y)
            quotient.expect(out.projection[H.mul(x, y)] == table[out.projection[x]][out.projection[y]],
                            [&] { return pair_str("x", x, "y", y); });
    out.checks.add(std::move(quotient));
    out.cokernel = FiniteGroup(std::move(table));

    Check induced("cokernel action on kernel well defined");
    for (Elem x = 0; x < H.order(); ++x)
        for (Elem k : out.kernel) {
            const Elem rep = reps[out.projection[x]];
            induced.expect(cm.act(x, k) == cm.act(rep, k), [&] { return pair_str("x", x, "k", k); });
            induced.expect(cm.xi(cm.act(x, k)) == H.identity(),
                           [&] { return "x=" + std::to_string(x) + " moves kernel element " + std::to_string(k) + " out"; });
        }
    out.checks.add(std::move(induced));
    return out;
}

std::vector<Elem> least_section(const KernelImageCokernel& kic) {
    std::vector<Elem> q(kic.cokernel.order(), kic.projection.size());
    for (Elem x = 0; x < kic.projection.size(); ++x)
        q[kic.projection[x]] = std::min(q[kic.projection[x]], x);
    return q;
}

CrossedModule trivial_over(const FiniteGroup& h) {
    return CrossedModule(FiniteGroup(), h, {h.identity()}, std::vector<std::vector<Elem>>(h.order(), {0}));
}

CrossedModule abelian_to_point(const FiniteGroup& e) {
    for (Elem a = 0; a < e.order(); ++a)
        for (Elem b = 0; b < e.order(); ++b)
            if (e.mul(a, b) != e.mul(b, a))
                throw Error(ErrorCode::NotAbelian,
                            "elements " + std::to_string(a) + " and " + std::to_string(b) + " do not commute");
    const GroupAction trivial = trivial_action(FiniteGroup(), e);
    return CrossedModule(e, FiniteGroup(), std::vector<Elem>(e.order(), 0), trivial.table);
}

CrossedModule inclusion(const GroupHom& embedding) {
    GroupAction conj = conjugation_action(embedding.target, embedding);
    return CrossedModule(embedding.source, embedding.target, embedding.map, std::move(conj.table));
}

} // namespace xhopf
