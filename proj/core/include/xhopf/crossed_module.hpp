#pragma once

#include <vector>

#include "xhopf/group.hpp"
#include "xhopf/report.hpp"

namespace xhopf {

/// A homomorphism xi: E -> H with a left action of H on E. Construction
/// checks shapes only; `validate_crossed_module` checks equivariance
/// xi(x.e) = x xi(e) x^-1 and the Peiffer identity xi(e).f = e f e^-1.
class CrossedModule {
  public:
    /// The identity crossed module 1 -> 1.
    CrossedModule() : CrossedModule(FiniteGroup(), FiniteGroup(), {0}, {{0}}) {}
    /// Throws ShapeMismatch when `xi` or `action` do not fit the groups.
    CrossedModule(FiniteGroup e, FiniteGroup h, std::vector<Elem> xi, std::vector<std::vector<Elem>> action);

    const FiniteGroup& E() const { return e_; }
    const FiniteGroup& H() const { return h_; }
    Elem xi(Elem e) const { return xi_[e]; }
    /// x . e
    Elem act(Elem x, Elem e) const { return action_[x][e]; }
    const std::vector<Elem>& xi_map() const { return xi_; }
    const std::vector<std::vector<Elem>>& action_table() const { return action_; }

    GroupHom xi_hom() const { return {e_, h_, xi_}; }
    GroupAction action() const { return {h_, e_, action_}; }

    /// xi(e) x, the target of the arrow x --e--> in the associated groupoid.
    Elem shift(Elem e, Elem x) const { return h_.mul(xi_[e], x); }

    bool operator==(const CrossedModule& rhs) const = default;

  private:
    FiniteGroup e_;
    FiniteGroup h_;
    std::vector<Elem> xi_;
    std::vector<std::vector<Elem>> action_;
};

/// Validates E, H, xi and the action, then the two crossed-module identities.
Report validate_crossed_module(const CrossedModule& cm);

// Arrows of the groupoid associated with a crossed module: objects are the
// elements of H, and e: x -> y is an arrow when y = xi(e) x. The groupoid is
// never materialized; hom sets are enumerated on demand.

struct GroupoidArrow {
    Elem source;
    Elem label;
    Elem target;

    bool operator==(const GroupoidArrow&) const = default;
};

bool is_valid_arrow(const CrossedModule& cm, const GroupoidArrow& a);
GroupoidArrow identity_arrow(const CrossedModule& cm, Elem x);
/// All arrows x -> y, by ascending label.
std::vector<GroupoidArrow> hom_set(const CrossedModule& cm, Elem x, Elem y);
/// f after e, labelled by the E-product f e. Throws NonComposable.
GroupoidArrow compose(const CrossedModule& cm, const GroupoidArrow& f, const GroupoidArrow& e);
/// (x -e-> y) (x) (z -f-> t) = (xz -(e . x.f)-> yt).
GroupoidArrow arrow_tensor(const CrossedModule& cm, const GroupoidArrow& a, const GroupoidArrow& b);
/// (x -e-> y) |-> (x^-1 -(x^-1 . e^-1)-> y^-1).
GroupoidArrow arrow_antipode(const CrossedModule& cm, const GroupoidArrow& a);

struct KernelImageCokernel {
    std::vector<Elem> kernel; ///< ascending elements of E
    std::vector<Elem> image;  ///< ascending elements of H
    /// H / Im(xi); cosets are numbered by their smallest element, so the
    /// identity coset is 0.
    FiniteGroup cokernel;
    std::vector<Elem> projection; ///< H -> cokernel
    /// Kernel central, image normal, and the induced action of the cokernel
    /// on the kernel well defined. Failures here mean an invalid input.
    Report checks;
};

KernelImageCokernel kernel_image_cokernel(const CrossedModule& cm);

/// Section q of the projection with q(a) the smallest element of coset a.
std::vector<Elem> least_section(const KernelImageCokernel& kic);

/// 1 -> H.
CrossedModule trivial_over(const FiniteGroup& h);
/// E -> 1; throws NotAbelian with a commutator witness.
CrossedModule abelian_to_point(const FiniteGroup& e);
/// Normal subgroup inclusion with the conjugation action; throws NotNormal.
CrossedModule inclusion(const GroupHom& embedding);

} // namespace xhopf
