#pragma once

#include <vector>

#include "xhopf/crossed_module.hpp"
#include "xhopf/graded_hopf.hpp"

namespace xhopf {

/// A Hopf H-coalgebra with an action of the crossed module: algebra maps
/// phi_{x,e}: A_x -> A_{xi(e)x}. Construction checks shapes only.
class HopfXiCoalgebra {
  public:
    HopfXiCoalgebra() = default;
    /// `phi[x * |E| + e]` is phi_{x,e}. Throws ShapeMismatch when the base is
    /// graded by another group or a map has the wrong shape.
    HopfXiCoalgebra(CrossedModule cm, GradedHopfCoalgebra base, std::vector<Matrix> phi);

    const CrossedModule& cm() const { return cm_; }
    const GradedHopfCoalgebra& base() const { return base_; }
    FieldSpec field() const { return base_.field(); }
    const FiniteGroup& H() const { return cm_.H(); }
    const FiniteGroup& E() const { return cm_.E(); }
    std::size_t dim(Elem x) const { return base_.dim(x); }
    const Matrix& phi(Elem x, Elem e) const { return phi_[x * cm_.E().order() + e]; }
    const std::vector<Matrix>& phis() const { return phi_; }

    bool operator==(const HopfXiCoalgebra& rhs) const = default;

  private:
    CrossedModule cm_;
    GradedHopfCoalgebra base_;
    std::vector<Matrix> phi_;
};

/// phi_{x,1} = id, phi_{xi(e)x,f} phi_{x,e} = phi_{x,fe}, the coproduct
/// compatibility (phi_{x,e} (x) phi_{y,f}) Delta_{x,y} =
/// Delta_{xi(e)x,xi(f)y} phi_{xy,e.x(f)}, and that each phi_{x,e} is an algebra
/// isomorphism with inverse phi_{xi(e)x,e^-1}.
Report validate_xi_action(const HopfXiCoalgebra& a, const ValidationOptions& opts = {});

/// phi_{x,e} S_x = S_{xi(e)x} phi_{x^-1, x^-1.(e^-1)}. A consequence of the
/// axioms, so a failure on validated input is an upstream bug. Throws
/// MissingAntipode.
Report check_antipode_action_compat(const HopfXiCoalgebra& a);

/// Crossed module, coalgebra, bicoalgebra, antipode (presence, identities,
/// properties), action, and the antipode compatibility, in that order. Later
/// groups are skipped when their prerequisites fail.
Report validate_hopf_xi_coalgebra(const HopfXiCoalgebra& a, const ValidationOptions& opts = {});

struct GrouplikePairing {
    std::vector<Scalar> values; ///< <G,e>, indexed by e
    /// phi_{x,e}(G_x) = <G,e> G_{xi(e)x} for every (x, e).
    Report checks;
};

/// <G,e> = epsilon(phi_{xi(e^-1),e}(G_{xi(e^-1)})). Throws NotGrouplike.
GrouplikePairing grouplike_pairing(const HopfXiCoalgebra& a, const GrouplikeFamily& g);
/// Grouplike and fixed by the action. Throws NotGrouplike when not grouplike.
bool is_xi_grouplike(const HopfXiCoalgebra& a, const GrouplikeFamily& g);
/// The enumerated grouplikes that are fixed by the action.
std::vector<GrouplikeFamily> enumerate_xi_grouplikes(const HopfXiCoalgebra& a);
/// Multiplicativity of the pairing in both arguments over `families`, which
/// should be closed under products for the first check to be meaningful.
Report check_pairing_bicharacter(const HopfXiCoalgebra& a, const std::vector<GrouplikeFamily>& families);

/// k_Xi: every component k, all structure maps the identity.
HopfXiCoalgebra mk_trivial(FieldSpec field, const CrossedModule& cm);

/// k^omega[G] over E -> 1 with phi_e(g) = omega(e,g) g; `omega[e][g]`.
/// Throws NotAbelian for nonabelian E, NotBicharacter when omega is not a
/// normalized bicharacter with nonzero values.
HopfXiCoalgebra mk_bicharacter_group_algebra(FieldSpec field, const FiniteGroup& e, const FiniteGroup& g,
                                             const std::vector<std::vector<Scalar>>& omega);

/// The family A_Xi^rho: A_x = A, Delta_{x,y} = (rho_x (x) rho_y) delta rho_{(xy)^-1},
/// S_x = rho_x s rho_x, phi_{x,e} = rho_{xi(e)}. `a` is a classical Hopf
/// algebra (graded by the trivial group); its antipode is computed when
/// absent. Throws NotAlgebraAutomorphism, NotHomomorphism, MissingAntipode,
/// or AxiomCheckFailed when the result fails the full validator.
HopfXiCoalgebra mk_from_h_action(const CrossedModule& cm, const GradedHopfCoalgebra& a, const std::vector<Matrix>& rho,
                                 const ValidationOptions& opts = {});

/// A_x = B_{p(x)} with trivial action, for B graded by the cokernel of cm.
/// Throws ShapeMismatch when B is graded by another group.
HopfXiCoalgebra mk_from_pi_coalgebra(const CrossedModule& cm, const GradedHopfCoalgebra& b);

/// B_a = A_{q(a)} along the section `q` of the projection onto the cokernel.
/// Throws InvalidArgument when q is not a section or the action is not trivial.
GradedHopfCoalgebra extract_pi_coalgebra(const HopfXiCoalgebra& a, const std::vector<Elem>& q);
/// Same, along the section picking the smallest element of each coset.
GradedHopfCoalgebra extract_pi_coalgebra(const HopfXiCoalgebra& a);

/// A Hopf Xi-algebra stored component-wise like its dual: per-x coalgebras
/// (Delta_x, epsilon_x), graded products mu_{x,y}: A_x (x) A_y -> A_{xy}, a
/// unit in A_1, antipodes S_x: A_x -> A_{x^-1}, and coalgebra maps
/// phi_{x,e}: A_x -> A_{xi(e)x}.
class HopfXiAlgebra {
  public:
    HopfXiAlgebra() = default;
    /// Throws ShapeMismatch on inconsistent shapes.
    HopfXiAlgebra(CrossedModule cm, std::vector<Matrix> comul, std::vector<Matrix> counit, std::vector<Matrix> product,
                  Vector unit, std::vector<Matrix> antipode, std::vector<Matrix> phi);

    const CrossedModule& cm() const { return cm_; }
    FieldSpec field() const { return counit_.front().field(); }
    const FiniteGroup& H() const { return cm_.H(); }
    std::size_t dim(Elem x) const { return counit_[x].cols(); }
    const Matrix& comul(Elem x) const { return comul_[x]; }
    const Matrix& counit(Elem x) const { return counit_[x]; }
    const Matrix& product(Elem x, Elem y) const { return product_[x * H().order() + y]; }
    const Vector& unit() const { return unit_; }
    const Matrix& antipode(Elem x) const { return antipode_[x]; }
    const Matrix& phi(Elem x, Elem e) const { return phi_[x * cm_.E().order() + e]; }

    const std::vector<Matrix>& comuls() const { return comul_; }
    const std::vector<Matrix>& counits() const { return counit_; }
    const std::vector<Matrix>& products() const { return product_; }
    const std::vector<Matrix>& antipodes() const { return antipode_; }
    const std::vector<Matrix>& phis() const { return phi_; }

    bool operator==(const HopfXiAlgebra& rhs) const = default;

  private:
    CrossedModule cm_;
    std::vector<Matrix> comul_;
    std::vector<Matrix> counit_;
    std::vector<Matrix> product_;
    Vector unit_;
    std::vector<Matrix> antipode_;
    std::vector<Matrix> phi_;
};

/// Coalgebra axioms per component, graded associativity and unit, products
/// and unit as coalgebra maps, the antipode, and the action laws.
Report validate_hopf_xi_algebra(const HopfXiAlgebra& a, const ValidationOptions& opts = {});

/// Transposes every structure map. The action of the dual is
/// phi*_{x,e} = (phi_{xi(e)x,e^-1})^T so that it again points from degree x to
/// degree xi(e)x; dualizing twice gives back the original exactly. Throws
/// MissingAntipode.
HopfXiAlgebra dualize(const HopfXiCoalgebra& a);
HopfXiCoalgebra dualize(const HopfXiAlgebra& a);

} // namespace xhopf
