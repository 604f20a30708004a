#pragma once

#include <vector>

#include "xhopf/modules.hpp"

namespace xhopf {

/// A left-left Hopf Xi-module: an A_x-module M_x per x, a coaction
/// rho_{x,y}: M_{xy} -> A_x (x) M_y and maps psi_{x,e}: M_x -> M_{xi(e)x}.
struct HopfXiModule {
    std::vector<std::size_t> dims;
    std::vector<Matrix> action;   ///< r_x, m_x x (d_x m_x)
    std::vector<Matrix> coaction; ///< rho_{x,y} at x * |H| + y
    std::vector<Matrix> psi;      ///< psi_{x,e} at x * |E| + e

    AModule underlying() const { return {dims, action}; }
    bool operator==(const HopfXiModule&) const = default;
};

/// Module axioms, comodule coassociativity and counit, compatibility of the
/// coaction with the action, and the four laws for psi. Throws
/// ShapeMismatch.
Report validate_hopf_xi_module(const HopfXiCoalgebra& a, const HopfXiModule& m, const ValidationOptions& opts = {});

/// A (x) V with V = k^v_dim and structure maps mu (x) id, Delta (x) id,
/// phi (x) id.
HopfXiModule trivial_hopf_module(const HopfXiCoalgebra& a, std::size_t v_dim);

/// Families (m_x) with rho_{x,y}(m_{xy}) = 1_x (x) m_y and psi_{x,e}(m_x) = m_{xi(e)x}.
using CoinvariantsBasis = std::vector<std::vector<Vector>>;

/// Kernel basis of the joint system, unknowns concatenated in ascending x.
CoinvariantsBasis coinvariants(const HopfXiCoalgebra& a, const HopfXiModule& m);
bool is_coinvariant(const HopfXiCoalgebra& a, const HopfXiModule& m, const std::vector<Vector>& family);

struct StructureIso {
    CoinvariantsBasis basis;
    /// epsilon^x: A_x (x) M^coA -> M_x, a (x) c |-> r_x(a (x) c_x).
    std::vector<Matrix> epsilon;
    /// nu^x = (id (x) pi) rho_{x,1} with pi(m) = (r_z(S_z (x) id) rho_{z^-1,z}(m))_z.
    std::vector<Matrix> nu;
};

/// Builds both families and checks that they are inverse to each other in
/// both orders. Throws NotInvertible naming the first failing component.
StructureIso structure_iso(const HopfXiCoalgebra& a, const HopfXiModule& m);

enum class Side { left, right };

struct XiIntegral {
    Side side = Side::right;
    std::vector<Vector> lambda; ///< lambda_x as coordinates on A_x
    bool operator==(const XiIntegral&) const = default;
};

/// Left: (id (x) lambda_y) Delta_{x,y} = eta_x lambda_{xy}; right:
/// (lambda_x (x) id) Delta_{x,y} = eta_y lambda_{xy}; both sides also
/// lambda_{xi(e)x} phi_{x,e} = lambda_x.
Report check_integral(const HopfXiCoalgebra& a, const XiIntegral& l);

/// Kernel basis of the stacked system over all (x, y) and (x, e).
std::vector<XiIntegral> integral_space(const HopfXiCoalgebra& a, Side side, const ValidationOptions& opts = {});

/// lambda^S_x = lambda_{x^-1} S_{x^-1}. Throws NotIntegral unless the input
/// is a nonzero left integral.
XiIntegral antipode_transport(const HopfXiCoalgebra& a, const XiIntegral& l);

/// g_x = (id (x) lambda_1) Delta_{x,1}(a) / lambda_x(a) for a nonzero right
/// integral, verified against (id (x) lambda_y) Delta_{x,y} = g_x lambda_{xy}
/// for all (x, y), Xi-grouplikeness, and the distinguished grouplike of
/// the degree-one Hopf algebra. Throws DefiningIdentityFailed.
GrouplikeFamily distinguished_grouplike(const HopfXiCoalgebra& a, const ValidationOptions& opts = {});

/// The Hopf Xi-module M_x = A*_{x^-1} whose coinvariants are the right
/// integrals. In terms of the dual bases:
///   (a . f)(v) = f(S_{x^-1}(a) v)
///   rho_{x,y}(f) = sum_i a_i (x) (f (x) a^i) Delta_{(xy)^-1,x}
///   psi_{x,e} = transpose of phi_{(xi(e)x)^-1, x^-1.e}
/// The result is validated and its coinvariants compared with the right
/// integrals; throws AxiomCheckFailed when either gate fails.
HopfXiModule dual_hopf_module(const HopfXiCoalgebra& a, const ValidationOptions& opts = {});

} // namespace xhopf
