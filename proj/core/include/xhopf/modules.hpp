#pragma once

#include <vector>

#include "xhopf/xi_hopf.hpp"

namespace xhopf {

/// A graded module over a Hopf Xi-coalgebra: a vector space M_x per x with
/// an A_x-action r_x: A_x (x) M_x -> M_x, stored as an m_x x (d_x m_x)
/// matrix. Zero components are allowed.
struct AModule {
    std::vector<std::size_t> dims;
    std::vector<Matrix> action;

    std::size_t total_dim() const;
    /// Degrees with a nonzero component, ascending.
    std::vector<Elem> support() const;
    bool operator==(const AModule&) const = default;
};

/// Matrix of m |-> r_x(a (x) m).
Matrix action_of(const HopfXiCoalgebra& a, const AModule& m, Elem x, const Vector& elem);

/// Associativity and unitality per component. Throws ShapeMismatch or
/// MixedFields when the module does not fit `a`.
Report validate_module(const HopfXiCoalgebra& a, const AModule& m);

/// k in degree 1 with A_1 acting through the counit.
AModule unit_module(const HopfXiCoalgebra& a);
/// A module concentrated in degree x with the given action matrix.
AModule concentrated(const HopfXiCoalgebra& a, Elem x, Matrix action);
/// A_x acting on itself by left multiplication.
AModule regular_module(const HopfXiCoalgebra& a, Elem x);
AModule zero_module(const HopfXiCoalgebra& a);

/// (M (x) N)_x = sum over yz = x of M_y (x) N_z, blocks ordered by ascending
/// y, acting through Delta_{y,z}.
AModule tensor_modules(const HopfXiCoalgebra& a, const AModule& m, const AModule& n);
/// Offset of the block M_y (x) N_{y^-1 x} inside (M (x) N)_x.
std::size_t tensor_block_offset(const FiniteGroup& h, const AModule& m, const AModule& n, Elem x, Elem y);

/// phi*_e(N)_x = N_{xi(e)x} with action r_{xi(e)x}(phi_{x,e} (x) id).
AModule pullback_phi_e(const HopfXiCoalgebra& a, const AModule& n, Elem e);

/// A morphism of degree e: blocks[x] maps M_x to N_{xi(e)x}.
struct GradedHom {
    Elem degree = 0;
    std::vector<Matrix> blocks;
    bool operator==(const GradedHom&) const = default;
};

/// Block shapes and A-linearity alpha_x r_x = r_{xi(e)x}(phi_{x,e} (x) alpha_x).
Report check_graded_hom(const HopfXiCoalgebra& a, const AModule& m, const AModule& n, const GradedHom& f);
bool is_graded_hom(const HopfXiCoalgebra& a, const AModule& m, const AModule& n, const GradedHom& f);

/// Basis of Hom^e(M, N) from the kernel of the stacked linearity system;
/// unknowns are the block entries, row-major, blocks in ascending x.
std::vector<GradedHom> hom_space(const HopfXiCoalgebra& a, const AModule& m, const AModule& n, Elem e);
/// hom_space for every e, indexed by e; degrees are solved concurrently.
std::vector<std::vector<GradedHom>> hom_spaces(const HopfXiCoalgebra& a, const AModule& m, const AModule& n,
                                               const ValidationOptions& opts = {});

GradedHom identity_hom(const HopfXiCoalgebra& a, const AModule& m);
/// f after g, of degree |f| |g|. Throws NonComposable on mismatched blocks.
GradedHom compose_homs(const HopfXiCoalgebra& a, const GradedHom& f, const GradedHom& g);
/// f: M -> M' and g: N -> N' give f (x) g: M (x) N -> M' (x) N' of degree
/// |f| . |M|(|g|). Throws NotHomogeneous unless M has exactly one nonzero
/// component and ShapeMismatch when the blocks do not fit the modules.
GradedHom tensor_homs(const HopfXiCoalgebra& a, const GradedHom& f, const GradedHom& g, const AModule& m,
                      const AModule& n, const AModule& m2, const AModule& n2);

/// The dual of a module concentrated in degree x, living in degree x^-1,
/// with A acting by r(a (x) f)(v) = f(S_x(a) v). Evaluations and
/// coevaluations are stored as vectors in the degree-one component of the
/// relevant tensor product:
///   lev(f (x) v) = f(v)              on M* (x) M
///   lcoev = sum_i v_i (x) v^i        in M (x) M*
///   rev(v (x) f) = f(G_x v)          on M (x) M*
///   rcoev = sum_i v^i (x) G_x^-1 v_i in M* (x) M
struct DualModule {
    AModule dual;
    Elem degree = 0; ///< degree of M
    Vector lev, lcoev, rev, rcoev;
    /// Zig-zag identities and A-linearity of the four maps.
    Report checks;
};

/// Throws NotHomogeneous unless M has exactly one nonzero component and
/// NotPivotal unless G is a pivotal grouplike family.
DualModule dual_module(const HopfXiCoalgebra& a, const AModule& m, const GrouplikeFamily& g);

struct EDirectSum {
    AModule sum;
    std::vector<GradedHom> injections;  ///< degree e
    std::vector<GradedHom> projections; ///< degree e^-1
};

/// The direct sum of the pullbacks along e^-1, with injections q_a of degree
/// e and projections p_a of degree e^-1.
EDirectSum e_direct_sum(const HopfXiCoalgebra& a, const std::vector<AModule>& modules, Elem e);

} // namespace xhopf
