#pragma once

#include "xhopf/hopf_module.hpp"

namespace xhopf::examples {

/// id: G -> G with the conjugation action.
CrossedModule identity_crossed_module(const FiniteGroup& g);
/// Z/3 as the alternating subgroup of S_3, with conjugation.
CrossedModule a3_in_s3();
/// 1 -> Z/2, id: Z/2 -> Z/2, Z/2 -> 1 and Z/3 in S_3, in that order.
std::vector<CrossedModule> standard_crossed_modules();

/// k[Z/2] as a classical Hopf algebra (graded by the trivial group).
GradedHopfCoalgebra group_hopf_algebra(FieldSpec field, const FiniteGroup& g);

/// omega(e, g) = -1 when both are nontrivial, on Z/2 x Z/2.
std::vector<std::vector<Scalar>> sign_bicharacter(FieldSpec field);
/// k^omega[Z/2] over Z/2 -> 1.
HopfXiCoalgebra bicharacter_z2(FieldSpec field);

/// +1 / -1 per element of H: the sign of a permutation for S_3, the
/// nontrivial character for Z/2, constant 1 otherwise.
std::vector<int> sign_character(const FiniteGroup& h);
/// rho_x(g) = sign(x)^{[g != 1]} g on k[Z/2].
std::vector<Matrix> sign_twist(FieldSpec field, const FiniteGroup& h);
/// A_Xi^rho for k[Z/2] with the sign twist.
HopfXiCoalgebra sign_twisted(FieldSpec field, const CrossedModule& cm, const ValidationOptions& opts = {});

/// The Hopf coalgebra over the cokernel of cm with every component k[Z/2].
GradedHopfCoalgebra constant_pi_coalgebra(FieldSpec field, const CrossedModule& cm);

} // namespace xhopf::examples
