#pragma once

#include <optional>
#include <vector>

#include "xhopf/group.hpp"
#include "xhopf/matrix.hpp"
#include "xhopf/options.hpp"
#include "xhopf/report.hpp"

namespace xhopf {

/// A finite-dimensional unital algebra given by structure constants. The
/// product is stored as the matrix of A (x) A -> A, so column i * dim + j
/// holds the coordinates of e_i e_j.
class ComponentAlgebra {
  public:
    ComponentAlgebra() = default;
    /// Throws ShapeMismatch unless `mul` is dim x dim^2 and `unit` has length dim.
    ComponentAlgebra(Matrix mul, Vector unit);

    /// c[i][j][k] is the coefficient of e_k in e_i e_j.
    static ComponentAlgebra from_structure_constants(FieldSpec field,
                                                     const std::vector<std::vector<Vector>>& c, Vector unit);
    /// The ground field as a one-dimensional algebra.
    static ComponentAlgebra ground(FieldSpec field);
    /// k[G] on the basis of group elements.
    static ComponentAlgebra group_algebra(FieldSpec field, const FiniteGroup& g);

    std::size_t dim() const { return unit_.size(); }
    FieldSpec field() const { return mul_.field(); }
    const Matrix& mul() const { return mul_; }
    const Vector& unit() const { return unit_; }
    /// The unit map k -> A as a dim x 1 matrix.
    Matrix unit_map() const { return Matrix::column(field(), unit_); }

    Vector multiply(const Vector& a, const Vector& b) const;
    /// Matrix of b |-> a b.
    Matrix left_mult(const Vector& a) const;
    /// Inverse of `a`, or nothing when `a` is not a unit.
    std::optional<Vector> inverse(const Vector& a) const;

    bool operator==(const ComponentAlgebra& rhs) const { return mul_ == rhs.mul_ && unit_ == rhs.unit_; }

  private:
    Matrix mul_;
    Vector unit_;
};

/// Associativity and two-sided unitality, names prefixed by `prefix`.
Report validate_algebra(const ComponentAlgebra& a, const std::string& prefix = {});

/// A Hopf H-coalgebra presented by structure constants: algebras A_x for x in
/// H, coproducts Delta_{x,y}: A_{xy} -> A_x (x) A_y, a counit on A_1, and an
/// optional antipode S_x: A_{x^-1} -> A_x. Construction checks shapes and
/// nondegeneracy (every A_x nonzero) but no axioms.
class GradedHopfCoalgebra {
  public:
    GradedHopfCoalgebra() = default;
    /// `coproduct[x * |H| + y]` is Delta_{x,y}; `counit` is 1 x dim A_1.
    GradedHopfCoalgebra(FiniteGroup h, std::vector<ComponentAlgebra> components, std::vector<Matrix> coproduct,
                        Matrix counit, std::optional<std::vector<Matrix>> antipode = std::nullopt);

    FieldSpec field() const { return counit_.field(); }
    const FiniteGroup& H() const { return h_; }
    const ComponentAlgebra& component(Elem x) const { return components_[x]; }
    const std::vector<ComponentAlgebra>& components() const { return components_; }
    std::size_t dim(Elem x) const { return components_[x].dim(); }
    const Matrix& coproduct(Elem x, Elem y) const { return coproduct_[x * h_.order() + y]; }
    const std::vector<Matrix>& coproducts() const { return coproduct_; }
    const Matrix& counit() const { return counit_; }

    bool has_antipode() const { return antipode_.has_value(); }
    /// Throws MissingAntipode.
    const Matrix& antipode(Elem x) const;
    const std::optional<std::vector<Matrix>>& antipodes() const { return antipode_; }
    GradedHopfCoalgebra with_antipode(std::optional<std::vector<Matrix>> antipode) const;

    bool operator==(const GradedHopfCoalgebra& rhs) const = default;

  private:
    FiniteGroup h_;
    std::vector<ComponentAlgebra> components_;
    std::vector<Matrix> coproduct_;
    Matrix counit_;
    std::optional<std::vector<Matrix>> antipode_;
};

/// Coassociativity (Delta_{x,y} (x) id) Delta_{xy,z} = (id (x) Delta_{y,z}) Delta_{x,yz}
/// for all x, y, z and both counit laws.
Report validate_h_coalgebra(const GradedHopfCoalgebra& a, const ValidationOptions& opts = {});

/// Component algebras, then multiplicativity and unitality of every
/// Delta_{x,y} and of the counit.
Report validate_bicoalgebra(const GradedHopfCoalgebra& a, const ValidationOptions& opts = {});

struct AntipodeSolution {
    std::vector<Matrix> maps; ///< S_x, indexed by x
    bool unique = true;       ///< every defining system had a unique solution
};

/// Solves mu_x (S_x (x) id) Delta_{x^-1,x} = eta_x epsilon for every x, then
/// checks the other-sided identity and invertibility. Nothing when some
/// system is inconsistent or some S_x fails those checks.
std::optional<AntipodeSolution> compute_antipode(const GradedHopfCoalgebra& a);

/// Both defining identities of the antipode. Throws MissingAntipode.
Report validate_antipode(const GradedHopfCoalgebra& a);

/// Anti-multiplicativity, unitality, anti-comultiplicativity, counit
/// compatibility and bijectivity of the antipode. Throws MissingAntipode.
Report antipode_properties(const GradedHopfCoalgebra& a);

/// f * g = m_B (f (x) g) Delta_{x,y} for f defined on A_x and g on A_y, both
/// valued in B. Throws ShapeMismatch.
Matrix convolution_product(const GradedHopfCoalgebra& a, const ComponentAlgebra& b, const Matrix& f, Elem x,
                           const Matrix& g, Elem y);

/// Family (G_x) with G_x in A_x.
using GrouplikeFamily = std::vector<Vector>;

/// Delta_{x,y}(G_{xy}) = G_x (x) G_y for all x, y and epsilon(G_1) = 1.
Report grouplike_report(const GradedHopfCoalgebra& a, const GrouplikeFamily& g);
bool is_grouplike(const GradedHopfCoalgebra& a, const GrouplikeFamily& g);
/// (S_x(G_{x^-1}))_x, verified to be the pointwise inverse. Throws
/// NotGrouplike or MissingAntipode.
GrouplikeFamily grouplike_inverse(const GradedHopfCoalgebra& a, const GrouplikeFamily& g);
GrouplikeFamily grouplike_product(const GradedHopfCoalgebra& a, const GrouplikeFamily& g, const GrouplikeFamily& h);
GrouplikeFamily unit_family(const GradedHopfCoalgebra& a);

/// All grouplike families whose components are drawn from the unit, the
/// basis vectors and their negatives. Ordered by candidate index per
/// component, lexicographically in x.
std::vector<GrouplikeFamily> enumerate_grouplikes(const GradedHopfCoalgebra& a);

/// S_x S_{x^-1}(a) = G_x a G_x^-1 on a basis of every A_x. Throws
/// NotGrouplike or MissingAntipode.
Report is_pivotal_element(const GradedHopfCoalgebra& a, const GrouplikeFamily& g);

/// The classical Hopf algebra (A_1, Delta_{1,1}, epsilon, S_1) as a Hopf
/// coalgebra over the trivial group.
GradedHopfCoalgebra degree_one_part(const GradedHopfCoalgebra& a);

} // namespace xhopf
