#pragma once

#include <cstddef>
#include <vector>

#include "xhopf/report.hpp"

namespace xhopf {

/// Group elements are indices 0..n-1.
using Elem = std::size_t;

/// A finite group given by its multiplication table, t[a][b] = a*b.
/// Construction only checks the table shape; the group axioms are checked
/// by `validate_group`. Identity and inverses are located by search, so a
/// table that is not a group still yields an inspectable object.
class FiniteGroup {
  public:
    /// The trivial group.
    FiniteGroup() : FiniteGroup(std::vector<std::vector<Elem>>{{0}}) {}
    /// Throws ShapeMismatch for a non-square table or out-of-range entries.
    explicit FiniteGroup(std::vector<std::vector<Elem>> table);

    std::size_t order() const { return table_.size(); }
    Elem mul(Elem a, Elem b) const { return table_[a][b]; }
    Elem identity() const { return identity_; }
    /// Returns order() when `a` has no two-sided inverse.
    Elem inverse(Elem a) const { return inverses_[a]; }
    bool has_identity() const { return has_identity_; }
    const std::vector<std::vector<Elem>>& table() const { return table_; }

    bool is_abelian() const;
    /// Smallest k >= 1 with a^k = 1.
    std::size_t element_order(Elem a) const;

    bool operator==(const FiniteGroup& rhs) const { return table_ == rhs.table_; }

  private:
    std::vector<std::vector<Elem>> table_;
    Elem identity_ = 0;
    bool has_identity_ = false;
    std::vector<Elem> inverses_;
};

/// Reports violated group axioms with witnesses. Also requires the identity
/// to be element 0.
Report validate_group(const FiniteGroup& g);

FiniteGroup cyclic(std::size_t n);
/// Elements (a, b) have index a * |h| + b.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
/// Permutations of {0..n-1} in lexicographic order, composed as
/// (p*q)(i) = p(q(i)). Throws InvalidArgument for n = 0 or n > 4.
FiniteGroup symmetric(std::size_t n);
/// Permutation with index `k` in `symmetric(n)`.
std::vector<std::size_t> permutation(std::size_t n, Elem k);

struct GroupHom {
    FiniteGroup source;
    FiniteGroup target;
    std::vector<Elem> map;

    Elem operator()(Elem a) const { return map[a]; }
};

Report validate_hom(const GroupHom& f);
GroupHom identity_hom(const FiniteGroup& g);

/// Left action of `actor` on `space`, table[x][e] = x . e.
struct GroupAction {
    FiniteGroup actor;
    FiniteGroup space;
    std::vector<std::vector<Elem>> table;

    Elem operator()(Elem x, Elem e) const { return table[x][e]; }
};

/// Unit law, compatibility with the actor's product, and that each x acts by
/// a group automorphism.
Report validate_action(const GroupAction& a);
GroupAction trivial_action(const FiniteGroup& actor, const FiniteGroup& space);

/// Action of h on the source of `embedding` by x . e = x e x^-1, transported
/// through the embedding. Throws NotNormal when some conjugate leaves the
/// image, InvalidArgument when `embedding` is not an injective hom into h.
GroupAction conjugation_action(const FiniteGroup& h, const GroupHom& embedding);

/// Embedding of the subgroup of g formed by `elements`. The subgroup's own
/// indices follow the ascending order of `elements`, so the identity comes
/// first. Throws InvalidArgument when `elements` is not a subgroup.
GroupHom subgroup_embedding(const FiniteGroup& g, std::vector<Elem> elements);

bool is_normal_subset(const FiniteGroup& g, const std::vector<Elem>& elements);

} // namespace xhopf
