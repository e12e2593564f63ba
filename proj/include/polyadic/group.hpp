#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyadic/common.hpp"
#include "polyadic/error.hpp"

namespace polyadic {

/// Finite ordinary group on elements {0..order-1}, stored as a dense
/// Cayley table. Immutable after construction.
struct FiniteGroup {
    int order = 0;
    std::vector<int> cayley;    // row-major, cayley[x*order + y] = x*y
    int identity = 0;
    std::vector<int> inverses;
    std::string label;

    int op(int x, int y) const { return cayley[x * order + y]; }
    int inv(int x) const { return inverses[x]; }
    int element_order(int x) const;
    int exponent() const;
    bool is_abelian() const;
};

/// A map between two groups together with the data needed to re-verify it.
struct GroupHom {
    FiniteGroup source;
    FiniteGroup target;
    std::vector<int> map;  // source element -> target element
    bool bijective = false;
};

/// True iff map[x*y] = map[x]*map[y] for all pairs.
bool verify_homomorphism(const GroupHom& hom);

/// Validates the table as a group (Latin square, identity, associativity)
/// and computes identity and inverses. Full enumeration; orders above 64
/// emit a stderr warning before the O(m^3) associativity pass.
FiniteGroup group_from_table(const std::vector<std::vector<int>>& table,
                             const std::string& label = "");

/// Z_m under addition mod m.
FiniteGroup cyclic_group(int m);

/// Componentwise product; element (x, y) gets index x*|B| + y.
FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B);

/// S_k on {0..k-1}, elements indexed in lexicographic permutation order,
/// product (s*t)(i) = s(t(i)). Capped at k = 5.
FiniteGroup symmetric_group(int k);

/// Closure of gens (plus the identity) under product and inverse; sorted.
std::vector<int> subgroup_generated(const FiniteGroup& G, const std::vector<int>& gens);

/// True iff H (given as a sorted-or-not element list) is a subgroup.
bool is_subgroup(const FiniteGroup& G, const std::vector<int>& H);

/// True iff g H g^-1 = H for all g. Re-verifies that H is a subgroup.
bool is_normal(const FiniteGroup& G, const std::vector<int>& H);

struct QuotientResult {
    FiniteGroup quotient;
    std::vector<int> coset_index;  // element of G -> coset index in quotient
};

/// Group on cosets of a normal subgroup H, with the element -> coset map.
QuotientResult quotient_group(const FiniteGroup& G, const std::vector<int>& H);

/// Searches for an isomorphism by backtracking over generator images with
/// element-order pruning. Returns the map if one exists.
std::optional<GroupHom> is_isomorphic(const FiniteGroup& A, const FiniteGroup& B,
                                      int order_budget = kOrderBudget);

namespace detail {
/// Builds a FiniteGroup from a table known to satisfy the group axioms
/// (identity and inverses are located, axioms are not re-checked).
FiniteGroup make_group_unchecked(int order, std::vector<int> flat, std::string label);
}  // namespace detail

}  // namespace polyadic
