#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polyadic/narygroup.hpp"

namespace polyadic {

/// The Post cover of an n-ary group (G, f) at anchor a: the ordinary group on
/// pairs (x, i) with x in G and i in Z_{n-1}, indexed as x*(n-1)+i.
struct PostCover {
    PolyadicGroup base;
    int anchor = 0;
    FiniteGroup cover;
    std::vector<int> embed;  // x -> index of (x, 0)
    std::vector<int> H;      // indices of (x, n-2), the kernel of the Z_{n-1} grading

    int pair_index(int x, int i) const { return x * (base.arity - 1) + i; }
    std::pair<int, int> pair_of(int idx) const {
        return {idx / (base.arity - 1), idx % (base.arity - 1)};
    }
};

struct CosetViolation {
    std::vector<int> inputs;
    int lhs = 0;
    int rhs = 0;
    std::string detail;
};

struct CosetTheoremReport {
    bool h_is_subgroup = false;
    bool h_is_normal = false;
    bool quotient_cyclic = false;
    bool g_is_coset = false;
    bool product_compatible = false;
    std::vector<CosetViolation> witnesses;

    bool all() const {
        return h_is_subgroup && h_is_normal && quotient_cyclic && g_is_coset &&
               product_compatible;
    }
};

/// Builds the cover at anchor a. The product of (x,i) and (y,j) is
/// (f_*(x, a^(i), y, a^(j), ~a, a^(n-2-i*j)), i*j) with i*j = (i+j+1) mod (n-1);
/// the word length comes out to n or 2n-1 depending on whether i+j+1 wraps.
/// The finished table is validated as a FiniteGroup.
PostCover build_post_cover(const PolyadicGroup& G, int a);

/// Returns (~a, n-2) and asserts it indexes cover.identity.
std::pair<int, int> cover_identity(const PostCover& PC);

/// Inverse of (x,i) by the closed formula
/// (f_*(~a, a^(n-2-i), ~x, x^(n-3), ~a, a^(i+1)), (n-3-i) mod (n-1)),
/// cross-checked against the cover's table inverse.
std::pair<int, int> inverse_by_formula(const PostCover& PC, int x, int i);

/// Checks the coset-theorem facts: H is a normal subgroup, the quotient is
/// cyclic of order n-1, the embedded copy of G is one coset of H, and the
/// n-ary product matches the n-fold cover product (full enumeration when
/// m^n <= 10^6, else sampled).
CosetTheoremReport verify_coset_theorem(const PostCover& PC,
                                        std::uint64_t seed = kDefaultSeed);

/// An isomorphism between the covers at anchors a and b, found by search.
std::optional<GroupHom> anchor_independence(const PolyadicGroup& G, int a, int b);

/// For the derived group der^n(A) covered at the identity anchor: the explicit
/// isomorphism (x,i) -> (x, (i+1) mod (n-1)) onto A x Z_{n-1}, verified.
GroupHom derived_cover_structure(const FiniteGroup& A, int arity);

}  // namespace polyadic
