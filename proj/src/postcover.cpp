#include "polyadic/postcover.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace polyadic {

namespace {

constexpr int kMaxCosetWitnesses = 16;

void record(CosetTheoremReport& rep, std::vector<int> inputs, int lhs, int rhs,
            std::string detail) {
    if (static_cast<int>(rep.witnesses.size()) < kMaxCosetWitnesses)
        rep.witnesses.push_back({std::move(inputs), lhs, rhs, std::move(detail)});
}

}  // namespace

PostCover build_post_cover(const PolyadicGroup& G, int a) {
    const int n = G.arity;
    const int m = G.order;
    const int r = n - 1;
    if (a < 0 || a >= m)
        throw Error(ErrorCode::OutOfRange, "anchor " + std::to_string(a) +
                                               " out of range for order " + std::to_string(m));
    const long long M = static_cast<long long>(r) * m;
    if (M > kOrderBudget)
        throw Error(ErrorCode::OrderBudgetExceeded,
                    "cover order " + std::to_string(M) + " exceeds budget " +
                        std::to_string(kOrderBudget));

    const int abar = skew(G, a);
    std::vector<std::vector<int>> table(M, std::vector<int>(M));
    std::vector<int> word;
    word.reserve(2 * n - 1);
    for (int x = 0; x < m; ++x)
        for (int i = 0; i < r; ++i)
            for (int y = 0; y < m; ++y)
                for (int j = 0; j < r; ++j) {
                    const int ij = (i + j + 1) % r;
                    word.clear();
                    word.push_back(x);
                    word.insert(word.end(), i, a);
                    word.push_back(y);
                    word.insert(word.end(), j, a);
                    word.push_back(abar);
                    word.insert(word.end(), n - 2 - ij, a);
                    const int z = evaluate_word(G, word);
                    table[x * r + i][y * r + j] = z * r + ij;
                }

    PostCover PC;
    PC.base = G;
    PC.anchor = a;
    PC.cover = group_from_table(table, G.label + "*_" + std::to_string(a));
    PC.embed.resize(m);
    PC.H.resize(m);
    for (int x = 0; x < m; ++x) {
        PC.embed[x] = x * r;
        PC.H[x] = x * r + (n - 2);
    }
    return PC;
}

std::pair<int, int> cover_identity(const PostCover& PC) {
    const int n = PC.base.arity;
    const int abar = skew(PC.base, PC.anchor);
    const int idx = PC.pair_index(abar, n - 2);
    if (idx != PC.cover.identity)
        throw Error(ErrorCode::IdentityMismatch,
                    "(skew(a), n-2) indexes " + std::to_string(idx) + " but cover identity is " +
                        std::to_string(PC.cover.identity));
    return {abar, n - 2};
}

std::pair<int, int> inverse_by_formula(const PostCover& PC, int x, int i) {
    const PolyadicGroup& G = PC.base;
    const int n = G.arity;
    const int r = n - 1;
    const int m = G.order;
    const int a = PC.anchor;
    if (x < 0 || x >= m || i < 0 || i >= r)
        throw Error(ErrorCode::OutOfRange, "pair (" + std::to_string(x) + "," +
                                               std::to_string(i) + ") out of range");

    int ix, ik;
    if (n == 2) {
        // The closed formula needs n-3 >= 0 copies of x; at n=2 the cover is
        // just G with identity skew(a), so invert directly.
        const int abar = skew(G, a);
        std::vector<int> others{x};
        ix = solve(G, 2, abar, others);
        ik = 0;
    } else {
        const int abar = skew(G, a);
        const int xbar = skew(G, x);
        // The trailing run of a's has (i+1) mod (n-1) copies: at the top
        // grade i = n-2 the word shortens to a single f application, which
        // is what makes the product with (x,i) close on the identity.
        std::vector<int> word;
        word.reserve(2 * n - 1);
        word.push_back(abar);
        word.insert(word.end(), n - 2 - i, a);
        word.push_back(xbar);
        word.insert(word.end(), n - 3, x);
        word.push_back(abar);
        word.insert(word.end(), (i + 1) % r, a);
        ix = evaluate_word(G, word);
        ik = ((n - 3 - i) % r + r) % r;
    }

    const int expected = PC.cover.inv(PC.pair_index(x, i));
    if (PC.pair_index(ix, ik) != expected) {
        auto [ex, ei] = PC.pair_of(expected);
        throw Error(ErrorCode::FormulaMismatch,
                    "inverse formula gives (" + std::to_string(ix) + "," + std::to_string(ik) +
                        ") for (" + std::to_string(x) + "," + std::to_string(i) +
                        ") but table inverse is (" + std::to_string(ex) + "," +
                        std::to_string(ei) + ")");
    }
    return {ix, ik};
}

CosetTheoremReport verify_coset_theorem(const PostCover& PC, std::uint64_t seed) {
    CosetTheoremReport rep;
    const FiniteGroup& C = PC.cover;
    const PolyadicGroup& G = PC.base;
    const int n = G.arity;
    const int m = G.order;

    rep.h_is_subgroup = is_subgroup(C, PC.H);
    if (!rep.h_is_subgroup) record(rep, PC.H, 0, 0, "H is not closed under the cover product");

    if (rep.h_is_subgroup) {
        rep.h_is_normal = is_normal(C, PC.H);
        if (!rep.h_is_normal) record(rep, PC.H, 0, 0, "H is not normal in the cover");
    }

    if (rep.h_is_normal) {
        QuotientResult q = quotient_group(C, PC.H);
        rep.quotient_cyclic = is_isomorphic(q.quotient, cyclic_group(n - 1)).has_value();
        if (!rep.quotient_cyclic)
            record(rep, {}, q.quotient.order, n - 1, "cover/H is not cyclic of order n-1");

        rep.g_is_coset = true;
        const int c0 = q.coset_index[PC.embed[0]];
        for (int x = 1; x < m; ++x)
            if (q.coset_index[PC.embed[x]] != c0) {
                rep.g_is_coset = false;
                record(rep, {0, x}, c0, q.coset_index[PC.embed[x]],
                       "embedded elements land in different cosets of H");
                break;
            }
    }

    // f(x_1..x_n) must match the n-fold cover product of the embedded tuple.
    rep.product_compatible = true;
    std::vector<int> tuple(n, 0);
    auto check_tuple = [&] {
        int p = PC.embed[tuple[0]];
        for (int t = 1; t < n; ++t) p = C.op(p, PC.embed[tuple[t]]);
        const int z = evaluate(G, tuple);
        if (p != PC.embed[z]) {
            rep.product_compatible = false;
            record(rep, tuple, p, PC.embed[z], "embedded product disagrees with f");
        }
    };
    double full_cost = std::pow(static_cast<double>(m), n);
    if (full_cost <= 1e6) {
        bool more = true;
        while (more) {
            check_tuple();
            more = false;
            for (int p = n - 1; p >= 0; --p) {
                if (tuple[p] + 1 < m) {
                    ++tuple[p];
                    more = true;
                    break;
                }
                tuple[p] = 0;
            }
        }
    } else {
        std::mt19937_64 rng(seed);
        for (int s = 0; s < 100'000; ++s) {
            for (int& v : tuple) v = detail::rand_index(rng, m);
            check_tuple();
        }
    }
    return rep;
}

std::optional<GroupHom> anchor_independence(const PolyadicGroup& G, int a, int b) {
    PostCover A = build_post_cover(G, a);
    PostCover B = build_post_cover(G, b);
    return is_isomorphic(A.cover, B.cover);
}

GroupHom derived_cover_structure(const FiniteGroup& A, int arity) {
    const int r = arity - 1;
    PolyadicGroup G = b_derived(A, A.identity, arity, "der" + std::to_string(arity) + "(" +
                                                          A.label + ")");
    PostCover PC = build_post_cover(G, A.identity);
    FiniteGroup target = direct_product(A, cyclic_group(r));

    GroupHom hom;
    hom.source = PC.cover;
    hom.target = target;
    hom.bijective = true;
    hom.map.resize(PC.cover.order);
    for (int x = 0; x < A.order; ++x)
        for (int i = 0; i < r; ++i) hom.map[PC.pair_index(x, i)] = x * r + (i + 1) % r;
    if (!verify_homomorphism(hom))
        throw Error(ErrorCode::MapNotHomomorphism,
                    "(x,i) -> (x,i+1) fails to carry the cover of " + G.label + " onto " +
                        target.label);
    return hom;
}

}  // namespace polyadic
