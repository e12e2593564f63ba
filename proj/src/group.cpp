#include "polyadic/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace polyadic {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::NotLatinSquare: return "NotLatinSquare";
        case ErrorCode::NotAssociative: return "NotAssociative";
        case ErrorCode::NoIdentity: return "NoIdentity";
        case ErrorCode::KTooLarge: return "KTooLarge";
        case ErrorCode::NotASubgroup: return "NotASubgroup";
        case ErrorCode::NotNormal: return "NotNormal";
        case ErrorCode::OrderBudgetExceeded: return "OrderBudgetExceeded";
        case ErrorCode::TableBudgetExceeded: return "TableBudgetExceeded";
        case ErrorCode::AxiomViolation: return "AxiomViolation";
        case ErrorCode::NotCentral: return "NotCentral";
        case ErrorCode::WrongLength: return "WrongLength";
        case ErrorCode::BadLength: return "BadLength";
        case ErrorCode::NoSolution: return "NoSolution";
        case ErrorCode::MultipleSolutions: return "MultipleSolutions";
        case ErrorCode::IdentityMismatch: return "IdentityMismatch";
        case ErrorCode::FormulaMismatch: return "FormulaMismatch";
        case ErrorCode::MapNotHomomorphism: return "MapNotHomomorphism";
        case ErrorCode::DegenerateEigenbasis: return "DegenerateEigenbasis";
        case ErrorCode::EmptyKernel: return "EmptyKernel";
        case ErrorCode::NotInKernel: return "NotInKernel";
        case ErrorCode::AnchorMismatch: return "AnchorMismatch";
        case ErrorCode::LiftMismatch: return "LiftMismatch";
        case ErrorCode::HomomorphismFailure: return "HomomorphismFailure";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "UnknownError";
}

int FiniteGroup::element_order(int x) const {
    int acc = x;
    int k = 1;
    while (acc != identity) {
        acc = op(acc, x);
        ++k;
    }
    return k;
}

int FiniteGroup::exponent() const {
    long long e = 1;
    for (int x = 0; x < order; ++x) e = std::lcm(e, (long long)element_order(x));
    return static_cast<int>(e);
}

bool FiniteGroup::is_abelian() const {
    for (int x = 0; x < order; ++x)
        for (int y = x + 1; y < order; ++y)
            if (op(x, y) != op(y, x)) return false;
    return true;
}

bool verify_homomorphism(const GroupHom& hom) {
    const int m = hom.source.order;
    if ((int)hom.map.size() != m) return false;
    for (int v : hom.map)
        if (v < 0 || v >= hom.target.order) return false;
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            if (hom.map[hom.source.op(x, y)] != hom.target.op(hom.map[x], hom.map[y]))
                return false;
    if (hom.bijective) {
        if (hom.source.order != hom.target.order) return false;
        std::vector<char> seen(hom.target.order, 0);
        for (int v : hom.map) {
            if (seen[v]) return false;
            seen[v] = 1;
        }
    }
    return true;
}

namespace detail {

FiniteGroup make_group_unchecked(int order, std::vector<int> flat, std::string label) {
    FiniteGroup G;
    G.order = order;
    G.cayley = std::move(flat);
    G.label = std::move(label);
    G.identity = -1;
    for (int e = 0; e < order && G.identity < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < order && ok; ++x)
            ok = G.cayley[e * order + x] == x && G.cayley[x * order + e] == x;
        if (ok) G.identity = e;
    }
    if (G.identity < 0) throw Error(ErrorCode::NoIdentity, "no two-sided identity in '" + G.label + "'");
    G.inverses.assign(order, -1);
    for (int x = 0; x < order; ++x) {
        for (int y = 0; y < order; ++y) {
            if (G.cayley[x * order + y] == G.identity) {
                G.inverses[x] = y;
                break;
            }
        }
        if (G.inverses[x] < 0)
            throw Error(ErrorCode::NoIdentity, "element " + std::to_string(x) + " has no inverse");
    }
    return G;
}

}  // namespace detail

FiniteGroup group_from_table(const std::vector<std::vector<int>>& table, const std::string& label) {
    const int m = static_cast<int>(table.size());
    if (m == 0) throw Error(ErrorCode::OutOfRange, "empty table");
    std::vector<int> flat;
    flat.reserve(static_cast<size_t>(m) * m);
    for (int r = 0; r < m; ++r) {
        if ((int)table[r].size() != m)
            throw Error(ErrorCode::OutOfRange, "row " + std::to_string(r) + " has length " +
                                                   std::to_string(table[r].size()) + ", expected " +
                                                   std::to_string(m));
        for (int v : table[r]) {
            if (v < 0 || v >= m)
                throw Error(ErrorCode::OutOfRange,
                            "entry " + std::to_string(v) + " out of range in row " + std::to_string(r));
            flat.push_back(v);
        }
    }

    // Latin square: each row and column is a permutation.
    std::vector<char> seen(m);
    for (int r = 0; r < m; ++r) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int c = 0; c < m; ++c) {
            int v = flat[r * m + c];
            if (seen[v])
                throw Error(ErrorCode::NotLatinSquare, "row " + std::to_string(r) +
                                                           " repeats entry " + std::to_string(v) +
                                                           " at column " + std::to_string(c));
            seen[v] = 1;
        }
    }
    for (int c = 0; c < m; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int r = 0; r < m; ++r) {
            int v = flat[r * m + c];
            if (seen[v])
                throw Error(ErrorCode::NotLatinSquare, "column " + std::to_string(c) +
                                                           " repeats entry " + std::to_string(v) +
                                                           " at row " + std::to_string(r));
            seen[v] = 1;
        }
    }

    // Two-sided identity, before the associativity pass so that the error
    // names the cheaper witness when both fail.
    int identity = -1;
    for (int e = 0; e < m && identity < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < m && ok; ++x)
            ok = flat[e * m + x] == x && flat[x * m + e] == x;
        if (ok) identity = e;
    }
    if (identity < 0) throw Error(ErrorCode::NoIdentity, "no two-sided identity element");

    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            for (int z = 0; z < m; ++z)
                if (flat[flat[x * m + y] * m + z] != flat[x * m + flat[y * m + z]])
                    throw Error(ErrorCode::NotAssociative,
                                "(x,y,z)=(" + std::to_string(x) + "," + std::to_string(y) + "," +
                                    std::to_string(z) + "): (xy)z=" +
                                    std::to_string(flat[flat[x * m + y] * m + z]) + " != x(yz)=" +
                                    std::to_string(flat[x * m + flat[y * m + z]]));

    return detail::make_group_unchecked(m, std::move(flat), label.empty() ? "order-" + std::to_string(m) : label);
}

FiniteGroup cyclic_group(int m) {
    if (m < 1) throw Error(ErrorCode::OutOfRange, "cyclic group order must be positive");
    std::vector<int> flat(static_cast<size_t>(m) * m);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) flat[x * m + y] = (x + y) % m;
    return detail::make_group_unchecked(m, std::move(flat), "Z" + std::to_string(m));
}

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
    const int ma = A.order, mb = B.order, m = ma * mb;
    std::vector<int> flat(static_cast<size_t>(m) * m);
    for (int xa = 0; xa < ma; ++xa)
        for (int xb = 0; xb < mb; ++xb)
            for (int ya = 0; ya < ma; ++ya)
                for (int yb = 0; yb < mb; ++yb) {
                    int x = xa * mb + xb, y = ya * mb + yb;
                    flat[x * m + y] = A.op(xa, ya) * mb + B.op(xb, yb);
                }
    return detail::make_group_unchecked(m, std::move(flat), A.label + "x" + B.label);
}

FiniteGroup symmetric_group(int k) {
    if (k < 1) throw Error(ErrorCode::OutOfRange, "k must be positive");
    if (k > 5) throw Error(ErrorCode::KTooLarge, "symmetric_group capped at k=5, got " + std::to_string(k));
    std::vector<std::vector<int>> perms;
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const int m = static_cast<int>(perms.size());
    std::map<std::vector<int>, int> rank;
    for (int i = 0; i < m; ++i) rank[perms[i]] = i;
    std::vector<int> flat(static_cast<size_t>(m) * m);
    std::vector<int> comp(k);
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t) {
            for (int i = 0; i < k; ++i) comp[i] = perms[s][perms[t][i]];
            flat[s * m + t] = rank[comp];
        }
    return detail::make_group_unchecked(m, std::move(flat), "S" + std::to_string(k));
}

std::vector<int> subgroup_generated(const FiniteGroup& G, const std::vector<int>& gens) {
    for (int g : gens)
        if (g < 0 || g >= G.order) throw Error(ErrorCode::OutOfRange, "generator out of range");
    std::vector<char> in(G.order, 0);
    std::vector<int> frontier{G.identity};
    in[G.identity] = 1;
    for (int g : gens)
        if (!in[g]) {
            in[g] = 1;
            frontier.push_back(g);
        }
    // Closure under product with generators and their inverses reaches the
    // full generated subgroup (finite, so inverses are powers).
    for (size_t head = 0; head < frontier.size(); ++head) {
        int x = frontier[head];
        for (int g : gens) {
            for (int y : {G.op(x, g), G.op(g, x), G.op(x, G.inv(g)), G.inv(x)}) {
                if (!in[y]) {
                    in[y] = 1;
                    frontier.push_back(y);
                }
            }
        }
        int xi = G.inv(x);
        if (!in[xi]) {
            in[xi] = 1;
            frontier.push_back(xi);
        }
    }
    std::vector<int> out;
    for (int x = 0; x < G.order; ++x)
        if (in[x]) out.push_back(x);
    return out;
}

bool is_subgroup(const FiniteGroup& G, const std::vector<int>& H) {
    if (H.empty()) return false;
    std::vector<char> in(G.order, 0);
    for (int h : H) {
        if (h < 0 || h >= G.order) return false;
        in[h] = 1;
    }
    if (!in[G.identity]) return false;
    for (int a : H) {
        if (!in[G.inv(a)]) return false;
        for (int b : H)
            if (!in[G.op(a, b)]) return false;
    }
    return true;
}

bool is_normal(const FiniteGroup& G, const std::vector<int>& H) {
    if (!is_subgroup(G, H)) throw Error(ErrorCode::NotASubgroup, "H is not a subgroup");
    std::vector<char> in(G.order, 0);
    for (int h : H) in[h] = 1;
    for (int g = 0; g < G.order; ++g)
        for (int h : H)
            if (!in[G.op(G.op(g, h), G.inv(g))]) return false;
    return true;
}

QuotientResult quotient_group(const FiniteGroup& G, const std::vector<int>& H) {
    if (!is_normal(G, H)) throw Error(ErrorCode::NotNormal, "H is not normal in G");
    std::vector<int> coset_index(G.order, -1);
    std::vector<int> reps;
    for (int x = 0; x < G.order; ++x) {
        if (coset_index[x] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int h : H) coset_index[G.op(x, h)] = c;
    }
    const int q = static_cast<int>(reps.size());
    std::vector<int> flat(static_cast<size_t>(q) * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) flat[a * q + b] = coset_index[G.op(reps[a], reps[b])];
    QuotientResult result;
    result.quotient = detail::make_group_unchecked(q, std::move(flat), G.label + "/H");
    result.coset_index = std::move(coset_index);
    return result;
}

namespace {

// Extends the partial map gens[0..t) -> images[0..t) over the subgroup the
// assigned generators generate; false on any product conflict.
bool extend_partial_map(const FiniteGroup& A, const FiniteGroup& B,
                        const std::vector<int>& gens, const std::vector<int>& images,
                        std::vector<int>& map) {
    std::fill(map.begin(), map.end(), -1);
    map[A.identity] = B.identity;
    std::vector<int> frontier{A.identity};
    for (size_t head = 0; head < frontier.size(); ++head) {
        int x = frontier[head];
        // images may be a prefix of gens mid-search; close over that prefix.
        for (size_t g = 0; g < images.size(); ++g) {
            int xg = A.op(x, gens[g]);
            int yh = B.op(map[x], images[g]);
            if (map[xg] < 0) {
                map[xg] = yh;
                frontier.push_back(xg);
            } else if (map[xg] != yh) {
                return false;
            }
        }
    }
    // Injectivity on the generated subgroup.
    std::vector<char> seen(B.order, 0);
    for (int x : frontier) {
        if (seen[map[x]]) return false;
        seen[map[x]] = 1;
    }
    return true;
}

}  // namespace

std::optional<GroupHom> is_isomorphic(const FiniteGroup& A, const FiniteGroup& B, int order_budget) {
    if (A.order != B.order) return std::nullopt;
    if (A.order > order_budget)
        throw Error(ErrorCode::OrderBudgetExceeded,
                    "isomorphism search bounded at order " + std::to_string(order_budget));

    // Element-order profiles must agree.
    const int m = A.order;
    std::vector<int> ord_a(m), ord_b(m);
    for (int x = 0; x < m; ++x) {
        ord_a[x] = A.element_order(x);
        ord_b[x] = B.element_order(x);
    }
    {
        std::vector<int> pa = ord_a, pb = ord_b;
        std::sort(pa.begin(), pa.end());
        std::sort(pb.begin(), pb.end());
        if (pa != pb) return std::nullopt;
    }

    // Small generating set of A: greedily add elements outside the closure.
    std::vector<int> gens;
    {
        std::vector<int> closure = subgroup_generated(A, {});
        std::vector<char> in(m, 0);
        for (int x : closure) in[x] = 1;
        for (int x = 0; x < m && (int)closure.size() < m; ++x) {
            if (in[x]) continue;
            gens.push_back(x);
            closure = subgroup_generated(A, gens);
            std::fill(in.begin(), in.end(), 0);
            for (int y : closure) in[y] = 1;
        }
    }

    // Subgroup sizes along the generator chain, for pruning.
    std::vector<int> chain_size(gens.size());
    for (size_t t = 0; t < gens.size(); ++t)
        chain_size[t] = static_cast<int>(
            subgroup_generated(A, std::vector<int>(gens.begin(), gens.begin() + t + 1)).size());

    std::vector<int> images;
    std::vector<int> map(m, -1);

    std::function<bool()> search = [&]() -> bool {
        size_t t = images.size();
        if (t == gens.size()) return extend_partial_map(A, B, gens, images, map);
        for (int cand = 0; cand < m; ++cand) {
            if (ord_b[cand] != ord_a[gens[t]]) continue;
            images.push_back(cand);
            bool viable = extend_partial_map(A, B, gens, images, map);
            if (viable) {
                // The images must generate a subgroup of matching size.
                std::vector<int> sub = subgroup_generated(B, images);
                viable = (int)sub.size() == chain_size[t];
            }
            if (viable && search()) return true;
            images.pop_back();
        }
        return false;
    };

    if (gens.empty()) {
        // Trivial group.
        GroupHom hom{A, B, std::vector<int>{}, true};
        hom.map.assign(m, B.identity);
        return hom;
    }
    if (!search()) return std::nullopt;

    GroupHom hom{A, B, map, true};
    if (!verify_homomorphism(hom))
        throw Error(ErrorCode::MapNotHomomorphism, "isomorphism search produced an invalid map");
    return hom;
}

}  // namespace polyadic
