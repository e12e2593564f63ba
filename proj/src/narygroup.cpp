#include "polyadic/narygroup.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace polyadic {

namespace {

// m^e, saturating at cap+1 so callers can compare against a budget.
long long ipow_capped(long long m, int e, long long cap) {
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        if (m != 0 && r > cap / m) return cap + 1;
        r *= m;
    }
    return r;
}

int eval_unchecked(const PolyadicGroup& G, const int* w) {
    if (G.storage == PolyadicGroup::Storage::FullTable) {
        long long idx = 0;
        for (int i = 0; i < G.arity; ++i) idx = idx * G.order + w[i];
        return G.table[static_cast<std::size_t>(idx)];
    }
    int acc = w[0];
    for (int i = 1; i < G.arity; ++i) acc = G.base.op(acc, w[i]);
    return G.base.op(acc, G.b);
}

void require_element(const PolyadicGroup& G, int x, const char* what) {
    if (x < 0 || x >= G.order)
        throw Error(ErrorCode::OutOfRange, std::string(what) + " " + std::to_string(x) +
                                               " out of range for order " +
                                               std::to_string(G.order));
}

void record_violation(AxiomReport& rep, std::vector<int> assignment, int lhs, int rhs,
                      std::string detail) {
    rep.passed = false;
    if (static_cast<int>(rep.violations.size()) < AxiomReport::kMaxWitnesses)
        rep.violations.push_back({std::move(assignment), lhs, rhs, std::move(detail)});
}

// Advances a mixed-radix counter with all digits in {0..m-1}; false on wrap.
bool next_assignment(std::vector<int>& a, int m) {
    for (int p = static_cast<int>(a.size()) - 1; p >= 0; --p) {
        if (a[p] + 1 < m) {
            ++a[p];
            return true;
        }
        a[p] = 0;
    }
    return false;
}

void fill_skew_table(PolyadicGroup& G) {
    G.skew_table.resize(G.order);
    std::vector<int> others(G.arity - 1);
    for (int x = 0; x < G.order; ++x) {
        std::fill(others.begin(), others.end(), x);
        G.skew_table[x] = solve(G, G.arity, x, others);
    }
}

}  // namespace

int evaluate(const PolyadicGroup& G, std::span<const int> word) {
    if (static_cast<int>(word.size()) != G.arity)
        throw Error(ErrorCode::WrongLength, "evaluate needs exactly " + std::to_string(G.arity) +
                                                " elements, got " + std::to_string(word.size()));
    for (int x : word) require_element(G, x, "element");
    return eval_unchecked(G, word.data());
}

int evaluate_word(const PolyadicGroup& G, std::span<const int> word) {
    const int n = G.arity;
    const long long len = static_cast<long long>(word.size());
    if (len < n || (len - 1) % (n - 1) != 0)
        throw Error(ErrorCode::BadLength, "word length " + std::to_string(len) +
                                              " is not k(n-1)+1 for arity " + std::to_string(n));
    for (int x : word) require_element(G, x, "element");
    std::vector<int> buf(n);
    std::copy(word.begin(), word.begin() + n, buf.begin());
    int acc = eval_unchecked(G, buf.data());
    for (long long pos = n; pos < len; pos += n - 1) {
        buf[0] = acc;
        std::copy(word.begin() + pos, word.begin() + pos + (n - 1), buf.begin() + 1);
        acc = eval_unchecked(G, buf.data());
    }
    return acc;
}

int solve(const PolyadicGroup& G, int position, int target, std::span<const int> others) {
    const int n = G.arity;
    if (position < 1 || position > n)
        throw Error(ErrorCode::OutOfRange,
                    "solve position " + std::to_string(position) + " not in 1.." + std::to_string(n));
    if (static_cast<int>(others.size()) != n - 1)
        throw Error(ErrorCode::WrongLength, "solve needs " + std::to_string(n - 1) +
                                                " fixed elements, got " +
                                                std::to_string(others.size()));
    require_element(G, target, "target");
    for (int x : others) require_element(G, x, "element");

    std::vector<int> w(n);
    std::copy(others.begin(), others.begin() + (position - 1), w.begin());
    std::copy(others.begin() + (position - 1), others.end(), w.begin() + position);
    int found = -1;
    for (int z = 0; z < G.order; ++z) {
        w[position - 1] = z;
        if (eval_unchecked(G, w.data()) != target) continue;
        if (found >= 0)
            throw Error(ErrorCode::MultipleSolutions,
                        "both z=" + std::to_string(found) + " and z=" + std::to_string(z) +
                            " solve position " + std::to_string(position) + " for target " +
                            std::to_string(target));
        found = z;
    }
    if (found < 0)
        throw Error(ErrorCode::NoSolution, "no z solves position " + std::to_string(position) +
                                               " for target " + std::to_string(target));
    return found;
}

int skew(const PolyadicGroup& G, int x) {
    require_element(G, x, "element");
    if (!G.skew_table.empty()) return G.skew_table[x];
    std::vector<int> others(G.arity - 1, x);
    return solve(G, G.arity, x, others);
}

AxiomReport check_associativity(const PolyadicGroup& G, CheckMode mode) {
    AxiomReport rep;
    rep.mode = mode;
    const int n = G.arity;
    const int m = G.order;
    const int L = 2 * n - 1;
    std::vector<int> asgn(L, 0);
    std::vector<int> outer(n);

    // bracketing i: inner f over positions i..i+n-1, then f over the rest
    auto bracket = [&](int i) {
        int inner = eval_unchecked(G, asgn.data() + i);
        int k = 0;
        for (int t = 0; t < i; ++t) outer[k++] = asgn[t];
        outer[k++] = inner;
        for (int t = i + n; t < L; ++t) outer[k++] = asgn[t];
        return eval_unchecked(G, outer.data());
    };
    auto check_one = [&] {
        int prev = bracket(0);
        for (int i = 1; i < n; ++i) {
            int cur = bracket(i);
            ++rep.checked_count;
            if (cur != prev)
                record_violation(rep, asgn, prev, cur,
                                 "bracketings at positions " + std::to_string(i) + " and " +
                                     std::to_string(i + 1) + " disagree");
            prev = cur;
        }
    };

    if (mode.exhaustive) {
        do {
            check_one();
        } while (next_assignment(asgn, m));
    } else {
        std::mt19937_64 rng(mode.seed);
        for (long long s = 0; s < mode.samples; ++s) {
            for (int& v : asgn) v = detail::rand_index(rng, m);
            check_one();
        }
    }
    return rep;
}

AxiomReport check_unique_solvability(const PolyadicGroup& G, CheckMode mode) {
    AxiomReport rep;
    rep.mode = mode;
    const int n = G.arity;
    const int m = G.order;
    std::vector<int> w(n);
    std::vector<int> first_z(m);
    std::vector<char> seen(m);

    // One check = one (position, fixed assignment) pair swept over all z.
    auto check_one = [&](int pos) {
        ++rep.checked_count;
        std::fill(seen.begin(), seen.end(), 0);
        for (int z = 0; z < m; ++z) {
            w[pos] = z;
            int v = eval_unchecked(G, w.data());
            if (seen[v]) {
                record_violation(rep, w, first_z[v], z,
                                 "position " + std::to_string(pos + 1) + " repeats value " +
                                     std::to_string(v));
            } else {
                seen[v] = 1;
                first_z[v] = z;
            }
        }
    };

    if (mode.exhaustive) {
        std::vector<int> others(n - 1, 0);
        for (int pos = 0; pos < n; ++pos) {
            std::fill(others.begin(), others.end(), 0);
            do {
                std::copy(others.begin(), others.begin() + pos, w.begin());
                std::copy(others.begin() + pos, others.end(), w.begin() + pos + 1);
                check_one(pos);
            } while (next_assignment(others, m));
        }
    } else {
        std::mt19937_64 rng(mode.seed);
        for (long long s = 0; s < mode.samples; ++s) {
            int pos = static_cast<int>(detail::rand_index(rng, n));
            for (int i = 0; i < n; ++i)
                if (i != pos) w[i] = detail::rand_index(rng, m);
            check_one(pos);
        }
    }
    return rep;
}

std::optional<int> find_nary_identity(const PolyadicGroup& G) {
    const int n = G.arity;
    const int m = G.order;
    std::vector<int> w(n);
    for (int e = 0; e < m; ++e) {
        bool ok = true;
        for (int pos = 0; pos < n && ok; ++pos) {
            std::fill(w.begin(), w.end(), e);
            for (int x = 0; x < m; ++x) {
                w[pos] = x;
                if (eval_unchecked(G, w.data()) != x) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) return e;
    }
    return std::nullopt;
}

AxiomReport check_dornte(const PolyadicGroup& G) {
    AxiomReport rep;
    rep.mode = CheckMode::full();
    const int n = G.arity;
    const int m = G.order;
    std::vector<int> w(n);

    for (int x = 0; x < m; ++x) {
        const int xb = skew(G, x);
        // f(x^(i-2), ~x, x^(n-i), y) = y for 2 <= i <= n
        for (int i = 2; i <= n; ++i) {
            std::fill(w.begin(), w.end(), x);
            w[i - 2] = xb;
            for (int y = 0; y < m; ++y) {
                w[n - 1] = y;
                ++rep.checked_count;
                int got = eval_unchecked(G, w.data());
                if (got != y)
                    record_violation(rep, w, got, y,
                                     "left cancellation fails at i=" + std::to_string(i) +
                                         ", x=" + std::to_string(x));
            }
        }
        // f(y, x^(n-j), ~x, x^(j-2)) = y for 2 <= j <= n
        for (int j = 2; j <= n; ++j) {
            std::fill(w.begin(), w.end(), x);
            w[n - j + 1] = xb;
            for (int y = 0; y < m; ++y) {
                w[0] = y;
                ++rep.checked_count;
                int got = eval_unchecked(G, w.data());
                if (got != y)
                    record_violation(rep, w, got, y,
                                     "right cancellation fails at j=" + std::to_string(j) +
                                         ", x=" + std::to_string(x));
            }
        }
        // f(x^(k-1), ~x, x^(n-k)) = x for 1 <= k <= n
        for (int k = 1; k <= n; ++k) {
            std::fill(w.begin(), w.end(), x);
            w[k - 1] = xb;
            ++rep.checked_count;
            int got = eval_unchecked(G, w.data());
            if (got != x)
                record_violation(rep, w, got, x,
                                 "skew neutrality fails at k=" + std::to_string(k) +
                                     ", x=" + std::to_string(x));
        }
    }
    return rep;
}

PolyadicGroup nary_from_table_raw(int arity, int order, const std::vector<int>& flat_table,
                                  const std::string& label) {
    if (arity < 2) throw Error(ErrorCode::OutOfRange, "arity must be at least 2");
    if (order < 1) throw Error(ErrorCode::OutOfRange, "order must be positive");
    long long need = ipow_capped(order, arity, kTableBudget);
    if (need > kTableBudget)
        throw Error(ErrorCode::TableBudgetExceeded,
                    "table of " + std::to_string(order) + "^" + std::to_string(arity) +
                        " entries exceeds budget " + std::to_string(kTableBudget));
    if (static_cast<long long>(flat_table.size()) != need)
        throw Error(ErrorCode::WrongLength, "table has " + std::to_string(flat_table.size()) +
                                                " entries, expected " + std::to_string(need));
    for (int v : flat_table)
        if (v < 0 || v >= order)
            throw Error(ErrorCode::OutOfRange, "table entry " + std::to_string(v) +
                                                   " out of range for order " +
                                                   std::to_string(order));
    PolyadicGroup G;
    G.arity = arity;
    G.order = order;
    G.storage = PolyadicGroup::Storage::FullTable;
    G.table = flat_table;
    G.label = label;
    return G;
}

PolyadicGroup nary_from_table(int arity, int order, const std::vector<int>& flat_table,
                              const std::string& label) {
    PolyadicGroup G = nary_from_table_raw(arity, order, flat_table, label);
    double cost = (2.0 * arity - 1) * std::pow(static_cast<double>(order), 2 * arity - 1);
    CheckMode mode = cost <= static_cast<double>(kAxiomCostBudget)
                         ? CheckMode::full()
                         : CheckMode::sampled(100'000);
    AxiomReport assoc = check_associativity(G, mode);
    if (!assoc.passed) throw AxiomError(assoc, "associativity fails for " + label);
    AxiomReport solv = check_unique_solvability(G, mode);
    if (!solv.passed) throw AxiomError(solv, "unique solvability fails for " + label);
    fill_skew_table(G);
    return G;
}

PolyadicGroup b_derived(const FiniteGroup& base, int b, int arity, const std::string& label) {
    if (arity < 2) throw Error(ErrorCode::OutOfRange, "arity must be at least 2");
    if (b < 0 || b >= base.order)
        throw Error(ErrorCode::OutOfRange, "b=" + std::to_string(b) + " out of range for order " +
                                               std::to_string(base.order));
    for (int x = 0; x < base.order; ++x)
        if (base.op(b, x) != base.op(x, b))
            throw Error(ErrorCode::NotCentral, "b=" + std::to_string(b) +
                                                   " does not commute with " + std::to_string(x));
    PolyadicGroup G;
    G.arity = arity;
    G.order = base.order;
    G.storage = PolyadicGroup::Storage::BDerived;
    G.base = base;
    G.b = b;
    G.label = label.empty() ? "der" + std::to_string(arity) + "_b" + std::to_string(b) + "(" +
                                  base.label + ")"
                            : label;
    fill_skew_table(G);
    return G;
}

PolyadicGroup to_full_table(const PolyadicGroup& G) {
    long long need = ipow_capped(G.order, G.arity, kTableBudget);
    if (need > kTableBudget)
        throw Error(ErrorCode::TableBudgetExceeded,
                    "full table of " + G.label + " exceeds budget " +
                        std::to_string(kTableBudget));
    PolyadicGroup out;
    out.arity = G.arity;
    out.order = G.order;
    out.storage = PolyadicGroup::Storage::FullTable;
    out.label = G.label;
    out.skew_table = G.skew_table;
    out.table.resize(static_cast<std::size_t>(need));
    std::vector<int> w(G.arity, 0);
    std::size_t idx = 0;
    do {
        out.table[idx++] = eval_unchecked(G, w.data());
    } while (next_assignment(w, G.order));
    return out;
}

FiniteGroup as_binary_group(const PolyadicGroup& G) {
    if (G.arity != 2)
        throw Error(ErrorCode::OutOfRange,
                    "as_binary_group needs arity 2, got " + std::to_string(G.arity));
    std::vector<int> flat(static_cast<std::size_t>(G.order) * G.order);
    int w[2];
    for (int x = 0; x < G.order; ++x)
        for (int y = 0; y < G.order; ++y) {
            w[0] = x;
            w[1] = y;
            flat[static_cast<std::size_t>(x) * G.order + y] = eval_unchecked(G, w);
        }
    return detail::make_group_unchecked(G.order, flat, G.label);
}

}  // namespace polyadic
