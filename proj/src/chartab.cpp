#include "polyadic/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>

namespace polyadic {

namespace {

constexpr double kSnapTol = 1e-6;
constexpr double kOrthoTol = 1e-8;
constexpr double kClusterTol = 1e-7;
constexpr int kMaxAttempts = 8;

double snap_component(double v) {
    double r = std::round(v);
    return std::abs(v - r) <= kSnapTol ? r : v;
}

// Lexicographic row key on a 1e-6 grid; degrees are compared first by the
// caller so only same-degree rows reach this comparison.
bool row_less(const Eigen::MatrixXcd& values, int r, int s) {
    for (int c = 0; c < values.cols(); ++c) {
        long long ar = std::llround(values(r, c).real() * 1e6);
        long long br = std::llround(values(s, c).real() * 1e6);
        if (ar != br) return ar < br;
        long long ai = std::llround(values(r, c).imag() * 1e6);
        long long bi = std::llround(values(s, c).imag() * 1e6);
        if (ai != bi) return ai < bi;
    }
    return false;
}

std::optional<CharacterTable> attempt_table(const FiniteGroup& G,
                                            const ConjugacyClasses& classes,
                                            std::uint64_t seed) {
    const int m = G.order;
    const int k = classes.count;

    // M(j,t) = sum_i alpha_i * a_{ijt} where a_{ijt} counts pairs in
    // C_i x C_j multiplying to the class-t representative. The common
    // eigenvectors of all class matrices survive in any linear combination;
    // random complex alpha separates their eigenvalues.
    std::mt19937_64 rng(seed);
    std::vector<cplx> alpha(k);
    for (cplx& v : alpha) {
        double re = detail::rand_unit(rng);
        double im = detail::rand_unit(rng);
        v = cplx(re, im);
    }
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(k, k);
    for (int t = 0; t < k; ++t) {
        const int wt = classes.representatives[t];
        for (int u = 0; u < m; ++u) {
            const int i = classes.class_of[u];
            const int j = classes.class_of[G.op(G.inv(u), wt)];
            M(j, t) += alpha[i];
        }
    }

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M);
    if (es.info() != Eigen::Success) return std::nullopt;
    const auto& lambda = es.eigenvalues();
    for (int r = 0; r < k; ++r)
        for (int s = r + 1; s < k; ++s)
            if (std::abs(lambda(r) - lambda(s)) < kClusterTol) return std::nullopt;

    // Each eigenvector, scaled to 1 on the identity class, is the vector of
    // central characters omega_c = |C_c| chi(C_c) / d.
    CharacterTable T;
    T.group = G;
    T.classes = classes;
    T.values.resize(k, k);
    T.degrees.resize(k);
    for (int r = 0; r < k; ++r) {
        Eigen::VectorXcd v = es.eigenvectors().col(r);
        if (std::abs(v(0)) < 1e-9) return std::nullopt;
        v /= v(0);
        double inv_norm = 0;
        for (int c = 0; c < k; ++c) inv_norm += std::norm(v(c)) / classes.sizes[c];
        if (inv_norm <= 0) return std::nullopt;
        const double d_raw = std::sqrt(m / inv_norm);
        const double d_snap = std::round(d_raw);
        if (d_snap < 1 || std::abs(d_raw - d_snap) > kSnapTol) return std::nullopt;
        T.degrees[r] = static_cast<int>(d_snap);
        for (int c = 0; c < k; ++c) {
            cplx x = d_snap * v(c) / static_cast<double>(classes.sizes[c]);
            T.values(r, c) = cplx(snap_component(x.real()), snap_component(x.imag()));
        }
    }

    long long sumsq = 0;
    for (int d : T.degrees) sumsq += static_cast<long long>(d) * d;
    if (sumsq != m) return std::nullopt;

    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int r, int s) {
        if (T.degrees[r] != T.degrees[s]) return T.degrees[r] < T.degrees[s];
        return row_less(T.values, r, s);
    });
    Eigen::MatrixXcd sorted(k, k);
    std::vector<int> sorted_deg(k);
    for (int r = 0; r < k; ++r) {
        sorted.row(r) = T.values.row(perm[r]);
        sorted_deg[r] = T.degrees[perm[r]];
    }
    T.values = std::move(sorted);
    T.degrees = std::move(sorted_deg);

    if (check_orthogonality(T).max_deviation() > kOrthoTol) return std::nullopt;
    return T;
}

}  // namespace

ConjugacyClasses conjugacy_classes(const FiniteGroup& G) {
    const int m = G.order;
    ConjugacyClasses cc;
    cc.class_of.assign(m, -1);
    std::vector<int> reps;
    std::vector<int> sizes;
    for (int x = 0; x < m; ++x) {
        if (cc.class_of[x] >= 0) continue;
        const int c = static_cast<int>(reps.size());
        int size = 0;
        for (int g = 0; g < m; ++g) {
            const int y = G.op(G.op(g, x), G.inv(g));
            if (cc.class_of[y] < 0) {
                cc.class_of[y] = c;
                ++size;
            }
        }
        reps.push_back(x);  // ascending scan makes x the smallest member
        sizes.push_back(size);
    }
    const int k = static_cast<int>(reps.size());

    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    const int id_class = cc.class_of[G.identity];
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        if ((a == id_class) != (b == id_class)) return a == id_class;
        if (sizes[a] != sizes[b]) return sizes[a] < sizes[b];
        return reps[a] < reps[b];
    });
    std::vector<int> inv_perm(k);
    for (int c = 0; c < k; ++c) inv_perm[perm[c]] = c;

    cc.count = k;
    cc.representatives.resize(k);
    cc.sizes.resize(k);
    for (int c = 0; c < k; ++c) {
        cc.representatives[c] = reps[perm[c]];
        cc.sizes[c] = sizes[perm[c]];
    }
    for (int x = 0; x < m; ++x) cc.class_of[x] = inv_perm[cc.class_of[x]];
    return cc;
}

CharacterTable character_table(const FiniteGroup& G, std::uint64_t seed) {
    if (G.order > kOrderBudget)
        throw Error(ErrorCode::OrderBudgetExceeded,
                    "character table of order " + std::to_string(G.order) +
                        " exceeds budget " + std::to_string(kOrderBudget));
    const ConjugacyClasses classes = conjugacy_classes(G);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        if (auto T = attempt_table(G, classes, seed + attempt)) return *T;
    }
    throw Error(ErrorCode::DegenerateEigenbasis,
                "no separating class-matrix combination found for '" + G.label + "' after " +
                    std::to_string(kMaxAttempts) + " attempts");
}

OrthogonalityReport check_orthogonality(const CharacterTable& T) {
    OrthogonalityReport rep;
    const int k = T.classes.count;
    const double order = T.group.order;
    for (int r = 0; r < k; ++r)
        for (int s = 0; s < k; ++s) {
            cplx sum = 0;
            for (int c = 0; c < k; ++c)
                sum += static_cast<double>(T.classes.sizes[c]) * T.values(r, c) *
                       std::conj(T.values(s, c));
            sum /= order;
            const double dev = std::abs(sum - (r == s ? cplx(1) : cplx(0)));
            rep.max_row_deviation = std::max(rep.max_row_deviation, dev);
        }
    for (int c = 0; c < k; ++c)
        for (int cp = 0; cp < k; ++cp) {
            cplx sum = 0;
            for (int r = 0; r < k; ++r) sum += T.values(r, c) * std::conj(T.values(r, cp));
            const cplx target = c == cp ? cplx(order / T.classes.sizes[c]) : cplx(0);
            const double dev = std::abs(sum - target);
            rep.max_column_deviation = std::max(rep.max_column_deviation, dev);
        }
    return rep;
}

}  // namespace polyadic
