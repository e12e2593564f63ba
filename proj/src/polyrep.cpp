#include "polyadic/polyrep.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace polyadic {

namespace {

constexpr double kMatrixTol = 1e-8;
constexpr double kRoundTripTol = 1e-10;
constexpr double kKernelTol = 1e-6;

std::vector<int> kernel_of(const Eigen::VectorXcd& values, int degree) {
    std::vector<int> ker;
    for (int p = 0; p < values.size(); ++p)
        if (std::abs(values(p) - cplx(degree)) <= kKernelTol) ker.push_back(p);
    return ker;
}

void require_kernel_member(const PolyadicCharacter& chi, int p, const char* who) {
    if (chi.kernel.empty())
        throw Error(ErrorCode::EmptyKernel,
                    std::string(who) + ": character " + std::to_string(chi.source) +
                        " has empty kernel");
    if (!std::binary_search(chi.kernel.begin(), chi.kernel.end(), p))
        throw Error(ErrorCode::NotInKernel, std::string(who) + ": element " +
                                                std::to_string(p) +
                                                " is not in the kernel of character " +
                                                std::to_string(chi.source));
}

// f(x, a^(i), p^(n-i-1)), a single application of f.
int coset_section(const PolyadicGroup& G, int x, int a, int i, int p) {
    const int n = G.arity;
    std::vector<int> word(n);
    word[0] = x;
    std::fill(word.begin() + 1, word.begin() + 1 + i, a);
    std::fill(word.begin() + 1 + i, word.end(), p);
    return evaluate(G, word);
}

}  // namespace

std::vector<PolyadicCharacter> irreducible_polyadic_characters(const PolyadicGroup& G, int a,
                                                               std::uint64_t seed) {
    PostCover PC = build_post_cover(G, a);
    CharacterTable T = character_table(PC.cover, seed);
    const int m = G.order;
    const int k = T.classes.count;
    auto shared = std::make_shared<const PolyadicGroup>(G);

    std::vector<PolyadicCharacter> out;
    out.reserve(k);
    for (int r = 0; r < k; ++r) {
        PolyadicCharacter chi;
        chi.group = shared;
        chi.anchor = a;
        chi.source = r;
        chi.degree = T.degrees[r];
        chi.values.resize(m);
        for (int x = 0; x < m; ++x)
            chi.values(x) = T.values(r, T.classes.class_of[PC.embed[x]]);
        chi.cover_row = T.values.row(r);
        chi.cover_class_of = T.classes.class_of;
        chi.kernel = kernel_of(chi.values, chi.degree);
        out.push_back(std::move(chi));
    }
    return out;
}

std::vector<int> kernel(const PolyadicCharacter& chi) {
    return kernel_of(chi.values, chi.degree);
}

Eigen::VectorXcd lift_character(const PolyadicCharacter& chi, int p) {
    require_kernel_member(chi, p, "lift_character");
    const PolyadicGroup& G = *chi.group;
    const int n = G.arity;
    const int r = n - 1;
    const int m = G.order;
    const int a = chi.anchor;

    Eigen::VectorXcd v(static_cast<Eigen::Index>(r) * m);
    for (int x = 0; x < m; ++x)
        for (int i = 0; i < r; ++i)
            v(x * r + i) = chi.values(coset_section(G, x, a, i, p));

    for (int c = 0; c < v.size(); ++c) {
        const cplx expect = chi.cover_row(chi.cover_class_of[c]);
        if (std::abs(v(c) - expect) > kMatrixTol)
            throw Error(ErrorCode::LiftMismatch,
                        "lifted value at cover element " + std::to_string(c) + " deviates by " +
                            std::to_string(std::abs(v(c) - expect)) +
                            " from the source irreducible");
    }
    return v;
}

DegreeTheoremReport degree_theorem_check(const PolyadicGroup& G, int a, std::uint64_t seed) {
    DegreeTheoremReport rep;
    rep.target = static_cast<long long>(G.arity - 1) * G.order;
    for (const PolyadicCharacter& chi : irreducible_polyadic_characters(G, a, seed))
        rep.degrees.push_back(chi.degree);
    rep.sum_of_squares = 0;
    rep.all_divide = true;
    for (int d : rep.degrees) {
        rep.sum_of_squares += static_cast<long long>(d) * d;
        if (d <= 0 || rep.target % d != 0) rep.all_divide = false;
    }
    rep.sum_matches = rep.sum_of_squares == rep.target;
    return rep;
}

cplx orthogonality_check(const PolyadicCharacter& chi, const PolyadicCharacter& psi, int p,
                         int q, int a) {
    if (chi.anchor != a || psi.anchor != a)
        throw Error(ErrorCode::AnchorMismatch,
                    "characters built at anchors " + std::to_string(chi.anchor) + ", " +
                        std::to_string(psi.anchor) + " but the sum is over anchor " +
                        std::to_string(a));
    require_kernel_member(chi, p, "orthogonality_check");
    require_kernel_member(psi, q, "orthogonality_check");
    const PolyadicGroup& G = *chi.group;
    const int n = G.arity;
    const int m = G.order;

    cplx sum = 0;
    for (int i = 0; i <= n - 2; ++i)
        for (int x = 0; x < m; ++x)
            sum += chi.values(coset_section(G, x, a, i, p)) *
                   std::conj(psi.values(coset_section(G, x, a, i, q)));
    return sum / (static_cast<double>(n - 1) * m);
}

AxiomReport verify_nary_homomorphism(const PolyadicRepresentation& rep, CheckMode mode) {
    AxiomReport report;
    report.mode = mode;
    const PolyadicGroup& G = *rep.group;
    const int n = G.arity;
    const int m = G.order;
    const int d = rep.dimension;

    std::vector<int> tuple(n, 0);
    Eigen::MatrixXcd prod(d, d);
    auto check_tuple = [&] {
        prod = rep.matrices[tuple[0]];
        for (int t = 1; t < n; ++t) prod = prod * rep.matrices[tuple[t]];
        const int z = evaluate(G, tuple);
        ++report.checked_count;
        const double dev = (prod - rep.matrices[z]).cwiseAbs().maxCoeff();
        if (dev > kMatrixTol) {
            report.passed = false;
            if (static_cast<int>(report.violations.size()) < AxiomReport::kMaxWitnesses)
                report.violations.push_back(
                    {tuple, z, -1, "matrix product deviates by " + std::to_string(dev)});
        }
    };

    if (mode.exhaustive) {
        bool more = true;
        while (more) {
            check_tuple();
            more = false;
            for (int t = n - 1; t >= 0; --t) {
                if (tuple[t] + 1 < m) {
                    ++tuple[t];
                    more = true;
                    break;
                }
                tuple[t] = 0;
            }
        }
    } else {
        std::mt19937_64 rng(mode.seed);
        for (long long s = 0; s < mode.samples; ++s) {
            for (int& v : tuple) v = detail::rand_index(rng, m);
            check_tuple();
        }
    }

    // Lambda(skew(a)) Lambda(a)^(n-2) must be the identity for every a.
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(d, d);
    for (int a = 0; a < m; ++a) {
        Eigen::MatrixXcd pw = I;
        for (int t = 0; t < n - 2; ++t) pw = pw * rep.matrices[a];
        ++report.checked_count;
        const double dev = (rep.matrices[skew(G, a)] * pw - I).cwiseAbs().maxCoeff();
        if (dev > kMatrixTol) {
            report.passed = false;
            if (static_cast<int>(report.violations.size()) < AxiomReport::kMaxWitnesses)
                report.violations.push_back(
                    {{a}, skew(G, a), -1,
                     "skew power identity deviates by " + std::to_string(dev)});
        }
    }
    return report;
}

std::vector<Eigen::MatrixXcd> lift_representation(const PolyadicRepresentation& rep, int a) {
    const PolyadicGroup& G = *rep.group;
    const int r = G.arity - 1;
    const int d = rep.dimension;
    PostCover PC = build_post_cover(G, a);
    const int M = PC.cover.order;

    std::vector<Eigen::MatrixXcd> out(M);
    for (int x = 0; x < G.order; ++x) {
        Eigen::MatrixXcd pw = Eigen::MatrixXcd::Identity(d, d);
        for (int i = 0; i < r; ++i) {
            out[PC.pair_index(x, i)] = rep.matrices[x] * pw;
            pw = pw * rep.matrices[a];
        }
    }
    for (int p = 0; p < M; ++p)
        for (int q = 0; q < M; ++q) {
            const double dev =
                (out[p] * out[q] - out[PC.cover.op(p, q)]).cwiseAbs().maxCoeff();
            if (dev > kMatrixTol)
                throw Error(ErrorCode::HomomorphismFailure,
                            "lifted matrices at cover pair (" + std::to_string(p) + "," +
                                std::to_string(q) + ") deviate by " + std::to_string(dev));
        }
    return out;
}

PolyadicRepresentation restrict_representation(const std::vector<Eigen::MatrixXcd>& cover_rep,
                                               const PostCover& PC) {
    const PolyadicGroup& G = PC.base;
    const int n = G.arity;
    const int r = n - 1;
    const int m = G.order;
    if (static_cast<int>(cover_rep.size()) != PC.cover.order)
        throw Error(ErrorCode::WrongLength, "cover representation has " +
                                                std::to_string(cover_rep.size()) +
                                                " matrices, cover order is " +
                                                std::to_string(PC.cover.order));

    PolyadicRepresentation rep;
    rep.group = std::make_shared<const PolyadicGroup>(G);
    rep.dimension = static_cast<int>(cover_rep[0].rows());
    rep.matrices.resize(m);
    for (int x = 0; x < m; ++x) rep.matrices[x] = cover_rep[PC.embed[x]];

    const double cost = (n - 1) * std::pow(static_cast<double>(m), n) *
                        std::pow(static_cast<double>(rep.dimension), 3);
    CheckMode mode = cost <= kAxiomCostBudget ? CheckMode::full() : CheckMode::sampled(100'000);
    AxiomReport check = verify_nary_homomorphism(rep, mode);
    if (!check.passed)
        throw Error(ErrorCode::HomomorphismFailure,
                    "restriction of the cover representation is not an n-ary homomorphism");

    // Round trip: Gamma(x,0) Gamma(a,0)^i must reproduce Gamma(x,i).
    const Eigen::MatrixXcd& A = rep.matrices[PC.anchor];
    Eigen::MatrixXcd pw = Eigen::MatrixXcd::Identity(rep.dimension, rep.dimension);
    for (int i = 0; i < r; ++i) {
        for (int x = 0; x < m; ++x) {
            const double dev =
                (rep.matrices[x] * pw - cover_rep[PC.pair_index(x, i)]).cwiseAbs().maxCoeff();
            if (dev > kRoundTripTol)
                throw Error(ErrorCode::LiftMismatch,
                            "round trip deviates by " + std::to_string(dev) +
                                " at cover element (" + std::to_string(x) + "," +
                                std::to_string(i) + ")");
        }
        pw = pw * A;
    }
    return rep;
}

}  // namespace polyadic
