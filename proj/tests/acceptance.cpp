// Acceptance suite: one printed line per criterion, exit 0 only if all pass.
// The CLI binary path for the determinism criterion comes in as argv[1].

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "polyadic/catalog.hpp"
#include "polyadic/chartab.hpp"
#include "polyadic/narygroup.hpp"
#include "polyadic/polyrep.hpp"
#include "polyadic/postcover.hpp"
#include "polyadic/spec_io.hpp"

#include "corpus.hpp"

using namespace polyadic;
using testsupport::corpus;
using testsupport::CorpusEntry;

namespace {

struct Criterion {
    int id;
    std::string title;
    std::vector<std::string> problems;
};

std::vector<Criterion> g_results;

void run_criterion(int id, const std::string& title,
                   const std::function<void(std::vector<std::string>&)>& body) {
    Criterion c{id, title, {}};
    try {
        body(c.problems);
    } catch (const std::exception& e) {
        c.problems.push_back(std::string("exception: ") + e.what());
    }
    g_results.push_back(std::move(c));
}

void expect(std::vector<std::string>& problems, bool ok, const std::string& msg) {
    if (!ok) problems.push_back(msg);
}

// Covers at every anchor, built once and shared by criteria 3, 6 and 7.
const std::vector<std::vector<PostCover>>& all_covers() {
    static const std::vector<std::vector<PostCover>> covers = [] {
        std::vector<std::vector<PostCover>> out;
        for (const CorpusEntry& entry : corpus()) {
            std::vector<PostCover> per_anchor;
            for (int a = 0; a < entry.G.order; ++a)
                per_anchor.push_back(build_post_cover(entry.G, a));
            out.push_back(std::move(per_anchor));
        }
        return out;
    }();
    return covers;
}

std::vector<long long> grid_key(const std::vector<cplx>& v) {
    std::vector<long long> k;
    for (cplx z : v) {
        k.push_back(std::llround(z.real() * 1e6));
        k.push_back(std::llround(z.imag() * 1e6));
    }
    return k;
}

std::vector<std::vector<cplx>> char_value_set(const std::vector<PolyadicCharacter>& chars) {
    std::vector<std::vector<cplx>> rows;
    for (const auto& chi : chars)
        rows.emplace_back(chi.values.data(), chi.values.data() + chi.values.size());
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return grid_key(a) < grid_key(b); });
    return rows;
}

double set_distance(const std::vector<std::vector<cplx>>& a,
                    const std::vector<std::vector<cplx>>& b) {
    if (a.size() != b.size()) return 1e9;
    double worst = 0.0;
    for (size_t r = 0; r < a.size(); ++r) {
        if (a[r].size() != b[r].size()) return 1e9;
        for (size_t c = 0; c < a[r].size(); ++c)
            worst = std::max(worst, std::abs(a[r][c] - b[r][c]));
    }
    return worst;
}

PolyadicRepresentation scalar_rep(const PolyadicGroup& G, const Eigen::VectorXcd& values) {
    PolyadicRepresentation rep;
    rep.group = std::make_shared<PolyadicGroup>(G);
    rep.dimension = 1;
    for (long x = 0; x < values.size(); ++x) {
        Eigen::MatrixXcd M(1, 1);
        M(0, 0) = values(x);
        rep.matrices.push_back(M);
    }
    return rep;
}

// Verified representations accumulated for the skew power criterion.
std::vector<std::pair<std::string, PolyadicRepresentation>> g_verified_reps;

void criterion_axioms(std::vector<std::string>& problems) {
    for (const CorpusEntry& entry : corpus()) {
        AxiomReport assoc = check_associativity(entry.G, CheckMode::full());
        AxiomReport solv = check_unique_solvability(entry.G, CheckMode::full());
        expect(problems, assoc.passed && assoc.violations.empty(),
               entry.name + ": associativity violations in full mode");
        expect(problems, solv.passed && solv.violations.empty(),
               entry.name + ": solvability violations in full mode");
        expect(problems, assoc.mode.exhaustive, entry.name + ": full mode not recorded");
    }

    for (const char* name : {"der3_b1_z2", "der3_z2"}) {
        PolyadicGroup G = builtin_group(name);
        std::vector<int> table = to_full_table(G).table;
        long long detected = 0, total = 0;
        for (size_t k = 0; k < table.size(); ++k)
            for (int v = 0; v < G.order; ++v) {
                if (v == table[k]) continue;
                std::vector<int> bad = table;
                bad[k] = v;
                PolyadicGroup H = nary_from_table_raw(G.arity, G.order, bad, "bad");
                ++total;
                if (!check_associativity(H, CheckMode::full()).passed ||
                    !check_unique_solvability(H, CheckMode::full()).passed)
                    ++detected;
            }
        expect(problems, detected == total,
               std::string(name) + ": mutation detection " + std::to_string(detected) + "/" +
                   std::to_string(total));
    }
}

void criterion_dornte(std::vector<std::string>& problems) {
    for (const CorpusEntry& entry : corpus()) {
        AxiomReport r = check_dornte(entry.G);
        expect(problems, r.passed && r.violations.empty(),
               entry.name + ": skew cancellation identities failed");
    }
}

void criterion_coset(std::vector<std::string>& problems) {
    const auto& covers = all_covers();
    for (size_t g = 0; g < corpus().size(); ++g) {
        const CorpusEntry& entry = corpus()[g];
        const int n = entry.G.arity;
        for (const PostCover& PC : covers[g]) {
            CosetTheoremReport r = verify_coset_theorem(PC);
            expect(problems, r.all(),
                   entry.name + " anchor " + std::to_string(PC.anchor) +
                       ": coset theorem flags not all true");
            expect(problems,
                   static_cast<int>(PC.H.size()) * (n - 1) == PC.cover.order,
                   entry.name + " anchor " + std::to_string(PC.anchor) + ": H index is not n-1");
        }
    }
}

void criterion_cover_oracle(std::vector<std::string>& problems) {
    PostCover PC = build_post_cover(builtin_group("der3_b1_z2"), 0);
    const std::vector<int> expected = {
        1, 2, 3, 0,
        2, 3, 0, 1,
        3, 0, 1, 2,
        0, 1, 2, 3,
    };
    expect(problems, PC.cover.cayley == expected, "product table differs from the hand oracle");

    std::vector<int> orders;
    for (int x = 0; x < 4; ++x) orders.push_back(PC.cover.element_order(x));
    std::sort(orders.begin(), orders.end());
    expect(problems, orders == std::vector<int>{1, 2, 4, 4}, "order profile is not {1,2,4,4}");
    expect(problems, is_isomorphic(PC.cover, cyclic_group(4)).has_value(),
           "cover is not cyclic of order 4");
}

void criterion_derived_cover(std::vector<std::string>& problems) {
    for (int arity : {3, 4}) {
        for (int m : {1, 2, 4}) {
            GroupHom hom = derived_cover_structure(cyclic_group(m), arity);
            expect(problems, hom.bijective && verify_homomorphism(hom),
                   "Z" + std::to_string(m) + " arity " + std::to_string(arity) +
                       ": explicit map is not a bijective homomorphism");
        }
        GroupHom hom = derived_cover_structure(symmetric_group(3), arity);
        expect(problems, hom.bijective && verify_homomorphism(hom),
               "S3 arity " + std::to_string(arity) +
                   ": explicit map is not a bijective homomorphism");
    }
}

void criterion_inverse_formula(std::vector<std::string>& problems) {
    const auto& covers = all_covers();
    for (size_t g = 0; g < corpus().size(); ++g) {
        const CorpusEntry& entry = corpus()[g];
        for (const PostCover& PC : covers[g]) {
            for (int idx = 0; idx < PC.cover.order; ++idx) {
                auto [x, i] = PC.pair_of(idx);
                auto inv = inverse_by_formula(PC, x, i);
                if (PC.pair_index(inv.first, inv.second) != PC.cover.inv(idx)) {
                    problems.push_back(entry.name + " anchor " + std::to_string(PC.anchor) +
                                       ": formula disagrees with the table at pair (" +
                                       std::to_string(x) + "," + std::to_string(i) + ")");
                }
            }
        }
    }
}

void criterion_character_engine(std::vector<std::string>& problems) {
    const auto& covers = all_covers();
    for (size_t g = 0; g < corpus().size(); ++g) {
        const CorpusEntry& entry = corpus()[g];
        const FiniteGroup& C = covers[g][0].cover;

        CharacterTable T = character_table(C);
        long long sum = 0;
        for (int d : T.degrees) sum += static_cast<long long>(d) * d;
        expect(problems, sum == C.order,
               entry.name + ": sum of squared degrees " + std::to_string(sum) + " != " +
                   std::to_string(C.order));
        double dev = check_orthogonality(T).max_deviation();
        expect(problems, dev <= 1e-8,
               entry.name + ": orthogonality deviation " + std::to_string(dev) + " > 1e-8");

        CharacterTable U = character_table(C, 987654321u);
        double seed_dev = (T.values - U.values).cwiseAbs().maxCoeff();
        expect(problems, seed_dev <= 1e-8,
               entry.name + ": sorted tables differ across seeds by " +
                   std::to_string(seed_dev));
    }
}

void criterion_correspondence(std::vector<std::string>& problems) {
    for (const CorpusEntry& entry : corpus()) {
        auto base_chars = irreducible_polyadic_characters(entry.G, 0);
        double min_gap = 1e9;
        for (size_t r = 0; r < base_chars.size(); ++r)
            for (size_t s = r + 1; s < base_chars.size(); ++s)
                min_gap = std::min(
                    min_gap,
                    (base_chars[r].values - base_chars[s].values).cwiseAbs().maxCoeff());
        expect(problems, base_chars.size() < 2 || min_gap > 1e-4,
               entry.name + ": restricted characters collide (gap " + std::to_string(min_gap) +
                   " <= 1e-4)");

        auto base_set = char_value_set(base_chars);
        for (int a = 1; a < entry.G.order; ++a) {
            auto other = char_value_set(irreducible_polyadic_characters(entry.G, a));
            double dev = set_distance(base_set, other);
            expect(problems, dev <= 1e-8,
                   entry.name + " anchor " + std::to_string(a) +
                       ": character set moved by " + std::to_string(dev));
        }
    }
}

void criterion_degree_theorem(std::vector<std::string>& problems) {
    for (const CorpusEntry& entry : corpus()) {
        DegreeTheoremReport r = degree_theorem_check(entry.G, 0);
        expect(problems, r.sum_matches,
               entry.name + ": sum of squares " + std::to_string(r.sum_of_squares) + " != " +
                   std::to_string(r.target));
        expect(problems, r.all_divide, entry.name + ": some degree does not divide (n-1)|G|");
    }
}

void criterion_orthogonality(std::vector<std::string>& problems) {
    for (const CorpusEntry& entry : corpus()) {
        auto chars = irreducible_polyadic_characters(entry.G, 0);
        for (const auto& chi : chars) {
            if (chi.kernel.empty()) continue;
            for (const auto& psi : chars) {
                if (psi.kernel.empty()) continue;
                std::vector<cplx> seen;
                for (size_t pi = 0; pi < chi.kernel.size() && pi < 2; ++pi)
                    for (size_t qi = 0; qi < psi.kernel.size() && qi < 2; ++qi) {
                        cplx val = orthogonality_check(chi, psi, chi.kernel[pi],
                                                       psi.kernel[qi], 0);
                        seen.push_back(val);
                        double target = (chi.source == psi.source) ? 1.0 : 0.0;
                        expect(problems, std::abs(val - cplx(target)) <= 1e-6,
                               entry.name + ": sum for rows " + std::to_string(chi.source) +
                                   "," + std::to_string(psi.source) + " off by " +
                                   std::to_string(std::abs(val - cplx(target))));
                    }
                for (const cplx& v : seen)
                    expect(problems, std::abs(v - seen.front()) <= 1e-8,
                           entry.name + ": sum depends on the p,q choice");
            }
        }
    }
}

void criterion_round_trips(std::vector<std::string>& problems) {
    // Scalar representations of der3_b1_z2, one per degree-1 character.
    PolyadicGroup d1 = builtin_group("der3_b1_z2");
    PostCover PC1 = build_post_cover(d1, 0);
    for (const auto& chi : irreducible_polyadic_characters(d1, 0)) {
        PolyadicRepresentation rep = scalar_rep(d1, chi.values);
        AxiomReport hom = verify_nary_homomorphism(rep, CheckMode::full());
        expect(problems, hom.passed, "der3_b1_z2 scalar representation is not a homomorphism");
        if (!hom.passed) continue;

        std::vector<Eigen::MatrixXcd> lifted = lift_representation(rep, 0);
        double dev = 0.0;
        for (int x = 0; x < d1.order; ++x)
            dev = std::max(dev, (lifted[static_cast<size_t>(PC1.embed[static_cast<size_t>(x)])] -
                                 rep.matrices[static_cast<size_t>(x)])
                                    .cwiseAbs()
                                    .maxCoeff());
        expect(problems, dev <= 1e-10,
               "der3_b1_z2: lift does not restrict back (dev " + std::to_string(dev) + ")");

        PolyadicRepresentation back = restrict_representation(lifted, PC1);
        double dev2 = 0.0;
        for (int x = 0; x < d1.order; ++x)
            dev2 = std::max(dev2, (back.matrices[static_cast<size_t>(x)] -
                                   rep.matrices[static_cast<size_t>(x)])
                                      .cwiseAbs()
                                      .maxCoeff());
        expect(problems, dev2 <= 1e-10,
               "der3_b1_z2: restrict(lift) deviates by " + std::to_string(dev2));
        g_verified_reps.emplace_back("der3_b1_z2 scalar", rep);
    }

    // Regular representation of der3_z2's cover, restricted then lifted back.
    PolyadicGroup d0 = builtin_group("der3_z2");
    PostCover PC0 = build_post_cover(d0, 0);
    const FiniteGroup& C = PC0.cover;
    std::vector<Eigen::MatrixXcd> reg;
    for (int c = 0; c < C.order; ++c) {
        Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(C.order, C.order);
        for (int v = 0; v < C.order; ++v) M(C.op(c, v), v) = 1.0;
        reg.push_back(M);
    }
    PolyadicRepresentation gamma = restrict_representation(reg, PC0);
    expect(problems, verify_nary_homomorphism(gamma, CheckMode::full()).passed,
           "der3_z2: restricted regular representation is not a homomorphism");
    std::vector<Eigen::MatrixXcd> relift = lift_representation(gamma, 0);
    double dev = 0.0;
    for (int c = 0; c < C.order; ++c)
        dev = std::max(dev, (relift[static_cast<size_t>(c)] - reg[static_cast<size_t>(c)])
                                .cwiseAbs()
                                .maxCoeff());
    expect(problems, dev <= 1e-10,
           "der3_z2: lifting the restriction deviates from the regular representation by " +
               std::to_string(dev));
    g_verified_reps.emplace_back("der3_z2 regular restriction", gamma);

    // Extra stock for the skew power criterion: scalar representations at
    // arity 4 and at arity 2.
    PolyadicGroup d43 = builtin_group("der4_z3");
    for (const auto& chi : irreducible_polyadic_characters(d43, 0)) {
        PolyadicRepresentation rep = scalar_rep(d43, chi.values);
        if (verify_nary_homomorphism(rep, CheckMode::full()).passed)
            g_verified_reps.emplace_back("der4_z3 scalar", rep);
    }
    PolyadicGroup s3 = builtin_group("s3");
    for (const auto& chi : irreducible_polyadic_characters(s3, 0)) {
        if (chi.degree != 1) continue;
        PolyadicRepresentation rep = scalar_rep(s3, chi.values);
        if (verify_nary_homomorphism(rep, CheckMode::full()).passed)
            g_verified_reps.emplace_back("s3 scalar", rep);
    }
    expect(problems, g_verified_reps.size() >= 15,
           "expected at least 15 verified representations, have " +
               std::to_string(g_verified_reps.size()));
}

void criterion_skew_power(std::vector<std::string>& problems) {
    expect(problems, !g_verified_reps.empty(), "no verified representations collected");
    for (const auto& [name, rep] : g_verified_reps) {
        const PolyadicGroup& G = *rep.group;
        const int n = G.arity;
        for (int a = 0; a < G.order; ++a) {
            Eigen::MatrixXcd pw =
                Eigen::MatrixXcd::Identity(rep.dimension, rep.dimension);
            for (int t = 0; t < n - 2; ++t) pw = pw * rep.matrices[static_cast<size_t>(a)];
            Eigen::MatrixXcd prod = rep.matrices[static_cast<size_t>(skew(G, a))] * pw;
            double dev = (prod - Eigen::MatrixXcd::Identity(rep.dimension, rep.dimension))
                             .cwiseAbs()
                             .maxCoeff();
            if (dev > 1e-10)
                problems.push_back(name + ": skew power identity off by " +
                                   std::to_string(dev) + " at a=" + std::to_string(a));
        }
    }
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& cli, const std::string& args,
                  const std::filesystem::path& dir, int index) {
    std::filesystem::path out = dir / ("out" + std::to_string(index) + ".txt");
    std::string cmd = "\"" + cli + "\" " + args + " > \"" + out.string() + "\" 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    std::ifstream in(out, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    r.output = ss.str();
    return r;
}

void criterion_cli(std::vector<std::string>& problems, const std::string& cli) {
    if (cli.empty()) {
        problems.push_back("no CLI path given on the command line");
        return;
    }
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "polyadic_acceptance";
    fs::create_directories(dir);

    int index = 0;
    std::vector<std::string> commands = {"catalog"};
    for (const std::string& name : builtin_names()) {
        commands.push_back("validate " + name + " --seed 11");
        commands.push_back("cover " + name + " --all-anchors --seed 11");
        commands.push_back("chartab " + name + " --seed 11");
        commands.push_back("verify-theorems " + name + " --seed 11");
    }
    commands.push_back("chartab der3_s3 --seed 11 --format json");
    commands.push_back("validate der4_z3 --seed 11 --format json");

    for (const std::string& args : commands) {
        RunResult first = run_cli(cli, args, dir, index++);
        RunResult second = run_cli(cli, args, dir, index++);
        if (first.exit_code != 0 || second.exit_code != 0) {
            problems.push_back("command '" + args + "' exited " +
                               std::to_string(first.exit_code) + "/" +
                               std::to_string(second.exit_code));
            continue;
        }
        if (first.output != second.output)
            problems.push_back("command '" + args + "' is not byte-deterministic");
        if (first.output.empty())
            problems.push_back("command '" + args + "' printed nothing");
    }

    // Exit code contract: 0 on pass, 1 on mathematical failure, 2 on bad input.
    fs::path good = dir / "good.json";
    fs::path broken = dir / "broken.json";
    fs::path garbage = dir / "garbage.json";
    std::ofstream(good) << R"({"kind":"nary_table","arity":3,"order":2,)"
                        << R"("table":[1,0,0,1,0,1,1,0],"label":"good"})";
    std::ofstream(broken) << R"({"kind":"nary_table","arity":3,"order":2,)"
                          << R"("table":[0,0,0,1,0,1,1,0],"label":"broken"})";
    std::ofstream(garbage) << "{ this is not json";

    RunResult pass = run_cli(cli, "validate \"" + good.string() + "\"", dir, index++);
    RunResult fail = run_cli(cli, "validate \"" + broken.string() + "\"", dir, index++);
    RunResult junk = run_cli(cli, "validate \"" + garbage.string() + "\"", dir, index++);
    RunResult missing_verb = run_cli(cli, "", dir, index++);

    expect(problems, pass.exit_code == 0,
           "pass fixture exited " + std::to_string(pass.exit_code) + ", wanted 0");
    expect(problems, fail.exit_code == 1,
           "mathematical failure fixture exited " + std::to_string(fail.exit_code) +
               ", wanted 1");
    expect(problems, junk.exit_code == 2,
           "parse error fixture exited " + std::to_string(junk.exit_code) + ", wanted 2");
    expect(problems, missing_verb.exit_code == 2,
           "missing verb exited " + std::to_string(missing_verb.exit_code) + ", wanted 2");

    fs::remove_all(dir);
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    run_criterion(1, "axioms pass in full mode on every b-derived corpus group; "
                     "one-entry mutations detected 100% on der3_b1_z2 and der3_z2",
                  criterion_axioms);
    run_criterion(2, "skew cancellation identities hold exactly on every corpus group",
                  criterion_dornte);
    run_criterion(3, "coset theorem all-true for every corpus group and anchor; "
                     "H has index n-1 with cyclic quotient",
                  criterion_coset);
    run_criterion(4, "cover of der3_b1_z2 matches the hand oracle and is cyclic of order 4",
                  criterion_cover_oracle);
    run_criterion(5, "derived covers split as A x Z_{n-1} for A in {Z1,Z2,Z4,S3}, n in {3,4}",
                  criterion_derived_cover);
    run_criterion(6, "inverse formula matches the table inverse on every corpus group "
                     "and anchor (exact)",
                  criterion_inverse_formula);
    run_criterion(7, "character engine: sum d^2 = |cover| exactly, orthogonality <= 1e-8, "
                     "seed-independent tables <= 1e-8, on every corpus cover",
                  criterion_character_engine);
    run_criterion(8, "restricted characters pairwise distinct (gap > 1e-4) and "
                     "anchor-invariant as a set within 1e-8",
                  criterion_correspondence);
    run_criterion(9, "degree theorem: sum d^2 = (n-1)|G| and d | (n-1)|G| on every "
                     "corpus group",
                  criterion_degree_theorem);
    run_criterion(10, "orthogonality double sum equals delta within 1e-6, independent "
                      "of the p,q choice within 1e-8",
                  criterion_orthogonality);
    run_criterion(11, "representation round trips on der3_b1_z2 scalars and the "
                      "der3_z2 cover regular representation, within 1e-10",
                  criterion_round_trips);
    run_criterion(12, "skew power identity holds within 1e-10 for every verified "
                      "representation and every a",
                  criterion_skew_power);
    run_criterion(13, "CLI byte-determinism under a fixed seed; exit codes 0/1/2 on "
                      "pass/failure/parse fixtures",
                  [&](std::vector<std::string>& p) { criterion_cli(p, cli); });

    int failures = 0;
    for (const Criterion& c : g_results) {
        const bool ok = c.problems.empty();
        if (!ok) ++failures;
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.id << ") " << c.title << "\n";
        for (const std::string& p : c.problems) std::cout << "       - " << p << "\n";
    }
    std::cout << (failures == 0 ? "all 13 criteria passed"
                                : std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
