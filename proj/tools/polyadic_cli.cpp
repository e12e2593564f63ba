#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyadic/catalog.hpp"
#include "polyadic/chartab.hpp"
#include "polyadic/polyrep.hpp"
#include "polyadic/postcover.hpp"
#include "polyadic/spec_io.hpp"

using nlohmann::ordered_json;
using namespace polyadic;

namespace {

struct Options {
    std::string spec;
    int anchor = 0;
    bool all_anchors = false;
    std::uint64_t seed = kDefaultSeed;
    std::string format = "text";
    std::string dump;
    long long sample = 0;
};

std::string fmt6(double v) {
    if (std::abs(v) < 5e-7) v = 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string fmtc(cplx z) {
    double re = z.real();
    double im = z.imag();
    if (std::abs(re) < 5e-7) re = 0.0;
    if (std::abs(im) < 5e-7) im = 0.0;
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.6f%+.6fi", re, im);
    return buf;
}

ordered_json json_complex(cplx z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json json_complex_vector(const Eigen::VectorXcd& v) {
    ordered_json arr = ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(json_complex(v(i)));
    return arr;
}

std::string pair_str(int idx, int r) {
    return "(" + std::to_string(idx / r) + "," + std::to_string(idx % r) + ")";
}

std::string mode_str(const CheckMode& mode) {
    return mode.exhaustive ? "full" : "sampled(" + std::to_string(mode.samples) + ")";
}

std::string set_str(const std::vector<int>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(xs[i]);
    }
    return s + "}";
}

PolyadicGroup load_group(const std::string& spec, bool validated) {
    if (std::filesystem::exists(spec))
        return validated ? group_from_spec_file(spec) : group_from_spec_file_raw(spec);
    const auto& names = builtin_names();
    if (std::find(names.begin(), names.end(), spec) != names.end()) return builtin_group(spec);
    throw Error(ErrorCode::ParseError,
                "'" + spec + "' is neither a readable file nor a builtin name");
}

void print_witnesses(const AxiomReport& rep) {
    const int shown = std::min<std::size_t>(rep.violations.size(), 3);
    for (int i = 0; i < shown; ++i) {
        const auto& w = rep.violations[i];
        std::cout << "    witness: inputs " << set_str(w.assignment) << " results "
                  << w.lhs << " vs " << w.rhs << " (" << w.detail << ")\n";
    }
}

ordered_json json_report(const AxiomReport& rep) {
    ordered_json j;
    j["passed"] = rep.passed;
    j["mode"] = mode_str(rep.mode);
    j["checked"] = rep.checked_count;
    ordered_json ws = ordered_json::array();
    for (const auto& w : rep.violations) {
        ordered_json jw;
        jw["inputs"] = w.assignment;
        jw["lhs"] = w.lhs;
        jw["rhs"] = w.rhs;
        jw["detail"] = w.detail;
        ws.push_back(std::move(jw));
    }
    j["violations"] = std::move(ws);
    return j;
}

int cmd_validate(const Options& o) {
    PolyadicGroup G = load_group(o.spec, false);
    const int n = G.arity;
    const int m = G.order;

    CheckMode mode = CheckMode::full();
    const double cost = (2.0 * n - 1) * std::pow(static_cast<double>(m), 2 * n - 1);
    if (o.sample > 0)
        mode = CheckMode::sampled(o.sample, o.seed);
    else if (cost > kAxiomCostBudget)
        mode = CheckMode::sampled(100'000, o.seed);

    AxiomReport assoc = check_associativity(G, mode);
    AxiomReport solv = check_unique_solvability(G, mode);

    // Dörnte checks need skew elements, which only exist when solvability
    // holds; on a broken table report them as skipped.
    bool dornte_ran = false;
    AxiomReport dornte;
    std::vector<int> skew_map;
    std::string skip_reason;
    if (solv.passed) {
        try {
            skew_map.resize(m);
            for (int x = 0; x < m; ++x) skew_map[x] = skew(G, x);
            dornte = check_dornte(G);
            dornte_ran = true;
        } catch (const Error& e) {
            skip_reason = e.what();
            skew_map.clear();
        }
    } else {
        skip_reason = "unique solvability fails";
    }
    std::optional<int> e = find_nary_identity(G);
    const bool pass = assoc.passed && solv.passed && dornte_ran && dornte.passed;

    if (o.format == "json") {
        ordered_json j;
        j["label"] = G.label;
        j["arity"] = n;
        j["order"] = m;
        j["associativity"] = json_report(assoc);
        j["unique_solvability"] = json_report(solv);
        if (dornte_ran)
            j["dornte"] = json_report(dornte);
        else
            j["dornte"] = ordered_json{{"skipped", skip_reason}};
        j["skew"] = skew_map;
        j["nary_identity"] = e ? ordered_json(*e) : ordered_json(nullptr);
        j["overall"] = pass ? "pass" : "fail";
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "group: " << G.label << " (arity " << n << ", order " << m << ")\n";
        std::cout << "  associativity: " << (assoc.passed ? "pass" : "FAIL") << " (checks: "
                  << assoc.checked_count << ", mode: " << mode_str(assoc.mode) << ")\n";
        print_witnesses(assoc);
        std::cout << "  unique solvability: " << (solv.passed ? "pass" : "FAIL")
                  << " (checks: " << solv.checked_count << ", mode: " << mode_str(solv.mode)
                  << ")\n";
        print_witnesses(solv);
        if (dornte_ran) {
            std::cout << "  dornte identities: " << (dornte.passed ? "pass" : "FAIL")
                      << " (checks: " << dornte.checked_count << ")\n";
            print_witnesses(dornte);
        } else {
            std::cout << "  dornte identities: skipped (" << skip_reason << ")\n";
        }
        if (!skew_map.empty() && m <= 24) {
            std::cout << "  skew:";
            for (int x = 0; x < m; ++x) std::cout << " " << x << "->" << skew_map[x];
            std::cout << "\n";
        } else if (!skew_map.empty()) {
            std::cout << "  skew: computed for " << m << " elements\n";
        }
        if (e)
            std::cout << "  nary identity: " << *e << "\n";
        else
            std::cout << "  nary identity: none\n";
        std::cout << "overall: " << (pass ? "pass" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

struct CoverRun {
    int anchor = 0;
    PostCover PC;
    CosetTheoremReport coset;
    int inverse_matches = 0;
    bool pass = false;
};

int cmd_cover(const Options& o) {
    PolyadicGroup G = load_group(o.spec, true);
    const int n = G.arity;
    const int m = G.order;
    const int r = n - 1;
    if (!o.dump.empty() && o.all_anchors)
        throw Error(ErrorCode::ParseError, "--dump needs a single anchor");
    if (!o.all_anchors && (o.anchor < 0 || o.anchor >= m))
        throw Error(ErrorCode::OutOfRange, "anchor " + std::to_string(o.anchor) +
                                               " out of range for order " + std::to_string(m));

    std::vector<int> anchors;
    if (o.all_anchors)
        for (int a = 0; a < m; ++a) anchors.push_back(a);
    else
        anchors.push_back(o.anchor);

    std::vector<CoverRun> runs;
    bool pass = true;
    for (int a : anchors) {
        CoverRun run;
        run.anchor = a;
        run.PC = build_post_cover(G, a);
        cover_identity(run.PC);
        run.coset = verify_coset_theorem(run.PC, o.seed);
        run.inverse_matches = 0;
        for (int x = 0; x < m; ++x)
            for (int i = 0; i < r; ++i) {
                inverse_by_formula(run.PC, x, i);
                ++run.inverse_matches;
            }
        run.pass = run.coset.all() && run.inverse_matches == m * r;
        pass = pass && run.pass;
        runs.push_back(std::move(run));
    }

    // Every cover is isomorphic to the anchor-0 cover; with one anchor there
    // is nothing to compare.
    int iso_pairs = 0;
    bool iso_ok = true;
    if (o.all_anchors)
        for (std::size_t idx = 1; idx < runs.size(); ++idx) {
            iso_ok = iso_ok &&
                     is_isomorphic(runs[0].PC.cover, runs[idx].PC.cover).has_value();
            ++iso_pairs;
        }
    pass = pass && iso_ok;

    std::optional<bool> binary_note;
    if (n == 2) {
        binary_note = is_isomorphic(runs[0].PC.cover, as_binary_group(G)).has_value();
        pass = pass && *binary_note;
    }

    if (!o.dump.empty()) {
        std::ofstream out(o.dump, std::ios::binary);
        if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + o.dump + "'");
        out << cayley_spec_json(runs[0].PC.cover);
    }

    if (o.format == "json") {
        ordered_json j;
        j["label"] = G.label;
        j["arity"] = n;
        j["order"] = m;
        ordered_json ja = ordered_json::array();
        for (const CoverRun& run : runs) {
            ordered_json jr;
            jr["anchor"] = run.anchor;
            jr["cover_order"] = run.PC.cover.order;
            jr["cover_label"] = run.PC.cover.label;
            jr["identity"] = ordered_json::array(
                {run.PC.cover.identity / r, run.PC.cover.identity % r});
            jr["h_is_subgroup"] = run.coset.h_is_subgroup;
            jr["h_is_normal"] = run.coset.h_is_normal;
            jr["quotient_cyclic"] = run.coset.quotient_cyclic;
            jr["g_is_coset"] = run.coset.g_is_coset;
            jr["product_compatible"] = run.coset.product_compatible;
            jr["inverse_formula_matches"] = run.inverse_matches;
            jr["pass"] = run.pass;
            ja.push_back(std::move(jr));
        }
        j["anchors"] = std::move(ja);
        if (o.all_anchors) {
            j["anchor_independence"] =
                ordered_json{{"pairs", iso_pairs}, {"all_isomorphic", iso_ok}};
        }
        if (binary_note) j["binary_cover_isomorphic_to_group"] = *binary_note;
        j["overall"] = pass ? "pass" : "fail";
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "group: " << G.label << " (arity " << n << ", order " << m << ")\n";
        for (const CoverRun& run : runs) {
            std::cout << "anchor " << run.anchor << ": cover order " << run.PC.cover.order
                      << ", identity " << pair_str(run.PC.cover.identity, r) << "\n";
            std::cout << "  coset theorem: H subgroup " << (run.coset.h_is_subgroup ? "yes" : "NO")
                      << ", normal " << (run.coset.h_is_normal ? "yes" : "NO") << ", quotient Z"
                      << r << " " << (run.coset.quotient_cyclic ? "yes" : "NO")
                      << ", embedded coset " << (run.coset.g_is_coset ? "yes" : "NO")
                      << ", product compatible "
                      << (run.coset.product_compatible ? "yes" : "NO") << "\n";
            std::cout << "  inverse formula: " << run.inverse_matches << "/" << m * r
                      << " match\n";
        }
        if (o.all_anchors)
            std::cout << "anchor independence: " << (iso_ok ? "pass" : "FAIL") << " ("
                      << iso_pairs << " pairs vs anchor 0)\n";
        if (binary_note)
            std::cout << "note: arity 2, cover isomorphic to the group itself ("
                      << (*binary_note ? "verified" : "FAILED") << ")\n";
        std::cout << "overall: " << (pass ? "pass" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

int cmd_chartab(const Options& o) {
    PolyadicGroup G = load_group(o.spec, true);
    const int n = G.arity;
    const int m = G.order;
    const int r = n - 1;
    if (o.anchor < 0 || o.anchor >= m)
        throw Error(ErrorCode::OutOfRange, "anchor " + std::to_string(o.anchor) +
                                               " out of range for order " + std::to_string(m));

    PostCover PC = build_post_cover(G, o.anchor);
    CharacterTable T = character_table(PC.cover, o.seed);
    OrthogonalityReport ortho = check_orthogonality(T);
    std::vector<PolyadicCharacter> chars = irreducible_polyadic_characters(G, o.anchor, o.seed);
    const int k = T.classes.count;

    if (o.format == "json") {
        ordered_json j;
        j["label"] = G.label;
        j["arity"] = n;
        j["order"] = m;
        j["anchor"] = o.anchor;
        j["seed"] = o.seed;
        ordered_json jc;
        jc["label"] = PC.cover.label;
        jc["order"] = PC.cover.order;
        ordered_json jcl = ordered_json::array();
        for (int c = 0; c < k; ++c) {
            ordered_json e;
            e["size"] = T.classes.sizes[c];
            e["representative"] = ordered_json::array(
                {T.classes.representatives[c] / r, T.classes.representatives[c] % r});
            jcl.push_back(std::move(e));
        }
        jc["classes"] = std::move(jcl);
        ordered_json jrows = ordered_json::array();
        for (int row = 0; row < k; ++row) {
            ordered_json e;
            e["degree"] = T.degrees[row];
            e["values"] = json_complex_vector(T.values.row(row));
            jrows.push_back(std::move(e));
        }
        jc["characters"] = std::move(jrows);
        jc["orthogonality_deviation"] = ortho.max_deviation();
        j["cover"] = std::move(jc);
        ordered_json jres = ordered_json::array();
        for (const PolyadicCharacter& chi : chars) {
            ordered_json e;
            e["source"] = chi.source;
            e["degree"] = chi.degree;
            e["values"] = json_complex_vector(chi.values);
            e["kernel"] = chi.kernel;
            jres.push_back(std::move(e));
        }
        j["restricted"] = std::move(jres);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "group: " << G.label << " (arity " << n << ", order " << m << ")\n";
        std::cout << "anchor " << o.anchor << ": cover " << PC.cover.label << ", order "
                  << PC.cover.order << ", classes " << k << "\n";
        for (int c = 0; c < k; ++c)
            std::cout << "  class " << c << ": size " << T.classes.sizes[c]
                      << ", representative " << pair_str(T.classes.representatives[c], r)
                      << "\n";
        std::cout << "cover character table:\n";
        for (int row = 0; row < k; ++row) {
            std::cout << "  chi_" << row << ": degree " << T.degrees[row] << ", values [";
            for (int c = 0; c < k; ++c)
                std::cout << (c ? ", " : "") << fmtc(T.values(row, c));
            std::cout << "]\n";
        }
        std::cout << "orthogonality deviation: " << fmt6(ortho.max_deviation()) << "\n";
        std::cout << "restricted polyadic characters:\n";
        for (const PolyadicCharacter& chi : chars) {
            std::cout << "  chi_" << chi.source << ": degree " << chi.degree << ", values [";
            for (int x = 0; x < m; ++x)
                std::cout << (x ? ", " : "") << fmtc(chi.values(x));
            std::cout << "], kernel " << set_str(chi.kernel) << "\n";
        }
    }
    return 0;
}

// Canonical order on restricted value vectors: lex on (re, im) rounded to a
// 1e-6 grid; used to compare character sets across anchors.
bool vec_less(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        const long long ar = std::llround(a(i).real() * 1e6);
        const long long br = std::llround(b(i).real() * 1e6);
        if (ar != br) return ar < br;
        const long long ai = std::llround(a(i).imag() * 1e6);
        const long long bi = std::llround(b(i).imag() * 1e6);
        if (ai != bi) return ai < bi;
    }
    return false;
}

double char_set_distance(std::vector<Eigen::VectorXcd> A, std::vector<Eigen::VectorXcd> B) {
    std::sort(A.begin(), A.end(), vec_less);
    std::sort(B.begin(), B.end(), vec_less);
    double dev = 0;
    for (std::size_t i = 0; i < A.size(); ++i)
        dev = std::max(dev, (A[i] - B[i]).cwiseAbs().maxCoeff());
    return dev;
}

int cmd_verify_theorems(const Options& o) {
    PolyadicGroup G = load_group(o.spec, true);
    const int n = G.arity;
    const int m = G.order;
    if (o.anchor < 0 || o.anchor >= m)
        throw Error(ErrorCode::OutOfRange, "anchor " + std::to_string(o.anchor) +
                                               " out of range for order " + std::to_string(m));
    const int a = o.anchor;

    PostCover PC = build_post_cover(G, a);
    std::vector<PolyadicCharacter> chars = irreducible_polyadic_characters(G, a, o.seed);

    DegreeTheoremReport deg = degree_theorem_check(G, a, o.seed);

    // Orthogonality over all pairs with non-empty kernels, up to 4 kernel
    // elements per character; the spread across (p, q) choices checks that
    // the sum does not depend on them.
    int pairs = 0;
    double max_delta_dev = 0;
    double max_spread = 0;
    for (const PolyadicCharacter& chi : chars) {
        if (chi.kernel.empty()) continue;
        for (const PolyadicCharacter& psi : chars) {
            if (psi.kernel.empty()) continue;
            ++pairs;
            const double target = chi.source == psi.source ? 1.0 : 0.0;
            bool first = true;
            cplx first_val = 0;
            const int pc = std::min<std::size_t>(chi.kernel.size(), 4);
            const int qc = std::min<std::size_t>(psi.kernel.size(), 4);
            for (int pi = 0; pi < pc; ++pi)
                for (int qi = 0; qi < qc; ++qi) {
                    const cplx val =
                        orthogonality_check(chi, psi, chi.kernel[pi], psi.kernel[qi], a);
                    max_delta_dev = std::max(max_delta_dev, std::abs(val - target));
                    if (first) {
                        first_val = val;
                        first = false;
                    } else {
                        max_spread = std::max(max_spread, std::abs(val - first_val));
                    }
                }
        }
    }
    const bool ortho_ok = max_delta_dev <= 1e-6;
    const bool spread_ok = max_spread <= 1e-8;

    // Character lifts: every non-empty-kernel character must reproduce its
    // source cover irreducible.
    int lifted = 0;
    int skipped_empty = 0;
    bool lift_ok = true;
    std::string lift_error;
    for (const PolyadicCharacter& chi : chars) {
        if (chi.kernel.empty()) {
            ++skipped_empty;
            continue;
        }
        try {
            lift_character(chi, chi.kernel.front());
            ++lifted;
        } catch (const Error& e) {
            lift_ok = false;
            lift_error = e.what();
        }
    }

    // Representation round trips: 1-dimensional representations from the
    // degree-1 characters, plus the cover's regular representation when it
    // is small enough to be quick.
    int rep_trips = 0;
    bool rep_ok = true;
    std::string rep_error;
    auto shared = std::make_shared<const PolyadicGroup>(G);
    for (const PolyadicCharacter& chi : chars) {
        if (chi.degree != 1) continue;
        PolyadicRepresentation rep;
        rep.group = shared;
        rep.dimension = 1;
        rep.matrices.resize(m);
        for (int x = 0; x < m; ++x) {
            rep.matrices[x] = Eigen::MatrixXcd(1, 1);
            rep.matrices[x](0, 0) = chi.values(x);
        }
        try {
            AxiomReport hom = verify_nary_homomorphism(rep);
            if (!hom.passed)
                throw Error(ErrorCode::HomomorphismFailure,
                            "degree-1 character is not multiplicative");
            std::vector<Eigen::MatrixXcd> lifted_rep = lift_representation(rep, a);
            for (int x = 0; x < m; ++x) {
                const double dev =
                    (lifted_rep[PC.embed[x]] - rep.matrices[x]).cwiseAbs().maxCoeff();
                if (dev > 1e-10)
                    throw Error(ErrorCode::LiftMismatch,
                                "lift does not restrict back to the original");
            }
            restrict_representation(lifted_rep, PC);
            ++rep_trips;
        } catch (const Error& e) {
            rep_ok = false;
            rep_error = e.what();
        }
    }
    if (PC.cover.order <= 24) {
        const int M = PC.cover.order;
        std::vector<Eigen::MatrixXcd> regular(M);
        for (int c = 0; c < M; ++c) {
            regular[c] = Eigen::MatrixXcd::Zero(M, M);
            for (int v = 0; v < M; ++v) regular[c](PC.cover.op(c, v), v) = 1.0;
        }
        try {
            restrict_representation(regular, PC);
            ++rep_trips;
        } catch (const Error& e) {
            rep_ok = false;
            rep_error = e.what();
        }
    }

    // Anchor invariance: restricted character sets agree across anchors.
    double anchor_dev = 0;
    bool anchor_ok = true;
    if (m > 1) {
        const int b = (a + 1) % m;
        std::vector<PolyadicCharacter> other = irreducible_polyadic_characters(G, b, o.seed);
        if (other.size() != chars.size()) {
            anchor_ok = false;
        } else {
            std::vector<Eigen::VectorXcd> va, vb;
            for (const auto& chi : chars) va.push_back(chi.values);
            for (const auto& chi : other) vb.push_back(chi.values);
            anchor_dev = char_set_distance(std::move(va), std::move(vb));
            anchor_ok = anchor_dev <= 1e-8;
        }
    }

    const bool pass =
        deg.ok() && ortho_ok && spread_ok && lift_ok && rep_ok && anchor_ok;

    if (o.format == "json") {
        ordered_json j;
        j["label"] = G.label;
        j["arity"] = n;
        j["order"] = m;
        j["anchor"] = a;
        j["seed"] = o.seed;
        j["degree_theorem"] = ordered_json{{"degrees", deg.degrees},
                                           {"sum_of_squares", deg.sum_of_squares},
                                           {"target", deg.target},
                                           {"sum_matches", deg.sum_matches},
                                           {"all_divide", deg.all_divide}};
        j["orthogonality"] = ordered_json{{"pairs", pairs},
                                          {"max_deviation", max_delta_dev},
                                          {"max_pq_spread", max_spread},
                                          {"pass", ortho_ok && spread_ok}};
        j["character_lifts"] = ordered_json{{"lifted", lifted},
                                            {"skipped_empty_kernel", skipped_empty},
                                            {"pass", lift_ok}};
        j["representation_round_trips"] = ordered_json{{"count", rep_trips}, {"pass", rep_ok}};
        j["anchor_invariance"] =
            ordered_json{{"max_deviation", anchor_dev}, {"pass", anchor_ok}};
        j["overall"] = pass ? "pass" : "fail";
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "group: " << G.label << " (arity " << n << ", order " << m << ")\n";
        std::cout << "anchor " << a << ":\n";
        std::cout << "  degree theorem: degrees [";
        for (std::size_t i = 0; i < deg.degrees.size(); ++i)
            std::cout << (i ? ", " : "") << deg.degrees[i];
        std::cout << "], sum of squares " << deg.sum_of_squares << ", target " << deg.target
                  << ", divisibility " << (deg.all_divide ? "pass" : "FAIL") << " -> "
                  << (deg.ok() ? "pass" : "FAIL") << "\n";
        std::cout << "  orthogonality: " << pairs << " pairs, max |value - delta| = "
                  << fmt6(max_delta_dev) << " -> " << (ortho_ok ? "pass" : "FAIL") << "\n";
        std::cout << "  p,q-independence: max spread " << fmt6(max_spread) << " -> "
                  << (spread_ok ? "pass" : "FAIL") << "\n";
        std::cout << "  character lifts: " << lifted << " lifted, " << skipped_empty
                  << " skipped (empty kernel) -> " << (lift_ok ? "pass" : "FAIL");
        if (!lift_ok) std::cout << " (" << lift_error << ")";
        std::cout << "\n";
        std::cout << "  representation round trips: " << rep_trips << " -> "
                  << (rep_ok ? "pass" : "FAIL");
        if (!rep_ok) std::cout << " (" << rep_error << ")";
        std::cout << "\n";
        std::cout << "  anchor invariance: max deviation " << fmt6(anchor_dev) << " -> "
                  << (anchor_ok ? "pass" : "FAIL") << "\n";
        std::cout << "overall: " << (pass ? "pass" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

int cmd_catalog(const Options& o) {
    if (o.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const std::string& name : builtin_names()) {
            PolyadicGroup G = builtin_group(name);
            arr.push_back(ordered_json{
                {"name", name}, {"arity", G.arity}, {"order", G.order}});
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const std::string& name : builtin_names()) {
            PolyadicGroup G = builtin_group(name);
            std::cout << name << " (arity " << G.arity << ", order " << G.order << ")\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite polyadic groups: axioms, Post covers, character tables"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* cmd, bool with_spec) {
        if (with_spec)
            cmd->add_option("spec", o.spec, "spec file (JSON) or builtin name")->required();
        cmd->add_option("--seed", o.seed, "seed for all randomized internals");
        cmd->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* validate =
        app.add_subcommand("validate", "check the n-ary group axioms and skew identities");
    add_common(validate, true);
    validate->add_option("--sample", o.sample, "use sampled checks with this many trials");

    CLI::App* cover =
        app.add_subcommand("cover", "build the Post cover and verify the coset theorem");
    add_common(cover, true);
    cover->add_option("--anchor", o.anchor, "anchor element (default 0)");
    cover->add_flag("--all-anchors", o.all_anchors, "sweep every anchor");
    cover->add_option("--dump", o.dump, "write the cover Cayley table as a reusable spec file");

    CLI::App* chartab = app.add_subcommand(
        "chartab", "character table of the cover and the restricted polyadic characters");
    add_common(chartab, true);
    chartab->add_option("--anchor", o.anchor, "anchor element (default 0)");

    CLI::App* verify = app.add_subcommand(
        "verify-theorems", "degree theorem, orthogonality, lifts, and anchor invariance");
    add_common(verify, true);
    verify->add_option("--anchor", o.anchor, "anchor element (default 0)");

    CLI::App* catalog = app.add_subcommand("catalog", "list the builtin groups");
    add_common(catalog, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(o);
        if (cover->parsed()) return cmd_cover(o);
        if (chartab->parsed()) return cmd_chartab(o);
        if (verify->parsed()) return cmd_verify_theorems(o);
        if (catalog->parsed()) return cmd_catalog(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_input_error() ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
