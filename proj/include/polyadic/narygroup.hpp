#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyadic/group.hpp"

namespace polyadic {

/// How an axiom check enumerates its input space.
struct CheckMode {
    bool exhaustive = true;
    long long samples = 0;
    std::uint64_t seed = kDefaultSeed;

    static CheckMode full() { return {true, 0, kDefaultSeed}; }
    static CheckMode sampled(long long count, std::uint64_t seed = kDefaultSeed) {
        return {false, count, seed};
    }
};

struct AxiomViolationWitness {
    std::vector<int> assignment;  // full input assignment
    int lhs = 0;
    int rhs = 0;
    std::string detail;
};

struct AxiomReport {
    bool passed = true;
    CheckMode mode;
    std::vector<AxiomViolationWitness> violations;  // capped at kMaxWitnesses
    long long checked_count = 0;

    static constexpr int kMaxWitnesses = 64;
};

/// Finite n-ary group. Either a full m^n value table or the b-derived form
/// f(x_1..x_n) = x_1 * ... * x_n * b over an ordinary group with b central.
struct PolyadicGroup {
    enum class Storage { FullTable, BDerived };

    int arity = 2;  // n
    int order = 0;  // m
    Storage storage = Storage::BDerived;
    std::vector<int> table;  // FullTable: row-major, last argument fastest
    FiniteGroup base;        // BDerived
    int b = 0;               // BDerived
    std::string label;
    std::vector<int> skew_table;  // x -> skew(x), filled at construction
};

/// AxiomViolation carrying the failing report.
class AxiomError : public Error {
public:
    AxiomError(AxiomReport report, const std::string& message)
        : Error(ErrorCode::AxiomViolation, message), report_(std::move(report)) {}
    const AxiomReport& report() const { return report_; }

private:
    AxiomReport report_;
};

/// Builds FullTable storage and verifies the axioms: exhaustively when
/// (2n-1)*m^(2n-1) elementary evaluations fit the budget, sampled otherwise.
/// Throws AxiomError with the failing report when verification fails.
PolyadicGroup nary_from_table(int arity, int order, const std::vector<int>& flat_table,
                              const std::string& label = "");

/// Same construction with range checks only; used to probe invalid tables
/// with the report-returning checkers.
PolyadicGroup nary_from_table_raw(int arity, int order, const std::vector<int>& flat_table,
                                  const std::string& label = "");

/// The b-derived n-ary group of `base`; b must be central.
PolyadicGroup b_derived(const FiniteGroup& base, int b, int arity, const std::string& label = "");

/// Materializes any polyadic group as FullTable storage (budget-checked).
PolyadicGroup to_full_table(const PolyadicGroup& G);

/// For arity 2: the ordinary group with x*y = f(x, y).
FiniteGroup as_binary_group(const PolyadicGroup& G);

/// f applied to exactly n elements.
int evaluate(const PolyadicGroup& G, std::span<const int> word);

/// f applied left-to-right to a word of length k(n-1)+1, k >= 1.
int evaluate_word(const PolyadicGroup& G, std::span<const int> word);

/// The unique z with f(x_1^{i-1}, z, x_{i+1}^n) = target; position is 1-based.
/// NoSolution / MultipleSolutions signal an invalid group and carry witnesses.
int solve(const PolyadicGroup& G, int position, int target, std::span<const int> others);

/// The skew element: the unique z with f(x,...,x,z) = x (n-1 copies of x).
int skew(const PolyadicGroup& G, int x);

/// Verifies that all n bracketings of f over 2n-1 arguments agree. Counts
/// one check per adjacent bracketing pair per assignment.
AxiomReport check_associativity(const PolyadicGroup& G, CheckMode mode = CheckMode::full());

/// Verifies z -> f(..., z, ...) is a bijection in every position; one check
/// per (position, outer assignment) pair.
AxiomReport check_unique_solvability(const PolyadicGroup& G, CheckMode mode = CheckMode::full());

/// An element e with f(e,..,x,..,e) = x in every position, if one exists.
std::optional<int> find_nary_identity(const PolyadicGroup& G);

/// Verifies the three skew-element cancellation identities
///   f(x^(i-2), ~x, x^(n-i), y) = y,   f(y, x^(n-j), ~x, x^(j-2)) = y,
///   f(x^(k-1), ~x, x^(n-k)) = x
/// over all x, y and admissible i, j, k.
AxiomReport check_dornte(const PolyadicGroup& G);

}  // namespace polyadic
