#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace polyadic {

using cplx = std::complex<double>;

inline constexpr std::uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ull;

/// Largest ordinary-group order the exact engines accept (covers in scope
/// have order at most (n-1)*|G| <= 384).
inline constexpr int kOrderBudget = 384;

/// Largest full n-ary table, in entries.
inline constexpr long long kTableBudget = 10'000'000;

/// Elementary-evaluation budget above which axiom checks switch to sampling.
inline constexpr double kAxiomCostBudget = 1e8;

namespace detail {

// Engine output is used directly so draws are reproducible across
// standard-library implementations.
inline int rand_index(std::mt19937_64& rng, int m) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(m));
}

inline double rand_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail
}  // namespace polyadic
