#pragma once

#include <Eigen/Dense>

#include "polyadic/group.hpp"

namespace polyadic {

struct ConjugacyClasses {
    std::vector<int> class_of;        // element -> class index
    std::vector<int> representatives; // class -> smallest member
    std::vector<int> sizes;
    int count = 0;
};

/// Complex irreducible character table. Row r is the character chi_r, column
/// c its value on class c. Rows are sorted by (degree, value order) so equal
/// groups produce identical tables regardless of seed.
struct CharacterTable {
    FiniteGroup group;
    ConjugacyClasses classes;
    Eigen::MatrixXcd values;
    std::vector<int> degrees;
};

struct OrthogonalityReport {
    double max_row_deviation = 0.0;
    double max_column_deviation = 0.0;
    double max_deviation() const {
        return max_row_deviation > max_column_deviation ? max_row_deviation
                                                        : max_column_deviation;
    }
};

/// Conjugation orbits, identity class first, then by (size, smallest member).
ConjugacyClasses conjugacy_classes(const FiniteGroup& G);

/// Class-matrix (Burnside) method: simultaneous diagonalization of the class
/// multiplication coefficients via a seeded random combination, degrees and
/// near-integer values snapped. Retries with fresh seeds on eigenvalue
/// collisions; DegenerateEigenbasis after the retry budget.
CharacterTable character_table(const FiniteGroup& G, std::uint64_t seed = kDefaultSeed);

/// Maximum deviation of the row and column orthogonality sums from their
/// Kronecker targets.
OrthogonalityReport check_orthogonality(const CharacterTable& T);

}  // namespace polyadic
