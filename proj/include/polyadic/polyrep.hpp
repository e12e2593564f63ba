#pragma once

#include <Eigen/Dense>
#include <memory>

#include "polyadic/chartab.hpp"
#include "polyadic/postcover.hpp"

namespace polyadic {

/// An irreducible character of (G, f): the restriction of a cover irreducible
/// to the embedded copy of G. Carries enough of the originating cover table
/// (row r of the values, the class map) to verify lifts without rebuilding it.
struct PolyadicCharacter {
    std::shared_ptr<const PolyadicGroup> group;
    int anchor = 0;
    Eigen::VectorXcd values;  // values(x) = chi(x)
    int degree = 1;
    int source = 0;  // row index in the cover character table
    std::vector<int> kernel;
    Eigen::VectorXcd cover_row;       // source row over cover classes
    std::vector<int> cover_class_of;  // cover element -> class
};

/// A matrix representation of (G, f): Lambda(f(x_1..x_n)) equals the product
/// Lambda(x_1)...Lambda(x_n).
struct PolyadicRepresentation {
    std::shared_ptr<const PolyadicGroup> group;
    int dimension = 1;
    std::vector<Eigen::MatrixXcd> matrices;  // element -> dimension x dimension
};

struct DegreeTheoremReport {
    std::vector<int> degrees;
    long long sum_of_squares = 0;
    long long target = 0;  // (n-1)*|G|
    bool sum_matches = false;
    bool all_divide = false;
    bool ok() const { return sum_matches && all_divide; }
};

/// All irreducible characters of (G, f) at anchor a: builds the cover,
/// computes its character table, and restricts each row to the embedded
/// coset. Returns one character per cover conjugacy class.
std::vector<PolyadicCharacter> irreducible_polyadic_characters(
    const PolyadicGroup& G, int a, std::uint64_t seed = kDefaultSeed);

/// {p : chi(p) = degree within 1e-6}, the elements represented by the
/// identity matrix.
std::vector<int> kernel(const PolyadicCharacter& chi);

/// The cover character chi-hat recovered from chi alone via
/// chi-hat(x, i) = chi(f(x, a^(i), p^(n-i-1))) for p in ker chi; verified
/// against the source cover irreducible within 1e-8.
Eigen::VectorXcd lift_character(const PolyadicCharacter& chi, int p);

/// Degrees d_1..d_k of the irreducible characters at anchor a, with the
/// checks sum d_i^2 = (n-1)|G| and d_i | (n-1)|G|.
DegreeTheoremReport degree_theorem_check(const PolyadicGroup& G, int a,
                                         std::uint64_t seed = kDefaultSeed);

/// The double sum
///   (1/((n-1)|G|)) sum_i sum_x chi(f(x,a^(i),p^(n-i-1))) conj(psi(f(x,a^(i),q^(n-i-1))))
/// over i in 0..n-2 and x in G; equals 1 when chi = psi and 0 otherwise.
cplx orthogonality_check(const PolyadicCharacter& chi, const PolyadicCharacter& psi, int p,
                         int q, int a);

/// Checks Lambda(f(x_1..x_n)) = product of the Lambda(x_t) over all (or
/// sampled) tuples, and Lambda(skew(a)) = Lambda(a)^(2-n) for every a.
AxiomReport verify_nary_homomorphism(const PolyadicRepresentation& rep,
                                     CheckMode mode = CheckMode::full());

/// The cover representation (x, i) -> Lambda(x) Lambda(a)^i, verified to be
/// a homomorphism of the cover over all pairs. Indexing matches PostCover.
std::vector<Eigen::MatrixXcd> lift_representation(const PolyadicRepresentation& rep, int a);

/// Restriction Gamma(x, 0) of a cover representation; verifies the n-ary
/// homomorphism property and the round trip (lifting the restriction
/// reproduces Gamma within 1e-10).
PolyadicRepresentation restrict_representation(const std::vector<Eigen::MatrixXcd>& cover_rep,
                                               const PostCover& PC);

}  // namespace polyadic
