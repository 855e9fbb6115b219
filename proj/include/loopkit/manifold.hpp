#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "loopkit/presentation.hpp"
#include "loopkit/rational.hpp"
#include "loopkit/word.hpp"

namespace loopkit {

// Rational cohomology data of a closed (n-1)-connected d-manifold: degrees of
// the indecomposables x_1..x_r and the pairing c_ij = <x_i x_j, [M]>.
struct ManifoldDescriptor {
    std::string name;
    int n = 0;
    int d = 0;
    std::vector<int> generator_degrees;
    RationalMatrix pairing;
    // Primes with torsion in integral cohomology; carried along, never used.
    std::optional<std::vector<long>> torsion_primes;

    std::size_t rank() const noexcept { return generator_degrees.size(); }
    friend bool operator==(const ManifoldDescriptor &, const ManifoldDescriptor &) = default;
};

enum class ViolationKind {
    connectivity,    // n < 2
    hypothesis,      // d > 3n - 2 or d < n
    degree_range,    // |x_i| outside [n, d - n]
    pairing_shape,   // pairing is not r x r
    pairing_support, // c_ij != 0 with |x_i| + |x_j| != d
    graded_symmetry, // c_ij != (-1)^{|x_i||x_j|} c_ji
    duality,         // complementary blocks not square and invertible
    realizability,   // r = 1 needs d = 2s with s even
    torsion_prime,   // listed torsion "prime" is not prime
};

std::string to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::string message;
    std::vector<std::size_t> indices; // zero-based generator indices
};

enum class Route { main, low_rank };

struct ValidationResult;

class ValidatedManifold {
public:
    const ManifoldDescriptor &descriptor() const noexcept { return desc_; }
    std::size_t r() const noexcept { return desc_.rank(); }
    // dim H^*(M; Q) = r + 2: the indecomposables plus H^0 and H^d.
    std::size_t total_rank() const noexcept { return desc_.rank() + 2; }
    Route route() const noexcept { return r() >= 3 ? Route::main : Route::low_rank; }

private:
    friend ValidationResult validate(const ManifoldDescriptor &desc);
    explicit ValidatedManifold(ManifoldDescriptor desc) : desc_(std::move(desc)) {}

    ManifoldDescriptor desc_;
};

struct ValidationResult {
    std::optional<ValidatedManifold> manifold;
    std::vector<Violation> violations;

    bool ok() const noexcept { return manifold.has_value(); }
};

// Checks every hypothesis and reports all violations, not just the first.
ValidationResult validate(const ManifoldDescriptor &desc);

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<Violation> violations);
    const std::vector<Violation> &violations() const noexcept { return violations_; }

private:
    std::vector<Violation> violations_;
};

struct NormalizedManifold {
    ValidatedManifold manifold; // pairing replaced by change^T C change
    RationalMatrix change;
    LeadingPair leading;
    std::vector<Letter> letter_order; // ascending
};

// Changes the cohomology basis so the pairing entry at the leading pair
// (alpha, beta) is 1, and picks a letter order in which (alpha, beta) is the
// largest off-diagonal word of the relation.
//   - some c_ji != 0 with i != j: (alpha, beta) is the largest such word under
//     the base order, and x_beta is rescaled;
//   - diagonal form (only possible for d = 2n): x_beta <- (x_alpha + x_beta) /
//     c_alpha_alpha for the two smallest letters, then alpha and beta become
//     the two largest letters.
// `seed_order` overrides the base letter order (ascending, zero-based).
NormalizedManifold normalize_basis(const ValidatedManifold &v,
                                   std::optional<std::vector<Letter>> seed_order = std::nullopt);

// Graded relation sum_{i,j} (-1)^{|u_i|+1} c_ji u_i u_j and its ungraded
// companion, both rescaled to coefficient 1 on the leading pair.
QuadraticPresentation build_relation(const NormalizedManifold &nm);

// validate + normalize_basis + build_relation; throws ValidationError.
QuadraticPresentation make_presentation(const ManifoldDescriptor &desc,
                                        std::optional<std::vector<Letter>> seed_order = std::nullopt);

RationalMatrix congruence(const RationalMatrix &c, const RationalMatrix &a); // a^T c a

enum class LowRankKind { sphere, james, connected_sum_james, product };

struct LowRankType {
    LowRankKind kind;
    int first = 0;  // d, d/2, d/2, or k
    int second = 0; // d - k for products

    std::string to_string() const;
    friend bool operator==(const LowRankType &, const LowRankType &) = default;
};

// Total rank 2: S^d. Total rank 3: J_2 S^{d/2}. Total rank 4: the connected
// sum of two J_2 S^{d/2} when both generators sit in degree d/2 and the form
// is anisotropic, otherwise S^k x S^{d-k}.
LowRankType classify_low_rank(const ValidatedManifold &v);

// Same, starting from raw data: realizability of the rank-3 case is checked
// first (RealizabilityError), then validity (ValidationError).
LowRankType classify_low_rank(const ManifoldDescriptor &desc);

enum class Hyperbolicity { hyperbolic, elliptic };
std::string to_string(Hyperbolicity h);

// Rationally hyperbolic iff r > 2.
Hyperbolicity hyperbolicity(const ValidatedManifold &v);

} // namespace loopkit
