#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "loopkit/lyndon.hpp"
#include "loopkit/presentation.hpp"
#include "loopkit/rational.hpp"

namespace loopkit {

inline constexpr int kDefaultMaxDegree = 12;
// The oracle route (word count - slice rank) is the expensive one; above
// this loop degree it is skipped unless asked for.
inline constexpr int kDefaultOracleMaxDegree = 8;

struct HilbertEntry {
    Provenance provenance;
    std::optional<Integer> value; // empty when the route was skipped
    std::string note;             // why it was skipped
};

struct HilbertRow {
    int degree = 0;
    std::vector<HilbertEntry> entries; // series, avoiding-words, oracle
    // Avoiding words checked as a basis of the quotient in this degree.
    std::optional<bool> complement;
    bool agree = true;
};

struct HilbertComparison {
    std::vector<HilbertRow> rows;
    bool agreement = true;
};

struct ReportOptions {
    int oracle_max_degree = kDefaultOracleMaxDegree;
    StandardBasisOptions basis;
};

// Compares the three routes to the graded dimensions of the quotient,
// degree by degree.
HilbertComparison compare_hilbert(const AlgebraElement &rel, LeadingPair lp, int N,
                                  SliceCache *cache = nullptr, const ReportOptions &opts = {});

struct LoopHomologyReport {
    std::string algebra;              // "T(u1, u2, u3) / (...)"
    std::vector<int> generator_loop_degrees;
    std::string relation;             // graded
    std::string ungraded_relation;
    LeadingPair leading;
    int relation_degree = 0;
    HilbertComparison hilbert;
    std::vector<Integer> lie_dims;    // index m - 1 for loop degree m
    bool witt_reconstruction = false; // Witt product of lie_dims is the series route
};

LoopHomologyReport loop_homology_report(const QuadraticPresentation &p, int N,
                                        SliceCache *cache = nullptr,
                                        const ReportOptions &opts = {});

extern const char *const kPrimeCaveat;

struct PiDecomposition {
    int max_degree = 0; // S: spheres of dimension <= S
    std::map<int, Integer> multiplicities;      // sphere dimension -> count
    std::map<int, std::vector<Word>> witnesses; // standard Lyndon words
    std::vector<LyndonBasisEntry> basis;
    std::string caveat = kPrimeCaveat;
};

// Spheres S^{m+1} for loop degrees m <= S - 1, counted twice: from the
// Moebius formula and by the standard Lyndon basis. Throws InconsistencyError
// at the first degree where the two disagree.
PiDecomposition sphere_decomposition(const QuadraticPresentation &p, int S,
                                     SliceCache *cache = nullptr,
                                     const StandardBasisOptions &opts = {});

// rank of pi_s(M) (x) Q for s = 0..S.
std::vector<Integer> rational_ranks(const PiDecomposition &dec, int S);

struct GrowthRatio {
    int degree = 0;
    Rational ratio;      // a_m / a_{m-step}
    bool within_5_percent = false;
};

struct MooreReport {
    bool applicable = false;
    std::string explanation;
    int window_start = 0;
    int window_end = 0;
    int window_step = 1;
    bool populated = false;
    std::optional<int> first_gap;
    int max_sphere_dim = 0;
    // Smallest positive root of the loop denominator lies in [root_low, root_high].
    Rational root_low, root_high;
    std::vector<GrowthRatio> ratios;
    std::string conclusion;
};

MooreReport moore_report(const QuadraticPresentation &p, const PiDecomposition &dec);

// Same for inputs of rank <= 2, where the report explains why nothing grows.
MooreReport moore_inapplicable(std::size_t r);

} // namespace loopkit
