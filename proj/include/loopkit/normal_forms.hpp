#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "loopkit/rational.hpp"
#include "loopkit/sparse_echelon.hpp"
#include "loopkit/word.hpp"

namespace loopkit {

// The word (alpha, beta) singled out in a quadratic relation
//   u_alpha u_beta = sum_{(i,j) != (alpha,beta)} a_ij u_i u_j.
struct LeadingPair {
    Letter alpha = 0;
    Letter beta = 0;

    Word word() const { return Word{alpha, beta}; }
    friend bool operator==(const LeadingPair &, const LeadingPair &) = default;
};

enum class Provenance { series, avoiding_words, oracle };
std::string to_string(Provenance p);

// Graded dimensions indexed by loop degree 0..N.
struct HilbertTable {
    std::vector<Integer> dims;
    std::vector<Provenance> provenance;
};

// Word spaces above this many words are refused by the linear-algebra routes.
inline constexpr std::size_t kDefaultWordGuard = 200000;

struct SliceOptions {
    Execution exec = Execution::parallel;
    std::size_t word_guard = kDefaultWordGuard;
};

// Checks that `rel` is a nonzero homogeneous element supported on words of
// length two; throws UsageError otherwise. Returns its loop degree.
int check_quadratic_relation(const AlgebraElement &rel);

// Words of loop degree m with no contiguous factor (alpha, beta), in
// lexicographic order.
std::vector<Word> avoiding_words(const Alphabet &alphabet, LeadingPair lp, int m);

// Same count by a transfer recurrence over "last letter is alpha".
Integer count_avoiding_words(const Alphabet &alphabet, LeadingPair lp, int m);

// Coefficients of 1 / (1 - sum_i t^{|u_i|} + t^{relation_degree}).
HilbertTable hilbert_from_series(const Alphabet &alphabet, int relation_degree, int N);
HilbertTable hilbert_from_avoiding_words(const Alphabet &alphabet, LeadingPair lp, int N);

// Degree-m slice of the two-sided ideal generated by a quadratic relation:
// the span of w1 * rel * w2 inside the space of degree-m words, in echelon
// form. With a leading pair, words containing (alpha, beta) take the lowest
// column indices so they are preferred as pivots.
struct DegreeSlice {
    int degree = 0;
    std::vector<Word> columns;
    std::unordered_map<Word, Column, WordHash> index;
    // Columns [0, reducible_count) hold the words containing the leading pair.
    std::size_t reducible_count = 0;
    Echelon echelon;
};

std::shared_ptr<const DegreeSlice> build_ideal_slice(const AlgebraElement &rel,
                                                     std::optional<LeadingPair> lp, int m,
                                                     const SliceOptions &opts = {});

// Memo table of slices keyed by (relation, leading pair, degree). Safe for
// concurrent use: lookups and inserts are serialized, builds are not, and the
// first slice stored for a key wins.
class SliceCache {
public:
    std::shared_ptr<const DegreeSlice> get(const AlgebraElement &rel,
                                           std::optional<LeadingPair> lp, int m,
                                           const SliceOptions &opts = {});
    std::size_t size() const;

private:
    mutable std::mutex mutex_;
    std::map<std::string, std::shared_ptr<const DegreeSlice>> slices_;
};

// From the cache when one is given, otherwise built on the spot.
std::shared_ptr<const DegreeSlice> fetch_slice(const AlgebraElement &rel,
                                               std::optional<LeadingPair> lp, int m,
                                               SliceCache *cache = nullptr,
                                               const SliceOptions &opts = {});

// Slice rank equals the number of reducible words and every pivot is one.
bool slice_has_complement(const DegreeSlice &slice);

// Rank over Q of the degree-m ideal slice (0 below the relation degree).
std::size_t ideal_slice_rank(const AlgebraElement &rel, int m, SliceCache *cache = nullptr,
                             const SliceOptions &opts = {});

// True iff the words avoiding lp project to a basis of the degree-m quotient:
// their number equals (word count - slice rank) and they stay linearly
// independent modulo the slice.
bool verify_complement_basis(const AlgebraElement &rel, LeadingPair lp, int m,
                             SliceCache *cache = nullptr, const SliceOptions &opts = {});

// Rewriting u_alpha u_beta -> (rest of the relation). Terminates whenever
// (alpha, beta) is the lexicographically largest word of the relation: every
// step then lowers the word in a multiplicative order and, since alpha !=
// beta, the rule has no self-overlaps, so normal forms are unique.
class PairRewriter {
public:
    PairRewriter(const AlgebraElement &rel, LeadingPair lp);

    bool is_terminating() const noexcept { return terminating_; }

    // Normal form of x, or nullopt once more than `fuel` rewrite steps are used.
    std::optional<AlgebraElement> normal_form(const AlgebraElement &x,
                                              std::size_t fuel = 50'000'000) const;

private:
    AlphabetRef alphabet_;
    LeadingPair lp_;
    std::vector<std::pair<Word, Rational>> replacement_;
    bool terminating_ = false;
};

// Representative of x modulo the ideal, written in the basis of words that
// avoid lp; the result is linear in x and zero exactly on the ideal.
// Uses the rewriting fast path when it terminates, otherwise exact linear
// algebra on the degree slice; throws InconsistencyError if the avoiding
// words are not a complement in that degree.
AlgebraElement quotient_coordinates(const AlgebraElement &x, const AlgebraElement &rel,
                                    LeadingPair lp, SliceCache *cache = nullptr,
                                    const SliceOptions &opts = {});

// Linear-algebra route only (no rewriting); used to check the fast path.
AlgebraElement quotient_coordinates_by_elimination(const AlgebraElement &x,
                                                   const AlgebraElement &rel, LeadingPair lp,
                                                   SliceCache *cache = nullptr,
                                                   const SliceOptions &opts = {});

} // namespace loopkit
