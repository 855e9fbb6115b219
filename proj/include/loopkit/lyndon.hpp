#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "loopkit/normal_forms.hpp"
#include "loopkit/presentation.hpp"
#include "loopkit/word.hpp"

namespace loopkit {

// Strictly smaller than every proper rotation under the alphabet order.
bool is_lyndon(const Alphabet &alphabet, const Word &w);

// Lyndon words of loop degree m in lexicographic order (FKM prenecklace
// search with degree pruning).
std::vector<Word> lyndon_words(const Alphabet &alphabet, int m);

// w = l1 l2 with l2 the longest proper Lyndon suffix.
std::pair<Word, Word> standard_factorization(const Alphabet &alphabet, const Word &w);

// b(w) = [b(l1), b(l2)] down to letters.
BracketTree bracketing(const Alphabet &alphabet, const Word &w);

struct LyndonBasisEntry {
    Word word;
    BracketTree bracket;
    int loop_degree = 0;
    // Dimension of the sphere whose Whitehead product realizes the bracket.
    int sphere_dim = 0;
};

struct StandardBasisOptions {
    Execution exec = Execution::parallel;
    // Lyndon words whose normal forms are computed concurrently per batch.
    std::size_t batch = 256;
    SliceOptions slice;
};

// Lyndon words of each degree m <= N are taken in ascending order; the
// ungraded bracket of each is reduced to quotient coordinates and kept when it
// is independent of the brackets kept before it.
std::vector<LyndonBasisEntry> standard_basis(const AlgebraElement &ungraded_relation,
                                             LeadingPair lp, int N, SliceCache *cache = nullptr,
                                             const StandardBasisOptions &opts = {});

std::vector<LyndonBasisEntry> standard_basis(const QuadraticPresentation &p, int N,
                                             SliceCache *cache = nullptr,
                                             const StandardBasisOptions &opts = {});

} // namespace loopkit
