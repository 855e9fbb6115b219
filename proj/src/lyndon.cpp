#include "loopkit/lyndon.hpp"

#include <exception>
#include <optional>
#include <unordered_map>

#include "loopkit/errors.hpp"

namespace loopkit {

bool is_lyndon(const Alphabet &alphabet, const Word &w)
{
    if (w.empty())
        throw DomainError("is_lyndon: empty word");
    const std::size_t n = w.length();
    for (std::size_t k = 1; k < n; ++k) {
        // Compare w with its rotation starting at k.
        int cmp = 0;
        for (std::size_t i = 0; i < n && cmp == 0; ++i) {
            const int a = alphabet.rank(w[i]);
            const int b = alphabet.rank(w[(k + i) % n]);
            cmp = (a < b) ? -1 : (a > b ? 1 : 0);
        }
        if (cmp >= 0)
            return false;
    }
    return true;
}

namespace {

// Extends prenecklaces letter by letter; p is the length of the longest
// Lyndon prefix period, and the word is Lyndon iff p equals its length.
void lyndon_rec(const Alphabet &alphabet, int remaining, std::size_t p, Word &prefix,
                std::vector<Word> &out)
{
    if (remaining == 0) {
        if (!prefix.empty() && p == prefix.length())
            out.push_back(prefix);
        return;
    }
    const std::size_t n = prefix.length();
    for (Letter a : alphabet.order()) {
        const int deg = alphabet.degree(a);
        if (deg > remaining)
            continue;
        std::size_t next_p = 1;
        if (n > 0) {
            const Letter ref = prefix[n - p];
            if (alphabet.rank(a) < alphabet.rank(ref))
                continue;
            next_p = (a == ref) ? p : n + 1;
        }
        prefix.push_back(a);
        lyndon_rec(alphabet, remaining - deg, next_p, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Word> lyndon_words(const Alphabet &alphabet, int m)
{
    if (m < 1)
        return {};
    std::vector<Word> out;
    Word prefix;
    lyndon_rec(alphabet, m, 0, prefix, out);
    return out;
}

std::pair<Word, Word> standard_factorization(const Alphabet &alphabet, const Word &w)
{
    if (w.length() < 2)
        throw DomainError("standard_factorization: needs a word of length at least two");
    if (!is_lyndon(alphabet, w))
        throw DomainError("standard_factorization: " + to_string(w) + " is not a Lyndon word");
    for (std::size_t k = 1; k < w.length(); ++k) {
        Word suffix = w.subword(k, w.length() - k);
        if (is_lyndon(alphabet, suffix))
            return {w.subword(0, k), std::move(suffix)};
    }
    // The last letter is always a Lyndon suffix.
    throw InconsistencyError("standard_factorization: no Lyndon suffix found");
}

BracketTree bracketing(const Alphabet &alphabet, const Word &w)
{
    if (w.length() == 1) {
        if (w[0] >= alphabet.size())
            throw UsageError("bracketing: letter outside the alphabet");
        return BracketTree::leaf(w[0]);
    }
    auto [l1, l2] = standard_factorization(alphabet, w);
    return BracketTree::node(bracketing(alphabet, l1), bracketing(alphabet, l2));
}

std::vector<LyndonBasisEntry> standard_basis(const AlgebraElement &ungraded_relation,
                                             LeadingPair lp, int N, SliceCache *cache,
                                             const StandardBasisOptions &opts)
{
    const AlphabetRef &alphabet = ungraded_relation.alphabet();
    const PairRewriter rewriter(ungraded_relation, lp);
    std::vector<LyndonBasisEntry> basis;

    const auto reduce = [&](const AlgebraElement &x) {
        std::optional<AlgebraElement> nf;
        if (rewriter.is_terminating())
            nf = rewriter.normal_form(x);
        if (!nf)
            nf = quotient_coordinates_by_elimination(x, ungraded_relation, lp, cache, opts.slice);
        return std::move(*nf);
    };

    // Normal forms of every Lyndon word of lower degree. The ideal is two
    // sided, so nf([x,y]) = nf(nf(x) nf(y) - nf(y) nf(x)) and the full
    // expansion of a bracket is never needed.
    std::unordered_map<Word, AlgebraElement, WordHash> memo;

    for (int m = 1; m <= N; ++m) {
        const std::vector<Word> words = lyndon_words(*alphabet, m);
        if (words.empty())
            continue;
        if (!rewriter.is_terminating() && m >= 2)
            // Build the slice once, outside the parallel region.
            (void)quotient_coordinates_by_elimination(
                AlgebraElement::word(alphabet, words.front()), ungraded_relation, lp, cache,
                opts.slice);

        Echelon kept;
        std::unordered_map<Word, Column, WordHash> columns;
        {
            // Normal forms live on the words avoiding the leading pair. Numbered
            // in descending lex order the pivots mostly land on distinct words
            // and the echelon stays close to triangular; ascending order costs
            // about 8x on dense relations, first-appearance order more still.
            const auto normal = avoiding_words(*alphabet, lp, m);
            for (std::size_t i = 0; i < normal.size(); ++i)
                columns.emplace(normal[i], static_cast<Column>(normal.size() - 1 - i));
        }
        const std::size_t batch = std::max<std::size_t>(opts.batch, 1);
        std::vector<AlgebraElement> degree_forms;
        degree_forms.reserve(words.size());

        for (std::size_t start = 0; start < words.size(); start += batch) {
            const std::size_t stop = std::min(words.size(), start + batch);
            std::vector<std::optional<AlgebraElement>> forms(stop - start);
            std::exception_ptr failure;

            const auto count = static_cast<std::ptrdiff_t>(stop - start);
#pragma omp parallel for schedule(dynamic, 4) if (opts.exec == Execution::parallel)
            for (std::ptrdiff_t k = 0; k < count; ++k) {
                const auto i = static_cast<std::size_t>(k);
                try {
                    const Word &w = words[start + i];
                    if (w.length() == 1) {
                        forms[i] = AlgebraElement::letter(alphabet, w[0]);
                    } else {
                        const auto [l1, l2] = standard_factorization(*alphabet, w);
                        const AlgebraElement &a = memo.at(l1);
                        const AlgebraElement &b = memo.at(l2);
                        AlgebraElement x = multiply(a, b);
                        x -= multiply(b, a);
                        forms[i] = reduce(x);
                    }
                } catch (...) {
#pragma omp critical(loopkit_standard_basis_failure)
                    if (!failure)
                        failure = std::current_exception();
                }
            }
            if (failure)
                std::rethrow_exception(failure);

            for (std::size_t i = 0; i < forms.size(); ++i) {
                std::vector<std::pair<Column, Rational>> entries;
                entries.reserve(forms[i]->size());
                for (const auto &[w, c] : forms[i]->terms()) {
                    auto [it, inserted] =
                        columns.try_emplace(w, static_cast<Column>(columns.size()));
                    entries.emplace_back(it->second, c);
                }
                const Word &w = words[start + i];
                if (kept.insert(SparseRow::from_terms(std::move(entries))))
                    basis.push_back({w, bracketing(*alphabet, w), m, m + 1});
                degree_forms.push_back(std::move(*forms[i]));
            }
        }
        if (m < N)
            for (std::size_t i = 0; i < words.size(); ++i)
                memo.emplace(words[i], std::move(degree_forms[i]));
    }
    return basis;
}

std::vector<LyndonBasisEntry> standard_basis(const QuadraticPresentation &p, int N,
                                             SliceCache *cache, const StandardBasisOptions &opts)
{
    return standard_basis(p.ungraded, p.leading, N, cache, opts);
}

} // namespace loopkit
