#include "loopkit/normal_forms.hpp"

#include <algorithm>
#include <functional>

#include "loopkit/errors.hpp"
#include "loopkit/series.hpp"

namespace loopkit {

std::string to_string(Provenance p)
{
    switch (p) {
    case Provenance::series:
        return "series";
    case Provenance::avoiding_words:
        return "avoiding-words";
    case Provenance::oracle:
        return "oracle";
    }
    return "unknown";
}

int check_quadratic_relation(const AlgebraElement &rel)
{
    if (rel.is_zero())
        throw UsageError("quadratic relation is zero");
    for (const auto &[w, c] : rel.terms())
        if (w.length() != 2)
            throw UsageError("relation term " + to_string(w) + " is not a length-two word");
    const int deg = rel.homogeneous_degree();
    if (deg < 0)
        throw UsageError("relation is not homogeneous in loop degree");
    return deg;
}

std::vector<Word> avoiding_words(const Alphabet &alphabet, LeadingPair lp, int m)
{
    if (m < 0)
        throw DomainError("avoiding_words: negative degree");
    std::vector<Word> out;
    Word prefix;
    // Same traversal as enumerate_words, pruning prefixes that end in the pair.
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            out.push_back(prefix);
            return;
        }
        for (Letter a : alphabet.order()) {
            const int deg = alphabet.degree(a);
            if (deg > remaining)
                continue;
            if (a == lp.beta && !prefix.empty() && prefix[prefix.length() - 1] == lp.alpha)
                continue;
            prefix.push_back(a);
            rec(remaining - deg);
            prefix.pop_back();
        }
    };
    rec(m);
    return out;
}

Integer count_avoiding_words(const Alphabet &alphabet, LeadingPair lp, int m)
{
    if (m < 0)
        throw DomainError("count_avoiding_words: negative degree");
    const auto n = static_cast<std::size_t>(m);
    // total[k]: avoiding words of degree k; ends_alpha[k]: those ending in alpha.
    std::vector<Integer> total(n + 1), ends_alpha(n + 1);
    total[0] = 1;
    const int da = alphabet.degree(lp.alpha), db = alphabet.degree(lp.beta);
    for (int k = 1; k <= m; ++k) {
        Integer t = 0;
        for (int deg : alphabet.degrees())
            if (deg <= k)
                t += total[static_cast<std::size_t>(k - deg)];
        if (db <= k)
            t -= ends_alpha[static_cast<std::size_t>(k - db)];
        total[static_cast<std::size_t>(k)] = t;
        if (da <= k)
            ends_alpha[static_cast<std::size_t>(k)] = total[static_cast<std::size_t>(k - da)];
    }
    return total[n];
}

HilbertTable hilbert_from_series(const Alphabet &alphabet, int relation_degree, int N)
{
    if (N < 0)
        throw DomainError("hilbert_from_series: negative bound");
    const auto order = static_cast<std::size_t>(N);
    const Series inv = series_inverse(loop_denominator(alphabet.degrees(), relation_degree, order));
    HilbertTable t;
    for (std::size_t k = 0; k <= order; ++k) {
        t.dims.push_back(inv[k].get_num());
        t.provenance.push_back(Provenance::series);
    }
    return t;
}

HilbertTable hilbert_from_avoiding_words(const Alphabet &alphabet, LeadingPair lp, int N)
{
    HilbertTable t;
    for (int m = 0; m <= N; ++m) {
        t.dims.push_back(count_avoiding_words(alphabet, lp, m));
        t.provenance.push_back(Provenance::avoiding_words);
    }
    return t;
}

std::shared_ptr<const DegreeSlice> build_ideal_slice(const AlgebraElement &rel,
                                                     std::optional<LeadingPair> lp, int m,
                                                     const SliceOptions &opts)
{
    const int rel_deg = check_quadratic_relation(rel);
    const Alphabet &alphabet = *rel.alphabet();
    if (m < 0)
        throw DomainError("ideal slice: negative degree");
    const Integer word_count = count_words(alphabet, m);
    if (word_count > Integer(static_cast<unsigned long>(opts.word_guard)))
        throw GuardError("degree " + std::to_string(m) + " has " + word_count.get_str() +
                         " words, above the word-space limit of " +
                         std::to_string(opts.word_guard) + "; lower the maximum degree");

    auto slice = std::make_shared<DegreeSlice>();
    slice->degree = m;
    std::vector<Word> words = enumerate_words(alphabet, m);
    if (lp) {
        std::stable_partition(words.begin(), words.end(), [&](const Word &w) {
            return w.contains_pair(lp->alpha, lp->beta);
        });
        slice->reducible_count = static_cast<std::size_t>(
            std::count_if(words.begin(), words.end(),
                          [&](const Word &w) { return w.contains_pair(lp->alpha, lp->beta); }));
    }
    slice->columns = std::move(words);
    slice->index.reserve(slice->columns.size());
    for (std::size_t k = 0; k < slice->columns.size(); ++k)
        slice->index.emplace(slice->columns[k], static_cast<Column>(k));

    if (m < rel_deg) {
        return slice;
    }

    // Generators w1 * rel * w2 with |w1| + |w2| = m - rel_deg.
    struct Split {
        std::vector<Word> left, right;
    };
    std::vector<Split> splits;
    std::vector<std::size_t> offsets{0};
    for (int a = 0; a <= m - rel_deg; ++a) {
        Split s{enumerate_words(alphabet, a), enumerate_words(alphabet, m - rel_deg - a)};
        offsets.push_back(offsets.back() + s.left.size() * s.right.size());
        splits.push_back(std::move(s));
    }
    const std::vector<std::pair<Word, Rational>> terms(rel.terms().begin(), rel.terms().end());
    std::vector<SparseRow> rows(offsets.back());

    const auto total = static_cast<std::ptrdiff_t>(rows.size());
#pragma omp parallel for schedule(static) if (opts.exec == Execution::parallel)
    for (std::ptrdiff_t g = 0; g < total; ++g) {
        const auto gi = static_cast<std::size_t>(g);
        const auto s = static_cast<std::size_t>(
            std::upper_bound(offsets.begin(), offsets.end(), gi) - offsets.begin() - 1);
        const std::size_t local = gi - offsets[s];
        const Split &split = splits[s];
        const Word &w1 = split.left[local / split.right.size()];
        const Word &w2 = split.right[local % split.right.size()];
        std::vector<std::pair<Column, Rational>> entries;
        entries.reserve(terms.size());
        for (const auto &[w, c] : terms)
            entries.emplace_back(slice->index.at(w1 + w + w2), c);
        rows[gi] = SparseRow::from_terms(std::move(entries));
    }
    slice->echelon = build_echelon(std::move(rows), opts.exec);
    return slice;
}

namespace {

std::string cache_key(const AlgebraElement &rel, std::optional<LeadingPair> lp, int m)
{
    std::string key = std::to_string(m) + "|";
    if (lp)
        key += std::to_string(lp->alpha) + "," + std::to_string(lp->beta);
    key += "|";
    const Alphabet &a = *rel.alphabet();
    for (std::size_t k = 0; k < a.size(); ++k)
        key += std::to_string(a.degree(static_cast<Letter>(k))) + ":" +
               std::to_string(a.rank(static_cast<Letter>(k))) + ",";
    key += "|";
    for (const auto &[w, c] : rel.terms()) {
        for (Letter x : w.letters())
            key += std::to_string(x) + ".";
        key += "=" + to_string(c) + ";";
    }
    return key;
}

} // namespace

std::shared_ptr<const DegreeSlice> fetch_slice(const AlgebraElement &rel,
                                               std::optional<LeadingPair> lp, int m,
                                               SliceCache *cache, const SliceOptions &opts)
{
    return cache ? cache->get(rel, lp, m, opts) : build_ideal_slice(rel, lp, m, opts);
}

std::shared_ptr<const DegreeSlice> SliceCache::get(const AlgebraElement &rel,
                                                   std::optional<LeadingPair> lp, int m,
                                                   const SliceOptions &opts)
{
    const std::string key = cache_key(rel, lp, m);
    {
        std::lock_guard lock(mutex_);
        if (auto it = slices_.find(key); it != slices_.end())
            return it->second;
    }
    auto built = build_ideal_slice(rel, lp, m, opts);
    std::lock_guard lock(mutex_);
    return slices_.try_emplace(key, std::move(built)).first->second;
}

std::size_t SliceCache::size() const
{
    std::lock_guard lock(mutex_);
    return slices_.size();
}

std::size_t ideal_slice_rank(const AlgebraElement &rel, int m, SliceCache *cache,
                             const SliceOptions &opts)
{
    return fetch_slice(rel, std::nullopt, m, cache, opts)->echelon.rank();
}

bool slice_has_complement(const DegreeSlice &slice)
{
    if (slice.echelon.rank() != slice.reducible_count)
        return false;
    // Every pivot must sit on a reducible word; a pivot on an avoiding word
    // would mean a dependency among avoiding words modulo the ideal.
    const auto pivots = slice.echelon.pivot_columns();
    return pivots.empty() || pivots.back() < slice.reducible_count;
}

bool verify_complement_basis(const AlgebraElement &rel, LeadingPair lp, int m, SliceCache *cache,
                             const SliceOptions &opts)
{
    return slice_has_complement(*fetch_slice(rel, lp, m, cache, opts));
}

PairRewriter::PairRewriter(const AlgebraElement &rel, LeadingPair lp)
    : alphabet_(rel.alphabet()), lp_(lp)
{
    check_quadratic_relation(rel);
    if (lp.alpha == lp.beta)
        throw DomainError("leading pair must use two distinct letters");
    const Word lead = lp.word();
    const Rational lead_coef = rel.coefficient(lead);
    if (lead_coef == 0)
        throw UsageError("relation has no term on the leading pair " + to_string(lead));
    terminating_ = true;
    for (const auto &[w, c] : rel.terms()) {
        if (w == lead)
            continue;
        replacement_.emplace_back(w, -c / lead_coef);
        if (alphabet_->lex_less(lead, w))
            terminating_ = false;
    }
}

std::optional<AlgebraElement> PairRewriter::normal_form(const AlgebraElement &x,
                                                        std::size_t fuel) const
{
    const Alphabet &alphabet = *alphabet_;
    auto descending = [&alphabet](const Word &a, const Word &b) { return alphabet.lex_less(b, a); };
    std::map<Word, Rational, decltype(descending)> work(descending);
    for (const auto &[w, c] : x.terms())
        work.emplace(w, c);

    AlgebraElement out(alphabet_);
    std::size_t steps = 0;
    while (!work.empty()) {
        auto node = work.extract(work.begin());
        const Word &w = node.key();
        const Rational &c = node.mapped();
        std::size_t pos = w.length();
        for (std::size_t k = 0; k + 1 < w.length(); ++k) {
            if (w[k] == lp_.alpha && w[k + 1] == lp_.beta) {
                pos = k;
                break;
            }
        }
        if (pos == w.length()) {
            out.add(w, c);
            continue;
        }
        if (++steps > fuel)
            return std::nullopt;
        const Word head = w.subword(0, pos);
        const Word tail = w.subword(pos + 2, w.length() - pos - 2);
        for (const auto &[r, a] : replacement_) {
            Word nw = head + r + tail;
            auto [it, inserted] = work.try_emplace(std::move(nw), c * a);
            if (!inserted) {
                it->second += c * a;
                if (it->second == 0)
                    work.erase(it);
            }
        }
    }
    return out;
}

AlgebraElement quotient_coordinates_by_elimination(const AlgebraElement &x,
                                                   const AlgebraElement &rel, LeadingPair lp,
                                                   SliceCache *cache, const SliceOptions &opts)
{
    if (x.is_zero())
        return AlgebraElement(rel.alphabet());
    const int m = x.homogeneous_degree();
    if (m < 0)
        throw UsageError("quotient_coordinates: element is not homogeneous");
    const auto slice = fetch_slice(rel, lp, m, cache, opts);
    if (!slice_has_complement(*slice))
        throw InconsistencyError("words avoiding " + to_string(lp.word()) +
                                     " do not form a complement of the ideal in degree " +
                                     std::to_string(m),
                                 m);
    std::vector<std::pair<Column, Rational>> entries;
    for (const auto &[w, c] : x.terms())
        entries.emplace_back(slice->index.at(w), c);
    const SparseRow reduced = slice->echelon.reduce(SparseRow::from_terms(std::move(entries)));
    AlgebraElement out(rel.alphabet());
    for (std::size_t k = 0; k < reduced.size(); ++k)
        out.add(slice->columns[reduced.cols[k]], reduced.vals[k]);
    return out;
}

AlgebraElement quotient_coordinates(const AlgebraElement &x, const AlgebraElement &rel,
                                    LeadingPair lp, SliceCache *cache, const SliceOptions &opts)
{
    if (x.homogeneous_degree() < 0)
        throw UsageError("quotient_coordinates: element is not homogeneous");
    const PairRewriter rewriter(rel, lp);
    if (rewriter.is_terminating()) {
        if (auto nf = rewriter.normal_form(x))
            return *std::move(nf);
    }
    return quotient_coordinates_by_elimination(x, rel, lp, cache, opts);
}

} // namespace loopkit
