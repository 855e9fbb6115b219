#include "loopkit/report.hpp"

#include <numeric>
#include <sstream>

#include "loopkit/errors.hpp"
#include "loopkit/series.hpp"

namespace loopkit {

const char *const kPrimeCaveat =
    "valid after inverting finitely many primes (torsion primes of H*, plus Hurewicz "
    "denominators, plus implementation-chosen scalings)";

namespace {

Series denominator_of(const Alphabet &alphabet, int relation_degree, int N)
{
    return loop_denominator(alphabet.degrees(), relation_degree, static_cast<std::size_t>(N));
}

std::string algebra_text(const Alphabet &alphabet, const AlgebraElement &rel)
{
    std::ostringstream out;
    out << "T(";
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        out << (i ? ", " : "") << letter_name(static_cast<Letter>(i));
    out << ") / (" << rel.to_string() << ")";
    return out.str();
}

Rational evaluate(const Series &q, const Rational &t)
{
    // Horner from the top coefficient.
    Rational acc = 0;
    for (std::size_t k = q.order() + 1; k-- > 0;)
        acc = acc * t + q[k];
    return acc;
}

} // namespace

HilbertComparison compare_hilbert(const AlgebraElement &rel, LeadingPair lp, int N,
                                  SliceCache *cache, const ReportOptions &opts)
{
    const Alphabet &alphabet = *rel.alphabet();
    const int relation_degree = check_quadratic_relation(rel);
    const HilbertTable series = hilbert_from_series(alphabet, relation_degree, N);

    HilbertComparison cmp;
    for (int m = 0; m <= N; ++m) {
        HilbertRow row;
        row.degree = m;
        row.entries.push_back({Provenance::series, series.dims[m], {}});
        row.entries.push_back(
            {Provenance::avoiding_words, count_avoiding_words(alphabet, lp, m), {}});

        HilbertEntry oracle{Provenance::oracle, std::nullopt, {}};
        if (m > opts.oracle_max_degree) {
            oracle.note = "skipped above oracle degree " + std::to_string(opts.oracle_max_degree);
        } else {
            try {
                const Integer words = count_words(alphabet, m);
                // The rank does not depend on how the columns are ordered, so
                // one slice (leading-pair words first) serves both checks.
                const auto slice = fetch_slice(rel, lp, m, cache, opts.basis.slice);
                oracle.value = words - Integer(static_cast<unsigned long>(slice->echelon.rank()));
                row.complement = slice_has_complement(*slice);
            } catch (const GuardError &e) {
                oracle.note = e.what();
            }
        }
        row.entries.push_back(std::move(oracle));

        for (const auto &e : row.entries)
            if (e.value && *e.value != *row.entries.front().value)
                row.agree = false;
        if (row.complement && !*row.complement)
            row.agree = false;
        cmp.agreement = cmp.agreement && row.agree;
        cmp.rows.push_back(std::move(row));
    }
    return cmp;
}

LoopHomologyReport loop_homology_report(const QuadraticPresentation &p, int N, SliceCache *cache,
                                        const ReportOptions &opts)
{
    if (N < 0)
        throw UsageError("loop_homology_report: negative degree");
    const Alphabet &alphabet = *p.alphabet;
    LoopHomologyReport rep;
    rep.algebra = algebra_text(alphabet, p.graded);
    rep.generator_loop_degrees.assign(alphabet.degrees().begin(), alphabet.degrees().end());
    rep.relation = p.graded.to_string();
    rep.ungraded_relation = p.ungraded.to_string();
    rep.leading = p.leading;
    rep.relation_degree = p.relation_degree;
    rep.hilbert = compare_hilbert(p.graded, p.leading, N, cache, opts);

    const Series q = denominator_of(alphabet, p.relation_degree, N);
    rep.lie_dims = lie_dims_from_denominator(q, static_cast<std::size_t>(N));
    rep.witt_reconstruction = witt_product(rep.lie_dims, static_cast<std::size_t>(N)) ==
                              series_inverse(q);
    return rep;
}

PiDecomposition sphere_decomposition(const QuadraticPresentation &p, int S, SliceCache *cache,
                                     const StandardBasisOptions &opts)
{
    if (p.alphabet->size() < 3)
        throw UsageError("sphere_decomposition: needs at least three generators");
    if (S < 1)
        throw UsageError("sphere_decomposition: sphere dimension bound must be positive");
    const int N = S - 1;
    PiDecomposition dec;
    dec.max_degree = S;
    if (N == 0)
        return dec;

    const Series q = denominator_of(*p.alphabet, p.relation_degree, N);
    const std::vector<Integer> dims = lie_dims_from_denominator(q, static_cast<std::size_t>(N));
    dec.basis = standard_basis(p, N, cache, opts);

    std::vector<std::size_t> counts(static_cast<std::size_t>(N) + 1, 0);
    for (const auto &e : dec.basis) {
        ++counts[static_cast<std::size_t>(e.loop_degree)];
        dec.witnesses[e.sphere_dim].push_back(e.word);
    }
    for (int m = 1; m <= N; ++m) {
        const Integer &expected = dims[static_cast<std::size_t>(m) - 1];
        const auto found = counts[static_cast<std::size_t>(m)];
        if (expected != Integer(static_cast<unsigned long>(found)))
            throw InconsistencyError("loop degree " + std::to_string(m) + ": Moebius count " +
                                         expected.get_str() + " but " + std::to_string(found) +
                                         " standard Lyndon words",
                                     m);
        if (expected != 0)
            dec.multiplicities[m + 1] = expected;
    }
    return dec;
}

std::vector<Integer> rational_ranks(const PiDecomposition &dec, int S)
{
    std::vector<Integer> ranks(static_cast<std::size_t>(std::max(S, 0)) + 1, 0);
    for (const auto &[j, mult] : dec.multiplicities) {
        if (j <= S)
            ranks[static_cast<std::size_t>(j)] += mult;
        // pi_{2j-1} S^j (x) Q = Q for j even.
        if (j % 2 == 0 && 2 * j - 1 <= S)
            ranks[static_cast<std::size_t>(2 * j - 1)] += mult;
    }
    return ranks;
}

MooreReport moore_inapplicable(std::size_t r)
{
    MooreReport rep;
    rep.applicable = false;
    rep.explanation =
        "total rank " + std::to_string(r + 2) +
        " <= 4: the manifold is rationally elliptic (a sphere, a James stage, a connected sum "
        "of two of them or a product of spheres), so its rational homotopy is finite "
        "dimensional and there is no growth to report";
    return rep;
}

MooreReport moore_report(const QuadraticPresentation &p, const PiDecomposition &dec)
{
    const Alphabet &alphabet = *p.alphabet;
    if (alphabet.size() < 3)
        return moore_inapplicable(alphabet.size());

    MooreReport rep;
    rep.applicable = true;
    const int N = dec.max_degree - 1;
    int step = 0;
    int lowest = alphabet.degrees().front();
    for (int deg : alphabet.degrees()) {
        step = std::gcd(step, deg);
        lowest = std::min(lowest, deg);
    }
    rep.window_start = lowest;
    rep.window_end = N;
    rep.window_step = step;

    rep.populated = true;
    for (int m = lowest; m <= N; m += step) {
        const auto it = dec.multiplicities.find(m + 1);
        if (it == dec.multiplicities.end() || it->second <= 0) {
            rep.populated = false;
            rep.first_gap = m;
            break;
        }
    }
    rep.max_sphere_dim = dec.multiplicities.empty() ? 0 : dec.multiplicities.rbegin()->first;

    // Smallest positive root of q: q(0) = 1 and q(1) = 2 - r < 0. Scan a grid
    // for the first sign change, then bisect.
    const int order = std::max(N, p.relation_degree);
    const Series q = loop_denominator(alphabet.degrees(), p.relation_degree,
                                      static_cast<std::size_t>(order));
    constexpr int grid = 1024;
    Rational lo = 0, hi = 1;
    for (int k = 1; k <= grid; ++k) {
        Rational t(k, grid);
        t.canonicalize();
        if (evaluate(q, t) <= 0) {
            hi = t;
            lo = Rational(k - 1, grid);
            lo.canonicalize();
            break;
        }
    }
    for (int it = 0; it < 64; ++it) {
        Rational mid = (lo + hi) / 2;
        if (evaluate(q, mid) > 0)
            lo = mid;
        else
            hi = mid;
    }
    rep.root_low = lo;
    rep.root_high = hi;

    // The reference growth rate 1/rho lies in [1/hi, 1/lo]; a ratio is within
    // 5% when it is within 5% of every point of that interval.
    const Rational g_low = 1 / hi, g_high = 1 / lo;
    const Series a = series_inverse(q.truncated(static_cast<std::size_t>(std::max(N, 0))));
    for (int m = lowest + step; m <= N; m += step) {
        const Rational &prev = a[static_cast<std::size_t>(m - step)];
        if (prev == 0)
            continue;
        GrowthRatio gr;
        gr.degree = m;
        gr.ratio = a[static_cast<std::size_t>(m)] / prev;
        gr.within_5_percent =
            gr.ratio >= g_high * Rational(19, 20) && gr.ratio <= g_low * Rational(21, 20);
        rep.ratios.push_back(std::move(gr));
    }

    std::ostringstream c;
    if (rep.populated) {
        c << "Standard Lyndon words, hence Whitehead products of spheres, occur in every loop "
             "degree from "
          << lowest << " to " << N
          << " checked here. Granting that this persists in all degrees, as the hyperbolic "
             "structure of the Lie algebra forces, M has sphere summands of unbounded "
             "dimension, and for all but finitely many primes p the p-primary homotopy of M "
             "has no exponent, as Moore's conjecture predicts.";
    } else {
        c << "Loop degree " << *rep.first_gap
          << " carries no standard Lyndon word, so the growth argument does not apply "
             "as stated.";
    }
    rep.conclusion = c.str();
    return rep;
}

} // namespace loopkit
