#include "loopkit/manifold.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "loopkit/errors.hpp"
#include "loopkit/sparse_echelon.hpp"

namespace loopkit {

std::string to_string(ViolationKind kind)
{
    switch (kind) {
    case ViolationKind::connectivity:
        return "connectivity";
    case ViolationKind::hypothesis:
        return "hypothesis";
    case ViolationKind::degree_range:
        return "degree-range";
    case ViolationKind::pairing_shape:
        return "pairing-shape";
    case ViolationKind::pairing_support:
        return "pairing-support";
    case ViolationKind::graded_symmetry:
        return "graded-symmetry";
    case ViolationKind::duality:
        return "duality";
    case ViolationKind::realizability:
        return "realizability";
    case ViolationKind::torsion_prime:
        return "torsion-prime";
    }
    return "unknown";
}

namespace {

std::string one_based(std::size_t i) { return std::to_string(i + 1); }

bool is_prime(long p)
{
    if (p < 2)
        return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0)
            return false;
    return true;
}

bool is_odd(long k) { return k % 2 != 0; }

std::size_t dense_rank(const RationalMatrix &m)
{
    std::vector<SparseRow> rows;
    for (const auto &row : m) {
        std::vector<std::pair<Column, Rational>> entries;
        for (std::size_t j = 0; j < row.size(); ++j)
            entries.emplace_back(static_cast<Column>(j), row[j]);
        rows.push_back(SparseRow::from_terms(std::move(entries)));
    }
    return build_echelon(std::move(rows), Execution::serial).rank();
}

RationalMatrix identity(std::size_t r)
{
    RationalMatrix a(r, std::vector<Rational>(r));
    for (std::size_t i = 0; i < r; ++i)
        a[i][i] = 1;
    return a;
}

} // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error([&] {
          std::string msg = "invalid manifold descriptor";
          for (const auto &v : violations)
              msg += "; " + to_string(v.kind) + ": " + v.message;
          return msg;
      }()),
      violations_(std::move(violations))
{
}

ValidationResult validate(const ManifoldDescriptor &desc)
{
    std::vector<Violation> out;
    const int n = desc.n, d = desc.d;
    const std::size_t r = desc.rank();
    const auto &deg = desc.generator_degrees;
    const auto &c = desc.pairing;

    if (n < 2)
        out.push_back({ViolationKind::connectivity, "n = " + std::to_string(n) + " < 2", {}});
    if (d > 3 * n - 2)
        out.push_back({ViolationKind::hypothesis,
                       "d = " + std::to_string(d) + " exceeds 3n - 2 = " + std::to_string(3 * n - 2),
                       {}});
    if (d < n)
        out.push_back({ViolationKind::hypothesis,
                       "d = " + std::to_string(d) + " is below n = " + std::to_string(n), {}});

    for (std::size_t i = 0; i < r; ++i)
        if (deg[i] < n || deg[i] > d - n)
            out.push_back({ViolationKind::degree_range,
                           "|x_" + one_based(i) + "| = " + std::to_string(deg[i]) +
                               " outside [n, d - n] = [" + std::to_string(n) + ", " +
                               std::to_string(d - n) + "]",
                           {i}});

    bool shape_ok = c.size() == r;
    for (const auto &row : c)
        shape_ok = shape_ok && row.size() == r;
    if (!shape_ok)
        out.push_back({ViolationKind::pairing_shape,
                       "pairing must be " + std::to_string(r) + " x " + std::to_string(r), {}});

    if (shape_ok) {
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) {
                if (c[i][j] != 0 && deg[i] + deg[j] != d)
                    out.push_back({ViolationKind::pairing_support,
                                   "c_" + one_based(i) + one_based(j) +
                                       " is nonzero but |x_i| + |x_j| = " +
                                       std::to_string(deg[i] + deg[j]) + " != d",
                                   {i, j}});
                if (j < i)
                    continue;
                const long sign_exp = static_cast<long>(deg[i]) * deg[j];
                const Rational expected = is_odd(sign_exp) ? Rational(-c[j][i]) : c[j][i];
                if (c[i][j] != expected)
                    out.push_back({ViolationKind::graded_symmetry,
                                   "c_" + one_based(i) + one_based(j) + " = " + to_string(c[i][j]) +
                                       " but (-1)^{|x_i||x_j|} c_" + one_based(j) + one_based(i) +
                                       " = " + to_string(expected),
                                   {i, j}});
            }
        }

        // Poincare duality: each block pairing degree k against degree d - k
        // must be square and invertible.
        std::map<int, std::vector<std::size_t>> by_degree;
        for (std::size_t i = 0; i < r; ++i)
            by_degree[deg[i]].push_back(i);
        for (const auto &[k, rows] : by_degree) {
            if (2 * k > d)
                continue;
            const auto it = by_degree.find(d - k);
            const std::vector<std::size_t> cols =
                it == by_degree.end() ? std::vector<std::size_t>{} : it->second;
            std::vector<std::size_t> involved = rows;
            if (2 * k != d)
                involved.insert(involved.end(), cols.begin(), cols.end());
            if (rows.size() != cols.size()) {
                out.push_back({ViolationKind::duality,
                               "degree " + std::to_string(k) + " has " +
                                   std::to_string(rows.size()) + " generators but degree " +
                                   std::to_string(d - k) + " has " + std::to_string(cols.size()),
                               involved});
                continue;
            }
            RationalMatrix block(rows.size(), std::vector<Rational>(cols.size()));
            for (std::size_t a = 0; a < rows.size(); ++a)
                for (std::size_t b = 0; b < cols.size(); ++b)
                    block[a][b] = c[rows[a]][cols[b]];
            if (dense_rank(block) != rows.size())
                out.push_back({ViolationKind::duality,
                               "pairing between degrees " + std::to_string(k) + " and " +
                                   std::to_string(d - k) + " is degenerate",
                               involved});
        }
        // Degrees above d/2 whose complement has no generators at all.
        for (const auto &[k, rows] : by_degree)
            if (2 * k > d && !by_degree.contains(d - k))
                out.push_back({ViolationKind::duality,
                               "degree " + std::to_string(k) + " generators have no dual in degree " +
                                   std::to_string(d - k),
                               rows});
    }

    if (r == 1 && (d % 2 != 0 || (d / 2) % 2 != 0))
        out.push_back({ViolationKind::realizability,
                       "a single indecomposable needs d = 2s with s even (graded commutativity); "
                       "got d = " +
                           std::to_string(d),
                       {0}});

    if (desc.torsion_primes)
        for (long p : *desc.torsion_primes)
            if (!is_prime(p))
                out.push_back(
                    {ViolationKind::torsion_prime, std::to_string(p) + " is not a prime", {}});

    ValidationResult result;
    result.violations = std::move(out);
    if (result.violations.empty())
        result.manifold = ValidatedManifold(desc);
    return result;
}

RationalMatrix congruence(const RationalMatrix &c, const RationalMatrix &a)
{
    const std::size_t r = c.size();
    if (a.size() != r)
        throw UsageError("congruence: matrix sizes differ");
    RationalMatrix ca(r, std::vector<Rational>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k)
            if (c[i][k] != 0)
                for (std::size_t j = 0; j < r; ++j)
                    ca[i][j] += c[i][k] * a[k][j];
    RationalMatrix out(r, std::vector<Rational>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k)
            if (a[k][i] != 0)
                for (std::size_t j = 0; j < r; ++j)
                    out[i][j] += a[k][i] * ca[k][j];
    return out;
}

NormalizedManifold normalize_basis(const ValidatedManifold &v,
                                   std::optional<std::vector<Letter>> seed_order)
{
    const ManifoldDescriptor &desc = v.descriptor();
    const std::size_t r = v.r();
    if (r < 2)
        throw DomainError("normalize_basis: needs at least two indecomposables, got " +
                          std::to_string(r));

    std::vector<Letter> order;
    if (seed_order) {
        order = *seed_order;
    } else {
        order.resize(r);
        std::iota(order.begin(), order.end(), Letter{0});
    }
    std::vector<int> degrees(desc.generator_degrees);
    for (int &x : degrees)
        x -= 1;
    const Alphabet base(degrees, order); // validates the permutation

    const RationalMatrix &c = desc.pairing;
    RationalMatrix a = identity(r);

    // Off-diagonal words (i, j) of the relation: coefficient proportional to c_ji.
    std::optional<LeadingPair> best;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            if (i == j || c[j][i] == 0)
                continue;
            const LeadingPair cand{static_cast<Letter>(i), static_cast<Letter>(j)};
            if (!best || base.lex_less(best->word(), cand.word()))
                best = cand;
        }
    }

    LeadingPair lp;
    if (best) {
        lp = *best;
        a[lp.beta][lp.beta] = 1 / c[lp.alpha][lp.beta];
    } else {
        // Diagonal form; every c_ii is nonzero by duality.
        lp = {order[0], order[1]};
        const Rational scale = 1 / c[lp.alpha][lp.alpha];
        a[lp.alpha][lp.beta] = scale;
        a[lp.beta][lp.beta] = scale;
        std::vector<Letter> reordered;
        for (Letter x : order)
            if (x != lp.alpha && x != lp.beta)
                reordered.push_back(x);
        reordered.push_back(lp.beta);
        reordered.push_back(lp.alpha);
        order = std::move(reordered);
    }

    ManifoldDescriptor normalized = desc;
    normalized.pairing = congruence(c, a);
    if (normalized.pairing[lp.alpha][lp.beta] != 1)
        throw InconsistencyError("normalize_basis: leading pairing entry is not 1");
    ValidationResult check = validate(normalized);
    if (!check.ok())
        throw InconsistencyError("normalize_basis: normalized descriptor fails validation");
    return {*std::move(check.manifold), std::move(a), lp, std::move(order)};
}

QuadraticPresentation build_relation(const NormalizedManifold &nm)
{
    const ManifoldDescriptor &desc = nm.manifold.descriptor();
    const std::size_t r = desc.rank();
    const RationalMatrix &c = desc.pairing;
    std::vector<int> loop_degrees(desc.generator_degrees);
    for (int &x : loop_degrees)
        x -= 1;
    auto alphabet = std::make_shared<const Alphabet>(loop_degrees, nm.letter_order);
    const LeadingPair lp = nm.leading;

    AlgebraElement graded(alphabet);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            if (c[j][i] == 0)
                continue;
            const Rational coef = is_odd(loop_degrees[i] + 1) ? Rational(-c[j][i]) : c[j][i];
            graded.add(Word{static_cast<Letter>(i), static_cast<Letter>(j)}, coef);
        }
    const Rational lead = graded.coefficient(lp.word());
    if (lead == 0)
        throw InconsistencyError("build_relation: graded relation vanishes on the leading pair");
    graded *= 1 / lead;

    // l_ij for i < j in index order; [u_i, u_j] = u_i u_j - u_j u_i.
    AlgebraElement ungraded(alphabet);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            const Rational l = graded.coefficient(Word{static_cast<Letter>(i), static_cast<Letter>(j)});
            if (l == 0)
                continue;
            ungraded.add(Word{static_cast<Letter>(i), static_cast<Letter>(j)}, l);
            ungraded.add(Word{static_cast<Letter>(j), static_cast<Letter>(i)}, -l);
        }
    const Rational ulead = ungraded.coefficient(lp.word());
    if (ulead == 0)
        throw InconsistencyError("build_relation: ungraded relation vanishes on the leading pair");
    ungraded *= 1 / ulead;

    QuadraticPresentation p{alphabet, std::move(graded), std::move(ungraded), lp, desc.d - 2,
                            nm.change, c};
    if (p.graded.homogeneous_degree() != desc.d - 2 || p.ungraded.homogeneous_degree() != desc.d - 2)
        throw InconsistencyError("build_relation: relation is not homogeneous of degree d - 2");
    return p;
}

QuadraticPresentation make_presentation(const ManifoldDescriptor &desc,
                                        std::optional<std::vector<Letter>> seed_order)
{
    ValidationResult v = validate(desc);
    if (!v.ok())
        throw ValidationError(std::move(v.violations));
    return build_relation(normalize_basis(*v.manifold, std::move(seed_order)));
}

std::string LowRankType::to_string() const
{
    std::ostringstream os;
    switch (kind) {
    case LowRankKind::sphere:
        os << "S^" << first;
        break;
    case LowRankKind::james:
        os << "J_2 S^" << first;
        break;
    case LowRankKind::connected_sum_james:
        os << "#^2 J_2(" << first << ")";
        break;
    case LowRankKind::product:
        os << "S^" << first << " x S^" << second;
        break;
    }
    return os.str();
}

LowRankType classify_low_rank(const ValidatedManifold &v)
{
    const ManifoldDescriptor &desc = v.descriptor();
    const int d = desc.d;
    switch (v.r()) {
    case 0:
        return {LowRankKind::sphere, d, 0};
    case 1:
        return {LowRankKind::james, d / 2, 0};
    case 2: {
        const int k1 = desc.generator_degrees[0], k2 = desc.generator_degrees[1];
        if (k1 != k2)
            return {LowRankKind::product, std::min(k1, k2), std::max(k1, k2)};
        const int s = k1;
        if (s % 2 != 0)
            return {LowRankKind::product, s, s}; // skew form: always hyperbolic
        // Symmetric form over Q: isotropic (some x with x^2 = 0) iff -det is a
        // square; then H^* is that of S^s x S^s.
        const auto &c = desc.pairing;
        const Rational minus_det = c[0][1] * c[1][0] - c[0][0] * c[1][1];
        const Integer prod = minus_det.get_num() * minus_det.get_den();
        if (prod > 0 && mpz_perfect_square_p(prod.get_mpz_t()) != 0)
            return {LowRankKind::product, s, s};
        return {LowRankKind::connected_sum_james, s, 0};
    }
    default:
        throw DomainError("classify_low_rank: total rank " + std::to_string(v.total_rank()) +
                          " exceeds 4");
    }
}

LowRankType classify_low_rank(const ManifoldDescriptor &desc)
{
    if (desc.rank() == 1 && (desc.d % 2 != 0 || (desc.d / 2) % 2 != 0))
        throw RealizabilityError("total rank 3 forces H^* = Q[x]/(x^3) with d = 2s and s even; "
                                 "d = " +
                                 std::to_string(desc.d) + " is not realizable");
    ValidationResult v = validate(desc);
    if (!v.ok())
        throw ValidationError(std::move(v.violations));
    return classify_low_rank(*v.manifold);
}

std::string to_string(Hyperbolicity h)
{
    return h == Hyperbolicity::hyperbolic ? "hyperbolic" : "elliptic";
}

Hyperbolicity hyperbolicity(const ValidatedManifold &v)
{
    return v.r() > 2 ? Hyperbolicity::hyperbolic : Hyperbolicity::elliptic;
}

} // namespace loopkit
