#include <doctest.h>

#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "loopkit/errors.hpp"
#include "loopkit/manifold.hpp"
#include "loopkit/normal_forms.hpp"

using namespace loopkit;

namespace {

bool has_kind(const ValidationResult &r, ViolationKind k)
{
    return std::any_of(r.violations.begin(), r.violations.end(),
                       [&](const Violation &v) { return v.kind == k; });
}

ManifoldDescriptor simple(int n, int d, std::vector<int> degrees, RationalMatrix pairing)
{
    return {"t", n, d, std::move(degrees), std::move(pairing), std::nullopt};
}

} // namespace

TEST_CASE("validation of the worked examples")
{
    const auto x3 = validate(corpus::x3());
    REQUIRE(x3.ok());
    CHECK(x3.manifold->r() == 3);
    CHECK(x3.manifold->route() == Route::main);
    CHECK(hyperbolicity(*x3.manifold) == Hyperbolicity::hyperbolic);

    const auto two = validate(simple(3, 7, {3, 4}, {{0, 1}, {1, 0}}));
    REQUIRE(two.ok());
    CHECK(two.manifold->route() == Route::low_rank);
    CHECK(hyperbolicity(*two.manifold) == Hyperbolicity::elliptic);
    CHECK(validate(corpus::y2()).ok());
    CHECK(validate(corpus::h4()).ok());
}

TEST_CASE("violations are reported together")
{
    const auto thin = validate(simple(2, 5, {2, 3}, {{0, 1}, {1, 0}}));
    CHECK_FALSE(thin.ok());
    CHECK(has_kind(thin, ViolationKind::hypothesis));

    // Wrong support, wrong symmetry and a degree out of range at once.
    const auto many = validate(simple(3, 7, {3, 4, 2}, {{1, 1, 0}, {-1, 0, 0}, {0, 0, 0}}));
    CHECK(has_kind(many, ViolationKind::pairing_support));
    CHECK(has_kind(many, ViolationKind::graded_symmetry));
    CHECK(has_kind(many, ViolationKind::degree_range));
    CHECK(many.violations.size() >= 3);

    CHECK(has_kind(validate(simple(1, 2, {1}, {{1}})), ViolationKind::connectivity));
    CHECK(has_kind(validate(simple(2, 4, {2, 2}, {{1, 0}})), ViolationKind::pairing_shape));
    CHECK(has_kind(validate(simple(2, 4, {2, 2}, {{1, 1}, {1, 1}})), ViolationKind::duality));
    CHECK(has_kind(validate(simple(3, 6, {3}, {{0}})), ViolationKind::realizability));

    auto primes = corpus::x3();
    primes.torsion_primes = std::vector<long>{2, 9};
    CHECK(has_kind(validate(primes), ViolationKind::torsion_prime));
}

TEST_CASE("normalizing X3")
{
    const auto v = validate(corpus::x3());
    const auto nm = normalize_basis(*v.manifold);
    const RationalMatrix expected{{1, 1, 0}, {1, 2, 0}, {0, 0, 1}};
    CHECK(nm.manifold.descriptor().pairing == expected);
    CHECK(nm.leading == LeadingPair{0, 1});
    CHECK(nm.letter_order == std::vector<Letter>{2, 1, 0});
    CHECK(congruence(corpus::x3().pairing, nm.change) == expected);

    const auto p = build_relation(nm);
    CHECK(p.graded.to_string() == "u1 u1 + u1 u2 + u2 u1 + 2 u2 u2 + u3 u3");
    CHECK(p.ungraded.to_string() == "u1 u2 - u2 u1");
    CHECK(p.relation_degree == 2);
}

TEST_CASE("normalizing Y2 changes nothing")
{
    const auto v = validate(corpus::y2());
    const auto nm = normalize_basis(*v.manifold);
    CHECK(nm.manifold.descriptor().pairing == corpus::y2().pairing);
    CHECK(nm.leading == LeadingPair{3, 1});
    const auto p = build_relation(nm);
    AlgebraElement expected(p.alphabet);
    expected.add(Word{2, 0}, 1);
    expected.add(Word{0, 2}, -1);
    expected.add(Word{3, 1}, 1);
    expected.add(Word{1, 3}, -1);
    CHECK(p.graded == expected);
    CHECK(p.relation_degree == 5);
}

TEST_CASE("hyperbolic plane keeps its pairing")
{
    const auto v = validate(simple(3, 7, {3, 4}, {{0, 1}, {1, 0}}));
    const auto nm = normalize_basis(*v.manifold);
    CHECK(nm.manifold.descriptor().pairing == RationalMatrix{{0, 1}, {1, 0}});
    const bool either = nm.leading == LeadingPair{0, 1} || nm.leading == LeadingPair{1, 0};
    CHECK(either);
}

TEST_CASE("seed order overrides the base order")
{
    const auto v = validate(corpus::x3());
    const auto nm = normalize_basis(*v.manifold, std::vector<Letter>{0, 1, 2});
    const auto p = build_relation(nm);
    CHECK(p.graded.coefficient(p.leading.word()) == 1);
    CHECK_THROWS_AS(normalize_basis(*v.manifold, std::vector<Letter>{0, 0, 1}), UsageError);
}

TEST_CASE("low-rank classifier")
{
    CHECK(classify_low_rank(simple(4, 4, {}, {})).to_string() == "S^4");
    CHECK(classify_low_rank(simple(2, 4, {}, {})) == LowRankType{LowRankKind::sphere, 4, 0});
    CHECK(classify_low_rank(simple(2, 4, {2}, {{1}})) == LowRankType{LowRankKind::james, 2, 0});
    CHECK(classify_low_rank(simple(2, 4, {2}, {{1}})).to_string() == "J_2 S^2");
    CHECK(classify_low_rank(simple(3, 7, {3, 4}, {{0, 1}, {1, 0}})) ==
          LowRankType{LowRankKind::product, 3, 4});
    CHECK(classify_low_rank(simple(3, 7, {3, 4}, {{0, 1}, {1, 0}})).to_string() == "S^3 x S^4");
    // Anisotropic <1,1>: two copies of CP^2-like pieces.
    CHECK(classify_low_rank(simple(2, 4, {2, 2}, {{1, 0}, {0, 1}})) ==
          LowRankType{LowRankKind::connected_sum_james, 2, 0});
    CHECK(classify_low_rank(simple(2, 4, {2, 2}, {{1, 0}, {0, 1}})).to_string() == "#^2 J_2(2)");
    // <1,-1> is isotropic: S^2 x S^2 rationally.
    CHECK(classify_low_rank(simple(2, 4, {2, 2}, {{1, 0}, {0, -1}})) ==
          LowRankType{LowRankKind::product, 2, 2});
    CHECK(classify_low_rank(simple(3, 6, {3, 3}, {{0, 1}, {-1, 0}})) ==
          LowRankType{LowRankKind::product, 3, 3});
    CHECK_THROWS_AS(classify_low_rank(simple(3, 6, {3}, {{1}})), RealizabilityError);
    CHECK_THROWS_AS(classify_low_rank(simple(2, 5, {2, 3}, {{0, 1}, {1, 0}})), ValidationError);
}

TEST_CASE("property: block congruences leave the Hilbert data alone")
{
    std::mt19937_64 rng(29);
    for (const auto &base : {corpus::x3(), corpus::y2(), corpus::h4()}) {
        const auto p0 = make_presentation(base);
        for (int trial = 0; trial < 5; ++trial) {
            auto desc = base;
            const auto a = corpus::random_block_congruence(rng, base.generator_degrees);
            desc.pairing = congruence(base.pairing, a);
            const auto p = make_presentation(desc);
            CHECK(p.relation_degree == p0.relation_degree);
            for (int m = 0; m <= 6; ++m) {
                CHECK(count_avoiding_words(*p.alphabet, p.leading, m) ==
                      count_avoiding_words(*p0.alphabet, p0.leading, m));
                CHECK(ideal_slice_rank(p.graded, m) == ideal_slice_rank(p0.graded, m));
            }
        }
    }
}
