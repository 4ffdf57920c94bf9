#include "doctest.h"

#include "polysparse/closure.hpp"
#include "test_support.hpp"

using namespace polysparse;
using namespace polysparse::closure;
using namespace testsupport;
using families::make_qn;
using families::make_simplex_family;
using families::make_symmetric_closure;
using families::make_symmetric_family;

namespace {

// P^k from vertex shadows: hull of the projected vertices on each K, lifted back.
HPolytope closure_by_shadows(const HPolytope& p, std::size_t k)
{
    const VPolytope v = vertices(p);
    HPolytope acc(p.dim);
    for (const auto& subset : k_subsets(p.dim, k)) {
        VPolytope shadow(k);
        for (const auto& x : v.vertices) {
            QVector y;
            for (auto j : subset)
                y.push_back(x[j]);
            shadow.vertices.push_back(std::move(y));
        }
        shadow.sort_unique();
        for (const auto& row : facets(shadow).ineqs) {
            LinIneq lifted{QVector(p.dim), row.b};
            for (std::size_t j = 0; j < k; ++j)
                lifted.a[subset[j]] = row.a[j];
            acc.add(std::move(lifted));
        }
    }
    return acc;
}

// P-bar membership oracle: x in P-bar iff |x| (coordinatewise) is in P, for
// down-monotone P.
bool in_symmetrization_of_down_monotone(const HPolytope& p, const QVector& x)
{
    QVector y = x;
    for (auto& c : y)
        c = abs(c);
    return p.contains(y);
}

} // namespace

TEST_CASE("ClosureSpec validation")
{
    CHECK_NOTHROW(ClosureSpec(1, 3));
    CHECK_NOTHROW(ClosureSpec(3, 3));
    CHECK_THROWS_AS(ClosureSpec(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(ClosureSpec(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(sparse_closure(HPolytope::box(2, 0, 1), 0), std::invalid_argument);
    CHECK_THROWS_AS(sparse_closure(hpoly(1, {{qv({-1}), 0}}), 1), std::domain_error);
}

TEST_CASE("sparse_closure examples")
{
    CHECK(sparse_closure(make_simplex_family(1, 2), 1) == canonicalize(HPolytope::box(2, 0, 1)));
    for (std::size_t n : {2, 4, 6})
        for (std::size_t k = 1; k <= n / 2; ++k)
            CHECK(sparse_closure(make_simplex_family(n / 2, n), k) == canonicalize(HPolytope::box(n, 0, 1)));

    HPolytope pairs = HPolytope::box(3, -1, 1);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    QVector a(3);
                    a[i] = si;
                    a[j] = sj;
                    pairs.add(LinIneq{a, 1});
                }
    CHECK(equal(sparse_closure(make_symmetric_family(1, 3), 2), pairs));

    const HPolytope p = make_simplex_family(2, 3);
    CHECK(sparse_closure(p, 3) == canonicalize(p));
    CHECK(sparse_closure(HPolytope::empty(3), 2).is_empty_marker());
}

TEST_CASE("sparse_closure agrees with the vertex-shadow oracle and its invariants")
{
    std::vector<HPolytope> corpus = {make_simplex_family(1, 3), make_simplex_family(2, 4), make_qn(4),
                                     make_symmetric_family(2, 3)};
    for (std::uint64_t i = 0; i < 6; ++i)
        corpus.push_back(random_polytope(3 + i % 2, 4, 101, i));

    for (const auto& p : corpus) {
        HPolytope previous = canonicalize(p);
        for (std::size_t k = p.dim; k >= 1; --k) {
            const HPolytope pk = sparse_closure(p, k);
            CHECK(equal(pk, closure_by_shadows(p, k)));
            CHECK(includes(pk, p));
            for (const auto& row : pk.ineqs)
                CHECK(row.sparsity() <= k);
            // Monotone in k and idempotent.
            CHECK(includes(pk, previous));
            CHECK(sparse_closure(pk, k) == pk);
            previous = pk;
        }
    }
}

TEST_CASE("budgeted_closure")
{
    const HPolytope p = make_simplex_family(2, 4);
    const auto none = CutSet::certified(p, {});
    CHECK(budgeted_closure(p, 2, none) == sparse_closure(p, 2));

    const auto dense = CutSet::certified(p, {LinIneq{QVector(4, Rational(1)), 2}}, "e.x <= n/2");
    for (std::size_t k = 1; k <= 4; ++k)
        CHECK(equal(budgeted_closure(p, k, dense), p));

    const HPolytope sym = make_symmetric_family(2, 4);
    const auto cut = CutSet::certified(sym, {LinIneq{QVector(4, Rational(1)), 2}});
    const HPolytope pkd = budgeted_closure(sym, 2, cut);
    const HPolytope pk = sparse_closure(sym, 2);
    CHECK(includes(pk, pkd));
    CHECK_FALSE(includes(pkd, pk));
    CHECK(includes(pkd, sym));
    CHECK(pkd.contains(qv({1, 1, -1, -1})));
    CHECK_FALSE(pkd.contains(qv({1, 1, 1, 0})));

    try {
        (void)CutSet::certified(p, {LinIneq{QVector(4, Rational(1)), 2}, LinIneq{qv({1, 1, 0, 0}), q(3, 2)}});
        FAIL("invalid cut accepted");
    } catch (const InvalidCut& e) {
        CHECK(e.index == 1);
        CHECK(e.support_value == 2);
        CHECK(std::string(e.what()).find("cut #1") != std::string::npos);
    }
    CHECK_THROWS_AS(budgeted_closure(p, 2, CutSet::trusted(3, {})), std::invalid_argument);
}

TEST_CASE("symmetrize examples")
{
    for (std::size_t n = 1; n <= 4; ++n) {
        CHECK(symmetrize(make_simplex_family(1, n)) == make_symmetric_family(1, n));
        CHECK(symmetrize(HPolytope::box(n, 0, 1)) == canonicalize(HPolytope::box(n, -1, 1)));
        for (std::size_t t = 1; t <= n; ++t) {
            const HPolytope p = make_simplex_family(t, n);
            CHECK(symmetrize(p) == make_symmetric_family(t, n));
            CHECK(symmetrize(p, SymmetrizeMethod::generic) == symmetrize(p, SymmetrizeMethod::fast));
        }
    }
    CHECK_THROWS_AS(symmetrize(HPolytope::box(2, -1, 1)), std::domain_error);

    // A description with a negative coefficient: fast is refused, generic used.
    const HPolytope skew = hpoly(2, {{qv({-1, 0}), 0}, {qv({0, -1}), 0}, {qv({1, 0}), 1}, {qv({-1, 1}), 0}});
    CHECK_FALSE(has_nonnegative_form(canonicalize(skew)));
    CHECK(symmetrize(skew, SymmetrizeMethod::fast) == symmetrize(skew, SymmetrizeMethod::generic));
    const VPolytope sv = vertices(symmetrize(skew));
    CHECK(sv.vertices.size() == 4);
}

TEST_CASE("is_down_monotone")
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t t = 1; t <= n; ++t)
            CHECK(is_down_monotone(make_simplex_family(t, n)));
    CHECK(is_down_monotone(make_qn(4)));
    CHECK_FALSE(is_down_monotone(facets(VPolytope(2, {qv({0, 1}), qv({1, 0})}))));
    CHECK_THROWS_AS(is_down_monotone(HPolytope::box(2, -1, 1)), std::domain_error);
}

TEST_CASE("down-monotone symmetrization identities on a grid")
{
    std::vector<HPolytope> corpus = {make_simplex_family(1, 3), make_simplex_family(2, 3), make_qn(4)};
    for (std::uint64_t i = 0; i < 4; ++i)
        corpus.push_back(random_down_monotone(3, 2, 111, i));

    for (const auto& p : corpus) {
        REQUIRE(is_down_monotone(p));
        const HPolytope bar = symmetrize(p);
        for (std::size_t k = 1; k < p.dim; ++k) {
            const HPolytope pk = sparse_closure(p, k);
            CHECK(equal(sparse_closure(bar, k), symmetrize(pk)));
            CHECK(equal(intersect(sparse_closure(bar, k), HPolytope::box(p.dim, 0, 1)), pk));
        }
    }

    // x in P-bar iff |x| in P, on the 9^3 grid in [-1,1]^3 with step 1/4.
    const HPolytope p = make_simplex_family(2, 3);
    const HPolytope bar = symmetrize(p);
    for (int a = -4; a <= 4; ++a)
        for (int b = -4; b <= 4; ++b)
            for (int c = -4; c <= 4; ++c) {
                const QVector x = qv({q(a, 4), q(b, 4), q(c, 4)});
                CHECK(bar.contains(x) == in_symmetrization_of_down_monotone(p, x));
            }
}

TEST_CASE("symmetric closure matches the generic pipeline")
{
    CHECK(equal(make_symmetric_closure(1, 3, 2), sparse_closure(symmetrize(make_simplex_family(1, 3)), 2)));
    CHECK(make_symmetric_closure(2, 4, 2) == canonicalize(HPolytope::box(4, -1, 1)));
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::size_t t = 1; t <= n; ++t)
            for (std::size_t k = 1; k <= n; ++k)
                CHECK(equal(sparse_closure(make_symmetric_family(t, n), k), make_symmetric_closure(t, n, k)));
}
