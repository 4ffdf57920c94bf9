#include "doctest.h"

#include "polysparse/closure.hpp"
#include "polysparse/metrics.hpp"
#include "test_support.hpp"

#include <cmath>

using namespace polysparse;
using namespace polysparse::families;
using namespace testsupport;

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(make_simplex_family(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_simplex_family(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_qn(3), std::invalid_argument);
    CHECK_THROWS_AS(make_qn(0), std::invalid_argument);
    CHECK_THROWS_AS(make_symmetric_closure(1, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_symmetric_closure(1, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_sq_dist(2, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_sq_dist(2, 6, 1), std::invalid_argument);
}

TEST_CASE("simplex family")
{
    CHECK(make_simplex_family(1, 2) == hpoly(2, {{qv({-1, 0}), 0}, {qv({0, -1}), 0}, {qv({1, 1}), 1}}));
    for (std::size_t n = 1; n <= 5; ++n)
        CHECK(make_simplex_family(n, n) == canonicalize(HPolytope::box(n, 0, 1)));
    // Half of the hypercube: vertices are the 0/1 points with at most n/2 ones.
    const VPolytope half = vertices(make_simplex_family(2, 4));
    std::vector<QVector> expected;
    for (const auto& x : lattice_points(4, false))
        if (sparsity(x) <= 2)
            expected.push_back(x);
    std::sort(expected.begin(), expected.end(), [](const QVector& a, const QVector& b) { return lex_less(a, b); });
    CHECK(half.vertices == expected);
}

TEST_CASE("Q_n")
{
    CHECK(make_qn(2) == make_simplex_family(1, 2));
    const HPolytope q4 = make_qn(4);
    const QVector x(4, q(2, 3));
    CHECK(q4.contains(x));
    for (const auto& subset : k_subsets(4, 3)) {
        Rational s = 0;
        for (auto i : subset)
            s += x[i];
        CHECK(s == 2);
    }

    // Integer hull by enumerating binary points, compared with P_{n/2,n}.
    for (std::size_t n : {2, 4, 6}) {
        const HPolytope qn = make_qn(n);
        VPolytope integer_points(n);
        for (const auto& z : lattice_points(n, false))
            if (qn.contains(z))
                integer_points.vertices.push_back(z);
        CHECK(equal(facets(integer_points), make_simplex_family(n / 2, n)));
    }
}

TEST_CASE("symmetric families")
{
    for (std::size_t n = 1; n <= 4; ++n) {
        HPolytope cross(n);
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            QVector a(n);
            for (std::size_t i = 0; i < n; ++i)
                a[i] = (mask >> i) & 1 ? -1 : 1;
            cross.add(LinIneq{a, 1});
        }
        CHECK(equal(make_symmetric_family(1, n), cross));
    }
    CHECK(make_symmetric_closure(2, 4, 2) == canonicalize(HPolytope::box(4, -1, 1)));
    CHECK(equal(make_symmetric_closure(1, 3, 2),
                closure::sparse_closure(closure::symmetrize(make_simplex_family(1, 3)), 2)));
    CHECK(equal(make_symmetric_closure(2, 3, 3), make_symmetric_family(2, 3)));

    // Invariance under every reflection.
    const HPolytope sym = make_symmetric_family(2, 4);
    for (std::size_t mask = 0; mask < 16; ++mask) {
        IndexSet keep;
        for (std::size_t i = 0; i < 4; ++i)
            if ((mask >> i) & 1)
                keep.push_back(i);
        CHECK(reflect(sym, keep) == sym);
    }
}

TEST_CASE("closed_form_sq_dist")
{
    CHECK(closed_form_sq_dist(1, 2, 1) == q(1, 2));
    CHECK(closed_form_sq_dist(2, 4, 3) == q(1, 9));
    CHECK(closed_form_sq_dist(2, 4, 2) == 1);
    CHECK(closed_form_sq_dist(1, 5, 5) == 0);
    CHECK(closed_form_sq_dist(3, 6, 6) == 0);
    // n = 2 with t = 1 = n/2: both branches agree.
    for (std::size_t k = 1; k <= 2; ++k) {
        const Rational t1 = Rational(2) / (k * k) - Rational(2, k) + Rational(1, 2);
        CHECK(closed_form_sq_dist(1, 2, k) == t1);
    }
    const HPolytope p = make_simplex_family(1, 4);
    CHECK(closed_form_sq_dist(1, 4, 2) == metrics::hausdorff_sq(p, closure::sparse_closure(p, 2)).sq_dist);
}

TEST_CASE("closed_form_gap_sym")
{
    const std::vector<double> axis{1, 0, 0, 0};
    CHECK(closed_form_gap_sym<double>(1, 4, 1, axis) == 0.0);
    const std::vector<Rational> half(4, q(1, 2));
    CHECK(closed_form_gap_sym<Rational>(1, 4, 1, half) == q(3, 2));
    const std::vector<double> e10(10, 1.0 / std::sqrt(10.0));
    CHECK(closed_form_gap_sym<double>(1, 10, 1, e10) == doctest::Approx(9.0 / std::sqrt(10.0)).epsilon(1e-12));
    CHECK_THROWS_AS(closed_form_gap_sym<double>(1, 4, 2, axis), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_gap_sym<double>(1, 5, 1, axis), std::invalid_argument);

    // Exact oracle: two LPs on the explicit descriptions.
    const HPolytope inner = make_symmetric_family(2, 4);
    const HPolytope outer = make_symmetric_closure(2, 4, 2);
    auto rng = RandomSource{301, 0}.substream(0);
    for (int i = 0; i < 40; ++i) {
        std::vector<Rational> c(4);
        for (auto& x : c)
            x = q(static_cast<long long>(rng.below(41)) - 20, static_cast<long long>(rng.below(5)) + 1);
        CHECK(closed_form_gap_sym<Rational>(2, 4, 2, c) == metrics::gap(inner, outer, QVector(c)).gap);
        CHECK(closed_form_gap_sym<Rational>(2, 4, 1, c) == metrics::gap(inner, outer, QVector(c)).gap);
    }
}

TEST_CASE("bernstein_bound")
{
    CHECK(bernstein_bound(2, 1, 1) == doctest::Approx(std::exp(-1.0)));
    // Tie: w^2/(4U) = 3w/(4M) with w = 3, U = 1, M = 1.
    CHECK(bernstein_bound(3, 1, 1) == doctest::Approx(std::exp(-9.0 / 4.0)));
    CHECK_THROWS_AS(bernstein_bound(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(bernstein_bound(1, -1, 1), std::invalid_argument);

    // Dense-budget instantiation: w = 30 b sqrt(log d)/sqrt(k), U = b (n-k)/k^2, M = 1/k.
    const double b = 0.5, d = 50, k = 25, n = 100;
    const double w = 30.0 * b * std::sqrt(std::log(d)) / std::sqrt(k);
    const double first = 30.0 * 30.0 * b * k * std::log(d) / (4.0 * (n - k));
    const double second = 30.0 / 4.0 * 3.0 * b * std::sqrt(k * std::log(d));
    CHECK(bernstein_bound(w, b * (n - k) / (k * k), 1.0 / k) == doctest::Approx(std::exp(-std::min(first, second))));
}
