#include "common.hpp"

#include "polysparse/closure.hpp"
#include "polysparse/families.hpp"
#include "polysparse/metrics.hpp"

namespace polysparse::experiments {

ExperimentReport run_lp_relax(std::size_t n)
{
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("lp-relax: n must be even and at least 2");
    if (n > 6)
        throw ResourceRefusal("lp-relax: the exact pipeline is limited to n <= 6 (requested n=" + std::to_string(n) +
                              ")");
    const detail::Stopwatch clock;

    ExperimentReport rep;
    rep.name = "lp-relax";
    rep.params["n"] = n;
    rep.notes.push_back("exact rational pipeline; expected squared distance n((n-2)/(2n+4))^2");

    const HPolytope p = families::make_simplex_family(n / 2, n);
    const HPolytope qn = families::make_qn(n);
    const Rational ratio(static_cast<long long>(n) - 2, 2 * static_cast<long long>(n) + 4);
    const Rational expected = Rational(static_cast<long long>(n)) * ratio * ratio;

    const QVector centre(n, Rational(static_cast<long long>(n), static_cast<long long>(n) + 2));
    rep.add_check("qn-contains-scaled-all-ones", qn.contains(centre), "x = n/(n+2) e");

    for (std::size_t k = 1; k <= n / 2; ++k) {
        const HPolytope pk = closure::sparse_closure(p, k);
        const HPolytope relaxed = intersect(pk, qn);
        const auto d = metrics::hausdorff_sq(p, relaxed);
        const bool match = d.sq_dist == expected;

        Json rec;
        rec["type"] = "k";
        rec["k"] = k;
        rec["sq_dist"] = detail::rational_json(d.sq_dist);
        rec["expected_sq_dist"] = detail::rational_json(expected);
        rec["dist"] = d.dist();
        rec["match"] = match;
        rec["closure_is_unit_cube"] = pk == canonicalize(HPolytope::box(n, 0, 1));
        rec["witness_outer"] = detail::vector_json(d.witness_outer);
        rec["witness_inner"] = detail::vector_json(d.witness_inner);
        rep.records.push_back(std::move(rec));
        rep.add_check("relaxation-distance k=" + std::to_string(k), match,
                      "sq_dist=" + to_string(d.sq_dist) + " expected=" + to_string(expected));
    }

    VPolytope binary(n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        QVector z(n);
        for (std::size_t i = 0; i < n; ++i)
            z[i] = (mask >> i) & 1;
        if (qn.contains(z))
            binary.vertices.push_back(std::move(z));
    }
    const bool hull_ok = equal(facets(binary), p);
    rep.add_check("integer-hull", hull_ok,
                  std::to_string(binary.vertices.size()) + " binary points in Q_n; hull compared with P_{n/2,n}");

    rep.summary["expected_sq_dist"] = detail::rational_json(expected);
    rep.summary["dist_over_sqrt_n"] = detail::rational_json(ratio);
    rep.wall_seconds = clock.seconds();
    return rep;
}

} // namespace polysparse::experiments
