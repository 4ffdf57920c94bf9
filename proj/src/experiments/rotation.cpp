#include "common.hpp"
#include "parallel.hpp"

#include "polysparse/closure.hpp"
#include "polysparse/families.hpp"
#include "polysparse/metrics.hpp"
#include "polysparse/random.hpp"

#include <cmath>
#include <numeric>

namespace polysparse::experiments {

namespace {

QMatrix random_skew(std::size_t n, long long bound, PhiloxStream& rng)
{
    const auto span = static_cast<std::uint64_t>(2 * bound + 1);
    QMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const long long num = static_cast<long long>(rng.below(span)) - bound;
            const long long den = static_cast<long long>(rng.below(static_cast<std::uint64_t>(bound))) + 1;
            s(i, j) = Rational(num, den);
            s(j, i) = -s(i, j);
        }
    return s;
}

QMatrix permutation_matrix(const std::vector<std::size_t>& perm)
{
    QMatrix m(perm.size(), perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        m(perm[i], i) = 1;
    return m;
}

metrics::DistanceResult closure_distance(const HPolytope& p, std::size_t k)
{
    return metrics::hausdorff_sq(p, closure::sparse_closure(p, k));
}

struct RotationOutcome {
    QMatrix skew;
    QMatrix rotation;
    bool orthogonal = false;
    bool det_one = false;
    metrics::DistanceResult distance;
};

} // namespace

ExperimentReport run_rotation(const RotationParams& p)
{
    const std::size_t n = p.n;
    if (n < 2)
        throw std::invalid_argument("rotation: n must be at least 2");
    if (n > 5)
        throw ResourceRefusal("rotation: the exact closure of a rotated polytope is limited to n <= 5 (requested n=" +
                              std::to_string(n) + ")");
    if (p.t < 1 || p.t > n)
        throw std::invalid_argument("rotation: t must satisfy 1 <= t <= n");
    if (p.k < 1 || p.k >= n)
        throw std::invalid_argument("rotation: k must satisfy 1 <= k < n");
    if (p.rotations == 0)
        throw std::invalid_argument("rotation: at least one rotation is required");
    if (p.skew_entry_bound < 1)
        throw std::invalid_argument("rotation: skew entry bound must be positive");
    const detail::Stopwatch clock;

    ExperimentReport rep;
    rep.name = "rotation";
    rep.params["n"] = n;
    rep.params["t"] = p.t;
    rep.params["k"] = p.k;
    rep.params["rotations"] = p.rotations;
    rep.params["seed"] = p.seed;
    rep.params["skew_entry_bound"] = p.skew_entry_bound;
    rep.params["permutations"] = p.permutations;
    rep.notes.push_back("the Omega(sqrt n) growth for rotated polytopes is asymptotic and not desk-reproducible; this "
                        "run computes the exact distance for sampled Cayley rotations at small n");

    const HPolytope base = families::make_symmetric_family(p.t, n);
    const HPolytope base_closure = closure::sparse_closure(base, p.k);
    const auto identity = metrics::hausdorff_sq(base, base_closure);
    rep.add_check("identity-closure-matches-explicit",
                  equal(base_closure, families::make_symmetric_closure(p.t, n, p.k)));
    rep.summary["identity_sq_dist"] = detail::rational_json(identity.sq_dist);
    rep.summary["identity_dist"] = identity.dist();

    bool perms_ok = true;
    const RandomSource perm_src{p.seed, detail::permutation_stream};
    for (std::size_t i = 0; i < p.permutations; ++i) {
        auto rng = perm_src.substream(i);
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        for (std::size_t j = n - 1; j > 0; --j)
            std::swap(perm[j], perm[rng.below(j + 1)]);
        const auto d = closure_distance(linear_image(base, permutation_matrix(perm)), p.k);
        const bool match = d.sq_dist == identity.sq_dist;
        perms_ok = perms_ok && match;
        Json rec;
        rec["type"] = "permutation";
        rec["index"] = i;
        rec["permutation"] = perm;
        rec["sq_dist"] = detail::rational_json(d.sq_dist);
        rec["matches_identity"] = match;
        rep.records.push_back(std::move(rec));
    }
    if (p.permutations > 0)
        rep.add_check("permutation-invariance", perms_ok);

    const RandomSource rot_src{p.seed, detail::rotation_stream};
    std::vector<RotationOutcome> out(p.rotations);
    detail::parallel_for(p.rotations, p.workers, [&](std::size_t i) {
        auto rng = rot_src.substream(i);
        RotationOutcome& o = out[i];
        o.skew = random_skew(n, p.skew_entry_bound, rng);
        o.rotation = cayley_rotation(o.skew);
        o.orthogonal = o.rotation.transpose() * o.rotation == QMatrix::identity(n);
        o.det_one = o.rotation.determinant() == 1;
        o.distance = closure_distance(linear_image(base, o.rotation), p.k);
    });

    bool all_orthogonal = true, all_positive = true;
    std::vector<Rational> dists;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto& o = out[i];
        all_orthogonal = all_orthogonal && o.orthogonal && o.det_one;
        all_positive = all_positive && o.distance.sq_dist > 0;
        dists.push_back(o.distance.sq_dist);
        Json rec;
        rec["type"] = "rotation";
        rec["index"] = i;
        rec["skew"] = detail::matrix_json(o.skew);
        rec["rotation"] = detail::matrix_json(o.rotation);
        rec["orthogonal"] = o.orthogonal;
        rec["det_one"] = o.det_one;
        rec["sq_dist"] = detail::rational_json(o.distance.sq_dist);
        rec["dist"] = o.distance.dist();
        rec["witness_outer"] = detail::vector_json(o.distance.witness_outer);
        rec["witness_inner"] = detail::vector_json(o.distance.witness_inner);
        rep.records.push_back(std::move(rec));
    }
    rep.add_check("rotations-orthogonal", all_orthogonal, "R^T R = I and det R = 1, exactly");
    rep.add_check("rotations-positive-distance", all_positive);

    std::sort(dists.begin(), dists.end());
    const std::size_t m = dists.size();
    const Rational median = m % 2 ? dists[m / 2] : (dists[m / 2 - 1] + dists[m / 2]) / 2;
    rep.summary["min_sq_dist"] = detail::rational_json(dists.front());
    rep.summary["median_sq_dist"] = detail::rational_json(median);
    rep.summary["max_sq_dist"] = detail::rational_json(dists.back());
    rep.summary["min_dist"] = std::sqrt(to_double(dists.front()));
    rep.summary["median_dist"] = std::sqrt(to_double(median));
    rep.summary["max_dist"] = std::sqrt(to_double(dists.back()));
    rep.wall_seconds = clock.seconds();
    return rep;
}

} // namespace polysparse::experiments
