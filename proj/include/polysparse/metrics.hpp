#pragma once

#include "polysparse/operations.hpp"

#include <cstdint>
#include <vector>

namespace polysparse::metrics {

/// Squared Euclidean distance with both witnesses; sq_dist == ||outer - inner||^2 exactly.
struct DistanceResult {
    Rational sq_dist;
    QVector witness_outer;
    QVector witness_inner;

    double dist() const;
};

/// One direction's gap between an outer and an inner polytope.
struct GapRecord {
    QVector direction;
    Rational support_outer;
    Rational support_inner;
    Rational gap;
};

/**
 * Closest point of conv(V) to x by Wolfe's minimum-norm-point algorithm run on
 * the translated points v - x, in exact arithmetic. Ties (closest start point,
 * entering point) go to the lowest vertex index, so the result is deterministic.
 */
DistanceResult nearest_point(const VPolytope& p, const QVector& x);

/// Checks (x - y).(v - y) <= 0 for every vertex v: y is the projection of x.
bool is_projection_certificate(const VPolytope& p, const QVector& x, const QVector& y);

/// Thrown when a nested-pair operation receives inner not contained in outer.
class NotNested : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/**
 * Squared Hausdorff distance max_{x in outer} min_{y in inner} ||x - y||^2 for
 * inner contained in outer, evaluated on the vertices of outer. Among vertices
 * at maximal distance the lexicographically smallest one is reported.
 */
DistanceResult hausdorff_sq(const HPolytope& inner, const HPolytope& outer);

/// Same, with both polytopes already in vertex form (no inclusion check).
DistanceResult hausdorff_sq(const VPolytope& inner, const VPolytope& outer);

GapRecord gap(const HPolytope& inner, const HPolytope& outer, const QVector& c);

/// Outcome of checking d(P,Q) = max over unit c of gap(c) with squared quantities.
struct DistGapReport {
    DistanceResult distance;
    QVector witness_direction;     ///< x0 - y0, unnormalized
    GapRecord witness_gap;
    bool identity_holds = false;   ///< gap(c*)^2 == sq_dist * ||c*||^2
    std::size_t samples = 0;
    std::size_t violations = 0;    ///< sampled c with gap(c)^2 > sq_dist * ||c||^2
    double max_ratio = 0;          ///< max over samples of gap(c)/(||c|| d), 0 when d = 0

    bool ok() const { return identity_holds && violations == 0; }
};

/// Witness-direction identity plus `samples` seeded random directions.
DistGapReport verify_dist_gap(const HPolytope& inner, const HPolytope& outer, std::size_t samples,
                              std::uint64_t seed);

} // namespace polysparse::metrics
