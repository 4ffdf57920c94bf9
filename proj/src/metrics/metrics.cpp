#include "polysparse/metrics.hpp"

#include "polysparse/random.hpp"

#include <cmath>
#include <stdexcept>

namespace polysparse::metrics {

double DistanceResult::dist() const
{
    return std::sqrt(to_double(sq_dist));
}

namespace {

// Affine minimizer of ||sum mu_s p_s||^2 subject to sum mu_s = 1.
std::vector<Rational> affine_minimizer(const std::vector<QVector>& pts, const std::vector<std::size_t>& corral)
{
    const std::size_t s = corral.size();
    std::vector<QVector> m(s + 1, QVector(s + 1));
    QVector rhs(s + 1);
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = i; j < s; ++j) {
            m[i][j] = dot(pts[corral[i]], pts[corral[j]]);
            m[j][i] = m[i][j];
        }
        m[i][s] = 1;
        m[s][i] = 1;
    }
    rhs[s] = 1;
    QVector sol(s + 1);
    if (!solve_linear(std::move(m), std::move(rhs), sol))
        throw std::logic_error("nearest_point: corral is not affinely independent");
    sol.pop_back();
    return sol;
}

QVector combine(const std::vector<QVector>& pts, const std::vector<std::size_t>& corral, const std::vector<Rational>& w,
                std::size_t dim)
{
    QVector y(dim);
    for (std::size_t i = 0; i < corral.size(); ++i) {
        if (w[i] == 0)
            continue;
        for (std::size_t j = 0; j < dim; ++j)
            if (pts[corral[i]][j] != 0)
                y[j] += w[i] * pts[corral[i]][j];
    }
    return y;
}

} // namespace

DistanceResult nearest_point(const VPolytope& p, const QVector& x)
{
    if (p.empty())
        throw std::invalid_argument("nearest_point: polytope has no vertices");
    if (x.size() != p.dim)
        throw std::invalid_argument("nearest_point: dimension mismatch");

    std::vector<QVector> pts;
    pts.reserve(p.vertices.size());
    for (const auto& v : p.vertices)
        pts.push_back(v - x);

    std::size_t start = 0;
    Rational best = sq_norm(pts[0]);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        Rational n = sq_norm(pts[i]);
        if (n < best) {
            best = std::move(n);
            start = i;
        }
    }
    std::vector<std::size_t> corral{start};
    std::vector<Rational> lambda{Rational(1)};
    QVector y = pts[start];

    const std::size_t cap = 100000;
    for (std::size_t iter = 0;; ++iter) {
        if (iter > cap)
            throw std::logic_error("nearest_point: iteration cap exceeded");
        const Rational yy = sq_norm(y);
        if (yy == 0)
            break;
        std::size_t enter = 0;
        Rational low = dot(pts[0], y);
        for (std::size_t i = 1; i < pts.size(); ++i) {
            Rational v = dot(pts[i], y);
            if (v < low) {
                low = std::move(v);
                enter = i;
            }
        }
        if (low >= yy)
            break;
        corral.push_back(enter);
        lambda.push_back(Rational(0));

        for (;;) {
            const auto mu = affine_minimizer(pts, corral);
            bool interior = true;
            for (const auto& m : mu)
                if (m <= 0) {
                    interior = false;
                    break;
                }
            if (interior) {
                lambda = mu;
                y = combine(pts, corral, lambda, p.dim);
                break;
            }
            // Step from lambda toward mu until the first weight hits zero.
            Rational theta = 1;
            for (std::size_t i = 0; i < mu.size(); ++i)
                if (mu[i] <= 0 && lambda[i] - mu[i] > 0) {
                    Rational t = lambda[i] / (lambda[i] - mu[i]);
                    if (t < theta)
                        theta = std::move(t);
                }
            std::vector<std::size_t> next_corral;
            std::vector<Rational> next_lambda;
            for (std::size_t i = 0; i < mu.size(); ++i) {
                Rational w = (1 - theta) * lambda[i] + theta * mu[i];
                if (w > 0) {
                    next_corral.push_back(corral[i]);
                    next_lambda.push_back(std::move(w));
                }
            }
            corral = std::move(next_corral);
            lambda = std::move(next_lambda);
            y = combine(pts, corral, lambda, p.dim);
        }
    }
    return DistanceResult{sq_norm(y), x, x + y};
}

bool is_projection_certificate(const VPolytope& p, const QVector& x, const QVector& y)
{
    const QVector d = x - y;
    for (const auto& v : p.vertices)
        if (dot(d, v - y) > 0)
            return false;
    return true;
}

DistanceResult hausdorff_sq(const VPolytope& inner, const VPolytope& outer)
{
    if (inner.dim != outer.dim)
        throw std::invalid_argument("hausdorff_sq: dimension mismatch");
    if (inner.empty() || outer.empty())
        throw std::invalid_argument("hausdorff_sq: empty polytope");
    VPolytope sorted = outer;
    sorted.sort_unique();
    DistanceResult best;
    bool have = false;
    for (const auto& v : sorted.vertices) {
        auto r = nearest_point(inner, v);
        if (!have || r.sq_dist > best.sq_dist) {
            best = std::move(r);
            have = true;
        }
    }
    return best;
}

DistanceResult hausdorff_sq(const HPolytope& inner, const HPolytope& outer)
{
    if (inner.dim != outer.dim)
        throw std::invalid_argument("hausdorff_sq: dimension mismatch");
    if (!is_feasible(inner))
        throw std::invalid_argument("hausdorff_sq: inner polytope is empty");
    if (!includes(outer, inner))
        throw NotNested("hausdorff_sq: inner polytope is not contained in outer polytope");
    return hausdorff_sq(vertices(inner), vertices(outer));
}

GapRecord gap(const HPolytope& inner, const HPolytope& outer, const QVector& c)
{
    if (inner.dim != outer.dim || c.size() != inner.dim)
        throw std::invalid_argument("gap: dimension mismatch");
    GapRecord g{c, support(outer, c), support(inner, c), Rational(0)};
    g.gap = g.support_outer - g.support_inner;
    return g;
}

DistGapReport verify_dist_gap(const HPolytope& inner, const HPolytope& outer, std::size_t samples,
                              std::uint64_t seed)
{
    DistGapReport rep;
    rep.distance = hausdorff_sq(inner, outer);
    rep.witness_direction = rep.distance.witness_outer - rep.distance.witness_inner;
    rep.witness_gap = gap(inner, outer, rep.witness_direction);
    const Rational& g = rep.witness_gap.gap;
    rep.identity_holds = g * g == rep.distance.sq_dist * sq_norm(rep.witness_direction);

    const double d = rep.distance.dist();
    const RandomSource rng{seed, 0x4c656d6d61ULL};
    for (std::size_t s = 0; s < samples; ++s) {
        auto stream = rng.substream(s);
        QVector c(inner.dim);
        for (auto& x : c)
            x = Rational(static_cast<long long>(std::llround(stream.gaussian() * 1048576.0)));
        if (is_zero(c))
            c[0] = 1;
        const auto rec = gap(inner, outer, c);
        const Rational cc = sq_norm(c);
        if (rec.gap < 0 || rec.gap * rec.gap > rep.distance.sq_dist * cc)
            ++rep.violations;
        if (d > 0)
            rep.max_ratio = std::max(rep.max_ratio, to_double(rec.gap) / (std::sqrt(to_double(cc)) * d));
        ++rep.samples;
    }
    return rep;
}

} // namespace polysparse::metrics
