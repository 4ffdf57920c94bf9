#include "common.hpp"

#include "polysparse/closure.hpp"
#include "polysparse/families.hpp"
#include "polysparse/metrics.hpp"
#include "polysparse/random.hpp"

namespace polysparse::experiments {

namespace {

std::string tag(std::initializer_list<std::pair<const char*, std::size_t>> kv)
{
    std::string out;
    for (const auto& [key, value] : kv)
        out += std::string(" ") + key + "=" + std::to_string(value);
    return out;
}

HPolytope nonnegative_orthant(std::size_t n)
{
    HPolytope p(n);
    for (std::size_t i = 0; i < n; ++i) {
        QVector a(n);
        a[i] = -1;
        p.add(LinIneq{a, 0});
    }
    return p;
}

// Down-monotone polytope in [0,1]^n with a few nonnegative integer cuts.
HPolytope random_down_monotone(std::size_t n, std::uint64_t seed, std::uint64_t index)
{
    auto rng = RandomSource{seed, detail::verify_stream}.substream(index);
    HPolytope p = HPolytope::box(n, 0, 1);
    for (int r = 0; r < 2; ++r) {
        QVector a(n);
        for (auto& x : a)
            x = Rational(static_cast<long long>(rng.below(4)));
        p.add(LinIneq{a, Rational(static_cast<long long>(rng.below(5)) + 1)});
    }
    return canonicalize(p);
}

void distance_closed_form(ExperimentReport& rep, const VerifyParams& p)
{
    bool first = true;
    auto run = [&](std::size_t t, std::size_t n) {
        HPolytope poly = families::make_simplex_family(t, n);
        if (first && p.inject_bug) {
            poly.ineqs.back().a[0] = -poly.ineqs.back().a[0];
            rep.notes.push_back("injected bug: sign of one coefficient flipped in the first simplex-family input");
        }
        first = false;
        for (std::size_t k = 1; k <= n; ++k) {
            const std::string name = "distance-closed-form" + tag({{"t", t}, {"n", n}, {"k", k}});
            const Rational expected = families::closed_form_sq_dist(t, n, k);
            try {
                const auto d = metrics::hausdorff_sq(poly, closure::sparse_closure(poly, k));
                rep.add_check(name, d.sq_dist == expected,
                              "sq_dist=" + to_string(d.sq_dist) + " expected=" + to_string(expected));
            } catch (const std::exception& e) {
                rep.add_check(name, false, e.what());
            }
        }
    };
    for (std::size_t n = 2; n <= p.max_n; ++n) {
        run(1, n);
        if (n % 2 == 0 && n > 2)
            run(n / 2, n);
    }
}

void dist_gap_identity(ExperimentReport& rep, const VerifyParams& p)
{
    std::vector<std::pair<std::string, HPolytope>> corpus;
    const std::size_t top = std::min<std::size_t>(p.max_n, 4);
    for (std::size_t n = 2; n <= top; ++n) {
        corpus.emplace_back("simplex t=1 n=" + std::to_string(n), families::make_simplex_family(1, n));
        corpus.emplace_back("symmetric t=1 n=" + std::to_string(n), families::make_symmetric_family(1, n));
        if (n % 2 == 0)
            corpus.emplace_back("simplex t=n/2 n=" + std::to_string(n), families::make_simplex_family(n / 2, n));
    }
    for (std::size_t i = 0; i < 2 && top >= 3; ++i)
        corpus.emplace_back("down-monotone #" + std::to_string(i), random_down_monotone(3, p.seed, 100 + i));

    for (const auto& [label, poly] : corpus)
        for (std::size_t k = 1; k < poly.dim; ++k) {
            const auto r = metrics::verify_dist_gap(poly, closure::sparse_closure(poly, k), p.gap_samples, p.seed);
            rep.add_check("dist-gap-identity " + label + " k=" + std::to_string(k), r.ok(),
                          "sq_dist=" + to_string(r.distance.sq_dist) + " witness_gap=" + to_string(r.witness_gap.gap) +
                              " violations=" + std::to_string(r.violations) + "/" + std::to_string(r.samples));
        }
}

void symmetric_closure(ExperimentReport& rep, const VerifyParams& p)
{
    for (std::size_t n = 1; n <= std::min<std::size_t>(p.max_n, 5); ++n)
        for (std::size_t t = 1; t <= n; ++t) {
            const HPolytope bar = closure::symmetrize(families::make_simplex_family(t, n));
            rep.add_check("symmetrization" + tag({{"t", t}, {"n", n}}),
                          equal(bar, families::make_symmetric_family(t, n)));
            for (std::size_t k = 1; k <= n; ++k)
                rep.add_check("symmetric-closure" + tag({{"t", t}, {"n", n}, {"k", k}}),
                              equal(closure::sparse_closure(bar, k), families::make_symmetric_closure(t, n, k)));
        }
}

void lp_relaxation(ExperimentReport& rep, const VerifyParams& p)
{
    for (std::size_t n = 4; n <= p.max_n; n += 2) {
        const ExperimentReport sub = run_lp_relax(n);
        for (const auto& c : sub.checks)
            rep.add_check("lp-relax n=" + std::to_string(n) + " " + c.name, c.pass, c.detail);
    }
}

void down_monotone(ExperimentReport& rep, const VerifyParams& p)
{
    const std::size_t top = std::min<std::size_t>(p.max_n, 4);
    std::vector<std::pair<std::string, HPolytope>> corpus;
    for (std::size_t n = 2; n <= top; ++n)
        for (std::size_t t = 1; t < n; ++t)
            corpus.emplace_back("simplex" + tag({{"t", t}, {"n", n}}), families::make_simplex_family(t, n));
    if (top >= 4)
        corpus.emplace_back("qn n=4", families::make_qn(4));
    for (std::size_t i = 0; i < 2 && top >= 3; ++i)
        corpus.emplace_back("random #" + std::to_string(i), random_down_monotone(3, p.seed, i));

    for (const auto& [label, poly] : corpus) {
        const std::size_t n = poly.dim;
        if (!closure::is_down_monotone(poly)) {
            rep.add_check("down-monotone " + label, false, "corpus polytope is not down-monotone");
            continue;
        }
        const HPolytope bar = closure::symmetrize(poly);
        for (std::size_t k = 1; k < n; ++k) {
            const HPolytope pk = closure::sparse_closure(poly, k);
            const HPolytope bark = closure::sparse_closure(bar, k);
            rep.add_check("closure-commutes-with-symmetrization " + label + " k=" + std::to_string(k),
                          equal(bark, closure::symmetrize(pk)));
            rep.add_check("symmetric-closure-restricted " + label + " k=" + std::to_string(k),
                          equal(intersect(bark, nonnegative_orthant(n)), pk));
        }

        std::vector<HPolytope> reflections;
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            IndexSet keep;
            for (std::size_t i = 0; i < n; ++i)
                if ((mask >> i) & 1)
                    keep.push_back(i);
            reflections.push_back(reflect(poly, keep));
        }
        std::size_t points = 1;
        for (std::size_t i = 0; i < n; ++i)
            points *= 9;
        std::size_t mismatches = 0;
        for (std::size_t code = 0; code < points; ++code) {
            QVector x(n);
            std::size_t c = code;
            for (std::size_t i = 0; i < n; ++i, c /= 9)
                x[i] = Rational(static_cast<long long>(c % 9) - 4, 4);
            bool in_union = false;
            for (const auto& r : reflections)
                if (r.contains(x)) {
                    in_union = true;
                    break;
                }
            mismatches += bar.contains(x) != in_union;
        }
        rep.add_check("symmetrization-is-union-of-reflections " + label, mismatches == 0,
                      std::to_string(points) + " grid points, " + std::to_string(mismatches) + " mismatches");
    }
}

void closed_form_gap(ExperimentReport& rep, const VerifyParams& p)
{
    const RandomSource src{p.seed, detail::verify_stream + 1};
    std::uint64_t stream = 0;
    for (std::size_t n = 2; n <= std::min<std::size_t>(p.max_n, 5); ++n)
        for (std::size_t t = 1; t <= n; ++t) {
            const HPolytope inner = families::make_symmetric_family(t, n);
            for (std::size_t k = 1; k <= t; ++k) {
                const HPolytope outer = families::make_symmetric_closure(t, n, k);
                bool ok = true;
                for (int s = 0; s < 20; ++s) {
                    auto rng = src.substream(stream++);
                    QVector c(n);
                    for (auto& x : c)
                        x = Rational(static_cast<long long>(rng.below(41)) - 20,
                                     static_cast<long long>(rng.below(6)) + 1);
                    ok = ok && families::closed_form_gap_sym<Rational>(t, n, k, c) == metrics::gap(inner, outer, c).gap;
                }
                rep.add_check("gap-closed-form" + tag({{"t", t}, {"n", n}, {"k", k}}), ok, "20 rational directions");
            }
        }
}

void sign_vectors(ExperimentReport& rep, const VerifyParams& p)
{
    for (std::size_t n = 2; n <= p.max_n; n += 2) {
        const HPolytope bar = families::make_symmetric_family(n / 2, n);
        const VPolytope bar_v = vertices(bar);
        const Rational quarter(static_cast<long long>(n), 4), ninth(static_cast<long long>(n), 36);
        for (std::size_t k = 1; k <= n / 2; ++k) {
            const HPolytope pk = closure::sparse_closure(bar, k);
            bool contained = true, distances = true;
            for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
                QVector x(n);
                for (std::size_t i = 0; i < n; ++i)
                    x[i] = (mask >> i) & 1 ? -1 : 1;
                contained = contained && pk.contains(x);
                if (k == 1)
                    distances = distances && metrics::nearest_point(bar_v, x).sq_dist == quarter &&
                                metrics::nearest_point(bar_v, Rational(2, 3) * x).sq_dist == ninth;
            }
            rep.add_check("sign-vectors-in-closure" + tag({{"n", n}, {"k", k}}), contained);
            if (k == 1)
                rep.add_check("sign-vector-distances" + tag({{"n", n}}), distances, "n/4 and n/36");
        }
    }
}

} // namespace

ExperimentReport verify_suite(const VerifyParams& p)
{
    if (p.max_n < 2)
        throw std::invalid_argument("verify: max_n must be at least 2");
    if (p.max_n > 6)
        throw ResourceRefusal("verify: the exact suites are limited to max_n <= 6 (requested " +
                              std::to_string(p.max_n) + ")");
    const detail::Stopwatch clock;

    ExperimentReport rep;
    rep.name = "verify";
    rep.params["max_n"] = p.max_n;
    rep.params["seed"] = p.seed;
    rep.params["gap_samples"] = p.gap_samples;
    rep.params["inject_bug"] = p.inject_bug;

    distance_closed_form(rep, p);
    dist_gap_identity(rep, p);
    symmetric_closure(rep, p);
    lp_relaxation(rep, p);
    down_monotone(rep, p);
    closed_form_gap(rep, p);
    sign_vectors(rep, p);

    rep.wall_seconds = clock.seconds();
    return rep;
}

} // namespace polysparse::experiments
