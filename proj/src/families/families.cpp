#include "polysparse/families.hpp"

#include "polysparse/operations.hpp"

namespace polysparse::families {

void FamilyParams::validate() const
{
    if (n == 0)
        throw std::invalid_argument("family: n must be positive");
    if (t < 1 || t > n)
        throw std::invalid_argument("family: t=" + std::to_string(t) + " outside [1, " + std::to_string(n) + "]");
    if (k < 1 || k > n)
        throw std::invalid_argument("family: k=" + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
}

HPolytope make_simplex_family(std::size_t t, std::size_t n)
{
    FamilyParams{n, t, 1}.validate();
    HPolytope p = HPolytope::box(n, 0, 1);
    p.add(LinIneq{QVector(n, Rational(1)), Rational(t)});
    return canonicalize(p);
}

HPolytope make_qn(std::size_t n)
{
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("make_qn: n must be even and at least 2");
    HPolytope p = HPolytope::box(n, 0, 1);
    for (const auto& subset : k_subsets(n, n / 2 + 1)) {
        LinIneq row{QVector(n), Rational(n / 2)};
        for (auto i : subset)
            row.a[i] = 1;
        p.add(std::move(row));
    }
    return canonicalize(p);
}

HPolytope make_symmetric_family(std::size_t t, std::size_t n)
{
    FamilyParams{n, t, 1}.validate();
    HPolytope p = HPolytope::box(n, -1, 1);
    const std::size_t patterns = std::size_t{1} << n;
    for (std::size_t mask = 0; mask < patterns; ++mask) {
        LinIneq row{QVector(n), Rational(t)};
        for (std::size_t i = 0; i < n; ++i)
            row.a[i] = (mask & (std::size_t{1} << i)) ? 1 : -1;
        p.add(std::move(row));
    }
    return canonicalize(p);
}

HPolytope make_symmetric_closure(std::size_t t, std::size_t n, std::size_t k)
{
    FamilyParams{n, t, k}.validate();
    HPolytope p = HPolytope::box(n, -1, 1);
    const std::size_t patterns = std::size_t{1} << k;
    for (const auto& subset : k_subsets(n, k))
        for (std::size_t mask = 0; mask < patterns; ++mask) {
            LinIneq row{QVector(n), Rational(t)};
            for (std::size_t j = 0; j < k; ++j)
                row.a[subset[j]] = (mask & (std::size_t{1} << j)) ? -1 : 1;
            p.add(std::move(row));
        }
    return canonicalize(p);
}

Rational closed_form_sq_dist(std::size_t t, std::size_t n, std::size_t k)
{
    FamilyParams{n, t, k}.validate();
    const Rational nn(n), kk(k);
    if (t == 1)
        return nn / (kk * kk) - Rational(2) / kk + Rational(1) / nn;
    if (n % 2 == 0 && t == n / 2) {
        if (2 * k <= n)
            return nn / 4;
        const Rational d = nn / (2 * kk) - Rational(1, 2);
        return nn * d * d;
    }
    throw std::invalid_argument("closed_form_sq_dist: no closed form for t=" + std::to_string(t) +
                                " (only t=1 and t=n/2)");
}

double bernstein_bound(double w, double u, double m)
{
    if (!(w > 0) || !(u > 0) || !(m > 0))
        throw std::invalid_argument("bernstein_bound: w, U and M must be positive");
    return std::exp(-std::min(w * w / (4.0 * u), 3.0 * w / (4.0 * m)));
}

} // namespace polysparse::families
