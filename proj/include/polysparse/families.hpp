#pragma once

#include "polysparse/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace polysparse::families {

/// Dimension n, integer budget t and sparsity k shared by the families below.
struct FamilyParams {
    std::size_t n;
    std::size_t t;
    std::size_t k;

    /// Checks 1 <= t <= n and 1 <= k <= n.
    void validate() const;
};

/// {x in [0,1]^n : sum x_i <= t}, canonical.
HPolytope make_simplex_family(std::size_t t, std::size_t n);

/// [0,1]^n cut by sum_{i in I} x_i <= n/2 for every I of size n/2 + 1; n even.
HPolytope make_qn(std::size_t n);

/// Box [-1,1]^n plus sum_{i in I} x_i - sum_{i not in I} x_i <= t for every I.
HPolytope make_symmetric_family(std::size_t t, std::size_t n);

/// Box [-1,1]^n plus sum_{I+} x_i - sum_{I-} x_i <= t for every k-set I and every
/// split of I into (I+, I-).
HPolytope make_symmetric_closure(std::size_t t, std::size_t n, std::size_t k);

/// Squared distance between P_{t,n} and its k-sparse closure for t in {1, n/2}.
/// Throws std::invalid_argument for any other t.
Rational closed_form_sq_dist(std::size_t t, std::size_t n, std::size_t k);

/// Sum of the t largest |c_i|: the support of the symmetrized budget-t family.
template <typename T>
T top_abs_sum(std::span<const T> c, std::size_t t)
{
    std::vector<T> mags;
    mags.reserve(c.size());
    for (const auto& x : c)
        mags.push_back(x < 0 ? T(-x) : x);
    t = std::min(t, mags.size());
    std::nth_element(mags.begin(), mags.begin() + static_cast<std::ptrdiff_t>(t), mags.end(), std::greater<T>());
    T s = 0;
    for (std::size_t i = 0; i < t; ++i)
        s += mags[i];
    return s;
}

/**
 * Gap between the k-sparse closure of the symmetrized budget-t family and the
 * family itself in direction c: ||c||_1 minus the sum of the t largest |c_i|.
 * Valid only for k <= t (the closure is then the box); throws otherwise.
 */
template <typename T>
T closed_form_gap_sym(std::size_t t, std::size_t n, std::size_t k, std::span<const T> c)
{
    if (c.size() != n)
        throw std::invalid_argument("closed_form_gap_sym: direction dimension mismatch");
    if (t < 1 || t > n || k < 1 || k > n)
        throw std::invalid_argument("closed_form_gap_sym: parameters out of range");
    if (k > t)
        throw std::invalid_argument("closed_form_gap_sym: requires k <= t");
    T l1 = 0;
    for (const auto& x : c)
        l1 += x < 0 ? T(-x) : x;
    return l1 - top_abs_sum(c, t);
}

/// exp(-min{w^2/(4U), 3w/(4M)}); all inputs positive.
double bernstein_bound(double w, double u, double m);

} // namespace polysparse::families
