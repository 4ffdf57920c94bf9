#pragma once

#include "polysparse/lp.hpp"
#include "polysparse/polytope.hpp"

#include <cstddef>
#include <vector>

namespace polysparse {

/// Sorted, duplicate-free coordinate indices (0-based).
using IndexSet = std::vector<std::size_t>;

/**
 * Canonical H-form: every row normalized so its first nonzero coefficient has
 * absolute value 1, every redundant row removed (each removal certified by an LP
 * over the remaining rows), rows sorted lexicographically. Empty input gives
 * HPolytope::empty(dim). Idempotent.
 */
HPolytope canonicalize(const HPolytope& p);

/// Sorted list of the extreme points of conv(V).
VPolytope canonicalize(const VPolytope& v);

/// Orthogonal projection onto the coordinates in k (in increasing order), by
/// Fourier-Motzkin elimination with LP pruning after each eliminated variable.
HPolytope project(const HPolytope& p, const IndexSet& k);

/// Re-embeds a polytope living on coordinates k into R^dim as a cylinder.
HPolytope lift(const HPolytope& p, const IndexSet& k, std::size_t dim);

/// Vertex enumeration; throws std::domain_error if p is nonempty and unbounded.
VPolytope vertices(const HPolytope& p);

/// Facet description of conv(V), canonical. Lower-dimensional hulls get equality pairs.
HPolytope facets(const VPolytope& v);

HPolytope intersect(const HPolytope& p, const HPolytope& q);

/// Polar {z : z . x <= 1 for all x in P}. Throws std::domain_error unless the
/// origin is an interior point of P.
HPolytope polar(const HPolytope& p);
HPolytope polar(const VPolytope& v);

/// alpha * P; throws std::invalid_argument for alpha <= 0.
HPolytope scale(const HPolytope& p, const Rational& alpha);
VPolytope scale(const VPolytope& v, const Rational& alpha);

/// x^I: flips the sign of every coordinate not in I.
QVector reflect(const QVector& x, const IndexSet& keep);
/// P^I = {x^I : x in P}.
HPolytope reflect(const HPolytope& p, const IndexSet& keep);
VPolytope reflect(const VPolytope& v, const IndexSet& keep);

/// R(P) = {R x : x in P} for an invertible R.
HPolytope linear_image(const HPolytope& p, const QMatrix& r);
VPolytope linear_image(const VPolytope& v, const QMatrix& r);

/// inner is a subset of outer (LP per row of outer).
bool includes(const HPolytope& outer, const HPolytope& inner);
bool equal(const HPolytope& p, const HPolytope& q);
bool equal(const VPolytope& p, const VPolytope& q);

/// Support value max c . x over P; throws std::domain_error if P is empty or
/// unbounded in direction c.
Rational support(const HPolytope& p, const QVector& c);

/// R = (I - S)(I + S)^{-1}; exactly orthogonal with det R = 1.
/// Throws std::invalid_argument if S is not skew-symmetric, std::domain_error if I + S is singular.
QMatrix cayley_rotation(const QMatrix& s);

/// Every subset of {0..n-1} of size k, in lexicographic order.
std::vector<IndexSet> k_subsets(std::size_t n, std::size_t k);

IndexSet all_indices(std::size_t n);

} // namespace polysparse
