#pragma once

#include "polysparse/rational.hpp"

#include <compare>
#include <cstddef>
#include <vector>

namespace polysparse {

/// a . x <= b
struct LinIneq {
    QVector a;
    Rational b;

    std::size_t dim() const { return a.size(); }
    std::size_t sparsity() const { return polysparse::sparsity(a); }
    bool is_tautology() const { return is_zero(a) && b >= 0; }
    bool is_contradiction() const { return is_zero(a) && b < 0; }
    bool satisfied_by(const QVector& x) const { return dot(a, x) <= b; }
    bool tight_at(const QVector& x) const { return dot(a, x) == b; }

    /// Divides through by |first nonzero coefficient|. No-op on the zero row.
    void normalize();

    bool operator==(const LinIneq&) const = default;
};

/// Lexicographic on (a, b).
bool lex_less(const LinIneq& lhs, const LinIneq& rhs);
bool lex_less(const QVector& lhs, const QVector& rhs);

/**
 * Inequality description {x : Ax <= b}.
 *
 * The empty set has a canonical marker: a single row 0 . x <= -1.
 */
struct HPolytope {
    std::size_t dim = 0;
    std::vector<LinIneq> ineqs;

    HPolytope() = default;
    explicit HPolytope(std::size_t d) : dim(d) {}
    HPolytope(std::size_t d, std::vector<LinIneq> rows);

    static HPolytope empty(std::size_t d);
    /// [lo, hi]^d
    static HPolytope box(std::size_t d, const Rational& lo, const Rational& hi);

    /// True only for the canonical empty marker; use is_feasible() for a semantic test.
    bool is_empty_marker() const;
    bool contains(const QVector& x) const;
    void add(LinIneq row);

    bool operator==(const HPolytope&) const = default;
};

/// Vertex description conv{v_1, ..., v_m}.
struct VPolytope {
    std::size_t dim = 0;
    std::vector<QVector> vertices;

    VPolytope() = default;
    explicit VPolytope(std::size_t d) : dim(d) {}
    VPolytope(std::size_t d, std::vector<QVector> pts);

    bool empty() const { return vertices.empty(); }
    /// Sorts lexicographically and drops duplicates (does not remove interior points).
    void sort_unique();

    bool operator==(const VPolytope&) const = default;
};

/// Normalizes each row, merges rows with equal normals (keeping the tighter bound),
/// drops tautologies and sorts. No LP calls; the set is unchanged.
HPolytope normalize_rows(const HPolytope& p);

} // namespace polysparse
